#include "infomarket/report.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace infomarket {

Format parse_format(std::string_view name) {
    if (name == "text") return Format::text;
    if (name == "csv") return Format::csv;
    if (name == "json-like") return Format::json_like;
    throw std::invalid_argument("unknown format '" + std::string(name) +
                                "' (expected text, csv, or json-like)");
}

Json rational_json(const Rational& value) {
    Json j = Json::object();
    j["exact"] = value.str();
    j["decimal"] = to_decimal(value);
    return j;
}

bool is_rational_json(const Json& value) {
    return value.is_object() && value.size() == 2 && value.contains("exact") &&
           value.contains("decimal") && value["exact"].is_string() &&
           value["decimal"].is_string();
}

Json signal_json(const Signal& sig, const DecisionProblem& problem) {
    Json j = Json::object();
    j["name"] = sig.name;
    Json messages = Json::array();
    for (const Message& m : sig.messages) {
        Json mj = Json::object();
        mj["label"] = m.label;
        Json support = Json::object();
        for (std::size_t s = 0; s < m.support.size(); ++s) {
            if (m.support[s].is_empty()) continue;
            std::string rendered;
            for (const Interval& p : m.support[s].parts()) {
                if (!rendered.empty()) rendered += ' ';
                rendered += '[' + p.lo.str() + ',' + p.hi.str() + ')';
            }
            support[problem.states()[s]] = rendered;
        }
        mj["support"] = std::move(support);
        messages.push_back(std::move(mj));
    }
    j["messages"] = std::move(messages);
    return j;
}

Json value_report_json(const ValueReport& report) {
    Json j = Json::object();
    j["base"] = report.base;
    j["added"] = report.added;
    j["u_before"] = rational_json(report.u_before);
    j["u_after"] = rational_json(report.u_after);
    j["increment"] = rational_json(report.increment);
    return j;
}

Json complement_json(const ComplementResult& result, const DecisionProblem& problem) {
    Json j = Json::object();
    j["method"] = to_string(result.method);
    j["u_complement"] = rational_json(result.u_complement);
    j["u_join"] = rational_json(result.u_join);
    j["full_info_payoff"] = rational_json(full_info_payoff(problem));
    if (result.oracle) {
        Json oracle = Json::object();
        oracle["grid"] = result.oracle->grid;
        oracle["max_messages"] = result.oracle->max_messages;
        oracle["atoms"] = result.oracle->atoms;
        oracle["candidates"] = result.oracle->candidates;
        j["oracle"] = std::move(oracle);
    }
    j["complement"] = signal_json(result.complement, problem);
    return j;
}

Json audit_json(const AuditReport& report) {
    Json j = Json::object();
    j["pass"] = report.pass();
    j["revenue"] = rational_json(report.revenue);
    j["efficient_surplus"] = report.efficient_surplus;
    Json types = Json::array();
    for (const auto& row : report.types) {
        Json r = Json::object();
        r["type"] = row.type;
        r["weight"] = rational_json(row.weight);
        r["u_type"] = rational_json(row.u_type);
        r["u_with_item"] = rational_json(row.u_with_item);
        r["value_own"] = rational_json(row.value_own);
        r["price"] = rational_json(row.price);
        r["net"] = rational_json(row.net);
        types.push_back(std::move(r));
    }
    j["types"] = std::move(types);
    Json ic = Json::array();
    for (const auto& v : report.ic_violations) {
        Json r = Json::object();
        r["type"] = v.type;
        r["mimics"] = v.other;
        r["slack"] = rational_json(v.slack);
        ic.push_back(std::move(r));
    }
    j["ic_violations"] = std::move(ic);
    Json ir = Json::array();
    for (const auto& v : report.ir_violations) {
        Json r = Json::object();
        r["type"] = v.type;
        r["slack"] = rational_json(v.slack);
        ir.push_back(std::move(r));
    }
    j["ir_violations"] = std::move(ir);
    Json slacks = Json::array();
    for (const auto& s : report.ic_all) {
        Json r = Json::object();
        r["type"] = s.type;
        r["mimics"] = s.other;
        r["slack"] = rational_json(s.slack);
        slacks.push_back(std::move(r));
    }
    j["ic_slacks"] = std::move(slacks);
    return j;
}

namespace {

std::string scalar_text(const Json& v) {
    if (is_rational_json(v)) {
        std::string exact = v["exact"].get<std::string>();
        std::string decimal = v["decimal"].get<std::string>();
        if (exact == decimal) return exact;
        return exact + " (" + decimal + ")";
    }
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

bool is_scalar(const Json& v) { return !v.is_structured() || is_rational_json(v); }

// Arrays of uniform flat objects print as aligned tables.
bool is_table(const Json& v) {
    if (!v.is_array() || v.empty()) return false;
    const Json* first = nullptr;
    for (const Json& row : v) {
        if (!row.is_object() || is_rational_json(row)) return false;
        for (const auto& [key, value] : row.items())
            if (!is_scalar(value)) return false;
        if (!first)
            first = &row;
        else {
            if (row.size() != first->size()) return false;
            auto it = first->items().begin();
            for (const auto& [key, value] : row.items()) {
                if (key != it.key()) return false;
                ++it;
            }
        }
    }
    return true;
}

void render_text(const Json& v, std::ostringstream& out, int indent) {
    const std::string pad(std::size_t(indent) * 2, ' ');
    if (v.is_object()) {
        for (const auto& [key, value] : v.items()) {
            if (is_scalar(value)) {
                out << pad << key << ": " << scalar_text(value) << "\n";
            } else if (value.is_array() && value.empty()) {
                out << pad << key << ": (none)\n";
            } else if (is_table(value)) {
                out << pad << key << ":\n";
                std::vector<std::string> headers;
                std::vector<std::size_t> widths;
                for (const auto& [key2, cell] : value.front().items()) {
                    headers.push_back(key2);
                    widths.push_back(key2.size());
                }
                std::vector<std::vector<std::string>> cells;
                for (const Json& row : value) {
                    std::vector<std::string> line;
                    std::size_t c = 0;
                    for (const auto& [key2, cell] : row.items()) {
                        line.push_back(scalar_text(cell));
                        widths[c] = std::max(widths[c], line.back().size());
                        ++c;
                    }
                    cells.push_back(std::move(line));
                }
                auto emit_row = [&](const std::vector<std::string>& line) {
                    out << pad << "  ";
                    for (std::size_t c = 0; c < line.size(); ++c) {
                        out << line[c];
                        if (c + 1 < line.size())
                            out << std::string(widths[c] - line[c].size() + 2, ' ');
                    }
                    out << "\n";
                };
                emit_row(headers);
                for (const auto& line : cells) emit_row(line);
            } else {
                out << pad << key << ":\n";
                render_text(value, out, indent + 1);
            }
        }
    } else if (v.is_array()) {
        int index = 0;
        for (const Json& item : v) {
            if (is_scalar(item)) {
                out << pad << "- " << scalar_text(item) << "\n";
            } else {
                out << pad << "- [" << index << "]\n";
                render_text(item, out, indent + 1);
            }
            ++index;
        }
    } else {
        out << pad << scalar_text(v) << "\n";
    }
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

void render_csv(const Json& v, const std::string& path, std::ostringstream& out) {
    if (is_rational_json(v)) {
        out << csv_quote(path) << ',' << csv_quote(v["exact"].get<std::string>()) << ','
            << csv_quote(v["decimal"].get<std::string>()) << "\n";
        return;
    }
    if (v.is_object()) {
        for (const auto& [key, value] : v.items())
            render_csv(value, path.empty() ? key : path + "." + key, out);
        return;
    }
    if (v.is_array()) {
        int index = 0;
        for (const Json& item : v) {
            render_csv(item, path + "[" + std::to_string(index) + "]", out);
            ++index;
        }
        return;
    }
    std::string value = v.is_string() ? v.get<std::string>() : v.dump();
    out << csv_quote(path) << ',' << csv_quote(value) << ",\n";
}

}  // namespace

std::string render_report(const Json& document, Format format) {
    std::ostringstream out;
    switch (format) {
        case Format::text:
            render_text(document, out, 0);
            break;
        case Format::csv:
            out << "key,value,decimal\n";
            render_csv(document, "", out);
            break;
        case Format::json_like:
            out << document.dump(2) << "\n";
            break;
    }
    return out.str();
}

}  // namespace infomarket
