#include "infomarket/scenario.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace infomarket {

namespace {

struct Token {
    std::string text;
    int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t') {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        tokens.push_back(Token{std::string(line.substr(start, i - start)), int(start) + 1});
    }
    return tokens;
}

Rational parse_rational(const Token& tok, int line) {
    try {
        return Rational::parse(tok.text);
    } catch (const std::invalid_argument& e) {
        throw ParseError(line, tok.column, e.what());
    }
}

Interval parse_interval(const Token& tok, int line) {
    const std::string& t = tok.text;
    auto comma = t.find(',');
    if (t.size() < 5 || t.front() != '[' || t.back() != ')' || comma == std::string::npos)
        throw ParseError(line, tok.column, "expected interval '[lo,hi)', got '" + t + "'");
    try {
        Rational lo = Rational::parse(std::string_view(t).substr(1, comma - 1));
        Rational hi = Rational::parse(std::string_view(t).substr(comma + 1, t.size() - comma - 2));
        return Interval{lo, hi};
    } catch (const std::invalid_argument& e) {
        throw ParseError(line, tok.column, e.what());
    }
}

struct RawMessage {
    std::string label;
    // Either a list of full-support states or per-state interval clauses.
    std::vector<std::pair<std::string, std::vector<Interval>>> clauses;
    std::vector<std::string> full_states;
    bool shorthand = false;
    int line = 0;
    int column = 0;
};

struct RawSignal {
    std::string name;
    std::vector<RawMessage> messages;
    int line = 0;
};

struct RawTypeEntry {
    std::string id;
    std::string signal;
    Rational weight;
    int line = 0;
};

struct RawMenuItem {
    std::string type;
    std::string signal;
    Rational price;
    int line = 0;
};

struct RawMenu {
    std::string name;
    std::vector<RawMenuItem> items;
    int line = 0;
};

std::string render_intervals(const IntervalSet& set) {
    std::string out;
    for (const Interval& p : set.parts()) {
        if (!out.empty()) out += ' ';
        out += '[' + p.lo.str() + ',' + p.hi.str() + ')';
    }
    return out;
}

}  // namespace

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

const Signal& ScenarioFile::signal(std::string_view name) const {
    for (const Signal& s : signals)
        if (s.name == name) return s;
    throw std::invalid_argument("unknown signal '" + std::string(name) + "'");
}

bool ScenarioFile::has_signal(std::string_view name) const {
    for (const Signal& s : signals)
        if (s.name == name) return true;
    return false;
}

const Menu& ScenarioFile::menu(std::string_view name) const {
    for (const Menu& m : menus)
        if (m.name == name) return m;
    throw std::invalid_argument("unknown menu '" + std::string(name) + "'");
}

ScenarioFile parse_scenario(std::string_view text, const ParseOptions& options) {
    enum class Block { none, problem, signal, types, menu };
    Block block = Block::none;

    bool have_problem = false;
    int problem_line = 0;
    std::vector<std::string> states;
    std::vector<std::string> actions;
    std::vector<Rational> prior;
    std::vector<std::pair<std::string, std::vector<Rational>>> payoff_rows;

    std::vector<RawSignal> raw_signals;
    bool have_types = false;
    std::vector<RawTypeEntry> raw_types;
    int types_line = 0;
    std::vector<RawMenu> raw_menus;

    std::istringstream stream{std::string(text)};
    std::string raw_line;
    int line_no = 0;
    while (std::getline(stream, raw_line)) {
        ++line_no;
        std::string line = raw_line;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::vector<Token> tokens = tokenize(line);
        if (tokens.empty()) continue;
        const Token& head = tokens[0];

        auto expect_count = [&](std::size_t n, const char* usage) {
            if (tokens.size() != n) throw ParseError(line_no, head.column, usage);
        };

        if (head.text == "problem") {
            expect_count(1, "usage: problem");
            if (have_problem) throw ParseError(line_no, head.column, "second problem block");
            have_problem = true;
            problem_line = line_no;
            block = Block::problem;
        } else if (head.text == "signal") {
            expect_count(2, "usage: signal <name>");
            for (const RawSignal& s : raw_signals)
                if (s.name == tokens[1].text)
                    throw ParseError(line_no, tokens[1].column,
                                     "duplicate signal '" + tokens[1].text + "'");
            raw_signals.push_back(RawSignal{tokens[1].text, {}, line_no});
            block = Block::signal;
        } else if (head.text == "types") {
            expect_count(1, "usage: types");
            if (have_types) throw ParseError(line_no, head.column, "second types block");
            have_types = true;
            types_line = line_no;
            block = Block::types;
        } else if (head.text == "menu") {
            expect_count(2, "usage: menu <name>");
            for (const RawMenu& m : raw_menus)
                if (m.name == tokens[1].text)
                    throw ParseError(line_no, tokens[1].column,
                                     "duplicate menu '" + tokens[1].text + "'");
            raw_menus.push_back(RawMenu{tokens[1].text, {}, line_no});
            block = Block::menu;
        } else if (head.text == "states:" || head.text == "actions:" || head.text == "prior:" ||
                   head.text == "payoff") {
            if (block != Block::problem)
                throw ParseError(line_no, head.column,
                                 "'" + head.text + "' belongs in a problem block");
            if (head.text == "states:" || head.text == "actions:") {
                if (tokens.size() < 2)
                    throw ParseError(line_no, head.column, "expected at least one id");
                auto& target = head.text == "states:" ? states : actions;
                if (!target.empty())
                    throw ParseError(line_no, head.column, "duplicate '" + head.text + "' line");
                for (std::size_t i = 1; i < tokens.size(); ++i)
                    target.push_back(tokens[i].text);
            } else if (head.text == "prior:") {
                if (!prior.empty())
                    throw ParseError(line_no, head.column, "duplicate 'prior:' line");
                for (std::size_t i = 1; i < tokens.size(); ++i)
                    prior.push_back(parse_rational(tokens[i], line_no));
            } else {
                if (tokens.size() < 3)
                    throw ParseError(line_no, head.column, "usage: payoff <action>: r...");
                std::string action = tokens[1].text;
                if (action.empty() || action.back() != ':')
                    throw ParseError(line_no, tokens[1].column,
                                     "expected '<action>:' after payoff");
                action.pop_back();
                std::vector<Rational> row;
                for (std::size_t i = 2; i < tokens.size(); ++i)
                    row.push_back(parse_rational(tokens[i], line_no));
                payoff_rows.emplace_back(std::move(action), std::move(row));
            }
        } else if (head.text == "message") {
            if (block != Block::signal)
                throw ParseError(line_no, head.column, "'message' belongs in a signal block");
            if (tokens.size() < 2)
                throw ParseError(line_no, head.column,
                                 "usage: message <label>: <state> <intervals>; ...");
            std::string label = tokens[1].text;
            if (label.empty() || label.back() != ':')
                throw ParseError(line_no, tokens[1].column, "expected '<label>:' after message");
            label.pop_back();
            RawMessage msg;
            msg.label = std::move(label);
            msg.line = line_no;
            msg.column = tokens[1].column;

            if (tokens.size() == 2) {
                // message with empty support everywhere
            } else if (tokens[2].text == "states") {
                msg.shorthand = true;
                if (tokens.size() < 4)
                    throw ParseError(line_no, tokens[2].column, "expected state ids");
                for (std::size_t i = 3; i < tokens.size(); ++i)
                    msg.full_states.push_back(tokens[i].text);
            } else {
                // Clauses separated by ';' tokens are re-split here because the
                // separator binds to the preceding token.
                std::vector<std::vector<Token>> clauses(1);
                for (std::size_t i = 2; i < tokens.size(); ++i) {
                    Token t = tokens[i];
                    bool ends_clause = !t.text.empty() && t.text.back() == ';';
                    if (ends_clause) t.text.pop_back();
                    if (!t.text.empty()) clauses.back().push_back(t);
                    if (ends_clause) clauses.emplace_back();
                }
                if (clauses.back().empty()) clauses.pop_back();
                for (const auto& clause : clauses) {
                    if (clause.size() < 2)
                        throw ParseError(line_no, clause.empty() ? head.column : clause[0].column,
                                         "expected '<state> <intervals>'");
                    std::vector<Interval> parts;
                    for (std::size_t i = 1; i < clause.size(); ++i)
                        parts.push_back(parse_interval(clause[i], line_no));
                    msg.clauses.emplace_back(clause[0].text, std::move(parts));
                }
            }
            raw_signals.back().messages.push_back(std::move(msg));
        } else if (head.text == "type") {
            if (block != Block::types)
                throw ParseError(line_no, head.column, "'type' belongs in a types block");
            // type <id> = <signal> weight <r>
            if (tokens.size() != 6 || tokens[2].text != "=" || tokens[4].text != "weight")
                throw ParseError(line_no, head.column,
                                 "usage: type <id> = <signal> weight <r>");
            raw_types.push_back(RawTypeEntry{tokens[1].text, tokens[3].text,
                                             parse_rational(tokens[5], line_no), line_no});
        } else if (head.text == "item") {
            if (block != Block::menu)
                throw ParseError(line_no, head.column, "'item' belongs in a menu block");
            if (tokens.size() != 6 || tokens[2].text != "=" || tokens[4].text != "price")
                throw ParseError(line_no, head.column,
                                 "usage: item <type> = <signal> price <r>");
            raw_menus.back().items.push_back(RawMenuItem{
                tokens[1].text, tokens[3].text, parse_rational(tokens[5], line_no), line_no});
        } else {
            throw ParseError(line_no, head.column, "unknown directive '" + head.text + "'");
        }
    }

    if (!have_problem) throw ParseError(line_no ? line_no : 1, 1, "missing problem block");

    ScenarioFile scenario;
    {
        std::vector<std::vector<Rational>> matrix(actions.size());
        for (auto& [action, row] : payoff_rows) {
            auto it = std::find(actions.begin(), actions.end(), action);
            if (it == actions.end())
                throw ParseError(problem_line, 1, "unknown action '" + action + "' in payoff");
            matrix[std::size_t(it - actions.begin())] = row;
        }
        try {
            scenario.problem = DecisionProblem::make(
                states, actions, std::move(matrix), Belief{prior},
                ProblemOptions{options.allow_degenerate_states, options.allow_zero_prior});
        } catch (const std::invalid_argument& e) {
            throw ParseError(problem_line, 1, e.what());
        }
    }
    const auto& problem = scenario.problem;

    for (const RawSignal& raw : raw_signals) {
        Signal sig{raw.name, problem.num_states(), {}};
        for (const RawMessage& rm : raw.messages) {
            Message msg{rm.label, std::vector<IntervalSet>(problem.num_states())};
            auto state_at = [&](const std::string& id) {
                try {
                    return problem.state_index(id);
                } catch (const std::invalid_argument& e) {
                    throw ParseError(rm.line, rm.column, e.what());
                }
            };
            if (rm.shorthand) {
                for (const std::string& id : rm.full_states)
                    msg.support[state_at(id)] = IntervalSet::full();
            } else {
                for (const auto& [id, parts] : rm.clauses) {
                    std::size_t s = state_at(id);
                    if (!msg.support[s].is_empty())
                        throw ParseError(rm.line, rm.column,
                                         "duplicate state '" + id + "' in message");
                    try {
                        msg.support[s] = IntervalSet::of(parts);
                    } catch (const std::invalid_argument& e) {
                        throw ParseError(rm.line, rm.column, e.what());
                    }
                }
            }
            sig.messages.push_back(std::move(msg));
        }
        try {
            validate_signal(sig, problem.states());
        } catch (const std::invalid_argument& e) {
            throw ParseError(raw.line, 1, "signal '" + raw.name + "': " + e.what());
        }
        scenario.signals.push_back(std::move(sig));
    }

    if (have_types) {
        TypeSpace space;
        for (const RawTypeEntry& raw : raw_types) {
            if (!scenario.has_signal(raw.signal))
                throw ParseError(raw.line, 1, "unknown signal '" + raw.signal + "'");
            space.types.push_back(TypeSpace::Entry{raw.id, scenario.signal(raw.signal),
                                                   raw.weight});
        }
        try {
            validate_type_space(space, problem);
        } catch (const std::invalid_argument& e) {
            throw ParseError(types_line, 1, e.what());
        }
        scenario.types = std::move(space);
    }

    for (const RawMenu& raw : raw_menus) {
        if (!scenario.types)
            throw ParseError(raw.line, 1, "menu '" + raw.name + "' needs a types block");
        Menu menu;
        menu.name = raw.name;
        for (const RawMenuItem& item : raw.items) {
            if (!scenario.has_signal(item.signal))
                throw ParseError(item.line, 1, "unknown signal '" + item.signal + "'");
            try {
                scenario.types->find(item.type);
            } catch (const std::invalid_argument& e) {
                throw ParseError(item.line, 1, e.what());
            }
            if (menu.has(item.type))
                throw ParseError(item.line, 1, "duplicate item for type '" + item.type + "'");
            menu.items.emplace_back(item.type,
                                    MenuItem{scenario.signal(item.signal), item.price});
        }
        for (const auto& e : scenario.types->types)
            if (!menu.has(e.id))
                throw ParseError(raw.line, 1,
                                 "missing item for type '" + e.id + "' in menu '" + raw.name +
                                     "'");
        scenario.menus.push_back(std::move(menu));
    }

    return scenario;
}

std::string serialize_scenario(const ScenarioFile& scenario) {
    const DecisionProblem& problem = scenario.problem;
    std::string out;
    auto join_ids = [](const std::vector<std::string>& ids) {
        std::string s;
        for (const auto& id : ids) {
            if (!s.empty()) s += ' ';
            s += id;
        }
        return s;
    };

    out += "problem\n";
    out += "  states: " + join_ids(problem.states()) + "\n";
    out += "  actions: " + join_ids(problem.actions()) + "\n";
    out += "  prior:";
    for (const Rational& w : problem.prior().weights) out += ' ' + w.str();
    out += "\n";
    for (std::size_t a = 0; a < problem.num_actions(); ++a) {
        out += "  payoff " + problem.actions()[a] + ":";
        for (std::size_t s = 0; s < problem.num_states(); ++s)
            out += ' ' + problem.payoff(a, s).str();
        out += "\n";
    }

    for (const Signal& sig : scenario.signals) {
        out += "\nsignal " + sig.name + "\n";
        for (const Message& m : sig.messages) {
            bool any = false;
            bool shorthand = true;
            for (const IntervalSet& s : m.support) {
                if (!s.is_empty()) any = true;
                if (!s.is_empty() && s != IntervalSet::full()) shorthand = false;
            }
            out += "  message " + m.label + ":";
            if (!any) {
                // no payload: empty support everywhere
            } else if (shorthand) {
                out += " states";
                for (std::size_t s = 0; s < m.support.size(); ++s)
                    if (!m.support[s].is_empty()) out += ' ' + problem.states()[s];
            } else {
                bool first = true;
                for (std::size_t s = 0; s < m.support.size(); ++s) {
                    if (m.support[s].is_empty()) continue;
                    out += first ? " " : "; ";
                    out += problem.states()[s] + ' ' + render_intervals(m.support[s]);
                    first = false;
                }
            }
            out += "\n";
        }
    }

    if (scenario.types) {
        out += "\ntypes\n";
        for (const auto& e : scenario.types->types)
            out += "  type " + e.id + " = " + e.signal.name + " weight " + e.weight.str() +
                   "\n";
    }

    for (const Menu& menu : scenario.menus) {
        out += "\nmenu " + menu.name + "\n";
        for (const auto& [type, item] : menu.items)
            out += "  item " + type + " = " + item.offered.name + " price " +
                   item.price.str() + "\n";
    }

    return out;
}

}  // namespace infomarket
