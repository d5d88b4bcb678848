// Command-line front end: evaluates signals, joins, incremental values,
// complements, menus, and audits over scenario files or the bundled examples.
//
// Exit codes: 0 success, 1 verification failure (IC/IR violations found or an
// infeasible search), 2 usage or parse errors.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "infomarket/complement.hpp"
#include "infomarket/examples.hpp"
#include "infomarket/mechanism.hpp"
#include "infomarket/report.hpp"
#include "infomarket/scenario.hpp"
#include "infomarket/value.hpp"

namespace {

using namespace infomarket;

struct GlobalOptions {
    std::string scenario;
    std::string format = "text";
    long long seed = 0;  // reserved for randomized property commands
    std::string tie_break = "lowest-index";
    bool allow_degenerate = false;
    bool allow_zero_prior = false;
};

ScenarioFile load_scenario(const GlobalOptions& global) {
    if (global.scenario.empty())
        throw std::invalid_argument("this command needs --scenario FILE (or a built-in name)");
    if (std::filesystem::exists(global.scenario)) {
        std::ifstream in(global.scenario);
        if (!in) throw std::invalid_argument("cannot read '" + global.scenario + "'");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return parse_scenario(buffer.str(),
                              ParseOptions{global.allow_degenerate, global.allow_zero_prior});
    }
    if (is_builtin_example(global.scenario)) return builtin_example(global.scenario);
    throw std::invalid_argument("scenario '" + global.scenario +
                                "' is neither a file nor a built-in example");
}

void print(const Json& doc, const GlobalOptions& global) {
    std::cout << render_report(doc, parse_format(global.format));
}

int cmd_eval(const GlobalOptions& global, const std::string& signal_name) {
    ScenarioFile sc = load_scenario(global);
    const Signal& sig = sc.signal(signal_name);
    const DecisionProblem& p = sc.problem;

    Json doc = Json::object();
    doc["command"] = "eval";
    doc["signal"] = sig.name;
    doc["exante_payoff"] = rational_json(exante_payoff(sig, p));
    doc["full_info_payoff"] = rational_json(full_info_payoff(p));
    Json rows = Json::array();
    for (const Message& m : sig.messages) {
        Json row = Json::object();
        row["message"] = m.label;
        Rational prob = marginal_probability(m, p.prior());
        row["probability"] = rational_json(prob);
        if (!prob.is_zero()) {
            auto action = induced_action(m, p);
            row["action"] = p.actions()[action->action];
            row["tie_break_applied"] = action->tie;
            row["interim_payoff"] = rational_json(action->value);
            Json post = Json::object();
            Belief b = posterior(m, p.prior());
            for (std::size_t s = 0; s < p.num_states(); ++s)
                post[p.states()[s]] = rational_json(b.weights[s]);
            row["posterior"] = std::move(post);
        }
        rows.push_back(std::move(row));
    }
    doc["messages"] = std::move(rows);
    print(doc, global);
    return 0;
}

int cmd_join(const GlobalOptions& global, const std::string& a, const std::string& b) {
    ScenarioFile sc = load_scenario(global);
    Signal joined = normalize(join(sc.signal(a), sc.signal(b)));
    Json doc = Json::object();
    doc["command"] = "join";
    doc["signals"] = Json::array({a, b});
    doc["exante_payoff"] = rational_json(exante_payoff(joined, sc.problem));
    doc["partition_complete"] = is_partition_complete(joined, sc.problem.prior());
    doc["join"] = signal_json(joined, sc.problem);
    print(doc, global);
    return 0;
}

int cmd_value(const GlobalOptions& global, const std::string& added,
              const std::string& given) {
    ScenarioFile sc = load_scenario(global);
    Signal base =
        given.empty() ? trivial_signal(sc.problem.num_states()) : sc.signal(given);
    ValueReport report = incremental_value(sc.signal(added), base, sc.problem);
    Json doc = Json::object();
    doc["command"] = "value";
    doc["report"] = value_report_json(report);
    print(doc, global);
    return 0;
}

int cmd_complement(const GlobalOptions& global, const std::string& signal_name,
                   const std::string& method, int max_messages, long long grid,
                   std::size_t atom_cap) {
    ScenarioFile sc = load_scenario(global);
    const Signal& sig = sc.signal(signal_name);
    ComplementResult result = [&] {
        if (method == "binary") return complement_binary(sig, sc.problem);
        if (method == "diagonal") return complement_diagonal_simple(sig, sc.problem);
        if (method == "bruteforce")
            return complement_bruteforce(
                sig, sc.problem, BruteForceOptions{max_messages, grid, atom_cap});
        throw std::invalid_argument("unknown method '" + method +
                                    "' (expected binary, diagonal, or bruteforce)");
    }();
    Json doc = Json::object();
    doc["command"] = "complement";
    doc["signal"] = sig.name;
    doc["u_base"] = rational_json(exante_payoff(sig, sc.problem));
    Json body = complement_json(result, sc.problem);
    for (auto& [key, value] : body.items()) doc[key] = value;
    doc["increment_for_base"] = rational_json(result.u_join - exante_payoff(sig, sc.problem));
    print(doc, global);
    return 0;
}

int cmd_menu(const GlobalOptions& global, const std::string& method) {
    ScenarioFile sc = load_scenario(global);
    if (!sc.types)
        throw std::invalid_argument("scenario has no types block to build a menu for");
    Menu menu = method == "diagonal" ? build_menu_diagonal(*sc.types, sc.problem)
                                     : build_menu_binary(*sc.types, sc.problem);
    AuditReport audit = verify_menu(menu, *sc.types, sc.problem);

    Json doc = Json::object();
    doc["command"] = "menu";
    doc["method"] = method;
    Json items = Json::array();
    for (const auto& [type, item] : menu.items) {
        Json row = Json::object();
        row["type"] = type;
        row["price"] = rational_json(item.price);
        row["offered"] = signal_json(item.offered, sc.problem);
        items.push_back(std::move(row));
    }
    doc["items"] = std::move(items);
    doc["audit"] = audit_json(audit);
    print(doc, global);
    return audit.pass() ? 0 : 1;
}

int cmd_verify(const GlobalOptions& global, const std::string& menu_name) {
    ScenarioFile sc = load_scenario(global);
    if (!sc.types)
        throw std::invalid_argument("scenario has no types block to verify against");
    AuditReport audit = verify_menu(sc.menu(menu_name), *sc.types, sc.problem);
    Json doc = Json::object();
    doc["command"] = "verify";
    doc["menu"] = menu_name;
    doc["audit"] = audit_json(audit);
    print(doc, global);
    return audit.pass() ? 0 : 1;
}

int cmd_partitions(const GlobalOptions& global, std::size_t max_states) {
    ScenarioFile sc = load_scenario(global);
    std::vector<Signal> partitions = enumerate_partitions(sc.problem, max_states);
    Json doc = Json::object();
    doc["command"] = "partitions";
    doc["count"] = partitions.size();
    Json rows = Json::array();
    for (const Signal& sig : partitions) {
        Json row = Json::object();
        row["name"] = sig.name;
        std::string blocks;
        for (const Message& m : sig.messages) {
            if (!blocks.empty()) blocks += " | ";
            blocks += m.label;
        }
        row["blocks"] = blocks;
        row["exante_payoff"] = rational_json(exante_payoff(sig, sc.problem));
        rows.push_back(std::move(row));
    }
    doc["partitions"] = std::move(rows);
    print(doc, global);
    return 0;
}

int cmd_examples(const GlobalOptions& global, const std::string& name, bool verify) {
    if (verify) {
        std::vector<ExampleCheck> checks = verify_builtin_examples();
        Json rows = Json::array();
        bool all_pass = true;
        for (const ExampleCheck& c : checks) {
            Json row = Json::object();
            row["status"] = c.pass ? "PASS" : "FAIL";
            row["check"] = c.label;
            row["detail"] = c.detail;
            rows.push_back(std::move(row));
            all_pass = all_pass && c.pass;
        }
        Json doc = Json::object();
        doc["command"] = "examples --verify";
        doc["checks"] = std::move(rows);
        doc["result"] = all_pass ? "PASS" : "FAIL";
        print(doc, global);
        return all_pass ? 0 : 1;
    }
    if (!name.empty()) {
        Json doc = builtin_example_report(name);
        print(doc, global);
        return 0;
    }
    Json doc = Json::object();
    doc["command"] = "examples";
    Json rows = Json::array();
    for (const std::string& n : builtin_example_names()) {
        Json row = Json::object();
        row["name"] = n;
        row["summary"] = builtin_example_summary(n);
        rows.push_back(std::move(row));
    }
    doc["examples"] = std::move(rows);
    print(doc, global);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact market for supplemental information"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions global;
    app.add_option("--scenario", global.scenario,
                   "scenario file path, or a built-in name (monopolist, clinical, triangular)");
    app.add_option("--format", global.format, "output format: text, csv, json-like")
        ->check(CLI::IsMember({"text", "csv", "json-like"}));
    app.add_option("--seed", global.seed, "seed for randomized property commands (reserved)");
    app.add_option("--tie-break", global.tie_break, "tie-break rule (only lowest-index)")
        ->check(CLI::IsMember({"lowest-index"}));
    app.add_flag("--allow-degenerate", global.allow_degenerate,
                 "accept states without a unique best action");
    app.add_flag("--allow-zero-prior", global.allow_zero_prior,
                 "accept prior weights equal to zero");

    std::string eval_signal;
    CLI::App* eval = app.add_subcommand("eval", "ex-ante payoff of a signal");
    eval->add_option("--signal", eval_signal, "signal name")->required();

    std::string join_a, join_b;
    CLI::App* join_cmd = app.add_subcommand("join", "common refinement of two signals");
    join_cmd->add_option("first", join_a, "first signal name")->required();
    join_cmd->add_option("second", join_b, "second signal name")->required();

    std::string value_signal, value_given;
    CLI::App* value = app.add_subcommand("value", "incremental value of a signal");
    value->add_option("--signal", value_signal, "signal being added")->required();
    value->add_option("--given", value_given, "signal already owned (default: trivial)");

    std::string comp_signal, comp_method = "binary";
    int comp_max_messages = 2;
    long long comp_grid = 1;
    std::size_t comp_atom_cap = 12;
    CLI::App* comp = app.add_subcommand("complement", "minimal complementary signal");
    comp->add_option("--signal", comp_signal, "base signal name")->required();
    comp->add_option("--method", comp_method, "binary, diagonal, or bruteforce")
        ->check(CLI::IsMember({"binary", "diagonal", "bruteforce"}));
    comp->add_option("--max-messages", comp_max_messages, "bruteforce: message budget K");
    comp->add_option("--grid", comp_grid, "bruteforce: grid denominator q");
    comp->add_option("--atom-cap", comp_atom_cap, "bruteforce: atom count cap");

    std::string menu_method = "binary";
    CLI::App* menu = app.add_subcommand("menu", "build the surplus-extraction menu");
    menu->add_option("--method", menu_method, "binary or diagonal")
        ->check(CLI::IsMember({"binary", "diagonal"}));

    std::string verify_menu_name;
    CLI::App* verify = app.add_subcommand("verify", "audit a menu for IC and IR");
    verify->add_option("--menu", verify_menu_name, "menu name")->required();

    std::size_t partitions_cap = 6;
    CLI::App* partitions = app.add_subcommand("partitions", "all state-space partitions");
    partitions->add_option("--max-states", partitions_cap, "largest allowed state count");

    std::string examples_name;
    bool examples_verify = false;
    CLI::App* examples = app.add_subcommand("examples", "bundled worked examples");
    examples->add_option("--name", examples_name, "monopolist, clinical, or triangular");
    examples->add_flag("--verify", examples_verify, "recompute and check all pinned values");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(eval)) return cmd_eval(global, eval_signal);
        if (app.got_subcommand(join_cmd)) return cmd_join(global, join_a, join_b);
        if (app.got_subcommand(value)) return cmd_value(global, value_signal, value_given);
        if (app.got_subcommand(comp))
            return cmd_complement(global, comp_signal, comp_method, comp_max_messages,
                                  comp_grid, comp_atom_cap);
        if (app.got_subcommand(menu)) return cmd_menu(global, menu_method);
        if (app.got_subcommand(verify)) return cmd_verify(global, verify_menu_name);
        if (app.got_subcommand(partitions)) return cmd_partitions(global, partitions_cap);
        if (app.got_subcommand(examples))
            return cmd_examples(global, examples_name, examples_verify);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
