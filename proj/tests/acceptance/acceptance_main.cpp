// Acceptance suite: one check per shipped guarantee, each printed as a
// single PASS/FAIL line with its runtime. Exact rational comparisons
// throughout; a criterion also fails if it blows its runtime budget.
//
// Usage: acceptance_tests [criterion-number]

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "../support/random_instances.hpp"
#include "infomarket/complement.hpp"
#include "infomarket/examples.hpp"
#include "infomarket/mechanism.hpp"
#include "infomarket/scenario.hpp"
#include "infomarket/value.hpp"

using namespace infomarket;
using testsupport::Rng;

namespace {

struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect(bool condition, const std::string& what) {
    if (!condition) throw CheckFailure(what);
}

void expect_eq(const Rational& got, const Rational& want, const std::string& what) {
    expect(got == want, what + ": expected " + want.str() + ", got " + got.str());
}

// ---------------------------------------------------------------------------

void criterion_monopolist() {
    const ScenarioFile& sc = builtin_example("monopolist");
    const DecisionProblem& p = sc.problem;
    expect_eq(exante_payoff(sc.signal("trivial"), p), Rational(70), "U(trivial)");
    expect_eq(exante_payoff(sc.signal("residential"), p), Rational(367, 5), "U(residential)");
    expect_eq(full_info_payoff(p), Rational(85), "full-information payoff");

    Menu menu = build_menu_binary(*sc.types, p);
    expect_eq(menu.find("uninformed").price, Rational(15), "price for the uninformed");
    expect_eq(menu.find("residential-owner").price, Rational(58, 5),
              "price for the residential owner");

    AuditReport audit = verify_menu(menu, *sc.types, p);
    expect(audit.pass(), "built menu must pass IC and IR");
    expect(audit.efficient_surplus, "built menu must extract the efficient surplus");

    AuditReport bundled = verify_menu(sc.menu("surplus"), *sc.types, p);
    expect(bundled.pass() && bundled.efficient_surplus, "bundled menu must pass as well");

    expect_eq(
        incremental_value(sc.signal("civil-status"), sc.signal("trivial"), p).increment,
        Rational(0), "uninformed value of the civil-status item");
}

void criterion_clinical() {
    const ScenarioFile& sc = builtin_example("clinical");
    const DecisionProblem& p = sc.problem;
    expect_eq(exante_payoff(sc.signal("trivial"), p), Rational(10, 3), "U(uninformed)");
    expect_eq(exante_payoff(sc.signal("informed"), p), Rational(20, 3), "U(informed)");
    expect_eq(full_info_payoff(p), Rational(10), "full-information payoff");

    Menu menu = build_menu_diagonal(*sc.types, p);
    expect_eq(menu.find("uninformed").price, Rational(20, 3), "price for the uninformed");
    expect_eq(menu.find("informed").price, Rational(10, 3), "price for the informed");

    expect_eq(
        incremental_value(sc.signal("recommendation"), sc.signal("trivial"), p).increment,
        Rational(10, 3), "uninformed value of the informed item");

    AuditReport audit = verify_menu(menu, *sc.types, p);
    expect(audit.pass(), "built menu must pass IC and IR");
    expect(audit.efficient_surplus, "built menu must extract the efficient surplus");
}

void criterion_triangular() {
    const ScenarioFile& sc = builtin_example("triangular");
    const DecisionProblem& p = sc.problem;

    expect_eq(closed_form_triangular_split(p), Rational(2, 3), "closed-form split");

    ComplementResult oracle =
        complement_bruteforce(sc.signal("partial"), p, BruteForceOptions{2, 12, 36});
    expect_eq(oracle.u_complement, Rational(4, 3), "oracle complement value");
    expect(same_partition(oracle.complement, sc.signal("complement")),
           "oracle must recover the closed-form complement");

    Rational v_partial =
        incremental_value(sc.signal("complement"), sc.signal("partial"), p).increment;
    Rational v_trivial =
        incremental_value(sc.signal("complement"), sc.signal("trivial"), p).increment;
    expect_eq(v_partial, Rational(1, 4), "V(complement | partial)");
    expect_eq(v_trivial, Rational(1, 3), "V(complement | uninformed)");
    expect(v_partial < v_trivial, "uninformed must strictly out-value the partial type");

    AuditReport audit = verify_menu(sc.menu("surplus"), *sc.types, p);
    expect(audit.ic_violations.size() == 1, "exactly one IC violation expected");
    expect(audit.ic_violations[0].type == "uninformed" &&
               audit.ic_violations[0].other == "partial",
           "the uninformed type mimics the partial type");
    expect_eq(audit.ic_violations[0].slack, Rational(-1, 12), "IC slack");
    expect(audit.ir_violations.empty(), "no IR violations expected");
}

void criterion_lemma2_dominance() {
    for (int instance = 0; instance < 200; ++instance) {
        Rng rng(900 + std::uint64_t(instance));
        DecisionProblem p = testsupport::random_binary_problem(rng, 2, 4);
        Signal owned = testsupport::random_signal(rng, p.num_states(), 3, 8, "owned");
        ComplementResult comp = complement_binary(owned, p);
        Rational v_base = incremental_value(comp.complement, owned, p).increment;
        for (int probe = 0; probe < 20; ++probe) {
            Signal other = testsupport::random_signal(rng, p.num_states(), 3, 8, "other");
            Rational v_other = incremental_value(comp.complement, other, p).increment;
            expect(v_base >= v_other,
                   "instance " + std::to_string(instance) + " probe " +
                       std::to_string(probe) + ": complement worth " + v_other.str() +
                       " elsewhere but only " + v_base.str() + " at its base");
        }
    }
}

void criterion_binary_menus() {
    for (int instance = 0; instance < 100; ++instance) {
        Rng rng(2200 + std::uint64_t(instance));
        DecisionProblem p = testsupport::random_binary_problem(rng, 2, 4);
        TypeSpace space = testsupport::random_type_space(rng, p, 6);
        Menu menu = build_menu_binary(space, p);
        AuditReport audit = verify_menu(menu, space, p);
        expect(audit.pass(), "instance " + std::to_string(instance) + ": IC/IR violated");
        expect(audit.efficient_surplus,
               "instance " + std::to_string(instance) + ": surplus not efficient");
        Rational expected;
        for (const auto& e : space.types)
            expected += e.weight * (full_info_payoff(p) - exante_payoff(e.signal, p));
        expect_eq(audit.revenue, expected,
                  "instance " + std::to_string(instance) + " revenue");
    }
}

void criterion_diagonal_exhaustive() {
    for (std::size_t n = 3; n <= 4; ++n) {
        for (int instance = 0; instance < 3; ++instance) {
            Rng rng(3300 + 10 * n + std::uint64_t(instance));
            DecisionProblem p = testsupport::random_diagonal_problem(rng, n);
            std::vector<Signal> partitions = enumerate_partitions(p);
            expect(partitions.size() == (n == 3 ? 5u : 15u), "Bell number mismatch");

            for (const Signal& part : partitions)
                expect_eq(simple_signal_payoff(part, p), exante_payoff(part, p),
                          "simple-signal payoff for " + part.name);

            TypeSpace space;
            Rational weight(1, std::int64_t(partitions.size()));
            for (const Signal& part : partitions)
                space.types.push_back({part.name, part, weight});
            AuditReport audit = verify_menu(build_menu_diagonal(space, p), space, p);
            expect(audit.pass(), "diagonal menu violated IC/IR");
            expect(audit.efficient_surplus, "diagonal menu not surplus-extracting");

            for (const Signal& high : partitions) {
                ComplementResult comp = complement_diagonal_simple(high, p);
                Rational v_high = incremental_value(comp.complement, high, p).increment;
                for (const Signal& low : partitions) {
                    if (!(exante_payoff(high, p) > exante_payoff(low, p))) continue;
                    Rational v_low = incremental_value(comp.complement, low, p).increment;
                    expect(v_low <= v_high,
                           "pooled complement of " + high.name + " worth more to " + low.name);
                }
            }
        }
    }
}

void criterion_oracle_minimality() {
    for (int instance = 0; instance < 100; ++instance) {
        Rng rng(4400 + std::uint64_t(instance));
        DecisionProblem p = testsupport::random_problem(rng, 2, 2);
        Signal owned = testsupport::random_signal(rng, 2, 3, 8, "owned");
        ComplementResult constructed = complement_binary(owned, p);
        ComplementResult oracle =
            complement_bruteforce(owned, p, BruteForceOptions{2, 8, 16});
        expect(!(oracle.u_complement < constructed.u_complement),
               "instance " + std::to_string(instance) + ": oracle found " +
                   oracle.u_complement.str() + " below the construction's " +
                   constructed.u_complement.str());
    }
}

void criterion_algebra() {
    for (int round = 0; round < 500; ++round) {
        Rng rng(5500 + std::uint64_t(round));
        DecisionProblem p = testsupport::random_problem(
            rng, std::size_t(rng.range(2, 4)), std::size_t(rng.range(2, 4)));
        Signal a = testsupport::random_signal(rng, p.num_states(), 3, 8, "a");
        Signal b = testsupport::random_signal(rng, p.num_states(), 3, 8, "b");
        Signal c = testsupport::random_signal(rng, p.num_states(), 3, 8, "c");

        expect(same_partition(join(a, b), join(b, a)), "join must commute");
        expect(same_partition(join(join(a, b), c), join(a, join(b, c))),
               "join must associate");
        expect(same_partition(join(a, a), a), "join must be idempotent");
        expect(same_partition(join(a, trivial_signal(p.num_states())), a),
               "trivial signal must be a join identity");

        expect(incremental_value(b, a, p).increment.sign() >= 0,
               "incremental value went negative");
        Rational ujoin = exante_payoff(join(a, b), p);
        expect(ujoin >= exante_payoff(a, p) && ujoin >= exante_payoff(b, p),
               "join payoff fell below a component");

        Rational total;
        for (const Message& m : a.messages) total += marginal_probability(m, p.prior());
        expect_eq(total, Rational(1), "message probabilities");
    }
}

void criterion_prior_invariance() {
    int exercised = 0;
    for (int instance = 0; instance < 50; ++instance) {
        Rng rng(6600 + std::uint64_t(instance));
        DecisionProblem p = testsupport::random_binary_problem(rng, 2, 4);
        Signal owned = testsupport::random_signal(rng, p.num_states(), 3, 8, "owned");
        Signal baseline = normalize(complement_binary(owned, p).complement);

        std::vector<std::size_t> induced;
        for (const Message& m : owned.messages) {
            auto act = induced_action(m, p);
            induced.push_back(act ? act->action : 0);
        }

        int accepted = 0;
        for (int attempt = 0; attempt < 40 && accepted < 5; ++attempt) {
            Belief shifted = testsupport::perturbed_prior(rng, p.prior(), 100);
            DecisionProblem moved =
                DecisionProblem::make(p.states(), p.actions(), p.payoffs(), shifted);
            bool preserved = true;
            for (std::size_t i = 0; i < owned.messages.size(); ++i) {
                auto act = induced_action(owned.messages[i], moved);
                preserved = preserved && (act ? act->action : 0) == induced[i];
            }
            if (!preserved) continue;
            ++accepted;
            Signal re = normalize(complement_binary(owned, moved).complement);
            expect(same_partition(re, baseline),
                   "instance " + std::to_string(instance) +
                       ": complement changed under a action-preserving prior shift");
        }
        if (accepted > 0) ++exercised;
    }
    expect(exercised >= 45, "too few instances admitted action-preserving perturbations (" +
                                std::to_string(exercised) + "/50)");
}

void criterion_io() {
    for (const std::string& name : builtin_example_names()) {
        std::string path = std::string(INFOMARKET_SCENARIO_DIR) + "/" + name + ".scn";
        std::ifstream in(path);
        expect(bool(in), "cannot open " + path);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        std::string file_text = buffer.str();
        expect(file_text == builtin_example_text(name),
               name + ".scn differs from the canonical serialization");
        expect(serialize_scenario(parse_scenario(file_text)) == file_text,
               name + ".scn does not round-trip byte-identically");
    }

    std::string command = std::string(INFOMARKET_CLI_PATH) + " examples --verify > /dev/null";
    int status = std::system(command.c_str());
    expect(status == 0, "'examples --verify' exited with status " + std::to_string(status));
}

struct Criterion {
    int id;
    std::string title;
    double seconds_budget;
    std::function<void()> run;
};

}  // namespace

int main(int argc, char** argv) {
    std::vector<Criterion> criteria = {
        {1, "monopolist example reproduces exactly", 1.0, criterion_monopolist},
        {2, "clinical example reproduces exactly", 1.0, criterion_clinical},
        {3, "triangular counterexample and oracle", 30.0, criterion_triangular},
        {4, "complement dominance on 200 random binary instances", 60.0,
         criterion_lemma2_dominance},
        {5, "binary menus extract the surplus on 100 random type spaces", 60.0,
         criterion_binary_menus},
        {6, "diagonal payoffs: exhaustive partition suites", 60.0,
         criterion_diagonal_exhaustive},
        {7, "oracle never undercuts the binary construction", 60.0,
         criterion_oracle_minimality},
        {8, "signal algebra laws over 500 random cases", 60.0, criterion_algebra},
        {9, "binary complement ignores action-preserving prior shifts", 60.0,
         criterion_prior_invariance},
        {10, "scenario files and examples --verify", 30.0, criterion_io},
    };

    int only = argc > 1 ? std::atoi(argv[1]) : 0;
    int failures = 0;
    for (const Criterion& criterion : criteria) {
        if (only != 0 && criterion.id != only) continue;
        auto start = std::chrono::steady_clock::now();
        std::string failure;
        try {
            criterion.run();
        } catch (const std::exception& e) {
            failure = e.what();
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (failure.empty() && elapsed > criterion.seconds_budget)
            failure = "exceeded runtime budget (" + std::to_string(elapsed) + "s of " +
                      std::to_string(criterion.seconds_budget) + "s)";
        char line[512];
        std::snprintf(line, sizeof(line), "[%s] criterion %2d: %s (%.3fs)",
                      failure.empty() ? "PASS" : "FAIL", criterion.id,
                      criterion.title.c_str(), elapsed);
        std::cout << line << "\n";
        if (!failure.empty()) {
            std::cout << "       " << failure << "\n";
            ++failures;
        }
    }
    return failures == 0 ? 0 : 1;
}
