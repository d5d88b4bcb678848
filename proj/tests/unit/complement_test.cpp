#include <doctest.h>

#include <stdexcept>

#include "../support/random_instances.hpp"
#include "infomarket/complement.hpp"
#include "infomarket/examples.hpp"
#include "infomarket/value.hpp"

using namespace infomarket;

TEST_CASE("binary complement routes exactly the cells that need switching") {
    const auto& sc = builtin_example("monopolist");
    ComplementResult comp = complement_binary(sc.signal("residential"), sc.problem);
    CHECK(comp.method == ComplementMethod::binary);
    CHECK(same_partition(comp.complement, sc.signal("civil-status")));
    CHECK(comp.u_join == Rational(85));
    CHECK(comp.u_complement == Rational(70));
    CHECK(comp.complement.messages.size() <= 2);

    // the "switch" cell is students-in-houses plus professionals-in-apartments
    const Message& flip = comp.complement.messages.back();
    CHECK(flip.label == "switch");
    CHECK(flip.support[0] == IntervalSet::interval(Rational(0), Rational(91, 300)));
    CHECK(flip.support[1] == IntervalSet::interval(Rational(559, 700), Rational(1)));
}

TEST_CASE("binary complement of a fully revealing signal is trivial") {
    const auto& sc = builtin_example("monopolist");
    ComplementResult comp = complement_binary(sc.signal("full"), sc.problem);
    CHECK(same_partition(comp.complement, trivial_signal(2)));
    CHECK(incremental_value(comp.complement, sc.signal("full"), sc.problem).increment ==
          Rational(0));
}

TEST_CASE("binary complement of the trivial signal reveals the action split") {
    const auto& sc = builtin_example("monopolist");
    const Signal& trivial = sc.signal("trivial");
    ComplementResult comp = complement_binary(trivial, sc.problem);
    // one action region per message: here that is the full state split
    CHECK(same_partition(comp.complement, sc.signal("full")));
    CHECK(incremental_value(comp.complement, trivial, sc.problem).increment ==
          full_info_payoff(sc.problem) - exante_payoff(trivial, sc.problem));

    CHECK_THROWS_WITH_AS(complement_binary(trivial_signal(3), builtin_example("clinical").problem),
                         "binary-action operation", std::invalid_argument);
}

TEST_CASE("diagonal complement reveals mistakes and pools the rest") {
    const auto& sc = builtin_example("clinical");
    const DecisionProblem& p = sc.problem;

    ComplementResult informed = complement_diagonal_simple(sc.signal("informed"), p);
    CHECK(same_partition(informed.complement, sc.signal("recommendation")));
    CHECK(informed.u_join == Rational(10));

    ComplementResult uninformed = complement_diagonal_simple(sc.signal("trivial"), p);
    CHECK(same_partition(uninformed.complement, sc.signal("full")));

    Signal singletons = fully_revealing_signal(p.states());
    ComplementResult nothing_left = complement_diagonal_simple(singletons, p);
    CHECK(same_partition(nothing_left.complement, trivial_signal(3)));

    CHECK_THROWS_AS(complement_diagonal_simple(builtin_example("triangular").signal("complement"),
                                               builtin_example("triangular").problem),
                    std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        complement_diagonal_simple(sc.signal("trivial"), builtin_example("monopolist").problem),
        "non-diagonal payoffs", std::invalid_argument);
}

TEST_CASE("closed-form triangular split point") {
    const auto& sc = builtin_example("triangular");
    CHECK(closed_form_triangular_split(sc.problem) == Rational(2, 3));

    // scaling the payoffs leaves the split alone
    std::vector<std::vector<Rational>> doubled = sc.problem.payoffs();
    for (auto& row : doubled)
        for (auto& v : row) v *= Rational(2);
    DecisionProblem scaled = DecisionProblem::make(sc.problem.states(), sc.problem.actions(),
                                                   doubled, sc.problem.prior());
    CHECK(closed_form_triangular_split(scaled) == Rational(2, 3));

    // another member of the family: u = (1, 3, 6), prior indifference needs
    // mu2 + mu3 = 1/3 and mu3 = 1/6
    DecisionProblem other = DecisionProblem::make(
        {"w1", "w2", "w3"}, {"a1", "a2", "a3"},
        {{Rational(1), Rational(1), Rational(1)},
         {Rational(0), Rational(3), Rational(3)},
         {Rational(0), Rational(0), Rational(6)}},
        Belief{{Rational(2, 3), Rational(1, 6), Rational(1, 6)}});
    Rational split = closed_form_triangular_split(other);
    CHECK(split == Rational(4, 5));
    CHECK(Rational(0) < split);
    CHECK(split < Rational(1));

    CHECK_THROWS_WITH_AS(closed_form_triangular_split(builtin_example("clinical").problem),
                         "parameters outside the triangular family", std::invalid_argument);
    DecisionProblem wrong_prior = DecisionProblem::make(
        sc.problem.states(), sc.problem.actions(), sc.problem.payoffs(),
        Belief{{Rational(1, 3), Rational(1, 3), Rational(1, 3)}});
    CHECK_THROWS_AS(closed_form_triangular_split(wrong_prior), std::invalid_argument);
}

TEST_CASE("oracle recovers the closed-form complement on the triangular instance") {
    const auto& sc = builtin_example("triangular");
    ComplementResult oracle =
        complement_bruteforce(sc.signal("partial"), sc.problem, BruteForceOptions{2, 12, 36});
    CHECK(oracle.u_complement == Rational(4, 3));
    CHECK(same_partition(oracle.complement, sc.signal("complement")));
    REQUIRE(oracle.oracle.has_value());
    CHECK(oracle.oracle->atoms == 36);
}

TEST_CASE("oracle pools everything when the base signal is already complete") {
    const auto& sc = builtin_example("monopolist");
    ComplementResult comp =
        complement_bruteforce(sc.signal("full"), sc.problem, BruteForceOptions{2, 4, 16});
    CHECK(same_partition(comp.complement, trivial_signal(2)));
    CHECK(comp.u_complement == exante_payoff(trivial_signal(2), sc.problem));
    CHECK(comp.u_join == full_info_payoff(sc.problem));
}

TEST_CASE("oracle reports infeasibility and cap overflows") {
    const auto& sc = builtin_example("monopolist");
    // one message cannot complete the trivial signal
    CHECK_THROWS_WITH_AS(complement_bruteforce(sc.signal("trivial"), sc.problem,
                                               BruteForceOptions{1, 2, 16}),
                         "infeasible at this resolution", std::runtime_error);
    CHECK_THROWS_WITH_AS(complement_bruteforce(sc.signal("trivial"), sc.problem,
                                               BruteForceOptions{2, 12, 12}),
                         "instance too large for oracle", std::invalid_argument);
}

namespace {

// Naive oracle: assigns every atom independently instead of walking
// interchangeability classes. Only usable for tiny instances; exists to pin
// down that the class reduction changes nothing.
ComplementResult naive_bruteforce(const Signal& sig, const DecisionProblem& problem,
                                  int max_messages, std::int64_t grid) {
    struct Atom {
        std::size_t state;
        IntervalSet part;
    };
    std::vector<Atom> atoms;
    Signal slices = grid_signal(grid, sig.num_states);
    for (const Message& m : sig.messages)
        for (const Message& g : slices.messages)
            for (std::size_t s = 0; s < sig.num_states; ++s) {
                IntervalSet piece = intersect(m.support[s], g.support[s]);
                if (!piece.is_empty()) atoms.push_back(Atom{s, piece});
            }
    std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) {
        if (a.state != b.state) return a.state < b.state;
        return a.part.parts().front().lo < b.part.parts().front().lo;
    });

    const Rational ubar = full_info_payoff(problem);
    const std::size_t k = std::size_t(max_messages);
    std::vector<int> assignment(atoms.size(), 0);
    std::optional<Rational> best_value;
    std::vector<int> best_assignment;
    Signal best_signal;

    while (true) {
        Signal candidate{"candidate", sig.num_states, {}};
        for (std::size_t label = 0; label < k; ++label)
            candidate.messages.push_back(Message{
                "m" + std::to_string(label + 1), std::vector<IntervalSet>(sig.num_states)});
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            Message& m = candidate.messages[std::size_t(assignment[i])];
            m.support[atoms[i].state] = set_union(m.support[atoms[i].state], atoms[i].part);
        }
        if (exante_payoff(join(sig, candidate), problem) == ubar) {
            Rational value = exante_payoff(candidate, problem);
            if (!best_value || value < *best_value ||
                (value == *best_value && assignment < best_assignment)) {
                best_value = value;
                best_assignment = assignment;
                best_signal = candidate;
            }
        }
        std::size_t pos = atoms.size();
        while (pos > 0 && assignment[pos - 1] == int(k) - 1) assignment[--pos] = 0;
        if (pos == 0) break;
        ++assignment[pos - 1];
    }

    ComplementResult result;
    result.complement = normalize(best_signal);
    result.u_complement = *best_value;
    result.u_join = ubar;
    result.method = ComplementMethod::brute_force;
    return result;
}

}  // namespace

TEST_CASE("class-reduced oracle matches the naive enumeration") {
    testsupport::Rng rng(101);
    for (int round = 0; round < 10; ++round) {
        DecisionProblem p = testsupport::random_problem(rng, 2, 2);
        Signal sig = testsupport::random_signal(rng, 2, 2, 2);
        ComplementResult fast = complement_bruteforce(sig, p, BruteForceOptions{2, 2, 16});
        ComplementResult slow = naive_bruteforce(sig, p, 2, 2);
        CHECK(fast.u_complement == slow.u_complement);
        CHECK(same_partition(fast.complement, slow.complement));
    }
}

TEST_CASE("oracle never beats the binary construction") {
    testsupport::Rng rng(47);
    for (int round = 0; round < 10; ++round) {
        DecisionProblem p = testsupport::random_problem(rng, 2, 2);
        Signal sig = testsupport::random_signal(rng, 2, 3, 8);
        ComplementResult fast = complement_bruteforce(sig, p, BruteForceOptions{2, 8, 16});
        ComplementResult constructed = complement_binary(sig, p);
        CHECK_FALSE(fast.u_complement < constructed.u_complement);
    }
}

TEST_CASE("every construction keeps the join payoff-complete") {
    testsupport::Rng rng(53);
    for (int round = 0; round < 50; ++round) {
        DecisionProblem p = testsupport::random_binary_problem(rng);
        Signal sig = testsupport::random_signal(rng, p.num_states());
        ComplementResult comp = complement_binary(sig, p);
        CHECK(comp.u_join == full_info_payoff(p));
        CHECK(comp.complement.messages.size() <= 2);
    }
    for (int round = 0; round < 20; ++round) {
        std::size_t n = std::size_t(rng.range(2, 4));
        DecisionProblem p = testsupport::random_diagonal_problem(rng, n);
        std::vector<Signal> partitions = enumerate_partitions(p);
        const Signal& part = partitions[rng.below(partitions.size())];
        CHECK(complement_diagonal_simple(part, p).u_join == full_info_payoff(p));
    }
}
