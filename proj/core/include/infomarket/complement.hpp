#pragma once

#include <cstdint>
#include <optional>

#include "infomarket/decision.hpp"
#include "infomarket/signal.hpp"

namespace infomarket {

enum class ComplementMethod { binary, diagonal_simple, brute_force };

const char* to_string(ComplementMethod method);

struct OracleStats {
    std::int64_t grid = 0;
    int max_messages = 0;
    std::size_t atoms = 0;
    std::size_t candidates = 0;
};

/// A cheapest signal whose join with the base signal earns the
/// full-information payoff.
struct ComplementResult {
    Signal complement;
    Rational u_complement;
    Rational u_join;  // equals full_info_payoff(problem) by construction
    ComplementMethod method = ComplementMethod::binary;
    std::optional<OracleStats> oracle;
};

/// Two-message complement for binary-action problems. Each cell of the base
/// signal, state by state, is routed to "dont-switch" when the action the
/// cell induces is the right one in that state and to "switch" otherwise.
/// Collapses to the trivial signal when the base signal already always
/// induces the right action.
ComplementResult complement_binary(const Signal& sig, const DecisionProblem& problem);

/// Complement of a simple signal on a diagonal problem: reveals every state
/// in which the induced action is wrong and pools the rest into a single
/// "dont-change" message.
ComplementResult complement_diagonal_simple(const Signal& sig, const DecisionProblem& problem);

struct BruteForceOptions {
    int max_messages = 2;
    std::int64_t grid = 1;
    /// Upper bound on the number of per-state cells the search may assign.
    std::size_t atom_cap = 12;
};

/// Exhaustive oracle. Cuts the base signal's cells along a uniform grid,
/// splits them per state, and considers every assignment of the resulting
/// atoms to at most `max_messages` labels. Among the assignments whose join
/// with the base signal earns the full-information payoff it returns the one
/// with the smallest ex-ante payoff, ties broken by the lexicographically
/// smallest assignment in atom order (atoms ordered by state, then left
/// endpoint). Payoff-identical assignments are enumerated once through their
/// canonical representative, which leaves the result bit-identical to the
/// naive enumeration. Throws std::runtime_error("infeasible at this
/// resolution") when no assignment qualifies.
ComplementResult complement_bruteforce(const Signal& sig, const DecisionProblem& problem,
                                       const BruteForceOptions& options = {});

/// Interior split point a = mu1*u1 / (mu3*(u3-u1)) for the three-state
/// lower-triangular family with payoffs u1 < u2 < u3, row i paying u_i on
/// states i..n, and a prior that makes all three actions equally good.
Rational closed_form_triangular_split(const DecisionProblem& problem);

}  // namespace infomarket
