#include "infomarket/value.hpp"

#include <stdexcept>

namespace infomarket {

Rational interim_payoff(const Message& msg, const DecisionProblem& problem) {
    return optimal_action(posterior(msg, problem.prior()), problem).value;
}

Rational exante_payoff(const Signal& sig, const DecisionProblem& problem) {
    if (sig.num_states != problem.num_states())
        throw std::invalid_argument("signal does not match the problem's states");
    Rational total;
    for (const Message& m : sig.messages) {
        Rational p = marginal_probability(m, problem.prior());
        if (p.is_zero()) continue;
        total += p * interim_payoff(m, problem);
    }
    return total;
}

ValueReport incremental_value(const Signal& added, const Signal& base,
                              const DecisionProblem& problem) {
    ValueReport report;
    report.base = base.name;
    report.added = added.name;
    report.u_before = exante_payoff(base, problem);
    report.u_after = exante_payoff(join(base, added), problem);
    report.increment = report.u_after - report.u_before;
    return report;
}

Rational simple_signal_payoff(const Signal& sig, const DecisionProblem& problem) {
    if (!problem.is_diagonal()) throw std::invalid_argument("non-diagonal payoffs");
    if (sig.num_states != problem.num_states())
        throw std::invalid_argument("signal does not match the problem's states");
    if (!is_simple(sig)) throw std::invalid_argument("non-simple signal");
    Rational total;
    for (const auto& block : simple_blocks(sig)) {
        // Within a block the decision maker matches the action of the state
        // with the largest prior-weighted payoff.
        Rational best;
        bool first = true;
        for (std::size_t s : block) {
            Rational v = problem.prior().weights[s] * problem.payoff(s, s);
            if (first || v > best) {
                best = v;
                first = false;
            }
        }
        total += best;
    }
    return total;
}

std::optional<OptimalAction> induced_action(const Message& msg, const DecisionProblem& problem) {
    if (marginal_probability(msg, problem.prior()).is_zero()) return std::nullopt;
    return optimal_action(posterior(msg, problem.prior()), problem);
}

}  // namespace infomarket
