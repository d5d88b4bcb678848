#pragma once

#include <optional>
#include <string>

#include "infomarket/decision.hpp"
#include "infomarket/signal.hpp"

namespace infomarket {

/// Worth of adding one signal on top of another.
struct ValueReport {
    std::string base;
    std::string added;
    Rational u_before;   // ex-ante payoff of the base signal
    Rational u_after;    // ex-ante payoff of the join
    Rational increment;  // u_after - u_before, never negative
};

/// Best expected payoff at the posterior induced by the message. Throws on
/// null messages.
Rational interim_payoff(const Message& msg, const DecisionProblem& problem);

/// Probability-weighted sum of interim payoffs over the signal's messages.
Rational exante_payoff(const Signal& sig, const DecisionProblem& problem);

/// Incremental value of `added` for an owner of `base`.
ValueReport incremental_value(const Signal& added, const Signal& base,
                              const DecisionProblem& problem);

/// Ex-ante payoff of a simple signal on a diagonal problem, computed from
/// per-block prior-weighted maxima instead of posteriors. Agrees with
/// exante_payoff on its whole domain; the two routes are kept separate on
/// purpose.
Rational simple_signal_payoff(const Signal& sig, const DecisionProblem& problem);

/// Action the decision maker takes after the message; nullopt for messages
/// that are never received.
std::optional<OptimalAction> induced_action(const Message& msg, const DecisionProblem& problem);

}  // namespace infomarket
