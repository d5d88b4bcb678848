#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "infomarket/rational.hpp"

namespace infomarket {

/// Probability vector over the states of some decision problem, indexed in
/// the problem's state order.
struct Belief {
    std::vector<Rational> weights;
};

/// Throws std::invalid_argument("invalid prior ...") unless the weights are
/// nonnegative and sum to exactly 1.
void validate_belief(const Belief& b);

/// Index of the single state carrying weight 1, if the belief is degenerate.
std::optional<std::size_t> degenerate_state(const Belief& b);

struct ProblemOptions {
    /// Accept states whose best action is not unique. Constructions that
    /// rely on per-state uniqueness refuse to run on such problems.
    bool allow_degenerate_states = false;
    /// Accept prior weights equal to zero.
    bool allow_zero_prior = false;
};

/// A finite decision problem: states, actions, an exact payoff matrix
/// u(action, state), and a prior over states.
///
/// Construction validates that the prior is a probability vector and that
/// each state has a unique best action (unless explicitly relaxed through
/// ProblemOptions).
class DecisionProblem {
public:
    /// Default-constructed problems are empty placeholders; real instances
    /// come from make(), which validates.
    DecisionProblem() = default;

    static DecisionProblem make(std::vector<std::string> states,
                                std::vector<std::string> actions,
                                std::vector<std::vector<Rational>> payoffs,
                                Belief prior,
                                ProblemOptions options = {});

    const std::vector<std::string>& states() const { return states_; }
    const std::vector<std::string>& actions() const { return actions_; }
    std::size_t num_states() const { return states_.size(); }
    std::size_t num_actions() const { return actions_.size(); }
    const Belief& prior() const { return prior_; }
    const Rational& payoff(std::size_t action, std::size_t state) const {
        return payoffs_[action][state];
    }
    const std::vector<std::vector<Rational>>& payoffs() const { return payoffs_; }

    /// Throws std::invalid_argument("unknown state ...") / ("unknown action ...").
    std::size_t state_index(std::string_view id) const;
    std::size_t action_index(std::string_view id) const;

    /// a*(state): lowest-index maximizer of the state's payoff column.
    std::size_t best_action(std::size_t state) const { return best_action_[state]; }
    const std::vector<std::size_t>& degenerate_states() const { return degenerate_states_; }
    bool has_degenerate_states() const { return !degenerate_states_.empty(); }

    /// State-action matching payoffs: square matrix, zero off the diagonal,
    /// strictly positive on it.
    bool is_diagonal() const { return diagonal_; }

private:
    std::vector<std::string> states_;
    std::vector<std::string> actions_;
    std::vector<std::vector<Rational>> payoffs_;
    Belief prior_;
    std::vector<std::size_t> best_action_;
    std::vector<std::size_t> degenerate_states_;
    bool diagonal_ = false;
};

struct OptimalAction {
    std::size_t action = 0;
    Rational value;
    /// True when at least one other action attains the same expected payoff;
    /// the reported action is then the lowest-index convention.
    bool tie = false;
};

/// Expected-payoff maximizing action at a belief, ties broken toward the
/// lowest action index.
OptimalAction optimal_action(const Belief& belief, const DecisionProblem& problem);

/// Expected payoff when the state is learned before acting.
Rational full_info_payoff(const DecisionProblem& problem);

/// States split by which of the two actions is pointwise weakly better;
/// ties go to the first action. Requires exactly two actions.
struct StatePartition {
    std::vector<std::size_t> prefer_first;
    std::vector<std::size_t> prefer_second;
};
StatePartition state_action_partition(const DecisionProblem& problem);

}  // namespace infomarket
