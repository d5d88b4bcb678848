#include "infomarket/decision.hpp"

#include <stdexcept>
#include <unordered_set>

namespace infomarket {

namespace {
const Rational kZero(0);
const Rational kOne(1);
}  // namespace

void validate_belief(const Belief& b) {
    Rational total;
    for (const Rational& w : b.weights) {
        if (w.sign() < 0) throw std::invalid_argument("invalid prior: negative weight");
        total += w;
    }
    if (total != kOne) throw std::invalid_argument("invalid prior: weights sum to " + total.str());
}

std::optional<std::size_t> degenerate_state(const Belief& b) {
    for (std::size_t i = 0; i < b.weights.size(); ++i)
        if (b.weights[i] == kOne) return i;
    return std::nullopt;
}

DecisionProblem DecisionProblem::make(std::vector<std::string> states,
                                      std::vector<std::string> actions,
                                      std::vector<std::vector<Rational>> payoffs,
                                      Belief prior,
                                      ProblemOptions options) {
    if (states.empty()) throw std::invalid_argument("problem needs at least one state");
    if (actions.empty()) throw std::invalid_argument("problem needs at least one action");

    auto check_unique = [](const std::vector<std::string>& ids, const char* what) {
        std::unordered_set<std::string> seen;
        for (const std::string& id : ids)
            if (!seen.insert(id).second)
                throw std::invalid_argument(std::string("duplicate ") + what + " '" + id + "'");
    };
    check_unique(states, "state");
    check_unique(actions, "action");

    if (payoffs.size() != actions.size())
        throw std::invalid_argument("payoff matrix needs one row per action");
    for (const auto& row : payoffs)
        if (row.size() != states.size())
            throw std::invalid_argument("payoff row needs one column per state");

    if (prior.weights.size() != states.size())
        throw std::invalid_argument("invalid prior: needs one weight per state");
    validate_belief(prior);
    if (!options.allow_zero_prior)
        for (std::size_t i = 0; i < prior.weights.size(); ++i)
            if (prior.weights[i].is_zero())
                throw std::invalid_argument("zero prior on state '" + states[i] +
                                            "' not declared");

    DecisionProblem p;
    p.states_ = std::move(states);
    p.actions_ = std::move(actions);
    p.payoffs_ = std::move(payoffs);
    p.prior_ = std::move(prior);

    p.best_action_.resize(p.states_.size());
    for (std::size_t s = 0; s < p.states_.size(); ++s) {
        std::size_t best = 0;
        std::size_t ties = 0;
        for (std::size_t a = 1; a < p.actions_.size(); ++a) {
            if (p.payoffs_[a][s] > p.payoffs_[best][s]) best = a;
        }
        for (std::size_t a = 0; a < p.actions_.size(); ++a)
            if (p.payoffs_[a][s] == p.payoffs_[best][s]) ++ties;
        p.best_action_[s] = best;
        if (ties > 1) {
            if (!options.allow_degenerate_states)
                throw std::invalid_argument("no unique optimal action in state '" +
                                            p.states_[s] + "'");
            p.degenerate_states_.push_back(s);
        }
    }

    p.diagonal_ = p.states_.size() == p.actions_.size();
    for (std::size_t a = 0; p.diagonal_ && a < p.actions_.size(); ++a)
        for (std::size_t s = 0; p.diagonal_ && s < p.states_.size(); ++s) {
            if (a == s ? !(p.payoffs_[a][s] > kZero) : !p.payoffs_[a][s].is_zero())
                p.diagonal_ = false;
        }

    return p;
}

std::size_t DecisionProblem::state_index(std::string_view id) const {
    for (std::size_t i = 0; i < states_.size(); ++i)
        if (states_[i] == id) return i;
    throw std::invalid_argument("unknown state '" + std::string(id) + "'");
}

std::size_t DecisionProblem::action_index(std::string_view id) const {
    for (std::size_t i = 0; i < actions_.size(); ++i)
        if (actions_[i] == id) return i;
    throw std::invalid_argument("unknown action '" + std::string(id) + "'");
}

OptimalAction optimal_action(const Belief& belief, const DecisionProblem& problem) {
    if (belief.weights.size() != problem.num_states())
        throw std::invalid_argument("belief size does not match state count");
    OptimalAction result;
    for (std::size_t a = 0; a < problem.num_actions(); ++a) {
        Rational value;
        for (std::size_t s = 0; s < problem.num_states(); ++s)
            if (!belief.weights[s].is_zero())
                value += belief.weights[s] * problem.payoff(a, s);
        if (a == 0 || value > result.value) {
            result.action = a;
            result.value = value;
            result.tie = false;
        } else if (value == result.value) {
            result.tie = true;
        }
    }
    return result;
}

Rational full_info_payoff(const DecisionProblem& problem) {
    Rational total;
    for (std::size_t s = 0; s < problem.num_states(); ++s) {
        const Rational& w = problem.prior().weights[s];
        if (!w.is_zero()) total += w * problem.payoff(problem.best_action(s), s);
    }
    return total;
}

StatePartition state_action_partition(const DecisionProblem& problem) {
    if (problem.num_actions() != 2) throw std::invalid_argument("binary-action operation");
    StatePartition parts;
    for (std::size_t s = 0; s < problem.num_states(); ++s) {
        if (problem.payoff(0, s) >= problem.payoff(1, s))
            parts.prefer_first.push_back(s);
        else
            parts.prefer_second.push_back(s);
    }
    return parts;
}

}  // namespace infomarket
