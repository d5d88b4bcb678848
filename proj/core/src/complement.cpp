#include "infomarket/complement.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "infomarket/value.hpp"

namespace infomarket {

namespace {

const Rational kZero(0);

void require_clean_problem(const DecisionProblem& problem) {
    if (problem.has_degenerate_states())
        throw std::invalid_argument(
            "construction requires a unique optimal action in every state");
}

ComplementResult finish(Signal complement, const Signal& base, const DecisionProblem& problem,
                        ComplementMethod method) {
    ComplementResult result;
    result.u_complement = exante_payoff(complement, problem);
    result.u_join = exante_payoff(join(base, complement), problem);
    result.method = method;
    result.complement = std::move(complement);
    if (result.u_join != full_info_payoff(problem))
        throw std::logic_error("complement construction failed to reach full information");
    return result;
}

}  // namespace

const char* to_string(ComplementMethod method) {
    switch (method) {
        case ComplementMethod::binary: return "binary";
        case ComplementMethod::diagonal_simple: return "diagonal";
        case ComplementMethod::brute_force: return "bruteforce";
    }
    return "?";
}

ComplementResult complement_binary(const Signal& sig, const DecisionProblem& problem) {
    if (problem.num_actions() != 2) throw std::invalid_argument("binary-action operation");
    require_clean_problem(problem);
    if (sig.num_states != problem.num_states())
        throw std::invalid_argument("signal does not match the problem's states");

    StatePartition split = state_action_partition(problem);
    std::vector<bool> first_is_right(problem.num_states(), false);
    for (std::size_t s : split.prefer_first) first_is_right[s] = true;

    Message keep{"dont-switch", std::vector<IntervalSet>(sig.num_states)};
    Message flip{"switch", std::vector<IntervalSet>(sig.num_states)};
    for (const Message& m : sig.messages) {
        // Cells that are never received only matter in zero-prior states;
        // route them to "dont-switch" for determinism.
        auto act = induced_action(m, problem);
        std::size_t induced = act ? act->action : 0;
        for (std::size_t s = 0; s < sig.num_states; ++s) {
            if (m.support[s].is_empty()) continue;
            bool right = (induced == 0) == first_is_right[s];
            Message& target = right ? keep : flip;
            target.support[s] = set_union(target.support[s], m.support[s]);
        }
    }

    Signal complement{sig.name + "^c", sig.num_states, {}};
    if (flip.total_measure().is_zero()) {
        complement = trivial_signal(sig.num_states, sig.name + "^c");
    } else {
        if (!keep.total_measure().is_zero()) complement.messages.push_back(std::move(keep));
        complement.messages.push_back(std::move(flip));
    }
    return finish(std::move(complement), sig, problem, ComplementMethod::binary);
}

ComplementResult complement_diagonal_simple(const Signal& sig, const DecisionProblem& problem) {
    if (!problem.is_diagonal()) throw std::invalid_argument("non-diagonal payoffs");
    require_clean_problem(problem);
    if (sig.num_states != problem.num_states())
        throw std::invalid_argument("signal does not match the problem's states");
    if (!is_simple(sig)) throw std::invalid_argument("non-simple signal");

    // One state per block where the induced action is the right one.
    std::vector<bool> covered(problem.num_states(), false);
    for (const auto& block : simple_blocks(sig)) {
        std::size_t best = block.front();
        Rational best_value = problem.prior().weights[best] * problem.payoff(best, best);
        for (std::size_t s : block) {
            Rational v = problem.prior().weights[s] * problem.payoff(s, s);
            if (v > best_value) {
                best = s;
                best_value = v;
            }
        }
        covered[best] = true;
    }

    Signal complement{sig.name + "^c", sig.num_states, {}};
    std::vector<std::size_t> pooled;
    for (std::size_t s = 0; s < problem.num_states(); ++s) {
        if (covered[s]) {
            pooled.push_back(s);
            continue;
        }
        Message reveal{"reveal-" + problem.states()[s],
                       std::vector<IntervalSet>(sig.num_states)};
        reveal.support[s] = IntervalSet::full();
        complement.messages.push_back(std::move(reveal));
    }
    Message keep{"dont-change", std::vector<IntervalSet>(sig.num_states)};
    for (std::size_t s : pooled) keep.support[s] = IntervalSet::full();
    complement.messages.push_back(std::move(keep));

    return finish(std::move(complement), sig, problem, ComplementMethod::diagonal_simple);
}

namespace {

struct Atom {
    std::size_t pi_msg;
    std::size_t state;
    IntervalSet part;
    Rational measure;
};

struct AtomClass {
    std::vector<std::size_t> members;  // atom indices in canonical order
};

}  // namespace

ComplementResult complement_bruteforce(const Signal& sig, const DecisionProblem& problem,
                                       const BruteForceOptions& options) {
    if (options.max_messages < 1)
        throw std::invalid_argument("oracle needs at least one message");
    if (options.grid < 1) throw std::invalid_argument("oracle needs a positive grid");
    if (sig.num_states != problem.num_states())
        throw std::invalid_argument("signal does not match the problem's states");

    const Rational ubar = full_info_payoff(problem);
    const std::size_t k = static_cast<std::size_t>(options.max_messages);

    // Atoms: cells of join(sig, grid), split per state.
    std::vector<Atom> atoms;
    Signal grid = grid_signal(options.grid, sig.num_states);
    for (std::size_t mi = 0; mi < sig.messages.size(); ++mi) {
        for (const Message& g : grid.messages) {
            for (std::size_t s = 0; s < sig.num_states; ++s) {
                IntervalSet piece = intersect(sig.messages[mi].support[s], g.support[s]);
                if (!piece.is_empty())
                    atoms.push_back(Atom{mi, s, std::move(piece), Rational()});
            }
        }
    }
    for (Atom& a : atoms) a.measure = a.part.measure();
    if (atoms.size() > options.atom_cap)
        throw std::invalid_argument("instance too large for oracle");

    std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) {
        if (a.state != b.state) return a.state < b.state;
        return a.part.parts().front().lo < b.part.parts().front().lo;
    });

    // Atoms sharing base cell, state, and measure are interchangeable: every
    // payoff and feasibility quantity depends only on how much measure of
    // each class lands on each label.
    std::map<std::tuple<std::size_t, std::size_t, Rational>, std::size_t> class_index;
    std::vector<AtomClass> classes;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        auto key = std::make_tuple(atoms[i].pi_msg, atoms[i].state, atoms[i].measure);
        auto [it, inserted] = class_index.try_emplace(key, classes.size());
        if (inserted) classes.emplace_back();
        classes[it->second].members.push_back(i);
    }

    std::size_t total_candidates = 1;
    for (const AtomClass& c : classes) {
        // compositions of |c| into k parts: C(|c|+k-1, k-1)
        std::size_t n = c.members.size();
        std::size_t ways = 1;
        for (std::size_t i = 1; i < k; ++i) {
            ways = ways * (n + i) / i;
            if (ways > 20'000'000) throw std::invalid_argument("instance too large for oracle");
        }
        if (total_candidates > 20'000'000 / ways)
            throw std::invalid_argument("instance too large for oracle");
        total_candidates *= ways;
    }

    std::vector<std::vector<std::size_t>> counts(classes.size(),
                                                 std::vector<std::size_t>(k, 0));
    std::vector<int> assignment(atoms.size(), 0);
    std::optional<Rational> best_value;
    std::vector<int> best_assignment;
    Signal best_signal;
    std::size_t evaluated = 0;

    auto evaluate = [&]() {
        ++evaluated;
        for (std::size_t c = 0; c < classes.size(); ++c) {
            std::size_t pos = 0;
            for (std::size_t label = 0; label < k; ++label)
                for (std::size_t n = 0; n < counts[c][label]; ++n)
                    assignment[classes[c].members[pos++]] = static_cast<int>(label);
        }
        Signal candidate{"candidate", sig.num_states, {}};
        for (std::size_t label = 0; label < k; ++label) {
            Message m{"m" + std::to_string(label + 1),
                      std::vector<IntervalSet>(sig.num_states)};
            candidate.messages.push_back(std::move(m));
        }
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            Message& m = candidate.messages[static_cast<std::size_t>(assignment[i])];
            m.support[atoms[i].state] = set_union(m.support[atoms[i].state], atoms[i].part);
        }
        if (exante_payoff(join(sig, candidate), problem) != ubar) return;
        Rational value = exante_payoff(candidate, problem);
        if (!best_value || value < *best_value ||
            (value == *best_value && assignment < best_assignment)) {
            best_value = value;
            best_assignment = assignment;
            best_signal = std::move(candidate);
        }
    };

    // Odometer over per-class label compositions.
    auto iterate = [&](auto&& self, std::size_t c) -> void {
        if (c == classes.size()) {
            evaluate();
            return;
        }
        std::size_t n = classes[c].members.size();
        auto fill = [&](auto&& fill_self, std::size_t label, std::size_t remaining) -> void {
            if (label + 1 == k) {
                counts[c][label] = remaining;
                self(self, c + 1);
                return;
            }
            for (std::size_t take = 0; take <= remaining; ++take) {
                counts[c][label] = take;
                fill_self(fill_self, label + 1, remaining - take);
            }
        };
        fill(fill, 0, n);
    };
    iterate(iterate, 0);

    if (!best_value) throw std::runtime_error("infeasible at this resolution");

    Signal complement = normalize(best_signal);
    complement.name = sig.name + "^c";
    ComplementResult result =
        finish(std::move(complement), sig, problem, ComplementMethod::brute_force);
    result.oracle = OracleStats{options.grid, options.max_messages, atoms.size(), evaluated};
    return result;
}

Rational closed_form_triangular_split(const DecisionProblem& problem) {
    const auto outside = [] {
        return std::invalid_argument("parameters outside the triangular family");
    };
    if (problem.num_states() != 3 || problem.num_actions() != 3) throw outside();

    const Rational u1 = problem.payoff(0, 0);
    const Rational u2 = problem.payoff(1, 1);
    const Rational u3 = problem.payoff(2, 2);
    // Row i pays u_i on every state from i on, zero before.
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t s = 0; s < 3; ++s) {
            const Rational expected = s >= a ? problem.payoff(a, a) : kZero;
            if (problem.payoff(a, s) != expected) throw outside();
        }
    if (!(kZero < u1 && u1 < u2 && u2 < u3)) throw outside();

    const auto& mu = problem.prior().weights;
    for (const Rational& w : mu)
        if (!(w > kZero)) throw outside();
    // Prior indifference across all three actions.
    if (u1 != (mu[1] + mu[2]) * u2 || u1 != mu[2] * u3) throw outside();

    return mu[0] * u1 / (mu[2] * (u3 - u1));
}

}  // namespace infomarket
