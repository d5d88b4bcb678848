#include "infomarket/signal.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace infomarket {

namespace {
const Rational kZero(0);
const Rational kOne(1);

std::string state_label(std::span<const std::string> names, std::size_t index) {
    if (index < names.size()) return names[index];
    return "#" + std::to_string(index);
}
}  // namespace

Rational Message::total_measure() const {
    Rational total;
    for (const IntervalSet& s : support) total += s.measure();
    return total;
}

void validate_signal(const Signal& sig, std::span<const std::string> state_names) {
    if (sig.num_states == 0) throw std::invalid_argument("signal needs at least one state");
    std::unordered_set<std::string> labels;
    for (const Message& m : sig.messages) {
        if (m.support.size() != sig.num_states)
            throw std::invalid_argument("message '" + m.label +
                                        "' support does not match state count");
        if (!labels.insert(m.label).second)
            throw std::invalid_argument("duplicate message label '" + m.label + "'");
    }
    for (std::size_t s = 0; s < sig.num_states; ++s) {
        // Disjointness plus total measure one pins the union to all of [0,1).
        std::vector<Interval> parts;
        for (const Message& m : sig.messages)
            for (const Interval& p : m.support[s].parts()) parts.push_back(p);
        IntervalSet combined;
        try {
            combined = IntervalSet::of(std::move(parts));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("messages overlap in state " +
                                        state_label(state_names, s));
        }
        if (combined.measure() != kOne)
            throw std::invalid_argument("state " + state_label(state_names, s) +
                                        " not fully covered");
    }
}

Signal trivial_signal(std::size_t num_states, std::string name) {
    Signal sig{std::move(name), num_states, {}};
    Message all{"all", std::vector<IntervalSet>(num_states, IntervalSet::full())};
    sig.messages.push_back(std::move(all));
    return sig;
}

Signal fully_revealing_signal(const std::vector<std::string>& state_names, std::string name) {
    Signal sig{std::move(name), state_names.size(), {}};
    for (std::size_t s = 0; s < state_names.size(); ++s) {
        Message m{state_names[s], std::vector<IntervalSet>(state_names.size())};
        m.support[s] = IntervalSet::full();
        sig.messages.push_back(std::move(m));
    }
    return sig;
}

Signal simple_signal(std::string name, const std::vector<std::vector<std::size_t>>& blocks,
                     const std::vector<std::string>& state_names) {
    Signal sig{std::move(name), state_names.size(), {}};
    for (const auto& block : blocks) {
        if (block.empty()) throw std::invalid_argument("empty block in simple signal");
        std::string label;
        Message m{"", std::vector<IntervalSet>(state_names.size())};
        for (std::size_t s : block) {
            if (s >= state_names.size()) throw std::invalid_argument("unknown state in block");
            if (!label.empty()) label += '+';
            label += state_names[s];
            m.support[s] = IntervalSet::full();
        }
        m.label = std::move(label);
        sig.messages.push_back(std::move(m));
    }
    validate_signal(sig, state_names);
    return sig;
}

Signal grid_signal(std::int64_t slices, std::size_t num_states) {
    if (slices < 1) throw std::invalid_argument("grid needs at least one slice");
    Signal sig{"grid" + std::to_string(slices), num_states, {}};
    for (std::int64_t k = 0; k < slices; ++k) {
        IntervalSet cell = IntervalSet::interval(Rational(k, slices), Rational(k + 1, slices));
        Message m{"g" + std::to_string(k), std::vector<IntervalSet>(num_states, cell)};
        sig.messages.push_back(std::move(m));
    }
    return sig;
}

Rational conditional_probability(const Message& msg, std::size_t state) {
    if (state >= msg.support.size()) throw std::invalid_argument("unknown state");
    return msg.support[state].measure();
}

Rational marginal_probability(const Message& msg, const Belief& prior) {
    validate_belief(prior);
    if (prior.weights.size() != msg.support.size())
        throw std::invalid_argument("invalid prior: size does not match state count");
    Rational total;
    for (std::size_t s = 0; s < msg.support.size(); ++s)
        if (!prior.weights[s].is_zero()) total += msg.support[s].measure() * prior.weights[s];
    return total;
}

Belief posterior(const Message& msg, const Belief& prior) {
    Rational marginal = marginal_probability(msg, prior);
    if (marginal.is_zero()) throw std::invalid_argument("conditioning on null message");
    Belief post;
    post.weights.resize(msg.support.size());
    for (std::size_t s = 0; s < msg.support.size(); ++s)
        post.weights[s] = msg.support[s].measure() * prior.weights[s] / marginal;
    return post;
}

Signal join(const Signal& a, const Signal& b) {
    if (a.num_states != b.num_states)
        throw std::invalid_argument("mismatched state sets in join");
    Signal out{a.name + "∨" + b.name, a.num_states, {}};
    for (const Message& ma : a.messages) {
        for (const Message& mb : b.messages) {
            Message cell{ma.label + "⊗" + mb.label, {}};
            cell.support.reserve(a.num_states);
            bool nonempty = false;
            for (std::size_t s = 0; s < a.num_states; ++s) {
                cell.support.push_back(intersect(ma.support[s], mb.support[s]));
                nonempty = nonempty || !cell.support.back().is_empty();
            }
            if (nonempty) out.messages.push_back(std::move(cell));
        }
    }
    return out;
}

Signal normalize(const Signal& sig) {
    Signal out{sig.name, sig.num_states, {}};
    for (const Message& m : sig.messages)
        if (!m.total_measure().is_zero()) out.messages.push_back(m);
    std::sort(out.messages.begin(), out.messages.end(),
              [](const Message& x, const Message& y) { return x.support < y.support; });
    return out;
}

bool same_partition(const Signal& a, const Signal& b) {
    if (a.num_states != b.num_states) return false;
    Signal na = normalize(a);
    Signal nb = normalize(b);
    if (na.messages.size() != nb.messages.size()) return false;
    for (std::size_t i = 0; i < na.messages.size(); ++i)
        if (na.messages[i].support != nb.messages[i].support) return false;
    return true;
}

bool is_partition_complete(const Signal& sig, const Belief& prior) {
    for (const Message& m : sig.messages) {
        if (marginal_probability(m, prior).is_zero()) continue;
        if (!degenerate_state(posterior(m, prior))) return false;
    }
    return true;
}

bool is_simple(const Signal& sig) {
    for (const Message& m : sig.messages)
        for (const IntervalSet& s : m.support)
            if (!s.is_empty() && s != IntervalSet::full()) return false;
    return true;
}

std::vector<std::vector<std::size_t>> simple_blocks(const Signal& sig) {
    if (!is_simple(sig)) throw std::invalid_argument("non-simple signal");
    std::vector<std::vector<std::size_t>> blocks;
    for (const Message& m : sig.messages) {
        std::vector<std::size_t> block;
        for (std::size_t s = 0; s < m.support.size(); ++s)
            if (!m.support[s].is_empty()) block.push_back(s);
        if (!block.empty()) blocks.push_back(std::move(block));
    }
    return blocks;
}

}  // namespace infomarket
