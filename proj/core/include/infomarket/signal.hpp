#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "infomarket/decision.hpp"
#include "infomarket/interval_set.hpp"

namespace infomarket {

/// One cell of a signal: a label plus, for every state, the subset of [0,1)
/// on which the cell is realized in that state.
struct Message {
    std::string label;
    std::vector<IntervalSet> support;  // one IntervalSet per state

    Rational total_measure() const;
};

/// A signal is a finite partition of states x [0,1): for every state the
/// messages' supports are pairwise disjoint and cover [0,1) exactly. The
/// conditional probability of a message in a state is the measure of its
/// support there; a shared uniform draw on [0,1) makes any two signals over
/// the same states jointly distributed, which is what gives the join its
/// meaning.
struct Signal {
    std::string name;
    std::size_t num_states = 0;
    std::vector<Message> messages;
};

/// Enforces the partition invariant. State names, when supplied, only make
/// error messages friendlier ("state w1 not fully covered").
void validate_signal(const Signal& sig, std::span<const std::string> state_names = {});

Signal trivial_signal(std::size_t num_states, std::string name = "trivial");
Signal fully_revealing_signal(const std::vector<std::string>& state_names,
                              std::string name = "full");
/// Simple signal: each block of states becomes one message with full [0,1)
/// support on its members.
Signal simple_signal(std::string name, const std::vector<std::vector<std::size_t>>& blocks,
                     const std::vector<std::string>& state_names);
/// Uniform q-slice signal: messages [k/q,(k+1)/q) in every state.
Signal grid_signal(std::int64_t slices, std::size_t num_states);

/// Measure of the message's support in `state`.
Rational conditional_probability(const Message& msg, std::size_t state);
/// Prior-weighted total probability of receiving the message.
Rational marginal_probability(const Message& msg, const Belief& prior);
/// Bayes posterior over states after the message. Throws
/// std::invalid_argument("conditioning on null message") when the marginal
/// probability is zero.
Belief posterior(const Message& msg, const Belief& prior);

/// Common refinement {s intersect s'}: the result of observing both signals,
/// correlation included. Cells of measure zero in every state are dropped;
/// labels compose as "s⊗s'".
Signal join(const Signal& a, const Signal& b);

/// Canonical form: drops messages that are null in every state and sorts the
/// rest by their support encoding. Signals equal as partitions up to null
/// sets normalize to the same message list (labels aside).
Signal normalize(const Signal& sig);

/// Equality as partitions, ignoring names and labels.
bool same_partition(const Signal& a, const Signal& b);

/// True iff every message with positive marginal probability pins down the
/// state (degenerate posterior). Zero-prior states never count against it.
bool is_partition_complete(const Signal& sig, const Belief& prior);

/// A signal is simple when each message's support is full [0,1) on a set of
/// states, i.e. the signal is a partition of the state space.
bool is_simple(const Signal& sig);
/// Blocks of a simple signal, in message order. Throws on non-simple input.
std::vector<std::vector<std::size_t>> simple_blocks(const Signal& sig);

}  // namespace infomarket
