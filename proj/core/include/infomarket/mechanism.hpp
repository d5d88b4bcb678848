#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "infomarket/complement.hpp"
#include "infomarket/decision.hpp"
#include "infomarket/signal.hpp"

namespace infomarket {

/// Finite set of buyer types. A type is the signal the buyer already owns;
/// weights give the seller's belief over types.
struct TypeSpace {
    struct Entry {
        std::string id;
        Signal signal;
        Rational weight;
    };
    std::vector<Entry> types;

    const Entry& find(std::string_view id) const;
};

/// Checks id uniqueness and that weights are nonnegative and sum to 1.
void validate_type_space(const TypeSpace& space, const DecisionProblem& problem);

struct MenuItem {
    Signal offered;
    Rational price;
};

/// One signal-price item per type.
struct Menu {
    std::string name;
    std::vector<std::pair<std::string, MenuItem>> items;

    const MenuItem& find(std::string_view type_id) const;
    bool has(std::string_view type_id) const;
};

/// Exact audit of a menu against a type space: incentive compatibility,
/// participation, revenue, and whether the menu extracts the efficient
/// surplus (every type reaches the full-information payoff and pays exactly
/// its willingness to pay).
struct AuditReport {
    struct TypeRow {
        std::string type;
        Rational weight;
        Rational u_type;      // ex-ante payoff of the owned signal
        Rational u_with_item; // ex-ante payoff of owned signal joined with the item
        Rational value_own;   // incremental value of the item for this type
        Rational price;
        Rational net;         // value_own - price; the IR slack
    };
    struct IcSlack {
        std::string type;
        std::string other;
        Rational slack;  // net(own item) - net(other type's item); negative = violation
    };
    struct IrSlack {
        std::string type;
        Rational slack;
    };

    std::vector<TypeRow> types;        // sorted by type id
    std::vector<IcSlack> ic_all;       // every ordered pair, sorted by (type, other)
    std::vector<IcSlack> ic_violations;
    std::vector<IrSlack> ir_violations;
    Rational revenue;
    bool efficient_surplus = false;

    bool pass() const { return ic_violations.empty() && ir_violations.empty(); }
};

/// Throws std::invalid_argument("missing item ...") if the menu does not
/// cover every type.
AuditReport verify_menu(const Menu& menu, const TypeSpace& space,
                        const DecisionProblem& problem);

/// Binary-action surplus-extraction menu: each type is offered the binary
/// complement of its signal at price Ubar - U(signal).
Menu build_menu_binary(const TypeSpace& space, const DecisionProblem& problem);

/// Diagonal-problem analogue over simple-signal types, backed by
/// complement_diagonal_simple.
Menu build_menu_diagonal(const TypeSpace& space, const DecisionProblem& problem);

/// The most profitable thing a given type can do when facing a menu: buy any
/// item (its own, another type's) or opt out. Ties prefer the type's own
/// item, then other items by type id, then opting out.
struct Deviation {
    std::string choice;  // a type id, or "opt-out"
    Rational net;
};
Deviation best_deviation(std::string_view type_id, const Menu& menu, const TypeSpace& space,
                         const DecisionProblem& problem);

/// All set partitions of the problem's states as simple signals, in
/// restricted-growth-string order. Throws when the state count exceeds
/// `max_states`.
std::vector<Signal> enumerate_partitions(const DecisionProblem& problem,
                                         std::size_t max_states = 6);

}  // namespace infomarket
