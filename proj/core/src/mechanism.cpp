#include "infomarket/mechanism.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "infomarket/value.hpp"

namespace infomarket {

namespace {
const Rational kZero(0);
const Rational kOne(1);
}  // namespace

const TypeSpace::Entry& TypeSpace::find(std::string_view id) const {
    for (const Entry& e : types)
        if (e.id == id) return e;
    throw std::invalid_argument("unknown type '" + std::string(id) + "'");
}

void validate_type_space(const TypeSpace& space, const DecisionProblem& problem) {
    if (space.types.empty()) throw std::invalid_argument("type space is empty");
    std::unordered_set<std::string> ids;
    Rational total;
    for (const auto& e : space.types) {
        if (!ids.insert(e.id).second)
            throw std::invalid_argument("duplicate type '" + e.id + "'");
        if (e.weight.sign() < 0)
            throw std::invalid_argument("invalid type weights: negative weight");
        total += e.weight;
        if (e.signal.num_states != problem.num_states())
            throw std::invalid_argument("type '" + e.id +
                                        "' signal does not match the problem's states");
    }
    if (total != kOne)
        throw std::invalid_argument("invalid type weights: sum to " + total.str());
}

const MenuItem& Menu::find(std::string_view type_id) const {
    for (const auto& [id, item] : items)
        if (id == type_id) return item;
    throw std::invalid_argument("missing item for type '" + std::string(type_id) + "'");
}

bool Menu::has(std::string_view type_id) const {
    for (const auto& [id, item] : items)
        if (id == type_id) return true;
    return false;
}

AuditReport verify_menu(const Menu& menu, const TypeSpace& space,
                        const DecisionProblem& problem) {
    validate_type_space(space, problem);
    for (const auto& e : space.types) menu.find(e.id);  // coverage check

    const Rational ubar = full_info_payoff(problem);
    AuditReport report;

    struct Cached {
        const TypeSpace::Entry* entry;
        Rational u_type;
        std::vector<Rational> value_of_item;  // aligned with sorted ids
    };
    std::vector<std::string> ids;
    for (const auto& e : space.types) ids.push_back(e.id);
    std::sort(ids.begin(), ids.end());

    std::vector<Cached> cache;
    for (const std::string& id : ids) {
        Cached c;
        c.entry = &space.find(id);
        c.u_type = exante_payoff(c.entry->signal, problem);
        for (const std::string& other : ids) {
            const MenuItem& item = menu.find(other);
            c.value_of_item.push_back(
                exante_payoff(join(c.entry->signal, item.offered), problem) - c.u_type);
        }
        cache.push_back(std::move(c));
    }

    report.efficient_surplus = true;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        const MenuItem& item = menu.find(ids[i]);
        const Cached& c = cache[i];
        AuditReport::TypeRow row;
        row.type = ids[i];
        row.weight = c.entry->weight;
        row.u_type = c.u_type;
        row.value_own = c.value_of_item[i];
        row.u_with_item = c.u_type + row.value_own;
        row.price = item.price;
        row.net = row.value_own - item.price;
        if (row.net.sign() < 0)
            report.ir_violations.push_back({ids[i], row.net});
        if (row.u_with_item != ubar || item.price != ubar - c.u_type)
            report.efficient_surplus = false;
        report.revenue += c.entry->weight * item.price;
        report.types.push_back(std::move(row));

        for (std::size_t j = 0; j < ids.size(); ++j) {
            if (j == i) continue;
            const MenuItem& other = menu.find(ids[j]);
            Rational own_net = c.value_of_item[i] - item.price;
            Rational other_net = c.value_of_item[j] - other.price;
            AuditReport::IcSlack slack{ids[i], ids[j], own_net - other_net};
            if (slack.slack.sign() < 0) report.ic_violations.push_back(slack);
            report.ic_all.push_back(std::move(slack));
        }
    }
    return report;
}

namespace {

Menu build_menu(const TypeSpace& space, const DecisionProblem& problem,
                ComplementResult (*construct)(const Signal&, const DecisionProblem&)) {
    validate_type_space(space, problem);
    const Rational ubar = full_info_payoff(problem);
    Menu menu;
    menu.name = "surplus";
    for (const auto& e : space.types) {
        ComplementResult c = construct(e.signal, problem);
        menu.items.emplace_back(
            e.id, MenuItem{std::move(c.complement), ubar - exante_payoff(e.signal, problem)});
    }
    return menu;
}

}  // namespace

Menu build_menu_binary(const TypeSpace& space, const DecisionProblem& problem) {
    return build_menu(space, problem, &complement_binary);
}

Menu build_menu_diagonal(const TypeSpace& space, const DecisionProblem& problem) {
    return build_menu(space, problem, &complement_diagonal_simple);
}

Deviation best_deviation(std::string_view type_id, const Menu& menu, const TypeSpace& space,
                         const DecisionProblem& problem) {
    const TypeSpace::Entry& self = space.find(type_id);
    const Rational u_type = exante_payoff(self.signal, problem);

    std::vector<std::string> order;
    order.emplace_back(type_id);
    std::vector<std::string> others;
    for (const auto& [id, item] : menu.items)
        if (id != type_id) others.push_back(id);
    std::sort(others.begin(), others.end());
    order.insert(order.end(), others.begin(), others.end());

    Deviation best{"opt-out", kZero};
    bool first = true;
    for (const std::string& id : order) {
        const MenuItem& item = menu.find(id);
        Rational net =
            exante_payoff(join(self.signal, item.offered), problem) - u_type - item.price;
        if (first || net > best.net) {
            best = Deviation{id, std::move(net)};
            first = false;
        }
    }
    if (kZero > best.net) best = Deviation{"opt-out", kZero};
    return best;
}

std::vector<Signal> enumerate_partitions(const DecisionProblem& problem,
                                         std::size_t max_states) {
    const std::size_t n = problem.num_states();
    if (n > max_states)
        throw std::invalid_argument("state space exceeds the partition enumeration cap");

    std::vector<Signal> out;
    std::vector<std::size_t> rgs(n, 0);

    auto emit = [&] {
        std::size_t blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
        std::vector<std::vector<std::size_t>> grouped(blocks);
        for (std::size_t s = 0; s < n; ++s) grouped[rgs[s]].push_back(s);
        std::string name = "p";
        for (std::size_t digit : rgs) name += char('0' + digit);
        out.push_back(simple_signal(std::move(name), grouped, problem.states()));
    };

    // Restricted growth strings in lexicographic order.
    auto walk = [&](auto&& self, std::size_t i, std::size_t max_used) -> void {
        if (i == n) {
            emit();
            return;
        }
        for (std::size_t digit = 0; digit <= max_used + 1 && digit < n; ++digit) {
            rgs[i] = digit;
            self(self, i + 1, std::max(max_used, digit));
        }
    };
    rgs[0] = 0;
    walk(walk, 1, 0);
    return out;
}

}  // namespace infomarket
