#include "infomarket/interval_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace infomarket {

namespace {
const Rational kZero(0);
const Rational kOne(1);
}  // namespace

IntervalSet IntervalSet::full() { return interval(kZero, kOne); }

IntervalSet IntervalSet::interval(const Rational& lo, const Rational& hi) {
    return of({Interval{lo, hi}});
}

IntervalSet IntervalSet::of(std::vector<Interval> parts) {
    for (const Interval& p : parts) {
        if (p.lo < kZero || p.hi > kOne)
            throw std::invalid_argument("interval endpoints must lie in [0,1]");
        if (!(p.lo < p.hi))
            throw std::invalid_argument("interval must satisfy lo < hi");
    }
    std::sort(parts.begin(), parts.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    IntervalSet out;
    for (const Interval& p : parts) {
        if (!out.parts_.empty()) {
            Interval& last = out.parts_.back();
            if (p.lo < last.hi) throw std::invalid_argument("overlapping intervals");
            if (p.lo == last.hi) {
                last.hi = p.hi;  // adjacent pieces merge
                continue;
            }
        }
        out.parts_.push_back(p);
    }
    return out;
}

Rational IntervalSet::measure() const {
    Rational total;
    for (const Interval& p : parts_) total += p.length();
    return total;
}

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b) {
    // Disjoint sorted inputs yield disjoint sorted non-adjacent output, so
    // pieces can be appended directly.
    IntervalSet out;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.parts_.size() && j < b.parts_.size()) {
        const Rational lo = std::max(a.parts_[i].lo, b.parts_[j].lo);
        const Rational hi = std::min(a.parts_[i].hi, b.parts_[j].hi);
        if (lo < hi) out.parts_.push_back(Interval{lo, hi});
        if (a.parts_[i].hi < b.parts_[j].hi)
            ++i;
        else
            ++j;
    }
    return out;
}

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b) {
    std::vector<Interval> merged;
    merged.reserve(a.parts_.size() + b.parts_.size());
    std::size_t i = 0;
    std::size_t j = 0;
    auto next = [&]() {
        if (i < a.parts_.size() && (j >= b.parts_.size() || a.parts_[i].lo <= b.parts_[j].lo))
            return a.parts_[i++];
        return b.parts_[j++];
    };
    while (i < a.parts_.size() || j < b.parts_.size()) {
        Interval cur = next();
        if (!merged.empty() && cur.lo <= merged.back().hi) {
            if (merged.back().hi < cur.hi) merged.back().hi = cur.hi;
        } else {
            merged.push_back(cur);
        }
    }
    IntervalSet out;
    out.parts_ = std::move(merged);
    return out;
}

IntervalSet complement(const IntervalSet& a) {
    IntervalSet out;
    Rational cursor = kZero;
    for (const Interval& p : a.parts_) {
        if (cursor < p.lo) out.parts_.push_back(Interval{cursor, p.lo});
        cursor = p.hi;
    }
    if (cursor < kOne) out.parts_.push_back(Interval{cursor, kOne});
    return out;
}

}  // namespace infomarket
