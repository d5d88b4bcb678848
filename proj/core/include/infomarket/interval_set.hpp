#pragma once

#include <compare>
#include <vector>

#include "infomarket/rational.hpp"

namespace infomarket {

/// Half-open interval [lo, hi) with rational endpoints, 0 <= lo < hi <= 1.
struct Interval {
    Rational lo;
    Rational hi;

    Rational length() const { return hi - lo; }

    friend bool operator==(const Interval&, const Interval&) = default;
    friend std::strong_ordering operator<=>(const Interval&, const Interval&) = default;
};

/// Finite union of disjoint half-open rational subintervals of [0,1).
///
/// The representation is canonical: parts are sorted by left endpoint,
/// pairwise disjoint, and never adjacent (a part's right endpoint is strictly
/// below the next part's left endpoint). Two IntervalSets describe the same
/// subset of [0,1) iff they compare equal. Within this class the only set of
/// measure zero is the empty set, so equality up to null sets coincides with
/// plain equality.
class IntervalSet {
public:
    IntervalSet() = default;

    static IntervalSet empty() { return IntervalSet(); }
    static IntervalSet full();
    static IntervalSet interval(const Rational& lo, const Rational& hi);

    /// Builds from arbitrary parts: validates endpoints, sorts, merges
    /// adjacent pieces, and rejects overlaps.
    static IntervalSet of(std::vector<Interval> parts);

    const std::vector<Interval>& parts() const { return parts_; }
    bool is_empty() const { return parts_.empty(); }
    Rational measure() const;

    friend bool operator==(const IntervalSet&, const IntervalSet&) = default;
    friend std::strong_ordering operator<=>(const IntervalSet&, const IntervalSet&) = default;

    friend IntervalSet intersect(const IntervalSet& a, const IntervalSet& b);
    friend IntervalSet set_union(const IntervalSet& a, const IntervalSet& b);
    friend IntervalSet complement(const IntervalSet& a);

private:
    std::vector<Interval> parts_;
};

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_union(const IntervalSet& a, const IntervalSet& b);
/// Complement within the carrier [0,1).
IntervalSet complement(const IntervalSet& a);

}  // namespace infomarket
