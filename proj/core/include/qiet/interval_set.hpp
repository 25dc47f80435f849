#pragma once

#include <string>
#include <vector>

#include "qiet/quad_num.hpp"

namespace qiet {

/// Left-closed right-open interval [lo, hi[ with exact endpoints, lo < hi.
/// The half-open convention is used throughout the library so that point
/// membership and partitions never face boundary ambiguity.
struct SemiInterval {
    SemiInterval(QuadNum lo, QuadNum hi);

    QuadNum length() const { return hi - lo; }
    bool contains(const QuadNum& z) const { return lo <= z && z < hi; }
    /// Membership in the open interior ]lo, hi[.
    bool contains_open(const QuadNum& z) const { return lo < z && z < hi; }
    bool contains(const SemiInterval& other) const { return lo <= other.lo && other.hi <= hi; }

    bool operator==(const SemiInterval& rhs) const { return lo == rhs.lo && hi == rhs.hi; }

    std::string str() const { return "[" + lo.str() + ", " + hi.str() + ")"; }

    QuadNum lo;
    QuadNum hi;
};

/// Finite union of semi-intervals in canonical form: parts sorted by left
/// endpoint, pairwise disjoint and non-adjacent (adjacent parts are merged,
/// so the part count is well defined).  The empty set keeps its field
/// discriminant so measure() and friends stay total.
class IntervalSet {
public:
    explicit IntervalSet(int d) : d_(d) {}
    explicit IntervalSet(const SemiInterval& interval);

    /// Builds the canonical form of the union of arbitrary (possibly
    /// overlapping, unsorted) parts.
    static IntervalSet from_parts(std::vector<SemiInterval> parts, int d);

    const std::vector<SemiInterval>& parts() const { return parts_; }
    int d() const { return d_; }
    bool empty() const { return parts_.empty(); }
    std::size_t part_count() const { return parts_.size(); }

    bool contains(const QuadNum& z) const;
    bool operator==(const IntervalSet& rhs) const { return d_ == rhs.d_ && parts_ == rhs.parts_; }

    std::string str() const;

private:
    friend IntervalSet set_union(const IntervalSet&, const IntervalSet&);
    friend IntervalSet set_intersect(const IntervalSet&, const IntervalSet&);
    friend IntervalSet set_subtract(const IntervalSet&, const IntervalSet&);

    int d_;
    std::vector<SemiInterval> parts_;
};

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_intersect(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_subtract(const IntervalSet& a, const IntervalSet& b);
/// Complement of a inside the ambient interval; throws NotContained if a is
/// not a subset of the ambient.
IntervalSet complement_in(const IntervalSet& a, const SemiInterval& ambient);

bool is_subset(const IntervalSet& a, const IntervalSet& b);

/// Total Lebesgue measure; zero (of the set's field) for the empty set.
QuadNum measure(const IntervalSet& a);

/// All part endpoints, sorted ascending.  Parts are non-adjacent, so the
/// endpoints are pairwise distinct.
std::vector<QuadNum> boundary(const IntervalSet& a);

IntervalSet translate(const IntervalSet& a, const QuadNum& t);

}  // namespace qiet
