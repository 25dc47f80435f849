#include "qiet/interval_set.hpp"

#include <algorithm>

namespace qiet {

SemiInterval::SemiInterval(QuadNum lo_, QuadNum hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (!(lo < hi)) {
        throw EmptyInterval("semi-interval requires lo < hi, got [" + lo.str() + ", " + hi.str() +
                            ")");
    }
}

IntervalSet::IntervalSet(const SemiInterval& interval) : d_(interval.lo.d()) {
    parts_.push_back(interval);
}

IntervalSet IntervalSet::from_parts(std::vector<SemiInterval> parts, int d) {
    IntervalSet set(d);
    if (parts.empty()) return set;
    std::sort(parts.begin(), parts.end(),
              [](const SemiInterval& a, const SemiInterval& b) { return a.lo < b.lo; });
    QuadNum lo = parts.front().lo;
    QuadNum hi = parts.front().hi;
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (parts[i].lo <= hi) {
            if (parts[i].hi > hi) hi = parts[i].hi;  // overlap or adjacency: merge
        } else {
            set.parts_.emplace_back(lo, hi);
            lo = parts[i].lo;
            hi = parts[i].hi;
        }
    }
    set.parts_.emplace_back(std::move(lo), std::move(hi));
    return set;
}

bool IntervalSet::contains(const QuadNum& z) const {
    // Binary search on the sorted disjoint parts.
    std::size_t lo = 0, hi = parts_.size();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (parts_[mid].hi <= z) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    return lo < parts_.size() && parts_[lo].contains(z);
}

std::string IntervalSet::str() const {
    if (parts_.empty()) return "{}";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += " u ";
        out += parts_[i].str();
    }
    return out;
}

namespace {

void check_same_field(const IntervalSet& a, const IntervalSet& b) {
    if (a.d() != b.d()) throw DiscriminantMismatch("interval sets over different fields");
}

}  // namespace

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b) {
    check_same_field(a, b);
    std::vector<SemiInterval> parts = a.parts_;
    parts.insert(parts.end(), b.parts_.begin(), b.parts_.end());
    return IntervalSet::from_parts(std::move(parts), a.d());
}

IntervalSet set_intersect(const IntervalSet& a, const IntervalSet& b) {
    check_same_field(a, b);
    std::vector<SemiInterval> parts;
    std::size_t i = 0, j = 0;
    while (i < a.parts_.size() && j < b.parts_.size()) {
        const SemiInterval& p = a.parts_[i];
        const SemiInterval& q = b.parts_[j];
        const QuadNum& lo = p.lo > q.lo ? p.lo : q.lo;
        const QuadNum& hi = p.hi < q.hi ? p.hi : q.hi;
        if (lo < hi) parts.emplace_back(lo, hi);
        if (p.hi < q.hi) {
            ++i;
        } else {
            ++j;
        }
    }
    return IntervalSet::from_parts(std::move(parts), a.d());
}

IntervalSet set_subtract(const IntervalSet& a, const IntervalSet& b) {
    check_same_field(a, b);
    std::vector<SemiInterval> parts;
    std::size_t j = 0;
    for (const SemiInterval& p : a.parts_) {
        QuadNum lo = p.lo;
        while (j < b.parts_.size() && b.parts_[j].hi <= lo) ++j;
        std::size_t k = j;
        while (k < b.parts_.size() && b.parts_[k].lo < p.hi) {
            if (lo < b.parts_[k].lo) parts.emplace_back(lo, b.parts_[k].lo);
            if (b.parts_[k].hi > lo) lo = b.parts_[k].hi;
            ++k;
        }
        if (lo < p.hi) parts.emplace_back(std::move(lo), p.hi);
    }
    return IntervalSet::from_parts(std::move(parts), a.d());
}

IntervalSet complement_in(const IntervalSet& a, const SemiInterval& ambient) {
    IntervalSet amb(ambient);
    if (!is_subset(a, amb)) {
        throw NotContained("complement requires the set to lie inside the ambient interval");
    }
    return set_subtract(amb, a);
}

bool is_subset(const IntervalSet& a, const IntervalSet& b) {
    return set_subtract(a, b).empty();
}

QuadNum measure(const IntervalSet& a) {
    QuadNum total = QuadNum::zero(a.d());
    for (const SemiInterval& p : a.parts()) total = total + p.length();
    return total;
}

std::vector<QuadNum> boundary(const IntervalSet& a) {
    std::vector<QuadNum> points;
    points.reserve(2 * a.parts().size());
    for (const SemiInterval& p : a.parts()) {
        points.push_back(p.lo);
        points.push_back(p.hi);
    }
    return points;
}

IntervalSet translate(const IntervalSet& a, const QuadNum& t) {
    std::vector<SemiInterval> parts;
    parts.reserve(a.parts().size());
    for (const SemiInterval& p : a.parts()) parts.emplace_back(p.lo + t, p.hi + t);
    return IntervalSet::from_parts(std::move(parts), a.d());
}

}  // namespace qiet
