#include "qiet/iet.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qiet {

std::string ConnectionWitness::str() const {
    return "T^" + std::to_string(k) + "(gamma_" + std::to_string(i) + ") = gamma_" +
           std::to_string(j);
}

Iet::Iet(std::vector<int> perm, std::vector<QuadNum> lengths, QuadNum left)
    : perm_(std::move(perm)), lengths_(std::move(lengths)), left_(std::move(left)), right_(left_) {
    const int s = static_cast<int>(lengths_.size());
    if (s < 1) throw std::invalid_argument("an interval exchange needs at least one interval");
    if (static_cast<int>(perm_.size()) != s) {
        throw NonBijectivePermutation("permutation size does not match number of lengths");
    }
    perm_inv_.assign(s, -1);
    for (int i = 0; i < s; ++i) {
        if (perm_[i] < 0 || perm_[i] >= s || perm_inv_[perm_[i]] != -1) {
            throw NonBijectivePermutation("permutation is not a bijection on positions");
        }
        perm_inv_[perm_[i]] = i;
    }
    for (const QuadNum& len : lengths_) {
        if (len.d() != left_.d()) throw DiscriminantMismatch("lengths over different fields");
        if (len.sign() <= 0) throw NonPositiveLength("interval lengths must be positive");
    }
    gammas_.reserve(s);
    for (int i = 0; i < s; ++i) {
        gammas_.push_back(right_);
        right_ = right_ + lengths_[i];
    }
    deltas_.reserve(s);
    QuadNum acc = left_;
    for (int j = 0; j < s; ++j) {
        deltas_.push_back(acc);
        acc = acc + lengths_[perm_inv_[j]];
    }
    alphas_.reserve(s);
    for (int i = 0; i < s; ++i) alphas_.push_back(deltas_[perm_[i]] - gammas_[i]);
}

namespace {

// Largest index i with points[i] <= z, assuming points sorted and
// points[0] <= z.
int locate(const std::vector<QuadNum>& points, const QuadNum& z) {
    int lo = 0, hi = static_cast<int>(points.size()) - 1;
    while (lo < hi) {
        int mid = (lo + hi + 1) / 2;
        if (points[mid] <= z) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    return lo;
}

}  // namespace

int Iet::interval_index(const QuadNum& z) const {
    if (z < left_ || z >= right_) {
        throw OutOfDomain("point " + z.str() + " outside " + domain().str());
    }
    return locate(gammas_, z);
}

int Iet::slot_index(const QuadNum& z) const {
    if (z < left_ || z >= right_) {
        throw OutOfDomain("point " + z.str() + " outside " + domain().str());
    }
    return locate(deltas_, z);
}

QuadNum Iet::apply(const QuadNum& z) const { return z + alphas_[interval_index(z)]; }

QuadNum Iet::apply_inverse(const QuadNum& z) const {
    return z - alphas_[perm_inv_[slot_index(z)]];
}

QuadNum Iet::iterate(const QuadNum& z, long k) const {
    QuadNum w = z;
    for (; k > 0; --k) w = apply(w);
    for (; k < 0; ++k) w = apply_inverse(w);
    return w;
}

Iet Iet::inverse() const {
    // The inverse exchanges the image slots back onto the exchanged
    // intervals: slot k has length of interval perm^-1(k) and maps to
    // domain position perm^-1(k).
    const int s_ = s();
    std::vector<int> perm(s_);
    std::vector<QuadNum> lengths;
    lengths.reserve(s_);
    for (int k = 0; k < s_; ++k) {
        perm[k] = perm_inv_[k];
        lengths.push_back(lengths_[perm_inv_[k]]);
    }
    return Iet(std::move(perm), std::move(lengths), left_);
}

Iet Iet::reversed() const {
    const int s_ = s();
    std::vector<int> perm(s_);
    std::vector<QuadNum> lengths;
    lengths.reserve(s_);
    for (int i = 0; i < s_; ++i) {
        perm[i] = s_ - 1 - perm_[s_ - 1 - i];
        lengths.push_back(lengths_[s_ - 1 - i]);
    }
    return Iet(std::move(perm), std::move(lengths), left_);
}

Iet Iet::scaled(const QuadNum& factor) const {
    if (factor.sign() <= 0) throw NonPositiveLength("scale factor must be positive");
    std::vector<QuadNum> lengths;
    lengths.reserve(lengths_.size());
    for (const QuadNum& len : lengths_) lengths.push_back(len * factor);
    return Iet(perm_, std::move(lengths), left_ * factor);
}

Iet Iet::translated(const QuadNum& offset) const {
    return Iet(perm_, lengths_, left_ + offset);
}

IntervalSet Iet::image(const IntervalSet& a) const {
    std::vector<SemiInterval> parts;
    for (const SemiInterval& p : a.parts()) {
        int i = interval_index(p.lo);
        QuadNum lo = p.lo;
        while (lo < p.hi) {
            const QuadNum& cut = i + 1 < s() ? gammas_[i + 1] : right_;
            const QuadNum& hi = cut < p.hi ? cut : p.hi;
            parts.emplace_back(lo + alphas_[i], hi + alphas_[i]);
            lo = hi;
            ++i;
        }
    }
    return IntervalSet::from_parts(std::move(parts), a.d());
}

IntervalSet Iet::preimage(const IntervalSet& a) const {
    std::vector<SemiInterval> parts;
    for (const SemiInterval& p : a.parts()) {
        int j = slot_index(p.lo);
        QuadNum lo = p.lo;
        while (lo < p.hi) {
            const QuadNum& cut = j + 1 < s() ? deltas_[j + 1] : right_;
            const QuadNum& hi = cut < p.hi ? cut : p.hi;
            const QuadNum& shift = alphas_[perm_inv_[j]];
            parts.emplace_back(lo - shift, hi - shift);
            lo = hi;
            ++j;
        }
    }
    return IntervalSet::from_parts(std::move(parts), a.d());
}

std::optional<ConnectionWitness> Iet::find_connection(long n) const {
    if (n < 0) throw std::invalid_argument("connection search depth must be >= 0");
    if (s() < 2) return std::nullopt;
    // Forward orbits of gamma_2..gamma_s, checked after each step against all
    // nonzero separation points.  Depth 0 never yields a witness since the
    // gammas are pairwise distinct and (i,0)=(j,0) is excluded.
    std::vector<QuadNum> orbit(gammas_.begin() + 1, gammas_.end());
    for (long k = 1; k <= n; ++k) {
        for (std::size_t idx = 0; idx < orbit.size(); ++idx) {
            orbit[idx] = apply(orbit[idx]);
            for (std::size_t jdx = 0; jdx < orbit.size(); ++jdx) {
                if (orbit[idx] == gammas_[jdx + 1]) {
                    return ConnectionWitness{static_cast<int>(idx) + 2, static_cast<int>(jdx) + 2,
                                             k};
                }
            }
        }
    }
    return std::nullopt;
}

namespace {

void check_subinterval(const Iet& t, const SemiInterval& interval) {
    if (interval.lo < t.left() || interval.hi > t.right()) {
        throw OutOfDomain("interval " + interval.str() + " not inside " + t.domain().str());
    }
}

}  // namespace

long Iet::rho_plus(const SemiInterval& interval, const QuadNum& z, long cap) const {
    check_subinterval(*this, interval);
    QuadNum w = z;
    for (long n = 1; n <= cap; ++n) {
        w = apply(w);
        if (interval.contains_open(w)) return n;
    }
    throw StepCapExceeded("forward return scan exceeded " + std::to_string(cap) + " steps");
}

long Iet::rho_minus(const SemiInterval& interval, const QuadNum& z, long cap) const {
    check_subinterval(*this, interval);
    if (interval.contains_open(z)) return 0;
    QuadNum w = z;
    for (long n = 1; n <= cap; ++n) {
        w = apply_inverse(w);
        if (interval.contains_open(w)) return n;
    }
    throw StepCapExceeded("backward return scan exceeded " + std::to_string(cap) + " steps");
}

namespace {

// The window { T^k(z) : -rho^- <= k < rho^+ } with each point annotated by
// its exponent.  A periodic orbit that never meets the open interval is its
// own neighbour set (the window degenerates to the whole finite orbit);
// this only arises on non-minimal transformations such as the identity.
std::vector<std::pair<QuadNum, long>> neighbor_window(const Iet& t, const SemiInterval& interval,
                                                      const QuadNum& z, long cap) {
    std::vector<std::pair<QuadNum, long>> window;
    window.emplace_back(z, 0);
    QuadNum w = z;
    for (long k = 1;; ++k) {
        w = t.apply(w);
        if (interval.contains_open(w)) break;  // rho^+ = k, exclusive
        if (w == z) return window;             // periodic, never enters
        if (k >= cap) {
            throw StepCapExceeded("forward neighbour scan exceeded " + std::to_string(cap) +
                                  " steps");
        }
        window.emplace_back(w, k);
    }
    if (!interval.contains_open(z)) {
        w = z;
        for (long k = 1;; ++k) {
            w = t.apply_inverse(w);
            window.emplace_back(w, -k);  // the point at -rho^- is included
            if (interval.contains_open(w)) break;
            if (k >= cap) {
                throw StepCapExceeded("backward neighbour scan exceeded " + std::to_string(cap) +
                                      " steps");
            }
        }
    }
    return window;
}

}  // namespace

std::vector<QuadNum> Iet::neighbors(const SemiInterval& interval, const QuadNum& z,
                                    long cap) const {
    check_subinterval(*this, interval);
    std::vector<QuadNum> points;
    for (auto& [point, k] : neighbor_window(*this, interval, z, cap)) {
        points.push_back(std::move(point));
    }
    std::sort(points.begin(), points.end());
    return points;
}

std::vector<DivisionPoint> Iet::division_points_annotated(const SemiInterval& interval,
                                                          long cap) const {
    check_subinterval(*this, interval);
    std::vector<DivisionPoint> points;
    for (int i = 0; i < s(); ++i) {
        for (auto& [point, k] : neighbor_window(*this, interval, gammas_[i], cap)) {
            points.push_back(DivisionPoint{std::move(point), i + 1, k});
        }
    }
    std::sort(points.begin(), points.end(), [](const DivisionPoint& a, const DivisionPoint& b) {
        if (a.point != b.point) return a.point < b.point;
        if (a.sep_index != b.sep_index) return a.sep_index < b.sep_index;
        return a.k < b.k;
    });
    return points;
}

std::vector<QuadNum> Iet::division_points(const SemiInterval& interval, long cap) const {
    std::vector<DivisionPoint> annotated = division_points_annotated(interval, cap);
    std::vector<QuadNum> points;
    points.reserve(annotated.size());
    for (DivisionPoint& dp : annotated) {
        if (points.empty() || points.back() != dp.point) points.push_back(std::move(dp.point));
    }
    return points;
}

bool Iet::is_admissible(const SemiInterval& interval, long cap) const {
    check_subinterval(*this, interval);
    std::vector<QuadNum> div = division_points(interval, cap);
    auto member = [&](const QuadNum& z) {
        return std::binary_search(div.begin(), div.end(), z);
    };
    bool lo_ok = member(interval.lo);
    bool hi_ok = interval.hi == right_ || member(interval.hi);
    return lo_ok && hi_ok;
}

std::vector<QuadNum> Iet::dmn(long m, long n) const {
    if (m < 0 || n < 0) throw std::invalid_argument("dmn requires m, n >= 0");
    std::set<QuadNum> points;
    for (const QuadNum& g : gammas_) {
        if (m >= 1) {
            QuadNum w = g;
            points.insert(w);
            for (long k = 1; k <= m - 1; ++k) {
                w = apply_inverse(w);
                points.insert(w);
            }
        }
        if (n >= 1) {
            QuadNum w = g;
            for (long k = 1; k <= n; ++k) {
                w = apply(w);
                points.insert(w);
            }
        }
    }
    return std::vector<QuadNum>(points.begin(), points.end());
}

std::vector<SemiInterval> Iet::families(long m, long n, Family kind) const {
    std::set<QuadNum> points;
    for (QuadNum& p : dmn(m, n)) points.insert(std::move(p));
    points.insert(left_);
    points.insert(right_);
    std::vector<QuadNum> sorted(points.begin(), points.end());
    std::vector<SemiInterval> result;
    if (kind == Family::U) {
        for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
            result.emplace_back(sorted[i], sorted[i + 1]);
        }
    } else {
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            for (std::size_t j = i + 1; j < sorted.size(); ++j) {
                result.emplace_back(sorted[i], sorted[j]);
            }
        }
    }
    return result;
}

}  // namespace qiet
