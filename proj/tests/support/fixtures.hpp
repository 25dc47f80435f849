#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <random>
#include <vector>

#include "qiet/iet.hpp"

namespace qiet::testing {

using BigFloat = boost::multiprecision::cpp_bin_float_100;

inline QuadNum qn(long m, long n, long r, int d) { return QuadNum(m, n, r, d); }

/// Independent high-precision evaluation of (m + n*sqrt(d))/r.  With the
/// coefficient sizes used in tests, distinct values differ by far more than
/// the 100-digit rounding error, so sign comparisons against this oracle are
/// conclusive.
inline BigFloat to_big_float(const QuadNum& x) {
    BigFloat m(x.m());
    BigFloat n(x.n());
    BigFloat r(x.r());
    return (m + n * sqrt(BigFloat(x.d()))) / r;
}

/// Rotation by alpha = (3-sqrt(5))/2 as the exchange of (1-alpha, alpha).
inline Iet golden_iet() {
    return Iet({1, 0}, {qn(-1, 1, 2, 5), qn(3, -1, 2, 5)}, QuadNum::zero(5));
}

/// Exchange of (beta, 1-beta) with beta = 2-sqrt(2); length ratio sqrt(2).
inline Iet sqrt2_iet() {
    return Iet({1, 0}, {qn(2, -1, 1, 2), qn(-1, 1, 1, 2)}, QuadNum::zero(2));
}

/// Exchange of (g, 1-g) with g = (3-sqrt(3))/2; length ratio sqrt(3).
inline Iet sqrt3_iet() {
    return Iet({1, 0}, {qn(3, -1, 2, 3), qn(-1, 1, 2, 3)}, QuadNum::zero(3));
}

/// The minimal but non-regular rotation encoding: lengths
/// (1-2a, a, a) with a = (3-sqrt(5))/2 and the cyclic permutation; it has
/// the depth-one connection T(gamma_2) = gamma_3.
inline Iet keane_iet() {
    return Iet({1, 2, 0}, {qn(-2, 1, 1, 5), qn(3, -1, 2, 5), qn(3, -1, 2, 5)}, QuadNum::zero(5));
}

/// A regular 3-interval exchange over Q(sqrt(5)) used where a fixture with
/// s > 2 is needed: reversal permutation, lengths
/// ((sqrt(5)-1)/4, 1/2, (3-sqrt(5))/4).  No connection up to depth 3000.
inline Iet three_iet() {
    return Iet({2, 1, 0}, {qn(-1, 1, 4, 5), qn(1, 0, 2, 5), qn(3, -1, 4, 5)}, QuadNum::zero(5));
}

inline std::vector<Iet> two_interval_fixtures() {
    return {golden_iet(), sqrt2_iet(), sqrt3_iet()};
}

inline std::vector<Iet> regular_fixtures() {
    return {golden_iet(), sqrt2_iet(), sqrt3_iet(), three_iet()};
}

inline QuadNum random_quadnum(std::mt19937_64& rng, int d, long max_coeff = 6,
                              long max_den = 4) {
    std::uniform_int_distribution<long> coeff(-max_coeff, max_coeff);
    std::uniform_int_distribution<long> den(1, max_den);
    return QuadNum(coeff(rng), coeff(rng), den(rng), d);
}

inline QuadNum random_nonzero_quadnum(std::mt19937_64& rng, int d, long max_coeff = 6,
                                      long max_den = 4) {
    for (;;) {
        QuadNum x = random_quadnum(rng, d, max_coeff, max_den);
        if (!x.is_zero()) return x;
    }
}

inline QuadNum random_positive_quadnum(std::mt19937_64& rng, int d, long max_coeff = 6,
                                       long max_den = 4) {
    return random_nonzero_quadnum(rng, d, max_coeff, max_den).abs();
}

inline QuadNum random_ring_element(std::mt19937_64& rng, int d, long max_coeff = 1000000) {
    std::uniform_int_distribution<long> coeff(-max_coeff, max_coeff);
    return QuadNum(coeff(rng), coeff(rng), 1, d);
}

inline int random_d(std::mt19937_64& rng) {
    static const int choices[] = {2, 3, 5, 7};
    std::uniform_int_distribution<int> pick(0, 3);
    return choices[pick(rng)];
}

/// Uniform irreducible permutation: no proper prefix of positions maps onto
/// itself (reducible exchanges decompose and their inductions degenerate).
inline std::vector<int> random_irreducible_perm(std::mt19937_64& rng, int s) {
    std::vector<int> perm(s);
    for (;;) {
        for (int i = 0; i < s; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        int max_seen = -1;
        bool reducible = false;
        for (int i = 0; i + 1 < s; ++i) {
            max_seen = std::max(max_seen, perm[i]);
            if (max_seen == i) {
                reducible = true;
                break;
            }
        }
        if (!reducible) return perm;
    }
}

inline Iet random_iet(std::mt19937_64& rng, int d, int s) {
    std::vector<QuadNum> lengths;
    lengths.reserve(s);
    for (int i = 0; i < s; ++i) lengths.push_back(random_positive_quadnum(rng, d, 5, 3));
    return Iet(random_irreducible_perm(rng, s), std::move(lengths), QuadNum::zero(d));
}

/// Random quadratic IET with no connection found up to the filter depth.
/// Irrational quadratic data is regular for almost every draw, so the loop
/// terminates quickly.
inline Iet random_regular_iet(std::mt19937_64& rng, int d, int s, long filter_depth = 64) {
    for (;;) {
        Iet t = random_iet(rng, d, s);
        bool irrational = false;
        for (const QuadNum& len : t.lengths()) irrational = irrational || !len.is_rational();
        if (!irrational) continue;
        if (!t.find_connection(filter_depth)) return t;
    }
}

/// A random point of the domain that avoids the finitely many separation
/// points (rational convex combination of two gammas).
inline QuadNum random_interior_point(std::mt19937_64& rng, const Iet& t) {
    std::uniform_int_distribution<long> num(1, 97);
    long p = num(rng);
    QuadNum frac = QuadNum::rational(p, 101, t.d());
    return t.left() + t.total_length() * frac;
}

}  // namespace qiet::testing
