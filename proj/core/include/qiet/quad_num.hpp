#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qiet/errors.hpp"

namespace qiet {

using BigInt = boost::multiprecision::cpp_int;

/// An element (m + n*sqrt(d))/r of the real quadratic field Q(sqrt(d)), in
/// canonical reduced form: r > 0, gcd(m, n, r) = 1, zero stored as (0,0,1).
/// d is a square-free integer >= 2 and is fixed per computation context;
/// combining values with different d is a hard error.
///
/// Values are immutable after construction and all operations are pure, so
/// they may be freely shared across threads.
class QuadNum {
public:
    QuadNum(BigInt m, BigInt n, BigInt r, int d);

    static QuadNum integer(BigInt value, int d) { return QuadNum(std::move(value), 0, 1, d); }
    static QuadNum rational(BigInt num, BigInt den, int d) {
        return QuadNum(std::move(num), 0, std::move(den), d);
    }
    static QuadNum sqrt_d(int d) { return QuadNum(0, 1, 1, d); }
    static QuadNum zero(int d) { return QuadNum(0, 0, 1, d); }

    const BigInt& m() const { return m_; }
    const BigInt& n() const { return n_; }
    const BigInt& r() const { return r_; }
    int d() const { return d_; }

    bool is_zero() const { return m_ == 0 && n_ == 0; }
    bool is_rational() const { return n_ == 0; }
    bool is_ring_element() const { return r_ == 1; }

    /// Exact sign of the real value; decided by integer case analysis only.
    int sign() const;

    QuadNum operator-() const;
    QuadNum operator+(const QuadNum& rhs) const;
    QuadNum operator-(const QuadNum& rhs) const;
    QuadNum operator*(const QuadNum& rhs) const;
    QuadNum operator/(const QuadNum& rhs) const;  // throws DivisionByZero

    bool operator==(const QuadNum& rhs) const {
        return d_ == rhs.d_ && m_ == rhs.m_ && n_ == rhs.n_ && r_ == rhs.r_;
    }
    /// Exact total order agreeing with the real embedding (sqrt(d) > 0).
    std::strong_ordering operator<=>(const QuadNum& rhs) const;

    QuadNum conjugate() const { return QuadNum(m_, -n_, r_, d_); }
    QuadNum abs() const { return sign() < 0 ? -*this : *this; }

    /// Exact floor of the real value.
    BigInt floor() const;

    /// Height max(|m|, |n|) of a ring element; throws NotRingElement if r != 1.
    BigInt psi() const;

    /// Approximate double value, for display hints only.  Never used in any
    /// decision procedure.
    double approx() const;

    /// Textual form re-parseable by the CLI expression grammar, e.g.
    /// "(3-sqrt(5))/2", "-2+sqrt(5)", "7/3", "0".
    std::string str() const;

private:
    void check_same_field(const QuadNum& rhs) const;

    BigInt m_;
    BigInt n_;
    BigInt r_;
    int d_;
};

/// Least positive integer f such that every f*value has denominator 1,
/// together with the rescaled values.
std::pair<BigInt, std::vector<QuadNum>> ring_rescale(std::span<const QuadNum> values);

/// Floor division with sign semantics of mathematical floor.
BigInt floor_div(const BigInt& a, const BigInt& b);

}  // namespace qiet
