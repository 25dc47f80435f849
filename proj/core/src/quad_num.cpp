#include "qiet/quad_num.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cmath>
#include <sstream>

namespace qiet {

namespace {

namespace mp = boost::multiprecision;

bool is_square_free(int d) {
    if (d < 2) return false;
    for (int p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0) return false;
    }
    return true;
}

BigInt gcd3(const BigInt& a, const BigInt& b, const BigInt& c) {
    return mp::gcd(mp::gcd(a, b), c);
}

}  // namespace

QuadNum::QuadNum(BigInt m, BigInt n, BigInt r, int d)
    : m_(std::move(m)), n_(std::move(n)), r_(std::move(r)), d_(d) {
    if (!is_square_free(d_)) {
        throw NonSquareFreeDiscriminant("discriminant must be a square-free integer >= 2, got " +
                                        std::to_string(d_));
    }
    if (r_ == 0) throw ZeroDenominator("denominator must be nonzero");
    if (r_ < 0) {
        m_ = -m_;
        n_ = -n_;
        r_ = -r_;
    }
    BigInt g = gcd3(mp::abs(m_), mp::abs(n_), r_);  // g == r when m == n == 0
    m_ /= g;
    n_ /= g;
    r_ /= g;
}

void QuadNum::check_same_field(const QuadNum& rhs) const {
    if (d_ != rhs.d_) {
        throw DiscriminantMismatch("cannot combine values over sqrt(" + std::to_string(d_) +
                                   ") and sqrt(" + std::to_string(rhs.d_) + ")");
    }
}

int QuadNum::sign() const {
    if (n_ == 0) return m_ == 0 ? 0 : (m_ > 0 ? 1 : -1);
    if (m_ == 0) return n_ > 0 ? 1 : -1;
    if (m_ > 0 && n_ > 0) return 1;
    if (m_ < 0 && n_ < 0) return -1;
    // Opposite signs: the value has the sign of the larger of m^2 and n^2*d.
    BigInt lhs = m_ * m_;
    BigInt rhs = n_ * n_ * d_;
    // lhs == rhs would mean sqrt(d) rational; impossible for square-free d >= 2.
    if (lhs > rhs) return m_ > 0 ? 1 : -1;
    return n_ > 0 ? 1 : -1;
}

QuadNum QuadNum::operator-() const { return QuadNum(-m_, -n_, r_, d_); }

QuadNum QuadNum::operator+(const QuadNum& rhs) const {
    check_same_field(rhs);
    return QuadNum(m_ * rhs.r_ + rhs.m_ * r_, n_ * rhs.r_ + rhs.n_ * r_, r_ * rhs.r_, d_);
}

QuadNum QuadNum::operator-(const QuadNum& rhs) const {
    check_same_field(rhs);
    return QuadNum(m_ * rhs.r_ - rhs.m_ * r_, n_ * rhs.r_ - rhs.n_ * r_, r_ * rhs.r_, d_);
}

QuadNum QuadNum::operator*(const QuadNum& rhs) const {
    check_same_field(rhs);
    return QuadNum(m_ * rhs.m_ + n_ * rhs.n_ * d_, m_ * rhs.n_ + n_ * rhs.m_, r_ * rhs.r_, d_);
}

QuadNum QuadNum::operator/(const QuadNum& rhs) const {
    check_same_field(rhs);
    if (rhs.is_zero()) throw DivisionByZero("division by zero");
    // 1/((m+n*sqrt(d))/r) = r*(m-n*sqrt(d)) / (m^2-n^2*d); the norm is nonzero
    // for nonzero values since d is square-free.
    BigInt norm = rhs.m_ * rhs.m_ - rhs.n_ * rhs.n_ * d_;
    QuadNum inv(rhs.r_ * rhs.m_, -rhs.r_ * rhs.n_, norm, d_);
    return *this * inv;
}

std::strong_ordering QuadNum::operator<=>(const QuadNum& rhs) const {
    check_same_field(rhs);
    if (*this == rhs) return std::strong_ordering::equal;
    int s = (*this - rhs).sign();
    return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;  // truncates toward zero
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

BigInt QuadNum::floor() const {
    // floor((m + n*sqrt(d))/r) = floor_div(m + floor(n*sqrt(d)), r).
    BigInt root_part;
    if (n_ == 0) {
        root_part = 0;
    } else if (n_ > 0) {
        root_part = mp::sqrt(BigInt(n_ * n_ * d_));
    } else {
        // n*sqrt(d) is negative and irrational, so floor = -isqrt(n^2 d) - 1.
        root_part = -mp::sqrt(BigInt(n_ * n_ * d_)) - 1;
    }
    return floor_div(m_ + root_part, r_);
}

BigInt QuadNum::psi() const {
    if (r_ != 1) {
        throw NotRingElement("height is defined on ring elements only (denominator 1), got " +
                             str());
    }
    BigInt am = mp::abs(m_);
    BigInt an = mp::abs(n_);
    return am > an ? am : an;
}

double QuadNum::approx() const {
    double dm = m_.convert_to<double>();
    double dn = n_.convert_to<double>();
    double dr = r_.convert_to<double>();
    return (dm + dn * std::sqrt(static_cast<double>(d_))) / dr;
}

std::string QuadNum::str() const {
    std::ostringstream out;
    if (n_ == 0) {
        out << m_;
        if (r_ != 1) out << "/" << r_;
        return out.str();
    }
    std::ostringstream num;
    bool wrap = false;
    if (m_ != 0) {
        num << m_;
        wrap = true;
        if (n_ > 0) num << "+";
    }
    if (n_ == 1) {
        num << "sqrt(" << d_ << ")";
    } else if (n_ == -1) {
        num << "-sqrt(" << d_ << ")";
    } else {
        num << n_ << "*sqrt(" << d_ << ")";
    }
    if (r_ == 1) return num.str();
    if (wrap) {
        out << "(" << num.str() << ")/" << r_;
    } else {
        out << num.str() << "/" << r_;
    }
    return out.str();
}

std::pair<BigInt, std::vector<QuadNum>> ring_rescale(std::span<const QuadNum> values) {
    if (values.empty()) throw Error("ring_rescale requires at least one value");
    BigInt factor = 1;
    for (const QuadNum& v : values) {
        factor = boost::multiprecision::lcm(factor, v.r());
    }
    std::vector<QuadNum> scaled;
    scaled.reserve(values.size());
    QuadNum f = QuadNum::integer(factor, values.front().d());
    for (const QuadNum& v : values) {
        QuadNum s = v * f;
        if (!s.is_ring_element()) throw InternalMismatch("ring_rescale produced a denominator");
        scaled.push_back(std::move(s));
    }
    return {factor, std::move(scaled)};
}

}  // namespace qiet
