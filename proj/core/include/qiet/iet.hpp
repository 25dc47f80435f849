#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qiet/interval_set.hpp"
#include "qiet/quad_num.hpp"

namespace qiet {

/// Default budget for orbit scans.  Minimality guarantees the scans
/// terminate; the cap converts pathological inputs into StepCapExceeded.
inline constexpr long kDefaultStepCap = 1'000'000;

/// Exact orbit coincidence T^k(gamma_i) = gamma_j between separation points
/// (1-based positions, both >= 2, (i,k) != (j,0)).  A witness refutes
/// regularity.
struct ConnectionWitness {
    int i;
    int j;
    long k;

    std::string str() const;
};

/// A division point T^k(gamma) together with its window coordinates: which
/// separation point generated it and at which orbit exponent.
struct DivisionPoint {
    QuadNum point;
    int sep_index;  // 1-based index of the generating separation point
    long k;         // point == T^k(gamma_{sep_index}), -rho^- <= k < rho^+
};

/// An s-interval exchange transformation: the domain [left, left+sum(lengths)[
/// is split at gamma_1 < ... < gamma_s into semi-intervals I_1..I_s, and I_i
/// is translated onto the image slot perm(i), so that the images partition the
/// domain again.  T(z) = z + alpha_i for z in I_i.
///
/// Positions and image slots are 0-based internally; the paper-facing 1-based
/// convention appears only in I/O and in ConnectionWitness.
///
/// Instances are immutable; every member function is const and pure.
class Iet {
public:
    /// perm maps domain position i to image slot perm[i] (0-based bijection).
    Iet(std::vector<int> perm, std::vector<QuadNum> lengths, QuadNum left);

    int s() const { return static_cast<int>(lengths_.size()); }
    int d() const { return left_.d(); }
    const std::vector<int>& perm() const { return perm_; }
    const std::vector<int>& perm_inverse() const { return perm_inv_; }
    const std::vector<QuadNum>& lengths() const { return lengths_; }
    const QuadNum& left() const { return left_; }
    const QuadNum& right() const { return right_; }
    SemiInterval domain() const { return SemiInterval(left_, right_); }
    QuadNum total_length() const { return right_ - left_; }

    /// Left endpoint of the i-th exchanged interval (0-based).
    const QuadNum& gamma(int i) const { return gammas_[i]; }
    /// Left endpoint of the j-th image slot (0-based, sorted ascending).
    const QuadNum& delta(int j) const { return deltas_[j]; }
    /// Translation value of the i-th exchanged interval.
    const QuadNum& alpha(int i) const { return alphas_[i]; }

    const std::vector<QuadNum>& separation_points() const { return gammas_; }

    /// 0-based index of the exchanged interval containing z; OutOfDomain if z
    /// is outside [left, right[.
    int interval_index(const QuadNum& z) const;
    /// 0-based index of the image slot containing z.
    int slot_index(const QuadNum& z) const;

    QuadNum apply(const QuadNum& z) const;
    QuadNum apply_inverse(const QuadNum& z) const;
    /// T^k(z) for any signed k.
    QuadNum iterate(const QuadNum& z, long k) const;

    Iet inverse() const;
    /// Combinatorial conjugate by x -> left+right-x: reversed lengths and
    /// tau.perm.tau permutation, on the same domain.
    Iet reversed() const;
    Iet scaled(const QuadNum& factor) const;
    Iet translated(const QuadNum& offset) const;

    IntervalSet image(const IntervalSet& a) const;
    IntervalSet preimage(const IntervalSet& a) const;

    /// Scans forward orbits of the nonzero separation points for exact hits
    /// on separation points, up to depth k <= n.  Absence of a witness is a
    /// semi-decision only.
    std::optional<ConnectionWitness> find_connection(long n) const;

    /// rho^+_{I,T}(z) = min{ n > 0 : T^n(z) in ]u,v[ } for I = [u,v[.
    long rho_plus(const SemiInterval& interval, const QuadNum& z,
                  long cap = kDefaultStepCap) const;
    /// rho^-_{I,T}(z) = min{ n >= 0 : T^-n(z) in ]u,v[ }; interior points
    /// give 0.
    long rho_minus(const SemiInterval& interval, const QuadNum& z,
                   long cap = kDefaultStepCap) const;

    /// Neighbours { T^k(z) : -rho^- <= k < rho^+ }, sorted ascending.
    std::vector<QuadNum> neighbors(const SemiInterval& interval, const QuadNum& z,
                                   long cap = kDefaultStepCap) const;

    /// Division points Div(I,T), the union of the neighbour sets of all
    /// separation points, sorted ascending.
    std::vector<QuadNum> division_points(const SemiInterval& interval,
                                         long cap = kDefaultStepCap) const;
    /// Same set with window annotations; a point appears once per (gamma, k)
    /// pair producing it.
    std::vector<DivisionPoint> division_points_annotated(const SemiInterval& interval,
                                                         long cap = kDefaultStepCap) const;

    /// True iff both endpoints of the interval lie in Div(I,T) u {right}.
    bool is_admissible(const SemiInterval& interval, long cap = kDefaultStepCap) const;

    /// D_{m,n}(T) = union of T^i(Sep(T)) for -m+1 <= i <= n, sorted; empty
    /// when m = n = 0.
    std::vector<QuadNum> dmn(long m, long n) const;
    /// D_n(T) = D_{n,0}(T).
    std::vector<QuadNum> dn(long n) const { return dmn(n, 0); }

    enum class Family { U, V };
    /// U_{m,n}: semi-intervals partitioned by D_{m,n} (consecutive points);
    /// V_{m,n}: semi-intervals with both endpoints in D_{m,n}.  Both families
    /// are taken over D_{m,n} u {left, right} so that V_{0,0} = {[l,r[}.
    std::vector<SemiInterval> families(long m, long n, Family kind) const;

    bool operator==(const Iet& rhs) const {
        return perm_ == rhs.perm_ && lengths_ == rhs.lengths_ && left_ == rhs.left_;
    }

private:
    std::vector<int> perm_;
    std::vector<int> perm_inv_;
    std::vector<QuadNum> lengths_;
    QuadNum left_;
    QuadNum right_;
    std::vector<QuadNum> gammas_;
    std::vector<QuadNum> deltas_;
    std::vector<QuadNum> alphas_;
};

}  // namespace qiet
