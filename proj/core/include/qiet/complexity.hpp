#pragma once

#include <string>
#include <vector>

#include "qiet/iet.hpp"
#include "qiet/induction.hpp"

namespace qiet {

/// A transformation rescaled by a positive integer so that every boundary
/// datum (left endpoint, separation points, image slots, translations) lies
/// in the ring Z[sqrt(d)].  All arithmetic-height measurements are taken in
/// these coordinates.
struct RingNormalizedIet {
    Iet base;
    BigInt factor;
};

RingNormalizedIet ring_normalize(const Iet& t);

/// Height Psi(S) = max Psi(z) over the boundary points of S; requires ring
/// element endpoints and a nonempty set.
BigInt psi_set(const RingNormalizedIet& t, const IntervalSet& s);

/// Reduced complexity Pi(S) = |S| * Psi(S).
QuadNum pi_reduced(const RingNormalizedIet& t, const IntervalSet& s);

/// Explicit constant u with |Psi(T(S)) - Psi(S)| <= u, Psi(T(z) - z) <= u,
/// and Psi(gamma), Psi(T(gamma)) <= u: the maximum height over the defining
/// data of the transformation.
BigInt u_constant(const RingNormalizedIet& t);

/// Maximal/minimal forward and backward return times of a set.
struct ReturnTimes {
    long rho_plus;
    long rho_minus;
    long sigma_plus;
    long sigma_minus;
};

/// rho+-(S) = min{ n >= 1 : T^+-n(S) inside the union of the n previous
/// forward/backward images }, sigma+-(S) = min{ n >= 1 : T^+-n(S) meets S }.
/// Computed exactly with interval-set algebra.
ReturnTimes return_times(const Iet& t, const IntervalSet& s, long cap = kDefaultStepCap);

/// Exact check of [l,r[ = union of T^i(S), 0 <= i < rho+(S), and of the
/// mirrored backward identity.
bool covering_check(const Iet& t, const IntervalSet& s, long cap = kDefaultStepCap);

/// Verifies, for 1 <= n <= max_power, that T^n(z) = z or
/// |T^n(z) - z| > c/n with c = 1/(2*sqrt(d)*u(T)), by exact comparison.
bool orbit_gap_check(const RingNormalizedIet& t, const QuadNum& z, long max_power);

struct SurveyRow {
    InductionWord word;
    SemiInterval domain;
    QuadNum measure;
    BigInt psi;
    QuadNum pi;
    ReturnTimes times;
};

struct SurveyTable {
    RingNormalizedIet normalized;
    std::vector<SurveyRow> rows;  // sorted by word, shortlex
};

/// Statistics of every admissible semi-interval reachable by words of length
/// <= max_word_len, measured in ring-normalized original coordinates.
SurveyTable pi_survey(const Iet& t, int max_word_len, long cap = kDefaultStepCap);

/// Fixed columns: word, domain, |J|, Psi(J), Pi(J), rho+, rho-, sigma+,
/// sigma-.
std::string survey_tsv(const SurveyTable& table);

}  // namespace qiet
