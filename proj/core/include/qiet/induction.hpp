#pragma once

#include <string>
#include <vector>

#include "qiet/iet.hpp"

namespace qiet {

/// The two Rauzy inductions: psi operates on the largest right-admissible
/// interval Z(T), phi on the largest left-admissible interval Y(T).
/// Phi orders before Psi, matching the alphabetical order of the labels.
enum class Letter { Phi, Psi };

using InductionWord = std::vector<Letter>;

std::string letter_name(Letter letter);
std::string word_name(const InductionWord& word);  // "eps" for the empty word

/// A first-return transformation: the induced map, its domain (always kept in
/// the coordinates of the transformation it was induced from) and, for each
/// induced interval position, the exponent n with S(z) = T^n(z) on the piece.
struct InducedResult {
    Iet transform;
    SemiInterval domain;
    std::vector<long> return_exponents;
};

/// Z(T) = [left, max{gamma_s, delta_s}[, the largest right-admissible
/// semi-interval.  Throws ConnectionError when the two candidates coincide
/// (the degenerate case excluded by regularity).
SemiInterval z_domain(const Iet& t);

/// Y(T) = [min{gamma_2, delta_2}, right[, mirror of z_domain.
SemiInterval y_domain(const Iet& t);

/// First-return map of t on the subinterval, computed exactly by walking
/// interval pieces through the orbit until every piece lands back.  On an
/// admissible interval the result has exactly s intervals, on an arbitrary
/// one at most s+2.
InducedResult induce(const Iet& t, const SemiInterval& interval, long cap = kDefaultStepCap);

/// One step of right (psi) or left (phi) Rauzy induction.  The result is
/// computed twice, by the direct one-step combinatorial update and by the
/// generic first-return construction; any disagreement raises
/// InternalMismatch.
InducedResult rauzy_step(const Iet& t, Letter letter, long cap = kDefaultStepCap);

/// Left-to-right composition of Rauzy steps.  The domain is reported in the
/// coordinates of the original transformation, and the returned exponents are
/// first-return powers of the original transformation on the final domain
/// (the composed map equals the direct first-return map; this is verified
/// exactly on every call).
InducedResult apply_word(const Iet& t, const InductionWord& word, long cap = kDefaultStepCap);

struct AdmissibleEnumeration {
    /// Deduplicated admissible domains with the first word (in breadth-first
    /// shortlex order, Phi < Psi) reaching each; sorted by that word.
    std::vector<std::pair<InductionWord, SemiInterval>> items;
    /// Words skipped because a step degenerated (never happens on regular
    /// input).
    long connection_words = 0;
};

/// All domains D(chi(T)) for words |chi| <= max_len.  By the two-sided
/// induction theorems these are exactly the admissible semi-intervals
/// reachable at that word length.
AdmissibleEnumeration enumerate_admissible(const Iet& t, int max_len,
                                           long cap = kDefaultStepCap);

}  // namespace qiet
