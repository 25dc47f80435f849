#pragma once

#include <string>
#include <vector>

#include "qiet/iet.hpp"
#include "qiet/induction.hpp"

namespace qiet {

/// Simple continued fraction expansion.  Quadratic irrationals are eventually
/// periodic (Lagrange) and carry a nonempty minimal period; rational inputs
/// terminate and are flagged by an empty period instead of an error.
struct CfExpansion {
    std::vector<BigInt> preperiod;
    std::vector<BigInt> period;

    bool finite() const { return period.empty(); }

    /// "[a0; a1, (p1, p2)]" with the period parenthesized; finite expansions
    /// have no parenthesized block.
    std::string str() const;
};

/// Digits by exact floor/reciprocal steps; the period is detected by exact
/// repetition of a complete quotient, which yields the minimal period and
/// preperiod.
CfExpansion cf_expand(const QuadNum& x);

/// lambda_1 / lambda_2 of a 2-interval exchange transformation.
QuadNum iet_ratio(const Iet& t);

/// Which exchanged interval was the longer one (the datum that gets cut) at
/// each successive right Rauzy step of a 2-interval transformation.  The
/// run-length encoding of the trace follows the continued fraction digits of
/// iet_ratio.
enum class EuclidSide { Left, Right };
std::vector<EuclidSide> induction_trace(const Iet& t, int steps, long cap = kDefaultStepCap);

std::vector<BigInt> run_lengths(const std::vector<EuclidSide>& trace);

/// True iff the trace's run lengths follow the digit sequence of the
/// expansion: complete runs match digits exactly and a trailing incomplete
/// run stays below its digit.  A ratio below one entails a leading zero
/// digit, mirrored by the trace starting on the right side.
bool trace_matches_cf(const std::vector<EuclidSide>& trace, const CfExpansion& cf);

}  // namespace qiet
