#include "qiet/continued_fraction.hpp"

#include <map>
#include <sstream>

namespace qiet {

std::string CfExpansion::str() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < preperiod.size(); ++i) {
        if (i == 1) {
            out << "; ";
        } else if (i > 1) {
            out << ", ";
        }
        out << preperiod[i];
    }
    if (!period.empty()) {
        if (preperiod.size() == 1) {
            out << "; ";
        } else if (preperiod.size() > 1) {
            out << ", ";
        }
        out << "(";
        for (std::size_t i = 0; i < period.size(); ++i) {
            if (i) out << ", ";
            out << period[i];
        }
        out << ")";
    }
    out << "]";
    return out.str();
}

CfExpansion cf_expand(const QuadNum& x) {
    // Complete quotients of a quadratic irrational range over a finite set
    // (the standard Lagrange argument), so the scan below terminates; the
    // guard only protects against internal errors.
    constexpr long kMaxDigits = 1'000'000;
    std::vector<BigInt> digits;
    std::map<QuadNum, std::size_t> quotients;
    QuadNum current = x;
    for (long iter = 0; iter < kMaxDigits; ++iter) {
        auto [it, inserted] = quotients.emplace(current, digits.size());
        if (!inserted) {
            std::size_t start = it->second;
            return CfExpansion{{digits.begin(), digits.begin() + start},
                               {digits.begin() + start, digits.end()}};
        }
        BigInt digit = current.floor();
        digits.push_back(digit);
        QuadNum frac = current - QuadNum::integer(digit, current.d());
        if (frac.is_zero()) return CfExpansion{std::move(digits), {}};
        current = QuadNum::integer(1, current.d()) / frac;
    }
    throw Error("continued fraction expansion did not become periodic");
}

QuadNum iet_ratio(const Iet& t) {
    if (t.s() != 2) {
        throw NotTwoIntervals("length ratio requires a 2-interval transformation");
    }
    return t.lengths()[0] / t.lengths()[1];
}

std::vector<EuclidSide> induction_trace(const Iet& t, int steps, long cap) {
    if (t.s() != 2) {
        throw NotTwoIntervals("induction trace requires a 2-interval transformation");
    }
    std::vector<EuclidSide> trace;
    trace.reserve(steps);
    Iet current = t;
    for (int i = 0; i < steps; ++i) {
        auto cmp = current.lengths()[0] <=> current.lengths()[1];
        Iet next = rauzy_step(current, Letter::Psi, cap).transform;  // throws on rational ratio
        trace.push_back(cmp > 0 ? EuclidSide::Left : EuclidSide::Right);
        current = std::move(next);
    }
    return trace;
}

std::vector<BigInt> run_lengths(const std::vector<EuclidSide>& trace) {
    std::vector<BigInt> runs;
    for (std::size_t i = 0; i < trace.size(); ++i) {
        if (i == 0 || trace[i] != trace[i - 1]) {
            runs.push_back(1);
        } else {
            ++runs.back();
        }
    }
    return runs;
}

bool trace_matches_cf(const std::vector<EuclidSide>& trace, const CfExpansion& cf) {
    // Digit stream, skipping a leading zero digit (ratio < 1, trace starts on
    // the right side instead).
    auto digit_at = [&](std::size_t index) -> const BigInt* {
        if (index < cf.preperiod.size()) return &cf.preperiod[index];
        if (cf.period.empty()) return nullptr;
        return &cf.period[(index - cf.preperiod.size()) % cf.period.size()];
    };
    std::size_t offset = 0;
    if (const BigInt* first = digit_at(0); first != nullptr && *first == 0) offset = 1;
    if (!trace.empty()) {
        EuclidSide expected_start = offset == 0 ? EuclidSide::Left : EuclidSide::Right;
        if (trace.front() != expected_start) return false;
    }
    std::vector<BigInt> runs = run_lengths(trace);
    for (std::size_t i = 0; i < runs.size(); ++i) {
        const BigInt* digit = digit_at(offset + i);
        if (digit == nullptr) return false;  // trace outlived a finite expansion
        if (i + 1 < runs.size()) {
            if (runs[i] != *digit) return false;
        } else {
            if (runs[i] > *digit) return false;
        }
    }
    return true;
}

}  // namespace qiet
