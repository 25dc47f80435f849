#include "qiet/complexity.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qiet {

RingNormalizedIet ring_normalize(const Iet& t) {
    std::vector<QuadNum> data;
    data.reserve(t.s() + 1);
    data.push_back(t.left());
    for (const QuadNum& len : t.lengths()) data.push_back(len);
    auto [factor, scaled] = ring_rescale(data);
    std::vector<QuadNum> lengths(scaled.begin() + 1, scaled.end());
    return RingNormalizedIet{Iet(t.perm(), std::move(lengths), scaled.front()), factor};
}

BigInt psi_set(const RingNormalizedIet& t, const IntervalSet& s) {
    if (s.empty()) throw EmptyInterval("height of the empty set is undefined");
    if (s.d() != t.base.d()) throw DiscriminantMismatch("set over a different field");
    BigInt best = 0;
    for (const QuadNum& z : boundary(s)) best = std::max(best, z.psi());
    return best;
}

QuadNum pi_reduced(const RingNormalizedIet& t, const IntervalSet& s) {
    return measure(s) * QuadNum::integer(psi_set(t, s), t.base.d());
}

BigInt u_constant(const RingNormalizedIet& t) {
    BigInt best = t.base.right().psi();
    for (int i = 0; i < t.base.s(); ++i) {
        best = std::max(best, t.base.gamma(i).psi());
        best = std::max(best, t.base.delta(i).psi());
        best = std::max(best, t.base.alpha(i).psi());
    }
    return best;
}

namespace {

// Incremental union of interval sets with merge-on-insert, so that long
// image chains stay near-linear instead of rebuilding the union each step.
class UnionAccumulator {
public:
    explicit UnionAccumulator(const IntervalSet& initial) : d_(initial.d()) { add(initial); }

    void add(const IntervalSet& s) {
        for (const SemiInterval& p : s.parts()) add_part(p.lo, p.hi);
    }

    bool contains(const IntervalSet& s) const {
        for (const SemiInterval& p : s.parts()) {
            auto it = parts_.upper_bound(p.lo);
            if (it == parts_.begin()) return false;
            --it;
            if (it->second < p.hi) return false;
        }
        return true;
    }

    IntervalSet value() const {
        std::vector<SemiInterval> parts;
        parts.reserve(parts_.size());
        for (const auto& [lo, hi] : parts_) parts.emplace_back(lo, hi);
        return IntervalSet::from_parts(std::move(parts), d_);
    }

private:
    void add_part(QuadNum lo, QuadNum hi) {
        auto it = parts_.upper_bound(lo);
        if (it != parts_.begin()) {
            auto prev = std::prev(it);
            if (prev->second >= lo) {
                lo = prev->first;
                if (prev->second > hi) hi = prev->second;
                it = parts_.erase(prev);
            }
        }
        while (it != parts_.end() && it->first <= hi) {
            if (it->second > hi) hi = it->second;
            it = parts_.erase(it);
        }
        parts_.emplace(std::move(lo), std::move(hi));
    }

    int d_;
    std::map<QuadNum, QuadNum> parts_;  // lo -> hi, disjoint, non-adjacent
};

}  // namespace

ReturnTimes return_times(const Iet& t, const IntervalSet& s, long cap) {
    if (s.empty()) throw EmptyInterval("return times of the empty set are undefined");
    ReturnTimes out{0, 0, 0, 0};

    for (int direction : {+1, -1}) {
        UnionAccumulator seen(s);
        IntervalSet current = s;
        long rho = 0, sigma = 0;
        for (long n = 1; n <= cap; ++n) {
            IntervalSet next = direction > 0 ? t.image(current) : t.preimage(current);
            if (sigma == 0 && !set_intersect(next, s).empty()) sigma = n;
            if (seen.contains(next)) {
                rho = n;
                break;
            }
            seen.add(next);
            current = std::move(next);
        }
        if (rho == 0 || sigma == 0) {
            throw StepCapExceeded("return-time scan exceeded " + std::to_string(cap) + " steps");
        }
        if (direction > 0) {
            out.rho_plus = rho;
            out.sigma_plus = sigma;
        } else {
            out.rho_minus = rho;
            out.sigma_minus = sigma;
        }
    }
    return out;
}

bool covering_check(const Iet& t, const IntervalSet& s, long cap) {
    ReturnTimes times = return_times(t, s, cap);
    IntervalSet domain_set(t.domain());
    for (int direction : {+1, -1}) {
        long rho = direction > 0 ? times.rho_plus : times.rho_minus;
        UnionAccumulator acc(s);
        IntervalSet current = s;
        for (long i = 1; i < rho; ++i) {
            current = direction > 0 ? t.image(current) : t.preimage(current);
            acc.add(current);
        }
        if (!(acc.value() == domain_set)) return false;
    }
    return true;
}

bool orbit_gap_check(const RingNormalizedIet& t, const QuadNum& z, long max_power) {
    if (!z.is_ring_element()) throw NotRingElement("orbit gap check needs a ring element");
    const int d = t.base.d();
    BigInt u = u_constant(t);
    QuadNum sqrt_d = QuadNum::sqrt_d(d);
    QuadNum one = QuadNum::integer(1, d);
    QuadNum w = z;
    for (long n = 1; n <= max_power; ++n) {
        w = t.base.apply(w);
        QuadNum diff = w - z;
        if (diff.is_zero()) continue;
        // |T^n(z) - z| > 1/(2*sqrt(d)*u*n), compared exactly as
        // 2*u*n*sqrt(d)*|diff| > 1.
        QuadNum bound = QuadNum::integer(BigInt(2) * u * n, d) * sqrt_d * diff.abs();
        if (!(bound > one)) return false;
    }
    return true;
}

SurveyTable pi_survey(const Iet& t, int max_word_len, long cap) {
    RingNormalizedIet normalized = ring_normalize(t);
    AdmissibleEnumeration domains = enumerate_admissible(normalized.base, max_word_len, cap);
    SurveyTable table{std::move(normalized), {}};
    table.rows.reserve(domains.items.size());
    for (auto& [word, domain] : domains.items) {
        IntervalSet as_set(domain);
        SurveyRow row{std::move(word),
                      domain,
                      measure(as_set),
                      psi_set(table.normalized, as_set),
                      pi_reduced(table.normalized, as_set),
                      return_times(table.normalized.base, as_set, cap)};
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::string survey_tsv(const SurveyTable& table) {
    std::ostringstream out;
    out << "word\tdomain\tmeasure\tpsi\tpi\trho_plus\trho_minus\tsigma_plus\tsigma_minus\n";
    for (const SurveyRow& row : table.rows) {
        out << word_name(row.word) << "\t" << row.domain.str() << "\t" << row.measure.str()
            << "\t" << row.psi << "\t" << row.pi.str() << "\t" << row.times.rho_plus << "\t"
            << row.times.rho_minus << "\t" << row.times.sigma_plus << "\t"
            << row.times.sigma_minus << "\n";
    }
    return out.str();
}

}  // namespace qiet
