#include "qiet/induction.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <utility>

namespace qiet {

std::string letter_name(Letter letter) { return letter == Letter::Psi ? "psi" : "phi"; }

std::string word_name(const InductionWord& word) {
    if (word.empty()) return "eps";
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) out += ".";
        out += letter_name(word[i]);
    }
    return out;
}

SemiInterval z_domain(const Iet& t) {
    if (t.s() < 2) throw std::invalid_argument("Rauzy induction requires at least two intervals");
    const QuadNum& gs = t.gamma(t.s() - 1);
    const QuadNum& ds = t.delta(t.s() - 1);
    if (gs == ds) {
        throw ConnectionError("right induction degenerates: gamma_s = delta_s = " + gs.str());
    }
    return SemiInterval(t.left(), gs > ds ? gs : ds);
}

SemiInterval y_domain(const Iet& t) {
    if (t.s() < 2) throw std::invalid_argument("Rauzy induction requires at least two intervals");
    const QuadNum& g2 = t.gamma(1);
    const QuadNum& d2 = t.delta(1);
    if (g2 == d2) {
        throw ConnectionError("left induction degenerates: gamma_2 = delta_2 = " + g2.str());
    }
    return SemiInterval(g2 < d2 ? g2 : d2, t.right());
}

namespace {

// A subinterval of the induction domain together with its current image
// under the orbit walk: cur = T^steps([src_lo, src_lo+len[).
struct Piece {
    QuadNum src_lo;
    QuadNum cur_lo;
    QuadNum len;
    long steps;
};

struct DonePiece {
    QuadNum src_lo;
    QuadNum img_lo;
    QuadNum len;
    long steps;
};

InducedResult assemble(const Iet& t, const SemiInterval& interval, std::vector<DonePiece> done) {
    std::sort(done.begin(), done.end(),
              [](const DonePiece& a, const DonePiece& b) { return a.src_lo < b.src_lo; });
    // The sources must tile the induction interval exactly.
    QuadNum expect = interval.lo;
    for (const DonePiece& p : done) {
        if (p.src_lo != expect) throw InternalMismatch("first-return pieces do not tile");
        expect = expect + p.len;
    }
    if (expect != interval.hi) throw InternalMismatch("first-return pieces do not tile");

    const int count = static_cast<int>(done.size());
    std::vector<int> order(count);
    for (int i = 0; i < count; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return done[a].img_lo < done[b].img_lo; });
    std::vector<int> perm(count);
    for (int rank = 0; rank < count; ++rank) perm[order[rank]] = rank;

    std::vector<QuadNum> lengths;
    std::vector<long> exponents;
    lengths.reserve(count);
    exponents.reserve(count);
    for (const DonePiece& p : done) {
        lengths.push_back(p.len);
        exponents.push_back(p.steps);
    }
    Iet transform(std::move(perm), std::move(lengths), interval.lo);
    // The constructor rederives the image slots; they must land exactly on
    // the observed first-return images.
    for (int i = 0; i < count; ++i) {
        if (transform.delta(transform.perm()[i]) != done[i].img_lo) {
            throw InternalMismatch("induced images do not partition the interval");
        }
    }
    return InducedResult{std::move(transform), interval, std::move(exponents)};
}

}  // namespace

InducedResult induce(const Iet& t, const SemiInterval& interval, long cap) {
    if (interval.lo < t.left() || interval.hi > t.right()) {
        throw OutOfDomain("induction interval " + interval.str() + " not inside " +
                          t.domain().str());
    }
    std::vector<DonePiece> done;
    std::deque<Piece> active;
    active.push_back(Piece{interval.lo, interval.lo, interval.length(), 0});
    long budget = cap;
    while (!active.empty()) {
        Piece piece = std::move(active.front());
        active.pop_front();
        if (--budget < 0) {
            throw StepCapExceeded("first-return walk exceeded " + std::to_string(cap) +
                                  " steps; transformation may not be minimal");
        }
        // Split the current image at the separation points it straddles, then
        // translate each fragment one step.
        QuadNum cur = piece.cur_lo;
        QuadNum src = piece.src_lo;
        const QuadNum cur_end = piece.cur_lo + piece.len;
        while (cur < cur_end) {
            int idx = t.interval_index(cur);
            const QuadNum& cut = idx + 1 < t.s() ? t.gamma(idx + 1) : t.right();
            QuadNum hi = cut < cur_end ? cut : cur_end;
            QuadNum frag_len = hi - cur;
            QuadNum img = cur + t.alpha(idx);
            QuadNum img_end = img + frag_len;
            long steps = piece.steps + 1;
            // Landing parts are those inside [interval.lo, interval.hi[; the
            // fragment may straddle either endpoint and is cut accordingly.
            struct Range {
                QuadNum lo;
                QuadNum hi;
            };
            std::vector<Range> splits;
            QuadNum a = img;
            if (a < interval.lo && interval.lo < img_end) {
                splits.push_back(Range{a, interval.lo});
                a = interval.lo;
            }
            if (a < interval.hi && interval.hi < img_end) {
                splits.push_back(Range{a, interval.hi});
                a = interval.hi;
            }
            splits.push_back(Range{a, img_end});
            for (const Range& range : splits) {
                QuadNum part_src = src + (range.lo - img);
                QuadNum part_len = range.hi - range.lo;
                if (range.lo >= interval.lo && range.hi <= interval.hi) {
                    done.push_back(DonePiece{std::move(part_src), range.lo, std::move(part_len),
                                             steps});
                } else {
                    active.push_back(Piece{std::move(part_src), range.lo, std::move(part_len),
                                           steps});
                }
            }
            src = src + frag_len;
            cur = hi;
        }
    }
    InducedResult result = assemble(t, interval, std::move(done));
    if (result.transform.s() > t.s() + 2) {
        throw InternalMismatch("induced transformation has more than s+2 intervals");
    }
    return result;
}

namespace {

InducedResult rauzy_right_fast(const Iet& t) {
    SemiInterval dom = z_domain(t);
    const int s = t.s();
    const int k = t.perm_inverse()[s - 1];  // interval landing in the last image slot
    const std::vector<QuadNum>& len = t.lengths();
    const std::vector<int>& perm = t.perm();
    std::vector<QuadNum> new_len;
    std::vector<int> new_perm(s);
    std::vector<long> exps(s, 1);
    new_len.reserve(s);
    if (t.gamma(s - 1) > t.delta(s - 1)) {
        // lambda_s < lambda_k: the last exchanged interval is cut off whole
        // and interval k splits; its tail first visits the cut-off interval.
        for (int i = 0; i < k; ++i) {
            new_len.push_back(len[i]);
            new_perm[i] = perm[i];
        }
        new_len.push_back(len[k] - len[s - 1]);
        new_perm[k] = s - 1;
        new_len.push_back(len[s - 1]);
        new_perm[k + 1] = perm[s - 1];
        exps[k + 1] = 2;
        for (int i = k + 1; i < s - 1; ++i) {
            new_len.push_back(len[i]);
            new_perm[i + 1] = perm[i];
        }
    } else {
        // lambda_s > lambda_k: the last image slot is cut off whole; interval
        // k now needs two steps and the image slot perm(s) splits.
        const int p = perm[s - 1];
        for (int i = 0; i < s - 1; ++i) {
            new_len.push_back(len[i]);
            if (i != k) new_perm[i] = perm[i] + (perm[i] > p ? 1 : 0);
        }
        new_perm[k] = p + 1;
        exps[k] = 2;
        new_len.push_back(len[s - 1] - len[k]);
        new_perm[s - 1] = p;
    }
    Iet transform(std::move(new_perm), std::move(new_len), dom.lo);
    return InducedResult{std::move(transform), dom, std::move(exps)};
}

InducedResult rauzy_left_fast(const Iet& t) {
    SemiInterval dom = y_domain(t);
    const int s = t.s();
    const int k = t.perm_inverse()[0];  // interval landing in the first image slot
    const std::vector<QuadNum>& len = t.lengths();
    const std::vector<int>& perm = t.perm();
    std::vector<QuadNum> new_len;
    std::vector<int> new_perm(s);
    std::vector<long> exps(s, 1);
    new_len.reserve(s);
    if (t.gamma(1) < t.delta(1)) {
        // lambda_1 < lambda_k: the first exchanged interval is cut off whole
        // and interval k splits; its head passes through the cut-off interval.
        for (int i = 1; i < k; ++i) {
            new_len.push_back(len[i]);
            new_perm[i - 1] = perm[i];
        }
        new_len.push_back(len[0]);
        new_perm[k - 1] = perm[0];
        exps[k - 1] = 2;
        new_len.push_back(len[k] - len[0]);
        new_perm[k] = 0;
        for (int i = k + 1; i < s; ++i) {
            new_len.push_back(len[i]);
            new_perm[i] = perm[i];
        }
    } else {
        // lambda_1 > lambda_k: the first image slot is cut off whole; interval
        // k needs two steps and the image slot perm(1) splits.
        const int p = perm[0];
        new_len.push_back(len[0] - len[k]);
        new_perm[0] = p;
        for (int i = 1; i < s; ++i) {
            new_len.push_back(len[i]);
            if (i != k) new_perm[i] = perm[i] - (perm[i] < p ? 1 : 0);
        }
        new_perm[k] = p - 1;
        exps[k] = 2;
    }
    Iet transform(std::move(new_perm), std::move(new_len), dom.lo);
    return InducedResult{std::move(transform), dom, std::move(exps)};
}

bool same_result(const InducedResult& a, const InducedResult& b) {
    return a.transform == b.transform && a.domain == b.domain &&
           a.return_exponents == b.return_exponents;
}

}  // namespace

InducedResult rauzy_step(const Iet& t, Letter letter, long cap) {
    InducedResult fast = letter == Letter::Psi ? rauzy_right_fast(t) : rauzy_left_fast(t);
    InducedResult slow = induce(t, fast.domain, cap);
    if (!same_result(fast, slow)) {
        throw InternalMismatch("Rauzy one-step update disagrees with the first-return map on " +
                               fast.domain.str());
    }
    return fast;
}

InducedResult apply_word(const Iet& t, const InductionWord& word, long cap) {
    Iet current = t;
    for (Letter letter : word) current = rauzy_step(current, letter, cap).transform;
    SemiInterval dom = current.domain();
    // By the two-sided induction theorem the composed transformation is the
    // first-return map of t on the final domain; recovering it that way
    // yields the return exponents and doubles as an exact cross-check.
    InducedResult direct = induce(t, dom, cap);
    if (!(direct.transform == current)) {
        throw InternalMismatch("word composition disagrees with direct first-return on " +
                               dom.str());
    }
    return direct;
}

AdmissibleEnumeration enumerate_admissible(const Iet& t, int max_len, long cap) {
    if (max_len < 0) throw std::invalid_argument("word length bound must be >= 0");
    AdmissibleEnumeration out;
    std::map<std::pair<QuadNum, QuadNum>, InductionWord> seen;
    struct Node {
        InductionWord word;
        Iet transform;
    };
    std::deque<Node> frontier;
    frontier.push_back(Node{{}, t});
    seen.emplace(std::make_pair(t.left(), t.right()), InductionWord{});
    while (!frontier.empty()) {
        Node node = std::move(frontier.front());
        frontier.pop_front();
        if (static_cast<int>(node.word.size()) == max_len) continue;
        for (Letter letter : {Letter::Phi, Letter::Psi}) {
            InductionWord word = node.word;
            word.push_back(letter);
            try {
                Iet next = rauzy_step(node.transform, letter, cap).transform;
                auto key = std::make_pair(next.left(), next.right());
                // Equal domains carry equal first-return maps, so an already
                // seen domain roots an already explored subtree.
                if (seen.emplace(std::move(key), word).second) {
                    frontier.push_back(Node{std::move(word), std::move(next)});
                }
            } catch (const ConnectionError&) {
                ++out.connection_words;
            }
        }
    }
    out.items.reserve(seen.size());
    for (auto& [key, word] : seen) {
        out.items.emplace_back(std::move(word), SemiInterval(key.first, key.second));
    }
    std::sort(out.items.begin(), out.items.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    return out;
}

}  // namespace qiet
