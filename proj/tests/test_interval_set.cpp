#include <doctest.h>

#include "qiet/interval_set.hpp"
#include "support/fixtures.hpp"

using namespace qiet;
using qiet::testing::qn;

namespace {

const QuadNum kAlpha = qn(3, -1, 2, 5);
const QuadNum kZero = QuadNum::zero(5);
const QuadNum kOne = QuadNum::integer(1, 5);

IntervalSet random_set(std::mt19937_64& rng, int d, const QuadNum& lo, const QuadNum& hi,
                       int max_parts = 3) {
    std::uniform_int_distribution<int> count(0, max_parts);
    std::uniform_int_distribution<long> num(0, 64);
    std::vector<SemiInterval> parts;
    int parts_wanted = count(rng);
    for (int i = 0; i < parts_wanted; ++i) {
        long a = num(rng), b = num(rng);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        QuadNum width = hi - lo;
        parts.emplace_back(lo + width * QuadNum::rational(a, 64, d),
                           lo + width * QuadNum::rational(b, 64, d));
    }
    return IntervalSet::from_parts(std::move(parts), d);
}

}  // namespace

TEST_CASE("semi-interval requires lo < hi") {
    CHECK_THROWS_AS(SemiInterval(kOne, kZero), EmptyInterval);
    CHECK_THROWS_AS(SemiInterval(kOne, kOne), EmptyInterval);
    SemiInterval i(kZero, kAlpha);
    CHECK(i.contains(kZero));
    CHECK(!i.contains(kAlpha));
    CHECK(!i.contains_open(kZero));
}

TEST_CASE("adjacent parts merge") {
    IntervalSet u = set_union(IntervalSet(SemiInterval(kZero, kAlpha)),
                              IntervalSet(SemiInterval(kAlpha, kOne)));
    CHECK(u.part_count() == 1);
    CHECK(u == IntervalSet(SemiInterval(kZero, kOne)));
}

TEST_CASE("intersection with exact endpoint comparison") {
    // [0, 1-a[ and [1-2a, 1[ meet in [1-2a, 1-a[.
    IntervalSet a(SemiInterval(kZero, kOne - kAlpha));
    IntervalSet b(SemiInterval(kOne - kAlpha - kAlpha, kOne));
    IntervalSet expected(SemiInterval(kOne - kAlpha - kAlpha, kOne - kAlpha));
    CHECK(set_intersect(a, b) == expected);
}

TEST_CASE("complement inside an ambient interval") {
    IntervalSet ends = set_union(IntervalSet(SemiInterval(kZero, kAlpha)),
                                 IntervalSet(SemiInterval(kOne - kAlpha, kOne)));
    IntervalSet middle(SemiInterval(kAlpha, kOne - kAlpha));
    CHECK(complement_in(ends, SemiInterval(kZero, kOne)) == middle);

    IntervalSet outside(SemiInterval(kZero, kOne + kOne));
    CHECK_THROWS_AS(complement_in(outside, SemiInterval(kZero, kOne)), NotContained);
}

TEST_CASE("measure") {
    CHECK(measure(IntervalSet(SemiInterval(kZero, kOne - kAlpha))) == qn(-1, 1, 2, 5));
    CHECK(measure(IntervalSet(5)).is_zero());
    IntervalSet ends = set_union(IntervalSet(SemiInterval(kZero, kAlpha)),
                                 IntervalSet(SemiInterval(kOne - kAlpha, kOne)));
    CHECK(measure(ends) == qn(3, -1, 1, 5));  // 2a = 3 - sqrt(5)
}

TEST_CASE("boundary") {
    IntervalSet single(SemiInterval(kZero, kOne - kAlpha));
    CHECK(boundary(single) == std::vector<QuadNum>{kZero, kOne - kAlpha});
    IntervalSet ends = set_union(IntervalSet(SemiInterval(kZero, kAlpha)),
                                 IntervalSet(SemiInterval(kOne - kAlpha, kOne)));
    CHECK(boundary(ends) == std::vector<QuadNum>{kZero, kAlpha, kOne - kAlpha, kOne});
    CHECK(boundary(IntervalSet(5)).empty());
}

TEST_CASE("translation") {
    IntervalSet a(SemiInterval(kZero, kAlpha));
    CHECK(translate(a, kOne - kAlpha) == IntervalSet(SemiInterval(kOne - kAlpha, kOne)));
    CHECK(translate(a, kZero) == a);

    std::mt19937_64 rng(7101);
    for (int i = 0; i < 200; ++i) {
        IntervalSet s = random_set(rng, 5, kZero, kOne);
        QuadNum t = qiet::testing::random_quadnum(rng, 5);
        CHECK(measure(translate(s, t)) == measure(s));
    }
}

TEST_CASE("canonical form is idempotent") {
    std::mt19937_64 rng(7102);
    for (int i = 0; i < 200; ++i) {
        IntervalSet s = random_set(rng, 3, QuadNum::zero(3), QuadNum::integer(1, 3));
        IntervalSet again = IntervalSet::from_parts(s.parts(), s.d());
        CHECK(again == s);
        for (std::size_t p = 0; p + 1 < s.parts().size(); ++p) {
            CHECK(s.parts()[p].hi < s.parts()[p + 1].lo);
        }
    }
}

TEST_CASE("De Morgan laws inside a fixed ambient interval") {
    std::mt19937_64 rng(7103);
    SemiInterval ambient(QuadNum::zero(2), QuadNum::integer(1, 2));
    for (int i = 0; i < 300; ++i) {
        IntervalSet a = random_set(rng, 2, ambient.lo, ambient.hi);
        IntervalSet b = random_set(rng, 2, ambient.lo, ambient.hi);
        IntervalSet lhs = complement_in(set_union(a, b), ambient);
        IntervalSet rhs = set_intersect(complement_in(a, ambient), complement_in(b, ambient));
        CHECK(lhs == rhs);
        IntervalSet lhs2 = complement_in(set_intersect(a, b), ambient);
        IntervalSet rhs2 = set_union(complement_in(a, ambient), complement_in(b, ambient));
        CHECK(lhs2 == rhs2);
    }
}

TEST_CASE("measure is additive: |A u B| + |A n B| = |A| + |B|") {
    std::mt19937_64 rng(7104);
    for (int i = 0; i < 300; ++i) {
        int d = qiet::testing::random_d(rng);
        QuadNum zero = QuadNum::zero(d);
        QuadNum one = QuadNum::integer(1, d);
        IntervalSet a = random_set(rng, d, zero, one);
        IntervalSet b = random_set(rng, d, zero, one);
        QuadNum lhs = measure(set_union(a, b)) + measure(set_intersect(a, b));
        CHECK(lhs == measure(a) + measure(b));
        CHECK(set_subtract(a, b) == set_subtract(a, set_intersect(a, b)));
    }
}
