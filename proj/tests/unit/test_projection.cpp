#include "nubex/projection.hpp"

#include "nubex/base_pair.hpp"

#include "doctest.h"

#include <random>
#include <stdexcept>
#include <vector>

using namespace nubex;

namespace {

const BasePair kWide(Rational(3, 4), Rational(2, 3));      // overlap [2/3, 3/2], I = [0, 2]
const BasePair kThin(Rational(11, 20), Rational(51, 100)); // both uniqueness regimes

std::mt19937_64& rng() {
    static std::mt19937_64 r(29);
    return r;
}

Rational random_point(const BasePair& b) {
    const long j = static_cast<long>(rng()() % 1025);
    return Rational(j, 1024) * b.interval_max();
}

DigitWord random_word(std::size_t max_len) {
    std::vector<int> d;
    const std::size_t len = rng()() % (max_len + 1);
    for (std::size_t i = 0; i < len; ++i) d.push_back(static_cast<int>(rng()() & 1));
    return DigitWord(d);
}

BasePair random_pair() {
    while (true) {
        const long p1 = 201 + static_cast<long>(rng()() % 198);  // beta1 in (1/2, 1)
        const long p0 = p1 + static_cast<long>(rng()() % (400 - p1));
        if (p0 >= 400) continue;
        return BasePair(Rational(p0, 400), Rational(p1, 400));
    }
}

}  // namespace

TEST_CASE("base pair validation names the violated constraint") {
    CHECK_THROWS_WITH_AS(BasePair(Rational(3, 4), Rational(1, 2)),
                         doctest::Contains("beta1 > 1/2"), std::domain_error);
    CHECK_THROWS_WITH_AS(BasePair(Rational(3, 5), Rational(2, 3)),
                         doctest::Contains("beta1 <= beta0"), std::domain_error);
    CHECK_THROWS_WITH_AS(BasePair(Rational(1), Rational(2, 3)),
                         doctest::Contains("beta0 < 1"), std::domain_error);
    CHECK_THROWS_AS(BasePair(Rational(5, 4), Rational(3, 4)), std::domain_error);
}

TEST_CASE("derived interval data") {
    CHECK(kWide.interval_max() == Rational(2));
    CHECK(kWide.domain() == Interval::closed(Rational(0), Rational(2)));
    CHECK(kWide.overlap() == Interval::closed(Rational(2, 3), Rational(3, 2)));
    CHECK(kThin.interval_max() == Rational(51, 49));
    CHECK(kThin.overlap() == Interval::closed(Rational(51, 100), Rational(561, 980)));
    CHECK(kWide.in_domain(Rational(2)));
    CHECK(!kWide.in_domain(Rational(201, 100)));
    CHECK_THROWS_AS(kWide.require_in_domain(Rational(-1, 10), "test"), std::domain_error);
}

TEST_CASE("regime classification on the two reference pairs") {
    const RegimeReport wide = regime_report(kWide);
    CHECK(wide.continuum_all);          // (2/3)^2 + 3/4 = 43/36 > 1
    CHECK(!wide.countable_unique);
    CHECK(!wide.uncountable_unique);

    const RegimeReport thin = regime_report(kThin);
    CHECK(!thin.continuum_all);         // (51/100)^2 + 11/20 = 8101/10000 < 1
    CHECK(thin.countable_unique);       // 11/20 * 151/100 = 1661/2000 < 1
    CHECK(thin.uncountable_unique);     // 11/20 * (1 + 102/100 - 561/2000) < 1
}

TEST_CASE("regime implications hold across random pairs") {
    for (int i = 0; i < 300; ++i) {
        const BasePair b = random_pair();
        const RegimeReport r = regime_report(b);  // throws if inconsistent
        if (r.uncountable_unique) CHECK(r.countable_unique);
        if (r.continuum_all) CHECK(!r.countable_unique);
    }
}

TEST_CASE("contractions apply and invert exactly") {
    CHECK(apply_contraction(kWide, 0, Rational(1)) == Rational(3, 4));
    CHECK(apply_contraction(kWide, 1, Rational(1)) == Rational(4, 3));
    CHECK_THROWS_AS(apply_contraction(kWide, 0, Rational(5, 2)), std::domain_error);
    CHECK_THROWS_AS(apply_contraction(kWide, 2, Rational(1)), std::invalid_argument);

    CHECK(invert_contraction(kWide, 1, Rational(4, 3)) == Rational(1));
    CHECK_THROWS_AS(invert_contraction(kWide, 1, Rational(1, 2)), std::domain_error);  // below beta1
    CHECK_THROWS_AS(invert_contraction(kWide, 0, Rational(8, 5)), std::domain_error);  // above beta0*max

    for (int i = 0; i < 200; ++i) {
        const BasePair b = random_pair();
        const Rational x = random_point(b);
        for (int d : {0, 1}) {
            const Rational y = apply_contraction(b, d, x);
            CHECK(b.in_domain(y));
            CHECK(invert_contraction(b, d, y) == x);
        }
    }
}

TEST_CASE("composed affine maps match their per-digit definition") {
    for (int i = 0; i < 200; ++i) {
        const BasePair b = random_pair();
        const DigitWord w = random_word(12);

        AffineWord acc;
        for (int d : w) acc.append(b, d);

        const auto c = digit_counts(w, w.size());
        CHECK(acc.weight == Rational::pow(b.beta0(), c.zeros) * Rational::pow(b.beta1(), c.ones));

        // offset = value of the word followed by the zero tail
        Rational expected(0);
        Rational running(1);
        for (std::size_t k = 0; k < w.size(); ++k) {
            if (w[k] == 1) expected += running * b.beta1();
            running *= (w[k] == 0 ? b.beta0() : b.beta1());
        }
        CHECK(acc.offset == expected);

        // composing against a point equals applying the digits one at a time
        const Rational x = random_point(b);
        Rational direct = x;
        for (std::size_t k = w.size(); k-- > 0;) direct = apply_contraction(b, w[k], direct);
        CHECK(acc.eval(x) == direct);
    }
}

TEST_CASE("cylinder intervals") {
    CHECK(cylinder_interval(kWide, DigitWord{0}) == Interval::closed(Rational(0), Rational(3, 2)));
    CHECK(cylinder_interval(kWide, DigitWord{1}) == Interval::closed(Rational(2, 3), Rational(2)));
    CHECK(cylinder_interval(kWide, DigitWord{}) == kWide.domain());

    for (int i = 0; i < 200; ++i) {
        const BasePair b = random_pair();
        DigitWord w = random_word(10);
        const Interval cyl = cylinder_interval(b, w);
        CHECK(cyl.lo_closed());
        CHECK(cyl.hi_closed());

        // width = weight * |I| <= beta0^|w| * |I|
        const auto c = digit_counts(w, w.size());
        const Rational weight = Rational::pow(b.beta0(), c.zeros) * Rational::pow(b.beta1(), c.ones);
        CHECK(cyl.width() == weight * b.interval_max());
        CHECK(cyl.width() <= Rational::pow(b.beta0(), w.size()) * b.interval_max());

        // extending the word nests the cylinder
        const Interval parent = cyl;
        w.push_back(static_cast<int>(rng()() & 1));
        const Interval child = cylinder_interval(b, w);
        CHECK(intersect(parent, child) == child);
    }
}

TEST_CASE("prefix plus remainder reconstructs the value") {
    CHECK(project_prefix_with_remainder(kWide, DigitWord{1, 0, 1}, Rational(0)) == Rational(1));
    CHECK_THROWS_AS(project_prefix_with_remainder(kWide, DigitWord{1}, Rational(-1)), std::domain_error);

    for (int i = 0; i < 100; ++i) {
        const BasePair b = random_pair();
        const DigitWord w = random_word(15);
        const Rational r = random_point(b);
        const Rational v = project_prefix_with_remainder(b, w, r);
        CHECK(cylinder_interval(b, w).contains(v));
    }
}

TEST_CASE("truncation sandwiches the exact value") {
    const EventuallyPeriodic s = EventuallyPeriodic::parse("101(0)");
    const auto t3 = project_truncated(kWide, s, 3);
    CHECK(t3.value == Rational(1));
    CHECK(t3.tail_bound == Rational(2, 3));  // (2/3)^2*(3/4) * 2

    std::mt19937_64& r = rng();
    for (int i = 0; i < 150; ++i) {
        const BasePair b = random_pair();
        std::vector<int> pre, per;
        const std::size_t plen = r() % 4;
        const std::size_t vlen = 1 + r() % 4;
        for (std::size_t k = 0; k < plen; ++k) pre.push_back(static_cast<int>(r() & 1));
        for (std::size_t k = 0; k < vlen; ++k) per.push_back(static_cast<int>(r() & 1));
        const EventuallyPeriodic seq{DigitWord(pre), DigitWord(per)};
        const Rational exact = project_eventually_periodic(b, seq);
        for (std::size_t n : {std::size_t(0), std::size_t(1), std::size_t(7), std::size_t(23)}) {
            const auto t = project_truncated(b, seq, n);
            CHECK(exact >= t.value);
            CHECK(exact <= t.value + t.tail_bound);
        }
    }
}

TEST_CASE("eventually periodic projection is representation independent") {
    // same digit stream, three spellings
    const Rational v1 = project_eventually_periodic(kWide, EventuallyPeriodic::parse("(01)"));
    const Rational v2 = project_eventually_periodic(kWide, EventuallyPeriodic::parse("01(01)"));
    const Rational v3 = project_eventually_periodic(kWide, EventuallyPeriodic::parse("0(10)"));
    CHECK(v1 == v2);
    CHECK(v1 == v3);
    CHECK(v1 == Rational(1));  // (3/4*2/3) / (1 - 1/2) = 1

    const Rational w1 = project_eventually_periodic(kThin, EventuallyPeriodic::parse("100(10)"));
    const Rational w2 = project_eventually_periodic(kThin, EventuallyPeriodic::parse("10(01)"));
    CHECK(w1 == w2);
}

TEST_CASE("closed forms for the reference periodic values") {
    for (const BasePair& b : {kWide, kThin}) {
        const Rational r = b.beta0() * b.beta1();
        CHECK(project_eventually_periodic(b, EventuallyPeriodic::parse("(01)")) == r / (Rational(1) - r));
        CHECK(project_eventually_periodic(b, EventuallyPeriodic::parse("(10)")) ==
              b.beta1() / (Rational(1) - r));
    }
}

TEST_CASE("values of sequences sharing a prefix stay within the contraction bound") {
    std::mt19937_64& r = rng();
    for (int i = 0; i < 150; ++i) {
        const BasePair b = random_pair();
        std::vector<int> common;
        const std::size_t k = r() % 12;
        for (std::size_t j = 0; j < k; ++j) common.push_back(static_cast<int>(r() & 1));

        auto extend = [&](int first) {
            std::vector<int> pre = common;
            pre.push_back(first);
            std::vector<int> per{static_cast<int>(r() & 1), static_cast<int>(r() & 1)};
            if (per[0] == per[1] && per[0] == first) per[0] ^= 1;
            return EventuallyPeriodic(DigitWord(pre), DigitWord(per));
        };
        const EventuallyPeriodic s = extend(0);
        const EventuallyPeriodic t = extend(1);  // differ at position k

        const Rational gap = (project_eventually_periodic(b, s) - project_eventually_periodic(b, t)).abs();
        CHECK(gap < Rational::pow(b.beta0(), k) * b.interval_max());
    }
}

TEST_CASE("cylinders of a fixed depth cover the whole interval") {
    for (unsigned n = 1; n <= 10; ++n) CHECK(coverage_check(kWide, n));
    CHECK(coverage_check(kThin, 10));
    CHECK(coverage_check(kWide, 12, 4) == coverage_check(kWide, 12, 1));
    CHECK_THROWS_AS(coverage_check(kWide, 0), std::invalid_argument);

    for (int i = 0; i < 10; ++i) CHECK(coverage_check(random_pair(), 8));
}
