#include "nubex/sequences.hpp"

#include "doctest.h"

#include <random>
#include <stdexcept>
#include <vector>

using nubex::DigitWord;
using nubex::EventuallyPeriodic;
using nubex::Rational;
using nubex::digit_counts;
using nubex::distinct_shift_count;
using nubex::sequence_distance;
using nubex::shift;

TEST_CASE("digit words parse, render, and compare lexicographically") {
    const DigitWord w = DigitWord::parse("10100");
    CHECK(w.size() == 5);
    CHECK(w.str() == "10100");
    CHECK(w[0] == 1);
    CHECK(w[1] == 0);
    CHECK_THROWS_AS(DigitWord::parse("102"), std::invalid_argument);
    CHECK_THROWS_AS(DigitWord({0, 2}), std::invalid_argument);

    CHECK(DigitWord::parse("0011") < DigitWord::parse("0100"));
    CHECK(DigitWord::parse("10") > DigitWord::parse("01"));
    CHECK(DigitWord::parse("") == DigitWord{});
}

TEST_CASE("digit_counts counts prefixes and validates length") {
    const DigitWord w = DigitWord::parse("10100");
    const auto c3 = digit_counts(w, 3);
    CHECK(c3.zeros == 1);
    CHECK(c3.ones == 2);
    const auto c5 = digit_counts(w, 5);
    CHECK(c5.zeros == 3);
    CHECK(c5.ones == 2);
    const auto c0 = digit_counts(w, 0);
    CHECK(c0.zeros == 0);
    CHECK(c0.ones == 0);
    CHECK_THROWS_AS(digit_counts(w, 6), std::out_of_range);

    // zeros + ones always equals the prefix length
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        std::vector<int> d;
        for (int j = 0; j < 20; ++j) d.push_back(static_cast<int>(rng() & 1));
        const DigitWord r(d);
        for (std::size_t n = 0; n <= r.size(); ++n) {
            const auto c = digit_counts(r, n);
            CHECK(c.zeros + c.ones == n);
        }
    }
}

TEST_CASE("sequence_distance is 2^-(first disagreement)") {
    CHECK(sequence_distance(DigitWord::parse("10100"), DigitWord::parse("10011")) == Rational(1, 4));
    CHECK(sequence_distance(DigitWord::parse("10100"), DigitWord::parse("10100")) == Rational(0));
    CHECK(sequence_distance(DigitWord::parse("0"), DigitWord::parse("1")) == Rational(1));
    CHECK_THROWS_AS(sequence_distance(DigitWord::parse("01"), DigitWord::parse("0")), std::invalid_argument);

    // ultrametric triangle inequality on random words
    std::mt19937_64 rng(5);
    auto random_word = [&rng] {
        std::vector<int> d;
        for (int j = 0; j < 12; ++j) d.push_back(static_cast<int>(rng() & 1));
        return DigitWord(d);
    };
    for (int i = 0; i < 100; ++i) {
        const DigitWord a = random_word(), b = random_word(), c = random_word();
        const Rational ab = sequence_distance(a, b);
        const Rational bc = sequence_distance(b, c);
        const Rational ac = sequence_distance(a, c);
        CHECK(ac <= (ab > bc ? ab : bc));
    }
}

TEST_CASE("periods reduce to their primitive root") {
    CHECK(EventuallyPeriodic::parse("(0101)").period().str() == "01");
    CHECK(EventuallyPeriodic::parse("(010101)").period().str() == "01");
    CHECK(EventuallyPeriodic::parse("(0110)").period().str() == "0110");  // primitive already
    CHECK(EventuallyPeriodic::parse("(1111)").period().str() == "1");
}

TEST_CASE("preperiod digits that restate the period are absorbed") {
    // 100(10)^inf and 10(01)^inf spell the same digit stream
    const EventuallyPeriodic a = EventuallyPeriodic::parse("100(10)");
    CHECK(a.str() == "10(01)");
    CHECK(a == EventuallyPeriodic::parse("10(01)"));

    const EventuallyPeriodic b = EventuallyPeriodic::parse("011(01)");
    CHECK(b.str() == "01(10)");

    // fully periodic input written with a redundant preperiod
    CHECK(EventuallyPeriodic::parse("01(01)").str() == "(01)");
    CHECK(EventuallyPeriodic::parse("1(1)").str() == "(1)");
}

TEST_CASE("canonicalisation never changes the digit stream") {
    std::mt19937_64 rng(9);
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<int> pre, per;
        const std::size_t plen = rng() % 5;
        const std::size_t vlen = 1 + rng() % 4;
        for (std::size_t i = 0; i < plen; ++i) pre.push_back(static_cast<int>(rng() & 1));
        for (std::size_t i = 0; i < vlen; ++i) per.push_back(static_cast<int>(rng() & 1));

        const EventuallyPeriodic s{DigitWord(pre), DigitWord(per)};
        for (std::size_t i = 0; i < 30; ++i) {
            const int expected =
                i < pre.size() ? pre[i] : per[(i - pre.size()) % per.size()];
            CHECK(s.digit(i) == expected);
        }
        CHECK(s.prefix(30).size() == 30);
        // canonical form is a fixed point of canonicalisation
        const EventuallyPeriodic again(s.preperiod(), s.period());
        CHECK(again == s);
    }
}

TEST_CASE("empty period is rejected") {
    CHECK_THROWS_AS(EventuallyPeriodic(DigitWord::parse("01"), DigitWord{}), std::invalid_argument);
    CHECK_THROWS_AS(EventuallyPeriodic::parse("01()"), std::invalid_argument);
    CHECK_THROWS_AS(EventuallyPeriodic::parse("0101"), std::invalid_argument);
    CHECK_THROWS_AS(EventuallyPeriodic::parse("(01)1"), std::invalid_argument);
}

TEST_CASE("shift drops digits and rotates the period") {
    const EventuallyPeriodic s = EventuallyPeriodic::parse("10(01)");
    CHECK(shift(s, 0) == s);
    CHECK(shift(s, 1) == EventuallyPeriodic::parse("0(01)"));
    CHECK(shift(s, 2) == EventuallyPeriodic::parse("(01)"));
    CHECK(shift(s, 3) == EventuallyPeriodic::parse("(10)"));
    CHECK(shift(s, 4) == EventuallyPeriodic::parse("(01)"));

    // shifting commutes with reading the digit stream
    std::mt19937_64 rng(13);
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<int> pre, per;
        const std::size_t plen = rng() % 4;
        const std::size_t vlen = 1 + rng() % 4;
        for (std::size_t i = 0; i < plen; ++i) pre.push_back(static_cast<int>(rng() & 1));
        for (std::size_t i = 0; i < vlen; ++i) per.push_back(static_cast<int>(rng() & 1));
        const EventuallyPeriodic s2{DigitWord(pre), DigitWord(per)};
        const std::size_t k = rng() % 8;
        const EventuallyPeriodic t = shift(s2, k);
        for (std::size_t i = 0; i < 20; ++i) CHECK(t.digit(i) == s2.digit(i + k));
        // iterated single shifts agree with one big shift
        EventuallyPeriodic step = s2;
        for (std::size_t i = 0; i < k; ++i) step = shift(step, 1);
        CHECK(step == t);
    }
}

TEST_CASE("distinct_shift_count is preperiod plus primitive period length") {
    CHECK(distinct_shift_count(EventuallyPeriodic::parse("(01)")) == 2);
    CHECK(distinct_shift_count(EventuallyPeriodic::parse("10(01)")) == 4);
    CHECK(distinct_shift_count(EventuallyPeriodic::parse("(0101)")) == 2);   // canonicalised
    CHECK(distinct_shift_count(EventuallyPeriodic::parse("100(10)")) == 4);  // == 10(01)
    CHECK(distinct_shift_count(EventuallyPeriodic::parse("(0)")) == 1);

    // the first m shifts are pairwise distinct and the m-th wraps around
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<int> pre, per;
        const std::size_t plen = rng() % 4;
        const std::size_t vlen = 1 + rng() % 5;
        for (std::size_t i = 0; i < plen; ++i) pre.push_back(static_cast<int>(rng() & 1));
        for (std::size_t i = 0; i < vlen; ++i) per.push_back(static_cast<int>(rng() & 1));
        const EventuallyPeriodic s{DigitWord(pre), DigitWord(per)};
        const std::size_t m = distinct_shift_count(s);
        std::vector<EventuallyPeriodic> seen;
        for (std::size_t k = 0; k < m; ++k) {
            const EventuallyPeriodic t = shift(s, k);
            for (const auto& u : seen) CHECK(!(u == t));
            seen.push_back(t);
        }
        CHECK(shift(s, m) == shift(s, s.preperiod().size()));
    }
}
