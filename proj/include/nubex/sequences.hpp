#pragma once

#include "nubex/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace nubex {

// Finite word over the alphabet {0, 1}. Comparison is lexicographic,
// which on equal-length words matches the digit-sequence order used for
// extremal expansions.
class DigitWord {
public:
    DigitWord() = default;
    DigitWord(std::initializer_list<int> digits);
    explicit DigitWord(const std::vector<int>& digits);

    static DigitWord parse(const std::string& text);  // e.g. "10100"
    static DigitWord zeros(std::size_t n) { return DigitWord(std::vector<std::uint8_t>(n, 0)); }

    void push_back(int digit);
    void pop_back();

    std::size_t size() const { return d_.size(); }
    bool empty() const { return d_.empty(); }
    int operator[](std::size_t i) const { return d_[i]; }
    int back() const { return d_.back(); }

    auto begin() const { return d_.begin(); }
    auto end() const { return d_.end(); }

    std::string str() const;

    friend auto operator<=>(const DigitWord&, const DigitWord&) = default;

private:
    explicit DigitWord(std::vector<std::uint8_t> d) : d_(std::move(d)) {}
    std::vector<std::uint8_t> d_;

    friend class EventuallyPeriodic;
};

struct DigitCounts {
    std::size_t zeros = 0;
    std::size_t ones = 0;
};

// Zeros and ones among the first n digits (positions 1..n).
DigitCounts digit_counts(const DigitWord& w, std::size_t n);

// 2^-k where k is the length of the longest common prefix; 0 for equal
// words. Inputs must have equal length.
Rational sequence_distance(const DigitWord& s, const DigitWord& t);

// Sequence of the form preperiod . (period)^inf, stored canonically:
// the period is primitive (not a power of a shorter word) and no trailing
// preperiod digit can be absorbed into a rotation of the period. Two
// representations of the same sequence always canonicalise identically.
class EventuallyPeriodic {
public:
    EventuallyPeriodic(DigitWord preperiod, DigitWord period);

    // Text form "101(01)" = preperiod 101, period 01. Preperiod may be
    // empty: "(01)".
    static EventuallyPeriodic parse(const std::string& text);

    const DigitWord& preperiod() const { return pre_; }
    const DigitWord& period() const { return per_; }

    int digit(std::size_t i) const;        // 0-based
    DigitWord prefix(std::size_t n) const;

    std::string str() const;

    friend bool operator==(const EventuallyPeriodic&, const EventuallyPeriodic&) = default;

private:
    void canonicalize();
    DigitWord pre_, per_;
};

// Drops the first k digits.
EventuallyPeriodic shift(const EventuallyPeriodic& s, std::size_t k);

// Number of distinct sequences among all iterated shifts of s; equals
// |preperiod| + |period| in canonical form.
std::size_t distinct_shift_count(const EventuallyPeriodic& s);

}  // namespace nubex
