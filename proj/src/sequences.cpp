#include "nubex/sequences.hpp"

#include <algorithm>
#include <stdexcept>

namespace nubex {

namespace {

std::uint8_t checked_digit(int d) {
    if (d != 0 && d != 1) throw std::invalid_argument("digit must be 0 or 1, got " + std::to_string(d));
    return static_cast<std::uint8_t>(d);
}

}  // namespace

DigitWord::DigitWord(std::initializer_list<int> digits) {
    d_.reserve(digits.size());
    for (int d : digits) d_.push_back(checked_digit(d));
}

DigitWord::DigitWord(const std::vector<int>& digits) {
    d_.reserve(digits.size());
    for (int d : digits) d_.push_back(checked_digit(d));
}

DigitWord DigitWord::parse(const std::string& text) {
    std::vector<std::uint8_t> d;
    d.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') throw std::invalid_argument("malformed digit word '" + text + "'");
        d.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return DigitWord(std::move(d));
}

void DigitWord::push_back(int digit) { d_.push_back(checked_digit(digit)); }

void DigitWord::pop_back() {
    if (d_.empty()) throw std::logic_error("pop_back on empty digit word");
    d_.pop_back();
}

std::string DigitWord::str() const {
    std::string s;
    s.reserve(d_.size());
    for (auto d : d_) s += static_cast<char>('0' + d);
    return s;
}

DigitCounts digit_counts(const DigitWord& w, std::size_t n) {
    if (n > w.size()) throw std::out_of_range("digit_counts: prefix length exceeds word length");
    DigitCounts c;
    for (std::size_t i = 0; i < n; ++i) (w[i] ? c.ones : c.zeros)++;
    return c;
}

Rational sequence_distance(const DigitWord& s, const DigitWord& t) {
    if (s.size() != t.size()) throw std::invalid_argument("sequence_distance requires equal-length words");
    for (std::size_t k = 0; k < s.size(); ++k)
        if (s[k] != t[k]) return Rational::pow(Rational(1, 2), k);
    return Rational(0);
}

EventuallyPeriodic::EventuallyPeriodic(DigitWord preperiod, DigitWord period)
    : pre_(std::move(preperiod)), per_(std::move(period)) {
    if (per_.empty()) throw std::invalid_argument("period must be non-empty");
    canonicalize();
}

void EventuallyPeriodic::canonicalize() {
    // Reduce the period to its primitive root.
    auto& p = per_.d_;
    for (std::size_t k = 1; k <= p.size() / 2; ++k) {
        if (p.size() % k != 0) continue;
        bool repeats = true;
        for (std::size_t i = k; i < p.size() && repeats; ++i) repeats = (p[i] == p[i % k]);
        if (repeats) {
            p.resize(k);
            break;
        }
    }
    // Absorb preperiod digits that merely restate the period's last digit:
    // u b (v' b)^inf == u (b v')^inf. Rotating keeps the period primitive.
    auto& u = pre_.d_;
    while (!u.empty() && u.back() == p.back()) {
        u.pop_back();
        std::rotate(p.rbegin(), p.rbegin() + 1, p.rend());
    }
}

EventuallyPeriodic EventuallyPeriodic::parse(const std::string& text) {
    const auto open = text.find('(');
    const auto close = text.find(')');
    if (open == std::string::npos || close != text.size() - 1 || close <= open)
        throw std::invalid_argument("malformed sequence '" + text + "': expected digits(digits)");
    DigitWord pre = DigitWord::parse(text.substr(0, open));
    DigitWord per = DigitWord::parse(text.substr(open + 1, close - open - 1));
    return EventuallyPeriodic(std::move(pre), std::move(per));
}

int EventuallyPeriodic::digit(std::size_t i) const {
    if (i < pre_.size()) return pre_[i];
    return per_[(i - pre_.size()) % per_.size()];
}

DigitWord EventuallyPeriodic::prefix(std::size_t n) const {
    DigitWord w;
    for (std::size_t i = 0; i < n; ++i) w.push_back(digit(i));
    return w;
}

std::string EventuallyPeriodic::str() const { return pre_.str() + "(" + per_.str() + ")"; }

EventuallyPeriodic shift(const EventuallyPeriodic& s, std::size_t k) {
    const auto& u = s.preperiod();
    const auto& v = s.period();
    if (k <= u.size()) {
        std::vector<int> rest;
        rest.reserve(u.size() - k);
        for (std::size_t i = k; i < u.size(); ++i) rest.push_back(u[i]);
        return EventuallyPeriodic(DigitWord(rest), v);
    }
    const std::size_t r = (k - u.size()) % v.size();
    std::vector<int> rotated;
    rotated.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) rotated.push_back(v[(i + r) % v.size()]);
    return EventuallyPeriodic(DigitWord{}, DigitWord(rotated));
}

std::size_t distinct_shift_count(const EventuallyPeriodic& s) {
    // Canonical form guarantees all |u|+|v| shifts are pairwise distinct:
    // shifts inside the preperiod still differ from each other and from the
    // purely periodic tail (otherwise a digit would have been absorbed),
    // and rotations of a primitive word are pairwise distinct.
    return s.preperiod().size() + s.period().size();
}

}  // namespace nubex
