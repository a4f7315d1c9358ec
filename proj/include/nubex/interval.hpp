#pragma once

#include "nubex/rational.hpp"

#include <string>

namespace nubex {

// Rational interval with independently open or closed endpoints, plus a
// distinct empty value. Invariant for non-empty intervals: lo < hi, or
// lo == hi with both endpoints closed (a single point).
class Interval {
public:
    Interval() : empty_(true) {}

    static Interval empty() { return Interval(); }
    static Interval closed(Rational lo, Rational hi) { return make(std::move(lo), true, std::move(hi), true); }
    static Interval open(Rational lo, Rational hi) { return make(std::move(lo), false, std::move(hi), false); }
    static Interval point(Rational x) { Rational c = x; return closed(std::move(x), std::move(c)); }
    // Throws std::invalid_argument when the endpoints do not describe a
    // non-empty interval (lo > hi, or lo == hi without both sides closed).
    static Interval make(Rational lo, bool lo_closed, Rational hi, bool hi_closed);

    bool is_empty() const { return empty_; }
    // Endpoint accessors require a non-empty interval.
    const Rational& lo() const;
    const Rational& hi() const;
    bool lo_closed() const;
    bool hi_closed() const;

    bool contains(const Rational& x) const;
    // Empty intervals have width 0; a point also has width 0.
    Rational width() const;

    // Image under x -> scale*x + shift with scale > 0; endpoint openness
    // is preserved because the map is an increasing bijection.
    Interval affine_image(const Rational& scale, const Rational& shift) const;

    // "Empty", or e.g. "[0, 2]", "(2/3, 3/2]".
    std::string str() const;

    friend bool operator==(const Interval& a, const Interval& b);

private:
    bool empty_;
    Rational lo_, hi_;
    bool lo_closed_ = true, hi_closed_ = true;
};

Interval intersect(const Interval& a, const Interval& b);

// Union of two intervals that overlap or share a usable endpoint, so the
// result is again a single interval. Throws std::domain_error when the
// inputs are separated by a gap (even a single missing point).
Interval union_connected(const Interval& a, const Interval& b);

}  // namespace nubex
