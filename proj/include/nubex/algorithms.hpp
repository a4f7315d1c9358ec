#pragma once

#include "nubex/base_pair.hpp"
#include "nubex/sequences.hpp"

#include <string>
#include <vector>

namespace nubex {

// Digit selection rule for points where both digits are allowed. Greedy
// always takes digit 1 when possible, lazy always avoids it, and
// intermediate(alpha) switches at a threshold alpha chosen strictly inside
// the overlap interval.
class AlgorithmKind {
public:
    enum class Variant { Greedy, Lazy, Intermediate };

    static AlgorithmKind greedy() { return AlgorithmKind(Variant::Greedy, Rational(0)); }
    static AlgorithmKind lazy() { return AlgorithmKind(Variant::Lazy, Rational(0)); }
    static AlgorithmKind intermediate(Rational alpha) {
        return AlgorithmKind(Variant::Intermediate, std::move(alpha));
    }

    Variant variant() const { return variant_; }
    const Rational& alpha() const { return alpha_; }
    std::string name() const;

private:
    AlgorithmKind(Variant v, Rational a) : variant_(v), alpha_(std::move(a)) {}
    Variant variant_;
    Rational alpha_;  // only meaningful for Intermediate
};

struct Step {
    int digit;
    Rational next;  // image of x under the inverse branch chosen by digit
};

// One step of the expansion map: pick the digit by threshold, then apply
// the corresponding inverse branch. The result stays in I. Intermediate
// alpha is validated against the open interior of the overlap here, since
// its legal range depends on the base pair.
Step step(const BasePair& b, const AlgorithmKind& kind, const Rational& x);

// First n digits of the expansion of x.
DigitWord digits(const BasePair& b, const AlgorithmKind& kind, const Rational& x, std::size_t n);

// x and its first n forward images: n+1 values, orbit[k] is the remainder
// after emitting k digits.
std::vector<Rational> orbit(const BasePair& b, const AlgorithmKind& kind, const Rational& x, std::size_t n);

}  // namespace nubex
