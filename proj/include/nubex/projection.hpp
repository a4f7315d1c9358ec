#pragma once

#include "nubex/base_pair.hpp"
#include "nubex/sequences.hpp"

namespace nubex {

// Composition of the digit maps along a word, read left to right. Appending
// digits multiplies in the per-digit contraction, so after reading w the
// map is x -> weight*x + offset with
//   weight = beta0^{#zeros} * beta1^{#ones}
//   offset = sum over positions i with digit 1 of beta0^{z_i} * beta1^{o_i},
// where z_i/o_i count digits of each kind among the first i positions.
struct AffineWord {
    Rational weight{1};
    Rational offset{0};

    void append(const BasePair& b, int digit);
    Rational eval(const Rational& x) const { return weight * x + offset; }
    Interval image(const Interval& iv) const { return iv.affine_image(weight, offset); }
};

// T_digit(x); requires x in I.
Rational apply_contraction(const BasePair& b, int digit, const Rational& x);

// Inverse branch: requires x in T_digit(I), returns the unique preimage.
Rational invert_contraction(const BasePair& b, int digit, const Rational& x);

// Closed interval of values whose expansions can start with w; equals the
// image of I under the composed map of w. Width is weight(w) * |I|.
Interval cylinder_interval(const BasePair& b, const DigitWord& w);

// Value of the finite word w followed by a remainder r in I: the composed
// map of w applied to r. Reconstructs x exactly from any expansion prefix
// and its orbit point.
Rational project_prefix_with_remainder(const BasePair& b, const DigitWord& w, const Rational& r);

struct TruncatedProjection {
    Rational value;       // contribution of the first n digits
    Rational tail_bound;  // weight of the prefix times |I|; the true value
                          // lies in [value, value + tail_bound]
};

TruncatedProjection project_truncated(const BasePair& b, const EventuallyPeriodic& s, std::size_t n);

// Exact value of an eventually periodic sequence: the periodic tail is the
// fixed point of its composed affine map, pushed through the preperiod.
// Depends only on the sequence, not on the chosen representation.
Rational project_eventually_periodic(const BasePair& b, const EventuallyPeriodic& s);

// Checks that the 2^depth cylinders of the given depth cover I exactly:
// sorted by left endpoint they must chain without gaps from 0 to max.
// threads > 1 splits the enumeration; the verdict is unaffected.
bool coverage_check(const BasePair& b, unsigned depth, unsigned threads = 1);

}  // namespace nubex
