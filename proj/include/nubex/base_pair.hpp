#pragma once

#include "nubex/interval.hpp"
#include "nubex/rational.hpp"

namespace nubex {

// Pair of contraction ratios (beta0, beta1) with 1/2 < beta1 <= beta0 < 1.
// Digit 0 acts by x -> beta0*x, digit 1 by x -> beta1*x + beta1, both
// mapping the expansion interval I = [0, beta1/(1-beta1)] into itself.
// Because each beta exceeds 1/2 the two images overlap, so interior points
// admit more than one digit choice; the overlap [beta1, beta0*beta1/(1-beta1)]
// is where both digits are allowed.
class BasePair {
public:
    // Throws std::domain_error naming the violated constraint.
    BasePair(Rational beta0, Rational beta1);

    const Rational& beta0() const { return b0_; }
    const Rational& beta1() const { return b1_; }

    // Right endpoint of I: beta1/(1-beta1).
    const Rational& interval_max() const { return max_; }
    Interval domain() const { return Interval::closed(Rational(0), max_); }
    Interval domain_interior() const { return Interval::open(Rational(0), max_); }

    // Closed overlap of the two digit images of I.
    const Interval& overlap() const { return overlap_; }

    bool in_domain(const Rational& x) const;
    // Throws std::domain_error mentioning `what` when x is outside I.
    void require_in_domain(const Rational& x, const char* what) const;

    friend bool operator==(const BasePair& a, const BasePair& b) {
        return a.b0_ == b.b0_ && a.b1_ == b.b1_;
    }

private:
    Rational b0_, b1_, max_;
    Interval overlap_;
};

// Which of the three parameter regimes hold, each decided by an exact
// strict inequality:
//   continuum_all      beta1^2 + beta0 > 1   every interior point has a
//                                            continuum of expansions
//   countable_unique   beta0*(1+beta1) < 1   countably many points with a
//                                            unique expansion
//   uncountable_unique beta0*(1+2*beta1-beta0*beta1) < 1
//                                            uncountably many such points
// continuum_all excludes countable_unique, and uncountable_unique implies
// countable_unique; regime_report checks both relations.
struct RegimeReport {
    bool continuum_all = false;
    bool countable_unique = false;
    bool uncountable_unique = false;
};

RegimeReport regime_report(const BasePair& b);

}  // namespace nubex
