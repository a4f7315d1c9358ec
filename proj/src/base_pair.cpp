#include "nubex/base_pair.hpp"

#include <stdexcept>

namespace nubex {

BasePair::BasePair(Rational beta0, Rational beta1) : b0_(std::move(beta0)), b1_(std::move(beta1)) {
    const Rational half(1, 2);
    if (!(b1_ > half))
        throw std::domain_error("base pair requires beta1 > 1/2; got beta1 = " + b1_.str());
    if (!(b1_ <= b0_))
        throw std::domain_error("base pair requires beta1 <= beta0; got beta0 = " + b0_.str() +
                                ", beta1 = " + b1_.str());
    if (!(b0_ < Rational(1)))
        throw std::domain_error("base pair requires beta0 < 1; got beta0 = " + b0_.str());

    max_ = b1_ / (Rational(1) - b1_);
    // Images of I: digit 0 gives [0, beta0*max], digit 1 gives [beta1, max].
    // beta1 <= beta0*max because beta0+beta1 > 1, so the overlap is non-empty.
    overlap_ = Interval::closed(b1_, b0_ * max_);
}

bool BasePair::in_domain(const Rational& x) const {
    return x >= Rational(0) && x <= max_;
}

void BasePair::require_in_domain(const Rational& x, const char* what) const {
    if (!in_domain(x))
        throw std::domain_error(std::string(what) + ": " + x.str() + " is outside [0, " + max_.str() + "]");
}

RegimeReport regime_report(const BasePair& b) {
    const Rational one(1);
    RegimeReport r;
    r.continuum_all = b.beta1() * b.beta1() + b.beta0() > one;
    r.countable_unique = b.beta0() * (one + b.beta1()) < one;
    r.uncountable_unique =
        b.beta0() * (one + Rational(2) * b.beta1() - b.beta0() * b.beta1()) < one;

    if (r.continuum_all && r.countable_unique)
        throw std::logic_error("regime classification inconsistent: continuum and countable regimes overlap");
    if (r.uncountable_unique && !r.countable_unique)
        throw std::logic_error("regime classification inconsistent: uncountable regime without countable regime");
    return r;
}

}  // namespace nubex
