#include "nubex/algorithms.hpp"

#include "nubex/projection.hpp"

#include <stdexcept>

namespace nubex {

std::string AlgorithmKind::name() const {
    switch (variant_) {
        case Variant::Greedy: return "greedy";
        case Variant::Lazy: return "lazy";
        case Variant::Intermediate: return "intermediate(" + alpha_.str() + ")";
    }
    return "?";
}

Step step(const BasePair& b, const AlgorithmKind& kind, const Rational& x) {
    b.require_in_domain(x, "expansion step");

    int digit = 0;
    switch (kind.variant()) {
        case AlgorithmKind::Variant::Greedy:
            // Digit 1 whenever it is allowed at all.
            digit = (x >= b.beta1()) ? 1 : 0;
            break;
        case AlgorithmKind::Variant::Lazy:
            // Digit 1 only when digit 0 is impossible.
            digit = (x > b.overlap().hi()) ? 1 : 0;
            break;
        case AlgorithmKind::Variant::Intermediate: {
            const Rational& a = kind.alpha();
            if (!(a > b.overlap().lo() && a < b.overlap().hi()))
                throw std::domain_error("intermediate threshold " + a.str() +
                                        " must lie strictly inside the overlap " + b.overlap().str());
            digit = (x >= a) ? 1 : 0;
            break;
        }
    }
    return {digit, invert_contraction(b, digit, x)};
}

DigitWord digits(const BasePair& b, const AlgorithmKind& kind, const Rational& x, std::size_t n) {
    DigitWord w;
    Rational cur = x;
    for (std::size_t i = 0; i < n; ++i) {
        Step s = step(b, kind, cur);
        w.push_back(s.digit);
        cur = std::move(s.next);
    }
    return w;
}

std::vector<Rational> orbit(const BasePair& b, const AlgorithmKind& kind, const Rational& x, std::size_t n) {
    std::vector<Rational> out;
    out.reserve(n + 1);
    out.push_back(x);
    for (std::size_t i = 0; i < n; ++i) out.push_back(step(b, kind, out.back()).next);
    return out;
}

}  // namespace nubex
