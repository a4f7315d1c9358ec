#include "nubex/projection.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nubex {

void AffineWord::append(const BasePair& b, int digit) {
    if (digit == 0) {
        weight *= b.beta0();
    } else if (digit == 1) {
        offset += weight * b.beta1();
        weight *= b.beta1();
    } else {
        throw std::invalid_argument("digit must be 0 or 1");
    }
}

Rational apply_contraction(const BasePair& b, int digit, const Rational& x) {
    b.require_in_domain(x, "apply_contraction");
    if (digit == 0) return b.beta0() * x;
    if (digit == 1) return b.beta1() * x + b.beta1();
    throw std::invalid_argument("digit must be 0 or 1");
}

Rational invert_contraction(const BasePair& b, int digit, const Rational& x) {
    if (digit == 0) {
        if (x < Rational(0) || x > b.beta0() * b.interval_max())
            throw std::domain_error("invert_contraction: " + x.str() + " is outside the digit-0 image of I");
        return x / b.beta0();
    }
    if (digit == 1) {
        if (x < b.beta1() || x > b.interval_max())
            throw std::domain_error("invert_contraction: " + x.str() + " is outside the digit-1 image of I");
        return x / b.beta1() - Rational(1);
    }
    throw std::invalid_argument("digit must be 0 or 1");
}

Interval cylinder_interval(const BasePair& b, const DigitWord& w) {
    AffineWord acc;
    for (int d : w) acc.append(b, d);
    return acc.image(b.domain());
}

Rational project_prefix_with_remainder(const BasePair& b, const DigitWord& w, const Rational& r) {
    b.require_in_domain(r, "project_prefix_with_remainder remainder");
    AffineWord acc;
    for (int d : w) acc.append(b, d);
    return acc.eval(r);
}

TruncatedProjection project_truncated(const BasePair& b, const EventuallyPeriodic& s, std::size_t n) {
    AffineWord acc;
    for (std::size_t i = 0; i < n; ++i) acc.append(b, s.digit(i));
    return {acc.offset, acc.weight * b.interval_max()};
}

Rational project_eventually_periodic(const BasePair& b, const EventuallyPeriodic& s) {
    AffineWord per;
    for (int d : s.period()) per.append(b, d);
    // weight < 1, so the affine map of the period has a unique fixed point.
    const Rational tail = per.offset / (Rational(1) - per.weight);
    AffineWord pre;
    for (int d : s.preperiod()) pre.append(b, d);
    return pre.eval(tail);
}

namespace {

using Span = std::pair<Rational, Rational>;  // cylinder endpoints [lo, hi]

void collect_spans(const BasePair& b, const AffineWord& acc, unsigned left, std::vector<Span>& out) {
    if (left == 0) {
        out.emplace_back(acc.offset, acc.eval(b.interval_max()));
        return;
    }
    for (int d : {0, 1}) {
        AffineWord next = acc;
        next.append(b, d);
        collect_spans(b, next, left - 1, out);
    }
}

}  // namespace

bool coverage_check(const BasePair& b, unsigned depth, unsigned threads) {
    if (depth == 0) throw std::invalid_argument("coverage_check requires depth >= 1");

    std::vector<Span> spans;
    spans.reserve(std::size_t(1) << depth);

    if (threads <= 1 || depth < 4) {
        collect_spans(b, AffineWord{}, depth, spans);
    } else {
        // Fan out over all prefixes of a fixed small depth; the spans get
        // sorted afterwards, so partition order cannot affect the verdict.
        unsigned split = 1;
        while ((1u << split) < threads && split + 1 < depth) ++split;
        const unsigned tasks = 1u << split;
        std::vector<std::future<std::vector<Span>>> futs;
        futs.reserve(tasks);
        for (unsigned p = 0; p < tasks; ++p) {
            futs.push_back(std::async(std::launch::async, [&, p] {
                AffineWord acc;
                for (unsigned bit = 0; bit < split; ++bit) acc.append(b, (p >> (split - 1 - bit)) & 1);
                std::vector<Span> part;
                part.reserve(std::size_t(1) << (depth - split));
                collect_spans(b, acc, depth - split, part);
                return part;
            }));
        }
        for (auto& f : futs) {
            auto part = f.get();
            spans.insert(spans.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
        }
    }

    std::sort(spans.begin(), spans.end());

    // All cylinders are closed, so touching endpoints connect.
    if (spans.front().first != Rational(0)) return false;
    Rational reach = spans.front().second;
    for (const auto& [lo, hi] : spans) {
        if (lo > reach) return false;
        if (hi > reach) reach = hi;
    }
    return reach == b.interval_max();
}

}  // namespace nubex
