#include "nubex/analysis.hpp"

#include "nubex/projection.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>
#include <utility>

namespace nubex {

namespace {

void require_continuum_regime(const BasePair& b) {
    const Rational lhs = b.beta1() * b.beta1() + b.beta0();
    if (!(lhs > Rational(1)))
        throw std::domain_error("requires beta1^2 + beta0 > 1; got beta1^2 + beta0 = " + lhs.str());
}

void require_countable_regime(const BasePair& b) {
    const Rational lhs = b.beta0() * (Rational(1) + b.beta1());
    if (!(lhs < Rational(1)))
        throw std::domain_error("requires beta0*(1 + beta1) < 1; got beta0*(1 + beta1) = " + lhs.str());
}

void require_uncountable_regime(const BasePair& b) {
    const Rational lhs =
        b.beta0() * (Rational(1) + Rational(2) * b.beta1() - b.beta0() * b.beta1());
    if (!(lhs < Rational(1)))
        throw std::domain_error(
            "requires beta0*(1 + 2*beta1 - beta0*beta1) < 1; got beta0*(1 + 2*beta1 - beta0*beta1) = " +
            lhs.str());
}

// Digit choices available at remainder r, assuming r in I.
inline bool digit0_allowed(const BasePair& b, const Rational& r) { return r <= b.overlap().hi(); }
inline bool digit1_allowed(const BasePair& b, const Rational& r) { return r >= b.beta1(); }

void enumerate_rec(const BasePair& b, DigitWord& prefix, const Rational& r, std::size_t left,
                   std::vector<ExpansionNode>& out) {
    if (left == 0) {
        out.push_back({prefix, r});
        return;
    }
    if (digit0_allowed(b, r)) {
        prefix.push_back(0);
        enumerate_rec(b, prefix, r / b.beta0(), left - 1, out);
        prefix.pop_back();
    }
    if (digit1_allowed(b, r)) {
        prefix.push_back(1);
        enumerate_rec(b, prefix, r / b.beta1() - Rational(1), left - 1, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<int> allowed_digits(const BasePair& b, const Rational& x) {
    b.require_in_domain(x, "allowed_digits");
    std::vector<int> out;
    if (digit0_allowed(b, x)) out.push_back(0);
    if (digit1_allowed(b, x)) out.push_back(1);
    return out;
}

std::vector<ExpansionNode> enumerate_prefixes(const BasePair& b, const Rational& x, std::size_t depth,
                                              unsigned threads) {
    b.require_in_domain(x, "enumerate_prefixes");

    if (threads <= 1 || depth < 2) {
        std::vector<ExpansionNode> out;
        DigitWord prefix;
        enumerate_rec(b, prefix, x, depth, out);
        return out;
    }

    // Expand a frontier breadth-first until it is wide enough to spread
    // across threads, then walk each subtree independently. Frontier nodes
    // are in lexicographic order and every completion stays inside its
    // prefix block, so stitching preserves the order.
    std::vector<ExpansionNode> frontier{{DigitWord{}, x}};
    std::size_t consumed = 0;
    while (consumed < depth && frontier.size() < std::size_t(4) * threads) {
        std::vector<ExpansionNode> next;
        next.reserve(frontier.size() * 2);
        for (auto& node : frontier) {
            DigitWord w = node.prefix;
            enumerate_rec(b, w, node.pullback, 1, next);
        }
        frontier = std::move(next);
        ++consumed;
    }
    if (consumed == depth) return frontier;

    const std::size_t rest = depth - consumed;
    std::vector<std::future<std::vector<ExpansionNode>>> futs;
    futs.reserve(frontier.size());
    for (const auto& node : frontier) {
        futs.push_back(std::async(std::launch::async, [&b, node, rest] {
            std::vector<ExpansionNode> part;
            DigitWord w = node.prefix;
            enumerate_rec(b, w, node.pullback, rest, part);
            return part;
        }));
    }
    std::vector<ExpansionNode> out;
    for (auto& f : futs) {
        auto part = f.get();
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

std::uint64_t count_expansions(const BasePair& b, const Rational& x, std::size_t depth) {
    b.require_in_domain(x, "count_expansions");
    if (depth > 62) throw std::invalid_argument("count_expansions depth too large for exact 64-bit counts");

    // Remainders at level k share the denominator D_k = D_0 * (p0*p1)^k when
    // beta0 = p0/q0 and beta1 = p1/q1, so each level is a set of integer
    // numerators with multiplicities. Children:
    //   digit 0: r/beta0       -> n * q0*p1
    //   digit 1: r/beta1 - 1   -> n * q1*p0 - D_{k+1}
    // Digit tests cross-multiply against thresholds scaled to level k.
    const mpz_class p0 = b.beta0().numerator(), q0 = b.beta0().denominator();
    const mpz_class p1 = b.beta1().numerator(), q1 = b.beta1().denominator();
    const mpz_class m0 = q0 * p1, m1 = q1 * p0, scale = p0 * p1;
    const mpz_class hn = b.overlap().hi().numerator(), hd = b.overlap().hi().denominator();

    std::vector<std::pair<mpz_class, std::uint64_t>> level;
    level.emplace_back(x.numerator(), 1);
    mpz_class D = x.denominator();

    std::vector<std::pair<mpz_class, std::uint64_t>> next;
    for (std::size_t k = 0; k < depth; ++k) {
        const mpz_class t1 = p1 * D;  // digit 1 iff n*q1 >= t1
        const mpz_class t0 = hn * D;  // digit 0 iff n*hd <= t0
        const mpz_class Dnext = D * scale;

        next.clear();
        next.reserve(level.size() * 2);
        for (const auto& [n, cnt] : level) {
            const bool a0 = n * hd <= t0;
            const bool a1 = n * q1 >= t1;
            if (!a0 && !a1) throw std::logic_error("remainder escaped the expansion interval");
            if (a0) next.emplace_back(n * m0, cnt);
            if (a1) next.emplace_back(n * m1 - Dnext, cnt);
        }
        std::sort(next.begin(), next.end(),
                  [](const auto& a, const auto& bb) { return a.first < bb.first; });
        level.clear();
        for (auto& item : next) {
            if (!level.empty() && level.back().first == item.first)
                level.back().second += item.second;
            else
                level.push_back(std::move(item));
        }
        D = Dnext;
    }

    std::uint64_t total = 0;
    for (const auto& [n, cnt] : level) total += cnt;
    return total;
}

namespace {

// L_n endpoints without the regime gate; callers gate once.
Interval lambda_closed_ungated(const BasePair& b, std::size_t n) {
    const Rational lo = Rational::pow(b.beta0(), n) * b.beta1();
    const Rational hi =
        (Rational::pow(b.beta1(), n) * (b.beta0() - Rational(1)) + Rational(1)) * b.interval_max();
    return Interval::open(lo, hi);
}

}  // namespace

Interval lambda_interval_closed_form(const BasePair& b, std::size_t n) {
    require_continuum_regime(b);
    return lambda_closed_ungated(b, n);
}

Interval lambda_interval_recursive(const BasePair& b, std::size_t n) {
    require_continuum_regime(b);
    const Interval J = b.domain_interior();
    const Interval L0 = intersect(J.affine_image(b.beta0(), Rational(0)),
                                  J.affine_image(b.beta1(), b.beta1()));
    Interval cur = L0;
    for (std::size_t i = 1; i <= n; ++i) {
        try {
            cur = union_connected(union_connected(cur.affine_image(b.beta0(), Rational(0)), L0),
                                  cur.affine_image(b.beta1(), b.beta1()));
        } catch (const std::domain_error& e) {
            throw std::domain_error("branching recursion step " + std::to_string(i) + ": " + e.what());
        }
    }
    return cur;
}

std::size_t branching_depth(const BasePair& b, const Rational& x) {
    require_continuum_regime(b);
    if (!b.domain_interior().contains(x))
        throw std::domain_error("branching_depth: " + x.str() +
                                " is not strictly inside the expansion interval");
    // L_n grows towards the open interval J, so interior points terminate.
    Rational lo = b.beta1();           // beta0^n * beta1
    Rational hi_factor = b.beta0();    // beta1^n * (beta0 - 1) + 1
    Rational pow1(1);                  // beta1^n
    for (std::size_t n = 0;; ++n) {
        if (x > lo && x < hi_factor * b.interval_max()) return n;
        lo *= b.beta0();
        pow1 *= b.beta1();
        hi_factor = pow1 * (b.beta0() - Rational(1)) + Rational(1);
    }
}

namespace {

bool lambda_contains(const BasePair& b, std::size_t n, const Rational& x) {
    return lambda_closed_ungated(b, n).contains(x);
}

BranchingWitness witness_node(const BasePair& b, const Rational& y, std::size_t splits) {
    if (!b.domain_interior().contains(y))
        throw std::domain_error("branching witness hit the boundary of the expansion interval at " + y.str());

    BranchingWitness node;
    node.value = y;
    node.branch_depth = branching_depth(b, y);

    // Walk down to a point where both digits branch: while y needs n > 0
    // more digits, one of the two inverse branches lands in L_{n-1}.
    Rational cur = y;
    std::size_t n = node.branch_depth;
    while (n > 0) {
        const Rational down0 = cur / b.beta0();
        if (lambda_contains(b, n - 1, down0)) {
            node.descent.push_back(0);
            cur = down0;
        } else {
            const Rational down1 = cur / b.beta1() - Rational(1);
            if (!lambda_contains(b, n - 1, down1))
                throw std::logic_error("branching recursion invariant violated at " + cur.str());
            node.descent.push_back(1);
            cur = down1;
        }
        n = branching_depth(b, cur);
    }

    // cur is in L_0 = T0(J) ∩ T1(J): both inverse branches stay interior.
    node.child_low = cur / b.beta0();
    node.child_high = cur / b.beta1() - Rational(1);
    if (!b.domain_interior().contains(node.child_low) || !b.domain_interior().contains(node.child_high))
        throw std::domain_error("branching witness produced a boundary continuation at " + cur.str());

    if (splits > 1) {
        node.low = std::make_unique<BranchingWitness>(witness_node(b, node.child_low, splits - 1));
        node.high = std::make_unique<BranchingWitness>(witness_node(b, node.child_high, splits - 1));
    }
    return node;
}

}  // namespace

BranchingWitness branching_witness(const BasePair& b, const Rational& x, std::size_t splits) {
    require_continuum_regime(b);
    if (splits == 0) throw std::invalid_argument("branching_witness requires splits >= 1");
    return witness_node(b, x, splits);
}

std::size_t witness_leaf_count(const BranchingWitness& w) {
    if (!w.low) return 2;  // the two recorded continuations
    return witness_leaf_count(*w.low) + witness_leaf_count(*w.high);
}

std::size_t witness_max_prefix_depth(const BranchingWitness& w) {
    const std::size_t own = w.descent.size() + 1;  // descent digits plus the branch digit
    if (!w.low) return own;
    return own + std::max(witness_max_prefix_depth(*w.low), witness_max_prefix_depth(*w.high));
}

UniquenessCertificate unique_eventually_periodic(const BasePair& b, const EventuallyPeriodic& s) {
    UniquenessCertificate cert{s, {}, true, std::nullopt};
    const std::size_t m = distinct_shift_count(s);
    EventuallyPeriodic cur = s;
    for (std::size_t k = 0; k < m; ++k) {
        if (k > 0) cur = shift(cur, 1);
        const Rational val = project_eventually_periodic(b, cur);
        if (!b.in_domain(val))
            throw std::logic_error("projected shift left the expansion interval: " + val.str());
        if (b.overlap().contains(val) && !cert.witness_shift) {
            cert.verdict = false;
            cert.witness_shift = k;
        }
        cert.shifted_values.push_back(val);
    }
    return cert;
}

EventuallyPeriodic countable_unique_family(const BasePair& b, std::size_t zeros) {
    require_countable_regime(b);
    return EventuallyPeriodic(DigitWord::zeros(zeros), DigitWord{0, 1});
}

DigitWord v_set_word(const std::string& pattern, int shift_amount) {
    if (pattern.empty()) throw std::invalid_argument("v_set_word requires a non-empty pattern");
    if (shift_amount != 0 && shift_amount != 1)
        throw std::invalid_argument("v_set_word shift must be 0 or 1");
    DigitWord w;
    for (char c : pattern) {
        if (c == 'A') {
            w.push_back(0);
            w.push_back(1);
        } else if (c == 'B') {
            w.push_back(1);
            w.push_back(0);
        } else {
            throw std::invalid_argument("v_set_word pattern must use only 'A' and 'B'");
        }
    }
    if (shift_amount == 0) return w;
    DigitWord shifted;
    for (std::size_t i = 1; i < w.size(); ++i) shifted.push_back(w[i]);
    return shifted;
}

DimensionValue dimension_formula(const Rational& contraction) {
    if (!(contraction > Rational(0) && contraction < Rational(1)))
        throw std::domain_error("contraction ratio must lie in (0, 1); got " + contraction.str());
    DimensionValue v;
    v.contraction = contraction;
    if (contraction == Rational(1, 2)) v.exact = Rational(1);
    v.approx = std::log(2.0) / -std::log(contraction.to_double());
    return v;
}

DimensionValue hausdorff_dimension(const BasePair& b) {
    require_uncountable_regime(b);
    return dimension_formula(b.beta0() * b.beta1());
}

namespace {

void ifs_images_rec(const Rational& r, const Rational& beta1, const AffineWord& acc, std::size_t left,
                    const Interval& attractor, std::vector<Interval>& out) {
    if (left == 0) {
        out.push_back(acc.image(attractor));
        return;
    }
    AffineWord f = acc;
    f.offset += f.weight * r;
    f.weight *= r;
    ifs_images_rec(r, beta1, f, left - 1, attractor, out);
    AffineWord g = acc;
    g.offset += g.weight * beta1;
    g.weight *= r;
    ifs_images_rec(r, beta1, g, left - 1, attractor, out);
}

}  // namespace

std::vector<Interval> ifs_images(const BasePair& b, std::size_t depth) {
    if (depth == 0 || depth > 24)
        throw std::invalid_argument("ifs_images depth must be in 1..24");
    const Rational r = b.beta0() * b.beta1();
    const Interval attractor = Interval::closed(Rational(0), b.beta1() / (Rational(1) - r));
    std::vector<Interval> out;
    out.reserve(std::size_t(1) << depth);
    ifs_images_rec(r, b.beta1(), AffineWord{}, depth, attractor, out);
    return out;
}

bool ifs_images_disjoint(const BasePair& b, std::size_t depth) {
    auto imgs = ifs_images(b, depth);
    std::sort(imgs.begin(), imgs.end(),
              [](const Interval& a, const Interval& bb) { return a.lo() < bb.lo(); });
    for (std::size_t i = 1; i < imgs.size(); ++i)
        if (!(imgs[i - 1].hi() < imgs[i].lo())) return false;  // closed images: touching counts as overlap
    return true;
}

double box_count_estimate(const BasePair& b, std::size_t depth) {
    require_uncountable_regime(b);
    if (depth == 0) throw std::invalid_argument("box_count_estimate requires depth >= 1");

    // The estimate presumes the 2^depth images are disjoint; verify that
    // exactly, at the requested depth where feasible.
    const std::size_t verify_depth = std::min<std::size_t>(depth, 12);
    if (!ifs_images_disjoint(b, verify_depth))
        throw std::logic_error("images overlap despite the separation inequality");

    const double r = (b.beta0() * b.beta1()).to_double();
    const double len = (b.beta1() / (Rational(1) - b.beta0() * b.beta1())).to_double();
    const double d = static_cast<double>(depth);
    // 2^d boxes of size r^d * len: log N / -log eps.
    return d * std::log(2.0) / (d * -std::log(r) - std::log(len));
}

SeparationInequalities separation_inequalities(const BasePair& b) {
    const Rational one(1);
    const Rational r = b.beta0() * b.beta1();
    SeparationInequalities s;
    s.stated = b.beta0() * (one + Rational(2) * b.beta1() - r) < one;
    s.mirrored = b.beta1() * (one + Rational(2) * b.beta0() - r) < one;
    return s;
}

}  // namespace nubex
