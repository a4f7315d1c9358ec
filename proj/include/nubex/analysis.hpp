#pragma once

#include "nubex/base_pair.hpp"
#include "nubex/interval.hpp"
#include "nubex/sequences.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace nubex {

// Digits that can legally start an expansion of x: {0}, {1}, or {0,1}
// depending on x's position relative to the overlap interval.
std::vector<int> allowed_digits(const BasePair& b, const Rational& x);

struct ExpansionNode {
    DigitWord prefix;
    Rational pullback;  // remainder after consuming the prefix
};

// All depth-n expansion prefixes of x, in lexicographic order. threads > 1
// parallelises the subtree walks without changing the output.
std::vector<ExpansionNode> enumerate_prefixes(const BasePair& b, const Rational& x, std::size_t depth,
                                              unsigned threads = 1);

// Number of depth-n expansion prefixes of x. Works level by level on
// exact scaled integers, merging equal remainders with multiplicities, so
// counts far beyond feasible enumeration stay cheap.
std::uint64_t count_expansions(const BasePair& b, const Rational& x, std::size_t depth);

// Open interval of points whose expansions still branch after n more
// digits, in closed form:
//   ( beta0^n * beta1 , (beta1^n*(beta0-1) + 1) * beta1/(1-beta1) ).
// Only meaningful in the continuum regime (beta1^2 + beta0 > 1); gated.
Interval lambda_interval_closed_form(const BasePair& b, std::size_t n);

// Same interval built by the recursion L_{n+1} = T0(L_n) ∪ L_0 ∪ T1(L_n)
// starting from L_0 = T0(J) ∩ T1(J). A disconnected union signals a
// regime violation and throws.
Interval lambda_interval_recursive(const BasePair& b, std::size_t n);

// Minimal n with x in L_n; requires the continuum regime and x strictly
// inside the expansion interval.
std::size_t branching_depth(const BasePair& b, const Rational& x);

// Binary tree certifying that x has at least 2^splits distinct expansions:
// each node descends from its point through inverse branches until both
// digits are simultaneously allowed, then records the two continuations.
struct BranchingWitness {
    Rational value;            // the point this node certifies
    std::size_t branch_depth;  // minimal n with value in L_n
    DigitWord descent;         // digits consumed to reach the branching point
    Rational child_low;        // continuation taking digit 0 next
    Rational child_high;       // continuation taking digit 1 next
    std::unique_ptr<BranchingWitness> low, high;  // present while splits remain
};

BranchingWitness branching_witness(const BasePair& b, const Rational& x, std::size_t splits);

std::size_t witness_leaf_count(const BranchingWitness& w);
// Longest digit-prefix pinned down along any root-to-leaf path; every
// certified expansion multiplicity is realised within this depth.
std::size_t witness_max_prefix_depth(const BranchingWitness& w);

struct UniquenessCertificate {
    EventuallyPeriodic sequence;
    std::vector<Rational> shifted_values;     // projections of all distinct shifts
    bool verdict = false;                     // true iff the expansion is unique
    std::optional<std::size_t> witness_shift; // first shift landing in the overlap
};

// Exact uniqueness decision for eventually periodic sequences: the value
// has s as its only expansion iff no shifted value lands in the closed
// overlap interval. Only finitely many shifts are distinct, so the check
// is complete.
UniquenessCertificate unique_eventually_periodic(const BasePair& b, const EventuallyPeriodic& s);

// 0^zeros (01)^inf, the standard family witnessing countably many points
// with unique expansions; gated on beta0*(1+beta1) < 1.
EventuallyPeriodic countable_unique_family(const BasePair& b, std::size_t zeros);

// Substitution A -> 01, B -> 10 applied to a pattern over {A,B}, optionally
// dropping the first `shift_amount` digits (0 or 1). Words of this shape
// populate the uncountable family of unique expansions.
DigitWord v_set_word(const std::string& pattern, int shift_amount);

struct DimensionValue {
    Rational contraction;           // beta0*beta1
    std::optional<Rational> exact;  // set when the dimension is exactly rational
    double approx = 0.0;            // log 2 / -log(contraction)
};

// Dimension of the set of points with unique expansions, as given by the
// self-similar structure with both maps contracting by beta0*beta1:
// dim = log 2 / -log(beta0*beta1). Pure arithmetic, no regime gate.
DimensionValue dimension_formula(const Rational& contraction);

// Same value, but gated on the uncountable-uniqueness regime where the
// formula is justified; throws std::domain_error otherwise.
DimensionValue hausdorff_dimension(const BasePair& b);

// Images of the closed attractor interval under all depth-fold
// compositions of F(x) = r*x + r and G(x) = r*x + beta1, r = beta0*beta1.
std::vector<Interval> ifs_images(const BasePair& b, std::size_t depth);

// Exact pairwise disjointness of those images; in the uncountable regime
// depth-1 disjointness already forces it at every depth.
bool ifs_images_disjoint(const BasePair& b, std::size_t depth);

// Crude dimension estimate from counting boxes of size r^depth needed to
// cover the depth-level images: d*log2 / (d*(-log r) - log |attractor|).
// Converges to the dimension as depth grows.
double box_count_estimate(const BasePair& b, std::size_t depth);

// The two strict inequalities behind the uncountable-regime argument: the
// defining one, beta0*(1+2*beta1-beta0*beta1) < 1, and its mirror with the
// roles of the betas swapped. The first implies the second whenever
// beta1 <= beta0, but both are checked exactly.
struct SeparationInequalities {
    bool stated = false;
    bool mirrored = false;
};

SeparationInequalities separation_inequalities(const BasePair& b);

}  // namespace nubex
