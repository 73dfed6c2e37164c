#pragma once

#include "lritt/ratfunc.hpp"

namespace lritt {

enum class SplitKind { Type1, Type2, PolyPoly };

// A verified single split: compose(outer, inner) equals the input exactly.
struct SplitResult {
    RatFunc outer;
    RatFunc inner;
    SplitKind kind;
};

// Lemma-shaped normalization of g o h: G = g o mu, H = mu^{-1} o h with
// either G a polynomial and H Laurent (Type1), or G Laurent and H = x^n
// (Type2).
struct NormalizedPair {
    Mobius mu;
    RatFunc G;
    RatFunc H;
    SplitKind kind;
};

struct DecomposeLimits {
    long max_degree = 64;
    long max_results = 10000;
    long max_frontier = 10000;
};

// A factor chain, outermost first, stored in canonical form (each inner
// factor left-normalized, the outermost absorbing the residue).
class Decomposition {
   public:
    Decomposition() = default;
    // Canonicalizes; when mark_complete, verifies every factor indecomposable.
    explicit Decomposition(std::vector<RatFunc> factors, bool mark_complete = false);

    const std::vector<RatFunc>& factors() const { return factors_; }
    const RatFunc& composition() const { return composition_; }
    bool complete() const { return complete_; }
    size_t size() const { return factors_.size(); }

    std::vector<long> degrees() const;
    std::string key() const;  // canonical serialization, usable for dedup/sorting

    bool operator==(const Decomposition& o) const { return factors_ == o.factors_; }
    bool operator!=(const Decomposition& o) const { return !(*this == o); }

   private:
    std::vector<RatFunc> factors_;
    RatFunc composition_;
    bool complete_ = false;
};

// gcd of the exponents in the support of f minus its constant term; the
// maximal N with f = G(x^N). Throws constant_input.
long monomial_part(const LaurentPoly& f);

NormalizedPair normalize_decomposition(const RatFunc& g, const RatFunc& h);

// Splits a polynomial as g o h with deg g = r, h monic with zero constant
// term (the canonical representative). Absence is a value.
std::optional<std::pair<Poly, Poly>> poly_split(const Poly& f, long r);

// Splits a two-poled Laurent polynomial as (polynomial g) o (Laurent h) with
// deg g = r; h normalized monic at infinity with zero constant term. All
// root-of-unity branches of the bottom scalar are tried and only verified
// pairs returned. Throws root_unavailable if the bottom scalar equation has
// no representable root.
std::vector<std::pair<Poly, LaurentPoly>> type1_split(const LaurentPoly& f, long r);

bool is_indecomposable(const LaurentPoly& f);
bool is_indecomposable(const RatFunc& f);  // f or f o (1/x) must be Laurent

// All complete decompositions up to the canonical chain equivalence.
std::vector<Decomposition> complete_decompositions(const LaurentPoly& f,
                                                   const DecomposeLimits& limits = {});

// One representative split of x^n + x^{-n} per equivalence class: the pairs
// (x^{n/d} + x^{-n/d}) o x^d and the reflection family with inner
// x^d + c x^{-d}, c^{n/d} = 1. Proper splits only (both degrees >= 2).
std::vector<SplitResult> dihedral_decompositions(long n);

// --- chain machinery shared with the catalogue and chain modules ---

// The left map making a nonconstant Laurent generator canonical: monic with
// zero constant term; monomial-type generators additionally flipped to a
// positive exponent.
Mobius laurent_normalizer(const LaurentPoly& f);

// Canonicalizes a factor chain: every partial composition (which must be
// Laurent) is replaced by its canonical generator; the outermost factor
// absorbs the residue.
std::vector<RatFunc> canonicalize_chain(const std::vector<RatFunc>& factors);

// Canonical (outer, inner) pairs with inner indecomposable, one per
// equivalence class of proper splits of f.
std::vector<std::pair<RatFunc, RatFunc>> enumerate_inner_splits(const LaurentPoly& f);

// Greedy recovery of the outer factor: the g with g o h = f, where h is
// Laurent, monic at its infinity tail. Absence means no such polynomial g.
std::optional<Poly> recover_outer(const LaurentPoly& f, const LaurentPoly& h);

}  // namespace lritt
