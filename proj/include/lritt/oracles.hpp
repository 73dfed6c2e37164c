#pragma once

#include "lritt/decompose.hpp"

namespace lritt::oracles {

// Brute-force subgroup lattice of the dihedral group of order 2n: number of
// maximal chains from the trivial subgroup to the full group. Subgroups are
// enumerated as closures of all 1- and 2-element subsets.
long dihedral_maximal_chain_count(long n);

// Coefficient-ansatz split solver, independent of poly_split/type1_split:
// the normalized inner tails are solved by affine probing (two-point
// interpolation of the residual) with the outer factor fitted by Gaussian
// elimination, and every candidate is verified by full composition. Returns
// all verified (g, h) with deg g = r and h in canonical form.
std::vector<std::pair<Poly, LaurentPoly>> ansatz_splits(const LaurentPoly& f, long r);

}  // namespace lritt::oracles
