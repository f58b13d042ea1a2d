#ifndef PLAB_FACTOR_HPP
#define PLAB_FACTOR_HPP

#include <vector>

#include "plab/unipoly.hpp"

namespace plab {

// unit * prod factors_i^mult_i reproduces the input exactly; factors are monic,
// irreducible over Q and pairwise distinct.
struct FactorList {
    Rational unit;
    std::vector<std::pair<PolyQ, long>> factors;
};

// Complete factorization over Q (squarefree split, reduction mod a suitable
// prime, distinct/equal-degree factorization there, Hensel lifting, subset
// recombination).
FactorList factor_rationals(const PolyQ& p);

// Partial factorization: every monic irreducible factor of degree <= maxdeg
// (with multiplicity), plus the remaining cofactor whose irreducible factors
// all have degree > maxdeg. unit * prod factors^mult * remainder == p.
struct BoundedFactors {
    Rational unit;
    std::vector<std::pair<PolyQ, long>> factors;
    PolyQ remainder;  // monic; 1 when fully factored
};
BoundedFactors factor_up_to_degree(const PolyQ& p, long maxdeg);

}  // namespace plab

#endif
