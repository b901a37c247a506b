#pragma once

#include <set>

#include "gkz/series.hpp"

namespace gkz {

/// Sum over retained ell of coeff(ell) u^(gamma + ell + epsilon), with
/// derivatives acting on the symbolic exponent.
struct FormalSolution {
    PointConfiguration config;
    RelationLattice lattice;
    RatVec gamma;
    RingPtr ring;
    std::vector<RingElement> epsilon;
    std::map<IntVec, RingElement> terms;  // retained ell -> coefficient
    std::set<IntVec> domain;              // ell known to be computed, zero or not
    bool complete = false;                // every ell outside terms is zero
};

FormalSolution from_series(const TruncatedGammaSeries& s);
/// The polynomial solution with exponents as ell and gamma = 0.
FormalSolution from_polynomial(const PointConfiguration& config, const RelationLattice& lattice,
                               const std::vector<std::pair<IntVec, Int>>& poly);

FormalSolution apply_partial(const FormalSolution& sol, int j);

struct VerifierReport {
    IntVec lambda;  // empty for the Euler equations
    long checked = 0;
    long unchecked_boundary = 0;
    std::vector<IntVec> violations;
    bool ok() const { return violations.empty(); }
};

/// Box equation for lambda, compared where ell and ell - lambda both lie in
/// the computed domain (everywhere for a complete solution).
VerifierReport check_box(const FormalSolution& sol, const IntVec& lambda);
/// sum_j a_j (gamma_j + ell_j + epsilon_j) coeff = c coeff for every term.
VerifierReport check_euler(const FormalSolution& sol, const RatVec& c);

/// Nonzero lambda in L with |lambda|_1 <= bound, one of each +-pair.
std::vector<IntVec> box_generator_set(const RelationLattice& lattice, int bound);

}  // namespace gkz
