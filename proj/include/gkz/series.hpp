#pragma once

#include <map>

#include "gkz/multiseries.hpp"
#include "gkz/ring.hpp"

namespace gkz {

/// Offset, nilpotent deformation and summation data of a Gamma-series.
struct GammaData {
    PointConfiguration config;
    RelationLattice lattice;
    RegularTriangulation chamber;
    RatVec gamma;
    RatVec c;                          // sum_j gamma_j a_j
    RingPtr ring;                      // the trivial ring Z for plain series
    std::vector<RingElement> epsilon;  // degree-one elements, zero for plain series
    IntMatrix basis;                   // rows beta_1..beta_d of L
    bool adapted = true;               // basis generates the monoid L_C freely
};

struct SeriesTerm {
    IntVec ell;
    RingElement coeff;
};

/// Keys are coordinates n over data.basis, so ell = sum_i n_i beta_i. With an
/// adapted basis the keys are exactly the n in N^d with |n| <= order.
struct TruncatedGammaSeries {
    GammaData data;
    int order = 0;
    std::map<MultiIndex, SeriesTerm> terms;  // nonzero coefficients only
    std::vector<IntVec> domain;              // every ell examined, zero or not
};

/// The ring Z of rank one.
RingPtr trivial_ring();

Rat pochhammer(const Rat& s, long n);

/// Gamma(1+e)/Gamma(m+1+e) for nilpotent e.
RingElement gamma_ratio_deformed(long m, const RingElement& e);

/// prod_j Gamma(gamma_j+1)/Gamma(gamma_j+ell_j+1), rewritten with Pochhammer
/// products so it stays finite when gamma_j is a negative integer.
Rat plain_coefficient(const RatVec& gamma, const IntVec& ell);

/// Rows of a basis of L that generate the chamber monoid L_C freely, if any.
/// The lattice basis itself is preferred.
std::optional<IntMatrix> adapted_basis(const RelationLattice& lattice, const RegularTriangulation& T);

GammaData plain_data(const PointConfiguration& config, const RelationLattice& lattice,
                     const RegularTriangulation& T, const RatVec& gamma);
/// epsilon_j are the generators of ring, which must be built on T.
GammaData deformed_data(const PointConfiguration& config, const RelationLattice& lattice,
                        const RegularTriangulation& T, const RatVec& gamma, const RingPtr& ring);

TruncatedGammaSeries expand_plain(const GammaData& data, int order);
TruncatedGammaSeries expand_deformed(const GammaData& data, int order);

/// Exponent vectors and multinomial coefficients of the polynomial solution
/// of degree m; needs a row of ones in A, the other rows are a-bar.
std::vector<std::pair<IntVec, Int>> polynomial_solution(const PointConfiguration& config, int m);

}  // namespace gkz
