#pragma once

#include "gkz/lattice.hpp"

namespace gkz {

/// Weight alpha on the points together with t = alpha B^T.
struct WeightVector {
    RatVec alpha;
    RatVec t;
};

WeightVector make_weight(const RelationLattice& lattice, const RatVec& alpha);

/// Simplices are sorted 0-based index sets; the list itself is sorted.
struct RegularTriangulation {
    std::vector<Index> simplices;
    WeightVector witness;

    bool operator==(const RegularTriangulation& o) const { return simplices == o.simplices; }
};

struct SecondaryPolytope {
    std::vector<std::pair<RegularTriangulation, IntVec>> vertices;
};

/// Every I such that {b_j}, j not in I, is independent and t is a strictly
/// positive combination of those b_j.
std::vector<Index> vertex_list(const RelationLattice& lattice, const RatVec& t);

RegularTriangulation triangulation_from_weight(const PointConfiguration& config,
                                               const RelationLattice& lattice, const RatVec& alpha);
/// Same, starting from a point t of Hom(L, Q) instead of a weight.
RegularTriangulation triangulation_from_t(const PointConfiguration& config,
                                          const RelationLattice& lattice, const RatVec& t);

std::vector<RegularTriangulation> enumerate_regular_triangulations(const PointConfiguration& config,
                                                                   const RelationLattice& lattice);

bool is_unimodular(const PointConfiguration& config, const RegularTriangulation& T);

/// Normalized volume of the convex hull of the points.
Int total_volume(const PointConfiguration& config, const RelationLattice& lattice);

IntVec gkz_vector(const PointConfiguration& config, const RegularTriangulation& T);

SecondaryPolytope secondary_polytope(const PointConfiguration& config, const RelationLattice& lattice);

/// Rows g with: t is in the open chamber of T iff g . t > 0 for every row.
RatMatrix chamber_normals(const RelationLattice& lattice, const std::vector<Index>& simplices);

/// Whether conv(a_I1) and conv(a_I2) meet in their common face.
bool intersect_properly(const PointConfiguration& config, const Index& I1, const Index& I2);

/// Simplices nondegenerate, pairwise proper, volumes summing to the total.
bool is_triangulation(const PointConfiguration& config, const RelationLattice& lattice,
                      const std::vector<Index>& simplices);

struct FdData {
    PointConfiguration config;
    RelationLattice lattice;
};

/// Lauricella F_D configuration for given k, with the relation basis
/// (1, -e_i, -1, e_i), i = 2..k.
FdData fd_configuration(int k);

/// tau is 0-based: tau[i] = tau(i+1) - 1.
RegularTriangulation fd_triangulation(int k, const std::vector<int>& tau);
std::vector<int> fd_permutation_from_weight(int k, const RatVec& t);

}  // namespace gkz
