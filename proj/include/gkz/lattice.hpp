#pragma once

#include <optional>

#include "gkz/numeric.hpp"

namespace gkz {

/// The point set A as the columns of a (k+1) x N integer matrix.
class PointConfiguration {
public:
    PointConfiguration() = default;
    /// Rejects duplicate points unless a list with repeats is asked for.
    explicit PointConfiguration(IntMatrix points, bool allow_repeats = false);
    static PointConfiguration from_columns(const std::vector<IntVec>& cols);

    const IntMatrix& matrix() const { return A_; }
    int rows() const { return static_cast<int>(A_.rows()); }  // k+1
    int size() const { return static_cast<int>(A_.cols()); }  // N
    IntVec point(int j) const { return A_.col(j); }
    const std::optional<IntVec>& h() const { return h_; }

private:
    IntMatrix A_;
    std::optional<IntVec> h_;
};

/// Basis B (d x N) of the lattice of relations. Columns are the b_j.
class RelationLattice {
public:
    RelationLattice() = default;
    /// Validates B against the configuration (relations, full rank, saturated).
    RelationLattice(const PointConfiguration& config, IntMatrix basis);

    const IntMatrix& basis() const { return B_; }
    int rank() const { return static_cast<int>(B_.rows()); }  // d
    int size() const { return static_cast<int>(B_.cols()); }  // N
    IntVec b(int j) const { return B_.col(j); }
    /// ell = m B for a coefficient vector m.
    IntVec element(const IntVec& m) const;
    bool contains(const IntVec& ell) const;
    /// Same lattice expressed in another basis (must span the same lattice).
    RelationLattice with_basis(IntMatrix other) const;

private:
    IntMatrix B_;
};

RelationLattice kernel_basis(const PointConfiguration& config);
IntVec homogeneity_vector(const PointConfiguration& config);
bool check_generates(const PointConfiguration& config);
Int simplex_volume(const PointConfiguration& config, const Index& I);
Rat enumeration_bound(const RelationLattice& lattice, const Index& J);
Int gamma_class_count(const PointConfiguration& config, const RelationLattice& lattice,
                      const Index& J, const RatVec& c);
/// Resonance per the criterion on pairs of simplices of a triangulation.
bool is_resonant(const PointConfiguration& config, const RelationLattice& lattice,
                 const std::vector<Index>& simplices, const RatVec& c);

/// Configuration whose relation lattice is spanned by the rows of B. Uses
/// (I | -Bt^T) when B ends in an identity block, an HNF kernel otherwise.
PointConfiguration configuration_from_relations(const IntMatrix& B);

}  // namespace gkz
