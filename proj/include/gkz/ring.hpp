#pragma once

#include <memory>
#include <optional>

#include "gkz/fan.hpp"

namespace gkz {

using Monomial = std::vector<int>;  // exponents of delta_1..delta_d
using SparseIntVec = std::vector<std::pair<int, Int>>;

class GradedQuotientRing;
using RingPtr = std::shared_ptr<const GradedQuotientRing>;

/// Element of R (x) Q with coordinates over the ring's basis.
class RingElement {
public:
    RingElement() = default;
    RingElement(RingPtr ring, RatVec coords);
    static RingElement zero(const RingPtr& ring);
    static RingElement one(const RingPtr& ring);
    static RingElement scalar(const RingPtr& ring, const Rat& c);

    const RingPtr& ring() const { return ring_; }
    const RatVec& coords() const { return c_; }
    const Rat& operator[](std::size_t i) const { return c_[i]; }

    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const;
    RingElement operator-() const;
    RingElement operator*(const RingElement& o) const;
    RingElement operator*(const Rat& s) const;
    RingElement& operator+=(const RingElement& o);
    RingElement& operator-=(const RingElement& o);
    RingElement& operator*=(const RingElement& o);
    bool operator==(const RingElement& o) const { return c_ == o.c_; }
    bool operator!=(const RingElement& o) const { return c_ != o.c_; }

    bool is_zero() const;
    /// Coefficient of the unit.
    const Rat& constant() const { return c_[0]; }
    /// Component of degree m.
    RingElement part(int m) const;
    /// Degree if homogeneous and nonzero.
    std::optional<int> homogeneous_degree() const;
    /// Inverse of an element with nonzero constant term.
    RingElement inverse() const;

private:
    RingPtr ring_;
    RatVec c_;
};

/// Graded commutative ring with a monomial Z-basis and integer structure
/// constants. Basis element 0 is the unit; elements are sorted by degree.
class GradedQuotientRing : public std::enable_shared_from_this<GradedQuotientRing> {
public:
    int num_variables() const { return nvars_; }
    int num_generators() const { return static_cast<int>(generators_.size()); }
    int rank() const { return static_cast<int>(basis_.size()); }
    int top_degree() const { return static_cast<int>(ranks_.size()) - 1; }
    const std::vector<int>& ranks() const { return ranks_; }
    const std::vector<Monomial>& basis() const { return basis_; }
    int degree(int i) const { return degree_[i]; }
    /// First basis index of degree m.
    int offset(int m) const { return offsets_[m]; }
    const SparseIntVec& product(int a, int b) const { return table_[a][b]; }

    /// epsilon_j and delta_i as ring elements.
    RingElement generator(int j) const;
    RingElement variable(int i) const;
    /// Any monomial in the delta_i.
    RingElement monomial(const Monomial& m) const;

    /// Set when the ring is a quotient R/Ann(x) of another ring.
    const RingPtr& parent() const { return parent_; }
    /// Maps a parent element to this quotient.
    RingElement project(const RingElement& parent_element) const;
    /// Parent element with the same basis monomials.
    RingElement lift(const RingElement& e) const;

    RingPtr ptr() const { return shared_from_this(); }

private:
    friend RingPtr build_ring(const PointConfiguration&, const RelationLattice&, const RegularTriangulation&);
    friend RingPtr quotient_by_annihilator(const RingPtr&, const RingElement&);
    friend RingPtr make_truncated_polynomial_ring(int, const std::vector<int>&);
    void finish_offsets();

    int nvars_ = 0;
    std::vector<Monomial> basis_;
    std::vector<int> degree_, ranks_, offsets_;
    std::vector<std::vector<SparseIntVec>> table_;
    std::vector<RatVec> generators_, variables_;
    RingPtr parent_;
    std::vector<int> lift_index_;               // quotient basis -> parent basis
    std::vector<std::vector<std::pair<int, RatVec>>> reducers_;  // per degree: pivot index, kernel row
};

/// Inclusion-minimal subsets of {0..N-1} contained in no simplex.
std::vector<Index> minimal_nonfaces(const RegularTriangulation& T, int N);

/// R = Z[delta]/(Stanley-Reisner ideal) with epsilon_j = sum_i B_ij delta_i,
/// B the lattice basis. Throws TorsionQuotient when a graded piece is not
/// free (non-unimodular chambers).
RingPtr build_ring(const PointConfiguration& config, const RelationLattice& lattice,
                   const RegularTriangulation& T);

bool poincare_check(const GradedQuotientRing& ring, const RegularTriangulation& T, int k_plus_1);

RingPtr quotient_by_annihilator(const RingPtr& ring, const RingElement& x);

/// Z[delta_1..delta_d]/(delta_i^{n_i}); handy for closed-form checks.
RingPtr make_truncated_polynomial_ring(int d, const std::vector<int>& nilpotency);

/// Matrix of multiplication by x in the given basis (column j = x * e_j).
RatMatrix multiplication_matrix(const RingElement& x, const std::vector<RingElement>& basis);

/// Default ordered basis: the ring's own basis elements.
std::vector<RingElement> standard_basis(const RingPtr& ring);

/// Gramm matrix of <x,y> = tau(x* y) on homogeneous basis elements.
RatMatrix tau_pairing(const RingPtr& ring, const std::vector<RingElement>& basis);
RatMatrix tau_pairing(const RingPtr& ring);

/// Basis of antisymmetric G with mat(d_a) G = -G mat(d_a)^T for all variables.
std::vector<RatMatrix> monodromy_invariant_forms(const RingPtr& ring, const std::vector<RingElement>& basis);
std::vector<RatMatrix> monodromy_invariant_forms(const RingPtr& ring);

}  // namespace gkz
