#include "gkz/lattice.hpp"

#include <algorithm>
#include <set>

#include "gkz/error.hpp"
#include "gkz/linalg.hpp"

namespace gkz {

PointConfiguration::PointConfiguration(IntMatrix points, bool allow_repeats) : A_(std::move(points)) {
    if (A_.cols() == 0) fail("EmptyConfiguration", "no points");
    std::set<IntVec> seen;
    for (std::size_t j = 0; j < A_.cols() && !allow_repeats; ++j)
        if (!seen.insert(A_.col(j)).second)
            fail("DuplicatePoint", "point " + std::to_string(j + 1) + " repeats an earlier one");
    IntVec ones(A_.cols(), Int(1));
    h_ = lattice_coordinates(A_, ones);
}

PointConfiguration PointConfiguration::from_columns(const std::vector<IntVec>& cols) {
    if (cols.empty()) fail("EmptyConfiguration", "no points");
    IntMatrix m(cols.front().size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != m.rows()) fail("ShapeMismatch", "points of unequal length");
        for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = cols[j][i];
    }
    return PointConfiguration(std::move(m));
}

RelationLattice::RelationLattice(const PointConfiguration& config, IntMatrix basis)
    : B_(std::move(basis)) {
    const IntMatrix& A = config.matrix();
    if (B_.cols() != A.cols()) fail("ShapeMismatch", "relation basis has wrong number of columns");
    int d = config.size() - config.rows();
    if (static_cast<int>(B_.rows()) != d)
        fail("ShapeMismatch", "relation basis must have N-(k+1) rows");
    IntMatrix prod = B_ * A.transpose();
    for (std::size_t i = 0; i < prod.rows(); ++i)
        for (std::size_t j = 0; j < prod.cols(); ++j)
            if (prod(i, j) != 0) fail("NotARelation", "row " + std::to_string(i + 1) + " is not a relation");
    if (d > 0 && maximal_minor_gcd(B_) != 1)
        fail("NotABasis", "rows do not form a basis of the relation lattice");
}

IntVec RelationLattice::element(const IntVec& m) const {
    IntVec ell(B_.cols(), Int(0));
    for (std::size_t i = 0; i < B_.rows(); ++i)
        if (m[i] != 0)
            for (std::size_t j = 0; j < B_.cols(); ++j) ell[j] += m[i] * B_(i, j);
    return ell;
}

bool RelationLattice::contains(const IntVec& ell) const {
    if (ell.size() != B_.cols()) return false;
    return in_lattice(B_, to_rat(ell));
}

RelationLattice RelationLattice::with_basis(IntMatrix other) const {
    if (other.rows() != B_.rows() || other.cols() != B_.cols())
        fail("ShapeMismatch", "replacement basis has wrong shape");
    if (hnf_rows(other) != hnf_rows(B_)) fail("NotABasis", "replacement basis spans a different lattice");
    RelationLattice out = *this;
    out.B_ = std::move(other);
    return out;
}

RelationLattice kernel_basis(const PointConfiguration& config) {
    if (rank(config.matrix()) < config.rows())
        fail("RankDeficient", "point matrix has rank below k+1");
    IntMatrix B = integer_kernel(config.matrix());
    return RelationLattice(config, std::move(B));
}

IntVec homogeneity_vector(const PointConfiguration& config) {
    if (!config.h()) fail("NoHomogeneity", "no integral h with h.a_j = 1 for all j");
    return *config.h();
}

bool check_generates(const PointConfiguration& config) {
    std::vector<Int> inv = smith_invariants(config.matrix());
    if (static_cast<int>(inv.size()) != config.rows()) return false;
    return std::all_of(inv.begin(), inv.end(), [](const Int& x) { return x == 1; });
}

static void check_index_set(const Index& I, int n, std::size_t size) {
    if (I.size() != size) fail("BadIndexSet", "index set " + index_to_string(I) + " has wrong size");
    for (std::size_t i = 0; i < I.size(); ++i) {
        if (I[i] < 0 || I[i] >= n) fail("BadIndexSet", "index out of range");
        if (i && I[i] <= I[i - 1]) fail("BadIndexSet", "index set must be strictly increasing");
    }
}

Int simplex_volume(const PointConfiguration& config, const Index& I) {
    check_index_set(I, config.size(), config.rows());
    return abs(det(config.matrix().select_cols(I)));
}

Rat enumeration_bound(const RelationLattice& lattice, const Index& J) {
    Index Jc = complement(J, lattice.size());
    if (static_cast<int>(Jc.size()) != lattice.rank())
        fail("BadIndexSet", "complement must have d elements");
    auto inv = inverse(to_rat(lattice.basis().select_cols(Jc)));
    if (!inv) fail("SingularComplement", "B restricted to the complement is singular");
    RatMatrix m = *inv * to_rat(lattice.basis());
    Rat beta = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) beta = std::max(beta, Rat(abs(m(i, j))));
    return beta;
}

Int gamma_class_count(const PointConfiguration& config, const RelationLattice& lattice,
                      const Index& J, const RatVec& c) {
    check_index_set(J, config.size(), config.rows());
    RatMatrix AJ = to_rat(config.matrix().select_cols(J));
    if (det(AJ) == 0) fail("SingularComplement", "simplex " + index_to_string(J) + " is degenerate");
    // gamma_j = 0 off J gives a solution; solvable for every c.
    if (!solve(AJ, c)) fail("Unsolvable", "no gamma with the required integrality");
    // Classes modulo L of solutions are counted by the index of the
    // complement block of B, which equals |det A_J|.
    Index Jc = complement(J, config.size());
    return abs(det(lattice.basis().select_cols(Jc)));
}

PointConfiguration configuration_from_relations(const IntMatrix& B) {
    std::size_t d = B.rows(), n = B.cols();
    if (d == 0 || n <= d) fail("ShapeMismatch", "relation matrix must have 0 < d < N");
    bool tail_identity = true;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (B(i, n - d + j) != (i == j ? 1 : 0)) tail_identity = false;
    IntMatrix A;
    if (tail_identity) {
        A = IntMatrix(n - d, n, Int(0));
        for (std::size_t i = 0; i < n - d; ++i) {
            A(i, i) = 1;
            for (std::size_t j = 0; j < d; ++j) A(i, n - d + j) = -B(j, i);
        }
    } else {
        A = integer_kernel(B);
    }
    return PointConfiguration(std::move(A));
}

}  // namespace gkz
