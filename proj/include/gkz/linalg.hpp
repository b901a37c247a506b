#pragma once

#include <optional>

#include "gkz/numeric.hpp"

namespace gkz {

struct Hnf {
    IntMatrix H;              // row echelon form, positive pivots, reduced above
    IntMatrix U;              // unimodular with U * M = H (only if requested)
    std::vector<int> pivots;  // pivot column of each nonzero row
};

/// Row-style Hermite normal form.
Hnf hermite(const IntMatrix& m, bool with_transform = false);

/// Rows of the HNF with zero rows dropped.
IntMatrix hnf_rows(const IntMatrix& m);

/// Z-basis (as rows, in HNF) of { x in Z^n : m x = 0 }.
IntMatrix integer_kernel(const IntMatrix& m);

/// Nonzero invariant factors of the Smith normal form.
std::vector<Int> smith_invariants(const IntMatrix& m);

Int det(const IntMatrix& m);
Rat det(const RatMatrix& m);
int rank(const IntMatrix& m);
int rank(const RatMatrix& m);

struct Rref {
    RatMatrix R;  // nonzero rows only
    std::vector<int> pivots;
};
Rref rref(const RatMatrix& m);

/// Rows spanning { x : m x = 0 } over Q.
RatMatrix nullspace(const RatMatrix& m);

/// Some solution of m x = b, or nothing when inconsistent.
std::optional<RatVec> solve(const RatMatrix& m, const RatVec& b);

std::optional<RatMatrix> inverse(const RatMatrix& m);

/// Whether v lies in the Z-span of the rows of gens.
bool in_lattice(const IntMatrix& gens, const RatVec& v);

/// Integer coefficients x with x^T gens = v, if v is in the row lattice.
std::optional<IntVec> lattice_coordinates(const IntMatrix& gens, const IntVec& v);

/// Gcd of all maximal minors of a full-row-rank matrix (product of the
/// Smith invariants).
Int maximal_minor_gcd(const IntMatrix& m);

RatVec mat_vec(const RatMatrix& m, const RatVec& v);

}  // namespace gkz
