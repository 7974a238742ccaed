#pragma once

// Exact linear algebra over Lambda = K[t, t^-1]: fraction-free determinants
// and echelon forms, Smith normal form over K[t], kernels over K(t).

#include "alextor/matrix.hpp"

#include <cstddef>
#include <vector>

namespace alextor {

/// Bareiss determinant. Each row is first multiplied by the power of t that
/// moves it into K[t]; the total shift is restored at the end.
LaurentPoly det(const LaurentMatrix& m);

/// Indices of the pivot columns of a fraction-free row echelon form; equal in
/// number to the rank over K(t).
std::vector<std::size_t> pivot_columns(const LaurentMatrix& m);

std::size_t rank(const LaurentMatrix& m);

struct SNFResult {
    /// Diagonal of D, length min(rows, cols): monic nonzero invariant factors
    /// d_0 | d_1 | ... followed by zeros.
    std::vector<LaurentPoly> d;
    /// Invertible over Lambda, with U * M * V == D.
    LaurentMatrix U;
    LaurentMatrix V;

    std::size_t rank() const;
    /// The nonzero entries of d.
    std::vector<LaurentPoly> invariant_factors() const;
};

/// Smith normal form over the Euclidean domain K[t] after clearing t-powers
/// row by row. Pivot rule: first nonzero entry (row-major) of least degree.
SNFResult smith_normal_form(const LaurentMatrix& m);

/// Diagonal matrix with the given d, shaped like the SNF input.
LaurentMatrix snf_diagonal(const SNFResult& snf, std::size_t rows, std::size_t cols);

struct KernelRank {
    std::size_t rank = 0;
    std::vector<std::vector<RatFunc>> kernel;
};

/// Rank over K(t) and a basis of the right kernel.
KernelRank kernel_and_rank(const LaurentMatrix& m);

/// det(t*I - M), monic.
LaurentPoly charpoly(const CycloMatrix& m);

CycloMatrix evaluate(const LaurentMatrix& m, const CycloNumber& point);
LaurentMatrix to_laurent(const CycloMatrix& m);
RatMatrix to_ratfunc(const LaurentMatrix& m);

} // namespace alextor
