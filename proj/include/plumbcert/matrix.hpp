#pragma once

#include <cstddef>
#include <vector>

#include "plumbcert/rational.hpp"

namespace plumbcert {

/// Symmetric matrix with arbitrary-precision integer entries.
///
/// Mutation goes through set(), which writes both (i,j) and (j,i), so the
/// symmetry invariant cannot be broken after construction.
class SymMatrix {
public:
    explicit SymMatrix(std::size_t n);

    /// Builds from explicit rows; throws BadParams unless the data is square
    /// and symmetric.
    static SymMatrix from_rows(const std::vector<std::vector<Int>>& rows);

    std::size_t size() const { return n_; }
    const Int& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, Int value);

    bool operator==(const SymMatrix& other) const = default;

private:
    std::size_t n_;
    std::vector<Int> entries_;
};

/*
 * Two independent exact tests for negative definiteness of a symmetric
 * integer matrix:
 *
 *   - is_negative_definite_minors: Sylvester-style criterion. The leading
 *     principal minors det M_k must satisfy sign(det M_k) = (-1)^k. The
 *     minors are produced by fraction-free (Bareiss) elimination, whose
 *     pivot after step k equals det M_{k+1} exactly.
 *
 *   - is_negative_definite_ldl: exact symmetric elimination M = L D L^T over
 *     the rationals without pivoting. The matrix is negative definite iff
 *     the decomposition exists and every diagonal pivot is strictly
 *     negative; a zero pivot means a singular leading block, which already
 *     rules out definiteness.
 *
 * The two routes must agree on every symmetric input; the test suite checks
 * this on randomized matrices.
 */
bool is_negative_definite_minors(const SymMatrix& m);
bool is_negative_definite_ldl(const SymMatrix& m);

/// Exact determinant (Bareiss elimination with row pivoting).
Int determinant(const SymMatrix& m);

/// Solves M x = b exactly over the rationals. Throws SingularMatrix when
/// det M = 0. The returned solution has identically zero residual.
std::vector<Rational> solve_exact(const SymMatrix& m, const std::vector<Rational>& b);

} // namespace plumbcert
