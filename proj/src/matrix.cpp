#include "plumbcert/matrix.hpp"

#include <utility>

namespace plumbcert {

SymMatrix::SymMatrix(std::size_t n) : n_(n), entries_(n * n, Int(0)) {
    if (n == 0) throw BadParams("SymMatrix: dimension must be >= 1");
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    const std::size_t n = rows.size();
    SymMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw BadParams("SymMatrix: not square");
        for (std::size_t j = 0; j < n; ++j) {
            if (rows[j][i] != rows[i][j]) throw BadParams("SymMatrix: not symmetric");
            m.entries_[i * n + j] = rows[i][j];
        }
    }
    return m;
}

void SymMatrix::set(std::size_t i, std::size_t j, Int value) {
    entries_[j * n_ + i] = value;
    entries_[i * n_ + j] = std::move(value);
}

bool is_negative_definite_minors(const SymMatrix& m) {
    const std::size_t n = m.size();
    // Bareiss elimination; work[k][k] before step k equals det M_k (the
    // leading k+1 by k+1 minor), exactly. A zero or wrong-sign pivot decides
    // the answer immediately, so no pivot search is ever needed.
    std::vector<Int> work(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) work[i * n + j] = m.at(i, j);

    Int prev(1);
    for (std::size_t k = 0; k < n; ++k) {
        const Int& minor = work[k * n + k]; // det of leading (k+1)-minor
        const int want = (k % 2 == 0) ? -1 : 1;
        if (sgn(minor) != want) return false;
        if (k + 1 == n) break;
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = work[k * n + k] * work[i * n + j] - work[i * n + k] * work[k * n + j];
                mpz_divexact(work[i * n + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = work[k * n + k];
    }
    return true;
}

bool is_negative_definite_ldl(const SymMatrix& m) {
    const std::size_t n = m.size();
    std::vector<Rational> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = Rational(m.at(i, j));

    for (std::size_t k = 0; k < n; ++k) {
        const Rational pivot = a[k * n + k];
        if (pivot.sign() >= 0) return false; // zero pivot: singular leading block
        for (std::size_t i = k + 1; i < n; ++i) {
            const Rational factor = a[i * n + k] / pivot;
            for (std::size_t j = k + 1; j <= i; ++j) {
                a[i * n + j] -= factor * a[k * n + j];
                a[j * n + i] = a[i * n + j];
            }
        }
    }
    return true;
}

Int determinant(const SymMatrix& m) {
    const std::size_t n = m.size();
    std::vector<Int> work(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) work[i * n + j] = m.at(i, j);

    Int prev(1);
    int det_sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (work[k * n + k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && work[swap_row * n + k] == 0) ++swap_row;
            if (swap_row == n) return Int(0); // whole column zero below: singular
            for (std::size_t j = 0; j < n; ++j)
                std::swap(work[k * n + j], work[swap_row * n + j]);
            det_sign = -det_sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = work[k * n + k] * work[i * n + j] - work[i * n + k] * work[k * n + j];
                mpz_divexact(work[i * n + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = work[k * n + k];
    }
    return det_sign * work[(n - 1) * n + (n - 1)];
}

std::vector<Rational> solve_exact(const SymMatrix& m, const std::vector<Rational>& b) {
    const std::size_t n = m.size();
    if (b.size() != n) throw BadParams("solve_exact: dimension mismatch");

    // Exact Gaussian elimination with partial pivoting on the augmented
    // system; pivot choice only has to be nonzero for correctness.
    std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = Rational(m.at(i, j));
        aug[i][n] = b[i];
    }

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot_row = k;
        while (pivot_row < n && aug[pivot_row][k].is_zero()) ++pivot_row;
        if (pivot_row == n) throw SingularMatrix("solve_exact: matrix is singular");
        if (pivot_row != k) std::swap(aug[pivot_row], aug[k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (aug[i][k].is_zero()) continue;
            const Rational factor = aug[i][k] / aug[k][k];
            for (std::size_t j = k; j <= n; ++j) aug[i][j] -= factor * aug[k][j];
        }
    }

    std::vector<Rational> x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        Rational acc = aug[ii][n];
        for (std::size_t j = ii + 1; j < n; ++j) acc -= aug[ii][j] * x[j];
        x[ii] = acc / aug[ii][ii];
    }
    return x;
}

} // namespace plumbcert
