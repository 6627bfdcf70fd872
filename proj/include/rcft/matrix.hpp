#pragma once

/**
 * @file matrix.hpp
 * @brief Dense matrices over cyclotomic fields and exact linear algebra.
 */

#include <optional>
#include <string>
#include <vector>

#include "rcft/cyclo.hpp"

namespace rcft {

class CMatrix {
public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols);
    static CMatrix identity(std::size_t n);
    /// diag(e^{2πi·r_a}).
    static CMatrix diagonal(const std::vector<Rational>& exponents);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Cyclotomic& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Cyclotomic& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    /// lcm of the orders of all entries.
    u64 order() const;
    CMatrix at_order(u64 M) const;
    CMatrix transpose() const;
    CMatrix conj() const;
    CMatrix conj_transpose() const;
    /// Entrywise σ_ℓ.
    CMatrix galois(i64 ell) const;

    bool is_zero() const;
    bool is_identity() const;
    bool is_symmetric() const;

    CMatrix& operator+=(const CMatrix& rhs);
    CMatrix& operator-=(const CMatrix& rhs);
    friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
    friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
    friend CMatrix operator*(const Cyclotomic& c, const CMatrix& a);
    friend bool operator==(const CMatrix& a, const CMatrix& b);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Cyclotomic> data_;
};

/// diag(e^{2πi·r_a})·A, by rotating entries.
CMatrix diag_left(const std::vector<Rational>& exponents, const CMatrix& A);
/// A·diag(e^{2πi·r_a}).
CMatrix diag_right(const CMatrix& A, const std::vector<Rational>& exponents);
/// A^k for k >= 0.
CMatrix power(const CMatrix& A, u64 k);

/// First (i, j) in row-major order where A and B differ.
std::optional<std::pair<std::size_t, std::size_t>> first_difference(const CMatrix& A,
                                                                    const CMatrix& B);

// ---- exact linear algebra -------------------------------------------------------

struct Rref {
    CMatrix reduced;                  ///< reduced row echelon form
    std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
};

/// Gauss-Jordan elimination over the cyclotomic field of A's entries.
Rref rref(const CMatrix& A);
std::size_t rank(const CMatrix& A);
/// Basis of {x : A x = 0}, one vector per free column.
std::vector<std::vector<Cyclotomic>> nullspace(const CMatrix& A);
/// Some x with A x = b, or nothing if the system is inconsistent.
std::optional<std::vector<Cyclotomic>> solve(const CMatrix& A, const std::vector<Cyclotomic>& b);
/// Coefficients c with Σ c_i·basis[i] = X, if X lies in the span.
std::optional<std::vector<Cyclotomic>> span_coefficients(const std::vector<CMatrix>& basis,
                                                         const CMatrix& X);

}  // namespace rcft
