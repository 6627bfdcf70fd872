#include "rcft/matrix.hpp"

#include <algorithm>

#include "rcft/error.hpp"

namespace rcft {

namespace {

void require_same_shape(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(Errc::precondition, "matrix shape mismatch");
}

// e^{2πi r} as (denominator, numerator) for times_root.
std::pair<u64, i64> root_of(const Rational& r) {
    Rational f = frac(r);
    return {f.get_den().get_ui(), f.get_num().get_si()};
}

}  // namespace

CMatrix::CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix I(n, n);
    for (std::size_t i = 0; i < n; ++i) I(i, i) = Cyclotomic(1L);
    return I;
}

CMatrix CMatrix::diagonal(const std::vector<Rational>& exponents) {
    const std::size_t n = exponents.size();
    CMatrix D(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        auto [den, num] = root_of(exponents[i]);
        D(i, i) = Cyclotomic::root_of_unity(den, num);
    }
    return D;
}

u64 CMatrix::order() const {
    u64 M = 1;
    for (const auto& z : data_) M = lcm(M, z.order());
    return M;
}

CMatrix CMatrix::at_order(u64 M) const {
    CMatrix out = *this;
    for (auto& z : out.data_) z = z.at_order(M);
    return out;
}

CMatrix CMatrix::transpose() const {
    CMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

CMatrix CMatrix::conj() const {
    CMatrix out = *this;
    for (auto& z : out.data_) z = z.conj();
    return out;
}

CMatrix CMatrix::conj_transpose() const { return conj().transpose(); }

CMatrix CMatrix::galois(i64 ell) const {
    CMatrix out = *this;
    for (auto& z : out.data_) z = z.galois(ell);
    return out;
}

bool CMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Cyclotomic& z) { return z.is_zero(); });
}

bool CMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const auto& z = (*this)(i, j);
            if (i == j ? !z.is_one() : !z.is_zero()) return false;
        }
    return true;
}

bool CMatrix::is_symmetric() const { return rows_ == cols_ && *this == transpose(); }

CMatrix& CMatrix::operator+=(const CMatrix& rhs) {
    require_same_shape(*this, rhs);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& rhs) {
    require_same_shape(*this, rhs);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(Errc::precondition, "matrix product shape mismatch");
    const u64 W = lcm(a.order(), b.order());
    const CMatrix A = a.at_order(W), B = b.at_order(W);
    CMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) {
            CycloAccumulator acc(W);
            for (std::size_t k = 0; k < a.cols_; ++k) acc.add_product(A(i, k), B(k, j));
            out(i, j) = acc.result();
        }
    return out;
}

CMatrix operator*(const Cyclotomic& c, const CMatrix& a) {
    CMatrix out = a;
    for (auto& z : out.data_) z = c * z;
    return out;
}

bool operator==(const CMatrix& a, const CMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

CMatrix diag_left(const std::vector<Rational>& exponents, const CMatrix& A) {
    if (exponents.size() != A.rows()) throw Error(Errc::precondition, "diagonal size mismatch");
    CMatrix out = A;
    for (std::size_t i = 0; i < A.rows(); ++i) {
        auto [den, num] = root_of(exponents[i]);
        if (num == 0) continue;
        for (std::size_t j = 0; j < A.cols(); ++j) out(i, j) = A(i, j).times_root(den, num);
    }
    return out;
}

CMatrix diag_right(const CMatrix& A, const std::vector<Rational>& exponents) {
    if (exponents.size() != A.cols()) throw Error(Errc::precondition, "diagonal size mismatch");
    CMatrix out = A;
    for (std::size_t j = 0; j < A.cols(); ++j) {
        auto [den, num] = root_of(exponents[j]);
        if (num == 0) continue;
        for (std::size_t i = 0; i < A.rows(); ++i) out(i, j) = A(i, j).times_root(den, num);
    }
    return out;
}

CMatrix power(const CMatrix& A, u64 k) {
    CMatrix result = CMatrix::identity(A.rows()), base = A;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

std::optional<std::pair<std::size_t, std::size_t>> first_difference(const CMatrix& A,
                                                                    const CMatrix& B) {
    require_same_shape(A, B);
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j)
            if (!(A(i, j) == B(i, j))) return std::pair{i, j};
    return std::nullopt;
}

Rref rref(const CMatrix& input) {
    const u64 W = input.order();
    Rref out{input.at_order(W), {}};
    CMatrix& A = out.reduced;
    std::size_t r = 0;
    for (std::size_t c = 0; c < A.cols() && r < A.rows(); ++c) {
        std::size_t p = r;
        while (p < A.rows() && A(p, c).is_zero()) ++p;
        if (p == A.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < A.cols(); ++j) std::swap(A(p, j), A(r, j));
        const Cyclotomic inv = A(r, c).inverse();
        for (std::size_t j = c; j < A.cols(); ++j)
            if (!A(r, j).is_zero()) A(r, j) = A(r, j) * inv;
        for (std::size_t i = 0; i < A.rows(); ++i) {
            if (i == r || A(i, c).is_zero()) continue;
            const Cyclotomic f = A(i, c);
            for (std::size_t j = c; j < A.cols(); ++j)
                if (!A(r, j).is_zero()) A(i, j) -= f * A(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    return out;
}

std::size_t rank(const CMatrix& A) { return rref(A).pivots.size(); }

std::vector<std::vector<Cyclotomic>> nullspace(const CMatrix& A) {
    const Rref R = rref(A);
    std::vector<bool> is_pivot(A.cols(), false);
    for (auto c : R.pivots) is_pivot[c] = true;
    std::vector<std::vector<Cyclotomic>> basis;
    for (std::size_t f = 0; f < A.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Cyclotomic> v(A.cols());
        v[f] = Cyclotomic(1L);
        for (std::size_t i = 0; i < R.pivots.size(); ++i) v[R.pivots[i]] = -R.reduced(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Cyclotomic>> solve(const CMatrix& A, const std::vector<Cyclotomic>& b) {
    if (b.size() != A.rows()) throw Error(Errc::precondition, "right-hand side size mismatch");
    CMatrix aug(A.rows(), A.cols() + 1);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) aug(i, j) = A(i, j);
        aug(i, A.cols()) = b[i];
    }
    const Rref R = rref(aug);
    if (!R.pivots.empty() && R.pivots.back() == A.cols()) return std::nullopt;
    std::vector<Cyclotomic> x(A.cols());
    for (std::size_t i = 0; i < R.pivots.size(); ++i) x[R.pivots[i]] = R.reduced(i, A.cols());
    return x;
}

std::optional<std::vector<Cyclotomic>> span_coefficients(const std::vector<CMatrix>& basis,
                                                         const CMatrix& X) {
    const std::size_t n = X.rows() * X.cols();
    CMatrix A(n, basis.size());
    std::vector<Cyclotomic> b(n);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        require_same_shape(basis[k], X);
        for (std::size_t i = 0; i < X.rows(); ++i)
            for (std::size_t j = 0; j < X.cols(); ++j) A(i * X.cols() + j, k) = basis[k](i, j);
    }
    for (std::size_t i = 0; i < X.rows(); ++i)
        for (std::size_t j = 0; j < X.cols(); ++j) b[i * X.cols() + j] = X(i, j);
    return solve(A, b);
}

}  // namespace rcft
