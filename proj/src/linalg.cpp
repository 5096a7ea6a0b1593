#include "qhopf/linalg.hpp"

namespace qhopf {

Vec zero_vec(const FieldSpec& f, std::size_t n) { return Vec(n, Scalar::zero(f)); }

Vec basis_vec(const FieldSpec& f, std::size_t n, std::size_t i) {
    Vec v = zero_vec(f, n);
    v[i] = Scalar::one(f);
    return v;
}

Vec kron(const Vec& a, const Vec& b) {
    Vec r;
    r.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) r.push_back(x * y);
    return r;
}

bool is_zero_vec(const Vec& v) {
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

Matrix Matrix::identity(const FieldSpec& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
    return m;
}

Vec Matrix::column(std::size_t j) const {
    Vec v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
}

void Matrix::set_column(std::size_t j, const Vec& v) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Vec Matrix::apply(const Vec& v) const {
    Vec r = zero_vec(f_, rows_);
    for (std::size_t j = 0; j < cols_; ++j) {
        if (v[j].is_zero()) continue;
        for (std::size_t i = 0; i < rows_; ++i) r[i].add_product((*this)(i, j), v[j]);
    }
    return r;
}

Matrix Matrix::transpose() const {
    Matrix t(f_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::operator*(const Matrix& b) const {
    Matrix r(f_, rows_, b.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& x = (*this)(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) r(i, j).add_product(x, b(k, j));
        }
    return r;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const Scalar& x = (*this)(i, j);
            if (i == j ? !x.is_one() : !x.is_zero()) return false;
        }
    return true;
}

// ---------------------------------------------------------------------------

RowReducer::RowReducer(const FieldSpec& f, std::size_t unknowns) : f_(f), n_(unknowns) {}

void RowReducer::add_equation(Vec coeffs, const Scalar& rhs) {
    if (inconsistent_) return;
    coeffs.push_back(rhs);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        std::size_t p = pivots_[r];
        if (coeffs[p].is_zero()) continue;
        Scalar c = coeffs[p];
        const Vec& row = rows_[r];
        for (std::size_t j = p; j <= n_; ++j)
            if (!row[j].is_zero()) coeffs[j] -= c * row[j];
    }
    std::size_t p = 0;
    while (p < n_ && coeffs[p].is_zero()) ++p;
    if (p == n_) {
        if (!coeffs[n_].is_zero()) inconsistent_ = true;
        return;
    }
    Scalar inv = coeffs[p].inv();
    for (std::size_t j = p; j <= n_; ++j)
        if (!coeffs[j].is_zero()) coeffs[j] = coeffs[j] * inv;
    // keep rows sorted by pivot column
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(coeffs));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
}

SolutionSet RowReducer::solve() const {
    SolutionSet out;
    if (inconsistent_) return out;
    out.consistent = true;
    // back substitution to reduced row echelon form
    std::vector<Vec> rr = rows_;
    for (std::size_t r = rr.size(); r-- > 0;) {
        std::size_t p = pivots_[r];
        for (std::size_t s = 0; s < r; ++s) {
            if (rr[s][p].is_zero()) continue;
            Scalar c = rr[s][p];
            for (std::size_t j = p; j <= n_; ++j)
                if (!rr[r][j].is_zero()) rr[s][j] -= c * rr[r][j];
        }
    }
    std::vector<bool> is_pivot(n_, false);
    for (auto p : pivots_) is_pivot[p] = true;
    out.particular = zero_vec(f_, n_);
    for (std::size_t r = 0; r < rr.size(); ++r) out.particular[pivots_[r]] = rr[r][n_];
    for (std::size_t free = 0; free < n_; ++free) {
        if (is_pivot[free]) continue;
        Vec v = zero_vec(f_, n_);
        v[free] = Scalar::one(f_);
        for (std::size_t r = 0; r < rr.size(); ++r) v[pivots_[r]] = -rr[r][free];
        out.kernel.push_back(std::move(v));
    }
    return out;
}

SolutionSet solve_linear(const Matrix& a, const Vec& b) {
    RowReducer red(a.field(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Vec row(a.cols());
        for (std::size_t j = 0; j < a.cols(); ++j) row[j] = a(i, j);
        red.add_equation(std::move(row), b[i]);
    }
    return red.solve();
}

std::vector<Vec> kernel(const Matrix& a) { return solve_linear(a, zero_vec(a.field(), a.rows())).kernel; }

std::size_t rank(const Matrix& a) {
    RowReducer red(a.field(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Vec row(a.cols());
        for (std::size_t j = 0; j < a.cols(); ++j) row[j] = a(i, j);
        red.add_equation(std::move(row));
    }
    return red.rank();
}

std::optional<Matrix> inverse(const Matrix& a) {
    if (a.rows() != a.cols()) return std::nullopt;
    std::size_t n = a.rows();
    const FieldSpec& f = a.field();
    // Gauss-Jordan on [A | I]
    std::vector<Vec> m(n, Vec(2 * n, Scalar::zero(f)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
        m[i][n + i] = Scalar::one(f);
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c].is_zero()) ++p;
        if (p == n) return std::nullopt;
        std::swap(m[p], m[c]);
        Scalar inv = m[c][c].inv();
        for (auto& x : m[c]) if (!x.is_zero()) x = x * inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c].is_zero()) continue;
            Scalar k = m[r][c];
            for (std::size_t j = c; j < 2 * n; ++j)
                if (!m[c][j].is_zero()) m[r][j] -= k * m[c][j];
        }
    }
    Matrix out(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = m[i][n + j];
    return out;
}

} // namespace qhopf
