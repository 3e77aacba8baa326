#include "lie2kit/matrix.hpp"

#include <sstream>

#include "lie2kit/errors.hpp"

namespace lie2kit {

Vec Vec::unit(int n, int i) {
    Vec v(n);
    v[i] = 1;
    return v;
}

Vec Vec::concat(const Vec& a, const Vec& b) {
    Vec r(a.dim() + b.dim());
    for (int i = 0; i < a.dim(); ++i) r[i] = a[i];
    for (int i = 0; i < b.dim(); ++i) r[a.dim() + i] = b[i];
    return r;
}

bool Vec::is_zero() const {
    for (const auto& x : e)
        if (!x.is_zero()) return false;
    return true;
}

Vec Vec::slice(int begin, int len) const {
    Vec r(len);
    for (int i = 0; i < len; ++i) r[i] = (*this)[begin + i];
    return r;
}

Vec& Vec::operator+=(const Vec& o) {
    if (dim() != o.dim()) throw ShapeMismatch("vector addition dims differ");
    for (int i = 0; i < dim(); ++i) e[static_cast<size_t>(i)] += o[i];
    return *this;
}

Vec& Vec::operator-=(const Vec& o) {
    if (dim() != o.dim()) throw ShapeMismatch("vector subtraction dims differ");
    for (int i = 0; i < dim(); ++i) e[static_cast<size_t>(i)] -= o[i];
    return *this;
}

Vec Vec::operator-() const {
    Vec r(dim());
    for (int i = 0; i < dim(); ++i) r[i] = -(*this)[i];
    return r;
}

Vec operator*(const Rational& s, const Vec& v) {
    Vec r(v.dim());
    if (s.is_zero()) return r;
    for (int i = 0; i < v.dim(); ++i) r[i] = s * v[i];
    return r;
}

std::string Vec::str() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < dim(); ++i) {
        if (i) os << ", ";
        os << (*this)[i].str();
    }
    os << ")";
    return os.str();
}

Matrix::Matrix(int rows, int cols, std::initializer_list<Rational> entries)
    : rows_(rows), cols_(cols), e_(entries) {
    if (static_cast<int>(e_.size()) != rows * cols) throw ShapeMismatch("matrix initializer size");
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_cols(int rows, const std::vector<Vec>& cols) {
    Matrix m(rows, static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols(); ++j) {
        if (cols[static_cast<size_t>(j)].dim() != rows) throw ShapeMismatch("from_cols column dim");
        for (int i = 0; i < rows; ++i) m.at(i, j) = cols[static_cast<size_t>(j)][i];
    }
    return m;
}

Matrix Matrix::diag(const Vec& v) {
    Matrix m(v.dim(), v.dim());
    for (int i = 0; i < v.dim(); ++i) m.at(i, i) = v[i];
    return m;
}

Vec Matrix::col(int j) const {
    Vec v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

Vec Matrix::row(int i) const {
    Vec v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

Vec Matrix::flatten() const {
    Vec v(rows_ * cols_);
    v.e = e_;
    return v;
}

Matrix Matrix::unflatten(int rows, int cols, const Vec& v) {
    if (v.dim() != rows * cols) throw ShapeMismatch("unflatten size");
    Matrix m(rows, cols);
    m.e_ = v.e;
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix addition shapes differ");
    Matrix r(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix subtraction shapes differ");
    Matrix r(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
    return r;
}

Matrix Matrix::operator-() const {
    Matrix r(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = -e_[k];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw ShapeMismatch("matrix product shapes differ");
    Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Rational& b = o.at(k, j);
                if (!b.is_zero()) r.at(i, j) += a * b;
            }
        }
    return r;
}

Vec Matrix::operator*(const Vec& v) const {
    if (cols_ != v.dim()) throw ShapeMismatch("matrix-vector shapes differ");
    Vec r(rows_);
    for (int j = 0; j < cols_; ++j) {
        const Rational& x = v[j];
        if (x.is_zero()) continue;
        for (int i = 0; i < rows_; ++i) {
            const Rational& a = at(i, j);
            if (!a.is_zero()) r[i] += a * x;
        }
    }
    return r;
}

Matrix operator*(const Rational& s, const Matrix& m) {
    Matrix r(m.rows_, m.cols_);
    if (s.is_zero()) return r;
    for (size_t k = 0; k < m.e_.size(); ++k) r.e_[k] = s * m.e_[k];
    return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw ShapeMismatch("hstack row counts differ");
    Matrix r(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw ShapeMismatch("vstack column counts differ");
    Matrix r(a.rows() + b.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
    return r;
}

Matrix Matrix::submatrix(int row0, int col0, int nrows, int ncols) const {
    Matrix r(nrows, ncols);
    for (int i = 0; i < nrows; ++i)
        for (int j = 0; j < ncols; ++j) r.at(i, j) = at(row0 + i, col0 + j);
    return r;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        if (i) os << "; ";
        for (int j = 0; j < cols_; ++j) {
            if (j) os << " ";
            os << at(i, j).str();
        }
    }
    os << "]";
    return os.str();
}

RrefResult rref(const Matrix& a) {
    RrefResult res;
    res.m = a;
    Matrix& m = res.m;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m.at(i, c).is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
        Rational inv = Rational(1) / m.at(r, c);
        for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Rational f = m.at(i, c);
            for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        res.pivot_cols.push_back(c);
        ++r;
    }
    return res;
}

int rank(const Matrix& a) { return rref(a).rank(); }

std::vector<Vec> kernel_basis(const Matrix& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
    for (int c : rr.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<Vec> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        Vec v(m.cols());
        v[f] = 1;
        for (size_t i = 0; i < rr.pivot_cols.size(); ++i)
            v[rr.pivot_cols[i]] = -rr.m.at(static_cast<int>(i), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix invert(const Matrix& m) {
    if (!m.is_square()) throw ShapeMismatch("inverse of non-square matrix");
    int n = m.rows();
    RrefResult rr = rref(Matrix::hstack(m, Matrix::identity(n)));
    if (rr.rank() < n || (rr.rank() > 0 && rr.pivot_cols.back() >= n)) throw SingularMatrix();
    return rr.m.submatrix(0, n, n, n);
}

Matrix solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw ShapeMismatch("solve row counts differ");
    RrefResult rr = rref(Matrix::hstack(a, b));
    Matrix x(a.cols(), b.cols());
    int nrows_used = rr.rank();
    for (int i = 0; i < nrows_used; ++i) {
        int p = rr.pivot_cols[static_cast<size_t>(i)];
        if (p >= a.cols()) throw NoSolution();
        for (int j = 0; j < b.cols(); ++j) x.at(p, j) = rr.m.at(i, a.cols() + j);
    }
    // Rows below the pivots must be zero on the right hand side too.
    for (int i = nrows_used; i < rr.m.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j)
            if (!rr.m.at(i, a.cols() + j).is_zero()) throw NoSolution();
    return x;
}

Vec solve(const Matrix& a, const Vec& b) {
    Matrix rhs = Matrix::from_cols(b.dim(), {b});
    return solve(a, rhs).col(0);
}

Matrix column_space_canonical(const Matrix& m) {
    RrefResult rr = rref(m.transpose());
    Matrix rowsp(rr.rank(), m.rows());
    for (int i = 0; i < rr.rank(); ++i)
        for (int j = 0; j < m.rows(); ++j) rowsp.at(i, j) = rr.m.at(i, j);
    return rowsp.transpose();
}

bool same_column_space(const Matrix& a, const Matrix& b) {
    return column_space_canonical(a) == column_space_canonical(b);
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
        }
    return r;
}

} // namespace lie2kit
