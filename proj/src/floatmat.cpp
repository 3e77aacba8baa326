#include "lie2kit/floatmat.hpp"

#include <cmath>

#include "lie2kit/errors.hpp"

namespace lie2kit {

FloatMatrix::FloatMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * static_cast<size_t>(cols), 0.0) {}

FloatMatrix::FloatMatrix(int rows, int cols, std::initializer_list<double> entries)
    : rows_(rows), cols_(cols), e_(entries) {
    if (static_cast<int>(e_.size()) != rows * cols) throw ShapeMismatch("float matrix initializer size");
    check_finite();
}

FloatMatrix FloatMatrix::identity(int n) {
    FloatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

FloatMatrix FloatMatrix::from_rational(const Matrix& m) {
    FloatMatrix f(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) f.at(i, j) = m.at(i, j).to_double();
    return f;
}

void FloatMatrix::check_finite() const {
    for (double x : e_)
        if (!std::isfinite(x)) throw BadStructure("float matrix entry is not finite");
}

bool FloatMatrix::is_zero() const {
    for (double x : e_)
        if (x != 0.0) return false;
    return true;
}

double FloatMatrix::norm_inf() const {
    double best = 0.0;
    for (int i = 0; i < rows_; ++i) {
        double s = 0.0;
        for (int j = 0; j < cols_; ++j) s += std::fabs(at(i, j));
        if (s > best) best = s;
    }
    return best;
}

FloatMatrix FloatMatrix::operator+(const FloatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("float matrix addition shapes differ");
    FloatMatrix r(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
    return r;
}

FloatMatrix FloatMatrix::operator-(const FloatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("float matrix subtraction shapes differ");
    FloatMatrix r(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
    return r;
}

FloatMatrix FloatMatrix::operator*(const FloatMatrix& o) const {
    if (cols_ != o.rows_) throw ShapeMismatch("float matrix product shapes differ");
    FloatMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            double a = at(i, k);
            if (a == 0.0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

FloatMatrix operator*(double s, const FloatMatrix& m) {
    FloatMatrix r(m.rows_, m.cols_);
    for (size_t k = 0; k < m.e_.size(); ++k) r.e_[k] = s * m.e_[k];
    return r;
}

bool operator==(const FloatMatrix& a, const FloatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

double max_abs_diff(const FloatMatrix& a, const FloatMatrix& b) {
    double best = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            double d = std::fabs(a.at(i, j) - b.at(i, j));
            if (d > best) best = d;
        }
    return best;
}

namespace {

bool is_nilpotent(const FloatMatrix& m) {
    FloatMatrix p = m;
    for (int k = 1; k < m.rows(); ++k) {
        if (p.is_zero()) return true;
        p = p * m;
    }
    return p.is_zero();
}

// Taylor sum; stops when a term vanishes exactly (nilpotent case) or falls
// below the working precision of the accumulated result.
FloatMatrix expm_taylor(const FloatMatrix& m) {
    int n = m.rows();
    FloatMatrix sum = FloatMatrix::identity(n);
    FloatMatrix term = FloatMatrix::identity(n);
    for (int k = 1; k <= 128; ++k) {
        term = (1.0 / k) * (term * m);
        if (term.is_zero()) break;
        sum = sum + term;
        if (term.norm_inf() < 1e-18 * (1.0 + sum.norm_inf())) break;
    }
    return sum;
}

} // namespace

FloatMatrix expm(const FloatMatrix& m) {
    if (!m.is_square()) throw ShapeMismatch("expm of non-square matrix");
    m.check_finite();
    if (m.rows() == 0) return m;
    if (is_nilpotent(m)) return expm_taylor(m);
    int s = 0;
    double nrm = m.norm_inf();
    while (nrm > 0.5) {
        nrm /= 2.0;
        ++s;
    }
    FloatMatrix r = expm_taylor(std::ldexp(1.0, -s) * m);
    for (int i = 0; i < s; ++i) r = r * r;
    return r;
}

FloatMatrix expm_phi1(const FloatMatrix& m) {
    if (!m.is_square()) throw ShapeMismatch("phi1 of non-square matrix");
    int n = m.rows();
    // expm([[X, I], [0, 0]]) = [[e^X, phi1(X)], [0, I]]
    FloatMatrix aug(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1.0;
    }
    FloatMatrix e = expm(aug);
    FloatMatrix r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.at(i, j) = e.at(i, n + j);
    return r;
}

} // namespace lie2kit
