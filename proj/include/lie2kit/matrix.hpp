#ifndef LIE2KIT_MATRIX_HPP
#define LIE2KIT_MATRIX_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "lie2kit/rational.hpp"

namespace lie2kit {

// Column vector over the rationals.
struct Vec {
    std::vector<Rational> e;

    Vec() = default;
    explicit Vec(int n) : e(static_cast<size_t>(n)) {}
    Vec(std::initializer_list<Rational> xs) : e(xs) {}

    static Vec unit(int n, int i);
    static Vec concat(const Vec& a, const Vec& b);

    int dim() const { return static_cast<int>(e.size()); }
    Rational& operator[](int i) { return e[static_cast<size_t>(i)]; }
    const Rational& operator[](int i) const { return e[static_cast<size_t>(i)]; }

    bool is_zero() const;
    Vec slice(int begin, int len) const;

    Vec& operator+=(const Vec& o);
    Vec& operator-=(const Vec& o);
    Vec operator+(const Vec& o) const { Vec r = *this; r += o; return r; }
    Vec operator-(const Vec& o) const { Vec r = *this; r -= o; return r; }
    Vec operator-() const;
    friend Vec operator*(const Rational& s, const Vec& v);
    friend bool operator==(const Vec& a, const Vec& b) { return a.e == b.e; }

    std::string str() const;
};

// Dense rational matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}
    Matrix(int rows, int cols, std::initializer_list<Rational> entries);

    static Matrix identity(int n);
    static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }
    static Matrix from_cols(int rows, const std::vector<Vec>& cols);
    static Matrix diag(const Vec& v);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    Vec col(int j) const;
    Vec row(int i) const;
    Vec flatten() const;  // row-major
    static Matrix unflatten(int rows, int cols, const Vec& v);

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    Matrix transpose() const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator-() const;
    Matrix operator*(const Matrix& o) const;
    Vec operator*(const Vec& v) const;
    friend Matrix operator*(const Rational& s, const Matrix& m);
    friend bool operator==(const Matrix& a, const Matrix& b);

    // Stacks blocks side by side / on top of each other.
    static Matrix hstack(const Matrix& a, const Matrix& b);
    static Matrix vstack(const Matrix& a, const Matrix& b);
    Matrix submatrix(int row0, int col0, int nrows, int ncols) const;

    std::string str() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> e_;
};

struct RrefResult {
    Matrix m;
    std::vector<int> pivot_cols;
    int rank() const { return static_cast<int>(pivot_cols.size()); }
};

RrefResult rref(const Matrix& a);
int rank(const Matrix& a);

// Canonical null space basis: one vector per free column in ascending order,
// entry 1 at the free column, so equal kernels produce equal bases.
std::vector<Vec> kernel_basis(const Matrix& m);

Matrix invert(const Matrix& m);  // throws SingularMatrix

// Solves a·x = b exactly, column by column; free variables are set to zero.
// Throws NoSolution when inconsistent.
Matrix solve(const Matrix& a, const Matrix& b);
Vec solve(const Matrix& a, const Vec& b);

// Unique reduced basis of the column span, returned as columns.
Matrix column_space_canonical(const Matrix& m);
bool same_column_space(const Matrix& a, const Matrix& b);

Matrix kron(const Matrix& a, const Matrix& b);

} // namespace lie2kit

#endif
