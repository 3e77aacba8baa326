#ifndef LIE2KIT_FLOATMAT_HPP
#define LIE2KIT_FLOATMAT_HPP

#include <vector>

#include "lie2kit/matrix.hpp"

namespace lie2kit {

// Double-precision matrix for the one place exact arithmetic cannot reach:
// matrix exponentials. Entries are required to be finite.
class FloatMatrix {
public:
    FloatMatrix() = default;
    FloatMatrix(int rows, int cols);
    FloatMatrix(int rows, int cols, std::initializer_list<double> entries);

    static FloatMatrix identity(int n);
    static FloatMatrix from_rational(const Matrix& m);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    double& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    double at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    void check_finite() const;  // throws BadStructure on NaN/Inf
    bool is_zero() const;
    double norm_inf() const;  // max absolute row sum

    FloatMatrix operator+(const FloatMatrix& o) const;
    FloatMatrix operator-(const FloatMatrix& o) const;
    FloatMatrix operator*(const FloatMatrix& o) const;
    friend FloatMatrix operator*(double s, const FloatMatrix& m);
    friend bool operator==(const FloatMatrix& a, const FloatMatrix& b);

private:
    int rows_ = 0, cols_ = 0;
    std::vector<double> e_;
};

double max_abs_diff(const FloatMatrix& a, const FloatMatrix& b);

// Matrix exponential. Nilpotent inputs are detected and summed to
// termination, which keeps them exact; everything else goes through
// scaling and squaring with a Taylor core.
FloatMatrix expm(const FloatMatrix& m);

// phi1(X) = (e^X - I) X^{-1} extended through the power series sum X^k/(k+1)!.
FloatMatrix expm_phi1(const FloatMatrix& m);

} // namespace lie2kit

#endif
