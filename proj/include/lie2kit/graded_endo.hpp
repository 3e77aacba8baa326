#ifndef LIE2KIT_GRADED_ENDO_HPP
#define LIE2KIT_GRADED_ENDO_HPP

#include <optional>

#include "lie2kit/complex.hpp"

namespace lie2kit {

// Homogeneous graded endomorphism of a two-term complex. A map of degree k
// has blocks V_i -> V_{i+k} for those i with both indices in {0, 1}:
//   degree  1:  V0 -> V1
//   degree  0:  V0 -> V0 and V1 -> V1
//   degree -1:  V1 -> V0
// Degrees outside [-1, 1] carry no blocks and stand for the zero map.
class GradedEndo {
public:
    static GradedEndo deg1(const TwoTermComplex& c, Matrix m);
    static GradedEndo deg0(const TwoTermComplex& c, Matrix a0, Matrix a1);
    static GradedEndo deg_minus1(const TwoTermComplex& c, Matrix m);
    static GradedEndo zero(const TwoTermComplex& c, int degree);

    int degree() const { return degree_; }

    // Block with source V_i, when the target V_{i+degree} exists.
    const std::optional<Matrix>& block_from(int i) const { return i == 0 ? from_v0_ : from_v1_; }

    // Shorthand accessors; throw when the block is absent.
    const Matrix& up() const;    // degree 1 block V0 -> V1
    const Matrix& a0() const;    // degree 0 block on V0
    const Matrix& a1() const;    // degree 0 block on V1
    const Matrix& down() const;  // degree -1 block V1 -> V0

    bool is_zero() const;

    GradedEndo operator+(const GradedEndo& o) const;
    GradedEndo operator-(const GradedEndo& o) const;
    friend GradedEndo operator*(const Rational& s, const GradedEndo& t);
    friend bool operator==(const GradedEndo& a, const GradedEndo& b);

    friend GradedEndo compose(const GradedEndo& t, const GradedEndo& s);

private:
    GradedEndo(const TwoTermComplex& c, int degree);
    int n0() const { return n0_; }
    int n1() const { return n1_; }

    int degree_ = 0;
    int n0_ = 0, n1_ = 0;
    std::optional<Matrix> from_v0_, from_v1_;
};

// delta(T) = d . T - (-1)^k T . d for T of degree k. Drops the degree by one;
// degree -1 input would land in degree -2, which is not represented.
GradedEndo delta(const TwoTermComplex& c, const GradedEndo& t);

// [T, S] = T . S - (-1)^{|T||S|} S . T. A result of degree outside [-1, 1]
// is returned as the zero object of that degree.
GradedEndo super_bracket(const TwoTermComplex& c, const GradedEndo& t, const GradedEndo& s);

} // namespace lie2kit

#endif
