#ifndef LIE2KIT_LIE2_HPP
#define LIE2KIT_LIE2_HPP

#include <vector>

#include "lie2kit/complex.hpp"
#include "lie2kit/lie_algebra.hpp"
#include "lie2kit/multilinear.hpp"
#include "lie2kit/report.hpp"

namespace lie2kit {

// Homogeneous element of a two-term graded vector space. Degrees outside
// {0, 1} only appear as canonical zeros produced by the bracket evaluator.
struct GradedElement {
    int degree = 0;
    Vec v;

    bool is_zero() const { return v.is_zero(); }
};

// Two-term L-infinity algebra: complex V1 -d-> V0 together with
//   l2 on V0 x V0 -> V0 and V0 x V1 -> V1 (graded antisymmetric),
//   l3 on V0^3 -> V1 (antisymmetric).
// All higher brackets vanish for degree reasons.
class Lie2Algebra {
public:
    TwoTermComplex complex;
    BilinearMap l2_00;  // V0, V0 -> V0
    BilinearMap l2_01;  // V0, V1 -> V1
    TrilinearMap l3;    // V0^3 -> V1

    Lie2Algebra(TwoTermComplex c, BilinearMap l2_00_, BilinearMap l2_01_, TrilinearMap l3_);

    // A Lie algebra regarded as a Lie 2-algebra with V1 = 0.
    static Lie2Algebra from_lie(const LieAlgebra& g);

    int dim(int degree) const { return complex.dim(degree); }
    bool is_strict() const { return l3.is_zero(); }

    GradedElement basis_element(int degree, int i) const;
    GradedElement zero_element(int degree) const;

    // Generic k-ary bracket, k = 1..4; the result degree is
    // sum of argument degrees + (k - 2), clamped to a canonical zero
    // outside {0, 1}. Argument degrees must lie in {0, 1}.
    GradedElement l(int k, const std::vector<GradedElement>& args) const;

    GradedElement bracket2(const GradedElement& x, const GradedElement& y) const;
};

// Left hand side of the homotopy Jacobi relation of arity n evaluated on the
// given homogeneous arguments:
//   sum over i + j = n + 1, i >= 1, and (i, n-i)-unshuffles sigma of
//   (-1)^{i(j-1)} sgn(sigma) Ksgn(sigma) l_j(l_i(x_sigma(1..i)), x_sigma(i+1..n)).
// Zero on every input exactly when the structure is a Lie 2-algebra.
// Relations of arity 5 and up vanish identically here for degree reasons,
// so n is restricted to 1..4.
GradedElement linfty_defect(const Lie2Algebra& a, int n, const std::vector<GradedElement>& args);

// Runs the n = 1..4 relations over canonical basis tuples (tuples whose
// defect is not already forced to vanish by degree or antisymmetry).
Report check_lie2(const Lie2Algebra& a);

// Ordinary signature and Koszul sign of a permutation of graded symbols.
// koszul is the product of (-1)^{|a||b|} over the adjacent transpositions
// that sort the permutation.
struct PermSigns {
    int sgn = 1;
    int koszul = 1;
};
PermSigns perm_signs(const std::vector<int>& perm, const std::vector<int>& degrees);

} // namespace lie2kit

#endif
