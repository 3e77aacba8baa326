#ifndef LIE2KIT_END_DGLA_HPP
#define LIE2KIT_END_DGLA_HPP

#include <utility>
#include <vector>

#include "lie2kit/complex.hpp"
#include "lie2kit/graded_endo.hpp"
#include "lie2kit/xmod.hpp"

namespace lie2kit {

// The two-term truncation End^1(V) -delta-> ker(delta|End^0) of the
// endomorphism DGLA of a complex, together with the coordinate bookkeeping
// needed to move between matrices and basis coordinates.
//
// k1 = End(V0, V1) on the elementary-matrix basis (flattened row-major),
// with bracket [A,B] = A d B - B d A.
// k0 = pairs (P0, P1) with P0 d = d P1, canonical kernel basis, commutator
// bracket. dt is delta and phi_X(A) = [X, A].
class EndData {
public:
    explicit EndData(TwoTermComplex c);

    const TwoTermComplex& complex() const { return c_; }
    int dim_k1() const { return c_.dim_v0 * c_.dim_v1; }
    int dim_k0() const { return static_cast<int>(k0_basis_.size()); }

    const std::vector<std::pair<Matrix, Matrix>>& k0_basis() const { return k0_basis_; }

    // k1 coordinates <-> matrices V0 -> V1
    Vec k1_coords(const Matrix& m) const;
    Matrix k1_elem(const Vec& coords) const;

    // k0 coordinates <-> pairs (P0, P1); coords throws ImageNotInKernel when
    // the pair does not satisfy P0 d = d P1.
    Vec k0_coords(const Matrix& p0, const Matrix& p1) const;
    std::pair<Matrix, Matrix> k0_elem(const Vec& coords) const;

    Vec delta_coords(const Vec& k1_coords) const;  // delta: k1 -> k0 in coordinates
    const Matrix& delta_matrix() const { return delta_mat_; }

    const CrossedModuleAlg& xmod() const { return xmod_; }
    Lie2Algebra dgla() const { return xmod_to_dgla(xmod_); }

private:
    TwoTermComplex c_;
    std::vector<std::pair<Matrix, Matrix>> k0_basis_;
    Matrix k0_span_;    // (n0^2 + n1^2) x dim_k0, flattened pairs as columns
    Matrix delta_mat_;  // dim_k0 x dim_k1
    CrossedModuleAlg xmod_;
};

// The crossed module End(V) = (k1, k0, delta, [.,.]) of a two-term complex.
EndData end_crossed_module(const TwoTermComplex& c);

} // namespace lie2kit

#endif
