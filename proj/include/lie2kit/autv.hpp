#ifndef LIE2KIT_AUTV_HPP
#define LIE2KIT_AUTV_HPP

#include "lie2kit/complex.hpp"
#include "lie2kit/floatmat.hpp"
#include "lie2kit/rng.hpp"

namespace lie2kit {

// Element of K0: block-diagonal pairs (B0, B1) of invertible matrices with
// B0 d = d B1. Validated at construction.
struct K0Element {
    TwoTermComplex c;
    Matrix b0, b1;

    K0Element(TwoTermComplex c_, Matrix b0_, Matrix b1_);
    static K0Element identity(const TwoTermComplex& c);
};

// Element of K1: M in End(V0, V1) with I + dM (equivalently I + Md)
// invertible. The group law is M1 . M2 = M1 + M2 + M1 d M2 with identity 0.
struct K1Element {
    TwoTermComplex c;
    Matrix m;  // dim_v1 x dim_v0

    K1Element(TwoTermComplex c_, Matrix m_);
    static K1Element identity(const TwoTermComplex& c);
};

K1Element k1_mul(const K1Element& a, const K1Element& b);
K1Element k1_inverse(const K1Element& a);  // -(I + M d)^{-1} M

K0Element k0_mul(const K0Element& a, const K0Element& b);
K0Element k0_inverse(const K0Element& a);

// The group morphism integrating delta: M -> (I + dM, Md + I).
K0Element int_delta(const K1Element& m);

// Action of K0 on K1: B1 M B0^{-1}.
K1Element phi_action(const K0Element& k, const K1Element& m);

// dim { M : dM = 0 and Md = 0 }; zero exactly when int_delta is injective,
// in which case Aut(V) is equivalent to the trivial crossed module on
// K0 / K1.
int int_delta_kernel_dim(const TwoTermComplex& c);

// Float bridge M = A . phi1(dA), so that I + dM = expm(dA) and
// I + Md = expm(Ad); exact for nilpotent dA.
FloatMatrix exp_bridge(const TwoTermComplex& c, const FloatMatrix& a);

// Seeded samplers (rejection on invertibility).
class EndData;
K1Element random_k1(const TwoTermComplex& c, Rng& rng, long bound);
K0Element random_k0(const EndData& end, Rng& rng, long bound);
K0Element random_k0(const TwoTermComplex& c, Rng& rng, long bound);

} // namespace lie2kit

#endif
