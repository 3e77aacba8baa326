#ifndef LIE2KIT_REP_HPP
#define LIE2KIT_REP_HPP

#include <vector>

#include "lie2kit/end_dgla.hpp"
#include "lie2kit/lie_algebra.hpp"
#include "lie2kit/morphism.hpp"

namespace lie2kit {

// Two-term representation up to homotopy (V, mu, nu) of a Lie algebra g:
// actions mu0, mu1 on V0, V1 compatible with d, and a skew 2-form nu with
// values in Hom(V0, V1) controlling the failure of mu to be an action.
struct RepUpToHomotopy {
    LieAlgebra g;
    TwoTermComplex complex;
    std::vector<Matrix> mu0;               // one V0 -> V0 block per g basis vector
    std::vector<Matrix> mu1;               // one V1 -> V1 block per g basis vector
    std::vector<std::vector<Matrix>> nu;   // nu[a][b]: V0 -> V1, antisymmetric in (a, b)

    RepUpToHomotopy(LieAlgebra g_, TwoTermComplex c, std::vector<Matrix> mu0_,
                    std::vector<Matrix> mu1_, std::vector<std::vector<Matrix>> nu_);

    // Trivial (zero) action with nu = 0.
    static RepUpToHomotopy zero(LieAlgebra g_, TwoTermComplex c);

    Matrix mu0_of(const Vec& x) const;
    Matrix mu1_of(const Vec& x) const;
    Matrix nu_of(const Vec& x, const Vec& y) const;
};

// The four compatibility equations, exact on basis tuples.
Report check_rep(const RepUpToHomotopy& r);

// Semidirect product Lie 2-algebra g x| V on the complex V1 -> g + V0.
// Throws InvalidRep when check_rep fails.
Lie2Algebra semidirect_lie2(const RepUpToHomotopy& r);

// A rep is the same thing as a morphism from g (trivial crossed module) to
// End(V): f0 = mu in k0 coordinates, f1 = 0, f2 = nu. Round trips are
// identities on the nose.
struct RepAsMorphism {
    EndData end;
    Lie2Algebra src;  // g as a strict Lie 2-algebra
    Lie2Algebra dst;  // End(V) as a strict Lie 2-algebra
    Lie2Morphism f;
};
RepAsMorphism rep_to_morphism(const RepUpToHomotopy& r);  // throws ImageNotInKernel
RepUpToHomotopy morphism_to_rep(const LieAlgebra& g, const EndData& end, const Lie2Morphism& f);

// Semidirect product crossed module (h1 x| V1, h0 x| V0, dt x d, phi) of a
// crossed module h acting on a complex through a strict morphism
// (psi1, psi0) into End(c), both given in End coordinates.
// Throws NotStrictMorphism when (psi1, psi0) fails the strict morphism test.
CrossedModuleAlg strict_semidirect_xmod(const CrossedModuleAlg& h, const Matrix& psi0,
                                        const Matrix& psi1, const TwoTermComplex& c);
CrossedModuleAlg strict_semidirect_xmod(const CrossedModuleAlg& h, const Matrix& psi0,
                                        const Matrix& psi1, const EndData& end);

} // namespace lie2kit

#endif
