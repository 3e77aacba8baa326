#ifndef LIE2KIT_XMOD_HPP
#define LIE2KIT_XMOD_HPP

#include "lie2kit/lie2.hpp"

namespace lie2kit {

// Crossed module of Lie algebras (h1, h0, dt, phi): dt equivariant and
// phi_{dt(A)} the adjoint action of A. Both bracket tensors are required to
// be antisymmetric at construction; everything else is the checker's job.
struct CrossedModuleAlg {
    int dim_h1 = 0;
    int dim_h0 = 0;
    BilinearMap bracket_h1;  // h1 x h1 -> h1
    BilinearMap bracket_h0;  // h0 x h0 -> h0
    Matrix dt;               // h0 x h1
    BilinearMap phi;         // h0 x h1 -> h1

    CrossedModuleAlg()
        : bracket_h1(0, 0, 0), bracket_h0(0, 0, 0), dt(0, 0), phi(0, 0, 0) {}
    CrossedModuleAlg(int dim_h1_, int dim_h0_, BilinearMap bracket_h1_, BilinearMap bracket_h0_,
                     Matrix dt_, BilinearMap phi_);

    // (0, g, 0, 0): a Lie algebra as a crossed module concentrated in h0.
    static CrossedModuleAlg trivial(const LieAlgebra& g);
};

// Jacobi for both brackets, dt a bracket morphism, phi an action by
// derivations, equivariance of dt, and the Peiffer identity, all exact on
// basis tuples.
Report check_crossed_module(const CrossedModuleAlg& x);

// The strict dictionary: a crossed module and a strict Lie 2-algebra carry
// the same data. Round trips are identities on the nose.
CrossedModuleAlg dgla_to_xmod(const Lie2Algebra& a);  // throws NotStrict when l3 != 0
Lie2Algebra xmod_to_dgla(const CrossedModuleAlg& x);

// (k, Der(k), ad, tautological action).
CrossedModuleAlg adjoint_xmod(const LieAlgebra& k);

} // namespace lie2kit

#endif
