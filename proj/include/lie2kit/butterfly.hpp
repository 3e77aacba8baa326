#ifndef LIE2KIT_BUTTERFLY_HPP
#define LIE2KIT_BUTTERFLY_HPP

#include "lie2kit/rep.hpp"

namespace lie2kit {

// Butterfly between crossed modules: a Lie algebra e on g0 + h1 with the
// four legs kappa, iota, sigma, rho. Both diagonals are complexes, the
// NE-SW sequence h1 -> e -> g0 is short exact, and the bracket of e is
// compatible with the two actions.
struct Butterfly {
    CrossedModuleAlg src;  // g = (g1, g0, dt, phi)
    CrossedModuleAlg dst;  // h = (h1, h0, dt, phi)
    LieAlgebra e;          // dim g0 + dim h1
    Matrix kappa;          // g1 -> e
    Matrix iota;           // h1 -> e
    Matrix sigma;          // e -> g0
    Matrix rho;            // e -> h0

    Report validate() const;

    // NW-SE short exactness; holds exactly when the encoded morphism is an
    // equivalence. Kept separate from validate(), never assumed.
    bool nw_se_exact() const;
};

// Noohi's butterfly of a (possibly nonstrict) morphism f: src -> dst between
// the associated Lie 2-algebras: bracket on g0 + h1
//   [(X,A),(Y,B)] = ([X,Y], [A,B] + phi_{f0 X} B - phi_{f0 Y} A - f2(X,Y)),
// kappa A = (dt A, -f1 A), iota B = (0, B), sigma (X,B) = X,
// rho (X,B) = f0 X + dt B. Throws NotAMorphism when f fails check_morphism.
Butterfly butterfly_from_morphism(const Lie2Morphism& f, const CrossedModuleAlg& src,
                                  const CrossedModuleAlg& dst);

// Pullback crossed module (g1 x_{g0} e, e, dt, phi) with the fiber product
// realized as an explicit kernel subspace with canonical basis.
struct PullbackXmod {
    CrossedModuleAlg xmod;
    Matrix fiber_basis;  // (dim g1 + dim e) x dim fiber, canonical kernel basis
};
PullbackXmod pullback_xmod(const Butterfly& b);

// The two strict morphisms out of the pullback: (pr1, sigma) back to src,
// which is an equivalence of complexes, and (psi1, rho) to dst with
// psi1(A, e) = iota^{-1}(e - kappa A).
struct StrictificationMorphisms {
    Lie2Morphism to_src;
    Lie2Morphism to_dst;
};
StrictificationMorphisms strictification_morphisms(const Butterfly& b, const PullbackXmod& p);

// Full strictification of the semidirect product of g with a representation
// up to homotopy: pull the rep morphism back through its butterfly, then
// form the strict semidirect product (k1 x| V1, (g + k1) x| V0, i2 x d, phi).
struct StrictifiedSemidirect {
    EndData end;
    Butterfly butterfly;
    PullbackXmod pullback;
    CrossedModuleAlg xmod;      // the strict model
    Lie2Algebra strict2;        // xmod as a Lie 2-algebra
    Lie2Algebra target;         // g x| V from the rep
    Lie2Morphism equivalence;   // strict2 -> target: (X,A,xi) -> (X,xi), (A,m) -> m,
                                // f2((X,A,xi),(Y,B,eta)) = A eta - B xi
    Lie2Morphism inclusion;     // target -> strict2: m -> (0,m), (X,xi) -> (X,0,xi),
                                // f2((X,xi),(Y,eta)) = (nu(X,Y), 0)
};
StrictifiedSemidirect strictified_semidirect(const RepUpToHomotopy& r);

} // namespace lie2kit

#endif
