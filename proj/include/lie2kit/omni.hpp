#ifndef LIE2KIT_OMNI_HPP
#define LIE2KIT_OMNI_HPP

#include "lie2kit/butterfly.hpp"

namespace lie2kit {

// Element of gl(V) + V for V = Q^n.
struct OmniElement {
    Matrix a;  // n x n
    Vec u;     // n

    OmniElement(Matrix a_, Vec u_);
    int n() const { return a.rows(); }
};

// [(A,u),(B,v)] = ([A,B], (Av - Bu)/2); the 1/2 breaks Jacobi.
OmniElement omni_bracket(const OmniElement& x, const OmniElement& y);

// <(A,u),(B,v)> = (Av + Bu)/2, symmetric and V-valued.
Vec omni_pairing(const OmniElement& x, const OmniElement& y);

// ([A,B]w + [B,C]u + [C,A]v)/4: the V-valued Jacobiator of the bracket.
// The gl part of the cyclic double bracket vanishes; this is its V part.
Vec jacobiator(const OmniElement& x, const OmniElement& y, const OmniElement& z);

// The representation up to homotopy behind the construction:
// mu(A) = A/2 on V -Id-> V, nu(A,B) = [A,B]/4.
RepUpToHomotopy omni_rep(int n);

// The Lie 2-algebra V -> gl(V)+V with l2 the omni bracket and l3 = -T.
Lie2Algebra build_omni_lie2(int n);

// The full strictification pipeline specialized to the omni rep.
StrictifiedSemidirect omni_strictified(int n);

// Skew bilinear operation on V; antisymmetry enforced, Jacobi is not.
struct SkewBracket {
    int dim = 0;
    BilinearMap b;

    SkewBracket() : b(0, 0, 0) {}
    SkewBracket(int dim_, BilinearMap b_);

    Matrix ad(const Vec& u) const;  // ad_u(v) = [u, v]
};

// Graph criterion: the graph {(ad_u, u)} is always maximal isotropic for a
// skew bracket (verified, not assumed), and it is closed under the omni
// bracket exactly when the bracket satisfies Jacobi. Reports isotropy,
// maximality, closure, Jacobi, and asserts closure <=> Jacobi.
Report check_dirac_graph(const SkewBracket& b);

// The pullback of the graph sub-2-algebra W -> G_ad through the omni
// strictification: builds the crossed module
// (gl(V) x W, gl(V) x V, Id x i, phi), checks it, checks the connecting
// morphism (psi0, psi1, psi2), commutativity of the pullback square,
// and that both vertical morphisms are equivalences of complexes.
// w_basis columns span a central subspace W of (V, b).
// Throws NotJacobi / NotCentral on bad input.
Report dirac_pullback_check(const SkewBracket& b, const Matrix& w_basis);

} // namespace lie2kit

#endif
