#ifndef LIE2KIT_GENERATORS_HPP
#define LIE2KIT_GENERATORS_HPP

#include "lie2kit/rep.hpp"
#include "lie2kit/rng.hpp"
#include "lie2kit/xmod.hpp"

namespace lie2kit {

// Seeded sample spaces for the property checkers. Lie algebras come from a
// small catalog closed under exact basis changes, so Jacobi always holds;
// representations come from strict seeds deformed by a homotopy gauge, so
// the rep equations always hold with generically nonzero nu.

LieAlgebra heisenberg3();     // [e1,e2] = e3 central
LieAlgebra sl2();             // [h,e] = 2e, [h,f] = -2f, [e,f] = h
LieAlgebra cross_product3();  // so(3): [e1,e2] = e3 cyclically
LieAlgebra affine2();         // [e1,e2] = e2

LieAlgebra random_lie_algebra(int dim, Rng& rng);
TwoTermComplex random_complex(int max_dim, Rng& rng);

// mu(X) = X/2 on V -Id-> V with nu = [.,.]/4, for any matrix Lie algebra.
RepUpToHomotopy half_adjoint_rep(const LieAlgebra& g, const std::vector<Matrix>& matrix_model);

// Deforms a valid rep by eta: g -> Hom(V0, V1):
//   mu'  = mu + delta(eta)
//   nu'(X,Y) = nu(X,Y) + eta([X,Y]) + [mu(Y), eta(X)] - [mu(X), eta(Y)]
//              - (eta X) d (eta Y) + (eta Y) d (eta X)
// The result satisfies the rep equations whenever the input does.
RepUpToHomotopy gauge_shift(const RepUpToHomotopy& r, const std::vector<Matrix>& eta);

// Random valid rep with generically nonzero nu; dims at most max_dim.
RepUpToHomotopy random_rep(int max_dim, Rng& rng);
RepUpToHomotopy random_rep(const LieAlgebra& g, const TwoTermComplex& c, Rng& rng);

// Random valid crossed module: End(V) of a random complex, an adjoint
// crossed module from the catalog, or a strict semidirect product, under a
// random basis change.
CrossedModuleAlg random_xmod(int max_dim, Rng& rng);

// Basis change of a crossed module by invertible p1, p0.
CrossedModuleAlg xmod_change_basis(const CrossedModuleAlg& x, const Matrix& p1, const Matrix& p0);

} // namespace lie2kit

#endif
