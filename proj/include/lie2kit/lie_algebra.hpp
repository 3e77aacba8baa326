#ifndef LIE2KIT_LIE_ALGEBRA_HPP
#define LIE2KIT_LIE_ALGEBRA_HPP

#include <vector>

#include "lie2kit/multilinear.hpp"

namespace lie2kit {

// Finite-dimensional Lie algebra over Q given by structure constants.
// Antisymmetry and the Jacobi identity are enforced at construction so that
// downstream checkers can attribute failures to their own data.
struct LieAlgebra {
    int dim = 0;
    BilinearMap bracket;

    LieAlgebra() : bracket(0, 0, 0) {}
    LieAlgebra(int dim_, BilinearMap bracket_);

    Vec bracket_of(const Vec& x, const Vec& y) const { return bracket.eval(x, y); }

    static LieAlgebra abelian(int n);
};

bool jacobi_holds(const BilinearMap& bracket);

// Structure constants of a Lie algebra of matrices spanned by a closed basis.
// Throws NoSolution when the span is not closed under commutators.
BilinearMap commutator_structure(const std::vector<Matrix>& basis);

// Conjugates the structure constants by a basis change: the new basis is
// given by the columns of p.
LieAlgebra change_basis(const LieAlgebra& g, const Matrix& p);

// gl(n) on the elementary-matrix basis, flattened row-major.
LieAlgebra gl_algebra(int n);

struct DerivationAlgebra {
    LieAlgebra alg;                 // Der(g) with the commutator bracket
    std::vector<Matrix> basis;      // derivations as matrices on g
    Matrix ad;                      // g -> Der(g) in the chosen basis
};

// Derivations D with D[x,y] = [Dx,y] + [x,Dy], exact kernel computation.
DerivationAlgebra derivations(const LieAlgebra& g);

} // namespace lie2kit

#endif
