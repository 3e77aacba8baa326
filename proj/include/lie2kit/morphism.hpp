#ifndef LIE2KIT_MORPHISM_HPP
#define LIE2KIT_MORPHISM_HPP

#include "lie2kit/lie2.hpp"

namespace lie2kit {

// Morphism of Lie 2-algebras: chain maps f0, f1 plus a skew bilinear
// correction f2 measuring the failure of f0 to preserve brackets.
struct Lie2Morphism {
    Matrix f0;        // W0 x L0
    Matrix f1;        // W1 x L1
    BilinearMap f2;   // L0 x L0 -> W1

    Lie2Morphism() : f0(0, 0), f1(0, 0), f2(0, 0, 0) {}
    Lie2Morphism(Matrix f0_, Matrix f1_, BilinearMap f2_);

    static Lie2Morphism strict(Matrix f0_, Matrix f1_);
    static Lie2Morphism identity(const Lie2Algebra& a);

    bool is_strict() const { return f2.is_zero(); }
};

// Verifies the chain-map condition and the three defining equations on basis
// tuples, including the l3 terms when either side is nonstrict.
Report check_morphism(const Lie2Algebra& src, const Lie2Algebra& dst, const Lie2Morphism& f);

// g after f; the correction of the composite is g2(f0 x, f0 y) + g1(f2(x, y)).
Lie2Morphism compose(const Lie2Morphism& g, const Lie2Morphism& f);

bool morphism_equal(const Lie2Morphism& a, const Lie2Morphism& b);

// True when f induces isomorphisms on ker(d) and coker(d). Exact rank
// computation, no tolerances. Throws NotChainMap unless d f1 = f0 d.
bool quasi_iso_check(const Lie2Algebra& src, const Lie2Algebra& dst, const Lie2Morphism& f);
bool quasi_iso_check(const TwoTermComplex& src, const TwoTermComplex& dst, const Matrix& f0,
                     const Matrix& f1);

} // namespace lie2kit

#endif
