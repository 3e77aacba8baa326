#ifndef LIE2KIT_TWO_GROUP_HPP
#define LIE2KIT_TWO_GROUP_HPP

#include "lie2kit/autv.hpp"
#include "lie2kit/group_model.hpp"

namespace lie2kit {

// Strict 2-group model: groups of objects and arrows with source, target,
// vertical composition (v_mul(later, earlier), defined when
// source(later) == target(earlier)) and horizontal multiplication.
struct TwoGroup {
    std::function<GroupElem(const GroupElem&)> source, target;  // arrow -> object
    std::function<GroupElem(const GroupElem&, const GroupElem&)> v_mul;  // throws NotComposable
    std::function<GroupElem(const GroupElem&, const GroupElem&)> h_mul;  // arrows
    std::function<GroupElem(const GroupElem&, const GroupElem&)> h_mul_obj;
    std::function<GroupElem(const GroupElem&)> h_inv;  // arrow inverse for h_mul
    std::function<GroupElem(const GroupElem&)> identity_arrow;  // of an object
    GroupElem id_object, id_arrow;
    std::function<GroupElem(Rng&)> sample_arrow;
    std::function<GroupElem(const GroupElem&, Rng&)> sample_arrow_from;  // with given source
};

// Arrows are H0 x H1 pairs (g, h) with s = g, t = t(h) g; vertical pasting
// multiplies in H1, horizontal uses h . Phi_g h'.
TwoGroup two_group_from_xmod(const GroupXMod& x);

// Strict morphism of group crossed modules into Aut(V), given by callables.
struct GroupRep {
    std::function<K1Element(const GroupElem&)> psi1;
    std::function<K0Element(const GroupElem&)> psi0;
};

// Semidirect product 2-group on H0 x H1 x V0 x V1 over H0 x V0, together
// with its crossed module (H1 x| V1, H0 x| V0, t x d, Phi). The morphism
// identities (including the two homotopy compatibilities with int delta)
// are sampled first; failures throw NotStrictGroupMorphism.
struct SemidirectTwoGroup {
    TwoGroup tg;
    GroupXMod xmod;
};
SemidirectTwoGroup semidirect_two_group(const GroupXMod& x, const GroupRep& rep,
                                        const TwoTermComplex& c, int verify_samples,
                                        uint64_t seed);

// Identity rep of Aut(V) on itself; gives the (K1 x| V1, K0 x| V0) model.
GroupRep identity_group_rep(const TwoTermComplex& c);

// 2-group laws on random samples: source/target are morphisms for h_mul,
// associativity, identities, the stated inverse on both sides, functoriality
// of h_mul (interchange with v_mul), and vertical category laws.
Report check_two_group(const TwoGroup& tg, int samples, uint64_t seed);

} // namespace lie2kit

#endif
