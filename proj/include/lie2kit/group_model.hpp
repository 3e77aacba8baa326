#ifndef LIE2KIT_GROUP_MODEL_HPP
#define LIE2KIT_GROUP_MODEL_HPP

#include <functional>
#include <string>
#include <vector>

#include "lie2kit/complex.hpp"
#include "lie2kit/report.hpp"
#include "lie2kit/rng.hpp"

namespace lie2kit {

// Group elements are tuples of exact matrices; concrete models fix the
// tuple layout. Equality is entrywise and exact.
using GroupElem = std::vector<Matrix>;

bool elem_eq(const GroupElem& a, const GroupElem& b);
std::string elem_str(const GroupElem& a);
GroupElem elem_concat(const GroupElem& a, const GroupElem& b);

struct GroupModel {
    std::string name;
    std::function<GroupElem()> identity;
    std::function<GroupElem(const GroupElem&, const GroupElem&)> mul;
    std::function<GroupElem(const GroupElem&)> inverse;
    std::function<GroupElem(Rng&)> sample;
};

// Crossed module of Lie groups as callable matrix models.
struct GroupXMod {
    GroupModel h1, h0;
    std::function<GroupElem(const GroupElem&)> t;
    std::function<GroupElem(const GroupElem&, const GroupElem&)> phi;  // (g, h) -> Phi_g h
};

// The trivial crossed module (1, G, 1, 1).
GroupXMod trivial_group_xmod(GroupModel h0);

// Aut(V) = (K1, K0, int delta, conjugation) over a complex.
GroupXMod autv_group_xmod(const TwoTermComplex& c, long entry_bound = 3);

// Samples elements and checks group axioms on both groups, that t is a
// morphism, that Phi acts by automorphisms, equivariance of t, and the
// Peiffer identity. All comparisons exact.
Report check_group_xmod(const GroupXMod& x, int samples, uint64_t seed);

} // namespace lie2kit

#endif
