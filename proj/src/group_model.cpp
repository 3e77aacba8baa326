#include "lie2kit/group_model.hpp"

#include <memory>
#include <sstream>

#include "lie2kit/autv.hpp"
#include "lie2kit/end_dgla.hpp"

namespace lie2kit {

bool elem_eq(const GroupElem& a, const GroupElem& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

std::string elem_str(const GroupElem& a) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) os << ", ";
        os << a[i].str();
    }
    os << "}";
    return os.str();
}

GroupElem elem_concat(const GroupElem& a, const GroupElem& b) {
    GroupElem r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

GroupXMod trivial_group_xmod(GroupModel h0) {
    GroupXMod x;
    x.h1.name = "1";
    x.h1.identity = []() { return GroupElem{}; };
    x.h1.mul = [](const GroupElem&, const GroupElem&) { return GroupElem{}; };
    x.h1.inverse = [](const GroupElem&) { return GroupElem{}; };
    x.h1.sample = [](Rng&) { return GroupElem{}; };
    x.h0 = std::move(h0);
    auto id0 = x.h0.identity;
    x.t = [id0](const GroupElem&) { return id0(); };
    x.phi = [](const GroupElem&, const GroupElem&) { return GroupElem{}; };
    return x;
}

GroupXMod autv_group_xmod(const TwoTermComplex& c, long entry_bound) {
    auto end = std::make_shared<EndData>(c);
    GroupXMod x;
    x.h1.name = "K1";
    x.h1.identity = [c]() { return GroupElem{Matrix::zero(c.dim_v1, c.dim_v0)}; };
    x.h1.mul = [c](const GroupElem& a, const GroupElem& b) {
        return GroupElem{k1_mul(K1Element(c, a[0]), K1Element(c, b[0])).m};
    };
    x.h1.inverse = [c](const GroupElem& a) { return GroupElem{k1_inverse(K1Element(c, a[0])).m}; };
    x.h1.sample = [c, entry_bound](Rng& rng) { return GroupElem{random_k1(c, rng, entry_bound).m}; };

    x.h0.name = "K0";
    x.h0.identity = [c]() {
        return GroupElem{Matrix::identity(c.dim_v0), Matrix::identity(c.dim_v1)};
    };
    x.h0.mul = [](const GroupElem& a, const GroupElem& b) {
        return GroupElem{a[0] * b[0], a[1] * b[1]};
    };
    x.h0.inverse = [](const GroupElem& a) { return GroupElem{invert(a[0]), invert(a[1])}; };
    x.h0.sample = [end, entry_bound](Rng& rng) {
        K0Element k = random_k0(*end, rng, entry_bound);
        return GroupElem{k.b0, k.b1};
    };

    x.t = [c](const GroupElem& a) {
        K0Element k = int_delta(K1Element(c, a[0]));
        return GroupElem{k.b0, k.b1};
    };
    x.phi = [c](const GroupElem& g, const GroupElem& h) {
        return GroupElem{phi_action(K0Element(c, g[0], g[1]), K1Element(c, h[0])).m};
    };
    return x;
}

Report check_group_xmod(const GroupXMod& x, int samples, uint64_t seed) {
    Report rep;
    rep.subject = "crossed module of lie groups";
    rep.seed = seed;
    rep.samples = samples;
    Rng rng(seed);

    struct Law {
        std::string id, law;
        bool pass = true;
        std::string ce;
    };
    std::vector<Law> laws = {
        {"gxm.assoc_h1", "(ab)c == a(bc) in H1"},
        {"gxm.assoc_h0", "(xy)z == x(yz) in H0"},
        {"gxm.identity", "1a == a1 == a in both groups"},
        {"gxm.inverse", "a a^-1 == a^-1 a == 1 in both groups"},
        {"gxm.t_morphism", "t(ab) == t(a) t(b)"},
        {"gxm.phi_automorphism", "Phi_g(ab) == Phi_g(a) Phi_g(b)"},
        {"gxm.phi_action", "Phi_{xy} == Phi_x Phi_y and Phi_1 == id"},
        {"gxm.equivariance", "t(Phi_g h) == g t(h) g^-1"},
        {"gxm.peiffer", "Phi_{t(h)}(h') == h h' h^-1"},
    };
    auto fail = [&](size_t i, const std::string& ce) {
        if (laws[i].pass) {
            laws[i].pass = false;
            laws[i].ce = ce;
        }
    };

    for (int s = 0; s < samples; ++s) {
        GroupElem a = x.h1.sample(rng), b = x.h1.sample(rng), c = x.h1.sample(rng);
        GroupElem g = x.h0.sample(rng), h = x.h0.sample(rng), k = x.h0.sample(rng);
        std::string tag = "sample " + std::to_string(s);

        if (!elem_eq(x.h1.mul(x.h1.mul(a, b), c), x.h1.mul(a, x.h1.mul(b, c)))) fail(0, tag);
        if (!elem_eq(x.h0.mul(x.h0.mul(g, h), k), x.h0.mul(g, x.h0.mul(h, k)))) fail(1, tag);

        GroupElem e1 = x.h1.identity(), e0 = x.h0.identity();
        if (!elem_eq(x.h1.mul(e1, a), a) || !elem_eq(x.h1.mul(a, e1), a) ||
            !elem_eq(x.h0.mul(e0, g), g) || !elem_eq(x.h0.mul(g, e0), g))
            fail(2, tag);
        if (!elem_eq(x.h1.mul(a, x.h1.inverse(a)), e1) ||
            !elem_eq(x.h1.mul(x.h1.inverse(a), a), e1) ||
            !elem_eq(x.h0.mul(g, x.h0.inverse(g)), e0) ||
            !elem_eq(x.h0.mul(x.h0.inverse(g), g), e0))
            fail(3, tag);

        if (!elem_eq(x.t(x.h1.mul(a, b)), x.h0.mul(x.t(a), x.t(b)))) fail(4, tag);

        if (!elem_eq(x.phi(g, x.h1.mul(a, b)), x.h1.mul(x.phi(g, a), x.phi(g, b)))) fail(5, tag);

        if (!elem_eq(x.phi(x.h0.mul(g, h), a), x.phi(g, x.phi(h, a))) ||
            !elem_eq(x.phi(e0, a), a))
            fail(6, tag);

        GroupElem lhs = x.t(x.phi(g, a));
        GroupElem rhs = x.h0.mul(x.h0.mul(g, x.t(a)), x.h0.inverse(g));
        if (!elem_eq(lhs, rhs)) fail(7, tag);

        GroupElem plhs = x.phi(x.t(a), b);
        GroupElem prhs = x.h1.mul(x.h1.mul(a, b), x.h1.inverse(a));
        if (!elem_eq(plhs, prhs)) fail(8, tag);
    }

    for (const auto& l : laws) rep.add(l.id, l.law, l.pass, l.ce);
    return rep;
}

} // namespace lie2kit
