#include "lie2kit/two_group.hpp"

#include "lie2kit/errors.hpp"

namespace lie2kit {

namespace {

Vec elem_col(const Matrix& m) { return m.col(0); }

} // namespace

TwoGroup two_group_from_xmod(const GroupXMod& x) {
    const size_t n0 = x.h0.identity().size();
    const size_t n1 = x.h1.identity().size();
    auto split_g = [n0](const GroupElem& a) { return GroupElem(a.begin(), a.begin() + n0); };
    auto split_h = [n0, n1](const GroupElem& a) {
        return GroupElem(a.begin() + n0, a.begin() + n0 + n1);
    };

    TwoGroup tg;
    tg.source = [split_g](const GroupElem& a) { return split_g(a); };
    tg.target = [x, split_g, split_h](const GroupElem& a) {
        return x.h0.mul(x.t(split_h(a)), split_g(a));
    };
    tg.v_mul = [x, split_g, split_h](const GroupElem& later, const GroupElem& earlier) {
        GroupElem expect = x.h0.mul(x.t(split_h(earlier)), split_g(earlier));
        if (!elem_eq(split_g(later), expect)) throw NotComposable();
        return elem_concat(split_g(earlier), x.h1.mul(split_h(later), split_h(earlier)));
    };
    tg.h_mul = [x, split_g, split_h](const GroupElem& a, const GroupElem& b) {
        GroupElem g = x.h0.mul(split_g(a), split_g(b));
        GroupElem h = x.h1.mul(split_h(a), x.phi(split_g(a), split_h(b)));
        return elem_concat(g, h);
    };
    tg.h_mul_obj = [x](const GroupElem& a, const GroupElem& b) { return x.h0.mul(a, b); };
    tg.h_inv = [x, split_g, split_h](const GroupElem& a) {
        GroupElem ginv = x.h0.inverse(split_g(a));
        return elem_concat(ginv, x.phi(ginv, x.h1.inverse(split_h(a))));
    };
    tg.identity_arrow = [x](const GroupElem& obj) { return elem_concat(obj, x.h1.identity()); };
    tg.id_object = x.h0.identity();
    tg.id_arrow = elem_concat(x.h0.identity(), x.h1.identity());
    tg.sample_arrow = [x](Rng& rng) { return elem_concat(x.h0.sample(rng), x.h1.sample(rng)); };
    tg.sample_arrow_from = [x](const GroupElem& obj, Rng& rng) {
        return elem_concat(obj, x.h1.sample(rng));
    };
    return tg;
}

GroupRep identity_group_rep(const TwoTermComplex& c) {
    GroupRep rep;
    rep.psi1 = [c](const GroupElem& a) { return K1Element(c, a[0]); };
    rep.psi0 = [c](const GroupElem& g) { return K0Element(c, g[0], g[1]); };
    return rep;
}

SemidirectTwoGroup semidirect_two_group(const GroupXMod& x, const GroupRep& rep,
                                        const TwoTermComplex& c, int verify_samples,
                                        uint64_t seed) {
    {
        // Strictness of (Psi1, Psi0) on samples, including the block
        // identities tying int delta Psi1 to Psi0 t.
        Rng rng(seed);
        for (int s = 0; s < verify_samples; ++s) {
            GroupElem a = x.h1.sample(rng), b = x.h1.sample(rng);
            GroupElem g = x.h0.sample(rng), h = x.h0.sample(rng);
            K1Element pa = rep.psi1(a), pb = rep.psi1(b);
            K0Element pg = rep.psi0(g), ph = rep.psi0(h);
            if (!(rep.psi0(x.h0.mul(g, h)).b0 == (k0_mul(pg, ph)).b0) ||
                !(rep.psi0(x.h0.mul(g, h)).b1 == (k0_mul(pg, ph)).b1))
                throw NotStrictGroupMorphism("Psi0 is not a group morphism");
            if (!(rep.psi1(x.h1.mul(a, b)).m == k1_mul(pa, pb).m))
                throw NotStrictGroupMorphism("Psi1 is not a group morphism");
            K0Element lhs = int_delta(pa);
            K0Element rhs = rep.psi0(x.t(a));
            if (!(lhs.b0 == rhs.b0) || !(lhs.b1 == rhs.b1))
                throw NotStrictGroupMorphism("int delta Psi1 != Psi0 t");
            if (!(rep.psi1(x.phi(g, a)).m == phi_action(pg, pa).m))
                throw NotStrictGroupMorphism("Psi1 does not intertwine the actions");
            // Composition law and inverse law for Psi1 as maps.
            Matrix comp = pa.m + rhs.b1 * pb.m;  // Psi1(a) + Psi0(t a) Psi1(b)
            if (!(rep.psi1(x.h1.mul(a, b)).m == comp))
                throw NotStrictGroupMorphism("Psi1(ab) != Psi1(a) + Psi0(t a) Psi1(b)");
            GroupElem ainv = x.h1.inverse(a);
            Matrix zero_check = rep.psi0(x.t(ainv)).b1 * pa.m + rep.psi1(ainv).m;
            if (!zero_check.is_zero())
                throw NotStrictGroupMorphism("Psi0(t a^-1) Psi1(a) + Psi1(a^-1) != 0");
        }
    }

    const size_t p0 = x.h0.identity().size();
    const size_t p1 = x.h1.identity().size();
    const int n0 = c.dim_v0, n1 = c.dim_v1;
    // Arrow layout: h0 parts, h1 parts, xi (n0 x 1), m (n1 x 1).
    auto xa = [p0](const GroupElem& e) { return GroupElem(e.begin(), e.begin() + p0); };
    auto aa = [p0, p1](const GroupElem& e) { return GroupElem(e.begin() + p0, e.begin() + p0 + p1); };
    auto xi = [p0, p1](const GroupElem& e) { return elem_col(e[p0 + p1]); };
    auto mm = [p0, p1](const GroupElem& e) { return elem_col(e[p0 + p1 + 1]); };
    auto arrow = [](GroupElem g, GroupElem h, const Vec& v0, const Vec& v1) {
        GroupElem r = elem_concat(std::move(g), std::move(h));
        r.push_back(Matrix::from_cols(v0.dim(), {v0}));
        r.push_back(Matrix::from_cols(v1.dim(), {v1}));
        return r;
    };
    auto obj = [p0](const GroupElem& e) { return GroupElem(e.begin(), e.begin() + p0); };
    auto obj_xi = [p0](const GroupElem& e) { return elem_col(e[p0]); };
    auto make_obj = [](GroupElem g, const Vec& v0) {
        g.push_back(Matrix::from_cols(v0.dim(), {v0}));
        return g;
    };

    SemidirectTwoGroup out;
    TwoGroup& tg = out.tg;
    tg.source = [xa, xi, make_obj](const GroupElem& e) {
        return make_obj(GroupElem(xa(e)), xi(e));
    };
    tg.target = [x, c, xa, aa, xi, mm, make_obj](const GroupElem& e) {
        return make_obj(x.h0.mul(x.t(aa(e)), xa(e)), xi(e) + c.d * mm(e));
    };
    tg.v_mul = [x, c, xa, aa, xi, mm, arrow](const GroupElem& later, const GroupElem& earlier) {
        if (!elem_eq(xa(later), x.h0.mul(x.t(aa(earlier)), xa(earlier))) ||
            !(xi(later) == xi(earlier) + c.d * mm(earlier)))
            throw NotComposable();
        return arrow(xa(earlier), x.h1.mul(aa(later), aa(earlier)), xi(earlier),
                     mm(earlier) + mm(later));
    };
    tg.h_mul = [x, rep, xa, aa, xi, mm, arrow](const GroupElem& a, const GroupElem& b) {
        GroupElem gx = xa(a), gy = xa(b);
        GroupElem ha = aa(a), hb = aa(b);
        K0Element p0x = rep.psi0(gx);
        K0Element p0tax = rep.psi0(x.h0.mul(x.t(ha), gx));
        Vec xi_out = xi(a) + p0x.b0 * xi(b);
        Vec m_out = mm(a) + p0tax.b1 * mm(b) + rep.psi1(ha).m * (p0x.b0 * xi(b));
        return arrow(x.h0.mul(gx, gy), x.h1.mul(ha, x.phi(gx, hb)), xi_out, m_out);
    };
    tg.h_mul_obj = [x, rep, obj, obj_xi, make_obj](const GroupElem& a, const GroupElem& b) {
        return make_obj(x.h0.mul(obj(a), obj(b)), obj_xi(a) + rep.psi0(obj(a)).b0 * obj_xi(b));
    };
    tg.h_inv = [x, rep, xa, aa, xi, mm, arrow](const GroupElem& e) {
        GroupElem gx = xa(e), ha = aa(e);
        GroupElem xinv = x.h0.inverse(gx);
        GroupElem taxinv = x.h0.inverse(x.h0.mul(x.t(ha), gx));
        K0Element p0xinv = rep.psi0(xinv);
        K0Element p0taxinv = rep.psi0(taxinv);
        Vec xi_out = -(p0xinv.b0 * xi(e));
        Vec m_out = -(p0taxinv.b1 * mm(e)) + p0taxinv.b1 * (rep.psi1(ha).m * xi(e));
        return arrow(std::move(xinv), x.phi(x.h0.inverse(gx), x.h1.inverse(ha)), xi_out, m_out);
    };
    tg.identity_arrow = [x, obj, obj_xi, arrow, n1](const GroupElem& o) {
        return arrow(obj(o), x.h1.identity(), obj_xi(o), Vec(n1));
    };
    tg.id_object = make_obj(x.h0.identity(), Vec(n0));
    tg.id_arrow = arrow(x.h0.identity(), x.h1.identity(), Vec(n0), Vec(n1));
    tg.sample_arrow = [x, arrow, n0, n1](Rng& rng) {
        return arrow(x.h0.sample(rng), x.h1.sample(rng), rng.vec(n0, 3), rng.vec(n1, 3));
    };
    tg.sample_arrow_from = [x, obj, obj_xi, arrow, n1](const GroupElem& o, Rng& rng) {
        return arrow(obj(o), x.h1.sample(rng), obj_xi(o), rng.vec(n1, 3));
    };

    // Associated crossed module (H1 x| V1, H0 x| V0, t x d, Phi).
    GroupXMod& xm = out.xmod;
    xm.h1.name = x.h1.name + " x| V1";
    xm.h1.identity = [x, n1]() {
        GroupElem e = x.h1.identity();
        e.push_back(Matrix::zero(n1, 1));
        return e;
    };
    xm.h1.mul = [x, rep, p1](const GroupElem& a, const GroupElem& b) {
        GroupElem ha(a.begin(), a.begin() + p1), hb(b.begin(), b.begin() + p1);
        Vec m = a[p1].col(0), n = b[p1].col(0);
        GroupElem r = x.h1.mul(ha, hb);
        Vec v = m + rep.psi0(x.t(ha)).b1 * n;
        r.push_back(Matrix::from_cols(v.dim(), {v}));
        return r;
    };
    xm.h1.inverse = [x, rep, p1](const GroupElem& a) {
        GroupElem ha(a.begin(), a.begin() + p1);
        GroupElem hinv = x.h1.inverse(ha);
        Vec m = a[p1].col(0);
        Vec v = -(rep.psi0(x.t(hinv)).b1 * m);
        GroupElem r = hinv;
        r.push_back(Matrix::from_cols(v.dim(), {v}));
        return r;
    };
    xm.h1.sample = [x, n1](Rng& rng) {
        GroupElem e = x.h1.sample(rng);
        Vec v = rng.vec(n1, 3);
        e.push_back(Matrix::from_cols(v.dim(), {v}));
        return e;
    };
    xm.h0.name = x.h0.name + " x| V0";
    xm.h0.identity = [x, n0]() {
        GroupElem e = x.h0.identity();
        e.push_back(Matrix::zero(n0, 1));
        return e;
    };
    xm.h0.mul = [x, rep, p0](const GroupElem& a, const GroupElem& b) {
        GroupElem ga(a.begin(), a.begin() + p0), gb(b.begin(), b.begin() + p0);
        Vec v = a[p0].col(0) + rep.psi0(ga).b0 * b[p0].col(0);
        GroupElem r = x.h0.mul(ga, gb);
        r.push_back(Matrix::from_cols(v.dim(), {v}));
        return r;
    };
    xm.h0.inverse = [x, rep, p0](const GroupElem& a) {
        GroupElem ga(a.begin(), a.begin() + p0);
        GroupElem ginv = x.h0.inverse(ga);
        Vec v = -(rep.psi0(ginv).b0 * a[p0].col(0));
        GroupElem r = ginv;
        r.push_back(Matrix::from_cols(v.dim(), {v}));
        return r;
    };
    xm.h0.sample = [x, n0](Rng& rng) {
        GroupElem e = x.h0.sample(rng);
        Vec v = rng.vec(n0, 3);
        e.push_back(Matrix::from_cols(v.dim(), {v}));
        return e;
    };
    xm.t = [x, c, p1](const GroupElem& a) {
        GroupElem ha(a.begin(), a.begin() + p1);
        GroupElem r = x.t(ha);
        Vec v = c.d * a[p1].col(0);
        r.push_back(Matrix::from_cols(v.dim(), {v}));
        return r;
    };
    xm.phi = [x, rep, p0, p1](const GroupElem& ge, const GroupElem& he) {
        GroupElem g(ge.begin(), ge.begin() + p0);
        GroupElem a(he.begin(), he.begin() + p1);
        Vec gxi = ge[p0].col(0);
        Vec m = he[p1].col(0);
        K0Element pg = rep.psi0(g);
        K0Element pginv = rep.psi0(x.h0.inverse(g));
        Vec v = pg.b1 * m - pg.b1 * (rep.psi1(a).m * (pginv.b0 * gxi));
        GroupElem r = x.phi(g, a);
        r.push_back(Matrix::from_cols(v.dim(), {v}));
        return r;
    };
    return out;
}

Report check_two_group(const TwoGroup& tg, int samples, uint64_t seed) {
    Report rep;
    rep.subject = "strict 2-group";
    rep.seed = seed;
    rep.samples = samples;
    Rng rng(seed);

    struct Law {
        std::string id, law;
        bool pass = true;
        std::string ce;
    };
    std::vector<Law> laws = {
        {"2grp.source_morphism", "s(A .h B) == s(A) .h s(B)"},
        {"2grp.target_morphism", "t(A .h B) == t(A) .h t(B)"},
        {"2grp.h_assoc", "(A .h B) .h C == A .h (B .h C)"},
        {"2grp.h_identity", "1 .h A == A .h 1 == A"},
        {"2grp.h_inverse", "A .h A^-1 == A^-1 .h A == 1"},
        {"2grp.v_category", "vertical identities and associativity"},
        {"2grp.interchange", "(A2 .v A1) .h (B2 .v B1) == (A2 .h B2) .v (A1 .h B1)"},
    };
    auto fail = [&](size_t i, const std::string& ce) {
        if (laws[i].pass) {
            laws[i].pass = false;
            laws[i].ce = ce;
        }
    };

    for (int s = 0; s < samples; ++s) {
        std::string tag = "sample " + std::to_string(s);
        GroupElem a = tg.sample_arrow(rng), b = tg.sample_arrow(rng), c = tg.sample_arrow(rng);

        GroupElem ab = tg.h_mul(a, b);
        if (!elem_eq(tg.source(ab), tg.h_mul_obj(tg.source(a), tg.source(b)))) fail(0, tag);
        if (!elem_eq(tg.target(ab), tg.h_mul_obj(tg.target(a), tg.target(b)))) fail(1, tag);
        if (!elem_eq(tg.h_mul(ab, c), tg.h_mul(a, tg.h_mul(b, c)))) fail(2, tag);
        if (!elem_eq(tg.h_mul(tg.id_arrow, a), a) || !elem_eq(tg.h_mul(a, tg.id_arrow), a))
            fail(3, tag);
        GroupElem ainv = tg.h_inv(a);
        if (!elem_eq(tg.h_mul(a, ainv), tg.id_arrow) || !elem_eq(tg.h_mul(ainv, a), tg.id_arrow))
            fail(4, tag);

        // Vertical category structure over a's source.
        GroupElem a2 = tg.sample_arrow_from(tg.target(a), rng);
        GroupElem a3 = tg.sample_arrow_from(tg.target(a2), rng);
        GroupElem va = tg.v_mul(a2, a);
        if (!elem_eq(tg.source(va), tg.source(a)) || !elem_eq(tg.target(va), tg.target(a2)))
            fail(5, tag);
        if (!elem_eq(tg.v_mul(a3, va), tg.v_mul(tg.v_mul(a3, a2), a))) fail(5, tag);
        if (!elem_eq(tg.v_mul(tg.identity_arrow(tg.target(a)), a), a) ||
            !elem_eq(tg.v_mul(a, tg.identity_arrow(tg.source(a))), a))
            fail(5, tag);

        GroupElem b2 = tg.sample_arrow_from(tg.target(b), rng);
        GroupElem lhs = tg.h_mul(tg.v_mul(a2, a), tg.v_mul(b2, b));
        GroupElem rhs = tg.v_mul(tg.h_mul(a2, b2), tg.h_mul(a, b));
        if (!elem_eq(lhs, rhs)) fail(6, tag);
    }

    for (const auto& l : laws) rep.add(l.id, l.law, l.pass, l.ce);
    return rep;
}

} // namespace lie2kit
