#include "lie2kit/butterfly.hpp"

#include "lie2kit/errors.hpp"

namespace lie2kit {

namespace {

bool is_bracket_morphism(const Matrix& f, const BilinearMap& src_b, const BilinearMap& dst_b) {
    int n = src_b.dim_a();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!(f * src_b.column(i, j) == dst_b.eval(f.col(i), f.col(j)))) return false;
    return true;
}

} // namespace

Report Butterfly::validate() const {
    Report rep;
    rep.subject = "butterfly";
    rep.add("bfly.shape", "e lives on g0 + h1", e.dim == src.dim_h0 + dst.dim_h1);
    rep.add("bfly.kappa_morphism", "kappa preserves brackets",
            is_bracket_morphism(kappa, src.bracket_h1, e.bracket));
    rep.add("bfly.iota_morphism", "iota preserves brackets",
            is_bracket_morphism(iota, dst.bracket_h1, e.bracket));
    rep.add("bfly.sigma_morphism", "sigma preserves brackets",
            is_bracket_morphism(sigma, e.bracket, src.bracket_h0));
    rep.add("bfly.rho_morphism", "rho preserves brackets",
            is_bracket_morphism(rho, e.bracket, dst.bracket_h0));
    rep.add("bfly.commute_src", "sigma kappa == dt on g1", sigma * kappa == src.dt);
    rep.add("bfly.commute_dst", "rho iota == dt on h1", rho * iota == dst.dt);
    rep.add("bfly.nwse_complex", "rho kappa == 0", (rho * kappa).is_zero());
    rep.add("bfly.nesw_complex", "sigma iota == 0", (sigma * iota).is_zero());

    bool inj = rank(iota) == dst.dim_h1;
    bool surj = rank(sigma) == src.dim_h0;
    Matrix ker_sigma = Matrix::from_cols(e.dim, kernel_basis(sigma));
    bool exact = same_column_space(iota, ker_sigma);
    rep.add("bfly.nesw_exact", "h1 -> e -> g0 is short exact", inj && surj && exact);

    {
        bool pass = true;
        std::string ce;
        for (int a = 0; a < e.dim && pass; ++a) {
            for (int i = 0; i < src.dim_h1; ++i) {
                Vec lhs = e.bracket.eval(Vec::unit(e.dim, a), kappa.col(i));
                Vec rhs = kappa * src.phi.eval(sigma.col(a), Vec::unit(src.dim_h1, i));
                if (!(lhs == rhs)) {
                    pass = false;
                    ce = "e" + std::to_string(a) + ", A" + std::to_string(i);
                    break;
                }
            }
        }
        rep.add("bfly.compat_src", "[e, kappa A] == kappa(phi_{sigma e} A)", pass, ce);
    }
    {
        bool pass = true;
        std::string ce;
        for (int a = 0; a < e.dim && pass; ++a) {
            for (int i = 0; i < dst.dim_h1; ++i) {
                Vec lhs = e.bracket.eval(Vec::unit(e.dim, a), iota.col(i));
                Vec rhs = iota * dst.phi.eval(rho.col(a), Vec::unit(dst.dim_h1, i));
                if (!(lhs == rhs)) {
                    pass = false;
                    ce = "e" + std::to_string(a) + ", B" + std::to_string(i);
                    break;
                }
            }
        }
        rep.add("bfly.compat_dst", "[e, iota B] == iota(phi_{rho e} B)", pass, ce);
    }
    return rep;
}

bool Butterfly::nw_se_exact() const {
    if (rank(kappa) != src.dim_h1) return false;
    if (rank(rho) != dst.dim_h0) return false;
    Matrix ker_rho = Matrix::from_cols(e.dim, kernel_basis(rho));
    return same_column_space(kappa, ker_rho);
}

Butterfly butterfly_from_morphism(const Lie2Morphism& f, const CrossedModuleAlg& src,
                                  const CrossedModuleAlg& dst) {
    if (!check_morphism(xmod_to_dgla(src), xmod_to_dgla(dst), f).ok())
        throw NotAMorphism("input fails the morphism equations");
    const int g0 = src.dim_h0, g1 = src.dim_h1, h1 = dst.dim_h1, h0 = dst.dim_h0;
    const int ne = g0 + h1;

    BilinearMap eb(ne, ne, ne);
    auto embed = [&](const Vec& x, const Vec& b) { return Vec::concat(x, b); };
    for (int i = 0; i < ne; ++i)
        for (int j = 0; j < ne; ++j) {
            bool gi = i < g0, gj = j < g0;
            Vec x_i = gi ? Vec::unit(g0, i) : Vec(g0);
            Vec x_j = gj ? Vec::unit(g0, j) : Vec(g0);
            Vec b_i = gi ? Vec(h1) : Vec::unit(h1, i - g0);
            Vec b_j = gj ? Vec(h1) : Vec::unit(h1, j - g0);
            Vec gpart = src.bracket_h0.eval(x_i, x_j);
            Vec hpart = dst.bracket_h1.eval(b_i, b_j);
            hpart += dst.phi.eval(f.f0 * x_i, b_j);
            hpart -= dst.phi.eval(f.f0 * x_j, b_i);
            hpart -= f.f2.eval(x_i, x_j);
            eb.set_column(i, j, embed(gpart, hpart));
        }
    LieAlgebra e(ne, std::move(eb));

    Matrix kappa(ne, g1);
    for (int i = 0; i < g1; ++i) {
        Vec top = src.dt.col(i);
        Vec bottom = -(f.f1.col(i));
        for (int t = 0; t < g0; ++t) kappa.at(t, i) = top[t];
        for (int t = 0; t < h1; ++t) kappa.at(g0 + t, i) = bottom[t];
    }
    Matrix iota(ne, h1);
    for (int i = 0; i < h1; ++i) iota.at(g0 + i, i) = 1;
    Matrix sigma(g0, ne);
    for (int i = 0; i < g0; ++i) sigma.at(i, i) = 1;
    Matrix rho(h0, ne);
    for (int j = 0; j < g0; ++j) {
        Vec v = f.f0.col(j);
        for (int t = 0; t < h0; ++t) rho.at(t, j) = v[t];
    }
    for (int j = 0; j < h1; ++j) {
        Vec v = dst.dt.col(j);
        for (int t = 0; t < h0; ++t) rho.at(t, g0 + j) = v[t];
    }
    return Butterfly{src, dst, std::move(e), std::move(kappa), std::move(iota), std::move(sigma),
                     std::move(rho)};
}

PullbackXmod pullback_xmod(const Butterfly& b) {
    const int g1 = b.src.dim_h1, ne = b.e.dim;
    // Fiber product { (A, e) : dt A = sigma e } as ker [dt | -sigma].
    Matrix cond = Matrix::hstack(b.src.dt, -b.sigma);
    std::vector<Vec> ker = kernel_basis(cond);
    Matrix basis = Matrix::from_cols(g1 + ne, ker);
    const int nf = basis.cols();

    auto apart = [&](const Vec& v) { return v.slice(0, g1); };
    auto epart = [&](const Vec& v) { return v.slice(g1, ne); };

    BilinearMap b1(nf, nf, nf);
    for (int i = 0; i < nf; ++i)
        for (int j = 0; j < nf; ++j) {
            Vec vi = basis.col(i), vj = basis.col(j);
            Vec br = Vec::concat(b.src.bracket_h1.eval(apart(vi), apart(vj)),
                                 b.e.bracket.eval(epart(vi), epart(vj)));
            b1.set_column(i, j, solve(basis, br));
        }
    Matrix dt(ne, nf);
    for (int j = 0; j < nf; ++j) {
        Vec v = epart(basis.col(j));
        for (int t = 0; t < ne; ++t) dt.at(t, j) = v[t];
    }
    BilinearMap phi(ne, nf, nf);
    for (int a = 0; a < ne; ++a)
        for (int i = 0; i < nf; ++i) {
            Vec vi = basis.col(i);
            Vec act = Vec::concat(
                b.src.phi.eval(b.sigma.col(a), apart(vi)),
                b.e.bracket.eval(Vec::unit(ne, a), epart(vi)));
            phi.set_column(a, i, solve(basis, act));
        }

    PullbackXmod out;
    out.xmod = CrossedModuleAlg(nf, ne, std::move(b1), b.e.bracket, std::move(dt), std::move(phi));
    out.fiber_basis = std::move(basis);
    return out;
}

StrictificationMorphisms strictification_morphisms(const Butterfly& b, const PullbackXmod& p) {
    const int g1 = b.src.dim_h1, ne = b.e.dim, nf = p.fiber_basis.cols();
    Matrix pr1(g1, nf);
    for (int j = 0; j < nf; ++j)
        for (int t = 0; t < g1; ++t) pr1.at(t, j) = p.fiber_basis.at(t, j);

    Matrix psi1(b.dst.dim_h1, nf);
    for (int j = 0; j < nf; ++j) {
        Vec a = p.fiber_basis.col(j).slice(0, g1);
        Vec e = p.fiber_basis.col(j).slice(g1, ne);
        Vec w = e - b.kappa * a;
        Vec coords = solve(b.iota, w);
        for (int t = 0; t < b.dst.dim_h1; ++t) psi1.at(t, j) = coords[t];
    }

    StrictificationMorphisms out;
    out.to_src = Lie2Morphism::strict(b.sigma, std::move(pr1));
    out.to_dst = Lie2Morphism::strict(b.rho, std::move(psi1));
    return out;
}

StrictifiedSemidirect strictified_semidirect(const RepUpToHomotopy& r) {
    RepAsMorphism rm = rep_to_morphism(r);
    CrossedModuleAlg trivial = CrossedModuleAlg::trivial(r.g);
    Butterfly bf = butterfly_from_morphism(rm.f, trivial, rm.end.xmod());
    PullbackXmod pb = pullback_xmod(bf);
    StrictificationMorphisms sm = strictification_morphisms(bf, pb);
    CrossedModuleAlg xm = strict_semidirect_xmod(pb.xmod, sm.to_dst.f0, sm.to_dst.f1, rm.end);

    const int ng = r.g.dim, n0 = r.complex.dim_v0, n1 = r.complex.dim_v1;
    const int k1 = rm.end.dim_k1();
    // Coordinates on the strict model: degree 0 is (X, A, xi), degree 1 is (A, m).
    Lie2Algebra strict2 = xmod_to_dgla(xm);
    Lie2Algebra target = semidirect_lie2(r);

    Matrix f0(ng + n0, ng + k1 + n0);
    for (int i = 0; i < ng; ++i) f0.at(i, i) = 1;
    for (int i = 0; i < n0; ++i) f0.at(ng + i, ng + k1 + i) = 1;
    Matrix f1(n1, k1 + n1);
    for (int i = 0; i < n1; ++i) f1.at(i, k1 + i) = 1;
    BilinearMap f2(ng + k1 + n0, ng + k1 + n0, n1);
    // f2((X,A,xi),(Y,B,eta)) = A eta - B xi
    for (int a = 0; a < k1; ++a) {
        Matrix am = rm.end.k1_elem(Vec::unit(k1, a));
        for (int x = 0; x < n0; ++x) {
            Vec val = am.col(x);
            f2.set_column(ng + a, ng + k1 + x, val);
            f2.set_column(ng + k1 + x, ng + a, -val);
        }
    }
    Lie2Morphism equiv(std::move(f0), std::move(f1), std::move(f2));

    Matrix i0(ng + k1 + n0, ng + n0);
    for (int i = 0; i < ng; ++i) i0.at(i, i) = 1;
    for (int i = 0; i < n0; ++i) i0.at(ng + k1 + i, ng + i) = 1;
    Matrix i1(k1 + n1, n1);
    for (int i = 0; i < n1; ++i) i1.at(k1 + i, i) = 1;
    BilinearMap nu2(ng + n0, ng + n0, k1 + n1);
    for (int a = 0; a < ng; ++a)
        for (int b = 0; b < ng; ++b) {
            Vec nu_flat = rm.end.k1_coords(r.nu[static_cast<size_t>(a)][static_cast<size_t>(b)]);
            Vec col(k1 + n1);
            for (int t = 0; t < k1; ++t) col[t] = nu_flat[t];
            nu2.set_column(a, b, col);
        }
    Lie2Morphism incl(std::move(i0), std::move(i1), std::move(nu2));

    return StrictifiedSemidirect{std::move(rm.end), std::move(bf),      std::move(pb),
                                 std::move(xm),     std::move(strict2), std::move(target),
                                 std::move(equiv),  std::move(incl)};
}

} // namespace lie2kit
