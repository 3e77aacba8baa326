#include "lie2kit/rep.hpp"

#include "lie2kit/errors.hpp"

namespace lie2kit {

RepUpToHomotopy::RepUpToHomotopy(LieAlgebra g_, TwoTermComplex c, std::vector<Matrix> mu0_,
                                 std::vector<Matrix> mu1_, std::vector<std::vector<Matrix>> nu_)
    : g(std::move(g_)), complex(std::move(c)), mu0(std::move(mu0_)), mu1(std::move(mu1_)),
      nu(std::move(nu_)) {
    size_t n = static_cast<size_t>(g.dim);
    if (mu0.size() != n || mu1.size() != n || nu.size() != n)
        throw ShapeMismatch("rep block counts");
    for (const auto& m : mu0)
        if (m.rows() != complex.dim_v0 || m.cols() != complex.dim_v0)
            throw ShapeMismatch("mu0 block shape");
    for (const auto& m : mu1)
        if (m.rows() != complex.dim_v1 || m.cols() != complex.dim_v1)
            throw ShapeMismatch("mu1 block shape");
    for (size_t a = 0; a < n; ++a) {
        if (nu[a].size() != n) throw ShapeMismatch("nu table shape");
        for (size_t b = 0; b < n; ++b) {
            const Matrix& m = nu[a][b];
            if (m.rows() != complex.dim_v1 || m.cols() != complex.dim_v0)
                throw ShapeMismatch("nu block shape");
            if (!((nu[a][b] + nu[b][a]).is_zero()))
                throw BadStructure("nu is not antisymmetric");
        }
    }
}

RepUpToHomotopy RepUpToHomotopy::zero(LieAlgebra g_, TwoTermComplex c) {
    size_t n = static_cast<size_t>(g_.dim);
    std::vector<Matrix> m0(n, Matrix::zero(c.dim_v0, c.dim_v0));
    std::vector<Matrix> m1(n, Matrix::zero(c.dim_v1, c.dim_v1));
    std::vector<std::vector<Matrix>> nu(n, std::vector<Matrix>(n, Matrix::zero(c.dim_v1, c.dim_v0)));
    return RepUpToHomotopy(std::move(g_), std::move(c), std::move(m0), std::move(m1), std::move(nu));
}

Matrix RepUpToHomotopy::mu0_of(const Vec& x) const {
    Matrix m = Matrix::zero(complex.dim_v0, complex.dim_v0);
    for (int a = 0; a < g.dim; ++a)
        if (!x[a].is_zero()) m = m + x[a] * mu0[static_cast<size_t>(a)];
    return m;
}

Matrix RepUpToHomotopy::mu1_of(const Vec& x) const {
    Matrix m = Matrix::zero(complex.dim_v1, complex.dim_v1);
    for (int a = 0; a < g.dim; ++a)
        if (!x[a].is_zero()) m = m + x[a] * mu1[static_cast<size_t>(a)];
    return m;
}

Matrix RepUpToHomotopy::nu_of(const Vec& x, const Vec& y) const {
    Matrix m = Matrix::zero(complex.dim_v1, complex.dim_v0);
    for (int a = 0; a < g.dim; ++a) {
        if (x[a].is_zero()) continue;
        for (int b = 0; b < g.dim; ++b)
            if (!y[b].is_zero()) m = m + (x[a] * y[b]) * nu[static_cast<size_t>(a)][static_cast<size_t>(b)];
    }
    return m;
}

Report check_rep(const RepUpToHomotopy& r) {
    Report rep;
    rep.subject = "representation up to homotopy";
    const int n = r.g.dim;
    const Matrix& d = r.complex.d;

    {
        bool pass = true;
        std::string ce;
        for (int a = 0; a < n; ++a)
            if (!(d * r.mu1[static_cast<size_t>(a)] == r.mu0[static_cast<size_t>(a)] * d)) {
                pass = false;
                ce = "X" + std::to_string(a);
                break;
            }
        rep.add("rep.chain", "d mu1(X) == mu0(X) d", pass, ce);
    }

    {
        bool pass = true;
        std::string ce;
        for (int a = 0; a < n && pass; ++a)
            for (int b = a + 1; b < n; ++b) {
                Matrix br0 = r.mu0_of(r.g.bracket.column(a, b));
                Matrix comm0 = r.mu0[static_cast<size_t>(a)] * r.mu0[static_cast<size_t>(b)] -
                               r.mu0[static_cast<size_t>(b)] * r.mu0[static_cast<size_t>(a)];
                if (!(br0 - comm0 == d * r.nu[static_cast<size_t>(a)][static_cast<size_t>(b)])) {
                    pass = false;
                    ce = "(X" + std::to_string(a) + ", X" + std::to_string(b) + ")";
                    break;
                }
            }
        rep.add("rep.mu0", "mu0[X,Y] - [mu0 X, mu0 Y] == d nu(X,Y)", pass, ce);
    }

    {
        bool pass = true;
        std::string ce;
        for (int a = 0; a < n && pass; ++a)
            for (int b = a + 1; b < n; ++b) {
                Matrix br1 = r.mu1_of(r.g.bracket.column(a, b));
                Matrix comm1 = r.mu1[static_cast<size_t>(a)] * r.mu1[static_cast<size_t>(b)] -
                               r.mu1[static_cast<size_t>(b)] * r.mu1[static_cast<size_t>(a)];
                if (!(br1 - comm1 == r.nu[static_cast<size_t>(a)][static_cast<size_t>(b)] * d)) {
                    pass = false;
                    ce = "(X" + std::to_string(a) + ", X" + std::to_string(b) + ")";
                    break;
                }
            }
        rep.add("rep.mu1", "mu1[X,Y] - [mu1 X, mu1 Y] == nu(X,Y) d", pass, ce);
    }

    {
        // [mu(X1), nu(X2,X3)] + c.p. == nu([X1,X2],X3) + c.p.
        bool pass = true;
        std::string ce;
        auto super = [&](int a, const Matrix& nu_m) {
            return r.mu1[static_cast<size_t>(a)] * nu_m - nu_m * r.mu0[static_cast<size_t>(a)];
        };
        for (int a = 0; a < n && pass; ++a)
            for (int b = a + 1; b < n && pass; ++b)
                for (int c = b + 1; c < n; ++c) {
                    Matrix lhs = super(a, r.nu[static_cast<size_t>(b)][static_cast<size_t>(c)]) +
                                 super(b, r.nu[static_cast<size_t>(c)][static_cast<size_t>(a)]) +
                                 super(c, r.nu[static_cast<size_t>(a)][static_cast<size_t>(b)]);
                    Matrix rhs = r.nu_of(r.g.bracket.column(a, b), Vec::unit(n, c)) +
                                 r.nu_of(r.g.bracket.column(b, c), Vec::unit(n, a)) +
                                 r.nu_of(r.g.bracket.column(c, a), Vec::unit(n, b));
                    if (!(lhs == rhs)) {
                        pass = false;
                        ce = "(X" + std::to_string(a) + ", X" + std::to_string(b) + ", X" +
                             std::to_string(c) + ")";
                        break;
                    }
                }
        rep.add("rep.cocycle", "[mu(X1), nu(X2,X3)] + c.p. == nu([X1,X2],X3) + c.p.", pass, ce);
    }

    return rep;
}

Lie2Algebra semidirect_lie2(const RepUpToHomotopy& r) {
    if (!check_rep(r).ok()) throw InvalidRep("representation equations fail");
    const int ng = r.g.dim, n0 = r.complex.dim_v0, n1 = r.complex.dim_v1;
    const int N0 = ng + n0;

    TwoTermComplex c(n1, N0, Matrix::vstack(Matrix::zero(ng, n1), r.complex.d));

    BilinearMap l2_00(N0, N0, N0);
    auto embed = [&](const Vec& gx, const Vec& v0) { return Vec::concat(gx, v0); };
    for (int i = 0; i < N0; ++i)
        for (int j = 0; j < N0; ++j) {
            bool gi = i < ng, gj = j < ng;
            if (gi && gj) {
                Vec gpart = r.g.bracket.column(i, j);
                l2_00.set_column(i, j, embed(gpart, Vec(n0)));
            } else if (gi && !gj) {
                // [ (X,0), (0,xi) ] = (0, mu0(X) xi)
                l2_00.set_column(i, j, embed(Vec(ng), r.mu0[static_cast<size_t>(i)].col(j - ng)));
            } else if (!gi && gj) {
                l2_00.set_column(i, j, embed(Vec(ng), -r.mu0[static_cast<size_t>(j)].col(i - ng)));
            }
            // V0 with V0 gives zero
        }

    BilinearMap l2_01(N0, n1, n1);
    for (int i = 0; i < ng; ++i)
        for (int m = 0; m < n1; ++m) l2_01.set_column(i, m, r.mu1[static_cast<size_t>(i)].col(m));

    TrilinearMap l3(N0, n1);
    // -nu(X,Y)(gamma) + c.p. on the g and V0 slots; antisymmetrized over all
    // positions by construction (nonzero only with two g slots and one V0 slot).
    for (int a = 0; a < ng; ++a)
        for (int b = 0; b < ng; ++b)
            for (int cg = ng; cg < N0; ++cg) {
                Vec val = -r.nu[static_cast<size_t>(a)][static_cast<size_t>(b)].col(cg - ng);
                l3.set_column(a, b, cg, val);
                l3.set_column(a, cg, b, -val);
                l3.set_column(cg, a, b, val);
            }
    return Lie2Algebra(std::move(c), std::move(l2_00), std::move(l2_01), std::move(l3));
}

RepAsMorphism rep_to_morphism(const RepUpToHomotopy& r) {
    if (!check_rep(r).ok()) throw InvalidRep("representation equations fail");
    EndData end = end_crossed_module(r.complex);
    const int ng = r.g.dim;

    Matrix f0(end.dim_k0(), ng);
    for (int a = 0; a < ng; ++a) {
        Vec coords = end.k0_coords(r.mu0[static_cast<size_t>(a)], r.mu1[static_cast<size_t>(a)]);
        for (int i = 0; i < end.dim_k0(); ++i) f0.at(i, a) = coords[i];
    }
    Matrix f1(end.dim_k1(), 0);
    BilinearMap f2(ng, ng, end.dim_k1());
    for (int a = 0; a < ng; ++a)
        for (int b = 0; b < ng; ++b)
            f2.set_column(a, b, end.k1_coords(r.nu[static_cast<size_t>(a)][static_cast<size_t>(b)]));

    RepAsMorphism out{std::move(end), Lie2Algebra::from_lie(r.g),
                      Lie2Algebra::from_lie(LieAlgebra::abelian(0)), Lie2Morphism()};
    out.dst = out.end.dgla();
    out.f = Lie2Morphism(std::move(f0), std::move(f1), std::move(f2));
    return out;
}

RepUpToHomotopy morphism_to_rep(const LieAlgebra& g, const EndData& end, const Lie2Morphism& f) {
    const int ng = g.dim;
    if (f.f0.cols() != ng || f.f0.rows() != end.dim_k0())
        throw ShapeMismatch("morphism f0 shape");
    std::vector<Matrix> mu0, mu1;
    mu0.reserve(static_cast<size_t>(ng));
    mu1.reserve(static_cast<size_t>(ng));
    for (int a = 0; a < ng; ++a) {
        auto [p0, p1] = end.k0_elem(f.f0.col(a));
        mu0.push_back(std::move(p0));
        mu1.push_back(std::move(p1));
    }
    std::vector<std::vector<Matrix>> nu(static_cast<size_t>(ng));
    for (int a = 0; a < ng; ++a) {
        nu[static_cast<size_t>(a)].reserve(static_cast<size_t>(ng));
        for (int b = 0; b < ng; ++b)
            nu[static_cast<size_t>(a)].push_back(end.k1_elem(f.f2.column(a, b)));
    }
    return RepUpToHomotopy(g, end.complex(), std::move(mu0), std::move(mu1), std::move(nu));
}

CrossedModuleAlg strict_semidirect_xmod(const CrossedModuleAlg& h, const Matrix& psi0,
                                        const Matrix& psi1, const TwoTermComplex& c) {
    return strict_semidirect_xmod(h, psi0, psi1, end_crossed_module(c));
}

CrossedModuleAlg strict_semidirect_xmod(const CrossedModuleAlg& h, const Matrix& psi0,
                                        const Matrix& psi1, const EndData& end) {
    const TwoTermComplex& c = end.complex();
    const int m1 = h.dim_h1, m0 = h.dim_h0, n0 = c.dim_v0, n1 = c.dim_v1;
    if (psi0.rows() != end.dim_k0() || psi0.cols() != m0) throw ShapeMismatch("psi0 shape");
    if (psi1.rows() != end.dim_k1() || psi1.cols() != m1) throw ShapeMismatch("psi1 shape");
    {
        Report check = check_morphism(xmod_to_dgla(h), end.dgla(),
                                      Lie2Morphism::strict(psi0, psi1));
        if (!check.ok()) throw NotStrictMorphism("(psi1, psi0) is not a strict morphism into End(V)");
    }

    // Per-basis action blocks.
    std::vector<Matrix> p0(static_cast<size_t>(m0)), p1(static_cast<size_t>(m0));
    for (int a = 0; a < m0; ++a) {
        auto pr = end.k0_elem(psi0.col(a));
        p0[static_cast<size_t>(a)] = std::move(pr.first);
        p1[static_cast<size_t>(a)] = std::move(pr.second);
    }
    std::vector<Matrix> pm(static_cast<size_t>(m1));
    for (int i = 0; i < m1; ++i) pm[static_cast<size_t>(i)] = end.k1_elem(psi1.col(i));

    auto p1_of = [&](const Vec& x) {
        Matrix m = Matrix::zero(n1, n1);
        for (int a = 0; a < m0; ++a)
            if (!x[a].is_zero()) m = m + x[a] * p1[static_cast<size_t>(a)];
        return m;
    };

    const int H1 = m1 + n1, H0 = m0 + n0;
    BilinearMap b1(H1, H1, H1);
    // [(A,m),(B,n)] = ([A,B], psi0(dt A)(n) - psi0(dt B)(m))
    for (int i = 0; i < H1; ++i)
        for (int j = 0; j < H1; ++j) {
            Vec col(H1);
            bool hi = i < m1, hj = j < m1;
            if (hi && hj) {
                Vec hpart = h.bracket_h1.column(i, j);
                for (int t = 0; t < m1; ++t) col[t] = hpart[t];
            } else if (hi && !hj) {
                Vec v = p1_of(h.dt.col(i)) * Vec::unit(n1, j - m1);
                for (int t = 0; t < n1; ++t) col[m1 + t] = v[t];
            } else if (!hi && hj) {
                Vec v = -(p1_of(h.dt.col(j)) * Vec::unit(n1, i - m1));
                for (int t = 0; t < n1; ++t) col[m1 + t] = v[t];
            }
            b1.set_column(i, j, col);
        }

    BilinearMap b0(H0, H0, H0);
    // [(X,xi),(Y,eta)] = ([X,Y], psi0(X)(eta) - psi0(Y)(xi))
    for (int i = 0; i < H0; ++i)
        for (int j = 0; j < H0; ++j) {
            Vec col(H0);
            bool hi = i < m0, hj = j < m0;
            if (hi && hj) {
                Vec hpart = h.bracket_h0.column(i, j);
                for (int t = 0; t < m0; ++t) col[t] = hpart[t];
            } else if (hi && !hj) {
                Vec v = p0[static_cast<size_t>(i)].col(j - m0);
                for (int t = 0; t < n0; ++t) col[m0 + t] = v[t];
            } else if (!hi && hj) {
                Vec v = -p0[static_cast<size_t>(j)].col(i - m0);
                for (int t = 0; t < n0; ++t) col[m0 + t] = v[t];
            }
            b0.set_column(i, j, col);
        }

    Matrix dt(H0, H1);
    for (int i = 0; i < m1; ++i)
        for (int t = 0; t < m0; ++t) dt.at(t, i) = h.dt.at(t, i);
    for (int i = 0; i < n1; ++i)
        for (int t = 0; t < n0; ++t) dt.at(m0 + t, m1 + i) = c.d.at(t, i);

    BilinearMap phi(H0, H1, H1);
    // phi_{(X,xi)}(A,m) = (phi_X A, psi0(X)(m) - psi1(A)(xi))
    for (int a = 0; a < H0; ++a)
        for (int i = 0; i < H1; ++i) {
            Vec col(H1);
            bool ha = a < m0, hi = i < m1;
            if (ha && hi) {
                Vec hpart = h.phi.column(a, i);
                for (int t = 0; t < m1; ++t) col[t] = hpart[t];
            } else if (ha && !hi) {
                Vec v = p1[static_cast<size_t>(a)].col(i - m1);
                for (int t = 0; t < n1; ++t) col[m1 + t] = v[t];
            } else if (!ha && hi) {
                Vec v = -pm[static_cast<size_t>(i)].col(a - m0);
                for (int t = 0; t < n1; ++t) col[m1 + t] = v[t];
            }
            phi.set_column(a, i, col);
        }

    return CrossedModuleAlg(H1, H0, std::move(b1), std::move(b0), std::move(dt), std::move(phi));
}

} // namespace lie2kit
