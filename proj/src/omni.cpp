#include "lie2kit/omni.hpp"

#include "lie2kit/errors.hpp"

namespace lie2kit {

namespace {

Rational half() { return Rational(1, 2); }
Rational quarter() { return Rational(1, 4); }

Matrix comm(const Matrix& a, const Matrix& b) { return a * b - b * a; }

OmniElement from_coords(int n, const Vec& v) {
    return OmniElement(Matrix::unflatten(n, n, v.slice(0, n * n)), v.slice(n * n, n));
}

Vec to_coords(const OmniElement& e) { return Vec::concat(e.a.flatten(), e.u); }

} // namespace

OmniElement::OmniElement(Matrix a_, Vec u_) : a(std::move(a_)), u(std::move(u_)) {
    if (!a.is_square() || a.rows() != u.dim()) throw ShapeMismatch("omni element shape");
}

OmniElement omni_bracket(const OmniElement& x, const OmniElement& y) {
    return OmniElement(comm(x.a, y.a), half() * (x.a * y.u - y.a * x.u));
}

Vec omni_pairing(const OmniElement& x, const OmniElement& y) {
    return half() * (x.a * y.u + y.a * x.u);
}

Vec jacobiator(const OmniElement& x, const OmniElement& y, const OmniElement& z) {
    return quarter() * (comm(x.a, y.a) * z.u + comm(y.a, z.a) * x.u + comm(z.a, x.a) * y.u);
}

RepUpToHomotopy omni_rep(int n) {
    LieAlgebra g = gl_algebra(n);
    TwoTermComplex c(n, n, Matrix::identity(n));
    std::vector<Matrix> mu0, mu1;
    std::vector<Matrix> basis;
    mu0.reserve(static_cast<size_t>(g.dim));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Matrix e(n, n);
            e.at(i, j) = 1;
            basis.push_back(e);
            mu0.push_back(half() * e);
        }
    mu1 = mu0;
    std::vector<std::vector<Matrix>> nu(static_cast<size_t>(g.dim));
    for (int a = 0; a < g.dim; ++a) {
        nu[static_cast<size_t>(a)].reserve(static_cast<size_t>(g.dim));
        for (int b = 0; b < g.dim; ++b)
            nu[static_cast<size_t>(a)].push_back(
                quarter() * comm(basis[static_cast<size_t>(a)], basis[static_cast<size_t>(b)]));
    }
    return RepUpToHomotopy(std::move(g), std::move(c), std::move(mu0), std::move(mu1), std::move(nu));
}

Lie2Algebra build_omni_lie2(int n) {
    const int N0 = n * n + n;
    TwoTermComplex c(n, N0, Matrix::vstack(Matrix::zero(n * n, n), Matrix::identity(n)));

    BilinearMap l2_00(N0, N0, N0);
    for (int i = 0; i < N0; ++i)
        for (int j = 0; j < N0; ++j) {
            OmniElement x = from_coords(n, Vec::unit(N0, i));
            OmniElement y = from_coords(n, Vec::unit(N0, j));
            l2_00.set_column(i, j, to_coords(omni_bracket(x, y)));
        }
    BilinearMap l2_01(N0, n, n);
    for (int i = 0; i < N0; ++i)
        for (int m = 0; m < n; ++m) {
            OmniElement x = from_coords(n, Vec::unit(N0, i));
            OmniElement dm(Matrix::zero(n, n), Vec::unit(n, m));
            l2_01.set_column(i, m, omni_bracket(x, dm).u);
        }
    TrilinearMap l3(N0, n);
    for (int i = 0; i < N0; ++i)
        for (int j = 0; j < N0; ++j)
            for (int k = 0; k < N0; ++k) {
                OmniElement x = from_coords(n, Vec::unit(N0, i));
                OmniElement y = from_coords(n, Vec::unit(N0, j));
                OmniElement z = from_coords(n, Vec::unit(N0, k));
                l3.set_column(i, j, k, -jacobiator(x, y, z));
            }
    return Lie2Algebra(std::move(c), std::move(l2_00), std::move(l2_01), std::move(l3));
}

StrictifiedSemidirect omni_strictified(int n) { return strictified_semidirect(omni_rep(n)); }

SkewBracket::SkewBracket(int dim_, BilinearMap b_) : dim(dim_), b(std::move(b_)) {
    if (b.dim_a() != dim || b.dim_b() != dim || b.dim_out() != dim)
        throw ShapeMismatch("skew bracket shape");
    if (!b.antisymmetric()) throw BadStructure("bracket is not antisymmetric");
}

Matrix SkewBracket::ad(const Vec& u) const {
    Matrix m(dim, dim);
    for (int j = 0; j < dim; ++j) {
        Vec col = b.eval(u, Vec::unit(dim, j));
        for (int i = 0; i < dim; ++i) m.at(i, j) = col[i];
    }
    return m;
}

Report check_dirac_graph(const SkewBracket& b) {
    Report rep;
    rep.subject = "graph-type dirac structure";
    const int n = b.dim;

    std::vector<OmniElement> graph_basis;
    graph_basis.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) graph_basis.emplace_back(b.ad(Vec::unit(n, i)), Vec::unit(n, i));

    {
        bool pass = true;
        std::string ce;
        for (int i = 0; i < n && pass; ++i)
            for (int j = i; j < n; ++j)
                if (!omni_pairing(graph_basis[static_cast<size_t>(i)],
                                  graph_basis[static_cast<size_t>(j)])
                         .is_zero()) {
                    pass = false;
                    ce = "(u" + std::to_string(i) + ", u" + std::to_string(j) + ")";
                    break;
                }
        rep.add("dirac.isotropic", "<(ad_u,u),(ad_v,v)> == 0", pass, ce);
    }

    {
        // Orthogonal complement of the graph equals the graph.
        Matrix cond(n * n, n * n + n);
        for (int i = 0; i < n; ++i)
            for (int r = 0; r < n; ++r) {
                int row = i * n + r;
                cond.at(row, r * n + i) = 1;  // (B e_i)_r
                for (int s = 0; s < n; ++s) cond.at(row, n * n + s) += b.b.at(i, s, r);
            }
        Matrix complement = Matrix::from_cols(n * n + n, kernel_basis(cond));
        std::vector<Vec> graph_cols;
        for (const auto& e : graph_basis) graph_cols.push_back(to_coords(e));
        Matrix graph = Matrix::from_cols(n * n + n, graph_cols);
        rep.add("dirac.maximal", "pairing-orthogonal complement of the graph is the graph",
                same_column_space(complement, graph));
    }

    bool closure = true;
    {
        std::string ce;
        for (int i = 0; i < n && closure; ++i)
            for (int j = i + 1; j < n; ++j) {
                OmniElement br = omni_bracket(graph_basis[static_cast<size_t>(i)],
                                              graph_basis[static_cast<size_t>(j)]);
                if (!(br.a == b.ad(br.u))) {
                    closure = false;
                    ce = "(u" + std::to_string(i) + ", u" + std::to_string(j) + ")";
                    break;
                }
            }
        rep.add("dirac.closure", "omni bracket of graph elements stays on the graph", closure, ce);
    }

    bool jacobi = jacobi_holds(b.b);
    rep.add("dirac.jacobi", "bracket satisfies the Jacobi identity", jacobi);
    rep.add("dirac.criterion", "closure holds exactly when Jacobi holds", closure == jacobi);
    return rep;
}

Report dirac_pullback_check(const SkewBracket& b, const Matrix& w_basis) {
    const int n = b.dim;
    if (!jacobi_holds(b.b)) throw NotJacobi();
    if (w_basis.rows() != n) throw ShapeMismatch("W basis rows");
    const int w = w_basis.cols();
    if (rank(w_basis) != w) throw BadStructure("W basis columns must be independent");
    for (int j = 0; j < w; ++j)
        if (!b.ad(w_basis.col(j)).is_zero())
            throw NotCentral("W is not contained in the center of (V, b)");

    Report rep;
    rep.subject = "dirac pullback square";

    LieAlgebra gl = gl_algebra(n);
    const int g = gl.dim;  // n^2

    // Crossed module (gl x W, gl x V, Id x i, phi):
    //   [(A,c),(A',c')] = ([A,A'], 0)
    //   [(A,u),(B,v)]   = ([ad_u,B]/2 + [A,ad_v]/2 + [A,B] - ad_{[u,v]}/4, [u,v])
    //   phi_{(A,u)}(B,c) = ([A,B] + [ad_u,B]/2, 0)
    const int H1 = g + w, H0 = g + n;
    auto glmat = [&](int a) { return Matrix::unflatten(n, n, Vec::unit(g, a)); };

    BilinearMap b1(H1, H1, H1);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) {
            Vec col(H1);
            Vec c = gl.bracket.column(i, j);
            for (int t = 0; t < g; ++t) col[t] = c[t];
            b1.set_column(i, j, col);
        }
    BilinearMap b0(H0, H0, H0);
    for (int i = 0; i < H0; ++i)
        for (int j = 0; j < H0; ++j) {
            Matrix A = i < g ? glmat(i) : Matrix::zero(n, n);
            Vec u = i < g ? Vec(n) : Vec::unit(n, i - g);
            Matrix B = j < g ? glmat(j) : Matrix::zero(n, n);
            Vec v = j < g ? Vec(n) : Vec::unit(n, j - g);
            Vec uv = b.b.eval(u, v);
            Matrix glpart = half() * (comm(b.ad(u), B) + comm(A, b.ad(v))) + comm(A, B) -
                            quarter() * b.ad(uv);
            b0.set_column(i, j, Vec::concat(glpart.flatten(), uv));
        }
    Matrix dt(H0, H1);
    for (int t = 0; t < g; ++t) dt.at(t, t) = 1;
    for (int j = 0; j < w; ++j)
        for (int t = 0; t < n; ++t) dt.at(g + t, g + j) = w_basis.at(t, j);
    BilinearMap phi(H0, H1, H1);
    for (int a = 0; a < H0; ++a)
        for (int i = 0; i < H1; ++i) {
            Vec col(H1);
            if (i < g) {
                Matrix A = a < g ? glmat(a) : Matrix::zero(n, n);
                Vec u = a < g ? Vec(n) : Vec::unit(n, a - g);
                Matrix act = comm(A, glmat(i)) + half() * comm(b.ad(u), glmat(i));
                Vec flat = act.flatten();
                for (int t = 0; t < g; ++t) col[t] = flat[t];
            }
            phi.set_column(a, i, col);
        }
    CrossedModuleAlg wv(H1, H0, std::move(b1), std::move(b0), std::move(dt), std::move(phi));
    Report wv_check = check_crossed_module(wv);
    rep.add("pullback.wv_xmod", "(gl x W, gl x V, Id x i, phi) is a crossed module", wv_check.ok());

    StrictifiedSemidirect s = omni_strictified(n);
    Lie2Algebra wv2 = xmod_to_dgla(wv);

    // psi into the strict model: psi0(A,u) = (ad_u, A, u), psi1(A,c) = (A, ic),
    // psi2((A,u),(B,v)) = (0, Bu - Av).
    const int S0 = g + g + n, S1 = g + n;
    Matrix psi0(S0, H0);
    for (int a = 0; a < g; ++a) psi0.at(g + a, a) = 1;
    for (int sIdx = 0; sIdx < n; ++sIdx) {
        Vec adflat = b.ad(Vec::unit(n, sIdx)).flatten();
        for (int t = 0; t < g; ++t) psi0.at(t, g + sIdx) = adflat[t];
        psi0.at(g + g + sIdx, g + sIdx) = 1;
    }
    Matrix psi1(S1, H1);
    for (int t = 0; t < g; ++t) psi1.at(t, t) = 1;
    for (int j = 0; j < w; ++j)
        for (int t = 0; t < n; ++t) psi1.at(g + t, g + j) = w_basis.at(t, j);
    BilinearMap psi2(H0, H0, S1);
    for (int a = 0; a < g; ++a)
        for (int sIdx = 0; sIdx < n; ++sIdx) {
            // ((E_a, 0), (0, e_s)): Bu - Av = -E_a e_s
            Vec val(S1);
            Vec prod = glmat(a) * Vec::unit(n, sIdx);
            for (int t = 0; t < n; ++t) val[g + t] = -prod[t];
            psi2.set_column(a, g + sIdx, val);
            psi2.set_column(g + sIdx, a, -val);
        }
    Lie2Morphism psi(psi0, psi1, psi2);
    Report psi_check = check_morphism(wv2, s.strict2, psi);
    rep.add("pullback.psi", "(psi0, psi1, psi2) is a morphism into the strict model",
            psi_check.ok());

    // Graph sub-2-algebra W -> G_ad, with G_ad identified with V.
    BilinearMap ga_l2(n, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) ga_l2.set_column(i, j, b.b.column(i, j));
    Lie2Algebra ga(TwoTermComplex(w, n, w_basis), ga_l2, BilinearMap(n, w, w), TrilinearMap(n, w));

    // Left vertical: (pr_W, ad x pr): strict, and an equivalence.
    Matrix lv0(n, H0);
    for (int t = 0; t < n; ++t) lv0.at(t, g + t) = 1;
    Matrix lv1(w, H1);
    for (int t = 0; t < w; ++t) lv1.at(t, g + t) = 1;
    Lie2Morphism left = Lie2Morphism::strict(lv0, lv1);
    Report left_check = check_morphism(wv2, ga, left);
    rep.add("pullback.left_vertical", "projection onto W -> G_ad is a strict morphism",
            left_check.ok());
    rep.add("pullback.left_equivalence", "projection is an equivalence of complexes",
            quasi_iso_check(wv2, ga, left));

    // Bottom: (i, id) embeds W -> G_ad into the omni Lie 2-algebra.
    Matrix bot0(g + n, n);
    for (int sIdx = 0; sIdx < n; ++sIdx) {
        Vec adflat = b.ad(Vec::unit(n, sIdx)).flatten();
        for (int t = 0; t < g; ++t) bot0.at(t, sIdx) = adflat[t];
        bot0.at(g + sIdx, sIdx) = 1;
    }
    Lie2Morphism bottom = Lie2Morphism::strict(bot0, w_basis);
    Report bottom_check = check_morphism(ga, s.target, bottom);
    rep.add("pullback.bottom", "(i, id) is a strict morphism into the omni Lie 2-algebra",
            bottom_check.ok());

    rep.add("pullback.right_equivalence", "strictification equivalence passes quasi-iso",
            quasi_iso_check(s.strict2, s.target, s.equivalence));

    // The square commutes on the nose, including the f2 corrections.
    Lie2Morphism top_right = compose(s.equivalence, psi);
    Lie2Morphism left_bottom = compose(bottom, left);
    rep.add("pullback.square", "equivalence . psi == (i, id) . projection",
            morphism_equal(top_right, left_bottom));

    return rep;
}

} // namespace lie2kit
