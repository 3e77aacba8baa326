#include "lie2kit/generators.hpp"

#include "lie2kit/end_dgla.hpp"
#include "lie2kit/errors.hpp"

namespace lie2kit {

namespace {

BilinearMap bracket_from_columns(int n, const std::vector<std::tuple<int, int, Vec>>& cols) {
    BilinearMap b(n, n, n);
    for (const auto& [i, j, v] : cols) {
        b.set_column(i, j, v);
        b.set_column(j, i, -v);
    }
    return b;
}

struct ModeledAlgebra {
    LieAlgebra alg;
    std::vector<Matrix> model;  // matrix realization, one per basis vector
};

ModeledAlgebra catalog_pick(int max_dim, Rng& rng) {
    struct Entry {
        int dim;
        ModeledAlgebra (*make)();
    };
    static const Entry entries[] = {
        {0, []() { return ModeledAlgebra{LieAlgebra::abelian(0), {}}; }},
        {1,
         []() {
             return ModeledAlgebra{LieAlgebra::abelian(1), {Matrix::zero(1, 1)}};
         }},
        {2,
         []() {
             std::vector<Matrix> m(2, Matrix::zero(2, 2));
             return ModeledAlgebra{LieAlgebra::abelian(2), m};
         }},
        {2,
         []() {
             Matrix a(2, 2, {1, 0, 0, 0}), b(2, 2, {0, 1, 0, 0});
             return ModeledAlgebra{affine2(), {a, b}};
         }},
        {3,
         []() {
             std::vector<Matrix> m(3, Matrix::zero(3, 3));
             return ModeledAlgebra{LieAlgebra::abelian(3), m};
         }},
        {3,
         []() {
             Matrix e1(3, 3), e2(3, 3), e3(3, 3);
             e1.at(0, 1) = 1;
             e2.at(1, 2) = 1;
             e3.at(0, 2) = 1;
             return ModeledAlgebra{heisenberg3(), {e1, e2, e3}};
         }},
        {3,
         []() {
             Matrix h(2, 2, {1, 0, 0, -1}), e(2, 2, {0, 1, 0, 0}), f(2, 2, {0, 0, 1, 0});
             return ModeledAlgebra{sl2(), {h, e, f}};
         }},
        {3,
         []() {
             Matrix l1(3, 3, {0, 0, 0, 0, 0, -1, 0, 1, 0});
             Matrix l2(3, 3, {0, 0, 1, 0, 0, 0, -1, 0, 0});
             Matrix l3(3, 3, {0, -1, 0, 1, 0, 0, 0, 0, 0});
             return ModeledAlgebra{cross_product3(), {l1, l2, l3}};
         }},
    };
    std::vector<const Entry*> fits;
    for (const auto& e : entries)
        if (e.dim <= max_dim) fits.push_back(&e);
    return fits[static_cast<size_t>(rng.int_in(0, static_cast<long>(fits.size()) - 1))]->make();
}

ModeledAlgebra conjugated(ModeledAlgebra in, Rng& rng) {
    if (in.alg.dim == 0) return in;
    Matrix p = rng.invertible(in.alg.dim, 2);
    ModeledAlgebra out;
    out.alg = change_basis(in.alg, p);
    out.model.reserve(in.model.size());
    for (int a = 0; a < in.alg.dim; ++a) {
        Matrix m = Matrix::zero(in.model[0].rows(), in.model[0].cols());
        for (int b = 0; b < in.alg.dim; ++b)
            if (!p.at(b, a).is_zero()) m = m + p.at(b, a) * in.model[static_cast<size_t>(b)];
        out.model.push_back(std::move(m));
    }
    return out;
}

} // namespace

LieAlgebra heisenberg3() {
    return LieAlgebra(3, bracket_from_columns(3, {{0, 1, Vec{0, 0, 1}}}));
}

LieAlgebra sl2() {
    return LieAlgebra(
        3, bracket_from_columns(3, {{0, 1, Vec{0, 2, 0}}, {0, 2, Vec{0, 0, -2}}, {1, 2, Vec{1, 0, 0}}}));
}

LieAlgebra cross_product3() {
    return LieAlgebra(
        3, bracket_from_columns(3, {{0, 1, Vec{0, 0, 1}}, {1, 2, Vec{1, 0, 0}}, {2, 0, Vec{0, 1, 0}}}));
}

LieAlgebra affine2() { return LieAlgebra(2, bracket_from_columns(2, {{0, 1, Vec{0, 1}}})); }

LieAlgebra random_lie_algebra(int dim, Rng& rng) {
    for (;;) {
        ModeledAlgebra m = catalog_pick(dim, rng);
        if (m.alg.dim == dim) return conjugated(std::move(m), rng).alg;
    }
}

TwoTermComplex random_complex(int max_dim, Rng& rng) {
    int v1 = static_cast<int>(rng.int_in(0, max_dim));
    int v0 = static_cast<int>(rng.int_in(0, max_dim));
    return TwoTermComplex(v1, v0, rng.matrix(v0, v1, 2));
}

RepUpToHomotopy half_adjoint_rep(const LieAlgebra& g, const std::vector<Matrix>& matrix_model) {
    if (matrix_model.size() != static_cast<size_t>(g.dim)) throw ShapeMismatch("model size");
    int n = g.dim == 0 ? 0 : matrix_model[0].rows();
    TwoTermComplex c(n, n, Matrix::identity(n));
    Rational h(1, 2), q(1, 4);
    std::vector<Matrix> mu0, mu1;
    for (const auto& m : matrix_model) mu0.push_back(h * m);
    mu1 = mu0;
    std::vector<std::vector<Matrix>> nu(static_cast<size_t>(g.dim));
    for (int a = 0; a < g.dim; ++a)
        for (int b = 0; b < g.dim; ++b) {
            const Matrix& ma = matrix_model[static_cast<size_t>(a)];
            const Matrix& mb = matrix_model[static_cast<size_t>(b)];
            nu[static_cast<size_t>(a)].push_back(q * (ma * mb - mb * ma));
        }
    return RepUpToHomotopy(g, std::move(c), std::move(mu0), std::move(mu1), std::move(nu));
}

RepUpToHomotopy gauge_shift(const RepUpToHomotopy& r, const std::vector<Matrix>& eta) {
    const int ng = r.g.dim;
    if (eta.size() != static_cast<size_t>(ng)) throw ShapeMismatch("eta size");
    const Matrix& d = r.complex.d;
    auto eta_of = [&](const Vec& x) {
        Matrix m = Matrix::zero(r.complex.dim_v1, r.complex.dim_v0);
        for (int a = 0; a < ng; ++a)
            if (!x[a].is_zero()) m = m + x[a] * eta[static_cast<size_t>(a)];
        return m;
    };
    std::vector<Matrix> mu0, mu1;
    for (int a = 0; a < ng; ++a) {
        mu0.push_back(r.mu0[static_cast<size_t>(a)] + d * eta[static_cast<size_t>(a)]);
        mu1.push_back(r.mu1[static_cast<size_t>(a)] + eta[static_cast<size_t>(a)] * d);
    }
    std::vector<std::vector<Matrix>> nu(static_cast<size_t>(ng));
    for (int a = 0; a < ng; ++a)
        for (int b = 0; b < ng; ++b) {
            const Matrix& ea = eta[static_cast<size_t>(a)];
            const Matrix& eb = eta[static_cast<size_t>(b)];
            Matrix v = r.nu[static_cast<size_t>(a)][static_cast<size_t>(b)];
            v = v + eta_of(r.g.bracket.column(a, b));
            v = v + (r.mu1[static_cast<size_t>(b)] * ea - ea * r.mu0[static_cast<size_t>(b)]);
            v = v - (r.mu1[static_cast<size_t>(a)] * eb - eb * r.mu0[static_cast<size_t>(a)]);
            v = v - ea * d * eb + eb * d * ea;
            nu[static_cast<size_t>(a)].push_back(std::move(v));
        }
    return RepUpToHomotopy(r.g, r.complex, std::move(mu0), std::move(mu1), std::move(nu));
}

RepUpToHomotopy random_rep(const LieAlgebra& g, const TwoTermComplex& c, Rng& rng) {
    std::vector<Matrix> eta;
    eta.reserve(static_cast<size_t>(g.dim));
    for (int a = 0; a < g.dim; ++a) eta.push_back(rng.matrix(c.dim_v1, c.dim_v0, 2));
    RepUpToHomotopy out = gauge_shift(RepUpToHomotopy::zero(g, c), eta);
    if (!check_rep(out).ok()) throw InvalidRep("generator produced an invalid rep");
    return out;
}

RepUpToHomotopy random_rep(int max_dim, Rng& rng) {
    ModeledAlgebra m = conjugated(catalog_pick(max_dim, rng), rng);
    RepUpToHomotopy base = (rng.int_in(0, 1) == 0 && !m.model.empty() &&
                            m.model[0].rows() <= max_dim)
                               ? half_adjoint_rep(m.alg, m.model)
                               : RepUpToHomotopy::zero(m.alg, random_complex(max_dim, rng));
    std::vector<Matrix> eta;
    eta.reserve(static_cast<size_t>(m.alg.dim));
    for (int a = 0; a < m.alg.dim; ++a)
        eta.push_back(rng.matrix(base.complex.dim_v1, base.complex.dim_v0, 2));
    RepUpToHomotopy out = gauge_shift(base, eta);
    if (!check_rep(out).ok()) throw InvalidRep("generator produced an invalid rep");
    return out;
}

CrossedModuleAlg xmod_change_basis(const CrossedModuleAlg& x, const Matrix& p1, const Matrix& p0) {
    Matrix q1 = invert(p1), q0 = invert(p0);
    int n1 = x.dim_h1, n0 = x.dim_h0;
    BilinearMap b1(n1, n1, n1), phi(n0, n1, n1);
    BilinearMap b0(n0, n0, n0);
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n1; ++j)
            b1.set_column(i, j, q1 * x.bracket_h1.eval(p1.col(i), p1.col(j)));
    for (int i = 0; i < n0; ++i)
        for (int j = 0; j < n0; ++j)
            b0.set_column(i, j, q0 * x.bracket_h0.eval(p0.col(i), p0.col(j)));
    for (int a = 0; a < n0; ++a)
        for (int i = 0; i < n1; ++i)
            phi.set_column(a, i, q1 * x.phi.eval(p0.col(a), p1.col(i)));
    return CrossedModuleAlg(n1, n0, std::move(b1), std::move(b0), q0 * x.dt * p1, std::move(phi));
}

CrossedModuleAlg random_xmod(int max_dim, Rng& rng) {
    CrossedModuleAlg x;
    switch (rng.int_in(0, 2)) {
        case 0: {
            TwoTermComplex c = random_complex(2, rng);
            x = end_crossed_module(c).xmod();
            break;
        }
        case 1: {
            x = adjoint_xmod(random_lie_algebra(static_cast<int>(rng.int_in(1, max_dim)), rng));
            break;
        }
        default: {
            // strict semidirect: adjoint action of g on its own complex g -Id-> g
            LieAlgebra g = random_lie_algebra(static_cast<int>(rng.int_in(1, max_dim)), rng);
            TwoTermComplex c(g.dim, g.dim, Matrix::identity(g.dim));
            std::vector<Matrix> ad;
            for (int a = 0; a < g.dim; ++a) {
                Matrix m(g.dim, g.dim);
                for (int j = 0; j < g.dim; ++j) {
                    Vec col = g.bracket.column(a, j);
                    for (int i = 0; i < g.dim; ++i) m.at(i, j) = col[i];
                }
                ad.push_back(std::move(m));
            }
            std::vector<std::vector<Matrix>> nu(
                static_cast<size_t>(g.dim),
                std::vector<Matrix>(static_cast<size_t>(g.dim), Matrix::zero(g.dim, g.dim)));
            RepUpToHomotopy strict(g, c, ad, ad, nu);
            x = dgla_to_xmod(semidirect_lie2(strict));
            break;
        }
    }
    if (x.dim_h1 == 0 && x.dim_h0 == 0) return x;
    Matrix p1 = rng.invertible(x.dim_h1, 2);
    Matrix p0 = rng.invertible(x.dim_h0, 2);
    return xmod_change_basis(x, p1, p0);
}

} // namespace lie2kit
