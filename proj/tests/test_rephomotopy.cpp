#include <doctest.h>

#include "lie2kit/generators.hpp"
#include "lie2kit/omni.hpp"

using namespace lie2kit;

namespace {

// Adjoint action of g on the complex g -Id-> g: an honest strict rep.
RepUpToHomotopy adjoint_strict_rep(const LieAlgebra& g) {
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
    return RepUpToHomotopy(g, c, ad, ad, nu);
}

} // namespace

TEST_CASE("check_rep") {
    SUBCASE("honest strict representation passes") {
        CHECK(check_rep(adjoint_strict_rep(sl2())).ok());
    }
    SUBCASE("the half action with quarter correction passes") {
        CHECK(check_rep(omni_rep(2)).ok());
    }
    SUBCASE("the half action without the correction fails the action law") {
        RepUpToHomotopy r = omni_rep(2);
        std::vector<std::vector<Matrix>> nu(
            static_cast<size_t>(r.g.dim),
            std::vector<Matrix>(static_cast<size_t>(r.g.dim), Matrix::zero(2, 2)));
        RepUpToHomotopy broken(r.g, r.complex, r.mu0, r.mu1, nu);
        Report rep = check_rep(broken);
        CHECK_FALSE(rep.ok());
        for (const auto& c : rep.checks) {
            if (c.id == "rep.chain") CHECK(c.pass);
            if (c.id == "rep.mu0") CHECK_FALSE(c.pass);
        }
    }
}

TEST_CASE("semidirect product Lie 2-algebra") {
    Rng rng(71);
    SUBCASE("strict rep gives a strict product") {
        Lie2Algebra a = semidirect_lie2(adjoint_strict_rep(cross_product3()));
        CHECK(a.is_strict());
        CHECK(check_lie2(a).ok());
    }
    SUBCASE("zero action gives a direct sum with abelian tail") {
        LieAlgebra g = sl2();
        TwoTermComplex c(1, 2, Matrix(2, 1, {0, 0}));
        Lie2Algebra a = semidirect_lie2(RepUpToHomotopy::zero(g, c));
        CHECK(a.is_strict());
        CHECK(check_lie2(a).ok());
        // V0 block brackets to zero against everything
        for (int i = 0; i < a.dim(0); ++i)
            for (int j = 3; j < a.dim(0); ++j) CHECK(a.l2_00.column(i, j).is_zero());
    }
    SUBCASE("random reps give Lie 2-algebras, exactly") {
        for (int t = 0; t < 15; ++t) {
            RepUpToHomotopy r = random_rep(3, rng);
            Lie2Algebra a = semidirect_lie2(r);
            CHECK(check_lie2(a).ok());
        }
    }
    SUBCASE("rejects invalid reps") {
        RepUpToHomotopy r = omni_rep(2);
        std::vector<std::vector<Matrix>> nu(
            static_cast<size_t>(r.g.dim),
            std::vector<Matrix>(static_cast<size_t>(r.g.dim), Matrix::zero(2, 2)));
        CHECK_THROWS_AS(semidirect_lie2(RepUpToHomotopy(r.g, r.complex, r.mu0, r.mu1, nu)),
                        InvalidRep);
    }
}

TEST_CASE("the bracket Jacobiator of a semidirect product is exact") {
    // [[x,y],z] + c.p. == d(nu(X,Y)(gamma)) + c.p. on degree 0 elements
    Rng rng(73);
    for (int t = 0; t < 10; ++t) {
        RepUpToHomotopy r = random_rep(2, rng);
        Lie2Algebra a = semidirect_lie2(r);
        const int ng = r.g.dim, n0 = r.complex.dim_v0;
        Vec x = rng.vec(ng + n0, 2), y = rng.vec(ng + n0, 2), z = rng.vec(ng + n0, 2);
        auto gpart = [&](const Vec& v) { return v.slice(0, ng); };
        auto vpart = [&](const Vec& v) { return v.slice(ng, n0); };
        Vec jac = a.l2_00.eval(a.l2_00.eval(x, y), z) + a.l2_00.eval(a.l2_00.eval(y, z), x) +
                  a.l2_00.eval(a.l2_00.eval(z, x), y);
        Vec corr = r.nu_of(gpart(x), gpart(y)) * vpart(z) + r.nu_of(gpart(y), gpart(z)) * vpart(x) +
                   r.nu_of(gpart(z), gpart(x)) * vpart(y);
        Vec rhs = Vec::concat(Vec(ng), r.complex.d * corr);
        CHECK(jac == rhs);
    }
}

TEST_CASE("representations are morphisms into End(V)") {
    Rng rng(79);
    SUBCASE("round trip is the identity") {
        for (int t = 0; t < 10; ++t) {
            RepUpToHomotopy r = random_rep(3, rng);
            RepAsMorphism m = rep_to_morphism(r);
            CHECK(check_morphism(m.src, m.dst, m.f).ok());
            RepUpToHomotopy back = morphism_to_rep(r.g, m.end, m.f);
            CHECK(back.complex == r.complex);
            for (int a = 0; a < r.g.dim; ++a) {
                CHECK(back.mu0[static_cast<size_t>(a)] == r.mu0[static_cast<size_t>(a)]);
                CHECK(back.mu1[static_cast<size_t>(a)] == r.mu1[static_cast<size_t>(a)]);
                for (int b = 0; b < r.g.dim; ++b)
                    CHECK(back.nu[static_cast<size_t>(a)][static_cast<size_t>(b)] ==
                          r.nu[static_cast<size_t>(a)][static_cast<size_t>(b)]);
            }
        }
    }
    SUBCASE("the omni rep lands on the quarter commutator correction") {
        RepAsMorphism m = rep_to_morphism(omni_rep(2));
        CHECK(check_morphism(m.src, m.dst, m.f).ok());
        // f2(E01, E10) = [E01,E10]/4 as a k1 element
        Matrix e01(2, 2, {0, 1, 0, 0}), e10(2, 2, {0, 0, 1, 0});
        Matrix expected = Rational(1, 4) * (e01 * e10 - e10 * e01);
        CHECK(m.end.k1_elem(m.f.f2.column(1, 2)) == expected);
    }
    SUBCASE("strict reps give strict morphisms") {
        RepAsMorphism m = rep_to_morphism(adjoint_strict_rep(heisenberg3()));
        CHECK(m.f.is_strict());
        CHECK(check_morphism(m.src, m.dst, m.f).ok());
    }
    SUBCASE("pairs outside the kernel of delta are rejected") {
        EndData end(TwoTermComplex(1, 1, Matrix(1, 1, {1})));
        CHECK_THROWS_AS(end.k0_coords(Matrix(1, 1, {1}), Matrix(1, 1, {2})), ImageNotInKernel);
    }
}

TEST_CASE("strict semidirect crossed module") {
    Rng rng(83);
    SUBCASE("trivial h with a strict rep is the classical semidirect product") {
        LieAlgebra g = cross_product3();
        RepUpToHomotopy r = adjoint_strict_rep(g);
        RepAsMorphism m = rep_to_morphism(r);
        CrossedModuleAlg h = CrossedModuleAlg::trivial(g);
        CrossedModuleAlg out = strict_semidirect_xmod(h, m.f.f0, m.f.f1, m.end);
        CHECK(check_crossed_module(out).ok());
        CHECK(out.dim_h1 == 3);  // h1 x| V1 = V1
        CHECK(out.dim_h0 == 6);
        // classical semidirect bracket on g + V0
        for (int a = 0; a < 3; ++a)
            for (int j = 0; j < 3; ++j) {
                Vec br = out.bracket_h0.column(a, 3 + j);
                CHECK(br.slice(0, 3).is_zero());
                CHECK(br.slice(3, 3) == g.bracket.column(a, j));  // ad action
            }
    }
    SUBCASE("the identity morphism of End(c) gives the gl(V) x| V model") {
        TwoTermComplex c(1, 2, rng.matrix(2, 1, 2));
        EndData end(c);
        Matrix psi0 = Matrix::identity(end.dim_k0());
        Matrix psi1 = Matrix::identity(end.dim_k1());
        CrossedModuleAlg out = strict_semidirect_xmod(end.xmod(), psi0, psi1, end);
        CHECK(check_crossed_module(out).ok());
        CHECK(out.dim_h1 == end.dim_k1() + 1);
        CHECK(out.dim_h0 == end.dim_k0() + 2);
    }
    SUBCASE("zero complex leaves h unchanged") {
        CrossedModuleAlg h = adjoint_xmod(sl2());
        EndData end{TwoTermComplex(0, 0, Matrix(0, 0))};
        CrossedModuleAlg out =
            strict_semidirect_xmod(h, Matrix::zero(0, h.dim_h0), Matrix::zero(0, h.dim_h1), end);
        CHECK(out.bracket_h1 == h.bracket_h1);
        CHECK(out.bracket_h0 == h.bracket_h0);
        CHECK(out.dt == h.dt);
        CHECK(out.phi == h.phi);
    }
    SUBCASE("non-morphisms are rejected") {
        LieAlgebra g = sl2();
        RepAsMorphism m = rep_to_morphism(adjoint_strict_rep(g));
        CrossedModuleAlg h = CrossedModuleAlg::trivial(g);
        CHECK_THROWS_AS(strict_semidirect_xmod(h, Rational(2) * m.f.f0, m.f.f1, m.end),
                        NotStrictMorphism);
    }
}
