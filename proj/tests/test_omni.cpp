#include <doctest.h>

#include "lie2kit/generators.hpp"
#include "lie2kit/omni.hpp"

using namespace lie2kit;

namespace {

Matrix unit_mat(int n, int i, int j) {
    Matrix m(n, n);
    m.at(i, j) = 1;
    return m;
}

OmniElement from_coords(int n, const Vec& v) {
    return OmniElement(Matrix::unflatten(n, n, v.slice(0, n * n)), v.slice(n * n, n));
}

// Cyclic double bracket: the independent route to the Jacobiator.
OmniElement cyclic_double_bracket(const OmniElement& x, const OmniElement& y,
                                  const OmniElement& z) {
    OmniElement a = omni_bracket(omni_bracket(x, y), z);
    OmniElement b = omni_bracket(omni_bracket(y, z), x);
    OmniElement c = omni_bracket(omni_bracket(z, x), y);
    return OmniElement(a.a + b.a + c.a, a.u + b.u + c.u);
}

SkewBracket cross3() {
    BilinearMap b(3, 3, 3);
    auto set = [&](int i, int j, const Vec& v) {
        b.set_column(i, j, v);
        b.set_column(j, i, -v);
    };
    set(0, 1, Vec{0, 0, 1});
    set(1, 2, Vec{1, 0, 0});
    set(2, 0, Vec{0, 1, 0});
    return SkewBracket(3, b);
}

SkewBracket heisenberg_bracket3() {
    BilinearMap b(3, 3, 3);
    b.set_column(0, 1, Vec{0, 0, 1});
    b.set_column(1, 0, Vec{0, 0, -1});
    return SkewBracket(3, b);
}

// b(e1,e2) = e1, b(e1,e3) = e3: fails Jacobi on the basis triple.
SkewBracket non_jacobi3() {
    BilinearMap b(3, 3, 3);
    auto set = [&](int i, int j, const Vec& v) {
        b.set_column(i, j, v);
        b.set_column(j, i, -v);
    };
    set(0, 1, Vec{1, 0, 0});
    set(0, 2, Vec{0, 0, 1});
    return SkewBracket(3, b);
}

SkewBracket random_skew(int n, Rng& rng) {
    BilinearMap b(n, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vec v = rng.vec(n, 1);
            b.set_column(i, j, v);
            b.set_column(j, i, -v);
        }
    return SkewBracket(n, b);
}

} // namespace

TEST_CASE("omni bracket and pairing") {
    SUBCASE("worked 2x2 example") {
        OmniElement x(unit_mat(2, 0, 1), Vec::unit(2, 0));
        OmniElement y(unit_mat(2, 1, 0), Vec::unit(2, 1));
        OmniElement br = omni_bracket(x, y);
        CHECK(br.a == Matrix(2, 2, {1, 0, 0, -1}));
        Vec expect(2);
        expect[0] = Rational(1, 2);
        expect[1] = Rational(-1, 2);
        CHECK(br.u == expect);
        CHECK(omni_pairing(x, y) == omni_pairing(y, x));
    }
    SUBCASE("bracket is antisymmetric, pairing of an element with itself is Au") {
        Rng rng(401);
        for (int t = 0; t < 20; ++t) {
            OmniElement x(rng.matrix(2, 2, 3), rng.vec(2, 3));
            OmniElement y(rng.matrix(2, 2, 3), rng.vec(2, 3));
            OmniElement xy = omni_bracket(x, y), yx = omni_bracket(y, x);
            CHECK((xy.a + yx.a).is_zero());
            CHECK((xy.u + yx.u).is_zero());
            CHECK(omni_bracket(x, x).a.is_zero());
            CHECK(omni_bracket(x, x).u.is_zero());
            CHECK(omni_pairing(x, x) == x.a * x.u);
        }
    }
}

TEST_CASE("the jacobiator is the cyclic double bracket") {
    SUBCASE("dimension one is abelian") {
        OmniElement x(Matrix(1, 1, {2}), Vec{3});
        CHECK(jacobiator(x, x, x).is_zero());
    }
    SUBCASE("basis triple in dimension two against the oracle") {
        OmniElement x(unit_mat(2, 0, 1), Vec::unit(2, 0));
        OmniElement y(unit_mat(2, 1, 0), Vec::unit(2, 1));
        OmniElement z(unit_mat(2, 0, 0), Vec(2));
        OmniElement dbl = cyclic_double_bracket(x, y, z);
        CHECK(dbl.a.is_zero());  // the gl part of the cyclic sum dies
        CHECK(dbl.u == jacobiator(x, y, z));
    }
    SUBCASE("zero gl parts kill it") {
        OmniElement x(Matrix(2, 2), Vec{1, 2}), y(Matrix(2, 2), Vec{3, 4}),
            z(Matrix(2, 2), Vec{5, 6});
        CHECK(jacobiator(x, y, z).is_zero());
    }
    SUBCASE("random triples, both routes") {
        Rng rng(403);
        for (int t = 0; t < 25; ++t) {
            int n = static_cast<int>(rng.int_in(1, 3));
            OmniElement x(rng.matrix(n, n, 3), rng.vec(n, 3));
            OmniElement y(rng.matrix(n, n, 3), rng.vec(n, 3));
            OmniElement z(rng.matrix(n, n, 3), rng.vec(n, 3));
            OmniElement dbl = cyclic_double_bracket(x, y, z);
            CHECK(dbl.a.is_zero());
            CHECK(dbl.u == jacobiator(x, y, z));
        }
    }
}

TEST_CASE("the omni Lie 2-algebra") {
    SUBCASE("dimension one is strict") {
        Lie2Algebra a = build_omni_lie2(1);
        CHECK(a.is_strict());
        CHECK(check_lie2(a).ok());
    }
    SUBCASE("dimension two is nonstrict and valid") {
        Lie2Algebra a = build_omni_lie2(2);
        CHECK_FALSE(a.is_strict());
        CHECK(check_lie2(a).ok());
    }
    SUBCASE("agrees with the semidirect route tensor by tensor") {
        for (int n = 1; n <= 2; ++n) {
            Lie2Algebra direct = build_omni_lie2(n);
            Lie2Algebra via_rep = semidirect_lie2(omni_rep(n));
            CHECK(direct.complex == via_rep.complex);
            CHECK(direct.l2_00 == via_rep.l2_00);
            CHECK(direct.l2_01 == via_rep.l2_01);
            CHECK(direct.l3 == via_rep.l3);
        }
    }
}

TEST_CASE("omni strictification reproduces the hand-written structure") {
    const int n = 2, g = n * n;
    StrictifiedSemidirect s = omni_strictified(n);

    SUBCASE("the butterfly legs") {
        // rho(A1, A2) = A1/2 + A2, sigma is the first projection
        Matrix expect_rho = Matrix::hstack(Rational(1, 2) * Matrix::identity(g),
                                           Matrix::identity(g));
        CHECK(s.butterfly.rho == expect_rho);
        CHECK(s.butterfly.sigma == Matrix::hstack(Matrix::identity(g), Matrix::zero(g, g)));
        CHECK(s.butterfly.kappa.cols() == 0);  // trivial source
        // sigma^{-1}(0) is exactly k1
        Matrix ker = Matrix::from_cols(2 * g, kernel_basis(s.butterfly.sigma));
        for (int j = 0; j < g; ++j) CHECK(ker.col(j) == Vec::unit(2 * g, g + j));
    }

    SUBCASE("the bracket on gl + gl, entry by entry") {
        auto glmat = [&](int a) { return Matrix::unflatten(n, n, Vec::unit(g, a)); };
        auto comm = [](const Matrix& a, const Matrix& b) { return a * b - b * a; };
        for (int i = 0; i < 2 * g; ++i)
            for (int j = 0; j < 2 * g; ++j) {
                Matrix a1 = i < g ? glmat(i) : Matrix::zero(n, n);
                Matrix a2 = i < g ? Matrix::zero(n, n) : glmat(i - g);
                Matrix b1 = j < g ? glmat(j) : Matrix::zero(n, n);
                Matrix b2 = j < g ? Matrix::zero(n, n) : glmat(j - g);
                Matrix first = comm(a1, b1);
                Matrix second = Rational(1, 2) * (comm(a1, b2) + comm(a2, b1)) + comm(a2, b2) -
                                Rational(1, 4) * comm(a1, b1);
                Vec expect = Vec::concat(first.flatten(), second.flatten());
                CHECK(s.butterfly.e.bracket.column(i, j) == expect);
            }
    }

    SUBCASE("the bracket on (gl + gl) x| V, V part") {
        // [(A1,A2,u),(B1,B2,v)] has V part (A1/2 + A2)(v) - (B1/2 + B2)(u)
        auto glmat = [&](int a) { return Matrix::unflatten(n, n, Vec::unit(g, a)); };
        for (int i = 0; i < 2 * g; ++i)
            for (int sv = 0; sv < n; ++sv) {
                Vec br = s.xmod.bracket_h0.column(i, 2 * g + sv);
                Matrix act = i < g ? Rational(1, 2) * glmat(i) : glmat(i - g);
                CHECK(br.slice(0, 2 * g).is_zero());
                CHECK(br.slice(2 * g, n) == act * Vec::unit(n, sv));
            }
    }

    SUBCASE("the equivalence morphism is the stated projection pair") {
        Matrix f0(g + n, 2 * g + n);
        for (int i = 0; i < g; ++i) f0.at(i, i) = 1;
        for (int i = 0; i < n; ++i) f0.at(g + i, 2 * g + i) = 1;
        CHECK(s.equivalence.f0 == f0);
        Matrix f1(n, g + n);
        for (int i = 0; i < n; ++i) f1.at(i, g + i) = 1;
        CHECK(s.equivalence.f1 == f1);
        CHECK(check_morphism(s.strict2, s.target, s.equivalence).ok());
        CHECK(quasi_iso_check(s.strict2, s.target, s.equivalence));
    }

    SUBCASE("the inclusion correction is the quarter commutator") {
        auto glmat = [&](int a) { return Matrix::unflatten(n, n, Vec::unit(g, a)); };
        auto comm = [](const Matrix& a, const Matrix& b) { return a * b - b * a; };
        for (int a = 0; a < g; ++a)
            for (int b = 0; b < g; ++b) {
                Vec col = s.inclusion.f2.column(a, b);
                CHECK(col.slice(0, g) ==
                      (Rational(1, 4) * comm(glmat(a), glmat(b))).flatten());
                CHECK(col.slice(g, n).is_zero());
            }
        CHECK(check_morphism(s.target, s.strict2, s.inclusion).ok());
    }

    SUBCASE("dimension one collapses to an abelian butterfly") {
        StrictifiedSemidirect s1 = omni_strictified(1);
        CHECK(s1.butterfly.e.bracket.is_zero());
        CHECK(check_crossed_module(s1.xmod).ok());
    }
}

TEST_CASE("graph-type Dirac structures") {
    SUBCASE("the zero bracket is Dirac") {
        SkewBracket b(3, BilinearMap(3, 3, 3));
        Report rep = check_dirac_graph(b);
        CHECK(rep.ok());
    }
    SUBCASE("the cross product is Dirac") {
        Report rep = check_dirac_graph(cross3());
        CHECK(rep.ok());
    }
    SUBCASE("a non-Jacobi bracket fails closure but satisfies the criterion") {
        Report rep = check_dirac_graph(non_jacobi3());
        bool closure = true, jacobi = true, criterion = false, isotropic = false, maximal = false;
        for (const auto& c : rep.checks) {
            if (c.id == "dirac.closure") closure = c.pass;
            if (c.id == "dirac.jacobi") jacobi = c.pass;
            if (c.id == "dirac.criterion") criterion = c.pass;
            if (c.id == "dirac.isotropic") isotropic = c.pass;
            if (c.id == "dirac.maximal") maximal = c.pass;
        }
        CHECK_FALSE(closure);
        CHECK_FALSE(jacobi);
        CHECK(criterion);
        CHECK(isotropic);
        CHECK(maximal);
    }
    SUBCASE("closure tracks Jacobi on random skew brackets") {
        Rng rng(421);
        for (int t = 0; t < 12; ++t) {
            Report rep = check_dirac_graph(random_skew(3, rng));
            for (const auto& c : rep.checks) {
                if (c.id == "dirac.criterion") CHECK(c.pass);
                if (c.id == "dirac.isotropic") CHECK(c.pass);
                if (c.id == "dirac.maximal") CHECK(c.pass);
            }
        }
    }
}

TEST_CASE("dirac pullback square") {
    SUBCASE("W = 0 with the abelian bracket") {
        SkewBracket b(2, BilinearMap(2, 2, 2));
        Report rep = dirac_pullback_check(b, Matrix::zero(2, 0));
        CHECK(rep.ok());
    }
    SUBCASE("W = 0 with the cross product") {
        Report rep = dirac_pullback_check(cross3(), Matrix::zero(3, 0));
        CHECK(rep.ok());
    }
    SUBCASE("W = center of the Heisenberg bracket") {
        Matrix w(3, 1, {0, 0, 1});
        Report rep = dirac_pullback_check(heisenberg_bracket3(), w);
        CHECK(rep.ok());
    }
    SUBCASE("non-Jacobi brackets are rejected") {
        CHECK_THROWS_AS(dirac_pullback_check(non_jacobi3(), Matrix::zero(3, 0)), NotJacobi);
    }
    SUBCASE("non-central subspaces are rejected") {
        Matrix w(3, 1, {1, 0, 0});
        CHECK_THROWS_AS(dirac_pullback_check(heisenberg_bracket3(), w), NotCentral);
    }
}
