#include <doctest.h>

#include "lie2kit/end_dgla.hpp"
#include "lie2kit/graded_endo.hpp"
#include "lie2kit/rng.hpp"
#include "lie2kit/xmod.hpp"

using namespace lie2kit;

namespace {

GradedEndo random_endo(const TwoTermComplex& c, int degree, Rng& rng) {
    switch (degree) {
        case 1: return GradedEndo::deg1(c, rng.matrix(c.dim_v1, c.dim_v0, 3));
        case 0:
            return GradedEndo::deg0(c, rng.matrix(c.dim_v0, c.dim_v0, 3),
                                    rng.matrix(c.dim_v1, c.dim_v1, 3));
        default: return GradedEndo::deg_minus1(c, rng.matrix(c.dim_v0, c.dim_v1, 3));
    }
}

TwoTermComplex random_cx(Rng& rng) {
    int v1 = static_cast<int>(rng.int_in(0, 3)), v0 = static_cast<int>(rng.int_in(0, 3));
    return TwoTermComplex(v1, v0, rng.matrix(v0, v1, 3));
}

} // namespace

TEST_CASE("delta on small complexes") {
    TwoTermComplex c(1, 1, Matrix(1, 1, {1}));
    SUBCASE("degree 1 input") {
        GradedEndo t = GradedEndo::deg1(c, Matrix(1, 1, {3}));
        GradedEndo dt = delta(c, t);
        CHECK(dt.degree() == 0);
        CHECK(dt.a0() == Matrix(1, 1, {3}));
        CHECK(dt.a1() == Matrix(1, 1, {3}));
    }
    SUBCASE("degree 0 input") {
        GradedEndo t = GradedEndo::deg0(c, Matrix(1, 1, {2}), Matrix(1, 1, {5}));
        GradedEndo dt = delta(c, t);
        CHECK(dt.degree() == -1);
        CHECK(dt.down() == Matrix(1, 1, {3}));  // d.5 - 2.d
    }
    SUBCASE("degree -1 input is out of range") {
        GradedEndo t = GradedEndo::deg_minus1(c, Matrix(1, 1, {1}));
        CHECK_THROWS_AS(delta(c, t), DegreeOutOfRange);
    }
}

TEST_CASE("super bracket on small complexes") {
    TwoTermComplex c(1, 1, Matrix(1, 1, {1}));
    GradedEndo s = GradedEndo::deg0(c, Matrix(1, 1, {2}), Matrix(1, 1, {3}));
    GradedEndo t = GradedEndo::deg1(c, Matrix(1, 1, {5}));
    GradedEndo st = super_bracket(c, s, t);
    CHECK(st.degree() == 1);
    CHECK(st.up() == Matrix(1, 1, {5}));  // 3.5 - 5.2

    SUBCASE("two degree 1 maps land out of range") {
        GradedEndo tt = super_bracket(c, t, t);
        CHECK(tt.degree() == 2);
        CHECK(tt.is_zero());
    }
    SUBCASE("[T,T] = 0 in degree 0") {
        CHECK(super_bracket(c, s, s).is_zero());
    }
}

TEST_CASE("DGLA laws hold exactly on random endomorphisms") {
    Rng rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        TwoTermComplex c = random_cx(rng);

        // delta^2 = 0 on degree 1
        GradedEndo t1 = random_endo(c, 1, rng);
        GradedEndo dd = delta(c, delta(c, t1));
        CHECK(dd.is_zero());

        // graded Leibniz: delta[T,S] == [dT,S] + (-1)^{|T|}[T,dS], degrees chosen
        // so that every term stays in range
        for (auto [dt_, ds_] : {std::pair{1, 0}, std::pair{0, 0}, std::pair{1, 1}}) {
            GradedEndo t = random_endo(c, dt_, rng);
            GradedEndo s = random_endo(c, ds_, rng);
            GradedEndo lhs = delta(c, super_bracket(c, t, s));
            GradedEndo rhs = super_bracket(c, delta(c, t), s);
            GradedEndo corr = super_bracket(c, t, delta(c, s));
            rhs = (dt_ % 2 == 0) ? rhs + corr : rhs - corr;
            CHECK(lhs == rhs);
        }

        // graded antisymmetry and Jacobi
        for (int da = -1; da <= 1; ++da)
            for (int db = -1; db <= 1; ++db) {
                GradedEndo a = random_endo(c, da, rng);
                GradedEndo b = random_endo(c, db, rng);
                GradedEndo ab = super_bracket(c, a, b);
                GradedEndo ba = super_bracket(c, b, a);
                GradedEndo sum = (da * db % 2 != 0) ? ab - ba : ab + ba;
                CHECK(sum.is_zero());
            }

        // Jacobi: [a,[b,c]] == [[a,b],c] + (-1)^{|a||b|}[b,[a,c]] with all
        // brackets in range; exercise a few degree patterns
        for (auto [da, db, dc] : {std::tuple{0, 0, 0}, std::tuple{0, 0, 1}, std::tuple{1, 0, -1},
                                  std::tuple{0, 1, -1}, std::tuple{-1, 1, 0}}) {
            GradedEndo a = random_endo(c, da, rng);
            GradedEndo b = random_endo(c, db, rng);
            GradedEndo cc = random_endo(c, dc, rng);
            GradedEndo lhs = super_bracket(c, a, super_bracket(c, b, cc));
            GradedEndo rhs = super_bracket(c, super_bracket(c, a, b), cc);
            GradedEndo corr = super_bracket(c, b, super_bracket(c, a, cc));
            rhs = (da * db % 2 != 0) ? rhs - corr : rhs + corr;
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("end crossed module") {
    SUBCASE("dims (1,1), d = 1: scalar k1 bracket vanishes") {
        EndData end(TwoTermComplex(1, 1, Matrix(1, 1, {1})));
        CHECK(end.dim_k1() == 1);
        CHECK(end.xmod().bracket_h1.column(0, 0).is_zero());
        CHECK(check_crossed_module(end.xmod()).ok());
    }
    SUBCASE("dims (dimV1=2, dimV0=1), d = (1 0): k1 bracket by hand") {
        // A = (1,2)^T, B = (3,4)^T as maps V0 -> V1; [A,B] = AdB - BdA = (0,2)^T
        TwoTermComplex c(2, 1, Matrix(1, 2, {1, 0}));
        EndData end(c);
        Vec a = end.k1_coords(Matrix(2, 1, {1, 2}));
        Vec b = end.k1_coords(Matrix(2, 1, {3, 4}));
        Vec lhs(end.dim_k1());
        for (int i = 0; i < end.dim_k1(); ++i)
            for (int j = 0; j < end.dim_k1(); ++j) {
                Rational f = a[i] * b[j];
                if (!f.is_zero()) lhs += f * end.xmod().bracket_h1.column(i, j);
            }
        CHECK(end.k1_elem(lhs) == Matrix(2, 1, {0, 2}));
    }
    SUBCASE("d = 0 kills delta and k0 is everything") {
        EndData end(TwoTermComplex(1, 1, Matrix(1, 1, {0})));
        CHECK(end.dim_k0() == 2);
        CHECK(end.delta_matrix().is_zero());
        CHECK(check_crossed_module(end.xmod()).ok());
    }
    SUBCASE("random complexes give valid crossed modules") {
        Rng rng(17);
        for (int t = 0; t < 10; ++t) {
            TwoTermComplex c = random_cx(rng);
            EndData end(c);
            CHECK(check_crossed_module(end.xmod()).ok());
            // every k0 basis pair commutes with d
            for (const auto& [p0, p1] : end.k0_basis()) CHECK(p0 * c.d == c.d * p1);
        }
    }
}
