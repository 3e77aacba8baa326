#include <doctest.h>

#include "lie2kit/generators.hpp"
#include "lie2kit/json_io.hpp"

using namespace lie2kit;
using lie2kit::io::json;

TEST_CASE("rational slots take strings only") {
    CHECK(io::rational_from_json(json("3/4"), "x") == Rational(3, 4));
    CHECK(io::rational_from_json(json("-12"), "x") == Rational(-12));
    CHECK_THROWS_AS(io::rational_from_json(json(0.75), "x"), SchemaError);
    CHECK_THROWS_AS(io::rational_from_json(json(3), "x"), SchemaError);
    CHECK_THROWS_AS(io::rational_from_json(json("1/0"), "x"), SchemaError);
    CHECK_THROWS_AS(io::rational_from_json(json("?"), "x"), SchemaError);
}

TEST_CASE("schema errors carry the offending path") {
    json m = io::to_json(Matrix(2, 2, {1, 2, 3, 4}));
    m["entries"][1][0] = 2.5;  // float in an exact slot
    try {
        io::matrix_from_json(m, "d");
        CHECK(false);
    } catch (const SchemaError& e) {
        CHECK(e.path == "d.entries[1][0]");
    }
}

TEST_CASE("round trips are the identity") {
    Rng rng(501);
    SUBCASE("matrices") {
        for (int t = 0; t < 10; ++t) {
            Matrix m = rng.matrix(static_cast<int>(rng.int_in(0, 3)),
                                  static_cast<int>(rng.int_in(0, 3)), 5);
            CHECK(io::matrix_from_json(io::to_json(m), "m") == m);
        }
        FloatMatrix f(2, 2, {0.5, -1.25, 3.0, 0.0});
        CHECK(io::float_matrix_from_json(io::to_json(f), "f") == f);
    }
    SUBCASE("Lie 2-algebras") {
        for (int t = 0; t < 5; ++t) {
            Lie2Algebra a = semidirect_lie2(random_rep(2, rng));
            Lie2Algebra back = io::lie2_from_json(io::to_json(a), "a");
            CHECK(back.complex == a.complex);
            CHECK(back.l2_00 == a.l2_00);
            CHECK(back.l2_01 == a.l2_01);
            CHECK(back.l3 == a.l3);
        }
    }
    SUBCASE("crossed modules and reps") {
        CrossedModuleAlg x = random_xmod(2, rng);
        CrossedModuleAlg bx = io::xmod_from_json(io::to_json(x), "x");
        CHECK(bx.bracket_h1 == x.bracket_h1);
        CHECK(bx.bracket_h0 == x.bracket_h0);
        CHECK(bx.dt == x.dt);
        CHECK(bx.phi == x.phi);

        RepUpToHomotopy r = random_rep(2, rng);
        RepUpToHomotopy br = io::rep_from_json(io::to_json(r), "r");
        CHECK(br.g.bracket == r.g.bracket);
        CHECK(br.complex == r.complex);
        for (int a = 0; a < r.g.dim; ++a) {
            CHECK(br.mu0[static_cast<size_t>(a)] == r.mu0[static_cast<size_t>(a)]);
            CHECK(br.mu1[static_cast<size_t>(a)] == r.mu1[static_cast<size_t>(a)]);
        }
    }
    SUBCASE("morphisms") {
        StrictifiedSemidirect s = strictified_semidirect(random_rep(2, rng));
        Lie2Morphism f = io::morphism_from_json(io::to_json(s.equivalence), "f");
        CHECK(morphism_equal(f, s.equivalence));
    }
}

TEST_CASE("structural validation happens on load") {
    // a valid schema whose payload is not antisymmetric
    BilinearMap b(2, 2, 2);
    b.set_column(0, 1, Vec{1, 0});  // missing the (1,0) = -(0,1) partner
    json j{{"dim", 2}, {"bracket", io::to_json(b)}};
    CHECK_THROWS_AS(io::lie_algebra_from_json(j, "g"), SchemaError);

    json missing = json::object();
    CHECK_THROWS_AS(io::complex_from_json(missing, "c"), SchemaError);
}
