#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "lie2kit/generators.hpp"
#include "lie2kit/json_io.hpp"
#include "lie2kit/two_group.hpp"

using namespace lie2kit;

namespace {

uint64_t default_seed() {
    if (const char* env = std::getenv("LIE2KIT_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            return 12345;
        }
    }
    return 12345;
}

struct Output {
    std::string json_path;

    int finish(const Report& rep, io::json extra = io::json::object()) const {
        if (!json_path.empty()) {
            extra["report"] = io::to_json(rep);
            io::save_file(json_path, extra);
        }
        std::cout << rep.text();
        return rep.ok() ? 0 : 1;
    }
};

Report collapse(const Report& detailed, const std::string& id, const std::string& law) {
    Report out;
    std::string ce;
    for (const auto& c : detailed.checks)
        if (!c.pass && ce.empty()) ce = c.id + (c.counterexample.empty() ? "" : " at " + c.counterexample);
    out.add(id, law, detailed.ok(), ce);
    return out;
}

Report merge_with_prefix(const Report& rep, const std::string& prefix) {
    Report out;
    for (auto c : rep.checks) {
        c.id = prefix + c.id;
        out.checks.push_back(std::move(c));
    }
    return out;
}

Report omni_report(int dim, const SkewBracket& bracket, const Matrix& w_basis, uint64_t seed,
                   int samples) {
    Report rep;
    rep.subject = "omni-Lie algebra in dimension " + std::to_string(dim);
    rep.seed = seed;
    rep.samples = samples;
    const int n = dim, g = n * n;
    Rng rng(seed);

    {
        bool pass = true;
        for (int t = 0; t < samples && pass; ++t) {
            OmniElement x(rng.matrix(n, n, 3), rng.vec(n, 3));
            OmniElement y(rng.matrix(n, n, 3), rng.vec(n, 3));
            OmniElement z(rng.matrix(n, n, 3), rng.vec(n, 3));
            OmniElement a = omni_bracket(omni_bracket(x, y), z);
            OmniElement b = omni_bracket(omni_bracket(y, z), x);
            OmniElement c = omni_bracket(omni_bracket(z, x), y);
            pass = (a.a + b.a + c.a).is_zero() && (a.u + b.u + c.u) == jacobiator(x, y, z);
        }
        rep.add("omni.jacobiator", "cyclic double bracket equals the quarter formula", pass);
    }

    Lie2Algebra direct = build_omni_lie2(n);
    rep.merge(collapse(check_lie2(direct), "omni.lie2", "gl(V)+V with l3 = -T is a Lie 2-algebra"));
    {
        Lie2Algebra via = semidirect_lie2(omni_rep(n));
        bool same = direct.complex == via.complex && direct.l2_00 == via.l2_00 &&
                    direct.l2_01 == via.l2_01 && direct.l3 == via.l3;
        rep.add("omni.semidirect_match", "direct tensors equal the semidirect product route", same);
    }

    StrictifiedSemidirect s = omni_strictified(n);
    rep.merge(collapse(s.butterfly.validate(), "omni.butterfly", "butterfly axioms"));
    rep.merge(collapse(check_crossed_module(s.xmod), "omni.strict_xmod",
                       "(gl x| V, (gl+gl) x| V) is a crossed module"));
    {
        Matrix expect_rho =
            Matrix::hstack(Rational(1, 2) * Matrix::identity(g), Matrix::identity(g));
        rep.add("omni.rho", "rho(A1,A2) == A1/2 + A2", s.butterfly.rho == expect_rho);
    }
    {
        auto glmat = [&](int a) { return Matrix::unflatten(n, n, Vec::unit(g, a)); };
        auto comm = [](const Matrix& a, const Matrix& b) { return a * b - b * a; };
        bool pass = true;
        for (int i = 0; i < 2 * g && pass; ++i)
            for (int j = 0; j < 2 * g; ++j) {
                Matrix a1 = i < g ? glmat(i) : Matrix::zero(n, n);
                Matrix a2 = i < g ? Matrix::zero(n, n) : glmat(i - g);
                Matrix b1 = j < g ? glmat(j) : Matrix::zero(n, n);
                Matrix b2 = j < g ? Matrix::zero(n, n) : glmat(j - g);
                Vec expect = Vec::concat(
                    comm(a1, b1).flatten(),
                    (Rational(1, 2) * (comm(a1, b2) + comm(a2, b1)) + comm(a2, b2) -
                     Rational(1, 4) * comm(a1, b1))
                        .flatten());
                if (!(s.butterfly.e.bracket.column(i, j) == expect)) {
                    pass = false;
                    break;
                }
            }
        rep.add("omni.bracket_entrywise",
                "[(A1,A2),(B1,B2)] == ([A1,B1], [A1,B2]/2 + [A2,B1]/2 + [A2,B2] - [A1,B1]/4)",
                pass);
    }
    rep.merge(collapse(check_morphism(s.strict2, s.target, s.equivalence), "omni.equivalence",
                       "(f0,f1,f2) is a morphism onto gl(V) x| V"));
    rep.add("omni.equivalence_quasi_iso", "the equivalence is a quasi-isomorphism",
            quasi_iso_check(s.strict2, s.target, s.equivalence));
    rep.merge(collapse(check_morphism(s.target, s.strict2, s.inclusion), "omni.inclusion",
                       "(i2, i1 x Id, nu-tilde) is a morphism"));
    rep.add("omni.inclusion_injective", "the inclusion has injective f0 and f1",
            rank(s.inclusion.f0) == s.inclusion.f0.cols() &&
                rank(s.inclusion.f1) == s.inclusion.f1.cols());
    rep.add("omni.composite_identity", "equivalence . inclusion is the identity of gl(V) x| V",
            morphism_equal(compose(s.equivalence, s.inclusion),
                           Lie2Morphism::identity(s.target)));

    rep.merge(merge_with_prefix(check_dirac_graph(bracket), "omni."));
    if (jacobi_holds(bracket.b)) {
        rep.merge(merge_with_prefix(dirac_pullback_check(bracket, w_basis), "omni."));
    } else {
        rep.add("omni.pullback_skipped",
                "pullback square needs a Jacobi bracket; see the graph checks above", true);
    }
    return rep;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact checker for Lie 2-algebras, crossed modules and their strictifications"};
    app.require_subcommand(1);
    app.fallthrough();

    uint64_t seed = default_seed();
    int samples = 200;
    app.add_option("--seed", seed, "seed for sampling checkers (or env LIE2KIT_SEED)");
    app.add_option("--samples", samples, "sample budget for group law checks");

    std::string in_file, json_out;

    auto* c_lie2 = app.add_subcommand("check-lie2", "verify the homotopy Jacobi relations");
    c_lie2->add_option("file", in_file, "Lie 2-algebra JSON")->required();
    c_lie2->add_option("--json", json_out, "write the report to this path");

    auto* c_xmod = app.add_subcommand("check-xmod", "verify the crossed module axioms");
    c_xmod->add_option("file", in_file, "crossed module JSON")->required();
    c_xmod->add_option("--json", json_out, "write the report to this path");

    auto* c_rep = app.add_subcommand("check-rep", "verify a representation up to homotopy");
    c_rep->add_option("file", in_file, "representation JSON")->required();
    c_rep->add_option("--json", json_out, "write the report to this path");

    auto* c_end = app.add_subcommand("build-end", "build End(V) of a complex");
    c_end->add_option("file", in_file, "two-term complex JSON")->required();
    c_end->add_option("--json", json_out, "write the crossed module and report to this path");

    auto* c_strict = app.add_subcommand("strictify", "strictify the semidirect product of a rep");
    c_strict->add_option("file", in_file, "representation JSON")->required();
    c_strict->add_option("--json", json_out, "write the structures and report to this path");

    auto* c_autv = app.add_subcommand("build-autv", "build and check Aut(V) of a complex");
    c_autv->add_option("file", in_file, "two-term complex JSON")->required();
    c_autv->add_option("--json", json_out, "write the report to this path");

    auto* c_2grp = app.add_subcommand("check-2group",
                                      "check the 2-groups attached to Aut(V) of a complex");
    c_2grp->add_option("file", in_file, "two-term complex JSON")->required();
    c_2grp->add_option("--json", json_out, "write the report to this path");

    int omni_dim = 2;
    std::string bracket_file, center_file;
    auto* c_omni = app.add_subcommand("omni", "run the full omni-Lie algebra verification");
    c_omni->add_option("--dim", omni_dim, "dimension of V")->check(CLI::PositiveNumber);
    c_omni->add_option("--bracket", bracket_file, "skew bracket JSON for the Dirac graph checks");
    c_omni->add_option("--center-sub", center_file, "central subspace basis JSON (a matrix)");
    c_omni->add_option("--json", json_out, "write the report to this path");

    CLI11_PARSE(app, argc, argv);

    Output out{json_out};
    try {
        if (*c_lie2) {
            Lie2Algebra a = io::lie2_from_json(io::load_file(in_file), in_file);
            return out.finish(check_lie2(a));
        }
        if (*c_xmod) {
            CrossedModuleAlg x = io::xmod_from_json(io::load_file(in_file), in_file);
            return out.finish(check_crossed_module(x));
        }
        if (*c_rep) {
            RepUpToHomotopy r = io::rep_from_json(io::load_file(in_file), in_file);
            return out.finish(check_rep(r));
        }
        if (*c_end) {
            TwoTermComplex c = io::complex_from_json(io::load_file(in_file), in_file);
            EndData end = end_crossed_module(c);
            Report rep = check_crossed_module(end.xmod());
            rep.subject = "End(V) of " + in_file;
            io::json extra{{"crossed_module", io::to_json(end.xmod())}};
            return out.finish(rep, std::move(extra));
        }
        if (*c_strict) {
            RepUpToHomotopy r = io::rep_from_json(io::load_file(in_file), in_file);
            StrictifiedSemidirect s = strictified_semidirect(r);
            Report rep;
            rep.subject = "strictification of " + in_file;
            rep.merge(collapse(s.butterfly.validate(), "strictify.butterfly", "butterfly axioms"));
            rep.merge(collapse(check_crossed_module(s.xmod), "strictify.xmod",
                               "strict model is a crossed module"));
            rep.merge(collapse(check_morphism(s.strict2, s.target, s.equivalence),
                               "strictify.equivalence", "equivalence morphism equations"));
            rep.add("strictify.quasi_iso", "equivalence is a quasi-isomorphism",
                    quasi_iso_check(s.strict2, s.target, s.equivalence));
            rep.merge(collapse(check_morphism(s.target, s.strict2, s.inclusion),
                               "strictify.inclusion", "inclusion morphism equations"));
            rep.add("strictify.composite_identity",
                    "equivalence . inclusion == identity of g x| V",
                    morphism_equal(compose(s.equivalence, s.inclusion),
                                   Lie2Morphism::identity(s.target)));
            io::json extra{{"crossed_module", io::to_json(s.xmod)},
                           {"butterfly", io::to_json(s.butterfly)},
                           {"equivalence", io::to_json(s.equivalence)},
                           {"inclusion", io::to_json(s.inclusion)}};
            return out.finish(rep, std::move(extra));
        }
        if (*c_autv) {
            TwoTermComplex c = io::complex_from_json(io::load_file(in_file), in_file);
            Report rep = check_group_xmod(autv_group_xmod(c), samples, seed);
            rep.subject = "Aut(V) of " + in_file;
            int kd = int_delta_kernel_dim(c);
            rep.add("autv.int_delta_kernel",
                    "ker(int delta) has dimension " + std::to_string(kd) +
                        (kd == 0 ? " (equivalent to the trivial crossed module on K0/K1)" : ""),
                    true);
            return out.finish(rep);
        }
        if (*c_2grp) {
            TwoTermComplex c = io::complex_from_json(io::load_file(in_file), in_file);
            GroupXMod aut = autv_group_xmod(c);
            Report rep;
            rep.subject = "2-groups over " + in_file;
            rep.seed = seed;
            rep.samples = samples;
            rep.merge(merge_with_prefix(check_group_xmod(aut, samples, seed), "autv."));
            rep.merge(merge_with_prefix(check_two_group(two_group_from_xmod(aut), samples, seed),
                                        "plain."));
            SemidirectTwoGroup sd =
                semidirect_two_group(aut, identity_group_rep(c), c, samples, seed);
            rep.merge(merge_with_prefix(check_two_group(sd.tg, samples, seed), "sd."));
            rep.merge(merge_with_prefix(check_group_xmod(sd.xmod, samples, seed), "sdxm."));
            return out.finish(rep);
        }
        if (*c_omni) {
            SkewBracket bracket(omni_dim, BilinearMap(omni_dim, omni_dim, omni_dim));
            if (!bracket_file.empty())
                bracket = io::skew_bracket_from_json(io::load_file(bracket_file), bracket_file);
            Matrix w = Matrix::zero(bracket.dim, 0);
            if (!center_file.empty())
                w = io::matrix_from_json(io::load_file(center_file), center_file);
            int budget = samples > 50 ? 50 : samples;
            return out.finish(omni_report(omni_dim, bracket, w, seed, budget));
        }
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
