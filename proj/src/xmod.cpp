#include "lie2kit/xmod.hpp"

#include "lie2kit/errors.hpp"

namespace lie2kit {

CrossedModuleAlg::CrossedModuleAlg(int dim_h1_, int dim_h0_, BilinearMap bracket_h1_,
                                   BilinearMap bracket_h0_, Matrix dt_, BilinearMap phi_)
    : dim_h1(dim_h1_), dim_h0(dim_h0_), bracket_h1(std::move(bracket_h1_)),
      bracket_h0(std::move(bracket_h0_)), dt(std::move(dt_)), phi(std::move(phi_)) {
    if (bracket_h1.dim_a() != dim_h1 || bracket_h1.dim_out() != dim_h1)
        throw ShapeMismatch("bracket_h1 shape");
    if (bracket_h0.dim_a() != dim_h0 || bracket_h0.dim_out() != dim_h0)
        throw ShapeMismatch("bracket_h0 shape");
    if (dt.rows() != dim_h0 || dt.cols() != dim_h1) throw ShapeMismatch("dt shape");
    if (phi.dim_a() != dim_h0 || phi.dim_b() != dim_h1 || phi.dim_out() != dim_h1)
        throw ShapeMismatch("phi shape");
    if (!bracket_h1.antisymmetric()) throw BadStructure("bracket_h1 is not antisymmetric");
    if (!bracket_h0.antisymmetric()) throw BadStructure("bracket_h0 is not antisymmetric");
}

CrossedModuleAlg CrossedModuleAlg::trivial(const LieAlgebra& g) {
    return CrossedModuleAlg(0, g.dim, BilinearMap(0, 0, 0), g.bracket, Matrix::zero(g.dim, 0),
                            BilinearMap(g.dim, 0, 0));
}

Report check_crossed_module(const CrossedModuleAlg& x) {
    Report rep;
    rep.subject = "crossed module of lie algebras";
    const int n1 = x.dim_h1, n0 = x.dim_h0;

    auto jac = [&](const BilinearMap& b, const std::string& id, const std::string& name) {
        bool pass = true;
        std::string ce;
        int n = b.dim_a();
        for (int i = 0; i < n && pass; ++i)
            for (int j = i + 1; j < n && pass; ++j)
                for (int k = j + 1; k < n; ++k) {
                    Vec s = b.eval(b.column(i, j), Vec::unit(n, k));
                    s += b.eval(b.column(j, k), Vec::unit(n, i));
                    s += b.eval(b.column(k, i), Vec::unit(n, j));
                    if (!s.is_zero()) {
                        pass = false;
                        ce = "basis triple (" + std::to_string(i) + "," + std::to_string(j) + "," +
                             std::to_string(k) + ")";
                        break;
                    }
                }
        rep.add(id, "jacobi identity on " + name, pass, ce);
    };
    jac(x.bracket_h1, "xmod.jacobi_h1", "h1");
    jac(x.bracket_h0, "xmod.jacobi_h0", "h0");

    {
        bool pass = true;
        std::string ce;
        for (int i = 0; i < n1 && pass; ++i)
            for (int j = i + 1; j < n1; ++j) {
                Vec lhs = x.dt * x.bracket_h1.column(i, j);
                Vec rhs = x.bracket_h0.eval(x.dt.col(i), x.dt.col(j));
                if (!(lhs == rhs)) {
                    pass = false;
                    ce = "basis pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
                    break;
                }
            }
        rep.add("xmod.dt_morphism", "dt[A,B] == [dt A, dt B]", pass, ce);
    }

    {
        // phi_X is a derivation of h1
        bool pass = true;
        std::string ce;
        for (int a = 0; a < n0 && pass; ++a)
            for (int i = 0; i < n1 && pass; ++i)
                for (int j = i + 1; j < n1; ++j) {
                    Vec ea = Vec::unit(n0, a);
                    Vec lhs = x.phi.eval(ea, x.bracket_h1.column(i, j));
                    Vec rhs = x.bracket_h1.eval(x.phi.column(a, i), Vec::unit(n1, j)) +
                              x.bracket_h1.eval(Vec::unit(n1, i), x.phi.column(a, j));
                    if (!(lhs == rhs)) {
                        pass = false;
                        ce = "X" + std::to_string(a) + ", pair (" + std::to_string(i) + "," +
                             std::to_string(j) + ")";
                        break;
                    }
                }
        rep.add("xmod.phi_derivation", "phi_X[A,B] == [phi_X A, B] + [A, phi_X B]", pass, ce);
    }

    {
        // phi is an action: phi_{[X,Y]} = phi_X phi_Y - phi_Y phi_X
        bool pass = true;
        std::string ce;
        for (int a = 0; a < n0 && pass; ++a)
            for (int b = a + 1; b < n0 && pass; ++b)
                for (int i = 0; i < n1; ++i) {
                    Vec lhs = x.phi.eval(x.bracket_h0.column(a, b), Vec::unit(n1, i));
                    Vec rhs = x.phi.eval(Vec::unit(n0, a), x.phi.column(b, i)) -
                              x.phi.eval(Vec::unit(n0, b), x.phi.column(a, i));
                    if (!(lhs == rhs)) {
                        pass = false;
                        ce = "pair (X" + std::to_string(a) + ",X" + std::to_string(b) + "), A" +
                             std::to_string(i);
                        break;
                    }
                }
        rep.add("xmod.phi_action", "phi_[X,Y] == [phi_X, phi_Y]", pass, ce);
    }

    {
        bool pass = true;
        std::string ce;
        for (int a = 0; a < n0 && pass; ++a)
            for (int i = 0; i < n1; ++i) {
                Vec lhs = x.dt * x.phi.column(a, i);
                Vec rhs = x.bracket_h0.eval(Vec::unit(n0, a), x.dt.col(i));
                if (!(lhs == rhs)) {
                    pass = false;
                    ce = "X" + std::to_string(a) + ", A" + std::to_string(i);
                    break;
                }
            }
        rep.add("xmod.equivariance", "dt(phi_X A) == [X, dt A]", pass, ce);
    }

    {
        bool pass = true;
        std::string ce;
        for (int i = 0; i < n1 && pass; ++i)
            for (int j = 0; j < n1; ++j) {
                Vec lhs = x.phi.eval(x.dt.col(i), Vec::unit(n1, j));
                Vec rhs = x.bracket_h1.column(i, j);
                if (!(lhs == rhs)) {
                    pass = false;
                    ce = "A" + std::to_string(i) + ", B" + std::to_string(j);
                    break;
                }
            }
        rep.add("xmod.peiffer", "phi_{dt A}(B) == [A, B]", pass, ce);
    }

    return rep;
}

CrossedModuleAlg dgla_to_xmod(const Lie2Algebra& a) {
    if (!a.is_strict()) throw NotStrict();
    int n1 = a.dim(1), n0 = a.dim(0);
    (void)n0;
    BilinearMap b1(n1, n1, n1);
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n1; ++j)
            b1.set_column(i, j, a.l2_01.eval(a.complex.d.col(i), Vec::unit(n1, j)));  // [A,B] = [dA, B]
    BilinearMap phi(n0, n1, n1);
    for (int x = 0; x < n0; ++x)
        for (int i = 0; i < n1; ++i) phi.set_column(x, i, a.l2_01.column(x, i));
    return CrossedModuleAlg(n1, n0, std::move(b1), a.l2_00, a.complex.d, std::move(phi));
}

Lie2Algebra xmod_to_dgla(const CrossedModuleAlg& x) {
    BilinearMap l2_01(x.dim_h0, x.dim_h1, x.dim_h1);
    for (int a = 0; a < x.dim_h0; ++a)
        for (int i = 0; i < x.dim_h1; ++i) l2_01.set_column(a, i, x.phi.column(a, i));
    return Lie2Algebra(TwoTermComplex(x.dim_h1, x.dim_h0, x.dt), x.bracket_h0, std::move(l2_01),
                       TrilinearMap(x.dim_h0, x.dim_h1));
}

CrossedModuleAlg adjoint_xmod(const LieAlgebra& k) {
    DerivationAlgebra der = derivations(k);
    BilinearMap phi(der.alg.dim, k.dim, k.dim);
    for (int a = 0; a < der.alg.dim; ++a)
        for (int i = 0; i < k.dim; ++i)
            phi.set_column(a, i, der.basis[static_cast<size_t>(a)].col(i));
    return CrossedModuleAlg(k.dim, der.alg.dim, k.bracket, der.alg.bracket, der.ad, std::move(phi));
}

} // namespace lie2kit
