#include "lie2kit/morphism.hpp"

#include "lie2kit/errors.hpp"

namespace lie2kit {

Lie2Morphism::Lie2Morphism(Matrix f0_, Matrix f1_, BilinearMap f2_)
    : f0(std::move(f0_)), f1(std::move(f1_)), f2(std::move(f2_)) {
    if (f2.dim_a() != f0.cols() || f2.dim_b() != f0.cols() || f2.dim_out() != f1.rows())
        throw ShapeMismatch("f2 shape");
    if (!f2.antisymmetric()) throw BadStructure("f2 is not antisymmetric");
}

Lie2Morphism Lie2Morphism::strict(Matrix f0_, Matrix f1_) {
    BilinearMap f2(f0_.cols(), f0_.cols(), f1_.rows());
    return Lie2Morphism(std::move(f0_), std::move(f1_), std::move(f2));
}

Lie2Morphism Lie2Morphism::identity(const Lie2Algebra& a) {
    return strict(Matrix::identity(a.dim(0)), Matrix::identity(a.dim(1)));
}

Report check_morphism(const Lie2Algebra& src, const Lie2Algebra& dst, const Lie2Morphism& f) {
    Report rep;
    rep.subject = "lie 2-algebra morphism";
    const int l0 = src.dim(0), l1 = src.dim(1);
    if (f.f0.rows() != dst.dim(0) || f.f0.cols() != l0 || f.f1.rows() != dst.dim(1) ||
        f.f1.cols() != l1)
        throw ShapeMismatch("morphism block shapes");

    rep.add("mor.chain", "d f1 == f0 d", dst.complex.d * f.f1 == f.f0 * src.complex.d);

    {
        bool pass = true;
        std::string ce;
        for (int i = 0; i < l0 && pass; ++i)
            for (int j = i + 1; j < l0; ++j) {
                Vec lhs = f.f0 * src.l2_00.column(i, j) -
                          dst.l2_00.eval(f.f0.col(i), f.f0.col(j));
                Vec rhs = dst.complex.d * f.f2.column(i, j);
                if (!(lhs == rhs)) {
                    pass = false;
                    ce = "(x" + std::to_string(i) + ", x" + std::to_string(j) + ")";
                    break;
                }
            }
        rep.add("mor.bracket0", "f0[x,y] - [f0 x, f0 y] == d f2(x,y)", pass, ce);
    }

    {
        bool pass = true;
        std::string ce;
        for (int i = 0; i < l0 && pass; ++i)
            for (int a = 0; a < l1; ++a) {
                Vec lhs = f.f1 * src.l2_01.column(i, a) -
                          dst.l2_01.eval(f.f0.col(i), f.f1.col(a));
                Vec rhs = f.f2.eval(Vec::unit(l0, i), src.complex.d.col(a));
                if (!(lhs == rhs)) {
                    pass = false;
                    ce = "(x" + std::to_string(i) + ", m" + std::to_string(a) + ")";
                    break;
                }
            }
        rep.add("mor.bracket1", "f1[x,m] - [f0 x, f1 m] == f2(x, d m)", pass, ce);
    }

    {
        bool pass = true;
        std::string ce;
        for (int i = 0; i < l0 && pass; ++i)
            for (int j = i + 1; j < l0 && pass; ++j)
                for (int k = j + 1; k < l0; ++k) {
                    Vec ei = Vec::unit(l0, i), ej = Vec::unit(l0, j), ek = Vec::unit(l0, k);
                    Vec lhs = dst.l2_01.eval(f.f0.col(i), f.f2.column(j, k)) +
                              dst.l2_01.eval(f.f0.col(j), f.f2.column(k, i)) +
                              dst.l2_01.eval(f.f0.col(k), f.f2.column(i, j)) +
                              dst.l3.eval(f.f0.col(i), f.f0.col(j), f.f0.col(k));
                    Vec rhs = f.f2.eval(src.l2_00.column(i, j), ek) +
                              f.f2.eval(src.l2_00.column(j, k), ei) +
                              f.f2.eval(src.l2_00.column(k, i), ej) +
                              f.f1 * src.l3.column(i, j, k);
                    if (!(lhs == rhs)) {
                        pass = false;
                        ce = "(x" + std::to_string(i) + ", x" + std::to_string(j) + ", x" +
                             std::to_string(k) + ")";
                        break;
                    }
                }
        rep.add("mor.coherence",
                "[f0 x, f2(y,z)] + c.p. + l3(f0 x, f0 y, f0 z) == f2([x,y],z) + c.p. + f1 l3(x,y,z)",
                pass, ce);
    }

    return rep;
}

Lie2Morphism compose(const Lie2Morphism& g, const Lie2Morphism& f) {
    if (g.f0.cols() != f.f0.rows() || g.f1.cols() != f.f1.rows())
        throw ShapeMismatch("morphism composition shapes");
    int l0 = f.f0.cols();
    BilinearMap f2(l0, l0, g.f1.rows());
    for (int i = 0; i < l0; ++i)
        for (int j = 0; j < l0; ++j)
            f2.set_column(i, j, g.f2.eval(f.f0.col(i), f.f0.col(j)) + g.f1 * f.f2.column(i, j));
    return Lie2Morphism(g.f0 * f.f0, g.f1 * f.f1, std::move(f2));
}

bool morphism_equal(const Lie2Morphism& a, const Lie2Morphism& b) {
    return a.f0 == b.f0 && a.f1 == b.f1 && a.f2 == b.f2;
}

bool quasi_iso_check(const TwoTermComplex& src, const TwoTermComplex& dst, const Matrix& f0,
                     const Matrix& f1) {
    if (!(dst.d * f1 == f0 * src.d)) throw NotChainMap();

    // Degree 1 homology is ker d; injectivity plus equal dimension decides.
    Matrix ker_src = Matrix::from_cols(src.dim_v1, kernel_basis(src.d));
    Matrix ker_dst = Matrix::from_cols(dst.dim_v1, kernel_basis(dst.d));
    if (ker_src.cols() != ker_dst.cols()) return false;
    if (rank(f1 * ker_src) != ker_src.cols()) return false;

    // Degree 0 homology is coker d; surjectivity plus equal dimension decides.
    int h0_src = src.dim_v0 - rank(src.d);
    int h0_dst = dst.dim_v0 - rank(dst.d);
    if (h0_src != h0_dst) return false;
    return rank(Matrix::hstack(f0, dst.d)) == dst.dim_v0;
}

bool quasi_iso_check(const Lie2Algebra& src, const Lie2Algebra& dst, const Lie2Morphism& f) {
    return quasi_iso_check(src.complex, dst.complex, f.f0, f.f1);
}

} // namespace lie2kit
