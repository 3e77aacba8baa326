#include "lie2kit/lie_algebra.hpp"

#include "lie2kit/errors.hpp"

namespace lie2kit {

bool jacobi_holds(const BilinearMap& bracket) {
    int n = bracket.dim_a();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Vec s = bracket.eval(bracket.column(i, j), Vec::unit(n, k));
                s += bracket.eval(bracket.column(j, k), Vec::unit(n, i));
                s += bracket.eval(bracket.column(k, i), Vec::unit(n, j));
                if (!s.is_zero()) return false;
            }
    return true;
}

LieAlgebra::LieAlgebra(int dim_, BilinearMap bracket_) : dim(dim_), bracket(std::move(bracket_)) {
    if (bracket.dim_a() != dim || bracket.dim_b() != dim || bracket.dim_out() != dim)
        throw ShapeMismatch("lie algebra bracket shape");
    if (!bracket.antisymmetric()) throw BadStructure("lie algebra bracket is not antisymmetric");
    if (!jacobi_holds(bracket)) throw NotJacobi();
}

LieAlgebra LieAlgebra::abelian(int n) { return LieAlgebra(n, BilinearMap(n, n, n)); }

BilinearMap commutator_structure(const std::vector<Matrix>& basis) {
    int n = static_cast<int>(basis.size());
    BilinearMap b(n, n, n);
    if (n == 0) return b;
    int rows = basis[0].rows(), cols = basis[0].cols();
    std::vector<Vec> flat;
    flat.reserve(basis.size());
    for (const auto& m : basis) flat.push_back(m.flatten());
    Matrix span = Matrix::from_cols(rows * cols, flat);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Matrix comm = basis[static_cast<size_t>(i)] * basis[static_cast<size_t>(j)] -
                          basis[static_cast<size_t>(j)] * basis[static_cast<size_t>(i)];
            b.set_column(i, j, solve(span, comm.flatten()));
        }
    return b;
}

LieAlgebra change_basis(const LieAlgebra& g, const Matrix& p) {
    Matrix pinv = invert(p);
    BilinearMap b(g.dim, g.dim, g.dim);
    for (int i = 0; i < g.dim; ++i)
        for (int j = 0; j < g.dim; ++j)
            b.set_column(i, j, pinv * g.bracket_of(p.col(i), p.col(j)));
    return LieAlgebra(g.dim, b);
}

LieAlgebra gl_algebra(int n) {
    std::vector<Matrix> basis;
    basis.reserve(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Matrix e(n, n);
            e.at(i, j) = 1;
            basis.push_back(std::move(e));
        }
    return LieAlgebra(n * n, commutator_structure(basis));
}

DerivationAlgebra derivations(const LieAlgebra& g) {
    int n = g.dim;
    // Unknown D (n x n, flattened row-major); one block of n rows per basis
    // pair (i, j): D[ei,ej] - [D ei, ej] - [ei, D ej] = 0.
    int npairs = n * (n - 1) / 2;
    Matrix cond(npairs * n, n * n);
    int row0 = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vec cij = g.bracket.column(i, j);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    // coefficient of D_{a,b} in the defect vector
                    Vec coeff(n);
                    if (!cij[b].is_zero()) coeff[a] += cij[b];      // D [ei,ej]
                    if (b == i) coeff -= g.bracket.column(a, j);    // [D ei, ej]
                    if (b == j) coeff -= g.bracket.column(i, a);    // [ei, D ej]
                    for (int r = 0; r < n; ++r) cond.at(row0 + r, a * n + b) = coeff[r];
                }
            row0 += n;
        }
    std::vector<Vec> ker = kernel_basis(cond);
    DerivationAlgebra der;
    der.basis.reserve(ker.size());
    for (const auto& v : ker) der.basis.push_back(Matrix::unflatten(n, n, v));
    der.alg = LieAlgebra(static_cast<int>(ker.size()), commutator_structure(der.basis));
    // ad_x as coordinates in the derivation basis
    if (n > 0) {
        std::vector<Vec> flat;
        for (const auto& m : der.basis) flat.push_back(m.flatten());
        Matrix span = der.basis.empty() ? Matrix::zero(n * n, 0) : Matrix::from_cols(n * n, flat);
        der.ad = Matrix(der.alg.dim, n);
        for (int x = 0; x < n; ++x) {
            Matrix adx(n, n);
            for (int y = 0; y < n; ++y) {
                Vec col = g.bracket.column(x, y);
                for (int r = 0; r < n; ++r) adx.at(r, y) = col[r];
            }
            Vec coords = solve(span, adx.flatten());
            for (int r = 0; r < der.alg.dim; ++r) der.ad.at(r, x) = coords[r];
        }
    } else {
        der.ad = Matrix(der.alg.dim, 0);
    }
    return der;
}

} // namespace lie2kit
