#include "lie2kit/end_dgla.hpp"

#include "lie2kit/errors.hpp"

namespace lie2kit {

EndData::EndData(TwoTermComplex c) : c_(std::move(c)) {
    const int n0 = c_.dim_v0, n1 = c_.dim_v1;
    const int sz = n0 * n0 + n1 * n1;

    // ker(delta|End^0): pairs (P0, P1) with P0 d - d P1 = 0, unknowns
    // flattened as [vec P0; vec P1].
    Matrix cond(n0 * n1, sz);
    for (int i = 0; i < n0; ++i)
        for (int j = 0; j < n1; ++j) {
            int row = i * n1 + j;
            // (P0 d)_{ij} = sum_a P0_{ia} d_{aj}
            for (int a = 0; a < n0; ++a) cond.at(row, i * n0 + a) = c_.d.at(a, j);
            // (d P1)_{ij} = sum_b d_{ib} P1_{bj}
            for (int b = 0; b < n1; ++b) cond.at(row, n0 * n0 + b * n1 + j) -= c_.d.at(i, b);
        }
    std::vector<Vec> ker = kernel_basis(cond);
    k0_basis_.reserve(ker.size());
    for (const auto& v : ker)
        k0_basis_.emplace_back(Matrix::unflatten(n0, n0, v.slice(0, n0 * n0)),
                               Matrix::unflatten(n1, n1, v.slice(n0 * n0, n1 * n1)));
    k0_span_ = Matrix::from_cols(sz, ker);

    delta_mat_ = Matrix(dim_k0(), dim_k1());
    for (int j = 0; j < dim_k1(); ++j) {
        Matrix a = k1_elem(Vec::unit(dim_k1(), j));
        Vec coords = k0_coords(c_.d * a, a * c_.d);
        for (int i = 0; i < dim_k0(); ++i) delta_mat_.at(i, j) = coords[i];
    }

    // Structure constants on the chosen bases.
    const int dk1 = dim_k1(), dk0 = dim_k0();
    BilinearMap b1(dk1, dk1, dk1);
    for (int i = 0; i < dk1; ++i) {
        Matrix a = k1_elem(Vec::unit(dk1, i));
        for (int j = 0; j < dk1; ++j) {
            Matrix b = k1_elem(Vec::unit(dk1, j));
            b1.set_column(i, j, k1_coords(a * c_.d * b - b * c_.d * a));
        }
    }
    BilinearMap b0(dk0, dk0, dk0);
    for (int i = 0; i < dk0; ++i)
        for (int j = 0; j < dk0; ++j) {
            const auto& [x0, x1] = k0_basis_[static_cast<size_t>(i)];
            const auto& [y0, y1] = k0_basis_[static_cast<size_t>(j)];
            b0.set_column(i, j, k0_coords(x0 * y0 - y0 * x0, x1 * y1 - y1 * x1));
        }
    BilinearMap phi(dk0, dk1, dk1);
    for (int x = 0; x < dk0; ++x) {
        const auto& [p0, p1] = k0_basis_[static_cast<size_t>(x)];
        for (int i = 0; i < dk1; ++i) {
            Matrix a = k1_elem(Vec::unit(dk1, i));
            phi.set_column(x, i, k1_coords(p1 * a - a * p0));
        }
    }
    xmod_ = CrossedModuleAlg(dk1, dk0, std::move(b1), std::move(b0), delta_mat_, std::move(phi));
}

Vec EndData::k1_coords(const Matrix& m) const {
    if (m.rows() != c_.dim_v1 || m.cols() != c_.dim_v0) throw ShapeMismatch("k1 element shape");
    return m.flatten();
}

Matrix EndData::k1_elem(const Vec& coords) const {
    return Matrix::unflatten(c_.dim_v1, c_.dim_v0, coords);
}

Vec EndData::k0_coords(const Matrix& p0, const Matrix& p1) const {
    if (!(p0 * c_.d == c_.d * p1))
        throw ImageNotInKernel("pair does not commute with the differential");
    Vec flat = Vec::concat(p0.flatten(), p1.flatten());
    try {
        return solve(k0_span_, flat);
    } catch (const NoSolution&) {
        throw ImageNotInKernel("pair is outside the kernel basis span");
    }
}

std::pair<Matrix, Matrix> EndData::k0_elem(const Vec& coords) const {
    if (coords.dim() != dim_k0()) throw ShapeMismatch("k0 coordinate dim");
    const int n0 = c_.dim_v0, n1 = c_.dim_v1;
    Vec flat = k0_span_ * coords;
    return {Matrix::unflatten(n0, n0, flat.slice(0, n0 * n0)),
            Matrix::unflatten(n1, n1, flat.slice(n0 * n0, n1 * n1))};
}

Vec EndData::delta_coords(const Vec& k1c) const { return delta_mat_ * k1c; }

EndData end_crossed_module(const TwoTermComplex& c) { return EndData(c); }

} // namespace lie2kit
