#include "lie2kit/autv.hpp"

#include "lie2kit/end_dgla.hpp"
#include "lie2kit/errors.hpp"

namespace lie2kit {

K0Element::K0Element(TwoTermComplex c_, Matrix b0_, Matrix b1_)
    : c(std::move(c_)), b0(std::move(b0_)), b1(std::move(b1_)) {
    if (b0.rows() != c.dim_v0 || b0.cols() != c.dim_v0) throw ShapeMismatch("B0 shape");
    if (b1.rows() != c.dim_v1 || b1.cols() != c.dim_v1) throw ShapeMismatch("B1 shape");
    if (!(b0 * c.d == c.d * b1)) throw BadStructure("B0 d != d B1");
    if (rank(b0) != c.dim_v0 || rank(b1) != c.dim_v1) throw SingularMatrix("K0 blocks must be invertible");
}

K0Element K0Element::identity(const TwoTermComplex& c) {
    return K0Element(c, Matrix::identity(c.dim_v0), Matrix::identity(c.dim_v1));
}

K1Element::K1Element(TwoTermComplex c_, Matrix m_) : c(std::move(c_)), m(std::move(m_)) {
    if (m.rows() != c.dim_v1 || m.cols() != c.dim_v0) throw ShapeMismatch("K1 element shape");
    Matrix dm = Matrix::identity(c.dim_v0) + c.d * m;
    if (rank(dm) != c.dim_v0) throw SingularMatrix("I + dM must be invertible");
    Matrix md = Matrix::identity(c.dim_v1) + m * c.d;
    if (rank(md) != c.dim_v1) throw SingularMatrix("I + Md must be invertible");
}

K1Element K1Element::identity(const TwoTermComplex& c) {
    return K1Element(c, Matrix::zero(c.dim_v1, c.dim_v0));
}

K1Element k1_mul(const K1Element& a, const K1Element& b) {
    return K1Element(a.c, a.m + b.m + a.m * a.c.d * b.m);
}

K1Element k1_inverse(const K1Element& a) {
    Matrix md = Matrix::identity(a.c.dim_v1) + a.m * a.c.d;
    return K1Element(a.c, -(invert(md) * a.m));
}

K0Element k0_mul(const K0Element& a, const K0Element& b) {
    return K0Element(a.c, a.b0 * b.b0, a.b1 * b.b1);
}

K0Element k0_inverse(const K0Element& a) { return K0Element(a.c, invert(a.b0), invert(a.b1)); }

K0Element int_delta(const K1Element& m) {
    return K0Element(m.c, Matrix::identity(m.c.dim_v0) + m.c.d * m.m,
                     m.m * m.c.d + Matrix::identity(m.c.dim_v1));
}

K1Element phi_action(const K0Element& k, const K1Element& m) {
    return K1Element(m.c, k.b1 * m.m * invert(k.b0));
}

int int_delta_kernel_dim(const TwoTermComplex& c) {
    const int n0 = c.dim_v0, n1 = c.dim_v1;
    // dM = 0 stacked over Md = 0, unknown M flattened row-major.
    Matrix cond(n0 * n0 + n1 * n1, n1 * n0);
    for (int i = 0; i < n0; ++i)
        for (int j = 0; j < n0; ++j)
            for (int b = 0; b < n1; ++b) cond.at(i * n0 + j, b * n0 + j) = c.d.at(i, b);
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n1; ++j)
            for (int b = 0; b < n0; ++b)
                cond.at(n0 * n0 + i * n1 + j, i * n0 + b) = c.d.at(b, j);
    return static_cast<int>(kernel_basis(cond).size());
}

FloatMatrix exp_bridge(const TwoTermComplex& c, const FloatMatrix& a) {
    if (a.rows() != c.dim_v1 || a.cols() != c.dim_v0) throw ShapeMismatch("bridge input shape");
    FloatMatrix d = FloatMatrix::from_rational(c.d);
    return a * expm_phi1(d * a);
}

K1Element random_k1(const TwoTermComplex& c, Rng& rng, long bound) {
    for (;;) {
        Matrix m = rng.matrix(c.dim_v1, c.dim_v0, bound);
        Matrix dm = Matrix::identity(c.dim_v0) + c.d * m;
        if (rank(dm) != c.dim_v0) continue;
        Matrix md = Matrix::identity(c.dim_v1) + m * c.d;
        if (rank(md) != c.dim_v1) continue;
        return K1Element(c, std::move(m));
    }
}

K0Element random_k0(const EndData& end, Rng& rng, long bound) {
    const TwoTermComplex& c = end.complex();
    for (;;) {
        Vec coords = rng.vec(end.dim_k0(), bound);
        auto [p0, p1] = end.k0_elem(coords);
        if (rank(p0) != c.dim_v0 || rank(p1) != c.dim_v1) continue;
        return K0Element(c, std::move(p0), std::move(p1));
    }
}

K0Element random_k0(const TwoTermComplex& c, Rng& rng, long bound) {
    return random_k0(EndData(c), rng, bound);
}

} // namespace lie2kit
