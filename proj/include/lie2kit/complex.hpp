#ifndef LIE2KIT_COMPLEX_HPP
#define LIE2KIT_COMPLEX_HPP

#include "lie2kit/errors.hpp"
#include "lie2kit/matrix.hpp"

namespace lie2kit {

// Two-term complex V1 -> V0 with differential d. d^2 = 0 is vacuous here.
struct TwoTermComplex {
    int dim_v1 = 0;
    int dim_v0 = 0;
    Matrix d;  // dim_v0 x dim_v1

    TwoTermComplex() : d(0, 0) {}
    TwoTermComplex(int v1, int v0, Matrix d_) : dim_v1(v1), dim_v0(v0), d(std::move(d_)) {
        if (d.rows() != dim_v0 || d.cols() != dim_v1)
            throw ShapeMismatch("differential must be dimV0 x dimV1");
    }

    static TwoTermComplex with_zero_d(int v1, int v0) {
        return TwoTermComplex(v1, v0, Matrix::zero(v0, v1));
    }

    int dim(int degree) const {
        if (degree == 0) return dim_v0;
        if (degree == 1) return dim_v1;
        return 0;
    }

    friend bool operator==(const TwoTermComplex& a, const TwoTermComplex& b) {
        return a.dim_v1 == b.dim_v1 && a.dim_v0 == b.dim_v0 && a.d == b.d;
    }
};

} // namespace lie2kit

#endif
