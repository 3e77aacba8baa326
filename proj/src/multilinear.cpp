#include "lie2kit/multilinear.hpp"

#include "lie2kit/errors.hpp"

namespace lie2kit {

Vec BilinearMap::column(int i, int j) const {
    Vec v(dim_out_);
    for (int k = 0; k < dim_out_; ++k) v[k] = at(i, j, k);
    return v;
}

void BilinearMap::set_column(int i, int j, const Vec& v) {
    if (v.dim() != dim_out_) throw ShapeMismatch("bilinear set_column dim");
    for (int k = 0; k < dim_out_; ++k) at(i, j, k) = v[k];
}

Vec BilinearMap::eval(const Vec& x, const Vec& y) const {
    if (x.dim() != dim_a_ || y.dim() != dim_b_) throw ShapeMismatch("bilinear eval dims");
    Vec r(dim_out_);
    for (int i = 0; i < dim_a_; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < dim_b_; ++j) {
            if (y[j].is_zero()) continue;
            Rational f = x[i] * y[j];
            for (int k = 0; k < dim_out_; ++k) {
                const Rational& c = at(i, j, k);
                if (!c.is_zero()) r[k] += f * c;
            }
        }
    }
    return r;
}

bool BilinearMap::antisymmetric() const {
    if (dim_a_ != dim_b_) return false;
    for (int i = 0; i < dim_a_; ++i)
        for (int j = 0; j <= i; ++j)
            for (int k = 0; k < dim_out_; ++k)
                if (at(i, j, k) != -at(j, i, k)) return false;
    return true;
}

bool BilinearMap::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

Vec TrilinearMap::column(int i, int j, int k) const {
    Vec v(dim_out_);
    for (int l = 0; l < dim_out_; ++l) v[l] = at(i, j, k, l);
    return v;
}

void TrilinearMap::set_column(int i, int j, int k, const Vec& v) {
    if (v.dim() != dim_out_) throw ShapeMismatch("trilinear set_column dim");
    for (int l = 0; l < dim_out_; ++l) at(i, j, k, l) = v[l];
}

Vec TrilinearMap::eval(const Vec& x, const Vec& y, const Vec& z) const {
    if (x.dim() != dim_in_ || y.dim() != dim_in_ || z.dim() != dim_in_)
        throw ShapeMismatch("trilinear eval dims");
    Vec r(dim_out_);
    for (int i = 0; i < dim_in_; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < dim_in_; ++j) {
            if (y[j].is_zero()) continue;
            Rational f = x[i] * y[j];
            for (int k = 0; k < dim_in_; ++k) {
                if (z[k].is_zero()) continue;
                Rational g = f * z[k];
                for (int l = 0; l < dim_out_; ++l) {
                    const Rational& c = at(i, j, k, l);
                    if (!c.is_zero()) r[l] += g * c;
                }
            }
        }
    }
    return r;
}

bool TrilinearMap::antisymmetric() const {
    // Adjacent transpositions generate the symmetric group.
    for (int i = 0; i < dim_in_; ++i)
        for (int j = 0; j < dim_in_; ++j)
            for (int k = 0; k < dim_in_; ++k)
                for (int l = 0; l < dim_out_; ++l) {
                    if (at(i, j, k, l) != -at(j, i, k, l)) return false;
                    if (at(i, j, k, l) != -at(i, k, j, l)) return false;
                }
    return true;
}

bool TrilinearMap::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

} // namespace lie2kit
