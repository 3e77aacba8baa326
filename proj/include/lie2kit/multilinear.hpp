#ifndef LIE2KIT_MULTILINEAR_HPP
#define LIE2KIT_MULTILINEAR_HPP

#include <vector>

#include "lie2kit/matrix.hpp"

namespace lie2kit {

// Bilinear map stored as structure constants: column(i, j) is the value on
// the (i, j) basis pair. Evaluation skips zero coefficients, so feeding in
// basis vectors costs about one column lookup.
class BilinearMap {
public:
    BilinearMap() = default;
    BilinearMap(int dim_a, int dim_b, int dim_out)
        : dim_a_(dim_a), dim_b_(dim_b), dim_out_(dim_out),
          c_(static_cast<size_t>(dim_a) * dim_b * dim_out) {}

    int dim_a() const { return dim_a_; }
    int dim_b() const { return dim_b_; }
    int dim_out() const { return dim_out_; }

    Rational& at(int i, int j, int k) { return c_[idx(i, j, k)]; }
    const Rational& at(int i, int j, int k) const { return c_[idx(i, j, k)]; }

    Vec column(int i, int j) const;
    void set_column(int i, int j, const Vec& v);

    Vec eval(const Vec& x, const Vec& y) const;

    // Only meaningful when dim_a == dim_b.
    bool antisymmetric() const;
    bool is_zero() const;

    friend bool operator==(const BilinearMap& a, const BilinearMap& b) {
        return a.dim_a_ == b.dim_a_ && a.dim_b_ == b.dim_b_ && a.dim_out_ == b.dim_out_ && a.c_ == b.c_;
    }

private:
    size_t idx(int i, int j, int k) const {
        return (static_cast<size_t>(i) * dim_b_ + j) * dim_out_ + k;
    }
    int dim_a_ = 0, dim_b_ = 0, dim_out_ = 0;
    std::vector<Rational> c_;
};

class TrilinearMap {
public:
    TrilinearMap() = default;
    TrilinearMap(int dim_in, int dim_out)
        : dim_in_(dim_in), dim_out_(dim_out),
          c_(static_cast<size_t>(dim_in) * dim_in * dim_in * dim_out) {}

    int dim_in() const { return dim_in_; }
    int dim_out() const { return dim_out_; }

    Rational& at(int i, int j, int k, int l) { return c_[idx(i, j, k, l)]; }
    const Rational& at(int i, int j, int k, int l) const { return c_[idx(i, j, k, l)]; }

    Vec column(int i, int j, int k) const;
    void set_column(int i, int j, int k, const Vec& v);

    Vec eval(const Vec& x, const Vec& y, const Vec& z) const;

    bool antisymmetric() const;
    bool is_zero() const;

    friend bool operator==(const TrilinearMap& a, const TrilinearMap& b) {
        return a.dim_in_ == b.dim_in_ && a.dim_out_ == b.dim_out_ && a.c_ == b.c_;
    }

private:
    size_t idx(int i, int j, int k, int l) const {
        return ((static_cast<size_t>(i) * dim_in_ + j) * dim_in_ + k) * dim_out_ + l;
    }
    int dim_in_ = 0, dim_out_ = 0;
    std::vector<Rational> c_;
};

} // namespace lie2kit

#endif
