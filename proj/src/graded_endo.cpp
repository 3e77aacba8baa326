#include "lie2kit/graded_endo.hpp"

#include "lie2kit/errors.hpp"

namespace lie2kit {

GradedEndo::GradedEndo(const TwoTermComplex& c, int degree)
    : degree_(degree), n0_(c.dim_v0), n1_(c.dim_v1) {
    // Allocate exactly the blocks whose source and target both exist.
    if (degree_ == 0 || degree_ == 1)
        from_v0_ = Matrix::zero(c.dim(degree_), c.dim_v0);
    if (degree_ == 0 || degree_ == -1)
        from_v1_ = Matrix::zero(c.dim(1 + degree_), c.dim_v1);
}

GradedEndo GradedEndo::deg1(const TwoTermComplex& c, Matrix m) {
    if (m.rows() != c.dim_v1 || m.cols() != c.dim_v0) throw ShapeMismatch("degree 1 block must be V0 -> V1");
    GradedEndo t(c, 1);
    t.from_v0_ = std::move(m);
    return t;
}

GradedEndo GradedEndo::deg0(const TwoTermComplex& c, Matrix a0, Matrix a1) {
    if (a0.rows() != c.dim_v0 || a0.cols() != c.dim_v0) throw ShapeMismatch("degree 0 block on V0");
    if (a1.rows() != c.dim_v1 || a1.cols() != c.dim_v1) throw ShapeMismatch("degree 0 block on V1");
    GradedEndo t(c, 0);
    t.from_v0_ = std::move(a0);
    t.from_v1_ = std::move(a1);
    return t;
}

GradedEndo GradedEndo::deg_minus1(const TwoTermComplex& c, Matrix m) {
    if (m.rows() != c.dim_v0 || m.cols() != c.dim_v1) throw ShapeMismatch("degree -1 block must be V1 -> V0");
    GradedEndo t(c, -1);
    t.from_v1_ = std::move(m);
    return t;
}

GradedEndo GradedEndo::zero(const TwoTermComplex& c, int degree) { return GradedEndo(c, degree); }

const Matrix& GradedEndo::up() const {
    if (degree_ != 1 || !from_v0_) throw DegreeOutOfRange("no degree 1 block");
    return *from_v0_;
}

const Matrix& GradedEndo::a0() const {
    if (degree_ != 0 || !from_v0_) throw DegreeOutOfRange("no degree 0 block on V0");
    return *from_v0_;
}

const Matrix& GradedEndo::a1() const {
    if (degree_ != 0 || !from_v1_) throw DegreeOutOfRange("no degree 0 block on V1");
    return *from_v1_;
}

const Matrix& GradedEndo::down() const {
    if (degree_ != -1 || !from_v1_) throw DegreeOutOfRange("no degree -1 block");
    return *from_v1_;
}

bool GradedEndo::is_zero() const {
    if (from_v0_ && !from_v0_->is_zero()) return false;
    if (from_v1_ && !from_v1_->is_zero()) return false;
    return true;
}

GradedEndo GradedEndo::operator+(const GradedEndo& o) const {
    if (degree_ != o.degree_) throw DegreeOutOfRange("adding maps of different degree");
    GradedEndo r = *this;
    if (r.from_v0_) r.from_v0_ = *r.from_v0_ + *o.from_v0_;
    if (r.from_v1_) r.from_v1_ = *r.from_v1_ + *o.from_v1_;
    return r;
}

GradedEndo GradedEndo::operator-(const GradedEndo& o) const {
    if (degree_ != o.degree_) throw DegreeOutOfRange("subtracting maps of different degree");
    GradedEndo r = *this;
    if (r.from_v0_) r.from_v0_ = *r.from_v0_ - *o.from_v0_;
    if (r.from_v1_) r.from_v1_ = *r.from_v1_ - *o.from_v1_;
    return r;
}

GradedEndo operator*(const Rational& s, const GradedEndo& t) {
    GradedEndo r = t;
    if (r.from_v0_) r.from_v0_ = s * *r.from_v0_;
    if (r.from_v1_) r.from_v1_ = s * *r.from_v1_;
    return r;
}

bool operator==(const GradedEndo& a, const GradedEndo& b) {
    if (a.degree_ != b.degree_) return false;
    if (a.from_v0_.has_value() != b.from_v0_.has_value()) return false;
    if (a.from_v1_.has_value() != b.from_v1_.has_value()) return false;
    if (a.from_v0_ && !(*a.from_v0_ == *b.from_v0_)) return false;
    if (a.from_v1_ && !(*a.from_v1_ == *b.from_v1_)) return false;
    return true;
}

GradedEndo compose(const GradedEndo& t, const GradedEndo& s) {
    TwoTermComplex shape(s.n1(), s.n0(), Matrix::zero(s.n0(), s.n1()));
    GradedEndo r(shape, t.degree_ + s.degree_);
    for (int i = 0; i <= 1; ++i) {
        int mid = i + s.degree_;
        if (mid < 0 || mid > 1) continue;
        const auto& sb = s.block_from(i);
        const auto& tb = t.block_from(mid);
        if (!sb || !tb) continue;
        if (i == 0 && r.from_v0_)
            r.from_v0_ = *tb * *sb;
        else if (i == 1 && r.from_v1_)
            r.from_v1_ = *tb * *sb;
    }
    return r;
}

GradedEndo delta(const TwoTermComplex& c, const GradedEndo& t) {
    if (t.degree() < 0)
        throw DegreeOutOfRange("delta on degree below 0 would land in degree -2");
    GradedEndo d_map = GradedEndo::deg_minus1(c, c.d);
    GradedEndo left = compose(d_map, t);
    GradedEndo right = compose(t, d_map);
    return (t.degree() % 2 == 0) ? left - right : left + right;
}

GradedEndo super_bracket(const TwoTermComplex& c, const GradedEndo& t, const GradedEndo& s) {
    (void)c;
    GradedEndo ts = compose(t, s);
    GradedEndo st = compose(s, t);
    bool both_odd = (t.degree() % 2 != 0) && (s.degree() % 2 != 0);
    return both_odd ? ts + st : ts - st;
}

} // namespace lie2kit
