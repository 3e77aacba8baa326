#include "lie2kit/lie2.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "lie2kit/errors.hpp"

namespace lie2kit {

Lie2Algebra::Lie2Algebra(TwoTermComplex c, BilinearMap l2_00_, BilinearMap l2_01_, TrilinearMap l3_)
    : complex(std::move(c)), l2_00(std::move(l2_00_)), l2_01(std::move(l2_01_)), l3(std::move(l3_)) {
    if (l2_00.dim_a() != complex.dim_v0 || l2_00.dim_b() != complex.dim_v0 ||
        l2_00.dim_out() != complex.dim_v0)
        throw ShapeMismatch("l2_00 shape");
    if (l2_01.dim_a() != complex.dim_v0 || l2_01.dim_b() != complex.dim_v1 ||
        l2_01.dim_out() != complex.dim_v1)
        throw ShapeMismatch("l2_01 shape");
    if (l3.dim_in() != complex.dim_v0 || l3.dim_out() != complex.dim_v1)
        throw ShapeMismatch("l3 shape");
    if (!l2_00.antisymmetric()) throw BadStructure("l2 on V0 is not antisymmetric");
    if (!l3.antisymmetric()) throw BadStructure("l3 is not antisymmetric");
}

Lie2Algebra Lie2Algebra::from_lie(const LieAlgebra& g) {
    return Lie2Algebra(TwoTermComplex::with_zero_d(0, g.dim), g.bracket,
                       BilinearMap(g.dim, 0, 0), TrilinearMap(g.dim, 0));
}

GradedElement Lie2Algebra::basis_element(int degree, int i) const {
    return {degree, Vec::unit(dim(degree), i)};
}

GradedElement Lie2Algebra::zero_element(int degree) const { return {degree, Vec(dim(degree))}; }

GradedElement Lie2Algebra::bracket2(const GradedElement& x, const GradedElement& y) const {
    int dx = x.degree, dy = y.degree;
    int dout = dx + dy;
    if (dx == 0 && dy == 0) return {0, l2_00.eval(x.v, y.v)};
    if (dx == 0 && dy == 1) return {1, l2_01.eval(x.v, y.v)};
    if (dx == 1 && dy == 0) return {1, -l2_01.eval(y.v, x.v)};
    return zero_element(dout);  // two odd arguments raise the degree out of range
}

GradedElement Lie2Algebra::l(int k, const std::vector<GradedElement>& args) const {
    if (static_cast<int>(args.size()) != k) throw ShapeMismatch("l_k arity mismatch");
    for (const auto& a : args)
        if (a.degree < 0 || a.degree > 1) throw BadGrading("argument degree outside {0,1}");
    switch (k) {
        case 1: {
            if (args[0].degree == 1) return {0, complex.d * args[0].v};
            return zero_element(-1);
        }
        case 2:
            return bracket2(args[0], args[1]);
        case 3: {
            int total = args[0].degree + args[1].degree + args[2].degree;
            if (total == 0) return {1, l3.eval(args[0].v, args[1].v, args[2].v)};
            return zero_element(total + 1);
        }
        case 4: {
            int total = args[0].degree + args[1].degree + args[2].degree + args[3].degree;
            return zero_element(total + 2);
        }
        default:
            throw BadGrading("k-ary bracket only defined for k = 1..4");
    }
}

PermSigns perm_signs(const std::vector<int>& perm, const std::vector<int>& degrees) {
    std::vector<int> seq = perm;
    PermSigns s;
    for (size_t pass = 0; pass + 1 < seq.size(); ++pass)
        for (size_t i = 0; i + 1 < seq.size(); ++i)
            if (seq[i] > seq[i + 1]) {
                s.sgn = -s.sgn;
                if (degrees[static_cast<size_t>(seq[i])] % 2 != 0 &&
                    degrees[static_cast<size_t>(seq[i + 1])] % 2 != 0)
                    s.koszul = -s.koszul;
                std::swap(seq[i], seq[i + 1]);
            }
    return s;
}

namespace {

// All (i, n-i)-unshuffles as the ascending i-subset plus ascending rest.
std::vector<std::vector<int>> unshuffles(int n, int i) {
    std::vector<std::vector<int>> out;
    std::vector<int> pick(static_cast<size_t>(i));
    for (int t = 0; t < i; ++t) pick[static_cast<size_t>(t)] = t;
    for (;;) {
        std::vector<int> perm = pick;
        std::vector<bool> used(static_cast<size_t>(n), false);
        for (int p : pick) used[static_cast<size_t>(p)] = true;
        for (int t = 0; t < n; ++t)
            if (!used[static_cast<size_t>(t)]) perm.push_back(t);
        out.push_back(std::move(perm));
        int pos = i - 1;
        while (pos >= 0 && pick[static_cast<size_t>(pos)] == n - i + pos) --pos;
        if (pos < 0) break;
        ++pick[static_cast<size_t>(pos)];
        for (int t = pos + 1; t < i; ++t) pick[static_cast<size_t>(t)] = pick[static_cast<size_t>(t - 1)] + 1;
    }
    return out;
}

} // namespace

GradedElement linfty_defect(const Lie2Algebra& a, int n, const std::vector<GradedElement>& args) {
    if (n < 1 || n > 4) throw BadGrading("relation arity must be 1..4");
    if (static_cast<int>(args.size()) != n) throw ShapeMismatch("argument count");
    std::vector<int> degrees;
    degrees.reserve(args.size());
    int total_degree = 0;
    for (const auto& x : args) {
        if (x.degree < 0 || x.degree > 1) throw BadGrading("argument degree outside {0,1}");
        degrees.push_back(x.degree);
        total_degree += x.degree;
    }
    int out_degree = total_degree + n - 3;
    GradedElement acc = a.zero_element(out_degree);
    if (out_degree < 0 || out_degree > 1) return acc;

    for (int i = 1; i <= n; ++i) {
        int j = n + 1 - i;
        int lead = ((i * (j - 1)) % 2 == 0) ? 1 : -1;
        for (const auto& perm : unshuffles(n, i)) {
            PermSigns s = perm_signs(perm, degrees);
            std::vector<GradedElement> inner;
            inner.reserve(static_cast<size_t>(i));
            for (int t = 0; t < i; ++t) inner.push_back(args[static_cast<size_t>(perm[static_cast<size_t>(t)])]);
            GradedElement li = a.l(i, inner);
            if (li.degree < 0 || li.degree > 1) continue;  // zero for degree reasons
            std::vector<GradedElement> outer;
            outer.reserve(static_cast<size_t>(j));
            outer.push_back(std::move(li));
            for (int t = i; t < n; ++t) outer.push_back(args[static_cast<size_t>(perm[static_cast<size_t>(t)])]);
            GradedElement lj = a.l(j, outer);
            if (lj.degree != out_degree) continue;
            int coeff = lead * s.sgn * s.koszul;
            if (coeff == 1)
                acc.v += lj.v;
            else
                acc.v -= lj.v;
        }
    }
    return acc;
}

namespace {

std::string tuple_str(const std::vector<std::pair<int, int>>& tuple) {
    std::ostringstream os;
    os << "(";
    for (size_t t = 0; t < tuple.size(); ++t) {
        if (t) os << ", ";
        os << (tuple[t].first == 0 ? "x" : "m") << tuple[t].second;
    }
    os << ")";
    return os.str();
}

// Canonical basis tuples: even (degree 0) indices strictly increase, odd
// (degree 1) indices weakly increase, evens listed first. The defect is
// graded antisymmetric, so these tuples decide the general case; tuples
// whose output degree falls outside {0, 1} are skipped by the caller.
void enumerate_tuples(int n0, int n1, int arity, int odd_count,
                      std::vector<std::vector<std::pair<int, int>>>& out) {
    int even_count = arity - odd_count;
    std::vector<std::vector<int>> evens, odds;
    {
        std::vector<int> cur;
        // strictly increasing even indices
        std::function<void(int)> rec_even = [&](int start) {
            if (static_cast<int>(cur.size()) == even_count) {
                evens.push_back(cur);
                return;
            }
            for (int v = start; v < n0; ++v) {
                cur.push_back(v);
                rec_even(v + 1);
                cur.pop_back();
            }
        };
        rec_even(0);
        cur.clear();
        std::function<void(int)> rec_odd = [&](int start) {
            if (static_cast<int>(cur.size()) == odd_count) {
                odds.push_back(cur);
                return;
            }
            for (int v = start; v < n1; ++v) {
                cur.push_back(v);
                rec_odd(v);  // repeats allowed: odd pairs are symmetric
                cur.pop_back();
            }
        };
        rec_odd(0);
    }
    for (const auto& ev : evens)
        for (const auto& od : odds) {
            std::vector<std::pair<int, int>> tuple;
            tuple.reserve(static_cast<size_t>(arity));
            for (int v : ev) tuple.emplace_back(0, v);
            for (int v : od) tuple.emplace_back(1, v);
            out.push_back(std::move(tuple));
        }
}

} // namespace

Report check_lie2(const Lie2Algebra& a) {
    Report rep;
    rep.subject = "lie 2-algebra";
    int n0 = a.dim(0), n1 = a.dim(1);
    for (int n = 1; n <= 4; ++n) {
        bool pass = true;
        std::string ce;
        for (int odd = 0; odd <= n && pass; ++odd) {
            int out_degree = odd + n - 3;
            if (out_degree < 0 || out_degree > 1) continue;
            std::vector<std::vector<std::pair<int, int>>> tuples;
            enumerate_tuples(n0, n1, n, odd, tuples);
            for (const auto& tuple : tuples) {
                std::vector<GradedElement> args;
                args.reserve(tuple.size());
                for (auto [deg, idx] : tuple) args.push_back(a.basis_element(deg, idx));
                GradedElement defect = linfty_defect(a, n, args);
                if (!defect.is_zero()) {
                    pass = false;
                    ce = tuple_str(tuple) + " -> " + defect.v.str();
                    break;
                }
            }
        }
        rep.add("linfty.n" + std::to_string(n),
                "arity " + std::to_string(n) + " homotopy Jacobi relation", pass, ce);
    }
    return rep;
}

} // namespace lie2kit
