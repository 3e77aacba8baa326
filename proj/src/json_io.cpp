#include "lie2kit/json_io.hpp"

#include <fstream>

namespace lie2kit::io {

namespace {

std::string at(const std::string& path, const std::string& key) { return path + "." + key; }
std::string idx(const std::string& path, int i) { return path + "[" + std::to_string(i) + "]"; }

const json& field(const json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) throw SchemaError(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(path, "missing field '" + key + "'");
    return *it;
}

int int_field(const json& j, const std::string& key, const std::string& path) {
    const json& f = field(j, key, path);
    if (!f.is_number_integer()) throw SchemaError(at(path, key), "expected an integer");
    int v = f.get<int>();
    if (v < 0) throw SchemaError(at(path, key), "expected a nonnegative count");
    return v;
}

} // namespace

json to_json(const Rational& r) { return r.str(); }

json to_json(const Vec& v) {
    json a = json::array();
    for (int i = 0; i < v.dim(); ++i) a.push_back(to_json(v[i]));
    return a;
}

json to_json(const Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

json to_json(const FloatMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

json to_json(const TwoTermComplex& c) {
    return json{{"dimV1", c.dim_v1}, {"dimV0", c.dim_v0}, {"d", to_json(c.d)}};
}

json to_json(const BilinearMap& b) {
    json t = json::array();
    for (int i = 0; i < b.dim_a(); ++i) {
        json ji = json::array();
        for (int j = 0; j < b.dim_b(); ++j) ji.push_back(to_json(b.column(i, j)));
        t.push_back(std::move(ji));
    }
    return json{{"dimA", b.dim_a()}, {"dimB", b.dim_b()}, {"dimOut", b.dim_out()}, {"tensor", std::move(t)}};
}

json to_json(const TrilinearMap& t) {
    json a = json::array();
    for (int i = 0; i < t.dim_in(); ++i) {
        json ji = json::array();
        for (int j = 0; j < t.dim_in(); ++j) {
            json jj = json::array();
            for (int k = 0; k < t.dim_in(); ++k) jj.push_back(to_json(t.column(i, j, k)));
            ji.push_back(std::move(jj));
        }
        a.push_back(std::move(ji));
    }
    return json{{"dimIn", t.dim_in()}, {"dimOut", t.dim_out()}, {"tensor", std::move(a)}};
}

json to_json(const LieAlgebra& g) { return json{{"dim", g.dim}, {"bracket", to_json(g.bracket)}}; }

json to_json(const Lie2Algebra& a) {
    return json{{"complex", to_json(a.complex)},
                {"l2_00", to_json(a.l2_00)},
                {"l2_01", to_json(a.l2_01)},
                {"l3", to_json(a.l3)}};
}

json to_json(const CrossedModuleAlg& x) {
    return json{{"dim_h1", x.dim_h1},         {"dim_h0", x.dim_h0},
                {"bracket_h1", to_json(x.bracket_h1)}, {"bracket_h0", to_json(x.bracket_h0)},
                {"dt", to_json(x.dt)},        {"phi", to_json(x.phi)}};
}

json to_json(const RepUpToHomotopy& r) {
    json mu0 = json::array(), mu1 = json::array(), nu = json::array();
    for (const auto& m : r.mu0) mu0.push_back(to_json(m));
    for (const auto& m : r.mu1) mu1.push_back(to_json(m));
    for (const auto& row : r.nu) {
        json jr = json::array();
        for (const auto& m : row) jr.push_back(to_json(m));
        nu.push_back(std::move(jr));
    }
    return json{{"g", to_json(r.g)},
                {"complex", to_json(r.complex)},
                {"mu0", std::move(mu0)},
                {"mu1", std::move(mu1)},
                {"nu", std::move(nu)}};
}

json to_json(const Lie2Morphism& f) {
    return json{{"f0", to_json(f.f0)}, {"f1", to_json(f.f1)}, {"f2", to_json(f.f2)}};
}

json to_json(const SkewBracket& b) { return json{{"dim", b.dim}, {"bracket", to_json(b.b)}}; }

json to_json(const Butterfly& b) {
    return json{{"e", to_json(b.e)},         {"kappa", to_json(b.kappa)},
                {"iota", to_json(b.iota)},   {"sigma", to_json(b.sigma)},
                {"rho", to_json(b.rho)},     {"src", to_json(b.src)},
                {"dst", to_json(b.dst)}};
}

json to_json(const Report& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json jc{{"id", c.id}, {"law", c.law}, {"pass", c.pass}};
        if (!c.counterexample.empty()) jc["counterexample"] = c.counterexample;
        checks.push_back(std::move(jc));
    }
    return json{{"subject", rep.subject},
                {"seed", rep.seed},
                {"samples", rep.samples},
                {"pass", rep.ok()},
                {"checks", std::move(checks)}};
}

Rational rational_from_json(const json& j, const std::string& path) {
    if (j.is_number()) throw SchemaError(path, "expected an exact rational as a string, got a number");
    if (!j.is_string()) throw SchemaError(path, "expected a rational string \"p/q\"");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const SchemaError&) {
        throw;
    } catch (const Error& e) {
        throw SchemaError(path, e.what());
    }
}

Vec vec_from_json(const json& j, const std::string& path) {
    if (!j.is_array()) throw SchemaError(path, "expected an array");
    Vec v(static_cast<int>(j.size()));
    for (int i = 0; i < v.dim(); ++i) v[i] = rational_from_json(j[static_cast<size_t>(i)], idx(path, i));
    return v;
}

Matrix matrix_from_json(const json& j, const std::string& path) {
    int rows = int_field(j, "rows", path);
    int cols = int_field(j, "cols", path);
    const json& entries = field(j, "entries", path);
    if (!entries.is_array() || static_cast<int>(entries.size()) != rows)
        throw SchemaError(at(path, "entries"), "expected " + std::to_string(rows) + " rows");
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const json& row = entries[static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw SchemaError(idx(at(path, "entries"), i),
                              "expected " + std::to_string(cols) + " columns");
        for (int k = 0; k < cols; ++k)
            m.at(i, k) = rational_from_json(row[static_cast<size_t>(k)], idx(idx(at(path, "entries"), i), k));
    }
    return m;
}

Matrix matrix_from_json(const json& j, int rows, int cols, const std::string& path) {
    Matrix m = matrix_from_json(j, path);
    if (m.rows() != rows || m.cols() != cols)
        throw SchemaError(path, "expected a " + std::to_string(rows) + "x" + std::to_string(cols) +
                                    " matrix, got " + std::to_string(m.rows()) + "x" +
                                    std::to_string(m.cols()));
    return m;
}

FloatMatrix float_matrix_from_json(const json& j, const std::string& path) {
    int rows = int_field(j, "rows", path);
    int cols = int_field(j, "cols", path);
    const json& entries = field(j, "entries", path);
    if (!entries.is_array() || static_cast<int>(entries.size()) != rows)
        throw SchemaError(at(path, "entries"), "expected " + std::to_string(rows) + " rows");
    FloatMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const json& row = entries[static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw SchemaError(idx(at(path, "entries"), i),
                              "expected " + std::to_string(cols) + " columns");
        for (int k = 0; k < cols; ++k) {
            const json& cell = row[static_cast<size_t>(k)];
            if (!cell.is_number())
                throw SchemaError(idx(idx(at(path, "entries"), i), k), "expected a number");
            m.at(i, k) = cell.get<double>();
        }
    }
    m.check_finite();
    return m;
}

TwoTermComplex complex_from_json(const json& j, const std::string& path) {
    int v1 = int_field(j, "dimV1", path);
    int v0 = int_field(j, "dimV0", path);
    return TwoTermComplex(v1, v0, matrix_from_json(field(j, "d", path), v0, v1, at(path, "d")));
}

BilinearMap bilinear_from_json(const json& j, const std::string& path) {
    int da = int_field(j, "dimA", path), db = int_field(j, "dimB", path),
        dout = int_field(j, "dimOut", path);
    const json& t = field(j, "tensor", path);
    if (!t.is_array() || static_cast<int>(t.size()) != da)
        throw SchemaError(at(path, "tensor"), "expected " + std::to_string(da) + " slices");
    BilinearMap b(da, db, dout);
    for (int i = 0; i < da; ++i) {
        const json& ji = t[static_cast<size_t>(i)];
        if (!ji.is_array() || static_cast<int>(ji.size()) != db)
            throw SchemaError(idx(at(path, "tensor"), i), "expected " + std::to_string(db) + " columns");
        for (int k = 0; k < db; ++k) {
            Vec col = vec_from_json(ji[static_cast<size_t>(k)], idx(idx(at(path, "tensor"), i), k));
            if (col.dim() != dout)
                throw SchemaError(idx(idx(at(path, "tensor"), i), k), "expected dimOut entries");
            b.set_column(i, k, col);
        }
    }
    return b;
}

TrilinearMap trilinear_from_json(const json& j, const std::string& path) {
    int din = int_field(j, "dimIn", path), dout = int_field(j, "dimOut", path);
    const json& t = field(j, "tensor", path);
    if (!t.is_array() || static_cast<int>(t.size()) != din)
        throw SchemaError(at(path, "tensor"), "expected " + std::to_string(din) + " slices");
    TrilinearMap tm(din, dout);
    for (int i = 0; i < din; ++i) {
        const json& ji = t[static_cast<size_t>(i)];
        if (!ji.is_array() || static_cast<int>(ji.size()) != din)
            throw SchemaError(idx(at(path, "tensor"), i), "bad slice");
        for (int k = 0; k < din; ++k) {
            const json& jk = ji[static_cast<size_t>(k)];
            if (!jk.is_array() || static_cast<int>(jk.size()) != din)
                throw SchemaError(idx(idx(at(path, "tensor"), i), k), "bad slice");
            for (int l = 0; l < din; ++l) {
                Vec col = vec_from_json(jk[static_cast<size_t>(l)],
                                        idx(idx(idx(at(path, "tensor"), i), k), l));
                if (col.dim() != dout)
                    throw SchemaError(idx(idx(idx(at(path, "tensor"), i), k), l),
                                      "expected dimOut entries");
                tm.set_column(i, k, l, col);
            }
        }
    }
    return tm;
}

namespace {

template <typename F>
auto structural(F&& f, const std::string& path) {
    try {
        return f();
    } catch (const SchemaError&) {
        throw;
    } catch (const Error& e) {
        throw SchemaError(path, e.what());
    }
}

} // namespace

LieAlgebra lie_algebra_from_json(const json& j, const std::string& path) {
    int dim = int_field(j, "dim", path);
    BilinearMap b = bilinear_from_json(field(j, "bracket", path), at(path, "bracket"));
    return structural([&] { return LieAlgebra(dim, std::move(b)); }, path);
}

Lie2Algebra lie2_from_json(const json& j, const std::string& path) {
    TwoTermComplex c = complex_from_json(field(j, "complex", path), at(path, "complex"));
    BilinearMap l200 = bilinear_from_json(field(j, "l2_00", path), at(path, "l2_00"));
    BilinearMap l201 = bilinear_from_json(field(j, "l2_01", path), at(path, "l2_01"));
    TrilinearMap l3 = trilinear_from_json(field(j, "l3", path), at(path, "l3"));
    return structural(
        [&] { return Lie2Algebra(std::move(c), std::move(l200), std::move(l201), std::move(l3)); },
        path);
}

CrossedModuleAlg xmod_from_json(const json& j, const std::string& path) {
    int h1 = int_field(j, "dim_h1", path), h0 = int_field(j, "dim_h0", path);
    BilinearMap b1 = bilinear_from_json(field(j, "bracket_h1", path), at(path, "bracket_h1"));
    BilinearMap b0 = bilinear_from_json(field(j, "bracket_h0", path), at(path, "bracket_h0"));
    Matrix dt = matrix_from_json(field(j, "dt", path), h0, h1, at(path, "dt"));
    BilinearMap phi = bilinear_from_json(field(j, "phi", path), at(path, "phi"));
    return structural(
        [&] {
            return CrossedModuleAlg(h1, h0, std::move(b1), std::move(b0), std::move(dt),
                                    std::move(phi));
        },
        path);
}

RepUpToHomotopy rep_from_json(const json& j, const std::string& path) {
    LieAlgebra g = lie_algebra_from_json(field(j, "g", path), at(path, "g"));
    TwoTermComplex c = complex_from_json(field(j, "complex", path), at(path, "complex"));
    auto matrices = [&](const std::string& key, int rows, int cols) {
        const json& arr = field(j, key, path);
        if (!arr.is_array() || static_cast<int>(arr.size()) != g.dim)
            throw SchemaError(at(path, key), "expected one matrix per basis vector");
        std::vector<Matrix> out;
        out.reserve(arr.size());
        for (int i = 0; i < g.dim; ++i)
            out.push_back(matrix_from_json(arr[static_cast<size_t>(i)], rows, cols, idx(at(path, key), i)));
        return out;
    };
    std::vector<Matrix> mu0 = matrices("mu0", c.dim_v0, c.dim_v0);
    std::vector<Matrix> mu1 = matrices("mu1", c.dim_v1, c.dim_v1);
    const json& nuj = field(j, "nu", path);
    if (!nuj.is_array() || static_cast<int>(nuj.size()) != g.dim)
        throw SchemaError(at(path, "nu"), "expected one row per basis vector");
    std::vector<std::vector<Matrix>> nu(static_cast<size_t>(g.dim));
    for (int a = 0; a < g.dim; ++a) {
        const json& row = nuj[static_cast<size_t>(a)];
        if (!row.is_array() || static_cast<int>(row.size()) != g.dim)
            throw SchemaError(idx(at(path, "nu"), a), "expected one matrix per basis vector");
        for (int b = 0; b < g.dim; ++b)
            nu[static_cast<size_t>(a)].push_back(matrix_from_json(
                row[static_cast<size_t>(b)], c.dim_v1, c.dim_v0, idx(idx(at(path, "nu"), a), b)));
    }
    return structural(
        [&] {
            return RepUpToHomotopy(std::move(g), std::move(c), std::move(mu0), std::move(mu1),
                                   std::move(nu));
        },
        path);
}

Lie2Morphism morphism_from_json(const json& j, const std::string& path) {
    Matrix f0 = matrix_from_json(field(j, "f0", path), at(path, "f0"));
    Matrix f1 = matrix_from_json(field(j, "f1", path), at(path, "f1"));
    BilinearMap f2 = bilinear_from_json(field(j, "f2", path), at(path, "f2"));
    return structural([&] { return Lie2Morphism(std::move(f0), std::move(f1), std::move(f2)); },
                      path);
}

SkewBracket skew_bracket_from_json(const json& j, const std::string& path) {
    int dim = int_field(j, "dim", path);
    BilinearMap b = bilinear_from_json(field(j, "bracket", path), at(path, "bracket"));
    return structural([&] { return SkewBracket(dim, std::move(b)); }, path);
}

json load_file(const std::string& filename) {
    std::ifstream in(filename);
    if (!in) throw Error("cannot open " + filename);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw SchemaError(filename, e.what());
    }
    return j;
}

void save_file(const std::string& filename, const json& j) {
    std::ofstream out(filename);
    if (!out) throw Error("cannot open " + filename + " for writing");
    out << j.dump(2) << "\n";
}

} // namespace lie2kit::io
