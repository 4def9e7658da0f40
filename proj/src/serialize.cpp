#include "iqf/serialize.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace iqf {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::size_t index_from_json(const Json& j, const char* what) {
    if (!j.is_number_integer() || j.get<long long>() < 0) throw FormatError(std::string(what) + " must be a non-negative integer");
    return j.get<std::size_t>();
}

int sign_from_json(const Json& j) {
    if (!j.is_number_integer() || (j.get<int>() != 1 && j.get<int>() != -1)) throw FormatError("end sign must be 1 or -1");
    return j.get<int>();
}

}  // namespace

Json int_to_json(const Int& v) {
    if (fits_int64(v)) return static_cast<long long>(v);
    return v.str();
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return j.is_number_unsigned() ? Int(j.get<unsigned long long>()) : Int(j.get<long long>());
    if (j.is_string()) {
        const std::string& s = j.get_ref<const std::string&>();
        std::size_t k = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (k == s.size() || s.find_first_not_of("0123456789", k) != std::string::npos)
            throw FormatError("not an integer: \"" + s + "\"");
        return Int(s);
    }
    throw FormatError("expected an integer, got " + j.dump());
}

Json vec_to_json(const IntVec& v) {
    Json a = Json::array();
    for (const Int& x : v) a.push_back(int_to_json(x));
    return a;
}

IntVec vec_from_json(const Json& j) {
    if (!j.is_array()) throw FormatError("expected an integer array");
    IntVec v;
    for (const Json& x : j) v.push_back(int_from_json(x));
    return v;
}

Json matrix_to_json(const IntMatrix& m) {
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vec_to_json(m.row(i)));
    return a;
}

IntMatrix matrix_from_json(const Json& j) {
    if (!j.is_array()) throw FormatError("expected a matrix");
    std::vector<IntVec> rows;
    for (const Json& r : j) rows.push_back(vec_from_json(r));
    for (const IntVec& r : rows)
        if (r.size() != rows.front().size()) throw FormatError("matrix rows differ in length");
    if (rows.empty()) return IntMatrix(0, 0);
    return IntMatrix::from_rows(rows, rows.front().size());
}

Json form_to_json(const QuadraticForm& q) {
    Json off = Json::array();
    IntVec diag;
    for (std::size_t i = 1; i <= q.n(); ++i) {
        diag.push_back(q.diag(i));
        for (std::size_t j = i + 1; j <= q.n(); ++j)
            if (q.off(i, j) != 0) off.push_back(Json::array({i, j, int_to_json(q.off(i, j))}));
    }
    return Json{{"n", q.n()}, {"diag", vec_to_json(diag)}, {"off", off}};
}

QuadraticForm form_from_json(const Json& j) {
    const std::size_t n = index_from_json(field(j, "n"), "n");
    if (n == 0) throw FormatError("a form needs at least one variable");
    IntVec diag = vec_from_json(field(j, "diag"));
    if (diag.size() != n) throw FormatError("diag has " + std::to_string(diag.size()) + " entries, expected " + std::to_string(n));
    QuadraticForm q(n);
    for (std::size_t i = 1; i <= n; ++i) q.set_diag(i, diag[i - 1]);
    const Json& off = j.contains("off") ? j.at("off") : Json::array();
    if (!off.is_array()) throw FormatError("off must be an array");
    for (const Json& t : off) {
        if (!t.is_array() || t.size() != 3) throw FormatError("off entries are [i, j, q_ij]");
        const std::size_t a = index_from_json(t[0], "i"), b = index_from_json(t[1], "j");
        if (a < 1 || b > n || a >= b) throw FormatError("off entry needs 1 <= i < j <= n");
        q.set_off(a, b, int_from_json(t[2]));
    }
    return q;
}

Json graph_to_json(const BidirectedGraph& b) {
    Json arrows = Json::array();
    for (std::size_t i = 1; i <= b.arrows(); ++i) {
        const Arrow& a = b.arrow(i);
        arrows.push_back({{"ends", Json::array({Json::array({a.a.vertex, a.a.sign}), Json::array({a.b.vertex, a.b.sign})})}});
    }
    return Json{{"vertices", b.vertices()}, {"arrows", arrows}};
}

BidirectedGraph graph_from_json(const Json& j) {
    const std::size_t m = index_from_json(field(j, "vertices"), "vertices");
    if (m == 0) throw FormatError("a graph needs at least one vertex");
    BidirectedGraph b(m);
    const Json& arrows = field(j, "arrows");
    if (!arrows.is_array()) throw FormatError("arrows must be an array");
    for (const Json& a : arrows) {
        const Json& ends = field(a, "ends");
        if (!ends.is_array() || ends.size() != 2 || !ends[0].is_array() || !ends[1].is_array() || ends[0].size() != 2 ||
            ends[1].size() != 2)
            throw FormatError("ends must be [[u, e], [v, f]]");
        const std::size_t u = index_from_json(ends[0][0], "vertex"), v = index_from_json(ends[1][0], "vertex");
        if (u < 1 || u > m || v < 1 || v > m) throw FormatError("arrow end outside 1..vertices");
        b.add_arrow(u, sign_from_json(ends[0][1]), v, sign_from_json(ends[1][1]));
    }
    return b;
}

Json quiver_to_json(const GentlePresentation& p) {
    Json arrows = Json::array(), rel = Json::array();
    for (const QuiverArrow& a : p.arrows) arrows.push_back({{"name", a.name}, {"src", a.src}, {"tgt", a.tgt}});
    for (const auto& [x, y] : p.relations) rel.push_back(Json::array({x, y}));
    return Json{{"vertices", p.vertices}, {"arrows", arrows}, {"relations", rel}};
}

GentlePresentation quiver_from_json(const Json& j) {
    GentlePresentation p;
    p.vertices = index_from_json(field(j, "vertices"), "vertices");
    const Json& arrows = field(j, "arrows");
    if (!arrows.is_array()) throw FormatError("arrows must be an array");
    for (const Json& a : arrows) {
        const Json& name = field(a, "name");
        if (!name.is_string()) throw FormatError("arrow name must be a string");
        p.arrows.push_back({name.get<std::string>(), index_from_json(field(a, "src"), "src"), index_from_json(field(a, "tgt"), "tgt")});
    }
    const Json& rel = j.contains("relations") ? j.at("relations") : Json::array();
    if (!rel.is_array()) throw FormatError("relations must be an array");
    for (const Json& r : rel) {
        if (!r.is_array() || r.size() != 2 || !r[0].is_string() || !r[1].is_string())
            throw FormatError("relations are pairs of arrow names");
        p.relations.emplace_back(r[0].get<std::string>(), r[1].get<std::string>());
    }
    return p;
}

Json transform_to_json(const GTransform& t) {
    Json steps = Json::array();
    for (const GStep& s : t.steps) {
        switch (s.kind) {
            case GStep::Kind::Gabrielov: steps.push_back({{"op", "gabrielov"}, {"i", s.i}, {"j", s.j}}); break;
            case GStep::Kind::Sign: steps.push_back({{"op", "sign"}, {"i", s.i}}); break;
            case GStep::Kind::Permutation: steps.push_back({{"op", "perm"}, {"pi", s.pi}}); break;
        }
    }
    return Json{{"matrix", matrix_to_json(t.matrix)}, {"steps", steps}};
}

GTransform transform_from_json(const Json& j) {
    GTransform t{matrix_from_json(field(j, "matrix")), {}};
    const Json& steps = field(j, "steps");
    if (!steps.is_array()) throw FormatError("steps must be an array");
    for (const Json& s : steps) {
        const Json& op = field(s, "op");
        if (op == "gabrielov")
            t.steps.push_back({GStep::Kind::Gabrielov, index_from_json(field(s, "i"), "i"), index_from_json(field(s, "j"), "j"), {}});
        else if (op == "sign")
            t.steps.push_back({GStep::Kind::Sign, index_from_json(field(s, "i"), "i"), 0, {}});
        else if (op == "perm") {
            std::vector<std::size_t> pi;
            for (const Json& k : field(s, "pi")) pi.push_back(index_from_json(k, "pi entry"));
            t.steps.push_back({GStep::Kind::Permutation, 0, 0, pi});
        } else
            throw FormatError("unknown step op " + op.dump());
    }
    return t;
}

Json roots_to_json(const RootSet& r) {
    Json a = Json::array();
    for (const IntVec& v : r.vectors) a.push_back(vec_to_json(v));
    return a;
}

Json bigraph_to_json(const Bigraph& b) {
    Json edges = Json::array();
    for (const BigraphEdge& e : b.edges) edges.push_back(Json::array({e.i, e.j, int_to_json(e.multiplicity), e.sign}));
    return Json{{"vertices", b.vertices}, {"edges", edges}};
}

Json walk_to_json(const Walk& w) {
    Json steps = Json::array();
    for (const WalkStep& s : w.steps) steps.push_back(s.inverse ? std::to_string(s.arrow) + "^-1" : std::to_string(s.arrow));
    return Json{{"start", w.start}, {"steps", steps}, {"vertices", w.vertices}};
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str());
}

}  // namespace iqf
