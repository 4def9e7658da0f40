#include "iqf/classify.hpp"

#include "iqf/enumerate.hpp"
#include "iqf/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace iqf {

GTransform GTransform::identity(std::size_t n) { return {IntMatrix::identity(n), {}}; }

void GTransform::push(const GStep& step, const IntMatrix& m) {
    matrix = matrix * m;
    steps.push_back(step);
}

std::string GTransform::to_string() const {
    std::ostringstream os;
    if (steps.empty()) return "I";
    for (std::size_t k = 0; k < steps.size(); ++k) {
        const GStep& s = steps[k];
        if (k) os << ' ';
        switch (s.kind) {
            case GStep::Kind::Gabrielov: os << "T_{" << s.i << ',' << s.j << '}'; break;
            case GStep::Kind::Sign: os << "T_" << s.i; break;
            case GStep::Kind::Permutation: {
                os << "P(";
                for (std::size_t t = 0; t < s.pi.size(); ++t) os << (t ? "," : "") << s.pi[t];
                os << ')';
                break;
            }
        }
    }
    return os.str();
}

std::pair<QuadraticForm, GTransform> gabrielov(const QuadraticForm& q, std::size_t i, std::size_t j) {
    IntMatrix t = gabrielov_matrix(q, i, j);
    QuadraticForm r = q;
    const Int &qi = q.diag(i), &qij = q.off(i, j);
    if (qi != 0 && qij != 0) {
        const Int a = qij / qi;
        for (std::size_t k = 1; k <= q.n(); ++k)
            if (k != i && k != j) r.set_off(k, j, q.off(k, j) - q.off(k, i) * a);
        r.set_off(i, j, -qij);
    }
    GTransform g = GTransform::identity(q.n());
    g.push({GStep::Kind::Gabrielov, i, j, {}}, t);
    return {r, g};
}

std::string DynkinType::name() const {
    const char* f = family == Family::A ? "A" : family == Family::D ? "D" : family == Family::E ? "E" : "C";
    return f + std::to_string(rank);
}

QuadraticForm dynkin_form(const DynkinType& t) {
    switch (t.family) {
        case Family::A: return form_a(t.rank);
        case Family::D: return form_d(t.rank);
        case Family::E: return form_e(t.rank);
        case Family::C: return form_c(t.rank);
    }
    fail(ErrorKind::InvalidInput, "unknown Dynkin family");
}

namespace {

std::size_t form_rank(const QuadraticForm& q) { return rank(q.gram()); }

// Subset search: shrink X keeping q^X connected with rank r until |X| = r.
std::optional<std::vector<std::size_t>> shrink_to_core(const QuadraticForm& q, std::size_t r) {
    const std::size_t n = q.n();
    std::set<std::vector<bool>> visited;
    std::function<std::optional<std::vector<std::size_t>>(const std::vector<std::size_t>&)> go =
        [&](const std::vector<std::size_t>& x) -> std::optional<std::vector<std::size_t>> {
        if (x.size() == r) return x;
        for (std::size_t k = x.size(); k-- > 0;) {
            std::vector<std::size_t> y = x;
            y.erase(y.begin() + k);
            std::vector<bool> key(n + 1, false);
            for (std::size_t v : y) key[v] = true;
            if (!visited.insert(key).second) continue;
            QuadraticForm sub = restrict(q, y);
            if (!is_connected(sub) || form_rank(sub) != r) continue;
            if (auto res = go(y)) return res;
        }
        return std::nullopt;
    };
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), std::size_t{1});
    return go(all);
}

bool is_type_c_shape(const QuadraticForm& q, const FormReport& rep) {
    if (rep.unit || !rep.fully_regular || !rep.irreducible) return false;
    for (std::size_t i = 1; i <= q.n(); ++i)
        if (q.diag(i) < 1 || q.diag(i) > 2) return false;
    return true;
}

void check_c_bounds(const QuadraticForm& q) {
    for (std::size_t i = 1; i <= q.n(); ++i)
        for (std::size_t j = i + 1; j <= q.n(); ++j)
            if (q.diag(i) == 2 && q.diag(j) == 2) {
                const Int& c = q.off(i, j);
                if (c != 0 && c != 4 && c != -4)
                    throw std::logic_error("type C coefficient bound violated at (" + std::to_string(i) + "," +
                                           std::to_string(j) + ")");
            }
}

}  // namespace

Classification dynkin_type(const QuadraticForm& q) {
    FormReport rep = analyze(q);
    require(rep.non_negative, ErrorKind::NotNonNegative, "form is not non-negative");
    std::vector<std::size_t> keep;
    for (std::size_t i = 1; i <= q.n(); ++i)
        if (q.diag(i) != 0) keep.push_back(i);
    require(!keep.empty(), ErrorKind::InvalidInput, "zero form has no Dynkin type");
    QuadraticForm core = restrict(q, keep);
    FormReport crep = keep.size() == q.n() ? rep : analyze(core);
    require(crep.connected, ErrorKind::InvalidInput, "form is not connected");

    if (crep.unit) {
        auto x = shrink_to_core(core, crep.rank);
        if (!x) throw std::logic_error("no connected positive restriction of full rank found");
        QuadraticForm pos = restrict(core, *x);
        const std::size_t r = x->size();
        // Positive definite, so the pruned search is exhaustive for any box.
        const std::size_t count = bounded_solutions(pos, 1, 64).size();
        DynkinType t{Family::A, r};
        if (count == r * (r + 1))
            t.family = Family::A;
        else if (r >= 4 && count == 2 * r * (r - 1))
            t.family = Family::D;
        else if ((r == 6 && count == 72) || (r == 7 && count == 126) || (r == 8 && count == 240))
            t.family = Family::E;
        else
            throw std::logic_error("unexpected root count " + std::to_string(count) + " for rank " + std::to_string(r));
        return {t, rep.corank};
    }
    require(is_type_c_shape(core, crep), ErrorKind::InvalidInput,
            "form is neither a unit form nor of Dynkin type C");
    check_c_bounds(core);
    return {{Family::C, crep.rank}, rep.corank};
}

std::pair<QuadraticForm, GTransform> pivot_saturate(const QuadraticForm& q0, std::size_t i0) {
    const std::size_t n = q0.n();
    require(i0 >= 1 && i0 <= n, ErrorKind::InvalidInput, "pivot index out of range");
    require(is_connected(q0), ErrorKind::InvalidInput, "form is not connected");
    require(analyze(q0).cox_regular, ErrorKind::NotCoxRegular, "form is not Cox-regular");
    QuadraticForm q = q0;
    GTransform t = GTransform::identity(n);
    for (;;) {
        std::vector<bool> in_s(n + 1, false);
        bool any = false;
        for (std::size_t j = 1; j <= n; ++j)
            if (j != i0 && q.off(i0, j) == 0) in_s[j] = any = true;
        if (!any) break;
        std::size_t pick_i = 0, pick_j = 0;
        for (std::size_t j = 1; j <= n && !pick_j; ++j) {
            if (!in_s[j]) continue;
            std::size_t first = 0, deflation = 0;
            for (std::size_t i = 1; i <= n; ++i) {
                if (i == i0 || in_s[i] || q.off(i, j) == 0) continue;
                if (!first) first = i;
                if (!deflation && q.off(i, j) < 0) deflation = i;
            }
            if (first) {
                pick_i = deflation ? deflation : first;
                pick_j = j;
            }
        }
        if (!pick_j) throw std::logic_error("saturation stalled on a connected form");
        auto [q2, g] = gabrielov(q, pick_i, pick_j);
        q = q2;
        t.push(g.steps[0], g.matrix);
    }
    for (std::size_t j = 1; j <= n; ++j)
        if (j != i0 && q.off(i0, j) < 0) {
            IntMatrix s = sign_matrix(n, j);
            q = compose(q, s);
            t.push({GStep::Kind::Sign, j, 0, {}}, s);
        }
    return {q, t};
}

LoopPartition loop_partition(const QuadraticForm& q) {
    const std::size_t n = q.n();
    FormReport rep = analyze(q);
    require(rep.non_negative, ErrorKind::NotNonNegative, "form is not non-negative");
    require(!rep.unit && q.diag(1) == 2, ErrorKind::InvalidInput, "partition needs q_1 = 2");
    for (std::size_t i = 2; i <= n; ++i)
        require(q.off(1, i) > 0, ErrorKind::InvalidInput, "partition needs q_1i > 0 for all i");
    require(is_type_c_shape(q, rep), ErrorKind::NotTypeC, "form is not of Dynkin type C");

    LoopPartition u;
    u.m = 1;
    u.plus.assign(2, {});
    u.minus.assign(2, {});
    u.loops.push_back(1);
    std::vector<std::size_t> part(n + 1, 0);
    std::vector<int> side(n + 1, 0);
    std::vector<std::size_t> ones;
    auto place = [&](std::size_t k, std::size_t v, int e) {
        part[k] = v;
        side[k] = e;
        (e > 0 ? u.plus : u.minus)[v].push_back(k);
        ones.push_back(k);
    };
    auto new_part = [&](std::size_t k) {
        ++u.m;
        u.plus.emplace_back();
        u.minus.emplace_back();
        place(k, u.m, 1);
    };
    for (std::size_t k = 2; k <= n; ++k) {
        if (q.diag(k) == 2) {
            u.loops.push_back(k);
            continue;
        }
        if (ones.empty()) {
            new_part(k);
            continue;
        }
        std::size_t two = 0, zero = 0;
        bool all_one = true;
        for (std::size_t i : ones) {
            const Int& c = q.off(i, k);
            if (c == 2 && !two) two = i;
            if (c == 0 && !zero) zero = i;
            if (c != 1) all_one = false;
            if (c < 0 || c > 2) fail(ErrorKind::NotTypeC, "coefficient q_" + std::to_string(i) + "," + std::to_string(k) + " out of range");
        }
        if (two)
            place(k, part[two], side[two]);
        else if (zero)
            place(k, part[zero], -side[zero]);
        else if (all_one)
            new_part(k);
    }
    // Coefficient law of the partition.
    auto level = [&](std::size_t i) { return part[i] == 0 ? 2 : 1; };
    auto vert = [&](std::size_t i) { return part[i] == 0 ? std::size_t{1} : part[i]; };
    auto eps = [&](std::size_t i) { return part[i] == 0 ? -1 : side[i]; };
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j) {
            Int expect;
            if (vert(i) == vert(j))
                expect = Int(level(i) * std::abs(eps(i) + eps(j))) / (i == j ? 2 : 1);
            else
                expect = level(i) * level(j);
            const Int& got = i == j ? q.diag(i) : q.off(i, j);
            require(got == expect, ErrorKind::NotTypeC,
                    "partition law fails at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    return u;
}

BidirectedGraph partition_graph(const LoopPartition& u, std::size_t n) {
    BidirectedGraph g(u.m);
    std::vector<std::pair<std::size_t, int>> where(n + 1, {0, 0});
    for (std::size_t v = 2; v <= u.m; ++v) {
        for (std::size_t k : u.plus[v]) where[k] = {v, 1};
        for (std::size_t k : u.minus[v]) where[k] = {v, -1};
    }
    for (std::size_t k = 1; k <= n; ++k) {
        if (where[k].first == 0)
            g.add_arrow(1, -1, 1, -1);
        else
            g.add_arrow(where[k].first, where[k].second, 1, -1);
    }
    return g;
}

std::optional<BidirectedGraph> realize_by_search(const QuadraticForm& q, std::size_t max_vertices) {
    const std::size_t n = q.n();
    IntMatrix g = q.gram();
    std::vector<std::vector<int>> gram(n, std::vector<int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (abs(g(i, j)) > 4) return std::nullopt;
            gram[i][j] = static_cast<int>(g(i, j));
        }
    // Breadth-first variable order so each row meets an earlier one.
    std::vector<std::size_t> order;
    std::vector<bool> seen(n, false);
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s] || gram[s][s] == 0) continue;
        if (!order.empty()) return std::nullopt;  // disconnected
        seen[s] = true;
        order.push_back(s);
        for (std::size_t h = 0; h < order.size(); ++h)
            for (std::size_t j = 0; j < n; ++j)
                if (!seen[j] && gram[order[h]][j] != 0) {
                    seen[j] = true;
                    order.push_back(j);
                }
    }
    for (std::size_t s = 0; s < n; ++s)
        if (!seen[s]) order.push_back(s);

    const std::size_t mv = max_vertices;
    std::vector<std::vector<int>> rows(n, std::vector<int>(mv, 0));
    std::size_t used = 0;
    std::function<bool(std::size_t)> place = [&](std::size_t idx) -> bool {
        if (idx == n) return true;
        const std::size_t k = order[idx];
        const int norm = gram[k][k];
        std::vector<std::pair<std::vector<int>, std::size_t>> cands;
        auto row2 = [&](std::size_t a, int sa, std::size_t b, int sb) {
            std::vector<int> r(mv, 0);
            r[a] += sa;
            r[b] += sb;
            return r;
        };
        if (norm == 0)
            cands.push_back({std::vector<int>(mv, 0), used});
        else if (norm == 4) {
            for (std::size_t a = 0; a < used; ++a)
                for (int s : {1, -1}) cands.push_back({row2(a, s, a, s), used});
            if (used < mv) cands.push_back({row2(used, 1, used, 1), used + 1});
        } else if (norm == 2) {
            if (used == 0 && mv >= 2) cands.push_back({row2(0, 1, 1, -1), 2});
            for (std::size_t a = 0; a < used; ++a)
                for (std::size_t b = a + 1; b < used; ++b)
                    for (int sa : {1, -1})
                        for (int sb : {1, -1}) cands.push_back({row2(a, sa, b, sb), used});
            if (used < mv && used > 0)
                for (std::size_t a = 0; a < used; ++a)
                    for (int sa : {1, -1}) cands.push_back({row2(a, sa, used, 1), used + 1});
        } else
            return false;
        const std::size_t saved = used;
        for (auto& [r, nu] : cands) {
            bool ok = true;
            for (std::size_t t = 0; t < idx && ok; ++t) {
                const auto& o = rows[order[t]];
                int d = 0;
                for (std::size_t a = 0; a < mv; ++a) d += r[a] * o[a];
                ok = (d == gram[k][order[t]]);
            }
            if (!ok) continue;
            rows[k] = r;
            used = nu;
            if (place(idx + 1)) return true;
            used = saved;
        }
        return false;
    };
    if (!place(0)) return std::nullopt;
    std::vector<IntVec> out(n, IntVec(std::max<std::size_t>(used, 1)));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t a = 0; a < used; ++a) out[k][a] = rows[k][a];
    return graph_from_rows(out, std::max<std::size_t>(used, 1));
}

namespace {

BidirectedGraph realize_type_c(const QuadraticForm& q) {
    const std::size_t n = q.n();
    IntMatrix t = IntMatrix::identity(n);
    QuadraticForm q1 = q;
    if (q.diag(1) != 2) {
        std::size_t i = 1;
        while (q.diag(i) != 2) ++i;
        std::vector<std::size_t> pi(n);
        std::iota(pi.begin(), pi.end(), std::size_t{1});
        std::swap(pi[0], pi[i - 1]);
        t = permutation_matrix(pi);
        q1 = compose(q, t);
    }
    auto [sat, g] = pivot_saturate(q1, 1);
    t = t * g.matrix;
    LoopPartition u = loop_partition(sat);
    BidirectedGraph bp = partition_graph(u, n);
    require(incidence_form(bp) == sat, ErrorKind::NotTypeC, "partition graph does not reproduce the form");
    IntMatrix rows = unimodular_inverse(t).transpose() * incidence_matrix(bp);
    std::vector<IntVec> rv;
    for (std::size_t k = 0; k < n; ++k) rv.push_back(rows.row(k));
    return graph_from_rows(rv, u.m);
}

}  // namespace

BidirectedGraph realize(const QuadraticForm& q) {
    if (q.n() == 1 && q.diag(1) == 0) return family_l(1, 0, 0);
    FormReport rep = analyze(q);
    require(rep.non_negative, ErrorKind::NotNonNegative, "form is not non-negative");
    require(rep.connected, ErrorKind::InvalidInput, "form is not connected");
    require(rep.irreducible, ErrorKind::InvalidInput, "form is not irreducible");
    Classification c = dynkin_type(q);
    BidirectedGraph b(1);
    if (c.type.family == Family::E)
        fail(ErrorKind::NotIncidenceForm, "forms of Dynkin type " + c.type.name() + " are not incidence forms");
    if (c.type.family == Family::C) {
        b = realize_type_c(q);
    } else {
        auto found = realize_by_search(q, rep.rank + 1);
        if (!found) fail(ErrorKind::NotIncidenceForm, "no incidence rows reproduce the form");
        b = *found;
    }
    if (!(incidence_form(b) == q)) throw std::logic_error("realization does not reproduce the form");
    return b;
}

std::vector<std::size_t> positive_core(const QuadraticForm& q) {
    FormReport rep = analyze(q);
    require(rep.non_negative, ErrorKind::NotNonNegative, "form is not non-negative");
    require(rep.connected, ErrorKind::InvalidInput, "form is not connected");
    std::vector<std::size_t> all(q.n());
    std::iota(all.begin(), all.end(), std::size_t{1});
    if (rep.corank == 0) return all;
    if (!rep.unit && is_type_c_shape(q, rep)) {
        BidirectedGraph b = realize(q);
        std::vector<std::size_t> parent(b.vertices() + 1);
        std::iota(parent.begin(), parent.end(), std::size_t{0});
        std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
            return parent[x] == x ? x : parent[x] = find(parent[x]);
        };
        std::vector<std::size_t> x;
        std::size_t loop = 0;
        for (std::size_t i = 1; i <= b.arrows(); ++i) {
            const Arrow& a = b.arrow(i);
            if (a.is_bidirected_loop()) {
                if (!loop) loop = i;
                continue;
            }
            std::size_t u = find(a.a.vertex), v = find(a.b.vertex);
            if (u == v) continue;
            parent[u] = v;
            x.push_back(i);
        }
        x.push_back(loop);
        std::sort(x.begin(), x.end());
        return x;
    }
    auto x = shrink_to_core(q, rep.rank);
    if (!x) throw std::logic_error("no connected positive restriction of full rank found");
    return *x;
}

}  // namespace iqf
