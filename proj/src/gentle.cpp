#include "iqf/gentle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>

namespace iqf {

std::size_t GentlePresentation::arrow_index(const std::string& name) const {
    for (std::size_t a = 0; a < arrows.size(); ++a)
        if (arrows[a].name == name) return a;
    fail(ErrorKind::InvalidInput, "unknown arrow name '" + name + "'");
}

bool GentlePresentation::related(std::size_t a, std::size_t b) const {
    for (const auto& [x, y] : relations)
        if (x == arrows[a].name && y == arrows[b].name) return true;
    return false;
}

std::string Thread::label(const GentlePresentation& p) const {
    if (trivial()) return "1_" + std::to_string(start());
    std::string s;
    for (std::size_t a : arrows) s += p.arrows[a].name;
    return s;
}

IntVec floor_vector(const Thread& t, std::size_t n) {
    IntVec v = zero_vec(n);
    int s = 1;
    for (std::size_t u : t.vertices) {
        v[u - 1] += s;
        s = -s;
    }
    return v;
}

IntVec ceil_vector(const Thread& t, std::size_t n) {
    IntVec v = zero_vec(n);
    for (std::size_t u : t.vertices) v[u - 1] += 1;
    return v;
}

namespace {

constexpr std::size_t none = static_cast<std::size_t>(-1);

struct Successors {
    std::vector<std::size_t> permitted, related;  // per arrow, or none
};

Successors successors(const GentlePresentation& p) {
    const std::size_t n = p.arrows.size();
    Successors s{std::vector<std::size_t>(n, none), std::vector<std::size_t>(n, none)};
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (p.arrows[a].tgt != p.arrows[b].src) continue;
            auto& slot = p.related(a, b) ? s.related[a] : s.permitted[a];
            if (slot == none) slot = b;
        }
    return s;
}

bool has_cycle(const std::vector<std::size_t>& next) {
    for (std::size_t a = 0; a < next.size(); ++a) {
        std::size_t x = next[a];
        for (std::size_t k = 0; k < next.size() && x != none; ++k) {
            if (x == a) return true;
            x = next[x];
        }
    }
    return false;
}

std::vector<Thread> chains(const GentlePresentation& p, const std::vector<std::size_t>& next, Thread::Kind kind) {
    const std::size_t n = p.arrows.size();
    std::vector<bool> has_pred(n, false), covered(n, false);
    for (std::size_t a = 0; a < n; ++a)
        if (next[a] != none) has_pred[next[a]] = true;
    std::vector<Thread> out;
    for (std::size_t a = 0; a < n; ++a) {
        if (has_pred[a]) continue;
        Thread t{kind, {}, {p.arrows[a].src}};
        for (std::size_t x = a; x != none; x = next[x]) {
            t.arrows.push_back(x);
            t.vertices.push_back(p.arrows[x].tgt);
            covered[x] = true;
        }
        out.push_back(std::move(t));
    }
    if (std::find(covered.begin(), covered.end(), false) != covered.end()) {
        if (kind == Thread::Kind::Permitted) fail(ErrorKind::InfiniteDimensional, "permitted cycle in the quiver");
        fail(ErrorKind::InfiniteGlobalDimensionSuspected, "cycle of relations in the quiver");
    }
    return out;
}

void structural_checks(const GentlePresentation& p, Diagnostics& d) {
    auto add = [&](ErrorKind k, std::string msg) { d.problems.push_back({k, std::move(msg)}); };
    const std::size_t m = p.vertices, n = p.arrows.size();
    if (m == 0) add(ErrorKind::InvalidInput, "quiver has no vertices");
    std::set<std::string> names;
    for (const QuiverArrow& a : p.arrows) {
        if (a.src < 1 || a.src > m || a.tgt < 1 || a.tgt > m)
            add(ErrorKind::InvalidInput, "arrow " + a.name + " has an endpoint out of range");
        else if (a.src == a.tgt)
            add(ErrorKind::GentlenessViolation, "arrow " + a.name + " is a loop");
        if (!names.insert(a.name).second) add(ErrorKind::InvalidInput, "duplicate arrow name " + a.name);
    }
    if (!d.ok()) return;
    for (const auto& [x, y] : p.relations) {
        if (!names.count(x) || !names.count(y)) {
            add(ErrorKind::InvalidInput, "relation " + x + y + " uses an unknown arrow");
            continue;
        }
        if (p.arrows[p.arrow_index(x)].tgt != p.arrows[p.arrow_index(y)].src)
            add(ErrorKind::GentlenessViolation, "relation " + x + y + " is not a composable path");
    }
    std::vector<std::size_t> indeg(m + 1, 0), outdeg(m + 1, 0);
    for (const QuiverArrow& a : p.arrows) {
        ++outdeg[a.src];
        ++indeg[a.tgt];
    }
    for (std::size_t v = 1; v <= m; ++v) {
        if (outdeg[v] > 2) add(ErrorKind::GentlenessViolation, "vertex " + std::to_string(v) + " has outdegree above 2");
        if (indeg[v] > 2) add(ErrorKind::GentlenessViolation, "vertex " + std::to_string(v) + " has indegree above 2");
    }
    for (std::size_t a = 0; a < n; ++a) {
        std::size_t rel_after = 0, free_after = 0, rel_before = 0, free_before = 0;
        for (std::size_t b = 0; b < n; ++b) {
            if (p.arrows[a].tgt == p.arrows[b].src) ++(p.related(a, b) ? rel_after : free_after);
            if (p.arrows[b].tgt == p.arrows[a].src) ++(p.related(b, a) ? rel_before : free_before);
        }
        const std::string& nm = p.arrows[a].name;
        if (rel_after > 1) add(ErrorKind::GentlenessViolation, "arrow " + nm + " starts two relations");
        if (rel_before > 1) add(ErrorKind::GentlenessViolation, "arrow " + nm + " ends two relations");
        if (free_after > 1) add(ErrorKind::GentlenessViolation, "arrow " + nm + " has two permitted successors");
        if (free_before > 1) add(ErrorKind::GentlenessViolation, "arrow " + nm + " has two permitted predecessors");
    }
    std::vector<std::size_t> comp(m + 1);
    for (std::size_t v = 0; v <= m; ++v) comp[v] = v;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
    for (const QuiverArrow& a : p.arrows) comp[find(a.src)] = find(a.tgt);
    for (std::size_t v = 2; v <= m; ++v)
        if (find(v) != find(1)) {
            add(ErrorKind::GentlenessViolation, "quiver is not connected");
            break;
        }
}

IntMatrix cartan_unchecked(const GentlePresentation& p, const Successors& s) {
    const std::size_t m = p.vertices, n = p.arrows.size();
    IntMatrix c(m, m);
    for (std::size_t i = 1; i <= m; ++i) {
        c(i - 1, i - 1) += 1;
        for (std::size_t a = 0; a < n; ++a) {
            if (p.arrows[a].src != i) continue;
            std::size_t len = 0;
            for (std::size_t x = a; x != none; x = s.permitted[x]) {
                require(++len <= n, ErrorKind::InfiniteDimensional, "permitted cycle in the quiver");
                c(p.arrows[x].tgt - 1, i - 1) += 1;
            }
        }
    }
    return c;
}

}  // namespace

Diagnostics validate(const GentlePresentation& p) {
    Diagnostics d;
    structural_checks(p, d);
    if (!d.ok()) return d;
    Successors s = successors(p);
    if (has_cycle(s.permitted)) d.problems.push_back({ErrorKind::InfiniteDimensional, "permitted cycle in the quiver"});
    if (has_cycle(s.related))
        d.problems.push_back({ErrorKind::InfiniteGlobalDimensionSuspected, "cycle of relations in the quiver"});
    if (!d.ok()) return d;
    if (!is_unimodular(cartan_unchecked(p, s)))
        d.problems.push_back({ErrorKind::InfiniteGlobalDimensionSuspected, "Cartan matrix is not unimodular"});
    return d;
}

void require_gentle(const GentlePresentation& p) {
    Diagnostics d = validate(p);
    if (!d.ok()) fail(d.problems.front().kind, d.problems.front().message);
}

IntMatrix cartan(const GentlePresentation& p) {
    Diagnostics d;
    structural_checks(p, d);
    if (!d.ok()) fail(d.problems.front().kind, d.problems.front().message);
    return cartan_unchecked(p, successors(p));
}

Threads threads(const GentlePresentation& p) {
    require_gentle(p);
    const std::size_t m = p.vertices;
    Successors s = successors(p);
    Threads th;
    th.permitted = chains(p, s.permitted, Thread::Kind::Permitted);
    th.forbidden = chains(p, s.related, Thread::Kind::Forbidden);
    for (std::size_t v = 1; v <= m; ++v) {
        std::vector<std::size_t> in, out;
        for (std::size_t a = 0; a < p.arrows.size(); ++a) {
            if (p.arrows[a].tgt == v) in.push_back(a);
            if (p.arrows[a].src == v) out.push_back(a);
        }
        if (in.size() > 1 || out.size() > 1) continue;
        Thread pt{Thread::Kind::Permitted, {}, {v}}, ft{Thread::Kind::Forbidden, {}, {v}};
        if (in.empty() && out.empty()) {
            th.permitted.insert(th.permitted.end(), 2, pt);
            th.forbidden.insert(th.forbidden.end(), 2, ft);
        } else if (in.empty() || out.empty()) {
            th.permitted.push_back(pt);
            th.forbidden.push_back(ft);
        } else if (p.related(in[0], out[0])) {
            th.forbidden.push_back(ft);
        } else {
            th.permitted.push_back(pt);
        }
    }
    for (const auto* list : {&th.permitted, &th.forbidden}) {
        std::vector<std::size_t> count(m + 1, 0);
        for (const Thread& t : *list)
            for (std::size_t u : t.vertices) ++count[u];
        for (std::size_t v = 1; v <= m; ++v)
            require(count[v] == 2, ErrorKind::InfiniteGlobalDimensionSuspected,
                    "vertex " + std::to_string(v) + " occurs " + std::to_string(count[v]) + " times among threads");
    }
    require(th.permitted.size() == th.forbidden.size(), ErrorKind::AmbiguousMatching,
            "different numbers of permitted and forbidden threads");
    IntMatrix c = cartan_unchecked(p, s);
    std::vector<bool> used(th.permitted.size(), false);
    for (const Thread& f : th.forbidden) {
        const IntVec target = c * floor_vector(f, m);
        std::size_t pick = none;
        for (std::size_t k = 0; k < th.permitted.size() && pick == none; ++k)
            if (!used[k] && th.permitted[k].start() == f.start() && ceil_vector(th.permitted[k], m) == target) pick = k;
        require(pick != none, ErrorKind::AmbiguousMatching, "no permitted thread matches " + f.label(p));
        used[pick] = true;
        th.phi.push_back(pick);
    }
    return th;
}

EulerData euler_pipeline(const GentlePresentation& p) {
    EulerData e;
    e.threads = threads(p);
    const std::size_t n = p.vertices, m = e.threads.forbidden.size();
    e.cartan = cartan(p);
    require(is_unimodular(e.cartan), ErrorKind::InconsistentPresentation, "Cartan matrix is not invertible over Z");
    IntMatrix inv = unimodular_inverse(e.cartan);
    IntMatrix g = inv;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) += inv(j, i);
    for (std::size_t i = 0; i < n; ++i)
        require(g(i, i) % 2 == 0, ErrorKind::InconsistentPresentation, "Euler form is not integral");
    e.q = QuadraticForm::from_gram(g);
    e.incidence = IntMatrix(n, m);
    for (std::size_t u = 0; u < m; ++u) {
        IntVec col = floor_vector(e.threads.forbidden[u], n);
        for (std::size_t i = 0; i < n; ++i) e.incidence(i, u) = col[i];
    }
    require(e.incidence * e.incidence.transpose() == g, ErrorKind::InconsistentPresentation,
            "C^-1 + C^-t differs from I I^t");
    std::vector<IntVec> rows;
    for (std::size_t i = 0; i < n; ++i) {
        IntVec r = e.incidence.row(i);
        const Int norm = dot(r, r);
        require(norm == 0 || norm == 2 || norm == 4, ErrorKind::InconsistentPresentation,
                "row " + std::to_string(i + 1) + " of I is not an incidence row");
        rows.push_back(r);
    }
    e.graph = graph_from_rows(rows, m);

    std::vector<bool> seen(n + 1, false);
    for (std::size_t s0 = 1; s0 <= n; ++s0) {
        if (seen[s0]) continue;
        std::vector<std::size_t> comp{s0};
        seen[s0] = true;
        for (std::size_t h = 0; h < comp.size(); ++h)
            for (std::size_t j = 1; j <= n; ++j)
                if (!seen[j] && e.q.off(comp[h], j) != 0) {
                    seen[j] = true;
                    comp.push_back(j);
                }
        std::sort(comp.begin(), comp.end());
        QuadraticForm part = restrict(e.q, comp);
        if (analyze(part).irreducible)
            e.dynkin.push_back(dynkin_type(part));
        else
            e.dynkin.push_back(std::nullopt);
        e.components.push_back(std::move(comp));
    }
    return e;
}

}  // namespace iqf
