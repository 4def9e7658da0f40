#include "iqf/bidigraph.hpp"

#include "iqf/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace iqf {

Arrow::Arrow(End x, End y) : a(x), b(y) {
    require((x.sign == 1 || x.sign == -1) && (y.sign == 1 || y.sign == -1), ErrorKind::InvalidInput,
            "endpoint signs must be +1 or -1");
    if (b < a) std::swap(a, b);
}

BidirectedGraph::BidirectedGraph(std::size_t vertices) : m_(vertices) {
    require(vertices >= 1, ErrorKind::InvalidInput, "a graph needs at least one vertex");
}

std::size_t BidirectedGraph::add_arrow(std::size_t u, int e, std::size_t v, int f) {
    require(u >= 1 && u <= m_ && v >= 1 && v <= m_, ErrorKind::InvalidInput, "arrow endpoint out of range");
    arrows_.emplace_back(End{u, e}, End{v, f});
    return arrows_.size();
}

void BidirectedGraph::set_arrow(std::size_t i, const Arrow& a) {
    require(a.a.vertex >= 1 && a.b.vertex <= m_ && a.a.vertex <= m_ && a.b.vertex >= 1, ErrorKind::InvalidInput,
            "arrow endpoint out of range");
    arrows_.at(i - 1) = a;
}

std::string BidirectedGraph::to_text() const {
    std::ostringstream os;
    os << "bidirected graph: " << m_ << " vertices, " << arrows_.size() << " arrows\n";
    for (std::size_t i = 1; i <= arrows_.size(); ++i) {
        const Arrow& ar = arrows_[i - 1];
        auto sgn = [](int s) { return s > 0 ? '+' : '-'; };
        os << "  " << i << ": u" << ar.a.vertex << '(' << sgn(ar.a.sign) << ") -- u" << ar.b.vertex << '('
           << sgn(ar.b.sign) << ")  ";
        if (ar.is_directed_loop())
            os << "directed loop";
        else if (ar.is_bidirected_loop())
            os << (ar.a.sign > 0 ? "two-tail loop" : "two-head loop");
        else if (ar.sigma() == 1) {
            const End& tail = ar.a.sign > 0 ? ar.a : ar.b;
            const End& head = ar.a.sign > 0 ? ar.b : ar.a;
            os << "u" << tail.vertex << " -> u" << head.vertex;
        } else
            os << (ar.a.sign > 0 ? "two-tail" : "two-head");
        os << '\n';
    }
    return os.str();
}

OrthogonalMatrix OrthogonalMatrix::identity(std::size_t m) {
    OrthogonalMatrix o;
    o.signs.assign(m, 1);
    o.perm.resize(m);
    std::iota(o.perm.begin(), o.perm.end(), std::size_t{1});
    return o;
}

IntMatrix OrthogonalMatrix::matrix() const {
    IntMatrix o(signs.size(), signs.size());
    for (std::size_t u = 0; u < signs.size(); ++u) o(u, perm[u] - 1) = signs[u];
    return o;
}

IntMatrix incidence_matrix(const BidirectedGraph& b) {
    IntMatrix m(b.arrows(), b.vertices());
    for (std::size_t i = 1; i <= b.arrows(); ++i) {
        const Arrow& a = b.arrow(i);
        m(i - 1, a.a.vertex - 1) += a.a.sign;
        m(i - 1, a.b.vertex - 1) += a.b.sign;
    }
    return m;
}

QuadraticForm incidence_form(const BidirectedGraph& b) {
    IntMatrix i = incidence_matrix(b);
    return QuadraticForm::from_gram(i * i.transpose());
}

bool is_connected(const BidirectedGraph& b) {
    const std::size_t m = b.vertices();
    std::vector<std::size_t> parent(m + 1);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    std::size_t parts = m;
    for (std::size_t i = 1; i <= b.arrows(); ++i) {
        std::size_t x = find(b.arrow(i).a.vertex), y = find(b.arrow(i).b.vertex);
        if (x != y) {
            parent[x] = y;
            --parts;
        }
    }
    return parts == 1;
}

namespace {

int sign_at(const Arrow& a, std::size_t v) { return a.a.vertex == v ? a.a.sign : a.b.sign; }
std::size_t other_end(const Arrow& a, std::size_t v) { return a.a.vertex == v ? a.b.vertex : a.a.vertex; }

}  // namespace

BalanceResult balance(const BidirectedGraph& b) {
    require(is_connected(b), ErrorKind::InvalidInput, "balance needs a connected graph");
    const std::size_t m = b.vertices(), n = b.arrows();
    std::vector<std::vector<std::size_t>> adj(m + 1);
    for (std::size_t i = 1; i <= n; ++i)
        if (!b.arrow(i).is_loop()) {
            adj[b.arrow(i).a.vertex].push_back(i);
            adj[b.arrow(i).b.vertex].push_back(i);
        }
    std::vector<int> s(m + 1, 0);
    std::vector<std::size_t> parent_arrow(m + 1, 0), depth(m + 1, 0);
    std::vector<bool> tree(n + 1, false);
    std::vector<std::size_t> queue{1};
    s[1] = 1;
    for (std::size_t h = 0; h < queue.size(); ++h) {
        std::size_t u = queue[h];
        for (std::size_t i : adj[u]) {
            std::size_t w = other_end(b.arrow(i), u);
            if (s[w] != 0) continue;
            s[w] = -sign_at(b.arrow(i), u) * sign_at(b.arrow(i), w) * s[u];
            parent_arrow[w] = i;
            depth[w] = depth[u] + 1;
            tree[i] = true;
            queue.push_back(w);
        }
    }

    BalanceResult res;
    for (std::size_t i = 1; i <= n; ++i) {
        const Arrow& a = b.arrow(i);
        if (a.is_bidirected_loop()) {
            Walk w;
            w.start = a.a.vertex;
            w.steps.push_back({i, false});
            w.vertices = {a.a.vertex, a.a.vertex};
            res.witness = w;
            return res;
        }
        if (a.is_loop() || tree[i]) continue;
        std::size_t u = a.a.vertex, v = a.b.vertex;
        if (a.a.sign * s[u] == -a.b.sign * s[v]) continue;
        // Tree path u -> v followed by arrow i back to u.
        std::vector<std::size_t> up_u, up_v;
        std::size_t x = u, y = v;
        while (x != y) {
            if (depth[x] >= depth[y]) {
                up_u.push_back(parent_arrow[x]);
                x = other_end(b.arrow(parent_arrow[x]), x);
            } else {
                up_v.push_back(parent_arrow[y]);
                y = other_end(b.arrow(parent_arrow[y]), y);
            }
        }
        Walk w;
        w.start = u;
        w.vertices.push_back(u);
        std::size_t cur = u;
        auto step = [&](std::size_t arrow) {
            w.steps.push_back({arrow, false});
            cur = other_end(b.arrow(arrow), cur);
            w.vertices.push_back(cur);
        };
        for (std::size_t k : up_u) step(k);
        for (auto it = up_v.rbegin(); it != up_v.rend(); ++it) step(*it);
        step(i);
        res.witness = w;
        return res;
    }
    res.beta = 1;
    OrthogonalMatrix o = OrthogonalMatrix::identity(m);
    for (std::size_t u = 1; u <= m; ++u) o.signs[u - 1] = s[u];
    res.quiver_switch = o;
    return res;
}

RankCorank rank_corank(const BidirectedGraph& b) {
    int beta = balance(b).beta;
    const std::size_t m = b.vertices(), n = b.arrows();
    return {m - beta, n + beta - m};
}

BidirectedGraph graph_gabrielov(const BidirectedGraph& b, std::size_t i, std::size_t j) {
    require(i >= 1 && j >= 1 && i <= b.arrows() && j <= b.arrows() && i != j, ErrorKind::InvalidInput,
            "Gabrielov step needs two distinct arrows");
    const Arrow &ai = b.arrow(i), &aj = b.arrow(j);
    std::size_t v0 = 0;
    for (std::size_t v : {ai.a.vertex, ai.b.vertex})
        if (aj.touches(v) && (v0 == 0 || v < v0)) v0 = v;
    if (v0 == 0) return b;
    const int sig = ai.sigma();
    const std::size_t v1 = other_end(ai, v0);
    BidirectedGraph out = b;
    if (aj.is_loop()) {
        out.set_arrow(j, Arrow({v1, sig * aj.a.sign}, {v1, sig * aj.b.sign}));
        return out;
    }
    const int eta0 = sign_at(aj, v0);
    const std::size_t w1 = other_end(aj, v0);
    const int eta1 = sign_at(aj, w1);
    if (w1 == v1 && v1 != v0)
        out.set_arrow(j, Arrow({v0, sig * eta1}, {v1, sig * eta0}));
    else
        out.set_arrow(j, Arrow({v1, sig * eta0}, {w1, eta1}));
    return out;
}

BidirectedGraph sign_flip(const BidirectedGraph& b, std::size_t i) {
    require(i >= 1 && i <= b.arrows(), ErrorKind::InvalidInput, "arrow index out of range");
    BidirectedGraph out = b;
    const Arrow& a = b.arrow(i);
    out.set_arrow(i, Arrow({a.a.vertex, -a.a.sign}, {a.b.vertex, -a.b.sign}));
    return out;
}

namespace {

void check_permutation(const std::vector<std::size_t>& pi, std::size_t n) {
    require(pi.size() == n, ErrorKind::InvalidInput, "permutation has the wrong length");
    std::vector<bool> seen(n + 1, false);
    for (std::size_t k : pi) {
        require(k >= 1 && k <= n && !seen[k], ErrorKind::InvalidInput, "not a permutation");
        seen[k] = true;
    }
}

}  // namespace

BidirectedGraph permute_arrows(const BidirectedGraph& b, const std::vector<std::size_t>& pi) {
    check_permutation(pi, b.arrows());
    BidirectedGraph out = b;
    for (std::size_t k = 1; k <= pi.size(); ++k) out.set_arrow(k, b.arrow(pi[k - 1]));
    return out;
}

BidirectedGraph endpoint_rewrite(const BidirectedGraph& b, int eps, std::size_t i, std::size_t j) {
    require(i >= 1 && j >= 1 && i <= b.arrows() && j <= b.arrows() && i != j, ErrorKind::InvalidInput,
            "endpoint rewrite needs two distinct arrows");
    require(eps == 1 || eps == -1, ErrorKind::InvalidInput, "rewrite sign must be +-1");
    const Arrow &ai = b.arrow(i), &aj = b.arrow(j);
    BidirectedGraph out = b;
    if (eps == 1 && ai == aj && !ai.is_directed_loop()) {
        std::size_t v = ai.a.vertex;
        if (!ai.is_loop() && ai.b.sign == -1 && ai.a.sign == 1) v = ai.b.vertex;
        out.set_arrow(j, Arrow({v, 1}, {v, -1}));
        return out;
    }
    if (aj.is_bidirected_loop() && !ai.is_loop() && ai.touches(aj.a.vertex)) {
        const std::size_t v = aj.a.vertex, w = other_end(ai, v);
        const int eta = aj.a.sign, ev = sign_at(ai, v), ew = sign_at(ai, w);
        if (ev == -eta && eps == -1) {
            out.set_arrow(j, Arrow({v, eta}, {w, ew}));
            return out;
        }
        if (ev == eta && eps == 1) {
            out.set_arrow(j, Arrow({v, eta}, {w, -ew}));
            return out;
        }
    }
    fail(ErrorKind::InvalidInput, "arrows " + std::to_string(i) + "," + std::to_string(j) +
                                      " do not form a rewritable configuration");
}

BidirectedGraph switching(const BidirectedGraph& b, const OrthogonalMatrix& o) {
    require(o.size() == b.vertices(), ErrorKind::InvalidInput, "switching matrix has the wrong size");
    check_permutation(o.perm, b.vertices());
    BidirectedGraph out = b;
    for (std::size_t i = 1; i <= b.arrows(); ++i) {
        const Arrow& a = b.arrow(i);
        out.set_arrow(i, Arrow({o.perm[a.a.vertex - 1], a.a.sign * o.signs[a.a.vertex - 1]},
                               {o.perm[a.b.vertex - 1], a.b.sign * o.signs[a.b.vertex - 1]}));
    }
    return out;
}

IntMatrix gabrielov_matrix(const QuadraticForm& q, std::size_t i, std::size_t j) {
    require(i >= 1 && j >= 1 && i <= q.n() && j <= q.n() && i != j, ErrorKind::InvalidInput,
            "Gabrielov step needs two distinct indices");
    IntMatrix t = IntMatrix::identity(q.n());
    const Int &qi = q.diag(i), &qij = q.off(i, j);
    if (qi == 0 || qij == 0) return t;
    require(qij % qi == 0, ErrorKind::NotCoxRegular, "q_ij/q_i is not integral");
    t(i - 1, j - 1) = -(qij / qi);
    return t;
}

IntMatrix sign_matrix(std::size_t n, std::size_t i) {
    IntMatrix t = IntMatrix::identity(n);
    t(i - 1, i - 1) = -1;
    return t;
}

IntMatrix permutation_matrix(const std::vector<std::size_t>& pi) {
    check_permutation(pi, pi.size());
    IntMatrix p(pi.size(), pi.size());
    for (std::size_t k = 1; k <= pi.size(); ++k) p(pi[k - 1] - 1, k - 1) = 1;
    return p;
}

IntMatrix rewrite_matrix(std::size_t n, int eps, std::size_t i, std::size_t j) {
    IntMatrix t = IntMatrix::identity(n);
    t(i - 1, j - 1) = -eps;
    return t;
}

Applied apply(const BidirectedGraph& b, const GraphStep& step) {
    const std::size_t n = b.arrows();
    switch (step.kind) {
        case GraphStep::Kind::Gabrielov:
            return {graph_gabrielov(b, step.i, step.j), gabrielov_matrix(incidence_form(b), step.i, step.j)};
        case GraphStep::Kind::Sign:
            return {sign_flip(b, step.i), sign_matrix(n, step.i)};
        case GraphStep::Kind::Permutation:
            return {permute_arrows(b, step.pi), permutation_matrix(step.pi)};
        case GraphStep::Kind::Rewrite:
            return {endpoint_rewrite(b, step.eps, step.i, step.j), rewrite_matrix(n, step.eps, step.i, step.j)};
        case GraphStep::Kind::Switching:
            return {switching(b, step.o), IntMatrix::identity(n)};
    }
    fail(ErrorKind::InvalidInput, "unknown transformation");
}

Bigraph line_bigraph(const BidirectedGraph& b) { return bigraph_of(incidence_form(b)); }

std::optional<OrthogonalMatrix> switching_equivalent(const BidirectedGraph& b, const BidirectedGraph& b2) {
    const std::size_t m = b.vertices(), n = b.arrows();
    if (m != b2.vertices() || n != b2.arrows()) return std::nullopt;
    std::vector<std::size_t> deg(m + 1, 0), deg2(m + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        ++deg[b.arrow(i).a.vertex];
        ++deg[b.arrow(i).b.vertex];
        ++deg2[b2.arrow(i).a.vertex];
        ++deg2[b2.arrow(i).b.vertex];
        if (b.arrow(i).is_loop() != b2.arrow(i).is_loop()) return std::nullopt;
        if (b.arrow(i).is_directed_loop() != b2.arrow(i).is_directed_loop()) return std::nullopt;
    }
    {
        auto d1 = deg, d2 = deg2;
        std::sort(d1.begin(), d1.end());
        std::sort(d2.begin(), d2.end());
        if (d1 != d2) return std::nullopt;
    }
    std::vector<std::size_t> target(m + 1, 0);
    std::vector<int> sgn(m + 1, 0);
    std::vector<bool> used(m + 1, false);

    // Tries to map end x onto end y; records new assignments in `made`.
    auto assign = [&](const End& x, const End& y, std::vector<std::size_t>& made) {
        if (target[x.vertex] != 0) return target[x.vertex] == y.vertex && x.sign * sgn[x.vertex] == y.sign;
        if (used[y.vertex] || deg[x.vertex] != deg2[y.vertex]) return false;
        target[x.vertex] = y.vertex;
        sgn[x.vertex] = x.sign * y.sign;
        used[y.vertex] = true;
        made.push_back(x.vertex);
        return true;
    };
    auto undo = [&](std::vector<std::size_t>& made) {
        for (std::size_t v : made) {
            used[target[v]] = false;
            target[v] = 0;
            sgn[v] = 0;
        }
        made.clear();
    };
    std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
        if (i > n) return true;
        const Arrow &x = b.arrow(i), &y = b2.arrow(i);
        for (int swap = 0; swap < 2; ++swap) {
            const End& ya = swap ? y.b : y.a;
            const End& yb = swap ? y.a : y.b;
            std::vector<std::size_t> made;
            if (assign(x.a, ya, made) && assign(x.b, yb, made) && search(i + 1)) return true;
            undo(made);
        }
        return false;
    };
    if (!search(1)) return std::nullopt;
    OrthogonalMatrix o = OrthogonalMatrix::identity(m);
    std::size_t free_target = 1;
    for (std::size_t u = 1; u <= m; ++u) {
        if (target[u] == 0) {
            while (used[free_target]) ++free_target;
            target[u] = free_target;
            used[free_target] = true;
            sgn[u] = 1;
        }
        o.perm[u - 1] = target[u];
        o.signs[u - 1] = sgn[u];
    }
    return o;
}

BidirectedGraph graph_from_rows(const std::vector<IntVec>& rows, std::size_t m) {
    BidirectedGraph g(m);
    for (const IntVec& r : rows) {
        require(r.size() == m, ErrorKind::InvalidInput, "incidence row has the wrong length");
        std::vector<std::size_t> nz;
        for (std::size_t u = 0; u < m; ++u)
            if (r[u] != 0) nz.push_back(u + 1);
        if (nz.empty())
            g.add_arrow(1, 1, 1, -1);
        else if (nz.size() == 1 && abs(r[nz[0] - 1]) == 2) {
            int s = r[nz[0] - 1] > 0 ? 1 : -1;
            g.add_arrow(nz[0], s, nz[0], s);
        } else if (nz.size() == 2 && abs(r[nz[0] - 1]) == 1 && abs(r[nz[1] - 1]) == 1)
            g.add_arrow(nz[0], r[nz[0] - 1] > 0 ? 1 : -1, nz[1], r[nz[1] - 1] > 0 ? 1 : -1);
        else
            fail(ErrorKind::InvalidInput, "row " + to_string(r) + " is not an incidence row");
    }
    return g;
}

BidirectedGraph family_a(std::size_t r, std::size_t c) {
    require(r >= 1, ErrorKind::InvalidInput, "A_r^c needs r >= 1");
    BidirectedGraph g(r + 1);
    for (std::size_t k = 1; k <= r; ++k) g.add_arrow(k, 1, k + 1, -1);
    for (std::size_t k = 0; k < c; ++k) g.add_arrow(r + 1, 1, 1, -1);
    return g;
}

BidirectedGraph family_d(std::size_t r, std::size_t c) {
    require(r >= 3, ErrorKind::InvalidInput, "D_r^c needs r >= 3");
    BidirectedGraph g(r);
    g.add_arrow(1, -1, 2, -1);
    g.add_arrow(1, 1, 2, -1);
    for (std::size_t k = 3; k <= r; ++k) g.add_arrow(k - 1, 1, k, -1);
    for (std::size_t k = 0; k < c; ++k) g.add_arrow(r - 1, 1, r, 1);
    return g;
}

BidirectedGraph family_c(std::size_t r, std::size_t c1, std::size_t c2) {
    require(r >= 2, ErrorKind::InvalidInput, "C_r^(c1,c2) needs r >= 2");
    BidirectedGraph g(r);
    g.add_arrow(1, -1, 1, -1);
    for (std::size_t k = 2; k <= r; ++k) g.add_arrow(k - 1, 1, k, -1);
    for (std::size_t k = 0; k < c1; ++k) g.add_arrow(r - 1, 1, r, 1);
    for (std::size_t k = 0; k < c2; ++k) g.add_arrow(r, 1, r, 1);
    return g;
}

BidirectedGraph family_l(std::size_t p, std::size_t s, std::size_t t) {
    require(p + s + t >= 1, ErrorKind::InvalidInput, "L^(p,s,t) needs at least one loop");
    BidirectedGraph g(1);
    for (std::size_t k = 0; k < p; ++k) g.add_arrow(1, 1, 1, -1);
    for (std::size_t k = 0; k < s; ++k) g.add_arrow(1, 1, 1, 1);
    for (std::size_t k = 0; k < t; ++k) g.add_arrow(1, -1, 1, -1);
    return g;
}

QuadraticForm form_d(std::size_t r) { return incidence_form(family_d(r, 0)); }
QuadraticForm form_c(std::size_t r) { return incidence_form(family_c(r, 0, 0)); }

}  // namespace iqf
