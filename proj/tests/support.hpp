#pragma once

#include "iqf/bidigraph.hpp"
#include "iqf/classify.hpp"
#include "iqf/gentle.hpp"
#include "iqf/qform.hpp"
#include "iqf/walks.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

namespace testing {

using namespace iqf;

inline int random_sign(std::mt19937& rng) { return rng() % 2 ? 1 : -1; }

// Connected graph: a random spanning tree plus extra arrows (loops allowed).
// The arrow count is raised to m - 1 when needed.
inline BidirectedGraph random_graph(std::mt19937& rng, std::size_t m, std::size_t n, bool loops = true) {
    n = std::max(n, m - 1);
    BidirectedGraph b(m);
    for (std::size_t k = 2; k <= m && b.arrows() < n; ++k)
        b.add_arrow(1 + rng() % (k - 1), random_sign(rng), k, random_sign(rng));
    while (b.arrows() < n) {
        std::size_t u = 1 + rng() % m, v = 1 + rng() % m;
        if (u == v && !loops) continue;
        b.add_arrow(u, random_sign(rng), v, random_sign(rng));
    }
    return b;
}

// q(x) from the rows of the incidence matrix: half the squared norm of I^t x.
inline Int incidence_value(const BidirectedGraph& b, const IntVec& x) {
    IntVec y = zero_vec(b.vertices());
    for (std::size_t i = 1; i <= b.arrows(); ++i) {
        const Arrow& a = b.arrow(i);
        y[a.a.vertex - 1] += a.a.sign * x[i - 1];
        y[a.b.vertex - 1] += a.b.sign * x[i - 1];
    }
    return dot(y, y) / 2;
}

// Direct evaluation of the polynomial sum q_i x_i^2 + sum q_ij x_i x_j.
inline Int polynomial_value(const QuadraticForm& q, const IntVec& x) {
    Int s = 0;
    for (std::size_t i = 1; i <= q.n(); ++i) {
        s += q.diag(i) * x[i - 1] * x[i - 1];
        for (std::size_t j = i + 1; j <= q.n(); ++j) s += q.off(i, j) * x[i - 1] * x[j - 1];
    }
    return s;
}

inline IntVec random_vec(std::mt19937& rng, std::size_t n, int range) {
    IntVec x(n);
    for (auto& c : x) c = static_cast<long long>(rng() % (2 * range + 1)) - range;
    return x;
}

// Every vector of the box |x_i| <= bound with q(x) = d, by plain counting.
inline std::vector<IntVec> naive_roots(const QuadraticForm& q, long long d, long long bound) {
    const std::size_t n = q.n();
    std::vector<IntVec> out;
    IntVec x(n, Int(-bound));
    for (;;) {
        if (polynomial_value(q, x) == d) out.push_back(x);
        std::size_t k = 0;
        while (k < n && x[k] == bound) x[k++] = -bound;
        if (k == n) break;
        ++x[k];
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Random walk of at most len steps, starting at start (random when 0).
inline Walk random_walk(std::mt19937& rng, const BidirectedGraph& b, std::size_t len, std::size_t start = 0) {
    Walk w;
    w.start = start ? start : 1 + rng() % b.vertices();
    std::size_t at = w.start;
    for (std::size_t k = 0; k < len; ++k) {
        std::vector<WalkStep> options;
        for (std::size_t i = 1; i <= b.arrows(); ++i) {
            const Arrow& a = b.arrow(i);
            if (!a.touches(at)) continue;
            options.push_back({i, false});
            if (a.is_directed_loop()) options.push_back({i, true});
        }
        if (options.empty()) break;
        WalkStep s = options[rng() % options.size()];
        w.steps.push_back(s);
        const Arrow& a = b.arrow(s.arrow);
        at = a.a.vertex == at ? a.b.vertex : a.a.vertex;
    }
    trace(b, w);
    return w;
}

inline std::vector<std::size_t> random_permutation(std::mt19937& rng, std::size_t n) {
    std::vector<std::size_t> pi(n);
    std::iota(pi.begin(), pi.end(), std::size_t{1});
    std::shuffle(pi.begin(), pi.end(), rng);
    return pi;
}

// Random elementary graph transformation; apply() may reject it.
inline GraphStep random_step(std::mt19937& rng, const BidirectedGraph& b) {
    const std::size_t n = b.arrows();
    GraphStep s{GraphStep::Kind::Sign};
    switch (rng() % 5) {
        case 0: s.kind = GraphStep::Kind::Sign; s.i = 1 + rng() % n; break;
        case 1: s.kind = GraphStep::Kind::Permutation; s.pi = random_permutation(rng, n); break;
        case 2:
            s.kind = GraphStep::Kind::Rewrite;
            s.i = 1 + rng() % n;
            s.j = 1 + rng() % n;
            s.eps = random_sign(rng);
            break;
        case 3: {
            s.kind = GraphStep::Kind::Switching;
            s.o = OrthogonalMatrix::identity(b.vertices());
            for (auto& e : s.o.signs) e = random_sign(rng);
            s.o.perm = random_permutation(rng, b.vertices());
            break;
        }
        default: s.kind = GraphStep::Kind::Gabrielov; s.i = 1 + rng() % n; s.j = 1 + rng() % n;
    }
    return s;
}

// Random product of elementary Gabrielov steps, sign flips and a permutation.
inline std::pair<QuadraticForm, GTransform> random_g_transform(std::mt19937& rng, const QuadraticForm& q, int steps) {
    QuadraticForm cur = q;
    GTransform t = GTransform::identity(q.n());
    for (int k = 0; k < steps; ++k) {
        const std::size_t n = q.n();
        if (n >= 2 && rng() % 3) {
            std::size_t i = 1 + rng() % n, j = 1 + rng() % n;
            if (i == j || cur.diag(i) == 0 || cur.off(i, j) == 0 || cur.off(i, j) % cur.diag(i) != 0) continue;
            auto [next, g] = gabrielov(cur, i, j);
            cur = next;
            t.push(g.steps[0], g.matrix);
        } else {
            std::size_t i = 1 + rng() % n;
            IntMatrix s = sign_matrix(n, i);
            cur = compose(cur, s);
            t.push({GStep::Kind::Sign, i, 0, {}}, s);
        }
    }
    auto pi = random_permutation(rng, q.n());
    IntMatrix p = permutation_matrix(pi);
    cur = compose(cur, p);
    t.push({GStep::Kind::Permutation, 0, 0, pi}, p);
    return {cur, t};
}

// Random gentle presentation: random arrows respecting the degree bounds,
// then relations paired at every vertex, rejecting invalid candidates.
inline GentlePresentation random_gentle(std::mt19937& rng, std::size_t max_vertices) {
    for (;;) {
        GentlePresentation p;
        p.vertices = 1 + rng() % max_vertices;
        std::vector<std::size_t> in(p.vertices + 1, 0), out(p.vertices + 1, 0);
        for (std::size_t w = 2; w <= p.vertices; ++w) {
            std::size_t u = 1 + rng() % (w - 1), v = w;
            if (rng() % 2) std::swap(u, v);
            if (out[u] < 2 && in[v] < 2) {
                p.arrows.push_back({"a" + std::to_string(p.arrows.size() + 1), u, v});
                ++out[u];
                ++in[v];
            }
        }
        const std::size_t extra = rng() % (p.vertices + 1);
        for (std::size_t k = 0; k < extra; ++k) {
            std::size_t u = 1 + rng() % p.vertices, v = 1 + rng() % p.vertices;
            if (u == v || out[u] >= 2 || in[v] >= 2) continue;
            p.arrows.push_back({"a" + std::to_string(p.arrows.size() + 1), u, v});
            ++out[u];
            ++in[v];
        }
        for (std::size_t v = 1; v <= p.vertices; ++v) {
            std::vector<std::size_t> ins, outs;
            for (std::size_t a = 0; a < p.arrows.size(); ++a) {
                if (p.arrows[a].tgt == v) ins.push_back(a);
                if (p.arrows[a].src == v) outs.push_back(a);
            }
            auto rel = [&](std::size_t a, std::size_t b) { p.relations.emplace_back(p.arrows[a].name, p.arrows[b].name); };
            if (ins.size() == 2 && outs.size() == 2) {
                const std::size_t f = rng() % 2;
                rel(ins[0], outs[f]);
                rel(ins[1], outs[1 - f]);
            } else if (ins.size() == 1 && outs.size() == 2) {
                rel(ins[0], outs[rng() % 2]);
            } else if (ins.size() == 2 && outs.size() == 1) {
                rel(ins[rng() % 2], outs[0]);
            } else if (ins.size() == 1 && outs.size() == 1 && rng() % 2) {
                rel(ins[0], outs[0]);
            }
        }
        if (validate(p).ok()) return p;
    }
}

}  // namespace testing
