#include "iqf/walks.hpp"

#include "iqf/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace iqf {

namespace {

std::size_t other_end(const Arrow& a, std::size_t v) { return a.a.vertex == v ? a.b.vertex : a.a.vertex; }

// Sign d(v, i) of a step leaving v along arrow i.
int departure_sign(const Arrow& a, std::size_t v, bool inverse) {
    if (a.is_directed_loop()) return inverse ? -1 : 1;
    return a.a.vertex == v ? a.a.sign : a.b.sign;
}

}  // namespace

void trace(const BidirectedGraph& b, Walk& w) {
    require(w.start >= 1 && w.start <= b.vertices(), ErrorKind::InvalidInput, "walk start out of range");
    w.vertices.assign(1, w.start);
    std::size_t v = w.start;
    for (const WalkStep& s : w.steps) {
        require(s.arrow >= 1 && s.arrow <= b.arrows(), ErrorKind::InvalidInput, "walk arrow out of range");
        const Arrow& a = b.arrow(s.arrow);
        require(a.touches(v), ErrorKind::InvalidInput,
                "arrow " + std::to_string(s.arrow) + " is not incident to vertex " + std::to_string(v));
        require(!s.inverse || a.is_directed_loop(), ErrorKind::InvalidInput,
                "only directed loops have formal inverses");
        v = other_end(a, v);
        w.vertices.push_back(v);
    }
}

Walk make_walk(const BidirectedGraph& b, std::size_t start, std::vector<WalkStep> steps) {
    Walk w;
    w.start = start;
    w.steps = std::move(steps);
    trace(b, w);
    return w;
}

std::size_t walk_end(const Walk& w) { return w.vertices.empty() ? w.start : w.vertices.back(); }

int walk_sign(const BidirectedGraph& b, const Walk& w) {
    int s = 1;
    for (const WalkStep& st : w.steps) s *= b.arrow(st.arrow).sigma();
    return s;
}

IntVec inc(const BidirectedGraph& b, const Walk& w0) {
    Walk w = w0;
    trace(b, w);
    IntVec x(b.arrows());
    int sigma = 1;
    for (std::size_t k = 0; k < w.steps.size(); ++k) {
        const WalkStep& s = w.steps[k];
        const Arrow& a = b.arrow(s.arrow);
        x[s.arrow - 1] += sigma * departure_sign(a, w.vertices[k], s.inverse);
        sigma *= a.sigma();
    }
    return x;
}

Walk compose(const BidirectedGraph& b, const Walk& w1, const Walk& w2) {
    Walk a = w1, c = w2;
    trace(b, a);
    trace(b, c);
    require(walk_end(a) == c.start, ErrorKind::InvalidInput, "walks are not composable");
    a.steps.insert(a.steps.end(), c.steps.begin(), c.steps.end());
    trace(b, a);
    return a;
}

Walk inverse(const BidirectedGraph& b, const Walk& w0) {
    Walk w = w0;
    trace(b, w);
    Walk r;
    r.start = walk_end(w);
    for (auto it = w.steps.rbegin(); it != w.steps.rend(); ++it) {
        WalkStep s = *it;
        if (b.arrow(s.arrow).is_directed_loop()) s.inverse = !s.inverse;
        r.steps.push_back(s);
    }
    trace(b, r);
    return r;
}

Walk reduce(const BidirectedGraph& b, const Walk& w0) {
    Walk w = w0;
    trace(b, w);
    std::vector<WalkStep> stack;
    for (const WalkStep& s : w.steps) {
        if (!stack.empty() && stack.back().arrow == s.arrow) {
            const Arrow& a = b.arrow(s.arrow);
            bool cancels = a.is_directed_loop() ? stack.back().inverse != s.inverse : true;
            if (cancels) {
                stack.pop_back();
                continue;
            }
        }
        stack.push_back(s);
    }
    return make_walk(b, w.start, stack);
}

Walk power(const BidirectedGraph& b, const Walk& w, std::size_t k) {
    Walk r = make_walk(b, w.start, {});
    for (std::size_t t = 0; t < k; ++t) r = compose(b, r, w);
    return r;
}

std::string format_walk(const Walk& w) {
    std::ostringstream os;
    os << w.start;
    for (std::size_t k = 0; k < w.steps.size(); ++k) {
        os << ' ' << w.steps[k].arrow << (w.steps[k].inverse ? "^-1" : "");
        os << ' ' << (k + 1 < w.vertices.size() ? w.vertices[k + 1] : 0);
    }
    return os.str();
}

Walk parse_walk(const BidirectedGraph& b, const std::string& text) {
    std::istringstream is(text);
    std::vector<std::string> tok;
    for (std::string t; is >> t;) tok.push_back(t);
    require(!tok.empty() && tok.size() % 2 == 1, ErrorKind::InvalidInput, "walk text must alternate vertices and arrows");
    auto number = [](const std::string& s) {
        require(!s.empty() && std::all_of(s.begin(), s.end(), ::isdigit), ErrorKind::InvalidInput, "bad walk token '" + s + "'");
        return static_cast<std::size_t>(std::stoull(s));
    };
    Walk w;
    w.start = number(tok[0]);
    std::vector<std::size_t> expected{w.start};
    for (std::size_t k = 1; k < tok.size(); k += 2) {
        std::string a = tok[k];
        bool inv = false;
        if (a.size() > 3 && a.compare(a.size() - 3, 3, "^-1") == 0) {
            inv = true;
            a.resize(a.size() - 3);
        }
        w.steps.push_back({number(a), inv});
        expected.push_back(number(tok[k + 1]));
    }
    trace(b, w);
    require(w.vertices == expected, ErrorKind::InvalidInput, "walk vertices do not match its arrows");
    return w;
}

RootSet walk_roots(const BidirectedGraph& b, int d, std::size_t length_cap, long long box) {
    require(d >= 0 && d <= 2, ErrorKind::InvalidInput, "walk roots exist for d in {0,1,2}");
    require(is_connected(b), ErrorKind::InvalidInput, "walk roots need a connected graph");
    const std::size_t m = b.vertices(), n = b.arrows();

    struct Move {
        std::size_t arrow, to;
        int delta, sigma;
    };
    std::vector<std::vector<Move>> moves(m + 1);
    for (std::size_t i = 1; i <= n; ++i) {
        const Arrow& a = b.arrow(i);
        if (a.is_directed_loop()) {
            moves[a.a.vertex].push_back({i, a.a.vertex, 1, 1});
            moves[a.a.vertex].push_back({i, a.a.vertex, -1, 1});
        } else if (a.is_loop()) {
            moves[a.a.vertex].push_back({i, a.a.vertex, a.a.sign, a.sigma()});
        } else {
            moves[a.a.vertex].push_back({i, a.b.vertex, a.a.sign, a.sigma()});
            moves[a.b.vertex].push_back({i, a.a.vertex, a.b.sign, a.sigma()});
        }
    }

    RootSet rs;
    rs.d = d;
    using State = std::pair<std::size_t, int>;
    for (std::size_t s = 1; s <= m; ++s) {
        // Per (vertex, sign) class, the set of reached inc vectors.
        std::map<State, std::set<std::vector<long long>>> seen;
        std::vector<std::pair<State, std::vector<long long>>> frontier{{{s, 1}, std::vector<long long>(n, 0)}};
        seen[{s, 1}].insert(frontier[0].second);
        for (std::size_t len = 0; len < length_cap && !frontier.empty(); ++len) {
            std::vector<std::pair<State, std::vector<long long>>> next;
            for (const auto& [st, x] : frontier)
                for (const Move& mv : moves[st.first]) {
                    std::vector<long long> y = x;
                    y[mv.arrow - 1] += st.second * mv.delta;
                    if (box > 0 && std::llabs(y[mv.arrow - 1]) > box) continue;
                    State ns{mv.to, st.second * mv.sigma};
                    if (seen[ns].insert(y).second) next.emplace_back(ns, std::move(y));
                }
            frontier = std::move(next);
        }
        auto collect = [&](const State& st) {
            auto it = seen.find(st);
            if (it == seen.end()) return;
            for (const auto& x : it->second) {
                IntVec v(x.begin(), x.end()), w(n);
                for (std::size_t k = 0; k < n; ++k) w[k] = -v[k];
                rs.vectors.push_back(std::move(v));
                rs.vectors.push_back(std::move(w));
            }
        };
        if (d == 0) collect({s, 1});
        if (d == 2) collect({s, -1});
        if (d == 1)
            for (std::size_t v = 1; v <= m; ++v)
                if (v != s) {
                    collect({v, 1});
                    collect({v, -1});
                }
    }
    normalize(rs);
    return rs;
}

BoxedRoots boxed_walk_roots(const BidirectedGraph& b, int d, long long bound, long long margin) {
    require(bound > 0, ErrorKind::InvalidInput, "box bound must be positive");
    const std::size_t n = b.arrows();
    const std::size_t hard = std::max<std::size_t>(4 * n * static_cast<std::size_t>(bound), 2);
    std::optional<RootSet> target;
    if (d != 2) target = brute_force_roots(incidence_form(b), d, bound);
    BoxedRoots out;
    for (std::size_t cap = std::min(n + 1, hard);; cap = std::min(2 * cap, hard)) {
        RootSet all = walk_roots(b, d, cap, bound + margin);
        out.roots = RootSet{d, {}};
        for (IntVec& x : all.vectors)
            if (std::all_of(x.begin(), x.end(), [&](const Int& c) { return abs(c) <= bound; }))
                out.roots.vectors.push_back(std::move(x));
        out.length_cap = cap;
        out.complete = target && out.roots.vectors == target->vectors;
        if (out.complete || cap == hard) return out;
    }
}

namespace {

// Parent arrows of a BFS tree rooted at `root`.
std::vector<std::size_t> bfs_parents(const BidirectedGraph& b, std::size_t root) {
    std::vector<std::size_t> parent(b.vertices() + 1, 0);
    std::vector<bool> seen(b.vertices() + 1, false);
    std::vector<std::size_t> queue{root};
    seen[root] = true;
    for (std::size_t h = 0; h < queue.size(); ++h) {
        std::size_t u = queue[h];
        for (std::size_t i = 1; i <= b.arrows(); ++i) {
            const Arrow& a = b.arrow(i);
            if (a.is_loop() || !a.touches(u)) continue;
            std::size_t w = other_end(a, u);
            if (seen[w]) continue;
            seen[w] = true;
            parent[w] = i;
            queue.push_back(w);
        }
    }
    return parent;
}

// Walk from s to the BFS root along parent arrows.
Walk walk_to_root(const BidirectedGraph& b, const std::vector<std::size_t>& parent, std::size_t s) {
    Walk w;
    w.start = s;
    std::size_t v = s;
    while (parent[v] != 0) {
        w.steps.push_back({parent[v], false});
        v = other_end(b.arrow(parent[v]), v);
    }
    trace(b, w);
    return w;
}

}  // namespace

PositiveRoots roots_positive(const BidirectedGraph& b) {
    require(is_connected(b), ErrorKind::NotPositive, "graph is not connected");
    const std::size_t m = b.vertices(), n = b.arrows();
    RankCorank rc = rank_corank(b);
    require(rc.corank == 0, ErrorKind::NotPositive, "incidence form has positive corank");
    QuadraticForm q = incidence_form(b);

    PositiveRoots out;
    std::set<IntVec> acc;
    acc.insert(IntVec(n));
    auto add = [&](const IntVec& x) {
        IntVec y(n);
        for (std::size_t k = 0; k < n; ++k) y[k] = -x[k];
        acc.insert(x);
        acc.insert(y);
    };

    if (n + 1 == m) {
        out.tree = true;
        for (std::size_t t = 1; t <= m; ++t) {
            auto parent = bfs_parents(b, t);
            for (std::size_t s = 1; s < t; ++s) add(inc(b, walk_to_root(b, parent, s)));
        }
    } else {
        // Locate the unique cycle by pruning leaves.
        std::vector<std::size_t> deg(m + 1, 0);
        for (std::size_t i = 1; i <= n; ++i) {
            ++deg[b.arrow(i).a.vertex];
            ++deg[b.arrow(i).b.vertex];
        }
        std::vector<bool> removed(m + 1, false);
        for (bool changed = true; changed;) {
            changed = false;
            for (std::size_t v = 1; v <= m; ++v)
                if (!removed[v] && deg[v] == 1) {
                    removed[v] = true;
                    changed = true;
                    for (std::size_t i = 1; i <= n; ++i) {
                        const Arrow& a = b.arrow(i);
                        if (a.touches(v) && !a.is_loop()) --deg[other_end(a, v)];
                    }
                    deg[v] = 0;
                }
        }
        std::size_t v0 = 0;
        for (std::size_t v = 1; v <= m && !v0; ++v)
            if (!removed[v]) v0 = v;
        std::vector<bool> on_cycle(n + 1, false);
        for (std::size_t i = 1; i <= n; ++i)
            on_cycle[i] = !removed[b.arrow(i).a.vertex] && !removed[b.arrow(i).b.vertex];
        Walk cyc;
        cyc.start = v0;
        std::size_t v = v0;
        do {
            std::size_t pick = 0;
            for (std::size_t i = 1; i <= n && !pick; ++i)
                if (on_cycle[i] && b.arrow(i).touches(v)) pick = i;
            on_cycle[pick] = false;
            cyc.steps.push_back({pick, false});
            v = other_end(b.arrow(pick), v);
        } while (v != v0);
        trace(b, cyc);

        auto parent = bfs_parents(b, v0);
        std::vector<Walk> to_cycle(m + 1);
        for (std::size_t s = 1; s <= m; ++s) to_cycle[s] = walk_to_root(b, parent, s);
        for (std::size_t s = 1; s <= m; ++s)
            for (std::size_t t = s; t <= m; ++t) {
                Walk back = inverse(b, to_cycle[t]);
                add(inc(b, compose(b, compose(b, to_cycle[s], cyc), back)));
                if (s != t) add(inc(b, compose(b, to_cycle[s], back)));
            }
    }
    out.roots.assign(acc.begin(), acc.end());
    for (const IntVec& x : out.roots) {
        Int v = q.evaluate(x);
        if (v == 1) ++out.value_one;
        if (v == 2) ++out.value_two;
    }
    return out;
}

}  // namespace iqf
