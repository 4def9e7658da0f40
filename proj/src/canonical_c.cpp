#include "iqf/classify.hpp"
#include "iqf/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace iqf {

namespace {

// Graph together with the accumulated transformation, q_B = q o T.
struct State {
    BidirectedGraph b;
    GTransform t;
};

void step_gabrielov(State& s, std::size_t i, std::size_t j) {
    IntMatrix m = gabrielov_matrix(incidence_form(s.b), i, j);
    s.b = graph_gabrielov(s.b, i, j);
    s.t.push({GStep::Kind::Gabrielov, i, j, {}}, m);
}

void step_sign(State& s, std::size_t i) {
    s.b = sign_flip(s.b, i);
    s.t.push({GStep::Kind::Sign, i, 0, {}}, sign_matrix(s.b.arrows(), i));
}

void step_permute(State& s, const std::vector<std::size_t>& pi) {
    s.b = permute_arrows(s.b, pi);
    s.t.push({GStep::Kind::Permutation, 0, 0, pi}, permutation_matrix(pi));
}

void switch_vertex(State& s, std::size_t v) {
    OrthogonalMatrix o = OrthogonalMatrix::identity(s.b.vertices());
    o.signs[v - 1] = -1;
    s.b = switching(s.b, o);
}

// Flips arrows so that q_B agrees with target; both must agree up to signs.
bool normalize_signs(State& s, const QuadraticForm& target) {
    QuadraticForm p = incidence_form(s.b);
    const std::size_t n = p.n();
    if (target.n() != n) return false;
    std::vector<int> sg(n + 1, 0);
    for (std::size_t k = 1; k <= n; ++k) {
        if (sg[k]) continue;
        sg[k] = 1;
        std::vector<std::size_t> queue{k};
        for (std::size_t h = 0; h < queue.size(); ++h) {
            const std::size_t u = queue[h];
            for (std::size_t j = 1; j <= n; ++j) {
                if (j == u || target.off(u, j) == 0 || sg[j]) continue;
                if (p.off(u, j) == 0) return false;
                sg[j] = sg[u] * sign_of(target.off(u, j)) * sign_of(p.off(u, j));
                queue.push_back(j);
            }
        }
    }
    for (std::size_t k = 1; k <= n; ++k)
        if (sg[k] < 0) step_sign(s, k);
    return incidence_form(s.b) == target;
}

struct Reduced {
    State st;
    std::size_t r = 0, c1 = 0, c2 = 0;
};

// Brings q to the graph C_r with c1 arrows parallel to arrow r and c2 extra loops at vertex 1.
Reduced reduce_to_standard(const QuadraticForm& q) {
    FormReport rep = analyze(q);
    require(rep.non_negative, ErrorKind::NotNonNegative, "form is not non-negative");
    require(rep.connected && rep.irreducible, ErrorKind::NotTypeC, "form is not connected and irreducible");
    require(!rep.unit && rep.fully_regular, ErrorKind::NotTypeC, "form is not of Dynkin type C");
    const std::size_t n = q.n();
    std::size_t first_two = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        require(q.diag(i) == 1 || q.diag(i) == 2, ErrorKind::NotTypeC, "diagonal outside {1, 2}");
        if (q.diag(i) == 2 && !first_two) first_two = i;
    }

    GTransform t = GTransform::identity(n);
    QuadraticForm q1 = q;
    if (first_two != 1) {
        std::vector<std::size_t> pi(n);
        std::iota(pi.begin(), pi.end(), std::size_t{1});
        std::swap(pi[0], pi[first_two - 1]);
        IntMatrix p = permutation_matrix(pi);
        t.push({GStep::Kind::Permutation, 0, 0, pi}, p);
        q1 = compose(q, p);
    }
    auto [sat, g] = pivot_saturate(q1, 1);
    for (std::size_t k = 0; k < g.steps.size(); ++k) t.steps.push_back(g.steps[k]);
    t.matrix = t.matrix * g.matrix;
    LoopPartition u = loop_partition(sat);
    State st{partition_graph(u, n), t};
    require(incidence_form(st.b) == sat, ErrorKind::NotTypeC, "partition graph does not reproduce the form");

    // Every arrow v -- 1 becomes a directed arrow v -> 1.
    std::vector<std::vector<std::size_t>> at(u.m + 1);
    for (std::size_t v = 2; v <= u.m; ++v) {
        std::vector<std::size_t> plus = u.plus[v], minus = u.minus[v];
        if (plus.size() < minus.size()) {
            switch_vertex(st, v);
            std::swap(plus, minus);
        }
        for (std::size_t j : minus) {
            step_gabrielov(st, 1, j);
            step_sign(st, j);
        }
        at[v] = plus;
        at[v].insert(at[v].end(), minus.begin(), minus.end());
        std::sort(at[v].begin(), at[v].end());
    }
    // Parallel arrows at vertices v >= 3 move over to vertex 2.
    if (u.m >= 2) {
        const std::size_t anchor = at[2].front();
        for (std::size_t v = 3; v <= u.m; ++v) {
            const std::size_t keep = at[v].front();
            for (std::size_t k = 1; k < at[v].size(); ++k) {
                const std::size_t j = at[v][k];
                step_gabrielov(st, anchor, j);
                step_gabrielov(st, keep, j);
                step_sign(st, j);
                at[2].push_back(j);
            }
            at[v].resize(1);
        }
        std::sort(at[2].begin(), at[2].end());
    }
    for (std::size_t v = 2; v <= u.m; ++v)
        for (std::size_t j : at[v])
            if (!(st.b.arrow(j) == Arrow({1, -1}, {v, 1})))
                throw std::logic_error("arrow " + std::to_string(j) + " did not reach the form v -> 1");

    std::vector<std::size_t> pi{u.loops.front()};
    for (std::size_t v = 3; v <= u.m; ++v) pi.push_back(at[v].front());
    if (u.m >= 2) pi.insert(pi.end(), at[2].begin(), at[2].end());
    pi.insert(pi.end(), u.loops.begin() + 1, u.loops.end());
    step_permute(st, pi);

    Reduced red{st, u.m, u.m >= 2 ? at[2].size() - 1 : 0, u.loops.size() - 1};
    if (u.m < 2) throw std::logic_error("type C form with a single vertex");
    return red;
}

}  // namespace

CanonicalC canonical_c(const QuadraticForm& q) {
    Reduced red = reduce_to_standard(q);
    State& st = red.st;
    const std::size_t r = red.r;
    for (std::size_t i = 1; i <= red.c1; ++i) step_gabrielov(st, 1, r + i);
    for (std::size_t i = 1; i + 1 <= r; ++i) step_gabrielov(st, i + 1, i);
    QuadraticForm target = incidence_form(family_c(r, red.c1, red.c2));
    if (!normalize_signs(st, target)) throw std::logic_error("canonical type C reduction missed its target");
    if (!(compose(q, st.t.matrix) == target)) throw std::logic_error("accumulated transformation is inconsistent");
    return {st.t, r, red.c1, red.c2};
}

ZEquivalence dynkin_plus_zero(const QuadraticForm& q, bool to_d) {
    Reduced red = reduce_to_standard(q);
    const std::size_t r = red.r, c = red.c1 + red.c2;
    require(!to_d || r >= 4, ErrorKind::InvalidInput, "type D target needs rank at least 4");
    State st = red.st;
    auto rewrite = [](State& s, int eps, std::size_t i, std::size_t j) {
        s.b = endpoint_rewrite(s.b, eps, i, j);
        s.t.matrix = s.t.matrix * rewrite_matrix(s.b.arrows(), eps, i, j);
    };
    for (std::size_t i = 1; i <= red.c1; ++i) rewrite(st, 1, r, r + i);
    for (std::size_t i = 1; i <= red.c2; ++i) rewrite(st, 1, 1, r + red.c1 + i);
    for (std::size_t i = 1; i + 1 <= r; ++i) step_gabrielov(st, i + 1, i);
    QuadraticForm base = to_d ? form_d(r) : form_c(r);
    QuadraticForm target = c ? direct_sum(base, zero_form(c)) : base;
    if (to_d) {
        bool done = false;
        for (int eps : {1, -1}) {
            State trial = st;
            try {
                rewrite(trial, eps, 2, 1);
            } catch (const Error&) {
                continue;
            }
            if (normalize_signs(trial, target)) {
                st = trial;
                done = true;
                break;
            }
        }
        if (!done) throw std::logic_error("no endpoint rewrite reaches the type D form");
    } else if (!normalize_signs(st, target)) {
        throw std::logic_error("reduction missed the type C form");
    }
    if (!(compose(q, st.t.matrix) == target)) throw std::logic_error("accumulated transformation is inconsistent");
    return {st.t.matrix, target};
}

}  // namespace iqf
