// Acceptance checks: prints one [PASS]/[FAIL] line per criterion.
#include "support.hpp"

#include "iqf/enumerate.hpp"
#include "iqf/errors.hpp"
#include "iqf/roots.hpp"
#include "iqf/walks.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

using namespace iqf;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

std::string show(const IntVec& x) {
    std::ostringstream s;
    s << "[";
    for (std::size_t i = 0; i < x.size(); ++i) s << (i ? "," : "") << x[i];
    s << "]";
    return s.str();
}

IntVec neg(const IntVec& x) {
    IntVec y = x;
    for (auto& c : y) c = -c;
    return y;
}

std::vector<IntVec> plus_minus(std::initializer_list<std::initializer_list<long long>> xs) {
    std::vector<IntVec> out;
    for (auto x : xs) {
        out.push_back(make_vec(x));
        out.push_back(neg(make_vec(x)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

BidirectedGraph three_vertex() {
    BidirectedGraph b(3);
    b.add_arrow(1, 1, 2, -1);
    b.add_arrow(2, 1, 3, -1);
    b.add_arrow(1, -1, 2, -1);
    return b;
}

BidirectedGraph four_vertex() {
    BidirectedGraph b(4);
    b.add_arrow(1, 1, 2, -1);
    b.add_arrow(2, 1, 3, -1);
    b.add_arrow(3, 1, 4, -1);
    return b;
}

QuadraticForm pivot_example() {
    QuadraticForm q(4);
    q.set_diag(1, 2);
    for (std::size_t i = 2; i <= 4; ++i) q.set_diag(i, 1);
    q.set_off(1, 2, -2);
    q.set_off(1, 3, 2);
    q.set_off(2, 3, -1);
    q.set_off(2, 4, 1);
    q.set_off(3, 4, -1);
    return q;
}

IntMatrix rows(std::initializer_list<std::initializer_list<long long>> r) {
    std::vector<IntVec> v;
    for (auto x : r) v.push_back(make_vec(x));
    return IntMatrix::from_rows(v, v.front().size());
}

// Random unbalanced graph with one cycle on m vertices.
BidirectedGraph random_unbalanced_one_tree(std::mt19937& rng, std::size_t m) {
    for (;;) {
        BidirectedGraph b = testing::random_graph(rng, m, m);
        if (balance(b).beta == 0) return b;
    }
}

void check_tree_like(const BidirectedGraph& b, bool tree, bool brute) {
    const std::size_t n = b.arrows();
    PositiveRoots pr = roots_positive(b);
    const QuadraticForm q = incidence_form(b);
    std::set<IntVec> from_walks;
    for (int d = 0; d <= 2; ++d)
        for (const IntVec& x : walk_roots(b, d, 2 * b.vertices() + n + 1, 3).vectors) from_walks.insert(x);
    std::set<IntVec> mine(pr.roots.begin(), pr.roots.end());
    expect(mine == from_walks, "positive roots differ from walk roots on " + b.to_text());
    std::size_t twos = 0;
    for (const IntVec& x : pr.roots) twos += q.evaluate(x) == 2;
    if (tree) {
        expect(pr.roots.size() == n * n + n + 1, "tree root count " + std::to_string(pr.roots.size()));
        expect(twos == 0, "tree with roots of value 2");
    } else {
        expect(pr.roots.size() == 2 * n * n + 1, "1-tree root count " + std::to_string(pr.roots.size()));
        expect(twos == 2 * n, "1-tree value-two count " + std::to_string(twos));
    }
    if (brute) {
        std::vector<IntVec> ones;
        for (const IntVec& x : pr.roots)
            if (q.evaluate(x) == 1) ones.push_back(x);
        std::sort(ones.begin(), ones.end());
        expect(ones == brute_force_roots(q, 1, 3).vectors, "value-one roots differ from the box search");
        auto box_twos = brute_force_roots(q, 2, 3).vectors;
        for (const IntVec& x : pr.roots)
            if (q.evaluate(x) == 2)
                expect(std::binary_search(box_twos.begin(), box_twos.end(), x), "value-two root outside the box search");
    }
}

void sample_graphs() {
    QuadraticForm want(3);
    for (std::size_t i = 1; i <= 3; ++i) want.set_diag(i, 1);
    want.set_off(1, 2, -1);
    want.set_off(2, 3, -1);
    const IntMatrix gram = rows({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
    int beta = 0;
    for (const BidirectedGraph& b : {three_vertex(), four_vertex()}) {
        expect(incidence_form(b) == want, "incidence form");
        expect(incidence_form(b).gram() == gram, "Gram matrix");
        expect(balance(b).beta == beta, "balance flag");
        RankCorank rc = rank_corank(b);
        expect(rc.rank == 3 && rc.corank == 0, "rank and corank");
        ++beta;
    }
}

void sample_root_sets() {
    const auto ones = plus_minus({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}, {1, 1, 1}});
    const auto twos = plus_minus({{1, 0, 1}, {1, 0, -1}, {1, 2, 1}});
    const QuadraticForm q = form_a(3);
    expect(walk_roots(three_vertex(), 1, 8).vectors == ones, "1-roots from walks on the 3-vertex graph");
    expect(walk_roots(four_vertex(), 1, 8).vectors == ones, "1-roots from walks on the 4-vertex graph");
    expect(walk_roots(three_vertex(), 2, 8).vectors == twos, "2-roots from walks on the 3-vertex graph");
    expect(walk_roots(four_vertex(), 2, 8).vectors.empty(), "balanced graph has no 2-roots from walks");
    expect(brute_force_roots(q, 1, 3).vectors == ones, "box search 1-roots");
    expect(brute_force_roots(q, 2, 3).vectors == twos, "box search 2-roots");
}

void tree_counts() {
    std::mt19937 rng(1003);
    for (std::size_t n = 1; n <= 8; ++n) {
        BidirectedGraph path(n + 1), star(n + 1);
        for (std::size_t k = 1; k <= n; ++k) {
            path.add_arrow(k, testing::random_sign(rng), k + 1, testing::random_sign(rng));
            star.add_arrow(1, testing::random_sign(rng), k + 1, testing::random_sign(rng));
        }
        check_tree_like(path, true, n <= 5);
        check_tree_like(star, true, n <= 5);
        for (int t = 0; t < 4; ++t) check_tree_like(testing::random_graph(rng, n + 1, n, false), true, n <= 5);
    }
    for (std::size_t n = 2; n <= 8; ++n) {
        BidirectedGraph loop_end(n);
        loop_end.add_arrow(1, -1, 1, -1);
        for (std::size_t k = 2; k <= n; ++k) loop_end.add_arrow(k - 1, 1, k, -1);
        check_tree_like(loop_end, false, n <= 5);
        for (int t = 0; t < 4; ++t) check_tree_like(random_unbalanced_one_tree(rng, n), false, n <= 5);
    }
}

void walk_sandwich() {
    std::mt19937 rng(1004);
    for (int t = 0; t < 200; ++t) {
        const std::size_t m = 1 + rng() % 5;
        const std::size_t n = std::max<std::size_t>(m - 1, 1) + rng() % (6 - std::max<std::size_t>(m - 1, 1));
        BidirectedGraph b = testing::random_graph(rng, m, n);
        const QuadraticForm q = incidence_form(b);
        for (int d : {0, 1}) {
            BoxedRoots r = boxed_walk_roots(b, d, 3, 1);
            expect(r.complete, "walks miss box " + std::to_string(d) + "-roots of " + b.to_text());
        }
        const std::size_t cap = 2 * m + n + 1;
        for (int d = 0; d <= 2; ++d)
            for (const IntVec& x : walk_roots(b, d, cap, 3).vectors)
                expect(q.evaluate(x) == d, "walk vector " + show(x) + " has the wrong value");
        for (int k = 0; k < 20; ++k) {
            Walk w = testing::random_walk(rng, b, rng() % 8);
            const Int v = q.evaluate(inc(b, w));
            const Int want = walk_end(w) != w.start ? 1 : walk_sign(b, w) == 1 ? 0 : 2;
            expect(v == want, "walk kind does not match its value");
        }
        const bool none = walk_roots(b, 2, cap, 3).vectors.empty();
        expect(none == (balance(b).beta == 1), "2-roots from walks versus balance on " + b.to_text());
    }
}

void universality() {
    std::vector<std::pair<std::string, QuadraticForm>> forms = {{"A4", form_a(4)},
                                                                {"D4", form_d(4)},
                                                                {"C4", form_c(4)},
                                                                {"C5(1,1)", incidence_form(family_c(5, 1, 1))}};
    for (auto& [name, q] : forms)
        for (long long d = 0; d <= 300; ++d) {
            Representation r = solve(q, d);
            expect(q.evaluate(r.x) == d, name + " fails at " + std::to_string(d));
        }
    expect(form_a(4).evaluate(make_vec({0, 5, 1, 14})) == 203, "witness 203");
    expect(form_a(4).evaluate(make_vec({1, 0, 0, 17})) == 290, "witness 290");
    const QuadraticForm c4 = form_c(4);
    const std::vector<std::pair<std::vector<long long>, long long>> table = {
        {{0, 1, 0, 0}, 1},  {{-1, 0, 0, 0}, 2}, {{0, 2, 1, 0}, 3},  {{0, 2, 0, 0}, 4},
        {{-1, 1, 0, 0}, 5}, {{0, 3, 2, 1}, 6},  {{0, 3, 1, 0}, 7},  {{-2, 0, 0, 0}, 8},
        {{0, 3, 0, 0}, 9},  {{-1, 2, 0, 0}, 10}, {{0, 4, 2, 1}, 11}, {{0, 4, 2, 0}, 12},
        {{0, 4, 1, 0}, 13}, {{-1, 3, 2, 1}, 14}, {{-1, 3, 1, 0}, 15}, {{0, 4, 0, 0}, 16}};
    for (auto& [x, d] : table) {
        IntVec v(x.begin(), x.end());
        expect(c4.evaluate(v) == d, "table entry " + show(v));
    }
    const IntMatrix tl = rows({{-1, 0, 0, 1}, {-1, -1, 0, 2}, {0, 0, 0, 2}, {0, 0, -1, 1}});
    QuadraticForm squares(4);
    for (std::size_t i = 1; i <= 4; ++i) squares.set_diag(i, 1);
    expect(compose(c4, tl) == squares, "q_C4 o T_L is the sum of four squares");
    expect(determinant(tl) == 2, "det T_L = 2");
    expect(lagrange_matrix() == tl, "library Lagrange matrix");
}

void worked_pipeline() {
    const QuadraticForm q = pivot_example();
    BidirectedGraph b = realize(q);
    expect(incidence_form(b) == q, "realized graph reproduces the form");
    expect(b.vertices() == 3 && b.arrows() == 4, "realized graph size");
    std::size_t loops = 0;
    for (std::size_t i = 1; i <= b.arrows(); ++i) loops += b.arrow(i).is_bidirected_loop();
    expect(loops == 1, "one bidirected loop");
    CanonicalC c = canonical_c(q);
    expect(c.r == 3 && c.c1 == 1 && c.c2 == 0, "canonical parameters");
    const IntMatrix& t = c.t.matrix;
    expect(t.transpose() * q.gram() * t == incidence_form(family_c(3, 1, 0)).gram(), "Gram congruence");
    expect(is_unimodular(t), "transformation is unimodular");
}

void classification() {
    for (std::size_t r = 1; r <= 6; ++r)
        for (std::size_t c = 0; c <= 2; ++c) {
            Classification k = dynkin_type(incidence_form(family_a(r, c)));
            expect(k.type == DynkinType{Family::A, r} && k.corank == c, "A family");
        }
    for (std::size_t r = 4; r <= 6; ++r)
        for (std::size_t c = 0; c <= 2; ++c) {
            Classification k = dynkin_type(incidence_form(family_d(r, c)));
            expect(k.type == DynkinType{Family::D, r} && k.corank == c, "D family");
        }
    for (std::size_t r = 2; r <= 6; ++r)
        for (std::size_t c1 = 0; c1 <= 2; ++c1)
            for (std::size_t c2 = 0; c2 <= 2; ++c2) {
                Classification k = dynkin_type(incidence_form(family_c(r, c1, c2)));
                expect(k.type == DynkinType{Family::C, r} && k.corank == c1 + c2, "C family");
            }
    for (std::size_t r = 6; r <= 8; ++r) {
        expect(dynkin_type(form_e(r)).type == DynkinType{Family::E, r}, "E form");
        bool rejected = false;
        try {
            realize(form_e(r));
        } catch (const Error& e) {
            rejected = e.kind == ErrorKind::NotIncidenceForm;
        }
        expect(rejected, "E form realized");
    }
}

void loopless_predicate() {
    std::mt19937 rng(1008);
    for (int t = 0; t < 100; ++t) {
        const std::size_t m = 4 + rng() % 4;
        const std::size_t n = m - 1 + rng() % 4;
        BidirectedGraph b = testing::random_graph(rng, m, n, false);
        const int beta = balance(b).beta;
        Classification k = dynkin_type(incidence_form(b));
        expect(k.type.family == (beta == 0 ? Family::D : Family::A), "family versus balance on " + b.to_text());
        expect(k.corank == n - m + static_cast<std::size_t>(beta), "corank formula");
    }
}

void root_systems() {
    std::mt19937 rng(1009);
    auto run = [&](const BidirectedGraph& b, Family f, std::size_t count) {
        RootSystemReport r = root_system_report(b);
        expect(r.is_root_system && r.failures.empty(), "root system axioms");
        expect(r.family == f && r.nonzero_count == count, "root system type");
        const QuadraticForm q = incidence_form(b);
        const IntMatrix it = incidence_matrix(b).transpose();
        for (const IntVec& x : roots_positive(b).roots) {
            if (q.evaluate(x) == 0) continue;
            auto s = reflection_matrix(q, x);
            expect(s.has_value(), "integral reflection");
            expect(it * *s == companion(b, x) * it, "reflection intertwining");
        }
    };
    for (std::size_t n = 1; n <= 6; ++n) run(testing::random_graph(rng, n + 1, n, false), Family::A, n * n + n);
    for (std::size_t n = 2; n <= 6; ++n) run(random_unbalanced_one_tree(rng, n), Family::C, 2 * n * n);
}

void gentle_suite() {
    GentlePresentation p;
    p.vertices = 2;
    p.arrows = {{"a", 1, 2}, {"b", 2, 1}};
    p.relations = {{"a", "b"}};
    EulerData e = euler_pipeline(p);
    expect(e.cartan == rows({{1, 1}, {1, 2}}), "Cartan matrix");
    expect(e.incidence == rows({{2, 0}, {-1, 1}}), "incidence matrix");
    QuadraticForm want(2);
    want.set_diag(1, 2);
    want.set_diag(2, 1);
    want.set_off(1, 2, -2);
    expect(e.q == want, "Euler form");
    expect(e.dynkin.size() == 1 && e.dynkin[0] && e.dynkin[0]->type == DynkinType{Family::C, 2}, "Dynkin type C2");
    EulerData k = euler_pipeline(GentlePresentation{});
    expect(k.q == form_a(1), "field gives A1");

    std::mt19937 rng(1010);
    for (int t = 0; t < 50; ++t) {
        GentlePresentation g = testing::random_gentle(rng, 6);
        const std::size_t n = g.vertices;
        EulerData d = euler_pipeline(g);
        IntMatrix inv = unimodular_inverse(d.cartan);
        IntMatrix sum = inv;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) sum(i, j) += inv(j, i);
        expect(sum == d.incidence * d.incidence.transpose(), "C^-1 + C^-t = I I^t");
        std::vector<int> forb(n + 1, 0), perm(n + 1, 0);
        for (const Thread& th : d.threads.forbidden)
            for (std::size_t v : th.vertices) ++forb[v];
        for (const Thread& th : d.threads.permitted)
            for (std::size_t v : th.vertices) ++perm[v];
        for (std::size_t v = 1; v <= n; ++v) expect(forb[v] == 2 && perm[v] == 2, "vertex occurrence counts");
        for (std::size_t u = 0; u < d.threads.forbidden.size(); ++u)
            expect(d.cartan * floor_vector(d.threads.forbidden[u], n) ==
                       ceil_vector(d.threads.permitted[d.threads.phi[u]], n),
                   "thread matching identity");
    }
}

void transformation_laws() {
    std::mt19937 rng(1011);
    int pairs = 0;
    while (pairs < 200) {
        BidirectedGraph b = testing::random_graph(rng, 1 + rng() % 5, 1 + rng() % 6);
        GraphStep s = testing::random_step(rng, b);
        if (s.kind == GraphStep::Kind::Switching) continue;
        Applied a;
        try {
            a = apply(b, s);
        } catch (const Error&) {
            continue;
        }
        ++pairs;
        expect(incidence_matrix(a.graph) == a.t.transpose() * incidence_matrix(b), "incidence transpose law");
    }
    for (int t = 0; t < 50; ++t) {
        BidirectedGraph b = testing::random_graph(rng, 1 + rng() % 5, 1 + rng() % 6);
        OrthogonalMatrix o = OrthogonalMatrix::identity(b.vertices());
        for (auto& e : o.signs) e = testing::random_sign(rng);
        o.perm = testing::random_permutation(rng, b.vertices());
        expect(incidence_form(switching(b, o)) == incidence_form(b), "switching keeps the form");
    }
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 2 + rng() % 4;
        QuadraticForm q(n);
        for (std::size_t i = 1; i <= n; ++i) {
            q.set_diag(i, static_cast<long long>(rng() % 3) + 1);
            for (std::size_t j = i + 1; j <= n; ++j) q.set_off(i, j, static_cast<long long>(rng() % 9) - 4);
        }
        const std::size_t i = 1 + rng() % n, j = 1 + rng() % n;
        if (i == j || q.off(i, j) % q.diag(i) != 0) continue;
        auto [g, tr] = gabrielov(q, i, j);
        for (int k = 0; k < 5; ++k) {
            IntVec x = testing::random_vec(rng, n, 5);
            expect(testing::polynomial_value(g, x) == testing::polynomial_value(q, tr.matrix * x),
                   "Gabrielov coefficients versus substitution");
        }
    }
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void()>>> criteria = {
        {"sample graphs: forms, Gram matrices, balance, rank", sample_graphs},
        {"sample root sets from walks and box search", sample_root_sets},
        {"root counts of trees and unbalanced 1-trees", tree_counts},
        {"walk roots versus box search on random graphs", walk_sandwich},
        {"universality and four-squares route", universality},
        {"realization and canonical type C transform of the worked form", worked_pipeline},
        {"Dynkin type of the standard families", classification},
        {"loop-less graphs: type D iff unbalanced, corank formula", loopless_predicate},
        {"root systems and reflection intertwining", root_systems},
        {"gentle Euler forms and thread identities", gentle_suite},
        {"transformation laws on incidence matrices", transformation_laws},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto start = std::chrono::steady_clock::now();
        std::string note;
        bool ok = true;
        try {
            criteria[k].second();
        } catch (const std::exception& e) {
            ok = false;
            note = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << k + 1 << ". " << criteria[k].first << " (" << std::fixed
                  << std::setprecision(2) << secs << " s)";
        if (!ok) std::cout << ": " << note;
        std::cout << "\n";
        failed += !ok;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed ? 1 : 0;
}
