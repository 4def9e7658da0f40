#include "doctest.h"
#include "support.hpp"

#include "iqf/gentle.hpp"

using namespace iqf;

namespace {

GentlePresentation two_loop() {
    GentlePresentation p;
    p.vertices = 2;
    p.arrows = {{"a", 1, 2}, {"b", 2, 1}};
    p.relations = {{"a", "b"}};
    return p;
}

GentlePresentation a2() {
    GentlePresentation p;
    p.vertices = 2;
    p.arrows = {{"a", 1, 2}};
    return p;
}

std::vector<std::string> labels(const GentlePresentation& p, const std::vector<Thread>& ts) {
    std::vector<std::string> out;
    for (const Thread& t : ts) out.push_back(t.label(p));
    std::sort(out.begin(), out.end());
    return out;
}

bool has_kind(const Diagnostics& d, ErrorKind k) {
    for (const Diagnostic& x : d.problems)
        if (x.kind == k) return true;
    return false;
}

IntMatrix plus(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
    return c;
}

IntMatrix rows(std::initializer_list<IntVec> r, std::size_t cols) { return IntMatrix::from_rows(r, cols); }

}  // namespace

TEST_CASE("two-vertex cycle with one relation") {
    GentlePresentation p = two_loop();
    CHECK(validate(p).ok());
    CHECK(cartan(p) == rows({make_vec({1, 1}), make_vec({1, 2})}, 2));
    Threads th = threads(p);
    CHECK(labels(p, th.forbidden) == std::vector<std::string>{"1_2", "ab"});
    CHECK(labels(p, th.permitted) == std::vector<std::string>{"1_1", "ba"});
    for (std::size_t u = 0; u < th.forbidden.size(); ++u) {
        const std::string f = th.forbidden[u].label(p), m = th.permitted[th.phi[u]].label(p);
        CHECK(m == (f == "ab" ? "1_1" : "ba"));
    }
    EulerData e = euler_pipeline(p);
    QuadraticForm want(2);
    want.set_diag(1, 2);
    want.set_diag(2, 1);
    want.set_off(1, 2, -2);
    CHECK(e.q == want);
    CHECK(e.incidence == rows({make_vec({2, 0}), make_vec({-1, 1})}, 2));
    CHECK(incidence_form(e.graph) == want);
    REQUIRE(e.dynkin.size() == 1);
    CHECK(e.dynkin[0]->type == DynkinType{Family::C, 2});
}

TEST_CASE("single vertex and single arrow") {
    GentlePresentation k;
    EulerData e = euler_pipeline(k);
    CHECK(e.q == form_a(1));
    CHECK(e.incidence == rows({make_vec({1, 1})}, 2));
    CHECK(e.dynkin[0]->type == DynkinType{Family::A, 1});

    GentlePresentation p = a2();
    Threads th = threads(p);
    CHECK(labels(p, th.forbidden) == std::vector<std::string>{"1_1", "1_2", "a"});
    CHECK(labels(p, th.permitted) == std::vector<std::string>{"1_1", "1_2", "a"});
    EulerData e2 = euler_pipeline(p);
    CHECK(e2.dynkin[0]->type == DynkinType{Family::A, 2});
}

TEST_CASE("reducible rank one Euler form has no Dynkin type") {
    GentlePresentation p;
    p.vertices = 2;
    p.arrows = {{"a", 1, 2}, {"b", 2, 1}, {"c", 1, 2}};
    p.relations = {{"b", "a"}, {"c", "b"}};
    REQUIRE(validate(p).ok());
    EulerData e = euler_pipeline(p);
    CHECK(e.cartan == rows({make_vec({2, 1}), make_vec({3, 2})}, 2));
    CHECK(e.q == QuadraticForm::from_gram(rows({make_vec({4, -4}), make_vec({-4, 4})}, 2)));
    CHECK(e.graph.vertices() == 1);
    CHECK(incidence_form(e.graph) == e.q);
    REQUIRE(e.dynkin.size() == 1);
    CHECK_FALSE(e.dynkin[0].has_value());
}

TEST_CASE("validation reports gentleness violations") {
    GentlePresentation p;
    p.vertices = 4;
    p.arrows = {{"a", 1, 2}, {"b", 1, 3}, {"c", 1, 4}};
    CHECK(has_kind(validate(p), ErrorKind::GentlenessViolation));
    CHECK_THROWS_AS(require_gentle(p), Error);

    GentlePresentation loop;
    loop.arrows = {{"a", 1, 1}};
    CHECK_FALSE(validate(loop).ok());

    GentlePresentation bad = two_loop();
    bad.relations = {{"b", "b"}};
    CHECK_FALSE(validate(bad).ok());

    GentlePresentation apart;
    apart.vertices = 2;
    CHECK_FALSE(validate(apart).ok());

    GentlePresentation unknown = two_loop();
    unknown.relations = {{"a", "z"}};
    CHECK_FALSE(validate(unknown).ok());
}

TEST_CASE("random gentle presentations satisfy the thread identities") {
    std::mt19937 rng(61);
    for (int t = 0; t < 60; ++t) {
        GentlePresentation p = testing::random_gentle(rng, 6);
        const std::size_t n = p.vertices;
        EulerData e = euler_pipeline(p);
        IntMatrix inv = unimodular_inverse(e.cartan);
        CHECK(plus(inv, inv.transpose()) == e.incidence * e.incidence.transpose());
        CHECK(e.q.gram() == plus(inv, inv.transpose()));
        CHECK(e.threads.forbidden.size() == e.threads.permitted.size());
        std::vector<int> in_forbidden(n + 1, 0), in_permitted(n + 1, 0);
        for (const Thread& th : e.threads.forbidden)
            for (std::size_t v : th.vertices) ++in_forbidden[v];
        for (const Thread& th : e.threads.permitted)
            for (std::size_t v : th.vertices) ++in_permitted[v];
        for (std::size_t v = 1; v <= n; ++v) {
            CHECK(in_forbidden[v] == 2);
            CHECK(in_permitted[v] == 2);
        }
        for (std::size_t u = 0; u < e.threads.forbidden.size(); ++u) {
            const Thread& f = e.threads.forbidden[u];
            const Thread& m = e.threads.permitted[e.threads.phi[u]];
            CHECK(e.cartan * floor_vector(f, n) == ceil_vector(m, n));
            CHECK(f.start() == m.start());
        }
        CHECK(incidence_form(e.graph) == e.q);
        CHECK(analyze(e.q).non_negative);
        for (std::size_t k = 0; k < e.dynkin.size(); ++k) {
            if (e.dynkin[k])
                CHECK(e.dynkin[k]->type.family != Family::E);
            else
                CHECK_FALSE(analyze(restrict(e.q, e.components[k])).irreducible);
        }
    }
}
