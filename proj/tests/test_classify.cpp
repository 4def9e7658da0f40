#include "doctest.h"
#include "support.hpp"

#include "iqf/errors.hpp"

using namespace iqf;

namespace {

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

struct Sample {
    QuadraticForm q;
    DynkinType type;
    std::size_t corank;
};

std::vector<Sample> family_samples() {
    std::vector<Sample> out;
    for (std::size_t r = 1; r <= 6; ++r)
        for (std::size_t c = 0; c <= 2; ++c) out.push_back({incidence_form(family_a(r, c)), {Family::A, r}, c});
    for (std::size_t r = 4; r <= 6; ++r)
        for (std::size_t c = 0; c <= 2; ++c) out.push_back({incidence_form(family_d(r, c)), {Family::D, r}, c});
    for (std::size_t r = 2; r <= 5; ++r)
        for (std::size_t c1 = 0; c1 <= 2; ++c1)
            for (std::size_t c2 = 0; c2 <= 2; ++c2)
                out.push_back({incidence_form(family_c(r, c1, c2)), {Family::C, r}, c1 + c2});
    for (std::size_t r = 6; r <= 8; ++r) out.push_back({form_e(r), {Family::E, r}, 0});
    return out;
}

}  // namespace

TEST_CASE("form Gabrielov step is composition with its matrix") {
    std::mt19937 rng(41);
    for (const Sample& s : family_samples()) {
        const QuadraticForm& q = s.q;
        for (std::size_t i = 1; i <= q.n(); ++i)
            for (std::size_t j = 1; j <= q.n(); ++j) {
                if (i == j || q.diag(i) == 0 || q.off(i, j) % q.diag(i) != 0) continue;
                auto [g, t] = gabrielov(q, i, j);
                CHECK(g == compose(q, t.matrix));
                CHECK(abs(determinant(t.matrix)) == 1);
            }
    }
}

TEST_CASE("Dynkin type and corank of the standard families") {
    for (const Sample& s : family_samples()) {
        Classification c = dynkin_type(s.q);
        CHECK_MESSAGE(c.type == s.type, s.q.to_string());
        CHECK(c.corank == s.corank);
    }
    CHECK(DynkinType{Family::C, 3}.name() == "C3");
    const QuadraticForm indefinite = QuadraticForm::from_gram(IntMatrix::from_rows({make_vec({2, -3}), make_vec({-3, 2})}, 2));
    CHECK_THROWS_AS(dynkin_type(indefinite), Error);
}

TEST_CASE("Dynkin type is invariant under Gabrielov transformations") {
    std::mt19937 rng(42);
    for (const Sample& s : family_samples()) {
        auto [q, t] = testing::random_g_transform(rng, s.q, 5);
        CHECK(compose(s.q, t.matrix) == q);
        Classification c = dynkin_type(q);
        CHECK(c.type == s.type);
        CHECK(c.corank == s.corank);
    }
}

TEST_CASE("pivot saturation of the worked example") {
    QuadraticForm q = pivot_example();
    auto [sat, t] = pivot_saturate(q, 1);
    CHECK(t.to_string() == "T_{3,4} T_2");
    CHECK(compose(q, t.matrix) == sat);
    QuadraticForm want(4);
    want.set_diag(1, 2);
    for (std::size_t i = 2; i <= 4; ++i) want.set_diag(i, 1);
    for (std::size_t j = 2; j <= 4; ++j) want.set_off(1, j, 2);
    want.set_off(2, 3, 1);
    want.set_off(3, 4, 1);
    CHECK(sat == want);
    LoopPartition u = loop_partition(sat);
    CHECK(incidence_form(partition_graph(u, sat.n())) == sat);
}

TEST_CASE("realization reproduces incidence forms") {
    std::mt19937 rng(43);
    for (const Sample& s : family_samples()) {
        if (s.type.family == Family::E) {
            CHECK_THROWS_AS(realize(s.q), Error);
            continue;
        }
        auto [q, t] = testing::random_g_transform(rng, s.q, 4);
        BidirectedGraph b = realize(q);
        CHECK(incidence_form(b) == q);
        CHECK(rank_corank(b).rank == s.type.rank);
    }
    BidirectedGraph ex = realize(pivot_example());
    CHECK(ex.vertices() == 3);
    CHECK(ex.arrows() == 4);
    CHECK(incidence_form(ex) == pivot_example());
}

TEST_CASE("canonical type C transformation of the worked example") {
    CanonicalC c = canonical_c(pivot_example());
    CHECK(c.r == 3);
    CHECK(c.c1 == 1);
    CHECK(c.c2 == 0);
    CHECK(c.t.to_string() == "T_{3,4} T_2 T_{1,4} T_4 P(1,3,2,4) T_{1,4} T_{2,1} T_{3,2}");
    CHECK(compose(pivot_example(), c.t.matrix) == incidence_form(family_c(3, 1, 0)));
}

TEST_CASE("canonical type C transformation of scrambled forms") {
    std::mt19937 rng(44);
    for (std::size_t r = 2; r <= 5; ++r)
        for (std::size_t c1 = 0; c1 <= 2; ++c1)
            for (std::size_t c2 = 0; c2 <= 2; ++c2)
                for (int rep = 0; rep < 2; ++rep) {
                    auto [q, t] = testing::random_g_transform(rng, incidence_form(family_c(r, c1, c2)), 5);
                    CanonicalC c = canonical_c(q);
                    CHECK(c.r == r);
                    CHECK(c.c1 + c.c2 == c1 + c2);
                    CHECK(compose(q, c.t.matrix) == incidence_form(family_c(c.r, c.c1, c.c2)));
                    CHECK(abs(determinant(c.t.matrix)) == 1);
                }
}

TEST_CASE("Dynkin form plus zero form") {
    std::mt19937 rng(45);
    for (std::size_t r = 2; r <= 5; ++r)
        for (std::size_t c = 0; c <= 2; ++c) {
            auto [q, t] = testing::random_g_transform(rng, incidence_form(family_c(r, c, 0)), 4);
            ZEquivalence z = dynkin_plus_zero(q);
            CHECK(compose(q, z.s) == z.target);
            CHECK(z.target == (c ? direct_sum(form_c(r), zero_form(c)) : form_c(r)));
            CHECK(abs(determinant(z.s)) == 1);
        }
    ZEquivalence d = dynkin_plus_zero(incidence_form(family_c(4, 1, 1)), true);
    CHECK(compose(incidence_form(family_c(4, 1, 1)), d.s) == d.target);
    CHECK(d.target == direct_sum(form_d(4), zero_form(2)));
}

TEST_CASE("positive core is a positive connected restriction of full rank") {
    std::mt19937 rng(46);
    for (const Sample& s : family_samples()) {
        auto [q, t] = testing::random_g_transform(rng, s.q, 3);
        auto x = positive_core(q);
        QuadraticForm p = restrict(q, x);
        FormReport r = analyze(p);
        CHECK(x.size() == analyze(q).rank);
        CHECK(r.corank == 0);
        CHECK(r.non_negative);
        CHECK(r.connected);
    }
}

TEST_CASE("graph search realizes small connected incidence forms") {
    std::mt19937 rng(47);
    for (int k = 0; k < 30; ++k) {
        auto b = testing::random_graph(rng, 1 + rng() % 4, 1 + rng() % 4);
        QuadraticForm q = incidence_form(b);
        auto found = realize_by_search(q, b.vertices());
        if (!analyze(q).connected) continue;
        REQUIRE_MESSAGE(found.has_value(), b.to_text());
        CHECK(incidence_form(*found) == q);
    }
}
