#pragma once

#include "iqf/bidigraph.hpp"
#include "iqf/classify.hpp"
#include "iqf/qform.hpp"
#include "iqf/walks.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace iqf {

// s_x(y) = y - (q(y,x)/q(x)) x; nullopt when the coefficient is not integral.
std::optional<IntVec> reflect(const QuadraticForm& q, const IntVec& x, const IntVec& y);

// Matrix of s_x, nullopt when some column is not integral.
std::optional<IntMatrix> reflection_matrix(const QuadraticForm& q, const IntVec& x);

// O^x = I - 2 a a^t / a^t a with a = I(B)^t x, so that I(B)^t s_x = O^x I(B)^t.
IntMatrix companion(const BidirectedGraph& b, const IntVec& x);

struct RootSystemReport {
    bool is_root_system = false;
    Family family = Family::A;
    std::size_t nonzero_count = 0;
    std::vector<std::string> failures;
};

RootSystemReport root_system_report(const BidirectedGraph& b);

// q_B(inc w, inc w') computed from the endpoints and signs of both walks.
Int walk_polarization(const BidirectedGraph& b, const Walk& w, const Walk& w2);

std::array<Int, 4> four_squares(const Int& d);

// Columns map sums of four squares onto q_{C_4}: q_{C_4}(T z) = |z|^2.
IntMatrix lagrange_matrix();

struct SolveOptions {
    long long bound = 8;  // box for the brute-force fallback
    bool walk_sum = false;
    std::size_t walk_terms = 4;
};

struct Representation {
    Int d;
    IntVec x;
    std::string strategy;  // canonical-C4, canonical-D4-search, walk-sum, brute-force, zero
};

Representation solve(const QuadraticForm& q, const Int& d, const SolveOptions& opts = {});

}  // namespace iqf
