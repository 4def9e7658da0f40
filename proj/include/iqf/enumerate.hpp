#pragma once

#include "iqf/qform.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace iqf {

// Sorted, duplicate-free set of vectors x with q(x) = d.
struct RootSet {
    int d = 0;
    std::vector<IntVec> vectors;
};

void normalize(RootSet& s);

// Plain exhaustive enumeration of the box |x_i| <= bound.
RootSet brute_force_roots(const QuadraticForm& q, long long d, long long bound, unsigned jobs = 1);

// Exhaustive search of the box pruned by completion of squares. Falls back to
// the plain enumeration for forms that are not non-negative. Stops after
// `limit` solutions when limit > 0.
std::vector<IntVec> bounded_solutions(const QuadraticForm& q, const Int& d, long long bound, std::size_t limit = 0);

std::optional<IntVec> first_solution(const QuadraticForm& q, const Int& d, long long bound);

}  // namespace iqf
