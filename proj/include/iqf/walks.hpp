#pragma once

#include "iqf/bidigraph.hpp"
#include "iqf/enumerate.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace iqf {

// Checks the walk against the graph and fills in its vertex sequence.
void trace(const BidirectedGraph& b, Walk& w);
Walk make_walk(const BidirectedGraph& b, std::size_t start, std::vector<WalkStep> steps);

std::size_t walk_end(const Walk& w);
int walk_sign(const BidirectedGraph& b, const Walk& w);
IntVec inc(const BidirectedGraph& b, const Walk& w);

Walk compose(const BidirectedGraph& b, const Walk& w1, const Walk& w2);
Walk inverse(const BidirectedGraph& b, const Walk& w);
Walk reduce(const BidirectedGraph& b, const Walk& w);
Walk power(const BidirectedGraph& b, const Walk& w, std::size_t k);

// Text form "v0 a1 v1 a2 v2 ..." with arrow tokens "k" or "k^-1".
std::string format_walk(const Walk& w);
Walk parse_walk(const BidirectedGraph& b, const std::string& text);

// Vectors +-inc(w) over walks of length <= length_cap whose kind matches d:
// d = 0 positive closed, d = 1 open, d = 2 negative closed. With box > 0,
// walks whose running inc leaves |x_i| <= box are cut.
RootSet walk_roots(const BidirectedGraph& b, int d, std::size_t length_cap, long long box = 0);

struct BoxedRoots {
    RootSet roots;
    std::size_t length_cap = 0;
    bool complete = false;  // every box root of value d (d = 0, 1) was reached
};

// Walk roots inside |x_i| <= bound. The length cap doubles until the walks
// cover the box roots found by enumeration (d = 0, 1) or reaches 4 n bound.
// Walks may leave the box by `margin` on the way.
BoxedRoots boxed_walk_roots(const BidirectedGraph& b, int d, long long bound, long long margin);

struct PositiveRoots {
    std::vector<IntVec> roots;  // includes 0
    std::size_t value_one = 0;
    std::size_t value_two = 0;
    bool tree = false;
};

// All incidence roots of a tree or an unbalanced 1-tree.
PositiveRoots roots_positive(const BidirectedGraph& b);

}  // namespace iqf
