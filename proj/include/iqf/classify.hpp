#pragma once

#include "iqf/bidigraph.hpp"
#include "iqf/qform.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace iqf {

struct GStep {
    enum class Kind { Gabrielov, Sign, Permutation };
    Kind kind;
    std::size_t i = 0, j = 0;
    std::vector<std::size_t> pi;  // new variable k is old variable pi[k-1]
};

// Unimodular matrix together with its factorization into elementary steps.
struct GTransform {
    IntMatrix matrix;
    std::vector<GStep> steps;

    static GTransform identity(std::size_t n);
    void push(const GStep& step, const IntMatrix& m);
    std::string to_string() const;
};

// Form-level elementary Gabrielov transformation e_j -> e_j - (q_ij/q_i) e_i.
std::pair<QuadraticForm, GTransform> gabrielov(const QuadraticForm& q, std::size_t i, std::size_t j);

enum class Family { A, D, E, C };

struct DynkinType {
    Family family;
    std::size_t rank;
    std::string name() const;
    friend bool operator==(const DynkinType& a, const DynkinType& b) {
        return a.family == b.family && a.rank == b.rank;
    }
};

struct Classification {
    DynkinType type;
    std::size_t corank;
};

Classification dynkin_type(const QuadraticForm& q);

// Canonical Dynkin form of the given type (path, D graph, E tree or C_r).
QuadraticForm dynkin_form(const DynkinType& t);

std::pair<QuadraticForm, GTransform> pivot_saturate(const QuadraticForm& q, std::size_t i0);

// Variables of a pivot-saturated type C form grouped by the arrow they become:
// two-head loops at vertex 1, or arrows with a head at vertex 1 and a tail
// (plus) or head (minus) at the neighbour v.
struct LoopPartition {
    std::size_t m = 0;
    std::vector<std::size_t> loops;
    std::vector<std::vector<std::size_t>> plus;   // index v = 0..m
    std::vector<std::vector<std::size_t>> minus;  // index v = 0..m
};

LoopPartition loop_partition(const QuadraticForm& q);

// Graph with loops of the partition at vertex 1 and one neighbour per part.
BidirectedGraph partition_graph(const LoopPartition& u, std::size_t n);

BidirectedGraph realize(const QuadraticForm& q);

// Backtracking search for incidence rows on at most max_vertices vertices.
std::optional<BidirectedGraph> realize_by_search(const QuadraticForm& q, std::size_t max_vertices);

struct CanonicalC {
    GTransform t;
    std::size_t r = 0, c1 = 0, c2 = 0;
};

CanonicalC canonical_c(const QuadraticForm& q);

struct ZEquivalence {
    IntMatrix s;
    QuadraticForm target;
};

// q o S = q_{C_r} + zero form, or q_{D_r} + zero form when to_d is set (r >= 4).
ZEquivalence dynkin_plus_zero(const QuadraticForm& q, bool to_d = false);

// 1-based subset X with q^X positive, connected and of rank rk(q).
std::vector<std::size_t> positive_core(const QuadraticForm& q);

}  // namespace iqf
