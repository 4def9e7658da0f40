#pragma once

#include "iqf/matrix.hpp"
#include "iqf/qform.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace iqf {

// A signed endpoint: sign +1 is a tail, -1 is a head.
struct End {
    std::size_t vertex;
    int sign;
    friend bool operator==(const End& a, const End& b) { return a.vertex == b.vertex && a.sign == b.sign; }
    friend bool operator<(const End& a, const End& b) {
        return a.vertex != b.vertex ? a.vertex < b.vertex : a.sign < b.sign;
    }
};

// Unordered pair of ends, stored normalized (smaller end first).
struct Arrow {
    End a, b;
    Arrow() = default;
    Arrow(End x, End y);
    int sigma() const { return -a.sign * b.sign; }
    bool is_loop() const { return a.vertex == b.vertex; }
    bool is_directed_loop() const { return is_loop() && a.sign != b.sign; }
    bool is_bidirected_loop() const { return is_loop() && a.sign == b.sign; }
    bool touches(std::size_t v) const { return a.vertex == v || b.vertex == v; }
    friend bool operator==(const Arrow& x, const Arrow& y) { return x.a == y.a && x.b == y.b; }
};

// Vertices and arrows are 1-based; arrow order is the variable order of q_B.
class BidirectedGraph {
public:
    explicit BidirectedGraph(std::size_t vertices = 1);

    std::size_t vertices() const { return m_; }
    std::size_t arrows() const { return arrows_.size(); }

    std::size_t add_arrow(std::size_t u, int e, std::size_t v, int f);
    const Arrow& arrow(std::size_t i) const { return arrows_.at(i - 1); }
    void set_arrow(std::size_t i, const Arrow& a);

    friend bool operator==(const BidirectedGraph& x, const BidirectedGraph& y) {
        return x.m_ == y.m_ && x.arrows_ == y.arrows_;
    }

    std::string to_text() const;

private:
    std::size_t m_;
    std::vector<Arrow> arrows_;
};

// Walk in the graph extended by formal inverses of directed loops.
struct WalkStep {
    std::size_t arrow;
    bool inverse = false;
};

struct Walk {
    std::size_t start = 1;
    std::vector<WalkStep> steps;
    std::vector<std::size_t> vertices;  // v0..vl, filled by trace()
};

// O = T P with (u, e) . O = (perm[u], e * signs[u]).
struct OrthogonalMatrix {
    std::vector<int> signs;
    std::vector<std::size_t> perm;

    static OrthogonalMatrix identity(std::size_t m);
    IntMatrix matrix() const;
    std::size_t size() const { return signs.size(); }
};

IntMatrix incidence_matrix(const BidirectedGraph& b);
QuadraticForm incidence_form(const BidirectedGraph& b);
bool is_connected(const BidirectedGraph& b);

struct BalanceResult {
    int beta = 0;
    std::optional<Walk> witness;
    std::optional<OrthogonalMatrix> quiver_switch;
};

BalanceResult balance(const BidirectedGraph& b);

struct RankCorank {
    std::size_t rank, corank;
};

RankCorank rank_corank(const BidirectedGraph& b);

// Elementary transformations and their matrices T with I(B') = T^t I(B).
BidirectedGraph graph_gabrielov(const BidirectedGraph& b, std::size_t i, std::size_t j);
BidirectedGraph sign_flip(const BidirectedGraph& b, std::size_t i);
// New arrow k is old arrow pi[k-1].
BidirectedGraph permute_arrows(const BidirectedGraph& b, const std::vector<std::size_t>& pi);
// Rewrites arrow j for the change of basis e_j -> e_j - eps e_i.
BidirectedGraph endpoint_rewrite(const BidirectedGraph& b, int eps, std::size_t i, std::size_t j);
BidirectedGraph switching(const BidirectedGraph& b, const OrthogonalMatrix& o);

IntMatrix gabrielov_matrix(const QuadraticForm& q, std::size_t i, std::size_t j);
IntMatrix sign_matrix(std::size_t n, std::size_t i);
IntMatrix permutation_matrix(const std::vector<std::size_t>& pi);
IntMatrix rewrite_matrix(std::size_t n, int eps, std::size_t i, std::size_t j);

struct GraphStep {
    enum class Kind { Gabrielov, Sign, Permutation, Rewrite, Switching };
    Kind kind;
    std::size_t i = 0, j = 0;
    int eps = 1;
    std::vector<std::size_t> pi;
    OrthogonalMatrix o;
};

struct Applied {
    BidirectedGraph graph;
    IntMatrix t;  // identity for switchings
};

Applied apply(const BidirectedGraph& b, const GraphStep& step);

Bigraph line_bigraph(const BidirectedGraph& b);

std::optional<OrthogonalMatrix> switching_equivalent(const BidirectedGraph& b, const BidirectedGraph& b2);

// Builds a graph on m vertices whose incidence rows are the given vectors.
// Zero rows become directed loops at vertex 1.
BidirectedGraph graph_from_rows(const std::vector<IntVec>& rows, std::size_t m);

// Canonical families with the standard arrow numbering.
BidirectedGraph family_a(std::size_t r, std::size_t c);
BidirectedGraph family_d(std::size_t r, std::size_t c);
BidirectedGraph family_c(std::size_t r, std::size_t c1, std::size_t c2);
BidirectedGraph family_l(std::size_t p, std::size_t s, std::size_t t);

QuadraticForm form_d(std::size_t r);
QuadraticForm form_c(std::size_t r);

}  // namespace iqf
