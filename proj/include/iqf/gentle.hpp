#pragma once

#include "iqf/bidigraph.hpp"
#include "iqf/classify.hpp"
#include "iqf/errors.hpp"
#include "iqf/qform.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace iqf {

struct QuiverArrow {
    std::string name;
    std::size_t src = 1, tgt = 1;
};

// Bound quiver; a relation (a, b) is the path a then b.
struct GentlePresentation {
    std::size_t vertices = 1;
    std::vector<QuiverArrow> arrows;
    std::vector<std::pair<std::string, std::string>> relations;

    std::size_t arrow_index(const std::string& name) const;  // 0-based
    bool related(std::size_t a, std::size_t b) const;        // 0-based arrows
};

struct Diagnostic {
    ErrorKind kind;
    std::string message;
};

struct Diagnostics {
    std::vector<Diagnostic> problems;
    bool ok() const { return problems.empty(); }
};

Diagnostics validate(const GentlePresentation& p);

// Throws the first problem found by validate.
void require_gentle(const GentlePresentation& p);

struct Thread {
    enum class Kind { Permitted, Forbidden };
    Kind kind;
    std::vector<std::size_t> arrows;    // 0-based arrow indices, empty for a trivial thread
    std::vector<std::size_t> vertices;  // 1-based vertex sequence
    bool trivial() const { return arrows.empty(); }
    std::size_t start() const { return vertices.front(); }
    std::string label(const GentlePresentation& p) const;
};

struct Threads {
    std::vector<Thread> permitted, forbidden;
    std::vector<std::size_t> phi;  // forbidden[u] is matched with permitted[phi[u]]
};

// Alternating and plain vertex sums of a thread.
IntVec floor_vector(const Thread& t, std::size_t n);
IntVec ceil_vector(const Thread& t, std::size_t n);

IntMatrix cartan(const GentlePresentation& p);
Threads threads(const GentlePresentation& p);

struct EulerData {
    IntMatrix cartan;
    QuadraticForm q;
    IntMatrix incidence;  // n x m, columns are floor vectors of forbidden threads
    BidirectedGraph graph;
    Threads threads;
    std::vector<std::vector<std::size_t>> components;
    // One per component; empty when the component is a reducible form such as
    // 2(x_1 - x_2)^2, which has no Dynkin type.
    std::vector<std::optional<Classification>> dynkin;
};

EulerData euler_pipeline(const GentlePresentation& p);

}  // namespace iqf
