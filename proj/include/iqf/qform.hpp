#pragma once

#include "iqf/matrix.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace iqf {

// q(x) = sum q_i x_i^2 + sum_{i<j} q_ij x_i x_j. Variable indices are 1-based.
class QuadraticForm {
public:
    QuadraticForm() = default;
    explicit QuadraticForm(std::size_t n);

    static QuadraticForm from_gram(const IntMatrix& g);

    std::size_t n() const { return n_; }
    const Int& diag(std::size_t i) const { return c_(i - 1, i - 1); }
    const Int& off(std::size_t i, std::size_t j) const { return c_(i - 1, j - 1); }
    void set_diag(std::size_t i, const Int& v) { c_(i - 1, i - 1) = v; }
    void set_off(std::size_t i, std::size_t j, const Int& v);

    IntMatrix gram() const;
    Int evaluate(const IntVec& x) const;
    Int polarize(const IntVec& x, const IntVec& y) const;

    friend bool operator==(const QuadraticForm& a, const QuadraticForm& b) { return a.c_ == b.c_; }

    std::string to_string() const;

private:
    std::size_t n_ = 0;
    IntMatrix c_;  // symmetric: c_(i,i) = q_i, c_(i,j) = q_ij
};

struct FormReport {
    bool connected = false;
    bool irreducible = false;
    bool unit = false;
    bool semi_unit = false;
    bool fully_regular = false;
    bool cox_regular = false;
    bool semi_cox_regular = false;
    bool classic = false;
    bool non_negative = false;
    std::size_t rank = 0;
    std::size_t corank = 0;
    std::vector<IntVec> radical_basis;
    Int dotted_loops = 0;
};

FormReport analyze(const QuadraticForm& q);

bool is_connected(const QuadraticForm& q);
bool is_non_negative(const QuadraticForm& q);

// q^X for a 1-based index subset X (order of X gives the new variable order).
QuadraticForm restrict(const QuadraticForm& q, const std::vector<std::size_t>& subset);
QuadraticForm direct_sum(const QuadraticForm& a, const QuadraticForm& b);
QuadraticForm zero_form(std::size_t c);

// q o T, i.e. the form with Gram matrix T^t G T.
QuadraticForm compose(const QuadraticForm& q, const IntMatrix& t);

// Edge data of the bigraph: sign +1 dotted, -1 solid.
struct BigraphEdge {
    std::size_t i, j;
    Int multiplicity;
    int sign;
};

struct Bigraph {
    std::size_t vertices = 0;
    std::vector<BigraphEdge> edges;  // i <= j, loops have i == j

    friend bool operator==(const Bigraph& a, const Bigraph& b);
    std::string to_text() const;
};

Bigraph bigraph_of(const QuadraticForm& q);
QuadraticForm form_of(const Bigraph& b);

// Named forms.
QuadraticForm form_a(std::size_t r);
QuadraticForm form_e(std::size_t r);  // r in {6,7,8}

}  // namespace iqf
