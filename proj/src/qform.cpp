#include "iqf/qform.hpp"

#include "iqf/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace iqf {

QuadraticForm::QuadraticForm(std::size_t n) : n_(n), c_(n, n) {
    require(n >= 1, ErrorKind::InvalidInput, "a form needs at least one variable");
}

QuadraticForm QuadraticForm::from_gram(const IntMatrix& g) {
    require(g.is_symmetric(), ErrorKind::InvalidInput, "Gram matrix must be symmetric");
    QuadraticForm q(g.rows());
    for (std::size_t i = 1; i <= q.n(); ++i) {
        require(g(i - 1, i - 1) % 2 == 0, ErrorKind::InvalidInput, "Gram diagonal must be even");
        q.set_diag(i, g(i - 1, i - 1) / 2);
        for (std::size_t j = i + 1; j <= q.n(); ++j) q.set_off(i, j, g(i - 1, j - 1));
    }
    return q;
}

void QuadraticForm::set_off(std::size_t i, std::size_t j, const Int& v) {
    require(i != j && i >= 1 && j >= 1 && i <= n_ && j <= n_, ErrorKind::InvalidInput, "bad coefficient index");
    c_(i - 1, j - 1) = v;
    c_(j - 1, i - 1) = v;
}

IntMatrix QuadraticForm::gram() const {
    IntMatrix g = c_;
    for (std::size_t i = 0; i < n_; ++i) g(i, i) *= 2;
    return g;
}

Int QuadraticForm::evaluate(const IntVec& x) const {
    require(x.size() == n_, ErrorKind::InvalidInput, "vector length differs from form size");
    Int s = 0;
    for (std::size_t i = 0; i < n_; ++i) {
        if (x[i] == 0) continue;
        s += c_(i, i) * x[i] * x[i];
        for (std::size_t j = i + 1; j < n_; ++j) s += c_(i, j) * x[i] * x[j];
    }
    return s;
}

Int QuadraticForm::polarize(const IntVec& x, const IntVec& y) const {
    require(x.size() == n_ && y.size() == n_, ErrorKind::InvalidInput, "vector length differs from form size");
    return dot(x, gram() * y);
}

std::string QuadraticForm::to_string() const {
    std::ostringstream os;
    bool first = true;
    auto term = [&](const Int& c, const std::string& mono) {
        if (c == 0) return;
        Int a = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        if (a != 1) os << a;
        os << mono;
        first = false;
    };
    for (std::size_t i = 1; i <= n_; ++i) term(diag(i), "x" + std::to_string(i) + "^2");
    for (std::size_t i = 1; i <= n_; ++i)
        for (std::size_t j = i + 1; j <= n_; ++j) term(off(i, j), "x" + std::to_string(i) + "x" + std::to_string(j));
    if (first) os << "0";
    return os.str();
}

bool is_connected(const QuadraticForm& q) {
    const std::size_t n = q.n();
    std::vector<bool> seen(n + 1, false);
    std::vector<std::size_t> stack{1};
    seen[1] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        std::size_t i = stack.back();
        stack.pop_back();
        for (std::size_t j = 1; j <= n; ++j)
            if (!seen[j] && j != i && q.off(i, j) != 0) {
                seen[j] = true;
                ++count;
                stack.push_back(j);
            }
    }
    return count == n;
}

bool is_non_negative(const QuadraticForm& q) { return complete_squares(q.gram()).psd; }

FormReport analyze(const QuadraticForm& q) {
    const std::size_t n = q.n();
    FormReport r;
    r.connected = is_connected(q);
    r.unit = r.semi_unit = true;
    bool pos = true, nonneg_diag = true;
    for (std::size_t i = 1; i <= n; ++i) {
        const Int& d = q.diag(i);
        if (d != 1) r.unit = false;
        if (d != 0 && d != 1) r.semi_unit = false;
        if (d <= 0) pos = false;
        if (d < 0) nonneg_diag = false;
        r.dotted_loops += d - 1;
    }
    bool fr = true, cr = true, classic = true;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) {
            const Int& c = q.off(i, j);
            const Int &a = q.diag(i), &b = q.diag(j);
            if (c > 0) classic = false;
            if (a > 0 && b > 0 && c % (a * b) != 0) fr = false;
            if ((a > 0 && c % a != 0) || (b > 0 && c % b != 0)) cr = false;
        }
    r.fully_regular = pos && fr;
    r.cox_regular = pos && cr;
    r.semi_cox_regular = nonneg_diag && cr;
    r.classic = r.cox_regular && classic;

    Int g = 0;
    for (std::size_t i = 1; i <= n; ++i) g = gcd(g, q.diag(i));
    if (!r.cox_regular)
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = i + 1; j <= n; ++j) g = gcd(g, q.off(i, j));
    r.irreducible = (g == 1);

    IntMatrix gm = q.gram();
    PsdRank pr = psd_rank(gm);
    r.non_negative = pr.is_psd;
    r.rank = pr.rank;
    r.corank = n - pr.rank;
    r.radical_basis = integer_kernel(gm);
    return r;
}

QuadraticForm restrict(const QuadraticForm& q, const std::vector<std::size_t>& subset) {
    require(!subset.empty(), ErrorKind::InvalidInput, "restriction to an empty subset");
    std::vector<bool> seen(q.n() + 1, false);
    for (std::size_t i : subset) {
        require(i >= 1 && i <= q.n(), ErrorKind::InvalidInput, "restriction index out of range");
        require(!seen[i], ErrorKind::InvalidInput, "repeated restriction index");
        seen[i] = true;
    }
    QuadraticForm r(subset.size());
    for (std::size_t a = 0; a < subset.size(); ++a) {
        r.set_diag(a + 1, q.diag(subset[a]));
        for (std::size_t b = a + 1; b < subset.size(); ++b) r.set_off(a + 1, b + 1, q.off(subset[a], subset[b]));
    }
    return r;
}

QuadraticForm direct_sum(const QuadraticForm& a, const QuadraticForm& b) {
    QuadraticForm s(a.n() + b.n());
    for (std::size_t i = 1; i <= a.n(); ++i) {
        s.set_diag(i, a.diag(i));
        for (std::size_t j = i + 1; j <= a.n(); ++j) s.set_off(i, j, a.off(i, j));
    }
    for (std::size_t i = 1; i <= b.n(); ++i) {
        s.set_diag(a.n() + i, b.diag(i));
        for (std::size_t j = i + 1; j <= b.n(); ++j) s.set_off(a.n() + i, a.n() + j, b.off(i, j));
    }
    return s;
}

QuadraticForm zero_form(std::size_t c) { return QuadraticForm(c); }

QuadraticForm compose(const QuadraticForm& q, const IntMatrix& t) {
    require(t.rows() == q.n(), ErrorKind::InvalidInput, "transform size differs from form size");
    return QuadraticForm::from_gram(t.transpose() * q.gram() * t);
}

bool operator==(const Bigraph& a, const Bigraph& b) {
    if (a.vertices != b.vertices || a.edges.size() != b.edges.size()) return false;
    for (std::size_t k = 0; k < a.edges.size(); ++k) {
        const auto &x = a.edges[k], &y = b.edges[k];
        if (x.i != y.i || x.j != y.j || x.multiplicity != y.multiplicity || x.sign != y.sign) return false;
    }
    return true;
}

std::string Bigraph::to_text() const {
    std::ostringstream os;
    os << "bigraph on " << vertices << " vertices (+ dotted, - solid)\n";
    std::vector<std::vector<std::string>> cell(vertices, std::vector<std::string>(vertices, "."));
    for (const auto& e : edges) {
        std::string s = (e.sign > 0 ? "+" : "-") + e.multiplicity.str();
        cell[e.i - 1][e.j - 1] = s;
        cell[e.j - 1][e.i - 1] = s;
    }
    os << "    ";
    for (std::size_t j = 1; j <= vertices; ++j) os << ' ' << std::string(4 - std::min<std::size_t>(4, std::to_string(j).size()), ' ') << j;
    os << '\n';
    for (std::size_t i = 1; i <= vertices; ++i) {
        std::string label = std::to_string(i);
        os << std::string(4 - std::min<std::size_t>(4, label.size()), ' ') << label;
        for (std::size_t j = 1; j <= vertices; ++j) {
            const std::string& s = cell[i - 1][j - 1];
            os << ' ' << std::string(4 - std::min<std::size_t>(4, s.size()), ' ') << s;
        }
        os << '\n';
    }
    return os.str();
}

Bigraph bigraph_of(const QuadraticForm& q) {
    Bigraph b;
    b.vertices = q.n();
    for (std::size_t i = 1; i <= q.n(); ++i) {
        Int loops = q.diag(i) - 1;
        if (loops != 0) b.edges.push_back({i, i, abs(loops), loops > 0 ? 1 : -1});
        for (std::size_t j = i + 1; j <= q.n(); ++j) {
            const Int& c = q.off(i, j);
            if (c != 0) b.edges.push_back({i, j, abs(c), c > 0 ? 1 : -1});
        }
    }
    return b;
}

QuadraticForm form_of(const Bigraph& b) {
    QuadraticForm q(b.vertices);
    for (std::size_t i = 1; i <= b.vertices; ++i) q.set_diag(i, 1);
    for (const auto& e : b.edges) {
        require(e.i >= 1 && e.j >= e.i && e.j <= b.vertices, ErrorKind::InvalidInput, "bigraph edge out of range");
        require(e.sign == 1 || e.sign == -1, ErrorKind::InvalidInput, "bigraph edge sign must be +-1");
        Int v = e.multiplicity * e.sign;
        if (e.i == e.j)
            q.set_diag(e.i, q.diag(e.i) + v);
        else
            q.set_off(e.i, e.j, q.off(e.i, e.j) + v);
    }
    return q;
}

QuadraticForm form_a(std::size_t r) {
    QuadraticForm q(r);
    for (std::size_t i = 1; i <= r; ++i) {
        q.set_diag(i, 1);
        if (i < r) q.set_off(i, i + 1, -1);
    }
    return q;
}

QuadraticForm form_e(std::size_t r) {
    require(r >= 6 && r <= 8, ErrorKind::InvalidInput, "type E needs rank 6, 7 or 8");
    QuadraticForm q(r);
    for (std::size_t i = 1; i <= r; ++i) q.set_diag(i, 1);
    for (std::size_t i = 1; i + 1 < r; ++i) q.set_off(i, i + 1, -1);
    q.set_off(3, r, -1);
    return q;
}

}  // namespace iqf
