#include "iqf/roots.hpp"

#include "iqf/enumerate.hpp"
#include "iqf/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <set>

namespace iqf {

namespace {

Int isqrt(const Int& d) { return d <= 0 ? Int(0) : Int(boost::multiprecision::sqrt(d)); }

bool proportional_non_unit(const IntVec& x, const IntVec& y) {
    // y = c x with c rational and c != +-1
    std::size_t k = 0;
    while (k < x.size() && x[k] == 0) ++k;
    if (k == x.size()) return false;
    const Int num = y[k], den = x[k];
    for (std::size_t i = 0; i < x.size(); ++i)
        if (y[i] * den != x[i] * num) return false;
    return abs(num) != abs(den);
}

}  // namespace

std::optional<IntVec> reflect(const QuadraticForm& q, const IntVec& x, const IntVec& y) {
    const Int qx = q.evaluate(x);
    require(qx != 0, ErrorKind::RadicalRoot, "cannot reflect along a vector with q(x) = 0");
    const Int p = q.polarize(y, x);
    if (p % qx != 0) return std::nullopt;
    const Int c = p / qx;
    IntVec out = y;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= c * x[i];
    return out;
}

std::optional<IntMatrix> reflection_matrix(const QuadraticForm& q, const IntVec& x) {
    const std::size_t n = q.n();
    IntMatrix s(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        auto col = reflect(q, x, unit_vec(n, j));
        if (!col) return std::nullopt;
        for (std::size_t i = 0; i < n; ++i) s(i, j) = (*col)[i];
    }
    return s;
}

IntMatrix companion(const BidirectedGraph& b, const IntVec& x) {
    require(x.size() == b.arrows(), ErrorKind::InvalidInput, "vector length differs from the arrow count");
    const IntVec a = incidence_matrix(b).transpose() * x;
    const Int aa = dot(a, a);
    require(aa != 0, ErrorKind::RadicalRoot, "x lies in the radical of q_B");
    const std::size_t m = a.size();
    IntMatrix o = IntMatrix::identity(m);
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = 0; v < m; ++v) {
            const Int t = 2 * a[u] * a[v];
            require(t % aa == 0, ErrorKind::InvalidInput, "companion matrix is not integral for this vector");
            o(u, v) -= t / aa;
        }
    return o;
}

RootSystemReport root_system_report(const BidirectedGraph& b) {
    const std::size_t n = b.arrows(), m = b.vertices();
    require(is_connected(b), ErrorKind::NotPositive, "graph is not connected");
    const bool tree = n + 1 == m;
    const bool one_tree = n == m && balance(b).beta == 0;
    require(tree || one_tree, ErrorKind::NotPositive, "graph is neither a tree nor an unbalanced 1-tree");

    const QuadraticForm q = incidence_form(b);
    PositiveRoots pr = roots_positive(b);
    std::vector<IntVec> r;
    for (const IntVec& x : pr.roots)
        if (std::any_of(x.begin(), x.end(), [](const Int& c) { return c != 0; })) r.push_back(x);
    std::sort(r.begin(), r.end());
    const std::set<IntVec> members(r.begin(), r.end());

    RootSystemReport rep;
    rep.family = tree ? Family::A : Family::C;
    rep.nonzero_count = r.size();
    if (members.size() != r.size()) rep.failures.push_back("duplicate roots");
    IntMatrix span(r.size(), n);
    for (std::size_t k = 0; k < r.size(); ++k)
        for (std::size_t i = 0; i < n; ++i) span(k, i) = r[k][i];
    if (rank(span) != n) rep.failures.push_back("roots do not span");
    for (const IntVec& x : r) {
        const Int qx = q.evaluate(x);
        for (const IntVec& y : r) {
            if (proportional_non_unit(x, y)) rep.failures.push_back("non-unit multiple " + to_string(y) + " of " + to_string(x));
            if (q.polarize(y, x) % qx != 0) {
                rep.failures.push_back("non-integral pairing of " + to_string(y) + " with " + to_string(x));
                continue;
            }
            auto s = reflect(q, x, y);
            if (!members.count(*s)) rep.failures.push_back("reflection of " + to_string(y) + " along " + to_string(x) + " leaves the set");
        }
    }
    const std::size_t expect = tree ? n * n + n : 2 * n * n;
    if (r.size() != expect) rep.failures.push_back("unexpected number of roots " + std::to_string(r.size()));
    rep.is_root_system = rep.failures.empty();
    return rep;
}

Int walk_polarization(const BidirectedGraph& b, const Walk& w, const Walk& w2) {
    auto image = [&](const Walk& x) {
        IntVec v = zero_vec(b.vertices());
        v[x.start - 1] += 1;
        v[walk_end(x) - 1] -= walk_sign(b, x);
        return v;
    };
    return dot(image(w), image(w2));
}

std::array<Int, 4> four_squares(const Int& d) {
    require(d >= 0, ErrorKind::InvalidInput, "negative target");
    for (Int a = isqrt(d); a >= 0; --a) {
        const Int ra = d - a * a;
        for (Int b = std::min(a, isqrt(ra)); b >= 0; --b) {
            const Int rb = ra - b * b;
            for (Int c = std::min(b, isqrt(rb)); c >= 0; --c) {
                const Int rc = rb - c * c;
                const Int e = isqrt(rc);
                if (e * e == rc && e <= c) return {a, b, c, e};
            }
        }
    }
    throw std::logic_error("four squares search failed");
}

IntMatrix lagrange_matrix() { return IntMatrix{{-1, 0, 0, 1}, {-1, -1, 0, 2}, {0, 0, 0, 2}, {0, 0, -1, 1}}; }

namespace {

std::optional<IntVec> walk_sum_search(const QuadraticForm& q, const Int& d, std::size_t terms) {
    BidirectedGraph b = realize(q);
    RootSet ones = walk_roots(b, 1, q.n() + 2);
    std::set<IntVec> layer{zero_vec(q.n())}, seen = layer;
    const std::size_t cap = 50000;
    for (std::size_t k = 0; k < terms && !layer.empty(); ++k) {
        std::set<IntVec> next;
        for (const IntVec& v : layer)
            for (const IntVec& r : ones.vectors) {
                IntVec s = v;
                for (std::size_t i = 0; i < s.size(); ++i) s[i] += r[i];
                if (q.evaluate(s) == d) return s;
                if (seen.size() < cap && seen.insert(s).second) next.insert(s);
            }
        layer = std::move(next);
    }
    return std::nullopt;
}

IntVec embed(const std::vector<std::size_t>& subset, const IntVec& y, std::size_t n) {
    IntVec x = zero_vec(n);
    for (std::size_t k = 0; k < subset.size(); ++k) x[subset[k] - 1] = y[k];
    return x;
}

}  // namespace

Representation solve(const QuadraticForm& q, const Int& d, const SolveOptions& opts) {
    require(d >= 0, ErrorKind::InvalidInput, "target must be non-negative");
    const std::size_t n = q.n();
    auto done = [&](IntVec x, const char* tag) {
        if (q.evaluate(x) != d) throw std::logic_error(std::string("strategy ") + tag + " produced a wrong value");
        return Representation{d, std::move(x), tag};
    };
    if (d == 0) return done(zero_vec(n), "zero");

    std::optional<Classification> cls;
    FormReport rep = analyze(q);
    if (rep.non_negative && rep.connected && rep.irreducible) {
        try {
            cls = dynkin_type(q);
        } catch (const Error&) {
        }
    }
    if (cls && cls->type.family == Family::C && cls->type.rank >= 4) {
        CanonicalC cc = canonical_c(q);
        auto z = four_squares(d);
        IntVec y = lagrange_matrix() * IntVec(z.begin(), z.end());
        y.resize(n, 0);
        return done(cc.t.matrix * y, "canonical-C4");
    }
    if (cls && rep.unit && cls->type.family != Family::E && cls->type.rank >= 4) {
        std::vector<std::size_t> core = positive_core(q);
        QuadraticForm qc = restrict(q, core);
        Int s = isqrt(16 * d);
        if (s * s < 16 * d) ++s;
        long long bound = static_cast<long long>(s) + 2;
        for (int k = 0; k <= 3; ++k, bound *= 2)
            if (auto y = first_solution(qc, d, bound)) return done(embed(core, *y, n), "canonical-D4-search");
    }
    if (opts.walk_sum && rep.non_negative && rep.connected) {
        try {
            if (auto x = walk_sum_search(q, d, opts.walk_terms)) return done(*x, "walk-sum");
        } catch (const Error&) {
        }
    }
    if (auto x = first_solution(q, d, opts.bound)) return done(*x, "brute-force");
    fail(ErrorKind::UnrepresentedWithinBound,
         "no solution of q(x) = " + d.str() + " with |x_i| <= " + std::to_string(opts.bound));
}

}  // namespace iqf
