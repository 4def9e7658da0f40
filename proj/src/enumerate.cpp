#include "iqf/enumerate.hpp"

#include "iqf/errors.hpp"

#include <algorithm>
#include <thread>

namespace iqf {

void normalize(RootSet& s) {
    std::sort(s.vectors.begin(), s.vectors.end());
    s.vectors.erase(std::unique(s.vectors.begin(), s.vectors.end()), s.vectors.end());
}

namespace {

// Plain box enumeration with the first coordinate restricted to [lo, hi].
std::vector<IntVec> box_scan(const QuadraticForm& q, const Int& d, long long bound, long long lo, long long hi,
                             std::size_t limit) {
    const std::size_t n = q.n();
    std::vector<IntVec> out;
    bool small = true;
    Int maxc = 0;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j) maxc = std::max(maxc, Int(abs(i == j ? q.diag(i) : q.off(i, j))));
    // n^2 terms each bounded by maxc * bound^2 must fit comfortably.
    Int worst = maxc * bound * bound * Int(n * n) + abs(d);
    if (worst > Int(1) << 60) small = false;

    std::vector<long long> c(n * n);
    if (small)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) c[i * n + j] = static_cast<long long>(i == j ? q.diag(i + 1) : q.off(i + 1, j + 1));
    const long long dd = small ? static_cast<long long>(d) : 0;

    std::vector<long long> x(n, -bound);
    x[0] = lo;
    if (lo > hi) return out;
    for (;;) {
        bool hit;
        if (small) {
            long long s = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (x[i] == 0) continue;
                long long row = 0;
                for (std::size_t j = i; j < n; ++j) row += c[i * n + j] * x[j];
                s += row * x[i];
            }
            hit = (s == dd);
        } else {
            IntVec v(x.begin(), x.end());
            hit = (q.evaluate(v) == d);
        }
        if (hit) {
            out.emplace_back(x.begin(), x.end());
            if (limit && out.size() >= limit) return out;
        }
        std::size_t k = n;
        while (k > 0) {
            --k;
            long long top = (k == 0) ? hi : bound;
            if (x[k] < top) {
                ++x[k];
                for (std::size_t r = k + 1; r < n; ++r) x[r] = -bound;
                break;
            }
            if (k == 0) return out;
        }
    }
}

}  // namespace

RootSet brute_force_roots(const QuadraticForm& q, long long d, long long bound, unsigned jobs) {
    require(bound >= 0, ErrorKind::InvalidInput, "bound must be non-negative");
    RootSet rs;
    rs.d = static_cast<int>(d);
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(2 * bound + 1)));
    if (jobs == 1) {
        rs.vectors = box_scan(q, d, bound, -bound, bound, 0);
    } else {
        std::vector<std::vector<IntVec>> parts(jobs);
        std::vector<std::thread> pool;
        const long long width = 2 * bound + 1;
        for (unsigned t = 0; t < jobs; ++t) {
            long long lo = -bound + width * t / jobs, hi = -bound + width * (t + 1) / jobs - 1;
            pool.emplace_back([&, t, lo, hi] { parts[t] = box_scan(q, d, bound, lo, hi, 0); });
        }
        for (auto& th : pool) th.join();
        for (auto& p : parts) rs.vectors.insert(rs.vectors.end(), p.begin(), p.end());
    }
    normalize(rs);
    return rs;
}

namespace {

struct Pruned {
    const SquareCompletion& sc;
    const Int& d;
    long long bound;
    std::size_t limit;
    std::vector<Int> x;
    std::vector<IntVec> out;

    bool done() const { return limit && out.size() >= limit; }

    void free_level(std::size_t k) {
        if (k == sc.free_vars.size()) {
            pivot_level(sc.pivot.size(), Rational(d));
            return;
        }
        for (long long v = -bound; v <= bound && !done(); ++v) {
            x[sc.free_vars[k]] = v;
            free_level(k + 1);
        }
    }

    // Assigns pivot variables t-1, t-2, ..., 0 with `rem` left to distribute.
    void pivot_level(std::size_t t, const Rational& rem) {
        if (t == 0) {
            if (rem == 0) out.push_back(x);
            return;
        }
        const std::size_t lvl = t - 1, var = sc.pivot[lvl];
        Rational c = 0;
        for (std::size_t l = 0; l < x.size(); ++l)
            if (sc.mu[lvl][l] != 0) c += sc.mu[lvl][l] * x[l];
        Rational neg = -c;
        Int start = numerator(neg) / denominator(neg);
        if (neg < 0 && Rational(start) != neg) start -= 1;
        auto visit = [&](const Int& v) {
            if (abs(v) > bound) return false;
            Rational s = Rational(v) + c;
            Rational used = sc.d[lvl] * s * s;
            if (used > rem) return false;
            x[var] = v;
            pivot_level(lvl, rem - used);
            return true;
        };
        for (Int v = start; !done() && visit(v); --v) {
        }
        for (Int v = start + 1; !done() && visit(v); ++v) {
        }
        x[var] = 0;
    }
};

}  // namespace

std::vector<IntVec> bounded_solutions(const QuadraticForm& q, const Int& d, long long bound, std::size_t limit) {
    require(bound >= 0, ErrorKind::InvalidInput, "bound must be non-negative");
    if (d < 0) return {};
    SquareCompletion sc = complete_squares(q.gram());
    if (!sc.psd) return box_scan(q, d, bound, -bound, bound, limit);
    Pruned p{sc, d, bound, limit, IntVec(q.n()), {}};
    p.free_level(0);
    return p.out;
}

std::optional<IntVec> first_solution(const QuadraticForm& q, const Int& d, long long bound) {
    auto sols = bounded_solutions(q, d, bound, 1);
    if (sols.empty()) return std::nullopt;
    return sols.front();
}

}  // namespace iqf
