#include "iqf/matrix.hpp"

#include "iqf/errors.hpp"

#include <algorithm>
#include <sstream>

namespace iqf {

std::string to_string(const IntVec& v) {
    std::ostringstream os;
    os << '[';
    for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
    os << ']';
    return os.str();
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        require(r.size() == cols_, ErrorKind::InvalidInput, "ragged matrix literal");
        for (long long x : r) a_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

IntVec IntMatrix::row(std::size_t i) const {
    return IntVec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

IntVec IntMatrix::col(std::size_t j) const {
    IntVec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

void IntMatrix::set_row(std::size_t i, const IntVec& v) {
    require(v.size() == cols_, ErrorKind::InvalidInput, "row length mismatch");
    std::copy(v.begin(), v.end(), a_.begin() + i * cols_);
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool IntMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool IntMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Int& x) { return x == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    require(a.cols() == b.rows(), ErrorKind::InvalidInput, "matrix product dimension mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

IntVec operator*(const IntMatrix& a, const IntVec& x) {
    require(a.cols() == x.size(), ErrorKind::InvalidInput, "matrix-vector dimension mismatch");
    IntVec y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) y[i] += a(i, k) * x[k];
    return y;
}

SquareCompletion complete_squares(const IntMatrix& g) {
    require(g.is_symmetric(), ErrorKind::InvalidInput, "Gram matrix must be symmetric");
    const std::size_t n = g.rows();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(g(i, j), 2);

    SquareCompletion out;
    std::vector<bool> active(n, true);
    for (;;) {
        std::size_t k = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (!active[i]) continue;
            if (a[i][i] < 0) {
                out.psd = false;
                return out;
            }
            if (k == n && a[i][i] > 0) k = i;
        }
        if (k == n) break;
        std::vector<Rational> mu(n);
        for (std::size_t l = 0; l < n; ++l)
            if (active[l] && l != k) mu[l] = a[k][l] / a[k][k];
        for (std::size_t i = 0; i < n; ++i) {
            if (!active[i] || i == k || a[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (active[j] && j != k) a[i][j] -= a[i][k] * mu[j];
        }
        out.pivot.push_back(k);
        out.d.push_back(a[k][k]);
        out.mu.push_back(std::move(mu));
        active[k] = false;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!active[i]) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (active[j] && a[i][j] != 0) {
                out.psd = false;
                return out;
            }
        out.free_vars.push_back(i);
    }
    return out;
}

namespace {

// Fraction-free Gaussian elimination; returns rank and tracks the sign of the
// determinant for square input.
std::size_t bareiss(std::vector<std::vector<Int>> a, std::size_t cols, Int* det) {
    const std::size_t rows = a.size();
    Int prev = 1;
    int sign = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            std::swap(a[p], a[r]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    if (det) {
        if (rows == cols && r == rows)
            *det = sign * a[rows - 1][cols - 1];
        else
            *det = 0;
    }
    return r;
}

std::vector<std::vector<Int>> to_rows(const IntMatrix& m) {
    std::vector<std::vector<Int>> a(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) a[i] = m.row(i);
    return a;
}

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
    return q;
}

// Integer row echelon over the first `width` columns. With reduce_above the
// result is the row Hermite normal form on those columns.
std::size_t echelon(std::vector<IntVec>& rows, std::size_t width, bool reduce_above) {
    std::size_t pr = 0;
    for (std::size_t c = 0; c < width && pr < rows.size(); ++c) {
        for (;;) {
            std::size_t best = rows.size();
            for (std::size_t r = pr; r < rows.size(); ++r)
                if (rows[r][c] != 0 && (best == rows.size() || abs(rows[r][c]) < abs(rows[best][c]))) best = r;
            if (best == rows.size()) break;
            std::swap(rows[pr], rows[best]);
            bool clean = true;
            for (std::size_t r = pr + 1; r < rows.size(); ++r) {
                if (rows[r][c] == 0) continue;
                Int q = rows[r][c] / rows[pr][c];
                for (std::size_t j = 0; j < rows[r].size(); ++j) rows[r][j] -= q * rows[pr][j];
                if (rows[r][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (rows[pr][c] == 0) continue;
        if (rows[pr][c] < 0)
            for (auto& x : rows[pr]) x = -x;
        if (reduce_above)
            for (std::size_t r = 0; r < pr; ++r) {
                Int q = floor_div(rows[r][c], rows[pr][c]);
                if (q != 0)
                    for (std::size_t j = 0; j < rows[r].size(); ++j) rows[r][j] -= q * rows[pr][j];
            }
        ++pr;
    }
    return pr;
}

}  // namespace

PsdRank psd_rank(const IntMatrix& g) {
    SquareCompletion sc = complete_squares(g);
    return {sc.psd, rank(g)};
}

std::size_t rank(const IntMatrix& m) { return bareiss(to_rows(m), m.cols(), nullptr); }

Int determinant(const IntMatrix& m) {
    require(m.rows() == m.cols(), ErrorKind::InvalidInput, "determinant of non-square matrix");
    if (m.rows() == 0) return 1;
    Int d;
    bareiss(to_rows(m), m.cols(), &d);
    return d;
}

bool is_unimodular(const IntMatrix& m) {
    if (m.rows() != m.cols()) return false;
    return abs(determinant(m)) == 1;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
    require(is_unimodular(m), ErrorKind::InvalidInput, "matrix is not unimodular");
    const std::size_t n = m.rows();
    std::vector<IntVec> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        rows[i] = m.row(i);
        rows[i].resize(2 * n);
        rows[i][n + i] = 1;
    }
    echelon(rows, n, true);
    IntMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        require(rows[i][i] == 1, ErrorKind::InvalidInput, "inverse is not integral");
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = rows[i][n + j];
    }
    return inv;
}

std::vector<IntVec> hermite_rows(std::vector<IntVec> rows) {
    if (rows.empty()) return rows;
    echelon(rows, rows[0].size(), true);
    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [](const IntVec& v) { return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; }); }),
               rows.end());
    return rows;
}

std::vector<IntVec> integer_kernel(const IntMatrix& m) {
    const std::size_t r = m.rows(), c = m.cols();
    std::vector<IntVec> rows(c, IntVec(r + c));
    for (std::size_t k = 0; k < c; ++k) {
        for (std::size_t i = 0; i < r; ++i) rows[k][i] = m(i, k);
        rows[k][r + k] = 1;
    }
    std::size_t used = echelon(rows, r, false);
    std::vector<IntVec> basis;
    for (std::size_t k = used; k < c; ++k) basis.emplace_back(rows[k].begin() + r, rows[k].end());
    return hermite_rows(std::move(basis));
}

}  // namespace iqf
