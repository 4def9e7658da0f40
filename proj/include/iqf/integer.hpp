#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace iqf {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IntVec = std::vector<Int>;

inline IntVec make_vec(std::initializer_list<long long> xs) {
    IntVec v;
    v.reserve(xs.size());
    for (long long x : xs) v.emplace_back(x);
    return v;
}

inline IntVec zero_vec(std::size_t n) { return IntVec(n, Int(0)); }

inline IntVec unit_vec(std::size_t n, std::size_t i) {
    IntVec v(n, Int(0));
    v[i] = 1;
    return v;
}

inline Int dot(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

inline bool fits_int64(const Int& x) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    return x >= lo && x <= hi;
}

inline int sign_of(const Int& x) { return x.sign(); }

std::string to_string(const IntVec& v);

}  // namespace iqf
