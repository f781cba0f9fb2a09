#pragma once

#include <boost/container/small_vector.hpp>
#include <boost/container_hash/hash.hpp>

#include <cstddef>
#include <string>

namespace qclust {

using Exponent = boost::container::small_vector<int, 12>;

inline long degree(const Exponent& v) {
    long s = 0;
    for (int x : v) s += x;
    return s;
}

// Graded lexicographic order; translation invariant on Z^n.
struct GrlexLess {
    bool operator()(const Exponent& a, const Exponent& b) const {
        long da = degree(a), db = degree(b);
        if (da != db) return da < db;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

struct ExponentHash {
    std::size_t operator()(const Exponent& v) const {
        return boost::hash_range(v.begin(), v.end());
    }
};

inline Exponent unitVector(std::size_t rank, std::size_t i, int c = 1) {
    Exponent v(rank, 0);
    v[i] = c;
    return v;
}

inline Exponent operator+(const Exponent& a, const Exponent& b) {
    Exponent r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

inline Exponent operator-(const Exponent& a, const Exponent& b) {
    Exponent r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

inline Exponent scaled(const Exponent& a, int k) {
    Exponent r(a);
    for (auto& x : r) x *= k;
    return r;
}

inline std::string formatExponent(const Exponent& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

}  // namespace qclust
