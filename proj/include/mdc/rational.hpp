#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mdc {

using Rational = mpq_class;
using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "p" or "p/q", q > 0. Non-canonical input such as "2/4" is accepted and reduced.
inline Rational parseRational(const std::string& s) {
    if (s.empty()) throw InputError("empty rational");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool slash = false;
    std::size_t digits = 0;
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] == '/') {
            if (slash || digits == 0) throw InputError("bad rational '" + s + "'");
            slash = true;
            digits = 0;
        } else if (s[i] >= '0' && s[i] <= '9') {
            ++digits;
        } else {
            throw InputError("bad rational '" + s + "'");
        }
    }
    if (digits == 0) throw InputError("bad rational '" + s + "'");
    Rational r;
    std::string body = s[0] == '+' ? s.substr(1) : s;
    if (r.set_str(body, 10) != 0) throw InputError("bad rational '" + s + "'");
    if (r.get_den() == 0) throw InputError("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string toString(const Rational& r) {
    return r.get_str(10);
}

inline Rational rat(long p, long q = 1) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

inline RatVector ratVec(std::initializer_list<long> xs) {
    RatVector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

inline bool isZero(const RatVector& v) {
    for (const auto& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

inline RatVector sub(const RatVector& a, const RatVector& b) {
    RatVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline RatVector add(const RatVector& a, const RatVector& b) {
    RatVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline RatVector scale(const RatVector& a, const Rational& s) {
    RatVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    return r;
}

inline Rational dot(const RatVector& a, const RatVector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
    return s;
}

inline RatVector matVec(const RatMatrix& m, const RatVector& v) {
    RatVector r;
    r.reserve(m.size());
    for (const auto& row : m) r.push_back(dot(row, v));
    return r;
}

// Scale so that the first nonzero entry is 1.
inline RatVector normalizeFirst(RatVector v) {
    for (const auto& x : v) {
        if (sgn(x) != 0) {
            Rational inv = 1 / x;
            for (auto& y : v) y *= inv;
            break;
        }
    }
    return v;
}

// Positive scaling to a primitive integer vector.
inline RatVector primitiveInteger(RatVector v) {
    mpz_class l = 1, g = 0;
    for (const auto& x : v) {
        if (sgn(x) == 0) continue;
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    }
    for (auto& x : v) {
        x *= l;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
    }
    if (g != 0)
        for (auto& x : v) x /= Rational(g);
    return v;
}

struct Echelon {
    RatMatrix rows;                // nonzero rows of the RREF
    std::vector<std::size_t> pivots;  // pivot column of each row
    std::size_t cols = 0;
};

// Plain rational Gauss-Jordan. Pivot: first column (left to right) with a
// nonzero entry among the remaining rows, topmost such row.
inline Echelon rref(RatMatrix m, std::size_t cols) {
    for (const auto& row : m)
        if (row.size() != cols) throw InputError("matrix is not rectangular");
    Echelon e;
    e.cols = cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && sgn(m[p][c]) == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        Rational inv = 1 / m[r][c];
        for (std::size_t j = c; j < cols; ++j)
            if (sgn(m[r][j]) != 0) m[r][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || sgn(m[i][c]) == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (sgn(m[r][j]) != 0) m[i][j] -= f * m[r][j];
        }
        e.pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    e.rows = std::move(m);
    return e;
}

inline Echelon rref(const RatMatrix& m) {
    return rref(m, m.empty() ? 0 : m[0].size());
}

inline std::size_t rank(const RatMatrix& m) {
    return rref(m).pivots.size();
}

// Kernel basis read off the free columns of the RREF: one vector per free
// column f, with 1 at f and 0 at the other free columns.
inline std::vector<RatVector> nullspace(const RatMatrix& m, std::size_t cols) {
    Echelon e = rref(m, cols);
    std::vector<bool> isPivot(cols, false);
    for (auto c : e.pivots) isPivot[c] = true;
    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (isPivot[f]) continue;
        RatVector v(cols);
        v[f] = 1;
        for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

inline std::vector<RatVector> nullspace(const RatMatrix& m) {
    return nullspace(m, m.empty() ? 0 : m[0].size());
}

inline bool inSpan(const std::vector<RatVector>& basis, const RatVector& v) {
    if (isZero(v)) return true;
    RatMatrix m = basis;
    std::size_t r0 = rank(m);
    m.push_back(v);
    return rank(m) == r0;
}

// Some x with m x = b, or empty optional-like flag.
inline bool solveLinear(const RatMatrix& m, const RatVector& b, RatVector& x, std::size_t cols) {
    RatMatrix aug = m;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    Echelon e = rref(aug, cols + 1);
    x.assign(cols, 0);
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
        if (e.pivots[i] == cols) return false;
        x[e.pivots[i]] = e.rows[i][cols];
    }
    return true;
}

}  // namespace mdc
