#pragma once

#include "mdc/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace mdc {

enum class Sense { Minimize, Maximize };
enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LinearProgram {
    std::size_t numVars = 0;
    RatMatrix eq;
    RatVector eqRhs;
    RatMatrix le;      // row . x <= rhs
    RatVector leRhs;
    RatVector objective;  // empty means zero objective
    Sense sense = Sense::Minimize;
    std::vector<bool> nonneg;  // optional, per variable; empty means all free

    explicit LinearProgram(std::size_t n = 0) : numVars(n) {}

    void addEq(RatVector row, Rational rhs) {
        eq.push_back(std::move(row));
        eqRhs.push_back(std::move(rhs));
    }
    void addLe(RatVector row, Rational rhs) {
        le.push_back(std::move(row));
        leRhs.push_back(std::move(rhs));
    }
    void addGe(RatVector row, Rational rhs) {
        for (auto& x : row) x = -x;
        addLe(std::move(row), -rhs);
    }
    // row . x < rhs for a homogeneous system: callers may scale solutions freely,
    // so strictness becomes row . x <= rhs - 1.
    void addStrictLt(RatVector row, Rational rhs) { addLe(std::move(row), rhs - 1); }
};

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rational value;
    RatVector point;
};

namespace detail {

struct Tableau {
    std::vector<RatVector> t;  // m rows, n+1 entries (last is rhs)
    RatVector z;               // reduced costs, z[n] = -objective value
    std::vector<std::size_t> basis;
    std::size_t n = 0;

    void pivot(std::size_t r, std::size_t c) {
        Rational inv = 1 / t[r][c];
        for (std::size_t j = 0; j <= n; ++j)
            if (sgn(t[r][j]) != 0) t[r][j] *= inv;
        std::vector<std::size_t> nz;
        for (std::size_t j = 0; j <= n; ++j)
            if (sgn(t[r][j]) != 0) nz.push_back(j);
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i == r || sgn(t[i][c]) == 0) continue;
            Rational f = t[i][c];
            for (auto j : nz) t[i][j] -= f * t[r][j];
        }
        if (sgn(z[c]) != 0) {
            Rational f = z[c];
            for (auto j : nz) z[j] -= f * t[r][j];
        }
        basis[r] = c;
    }

    void priceOut(const RatVector& cost) {
        z.assign(n + 1, 0);
        for (std::size_t j = 0; j < n; ++j) z[j] = cost[j];
        for (std::size_t i = 0; i < t.size(); ++i) {
            const Rational& cb = cost[basis[i]];
            if (sgn(cb) == 0) continue;
            for (std::size_t j = 0; j <= n; ++j)
                if (sgn(t[i][j]) != 0) z[j] -= cb * t[i][j];
        }
    }

    // Bland's rule; allowed[j] masks columns that may enter. Returns false if unbounded.
    bool run(const std::vector<bool>& allowed) {
        for (;;) {
            std::size_t enter = n;
            for (std::size_t j = 0; j < n; ++j) {
                if (allowed[j] && sgn(z[j]) < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == n) return true;
            std::size_t leave = t.size();
            Rational best;
            for (std::size_t i = 0; i < t.size(); ++i) {
                if (sgn(t[i][enter]) <= 0) continue;
                Rational ratio = t[i][n] / t[i][enter];
                if (leave == t.size() || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == t.size()) return false;
            pivot(leave, enter);
        }
    }
};

}  // namespace detail

inline void checkShape(const LinearProgram& lp) {
    if (lp.numVars == 0) throw InputError("linear program needs at least one variable");
    if (lp.eq.size() != lp.eqRhs.size() || lp.le.size() != lp.leRhs.size())
        throw InputError("constraint/rhs count mismatch");
    for (const auto& r : lp.eq)
        if (r.size() != lp.numVars) throw InputError("equality row has wrong length");
    for (const auto& r : lp.le)
        if (r.size() != lp.numVars) throw InputError("inequality row has wrong length");
    if (!lp.objective.empty() && lp.objective.size() != lp.numVars)
        throw InputError("objective has wrong length");
    if (!lp.nonneg.empty() && lp.nonneg.size() != lp.numVars)
        throw InputError("nonneg mask has wrong length");
}

// Two-phase dense simplex over exact rationals with Bland's rule.
inline LpResult solve(const LinearProgram& lp) {
    checkShape(lp);
    const std::size_t nv = lp.numVars;
    // column layout: [x or x+ ] [x- for free vars] [slacks] [artificials]
    std::vector<std::size_t> negCol(nv, SIZE_MAX);
    std::size_t n = nv;
    for (std::size_t j = 0; j < nv; ++j)
        if (lp.nonneg.empty() || !lp.nonneg[j]) negCol[j] = n++;
    const std::size_t slack0 = n;
    n += lp.le.size();
    const std::size_t m = lp.eq.size() + lp.le.size();
    const std::size_t art0 = n;
    n += m;

    detail::Tableau tb;
    tb.n = n;
    tb.t.assign(m, RatVector(n + 1));
    tb.basis.resize(m);
    auto fill = [&](std::size_t i, const RatVector& row, const Rational& rhs) {
        auto& tr = tb.t[i];
        for (std::size_t j = 0; j < nv; ++j) {
            if (sgn(row[j]) == 0) continue;
            tr[j] = row[j];
            if (negCol[j] != SIZE_MAX) tr[negCol[j]] = -row[j];
        }
        tr[n] = rhs;
    };
    std::size_t i = 0;
    for (std::size_t k = 0; k < lp.eq.size(); ++k, ++i) fill(i, lp.eq[k], lp.eqRhs[k]);
    for (std::size_t k = 0; k < lp.le.size(); ++k, ++i) {
        fill(i, lp.le[k], lp.leRhs[k]);
        tb.t[i][slack0 + k] = 1;
    }
    for (i = 0; i < m; ++i) {
        if (sgn(tb.t[i][n]) < 0)
            for (auto& x : tb.t[i]) x = -x;
        tb.t[i][art0 + i] = 1;
        tb.basis[i] = art0 + i;
    }

    // phase 1
    RatVector cost1(n, 0);
    for (std::size_t j = art0; j < n; ++j) cost1[j] = 1;
    tb.priceOut(cost1);
    std::vector<bool> allowed(n, true);
    tb.run(allowed);
    LpResult res;
    if (sgn(tb.z[n]) != 0) {
        res.status = LpStatus::Infeasible;
        return res;
    }
    // drive artificials out of the basis; drop redundant rows
    for (std::size_t r = 0; r < tb.t.size();) {
        if (tb.basis[r] < art0) {
            ++r;
            continue;
        }
        std::size_t c = art0;
        for (std::size_t j = 0; j < art0; ++j)
            if (sgn(tb.t[r][j]) != 0) {
                c = j;
                break;
            }
        if (c == art0) {
            tb.t.erase(tb.t.begin() + static_cast<long>(r));
            tb.basis.erase(tb.basis.begin() + static_cast<long>(r));
            continue;
        }
        tb.pivot(r, c);
        ++r;
    }
    for (std::size_t j = art0; j < n; ++j) allowed[j] = false;

    // phase 2
    RatVector cost2(n, 0);
    const bool maximize = lp.sense == Sense::Maximize;
    if (!lp.objective.empty()) {
        for (std::size_t j = 0; j < nv; ++j) {
            Rational c = maximize ? Rational(-lp.objective[j]) : lp.objective[j];
            cost2[j] = c;
            if (negCol[j] != SIZE_MAX) cost2[negCol[j]] = -c;
        }
    }
    tb.priceOut(cost2);
    if (!tb.run(allowed)) {
        res.status = LpStatus::Unbounded;
        return res;
    }
    RatVector y(n, 0);
    for (std::size_t r = 0; r < tb.t.size(); ++r) y[tb.basis[r]] = tb.t[r][n];
    res.point.assign(nv, 0);
    for (std::size_t j = 0; j < nv; ++j) {
        res.point[j] = y[j];
        if (negCol[j] != SIZE_MAX) res.point[j] -= y[negCol[j]];
    }
    res.status = LpStatus::Optimal;
    res.value = lp.objective.empty() ? Rational(0) : dot(lp.objective, res.point);
    return res;
}

inline bool feasible(const LinearProgram& lp) {
    LinearProgram f = lp;
    f.objective.clear();
    return solve(f).status != LpStatus::Infeasible;
}

// Exact constraint check used by tests and callers that want to re-verify a point.
inline bool satisfies(const LinearProgram& lp, const RatVector& x) {
    if (x.size() != lp.numVars) return false;
    for (std::size_t k = 0; k < lp.eq.size(); ++k)
        if (dot(lp.eq[k], x) != lp.eqRhs[k]) return false;
    for (std::size_t k = 0; k < lp.le.size(); ++k)
        if (dot(lp.le[k], x) > lp.leRhs[k]) return false;
    for (std::size_t j = 0; j < lp.nonneg.size(); ++j)
        if (lp.nonneg[j] && sgn(x[j]) < 0) return false;
    return true;
}

}  // namespace mdc
