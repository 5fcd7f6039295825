#pragma once

#include "mdc/rational.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <vector>

namespace mdc {

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Double description for a pointed cone {x in Q^n : A x >= 0}; rank(A) must be n.
// Returns the extreme rays as primitive integer vectors, sorted.
// Adjacency of two rays uses the combinatorial test on their zero sets.
inline std::vector<RatVector> extremeRays(const RatMatrix& A, std::size_t n) {
    if (n == 0) return {};
    // seed with the first n independent rows
    std::vector<std::size_t> seed;
    RatMatrix chosen;
    for (std::size_t i = 0; i < A.size() && seed.size() < n; ++i) {
        chosen.push_back(A[i]);
        if (rank(chosen) == chosen.size()) {
            seed.push_back(i);
        } else {
            chosen.pop_back();
        }
    }
    if (seed.size() < n) throw InputError("cone is not pointed");

    struct Ray {
        RatVector x;
        boost::dynamic_bitset<> zero;
    };
    std::vector<Ray> rays;
    // columns of the inverse of the seed matrix: solve chosen * x = e_j
    for (std::size_t j = 0; j < n; ++j) {
        RatVector rhs(n);
        rhs[j] = 1;
        RatVector x;
        solveLinear(chosen, rhs, x, n);
        rays.push_back({primitiveInteger(x), boost::dynamic_bitset<>(A.size())});
    }
    std::vector<bool> inserted(A.size(), false);
    for (auto i : seed) inserted[i] = true;
    for (auto& r : rays)
        for (auto i : seed)
            if (sgn(dot(A[i], r.x)) == 0) r.zero.set(i);

    for (std::size_t i = 0; i < A.size(); ++i) {
        if (inserted[i]) continue;
        inserted[i] = true;
        std::vector<Rational> val(rays.size());
        std::vector<std::size_t> pos, neg;
        std::vector<Ray> next;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            val[r] = dot(A[i], rays[r].x);
            int s = sgn(val[r]);
            if (s > 0) pos.push_back(r);
            if (s < 0) neg.push_back(r);
            if (s >= 0) {
                Ray keep = rays[r];
                if (s == 0) keep.zero.set(i);
                next.push_back(std::move(keep));
            }
        }
        if (neg.empty()) {
            rays = std::move(next);
            continue;
        }
        for (auto p : pos) {
            for (auto q : neg) {
                boost::dynamic_bitset<> common = rays[p].zero & rays[q].zero;
                if (common.count() + 2 < n) continue;
                bool adjacent = true;
                for (std::size_t t = 0; t < rays.size() && adjacent; ++t) {
                    if (t == p || t == q) continue;
                    if (common.is_subset_of(rays[t].zero)) adjacent = false;
                }
                if (!adjacent) continue;
                RatVector w(n);
                for (std::size_t k = 0; k < n; ++k) w[k] = val[p] * rays[q].x[k] - val[q] * rays[p].x[k];
                Ray nr{primitiveInteger(w), common};
                nr.zero.set(i);
                next.push_back(std::move(nr));
            }
        }
        rays = std::move(next);
    }
    std::vector<RatVector> out;
    for (auto& r : rays) out.push_back(std::move(r.x));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace mdc
