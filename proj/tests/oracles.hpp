// Reference implementations used only by the tests. They share no code with
// the library beyond the Lattice and Vec types.
#pragma once

#include "nsk/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

using nsk::Lattice;
using nsk::Vec;

inline int64_t form(const Lattice& L, const Vec& a, const Vec& b) {
    int64_t s = 0;
    for (int i = 0; i < L.rank; ++i)
        for (int j = 0; j < L.rank; ++j) s += a[i] * L.gram[size_t(i) * L.rank + j] * b[j];
    return s;
}

// Type 1 classes c with k.c = kc and c^2 = sq, |c_i| <= N. Coordinates after
// the first are scanned in nonincreasing order of index with a running bound
// on the remaining squares, then every permutation of the tail is emitted.
inline std::vector<Vec> box_scan(const Lattice& L, int64_t kc, int64_t sq, int N) {
    std::set<Vec> out;
    int r = L.rank - 1;
    for (int64_t c0 = -N; c0 <= N; ++c0) {
        int64_t need = c0 * c0 - sq;  // sum of c_i^2
        int64_t lin = -kc - 3 * c0;   // sum of c_i, since k.c = -3 c0 - sum c_i
        if (need < 0) continue;
        std::vector<int64_t> tail;
        std::function<void(int, int64_t, int64_t, int64_t)> rec = [&](int left, int64_t rem_sq, int64_t rem_lin,
                                                                      int64_t cap) {
            if (left == 0) {
                if (rem_sq == 0 && rem_lin == 0) {
                    auto t = tail;
                    std::sort(t.begin(), t.end());
                    do {
                        Vec c{c0};
                        c.insert(c.end(), t.begin(), t.end());
                        out.insert(c);
                    } while (std::next_permutation(t.begin(), t.end()));
                }
                return;
            }
            // remaining values are <= cap; Cauchy-Schwarz on what is left
            if (rem_lin * rem_lin > rem_sq * left) return;
            for (int64_t v = std::min<int64_t>(cap, N); v >= -N; --v) {
                if (v * v > rem_sq) continue;
                tail.push_back(v);
                rec(left - 1, rem_sq - v * v, rem_lin - v, v);
                tail.pop_back();
            }
        };
        rec(r, need, lin, N);
    }
    return {out.begin(), out.end()};
}

inline int64_t rr(const Lattice& L, const Vec& q) {
    int64_t t = form(L, q, q) - form(L, L.k, q);
    return std::max<int64_t>(0, t / 2 + 1);
}

// h0 by peeling along every possible order; returns the set of values reached.
inline std::set<int64_t> h0_all_orders(const Lattice& L, const Vec& c, const std::vector<Vec>& curves,
                                       const std::vector<Vec>& probes) {
    std::set<int64_t> vals;
    std::function<void(const Vec&, int)> go = [&](const Vec& x, int depth) {
        bool zero = std::all_of(x.begin(), x.end(), [](int64_t v) { return v == 0; });
        if (zero) {
            vals.insert(1);
            return;
        }
        bool any = false;
        for (const auto& b : curves)
            if (form(L, x, b) < 0 && depth < 64) {
                any = true;
                Vec y = x;
                for (size_t i = 0; i < y.size(); ++i) y[i] -= b[i];
                go(y, depth + 1);
            }
        if (any) return;
        bool nef = std::all_of(probes.begin(), probes.end(), [&](const Vec& p) { return form(L, x, p) >= 0; });
        vals.insert(nef ? rr(L, x) : 0);
    };
    go(c, 0);
    return vals;
}

// Backtracking isomorphism of symmetric code matrices.
inline bool isomorphic(const std::vector<std::vector<int64_t>>& a, const std::vector<std::vector<int64_t>>& b) {
    size_t n = a.size();
    if (b.size() != n) return false;
    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    std::function<bool(size_t)> go = [&](size_t i) {
        if (i == n) return true;
        for (size_t j = 0; j < n; ++j) {
            if (used[j] || a[i][i] != b[j][j]) continue;
            bool ok = true;
            for (size_t p = 0; p < i && ok; ++p) ok = a[i][p] == b[j][map[p]];
            if (!ok) continue;
            used[j] = true;
            map[i] = int(j);
            if (go(i + 1)) return true;
            used[j] = false;
        }
        map[i] = -1;
        return false;
    };
    return go(0);
}

}  // namespace oracle
