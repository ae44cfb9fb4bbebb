#include "nsk/classes.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <set>

namespace nsk {

int64_t algo_class_x0_bound(int r, int64_t alpha, int64_t beta) {
    int64_t kk = 9 - r;
    if (kk <= 0) throw DomainError("algo_class box needs r <= 8");
    long double disc = 9.0L * alpha * alpha - (long double)kk * ((long double)alpha * alpha + (long double)r * beta);
    if (disc < 0) return 0;
    long double x = (3.0L * alpha + std::sqrt(disc)) / kk;
    int64_t xm = (int64_t)std::floor(x + 1e-9L);
    // integer safety margin; the exact inequality is re-checked per x0
    while ((kk * (xm + 1) * (xm + 1) - 6 * alpha * (xm + 1) + alpha * alpha + r * beta) <= 0) ++xm;
    return xm < 0 ? 0 : xm;
}

namespace {

void enum_y(int slot, int m, int64_t s, int64_t q, Vec& y, std::vector<Vec>& out) {
    int remaining = m - slot;
    if (remaining == 0) {
        if (s == 0 && q == 0) out.push_back(y);
        return;
    }
    if (s < 0 || q < 0 || q < s || q > s * s || s * s > remaining * q) return;
    int64_t top = std::min<int64_t>(s, (int64_t)std::sqrt((long double)q) + 1);
    for (int64_t v = 0; v <= top; ++v) {
        if (v * v > q) break;
        y[slot] = v;
        enum_y(slot + 1, m, s - v, q - v * v, y, out);
    }
    y[slot] = 0;
}

}  // namespace

std::vector<Vec> algo_class(const Lattice& L, const Vec& d, int64_t alpha, int64_t beta) {
    if (L.kind != BasisKind::Type1) throw DomainError("algo_class: unsupported basis (type 1 only)");
    int r = L.rank - 1;
    std::vector<Vec> out;
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j) {
            Vec c = L.zero();
            c[i] = 1;
            c[j] = -1;
            if (inner_product(d, c, L) == alpha && inner_product(c, c, L) == beta) out.push_back(c);
        }
    for (int i = 1; i <= r; ++i) {
        Vec c = L.unit(i);
        if (inner_product(d, c, L) == alpha && inner_product(c, c, L) == beta) out.push_back(c);
    }
    Vec mk = -L.k;
    if (d == mk) {
        int64_t xmax = algo_class_x0_bound(r, alpha, beta);
        Vec y(r, 0);
        for (int64_t x0 = 1; x0 <= xmax; ++x0) {
            int64_t s = 3 * x0 - alpha, q = x0 * x0 - beta;
            std::vector<Vec> ys;
            enum_y(0, r, s, q, y, ys);
            for (const auto& yy : ys) {
                Vec c(L.rank);
                c[0] = x0;
                for (int i = 0; i < r; ++i) c[i + 1] = -yy[i];
                out.push_back(c);
            }
        }
    } else {
        if (inner_product(d, d, L) <= 0 || d[0] <= 0)
            throw DomainError("algo_class: d must satisfy d^2 > 0 and d.e0 > 0");
        for (const auto& c : enumerate_classes(L, d, alpha, beta)) {
            if (c[0] <= 0) continue;
            bool ok = true;
            for (int i = 1; i <= r && ok; ++i) ok = c[i] <= 0;
            if (ok) out.push_back(c);
        }
    }
    sort_classes(out);
    return out;
}

std::vector<Vec> enumerate_classes(const Lattice& L, const Vec& p, int64_t a, int64_t b) {
    int n = L.rank;
    int64_t pp = inner_product(p, p, L);
    if (pp <= 0) throw DomainError("enumerate_classes: p^2 must be positive");
    // Jp as a row: (Jp)_i = p . basis_i
    std::vector<long double> jp(n);
    for (int i = 0; i < n; ++i) jp[i] = (long double)inner_product(p, L.unit(i), L);
    std::vector<long double> A(size_t(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A[size_t(i) * n + j] = 2.0L * jp[i] * jp[j] - (long double)pp * L.g(i, j);
    long double N = 2.0L * a * a - (long double)pp * b;
    std::vector<Vec> out;
    if (N < 0) return out;

    // Cholesky-type decomposition A(x) = sum_i Q_ii (x_i + sum_{j>i} Q_ij x_j)^2
    std::vector<long double> Q = A;
    auto q = [&](int i, int j) -> long double& { return Q[size_t(i) * n + j]; };
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            q(j, i) = q(i, j);
            q(i, j) = q(i, j) / q(i, i);
        }
        for (int k2 = i + 1; k2 < n; ++k2)
            for (int l = k2; l < n; ++l) q(k2, l) -= q(k2, i) * q(i, l);
    }
    Vec x(n, 0);
    std::vector<long double> T(n + 1, 0), U(n, 0);
    const long double eps = 1e-7L * (1 + N);
    T[n] = N;
    // depth-first over i = n-1 .. 0
    std::vector<int64_t> hi(n);
    int i = n - 1;
    auto setup = [&](int ii) {
        U[ii] = 0;
        for (int j = ii + 1; j < n; ++j) U[ii] += q(ii, j) * x[j];
        long double rad = std::sqrt(std::max<long double>(0, (T[ii + 1] + eps) / q(ii, ii)));
        x[ii] = (int64_t)std::ceil(-U[ii] - rad - 1e-9L);
        hi[ii] = (int64_t)std::floor(-U[ii] + rad + 1e-9L);
    };
    setup(i);
    while (true) {
        if (x[i] > hi[i]) {
            ++i;
            if (i >= n) break;
            ++x[i];
            continue;
        }
        long double t = x[i] + U[i];
        T[i] = T[i + 1] - q(i, i) * t * t;
        if (T[i] < -eps) {
            ++x[i];
            continue;
        }
        if (i == 0) {
            if (inner_product(p, x, L) == a && inner_product(x, x, L) == b) out.push_back(x);
            ++x[i];
            continue;
        }
        --i;
        setup(i);
    }
    sort_classes(out);
    return out;
}

LatticeClasses lattice_classes(const Lattice& L) {
    LatticeClasses lc;
    Vec mk = -L.k;
    if (L.kind == BasisKind::Type1 && L.rank >= 2 && L.rank <= 9) {
        lc.E = algo_class(L, mk, 1, -1);
        lc.R_plus = algo_class(L, mk, 0, -2);
        lc.F = algo_class(L, mk, 2, 0);
    } else if (L.rank == 1) {
        // P2: no (-1)-, (-2)- or conic classes
    } else {
        lc.E = enumerate_classes(L, mk, 1, -1);
        for (const auto& c : enumerate_classes(L, mk, 0, -2))
            if (is_positive(c)) lc.R_plus.push_back(c);
        sort_classes(lc.R_plus);
        lc.F = enumerate_classes(L, mk, 2, 0);
    }
    return lc;
}

const LatticeClasses& cached_lattice_classes(const Lattice& L) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, LatticeClasses> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(int(L.kind), L.rank);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, lattice_classes(L)).first;
    return it->second;
}

bool set_fixed(const RealStructure& sigma, const std::vector<Vec>& S) {
    std::set<Vec> s(S.begin(), S.end());
    for (const auto& c : S)
        if (!s.count(sigma(c))) return false;
    return true;
}

DistinguishedSets distinguished_sets(const Lattice& L, const RealStructure& sigma, const std::vector<Vec>& B) {
    if (!set_fixed(sigma, B)) throw DomainError("invariant violation: sigma does not fix B setwise");
    const auto& lc = cached_lattice_classes(L);
    DistinguishedSets s;
    s.E = lc.E;
    s.R_plus = lc.R_plus;
    s.F = lc.F;
    auto meets_B = [&](const Vec& c) {
        for (const auto& b : B)
            if (inner_product(c, b, L) < 0) return false;
        return true;
    };
    for (const auto& c : s.E)
        if (meets_B(c)) s.E_star.push_back(c);
    for (const auto& c : s.F)
        if (meets_B(c)) s.F_star.push_back(c);
    for (const auto& c : s.E_star)
        if (sigma(c) == c) s.E_real.push_back(c);
    for (const auto& c : s.F_star)
        if (sigma(c) == c) s.F_real.push_back(c);
    for (const auto& c : s.R_plus)
        if (sigma(c) == -c) s.S_minus.push_back(c);
    s.G = simple_family_classes(L, s, sigma, B);
    return s;
}

std::vector<Vec> simple_family_classes(const Lattice& L, const DistinguishedSets& sets, const RealStructure& sigma,
                                       const std::vector<Vec>& B) {
    int deg = L.degree();
    if (deg < 1 || deg > 9) throw DomainError("simple_family_classes: degree out of 1..9");
    if (deg <= 6) return sets.F_real;
    auto divided = [&](int64_t m, Vec& out) {
        out.assign(L.rank, 0);
        for (int i = 0; i < L.rank; ++i) {
            if (L.k[i] % m != 0) return false;
            out[i] = -L.k[i] / m;
        }
        return sigma(out) == out;
    };
    Vec c;
    if (deg == 9) {
        divided(3, c);
        return {c};
    }
    if (!sets.F_real.empty()) return sets.F_real;
    if (divided(2, c)) return {c};
    if (divided(3, c)) return {c};
    // pullback of the pencil-free plane class: c^2 = 1, -k.c = 3, fixed, nef on the curves
    std::vector<Vec> out;
    for (const auto& p : enumerate_classes(L, -L.k, 3, 1)) {
        if (sigma(p) != p) continue;
        bool nef = true;
        for (const auto& e : sets.E_star) nef = nef && inner_product(p, e, L) >= 0;
        for (const auto& b : B) nef = nef && inner_product(p, b, L) >= 0;
        if (nef) out.push_back(p);
    }
    return out;
}

int64_t h0_on(const Lattice& L, const DistinguishedSets& sets, const std::vector<Vec>& B, const Vec& c) {
    return h0(c, sets.E_star, B, L);
}

}  // namespace nsk
