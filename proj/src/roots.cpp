#include "nsk/roots.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace nsk {

Vec reflect(const Vec& r, const Vec& c, const Lattice& L) {
    int64_t rr = inner_product(r, r, L);
    if (rr == 0) throw DomainError("reflect: isotropic class");
    int64_t rc = inner_product(r, c, L);
    if ((2 * rc) % rr != 0) throw DomainError("reflect: non-integral image");
    return c - ((2 * rc) / rr) * r;
}

static bool is_root(const Vec& c, const Lattice& L) {
    return inner_product(c, c, L) == -2 && inner_product(c, L.k, L) == 0;
}

static RootBase build_q(const std::vector<Vec>& B, const Lattice& L) {
    int n = L.rank, m = int(B.size());
    for (const auto& b : B)
        if (!is_root(b, L)) throw RootBaseError(RootBaseError::NotARoot, b, "element is not a (-2)-class: " + format_class(b, L));
    RatMatrix bj(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) bj(i, j) = inner_product(B[i], L.unit(j), L);
    std::vector<Vec> ker;
    if (m == 0) {
        for (int j = 0; j < n; ++j) ker.push_back(L.unit(j));
    } else {
        ker = integer_kernel(bj);
    }
    if (m + int(ker.size()) != n) throw RootBaseError(RootBaseError::Dependent, {}, "root base candidate is linearly dependent");
    RootBase rb;
    rb.elements = B;
    rb.q = RatMatrix(n, n);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < n; ++i) rb.q(i, j) = B[j][i];
    for (int j = 0; j < int(ker.size()); ++j)
        for (int i = 0; i < n; ++i) rb.q(i, m + j) = ker[j][i];
    if (!invert(rb.q, rb.q_inv)) throw RootBaseError(RootBaseError::Dependent, {}, "det Q = 0");
    return rb;
}

SpanTest::SpanTest(const RootBase& base, int rank) : n_(rank), m_(int(base.elements.size())) {
    BigInt l = 1;
    for (const auto& x : base.q_inv.a) l = boost::multiprecision::lcm(l, BigInt(denominator(x)));
    den_ = static_cast<int64_t>(l);
    num_.resize(size_t(n_) * n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            Rat v = base.q_inv(i, j) * Rat(l);
            num_[size_t(i) * n_ + j] = static_cast<int64_t>(numerator(v));
        }
}

std::optional<std::vector<int64_t>> SpanTest::coords(const Vec& c) const {
    for (int i = m_; i < n_; ++i) {
        __int128 s = 0;
        for (int j = 0; j < n_; ++j) s += (__int128)num_[size_t(i) * n_ + j] * c[j];
        if (s != 0) return std::nullopt;
    }
    std::vector<int64_t> out(m_);
    for (int i = 0; i < m_; ++i) {
        __int128 s = 0;
        for (int j = 0; j < n_; ++j) s += (__int128)num_[size_t(i) * n_ + j] * c[j];
        if (s % den_ != 0) return std::nullopt;
        out[i] = int64_t(s / den_);
    }
    return out;
}

RootBase is_root_base(const std::vector<Vec>& B, const Lattice& L, const std::vector<Vec>& R_plus) {
    RootBase rb = build_q(B, L);
    SpanTest st(rb, L.rank);
    for (const auto& r : R_plus) {
        auto x = st.coords(r);
        if (!x) continue;
        bool pos = false, neg = false;
        for (int64_t v : *x) {
            pos = pos || v > 0;
            neg = neg || v < 0;
        }
        if (pos && neg)
            throw RootBaseError(RootBaseError::SignCondition, r, "root with mixed signs in the span: " + format_class(r, L));
    }
    return rb;
}

std::optional<RootBase> try_root_base(const std::vector<Vec>& B, const Lattice& L, const std::vector<Vec>& R_plus) {
    try {
        return is_root_base(B, L, R_plus);
    } catch (const RootBaseError&) {
        return std::nullopt;
    }
}

std::string DynkinType::name() const {
    if (components.empty()) return "A0";
    std::string s;
    for (size_t i = 0; i < components.size();) {
        size_t j = i;
        while (j < components.size() && components[j] == components[i]) ++j;
        if (!s.empty()) s += "+";
        if (j - i > 1) s += std::to_string(j - i);
        s += components[i].first;
        s += std::to_string(components[i].second);
        i = j;
    }
    return s;
}

int DynkinType::rank() const {
    int r = 0;
    for (const auto& c : components) r += c.second;
    return r;
}

std::vector<std::vector<int>> dynkin_components(const std::vector<Vec>& roots, const Lattice& L) {
    int n = int(roots.size());
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> cur{s};
        comp[s] = int(out.size());
        for (size_t h = 0; h < cur.size(); ++h)
            for (int j = 0; j < n; ++j)
                if (comp[j] < 0 && inner_product(roots[cur[h]], roots[j], L) != 0) {
                    comp[j] = comp[s];
                    cur.push_back(j);
                }
        std::sort(cur.begin(), cur.end());
        out.push_back(cur);
    }
    return out;
}

DynkinType dynkin_type(const std::vector<Vec>& roots, const Lattice& L) {
    int n = int(roots.size());
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int64_t p = inner_product(roots[i], roots[j], L);
            if (p == 0) continue;
            if (p != 1) throw DomainError("incidence diagram is not simply laced (product " + std::to_string(p) + ")");
            adj[i].push_back(j);
            adj[j].push_back(i);
        }
    DynkinType t;
    for (const auto& comp : dynkin_components(roots, L)) {
        int m = int(comp.size()), edges = 0, branch = -1;
        for (int v : comp) {
            edges += int(adj[v].size());
            if (adj[v].size() > 3) throw DomainError("vertex of degree >= 4 in incidence diagram");
            if (adj[v].size() == 3) {
                if (branch >= 0) throw DomainError("two branch points in incidence diagram");
                branch = v;
            }
        }
        if (edges / 2 != m - 1) throw DomainError("cycle in incidence diagram");
        if (branch < 0) {
            t.components.push_back({'A', m});
            continue;
        }
        std::vector<int> legs;
        for (int start : adj[branch]) {
            int len = 1, prev = branch, cur = start;
            while (true) {
                int next = -1;
                for (int w : adj[cur])
                    if (w != prev) next = w;
                if (next < 0) break;
                prev = cur;
                cur = next;
                ++len;
            }
            legs.push_back(len);
        }
        std::sort(legs.begin(), legs.end());
        if (legs[0] == 1 && legs[1] == 1)
            t.components.push_back({'D', m});
        else if (legs[0] == 1 && legs[1] == 2 && legs[2] >= 2 && legs[2] <= 4)
            t.components.push_back({'E', m});
        else
            throw DomainError("non-ADE incidence diagram");
    }
    std::sort(t.components.begin(), t.components.end());
    return t;
}

DynkinType dynkin_type(const RootBase& B, const Lattice& L) { return dynkin_type(B.elements, L); }

RootSet normalize_root_set(std::vector<Vec> s) {
    for (auto& c : s) c = positive_rep(c);
    sort_classes(s);
    return s;
}

std::set<RootSet> weyl_orbit_closure(const std::vector<Vec>& B, const std::vector<Vec>& R_plus, const Lattice& L) {
    std::set<RootSet> seen;
    std::deque<RootSet> todo;
    RootSet s0 = normalize_root_set(B);
    seen.insert(s0);
    todo.push_back(s0);
    while (!todo.empty()) {
        RootSet cur = todo.front();
        todo.pop_front();
        for (const auto& r : R_plus) {
            std::vector<Vec> img;
            img.reserve(cur.size());
            for (const auto& b : cur) img.push_back(reflect(r, b, L));
            RootSet n = normalize_root_set(std::move(img));
            if (seen.insert(n).second) todo.push_back(std::move(n));
        }
    }
    return seen;
}

RatMatrix involution_matrix(const RootBase& A) {
    int n = A.q.rows;
    RatMatrix D = RatMatrix::identity(n);
    for (size_t i = 0; i < A.elements.size(); ++i) D(int(i), int(i)) = -1;
    return A.q * D * A.q_inv;
}

RealStructure involution_from_base(const RootBase& A, const Lattice& L) {
    return validate_involution(involution_matrix(A), L);
}

std::vector<Vec> simple_roots(const std::vector<Vec>& positive, const Lattice& L) {
    (void)L;
    std::set<Vec> pos(positive.begin(), positive.end());
    std::vector<Vec> out;
    for (const auto& p : positive) {
        bool decomposable = false;
        for (const auto& q : positive) {
            if (q == p) continue;
            if (pos.count(p - q)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) out.push_back(p);
    }
    sort_classes(out);
    return out;
}

}  // namespace nsk
