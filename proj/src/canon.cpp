#include "nsk/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nsk {

namespace {

uint64_t code_hash(int32_t c) {
    uint64_t z = uint64_t(int64_t(c)) + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Ordered partition: lab holds the vertices, a cell occupies [s, end[s]).
struct Partition {
    std::vector<int> lab, cell_of, end;
    int cells = 0;
};

class Searcher {
public:
    explicit Searcher(const CodeGraph& g) : g_(g), n_(g.n) {
        int32_t lo = 0, hi = 0;
        for (auto c : g.code) {
            lo = std::min(lo, c);
            hi = std::max(hi, c);
        }
        lo_ = lo;
        hash_.resize(size_t(hi - lo + 1));
        for (int32_t c = lo; c <= hi; ++c) hash_[size_t(c - lo)] = code_hash(c);
        key_.assign(n_, 0);
    }

    CanonicalForm run() {
        CanonicalForm out;
        if (n_ == 0) return out;
        Partition p;
        p.lab.resize(n_);
        std::iota(p.lab.begin(), p.lab.end(), 0);
        std::stable_sort(p.lab.begin(), p.lab.end(), [&](int a, int b) { return g_(a, a) < g_(b, b); });
        p.cell_of.assign(n_, 0);
        p.end.assign(n_, 0);
        std::vector<int> queue;
        for (int s = 0; s < n_;) {
            int e = s;
            while (e < n_ && g_(p.lab[e], p.lab[e]) == g_(p.lab[s], p.lab[s])) ++e;
            p.end[s] = e;
            for (int i = s; i < e; ++i) p.cell_of[p.lab[i]] = s;
            queue.push_back(s);
            ++p.cells;
            s = e;
        }
        refine(p, queue);
        prefix_.clear();
        search(p, 0);
        out.order = best_lab_;
        out.form = best_form_;
        out.generators = gens_;
        return out;
    }

private:
    const CodeGraph& g_;
    int n_;
    int32_t lo_;
    std::vector<uint64_t> hash_;
    std::vector<uint64_t> key_;
    std::vector<int> prefix_;
    bool have_first_ = false;
    std::vector<int> first_lab_, best_lab_, first_prefix_, best_prefix_;
    std::vector<int32_t> first_form_, best_form_;
    std::vector<std::vector<int>> gens_;

    void refine(Partition& p, std::vector<int> queue) {
        std::vector<char> in_queue(n_, 0);
        for (int s : queue) in_queue[s] = 1;
        size_t head = 0;
        std::vector<int> W, idx;
        while (head < queue.size() && p.cells < n_) {
            int ws = queue[head++];
            in_queue[ws] = 0;
            W.assign(p.lab.begin() + ws, p.lab.begin() + p.end[ws]);
            for (int s = 0; s < n_; s = p.end[s]) {
                int e = p.end[s];
                if (e - s == 1) continue;
                for (int i = s; i < e; ++i) {
                    int v = p.lab[i];
                    const int32_t* row = &g_.code[size_t(v) * n_];
                    uint64_t k = 0;
                    for (int w : W) k += hash_[size_t(row[w] - lo_)];
                    key_[v] = k;
                }
                bool split = false;
                for (int i = s + 1; i < e && !split; ++i) split = key_[p.lab[i]] != key_[p.lab[s]];
                if (!split) continue;
                std::sort(p.lab.begin() + s, p.lab.begin() + e, [&](int a, int b) {
                    return key_[a] != key_[b] ? key_[a] < key_[b] : a < b;
                });
                std::vector<int> starts;
                for (int i = s; i < e;) {
                    int j = i;
                    while (j < e && key_[p.lab[j]] == key_[p.lab[i]]) ++j;
                    starts.push_back(i);
                    p.end[i] = j;
                    for (int t = i; t < j; ++t) p.cell_of[p.lab[t]] = i;
                    i = j;
                }
                p.cells += int(starts.size()) - 1;
                if (in_queue[s]) {
                    for (size_t t = 1; t < starts.size(); ++t) {
                        queue.push_back(starts[t]);
                        in_queue[starts[t]] = 1;
                    }
                } else {
                    size_t largest = 0;
                    for (size_t t = 1; t < starts.size(); ++t)
                        if (p.end[starts[t]] - starts[t] > p.end[starts[largest]] - starts[largest]) largest = t;
                    for (size_t t = 0; t < starts.size(); ++t) {
                        if (t == largest) continue;
                        queue.push_back(starts[t]);
                        in_queue[starts[t]] = 1;
                    }
                }
            }
        }
    }

    void individualize(Partition& p, int v) {
        int s = p.cell_of[v];
        int e = p.end[s];
        auto it = std::find(p.lab.begin() + s, p.lab.begin() + e, v);
        std::iter_swap(p.lab.begin() + s, it);
        p.end[s] = s + 1;
        p.end[s + 1] = e;
        for (int i = s + 1; i < e; ++i) p.cell_of[p.lab[i]] = s + 1;
        ++p.cells;
        refine(p, {s});
    }

    std::vector<int32_t> relabeled(const std::vector<int>& lab) const {
        std::vector<int32_t> f(size_t(n_) * n_);
        for (int i = 0; i < n_; ++i) {
            const int32_t* row = &g_.code[size_t(lab[i]) * n_];
            int32_t* out = &f[size_t(i) * n_];
            for (int j = 0; j < n_; ++j) out[j] = row[lab[j]];
        }
        return f;
    }

    static int divergence(const std::vector<int>& a, const std::vector<int>& b) {
        size_t d = 0;
        while (d < a.size() && d < b.size() && a[d] == b[d]) ++d;
        return int(d);
    }

    void add_generator(const std::vector<int>& from, const std::vector<int>& to) {
        std::vector<int> gmap(n_);
        for (int i = 0; i < n_; ++i) gmap[from[i]] = to[i];
        bool identity = true;
        for (int i = 0; i < n_ && identity; ++i) identity = gmap[i] == i;
        if (!identity) gens_.push_back(std::move(gmap));
    }

    int leaf(const Partition& p, int depth) {
        auto f = relabeled(p.lab);
        if (!have_first_) {
            have_first_ = true;
            first_lab_ = best_lab_ = p.lab;
            first_form_ = best_form_ = f;
            first_prefix_ = best_prefix_ = prefix_;
            return depth;
        }
        if (f == first_form_) {
            add_generator(p.lab, first_lab_);
            return divergence(prefix_, first_prefix_);
        }
        if (f == best_form_) {
            add_generator(p.lab, best_lab_);
            return divergence(prefix_, best_prefix_);
        }
        if (f < best_form_) {
            best_form_ = std::move(f);
            best_lab_ = p.lab;
            best_prefix_ = prefix_;
        }
        return depth;
    }

    int search(const Partition& p, int depth) {
        if (p.cells == n_) return leaf(p, depth);
        int target = -1, size = n_ + 1;
        for (int s = 0; s < n_; s = p.end[s]) {
            int sz = p.end[s] - s;
            if (sz > 1 && sz < size) {
                size = sz;
                target = s;
            }
        }
        std::vector<int> cell(p.lab.begin() + target, p.lab.begin() + p.end[target]);
        std::sort(cell.begin(), cell.end());
        std::vector<int> tried;
        for (int v : cell) {
            if (!tried.empty()) {
                std::vector<std::vector<int>> stab;
                for (const auto& gm : gens_) {
                    bool fixes = true;
                    for (int i = 0; i < depth && fixes; ++i) fixes = gm[prefix_[i]] == prefix_[i];
                    if (fixes) stab.push_back(gm);
                }
                auto rep = orbit_representatives(n_, stab);
                bool seen = false;
                for (int u : tried) seen = seen || rep[u] == rep[v];
                if (seen) continue;
            }
            Partition q = p;
            prefix_.push_back(v);
            individualize(q, v);
            int r = search(q, depth + 1);
            prefix_.pop_back();
            if (r < depth) return r;
            tried.push_back(v);
        }
        return depth;
    }
};

}  // namespace

std::vector<int> orbit_representatives(int n, const std::vector<std::vector<int>>& gens) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& gm : gens)
        for (int i = 0; i < n; ++i) {
            int a = find(i), b = find(gm[i]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::vector<int> rep(n);
    for (int i = 0; i < n; ++i) rep[i] = find(i);
    return rep;
}

CanonicalForm canonical_form(const CodeGraph& g) {
    Searcher s(g);
    return s.run();
}

CodeGraph permute(const CodeGraph& g, const std::vector<int>& pos) {
    CodeGraph h(g.n);
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) h.at(pos[i], pos[j]) = g(i, j);
    return h;
}

namespace {

bool extend(const CodeGraph& a, const CodeGraph& b, std::vector<int>& map, std::vector<char>& used, int v,
            const std::vector<std::vector<int32_t>>& sig_a, const std::vector<std::vector<int32_t>>& sig_b) {
    if (v == a.n) return true;
    for (int w = 0; w < b.n; ++w) {
        if (used[w] || sig_a[v] != sig_b[w]) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u) ok = a(u, v) == b(map[u], w);
        if (!ok) continue;
        map[v] = w;
        used[w] = 1;
        if (extend(a, b, map, used, v + 1, sig_a, sig_b)) return true;
        used[w] = 0;
    }
    return false;
}

std::vector<std::vector<int32_t>> signatures(const CodeGraph& g) {
    std::vector<std::vector<int32_t>> s(g.n);
    for (int i = 0; i < g.n; ++i) {
        std::vector<int32_t> row;
        for (int j = 0; j < g.n; ++j)
            if (j != i) row.push_back(g(i, j));
        std::sort(row.begin(), row.end());
        row.push_back(g(i, i));
        s[i] = std::move(row);
    }
    return s;
}

}  // namespace

bool brute_force_isomorphic(const CodeGraph& a, const CodeGraph& b) {
    if (a.n != b.n) return false;
    auto sa = signatures(a), sb = signatures(b);
    auto ma = sa, mb = sb;
    std::sort(ma.begin(), ma.end());
    std::sort(mb.begin(), mb.end());
    if (ma != mb) return false;
    std::vector<int> map(a.n, -1);
    std::vector<char> used(b.n, 0);
    return extend(a, b, map, used, 0, sa, sb);
}

}  // namespace nsk
