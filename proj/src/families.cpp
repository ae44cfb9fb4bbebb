#include "nsk/families.hpp"

#include "nsk/io.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace nsk {

FamilyGraph family_graph(const std::vector<Vec>& classes, const std::vector<int64_t>& labels, const Lattice& L) {
    FamilyGraph g;
    g.classes = classes;
    g.labels = labels;
    int n = g.size();
    g.products.assign(n, std::vector<int64_t>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) g.products[i][j] = g.products[j][i] = dot(L, classes[i], classes[j]);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.products[i][j] >= 2) g.edges.push_back({i, j, g.products[i][j]});
    return g;
}

FamilyGraph simple_family_graph(const LatticeClassRecord& rec) {
    Lattice L = rec.lattice();
    auto sets = distinguished_sets(L, rec.sigma, rec.B_classes);
    std::vector<int64_t> labels;
    for (const auto& c : sets.G) labels.push_back(h0_on(L, sets, rec.B_classes, c) - 1);
    return family_graph(sets.G, labels, L);
}

std::vector<HexTriple> hexagonal_triples(const FamilyGraph& g) {
    int n = g.size();
    // non-neighbours with a larger index
    std::vector<std::vector<int>> low(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.products[i][j] < 2) low[i].push_back(j);
    std::vector<HexTriple> out;
    for (int u = 0; u < n; ++u) {
        const auto& a = low[u];
        for (size_t x = 0; x < a.size(); ++x)
            for (size_t y = x + 1; y < a.size(); ++y)
                if (g.products[a[x]][a[y]] < 2) out.push_back({u, a[x], a[y], std::nullopt});
    }
    return out;
}

std::vector<HexTriple> hexagonal_triples(const FamilyGraph& g, const std::vector<Vec>& E_star, const Lattice& L) {
    auto out = hexagonal_triples(g);
    for (auto& t : out)
        for (const auto& c : E_star)
            if (dot(L, c, g.classes[t.u]) == 0 && dot(L, c, g.classes[t.v]) == 0 && dot(L, c, g.classes[t.w]) == 0) {
                t.witness = c;
                break;
            }
    return out;
}

std::vector<HexTriple> hexagonal_triples(const LatticeClassRecord& rec) {
    auto g = simple_family_graph(rec);
    if (rec.degree > 5) return hexagonal_triples(g);
    Lattice L = rec.lattice();
    auto sets = distinguished_sets(L, rec.sigma, rec.B_classes);
    return hexagonal_triples(g, sets.E_star, L);
}

// ---------------------------------------------------------------- shapes

std::string GraphShape::describe() const {
    std::ostringstream os;
    os << "case " << kind;
    switch (kind) {
    case 1:
        os << ", " << m << " vertices";
        if (sphere) os << ", sphere";
        break;
    case 3:
        os << ", m=" << m << (hub ? ", hub" : ", no hub");
        break;
    case 4:
        os << ", m=" << m << ", " << apexes << " apex vertices";
        break;
    case 5:
        os << ", m=" << m << ", tau with " << tau_fixed << " fixed points and " << tau_swapped << " swaps";
        break;
    default:
        break;
    }
    return os.str();
}

static CodeGraph shape_code(const FamilyGraph& g) {
    CodeGraph c(g.size());
    for (int i = 0; i < g.size(); ++i) c.at(i, i) = int32_t(g.labels[i]) + 1;
    for (const auto& e : g.edges) c.at(e.i, e.j) = c.at(e.j, e.i) = int32_t(e.label);
    return c;
}

static std::vector<int> degree_profile(const CodeGraph& c) {
    std::vector<int> d;
    for (int i = 0; i < c.n; ++i) {
        int s = c(i, i) * 1000;
        for (int j = 0; j < c.n; ++j)
            if (j != i) s += c(i, j);
        d.push_back(s);
    }
    std::sort(d.begin(), d.end());
    return d;
}

static bool same_shape(const CodeGraph& a, const CodeGraph& b) {
    if (a.n != b.n) return false;
    if (degree_profile(a) != degree_profile(b)) return false;
    return canonical_form(a).form == canonical_form(b).form;
}

static CodeGraph pairs_template(int m, bool hub) {
    std::vector<std::pair<int, int>> v;
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) v.push_back({a, b});
    int n = int(v.size()) + (hub ? 1 : 0);
    CodeGraph c(n);
    for (size_t i = 0; i < v.size(); ++i) {
        c.at(i, i) = 2;
        for (size_t j = i + 1; j < v.size(); ++j) {
            int common = (v[i].first == v[j].first) + (v[i].first == v[j].second) + (v[i].second == v[j].first) +
                         (v[i].second == v[j].second);
            c.at(i, j) = c.at(j, i) = 4 - 2 * common;
        }
    }
    if (hub) {
        int h = n - 1;
        c.at(h, h) = 3;
        for (int i = 0; i < h; ++i) c.at(h, i) = c.at(i, h) = 2;
    }
    return c;
}

static CodeGraph fixed_pairs_template(int fixed, int swapped) {
    // vertices: pairs of fixed points, then the swapped pairs
    std::vector<std::pair<int, int>> v;
    for (int a = 0; a < fixed; ++a)
        for (int b = a + 1; b < fixed; ++b) v.push_back({a, b});
    for (int s = 0; s < swapped; ++s) v.push_back({fixed + 2 * s, fixed + 2 * s + 1});
    CodeGraph c(int(v.size()));
    for (size_t i = 0; i < v.size(); ++i) {
        c.at(i, i) = 2;
        for (size_t j = i + 1; j < v.size(); ++j) {
            bool meet = v[i].first == v[j].first || v[i].first == v[j].second || v[i].second == v[j].first ||
                        v[i].second == v[j].second;
            c.at(i, j) = c.at(j, i) = meet ? 0 : 2;
        }
    }
    return c;
}

GraphShape graph_shape(const FamilyGraph& g) {
    int n = g.size();
    GraphShape s;
    auto max_label = n ? *std::max_element(g.labels.begin(), g.labels.end()) : 0;

    if (g.edges.empty()) {
        bool ok = max_label <= 1 || (n == 1 && (max_label == 2 || max_label == 3));
        if (ok) {
            s.kind = 1;
            s.m = n;
            s.sphere = n == 1 && max_label == 3;
            return s;
        }
    }
    CodeGraph code = shape_code(g);

    for (int m = 3; m * (m - 1) / 2 <= n; ++m)
        for (bool hub : {false, true})
            if (m * (m - 1) / 2 + (hub ? 1 : 0) == n && same_shape(code, pairs_template(m, hub))) {
                s.kind = 3;
                s.m = m;
                s.hub = hub;
                return s;
            }

    bool unit_labels = std::all_of(g.labels.begin(), g.labels.end(), [](int64_t l) { return l == 1; });
    bool label2 = std::all_of(g.edges.begin(), g.edges.end(), [](const FamilyEdge& e) { return e.label == 2; });
    if (unit_labels && label2 && n >= 2) {
        std::vector<int> deg(n, 0);
        for (const auto& e : g.edges) ++deg[e.i], ++deg[e.j];
        std::vector<int> rest;
        int core = 0;
        for (int i = 0; i < n; ++i) {
            if (deg[i] == n - 1)
                ++core;
            else
                rest.push_back(i);
        }
        bool independent = true;
        for (size_t a = 0; a < rest.size() && independent; ++a)
            for (size_t b = a + 1; b < rest.size(); ++b)
                if (g.products[rest[a]][rest[b]] >= 2) {
                    independent = false;
                    break;
                }
        if (core >= 2 && independent) {
            s.kind = 4;
            s.m = core;
            s.apexes = int(rest.size());
            return s;
        }
        for (int f = 0; f * (f - 1) / 2 <= n; ++f) {
            int p = n - f * (f - 1) / 2;
            if (f + 2 * p < 2) continue;
            if (same_shape(code, fixed_pairs_template(f, p))) {
                s.kind = 5;
                s.m = f + 2 * p;
                s.tau_fixed = f;
                s.tau_swapped = p;
                return s;
            }
        }
    }

    bool edge_ok = std::all_of(g.edges.begin(), g.edges.end(), [](const FamilyEdge& e) { return e.label <= 8; });
    if (unit_labels && edge_ok && n <= 2160 && g.edges.size() <= 2262600) {
        s.kind = 2;
        s.m = n;
        return s;
    }
    throw DomainError("family graph matches none of the five shapes");
}

// ---------------------------------------------------------------- AlgoBases

static int64_t abs_det(const std::vector<Vec>& cols) {
    RatMatrix m(int(cols.size()), int(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j)
        for (size_t i = 0; i < cols.size(); ++i) m(int(i), int(j)) = cols[j][i];
    Rat d = determinant(m);
    if (d < 0) d = -d;
    return d == 1 ? 1 : (d == 0 ? 0 : 2);
}

static int matrix_rank(const std::vector<Vec>& v, int n) {
    RatMatrix m(int(v.size()), n);
    for (size_t i = 0; i < v.size(); ++i)
        for (int j = 0; j < n; ++j) m(int(i), j) = v[i][j];
    return n - int(integer_kernel(m).size());
}

static void algo_bases_rec(const std::vector<Vec>& a, const std::vector<Vec>& E, const std::vector<Vec>& B,
                           const RealStructure& sigma, const Lattice& L, std::vector<std::vector<Vec>>& out,
                           std::set<std::vector<Vec>>& seen) {
    if (int(a.size()) == L.rank) {
        auto key = a;
        sort_classes(key);
        if (seen.insert(key).second) out.push_back(a);
        return;
    }
    std::vector<Vec> cand;
    for (const auto& c : E) {
        bool ok = std::all_of(a.begin(), a.end(), [&](const Vec& x) { return dot(L, c, x) == 0; }) &&
                  std::all_of(B.begin(), B.end(), [&](const Vec& b) { return dot(L, c, b) >= 0; }) &&
                  dot(L, c, sigma(c)) <= 0;
        if (ok) cand.push_back(c);
    }
    for (const auto& c : cand) {
        Vec sc = sigma(c);
        std::vector<Vec> nb, ne;
        for (const auto& b : B)
            if (dot(L, b, c) == 0 && dot(L, b, sc) == 0) nb.push_back(b);
        for (const auto& e : E)
            if (dot(L, e, c) == 0 && dot(L, e, sc) == 0) ne.push_back(e);
        auto next = a;
        next.push_back(c);
        if (sc != c) next.push_back(sc);
        if (int(next.size()) > L.rank) continue;
        algo_bases_rec(next, ne, nb, sigma, L, out, seen);
    }
}

std::vector<std::vector<Vec>> algo_bases(const std::vector<Vec>& seed, const std::vector<Vec>& E,
                                         const std::vector<Vec>& B, const RealStructure& sigma, const Lattice& L) {
    if (seed.empty()) throw ValidationError("seed must be nonempty");
    if (matrix_rank(seed, L.rank) != int(seed.size())) throw ValidationError("seed is linearly dependent");
    if (!set_fixed(sigma, seed)) throw ValidationError("seed is not sigma-stable");
    std::vector<std::vector<Vec>> out;
    std::set<std::vector<Vec>> seen;
    algo_bases_rec(seed, E, B, sigma, L, out, seen);
    std::vector<std::vector<Vec>> bases;
    for (auto& b : out)
        if (abs_det(b) == 1) bases.push_back(std::move(b));
    return bases;
}

// ---------------------------------------------------------------- adjoint chains

std::string to_string(TerminalKind t) {
    switch (t) {
    case TerminalKind::WeakDelPezzo:
        return "weak_del_pezzo";
    case TerminalKind::P1Bundle:
        return "p1_bundle";
    default:
        return "none";
    }
}

std::vector<Vec> AdjointChain::all_contracted() const {
    std::vector<Vec> out;
    for (const auto& c : contracted) out.insert(out.end(), c.begin(), c.end());
    return out;
}

static bool orthogonal_to(const Lattice& L, const Vec& c, const std::vector<Vec>& S) {
    return std::all_of(S.begin(), S.end(), [&](const Vec& s) { return dot(L, c, s) == 0; });
}

// h0 of a class at a level with canonical class k and nef class h.
static int64_t level_h0(const Lattice& L, const Vec& a, const Vec& h, const Vec& k) {
    if (is_zero(a)) return 1;
    if (dot(L, h, a) < 0) return 0;
    int64_t twice = dot(L, a, a) - dot(L, k, a);
    return std::max<int64_t>(0, twice / 2 + 1);
}

AdjointChain adjoint_chain(const Vec& h0, const Lattice& L, const RealStructure& sigma, const std::vector<Vec>& B) {
    if (int(h0.size()) != L.rank) throw StructuralError("class has wrong length");
    if (dot(L, h0, h0) <= 0) throw DomainError("h0 is not big: h0^2 <= 0");
    std::vector<Vec> probes = B;
    if (L.rank <= 9) {
        const auto& E = cached_lattice_classes(L).E;
        probes.insert(probes.end(), E.begin(), E.end());
    } else {
        for (int i = 1; i < L.rank; ++i) probes.push_back(L.unit(i));
    }
    for (const auto& p : probes)
        if (dot(L, h0, p) < 0) throw DomainError("h0 is not nef: h0." + format_class(p, L) + " < 0");

    AdjointChain ch;
    ch.L = L;
    ch.sigma = sigma;
    ch.B = B;
    ch.h.push_back(h0);
    ch.k.push_back(L.k);
    std::vector<Vec> gone;
    for (int step = 0;; ++step) {
        if (step > 4 * L.rank + 16) throw DomainError("adjoint chain does not terminate");
        const Vec& h = ch.h.back();
        const Vec& k = ch.k.back();
        Vec a = h + k;
        if (level_h0(L, a, h, k) <= 1) break;
        // exceptional classes with (h + k).e = 0, i.e. h.e = 1
        std::vector<Vec> cont;
        for (const auto& e : enumerate_classes(L, h, 1, -1))
            if (dot(L, k, e) == -1 && orthogonal_to(L, e, gone)) cont.push_back(e);
        sort_classes(cont);
        for (size_t i = 0; i < cont.size(); ++i)
            for (size_t j = i + 1; j < cont.size(); ++j)
                if (dot(L, cont[i], cont[j]) != 0)
                    throw DomainError("contracted classes are not disjoint: " + format_class(cont[i], L) + ", " +
                                      format_class(cont[j], L));
        if (!set_fixed(sigma, cont)) throw DomainError("contracted classes are not sigma-stable");
        Vec knext = k;
        for (const auto& e : cont) knext = knext - e;
        gone.insert(gone.end(), cont.begin(), cont.end());
        ch.contracted.push_back(cont);
        ch.h.push_back(a);
        ch.k.push_back(knext);
        if (dot(L, a, a) <= 0) break;
    }
    const Vec& hl = ch.h.back();
    const Vec& kl = ch.k.back();
    if (dot(L, hl, hl) <= 0)
        ch.terminal = TerminalKind::P1Bundle;
    else if (dot(L, kl, kl) > 0)
        ch.terminal = TerminalKind::WeakDelPezzo;
    else
        ch.terminal = TerminalKind::P1Bundle;
    return ch;
}

bool incomplete_family_class(const Vec& c, const Vec& k, const Lattice& L) {
    int64_t s = dot(L, c, c), kc = dot(L, k, c);
    return kc == -2 && (s == 2 || s == 4);
}

static std::optional<Vec> divide(const Vec& v, int64_t d) {
    Vec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] % d) return std::nullopt;
        out[i] = v[i] / d;
    }
    return out;
}

// Candidates of least h0-degree, without incomplete families.
static std::vector<Vec> least_degree(const std::vector<Vec>& cand, const AdjointChain& ch) {
    const Lattice& L = ch.L;
    std::vector<Vec> ok;
    for (const auto& c : cand)
        if (!incomplete_family_class(c, ch.k[0], L) && ch.sigma(c) == c) ok.push_back(c);
    if (ok.empty()) return ok;
    int64_t best = dot(L, ch.h[0], ok[0]);
    for (const auto& c : ok) best = std::min(best, dot(L, ch.h[0], c));
    std::vector<Vec> out;
    for (const auto& c : ok)
        if (dot(L, ch.h[0], c) == best) out.push_back(c);
    sort_classes(out);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Subsets of size q of pts that sigma maps to themselves.
static std::vector<std::vector<int>> stable_subsets(const std::vector<Vec>& pts, int q, const RealStructure& sigma) {
    int n = int(pts.size());
    std::vector<int> img(n, -1);
    for (int i = 0; i < n; ++i) {
        Vec s = sigma(pts[i]);
        for (int j = 0; j < n; ++j)
            if (pts[j] == s) img[i] = j;
    }
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int from) {
        if (int(cur.size()) == q) {
            for (int i : cur)
                if (img[i] < 0 || std::find(cur.begin(), cur.end(), img[i]) == cur.end()) return;
            out.push_back(cur);
            return;
        }
        for (int i = from; i < n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

MinimalFamilies minimal_families_via_chain(const AdjointChain& ch) {
    const Lattice& L = ch.L;
    const auto& sigma = ch.sigma;
    MinimalFamilies mf;
    std::vector<Vec> C = ch.all_contracted();
    const Vec& kl = ch.k.back();
    int trank = L.rank - int(C.size());

    if (ch.terminal == TerminalKind::P1Bundle) {
        mf.single_family = true;
        mf.model = "bundle";
        const Vec& h = ch.h[0];
        int64_t top = 4 * dot(L, h, h);
        for (int64_t a = 1; a <= top && mf.classes.empty(); ++a)
            for (const auto& f : enumerate_classes(L, h, a, 0))
                if (dot(L, kl, f) == -2 && orthogonal_to(L, f, C) && sigma(f) == f) mf.classes.push_back(f);
        sort_classes(mf.classes);
        return mf;
    }

    auto terminal_classes = [&](int64_t a, int64_t b) {
        std::vector<Vec> out;
        for (const auto& c : enumerate_classes(L, -kl, a, b))
            if (orthogonal_to(L, c, C)) out.push_back(c);
        return out;
    };

    // plane model: line class and the exceptional classes over it
    std::optional<Vec> line;
    std::vector<Vec> points = C;
    if (trank == 1) {
        line = divide(-kl, 3);
    } else if (trank == 3) {
        for (const auto& p : terminal_classes(1, -1)) {
            Vec q = sigma(p);
            if (q != p && dot(L, p, q) == 0) {
                line = divide(-kl + p + q, 3);
                points.push_back(p);
                points.push_back(q);
                break;
            }
        }
    }
    if (line) {
        mf.terminal_case = 2;
        mf.model = "plane";
        const Vec& e0 = *line;
        std::vector<Vec> cand{e0};
        for (const auto& s : stable_subsets(points, 1, sigma)) cand.push_back(e0 - points[s[0]]);
        for (const auto& s : stable_subsets(points, 4, sigma)) {
            Vec c = 2 * e0;
            for (int i : s) c = c - points[i];
            cand.push_back(c);
        }
        mf.classes = least_degree(cand, ch);
        return mf;
    }

    if (trank == 2) {
        auto fibres = terminal_classes(2, 0);
        bool even = terminal_classes(1, -1).empty();
        if (even && fibres.size() == 2 && sigma(fibres[0]) == fibres[1]) {
            mf.terminal_case = 3;
            mf.model = "quadric";
            Vec q = fibres[0] + fibres[1];
            std::vector<Vec> cand{q};
            for (int size : {1, 2})
                for (const auto& s : stable_subsets(C, size, sigma)) {
                    Vec c = q;
                    for (int i : s) c = c - C[i];
                    cand.push_back(c);
                }
            mf.classes = least_degree(cand, ch);
            return mf;
        }
    }

    // a weak del Pezzo terminal: real conic classes meeting its (-2)-curves nonnegatively
    mf.terminal_case = 1;
    mf.model = "del-pezzo";
    std::vector<Vec> Bl;
    for (const auto& b : ch.B)
        if (orthogonal_to(L, b, C)) Bl.push_back(b);
    std::vector<Vec> cand;
    for (const auto& f : terminal_classes(2, 0))
        if (std::all_of(Bl.begin(), Bl.end(), [&](const Vec& b) { return dot(L, f, b) >= 0; })) cand.push_back(f);
    mf.classes = least_degree(cand, ch);
    return mf;
}

FamilyGraph chain_family_graph(const AdjointChain& ch, const MinimalFamilies& fam) {
    std::vector<int64_t> labels;
    for (const auto& c : fam.classes) labels.push_back(-dot(ch.L, ch.k[0], c) - 1);
    return family_graph(fam.classes, labels, ch.L);
}

// ---------------------------------------------------------------- export

std::string to_dot(const FamilyGraph& g, const Lattice& L, const std::string& name) {
    std::ostringstream os;
    os << "graph \"" << name << "\" {\n";
    for (int i = 0; i < g.size(); ++i)
        os << "  v" << i << " [label=\"" << g.labels[i] << "\", class=\"" << format_class(g.classes[i], L)
           << "\"];\n";
    for (const auto& e : g.edges) os << "  v" << e.i << " -- v" << e.j << " [label=\"" << e.label << "\"];\n";
    os << "}\n";
    return os.str();
}

nlohmann::json to_json(const FamilyGraph& g, const Lattice& L) {
    nlohmann::json j;
    auto v = nlohmann::json::array();
    for (int i = 0; i < g.size(); ++i) v.push_back({{"class", format_class(g.classes[i], L)}, {"label", g.labels[i]}});
    auto e = nlohmann::json::array();
    for (const auto& x : g.edges) e.push_back({x.i, x.j, x.label});
    j["vertices"] = v;
    j["edges"] = e;
    j["shape"] = graph_shape(g).describe();
    return j;
}

nlohmann::json to_json(const AdjointChain& ch) {
    const Lattice& L = ch.L;
    nlohmann::json j;
    j["rank"] = L.rank;
    j["basis"] = L.kind == BasisKind::Type1 ? "type1" : "type2";
    auto steps = nlohmann::json::array();
    for (int i = 0; i < ch.length(); ++i)
        steps.push_back({{"h", format_class(ch.h[i], L)},
                         {"k", format_class(ch.k[i], L)},
                         {"contracted", classes_json(ch.contracted[i], L)}});
    j["steps"] = steps;
    j["terminal_h"] = format_class(ch.h.back(), L);
    j["terminal_k"] = format_class(ch.k.back(), L);
    j["terminal_kind"] = to_string(ch.terminal);
    return j;
}

nlohmann::json to_json(const MinimalFamilies& fam, const Lattice& L) {
    return {{"classes", classes_json(fam.classes, L)},
            {"terminal_case", fam.terminal_case},
            {"model", fam.model},
            {"single_family", fam.single_family}};
}

nlohmann::json triples_json(const FamilyGraph& g, const std::vector<HexTriple>& t, const Lattice& L) {
    auto a = nlohmann::json::array();
    for (const auto& x : t) {
        nlohmann::json j;
        j["classes"] = {format_class(g.classes[x.u], L), format_class(g.classes[x.v], L),
                        format_class(g.classes[x.w], L)};
        if (x.witness) j["witness"] = format_class(*x.witness, L);
        a.push_back(j);
    }
    return a;
}

}  // namespace nsk
