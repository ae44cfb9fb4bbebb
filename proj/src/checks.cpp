#include "nsk/checks.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace nsk {

namespace {

struct Suite {
    std::vector<CheckResult> out;
    void add(const std::string& name, bool pass, const std::string& detail = "") {
        out.push_back({name, pass, detail});
    }
};

RealStructure swap_structure(const Lattice& L, const std::vector<std::pair<int, int>>& swaps) {
    std::vector<Vec> im;
    for (int i = 0; i < L.rank; ++i) im.push_back(L.unit(i));
    for (auto [a, b] : swaps) std::swap(im[a], im[b]);
    return validate_involution(matrix_from_images(im), L);
}

}  // namespace

std::vector<ChainExample> chain_examples() {
    std::vector<ChainExample> out;
    {
        Lattice L = make_type1_lattice(8);
        Vec h{4, -1, -1, -1, -1, -1, -1, -1, -1};
        out.push_back({"plane8", adjoint_chain(h, L, swap_structure(L, {{1, 2}, {3, 4}, {5, 6}, {7, 8}}))});
    }
    {
        Lattice L = make_type1_lattice(9);
        Vec h{9, -3, -3, -2, -2, -2, -2, -1, -1, -1};
        out.push_back({"plane9", adjoint_chain(h, L, swap_structure(L, {{1, 2}, {3, 4}, {5, 6}}))});
    }
    {
        Lattice L = make_lattice(5, BasisKind::Type2, 1);
        Vec h{3, 3, -1, -1, -1, -1, -1};
        out.push_back({"quadric5", adjoint_chain(h, L, swap_structure(L, {{0, 1}, {5, 6}}))});
    }
    return out;
}

std::vector<CheckResult> run_property_suite(const CheckOptions& opt) {
    Suite s;
    std::mt19937_64 rng(20240601);
    ClassifyOptions copt;
    copt.jobs = opt.jobs;
    copt.use_cache = opt.use_cache;

    // lattice arithmetic
    {
        bool ok = true;
        for (int r = 1; r <= 8 && ok; ++r) {
            Lattice L = make_lattice(r, BasisKind::Type1);
            std::uniform_int_distribution<int64_t> d(-9, 9);
            for (int t = 0; t < 200; ++t) {
                Vec a(L.rank), b(L.rank);
                for (auto& x : a) x = d(rng);
                for (auto& x : b) x = d(rng);
                if (dot(L, a, b) != dot(L, b, a)) ok = false;
            }
            if (dot(L, L.k, L.k) != 10 - L.rank) ok = false;
        }
        s.add("intersection form is symmetric and k^2 = 10 - rank", ok);
    }

    std::map<int, std::vector<LatticeClassRecord>> records;
    for (int d = 9; d >= opt.min_degree; --d) records[d] = classify_degree(d, Scope::Full, copt);

    {
        bool ok = true;
        std::string bad;
        for (int d = 9; d >= std::max(1, opt.min_degree - 2); --d)
            for (const auto& ic : involution_classes(d, copt)) {
                Lattice L = d == 9 ? make_type1_lattice(0)
                                   : make_lattice(ic.rank - (ic.kind == BasisKind::Type1 ? 1 : 2), ic.kind);
                const auto& cl = cached_lattice_classes(L);
                std::vector<Vec> probe = cl.E;
                probe.insert(probe.end(), cl.R_plus.begin(), cl.R_plus.end());
                for (size_t i = 0; i < probe.size() && ok; ++i)
                    for (size_t j = i; j < probe.size(); ++j)
                        if (dot(L, ic.sigma(probe[i]), ic.sigma(probe[j])) != dot(L, probe[i], probe[j])) {
                            ok = false;
                            bad = ic.name;
                            break;
                        }
            }
        s.add("real structures preserve all products", ok, bad);
    }

    {
        bool ok = true, unit = true;
        for (int d = 7; d >= 3; --d) {
            Lattice L = make_lattice(9 - d, BasisKind::Type1);
            for (const auto& rec : records[d]) {
                auto sets = distinguished_sets(L, rec.sigma, rec.B_classes);
                std::vector<Vec> curves = sets.E_star;
                curves.insert(curves.end(), rec.B_classes.begin(), rec.B_classes.end());
                for (const auto& b : curves)
                    if (h0(b, sets.E_star, rec.B_classes, L) != 1) unit = false;
                std::vector<Vec> probes = sets.F;
                probes.push_back(-L.k);
                probes.push_back(-2 * L.k);
                probes.push_back(L.unit(0));
                for (const auto& c : probes) {
                    int64_t ref = -1;
                    for (int t = 0; t < 4; ++t) {
                        auto v = h0_peel(c, curves, L, [&](const std::vector<size_t>& idx) {
                            return idx[std::uniform_int_distribution<size_t>(0, idx.size() - 1)(rng)];
                        });
                        if (ref < 0) ref = v;
                        if (v != ref) ok = false;
                    }
                }
            }
        }
        s.add("h0 is independent of the peeling order", ok);
        s.add("h0 is 1 on (-1)-curves and (-2)-curves", unit);
    }

    {
        bool ok = true;
        const int64_t rplus[] = {1, 4, 10, 20, 36, 63, 120};
        const int64_t e[] = {3, 6, 10, 16, 27, 56, 240};
        std::ostringstream why;
        for (int r = 2; r <= 8; ++r) {
            const auto& cl = cached_lattice_classes(make_lattice(r, BasisKind::Type1));
            if (int64_t(cl.R_plus.size()) != rplus[r - 2] || int64_t(cl.E.size()) != e[r - 2]) {
                ok = false;
                why << "r=" << r << " ";
            }
        }
        s.add("|R+| and |E| for degree 7..1", ok, why.str());
    }

    {
        bool closed = true, chain = true, fmax = true;
        for (auto& [d, recs] : records)
            for (const auto& rec : recs) {
                Lattice L = rec.lattice();
                auto sets = distinguished_sets(L, rec.sigma, rec.B_classes);
                std::set<Vec> E(sets.E.begin(), sets.E.end()), F(sets.F.begin(), sets.F.end());
                std::set<Vec> R(sets.R_plus.begin(), sets.R_plus.end());
                for (const auto& c : sets.E)
                    if (!E.count(rec.sigma(c))) closed = false;
                for (const auto& c : sets.F)
                    if (!F.count(rec.sigma(c))) closed = false;
                for (const auto& c : sets.R_plus)
                    if (!R.count(positive_rep(rec.sigma(c)))) closed = false;
                if (d <= 6 && !(rec.counts.G <= rec.counts.F_real && rec.counts.F_real <= rec.counts.F_star &&
                                rec.counts.F_star <= rec.counts.F))
                    chain = false;
                for (size_t i = 0; i < sets.F_star.size(); ++i)
                    for (size_t j = i + 1; j < sets.F_star.size(); ++j)
                        if (dot(L, sets.F_star[i], sets.F_star[j]) > 8) fmax = false;
            }
        s.add("sigma maps E, F and R to themselves", closed);
        s.add("G <= F_R <= F* <= F in degree 1..6", chain);
        s.add("products in F* are at most 8", fmax);
    }

    {
        bool uniq = true, valid = true, perm = true;
        std::string why;
        for (auto& [d, recs] : records) {
            std::set<std::string> seen;
            for (const auto& rec : recs) {
                if (!seen.insert(rec.certificate.bytes).second) uniq = false;
                Lattice L = rec.lattice();
                try {
                    validate_involution(rec.sigma.matrix, L);
                    is_root_base(rec.B_classes, L, cached_lattice_classes(L).R_plus);
                } catch (const std::exception& e) {
                    valid = false;
                    why = e.what();
                }
                if (!set_fixed(rec.sigma, rec.B_classes)) valid = false;
                auto comps = dynkin_components(rec.B_classes, L);
                std::set<std::set<Vec>> parts;
                for (const auto& c : comps) {
                    std::set<Vec> p;
                    for (int i : c) p.insert(rec.B_classes[i]);
                    parts.insert(p);
                }
                for (const auto& p : parts) {
                    std::set<Vec> img;
                    for (const auto& c : p) img.insert(rec.sigma(c));
                    if (!parts.count(img)) perm = false;
                }
            }
        }
        s.add("certificates are unique within a degree", uniq);
        s.add("records revalidate (involution, root base, sigma(B) = B)", valid, why);
        s.add("sigma permutes the components of B", perm);
    }

    {
        const int expect[] = {1, 3, 2, 4, 3, 6, 5, 10, 10};
        bool ok = true;
        std::ostringstream got;
        for (int d = 9; d >= 1; --d) {
            int n = int(involution_classes(d, copt).size());
            got << n << (d > 1 ? "," : "");
            if (n != expect[9 - d]) ok = false;
        }
        s.add("involution classes per degree 9..1 are 1,3,2,4,3,6,5,10,10", ok, got.str());
    }

    {
        bool ok = true, inv = true;
        for (int d = 7; d >= 6 && d >= opt.min_degree; --d)
            for (const auto& rec : records[d]) {
                Lattice L = rec.lattice();
                auto sets = distinguished_sets(L, rec.sigma, rec.B_classes);
                auto g = cremona_invariant(sets.E, rec.B_classes, rec.sigma, L);
                for (int i = 0; i < g.size(); ++i)
                    if (g.conj[g.conj[i]] != i) inv = false;
                auto ref = canonical_certificate(g);
                CodeGraph cg = code_graph(g);
                std::vector<int> pos(g.size());
                for (int t = 0; t < opt.shuffles; ++t) {
                    for (int i = 0; i < g.size(); ++i) pos[i] = i;
                    std::shuffle(pos.begin(), pos.end(), rng);
                    LabeledGraph h;
                    h.classes.resize(g.size());
                    h.kinds.resize(g.size());
                    h.conj.resize(g.size());
                    h.prod.assign(g.size(), std::vector<int64_t>(g.size()));
                    for (int i = 0; i < g.size(); ++i) {
                        h.classes[pos[i]] = g.classes[i];
                        h.kinds[pos[i]] = g.kinds[i];
                        h.conj[pos[i]] = pos[g.conj[i]];
                        for (int j = 0; j < g.size(); ++j) h.prod[pos[i]][pos[j]] = g.prod[i][j];
                    }
                    if (!(canonical_certificate(h) == ref)) ok = false;
                }
            }
        s.add("certificates are invariant under relabeling", ok);
        s.add("conjugation edges form an involution", inv);
    }

    {
        bool ok = true;
        for (int d = 7; d >= 6 && d >= opt.min_degree; --d) {
            const auto& recs = records[d];
            std::vector<CodeGraph> gs;
            for (const auto& rec : recs) {
                Lattice L = rec.lattice();
                auto sets = distinguished_sets(L, rec.sigma, rec.B_classes);
                gs.push_back(code_graph(cremona_invariant(sets.E, rec.B_classes, rec.sigma, L)));
            }
            for (size_t i = 0; i < gs.size(); ++i)
                for (size_t j = 0; j < gs.size(); ++j) {
                    bool same = canonical_form(gs[i]).form == canonical_form(gs[j]).form;
                    if (gs[i].n <= 12 && gs[j].n <= 12 && same != brute_force_isomorphic(gs[i], gs[j])) ok = false;
                }
        }
        s.add("certificate equality agrees with backtracking isomorphism", ok);
    }

    {
        bool labels = true, witness = true, p1p1 = true;
        std::string why;
        for (auto& [d, recs] : records)
            for (const auto& rec : recs) {
                auto g = simple_family_graph(rec);
                for (auto l : g.labels)
                    if (l > 3) labels = false;
                for (const auto& e : g.edges)
                    if (e.label > 8) labels = false;
                if (d >= 3 && d <= 5 && rec.name_A == "A0")
                    for (const auto& t : hexagonal_triples(rec))
                        if (!t.witness) {
                            witness = false;
                            why = std::to_string(d) + ":" + std::to_string(rec.index);
                        }
                if (rec.p1p1) {
                    Lattice L = rec.lattice();
                    auto sets = distinguished_sets(L, rec.sigma, rec.B_classes);
                    bool found = false;
                    for (const auto& f : sets.G)
                        for (const auto& h : sets.G)
                            if (dot(L, f, h) == 1 && dot(L, f, f) == 0 && dot(L, h, h) == 0 &&
                                h0_on(L, sets, rec.B_classes, f) == 2 && h0_on(L, sets, rec.B_classes, h) == 2)
                                found = true;
                    if (!found) p1p1 = false;
                }
            }
        s.add("family graph vertex labels <= 3 and edge labels <= 8", labels);
        s.add("triples with pairwise product 1 have an orthogonal class in E* (trivial sigma)", witness, why);
        s.add("P1xP1 rows have f.g = 1 with f^2 = g^2 = 0 and h0 = 2", p1p1);
    }

    {
        bool ok = true;
        std::string why;
        for (int d = 7; d >= std::max(3, opt.min_degree); --d)
            for (const auto& rec : records[d]) {
                Lattice L = rec.lattice();
                auto sets = distinguished_sets(L, rec.sigma, rec.B_classes);
                for (const auto& f : sets.F_real) {
                    for (const auto& g : sets.F_real) {
                        if (dot(L, f, g) != 1) continue;
                        for (const auto& basis : algo_bases({f, g}, sets.E, rec.B_classes, rec.sigma, L)) {
                            for (size_t i = 2; i < basis.size(); ++i) {
                                const Vec& b = basis[i];
                                if (dot(L, b, b) != -1 || dot(L, L.k, b) != -1) ok = false;
                                for (size_t j = 0; j < basis.size(); ++j)
                                    if (j != i && dot(L, b, basis[j]) != 0) ok = false;
                            }
                            std::vector<Vec> tail(basis.begin() + 2, basis.end());
                            if (!set_fixed(rec.sigma, tail)) ok = false;
                            if (!ok) why = std::to_string(d) + ":" + std::to_string(rec.index);
                        }
                    }
                }
            }
        s.add("bases from AlgoBases satisfy the output contract", ok, why);
    }

    {
        bool ok = true;
        for (const auto& ex : chain_examples()) {
            auto mf = minimal_families_via_chain(ex.chain);
            for (const auto& c : mf.classes)
                for (const auto& k : ex.chain.k)
                    if (incomplete_family_class(c, k, ex.chain.L)) ok = false;
        }
        s.add("chain outputs contain no incomplete families", ok);
    }
    return s.out;
}

}  // namespace nsk
