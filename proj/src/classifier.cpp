#include "nsk/classifier.hpp"

#include "nsk/io.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <thread>

namespace nsk {

std::string to_string(Scope s) {
    switch (s) {
        case Scope::Full: return "full";
        case Scope::TrivialSigma: return "trivial-sigma";
        case Scope::DelPezzo: return "del-pezzo";
    }
    return "full";
}

Scope parse_scope(const std::string& s) {
    if (s == "full") return Scope::Full;
    if (s == "trivial-sigma" || s == "trivial_sigma") return Scope::TrivialSigma;
    if (s == "del-pezzo" || s == "del_pezzo") return Scope::DelPezzo;
    throw std::invalid_argument("unknown scope '" + s + "' (full, trivial-sigma, del-pezzo)");
}

std::vector<Lattice> lattices_for_degree(int degree) {
    if (degree < 1 || degree > 9) throw DomainError("degree must be in 1..9, got " + std::to_string(degree));
    if (degree == 9) return {make_type1_lattice(0)};
    if (degree == 8) return {make_lattice(1, BasisKind::Type1), make_lattice(0, BasisKind::Type2)};
    return {make_lattice(9 - degree, BasisKind::Type1)};
}

Lattice LatticeClassRecord::lattice() const {
    for (const auto& L : lattices_for_degree(degree))
        if (L.kind == kind) return L;
    throw DomainError("record has no lattice");
}

namespace {

void parallel_for(size_t n, int jobs, const std::function<void(size_t)>& fn) {
    if (jobs <= 1 || n < 2) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < std::min<int>(jobs, int(n)); ++t)
        pool.emplace_back([&] {
            for (size_t i = next++; i < n; i = next++) fn(i);
        });
    for (auto& th : pool) th.join();
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix c(a.n);
    for (int i = 0; i < a.n; ++i)
        for (int k = 0; k < a.n; ++k) {
            int64_t x = a(i, k);
            if (x == 0) continue;
            for (int j = 0; j < a.n; ++j) c(i, j) += x * b(k, j);
        }
    return c;
}

IntMatrix reflection_matrix(const Vec& alpha, const Lattice& L) {
    // x -> x + (alpha.x) alpha for alpha^2 = -2
    IntMatrix s = IntMatrix::identity(L.rank);
    for (int j = 0; j < L.rank; ++j) {
        int64_t p = inner_product(alpha, L.unit(j), L);
        for (int i = 0; i < L.rank; ++i) s(i, j) += p * alpha[i];
    }
    return s;
}

const std::vector<Vec>& extra_vertices(const Lattice& L) {
    static const std::vector<Vec> none;
    return L.degree() >= 8 ? cached_lattice_classes(L).F : none;
}

struct EBasis {
    std::vector<int> index;  // positions in E of the basis classes
    IntMatrix c_inv;
};

const EBasis* e_basis(const Lattice& L) {
    if (L.kind != BasisKind::Type1 || L.rank < 3) return nullptr;
    static std::mutex mu;
    static std::map<int, EBasis> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(L.rank);
    if (it != cache.end()) return &it->second;
    const auto& E = cached_lattice_classes(L).E;
    std::vector<Vec> basis;
    for (int i = 1; i < L.rank; ++i) basis.push_back(L.unit(i));
    Vec t = L.unit(0) - L.unit(1) - L.unit(2);
    basis.push_back(t);
    EBasis eb;
    RatMatrix C(L.rank, L.rank);
    for (int j = 0; j < L.rank; ++j) {
        auto pos = std::find(E.begin(), E.end(), basis[j]);
        eb.index.push_back(int(pos - E.begin()));
        for (int i = 0; i < L.rank; ++i) C(i, j) = basis[j][i];
    }
    RatMatrix Ci;
    invert(C, Ci);
    eb.c_inv = IntMatrix(L.rank);
    for (int i = 0; i < L.rank; ++i)
        for (int j = 0; j < L.rank; ++j) eb.c_inv(i, j) = static_cast<int64_t>(numerator(Ci(i, j)));
    return &cache.emplace(L.rank, std::move(eb)).first->second;
}

}  // namespace

bool isometry_from_automorphism(const Lattice& L, const std::vector<int>& perm, IntMatrix& out) {
    const EBasis* eb = e_basis(L);
    if (!eb) return false;
    const auto& E = cached_lattice_classes(L).E;
    IntMatrix img(L.rank);
    for (int j = 0; j < L.rank; ++j) {
        int target = perm[eb->index[j]];
        if (target < 0 || target >= int(E.size())) return false;
        for (int i = 0; i < L.rank; ++i) img(i, j) = E[target][i];
    }
    out = mul(img, eb->c_inv);
    return true;
}

CanonicalResult record_canonical(const Lattice& L, const RealStructure& sigma, const std::vector<Vec>& B) {
    auto g = cremona_invariant(cached_lattice_classes(L).E, B, extra_vertices(L), sigma, L);
    return canonicalize(g);
}

Certificate record_certificate(const Lattice& L, const RealStructure& sigma, const std::vector<Vec>& B) {
    return record_canonical(L, sigma, B).certificate;
}

LatticeClassRecord emit_record(const std::vector<Vec>& B, const RealStructure& sigma, const Lattice& L) {
    LatticeClassRecord rec;
    rec.degree = L.degree();
    rec.kind = L.kind;
    rec.rank = L.rank;
    rec.sigma = sigma;
    rec.B_classes = B;
    sort_classes(rec.B_classes);
    auto sets = distinguished_sets(L, sigma, rec.B_classes);
    rec.counts = {int64_t(sets.E.size()),      int64_t(sets.E_star.size()), int64_t(sets.E_real.size()),
                  int64_t(sets.R_plus.size()), int64_t(sets.F.size()),      int64_t(sets.F_star.size()),
                  int64_t(sets.F_real.size()), int64_t(sets.G.size())};
    rec.dynkin_B = dynkin_type(rec.B_classes, L);
    rec.A_classes = simple_roots(sets.S_minus, L);
    rec.dynkin_A = dynkin_type(rec.A_classes, L);
    rec.name_A = rec.dynkin_A.name();
    rec.name_B = rec.dynkin_B.name();
    rec.certificate = record_certificate(L, sigma, rec.B_classes);
    for (size_t i = 0; i < sets.G.size() && !rec.p1p1; ++i)
        for (size_t j = i + 1; j < sets.G.size() && !rec.p1p1; ++j)
            rec.p1p1 = inner_product(sets.G[i], sets.G[j], L) == 1;
    bool minimal = sets.E_real.empty();
    for (const auto& c : sets.E_star) {
        Vec s = sigma(c);
        if (s != c && inner_product(c, s, L) == 0) minimal = false;
    }
    rec.real_minimal = minimal;
    return rec;
}

bool has_stable_exceptional_configuration(const Lattice& L, const RealStructure& sigma) {
    int need = L.rank - 1;
    if (need == 0) return true;
    const auto& E = cached_lattice_classes(L).E;
    std::map<Vec, int> index;
    for (int i = 0; i < int(E.size()); ++i) index[E[i]] = i;
    std::vector<std::vector<int>> orbits;
    for (int i = 0; i < int(E.size()); ++i) {
        int j = index.at(sigma(E[i]));
        if (j == i)
            orbits.push_back({i});
        else if (i < j && inner_product(E[i], E[j], L) == 0)
            orbits.push_back({i, j});
    }
    std::vector<int> chosen;
    std::function<bool(size_t)> rec = [&](size_t from) {
        if (int(chosen.size()) == need) return true;
        for (size_t o = from; o < orbits.size(); ++o) {
            if (int(chosen.size() + orbits[o].size()) > need) continue;
            bool ok = true;
            for (int c : chosen)
                for (int v : orbits[o]) ok = ok && inner_product(E[c], E[v], L) == 0;
            if (!ok) continue;
            for (int v : orbits[o]) chosen.push_back(v);
            if (rec(o + 1)) return true;
            for (size_t t = 0; t < orbits[o].size(); ++t) chosen.pop_back();
        }
        return false;
    };
    return rec(0);
}

void normalize_into_positive(const Lattice& L, RealStructure& sigma, std::vector<Vec>& B) {
    if (B.empty()) return;
    bool all_pos = std::all_of(B.begin(), B.end(), [](const Vec& b) { return is_positive(b); });
    if (all_pos) {
        sort_classes(B);
        return;
    }
    const auto& lc = cached_lattice_classes(L);
    auto simple = simple_roots(lc.R_plus, L);
    int m = int(B.size());
    RatMatrix G(m, m), Gi;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) G(i, j) = inner_product(B[i], B[j], L);
    if (!invert(G, Gi)) throw DomainError("normalize: dependent base");
    std::vector<Rat> psi(L.rank, Rat(0));
    for (int i = 0; i < m; ++i) {
        Rat y = 0;
        for (int j = 0; j < m; ++j) y += Gi(i, j);
        for (int t = 0; t < L.rank; ++t) psi[t] += y * Rat(B[i][t]);
    }
    BigInt den = 1;
    for (const auto& x : psi) den = boost::multiprecision::lcm(den, BigInt(denominator(x)));
    Vec ipsi(L.rank);
    for (int t = 0; t < L.rank; ++t) ipsi[t] = static_cast<int64_t>(numerator(psi[t] * Rat(den)));
    // positive system: psi.x > 0, ties broken by the first nonzero coefficient
    auto pos = [&](const Vec& x) {
        int64_t p = inner_product(ipsi, x, L);
        return p != 0 ? p > 0 : is_positive(x);
    };
    IntMatrix u = IntMatrix::identity(L.rank), uinv = IntMatrix::identity(L.rank);
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& a : simple) {
            if (pos(u.apply(a))) continue;
            IntMatrix s = reflection_matrix(a, L);
            u = mul(u, s);
            uinv = mul(s, uinv);
            changed = true;
            break;
        }
    }
    for (auto& b : B) b = uinv.apply(b);
    for (const auto& b : B)
        if (!is_positive(b)) throw DomainError("normalize: base not mapped into R+");
    sort_classes(B);
    sigma.matrix = mul(mul(uinv, sigma.matrix), u);
}

std::vector<std::vector<Vec>> stable_bases(const Lattice& L, const RealStructure& sigma, int jobs) {
    const auto& lc = cached_lattice_classes(L);
    std::vector<Vec> signed_roots = lc.R_plus;
    for (const auto& r : lc.R_plus) signed_roots.push_back(-r);
    std::map<Vec, int> sidx;
    for (int i = 0; i < int(signed_roots.size()); ++i) sidx[signed_roots[i]] = i;

    struct Rep {
        std::vector<Vec> B;
        std::vector<IntMatrix> stab;
        bool spans = false;
    };
    auto make_rep = [&](std::vector<Vec> B, const CanonicalResult& cr) {
        Rep rep;
        rep.B = std::move(B);
        rep.spans = e_basis(L) != nullptr;
        if (rep.spans)
            for (const auto& g : cr.generators) {
                IntMatrix m;
                if (isometry_from_automorphism(L, g, m)) rep.stab.push_back(std::move(m));
            }
        return rep;
    };

    std::set<std::string> seen;
    std::vector<std::vector<Vec>> out;
    std::vector<Rep> current;
    {
        auto cr = record_canonical(L, sigma, {});
        seen.insert(cr.certificate.bytes);
        current.push_back(make_rep({}, cr));
    }
    while (!current.empty()) {
        std::vector<std::vector<Vec>> cand;
        for (const auto& rep : current) {
            out.push_back(rep.B);
            std::set<Vec> inB(rep.B.begin(), rep.B.end());
            std::vector<int> parent(signed_roots.size());
            for (size_t i = 0; i < parent.size(); ++i) parent[i] = int(i);
            std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
            for (const auto& g : rep.stab)
                for (size_t i = 0; i < signed_roots.size(); ++i) {
                    int j = sidx.at(g.apply(signed_roots[i]));
                    int a = find(int(i)), b = find(j);
                    if (a != b) parent[std::max(a, b)] = std::min(a, b);
                }
            for (size_t i = 0; i < signed_roots.size(); ++i) {
                if (find(int(i)) != int(i)) continue;
                const Vec& s = signed_roots[i];
                if (inB.count(s) || inB.count(-s)) continue;
                Vec t = sigma(s);
                if (t == -s) continue;
                std::vector<Vec> nb = rep.B;
                nb.push_back(s);
                if (t != s) nb.push_back(t);
                cand.push_back(std::move(nb));
            }
        }
        std::vector<std::optional<CanonicalResult>> res(cand.size());
        parallel_for(cand.size(), jobs, [&](size_t i) {
            if (!try_root_base(cand[i], L, lc.R_plus)) return;
            res[i] = record_canonical(L, sigma, cand[i]);
        });
        std::vector<Rep> next;
        for (size_t i = 0; i < cand.size(); ++i) {
            if (!res[i]) continue;
            if (!seen.insert(res[i]->certificate.bytes).second) continue;
            next.push_back(make_rep(cand[i], *res[i]));
        }
        current = std::move(next);
    }
    return out;
}

namespace {

std::mutex memo_mu;
std::map<std::pair<int, int>, std::vector<std::vector<Vec>>> id_bases_memo;
std::map<int, std::vector<InvolutionClass>> involution_memo;

std::vector<std::vector<Vec>> identity_bases(const Lattice& L, int jobs) {
    auto key = std::make_pair(int(L.kind), L.rank);
    {
        std::lock_guard<std::mutex> lock(memo_mu);
        auto it = id_bases_memo.find(key);
        if (it != id_bases_memo.end()) return it->second;
    }
    auto b = stable_bases(L, identity_structure(L), jobs);
    std::lock_guard<std::mutex> lock(memo_mu);
    return id_bases_memo.emplace(key, std::move(b)).first->second;
}

std::string prime_marks(int k) { return std::string(size_t(k), '\''); }

void name_involutions(std::vector<InvolutionClass>& inv) {
    std::map<std::string, std::vector<InvolutionClass*>> groups;
    for (auto& c : inv) groups[c.type.name()].push_back(&c);
    for (auto& [base, g] : groups) {
        std::sort(g.begin(), g.end(), [](const InvolutionClass* a, const InvolutionClass* b) {
            if (a->stable_configuration != b->stable_configuration) return a->stable_configuration;
            return a->certificate < b->certificate;
        });
        int marks = (g.size() > 1 && !g.front()->stable_configuration) ? 1 : 0;
        for (auto* c : g) c->name = base + prime_marks(marks++);
    }
}

InvolutionClass make_involution_class(const Lattice& L, const RealStructure& sigma) {
    InvolutionClass ic;
    ic.kind = L.kind;
    ic.rank = L.rank;
    ic.sigma = sigma;
    std::vector<Vec> S;
    for (const auto& r : cached_lattice_classes(L).R_plus)
        if (sigma(r) == -r) S.push_back(r);
    ic.A_classes = simple_roots(S, L);
    ic.type = dynkin_type(ic.A_classes, L);
    ic.name = ic.type.name();
    ic.certificate = record_certificate(L, sigma, {});
    ic.stable_configuration = has_stable_exceptional_configuration(L, sigma);
    return ic;
}

void sort_involutions(std::vector<InvolutionClass>& inv) {
    std::sort(inv.begin(), inv.end(), [](const InvolutionClass& a, const InvolutionClass& b) {
        if (a.type.rank() != b.type.rank()) return a.type.rank() < b.type.rank();
        if (a.name != b.name) return a.name < b.name;
        return a.certificate < b.certificate;
    });
}

void name_bases(std::vector<LatticeClassRecord>& recs) {
    std::map<std::pair<std::string, std::string>, std::vector<LatticeClassRecord*>> groups;
    for (auto& r : recs) groups[{r.name_A, r.dynkin_B.name()}].push_back(&r);
    for (auto& [key, g] : groups) {
        std::sort(g.begin(), g.end(), [](const LatticeClassRecord* a, const LatticeClassRecord* b) {
            if (a->counts.E_star != b->counts.E_star) return a->counts.E_star > b->counts.E_star;
            return a->certificate < b->certificate;
        });
        int marks = 0;
        for (auto* r : g) r->name_B = key.second + prime_marks(marks++);
    }
}

void sort_records(std::vector<LatticeClassRecord>& recs) {
    std::sort(recs.begin(), recs.end(), [](const LatticeClassRecord& a, const LatticeClassRecord& b) {
        if (a.B_classes.size() != b.B_classes.size()) return a.B_classes.size() < b.B_classes.size();
        if (a.name_B != b.name_B) return a.name_B < b.name_B;
        if (a.name_A != b.name_A) return a.name_A < b.name_A;
        return a.certificate < b.certificate;
    });
    for (size_t i = 0; i < recs.size(); ++i) recs[i].index = int(i);
}

const std::string& involution_name(const std::vector<InvolutionClass>& inv, const Lattice& L, const RealStructure& s) {
    auto cert = record_certificate(L, s, {});
    for (const auto& c : inv)
        if (c.kind == L.kind && c.certificate == cert) return c.name;
    throw DomainError("involution not in the class list");
}

}  // namespace

std::vector<InvolutionClass> involution_classes(int degree, const ClassifyOptions& opt) {
    {
        std::lock_guard<std::mutex> lock(memo_mu);
        auto it = involution_memo.find(degree);
        if (it != involution_memo.end()) return it->second;
    }
    std::vector<InvolutionClass> out;
    for (const auto& L : lattices_for_degree(degree)) {
        const auto& lc = cached_lattice_classes(L);
        std::set<std::string> seen;
        for (const auto& A : identity_bases(L, opt.jobs)) {
            RootBase rb = is_root_base(A, L, lc.R_plus);
            RatMatrix M = involution_matrix(rb);
            if (involution_defect(M, L) != InvolutionDefect::None) continue;
            RealStructure s = validate_involution(M, L);
            auto ic = make_involution_class(L, s);
            if (seen.insert(ic.certificate.bytes).second) out.push_back(std::move(ic));
        }
    }
    name_involutions(out);
    sort_involutions(out);
    std::lock_guard<std::mutex> lock(memo_mu);
    return involution_memo.emplace(degree, std::move(out)).first->second;
}

std::vector<LatticeClassRecord> classify_degree(int degree, Scope scope, const ClassifyOptions& opt) {
    if (degree < 1 || degree > 9) throw DomainError("degree must be in 1..9, got " + std::to_string(degree));
    if (scope == Scope::Full && degree <= 2)
        throw DomainError("full scope is refused for degree " + std::to_string(degree) +
                          " (rank >= 8): the classification is only available when the degree is at least 3, "
                          "the real structure acts trivially (--scope trivial-sigma), or the surface is del Pezzo "
                          "(--scope del-pezzo)");
    if (opt.use_cache) {
        if (auto cached = load_cached_classification(degree, scope)) return *cached;
    }
    auto inv = involution_classes(degree, opt);
    std::vector<LatticeClassRecord> recs;
    for (const auto& ic : inv) {
        Lattice L = make_type1_lattice(0);
        for (const auto& M : lattices_for_degree(degree))
            if (M.kind == ic.kind) L = M;
        bool identity = ic.sigma.matrix == IntMatrix::identity(L.rank);
        if (scope == Scope::TrivialSigma && !identity) continue;
        std::vector<std::vector<Vec>> bases;
        if (scope == Scope::DelPezzo)
            bases = {{}};
        else if (identity)
            bases = identity_bases(L, opt.jobs);
        else
            bases = stable_bases(L, ic.sigma, opt.jobs);
        std::vector<LatticeClassRecord> part(bases.size());
        parallel_for(bases.size(), opt.jobs, [&](size_t i) {
            RealStructure s = ic.sigma;
            auto B = bases[i];
            normalize_into_positive(L, s, B);
            part[i] = emit_record(B, s, L);
            part[i].name_A = ic.name;
        });
        for (auto& r : part) recs.push_back(std::move(r));
    }
    name_bases(recs);
    sort_records(recs);
    if (opt.use_cache) save_cached_classification(degree, scope, recs);
    return recs;
}

std::vector<LatticeClassRecord> classify(int r, Scope scope, const ClassifyOptions& opt) {
    if (r < 0 || r > 8) throw DomainError("r must be in 0..8, got " + std::to_string(r));
    return classify_degree(9 - r, scope, opt);
}

std::vector<LatticeClassRecord> classify_naive(int r) {
    if (r < 2 || r > 4)
        throw DomainError("classify_naive enumerates all subsets of R+ and supports 2 <= r <= 4 only; use classify");
    Lattice L = make_lattice(r, BasisKind::Type1);
    const auto& lc = cached_lattice_classes(L);
    int n = int(lc.R_plus.size());
    std::vector<std::vector<Vec>> bases;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<Vec> B;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) B.push_back(lc.R_plus[i]);
        if (try_root_base(B, L, lc.R_plus)) bases.push_back(std::move(B));
    }
    std::vector<RealStructure> sigmas;
    for (const auto& A : bases) {
        RatMatrix M = involution_matrix(is_root_base(A, L, lc.R_plus));
        if (involution_defect(M, L) == InvolutionDefect::None) sigmas.push_back(validate_involution(M, L));
    }
    std::vector<InvolutionClass> inv;
    {
        std::set<std::string> seen;
        for (const auto& s : sigmas) {
            auto ic = make_involution_class(L, s);
            if (seen.insert(ic.certificate.bytes).second) inv.push_back(std::move(ic));
        }
        name_involutions(inv);
    }
    std::map<std::string, std::pair<RealStructure, std::vector<Vec>>> psi;
    for (const auto& s : sigmas)
        for (const auto& B : bases) {
            if (!set_fixed(s, B)) continue;
            auto cert = record_certificate(L, s, B);
            psi.emplace(cert.bytes, std::make_pair(s, B));
        }
    std::vector<LatticeClassRecord> recs;
    for (const auto& [cert, sb] : psi) {
        auto rec = emit_record(sb.second, sb.first, L);
        rec.name_A = involution_name(inv, L, sb.first);
        recs.push_back(std::move(rec));
    }
    name_bases(recs);
    sort_records(recs);
    return recs;
}

}  // namespace nsk
