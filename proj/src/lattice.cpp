#include "nsk/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace nsk {

Vec Lattice::unit(int i) const {
    Vec v(rank, 0);
    v.at(i) = 1;
    return v;
}

Vec Lattice::hyperplane() const {
    Vec h(rank);
    for (int i = 0; i < rank; ++i) {
        Rat x = -alpha * Rat(k[i]);
        if (denominator(x) != 1) throw DomainError("h = -alpha k is not integral in this basis");
        h[i] = static_cast<int64_t>(numerator(x));
    }
    return h;
}

static void check_alpha(int degree, const Rat& alpha) {
    if (alpha <= 0) throw ValidationError("alpha must be positive");
    if (degree <= 2) {
        if (denominator(alpha) != 1 || alpha < 4 - degree)
            throw ValidationError("alpha must be an integer >= 4 - k^2 in degree " + std::to_string(degree));
    } else if (degree <= 7) {
        if (denominator(alpha) != 1) throw ValidationError("alpha must be a positive integer in degree " + std::to_string(degree));
    } else {
        Rat t = Rat(degree - 6) * alpha;
        if (denominator(t) != 1) throw ValidationError("(k^2-6) alpha must be a positive integer in degree " + std::to_string(degree));
    }
}

Lattice make_type1_lattice(int r) {
    if (r < 0) throw ValidationError("negative rank");
    Lattice L;
    L.rank = r + 1;
    L.kind = BasisKind::Type1;
    L.gram.assign(size_t(L.rank) * L.rank, 0);
    L.gram[0] = 1;
    for (int i = 1; i < L.rank; ++i) L.gram[size_t(i) * L.rank + i] = -1;
    L.k.assign(L.rank, 1);
    L.k[0] = -3;
    return L;
}

Lattice make_lattice(int r, BasisKind kind, Rat alpha) {
    Lattice L;
    if (kind == BasisKind::Type1) {
        if (r < 1 || r > 8) throw ValidationError("type 1 basis needs 1 <= r <= 8, got " + std::to_string(r));
        L = make_type1_lattice(r);
    } else {
        if (r < 0 || r > 7) throw ValidationError("type 2 basis needs 0 <= s <= 7, got " + std::to_string(r));
        L.rank = r + 2;
        L.kind = BasisKind::Type2;
        L.gram.assign(size_t(L.rank) * L.rank, 0);
        L.gram[1] = 1;
        L.gram[size_t(L.rank)] = 1;
        for (int i = 2; i < L.rank; ++i) L.gram[size_t(i) * L.rank + i] = -1;
        L.k.assign(L.rank, 1);
        L.k[0] = -2;
        L.k[1] = -2;
    }
    check_alpha(L.degree(), alpha);
    L.alpha = alpha;
    return L;
}

Lattice make_lattice(int r, BasisKind kind) {
    int rank = kind == BasisKind::Type1 ? r + 1 : r + 2;
    int degree = 10 - rank;
    return make_lattice(r, kind, Rat(degree <= 2 ? 4 - degree : 1));
}

int64_t inner_product(const Vec& c, const Vec& d, const Lattice& L) {
    if (int(c.size()) != L.rank || int(d.size()) != L.rank)
        throw StructuralError("class length does not match lattice rank");
    if (L.kind == BasisKind::Type1) {
        int64_t s = c[0] * d[0];
        for (int i = 1; i < L.rank; ++i) s -= c[i] * d[i];
        return s;
    }
    int64_t s = c[0] * d[1] + c[1] * d[0];
    for (int i = 2; i < L.rank; ++i) s -= c[i] * d[i];
    return s;
}

Vec operator+(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw StructuralError("length mismatch");
    Vec c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

Vec operator-(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw StructuralError("length mismatch");
    Vec c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

Vec operator-(const Vec& a) {
    Vec c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
    return c;
}

Vec operator*(int64_t s, const Vec& a) {
    Vec c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = s * a[i];
    return c;
}

bool is_zero(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](int64_t x) { return x == 0; });
}

bool class_less(const Vec& a, const Vec& b) {
    size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        int64_t x = std::abs(a[i]), y = std::abs(b[i]);
        if (x != y) return x > y;
    }
    if (a.size() != b.size()) return a.size() < b.size();
    return a > b;
}

void sort_classes(std::vector<Vec>& v) {
    std::sort(v.begin(), v.end(), class_less);
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool is_positive(const Vec& c) {
    for (int64_t x : c)
        if (x != 0) return x > 0;
    return false;
}

Vec positive_rep(const Vec& c) { return is_positive(c) || is_zero(c) ? c : -c; }

static std::string gen_name(int i, const Lattice& L) {
    if (L.kind == BasisKind::Type1) return "e" + std::to_string(i);
    if (i < 2) return "l" + std::to_string(i);
    return "eps" + std::to_string(i - 1);
}

std::string format_class(const Vec& c, const Lattice& L) {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < int(c.size()); ++i) {
        int64_t x = c[i];
        if (x == 0) continue;
        if (x < 0) os << "-";
        else if (!first) os << "+";
        int64_t ax = x < 0 ? -x : x;
        if (ax != 1) os << ax;
        os << gen_name(i, L);
        first = false;
    }
    if (first) return "0";
    return os.str();
}

Vec parse_class(const std::string& s, const Lattice& L) {
    Vec c(L.rank, 0);
    size_t p = 0;
    auto skip = [&] { while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p; };
    skip();
    if (s.substr(p) == "0") return c;
    bool any = false;
    while (p < s.size()) {
        skip();
        int sign = 1;
        if (p < s.size() && (s[p] == '+' || s[p] == '-')) {
            if (s[p] == '-') sign = -1;
            ++p;
            skip();
        } else if (any) {
            throw ValidationError("expected + or - in class '" + s + "'");
        }
        int64_t coef = 1;
        if (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) {
            size_t q = p;
            while (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) ++q;
            coef = std::stoll(s.substr(p, q - p));
            p = q;
            skip();
        }
        int idx = -1;
        auto take_index = [&](size_t start) {
            size_t q = start;
            while (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) ++q;
            if (q == start) throw ValidationError("missing generator index in '" + s + "'");
            int v = std::stoi(s.substr(start, q - start));
            p = q;
            return v;
        };
        if (s.compare(p, 3, "eps") == 0 && L.kind == BasisKind::Type2) {
            idx = take_index(p + 3) + 1;
            if (idx < 2) throw ValidationError("eps index starts at 1");
        } else if (s.compare(p, 1, "e") == 0 && L.kind == BasisKind::Type1) {
            idx = take_index(p + 1);
        } else if (s.compare(p, 1, "l") == 0 && L.kind == BasisKind::Type2) {
            idx = take_index(p + 1);
            if (idx > 1) throw ValidationError("l index must be 0 or 1");
        } else {
            throw ValidationError("unknown generator in class '" + s + "'");
        }
        if (idx < 0 || idx >= L.rank) throw ValidationError("generator index out of range in '" + s + "'");
        c[idx] += sign * coef;
        any = true;
        skip();
    }
    if (!any) throw ValidationError("empty class");
    return c;
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Vec IntMatrix::apply(const Vec& c) const {
    if (int(c.size()) != n) throw StructuralError("matrix/class size mismatch");
    Vec out(n, 0);
    for (int i = 0; i < n; ++i) {
        int64_t s = 0;
        for (int j = 0; j < n; ++j) s += (*this)(i, j) * c[j];
        out[i] = s;
    }
    return out;
}

std::string to_string(InvolutionDefect d) {
    switch (d) {
        case InvolutionDefect::None: return "valid";
        case InvolutionDefect::WrongSize: return "wrong size";
        case InvolutionDefect::NonIntegral: return "non-integral";
        case InvolutionDefect::NotInvolution: return "not an involution";
        case InvolutionDefect::NotIsometry: return "not an isometry";
        case InvolutionDefect::MovesK: return "moves k";
    }
    return "?";
}

InvolutionDefect involution_defect(const RatMatrix& M, const Lattice& L) {
    int n = L.rank;
    if (M.rows != n || M.cols != n) return InvolutionDefect::WrongSize;
    if (!M.is_integral()) return InvolutionDefect::NonIntegral;
    if (!(M * M == RatMatrix::identity(n))) return InvolutionDefect::NotInvolution;
    RatMatrix J(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) J(i, j) = L.g(i, j);
    if (!(transpose(M) * J * M == J)) return InvolutionDefect::NotIsometry;
    for (int i = 0; i < n; ++i) {
        Rat s = 0;
        for (int j = 0; j < n; ++j) s += M(i, j) * Rat(L.k[j]);
        if (s != L.k[i]) return InvolutionDefect::MovesK;
    }
    return InvolutionDefect::None;
}

RealStructure validate_involution(const RatMatrix& M, const Lattice& L) {
    InvolutionDefect d = involution_defect(M, L);
    if (d != InvolutionDefect::None) throw InvolutionError(d, "rejected involution: " + to_string(d));
    RealStructure s;
    s.matrix = IntMatrix(L.rank);
    for (int i = 0; i < L.rank; ++i)
        for (int j = 0; j < L.rank; ++j) s.matrix(i, j) = static_cast<int64_t>(numerator(M(i, j)));
    return s;
}

RealStructure validate_involution(const IntMatrix& M, const Lattice& L) {
    RatMatrix R(M.n, M.n);
    for (int i = 0; i < M.n; ++i)
        for (int j = 0; j < M.n; ++j) R(i, j) = M(i, j);
    return validate_involution(R, L);
}

RealStructure identity_structure(const Lattice& L) { return RealStructure{IntMatrix::identity(L.rank)}; }

IntMatrix matrix_from_images(const std::vector<Vec>& images) {
    int n = int(images.size());
    IntMatrix m(n);
    for (int j = 0; j < n; ++j) {
        if (int(images[j].size()) != n) throw StructuralError("image length mismatch");
        for (int i = 0; i < n; ++i) m(i, j) = images[j][i];
    }
    return m;
}

std::vector<Vec> nef_probes(const Lattice& L) {
    std::vector<Vec> p;
    if (L.kind == BasisKind::Type1) {
        p.push_back(L.unit(0));
        if (L.rank >= 2) {
            Vec f = L.unit(0);
            f[1] = -1;
            p.push_back(f);
        }
    } else {
        p.push_back(L.unit(0));
        p.push_back(L.unit(1));
    }
    return p;
}

int64_t riemann_roch(const Vec& q, const Lattice& L) {
    int64_t twice = inner_product(q, q, L) - inner_product(L.k, q, L);
    int64_t v = twice / 2 + 1;
    return v < 0 ? 0 : v;
}

int64_t h0_peel(const Vec& c, const std::vector<Vec>& curves, const Lattice& L, const PeelPicker& pick) {
    if (int(c.size()) != L.rank) throw StructuralError("class length does not match lattice rank");
    if (is_zero(c)) return 1;
    int64_t l1 = 0;
    for (int64_t x : c) l1 += x < 0 ? -x : x;
    int64_t kc = inner_product(L.k, c, L);
    int64_t bound = 64 * int64_t(L.rank + curves.size() + 1) * ((kc < 0 ? -kc : kc) + l1 + 1);
    Vec q = c;
    std::vector<size_t> neg;
    for (int64_t it = 0;; ++it) {
        // -k is nef, so effective classes have -k.q >= 0
        if (inner_product(L.k, q, L) > 0) return 0;
        neg.clear();
        for (size_t i = 0; i < curves.size(); ++i)
            if (inner_product(q, curves[i], L) < 0) neg.push_back(i);
        if (neg.empty()) break;
        if (it >= bound) throw DomainError("h0: peeling did not terminate; input is not a weak del Pezzo lattice");
        q = q - curves[pick(neg)];
    }
    if (is_zero(q)) return 1;
    for (const auto& p : nef_probes(L))
        if (inner_product(q, p, L) < 0) return 0;
    return riemann_roch(q, L);
}

int64_t h0(const Vec& c, const std::vector<Vec>& E, const std::vector<Vec>& B, const Lattice& L) {
    std::vector<Vec> curves;
    curves.reserve(E.size() + B.size());
    curves.insert(curves.end(), E.begin(), E.end());
    curves.insert(curves.end(), B.begin(), B.end());
    std::sort(curves.begin(), curves.end(), class_less);
    return h0_peel(c, curves, L, [](const std::vector<size_t>& idx) { return idx.front(); });
}

}  // namespace nsk
