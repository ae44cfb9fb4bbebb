// Neron-Severi lattice arithmetic: bases, intersection form, canonical class,
// real structures and the section dimension function h0.
#pragma once

#include "nsk/rational.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nsk {

using Vec = std::vector<int64_t>;

struct StructuralError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class BasisKind { Type1, Type2 };

struct Lattice {
    int rank = 0;
    BasisKind kind = BasisKind::Type1;
    std::vector<int64_t> gram;  // row-major rank x rank
    Vec k;
    Rat alpha = 1;

    int64_t g(int i, int j) const { return gram[size_t(i) * rank + j]; }
    int degree() const { return 10 - rank; }
    // e_1..e_r for Type1, eps_1..eps_s for Type2
    int exceptional_count() const { return kind == BasisKind::Type1 ? rank - 1 : rank - 2; }
    Vec zero() const { return Vec(rank, 0); }
    Vec unit(int i) const;
    Vec hyperplane() const;  // h = -alpha k; only defined when alpha k is integral
};

// Type1: r = number of e_i (rank r+1). Type2: r = s = number of eps_j (rank s+2).
Lattice make_lattice(int r, BasisKind kind, Rat alpha);
// Same, with the smallest admissible alpha for the degree (4 - k^2 in degree 1..2, else 1).
Lattice make_lattice(int r, BasisKind kind);
// Type1 lattice of any rank, without the del Pezzo range and alpha checks.
Lattice make_type1_lattice(int r);

int64_t inner_product(const Vec& c, const Vec& d, const Lattice& L);
inline int64_t dot(const Lattice& L, const Vec& c, const Vec& d) { return inner_product(c, d, L); }

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(int64_t s, const Vec& a);
bool is_zero(const Vec& a);

// Descending lexicographic order on absolute coefficients, ties broken by
// descending signed coefficients; the canonical order for every set of classes.
bool class_less(const Vec& a, const Vec& b);
void sort_classes(std::vector<Vec>& v);
// First nonzero coefficient positive.
Vec positive_rep(const Vec& c);
bool is_positive(const Vec& c);

std::string format_class(const Vec& c, const Lattice& L);
Vec parse_class(const std::string& s, const Lattice& L);

struct IntMatrix {
    int n = 0;
    std::vector<int64_t> a;  // row-major; column j is the image of basis vector j
    IntMatrix() = default;
    explicit IntMatrix(int n_) : n(n_), a(size_t(n_) * n_, 0) {}
    int64_t& operator()(int i, int j) { return a[size_t(i) * n + j]; }
    int64_t operator()(int i, int j) const { return a[size_t(i) * n + j]; }
    static IntMatrix identity(int n);
    Vec apply(const Vec& c) const;
    bool operator==(const IntMatrix& o) const { return n == o.n && a == o.a; }
};

enum class InvolutionDefect { None, WrongSize, NonIntegral, NotInvolution, NotIsometry, MovesK };
std::string to_string(InvolutionDefect d);

struct InvolutionError : DomainError {
    InvolutionDefect defect;
    InvolutionError(InvolutionDefect d, const std::string& msg) : DomainError(msg), defect(d) {}
};

struct RealStructure {
    IntMatrix matrix;
    Vec operator()(const Vec& c) const { return matrix.apply(c); }
};

// Checks integrality, M^2 = I, M^T J M = J and M k = k, in that order.
InvolutionDefect involution_defect(const RatMatrix& M, const Lattice& L);
RealStructure validate_involution(const RatMatrix& M, const Lattice& L);
RealStructure validate_involution(const IntMatrix& M, const Lattice& L);
RealStructure identity_structure(const Lattice& L);
// Integer matrix sending basis vector j to images[j].
IntMatrix matrix_from_images(const std::vector<Vec>& images);

// h0 via fixed-component peeling. curves are the negative curves used for
// peeling (the (-1)-curves and the (-2)-curves).
int64_t h0(const Vec& c, const std::vector<Vec>& E, const std::vector<Vec>& B, const Lattice& L);

// Peeling with a caller supplied choice among the currently negative curves;
// pick receives the candidate indices (into curves) and returns one of them.
using PeelPicker = std::function<size_t(const std::vector<size_t>&)>;
int64_t h0_peel(const Vec& c, const std::vector<Vec>& curves, const Lattice& L, const PeelPicker& pick);
// Riemann-Roch value of a residue, clamped at 0.
int64_t riemann_roch(const Vec& q, const Lattice& L);
// Classes that every nef class meets nonnegatively (e0 and e0-e1, or l0 and l1).
std::vector<Vec> nef_probes(const Lattice& L);

}  // namespace nsk
