// Enumeration of classes with prescribed intersection numbers and the
// distinguished subsets E, R+, F, E*, F*, E_R, F_R, S and G.
#pragma once

#include "nsk/lattice.hpp"

#include <vector>

namespace nsk {

// Classes c with d.c = alpha, c^2 = beta that are e_i - e_j (i<j), e_i, or
// satisfy c.e0 > 0 and c.e_i >= 0. Type1 only.
//
// For d = -k write c = x0 e0 - sum y_i e_i. Outside cases (1) and (2),
// x0 >= 1 and y_i >= 0 with sum y_i = 3 x0 - alpha and sum y_i^2 = x0^2 - beta.
// Cauchy-Schwarz (sum y)^2 <= r sum y^2 gives
//   (9-r) x0^2 - 6 alpha x0 + alpha^2 + r beta <= 0,
// so x0 <= (3 alpha + sqrt(9 alpha^2 - (9-r)(alpha^2 + r beta))) / (9-r) and
// 0 <= y_i <= sqrt(x0^2 - beta). Any other d with d^2 > 0 and d.e0 > 0 goes
// through enumerate_classes and is filtered by the three conditions.
std::vector<Vec> algo_class(const Lattice& L, const Vec& d, int64_t alpha, int64_t beta);

// Largest x0 admitted by the box above (0 when no class of kind (3) exists).
int64_t algo_class_x0_bound(int r, int64_t alpha, int64_t beta);

// All c with p.c = a and c^2 = b, for any basis kind and any p with p^2 > 0.
// Enumerates the ellipsoid 2 (p.x)^2 - p^2 x^2 <= 2 a^2 - p^2 b of the
// positive definite majorant and filters.
std::vector<Vec> enumerate_classes(const Lattice& L, const Vec& p, int64_t a, int64_t b);

// Classes of the lattice itself: E, positive roots and F, in canonical order.
struct LatticeClasses {
    std::vector<Vec> E;       // k.c = -1, c^2 = -1
    std::vector<Vec> R_plus;  // k.c = 0, c^2 = -2, first nonzero coefficient positive
    std::vector<Vec> F;       // -k.c = 2, c^2 = 0
};
LatticeClasses lattice_classes(const Lattice& L);
// Shared, computed once per (kind, rank).
const LatticeClasses& cached_lattice_classes(const Lattice& L);

struct DistinguishedSets {
    std::vector<Vec> E, R_plus, F, E_star, F_star, E_real, F_real, S_minus, G;
};

DistinguishedSets distinguished_sets(const Lattice& L, const RealStructure& sigma, const std::vector<Vec>& B);

// G per degree: F_R in degree 1..6, {-k/3} in degree 9, and in degree 7..8
// F_R when nonempty, else -k/2, else -k/3, else the fixed plane classes.
std::vector<Vec> simple_family_classes(const Lattice& L, const DistinguishedSets& sets, const RealStructure& sigma,
                                       const std::vector<Vec>& B);

// h0 on a lattice with (-2)-curves B, peeling by the (-1)-curves E* and B.
int64_t h0_on(const Lattice& L, const DistinguishedSets& sets, const std::vector<Vec>& B, const Vec& c);

bool set_fixed(const RealStructure& sigma, const std::vector<Vec>& S);

}  // namespace nsk
