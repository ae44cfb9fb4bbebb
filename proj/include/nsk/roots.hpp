// Root bases, Dynkin types, reflections and involutions built from a base.
#pragma once

#include "nsk/lattice.hpp"

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace nsk {

// c - 2 (r.c / r.r) r
Vec reflect(const Vec& r, const Vec& c, const Lattice& L);

struct RootBase {
    std::vector<Vec> elements;
    RatMatrix q;     // columns: elements, then an integral basis of their orthogonal complement
    RatMatrix q_inv;
};

struct RootBaseError : DomainError {
    enum Kind { Dependent, SignCondition, NotARoot } kind;
    Vec witness;
    RootBaseError(Kind k, Vec w, const std::string& msg) : DomainError(msg), kind(k), witness(std::move(w)) {}
};

// Builds Q = [B | kernel(B J)], checks det Q != 0 and that every root of R
// in the integral span of B has one-signed B-coordinates.
RootBase is_root_base(const std::vector<Vec>& B, const Lattice& L, const std::vector<Vec>& R_plus);
std::optional<RootBase> try_root_base(const std::vector<Vec>& B, const Lattice& L, const std::vector<Vec>& R_plus);

// Membership test for the integral span of a base, with coordinates.
class SpanTest {
public:
    SpanTest(const RootBase& base, int rank);
    // Coordinates along the base elements, or nullopt if c is not in the span.
    std::optional<std::vector<int64_t>> coords(const Vec& c) const;

private:
    int n_ = 0, m_ = 0;
    int64_t den_ = 1;
    std::vector<int64_t> num_;  // den * Q^{-1}, row-major
};

struct DynkinType {
    std::vector<std::pair<char, int>> components;  // ('A', n), ('D', n), ('E', n), sorted
    std::string name() const;                     // "A0" when empty
    int rank() const;
    bool operator==(const DynkinType& o) const { return components == o.components; }
    bool operator<(const DynkinType& o) const { return components < o.components; }
};

// Incidence diagram of a set of roots with pairwise products in {0, 1}.
DynkinType dynkin_type(const std::vector<Vec>& roots, const Lattice& L);
DynkinType dynkin_type(const RootBase& B, const Lattice& L);
// Partition of the roots into connected components of the incidence diagram.
std::vector<std::vector<int>> dynkin_components(const std::vector<Vec>& roots, const Lattice& L);

using RootSet = std::vector<Vec>;  // sorted positive representatives
RootSet normalize_root_set(std::vector<Vec> s);
// Least family of root sets containing B and closed under reflection in every root.
std::set<RootSet> weyl_orbit_closure(const std::vector<Vec>& B, const std::vector<Vec>& R_plus, const Lattice& L);

// M = Q D Q^{-1} with D = diag(-1 on the base, +1 on the complement), validated.
RatMatrix involution_matrix(const RootBase& A);
RealStructure involution_from_base(const RootBase& A, const Lattice& L);

// Simple roots of a closed root subsystem given by its positive roots: those
// that are not a sum of two positive roots of the subsystem.
std::vector<Vec> simple_roots(const std::vector<Vec>& positive, const Lattice& L);

}  // namespace nsk
