// Classification of Neron-Severi lattices of real weak del Pezzo surfaces up
// to isomorphism, one record per Cremona invariant.
#pragma once

#include "nsk/classes.hpp"
#include "nsk/cremona.hpp"
#include "nsk/roots.hpp"

#include <string>
#include <vector>

namespace nsk {

enum class Scope { Full, TrivialSigma, DelPezzo };
std::string to_string(Scope s);
Scope parse_scope(const std::string& s);

struct Counts {
    int64_t E = 0, E_star = 0, E_real = 0, R_plus = 0, F = 0, F_star = 0, F_real = 0, G = 0;
};

struct LatticeClassRecord {
    int degree = 0;
    int index = 0;
    BasisKind kind = BasisKind::Type1;
    int rank = 0;
    std::string name_A, name_B;  // Dynkin names with ' marks
    DynkinType dynkin_A, dynkin_B;
    std::vector<Vec> A_classes, B_classes;
    RealStructure sigma;
    Certificate certificate;
    Counts counts;
    bool p1p1 = false, real_minimal = false;

    Lattice lattice() const;
};

struct InvolutionClass {
    BasisKind kind = BasisKind::Type1;
    int rank = 0;
    RealStructure sigma;
    std::vector<Vec> A_classes;
    DynkinType type;
    std::string name;
    Certificate certificate;  // of the invariant with B empty
    bool stable_configuration = false;
};

struct ClassifyOptions {
    int jobs = 1;
    bool use_cache = true;
};

// The lattices of a degree: type 1 with r = 9 - degree, plus type 2 with s = 0 in degree 8.
std::vector<Lattice> lattices_for_degree(int degree);

Certificate record_certificate(const Lattice& L, const RealStructure& sigma, const std::vector<Vec>& B);
CanonicalResult record_canonical(const Lattice& L, const RealStructure& sigma, const std::vector<Vec>& B);

// Unnamed record with every count and flag filled.
LatticeClassRecord emit_record(const std::vector<Vec>& B, const RealStructure& sigma, const Lattice& L);

// Is there a sigma-stable set of pairwise orthogonal (-1)-classes of the
// size of an exceptional configuration (the number of blown up points)?
bool has_stable_exceptional_configuration(const Lattice& L, const RealStructure& sigma);

// Involutions up to conjugacy, named.
std::vector<InvolutionClass> involution_classes(int degree, const ClassifyOptions& opt = {});

// r is the number of blown up points (degree 9 - r).
std::vector<LatticeClassRecord> classify(int r, Scope scope, const ClassifyOptions& opt = {});
std::vector<LatticeClassRecord> classify_degree(int degree, Scope scope, const ClassifyOptions& opt = {});
// Literal subset enumeration over R+, for 2 <= r <= 4.
std::vector<LatticeClassRecord> classify_naive(int r);

// Conjugates (sigma, B) by a Weyl group element so that B lies in R+.
void normalize_into_positive(const Lattice& L, RealStructure& sigma, std::vector<Vec>& B);

// sigma-stable root bases up to isomorphism, as (sigma, B) pairs in the given lattice.
std::vector<std::vector<Vec>> stable_bases(const Lattice& L, const RealStructure& sigma, int jobs = 1);

// Lattice isometry induced by a vertex automorphism of the invariant (E spans).
bool isometry_from_automorphism(const Lattice& L, const std::vector<int>& perm, IntMatrix& out);

}  // namespace nsk
