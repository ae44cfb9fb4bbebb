// The Cremona invariant: incidence diagram of E and B with conjugation edges,
// and its canonical certificate.
#pragma once

#include "nsk/graph.hpp"
#include "nsk/lattice.hpp"

#include <string>
#include <tuple>
#include <vector>

namespace nsk {

enum class VertexKind { Minus1, Minus2, Zero };

struct LabeledGraph {
    std::vector<Vec> classes;
    std::vector<VertexKind> kinds;
    std::vector<int> conj;                    // index of sigma(c)
    std::vector<std::vector<int64_t>> prod;  // all pairwise products, diagonal included

    int size() const { return int(classes.size()); }
    // (i, j, product) for i < j with nonzero product
    std::vector<std::tuple<int, int, int64_t>> edges() const;
    // (i, j) for i <= j with j = sigma(i)
    std::vector<std::pair<int, int>> infinity_edges() const;
};

// Vertices E then B. Throws if sigma does not preserve E or B.
LabeledGraph cremona_invariant(const std::vector<Vec>& E, const std::vector<Vec>& B, const RealStructure& sigma,
                               const Lattice& L);
// Same with extra vertices (kind Zero) for lattices where E does not determine
// the data: used with the isotropic classes in degree 8 and 9.
LabeledGraph cremona_invariant(const std::vector<Vec>& E, const std::vector<Vec>& B, const std::vector<Vec>& extra,
                               const RealStructure& sigma, const Lattice& L);

CodeGraph code_graph(const LabeledGraph& g);

struct Certificate {
    std::string bytes;  // canonical serialization
    std::string hex() const;     // SHA-256 of bytes, lowercase hex
    bool operator==(const Certificate& o) const { return bytes == o.bytes; }
    bool operator<(const Certificate& o) const { return bytes < o.bytes; }
};

struct CanonicalResult {
    Certificate certificate;
    std::vector<int> order;                    // order[p] = vertex at canonical position p
    std::vector<std::vector<int>> generators;  // automorphisms of the labeled graph
};

CanonicalResult canonicalize(const LabeledGraph& g);
Certificate canonical_certificate(const LabeledGraph& g);
bool is_isomorphic(const LabeledGraph& g, const LabeledGraph& h);

// round vertices for (-1)-classes, squares for (-2)-classes, dashed edges for
// conjugation, red dashed edges for negative products.
std::string to_dot(const LabeledGraph& g, const Lattice& L, const std::string& name = "cremona");

}  // namespace nsk
