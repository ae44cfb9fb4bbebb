// Simple family graphs, hexagonal triples, graph shapes, type 2 bases via
// AlgoBases and adjoint chains at the lattice level.
#pragma once

#include "nsk/classifier.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace nsk {

struct FamilyEdge {
    int i = 0, j = 0;
    int64_t label = 0;
};

struct FamilyGraph {
    std::vector<Vec> classes;
    std::vector<int64_t> labels;  // family dimension
    std::vector<FamilyEdge> edges;

    int size() const { return int(classes.size()); }
    std::vector<std::vector<int64_t>> products;  // all pairwise products
};

// Edges for pairwise products >= 2.
FamilyGraph family_graph(const std::vector<Vec>& classes, const std::vector<int64_t>& labels, const Lattice& L);
// Vertices G of the record, labels h0 - 1.
FamilyGraph simple_family_graph(const LatticeClassRecord& rec);

struct HexTriple {
    int u = 0, v = 0, w = 0;
    std::optional<Vec> witness;  // c in E* orthogonal to all three
};

// Triples of pairwise non-adjacent vertices.
std::vector<HexTriple> hexagonal_triples(const FamilyGraph& g);
// Same, with the orthogonal witness searched in E_star when given.
std::vector<HexTriple> hexagonal_triples(const FamilyGraph& g, const std::vector<Vec>& E_star, const Lattice& L);
// Witnesses are searched in degree <= 5.
std::vector<HexTriple> hexagonal_triples(const LatticeClassRecord& rec);

struct GraphShape {
    int kind = 0;         // 1..5
    int m = 0;            // size of the index set, or vertex count in case 1
    bool hub = false;     // case 3 optional vertex
    int apexes = 0;       // case 4 optional vertices
    int tau_fixed = 0;    // case 5: fixed points of tau
    int tau_swapped = 0;  // case 5: swapped pairs of tau
    bool sphere = false;  // case 1 with a vertex labeled 3

    std::string describe() const;
};

GraphShape graph_shape(const FamilyGraph& g);

// All completions of seed to a basis by (-1)-classes as in AlgoBases.
std::vector<std::vector<Vec>> algo_bases(const std::vector<Vec>& seed, const std::vector<Vec>& E,
                                         const std::vector<Vec>& B, const RealStructure& sigma, const Lattice& L);

enum class TerminalKind { WeakDelPezzo, P1Bundle, None };
std::string to_string(TerminalKind t);

struct AdjointChain {
    Lattice L;
    RealStructure sigma;
    std::vector<Vec> B;
    std::vector<Vec> h;                        // h_0 .. h_l, in N(Y_0)
    std::vector<Vec> k;                        // k_0 .. k_l, pulled back
    std::vector<std::vector<Vec>> contracted;  // contracted[i] by mu_i, i < l
    TerminalKind terminal = TerminalKind::None;

    int length() const { return int(contracted.size()); }
    std::vector<Vec> all_contracted() const;
};

AdjointChain adjoint_chain(const Vec& h0, const Lattice& L, const RealStructure& sigma, const std::vector<Vec>& B = {});

struct MinimalFamilies {
    std::vector<Vec> classes;
    int terminal_case = 0;          // 1, 2 or 3; 0 for a P1-bundle terminal
    bool single_family = false;  // one family of dimension 1
    std::string model;           // "plane", "quadric", "del-pezzo" or "bundle"
};

MinimalFamilies minimal_families_via_chain(const AdjointChain& chain);
// Labels -k_0.c - 1.
FamilyGraph chain_family_graph(const AdjointChain& chain, const MinimalFamilies& fam);

// Incomplete minimal families have (c^2, k.c) in {(2,-2), (4,-2)}.
bool incomplete_family_class(const Vec& c, const Vec& k, const Lattice& L);

std::string to_dot(const FamilyGraph& g, const Lattice& L, const std::string& name = "families");
nlohmann::json to_json(const FamilyGraph& g, const Lattice& L);
nlohmann::json to_json(const AdjointChain& chain);
nlohmann::json to_json(const MinimalFamilies& fam, const Lattice& L);
nlohmann::json triples_json(const FamilyGraph& g, const std::vector<HexTriple>& t, const Lattice& L);

}  // namespace nsk
