// Canonical forms of complete graphs with integer codes on every pair and on
// the diagonal (vertex colours), by individualization and refinement.
#pragma once

#include <cstdint>
#include <vector>

namespace nsk {

struct CodeGraph {
    int n = 0;
    std::vector<int32_t> code;  // symmetric, row-major n x n
    CodeGraph() = default;
    explicit CodeGraph(int n_) : n(n_), code(size_t(n_) * n_, 0) {}
    int32_t operator()(int i, int j) const { return code[size_t(i) * n + j]; }
    int32_t& at(int i, int j) { return code[size_t(i) * n + j]; }
};

struct CanonicalForm {
    std::vector<int> order;                    // order[p] = vertex placed at position p
    std::vector<int32_t> form;                 // code matrix relabeled by order
    std::vector<std::vector<int>> generators;  // automorphisms found, as vertex maps
};

// Lexicographically least relabeled matrix over the refinement search tree.
CanonicalForm canonical_form(const CodeGraph& g);

// Graph relabeled so that vertex v goes to position pos[v].
CodeGraph permute(const CodeGraph& g, const std::vector<int>& pos);

// Plain backtracking isomorphism test, independent of canonical_form.
bool brute_force_isomorphic(const CodeGraph& a, const CodeGraph& b);

// Orbits of the group generated by gens, as a representative per vertex.
std::vector<int> orbit_representatives(int n, const std::vector<std::vector<int>>& gens);

}  // namespace nsk
