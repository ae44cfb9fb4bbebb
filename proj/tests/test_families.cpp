#include "helpers.hpp"

#include "nsk/checks.hpp"

#include <doctest.h>

#include <set>

using namespace nsk;
using testutil::classes;
using testutil::find_row;
using testutil::names;
using testutil::sorted;

namespace {

AdjointChain example(const std::string& name) {
    for (auto& e : chain_examples())
        if (e.name == name) return e.chain;
    throw std::runtime_error("missing example " + name);
}

// All 3-subsets with no edge between any two members.
std::set<std::set<int>> brute_triples(const FamilyGraph& g) {
    std::set<std::pair<int, int>> adj;
    for (const auto& e : g.edges) adj.insert({std::min(e.i, e.j), std::max(e.i, e.j)});
    std::set<std::set<int>> out;
    int n = g.size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (!adj.count({a, b}) && !adj.count({a, c}) && !adj.count({b, c})) out.insert({a, b, c});
    return out;
}

std::set<std::set<int>> as_sets(const std::vector<HexTriple>& t) {
    std::set<std::set<int>> out;
    for (const auto& x : t) out.insert({x.u, x.v, x.w});
    return out;
}

}  // namespace

TEST_CASE("family graph of the smooth cubic is 10-regular on 27 vertices") {
    auto recs = classify(6, Scope::Full);
    const auto& rec = find_row(recs, "A0", "A0");
    auto g = simple_family_graph(rec);
    CHECK(g.size() == 27);
    std::vector<int> deg(27, 0);
    for (const auto& e : g.edges) {
        CHECK(e.label == 2);
        ++deg[e.i];
        ++deg[e.j];
    }
    for (int d : deg) CHECK(d == 10);
    for (auto l : g.labels) CHECK(l == 1);
    CHECK(g.edges.size() == 135);
    CHECK(graph_shape(g).kind == 2);
}

TEST_CASE("family graphs in degrees 6 and 9") {
    auto recs = classify(3, Scope::Full);
    auto p = simple_family_graph(find_row(recs, "A1'", "A0"));
    CHECK(p.size() == 3);
    CHECK(p.edges.empty());
    auto t = hexagonal_triples(find_row(recs, "A1'", "A0"));
    REQUIRE(t.size() == 1);
    Lattice L = make_lattice(3, BasisKind::Type1);
    std::set<std::string> tri{format_class(p.classes[t[0].u], L), format_class(p.classes[t[0].v], L),
                              format_class(p.classes[t[0].w], L)};
    CHECK(tri == std::set<std::string>{"e0-e1", "e0-e2", "e0-e3"});
    CHECK(hexagonal_triples(find_row(recs, "A1", "A1")).empty());

    auto nine = classify_degree(9, Scope::Full);
    REQUIRE(nine.size() == 1);
    auto g9 = simple_family_graph(nine[0]);
    CHECK(g9.size() == 1);
    CHECK(g9.labels[0] == 2);
    CHECK(graph_shape(g9).kind == 1);
}

TEST_CASE("hexagonal triples match the brute force count") {
    for (int r : {3, 4, 5})
        for (const auto& rec : classify(r, Scope::Full)) {
            auto g = simple_family_graph(rec);
            CHECK(as_sets(hexagonal_triples(g)) == brute_triples(g));
        }
    auto recs = classify(5, Scope::Full);
    auto g = simple_family_graph(find_row(recs, "2A1'", "4A1"));
    CHECK(g.size() == 4);
    CHECK(as_sets(hexagonal_triples(g)) == brute_triples(g));
}

TEST_CASE("orthogonal witnesses on trivial real structures") {
    for (int r : {4, 5, 6})
        for (const auto& rec : classify(r, Scope::TrivialSigma))
            for (const auto& t : hexagonal_triples(rec)) CHECK(t.witness.has_value());
}

TEST_CASE("graph shape templates") {
    Lattice P = make_type1_lattice(0);
    auto sphere = family_graph({Vec{1}}, {3}, P);
    auto s = graph_shape(sphere);
    CHECK(s.kind == 1);
    CHECK(s.sphere);

    Lattice L = make_lattice(3, BasisKind::Type1);
    auto edgeless = family_graph(classes({"e0-e1", "e0-e2"}, L), {1, 1}, L);
    CHECK(graph_shape(edgeless).kind == 1);
}

TEST_CASE("first adjoint chain example") {
    auto ch = example("plane8");
    CHECK(ch.length() == 1);
    Lattice& L = ch.L;
    CHECK(format_class(ch.h[1], L) == "e0");
    CHECK(sorted(ch.contracted[0]) == sorted(classes({"e1", "e2", "e3", "e4", "e5", "e6", "e7", "e8"}, L)));
    auto mf = minimal_families_via_chain(ch);
    CHECK(sorted(mf.classes) == sorted(classes({"e0", "2e0-e1-e2-e3-e4", "2e0-e1-e2-e7-e8", "2e0-e3-e4-e5-e6",
                                                "2e0-e1-e2-e5-e6", "2e0-e3-e4-e7-e8", "2e0-e5-e6-e7-e8"},
                                               L)));
    auto shape = graph_shape(chain_family_graph(ch, mf));
    CHECK(shape.kind == 3);
    CHECK(shape.m == 4);
    CHECK(shape.hub);
}

TEST_CASE("second adjoint chain example") {
    auto ch = example("plane9");
    CHECK(ch.length() == 2);
    CHECK(format_class(ch.h[1], ch.L) == "6e0-2e1-2e2-e3-e4-e5-e6");
    CHECK(format_class(ch.h[2], ch.L) == "3e0-e1-e2");
    auto mf = minimal_families_via_chain(ch);
    CHECK(sorted(mf.classes) ==
          sorted(classes({"2e0-e1-e2-e3-e4", "2e0-e1-e2-e5-e6", "e0-e7", "e0-e8", "e0-e9"}, ch.L)));
    CHECK(graph_shape(chain_family_graph(ch, mf)).kind == 4);
}

TEST_CASE("third adjoint chain example") {
    auto ch = example("quadric5");
    auto mf = minimal_families_via_chain(ch);
    CHECK(sorted(mf.classes) ==
          sorted(classes({"l0+l1-eps1-eps2", "l0+l1-eps1-eps3", "l0+l1-eps2-eps3", "l0+l1-eps4-eps5"}, ch.L)));
    CHECK(graph_shape(chain_family_graph(ch, mf)).kind == 5);
}

TEST_CASE("chain of length zero and nefness check") {
    Lattice L = make_lattice(3, BasisKind::Type1);
    auto ch = adjoint_chain(-L.k, L, identity_structure(L));
    CHECK(ch.length() == 0);
    CHECK(ch.h.size() == 1);
    CHECK_THROWS_AS(adjoint_chain(parse_class("e0-e1-e2-e3", L), L, identity_structure(L)), DomainError);
}

TEST_CASE("chain outputs avoid incomplete families") {
    for (auto& e : chain_examples()) {
        auto mf = minimal_families_via_chain(e.chain);
        for (const auto& c : mf.classes) CHECK(!incomplete_family_class(c, e.chain.k[0], e.chain.L));
        auto g = chain_family_graph(e.chain, mf);
        for (auto l : g.labels) CHECK(l <= 3);
        for (const auto& ed : g.edges) CHECK(ed.label <= 8);
    }
}

TEST_CASE("AlgoBases") {
    auto recs = classify(3, Scope::Full);
    const auto& rec = find_row(recs, "A1'", "A0");
    Lattice L = rec.lattice();
    auto s = distinguished_sets(L, rec.sigma, rec.B_classes);
    auto out = algo_bases(classes({"e0-e1", "e0-e2"}, L), s.E, rec.B_classes, rec.sigma, L);
    REQUIRE(out.size() == 1);
    CHECK(sorted(out[0]) == sorted(classes({"e0-e1", "e0-e2", "e3", "e0-e1-e2"}, L)));

    auto full = classes({"e0", "e1", "e2", "e3"}, L);
    auto id = identity_structure(L);
    auto same = algo_bases(full, s.E, {}, id, L);
    REQUIRE(same.size() == 1);
    CHECK(sorted(same[0]) == sorted(full));

    // no (-1)-class is orthogonal to this seed
    CHECK(algo_bases(classes({"e1", "e2", "e0-e1-e2-e3"}, L), s.E, {}, id, L).empty());

    CHECK_THROWS_AS(algo_bases({}, s.E, {}, id, L), ValidationError);
    CHECK_THROWS_AS(algo_bases(classes({"e1", "e1"}, L), s.E, {}, id, L), ValidationError);
    CHECK_THROWS_AS(algo_bases(classes({"e1"}, L), s.E, {}, rec.sigma, L), ValidationError);
}

TEST_CASE("labels stay within bounds on every produced family graph") {
    for (int d = 9; d >= 3; --d)
        for (const auto& rec : classify_degree(d, Scope::Full)) {
            auto g = simple_family_graph(rec);
            for (auto l : g.labels) CHECK(l <= 3);
            for (const auto& e : g.edges) CHECK(e.label <= 8);
            CHECK_NOTHROW(graph_shape(g));
        }
}
