#include "helpers.hpp"
#include "oracles.hpp"

#include "nsk/roots.hpp"

#include <doctest.h>

#include <random>

using namespace nsk;
using testutil::classes;

namespace {
Rat q(int64_t n, int64_t d = 1) { return Rat(n, d); }
}  // namespace

TEST_CASE("reflections") {
    Lattice L = make_lattice(3, BasisKind::Type1);
    Vec r = parse_class("e1-e2", L);
    CHECK(reflect(r, r, L) == -r);
    CHECK(reflect(r, parse_class("e2-e3", L), L) == parse_class("e1-e3", L));
    CHECK(reflect(r, L.unit(0), L) == L.unit(0));

    std::mt19937 rng(5);
    std::uniform_int_distribution<int64_t> d(-6, 6);
    const auto& R = cached_lattice_classes(L).R_plus;
    for (int t = 0; t < 200; ++t) {
        const Vec& root = R[size_t(t) % R.size()];
        Vec a(4), b(4);
        for (auto& x : a) x = d(rng);
        for (auto& x : b) x = d(rng);
        CHECK(dot(L, reflect(root, a, L), reflect(root, b, L)) == dot(L, a, b));
    }
}

TEST_CASE("root base of the degree 6 example") {
    Lattice L = make_lattice(3, BasisKind::Type1);
    const auto& R = cached_lattice_classes(L).R_plus;
    auto B = classes({"e1-e2", "e2-e3", "e0-e1-e2-e3"}, L);
    RootBase base = is_root_base(B, L, R);

    RatMatrix Q(4, 4);
    const int64_t rows[4][4] = {{0, 0, 1, -3}, {1, 0, -1, 1}, {-1, 1, -1, 1}, {0, -1, -1, 1}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) Q(i, j) = rows[i][j];
    CHECK(base.q == Q);

    RatMatrix inv;
    REQUIRE(invert(Q, inv));
    CHECK(base.q_inv == inv);
    // e1 - e3 has coordinates (1, 1, 0, 0) along the base
    Vec c = parse_class("e1-e3", L);
    std::vector<Rat> coord(4, Rat(0));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) coord[i] += inv(i, j) * Rat(c[j]);
    CHECK(coord == std::vector<Rat>{1, 1, 0, 0});

    CHECK(dynkin_type(base, L).name() == "A1+A2");

    RatMatrix M = involution_matrix(base);
    const Rat expect[4][4] = {{q(2), q(1), q(1), q(1)},
                              {q(-1), q(-4, 3), q(-1, 3), q(-1, 3)},
                              {q(-1), q(-1, 3), q(-4, 3), q(-1, 3)},
                              {q(-1), q(-1, 3), q(-1, 3), q(-4, 3)}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(M(i, j) == expect[i][j]);
    CHECK(involution_defect(M, L) == InvolutionDefect::NonIntegral);
    CHECK_THROWS_AS(involution_from_base(base, L), InvolutionError);
}

TEST_CASE("root base rejections and the empty base") {
    Lattice L = make_lattice(3, BasisKind::Type1);
    const auto& R = cached_lattice_classes(L).R_plus;
    try {
        is_root_base(classes({"e1-e2", "e2-e3", "e1-e3"}, L), L, R);
        FAIL("accepted a dependent set");
    } catch (const RootBaseError& e) {
        CHECK(e.kind == RootBaseError::Dependent);
    }
    try {
        // e2-e3 = (e1-e3) - (e1-e2) has mixed signs
        is_root_base(classes({"e1-e2", "e1-e3"}, L), L, R);
        FAIL("accepted a non-base");
    } catch (const RootBaseError& e) {
        CHECK(e.kind == RootBaseError::SignCondition);
    }
    auto empty = is_root_base({}, L, R);
    CHECK(dynkin_type(empty, L).name() == "A0");
    auto id = involution_from_base(empty, L);
    CHECK(id.matrix == IntMatrix::identity(4));
}

TEST_CASE("involution of a single root") {
    Lattice L = make_lattice(3, BasisKind::Type1);
    const auto& R = cached_lattice_classes(L).R_plus;
    auto s = involution_from_base(is_root_base(classes({"e0-e1-e2-e3"}, L), L, R), L);
    CHECK(s.matrix == matrix_from_images(classes({"2e0-e1-e2-e3", "e0-e2-e3", "e0-e1-e3", "e0-e1-e2"}, L)));
    auto t = involution_from_base(is_root_base(classes({"e1-e2"}, L), L, R), L);
    CHECK(t.matrix == matrix_from_images(classes({"e0", "e2", "e1", "e3"}, L)));
    auto u = involution_from_base(is_root_base(classes({"e0-e1-e2-e3", "e1-e2"}, L), L, R), L);
    CHECK(u.matrix == matrix_from_images(classes({"2e0-e1-e2-e3", "e0-e1-e3", "e0-e2-e3", "e0-e1-e2"}, L)));
}

TEST_CASE("accepted involutions permute the roots and have the base as -1 eigenspace") {
    for (int r = 3; r <= 5; ++r) {
        Lattice L = make_lattice(r, BasisKind::Type1);
        const auto& R = cached_lattice_classes(L).R_plus;
        for (const auto& ic : involution_classes(L.degree())) {
            std::set<Vec> all;
            for (const auto& x : R) {
                all.insert(x);
                all.insert(-x);
            }
            for (const auto& x : all) CHECK(all.count(ic.sigma(x)) == 1);
            for (const auto& a : ic.A_classes) CHECK(ic.sigma(a) == -a);
            // trace = rank - 2 dim(-1 eigenspace)
            Rat tr = 0;
            for (int i = 0; i < L.rank; ++i) tr += ic.sigma.matrix(i, i);
            CHECK(tr == Rat(L.rank - 2 * int(ic.A_classes.size())));
        }
    }
}

TEST_CASE("Dynkin types of the full root systems") {
    const char* expect[] = {"A1", "A1+A2", "A4", "D5", "E6", "E7", "E8"};
    for (int r = 2; r <= 8; ++r) {
        Lattice L = make_lattice(r, BasisKind::Type1);
        const auto& R = cached_lattice_classes(L).R_plus;
        auto base = simple_roots(R, L);
        CHECK(dynkin_type(base, L).name() == expect[r - 2]);
    }
    Lattice L = make_lattice(3, BasisKind::Type1);
    CHECK(dynkin_type(classes({"e1-e2"}, L), L).name() == "A1");
}

TEST_CASE("Weyl orbit closure") {
    Lattice L4 = make_lattice(3, BasisKind::Type1);
    auto R4 = cached_lattice_classes(L4).R_plus;
    auto o4 = weyl_orbit_closure(classes({"e1-e2"}, L4), R4, L4);
    CHECK(o4.count(normalize_root_set(classes({"e0-e1-e2-e3"}, L4))) == 0);

    Lattice L5 = make_lattice(4, BasisKind::Type1);
    auto R5 = cached_lattice_classes(L5).R_plus;
    auto o5 = weyl_orbit_closure(classes({"e1-e2"}, L5), R5, L5);
    CHECK(o5.count(normalize_root_set(classes({"e0-e1-e2-e3"}, L5))) == 1);
    CHECK(o5.size() == R5.size());
    // closed under one more round
    for (const auto& s : o5)
        for (const auto& r : R5) {
            std::vector<Vec> img;
            for (const auto& b : s) img.push_back(reflect(r, b, L5));
            CHECK(o5.count(normalize_root_set(img)) == 1);
        }
    auto e = weyl_orbit_closure({}, R5, L5);
    CHECK(e.size() == 1);
    CHECK(e.begin()->empty());
}
