#include "oracles.hpp"

#include "nsk/classes.hpp"

#include <doctest.h>

#include <random>

using namespace nsk;

static Vec cls(const char* s, const Lattice& L) { return parse_class(s, L); }

TEST_CASE("inner products on both basis kinds") {
    Lattice L = make_lattice(3, BasisKind::Type1, 1);
    CHECK(dot(L, L.unit(0), L.unit(0)) == 1);
    CHECK(dot(L, L.unit(1), L.unit(1)) == -1);
    CHECK(dot(L, L.k, L.k) == 6);
    CHECK(L.k == Vec{-3, 1, 1, 1});

    Lattice T = make_lattice(5, BasisKind::Type2, 1);
    CHECK(dot(T, T.unit(0), T.unit(1)) == 1);
    CHECK(dot(T, T.unit(0), T.unit(0)) == 0);
    CHECK(T.k == Vec{-2, -2, 1, 1, 1, 1, 1});
    CHECK(dot(T, T.k, T.k) == 3);

    CHECK_THROWS_AS(dot(L, Vec{1, 0}, L.unit(0)), StructuralError);
}

TEST_CASE("k^2 = 10 - rank and symmetry on random vectors") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int64_t> d(-20, 20);
    for (int r = 1; r <= 8; ++r) {
        Lattice L = make_lattice(r, BasisKind::Type1);
        CHECK(dot(L, L.k, L.k) == 10 - L.rank);
        for (int t = 0; t < 100; ++t) {
            Vec a(L.rank), b(L.rank);
            for (auto& x : a) x = d(rng);
            for (auto& x : b) x = d(rng);
            CHECK(dot(L, a, b) == dot(L, b, a));
            CHECK(dot(L, a, b) == oracle::form(L, a, b));
        }
    }
    for (int s = 0; s <= 7; ++s) {
        Lattice L = make_lattice(s, BasisKind::Type2);
        CHECK(dot(L, L.k, L.k) == 10 - L.rank);
    }
}

TEST_CASE("lattice construction limits and alpha quantization") {
    CHECK_THROWS_AS(make_lattice(0, BasisKind::Type1, 1), ValidationError);
    CHECK_THROWS_AS(make_lattice(9, BasisKind::Type1, 1), ValidationError);
    CHECK_THROWS_AS(make_lattice(8, BasisKind::Type2, 1), ValidationError);
    CHECK_NOTHROW(make_lattice(3, BasisKind::Type1, 2));
    CHECK_THROWS_AS(make_lattice(3, BasisKind::Type1, Rat(1, 2)), ValidationError);
    // degree 2 needs alpha >= 2, degree 1 needs alpha >= 3
    CHECK_THROWS_AS(make_lattice(7, BasisKind::Type1, 1), ValidationError);
    CHECK_NOTHROW(make_lattice(7, BasisKind::Type1, 2));
    CHECK_NOTHROW(make_lattice(8, BasisKind::Type1, 3));
    CHECK(make_lattice(8, BasisKind::Type1).alpha == 3);
    // degree 8: (k^2 - 6) alpha = 2 alpha must be a positive integer
    CHECK_NOTHROW(make_lattice(1, BasisKind::Type1, Rat(1, 2)));
    CHECK_THROWS_AS(make_lattice(1, BasisKind::Type1, Rat(1, 3)), ValidationError);
    Lattice L = make_lattice(3, BasisKind::Type1, 2);
    CHECK(L.hyperplane() == Vec{6, -2, -2, -2});
}

TEST_CASE("class formatting round trip") {
    Lattice L = make_lattice(3, BasisKind::Type1);
    for (const char* s : {"e0", "2e0-e1-e2-e3", "-e1+e2", "0"}) CHECK(format_class(cls(s, L), L) == s);
    Lattice T = make_lattice(5, BasisKind::Type2);
    CHECK(format_class(cls("l0+l1-eps4-eps5", T), T) == "l0+l1-eps4-eps5");
    CHECK_THROWS(parse_class("e9", L));
}

TEST_CASE("involution validation reports each defect") {
    Lattice L = make_lattice(3, BasisKind::Type1);
    CHECK_NOTHROW(validate_involution(IntMatrix::identity(4), L));

    auto a1p = matrix_from_images({cls("2e0-e1-e2-e3", L), cls("e0-e2-e3", L), cls("e0-e1-e3", L),
                                   cls("e0-e1-e2", L)});
    auto sigma = validate_involution(a1p, L);
    CHECK(sigma(L.k) == L.k);

    RatMatrix half = RatMatrix::identity(4);
    half(1, 1) = Rat(1, 2);
    CHECK(involution_defect(half, L) == InvolutionDefect::NonIntegral);

    IntMatrix notinv = IntMatrix::identity(4);
    notinv(1, 1) = 0;
    notinv(2, 1) = 1;
    notinv(2, 2) = 0;
    notinv(3, 2) = 1;
    notinv(1, 3) = 1;
    notinv(3, 3) = 0;  // 3-cycle e1 -> e2 -> e3 -> e1
    try {
        validate_involution(notinv, L);
        FAIL("accepted a 3-cycle");
    } catch (const InvolutionError& e) {
        CHECK(e.defect == InvolutionDefect::NotInvolution);
    }

    IntMatrix neg = IntMatrix::identity(4);
    neg(1, 1) = -1;  // e1 -> -e1 is an isometry but moves k
    try {
        validate_involution(neg, L);
        FAIL("accepted a map moving k");
    } catch (const InvolutionError& e) {
        CHECK(e.defect == InvolutionDefect::MovesK);
    }

    CHECK(involution_defect(RatMatrix(), L) == InvolutionDefect::WrongSize);
}

TEST_CASE("real structures preserve products") {
    Lattice L = make_lattice(3, BasisKind::Type1);
    auto sigma = validate_involution(matrix_from_images({cls("2e0-e1-e2-e3", L), cls("e0-e1-e3", L),
                                                         cls("e0-e2-e3", L), cls("e0-e1-e2", L)}),
                                     L);
    std::mt19937 rng(3);
    std::uniform_int_distribution<int64_t> d(-5, 5);
    for (int t = 0; t < 200; ++t) {
        Vec a(4), b(4);
        for (auto& x : a) x = d(rng);
        for (auto& x : b) x = d(rng);
        CHECK(dot(L, sigma(a), sigma(b)) == dot(L, a, b));
        CHECK(sigma(sigma(a)) == a);
    }
}

TEST_CASE("h0 examples") {
    Lattice L = make_lattice(3, BasisKind::Type1);
    const auto& cl = cached_lattice_classes(L);
    CHECK(h0(-L.k, cl.E, {}, L) == 7);
    CHECK(h0(L.zero(), cl.E, {}, L) == 1);
    std::vector<Vec> B{cls("e1-e2", L), cls("e2-e3", L)};
    std::vector<Vec> E;
    for (const auto& e : cl.E)
        if (std::all_of(B.begin(), B.end(), [&](const Vec& b) { return dot(L, e, b) >= 0; })) E.push_back(e);
    CHECK(h0(cls("e0-e3", L), E, B, L) == 2);

    std::vector<Vec> curves = E;
    curves.insert(curves.end(), B.begin(), B.end());
    auto vals = oracle::h0_all_orders(L, cls("e0-e3", L), curves, nef_probes(L));
    CHECK(vals == std::set<int64_t>{2});
    // classes without sections
    CHECK(h0(L.k, cl.E, {}, L) == 0);
    CHECK(h0(cls("-e0", L), cl.E, {}, L) == 0);
}

TEST_CASE("h0 is 1 on negative curves and independent of the peeling order") {
    std::mt19937 rng(11);
    for (int r = 3; r <= 6; ++r) {
        Lattice L = make_lattice(r, BasisKind::Type1);
        const auto& cl = cached_lattice_classes(L);
        // B: a chain of simple roots e1-e2, e2-e3
        std::vector<Vec> B{cls("e1-e2", L), cls("e2-e3", L)};
        std::vector<Vec> E;
        for (const auto& e : cl.E)
            if (std::all_of(B.begin(), B.end(), [&](const Vec& b) { return dot(L, e, b) >= 0; })) E.push_back(e);
        std::vector<Vec> curves = E;
        curves.insert(curves.end(), B.begin(), B.end());
        for (const auto& b : curves) CHECK(h0(b, E, B, L) == 1);
        std::vector<Vec> probes = cl.F;
        probes.push_back(-L.k);
        probes.push_back(L.unit(0) - L.unit(r));
        probes.push_back(2 * L.unit(0) - L.unit(3));
        for (const auto& c : probes) {
            int64_t ref = h0(c, E, B, L);
            for (int t = 0; t < 8; ++t) {
                auto v = h0_peel(c, curves, L, [&](const std::vector<size_t>& idx) {
                    return idx[std::uniform_int_distribution<size_t>(0, idx.size() - 1)(rng)];
                });
                CHECK(v == ref);
            }
            if (r <= 4) CHECK(oracle::h0_all_orders(L, c, curves, nef_probes(L)) == std::set<int64_t>{ref});
        }
    }
}
