#include "helpers.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace nsk;
using testutil::classes;
using testutil::find_row;

namespace {
std::vector<Certificate> certs(const std::vector<LatticeClassRecord>& recs) {
    std::vector<Certificate> out;
    for (const auto& r : recs) out.push_back(r.certificate);
    std::sort(out.begin(), out.end());
    return out;
}
}  // namespace

TEST_CASE("naive classification agrees with the orbit pipeline") {
    CHECK(classify_naive(2).size() == 3);
    for (int r = 2; r <= 4; ++r) CHECK(certs(classify_naive(r)) == certs(classify(r, Scope::Full)));
}

TEST_CASE("degree 6 has twelve rows with the expected Dynkin pairs") {
    auto recs = classify(3, Scope::Full);
    std::multiset<std::pair<std::string, std::string>> got, expect{
        {"A0", "A0"},  {"A0", "A1"},  {"A0", "A1'"}, {"A0", "2A1"}, {"A0", "A2"},  {"A0", "A1+A2"},
        {"A1", "A0"},  {"A1", "A1"},  {"A1'", "A0"}, {"A1'", "A1"}, {"A1'", "A2"}, {"2A1", "A0"}};
    for (const auto& r : recs) got.insert({r.name_A, r.name_B});
    CHECK(got == expect);
}

TEST_CASE("degree 5 has a (2A1, A0) row") {
    auto recs = classify(4, Scope::Full);
    CHECK_NOTHROW(find_row(recs, "2A1", "A0"));
}

TEST_CASE("involution table images in degree 6") {
    Lattice L = make_lattice(3, BasisKind::Type1);
    std::map<std::string, std::vector<std::string>> images{
        {"A0", {"e0", "e1", "e2", "e3"}},
        {"A1'", {"2e0-e1-e2-e3", "e0-e2-e3", "e0-e1-e3", "e0-e1-e2"}},
        {"A1", {"e0", "e2", "e1", "e3"}},
        {"2A1", {"2e0-e1-e2-e3", "e0-e1-e3", "e0-e2-e3", "e0-e1-e2"}}};
    auto inv = involution_classes(6);
    CHECK(inv.size() == 4);
    for (const auto& ic : inv) {
        REQUIRE(images.count(ic.name) == 1);
        CHECK(ic.sigma.matrix == matrix_from_images(classes(images[ic.name], L)));
    }
}

TEST_CASE("involution class counts per degree") {
    const size_t expect[] = {10, 10, 5, 6, 3, 4, 2, 3, 1};  // degree 1..9
    for (int d = 9; d >= 1; --d) CHECK(involution_classes(d).size() == expect[d - 1]);
}

TEST_CASE("degree 6 flags and counts") {
    auto recs = classify(3, Scope::Full);
    CHECK(find_row(recs, "A1'", "A0").p1p1);
    const auto& a1a1 = find_row(recs, "A1", "A1");
    CHECK(a1a1.counts.G == 1);
    CHECK(a1a1.counts.E_real == 1);  // e3 only: e1 and e2 are swapped
    CHECK(a1a1.counts.E_star == 3);
}

TEST_CASE("records revalidate and certificates are unique") {
    for (int r = 1; r <= 5; ++r) {
        auto recs = classify(r, Scope::Full);
        std::set<Certificate> seen;
        for (const auto& rec : recs) {
            CHECK(seen.insert(rec.certificate).second);
            Lattice L = rec.lattice();
            CHECK_NOTHROW(validate_involution(rec.sigma.matrix, L));
            CHECK_NOTHROW(is_root_base(rec.B_classes, L, cached_lattice_classes(L).R_plus));
            CHECK(set_fixed(rec.sigma, rec.B_classes));
            CHECK(record_certificate(L, rec.sigma, rec.B_classes) == rec.certificate);
        }
    }
}

TEST_CASE("torus row in degree 4") {
    auto recs = classify(5, Scope::Full);
    const auto& t = find_row(recs, "2A1'", "4A1");
    CHECK(t.counts.E_real == 0);
    CHECK(t.counts.G == 4);
}

TEST_CASE("scope handling") {
    CHECK(parse_scope("full") == Scope::Full);
    CHECK(parse_scope("trivial-sigma") == Scope::TrivialSigma);
    CHECK(parse_scope("del-pezzo") == Scope::DelPezzo);
    CHECK_THROWS_AS(parse_scope("everything"), std::invalid_argument);
    CHECK_THROWS_AS(classify(7, Scope::Full), DomainError);
    CHECK_THROWS_AS(classify(8, Scope::Full), DomainError);
    for (const auto& r : classify(4, Scope::DelPezzo)) CHECK(r.B_classes.empty());
    for (const auto& r : classify(4, Scope::TrivialSigma)) CHECK(r.sigma.matrix == IntMatrix::identity(r.rank));
}
