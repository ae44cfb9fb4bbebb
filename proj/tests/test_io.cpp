#include "helpers.hpp"

#include <doctest.h>

#include <sstream>

using namespace nsk;

TEST_CASE("records survive a JSON round trip") {
    for (int r : {2, 3, 4})
        for (const auto& rec : classify(r, Scope::Full)) {
            auto j = to_json(rec, true);
            auto back = record_from_json(nlohmann::json::parse(j.dump()));
            CHECK(back.certificate == rec.certificate);
            CHECK(back.sigma.matrix == rec.sigma.matrix);
            CHECK(back.B_classes == rec.B_classes);
            CHECK(back.A_classes == rec.A_classes);
            CHECK(back.name_A == rec.name_A);
            CHECK(back.name_B == rec.name_B);
            CHECK(to_json(back, true) == j);
        }
}

TEST_CASE("csv has a header and one line per record") {
    auto recs = classify(3, Scope::Full);
    std::istringstream in(records_csv(recs));
    std::string line;
    int n = 0;
    while (std::getline(in, line)) ++n;
    CHECK(n == 13);
    CHECK(records_markdown(recs).find("A1+A2") != std::string::npos);
}

TEST_CASE("hex helpers") {
    std::string bytes("\x00\xff\x10", 3);
    CHECK(to_hex(bytes) == "00ff10");
    CHECK(from_hex("00ff10") == bytes);
}
