// Shared lookups for the test binaries.
#pragma once

#include "nsk/io.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace testutil {

inline const nsk::LatticeClassRecord& find_row(const std::vector<nsk::LatticeClassRecord>& recs, const std::string& a,
                                              const std::string& b) {
    for (const auto& r : recs)
        if (r.name_A == a && r.name_B == b) return r;
    throw std::runtime_error("no row (" + a + ", " + b + ")");
}

inline std::vector<nsk::Vec> classes(const std::vector<std::string>& s, const nsk::Lattice& L) {
    std::vector<nsk::Vec> out;
    for (const auto& x : s) out.push_back(nsk::parse_class(x, L));
    return out;
}

inline std::vector<std::string> names(const std::vector<nsk::Vec>& v, const nsk::Lattice& L) {
    std::vector<std::string> out;
    for (const auto& c : v) out.push_back(nsk::format_class(c, L));
    return out;
}

inline std::vector<nsk::Vec> sorted(std::vector<nsk::Vec> v) {
    nsk::sort_classes(v);
    return v;
}

}  // namespace testutil
