// Invariant suite run by `nsk check`: one result per property.
#pragma once

#include "nsk/families.hpp"

#include <string>
#include <vector>

namespace nsk {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CheckOptions {
    int min_degree = 3;  // classifications from degree 9 down to this one (full scope)
    int shuffles = 100;  // relabelings per invariant for the certificate check
    int jobs = 1;
    bool use_cache = true;
};

std::vector<CheckResult> run_property_suite(const CheckOptions& opt = {});

// The three chain examples, on their own lattices.
struct ChainExample {
    std::string name;
    AdjointChain chain;
};
std::vector<ChainExample> chain_examples();

}  // namespace nsk
