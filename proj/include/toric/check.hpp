// Property suites behind `toric-cap check`.
#pragma once

#include "toric/geometry.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace toric {

struct PropertyResult {
    std::string name;
    std::size_t cases = 0;
    /// First failing case, visited in increasing k.
    std::optional<std::string> counterexample;

    bool passed() const { return !counterexample; }
};

struct CheckOptions {
    int k_max = 10;
    int ell_max = 4;
    std::uint64_t seed = 1;
    /// "<method>:<k>" adds 1 to engine values produced by that method at
    /// that k. Used to confirm the suites catch a broken closed form.
    std::string fault;
};

std::vector<PropertyResult> run_checks(const MomentPolygon& omega, const CheckOptions& options);

}  // namespace toric
