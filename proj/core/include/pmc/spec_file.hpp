#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pmc/module.hpp"

namespace pmc {

// Module-spec text: a header `ring n=<n> N=<N> p=<p> rank=<r>` followed by one
// generator per line. Blank lines and lines starting with '#' are skipped.
struct ModuleSpec {
    RingParams params;
    int rank = 1;
    // True when N came from the header rather than the default.
    bool explicit_precision = false;
    std::vector<std::string> generators;
};

// default_N is used when the header has no N; without it N is chosen from
// the largest x-exponent in the generators.
ModuleSpec parse_module_spec(const std::string& text, std::optional<int> default_N = std::nullopt);
ModuleSpec read_module_spec(const std::string& path, std::optional<int> default_N = std::nullopt);
ModuleRep build_module(const ModuleSpec& spec);

}  // namespace pmc
