#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "favorable/continuum.hpp"

namespace favorable::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitInput = 2;

/// Runs one command line. `args` excludes the program name. Results go to
/// `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

/// Parses "own", "sum", "a,b" or "<spec>/<spec>" (one per individual) into
/// a two-individual linear example.
continuum::ExchangeExample parse_utility_spec(const std::string& spec);

}  // namespace favorable::cli
