#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tichain/json_io.hpp"

namespace tichain::cli {

inline constexpr const char* kSchemaVersion = "1";
// Environment variable raising the dense-vector cap (integer, up to 22).
inline constexpr const char* kDenseCapEnv = "TICHAIN_DENSE_CAP";

// Executes one command.  Returns 0 on success, 1 on a domain error (the
// error is reported as {"error", "message"} JSON on the error stream) and 2
// on a usage error.  Payloads go to `out`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// Energy table document for the requested site counts (each must have a
// bundled reference table).  Cells the reference leaves blank are null
// unless `fill` computes them; `check` compares every printed cell against
// the live computation and records mismatches.
Json emit_table1(const std::vector<int>& n_range,
                 const std::vector<std::string>& hamiltonians, bool check,
                 bool fill);

// Global-flip comparison document: H_nl expectations of the two uniform
// product states and the two GHZ combinations, plus the signed <H0> next to
// the reference magnitude with the sign-convention footnote.
Json emit_table2(int n_sites);

}  // namespace tichain::cli
