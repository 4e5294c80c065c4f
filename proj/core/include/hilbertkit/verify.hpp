#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hilbertkit {

inline constexpr const char* kVersion = "1.0.0";

struct VerifyEntry {
  std::string id;
  bool passed = false;
  double residual = 0.0;
  double tolerance = 0.0;
  std::uint64_t seed = 0;
};

struct VerifyReport {
  std::vector<VerifyEntry> suite;  // sorted by id
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::string version;

  bool all_passed() const { return failed == 0; }
};

// Runs every numerical identity the library claims, each on its own
// deterministic random stream derived from (seed, entry id). tol_factor
// scales each entry's default tolerance; budget feeds the pi_1 search.
// Deterministic: equal seeds give identical reports.
VerifyReport verify_suite(std::uint64_t seed, double tol_factor = 1.0,
                          std::uint64_t budget = 50);

}  // namespace hilbertkit
