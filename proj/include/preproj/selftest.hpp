#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace preproj {

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> samples;  ///< first few failure descriptions
  double seconds = 0;
};

/// Runs every library invariant at sizes up to `max_n` (each suite also keeps
/// its own size cap). Randomness is derived from `seed` only.
std::vector<SuiteResult> selftest(std::size_t max_n, std::uint64_t seed);

}  // namespace preproj
