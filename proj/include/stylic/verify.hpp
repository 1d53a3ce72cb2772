#ifndef STYLIC_VERIFY_HPP
#define STYLIC_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace stylic {

struct SuiteResult {
  std::string name;
  long long checked = 0;
  long long failures = 0;
  std::string first_failure;  // human-readable locus of the first failure
};

struct VerifyReport {
  int rank = 0;
  std::uint64_t seed = 0;
  long long samples = 0;
  std::vector<SuiteResult> suites;

  bool ok() const;
};

/// Randomized and exhaustive cross-checks at one rank: matrix entries against
/// subsequence counts, faithfulness, tableau decoding, invariance under the
/// defining relations, involution compatibility, truncation, and the
/// congruence checker against materialized spectra. Deterministic per seed.
VerifyReport run_verification(int rank, std::uint64_t seed = 20260822, long long samples = 2000);

}  // namespace stylic

#endif
