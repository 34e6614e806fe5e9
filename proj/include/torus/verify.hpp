#pragma once

// Batch verification of the identities that tie the formulas together:
// Herbrand quotients of S-units, norm/dual agreement for cyclic extensions,
// closed-form versus brute-force cohomology, and the bundled dataset.

#include "torus/dataset.hpp"

#include <optional>
#include <string>
#include <vector>

namespace torus {

struct IdentityTally {
  std::string name;
  int passed = 0;
  int total = 0;
  std::vector<std::string> failures;

  bool ok() const { return passed == total; }
  void record(bool pass, const std::string& what);
};

struct VerifyOptions {
  Integer disc_bound = 500;
  std::optional<Integer> d_min;
  std::optional<Integer> d_max;
  Integer prime_bound = 20;  // S = {inf, p} for primes p <= prime_bound
  std::optional<std::string> dataset_path;
};

/// Squarefree d != 0, 1 with |disc Q(sqrt d)| <= disc_bound, optionally
/// restricted to [d_min, d_max], in increasing order.
std::vector<Integer> quadratic_corpus(const Integer& disc_bound, const std::optional<Integer>& d_min = std::nullopt,
                                      const std::optional<Integer>& d_max = std::nullopt);

/// The test groups Z/2, Z/3, Z/4, Z/2 x Z/2, S3 with display names.
std::vector<std::pair<std::string, FiniteGroup>> test_groups();

/// Runs every identity class; rows in a fixed order. Corpus rows count fields.
std::vector<IdentityTally> run_verification(const VerifyOptions& options);

}  // namespace torus
