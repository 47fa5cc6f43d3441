#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lebesgue/random.hpp"
#include "lebesgue/specfile.hpp"

namespace lebesgue {

struct PropertyTally {
  std::size_t passed = 0;
  std::size_t failed = 0;
};

struct SuiteReport {
  std::map<std::string, PropertyTally> tallies;
  /// One entry per failing case: a comment naming the property, then the
  /// case as a loadable spec file.
  std::vector<std::string> counterexamples;

  bool ok() const;
  void merge(const SuiteReport& other);
};

struct SuiteOptions {
  /// Replace mu(E) by mu(E) + 1 (or 0 if infinite) before checking: a
  /// negative control that additivity must catch.
  bool corrupt_measure = false;
};

/// Runs every property check that applies to the spec: measure lemmas on sets
/// derived from its atoms and generator, simple-function linearity on its
/// finite functions, and integral identities, Beppo Levi, Fatou and the
/// Dirac identity on its nonnegative measurable functions and sequences.
SuiteReport run_suite(const SpecFile& spec, const SuiteOptions& options = {});

/// Random spec with at most `max_size` points.
SpecFile random_spec(RandomCases& rc, std::size_t max_size);

/// Case i uses its own engine derived from (seed, i); cases run in parallel
/// and are merged in index order.
SuiteReport run_random_suite(std::uint64_t seed, std::size_t count, std::size_t max_size,
                             const SuiteOptions& options = {});

}  // namespace lebesgue
