#ifndef LF2HH_TESTS_SUITES_HPP
#define LF2HH_TESTS_SUITES_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace lf2hh::testing {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;     // cases that met the preconditions and were checked
  std::size_t failures = 0;  // checked cases violating the property
  std::size_t attempts = 0;  // generated candidates, including discarded ones
  std::string first_failure;
  bool passed(std::size_t min_cases) const { return failures == 0 && cases >= min_cases; }
  std::string summary() const;
};

// Each suite draws candidates from a fixed seed until `cases` candidates
// satisfy its preconditions (or an attempt cap is reached).
SuiteResult normalization_idempotence(std::uint64_t seed, std::size_t cases);
SuiteResult substitution_property(std::uint64_t seed, std::size_t cases);
SuiteResult renaming_property(std::uint64_t seed, std::size_t cases);
SuiteResult encode_injectivity(std::uint64_t seed, std::size_t cases);
SuiteResult encode_substitution(std::uint64_t seed, std::size_t cases);
SuiteResult decode_encode_roundtrip(std::uint64_t seed, std::size_t cases);
SuiteResult replay_soundness(std::uint64_t seed, std::size_t cases);
SuiteResult engine_vs_brute_force(std::uint64_t seed, std::size_t cases);

std::vector<SuiteResult> all_property_suites(std::uint64_t seed, std::size_t cases);

// Simple and optimized translations agree on derivability of random
// base-type queries, counting only queries decided in both modes. Every
// answer found is decoded and re-checked.
struct DifferentialResult {
  std::size_t decided = 0;
  std::size_t undecided = 0;
  std::size_t derivable = 0;
  std::size_t disagreements = 0;
  std::size_t answers = 0;
  std::size_t unsound = 0;
  std::string first_disagreement;
  std::string first_unsound;
};
DifferentialResult translation_differential(std::uint64_t seed, std::size_t decided,
                                            std::uint64_t budget, bool relaxed = false);

// Rigid occurrences force well-typed instantiations. With `relaxed`, the
// unsound leaf rule decides rigidity instead, and failures are expected.
SuiteResult rigidity_lemma(std::uint64_t seed, std::size_t cases, bool relaxed = false);

}  // namespace lf2hh::testing

#endif  // LF2HH_TESTS_SUITES_HPP
