#ifndef LF2HH_FRONTEND_BENCH_HPP
#define LF2HH_FRONTEND_BENCH_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lf2hh/translate/translate.hpp"

namespace lf2hh::frontend {

enum class BenchStatus : std::uint8_t { solved, overflow, failed };

struct BenchReport {
  std::string name;
  std::size_t n = 0;
  translate::Mode mode = translate::Mode::optimized;
  std::uint64_t backchain_steps = 0;
  std::uint64_t unify_calls = 0;
  double wall_ms = 0;
  BenchStatus status = BenchStatus::failed;
};

const std::vector<std::string>& benchmark_names();

// Query text of size `n` for a benchmark: append splits a list of n
// numerals in two, reverse reverses a list of length n, miniml adds the
// numerals n and 10 with a fixpoint-defined addition.
std::string bench_query(const std::string& name, std::size_t n);

// Budget from LF2HH_DEPTH when set, otherwise 10^5 backchain steps.
std::uint64_t default_budget();

std::string default_corpus_dir();

std::vector<BenchReport> run_benchmarks(const std::string& name,
                                        const std::vector<std::size_t>& sizes,
                                        translate::Mode mode,
                                        const std::string& corpus_dir,
                                        std::uint64_t budget);

std::string csv_header();
std::string csv_row(const BenchReport& r);

}  // namespace lf2hh::frontend

#endif  // LF2HH_FRONTEND_BENCH_HPP
