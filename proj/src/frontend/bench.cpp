#include "lf2hh/frontend/bench.hpp"

#include <chrono>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "lf2hh/frontend/parser.hpp"
#include "lf2hh/frontend/pipeline.hpp"

#ifndef LF2HH_CORPUS_DIR
#define LF2HH_CORPUS_DIR "corpus"
#endif

namespace lf2hh::frontend {

namespace {

std::string numeral(std::size_t k) {
  std::string s = "z";
  for (std::size_t i = 0; i < k; ++i) s = "(s " + s + ")";
  return s;
}

std::string list_of(const std::vector<std::string>& elems) {
  std::string s = "nil";
  for (auto it = elems.rbegin(); it != elems.rend(); ++it)
    s = "(cons " + *it + " " + s + ")";
  return s;
}

}  // namespace

const std::vector<std::string>& benchmark_names() {
  static const std::vector<std::string> names{"append", "reverse", "miniml"};
  return names;
}

std::string bench_query(const std::string& name, std::size_t n) {
  if (name == "append") {
    std::vector<std::string> all;
    for (std::size_t i = 0; i < n; ++i) all.push_back(numeral(i % 2));
    std::size_t half = (n + 1) / 2;
    std::vector<std::string> l1(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(half));
    std::vector<std::string> l2(all.begin() + static_cast<std::ptrdiff_t>(half), all.end());
    return "append " + list_of(l1) + " " + list_of(l2) + " " + list_of(all);
  }
  if (name == "reverse") {
    std::vector<std::string> elems;
    for (std::size_t i = 0; i < n; ++i) elems.push_back(numeral(i % 2));
    std::vector<std::string> rev(elems.rbegin(), elems.rend());
    return "rev " + list_of(elems) + " nil " + list_of(rev);
  }
  if (name == "miniml") {
    const std::string plus =
        "(fix [p:exp] lam [x:exp] lam [y:exp] case x y ([w:exp] s (app (app p w) y)))";
    return "run (ev (app (app " + plus + " " + numeral(n) + ") " + numeral(10) +
           ") done) " + numeral(n + 10);
  }
  throw std::invalid_argument("unknown benchmark '" + name + "'");
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("LF2HH_DEPTH")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 100'000;
}

std::string default_corpus_dir() { return LF2HH_CORPUS_DIR; }

std::vector<BenchReport> run_benchmarks(const std::string& name,
                                        const std::vector<std::size_t>& sizes,
                                        translate::Mode mode,
                                        const std::string& corpus_dir,
                                        std::uint64_t budget) {
  lf::Context ctx = prepare(load_signature(corpus_dir + "/" + name + ".elf"));
  std::vector<BenchReport> out;
  for (std::size_t n : sizes) {
    lf::Expr a = prepare_query(ctx, parse_query(bench_query(name, n), ctx));
    QueryConfig cfg;
    cfg.translation.mode = mode;
    cfg.search.max_steps = budget;
    auto t0 = std::chrono::steady_clock::now();
    QueryOutcome q = solve_query(ctx, a, cfg);
    auto t1 = std::chrono::steady_clock::now();
    BenchReport r;
    r.name = name;
    r.n = n;
    r.mode = mode;
    r.backchain_steps = q.stats.backchain_steps;
    r.unify_calls = q.stats.unify_calls;
    r.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (q.any_verified())
      r.status = BenchStatus::solved;
    else if (q.terminal == engine::SolveEvent::Kind::budget_exhausted)
      r.status = BenchStatus::overflow;
    else
      r.status = BenchStatus::failed;
    out.push_back(r);
  }
  return out;
}

std::string csv_header() { return "name,n,mode,backchain_steps,unify_calls,wall_ms"; }

std::string csv_row(const BenchReport& r) {
  std::ostringstream os;
  os << r.name << ',' << r.n << ',' << translate::to_string(r.mode) << ',';
  switch (r.status) {
    case BenchStatus::solved:
      os << r.backchain_steps << ',' << r.unify_calls << ',';
      os.setf(std::ios::fixed);
      os.precision(3);
      os << r.wall_ms;
      break;
    case BenchStatus::overflow:
      os << "overflow,overflow,overflow";
      break;
    case BenchStatus::failed:
      os << "failed,failed,failed";
      break;
  }
  return os.str();
}

}  // namespace lf2hh::frontend
