#include "lf2hh/frontend/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include "lf2hh/frontend/bench.hpp"
#include "lf2hh/frontend/parser.hpp"
#include "lf2hh/frontend/pipeline.hpp"
#include "lf2hh/hohh/print.hpp"
#include "lf2hh/lf/print.hpp"

namespace lf2hh::frontend {

namespace {

translate::Mode parse_mode(const std::string& s) {
  return s == "simple" ? translate::Mode::simple : translate::Mode::optimized;
}

std::vector<std::size_t> parse_sizes(const std::string& list) {
  std::vector<std::size_t> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw CLI::ValidationError("--sizes", "empty size in list");
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != item.size())
      throw CLI::ValidationError("--sizes", "'" + item + "' is not a size");
    out.push_back(static_cast<std::size_t>(v));
  }
  if (out.empty()) throw CLI::ValidationError("--sizes", "no sizes given");
  return out;
}

void print_stats(std::ostream& out, const engine::Stats& s) {
  out << "stats: backchain_steps=" << s.backchain_steps
      << " unify_calls=" << s.unify_calls << " decide_attempts=" << s.decide_attempts
      << " depth_cutoffs=" << s.depth_cutoffs << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"LF signature to hereditary Harrop translator and solver", "lf2hh"};
  app.require_subcommand(1);

  std::string file;
  std::string mode = "optimized";
  const std::vector<std::string> modes{"simple", "optimized"};

  auto* check = app.add_subcommand("check", "parse and type check a signature");
  check->add_option("FILE", file, "signature file")->required();

  bool simplify_top = false;
  std::string proof_arg = "first";
  std::string out_path;
  auto* tr = app.add_subcommand("translate", "emit the hohh program of a signature");
  tr->add_option("FILE", file, "signature file")->required();
  tr->add_option("--mode", mode, "simple or optimized")->check(CLI::IsMember(modes));
  tr->add_flag("--simplify-top", simplify_top, "drop 'true =>' premises");
  tr->add_option("--proof-arg", proof_arg, "proof term position in atoms")
      ->check(CLI::IsMember({"first", "last"}));
  tr->add_option("-o,--output", out_path, "output file");

  std::string query;
  std::optional<std::uint64_t> budget;
  bool all = false;
  bool no_verify = false;
  auto* solve = app.add_subcommand("solve", "search for an inhabitant of a query type");
  solve->add_option("FILE", file, "signature file")->required();
  solve->add_option("--query", query, "query type")->required();
  solve->add_option("--mode", mode, "simple or optimized")->check(CLI::IsMember(modes));
  solve->add_option("--depth", budget, "backchain step budget")
      ->check(CLI::PositiveNumber);
  solve->add_flag("--all", all, "enumerate every answer");
  solve->add_flag("--no-verify", no_verify, "skip re-checking decoded witnesses");

  std::string bench_name;
  std::string sizes_text;
  std::string corpus_dir = default_corpus_dir();
  auto* bench = app.add_subcommand("bench", "run a scaling benchmark");
  bench->add_option("NAME", bench_name, "benchmark name")
      ->required()
      ->check(CLI::IsMember(benchmark_names()));
  bench->add_option("--sizes", sizes_text, "comma-separated sizes")->required();
  bench->add_option("--mode", mode, "simple or optimized")->check(CLI::IsMember(modes));
  bench->add_option("--corpus-dir", corpus_dir, "directory holding the corpus files");
  bench->add_option("--depth", budget, "backchain step budget")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return exit_usage;
  }

  try {
    if (check->parsed()) {
      lf::Context raw = load_signature(file);
      lf::CheckReport r = lf::check_context(raw);
      if (!r) {
        err << file << ": " << r.message() << '\n';
        return exit_check_failed;
      }
      out << file << ": ok (" << raw.size() << " declarations)\n";
      return exit_ok;
    }

    if (tr->parsed()) {
      lf::Context ctx = prepare(load_signature(file));
      translate::TranslateOptions opts;
      opts.mode = parse_mode(mode);
      opts.simplify_top = simplify_top;
      opts.proof_arg = proof_arg == "last" ? translate::ProofArg::last
                                           : translate::ProofArg::first;
      std::string text = translate_text(ctx, opts);
      if (out_path.empty()) {
        out << text;
      } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw FileError("cannot write '" + out_path + "'");
        f << text;
        if (!f) throw FileError("cannot write '" + out_path + "'");
      }
      return exit_ok;
    }

    if (solve->parsed()) {
      lf::Context ctx = prepare(load_signature(file));
      lf::Expr a = prepare_query(ctx, parse_query(query, ctx));
      QueryConfig cfg;
      cfg.translation.mode = parse_mode(mode);
      cfg.search.max_steps = budget.value_or(default_budget());
      cfg.max_answers = all ? std::numeric_limits<std::size_t>::max() : 1;
      cfg.verify = !no_verify;
      QueryOutcome q = solve_query(ctx, a, cfg);
      out << "query: " << lf::to_string(a) << '\n';
      bool success = false;
      std::size_t k = 0;
      for (const auto& w : q.answers) {
        ++k;
        if (w.residual) {
          out << "answer " << k << ": residual " << hohh::to_string(w.answer.witness)
              << "\n  delayed: " << w.residual_detail << '\n';
          continue;
        }
        if (!w.decoded) {
          out << "answer " << k << ": " << hohh::to_string(w.answer.witness)
              << "\n  decode failed: " << w.decode_error << '\n';
          continue;
        }
        out << "answer " << k << ": " << lf::to_string(*w.decoded) << '\n';
        if (no_verify) {
          success = true;
        } else if (w.verified) {
          out << "  verified\n";
          success = true;
        } else {
          out << "  verification failed: " << w.verification.message() << '\n';
        }
      }
      if (q.terminal) out << "search: " << engine::to_string(*q.terminal) << '\n';
      print_stats(out, q.stats);
      if (success) return exit_ok;
      if (q.terminal == engine::SolveEvent::Kind::budget_exhausted) return exit_budget;
      return exit_no_answer;
    }

    if (bench->parsed()) {
      std::vector<std::size_t> sizes = parse_sizes(sizes_text);
      auto rows = run_benchmarks(bench_name, sizes, parse_mode(mode), corpus_dir,
                                 budget.value_or(default_budget()));
      out << csv_header() << '\n';
      for (const auto& r : rows) out << csv_row(r) << '\n';
      return exit_ok;
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const FileError& e) {
    err << "error: " << e.what() << '\n';
    return exit_file;
  } catch (const SyntaxError& e) {
    err << "syntax error at " << e.what() << '\n';
    return exit_check_failed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_check_failed;
  }
  return exit_usage;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace lf2hh::frontend
