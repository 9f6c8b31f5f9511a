// ternary-bounds: bounds tables, exact search, constructions and asymptotic
// curves for ternary codes under the d1 metric.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "ternary/asymptotics.hpp"
#include "ternary/bounds.hpp"
#include "ternary/codebook.hpp"
#include "ternary/constructions.hpp"
#include "ternary/counting.hpp"
#include "ternary/search.hpp"

namespace {

using namespace ternary;

// Exit codes, one per class of failure.
constexpr int kExitBadParameter = 2;
constexpr int kExitBadCodebook = 3;
constexpr int kExitOverLimit = 4;
constexpr int kExitCheckFailed = 5;
constexpr int kExitIo = 6;

struct Common {
  int threads = 0;
  std::uint64_t seed = 0;
};

/// Writes to `path`, or stdout when it is empty or "-".
template <class F>
void emit(const std::string& path, F&& body) {
  if (path.empty() || path == "-") {
    body(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::ios_base::failure("cannot open " + path + " for writing");
  body(out);
  if (!out) throw std::ios_base::failure("write to " + path + " failed");
}

std::uint64_t vertex_limit_from_env() {
  const char* raw = std::getenv("TERNARY_VERTEX_LIMIT");
  if (raw == nullptr || *raw == '\0') return kDefaultVertexLimit;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0) throw std::invalid_argument(std::string("TERNARY_VERTEX_LIMIT is not a positive integer: ") + raw);
  return v;
}

// ------------------------------------------------------------------ table

struct TableArgs {
  int nmax = 8;
  int dmax = 10;
  std::string format = "text";
  std::string output;
  bool search = false;
};

int run_table(const TableArgs& a) {
  TableOptions options;
  options.use_search = a.search;
  options.search.vertex_limit = std::min<std::uint64_t>(options.search.vertex_limit, vertex_limit_from_env());
  const BoundTable table = build_table(a.nmax, a.dmax, options);
  const std::map<std::string, TableFormat> formats{
      {"text", TableFormat::Text}, {"csv", TableFormat::Csv}, {"records", TableFormat::Records}};
  emit(a.output, [&](std::ostream& out) { write_table(out, table, formats.at(a.format)); });
  return 0;
}

// ------------------------------------------------------------------ exact

struct ExactArgs {
  int n = 0;
  int d = 0;
  std::string space = "full";
  int q = 2;
  int w = -1;
  std::uint64_t budget = SearchOptions{}.budget;
  std::string witness;
};

int run_exact(const ExactArgs& a) {
  SearchOptions options;
  options.budget = a.budget;
  options.vertex_limit = vertex_limit_from_env();
  if (a.space == "hamming") {
    const auto r = exact_A(a.q, a.n, a.d, options);
    std::cout << "A" << a.q << "(" << a.n << "," << a.d << ") " << r.outcome.to_string() << '\n';
    if (!a.witness.empty()) emit(a.witness, [&](std::ostream& out) { write_hamming_codebook(out, r.q, r.n, r.witness); });
    return 0;
  }
  TernarySearchResult r;
  if (a.space == "cw") {
    if (a.w < 0) throw std::invalid_argument("--space cw needs --w");
    r = exact_T_constant_weight(a.n, a.w, a.d, options);
    std::cout << "Tcw(" << a.n << "," << a.w << "," << a.d << ") " << r.outcome.to_string() << '\n';
  } else {
    r = exact_T(a.n, a.d, options);
    std::cout << "T(" << a.n << "," << a.d << ") " << r.outcome.to_string() << '\n';
  }
  if (!a.witness.empty()) emit(a.witness, [&](std::ostream& out) { write_codebook(out, r.witness); });
  return 0;
}

// -------------------------------------------------------------- construct

struct ConstructArgs {
  std::string family;
  int n = 0;
  int d = 0;
  std::string order = "lex";
  std::uint64_t trials = 0;
  std::string output;
};

TernaryCode build_construction(const ConstructArgs& a, std::uint64_t seed) {
  if (a.n < 1) throw std::invalid_argument("--n must be at least 1");
  if (a.d < 1) throw std::invalid_argument("--d must be at least 1");
  if (a.family == "even-zeros") {
    if (a.d > 2) throw std::invalid_argument("even-zeros only guarantees d <= 2");
    return even_zeros_code(a.n);
  }
  if (a.family == "greedy") {
    return greedy_gv_code(a.n, a.d, a.order == "random" ? GreedyOrder::Random : GreedyOrder::Lexicographic, seed);
  }
  if (a.family == "signed-binary") return signed_binary_code(binary_lexicode(a.n, (a.d + 1) / 2));
  if (a.family == "support") return support_construction(binary_lexicode(a.n, a.d), lexicode_inner_codes(a.n, a.d), a.d);
  if (a.family == "coset-scan") {
    return coset_scan_construction(binary_lexicode(a.n, a.d), lexicode_inner_codes(a.n, a.d), a.d);
  }
  if (a.family == "phi-shift") {
    const auto strategy = a.trials > 0 ? PhiShiftStrategy::randomized(a.trials, seed) : PhiShiftStrategy::exhaustive();
    return phi_shift_construction(binary_lexicode(2 * a.n, a.d), strategy);
  }
  throw std::invalid_argument("unknown family '" + a.family + "'");
}

int run_construct(const ConstructArgs& a, std::uint64_t seed) {
  const TernaryCode code = build_construction(a, seed);
  const auto report = verify_construction(a.family, code, a.d);
  if (!a.output.empty()) emit(a.output, [&](std::ostream& out) { write_codebook(out, code); });
  // Keep stdout clean for the codebook when it goes there.
  (a.output == "-" ? std::cerr : std::cout) << report.to_string() << '\n';
  return report.distance_ok ? 0 : kExitCheckFailed;
}

// ----------------------------------------------------------------- verify

struct VerifyArgs {
  std::string code;
  int d = 0;
  bool plotkin = false;
};

int run_verify(const VerifyArgs& a) {
  const TernaryCode code = read_codebook(std::filesystem::path(a.code));
  const auto report = verify_construction("file", code, a.d);
  std::cout << "n=" << report.length << " size=" << report.size << " min_distance=" << report.distance.to_string()
            << " d=" << a.d << " status=" << (report.distance_ok ? "ok" : "VIOLATED") << '\n';
  if (!report.distance_ok) return kExitCheckFailed;
  if (a.plotkin) {
    const auto p = plotkin_witness_check(code, a.d);
    std::cout << "plotkin M(M-1)d=" << p.min_distance_side << " S=" << p.stats.pair_distance_sum
              << " nM^2-sum(m0^2)=" << p.column_side << " chain=" << (p.chain_holds() ? "holds" : "FAILS");
    if (p.direct_pair_sum) std::cout << " direct_S=" << *p.direct_pair_sum;
    std::cout << '\n';
    if (!p.chain_holds() || !p.identity_holds()) return kExitCheckFailed;
  }
  return 0;
}

// ----------------------------------------------------------------- counts

struct CountsArgs {
  int n = 0;
  int shell = -1;
  bool check = false;
};

int run_counts(const CountsArgs& a) {
  if (a.n < 1) throw std::invalid_argument("--n must be at least 1");
  if (a.shell < 0) {
    const auto table = pair_count_poly(a.n);
    std::vector<std::uint64_t> census;
    if (a.check) census = pair_distance_census(a.n);
    std::cout << "n,w,count" << (a.check ? ",census" : "") << '\n';
    for (int w = 0; w <= 2 * a.n; ++w) {
      std::cout << a.n << ',' << w << ',' << table[w].get_str();
      if (a.check) std::cout << ',' << census[static_cast<std::size_t>(w)];
      std::cout << '\n';
    }
    if (a.check) {
      for (int w = 0; w <= 2 * a.n; ++w) {
        if (table[w] != mpz_class(static_cast<unsigned long>(census[static_cast<std::size_t>(w)]))) return kExitCheckFailed;
      }
    }
    return 0;
  }
  if (a.shell > a.n) throw std::invalid_argument("--shell must lie in 0..n");
  std::vector<std::uint64_t> census;
  if (a.check) {
    std::vector<int> symbols(static_cast<std::size_t>(a.n), 0);
    for (int i = 0; i < a.shell; ++i) symbols[static_cast<std::size_t>(i)] = 1;
    census = shell_distance_census(TernaryWord(symbols));
  }
  std::cout << "n,w,dist,count" << (a.check ? ",census" : "") << '\n';
  bool ok = true;
  for (int dist = 0; dist <= 2 * a.n; ++dist) {
    const auto s = constant_weight_sphere(a.n, a.shell, dist);
    std::cout << a.n << ',' << a.shell << ',' << dist << ',' << s.get_str();
    if (a.check) {
      const auto c = census[static_cast<std::size_t>(dist)];
      std::cout << ',' << c;
      ok &= s == mpz_class(static_cast<unsigned long>(c));
    }
    std::cout << '\n';
  }
  return ok ? 0 : kExitCheckFailed;
}

// ------------------------------------------------------------------- asym

struct AsymArgs {
  double from = 0.01;
  double to = 0.99;
  double step = 0.01;
  std::vector<std::string> families;
  std::string output;
  bool verify = false;
  int grid_points = 10000;
};

int run_asym(const AsymArgs& a, std::uint64_t seed) {
  namespace as = ternary::asymptotic;
  if (a.verify) {
    as::VerifyOptions options;
    options.grid_points = a.grid_points;
    options.seed = seed;
    bool all = true;
    for (const auto& c : as::verify_optimizers(options)) {
      char line[256];
      std::snprintf(line, sizeof line, "%-4s %-34s delta=%.4f closed=%.12f numeric=%.12f tol=%.0e",
                    c.pass ? "PASS" : "FAIL", c.family.c_str(), c.delta, c.closed_form, c.numeric, c.tolerance);
      std::cout << line << '\n';
      all &= c.pass;
    }
    return all ? 0 : kExitCheckFailed;
  }
  const auto families = a.families.empty() ? as::curve_families() : a.families;
  const auto rows = as::curve_export(as::DeltaGrid{a.from, a.to, a.step});
  emit(a.output, [&](std::ostream& out) { as::write_curve_csv(out, rows, families); });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounds and constructions for ternary codes under the d1 metric"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--threads", common.threads, "Worker threads (default: all cores)")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", common.seed, "Seed for randomized strategies");

  TableArgs table;
  auto* t = app.add_subcommand("table", "Build the bounds table T(n,d) with provenance");
  t->add_option("--nmax", table.nmax, "Largest length")->check(CLI::Range(1, kMaxTernaryLength));
  t->add_option("--dmax", table.dmax, "Largest distance")->check(CLI::PositiveNumber);
  t->add_option("--format", table.format, "text, csv or records")->check(CLI::IsMember({"text", "csv", "records"}));
  t->add_option("--output,-o", table.output, "Output file (default stdout)");
  t->add_flag("--search", table.search, "Seed the table with exact search on small spaces");

  ExactArgs exact;
  auto* e = app.add_subcommand("exact", "Exact maximum code size by clique search");
  e->add_option("--n", exact.n, "Length")->required();
  e->add_option("--d", exact.d, "Minimum distance")->required();
  e->add_option("--space", exact.space, "full, cw (constant weight) or hamming")
      ->check(CLI::IsMember({"full", "cw", "hamming"}));
  e->add_option("--q", exact.q, "Alphabet size for --space hamming")->check(CLI::Range(2, 16));
  e->add_option("--w", exact.w, "Weight for --space cw");
  e->add_option("--budget", exact.budget, "Node budget per symmetry root");
  e->add_option("--witness", exact.witness, "Write the best code found to this file");

  ConstructArgs construct;
  auto* c = app.add_subcommand("construct", "Run a construction and verify its minimum distance");
  c->add_option("--family", construct.family, "Construction")
      ->required()
      ->check(CLI::IsMember({"even-zeros", "greedy", "signed-binary", "support", "phi-shift", "coset-scan"}));
  c->add_option("--n", construct.n, "Length")->required();
  c->add_option("--d", construct.d, "Target minimum distance")->required();
  c->add_option("--order", construct.order, "Greedy scan order")->check(CLI::IsMember({"lex", "random"}));
  c->add_option("--trials", construct.trials, "Random shifts for phi-shift (0 = exhaustive)");
  c->add_option("--output,-o", construct.output, "Write the codebook here ('-' for stdout)");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check a codebook file against a minimum distance");
  v->add_option("--code", verify.code, "Codebook file")->required();
  v->add_option("--d", verify.d, "Required minimum distance")->required();
  v->add_flag("--plotkin", verify.plotkin, "Also evaluate the pair-distance chain");

  CountsArgs counts;
  auto* k = app.add_subcommand("counts", "Distance distributions as CSV");
  k->add_option("--n", counts.n, "Length")->required();
  k->add_option("--shell", counts.shell, "Weight shell; omit for all ordered pairs of Q^n");
  k->add_flag("--check", counts.check, "Compare with a brute-force census");

  AsymArgs asym;
  auto* s = app.add_subcommand("asym", "Asymptotic lower-bound curves as CSV");
  s->add_option("--from", asym.from, "First delta");
  s->add_option("--to", asym.to, "Last delta");
  s->add_option("--step", asym.step, "Delta step");
  s->add_option("--families", asym.families, "Comma-separated families (default all)")->delimiter(',');
  s->add_option("--output,-o", asym.output, "Output file (default stdout)");
  s->add_flag("--verify-optimizers", asym.verify, "Compare closed-form optimisers with numeric suprema");
  s->add_option("--grid-points", asym.grid_points, "Grid size for --verify-optimizers")->check(CLI::Range(2, 10000000));

  CLI11_PARSE(app, argc, argv);

  try {
    if (common.threads > 0) set_worker_count(common.threads);
    if (*t) return run_table(table);
    if (*e) return run_exact(exact);
    if (*c) return run_construct(construct, common.seed);
    if (*v) return run_verify(verify);
    if (*k) return run_counts(counts);
    if (*s) return run_asym(asym, common.seed);
  } catch (const CodebookError& err) {
    std::cerr << "error: malformed codebook: " << err.what() << '\n';
    return kExitBadCodebook;
  } catch (const LimitExceeded& err) {
    std::cerr << "error: over limit: " << err.what() << '\n';
    return kExitOverLimit;
  } catch (const InconsistentBounds& err) {
    std::cerr << "error: inconsistent bounds: " << err.what() << '\n';
    return kExitCheckFailed;
  } catch (const std::ios_base::failure& err) {
    std::cerr << "error: i/o: " << err.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: invalid parameter: " << err.what() << '\n';
    return kExitBadParameter;
  } catch (const std::domain_error& err) {
    std::cerr << "error: invalid parameter: " << err.what() << '\n';
    return kExitBadParameter;
  } catch (const std::out_of_range& err) {
    std::cerr << "error: invalid parameter: " << err.what() << '\n';
    return kExitBadParameter;
  }
  return 0;
}
