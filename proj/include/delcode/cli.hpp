#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "delcode/code_io.hpp"
#include "delcode/codes.hpp"
#include "delcode/graph.hpp"
#include "delcode/mis.hpp"
#include "delcode/selftest.hpp"

namespace delcode::cli {

struct CommandResult {
  int exit_code = 0;
  std::string report;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Longest codewords `construct` builds; verifying a code costs |C|^2 LCS runs.
inline constexpr int kMaxConstructLength = 16;
/// Longest strings `bounds --check` builds layer graphs for.
inline constexpr int kMaxBoundsCheckLength = 14;

namespace detail {

class UsageError : public Error {
public:
  using Error::Error;
};

inline std::string fraction(const Rational &q) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(q) << "/" << boost::multiprecision::denominator(q);
  return os.str();
}

inline std::string decimal(const Rational &q) {
  std::ostringstream os;
  os.precision(12);
  os << q.convert_to<double>();
  return os.str();
}

inline Natural ceil(const Rational &q) {
  const Natural num = boost::multiprecision::numerator(q), den = boost::multiprecision::denominator(q);
  return num / den + (num % den != 0 ? 1 : 0);
}

template <class T>
std::string join(const std::vector<T> &xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i)
    os << (i ? "," : "") << xs[i];
  return os.str();
}

inline const CLI::Validator &decimal_validator() {
  static const CLI::Validator v(
      [](std::string &text) -> std::string {
        if (text.empty() || text.size() > 18 || text.find_first_not_of("0123456789") != std::string::npos)
          return "'" + text + "' is not a non-negative decimal integer";
        return {};
      },
      "DECIMAL");
  return v;
}

struct Options {
  std::string kind;
  int n = -1;
  int s = 1;
  int residue = 0;
  std::optional<int> k;
  std::optional<int> layer;
  std::string solver;
  std::uint64_t budget = kDefaultNodeBudget;
  std::string out;
  std::string file;
  std::string report = "degrees";
  std::string method = "exact";
  bool check = false;
  std::string z;
  int seg_l = -1, seg_k = -1, seg_b = 0, seg_c = 0;
  int length = 5;
  int max_n = 8;
};

inline void need(bool cond, const std::string &what) {
  if (!cond)
    throw UsageError(what);
}

inline std::string graph_header(const GraphParams &p) {
  std::string h = "s=" + std::to_string(p.s) + " n=" + std::to_string(p.n);
  if (p.layer)
    h += " k=" + std::to_string(*p.layer);
  return h;
}

// construct ----------------------------------------------------------------

inline CommandResult construct(const Options &o) {
  need(o.n >= 1, "construct needs --n");
  if (o.n > kMaxConstructLength)
    throw CapacityError("construct is limited to n <= " + std::to_string(kMaxConstructLength));
  Code code;
  if (o.kind == "vt") {
    need(o.residue <= o.n, "--residue must lie in [0, n]");
    code = vt_code(o.n, o.residue);
  } else if (o.kind == "layer") {
    need(o.k.has_value() && *o.k <= o.n, "construct --kind layer needs --k in [0, n]");
    code = layer_code(o.n, *o.k);
  } else {
    need(o.s >= 1 && o.s <= o.n, "--s must lie in [1, n]");
    need(o.residue <= o.s, "--residue must lie in [0, s]");
    const std::string solver = o.solver.empty() ? (o.s == 1 ? "coloring" : "greedy") : o.solver;
    need(solver != "coloring" || o.s == 1, "the coloring solver only handles --s 1");
    LayerSolver layer_solver = solver == "coloring" ? coloring_layer_solver()
                               : solver == "greedy" ? greedy_layer_solver()
                                                    : exact_layer_solver(o.budget);
    code = weight_partition_code(o.n, o.s, o.residue, layer_solver);
  }

  const bool valid = verify_code(code);
  std::ostringstream os;
  if (o.out.empty()) {
    write_code(os, code);
  } else {
    save_code(o.out, code);
    os << "kind=" << to_string(code.provenance) << "\n"
       << "n=" << code.n << "\n"
       << "s=" << code.s << "\n"
       << "size=" << code.size() << "\n"
       << "valid=" << (valid ? "true" : "false") << "\n"
       << "out=" << o.out << "\n";
  }
  return {valid ? kExitOk : kExitFailed, os.str()};
}

// verify -------------------------------------------------------------------

inline CommandResult verify(const Options &o) {
  const Code code = load_code(o.file);
  std::ostringstream os;
  os << "kind=" << to_string(code.provenance) << "\n"
     << "n=" << code.n << "\n"
     << "s=" << code.s << "\n"
     << "size=" << code.size() << "\n";
  const auto &w = code.words;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      const int d = deletion_distance(w[i], w[j]);
      if (d <= 2 * code.s) {
        os << "valid=false\n"
           << "violation=" << w[i] << "," << w[j] << "\n"
           << "distance=" << d << "\n";
        return {kExitFailed, os.str()};
      }
    }
  os << "valid=true\n";
  return {kExitOk, os.str()};
}

// graph --------------------------------------------------------------------

inline CommandResult graph(const Options &o) {
  need(o.n >= 0 && o.s <= o.n, "graph needs --n and 0 <= --s <= n");
  const auto g = build_graph(o.s, o.n, o.layer);
  std::ostringstream os;
  if (o.report == "edges") {
    os << "# " << graph_header(g.params()) << " vertices=" << g.size() << " edges=" << g.edge_count() << "\n";
    for (ConfusabilityGraph::Index u = 0; u < g.size(); ++u)
      for (auto v : g.neighbors(u))
        if (u < v)
          os << g.vertex(u) << " " << g.vertex(v) << "\n";
    return {kExitOk, os.str()};
  }

  const auto st = degree_stats(g);
  bool holds = true;
  os << "s=" << o.s << "\n"
     << "n=" << o.n << "\n";
  if (o.layer)
    os << "k=" << *o.layer << "\n";
  os << "vertices=" << g.size() << "\n"
     << "edges=" << st.edge_count << "\n"
     << "max_degree=" << st.max_degree << "\n"
     << "average_degree=" << fraction(st.average_degree) << "\n";
  if (o.layer) {
    const Rational bound = layer_avg_degree_bound(o.s, o.n, *o.layer);
    holds = st.average_degree <= bound;
    os << "average_degree_bound=" << fraction(bound) << "\n";
  } else {
    const Natural i = insertion_count(o.s, o.n);
    const Natural max_bound = ::delcode::detail::binomial_prefix_sum(o.n - o.s, o.s) * (i - 1);
    const Rational avg_bound(i * (i - 1), pow2(static_cast<unsigned>(o.s)));
    holds = Natural(st.max_degree) <= max_bound && st.average_degree <= avg_bound;
    os << "max_degree_bound=" << max_bound << "\n"
       << "average_degree_bound=" << fraction(avg_bound) << "\n";
  }
  os << "bounds_hold=" << (holds ? "true" : "false") << "\n";
  return {holds ? kExitOk : kExitFailed, os.str()};
}

// alpha --------------------------------------------------------------------

inline CommandResult alpha(const Options &o) {
  need(o.n >= 0 && o.s <= o.n, "alpha needs --n and 0 <= --s <= n");
  const auto g = build_graph(o.s, o.n, o.layer);
  std::ostringstream os;
  os << "s=" << o.s << "\n"
     << "n=" << o.n << "\n";
  if (o.layer)
    os << "k=" << *o.layer << "\n";
  os << "vertices=" << g.size() << "\n"
     << "method=" << o.method << "\n";

  if (o.method == "greedy") {
    const auto set = greedy_mis(g);
    const auto st = degree_stats(g);
    const Rational turan = Rational(Natural(g.size())) / (st.average_degree + 1);
    const bool ok = verify_independent(g, set) && Rational(Natural(set.size())) >= turan;
    os << "size=" << set.size() << "\n"
       << "turan_bound=" << fraction(turan) << "\n"
       << "meets_turan=" << (ok ? "true" : "false") << "\n"
       << "set=" << join(set) << "\n";
    return {ok ? kExitOk : kExitFailed, os.str()};
  }

  try {
    const auto r = exact_mis_search(g, o.budget);
    os << "size=" << r.set.size() << "\n"
       << "optimal=true\n"
       << "nodes=" << r.nodes << "\n"
       << "set=" << join(r.set) << "\n";
    return {kExitOk, os.str()};
  } catch (const BudgetExceeded &e) {
    os << "size=" << e.best().size() << "\n"
       << "optimal=false\n"
       << "nodes=" << e.nodes() << "\n"
       << "set=" << join(e.best()) << "\n";
    return {kExitFailed, os.str()};
  }
}

// bounds -------------------------------------------------------------------

inline CommandResult bounds(const Options &o) {
  need(o.n >= 1 && o.s >= 1 && o.s <= o.n, "bounds needs --n and 1 <= --s <= n");
  std::ostringstream os;
  const Rational lev = levenshtein_lower_bound(o.n, o.s);
  const Rational guarantee = constant_weight_guarantee(o.n, o.s);
  os << "n=" << o.n << "\n"
     << "s=" << o.s << "\n"
     << "insertion_count=" << insertion_count(o.s, o.n) << "\n"
     << "levenshtein_lower_bound=" << fraction(lev) << "\n"
     << "levenshtein_lower_bound_ceil=" << ceil(lev) << "\n"
     << "constant_weight_guarantee=" << fraction(guarantee) << "\n"
     << "constant_weight_guarantee_approx=" << decimal(guarantee) << "\n"
     << "constant_weight_asymptotic_approx=" << decimal(constant_weight_asymptotic(o.n, o.s)) << "\n"
     << "penalty_ratio=" << fraction(penalty_ratio(o.s)) << "\n"
     << "chromatic_lower_bound=" << chromatic_lower_bound(o.s, o.n) << "\n";
  if (auto seg = best_segment_clique(o.s, o.n))
    os << "segment_clique=l=" << seg->segment_length << ",k=" << seg->segments << ",b=" << seg->lengthened
       << ",c=" << seg->shortened << ",size=" << seg->clique_size() << "\n";
  if (o.s == 1) {
    os << "vt_sizes=" << join(vt_class_sizes(o.n)) << "\n";
    for (int a = 0; a <= 1; ++a)
      os << "weight_partition_floor_a" << a << "=" << fraction(single_deletion_size_floor(o.n, a)) << "\n";
  }
  if (!o.check)
    return {kExitOk, os.str()};

  if (o.n > kMaxBoundsCheckLength)
    throw CapacityError("bounds --check is limited to n <= " + std::to_string(kMaxBoundsCheckLength));
  bool ok = true;
  std::size_t best = 0;
  for (int a = 0; a <= o.s; ++a) {
    const Code c = weight_partition_code(o.n, o.s, a, greedy_layer_solver());
    best = std::max(best, c.size());
    ok = ok && verify_code(c);
  }
  ok = ok && Rational(Natural(best)) >= guarantee;
  os << "greedy_weight_partition_size=" << best << "\n";
  if (o.s == 1) {
    for (int a = 0; a <= 1; ++a) {
      const Code c = weight_partition_code(o.n, 1, a, coloring_layer_solver());
      const bool meets = Rational(Natural(c.size())) >= single_deletion_size_floor(o.n, a) && verify_code(c);
      os << "weight_partition_size_a" << a << "=" << c.size() << "\n";
      ok = ok && meets;
    }
  }
  os << "bounds_hold=" << (ok ? "true" : "false") << "\n";
  return {ok ? kExitOk : kExitFailed, os.str()};
}

// witness ------------------------------------------------------------------

inline CommandResult witness(const Options &o) {
  std::ostringstream os;
  std::vector<BitString> vertices;
  bool ok = false;
  if (o.kind == "clique") {
    need(!o.z.empty(), "witness --kind clique needs --z");
    const auto w = substring_clique(BitString::parse(o.z), o.s, o.layer);
    os << "# kind=clique " << graph_header(w.target) << " z=" << w.seed << "\n";
    vertices = w.vertices;
    ok = is_clique(vertices, o.s);
  } else if (o.kind == "segment") {
    need(o.seg_l >= 0 && o.seg_k >= 0, "witness --kind segment needs --l and --k");
    const auto w = segment_clique(SegmentParams{o.seg_l, o.seg_k, o.seg_b, o.seg_c});
    os << "# kind=segment " << graph_header(w.target) << " l=" << o.seg_l << " k=" << o.seg_k << " b=" << o.seg_b
       << " c=" << o.seg_c << " center=" << w.seed << "\n";
    vertices = w.vertices;
    ok = is_clique(vertices, w.target.s);
  } else if (o.kind == "cycle") {
    vertices = induced_cycle(o.s, o.length);
    os << "# kind=cycle s=" << o.s << " n=" << vertices.front().length() << " length=" << o.length << "\n";
    ok = is_induced_cycle(vertices, o.s);
  } else {
    need(o.n >= 0, "witness --kind imperfect needs --n");
    vertices = imperfectness_witness(o.s, o.n);
    os << "# kind=imperfect s=" << o.s << " n=" << o.n << "\n";
    ok = is_induced_cycle(vertices, o.s);
  }
  for (const auto &x : vertices)
    os << x << "\n";
  return {ok ? kExitOk : kExitFailed, os.str()};
}

// selftest -----------------------------------------------------------------

inline CommandResult selftest(const Options &o) {
  need(o.max_n >= 1 && o.max_n <= selftest::kMaxSelftestLength, "--max-n must lie in [1, 12]");
  std::ostringstream os;
  int failures = 0;
  for (const auto &r : selftest::run_all(o.max_n)) {
    os << r.name << "=" << (r.passed ? "pass" : "fail");
    if (!r.passed) {
      ++failures;
      os << " (" << r.detail << ")";
    }
    os << "\n";
  }
  os << "failures=" << failures << "\n";
  return {failures ? kExitFailed : kExitOk, os.str()};
}

} // namespace detail

/// Parses `args` (without the program name) and runs one verb.
inline CommandResult run(const std::vector<std::string> &args) {
  using detail::decimal_validator;
  detail::Options o;
  CLI::App app{"Construct, verify and analyze binary deletion-correcting codes", "delcode"};
  app.require_subcommand(1);

  auto *construct = app.add_subcommand("construct", "Build a code and write it as a code file");
  construct->add_option("--kind", o.kind, "Construction")->required()->check(CLI::IsMember({"vt", "layer", "weight-partition"}));
  construct->add_option("--n", o.n, "Codeword length")->required()->check(decimal_validator());
  construct->add_option("--s", o.s, "Deletions corrected (weight-partition)")->check(decimal_validator());
  construct->add_option("--residue", o.residue, "VT residue, or weight residue mod s+1")->check(decimal_validator());
  construct->add_option("--k", o.k, "Layer weight (layer)")->check(decimal_validator());
  construct->add_option("--solver", o.solver, "Layer solver (weight-partition)")->check(CLI::IsMember({"coloring", "greedy", "exact"}));
  construct->add_option("--budget", o.budget, "Node budget for the exact solver")->check(decimal_validator());
  construct->add_option("--out", o.out, "Output path; the code is printed when omitted");

  auto *verify = app.add_subcommand("verify", "Check that a code file corrects its stated number of deletions");
  verify->add_option("--file", o.file, "Code file")->required();

  auto *graph = app.add_subcommand("graph", "Degree statistics or edge list of a confusability graph");
  graph->add_option("--n", o.n, "String length")->required()->check(decimal_validator());
  graph->add_option("--s", o.s, "Deletions")->check(decimal_validator());
  graph->add_option("--layer", o.layer, "Restrict to weight-k strings")->check(decimal_validator());
  graph->add_option("--report", o.report, "Report")->check(CLI::IsMember({"degrees", "edges"}));

  auto *alpha = app.add_subcommand("alpha", "Independent set of a confusability graph");
  alpha->add_option("--n", o.n, "String length")->required()->check(decimal_validator());
  alpha->add_option("--s", o.s, "Deletions")->check(decimal_validator());
  alpha->add_option("--layer", o.layer, "Restrict to weight-k strings")->check(decimal_validator());
  alpha->add_option("--method", o.method, "Search method")->check(CLI::IsMember({"exact", "greedy"}));
  alpha->add_option("--budget", o.budget, "Node budget for exact search")->check(decimal_validator());

  auto *bounds = app.add_subcommand("bounds", "Code size bounds and clique lower bounds");
  bounds->add_option("--n", o.n, "String length")->required()->check(decimal_validator());
  bounds->add_option("--s", o.s, "Deletions")->required()->check(decimal_validator());
  bounds->add_flag("--check", o.check, "Build weight-partition codes and compare with the guarantees");

  auto *witness = app.add_subcommand("witness", "Print a clique or induced-cycle witness");
  witness->add_option("--kind", o.kind, "Witness kind")->required()->check(CLI::IsMember({"clique", "segment", "cycle", "imperfect"}));
  witness->add_option("--s", o.s, "Deletions")->check(decimal_validator());
  witness->add_option("--n", o.n, "String length (imperfect)")->check(decimal_validator());
  witness->add_option("--z", o.z, "Common substring (clique)");
  witness->add_option("--layer", o.layer, "Restrict a clique to weight-k strings")->check(decimal_validator());
  witness->add_option("--length", o.length, "Cycle length (cycle)")->check(decimal_validator());
  witness->add_option("--l", o.seg_l, "Segment length (segment)")->check(decimal_validator());
  witness->add_option("--k", o.seg_k, "Number of segments (segment)")->check(decimal_validator());
  witness->add_option("--b", o.seg_b, "Lengthened segments (segment)")->check(decimal_validator());
  witness->add_option("--c", o.seg_c, "Shortened segments (segment)")->check(decimal_validator());

  auto *selftest = app.add_subcommand("selftest", "Run the invariant checks of every module");
  selftest->add_option("--max-n", o.max_n, "Longest strings to check (1..12)")->check(decimal_validator());

  std::ostringstream out, err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return {code == 0 ? kExitOk : kExitUsage, out.str() + err.str()};
  }

  try {
    if (construct->parsed())
      return detail::construct(o);
    if (verify->parsed())
      return detail::verify(o);
    if (graph->parsed())
      return detail::graph(o);
    if (alpha->parsed())
      return detail::alpha(o);
    if (bounds->parsed())
      return detail::bounds(o);
    if (witness->parsed())
      return detail::witness(o);
    return detail::selftest(o);
  } catch (const BudgetExceeded &e) {
    return {kExitFailed, std::string("error: ") + e.what() + "\n"};
  } catch (const CapacityError &e) {
    return {kExitUsage, std::string("error: capacity: ") + e.what() + "\n"};
  } catch (const Error &e) {
    return {kExitUsage, std::string("error: ") + e.what() + "\n"};
  }
}

} // namespace delcode::cli
