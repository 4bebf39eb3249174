#include "cli.hpp"

#include "nugatory/branched_cover.hpp"
#include "nugatory/filling.hpp"
#include "nugatory/knot_table.hpp"
#include "nugatory/pretzel.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>

#ifndef NUGATORY_DATA_DIR
#define NUGATORY_DATA_DIR "data"
#endif

namespace nugatory {

namespace fs = std::filesystem;

namespace {

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// NUGATORY_DATA may name the data directory or the table itself.
fs::path data_dir() {
  if (const char* env = std::getenv("NUGATORY_DATA"); env && *env) {
    fs::path p(env);
    return fs::is_directory(p) ? p : p.parent_path();
  }
  return NUGATORY_DATA_DIR;
}

fs::path default_table() {
  if (const char* env = std::getenv("NUGATORY_DATA"); env && *env) {
    fs::path p(env);
    if (!fs::is_directory(p)) return p;
  }
  return data_dir() / "knots.csv";
}

fs::path default_manifest() { return data_dir() / "nonfibered_bridge3.txt"; }

KnotTable load(const std::string& path) { return ingest_table(path.empty() ? default_table() : fs::path(path)); }

const KnotRecord& lookup(const KnotTable& t, const std::string& name) {
  const KnotRecord* k = t.find(name);
  if (!k) throw DomainError("knot " + name + " not found in " + t.source_path);
  return *k;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Homological obstructions to cosmetic crossing changes in knots", "nugatory"};
  app.require_subcommand(1);

  std::string pd, name, table, out_path, alpha, beta;
  int max_crossings = 10;
  bool no_manifest = false, allow_nsf = false;
  long long det_n = 0, max_order = 0;
  unsigned workers = 0;

  auto* homology = app.add_subcommand("homology", "H1 of the branched double cover and the determinant");
  auto* pd_opt = homology->add_option("--pd", pd, "PD code, e.g. \"X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)\"");
  auto* name_opt = homology->add_option("--name", name, "knot name looked up in the table");
  homology->add_option("--table", table, "knot table CSV (default: bundled)");
  pd_opt->excludes(name_opt);
  homology->require_option(1, 2);

  auto* verdict_cmd = app.add_subcommand("verdict", "which obstruction rules out cosmetic crossings");
  verdict_cmd->add_option("--name", name, "knot name")->required();
  verdict_cmd->add_option("--table", table, "knot table CSV (default: bundled)");

  auto* tables = app.add_subcommand("tables", "classify the table and print the report");
  tables->add_option("--table", table, "knot table CSV (default: bundled)");
  tables->add_option("--max-crossings", max_crossings, "crossing bound")->check(CLI::IsMember({9, 10}));
  tables->add_option("--out", out_path, "write the Markdown report here");
  tables->add_flag("--no-manifest", no_manifest, "skip the completeness check");

  auto* pretzel = app.add_subcommand("pretzel", "pretzel knots P(-p, p-1, r) of a given determinant");
  pretzel->add_option("--det", det_n, "odd determinant >= 3")->required();

  auto* oracle = app.add_subcommand("oracle", "exhaustive search for counterexamples to the square-free lifting");
  oracle->add_option("--max-order", max_order, "bound on ell * r_1 * ... * r_k")->required()->check(CLI::PositiveNumber);
  oracle->add_flag("--allow-non-squarefree", allow_nsf, "drop the square-free hypothesis");
  oracle->add_option("--workers", workers, "threads (0 = all cores)");

  auto* slopes = app.add_subcommand("slopes", "slopes at distance one from two slopes at distance two");
  slopes->add_option("--alpha", alpha, "a/b")->required();
  slopes->add_option("--beta", beta, "c/d")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (*homology) {
      AbelianGroup h;
      if (!pd.empty()) {
        h = branched_homology(goeritz_matrix(parse_pd(pd)));
      } else {
        h = resolve_homology(lookup(load(table), name));
      }
      out << "H1 = " << h.to_string() << "\n";
      out << "det = " << h.order() << "\n";
      const auto sf = square_free_summands(h);
      out << "square-free summands: " << (sf.all_square_free ? "yes" : "no") << "\n";
    } else if (*verdict_cmd) {
      const KnotTable t = load(table);
      const Verdict v = verdict(lookup(t, name));
      out << name << ": " << to_string(v.status);
      if (v.reason) out << " (" << to_string(*v.reason) << ")";
      out << "\n";
      for (const auto& e : v.trace) out << "  " << (e.fired ? "+ " : "- ") << e.obstruction << ": " << e.detail << "\n";
    } else if (*tables) {
      const KnotTable t = load(table);
      ReportOptions opts;
      opts.max_crossings = max_crossings;
      if (!no_manifest) opts.required = read_manifest(default_manifest());
      const TablesReport rep = reproduce_tables(t, opts);
      if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw DomainError("cannot write " + out_path);
        f << rep.text;
        out << "open list:";
        if (rep.open.empty()) out << " none";
        for (std::size_t i = 0; i < rep.open.size(); ++i) out << (i ? ", " : " ") << rep.open[i];
        out << "\n";
      } else {
        out << rep.text;
      }
      if (!rep.classification.errors.empty()) return 1;
    } else if (*pretzel) {
      for (const auto& hit : pretzel_search(det_n)) {
        out << "P(-" << hit.p << "," << hit.q << "," << hit.r << ") p=" << hit.p << " q=" << hit.q << " r=" << hit.r
            << " det=" << hit.det << " square_free=" << (hit.square_free_det ? "yes" : "no");
        const Integer crossings = hit.p + hit.q + hit.r;
        if (crossings <= 40) {
          const auto d = pretzel_diagram(-static_cast<int>(hit.p.to_int64()), static_cast<int>(hit.q.to_int64()),
                                         static_cast<int>(hit.r.to_int64()));
          out << " diagram_det=" << knot_determinant(goeritz_matrix(d));
        }
        out << "\n";
      }
    } else if (*oracle) {
      const auto rep = search_counterexamples(max_order, !allow_nsf, workers);
      for (const auto& m : rep.counterexamples) out << "counterexample " << to_string(m) << "\n";
      out << rep.counterexamples.size() << " counterexamples (" << rep.instances << " instances, max order " << max_order
          << (allow_nsf ? ", square-free hypothesis dropped" : "") << ")\n";
    } else if (*slopes) {
      const Slope a = Slope::parse(alpha), b = Slope::parse(beta);
      for (const auto& s : common_distance_one_slopes(a, b)) out << s.to_string() << "\n";
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace nugatory
