// Command-line front end: enumeration dumps, count tables, symbolic
// moment-cumulant tables, verification suites and annulus diagrams.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "fluct/annular.hpp"
#include "fluct/cumulants.hpp"
#include "fluct/draw.hpp"
#include "fluct/verify.hpp"

namespace {

using nlohmann::json;
using namespace fluct;

constexpr int kDefaultCeiling = 12;

int ceiling() {
  if (const char* env = std::getenv("FLUCT_MAX_TOTAL")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument(std::string("FLUCT_MAX_TOTAL must be a positive integer, got ") + env);
  }
  return kDefaultCeiling;
}

void check_ceiling(int total, const std::string& what) {
  if (total > ceiling()) {
    throw BoundExceeded(what + ": size " + std::to_string(total) + " exceeds the ceiling " +
                        std::to_string(ceiling()) + " (set FLUCT_MAX_TOTAL to raise it)");
  }
}

using ordered = nlohmann::ordered_json;

ordered partition_json(const SetPartition& v) {
  ordered out = ordered::array();
  for (const auto& b : v.blocks()) out.push_back(b);
  return out;
}

ordered record(const PartitionedPermutation& vp) {
  return ordered{{"perm", vp.perm().to_string()},
              {"partition", partition_json(vp.partition())},
              {"kind", vp.is_disc() ? "disc" : "tunnel"}};
}

int cmd_enumerate(const std::string& kind, const std::vector<int>& sizes) {
  std::size_t count = 0;
  auto emit = [&](const PartitionedPermutation& vp) {
    std::cout << record(vp).dump() << '\n';
    ++count;
  };
  if (kind == "nc") {
    if (sizes.size() != 1) throw std::invalid_argument("enumerate nc takes one size n");
    check_ceiling(sizes[0], "enumerate nc");
    for (const auto& a : enumerate_nc(sizes[0])) emit(PartitionedPermutation::disc(a));
  } else {
    if (sizes.size() != 2) throw std::invalid_argument("enumerate " + kind + " takes two sizes p q");
    const AnnulusShape shape(sizes[0], sizes[1]);
    check_ceiling(shape.total(), "enumerate " + kind);
    if (kind == "snc") {
      for (const auto& a : enumerate_snc(shape)) emit(PartitionedPermutation::disc(a));
    } else {
      for (const auto& vp : enumerate_psnc(shape)) emit(vp);
    }
  }
  std::cout << ordered{{"count", count}}.dump() << '\n';
  return 0;
}

int cmd_counts(int max, const std::string& format) {
  check_ceiling(max, "counts");
  json rows = json::array();
  if (format == "csv") std::cout << "p,q,count\n";
  for (int n = 2; n <= max; ++n) {
    for (int p = 1; p < n; ++p) {
      const Integer c = snc_count(p, n - p);
      if (format == "csv") {
        std::cout << p << ',' << n - p << ',' << c.get_str() << '\n';
      } else {
        rows.push_back({{"p", p}, {"q", n - p}, {"count", c.get_si()}});
      }
    }
  }
  if (format == "json") std::cout << rows.dump(2) << '\n';
  return 0;
}

int cmd_table(int max_p, int max_q, const std::string& direction, const std::string& format) {
  if (max_p < 1 || max_q < 1) throw std::invalid_argument("table sizes must be positive");
  check_ceiling(max_p + max_q, "table");
  const bool moments = direction == "alpha-in-kappa";
  json rows = json::array();
  if (format == "latex") std::cout << "\\begin{align*}\n";
  for (int q = 1; q <= max_q; ++q) {
    for (int p = 1; p <= std::min(q, max_p); ++p) {
      const Polynomial value = moments ? symbolic_phi2_expansion(p, q) : symbolic_kappa_pq(p, q);
      const Symbol lhs = moments ? Symbol::alpha(p, q) : Symbol::kappa(p, q);
      if (format == "text") {
        std::cout << lhs.text() << " = " << value.to_text() << '\n';
      } else if (format == "latex") {
        std::cout << lhs.latex() << " &= " << value.to_latex() << " \\\\\n";
      } else {
        rows.push_back({{"p", p}, {"q", q}, {"lhs", lhs.name()}, {"terms", value.to_json()}});
      }
    }
  }
  if (format == "latex") std::cout << "\\end{align*}\n";
  if (format == "json") std::cout << rows.dump(2) << '\n';
  return 0;
}

int cmd_verify(const std::string& suite, int max, int jobs) {
  if (jobs < 1) throw std::invalid_argument("--jobs must be at least 1");
  std::vector<std::string> suites;
  if (suite == "all") {
    suites = suite_names();
  } else {
    default_max(suite);
    suites = {suite};
  }
  bool ok = true;
  json out = json::array();
  for (const auto& s : suites) {
    const int m = max > 0 ? max : default_max(s);
    check_ceiling(s == "semicircular-square" ? 2 * m : m, "verify " + s);
    const SuiteReport report = run_suite(s, m, jobs);
    ok = ok && report.passed();
    out.push_back(report.to_json());
  }
  std::cout << (suites.size() == 1 ? out.front() : out).dump(2) << '\n';
  return ok ? 0 : 1;
}

int cmd_draw(const std::string& perm_text, int p, int q, const std::string& partition_text,
             const std::string& out_path) {
  const AnnulusShape shape(p, q);
  const Permutation perm = Permutation::parse(perm_text, shape.total());
  std::string svg;
  if (partition_text.empty()) {
    svg = draw_annulus(perm, shape);
  } else {
    std::vector<SetPartition::Block> blocks;
    try {
      blocks = json::parse(partition_text).get<std::vector<SetPartition::Block>>();
    } catch (const json::exception&) {
      throw std::invalid_argument("--partition expects JSON such as [[1,3],[2]]");
    }
    svg = draw_annulus(PartitionedPermutation(SetPartition(shape.total(), blocks), perm), shape);
  }
  if (out_path.empty()) {
    std::cout << svg;
    return 0;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + out_path);
  f << svg;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-crossing annular permutations and second-order free cumulants"};
  app.require_subcommand(1);

  std::string kind;
  std::vector<int> sizes;
  auto* enumerate = app.add_subcommand("enumerate", "Dump NC(n), S_NC(p,q) or PS_NC(p,q) as JSON Lines");
  enumerate->add_option("kind", kind, "nc | snc | psnc")->required()->check(CLI::IsMember({"nc", "snc", "psnc"}));
  enumerate->add_option("sizes", sizes, "n, or p q")->required();

  int counts_max = 8;
  std::string counts_format = "csv";
  auto* counts = app.add_subcommand("counts", "|S_NC(p,q)| for all p + q <= max");
  counts->add_option("--max", counts_max, "Largest p + q")->capture_default_str();
  counts->add_option("--format", counts_format, "csv | json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

  int max_p = 3;
  int max_q = 3;
  std::string direction = "alpha-in-kappa";
  std::string table_format = "text";
  auto* table = app.add_subcommand("table", "Second-order moment-cumulant relations for p <= q");
  table->add_option("max_p", max_p, "Largest p")->capture_default_str();
  table->add_option("max_q", max_q, "Largest q")->capture_default_str();
  table->add_option("--direction", direction, "alpha-in-kappa | kappa-in-alpha")
      ->check(CLI::IsMember({"alpha-in-kappa", "kappa-in-alpha"}))
      ->capture_default_str();
  table->add_option("--format", table_format, "text | latex | json")
      ->check(CLI::IsMember({"text", "latex", "json"}))
      ->capture_default_str();

  std::string suite;
  int verify_max = 0;
  int jobs = 1;
  auto* verify = app.add_subcommand("verify", "Run a verification suite; exit 0 iff every check passes");
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.push_back("all");
  verify->add_option("suite", suite, "Suite name or all")->required()->check(CLI::IsMember(suite_choices));
  verify->add_option("--max", verify_max, "Size bound (0 = suite default)")->capture_default_str();
  verify->add_option("--jobs", jobs, "Worker threads")->capture_default_str();

  std::string perm_text;
  int p = 0;
  int q = 0;
  std::string partition_text;
  std::string out_path;
  auto* draw = app.add_subcommand("draw", "Write an SVG diagram of a permutation on the (p,q)-annulus");
  draw->add_option("perm", perm_text, "Cycle notation, e.g. \"(1,2)(3)\"")->required();
  draw->add_option("p", p, "Outer points")->required();
  draw->add_option("q", q, "Inner points")->required();
  draw->add_option("--partition", partition_text, "Blocks as JSON, e.g. [[1,3],[2]]");
  draw->add_option("--out", out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Usage errors share exit code 2 with runtime errors; --help stays 0.
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) return cmd_verify(suite, verify_max, jobs);
    // Suites keep the library bound so their brute-force checks stay cheap.
    set_enumeration_bound(std::max(enumeration_bound(), ceiling()));
    if (*enumerate) return cmd_enumerate(kind, sizes);
    if (*counts) return cmd_counts(counts_max, counts_format);
    if (*table) return cmd_table(max_p, max_q, direction, table_format);
    return cmd_draw(perm_text, p, q, partition_text, out_path);
  } catch (const std::exception& e) {
    std::cerr << "fluct: " << e.what() << '\n';
    return 2;
  }
}
