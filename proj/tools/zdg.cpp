#include <openssl/evp.h>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "zdg/automorphism.hpp"
#include "zdg/errors.hpp"
#include "zdg/graph.hpp"
#include "zdg/graph_io.hpp"
#include "zdg/number_theory.hpp"
#include "zdg/ring.hpp"
#include "zdg/ring_spec_parser.hpp"
#include "zdg/spectral.hpp"
#include "zdg/theorem_suite.hpp"
#include "zdg/threshold.hpp"

#ifndef ZDG_VERSION
#define ZDG_VERSION "0.0.0"
#endif

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInternal = 2;
constexpr int kExitNotThreshold = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::uint64_t cap = zdg::kDefaultSizeCap;
  std::string out;
  bool dot = false;
  bool json = false;
  std::string code;
  bool rebuild = false;
  std::string method = "aut";
  std::string partition = "auto";
  std::string grid;
  std::string suite = "all";
  std::string claim;
  std::string input;
  std::string spec;
  std::vector<std::uint64_t> p;
  std::vector<unsigned> alpha;
  std::vector<std::uint64_t> q;
  std::vector<std::uint64_t> n;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw zdg::Error("cannot write " + path.string());
  out << data;
}

void emit(const Options& o, const std::string& data) {
  if (o.out.empty()) {
    std::cout << data;
  } else {
    write_file(o.out, data);
  }
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned i = 0; i < len; ++i) {
    os << std::hex << std::setw(2) << std::setfill('0')
       << static_cast<int>(digest[i]);
  }
  return os.str();
}

std::string utc_now() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

bool looks_like_file(const std::string& input) {
  return input.ends_with(".json") || fs::is_regular_file(input);
}

struct Loaded {
  zdg::Graph graph;
  std::optional<zdg::Ring> ring;
};

std::optional<zdg::Ring> ring_from_provenance(const zdg::Graph& g,
                                              std::uint64_t cap) {
  if (!g.provenance()) return std::nullopt;
  try {
    const zdg::RingSpec spec = zdg::parse_ring_spec(*g.provenance());
    if (zdg::analytic_size(spec) != g.order()) return std::nullopt;
    return zdg::make_ring(spec, zdg::RingOptions{cap});
  } catch (const zdg::Error&) {
    return std::nullopt;
  }
}

Loaded load(const Options& o) {
  if (!o.code.empty()) {
    if (!o.input.empty()) throw UsageError("give either --code or an input");
    return {zdg::build_threshold_from_code(o.code), std::nullopt};
  }
  if (o.input.empty()) throw UsageError("missing ring expression or graph file");
  if (looks_like_file(o.input)) {
    zdg::Graph g = zdg::graph_from_json(read_file(o.input));
    auto ring = ring_from_provenance(g, o.cap);
    return {std::move(g), std::move(ring)};
  }
  zdg::Ring ring = zdg::make_ring(zdg::parse_ring_spec(o.input),
                                  zdg::RingOptions{o.cap});
  zdg::Graph g = zdg::build_zero_divisor_graph(ring, o.cap);
  return {std::move(g), std::move(ring)};
}

int cmd_graph(const Options& o) {
  const Loaded in = load(o);
  if (o.dot && o.json) throw UsageError("choose one of --dot and --json");
  emit(o, o.dot ? zdg::graph_to_dot(in.graph) : zdg::graph_to_json(in.graph) + "\n");
  return kExitOk;
}

int cmd_threshold(const Options& o) {
  if (o.rebuild) {
    if (o.code.empty()) throw UsageError("--rebuild needs --code");
    const zdg::Graph g = zdg::build_threshold_from_code(o.code);
    emit(o, o.dot ? zdg::graph_to_dot(g) : zdg::graph_to_json(g) + "\n");
    return kExitOk;
  }
  const Loaded in = load(o);
  const zdg::ThresholdVerdict v = zdg::is_threshold(in.graph);
  emit(o, zdg::verdict_to_json(v, in.graph) + "\n");
  return v.is_threshold() ? kExitOk : kExitNotThreshold;
}

zdg::Partition make_partition(const std::string& method, const Loaded& in) {
  if (method == "gcd") {
    if (!in.ring) throw UsageError("gcd classes need a Z/n ring");
    return zdg::gcd_class_partition(*in.ring);
  }
  if (method == "twin") return zdg::twin_partition(in.graph);
  if (method == "aut") return zdg::aut_orbits(in.graph);
  if (method == "runs") {
    const zdg::ThresholdAnalysis a = zdg::analyze_threshold(in.graph);
    if (!a.verdict.is_threshold()) {
      throw UsageError("run blocks need a threshold graph");
    }
    zdg::Partition runs = a.verdict.code().run_partition();
    for (zdg::Block& blk : runs.blocks) {
      for (zdg::Vertex& v : blk.vertices) v = a.order[v];
      std::sort(blk.vertices.begin(), blk.vertices.end());
    }
    return runs;
  }
  if (looks_like_file(method)) {
    return zdg::partition_from_json(read_file(method), in.graph.order());
  }
  throw UsageError("unknown partition method '" + method + "'");
}

int cmd_orbits(const Options& o) {
  const Loaded in = load(o);
  const zdg::Partition p = make_partition(o.method, in);
  emit(o, zdg::partition_to_json(p, in.graph) + "\n");
  return kExitOk;
}

std::string factored(const zdg::SpectralFactorization& f) {
  std::string out;
  auto power = [](std::size_t e) {
    return e == 1 ? std::string() : "^" + std::to_string(e);
  };
  if (f.m0 > 0) out += "x" + power(f.m0);
  if (f.m1 > 0) out += "(x+1)" + power(f.m1);
  if (f.rest.degree() > 0) out += "(" + f.rest.to_string() + ")";
  return out.empty() ? "1" : out;
}

json poly_json(const zdg::IntPolynomial& p) {
  return {{"text", p.to_string()}, {"coefficients", json::parse(p.to_json())}};
}

int cmd_spectra(const Options& o) {
  const Loaded in = load(o);
  std::string method = o.partition;
  if (method == "auto") {
    method = zdg::is_threshold(in.graph).is_threshold() ? "runs" : "twin";
  }
  const zdg::Partition part = make_partition(method, in);
  const zdg::QuotientMatrix m = zdg::equitable_quotient_matrix(in.graph, part);
  const zdg::IntPolynomial q = zdg::char_poly(m);
  const zdg::IntPolynomial full = zdg::adjacency_char_poly(in.graph);
  const zdg::SpectralFactorization f = zdg::factor_zero_minus_one(full);
  json out = {{"n", in.graph.order()},
              {"partition", method},
              {"quotient_matrix", json::parse(m.to_json())},
              {"quotient_charpoly", poly_json(q)},
              {"charpoly", poly_json(full)},
              {"factored", factored(f)},
              {"quotient_divides", full.divide_exact(q).has_value()},
              {"m0", zdg::eigenvalue_multiplicity(in.graph, 0)},
              {"m1", zdg::eigenvalue_multiplicity(in.graph, -1)}};
  emit(o, out.dump() + "\n");
  return kExitOk;
}

// "p=2:3:5,alpha=6,n=300,q=16": colon-separated lists; a single q or n value
// is an upper bound, a single alpha value is the maximum exponent.
void apply_grid(const std::string& grid, zdg::SuiteConfig& c) {
  std::stringstream items(grid);
  std::string item;
  while (std::getline(items, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("bad grid item '" + item + "'");
    const std::string key = item.substr(0, eq);
    std::vector<std::uint64_t> values;
    std::stringstream vs(item.substr(eq + 1));
    std::string v;
    while (std::getline(vs, v, ':')) {
      try {
        values.push_back(std::stoull(v));
      } catch (const std::exception&) {
        throw UsageError("bad grid value '" + v + "'");
      }
    }
    if (values.empty()) throw UsageError("empty grid item '" + item + "'");
    if (key == "p") {
      for (auto p : values) {
        if (!zdg::is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
      }
      c.primes = values;
      c.small_family_primes = values;
    } else if (key == "alpha") {
      c.alpha_max = static_cast<unsigned>(values.back());
    } else if (key == "n") {
      c.orbit_n_max = values.back();
    } else if (key == "q") {
      if (values.size() == 1) {
        c.field_sizes.clear();
        for (std::uint64_t q = 2; q <= values[0]; ++q) {
          if (zdg::as_prime_power(q)) c.field_sizes.push_back(q);
        }
      } else {
        c.field_sizes = values;
      }
    } else {
      throw UsageError("unknown grid key '" + key + "'");
    }
  }
}

json config_json(const zdg::SuiteConfig& c) {
  return {{"cap", c.cap},
          {"primes", c.primes},
          {"small_family_primes", c.small_family_primes},
          {"alpha_max", c.alpha_max},
          {"field_sizes", c.field_sizes},
          {"orbit_n_max", c.orbit_n_max},
          {"divisibility_n_max", c.divisibility_n_max},
          {"suite", c.suite},
          {"seeds", json::array()}};
}

std::vector<zdg::ClaimReport> run_targeted(const Options& o,
                                           const zdg::SuiteContext& ctx) {
  using namespace zdg;
  const std::string& id = o.claim;
  std::vector<ClaimReport> out;
  auto need = [&](bool ok, const char* what) {
    if (!ok) throw UsageError("claim " + id + " needs " + what);
  };
  if (id == "adjacency" || id == "orbit_sizes" || id == "join") {
    need(!o.p.empty() && !o.alpha.empty(), "--p and --alpha");
    for (auto p : o.p) {
      if (!is_prime(p)) throw CompositePrimeError(p);
      for (auto a : o.alpha) {
        if (id == "adjacency") out.push_back(verify_adjacency_lemma(p, a, ctx));
        if (id == "orbit_sizes") {
          out.push_back(verify_orbit_size_formulas(p, a, ctx));
        }
        if (id == "join") out.push_back(verify_join_decomposition(p, a, ctx));
      }
    }
  } else if (id == "reduced") {
    need(!o.q.empty(), "--q");
    out = verify_reduced_classification(o.q, ctx);
  } else if (id == "orbit_claim") {
    need(!o.n.empty(), "--n");
    for (auto n : o.n) out.push_back(verify_orbit_claim(n, ctx));
  } else if (id == "local" || id == "family_orbits" || id == "nonthreshold") {
    need(!o.spec.empty(), "--spec");
    const RingSpec spec = parse_ring_spec(o.spec);
    if (id == "local") out.push_back(verify_local_family(spec, ctx));
    if (id == "family_orbits") out.push_back(verify_family_orbits(spec, ctx));
    if (id == "nonthreshold") out = verify_nonthreshold_products({spec}, ctx);
  } else if (id == "divisibility") {
    need(!o.spec.empty() || !o.code.empty(), "--spec or --code");
    Graph g = o.code.empty()
                  ? build_zero_divisor_graph(
                        make_ring(parse_ring_spec(o.spec), RingOptions{o.cap}),
                        o.cap)
                  : build_threshold_from_code(o.code);
    out.push_back(verify_quotient_divisibility(
        g, o.code.empty() ? o.spec : "code:" + o.code, ctx));
  } else {
    throw UsageError("claim " + id + " takes no parameters");
  }
  return out;
}

int cmd_verify(const Options& o, const std::vector<std::string>& argv) {
  const std::string started = utc_now();
  zdg::SuiteConfig config;
  config.cap = o.cap;
  config.suite = o.claim.empty() ? o.suite : o.claim;
  const auto ids = zdg::claim_ids();
  if (config.suite != "all" &&
      std::find(ids.begin(), ids.end(), config.suite) == ids.end()) {
    throw UsageError("unknown claim id '" + config.suite + "'");
  }
  if (!o.grid.empty()) apply_grid(o.grid, config);
  const bool targeted = !o.claim.empty() &&
                        (!o.p.empty() || !o.alpha.empty() || !o.q.empty() ||
                         !o.n.empty() || !o.spec.empty() || !o.code.empty());
  zdg::SuiteContext ctx;
  ctx.cap = o.cap;
  const std::vector<zdg::ClaimReport> reports =
      targeted ? run_targeted(o, ctx) : zdg::run_all(config);
  const std::string jsonl = zdg::reports_to_jsonl(reports);
  const std::string summary = zdg::reports_summary(reports);
  if (o.out.empty()) {
    std::cout << jsonl;
    std::cerr << summary;
  } else {
    const fs::path dir(o.out);
    fs::create_directories(dir);
    write_file(dir / "reports.jsonl", jsonl);
    write_file(dir / "summary.txt", summary);
    json manifest = {{"tool", "zdg"},
                     {"version", ZDG_VERSION},
                     {"command_line", argv},
                     {"config", config_json(config)},
                     {"started", started},
                     {"finished", utc_now()},
                     {"outputs", json::array()}};
    for (const auto& [name, data] :
         {std::pair{"reports.jsonl", &jsonl}, {"summary.txt", &summary}}) {
      manifest["outputs"].push_back({{"path", name},
                                     {"bytes", data->size()},
                                     {"sha256", sha256_hex(*data)}});
    }
    write_file(dir / "manifest.json", manifest.dump(2) + "\n");
    std::cerr << summary;
  }
  return zdg::suite_passed(reports) ? kExitOk : kExitInternal;
}

std::uint64_t default_cap() {
  if (const char* env = std::getenv("ZDG_CAP")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("ZDG_CAP is not a number: ") + env);
    }
  }
  return zdg::kDefaultSizeCap;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  Options o;
  try {
    o.cap = default_cap();
  } catch (const UsageError& e) {
    std::cerr << "zdg: " << e.what() << '\n';
    return kExitUsage;
  }

  CLI::App app{"Zero-divisor graphs of finite commutative rings"};
  app.set_version_flag("--version", ZDG_VERSION);
  app.require_subcommand(1);
  app.add_option("--cap", o.cap, "Maximum number of ring elements");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--cap", o.cap, "Maximum number of ring elements");
    sub->add_option("-o,--out", o.out, "Write output to this path");
  };

  auto* graph = app.add_subcommand("graph", "Build the zero-divisor graph");
  graph->add_option("input", o.input, "Ring expression or graph JSON file");
  graph->add_option("--code", o.code, "Threshold creation sequence");
  graph->add_flag("--dot", o.dot, "Emit Graphviz DOT");
  graph->add_flag("--json", o.json, "Emit JSON (default)");
  add_common(graph);

  auto* threshold = app.add_subcommand("threshold", "Threshold recognition");
  threshold->add_option("input", o.input, "Ring expression or graph JSON file");
  threshold->add_option("--code", o.code, "Threshold creation sequence");
  threshold->add_flag("--rebuild", o.rebuild, "Emit the graph built from --code");
  threshold->add_flag("--dot", o.dot, "With --rebuild, emit DOT");
  threshold->add_flag("--json", o.json, "JSON output (default)");
  add_common(threshold);

  auto* orbits = app.add_subcommand("orbits", "Vertex partitions");
  orbits->add_option("input", o.input, "Ring expression or graph JSON file");
  orbits->add_option("--code", o.code, "Threshold creation sequence");
  orbits->add_option("--method", o.method, "gcd, twin, aut or runs")
      ->check(CLI::IsMember({"gcd", "twin", "aut", "runs"}));
  add_common(orbits);

  auto* spectra = app.add_subcommand("spectra", "Exact quotient spectra");
  spectra->add_option("input", o.input, "Ring expression or graph JSON file");
  spectra->add_option("--code", o.code, "Threshold creation sequence");
  spectra->add_option("--partition", o.partition,
                      "auto, runs, gcd, twin, aut or a partition JSON file");
  add_common(spectra);

  auto* verify = app.add_subcommand("verify", "Run the theorem suite");
  verify->add_option("claim", o.claim, "Claim id");
  verify->add_option("--suite", o.suite, "all or a claim id");
  verify->add_option("--grid", o.grid, "Sweep grid, e.g. p=2:3:5,alpha=6,n=300,q=16");
  verify->add_option("--p", o.p, "Primes");
  verify->add_option("--alpha", o.alpha, "Exponents");
  verify->add_option("--q", o.q, "Field sizes");
  verify->add_option("--n", o.n, "Values of n");
  verify->add_option("--spec", o.spec, "Ring expression");
  verify->add_option("--code", o.code, "Threshold creation sequence");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*graph) return cmd_graph(o);
    if (*threshold) return cmd_threshold(o);
    if (*orbits) return cmd_orbits(o);
    if (*spectra) return cmd_spectra(o);
    if (*verify) return cmd_verify(o, args);
  } catch (const UsageError& e) {
    std::cerr << "zdg: " << e.what() << '\n';
    return kExitUsage;
  } catch (const zdg::SyntaxError& e) {
    std::cerr << "zdg: " << e.what() << '\n';
    return kExitUsage;
  } catch (const zdg::SemanticError& e) {
    std::cerr << "zdg: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "zdg: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
