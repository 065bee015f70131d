// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "oracles.hpp"
#include "zdg/automorphism.hpp"
#include "zdg/number_theory.hpp"
#include "zdg/ring_spec_parser.hpp"
#include "zdg/spectral.hpp"
#include "zdg/theorem_suite.hpp"
#include "zdg/threshold.hpp"

namespace {

using namespace zdg;
using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

int failures = 0;

void report(int id, const std::string& name, bool ok, double seconds,
            double limit, const std::string& detail) {
  const bool in_time = limit <= 0 || seconds < limit;
  const bool pass = ok && in_time;
  if (!pass) ++failures;
  std::printf("%s criterion %d (%s): %.3fs", pass ? "PASS" : "FAIL", id,
              name.c_str(), seconds);
  if (limit > 0) std::printf(" (limit %.0fs)", limit);
  std::printf(" %s", detail.c_str());
  if (ok && !in_time) std::printf(" [over time limit]");
  std::printf("\n");
  std::fflush(stdout);
}

// Corpus shared by criteria 8 and 10. Every graph built by criteria 3-7 is
// checked against the four-cycle oracle as it is produced; small graphs are
// kept for the divisibility check.
struct Corpus {
  std::size_t graphs = 0;
  std::size_t threshold = 0;
  std::size_t disagreements = 0;
  std::size_t bad_certificates = 0;
  double seconds = 0;  // excluded from the per-criterion timings
  std::map<std::string, Graph> small;

  void observe(const Graph& g) {
    const auto start = Clock::now();
    ++graphs;
    const ThresholdAnalysis a = analyze_threshold(g);
    const bool oracle_threshold = !find_alternating_four_cycle(g).has_value();
    if (a.verdict.is_threshold() != oracle_threshold) ++disagreements;
    if (a.verdict.is_threshold()) {
      ++threshold;
      if (!validate_code(g, a.verdict.code(), a.order)) ++bad_certificates;
      if (g.order() <= 12 &&
          !are_isomorphic(g, build_threshold_from_code(a.verdict.code()))) {
        ++bad_certificates;
      }
    } else if (!validate_witness(g, a.verdict.witness())) {
      ++bad_certificates;
    }
    if (g.order() <= 400) {
      small.try_emplace(g.provenance().value_or("graph"), g);
    }
    seconds += since(start);
  }
};

Corpus corpus;

SuiteContext observed() {
  SuiteContext ctx;
  ctx.on_graph = [](const Graph& g) { corpus.observe(g); };
  return ctx;
}

std::string describe(const std::vector<ClaimReport>& bad) {
  std::ostringstream os;
  for (std::size_t i = 0; i < bad.size() && i < 3; ++i) {
    os << " [" << bad[i].claim;
    for (const auto& [k, v] : bad[i].params) os << ' ' << k << '=' << v;
    os << ' ' << bad[i].payload << ']';
  }
  return os.str();
}

void criterion1() {
  const auto start = Clock::now();
  const CreationSequence code = CreationSequence::parse("0000111001");
  const Graph g = build_threshold_from_code(code);
  const QuotientMatrix m = equitable_quotient_matrix(g, code.run_partition());
  const IntPolynomial q = char_poly(m);
  const IntPolynomial full = adjacency_char_poly(g);
  const auto cofactor = full.divide_exact(q);
  const std::size_t m0 = eigenvalue_multiplicity(g, 0);
  const std::size_t m1 = eigenvalue_multiplicity(g, -1);
  const bool ok =
      m.a == std::vector<std::vector<std::int64_t>>{
                 {0, 3, 0, 1}, {4, 2, 0, 1}, {0, 0, 0, 1}, {4, 3, 2, 0}} &&
      q.to_string() == "x^4-2x^3-21x^2-12x+24" && m0 == 4 && m1 == 2 &&
      cofactor &&
      *cofactor == IntPolynomial::monomial(4) *
                       IntPolynomial::linear(BigInt(-1)).pow(2);
  const double t = since(start);
  report(1, "code 0000111001 reproduction", ok, t, 1,
         "charpoly " + q.to_string() + ", m0=" + std::to_string(m0) +
             ", m1=" + std::to_string(m1) + ", full " + full.to_string());
}

void criterion2() {
  const auto start = Clock::now();
  const Ring r = make_ring(spec::Zn{27});
  const Graph g = build_zero_divisor_graph(r);
  const Partition gcd = gcd_class_partition(r);
  bool ok = gcd.sizes() == std::vector<std::size_t>{18, 6, 2, 1} &&
            gcd.blocks[1].vertices ==
                std::vector<Vertex>{3, 6, 12, 15, 21, 24} &&
            gcd.blocks[2].vertices == std::vector<Vertex>{9, 18} &&
            gcd.blocks[3].vertices == std::vector<Vertex>{0};
  const std::size_t edges[] = {0, 0, 1, 0};
  for (std::size_t i = 0; i < 4 && ok; ++i) {
    ok = induced_subgraph(g, gcd.blocks[i].vertices).edge_count() == edges[i];
  }
  Graph skeleton(4);
  for (unsigned i = 0; i < 4; ++i)
    for (unsigned j = i + 1; j < 4; ++j)
      if (i + j >= 3) skeleton.add_edge(i, j);
  const Graph joined = generalized_join(
      {skeleton,
       {empty_graph(18), empty_graph(6), complete_graph(2), complete_graph(1)}});
  std::vector<Vertex> order;
  for (const auto& b : gcd.blocks) {
    order.insert(order.end(), b.vertices.begin(), b.vertices.end());
  }
  const bool join_ok = induced_subgraph(g, order).same_edges(joined);
  const bool orbits_ok = oracle::as_set(aut_orbits(g)) == oracle::as_set(gcd);
  report(2, "Z_27 reproduction", ok && join_ok && orbits_ok, since(start), 1,
         std::string("classes 18/6/2/1, join ") + (join_ok ? "exact" : "differs") +
             ", orbits " + (orbits_ok ? "= gcd classes" : "differ"));
}

void criterion3() {
  const auto start = Clock::now();
  const double before = corpus.seconds;
  const SuiteContext ctx = observed();
  std::size_t powers = 0;
  std::uint64_t pairs = 0;
  std::vector<ClaimReport> bad;
  for (std::uint64_t p = 2; p <= 3000; ++p) {
    if (!is_prime(p)) continue;
    for (unsigned a = 1; checked_pow(p, a).value_or(UINT64_MAX) <= 3000; ++a) {
      ++powers;
      ClaimReport r = verify_adjacency_lemma(p, a, ctx);
      if (r.verdict != Verdict::kPass) {
        bad.push_back(std::move(r));
      } else {
        pairs += nlohmann::json::parse(r.payload)["pairs"].get<std::uint64_t>();
      }
    }
  }
  const double t = since(start) - (corpus.seconds - before);
  report(3, "adjacency lemma sweep", bad.empty(), t, 60,
         std::to_string(powers) + " prime powers, " + std::to_string(pairs) +
             " pairs, " + std::to_string(bad.size()) + " violating" +
             describe(bad));
}

void criterion4() {
  const auto start = Clock::now();
  const double before = corpus.seconds;
  const auto reports = verify_reduced_classification(
      {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}, observed());
  std::vector<ClaimReport> bad;
  for (const auto& r : reports) {
    if (r.verdict != Verdict::kPass) bad.push_back(r);
  }
  const double t = since(start) - (corpus.seconds - before);
  report(4, "reduced classification", bad.empty(), t, 60,
         std::to_string(reports.size()) + " rings, " +
             std::to_string(bad.size()) + " failing" + describe(bad));
}

void criterion5() {
  const auto start = Clock::now();
  const double before = corpus.seconds;
  const SuiteContext ctx = observed();
  std::vector<RingSpec> specs;
  for (std::uint64_t p : {2, 3, 5}) {
    for (unsigned a = 1; checked_pow(p, a + 1).value_or(UINT64_MAX) <= 100000;
         ++a) {
      specs.push_back(spec::FamA{p, a});
    }
    specs.push_back(spec::FamB{p});
  }
  for (std::uint64_t p : {2, 3, 5, 7}) {
    specs.push_back(spec::FamC{p});
    specs.push_back(spec::FamD{p});
    for (unsigned a = 1; checked_pow(p, a).value_or(UINT64_MAX) <= 100000; ++a) {
      specs.push_back(spec::Zn{*checked_pow(p, a)});
    }
  }
  std::vector<ClaimReport> bad;
  for (const RingSpec& s : specs) {
    ClaimReport r = verify_local_family(s, ctx);
    if (r.verdict != Verdict::kPass) bad.push_back(std::move(r));
  }
  ClaimReport pres = verify_presentations(ctx);
  if (pres.verdict != Verdict::kPass) bad.push_back(pres);
  const double t = since(start) - (corpus.seconds - before);
  report(5, "local families", bad.empty(), t, 300,
         std::to_string(specs.size()) + " rings plus presentations, " +
             std::to_string(bad.size()) + " failing" + describe(bad));
}

void criterion6() {
  const auto start = Clock::now();
  const double before = corpus.seconds;
  const ClaimReport r = verify_counterexample_pair(observed());
  const double t = since(start) - (corpus.seconds - before);
  report(6, "counterexample fidelity", r.verdict == Verdict::kPass, t, 1,
         r.payload);
}

void criterion7() {
  const auto start = Clock::now();
  const double before = corpus.seconds;
  const std::vector<RingSpec> local = {
      spec::Zn{4}, spec::Zn{8}, spec::Zn{9},
      parse_ring_spec("Z/4[x]/(x^2)"), spec::FamA{2, 2}};
  std::vector<RingSpec> specs = {local[3]};
  // Multisets of at least two local rings with total size <= 10 000.
  std::vector<std::size_t> pick;
  std::function<void(std::size_t, std::uint64_t)> grow =
      [&](std::size_t from, std::uint64_t size) {
        if (pick.size() >= 2) {
          spec::Product prod;
          for (std::size_t i : pick) prod.factors.push_back(local[i]);
          specs.push_back(std::move(prod));
        }
        for (std::size_t i = from; i < local.size(); ++i) {
          const std::uint64_t next = size * analytic_size(local[i]);
          if (next > 10000) continue;
          pick.push_back(i);
          grow(i, next);
          pick.pop_back();
        }
      };
  grow(0, 1);
  const std::size_t local_products = specs.size();
  for (const RingSpec& l : local) {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
      const auto pk = *as_prime_power(q);
      specs.push_back(spec::Product{{l, spec::GF{pk.first, pk.second}}});
    }
  }
  const auto reports = verify_nonthreshold_products(specs, observed());
  std::vector<ClaimReport> bad;
  for (const auto& r : reports) {
    if (r.verdict != Verdict::kPass) bad.push_back(r);
  }
  const double t = since(start) - (corpus.seconds - before);
  report(7, "non-threshold products", bad.empty(), t, 120,
         std::to_string(local_products) + " local products, " +
             std::to_string(specs.size() - local_products) +
             " mixed products, " + std::to_string(bad.size()) + " failing" +
             describe(bad));
}

void criterion8() {
  const auto start = Clock::now();
  std::mt19937_64 rng(20240601);
  std::size_t random_disagreements = 0;
  std::size_t random_bad = 0;
  std::size_t random_threshold = 0;
  for (int i = 0; i < 10000; ++i) {
    const std::size_t n = 1 + i % 12;
    const double density = std::uniform_real_distribution<double>(0, 1)(rng);
    const Graph g = oracle::random_graph(n, density, rng);
    const ThresholdAnalysis a = analyze_threshold(g);
    const bool brute = !oracle::has_alternating_four_cycle(g);
    const bool oracle_says = !find_alternating_four_cycle(g).has_value();
    if (a.verdict.is_threshold() != brute || oracle_says != brute) {
      ++random_disagreements;
    }
    if (a.verdict.is_threshold()) {
      ++random_threshold;
      if (!are_isomorphic(g, build_threshold_from_code(a.verdict.code()))) {
        ++random_bad;
      }
    } else if (!validate_witness(g, a.verdict.witness())) {
      ++random_bad;
    }
  }
  const std::size_t disagreements = corpus.disagreements + random_disagreements;
  const std::size_t bad = corpus.bad_certificates + random_bad;
  report(8, "oracle agreement", disagreements == 0 && bad == 0,
         since(start) + corpus.seconds, 0,
         std::to_string(corpus.graphs) + " corpus graphs (" +
             std::to_string(corpus.threshold) + " threshold), 10000 random (" +
             std::to_string(random_threshold) + " threshold), " +
             std::to_string(disagreements) + " disagreements, " +
             std::to_string(bad) + " invalid certificates");
}

void criterion9() {
  const auto start = Clock::now();
  std::vector<std::uint64_t> findings;
  std::vector<ClaimReport> broken;
  for (std::uint64_t n = 2; n <= 200; ++n) {
    ClaimReport r = verify_orbit_claim(n);
    if (r.verdict == Verdict::kPass) continue;
    if (r.verdict == Verdict::kFail && r.informational) {
      findings.push_back(n);
    } else {
      broken.push_back(std::move(r));
    }
  }
  // The n = 4 finding must be the A_1/A_2 merge, confirmed over all of S_4.
  const Graph z4 = build_zero_divisor_graph(make_ring(spec::Zn{4}));
  const bool z4_confirmed =
      oracle::orbits_by_permutations(z4) ==
      std::set<std::vector<Vertex>>{{0}, {1, 2, 3}};
  std::string list;
  for (auto n : findings) list += (list.empty() ? "" : ",") + std::to_string(n);
  std::string detail = "findings at n={" + list + "}, oracle disagreements " +
                       std::to_string(broken.size());
  if (findings != std::vector<std::uint64_t>{4}) {
    detail += "; expected a finding at n=4 only";
    if (!findings.empty() && findings[0] == 2) {
      detail += " (Gamma(Z_2)=K_2 also swaps A_1={1} and A_2={0})";
    }
  }
  report(9, "orbit-claim audit",
         broken.empty() && z4_confirmed && findings == std::vector<std::uint64_t>{4},
         since(start), 0, detail + describe(broken));
}

void criterion10() {
  const auto start = Clock::now();
  corpus.small.try_emplace("code:0000111001",
                           build_threshold_from_code("0000111001"));
  std::size_t pairs = 0;
  std::vector<ClaimReport> bad;
  for (const auto& [source, g] : corpus.small) {
    ClaimReport r = verify_quotient_divisibility(g, source);
    if (r.verdict != Verdict::kPass) {
      bad.push_back(std::move(r));
      continue;
    }
    const auto payload = nlohmann::json::parse(r.payload);
    for (const auto& outcome : payload["partitions"]) {
      if (outcome.get<std::string>() == "divides") ++pairs;
    }
  }
  report(10, "exact-division property", bad.empty(), since(start), 0,
         std::to_string(corpus.small.size()) + " graphs with n <= 400, " +
             std::to_string(pairs) + " equitable (graph, partition) pairs, " +
             std::to_string(bad.size()) + " failing" + describe(bad));
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
