#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "zdg/graph.hpp"
#include "zdg/ring.hpp"

namespace zdg {

enum class Verdict { kPass, kFail, kSkipped };

std::string to_string(Verdict v);

struct ClaimReport {
  std::string claim;
  // Parameter point in insertion order, values already rendered as JSON.
  std::vector<std::pair<std::string, std::string>> params;
  Verdict verdict = Verdict::kPass;
  // A failing informational claim is a reported finding, not a suite failure.
  bool informational = false;
  std::string payload;  // JSON object text, empty when there is nothing to say
  double seconds = 0.0;

  void param(const std::string& key, std::uint64_t value);
  void param(const std::string& key, const std::string& value);
};

// Called for every graph a check builds, so callers can reuse the corpus.
using GraphObserver = std::function<void(const Graph&)>;

struct SuiteContext {
  std::uint64_t cap = kDefaultSizeCap;
  GraphObserver on_graph;
};

ClaimReport verify_adjacency_lemma(std::uint64_t p, unsigned alpha,
                                   const SuiteContext& ctx = {});
ClaimReport verify_orbit_size_formulas(std::uint64_t p, unsigned alpha,
                                       const SuiteContext& ctx = {});
ClaimReport verify_join_decomposition(std::uint64_t p, unsigned alpha,
                                      const SuiteContext& ctx = {});

// Explicit orbit inventories of the named families against the exact
// automorphism orbits and the stated block sizes. Mismatches are
// informational findings, as for the Z_n orbit claim.
ClaimReport verify_family_orbits(const RingSpec& spec,
                                 const SuiteContext& ctx = {});

// One report per ring: positive direction for F_q and F_2 x F_q, negative for
// F_q1 x F_q2 (q1, q2 > 2) and three-field products.
std::vector<ClaimReport> verify_reduced_classification(
    const std::vector<std::uint64_t>& field_sizes,
    const SuiteContext& ctx = {});

// Threshold verdict plus the order formula for one ring of the named
// families (FamA, FamB, FamC, FamD, Z/p^alpha).
ClaimReport verify_local_family(const RingSpec& spec,
                                const SuiteContext& ctx = {});

// The three presentations of the order-16 threshold example: FamA(2,3),
// FamC(2) and Z/2[x]/(x^3).
ClaimReport verify_presentations(const SuiteContext& ctx = {});

// Every listed ring must give NotThreshold with a validated witness.
std::vector<ClaimReport> verify_nonthreshold_products(
    const std::vector<RingSpec>& specs, const SuiteContext& ctx = {});

// The explicit 2K2 on {x, 3x}, {2, 2+2x} in Z/4[x]/(x^2).
ClaimReport verify_counterexample_pair(const SuiteContext& ctx = {});

// Aut orbits of Gamma(Z_n) against the gcd classes. Mismatches are reported
// as informational findings; disagreement between the orbit oracle and the
// plain search (n <= 60) or permutation enumeration (n <= 9) is a failure.
ClaimReport verify_orbit_claim(std::uint64_t n, const SuiteContext& ctx = {});

// Quotient matrix, quotient and full characteristic polynomials and the
// multiplicities of 0 and -1 for the threshold graph 0000111001.
ClaimReport verify_figure1(const SuiteContext& ctx = {});
// Gcd classes, induced blocks, join reconstruction and orbits of Z_27.
ClaimReport verify_z27(const SuiteContext& ctx = {});

// For every equitable partition among gcd (Z/n only), twin, aut and
// threshold run-blocks: the quotient characteristic polynomial divides the
// adjacency characteristic polynomial exactly.
ClaimReport verify_quotient_divisibility(const Graph& g,
                                         const std::string& source,
                                         const SuiteContext& ctx = {});

struct SuiteConfig {
  std::vector<std::uint64_t> primes = {2, 3, 5};
  // FamC(p) and FamD(p) stay small enough to include p = 7.
  std::vector<std::uint64_t> small_family_primes = {2, 3, 5, 7};
  unsigned alpha_max = 64;  // further limited by the cap
  std::vector<std::uint64_t> field_sizes = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16};
  std::uint64_t orbit_n_max = 300;
  std::uint64_t cap = kDefaultSizeCap;
  std::uint64_t divisibility_n_max = 400;
  // Restrict to one claim id ("all" runs everything).
  std::string suite = "all";
};

std::vector<std::string> claim_ids();

std::vector<ClaimReport> run_all(const SuiteConfig& config,
                                 const GraphObserver& on_graph = {});

// true iff no non-informational claim failed.
bool suite_passed(const std::vector<ClaimReport>& reports);

// One JSON object per line; wall time is left out so the output is
// byte-identical across runs.
std::string reports_to_jsonl(const std::vector<ClaimReport>& reports);
// Per-claim counts and wall time, followed by every failure and finding.
std::string reports_summary(const std::vector<ClaimReport>& reports);

}  // namespace zdg
