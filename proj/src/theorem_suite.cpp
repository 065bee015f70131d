#include "zdg/theorem_suite.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "zdg/automorphism.hpp"
#include "zdg/errors.hpp"
#include "zdg/number_theory.hpp"
#include "zdg/ring_spec_parser.hpp"
#include "zdg/spectral.hpp"
#include "zdg/threshold.hpp"

namespace zdg {

using nlohmann::json;

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kSkipped:
      return "skipped";
  }
  return "fail";
}

void ClaimReport::param(const std::string& key, std::uint64_t value) {
  params.emplace_back(key, json(value).dump());
}

void ClaimReport::param(const std::string& key, const std::string& value) {
  params.emplace_back(key, json(value).dump());
}

namespace {

template <typename Body>
ClaimReport run_claim(ClaimReport report, Body&& body) {
  const auto start = std::chrono::steady_clock::now();
  json payload = json::object();
  try {
    body(report, payload);
  } catch (const SizeCapExceeded& e) {
    report.verdict = Verdict::kSkipped;
    payload["skipped"] = e.what();
  } catch (const OracleCapExceeded& e) {
    report.verdict = Verdict::kSkipped;
    payload["skipped"] = e.what();
  } catch (const std::exception& e) {
    report.verdict = Verdict::kFail;
    payload["error"] = e.what();
  }
  if (!payload.empty()) report.payload = payload.dump();
  report.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

ClaimReport make_report(const std::string& claim) {
  ClaimReport r;
  r.claim = claim;
  return r;
}

struct Built {
  Ring ring;
  Graph graph;
};

Built build(const RingSpec& spec, const SuiteContext& ctx) {
  Ring ring = make_ring(spec, RingOptions{ctx.cap});
  Graph g = build_zero_divisor_graph(ring, ctx.cap);
  if (ctx.on_graph) ctx.on_graph(g);
  return {std::move(ring), std::move(g)};
}

std::uint64_t prime_power(std::uint64_t p, unsigned alpha, std::uint64_t cap) {
  const auto n = checked_pow(p, alpha);
  if (!n || *n > cap) throw SizeCapExceeded(n.value_or(UINT64_MAX), cap);
  return *n;
}

// Canonical form of a partition: block id per vertex, numbered by first
// appearance.
std::vector<std::size_t> canonical_ids(const Partition& p, std::size_t n) {
  const auto owner = p.block_of(n);
  std::map<std::size_t, std::size_t> rename;
  std::vector<std::size_t> out(n);
  for (std::size_t v = 0; v < n; ++v) {
    out[v] = rename.try_emplace(owner[v], rename.size()).first->second;
  }
  return out;
}

bool same_partition(const Partition& a, const Partition& b, std::size_t n) {
  return canonical_ids(a, n) == canonical_ids(b, n);
}

json witness_json(const Graph& g, const AlternatingFourCycle& w) {
  return {{"a", g.label(w.a)},
          {"b", g.label(w.b)},
          {"c", g.label(w.c)},
          {"d", g.label(w.d)},
          {"shape", to_string(w.shape)}};
}

json runs_json(const CreationSequence& code) {
  json out = json::array();
  for (auto [s, t] : code.runs()) out.push_back({s, t});
  return out;
}

}  // namespace

ClaimReport verify_adjacency_lemma(std::uint64_t p, unsigned alpha,
                                   const SuiteContext& ctx) {
  ClaimReport r = make_report("adjacency");
  r.param("p", p);
  r.param("alpha", alpha);
  return run_claim(std::move(r), [&](ClaimReport& rep, json& payload) {
    const std::uint64_t n = prime_power(p, alpha, ctx.cap);
    const Built b = build(spec::Zn{n}, ctx);
    std::vector<unsigned> val(n);
    val[0] = alpha;
    for (std::uint64_t x = 1; x < n; ++x) val[x] = valuation(x, p);
    std::uint64_t pairs = 0;
    std::uint64_t violations = 0;
    json examples = json::array();
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y = x + 1; y < n; ++y) {
        ++pairs;
        const bool predicted = val[x] + val[y] >= alpha;
        if (b.graph.adjacent(x, y) != predicted) {
          if (++violations <= 5) examples.push_back({x, y});
        }
      }
    }
    payload["pairs"] = pairs;
    if (violations > 0) {
      rep.verdict = Verdict::kFail;
      payload["violations"] = violations;
      payload["examples"] = examples;
    }
  });
}

ClaimReport verify_orbit_size_formulas(std::uint64_t p, unsigned alpha,
                                       const SuiteContext& ctx) {
  ClaimReport r = make_report("orbit_sizes");
  r.param("p", p);
  r.param("alpha", alpha);
  return run_claim(std::move(r), [&](ClaimReport& rep, json& payload) {
    const std::uint64_t n = prime_power(p, alpha, ctx.cap);
    const Built b = build(spec::Zn{n}, ctx);
    const Partition gcd = gcd_class_partition(b.ring);
    const auto inventory = orbit_block_classification(p, alpha, ctx.cap);
    json mismatches = json::array();
    json sizes = json::array();
    std::uint64_t total = 0;
    if (gcd.blocks.size() != inventory.size()) {
      mismatches.push_back("block count differs from alpha + 1");
    }
    for (std::size_t i = 0; i < std::min(gcd.blocks.size(), inventory.size());
         ++i) {
      const Block& blk = gcd.blocks[i];
      sizes.push_back(blk.vertices.size());
      total += inventory[i].size;
      if (blk.vertices.size() != inventory[i].size) {
        mismatches.push_back(blk.label + " has " +
                             std::to_string(blk.vertices.size()) +
                             " elements, formula gives " +
                             std::to_string(inventory[i].size));
      }
      const Graph induced = induced_subgraph(b.graph, blk.vertices);
      const std::size_t k = blk.vertices.size();
      const std::size_t edges = induced.edge_count();
      const bool complete = edges == k * (k - 1) / 2;
      const bool independent = edges == 0;
      const bool ok = inventory[i].kind == BlockKind::kComplete ? complete
                                                                 : independent;
      if (!ok) mismatches.push_back(blk.label + " has the wrong block type");
    }
    if (total != n) mismatches.push_back("formula sizes do not sum to p^alpha");
    if (!refines(gcd, twin_partition(b.graph), n)) {
      mismatches.push_back("gcd classes do not refine the twin classes");
    }
    payload["sizes"] = sizes;
    if (!mismatches.empty()) {
      rep.verdict = Verdict::kFail;
      payload["mismatches"] = mismatches;
    }
  });
}

namespace {

// Skeleton on the valuation blocks 0..alpha: i ~ j (i != j) iff i + j >= alpha.
JoinSkeleton valuation_skeleton(std::uint64_t p, unsigned alpha,
                                const SuiteContext& ctx) {
  const auto inventory = orbit_block_classification(p, alpha, ctx.cap);
  JoinSkeleton sk{Graph(alpha + 1), {}};
  for (unsigned i = 0; i <= alpha; ++i) {
    for (unsigned j = i + 1; j <= alpha; ++j) {
      if (i + j >= alpha) sk.skeleton.add_edge(i, j);
    }
  }
  for (const auto& info : inventory) {
    sk.parts.push_back(info.kind == BlockKind::kComplete
                           ? complete_graph(info.size)
                           : empty_graph(info.size));
  }
  return sk;
}

}  // namespace

ClaimReport verify_join_decomposition(std::uint64_t p, unsigned alpha,
                                      const SuiteContext& ctx) {
  ClaimReport r = make_report("join");
  r.param("p", p);
  r.param("alpha", alpha);
  return run_claim(std::move(r), [&](ClaimReport& rep, json& payload) {
    const std::uint64_t n = prime_power(p, alpha, ctx.cap);
    const Built b = build(spec::Zn{n}, ctx);
    const Partition gcd = gcd_class_partition(b.ring);
    const Graph joined = generalized_join(valuation_skeleton(p, alpha, ctx));
    std::vector<Vertex> order;
    for (const Block& blk : gcd.blocks) {
      order.insert(order.end(), blk.vertices.begin(), blk.vertices.end());
    }
    const Graph relabeled = induced_subgraph(b.graph, order);
    payload["edges"] = b.graph.edge_count();
    if (!relabeled.same_edges(joined)) {
      rep.verdict = Verdict::kFail;
      std::size_t diff = 0;
      for (Vertex u = 0; u < n && u < joined.order(); ++u) {
        for (Vertex v = u + 1; v < n && v < joined.order(); ++v) {
          diff += relabeled.adjacent(u, v) != joined.adjacent(u, v) ? 1 : 0;
        }
      }
      payload["differing_pairs"] = diff;
      payload["join_order"] = joined.order();
    }
  });
}

namespace {

struct Inventory {
  std::vector<std::string> labels;
  std::vector<std::uint64_t> sizes;  // stated sizes
  std::vector<std::size_t> block;    // block index per element
};

Inventory family_inventory(const RingSpec& spec, const Ring& ring) {
  Inventory inv;
  const std::uint32_t n = ring.size();
  inv.block.resize(n);
  if (const auto* f = std::get_if<spec::FamA>(&spec.node)) {
    const std::uint64_t p = f->p;
    const unsigned alpha = f->alpha;
    for (unsigned i = 0; i <= alpha; ++i) {
      inv.labels.push_back("O_p^" + std::to_string(i));
      if (i + 2 <= alpha) {
        inv.sizes.push_back(euler_phi(*checked_pow(p, alpha + 1 - i)));
      } else if (i + 1 == alpha) {
        inv.sizes.push_back(p * p - 1);
      } else {
        inv.sizes.push_back(1);
      }
    }
    for (Element e = 0; e < n; ++e) {
      const auto c = ring.decode(e);
      const unsigned v = c[0] == 0 ? alpha : valuation(c[0], p);
      if (e == 0) {
        inv.block[e] = alpha;
      } else if (v + 2 <= alpha) {
        inv.block[e] = v;
      } else {
        inv.block[e] = alpha - 1;
      }
    }
    return inv;
  }
  if (const auto* f = std::get_if<spec::FamB>(&spec.node)) {
    const std::uint64_t p = f->p;
    for (std::uint64_t i = 0; i <= p; ++i) {
      inv.labels.push_back("O_x^" + std::to_string(i));
      inv.sizes.push_back(i == p ? 1
                                 : euler_phi(*checked_pow(
                                       p, static_cast<unsigned>(p - i))));
    }
    for (Element e = 0; e < n; ++e) {
      const auto c = ring.decode(e);
      std::size_t i = 0;
      while (i < c.size() && c[i] == 0) ++i;
      inv.block[e] = i;
    }
    return inv;
  }
  if (const auto* f = std::get_if<spec::FamC>(&spec.node)) {
    const std::uint64_t p = f->p;
    inv.labels = {"O_1", "O_x", "O_y", "O_0"};
    inv.sizes = {p * p * p * p - p * p * p, p * p * p - p * p, p * p - 1, 1};
    for (Element e = 0; e < n; ++e) {
      const auto c = ring.decode(e);  // a0, a1, a2, b1
      if (c[0] != 0) {
        inv.block[e] = 0;
      } else if (c[1] != 0) {
        inv.block[e] = 1;
      } else if (e != 0) {
        inv.block[e] = 2;
      } else {
        inv.block[e] = 3;
      }
    }
    return inv;
  }
  if (const auto* f = std::get_if<spec::FamD>(&spec.node)) {
    const std::uint64_t p = f->p;
    inv.labels = {"O_1", "O_x", "O_p", "O_0"};
    inv.sizes = {p * p * p - p * p, p * p - p, p - 1, 1};
    for (Element e = 0; e < n; ++e) {
      const auto c = ring.decode(e);  // a in Z_{p^2}, b in Z_p
      if (c[0] % p != 0) {
        inv.block[e] = 0;
      } else if (c[1] != 0) {
        inv.block[e] = 1;
      } else if (e != 0) {
        inv.block[e] = 2;
      } else {
        inv.block[e] = 3;
      }
    }
    return inv;
  }
  throw WrongRingKind("orbit inventories exist for FamA, FamB, FamC, FamD");
}

}  // namespace

ClaimReport verify_family_orbits(const RingSpec& spec,
                                 const SuiteContext& ctx) {
  ClaimReport r = make_report("family_orbits");
  r.param("spec", render_ring_spec(spec));
  r.informational = true;
  return run_claim(std::move(r), [&](ClaimReport& rep, json& payload) {
    const Built b = build(spec, ctx);
    const Inventory inv = family_inventory(spec, b.ring);
    const std::size_t n = b.graph.order();
    std::vector<std::uint64_t> counted(inv.sizes.size(), 0);
    for (std::size_t blk : inv.block) ++counted[blk];
    json mismatches = json::array();
    for (std::size_t i = 0; i < inv.sizes.size(); ++i) {
      if (counted[i] != inv.sizes[i]) {
        mismatches.push_back(inv.labels[i] + " has " +
                             std::to_string(counted[i]) +
                             " elements, stated size " +
                             std::to_string(inv.sizes[i]));
      }
    }
    Partition stated = partition_from_ids(inv.block, PartitionKind::kCustom);
    const Partition orbits = aut_orbits(b.graph);
    payload["stated_sizes"] = inv.sizes;
    payload["orbit_sizes"] = orbits.sizes();
    if (!same_partition(stated, orbits, n)) {
      mismatches.push_back("stated blocks differ from the automorphism orbits");
    }
    if (!mismatches.empty()) {
      rep.verdict = Verdict::kFail;
      payload["mismatches"] = mismatches;
    }
  });
}

std::vector<ClaimReport> verify_reduced_classification(
    const std::vector<std::uint64_t>& field_sizes, const SuiteContext& ctx) {
  std::vector<ClaimReport> out;
  auto field = [](std::uint64_t q) -> RingSpec {
    const auto pk = as_prime_power(q);
    if (!pk) throw SemanticError(1, std::to_string(q) + " is not a prime power");
    return spec::GF{pk->first, pk->second};
  };
  auto check = [&](const RingSpec& spec, bool expect_threshold) {
    ClaimReport r = make_report("reduced");
    r.param("spec", render_ring_spec(spec));
    r.param("expect", expect_threshold ? "threshold" : "not_threshold");
    out.push_back(run_claim(std::move(r), [&](ClaimReport& rep, json& payload) {
      const Built b = build(spec, ctx);
      const ThresholdAnalysis a = analyze_threshold(b.graph);
      if (a.verdict.is_threshold()) {
        payload["code_runs"] = runs_json(a.verdict.code());
        if (!expect_threshold) rep.verdict = Verdict::kFail;
        if (!validate_code(b.graph, a.verdict.code(), a.order)) {
          rep.verdict = Verdict::kFail;
          payload["invalid_certificate"] = true;
        }
      } else {
        payload["witness"] = witness_json(b.graph, a.verdict.witness());
        if (expect_threshold) rep.verdict = Verdict::kFail;
        if (!validate_witness(b.graph, a.verdict.witness())) {
          rep.verdict = Verdict::kFail;
          payload["invalid_certificate"] = true;
        }
      }
    }));
  };
  std::vector<std::uint64_t> qs = field_sizes;
  std::sort(qs.begin(), qs.end());
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
  for (std::uint64_t q : qs) {
    check(field(q), true);
    check(spec::Product{{spec::Zn{2}, field(q)}}, true);
  }
  for (std::size_t i = 0; i < qs.size(); ++i) {
    for (std::size_t j = i; j < qs.size(); ++j) {
      if (qs[i] > 2 && qs[j] <= 9) {
        check(spec::Product{{field(qs[i]), field(qs[j])}}, false);
      }
    }
  }
  for (std::size_t i = 0; i < qs.size(); ++i) {
    for (std::size_t j = i; j < qs.size(); ++j) {
      for (std::size_t k = j; k < qs.size(); ++k) {
        if (qs[k] <= 4) {
          check(spec::Product{{field(qs[i]), field(qs[j]), field(qs[k])}},
                false);
        }
      }
    }
  }
  return out;
}

namespace {

std::uint64_t family_order(const RingSpec& spec) {
  if (const auto* f = std::get_if<spec::FamA>(&spec.node)) {
    return *checked_pow(f->p, f->alpha + 1);
  }
  if (const auto* f = std::get_if<spec::FamB>(&spec.node)) {
    return *checked_pow(f->p, static_cast<unsigned>(f->p));
  }
  if (const auto* f = std::get_if<spec::FamC>(&spec.node)) {
    return *checked_pow(f->p, 4);
  }
  if (const auto* f = std::get_if<spec::FamD>(&spec.node)) {
    return *checked_pow(f->p, 3);
  }
  if (const auto* f = std::get_if<spec::Zn>(&spec.node)) return f->n;
  throw WrongRingKind("not one of the local families");
}

}  // namespace

ClaimReport verify_local_family(const RingSpec& spec, const SuiteContext& ctx) {
  ClaimReport r = make_report("local");
  r.param("spec", render_ring_spec(spec));
  return run_claim(std::move(r), [&](ClaimReport& rep, json& payload) {
    const auto expected = analytic_size(spec);
    if (expected > ctx.cap) throw SizeCapExceeded(expected, ctx.cap);
    const Built b = build(spec, ctx);
    const std::uint64_t formula = family_order(spec);
    // Enumerate the element set through the coordinate form.
    std::set<std::vector<std::uint64_t>> distinct;
    bool round_trip = true;
    for (Element e = 0; e < b.ring.size(); ++e) {
      auto c = b.ring.decode(e);
      round_trip = round_trip && b.ring.encode(c) == e;
      distinct.insert(std::move(c));
    }
    payload["order"] = distinct.size();
    payload["formula"] = formula;
    if (distinct.size() != formula || !round_trip) {
      rep.verdict = Verdict::kFail;
    }
    const ThresholdAnalysis a = analyze_threshold(b.graph);
    if (!a.verdict.is_threshold()) {
      rep.verdict = Verdict::kFail;
      payload["witness"] = witness_json(b.graph, a.verdict.witness());
      return;
    }
    payload["code_runs"] = runs_json(a.verdict.code());
    if (!validate_code(b.graph, a.verdict.code(), a.order)) {
      rep.verdict = Verdict::kFail;
      payload["invalid_certificate"] = true;
    }
  });
}

ClaimReport verify_presentations(const SuiteContext& ctx) {
  ClaimReport r = make_report("presentations");
  r.param("specs", "FamA(2,3); FamC(2); Z/2[x]/(x^3)");
  return run_claim(std::move(r), [&](ClaimReport& rep, json& payload) {
    const RingSpec specs[3] = {spec::FamA{2, 3}, spec::FamC{2},
                               spec::MonicQuotient{spec::Zn{2}, {0, 0, 0, 1}}};
    std::vector<Graph> graphs;
    json results = json::object();
    for (const RingSpec& s : specs) {
      Built b = build(s, ctx);
      const ThresholdVerdict v = is_threshold(b.graph);
      results[render_ring_spec(s)] = {
          {"order", b.graph.order()},
          {"code", v.is_threshold() ? json(v.code().to_string()) : json()}};
      if (!v.is_threshold()) rep.verdict = Verdict::kFail;
      graphs.push_back(std::move(b.graph));
    }
    payload["results"] = results;
    const bool iso = are_isomorphic(graphs[0], graphs[1]);
    payload["order16_isomorphic"] = iso;
    if (!iso) rep.verdict = Verdict::kFail;
    if (graphs[2].order() != graphs[0].order()) {
      payload["finding"] =
          "Z/2[x]/(x^3) has order " + std::to_string(graphs[2].order()) +
          ", so it cannot give an isomorphic copy of the order-" +
          std::to_string(graphs[0].order()) + " graph";
    }
  });
}

std::vector<ClaimReport> verify_nonthreshold_products(
    const std::vector<RingSpec>& specs, const SuiteContext& ctx) {
  std::vector<ClaimReport> out;
  for (const RingSpec& spec : specs) {
    ClaimReport r = make_report("nonthreshold");
    r.param("spec", render_ring_spec(spec));
    out.push_back(run_claim(std::move(r), [&](ClaimReport& rep, json& payload) {
      const Built b = build(spec, ctx);
      const ThresholdVerdict v = is_threshold(b.graph);
      if (v.is_threshold()) {
        rep.verdict = Verdict::kFail;
        payload["code_runs"] = runs_json(v.code());
        return;
      }
      payload["witness"] = witness_json(b.graph, v.witness());
      if (!validate_witness(b.graph, v.witness())) {
        rep.verdict = Verdict::kFail;
        payload["invalid_certificate"] = true;
      }
    }));
  }
  return out;
}

ClaimReport verify_counterexample_pair(const SuiteContext& ctx) {
  ClaimReport r = make_report("counterexample");
  r.param("spec", "Z/4[x]/(x^2)");
  return run_claim(std::move(r), [&](ClaimReport& rep, json& payload) {
    const Built b = build(parse_ring_spec("Z/4[x]/(x^2)"), ctx);
    auto find = [&](const char* label) {
      const auto e = b.ring.find_label(label);
      if (!e) throw Error(std::string("no element labelled ") + label);
      return static_cast<Vertex>(*e);
    };
    AlternatingFourCycle w{find("x"), find("3x"), find("2"), find("2+2x"),
                           FourCycleShape::kTwoK2};
    const bool valid = validate_witness(b.graph, w);
    const bool all_cross_absent =
        !b.graph.adjacent(w.a, w.c) && !b.graph.adjacent(w.a, w.d) &&
        !b.graph.adjacent(w.b, w.c) && !b.graph.adjacent(w.b, w.d);
    const ThresholdVerdict v = is_threshold(b.graph);
    payload["pair_valid"] = valid && all_cross_absent;
    payload["recognizer"] =
        v.is_threshold() ? json("threshold")
                         : json(witness_json(b.graph, v.witness()));
    if (!valid || !all_cross_absent || v.is_threshold()) {
      rep.verdict = Verdict::kFail;
    }
  });
}

ClaimReport verify_orbit_claim(std::uint64_t n, const SuiteContext& ctx) {
  ClaimReport r = make_report("orbit_claim");
  r.param("n", n);
  r.informational = true;
  return run_claim(std::move(r), [&](ClaimReport& rep, json& payload) {
    const Built b = build(spec::Zn{n}, ctx);
    const Partition gcd = gcd_class_partition(b.ring);
    const Partition orbits = aut_orbits(b.graph);
    json checks = json::array({"refinement"});
    if (n <= 60) {
      checks.push_back("plain_search");
      if (!same_partition(orbits, brute_force_orbits(b.graph), n)) {
        rep.verdict = Verdict::kFail;
        rep.informational = false;
        payload["oracle_disagreement"] = "plain_search";
      }
    }
    if (n <= 9) {
      checks.push_back("permutations");
      if (!same_partition(orbits, permutation_orbits(b.graph), n)) {
        rep.verdict = Verdict::kFail;
        rep.informational = false;
        payload["oracle_disagreement"] = "permutations";
      }
    }
    payload["checked_by"] = checks;
    if (same_partition(orbits, gcd, n)) return;
    rep.verdict = Verdict::kFail;
    const auto owner = gcd.block_of(n);
    json merged = json::array();
    for (const Block& blk : orbits.blocks) {
      std::set<std::size_t> classes;
      for (Vertex v : blk.vertices) classes.insert(owner[v]);
      if (classes.size() < 2) continue;
      json group = json::array();
      for (std::size_t c : classes) group.push_back(gcd.blocks[c].label);
      merged.push_back(group);
    }
    payload["merged"] = merged;
  });
}

ClaimReport verify_figure1(const SuiteContext& ctx) {
  ClaimReport r = make_report("figure1");
  r.param("code", "0000111001");
  return run_claim(std::move(r), [&](ClaimReport& rep, json& payload) {
    const CreationSequence code = CreationSequence::parse("0000111001");
    const Graph g = build_threshold_from_code(code);
    if (ctx.on_graph) ctx.on_graph(g);
    const QuotientMatrix m = equitable_quotient_matrix(g, code.run_partition());
    const std::vector<std::vector<std::int64_t>> stated = {
        {0, 3, 0, 1}, {4, 2, 0, 1}, {0, 0, 0, 1}, {4, 3, 2, 0}};
    const IntPolynomial q = char_poly(m);
    const IntPolynomial full = adjacency_char_poly(g);
    const std::size_t m0 = eigenvalue_multiplicity(g, 0);
    const std::size_t m1 = eigenvalue_multiplicity(g, -1);
    const IntPolynomial expected_full =
        IntPolynomial::monomial(4) *
        IntPolynomial::linear(BigInt(-1)).pow(2) * q;
    const auto quotient = full.divide_exact(q);
    payload["matrix"] = m.a;
    payload["charpoly"] = q.to_string();
    payload["adjacency_charpoly"] = full.to_string();
    payload["m0"] = m0;
    payload["m1"] = m1;
    const bool ok = m.a == stated &&
                    q.to_string() == "x^4-2x^3-21x^2-12x+24" && m0 == 4 &&
                    m1 == 2 && full == expected_full && quotient &&
                    *quotient == IntPolynomial::monomial(4) *
                                     IntPolynomial::linear(BigInt(-1)).pow(2);
    if (!ok) rep.verdict = Verdict::kFail;
  });
}

ClaimReport verify_z27(const SuiteContext& ctx) {
  ClaimReport r = make_report("z27");
  r.param("n", 27);
  return run_claim(std::move(r), [&](ClaimReport& rep, json& payload) {
    const Built b = build(spec::Zn{27}, ctx);
    const Partition gcd = gcd_class_partition(b.ring);
    json mismatches = json::array();
    if (gcd.sizes() != std::vector<std::size_t>{18, 6, 2, 1}) {
      mismatches.push_back("gcd class sizes");
    }
    if (gcd.blocks.size() == 4 &&
        gcd.blocks[1].vertices != std::vector<Vertex>{3, 6, 12, 15, 21, 24}) {
      mismatches.push_back("A_3 membership");
    }
    const std::size_t expected_edges[4] = {0, 0, 1, 0};
    for (std::size_t i = 0; i < gcd.blocks.size() && i < 4; ++i) {
      const Graph part = induced_subgraph(b.graph, gcd.blocks[i].vertices);
      if (part.edge_count() != expected_edges[i]) {
        mismatches.push_back("induced block " + gcd.blocks[i].label);
      }
    }
    const Graph joined = generalized_join(valuation_skeleton(3, 3, ctx));
    std::vector<Vertex> order;
    for (const Block& blk : gcd.blocks) {
      order.insert(order.end(), blk.vertices.begin(), blk.vertices.end());
    }
    if (!induced_subgraph(b.graph, order).same_edges(joined)) {
      mismatches.push_back("join reconstruction");
    }
    if (!same_partition(aut_orbits(b.graph), gcd, 27)) {
      mismatches.push_back("automorphism orbits");
    }
    payload["sizes"] = gcd.sizes();
    if (!mismatches.empty()) {
      rep.verdict = Verdict::kFail;
      payload["mismatches"] = mismatches;
    }
  });
}

ClaimReport verify_quotient_divisibility(const Graph& g,
                                         const std::string& source,
                                         const SuiteContext& ctx) {
  ClaimReport r = make_report("divisibility");
  r.param("graph", source);
  r.param("n", g.order());
  (void)ctx;
  return run_claim(std::move(r), [&](ClaimReport& rep, json& payload) {
    const IntPolynomial full = adjacency_char_poly(g);
    const SpectralFactorization fac = factor_zero_minus_one(full);
    payload["m0"] = fac.m0;
    payload["m1"] = fac.m1;
    if (fac.rest.evaluate(0) == 0 || fac.rest.evaluate(-1) == 0 ||
        fac.m0 + fac.m1 + static_cast<std::size_t>(fac.rest.degree()) !=
            g.order() ||
        !full.is_monic()) {
      rep.verdict = Verdict::kFail;
      payload["factorization_inconsistent"] = true;
    }
    std::vector<std::pair<std::string, Partition>> partitions;
    if (g.provenance()) {
      try {
        const RingSpec spec = parse_ring_spec(*g.provenance());
        if (std::holds_alternative<spec::Zn>(spec.node)) {
          partitions.emplace_back("gcd", gcd_class_partition(make_ring(spec)));
        }
      } catch (const Error&) {
      }
    }
    partitions.emplace_back("twin", twin_partition(g));
    partitions.emplace_back("aut", aut_orbits(g));
    const ThresholdAnalysis a = analyze_threshold(g);
    if (a.verdict.is_threshold()) {
      Partition runs = a.verdict.code().run_partition();
      for (Block& blk : runs.blocks) {
        for (Vertex& v : blk.vertices) v = a.order[v];
        std::sort(blk.vertices.begin(), blk.vertices.end());
      }
      partitions.emplace_back("runs", std::move(runs));
    }
    json outcome = json::object();
    for (const auto& [name, part] : partitions) {
      QuotientMatrix m;
      try {
        m = equitable_quotient_matrix(g, part);
      } catch (const NotEquitable&) {
        outcome[name] = "not_equitable";
        continue;
      } catch (const MixedBlock&) {
        outcome[name] = "mixed_block";
        continue;
      }
      const IntPolynomial q = char_poly(m);
      const BigInt det = determinant(m.to_big());
      const bool det_ok =
          q.evaluate(0) == (m.dimension() % 2 == 0 ? det : BigInt(-det));
      const bool divides = full.divide_exact(q).has_value();
      outcome[name] = divides && det_ok ? "divides" : "FAILS";
      if (!divides || !det_ok) rep.verdict = Verdict::kFail;
    }
    payload["partitions"] = outcome;
  });
}

std::vector<std::string> claim_ids() {
  return {"figure1",      "z27",        "counterexample", "presentations",
          "adjacency",    "orbit_sizes", "join",          "family_orbits",
          "local",        "reduced",    "nonthreshold",   "orbit_claim",
          "divisibility"};
}

namespace {

// Products of >= 2 local non-field rings (total size <= limit) and mixed
// products of one such ring with one field.
std::vector<RingSpec> default_nonthreshold_specs(std::uint64_t limit) {
  const std::vector<RingSpec> local = {
      spec::Zn{4}, spec::Zn{8}, spec::Zn{9},
      spec::MonicQuotient{spec::Zn{4}, {0, 0, 1}}, spec::FamA{2, 2}};
  std::vector<RingSpec> out;
  out.push_back(local[3]);
  std::vector<std::size_t> pick;
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t from,
                                                            std::uint64_t size) {
    if (pick.size() >= 2) {
      spec::Product prod;
      for (std::size_t i : pick) prod.factors.push_back(local[i]);
      out.push_back(normalize(RingSpec{std::move(prod)}));
    }
    for (std::size_t i = from; i < local.size(); ++i) {
      const std::uint64_t next = size * analytic_size(local[i]);
      if (next > limit) continue;
      pick.push_back(i);
      rec(i, next);
      pick.pop_back();
    }
  };
  rec(0, 1);
  for (const RingSpec& l : local) {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
      const auto pk = as_prime_power(q);
      out.push_back(spec::Product{{l, spec::GF{pk->first, pk->second}}});
    }
  }
  return out;
}

bool wanted(const SuiteConfig& c, const std::string& id) {
  return c.suite == "all" || c.suite == id;
}

}  // namespace

std::vector<ClaimReport> run_all(const SuiteConfig& config,
                                 const GraphObserver& on_graph) {
  std::vector<ClaimReport> out;
  std::map<std::string, Graph> small;  // divisibility corpus keyed by source
  SuiteContext ctx;
  ctx.cap = config.cap;
  ctx.on_graph = [&](const Graph& g) {
    if (on_graph) on_graph(g);
    if (wanted(config, "divisibility") && g.order() <= config.divisibility_n_max) {
      small.try_emplace(g.provenance().value_or("graph"), g);
    }
  };
  auto add = [&](ClaimReport r) {
    if (wanted(config, r.claim)) out.push_back(std::move(r));
  };
  auto add_all = [&](std::vector<ClaimReport> rs) {
    for (auto& r : rs) add(std::move(r));
  };
  // A divisibility-only run still builds the other claims' graphs as corpus.
  auto runs = [&](const std::string& id) {
    return wanted(config, id) || config.suite == "divisibility";
  };
  const std::uint64_t lemma_limit = std::min<std::uint64_t>(config.cap, 3000);

  if (runs("figure1")) add(verify_figure1(ctx));
  if (runs("z27")) add(verify_z27(ctx));
  if (runs("counterexample")) add(verify_counterexample_pair(ctx));
  if (runs("presentations")) add(verify_presentations(ctx));
  for (std::uint64_t p : config.primes) {
    for (unsigned alpha = 1; alpha <= config.alpha_max; ++alpha) {
      const auto n = checked_pow(p, alpha);
      if (!n || *n > lemma_limit) break;
      if (runs("adjacency")) add(verify_adjacency_lemma(p, alpha, ctx));
      if (runs("orbit_sizes")) {
        add(verify_orbit_size_formulas(p, alpha, ctx));
      }
      if (runs("join")) add(verify_join_decomposition(p, alpha, ctx));
    }
  }
  if (runs("family_orbits") || runs("local")) {
    std::vector<RingSpec> families;
    for (std::uint64_t p : config.primes) {
      for (unsigned alpha = 1; alpha <= config.alpha_max; ++alpha) {
        const auto n = checked_pow(p, alpha + 1);
        if (!n || *n > config.cap) break;
        families.push_back(spec::FamA{p, alpha});
      }
      const RingSpec fam_b = spec::FamB{p};
      if (analytic_size(fam_b) <= config.cap) families.push_back(fam_b);
    }
    for (std::uint64_t p : config.small_family_primes) {
      for (const RingSpec& s : {RingSpec{spec::FamC{p}}, RingSpec{spec::FamD{p}}}) {
        if (analytic_size(s) <= config.cap) families.push_back(s);
      }
    }
    for (const RingSpec& s : families) {
      if (!runs("family_orbits")) break;
      add(verify_family_orbits(s, ctx));
    }
    for (const RingSpec& s : families) {
      if (!runs("local")) break;
      add(verify_local_family(s, ctx));
    }
    if (runs("local")) {
      for (std::uint64_t p : config.primes) {
        for (unsigned alpha = 1; alpha <= config.alpha_max; ++alpha) {
          const auto n = checked_pow(p, alpha);
          if (!n || *n > config.cap) break;
          add(verify_local_family(spec::Zn{*n}, ctx));
        }
      }
    }
  }
  if (runs("reduced")) {
    add_all(verify_reduced_classification(config.field_sizes, ctx));
  }
  if (runs("nonthreshold")) {
    add_all(verify_nonthreshold_products(
        default_nonthreshold_specs(std::min<std::uint64_t>(config.cap, 10000)),
        ctx));
  }
  if (runs("orbit_claim")) {
    for (std::uint64_t n = 2; n <= config.orbit_n_max; ++n) {
      add(verify_orbit_claim(n, ctx));
    }
  }
  if (wanted(config, "divisibility")) {
    for (const auto& [source, g] : small) {
      add(verify_quotient_divisibility(g, source, ctx));
    }
  }
  return out;
}

bool suite_passed(const std::vector<ClaimReport>& reports) {
  return std::none_of(reports.begin(), reports.end(), [](const ClaimReport& r) {
    return r.verdict == Verdict::kFail && !r.informational;
  });
}

std::string reports_to_jsonl(const std::vector<ClaimReport>& reports) {
  std::string out;
  for (const ClaimReport& r : reports) {
    json params = json::object();
    for (const auto& [k, v] : r.params) params[k] = json::parse(v);
    json line = {{"claim", r.claim},
                 {"params", params},
                 {"verdict", to_string(r.verdict)},
                 {"informational", r.informational}};
    line["payload"] = r.payload.empty() ? json() : json::parse(r.payload);
    out += line.dump();
    out += '\n';
  }
  return out;
}

std::string reports_summary(const std::vector<ClaimReport>& reports) {
  struct Row {
    std::size_t pass = 0, fail = 0, finding = 0, skipped = 0;
    double seconds = 0;
  };
  std::vector<std::string> order;
  std::map<std::string, Row> rows;
  for (const ClaimReport& r : reports) {
    if (!rows.count(r.claim)) order.push_back(r.claim);
    Row& row = rows[r.claim];
    row.seconds += r.seconds;
    if (r.verdict == Verdict::kPass) {
      ++row.pass;
    } else if (r.verdict == Verdict::kSkipped) {
      ++row.skipped;
    } else if (r.informational) {
      ++row.finding;
    } else {
      ++row.fail;
    }
  }
  std::ostringstream os;
  os << std::left << std::setw(16) << "claim" << std::right << std::setw(7)
     << "pass" << std::setw(7) << "fail" << std::setw(9) << "finding"
     << std::setw(9) << "skipped" << std::setw(11) << "seconds" << '\n';
  for (const std::string& id : order) {
    const Row& row = rows[id];
    os << std::left << std::setw(16) << id << std::right << std::setw(7)
       << row.pass << std::setw(7) << row.fail << std::setw(9) << row.finding
       << std::setw(9) << row.skipped << std::setw(11) << std::fixed
       << std::setprecision(3) << row.seconds << '\n';
  }
  for (const ClaimReport& r : reports) {
    if (r.verdict != Verdict::kFail) continue;
    os << (r.informational ? "finding " : "FAIL    ") << r.claim;
    for (const auto& [k, v] : r.params) os << ' ' << k << '=' << v;
    os << ' ' << r.payload << '\n';
  }
  os << (suite_passed(reports) ? "suite passed" : "suite FAILED") << '\n';
  return os.str();
}

}  // namespace zdg
