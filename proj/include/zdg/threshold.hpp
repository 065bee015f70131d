#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "zdg/graph.hpp"

namespace zdg {

// Binary code b_1 ... b_n: vertex i was added isolated (0) or dominating (1).
// The first vertex is always recorded as 0.
class CreationSequence {
 public:
  CreationSequence() = default;
  explicit CreationSequence(std::vector<bool> bits);

  // Accepts a bare {0,1} string. Throws MalformedCode on other characters,
  // on an empty code, or on a leading 1.
  static CreationSequence parse(std::string_view text);
  // From runs (s_1, t_1), ..., (s_k, t_k): 0^{s_1} 1^{t_1} ... ; t_k may be 0.
  static CreationSequence from_runs(
      const std::vector<std::pair<std::size_t, std::size_t>>& runs);

  const std::vector<bool>& bits() const { return bits_; }
  std::size_t size() const { return bits_.size(); }
  std::string to_string() const;
  std::vector<std::pair<std::size_t, std::size_t>> runs() const;

  // Maximal runs of equal bits as vertex blocks of the built graph, in code
  // order: {0..s_1-1}, {s_1..s_1+t_1-1}, ...
  Partition run_partition() const;

  bool operator==(const CreationSequence&) const = default;

 private:
  std::vector<bool> bits_;
};

enum class FourCycleShape { kP4, kC4, kTwoK2 };

std::string to_string(FourCycleShape shape);

// {a,b} and {c,d} are edges, {a,c} and {b,d} are not.
struct AlternatingFourCycle {
  Vertex a = 0, b = 0, c = 0, d = 0;
  FourCycleShape shape = FourCycleShape::kTwoK2;
  bool operator==(const AlternatingFourCycle&) const = default;
};

struct ThresholdVerdict {
  std::variant<CreationSequence, AlternatingFourCycle> certificate;

  bool is_threshold() const {
    return std::holds_alternative<CreationSequence>(certificate);
  }
  const CreationSequence& code() const {
    return std::get<CreationSequence>(certificate);
  }
  const AlternatingFourCycle& witness() const {
    return std::get<AlternatingFourCycle>(certificate);
  }
};

// Strips isolated / dominating vertices, lowest index first; on a stall,
// extracts a witness from the remaining graph.
ThresholdVerdict is_threshold(const Graph& g);

// Lexicographically first (a, b, c, d) by direct search; twins beyond the
// second member of each twin class are skipped, which never hides the first
// witness. Independent of the stripping recognizer.
std::optional<AlternatingFourCycle> find_alternating_four_cycle(const Graph& g);

// Throws NotThresholdError when g has an alternating 4-cycle.
CreationSequence creation_sequence(const Graph& g);

// Vertex i carries bit i; vertex 0 is the starting K_1.
Graph build_threshold_from_code(const CreationSequence& code);
Graph build_threshold_from_code(std::string_view code);

// Checks the four vertices are distinct, the edge / non-edge pattern and the
// recorded shape against g.
bool validate_witness(const Graph& g, const AlternatingFourCycle& w);

// The shape the induced subgraph on the witness actually has.
FourCycleShape classify_shape(const Graph& g, Vertex a, Vertex b, Vertex c,
                              Vertex d);

// Checks that `code` rebuilds to a graph isomorphic to g. For n <= 12 this
// runs the exact isomorphism search; above that it replays the stripping order
// stored in `order` (vertex of g added at each step) and compares degree
// sequences, which is also exact given a valid replay.
bool validate_code(const Graph& g, const CreationSequence& code,
                   const std::vector<Vertex>& order);

// Full result including the construction order of the stripping run.
struct ThresholdAnalysis {
  ThresholdVerdict verdict;
  std::vector<Vertex> order;  // g's vertex added at step i (threshold only)
};
ThresholdAnalysis analyze_threshold(const Graph& g);

// {"verdict": "threshold"|"not_threshold", "code": string|null,
//  "witness": {"a","b","c","d","shape"}|null}; witness vertices are given as
// indices plus their labels.
std::string verdict_to_json(const ThresholdVerdict& v, const Graph& g);

}  // namespace zdg
