#pragma once

#include <concepts>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

namespace zdg {

// Canonical element index in [0, |R|). Index 0 is always the ring zero.
using Element = std::uint32_t;

inline constexpr std::uint64_t kDefaultSizeCap = 100'000;

struct RingSpec;

namespace spec {

struct Zn {
  std::uint64_t n = 2;
  bool operator==(const Zn&) const = default;
};

// GF(p^k), built as Z_p[g] modulo the first monic irreducible of degree k.
struct GF {
  std::uint64_t p = 2;
  unsigned k = 1;
  bool operator==(const GF&) const = default;
};

// Z_n[x]/(f) with f monic; coefficients ascending, reduced mod n, and the
// leading coefficient is 1.
struct MonicQuotient {
  Zn base;
  std::vector<std::uint64_t> modulus;
  bool operator==(const MonicQuotient&) const = default;
};

// Z_{p^alpha}[x]/(x^2, px)
struct FamA {
  std::uint64_t p = 2;
  unsigned alpha = 1;
  bool operator==(const FamA&) const = default;
};

// Z_p[x]/(x^p)
struct FamB {
  std::uint64_t p = 2;
  bool operator==(const FamB&) const = default;
};

// Z_p[x,y]/(x^3, xy, y^2)
struct FamC {
  std::uint64_t p = 2;
  bool operator==(const FamC&) const = default;
};

// Z_{p^2}[x]/(px, x^2 - p)
struct FamD {
  std::uint64_t p = 2;
  bool operator==(const FamD&) const = default;
};

struct Product {
  std::vector<RingSpec> factors;
  bool operator==(const Product&) const;
};

}  // namespace spec

struct RingSpec {
  using Node = std::variant<spec::Zn, spec::GF, spec::MonicQuotient, spec::FamA,
                            spec::FamB, spec::FamC, spec::FamD, spec::Product>;
  Node node;

  RingSpec() : node(spec::Zn{}) {}
  template <typename T>
    requires(!std::same_as<std::remove_cvref_t<T>, RingSpec> &&
             std::constructible_from<Node, T>)
  RingSpec(T&& value) : node(std::forward<T>(value)) {}  // NOLINT

  bool operator==(const RingSpec&) const = default;

  bool is_product() const {
    return std::holds_alternative<spec::Product>(node);
  }
};

// Flattens nested products and collapses single-factor products.
RingSpec normalize(RingSpec s);

// Analytic |R| (saturating at UINT64_MAX).
std::uint64_t analytic_size(const RingSpec& s);

struct RingOptions {
  std::uint64_t size_cap = kDefaultSizeCap;
};

namespace detail {
class RingImpl;
}

// A finite commutative ring with unity over canonically indexed elements.
// Immutable after construction; copies share the arithmetic.
class Ring {
 public:
  const RingSpec& spec() const { return spec_; }
  std::uint32_t size() const;
  Element zero() const { return 0; }
  Element one() const;

  Element add(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;

  // Human-readable element, e.g. "2+2x" or "(1,0)".
  std::string label(Element a) const;
  std::optional<Element> find_label(std::string_view label) const;

  // Structured coordinates (residues, coefficient vectors, factor tuples
  // flattened). encode(decode(a)) == a.
  std::vector<std::uint64_t> decode(Element a) const;
  Element encode(std::span<const std::uint64_t> coords) const;

  // Appends every b with mul(a, b) == 0, in increasing order.
  void annihilator(Element a, std::vector<Element>& out) const;

  // Same result as annihilator(), computed by scanning mul() over every
  // element. Kept as the reference path for the specialised rows.
  void annihilator_by_scan(Element a, std::vector<Element>& out) const;

 private:
  friend Ring make_ring(const RingSpec&, const RingOptions&);
  Ring(RingSpec s, std::shared_ptr<const detail::RingImpl> impl)
      : spec_(std::move(s)), impl_(std::move(impl)) {}

  RingSpec spec_;
  std::shared_ptr<const detail::RingImpl> impl_;
};

Ring make_ring(const RingSpec& spec, const RingOptions& options = {});

struct ElementClass {
  Element element = 0;
  bool is_zero = false;
  bool is_unit = false;
  bool is_nilpotent = false;
  bool is_zero_divisor = false;
  std::optional<std::uint64_t> gcd_with_n;  // only for Zn
};

ElementClass classify_element(const Ring& ring, Element a);
bool is_reduced(const Ring& ring);
bool is_field(const Ring& ring);

// Monic irreducible modulus used for GF(p^k), ascending coefficients.
std::vector<std::uint64_t> gf_modulus(std::uint64_t p, unsigned k);

}  // namespace zdg
