#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "zdg/errors.hpp"
#include "zdg/number_theory.hpp"
#include "zdg/ring.hpp"
#include "zdg/ring_spec_parser.hpp"

namespace {

using namespace zdg;
using Coords = std::vector<std::uint64_t>;

Ring ring(const char* text) { return make_ring(parse_ring_spec(text)); }

Element by_label(const Ring& r, const char* label) {
  const auto e = r.find_label(label);
  EXPECT_TRUE(e.has_value()) << label;
  return e.value_or(0);
}

TEST(Ring, AnalyticSizes) {
  EXPECT_EQ(make_ring(spec::Zn{27}).size(), 27u);
  EXPECT_EQ(make_ring(spec::FamA{2, 3}).size(), 16u);
  EXPECT_EQ(make_ring(spec::FamC{2}).size(), 16u);
  EXPECT_EQ(make_ring(spec::FamD{3}).size(), 27u);
  EXPECT_EQ(make_ring(spec::FamB{3}).size(), 27u);
  EXPECT_EQ(make_ring(spec::GF{3, 2}).size(), 9u);
  EXPECT_EQ(ring("Z/4[x]/(x^2)").size(), 16u);
  EXPECT_EQ(ring("Z/2 x GF(3) x Z/4").size(), 24u);
  for (const char* text : {"FamA(3,4)", "FamB(5)", "FamC(7)", "FamD(7)",
                           "Z/9[x]/(x^3+x+1)", "Z/2 x Z/2 x Z/2"}) {
    const RingSpec s = parse_ring_spec(text);
    EXPECT_EQ(make_ring(s).size(), analytic_size(s)) << text;
  }
}

TEST(Ring, Errors) {
  EXPECT_THROW(make_ring(spec::FamA{4, 2}), CompositePrimeError);
  EXPECT_THROW(make_ring(spec::GF{6, 1}), CompositePrimeError);
  EXPECT_THROW(make_ring(spec::FamB{7}), SizeCapExceeded);
  EXPECT_THROW(make_ring(spec::Zn{200000}), SizeCapExceeded);
  EXPECT_NO_THROW(make_ring(spec::Zn{200000}, RingOptions{200000}));
  EXPECT_THROW(make_ring(spec::MonicQuotient{spec::Zn{4}, {1, 0, 2}}),
               NonMonicModulus);
}

TEST(Ring, ProductsFlatten) {
  const RingSpec s = normalize(spec::Product{
      {spec::Zn{2}, spec::Product{{spec::Zn{3}, spec::GF{2, 2}}}}});
  const auto& p = std::get<spec::Product>(s.node);
  ASSERT_EQ(p.factors.size(), 3u);
  for (const auto& f : p.factors) EXPECT_FALSE(f.is_product());
  EXPECT_EQ(normalize(spec::Product{{spec::Zn{5}}}), RingSpec(spec::Zn{5}));
}

TEST(Ring, MultiplicationExamples) {
  const Ring r = ring("Z/4[x]/(x^2)");
  EXPECT_EQ(r.mul(by_label(r, "x"), by_label(r, "3x")), r.zero());
  EXPECT_EQ(r.mul(by_label(r, "2"), by_label(r, "2+2x")), r.zero());
  const Ring a = make_ring(spec::FamA{2, 3});
  const Element one_plus_x = by_label(a, "1+x");
  EXPECT_EQ(a.mul(one_plus_x, one_plus_x), a.one());
  for (const char* text : {"Z/12", "GF(8)", "FamC(3)", "Z/2 x Z/9"}) {
    const Ring q = ring(text);
    for (Element e = 0; e < q.size(); ++e) {
      EXPECT_EQ(q.mul(q.zero(), e), q.zero());
      EXPECT_EQ(q.mul(q.one(), e), e);
    }
  }
}

// Products in coordinates, written out from the normal forms.
Coords expected_product(const RingSpec& s, const Coords& u, const Coords& v) {
  if (const auto* f = std::get_if<spec::FamA>(&s.node)) {
    const std::uint64_t big = *checked_pow(f->p, f->alpha);
    return {u[0] * v[0] % big, (u[0] * v[1] + u[1] * v[0]) % f->p};
  }
  if (const auto* f = std::get_if<spec::FamB>(&s.node)) {
    Coords out(f->p, 0);
    for (std::size_t i = 0; i < f->p; ++i) {
      for (std::size_t j = 0; i + j < f->p; ++j) {
        out[i + j] = (out[i + j] + u[i] * v[j]) % f->p;
      }
    }
    return out;
  }
  if (const auto* f = std::get_if<spec::FamC>(&s.node)) {
    const std::uint64_t p = f->p;
    return {u[0] * v[0] % p, (u[0] * v[1] + u[1] * v[0]) % p,
            (u[0] * v[2] + u[1] * v[1] + u[2] * v[0]) % p,
            (u[0] * v[3] + u[3] * v[0]) % p};
  }
  if (const auto* f = std::get_if<spec::FamD>(&s.node)) {
    const std::uint64_t p = f->p;
    return {(u[0] * v[0] + p * u[1] * v[1]) % (p * p),
            (u[0] * v[1] + u[1] * v[0]) % p};
  }
  if (const auto* f = std::get_if<spec::Zn>(&s.node)) {
    return {u[0] * v[0] % f->n};
  }
  ADD_FAILURE() << "unsupported";
  return {};
}

TEST(Ring, FamilyNormalFormsMatchHandExpansion) {
  for (const RingSpec& s :
       {RingSpec(spec::FamA{3, 2}), RingSpec(spec::FamA{2, 4}),
        RingSpec(spec::FamB{3}), RingSpec(spec::FamC{2}),
        RingSpec(spec::FamC{3}), RingSpec(spec::FamD{3}),
        RingSpec(spec::FamD{5}), RingSpec(spec::Zn{36})}) {
    const Ring r = make_ring(s);
    for (Element a = 0; a < r.size(); ++a) {
      const Coords u = r.decode(a);
      EXPECT_EQ(r.encode(u), a);
      for (Element b = 0; b < r.size(); ++b) {
        ASSERT_EQ(r.decode(r.mul(a, b)), expected_product(s, u, r.decode(b)))
            << render_ring_spec(s) << " " << r.label(a) << " * "
            << r.label(b);
      }
    }
  }
}

TEST(Ring, MonicQuotientMatchesPolynomialProduct) {
  // Z/4[x]/(x^2 + 1): x^2 = -1.
  const Ring r = ring("Z/4[x]/(x^2+1)");
  for (Element a = 0; a < r.size(); ++a) {
    for (Element b = 0; b < r.size(); ++b) {
      const Coords u = r.decode(a), v = r.decode(b);
      const std::uint64_t c0 = (u[0] * v[0] + 3 * u[1] * v[1]) % 4;
      const std::uint64_t c1 = (u[0] * v[1] + u[1] * v[0]) % 4;
      ASSERT_EQ(r.decode(r.mul(a, b)), (Coords{c0, c1}));
    }
  }
}

TEST(Ring, AxiomsHold) {
  std::mt19937_64 rng(7);
  for (const char* text :
       {"Z/12", "GF(9)", "GF(8)", "Z/4[x]/(x^2)", "FamA(2,3)", "FamB(3)",
        "FamC(2)", "FamD(3)", "Z/2 x GF(4)", "Z/3[x]/(x^3+2x+1)", "FamA(3,3)",
        "FamD(5)", "Z/2 x Z/2 x Z/2 x Z/4", "Z/8[x]/(x^3)", "Z/512"}) {
    const Ring r = ring(text);
    const std::uint32_t n = r.size();
    ASSERT_LE(n, 512u);
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        ASSERT_EQ(r.mul(a, b), r.mul(b, a)) << text;
        ASSERT_EQ(r.add(a, b), r.add(b, a)) << text;
      }
      ASSERT_EQ(r.add(a, r.neg(a)), r.zero());
    }
    // Exhaustive triples up to 128 elements, seeded samples above.
    auto triple = [&](Element a, Element b, Element c) {
      ASSERT_EQ(r.mul(r.mul(a, b), c), r.mul(a, r.mul(b, c))) << text;
      ASSERT_EQ(r.mul(a, r.add(b, c)), r.add(r.mul(a, b), r.mul(a, c)))
          << text;
      ASSERT_EQ(r.add(r.add(a, b), c), r.add(a, r.add(b, c))) << text;
    };
    if (n <= 128) {
      for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
          for (Element c = 0; c < n; ++c) triple(a, b, c);
    } else {
      std::uniform_int_distribution<Element> pick(0, n - 1);
      for (int i = 0; i < 200000; ++i) triple(pick(rng), pick(rng), pick(rng));
    }
  }
}

TEST(Ring, ClassifyElement) {
  const Ring z27 = make_ring(spec::Zn{27});
  const ElementClass three = classify_element(z27, 3);
  EXPECT_TRUE(three.is_nilpotent);
  EXPECT_TRUE(three.is_zero_divisor);
  EXPECT_FALSE(three.is_unit);
  EXPECT_EQ(three.gcd_with_n, 3u);
  const ElementClass two = classify_element(z27, 2);
  EXPECT_TRUE(two.is_unit);
  EXPECT_FALSE(two.is_zero_divisor);
  const ElementClass z6 = classify_element(make_ring(spec::Zn{6}), 2);
  EXPECT_TRUE(z6.is_zero_divisor);
  EXPECT_FALSE(z6.is_nilpotent);
  const ElementClass zero = classify_element(z27, 0);
  EXPECT_TRUE(zero.is_zero && zero.is_zero_divisor && zero.is_nilpotent);
}

TEST(Ring, UnitsAndZeroDivisorsPartitionTheRing) {
  for (const char* text : {"Z/60", "FamA(3,2)", "Z/2 x GF(9)", "FamC(2)",
                           "Z/4[x]/(x^2+x+1)"}) {
    const Ring r = ring(text);
    for (Element a = 0; a < r.size(); ++a) {
      const ElementClass c = classify_element(r, a);
      EXPECT_NE(c.is_unit, c.is_zero_divisor) << text << " " << r.label(a);
      // Nilpotent by direct powering.
      Element power = a;
      for (std::uint32_t i = 0; i < r.size() && power != 0; ++i) {
        power = r.mul(power, a);
      }
      EXPECT_EQ(c.is_nilpotent, power == 0) << text << " " << r.label(a);
    }
  }
  const Ring zn = make_ring(spec::Zn{60});
  for (Element a = 0; a < 60; ++a) {
    const ElementClass c = classify_element(zn, a);
    EXPECT_EQ(c.gcd_with_n, std::gcd<std::uint64_t>(a, 60));
    EXPECT_EQ(c.is_unit, std::gcd<std::uint64_t>(a, 60) == 1);
  }
}

TEST(Ring, ReducedAndField) {
  EXPECT_TRUE(is_reduced(make_ring(spec::Zn{6})));
  EXPECT_FALSE(is_field(make_ring(spec::Zn{6})));
  EXPECT_TRUE(is_field(make_ring(spec::GF{3, 2})));
  EXPECT_FALSE(is_reduced(make_ring(spec::FamA{2, 3})));
  EXPECT_TRUE(is_reduced(ring("Z/2 x GF(4) x Z/3")));
  EXPECT_FALSE(is_field(ring("Z/2 x GF(4)")));
  EXPECT_TRUE(is_field(ring("Z/7")));
}

TEST(Ring, FiniteFieldMultiplicativeGroup) {
  for (auto [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{
           {2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {7, 2}, {2, 5}}) {
    const Ring f = make_ring(spec::GF{p, k});
    const std::uint64_t q = f.size();
    for (Element a = 1; a < q; ++a) {
      Element power = f.one();
      std::uint64_t order = 0;
      do {
        power = f.mul(power, a);
        ++order;
      } while (power != f.one() && order <= q);
      EXPECT_EQ((q - 1) % order, 0u) << "GF(" << q << ")";
    }
    // Some element generates the whole group.
    bool cyclic = false;
    for (Element a = 1; a < q && !cyclic; ++a) {
      Element power = a;
      std::uint64_t order = 1;
      while (power != f.one()) {
        power = f.mul(power, a);
        ++order;
      }
      cyclic = order == q - 1;
    }
    EXPECT_TRUE(cyclic) << "GF(" << q << ")";
  }
}

TEST(Ring, GaloisModulusIsSmallestIrreducible) {
  EXPECT_EQ(gf_modulus(2, 2), (Coords{1, 1, 1}));
  EXPECT_EQ(gf_modulus(2, 3), (Coords{1, 1, 0, 1}));
  EXPECT_EQ(gf_modulus(3, 2), (Coords{1, 0, 1}));
}

TEST(Ring, AnnihilatorRowsMatchScan) {
  for (const char* text :
       {"Z/360", "FamA(3,3)", "FamA(2,5)", "FamB(3)", "FamC(3)", "FamD(5)",
        "GF(16)", "Z/4[x]/(x^2)", "Z/2 x Z/4 x GF(3)", "Z/9[x]/(x^2+3)"}) {
    const Ring r = ring(text);
    for (Element a = 0; a < r.size(); ++a) {
      std::vector<Element> fast, slow;
      r.annihilator(a, fast);
      r.annihilator_by_scan(a, slow);
      ASSERT_EQ(fast, slow) << text << " " << r.label(a);
    }
  }
}

TEST(Ring, LabelsRoundTrip) {
  for (const char* text : {"FamA(3,2)", "FamC(2)", "GF(9)", "Z/2 x Z/3",
                           "Z/4[x]/(x^2)", "FamB(3)", "FamD(3)"}) {
    const Ring r = ring(text);
    for (Element a = 0; a < r.size(); ++a) {
      EXPECT_EQ(r.find_label(r.label(a)), a) << text << " " << r.label(a);
    }
  }
}

}  // namespace
