#include "zdg/ring_spec_parser.hpp"

#include <cctype>
#include <cstdint>
#include <map>
#include <optional>

#include "zdg/errors.hpp"
#include "zdg/number_theory.hpp"

namespace zdg {

SyntaxError::SyntaxError(std::size_t column, std::vector<std::string> expected,
                         const std::string& found)
    : Error([&] {
        std::string msg = "column " + std::to_string(column) + ": expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
          if (i > 0) msg += i + 1 == expected.size() ? " or " : ", ";
          msg += expected[i];
        }
        return msg + ", found " + found;
      }()),
      column_(column),
      expected_(std::move(expected)) {}

namespace {

// Keeps primality and prime-power checks on parsed numbers cheap.
constexpr std::uint64_t kNatLimit = 1'000'000'000'000ULL;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RingSpec parse() {
    skip_spaces();
    std::vector<RingSpec> factors;
    factors.push_back(atom());
    while (true) {
      skip_spaces();
      if (at_end()) break;
      if (peek() != 'x') fail({"'x'", "end of input"});
      ++pos_;
      skip_spaces();
      factors.push_back(atom());
    }
    if (factors.size() == 1) return std::move(factors.front());
    return normalize(RingSpec{spec::Product{std::move(factors)}});
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  std::size_t column() const { return pos_ + 1; }

  void skip_spaces() {
    while (!at_end() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::string found;
    if (at_end()) {
      found = "end of input";
    } else {
      const unsigned char c = static_cast<unsigned char>(text_[pos_]);
      if (std::isprint(c)) {
        found = std::string("'") + text_[pos_] + "'";
      } else {
        found = "byte 0x" + std::to_string(static_cast<int>(c));
      }
    }
    throw SyntaxError(column(), std::move(expected), found);
  }

  bool accept(std::string_view lit) {
    if (text_.substr(pos_, lit.size()) == lit) {
      pos_ += lit.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view lit) {
    if (!accept(lit)) fail({"'" + std::string(lit) + "'"});
  }

  std::uint64_t nat() {
    const std::size_t start = column();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail({"number"});
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (v > kNatLimit) throw SemanticError(start, "number too large");
      ++pos_;
    }
    return v;
  }

  std::uint64_t prime_arg() {
    const std::size_t col = column();
    const std::uint64_t p = nat();
    if (!is_prime(p)) {
      throw SemanticError(col, std::to_string(p) + " is not prime");
    }
    return p;
  }

  RingSpec atom() {
    if (accept("Z/")) {
      const std::size_t col = column();
      const std::uint64_t n = nat();
      if (n < 2) throw SemanticError(col, "Z/n requires n >= 2");
      if (accept("[x]/(")) {
        auto modulus = poly(n);
        expect(")");
        return spec::MonicQuotient{spec::Zn{n}, std::move(modulus)};
      }
      return spec::Zn{n};
    }
    if (accept("GF(")) {
      const std::size_t col = column();
      const std::uint64_t q = nat();
      const auto pk = as_prime_power(q);
      if (!pk) {
        throw SemanticError(col, std::to_string(q) + " is not a prime power");
      }
      expect(")");
      return spec::GF{pk->first, pk->second};
    }
    if (accept("FamA(")) {
      const std::uint64_t p = prime_arg();
      expect(",");
      skip_spaces();
      const std::size_t col = column();
      const std::uint64_t alpha = nat();
      if (alpha < 1 || alpha > 64) {
        throw SemanticError(col, "FamA exponent must be in [1, 64]");
      }
      expect(")");
      return spec::FamA{p, static_cast<unsigned>(alpha)};
    }
    if (accept("FamB(")) {
      const std::uint64_t p = prime_arg();
      expect(")");
      return spec::FamB{p};
    }
    if (accept("FamC(")) {
      const std::uint64_t p = prime_arg();
      expect(")");
      return spec::FamC{p};
    }
    if (accept("FamD(")) {
      const std::uint64_t p = prime_arg();
      expect(")");
      return spec::FamD{p};
    }
    fail({"'Z/'", "'GF('", "'FamA('", "'FamB('", "'FamC('", "'FamD('"});
  }

  // Monic polynomial in x with integer coefficients, reduced mod n.
  std::vector<std::uint64_t> poly(std::uint64_t n) {
    const std::size_t start = column();
    std::map<std::uint64_t, __int128> terms;
    bool first = true;
    while (true) {
      skip_spaces();
      bool negative = false;
      if (accept("-")) {
        negative = true;
      } else if (!first) {
        if (!accept("+")) break;
      }
      skip_spaces();
      first = false;
      __int128 coef = 1;
      bool have_coef = false;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coef = nat();
        have_coef = true;
        if (accept("*") && peek() != 'x') fail({"'x'"});
      }
      std::uint64_t degree = 0;
      if (accept("x")) {
        degree = 1;
        if (accept("^")) {
          const std::size_t col = column();
          degree = nat();
          if (degree > 64) throw SemanticError(col, "degree too large");
        }
      } else if (!have_coef) {
        fail({"number", "'x'"});
      }
      terms[degree] += negative ? -coef : coef;
    }
    while (!terms.empty() && terms.rbegin()->second == 0) {
      terms.erase(std::prev(terms.end()));
    }
    if (terms.empty() || terms.rbegin()->first == 0) {
      throw SemanticError(start, "modulus must have degree >= 1");
    }
    const std::uint64_t degree = terms.rbegin()->first;
    std::vector<std::uint64_t> coeffs(degree + 1, 0);
    const __int128 mod = static_cast<__int128>(n);
    for (const auto& [d, c] : terms) {
      coeffs[d] = static_cast<std::uint64_t>(((c % mod) + mod) % mod);
    }
    if (coeffs[degree] != 1 % n) {
      throw SemanticError(start, "modulus is not monic");
    }
    return coeffs;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string render_poly(const std::vector<std::uint64_t>& c) {
  std::string out;
  for (std::size_t d = c.size(); d-- > 0;) {
    if (c[d] == 0) continue;
    if (!out.empty()) out += '+';
    if (d == 0) {
      out += std::to_string(c[d]);
      continue;
    }
    if (c[d] != 1) out += std::to_string(c[d]);
    out += 'x';
    if (d > 1) out += "^" + std::to_string(d);
  }
  return out;
}

}  // namespace

RingSpec parse_ring_spec(std::string_view text) {
  return Parser(text).parse();
}

std::string render_ring_spec(const RingSpec& s) {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, spec::Zn>) {
          return "Z/" + std::to_string(n.n);
        } else if constexpr (std::is_same_v<T, spec::GF>) {
          const auto q = checked_pow(n.p, n.k);
          return "GF(" + (q ? std::to_string(*q) : std::string("?")) + ")";
        } else if constexpr (std::is_same_v<T, spec::MonicQuotient>) {
          return "Z/" + std::to_string(n.base.n) + "[x]/(" +
                 render_poly(n.modulus) + ")";
        } else if constexpr (std::is_same_v<T, spec::FamA>) {
          return "FamA(" + std::to_string(n.p) + "," + std::to_string(n.alpha) +
                 ")";
        } else if constexpr (std::is_same_v<T, spec::FamB>) {
          return "FamB(" + std::to_string(n.p) + ")";
        } else if constexpr (std::is_same_v<T, spec::FamC>) {
          return "FamC(" + std::to_string(n.p) + ")";
        } else if constexpr (std::is_same_v<T, spec::FamD>) {
          return "FamD(" + std::to_string(n.p) + ")";
        } else {
          std::string out;
          for (std::size_t i = 0; i < n.factors.size(); ++i) {
            if (i > 0) out += " x ";
            out += render_ring_spec(n.factors[i]);
          }
          return out;
        }
      },
      s.node);
}

}  // namespace zdg
