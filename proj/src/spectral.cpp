#include "zdg/spectral.hpp"

#include <algorithm>
#include <limits>

#include "json.hpp"
#include "zdg/errors.hpp"
#include "zdg/number_theory.hpp"

namespace zdg {

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending)
    : c_(std::move(ascending)) {
  trim();
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::monomial(std::size_t degree) {
  std::vector<BigInt> c(degree + 1, 0);
  c[degree] = 1;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::linear(const BigInt& root) {
  return IntPolynomial({-root, BigInt(1)});
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<BigInt> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::pow(std::size_t e) const {
  IntPolynomial result = monomial(0);
  IntPolynomial base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

std::pair<IntPolynomial, IntPolynomial> IntPolynomial::divmod(
    const IntPolynomial& d) const {
  if (!d.is_monic()) throw Error("polynomial divisor must be monic");
  if (degree() < d.degree()) return {IntPolynomial{}, *this};
  std::vector<BigInt> rem = c_;
  const std::size_t dd = d.c_.size() - 1;
  std::vector<BigInt> q(c_.size() - dd, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    const BigInt lead = rem[k + dd];
    if (lead == 0) continue;
    q[k] = lead;
    for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= lead * d.c_[j];
  }
  return {IntPolynomial(std::move(q)), IntPolynomial(std::move(rem))};
}

std::optional<IntPolynomial> IntPolynomial::divide_exact(
    const IntPolynomial& d) const {
  if (d.is_zero()) throw Error("division by the zero polynomial");
  if (is_zero()) return IntPolynomial{};
  if (degree() < d.degree()) return std::nullopt;
  std::vector<BigInt> rem = c_;
  const std::size_t dd = d.c_.size() - 1;
  const BigInt& lc = d.c_.back();
  std::vector<BigInt> q(c_.size() - dd, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    const BigInt lead = rem[k + dd];
    if (lead == 0) continue;
    if (lead % lc != 0) return std::nullopt;
    q[k] = lead / lc;
    for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= q[k] * d.c_[j];
  }
  if (std::any_of(rem.begin(), rem.end(), [](const BigInt& x) { return x != 0; })) {
    return std::nullopt;
  }
  return IntPolynomial(std::move(q));
}

std::string IntPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const BigInt& c = c_[k];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (c < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (k == 0 || mag != 1) out += mag.str();
    if (k >= 1) out += 'x';
    if (k >= 2) out += '^' + std::to_string(k);
  }
  return out;
}

namespace {

nlohmann::json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

}  // namespace

std::string IntPolynomial::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    arr.push_back(big_to_json(*it));
  }
  return arr.dump();
}

BigMatrix QuotientMatrix::to_big() const {
  BigMatrix m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::int64_t x : a[i]) m[i].emplace_back(x);
  }
  return m;
}

std::string QuotientMatrix::to_json() const {
  nlohmann::json kinds_json = nlohmann::json::array();
  for (BlockKind k : kinds) {
    kinds_json.push_back(k == BlockKind::kComplete ? "clique" : "independent");
  }
  return nlohmann::json{{"matrix", a}, {"sizes", sizes}, {"kinds", kinds_json}}
      .dump();
}

QuotientMatrix equitable_quotient_matrix(const Graph& g, const Partition& p) {
  p.validate(g.order());
  const std::size_t k = p.blocks.size();
  const std::size_t words = g.words_per_row();
  std::vector<std::vector<std::uint64_t>> mask(
      k, std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < k; ++i) {
    for (Vertex v : p.blocks[i].vertices) {
      mask[i][v / 64] |= std::uint64_t{1} << (v % 64);
    }
  }
  QuotientMatrix q;
  q.a.assign(k, std::vector<std::int64_t>(k, 0));
  q.sizes = p.sizes();
  q.kinds.assign(k, BlockKind::kIndependent);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& vs = p.blocks[i].vertices;
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t full = j == i ? vs.size() - 1 : q.sizes[j];
      std::optional<std::size_t> common;
      for (Vertex v : vs) {
        const auto row = g.row(v);
        std::size_t hits = 0;
        for (std::size_t w = 0; w < words; ++w) {
          hits += static_cast<std::size_t>(std::popcount(row[w] & mask[j][w]));
        }
        if (hits != 0 && hits != full) {
          if (i == j) {
            throw MixedBlock(i, "block '" + p.blocks[i].label +
                                    "' is neither a clique nor independent");
          }
          throw NotEquitable(v, j, "vertex " + g.label(v) + " has " +
                                       std::to_string(hits) +
                                       " neighbours in block '" +
                                       p.blocks[j].label + "' of size " +
                                       std::to_string(full));
        }
        if (common && *common != hits) {
          if (i == j) {
            throw MixedBlock(i, "block '" + p.blocks[i].label +
                                    "' is neither a clique nor independent");
          }
          throw NotEquitable(v, j, "block '" + p.blocks[i].label +
                                       "' is only partly joined to block '" +
                                       p.blocks[j].label + "'");
        }
        common = hits;
      }
      q.a[i][j] = static_cast<std::int64_t>(*common);
      if (i == j && vs.size() > 1 && *common == full) {
        q.kinds[i] = BlockKind::kComplete;
      }
    }
    if (vs.size() == 1) q.kinds[i] = BlockKind::kComplete;
  }
  return q;
}

IntPolynomial char_poly(const BigMatrix& a) {
  const std::size_t n = a.size();
  for (const auto& row : a) {
    if (row.size() != n) throw Error("char_poly needs a square matrix");
  }
  std::vector<BigInt> c(n + 1, 0);
  c[n] = 1;
  BigMatrix m(n, std::vector<BigInt>(n, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    // m <- a * m + c_{n-k+1} I, then c_{n-k} = -tr(a m) / k.
    BigMatrix next(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) {
        if (a[i][l] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) next[i][j] += a[i][l] * m[l][j];
      }
      next[i][i] += c[n - k + 1];
    }
    m = std::move(next);
    BigInt trace = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) trace += a[i][l] * m[l][i];
    }
    c[n - k] = -trace / static_cast<long>(k);
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial char_poly(const QuotientMatrix& m) { return char_poly(m.to_big()); }

BigMatrix adjacency_matrix(const Graph& g) {
  const std::size_t n = g.order();
  BigMatrix m(n, std::vector<BigInt>(n, 0));
  for (auto [u, v] : g.edges()) {
    m[u][v] = 1;
    m[v][u] = 1;
  }
  return m;
}

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a * b % p;
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1U) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1U;
  }
  return r;
}

// Characteristic polynomial of the adjacency matrix modulo a prime p < 2^31,
// ascending coefficients.
std::vector<std::uint64_t> char_poly_mod(const Graph& g, std::uint64_t p) {
  const std::size_t n = g.order();
  std::vector<std::uint64_t> h(n * n, 0);
  auto at = [&](std::size_t i, std::size_t j) -> std::uint64_t& {
    return h[i * n + j];
  };
  for (auto [u, v] : g.edges()) {
    at(u, v) = 1;
    at(v, u) = 1;
  }
  // Reduce to upper Hessenberg form by elementary similarity transforms.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = m;
    while (piv < n && at(piv, m - 1) == 0) ++piv;
    if (piv == n) continue;
    if (piv != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(at(piv, j), at(m, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(at(i, piv), at(i, m));
    }
    const std::uint64_t inv = pow_mod(at(m, m - 1), p - 2, p);
    for (std::size_t i = m + 1; i < n; ++i) {
      if (at(i, m - 1) == 0) continue;
      const std::uint64_t u = mul_mod(at(i, m - 1), inv, p);
      const std::uint64_t neg_u = p - u;
      std::uint64_t* ri = &h[i * n];
      const std::uint64_t* rm = &h[m * n];
      for (std::size_t j = m - 1; j < n; ++j) {
        ri[j] = (ri[j] + neg_u * rm[j]) % p;
      }
      for (std::size_t r = 0; r < n; ++r) {
        at(r, m) = (at(r, m) + u * at(r, i)) % p;
      }
    }
  }
  // p_k = (x - h_kk) p_{k-1} - sum_{i=1}^{k-1} t_i h_{k-i,k} p_{k-i-1}
  // (1-based), where t_i is the product of the i subdiagonal entries below.
  std::vector<std::vector<std::uint64_t>> poly(n + 1);
  poly[0] = {1};
  auto H = [&](std::size_t i, std::size_t j) { return at(i - 1, j - 1); };
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::uint64_t> cur(k + 1, 0);
    const std::uint64_t hkk = H(k, k);
    for (std::size_t d = 0; d < k; ++d) {
      cur[d + 1] = (cur[d + 1] + poly[k - 1][d]) % p;
      cur[d] = (cur[d] + (p - hkk) * poly[k - 1][d]) % p;
    }
    std::uint64_t t = 1;
    for (std::size_t i = 1; i < k; ++i) {
      t = mul_mod(t, H(k - i + 1, k - i), p);
      if (t == 0) break;
      const std::uint64_t coef = mul_mod(t, H(k - i, k), p);
      if (coef == 0) continue;
      const auto& prev = poly[k - i - 1];
      for (std::size_t d = 0; d < prev.size(); ++d) {
        cur[d] = (cur[d] + (p - coef) * prev[d]) % p;
      }
    }
    poly[k] = std::move(cur);
  }
  return poly[n];
}

}  // namespace

IntPolynomial adjacency_char_poly(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return IntPolynomial::monomial(0);
  // Twin classes give known eigenvalues: an independent class of size s adds
  // s-1 zeros, a clique class s-1 copies of -1. The other r eigenvalues have
  // squares summing to at most S = 2|E| - t, so every coefficient is bounded
  // by 2^t (1 + ceil(sqrt(S / r)))^r.
  std::size_t t = 0;
  std::size_t f = 0;
  for (const Block& b : twin_partition(g).blocks) {
    if (b.vertices.size() < 2) continue;
    if (g.adjacent(b.vertices[0], b.vertices[1])) {
      t += b.vertices.size() - 1;
    } else {
      f += b.vertices.size() - 1;
    }
  }
  const std::size_t r = n - t - f;
  const std::size_t s = 2 * g.edge_count() - t;
  std::size_t root = 0;
  if (r > 0) {
    const std::size_t q = (s + r - 1) / r;
    while (root * root < q) ++root;
  }
  const BigInt bound = (BigInt(1) << t) * boost::multiprecision::pow(
                                              BigInt(1 + root),
                                              static_cast<unsigned>(r));
  const BigInt need = 2 * bound + 1;

  BigInt modulus = 1;
  std::vector<BigInt> value(n + 1, 0);
  std::uint64_t prime = (std::uint64_t{1} << 31) - 1;
  while (modulus <= need) {
    while (!is_prime(prime)) --prime;
    const auto res = char_poly_mod(g, prime);
    // Garner step: value <- value + modulus * ((res - value) / modulus mod p).
    const std::uint64_t inv =
        pow_mod(static_cast<std::uint64_t>(modulus % prime), prime - 2, prime);
    for (std::size_t i = 0; i <= n; ++i) {
      const auto cur = static_cast<std::uint64_t>(value[i] % prime);
      const std::uint64_t diff = (res[i] + prime - cur) % prime;
      value[i] += modulus * mul_mod(diff, inv, prime);
    }
    modulus *= prime;
    --prime;
  }
  const BigInt half = modulus / 2;
  for (BigInt& v : value) {
    if (v > half) v -= modulus;
  }
  return IntPolynomial(std::move(value));
}

namespace {

// Bareiss elimination in place; returns the rank and leaves the last pivot
// (the determinant for a full-rank square matrix) in `last_pivot`.
std::size_t bareiss(BigMatrix& m, BigInt& last_pivot, int& sign) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  BigInt prev = 1;
  std::size_t r = 0;
  sign = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      std::swap(m[piv], m[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  last_pivot = prev;
  return r;
}

}  // namespace

BigInt determinant(BigMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt last;
  int sign = 1;
  if (bareiss(m, last, sign) < n) return 0;
  return sign * last;
}

std::size_t rank(BigMatrix m) {
  BigInt last;
  int sign = 1;
  return bareiss(m, last, sign);
}

std::size_t eigenvalue_multiplicity(const Graph& g, std::int64_t lambda,
                                    std::size_t bareiss_limit) {
  const std::size_t n = g.order();
  if (n <= bareiss_limit) {
    BigMatrix m = adjacency_matrix(g);
    for (std::size_t i = 0; i < n; ++i) m[i][i] -= lambda;
    return n - rank(std::move(m));
  }
  IntPolynomial p = adjacency_char_poly(g);
  const IntPolynomial factor = IntPolynomial::linear(BigInt(lambda));
  std::size_t mult = 0;
  while (true) {
    auto [q, r] = p.divmod(factor);
    if (!r.is_zero()) break;
    p = std::move(q);
    ++mult;
  }
  return mult;
}

SpectralFactorization factor_zero_minus_one(const IntPolynomial& p) {
  if (p.is_zero()) throw Error("cannot factor the zero polynomial");
  SpectralFactorization out;
  std::vector<BigInt> c = p.coefficients();
  while (c.size() > 1 && c.front() == 0) {
    c.erase(c.begin());
    ++out.m0;
  }
  IntPolynomial rest(std::move(c));
  const IntPolynomial x_plus_one = IntPolynomial::linear(BigInt(-1));
  while (rest.degree() >= 1) {
    auto [q, r] = rest.divmod(x_plus_one);
    if (!r.is_zero()) break;
    rest = std::move(q);
    ++out.m1;
  }
  out.rest = std::move(rest);
  return out;
}

}  // namespace zdg
