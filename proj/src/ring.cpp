#include "zdg/ring.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "ring_impl.hpp"
#include "zdg/errors.hpp"
#include "zdg/number_theory.hpp"

namespace zdg {

bool spec::Product::operator==(const Product& other) const {
  return factors == other.factors;
}

namespace {

// Formats sum of coefficient * monomial terms in ascending order, the way
// elements are written by hand: "2+2x", "3x", "1+x^2".
std::string format_terms(std::span<const std::uint64_t> coeffs,
                         std::span<const std::string> monomials) {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (monomials[i].empty()) {
      out += std::to_string(coeffs[i]);
    } else {
      if (coeffs[i] != 1) out += std::to_string(coeffs[i]);
      out += monomials[i];
    }
  }
  return out.empty() ? "0" : out;
}

std::vector<std::string> power_monomials(const std::string& var, std::size_t d) {
  std::vector<std::string> m(d);
  for (std::size_t i = 1; i < d; ++i) {
    m[i] = i == 1 ? var : var + "^" + std::to_string(i);
  }
  return m;
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw CompositePrimeError(p);
}

class ZnImpl final : public detail::RingImpl {
 public:
  explicit ZnImpl(std::uint64_t n) : n_(static_cast<std::uint32_t>(n)) {}

  std::uint32_t size() const override { return n_; }
  Element one() const override { return 1 % n_; }
  Element add(Element a, Element b) const override {
    return static_cast<Element>((std::uint64_t{a} + b) % n_);
  }
  Element neg(Element a) const override { return a == 0 ? 0 : n_ - a; }
  Element mul(Element a, Element b) const override {
    return static_cast<Element>(std::uint64_t{a} * b % n_);
  }
  std::size_t coordinate_count() const override { return 1; }
  std::vector<std::uint64_t> decode(Element a) const override { return {a}; }
  Element encode(std::span<const std::uint64_t> c) const override {
    return static_cast<Element>(c[0] % n_);
  }
  std::string label(Element a) const override { return std::to_string(a); }

  // a*b for b = 0, 1, 2, ... by repeated addition of a.
  void annihilator(Element a, std::vector<Element>& out) const override {
    // ab = 0 exactly for the multiples of n / gcd(a, n).
    const std::uint32_t step = n_ / std::gcd(a, n_);
    for (Element b = 0; b < n_; b += step) out.push_back(b);
  }

 private:
  std::uint32_t n_;
};

// Z_m[v]/(f) for monic f of degree d; index = sum c_i m^i.
class PolyQuotientImpl final : public detail::RingImpl {
 public:
  PolyQuotientImpl(std::uint64_t m, std::vector<std::uint64_t> modulus,
                   std::string var)
      : m_(m), f_(std::move(modulus)), d_(f_.size() - 1) {
    size_ = 1;
    for (std::size_t i = 0; i < d_; ++i) size_ *= m_;
    coeffs_.resize(std::size_t{size_} * d_);
    for (std::uint64_t idx = 0; idx < size_; ++idx) {
      std::uint64_t r = idx;
      for (std::size_t i = 0; i < d_; ++i) {
        coeffs_[idx * d_ + i] = static_cast<std::uint32_t>(r % m_);
        r /= m_;
      }
    }
    monomials_ = power_monomials(var, d_);
  }

  std::uint32_t size() const override {
    return static_cast<std::uint32_t>(size_);
  }
  Element one() const override { return 1 % static_cast<Element>(m_); }
  Element add(Element a, Element b) const override {
    std::array<std::uint64_t, 64> t{};
    for (std::size_t i = 0; i < d_; ++i) t[i] = (coef(a, i) + coef(b, i)) % m_;
    return pack(t);
  }
  Element neg(Element a) const override {
    std::array<std::uint64_t, 64> t{};
    for (std::size_t i = 0; i < d_; ++i) t[i] = (m_ - coef(a, i)) % m_;
    return pack(t);
  }
  Element mul(Element a, Element b) const override {
    std::array<std::uint64_t, 64> t{};
    for (std::size_t i = 0; i < d_; ++i) {
      const std::uint64_t ai = coef(a, i);
      if (ai == 0) continue;
      for (std::size_t j = 0; j < d_; ++j) {
        t[i + j] = (t[i + j] + ai * coef(b, j)) % m_;
      }
    }
    // v^d = -(f_0 + ... + f_{d-1} v^{d-1})
    for (std::size_t k = 2 * d_ - 1; k-- > d_;) {
      const std::uint64_t c = t[k];
      if (c == 0) continue;
      t[k] = 0;
      for (std::size_t i = 0; i < d_; ++i) {
        t[k - d_ + i] = (t[k - d_ + i] + (m_ - f_[i]) % m_ * c) % m_;
      }
    }
    return pack(t);
  }
  std::size_t coordinate_count() const override { return d_; }
  std::vector<std::uint64_t> decode(Element a) const override {
    std::vector<std::uint64_t> out(d_);
    for (std::size_t i = 0; i < d_; ++i) out[i] = coef(a, i);
    return out;
  }
  Element encode(std::span<const std::uint64_t> c) const override {
    std::array<std::uint64_t, 64> t{};
    for (std::size_t i = 0; i < d_; ++i) t[i] = c[i] % m_;
    return pack(t);
  }
  std::string label(Element a) const override {
    const auto c = decode(a);
    return format_terms(c, monomials_);
  }

 private:
  std::uint64_t coef(Element a, std::size_t i) const {
    return coeffs_[std::size_t{a} * d_ + i];
  }
  Element pack(const std::array<std::uint64_t, 64>& t) const {
    std::uint64_t idx = 0;
    for (std::size_t i = d_; i-- > 0;) idx = idx * m_ + t[i];
    return static_cast<Element>(idx);
  }

  std::uint64_t m_;
  std::vector<std::uint64_t> f_;
  std::size_t d_;
  std::uint64_t size_;
  std::vector<std::uint32_t> coeffs_;
  std::vector<std::string> monomials_;
};

// Z_{p^alpha}[x]/(x^2, px): elements a + b x, a in Z_{p^alpha}, b in Z_p,
// index = a + p^alpha * b.
class FamAImpl final : public detail::RingImpl {
 public:
  FamAImpl(std::uint64_t p, unsigned alpha) : p_(p) {
    big_ = *checked_pow(p, alpha);
    monomials_ = {"", "x"};
  }

  std::uint32_t size() const override {
    return static_cast<std::uint32_t>(big_ * p_);
  }
  Element one() const override { return 1; }
  Element add(Element u, Element v) const override {
    return pack((a(u) + a(v)) % big_, (b(u) + b(v)) % p_);
  }
  Element neg(Element u) const override {
    return pack((big_ - a(u)) % big_, (p_ - b(u)) % p_);
  }
  Element mul(Element u, Element v) const override {
    const std::uint64_t ac = a(u) * a(v) % big_;
    const std::uint64_t x = (a(u) % p_ * b(v) + b(u) * (a(v) % p_)) % p_;
    return pack(ac, x);
  }
  std::size_t coordinate_count() const override { return 2; }
  std::vector<std::uint64_t> decode(Element u) const override {
    return {a(u), b(u)};
  }
  Element encode(std::span<const std::uint64_t> c) const override {
    return pack(c[0] % big_, c[1] % p_);
  }
  std::string label(Element u) const override {
    const std::array<std::uint64_t, 2> c{a(u), b(u)};
    return format_terms(c, monomials_);
  }

  void annihilator(Element u, std::vector<Element>& out) const override {
    // The leading part forces c to be a multiple of p^alpha / gcd(a, p^alpha).
    const std::uint64_t ua = a(u), ub = b(u), ua_p = ua % p_;
    const std::uint64_t step = big_ / std::gcd(ua, big_);
    for (std::uint64_t d = 0; d < p_; ++d) {
      for (std::uint64_t c = 0; c < big_; c += step) {
        if ((ua_p * d + ub * (c % p_)) % p_ == 0) out.push_back(pack(c, d));
      }
    }
  }

 private:
  std::uint64_t a(Element u) const { return u % big_; }
  std::uint64_t b(Element u) const { return u / big_; }
  Element pack(std::uint64_t x, std::uint64_t y) const {
    return static_cast<Element>(x + big_ * y);
  }

  std::uint64_t p_;
  std::uint64_t big_;
  std::vector<std::string> monomials_;
};

// Z_p[x,y]/(x^3, xy, y^2): a0 + a1 x + a2 x^2 + b1 y,
// index = a0 + p a1 + p^2 a2 + p^3 b1.
class FamCImpl final : public detail::RingImpl {
 public:
  explicit FamCImpl(std::uint64_t p) : p_(p) {
    monomials_ = {"", "x", "x^2", "y"};
  }

  std::uint32_t size() const override {
    return static_cast<std::uint32_t>(p_ * p_ * p_ * p_);
  }
  Element one() const override { return 1; }
  Element add(Element u, Element v) const override {
    const auto x = coords(u), y = coords(v);
    std::array<std::uint64_t, 4> r{};
    for (int i = 0; i < 4; ++i) r[i] = (x[i] + y[i]) % p_;
    return pack(r);
  }
  Element neg(Element u) const override {
    auto x = coords(u);
    for (auto& c : x) c = (p_ - c) % p_;
    return pack(x);
  }
  Element mul(Element u, Element v) const override {
    const auto x = coords(u), y = coords(v);
    std::array<std::uint64_t, 4> r{};
    r[0] = x[0] * y[0] % p_;
    r[1] = (x[0] * y[1] + x[1] * y[0]) % p_;
    r[2] = (x[0] * y[2] + x[1] * y[1] + x[2] * y[0]) % p_;
    r[3] = (x[0] * y[3] + x[3] * y[0]) % p_;
    return pack(r);
  }
  std::size_t coordinate_count() const override { return 4; }
  std::vector<std::uint64_t> decode(Element u) const override {
    const auto x = coords(u);
    return {x.begin(), x.end()};
  }
  Element encode(std::span<const std::uint64_t> c) const override {
    return pack({c[0] % p_, c[1] % p_, c[2] % p_, c[3] % p_});
  }
  std::string label(Element u) const override {
    const auto x = coords(u);
    return format_terms(x, monomials_);
  }

 private:
  std::array<std::uint64_t, 4> coords(Element u) const {
    std::array<std::uint64_t, 4> r{};
    std::uint64_t v = u;
    for (auto& c : r) {
      c = v % p_;
      v /= p_;
    }
    return r;
  }
  Element pack(const std::array<std::uint64_t, 4>& r) const {
    return static_cast<Element>(r[0] + p_ * (r[1] + p_ * (r[2] + p_ * r[3])));
  }

  std::uint64_t p_;
  std::vector<std::string> monomials_;
};

// Z_{p^2}[x]/(px, x^2 - p): a + b x, a in Z_{p^2}, b in Z_p,
// index = a + p^2 b.
class FamDImpl final : public detail::RingImpl {
 public:
  explicit FamDImpl(std::uint64_t p) : p_(p), p2_(p * p) {
    monomials_ = {"", "x"};
  }

  std::uint32_t size() const override {
    return static_cast<std::uint32_t>(p2_ * p_);
  }
  Element one() const override { return 1; }
  Element add(Element u, Element v) const override {
    return pack((a(u) + a(v)) % p2_, (b(u) + b(v)) % p_);
  }
  Element neg(Element u) const override {
    return pack((p2_ - a(u)) % p2_, (p_ - b(u)) % p_);
  }
  Element mul(Element u, Element v) const override {
    // (a + bx)(c + dx) = ac + bd x^2 + (ad + bc) x, with x^2 = p, px = 0.
    const std::uint64_t lead = (a(u) * a(v) + p_ * (b(u) * b(v) % p_)) % p2_;
    const std::uint64_t x = (a(u) % p_ * b(v) + b(u) * (a(v) % p_)) % p_;
    return pack(lead, x);
  }
  std::size_t coordinate_count() const override { return 2; }
  std::vector<std::uint64_t> decode(Element u) const override {
    return {a(u), b(u)};
  }
  Element encode(std::span<const std::uint64_t> c) const override {
    return pack(c[0] % p2_, c[1] % p_);
  }
  std::string label(Element u) const override {
    const std::array<std::uint64_t, 2> c{a(u), b(u)};
    return format_terms(c, monomials_);
  }

 private:
  std::uint64_t a(Element u) const { return u % p2_; }
  std::uint64_t b(Element u) const { return u / p2_; }
  Element pack(std::uint64_t x, std::uint64_t y) const {
    return static_cast<Element>(x + p2_ * y);
  }

  std::uint64_t p_;
  std::uint64_t p2_;
  std::vector<std::string> monomials_;
};

// Componentwise arithmetic; the first factor is the least significant digit.
class ProductImpl final : public detail::RingImpl {
 public:
  explicit ProductImpl(std::vector<std::shared_ptr<const RingImpl>> factors)
      : factors_(std::move(factors)) {
    std::uint64_t stride = 1;
    for (const auto& f : factors_) {
      strides_.push_back(stride);
      stride *= f->size();
    }
    size_ = stride;
    Element one = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      one += static_cast<Element>(factors_[i]->one() * strides_[i]);
    }
    one_ = one;
  }

  std::uint32_t size() const override {
    return static_cast<std::uint32_t>(size_);
  }
  Element one() const override { return one_; }
  Element add(Element u, Element v) const override {
    return combine(u, v, [](const RingImpl& f, Element x, Element y) {
      return f.add(x, y);
    });
  }
  Element neg(Element u) const override {
    return combine(u, u, [](const RingImpl& f, Element x, Element) {
      return f.neg(x);
    });
  }
  Element mul(Element u, Element v) const override {
    return combine(u, v, [](const RingImpl& f, Element x, Element y) {
      return f.mul(x, y);
    });
  }
  std::size_t coordinate_count() const override {
    std::size_t n = 0;
    for (const auto& f : factors_) n += f->coordinate_count();
    return n;
  }
  std::vector<std::uint64_t> decode(Element u) const override {
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      const auto part = factors_[i]->decode(component(u, i));
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  Element encode(std::span<const std::uint64_t> c) const override {
    std::uint64_t idx = 0;
    std::size_t offset = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      const std::size_t k = factors_[i]->coordinate_count();
      idx += factors_[i]->encode(c.subspan(offset, k)) * strides_[i];
      offset += k;
    }
    return static_cast<Element>(idx);
  }
  std::string label(Element u) const override {
    std::string out = "(";
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i > 0) out += ',';
      out += factors_[i]->label(component(u, i));
    }
    return out + ")";
  }

  // ab = 0 iff every component product is zero, so the annihilator is the
  // cartesian product of the factor annihilators.
  void annihilator(Element u, std::vector<Element>& out) const override {
    std::vector<std::vector<Element>> parts(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      factors_[i]->annihilator(component(u, i), parts[i]);
    }
    std::vector<std::size_t> pos(factors_.size(), 0);
    // Odometer with the last factor outermost keeps the output sorted.
    while (true) {
      std::uint64_t idx = 0;
      for (std::size_t i = 0; i < factors_.size(); ++i) {
        idx += parts[i][pos[i]] * strides_[i];
      }
      out.push_back(static_cast<Element>(idx));
      std::size_t i = 0;
      while (i < factors_.size() && ++pos[i] == parts[i].size()) {
        pos[i] = 0;
        ++i;
      }
      if (i == factors_.size()) break;
    }
  }

 private:
  Element component(Element u, std::size_t i) const {
    return static_cast<Element>(u / strides_[i] % factors_[i]->size());
  }
  template <typename Op>
  Element combine(Element u, Element v, Op op) const {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      idx += op(*factors_[i], component(u, i), component(v, i)) * strides_[i];
    }
    return static_cast<Element>(idx);
  }

  std::vector<std::shared_ptr<const RingImpl>> factors_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t size_;
  Element one_;
};

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r = sat_mul(r, base);
  return r;
}

// Polynomial remainder over Z_p, ascending coefficients; divisor monic.
std::vector<std::uint64_t> poly_mod(std::vector<std::uint64_t> a,
                                    const std::vector<std::uint64_t>& m,
                                    std::uint64_t p) {
  const std::size_t dm = m.size() - 1;
  for (std::size_t k = a.size(); k-- > dm;) {
    const std::uint64_t c = a[k] % p;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[k - dm + i] = (a[k - dm + i] + (p - m[i] * c % p)) % p;
    }
  }
  a.resize(std::min(a.size(), dm));
  return a;
}

bool is_irreducible(const std::vector<std::uint64_t>& f, std::uint64_t p) {
  const std::size_t k = f.size() - 1;
  for (std::size_t d = 1; d <= k / 2; ++d) {
    const std::uint64_t count = sat_pow(p, d);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<std::uint64_t> g(d + 1);
      std::uint64_t r = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = r % p;
        r /= p;
      }
      g[d] = 1;
      const auto rem = poly_mod(f, g, p);
      if (std::all_of(rem.begin(), rem.end(),
                      [](std::uint64_t c) { return c == 0; })) {
        return false;
      }
    }
  }
  return true;
}

void validate(const RingSpec& s) {
  std::visit(
      [](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, spec::Zn>) {
          if (n.n < 2) throw Error("Z/n requires n >= 2");
        } else if constexpr (std::is_same_v<T, spec::GF>) {
          require_prime(n.p);
          if (n.k < 1) throw Error("GF(p^k) requires k >= 1");
        } else if constexpr (std::is_same_v<T, spec::MonicQuotient>) {
          if (n.base.n < 2) throw Error("Z/n requires n >= 2");
          if (n.modulus.size() < 2) {
            throw NonMonicModulus("modulus must have degree >= 1");
          }
          if (n.modulus.back() % n.base.n != 1 % n.base.n) {
            throw NonMonicModulus("modulus is not monic");
          }
        } else if constexpr (std::is_same_v<T, spec::FamA>) {
          require_prime(n.p);
          if (n.alpha < 1) throw Error("FamA requires alpha >= 1");
        } else if constexpr (std::is_same_v<T, spec::Product>) {
          if (n.factors.empty()) throw Error("empty product");
          for (const auto& f : n.factors) validate(f);
        } else {
          require_prime(n.p);
        }
      },
      s.node);
}

}  // namespace

RingSpec normalize(RingSpec s) {
  if (auto* prod = std::get_if<spec::Product>(&s.node)) {
    std::vector<RingSpec> flat;
    for (auto& f : prod->factors) {
      RingSpec g = normalize(std::move(f));
      if (auto* inner = std::get_if<spec::Product>(&g.node)) {
        for (auto& h : inner->factors) flat.push_back(std::move(h));
      } else {
        flat.push_back(std::move(g));
      }
    }
    if (flat.size() == 1) return std::move(flat.front());
    return RingSpec{spec::Product{std::move(flat)}};
  }
  if (auto* mq = std::get_if<spec::MonicQuotient>(&s.node)) {
    for (auto& c : mq->modulus) c %= mq->base.n;
  }
  return s;
}

std::uint64_t analytic_size(const RingSpec& s) {
  return std::visit(
      [](const auto& n) -> std::uint64_t {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, spec::Zn>) {
          return n.n;
        } else if constexpr (std::is_same_v<T, spec::GF>) {
          return sat_pow(n.p, n.k);
        } else if constexpr (std::is_same_v<T, spec::MonicQuotient>) {
          return sat_pow(n.base.n, n.modulus.empty() ? 0 : n.modulus.size() - 1);
        } else if constexpr (std::is_same_v<T, spec::FamA>) {
          return sat_pow(n.p, std::uint64_t{n.alpha} + 1);
        } else if constexpr (std::is_same_v<T, spec::FamB>) {
          return sat_pow(n.p, n.p);
        } else if constexpr (std::is_same_v<T, spec::FamC>) {
          return sat_pow(n.p, 4);
        } else if constexpr (std::is_same_v<T, spec::FamD>) {
          return sat_pow(n.p, 3);
        } else {
          std::uint64_t r = 1;
          for (const auto& f : n.factors) r = sat_mul(r, analytic_size(f));
          return r;
        }
      },
      s.node);
}

std::vector<std::uint64_t> gf_modulus(std::uint64_t p, unsigned k) {
  require_prime(p);
  const std::uint64_t count = sat_pow(p, k);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<std::uint64_t> f(k + 1);
    std::uint64_t r = idx;
    for (unsigned i = 0; i < k; ++i) {
      f[i] = r % p;
      r /= p;
    }
    f[k] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw Error("no irreducible polynomial found");  // unreachable for prime p
}

namespace detail {

std::shared_ptr<const RingImpl> build_impl(const RingSpec& s) {
  return std::visit(
      [](const auto& n) -> std::shared_ptr<const RingImpl> {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, spec::Zn>) {
          return std::make_shared<ZnImpl>(n.n);
        } else if constexpr (std::is_same_v<T, spec::GF>) {
          return std::make_shared<PolyQuotientImpl>(n.p, gf_modulus(n.p, n.k),
                                                    "g");
        } else if constexpr (std::is_same_v<T, spec::MonicQuotient>) {
          return std::make_shared<PolyQuotientImpl>(n.base.n, n.modulus, "x");
        } else if constexpr (std::is_same_v<T, spec::FamA>) {
          return std::make_shared<FamAImpl>(n.p, n.alpha);
        } else if constexpr (std::is_same_v<T, spec::FamB>) {
          std::vector<std::uint64_t> f(n.p + 1, 0);
          f[n.p] = 1;
          return std::make_shared<PolyQuotientImpl>(n.p, std::move(f), "x");
        } else if constexpr (std::is_same_v<T, spec::FamC>) {
          return std::make_shared<FamCImpl>(n.p);
        } else if constexpr (std::is_same_v<T, spec::FamD>) {
          return std::make_shared<FamDImpl>(n.p);
        } else {
          std::vector<std::shared_ptr<const RingImpl>> parts;
          for (const auto& f : n.factors) parts.push_back(build_impl(f));
          return std::make_shared<ProductImpl>(std::move(parts));
        }
      },
      s.node);
}

}  // namespace detail

Ring make_ring(const RingSpec& spec_in, const RingOptions& options) {
  RingSpec s = normalize(spec_in);
  validate(s);
  const std::uint64_t size = analytic_size(s);
  if (size > options.size_cap || size > UINT32_MAX) {
    throw SizeCapExceeded(size, options.size_cap);
  }
  auto impl = detail::build_impl(s);
  if (impl->size() != size) {
    throw std::logic_error("ring size disagrees with analytic size");
  }
  return Ring(std::move(s), std::move(impl));
}

std::uint32_t Ring::size() const { return impl_->size(); }
Element Ring::one() const { return impl_->one(); }
Element Ring::add(Element a, Element b) const { return impl_->add(a, b); }
Element Ring::neg(Element a) const { return impl_->neg(a); }
Element Ring::mul(Element a, Element b) const { return impl_->mul(a, b); }
std::string Ring::label(Element a) const { return impl_->label(a); }

std::optional<Element> Ring::find_label(std::string_view text) const {
  std::string wanted;
  for (char c : text) {
    if (c != ' ') wanted += c;
  }
  for (Element a = 0; a < size(); ++a) {
    if (impl_->label(a) == wanted) return a;
  }
  return std::nullopt;
}

std::vector<std::uint64_t> Ring::decode(Element a) const {
  return impl_->decode(a);
}

Element Ring::encode(std::span<const std::uint64_t> coords) const {
  if (coords.size() != impl_->coordinate_count()) {
    throw Error("wrong number of coordinates");
  }
  return impl_->encode(coords);
}

void Ring::annihilator(Element a, std::vector<Element>& out) const {
  impl_->annihilator(a, out);
}

void Ring::annihilator_by_scan(Element a, std::vector<Element>& out) const {
  impl_->annihilator_by_scan(a, out);
}

ElementClass classify_element(const Ring& ring, Element a) {
  ElementClass c;
  c.element = a;
  c.is_zero = a == ring.zero();

  // Repeated squaring reaches 0 iff a is nilpotent; otherwise it cycles.
  std::unordered_set<Element> seen;
  for (Element x = a;;) {
    if (x == 0) {
      c.is_nilpotent = true;
      break;
    }
    if (!seen.insert(x).second) break;
    x = ring.mul(x, x);
  }

  const Element one = ring.one();
  for (Element b = 0; b < ring.size(); ++b) {
    if (ring.mul(a, b) == one) {
      c.is_unit = true;
      break;
    }
  }
  std::vector<Element> ann;
  ring.annihilator(a, ann);
  c.is_zero_divisor = c.is_zero || ann.size() > 1;

  if (const auto* zn = std::get_if<spec::Zn>(&ring.spec().node)) {
    c.gcd_with_n = std::gcd(std::uint64_t{a}, zn->n);
  }
  return c;
}

bool is_reduced(const Ring& ring) {
  for (Element a = 1; a < ring.size(); ++a) {
    if (classify_element(ring, a).is_nilpotent) return false;
  }
  return true;
}

bool is_field(const Ring& ring) {
  for (Element a = 1; a < ring.size(); ++a) {
    if (!classify_element(ring, a).is_unit) return false;
  }
  return true;
}

}  // namespace zdg
