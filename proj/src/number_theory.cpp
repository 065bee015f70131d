#include "zdg/number_theory.hpp"

#include <algorithm>
#include <numeric>

namespace zdg {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t euler_phi(std::uint64_t m) {
  std::uint64_t result = m;
  for (const auto& [p, e] : factorize(m)) {
    result = result / p * (p - 1);
  }
  return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::pair<std::uint64_t, unsigned>> as_prime_power(
    std::uint64_t n) {
  if (n < 2) return std::nullopt;
  const auto f = factorize(n);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp,
                                         std::uint64_t limit) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > limit / base) return std::nullopt;
    r *= base;
  }
  if (r > limit) return std::nullopt;
  return r;
}

unsigned valuation(std::uint64_t n, std::uint64_t p) {
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

}  // namespace zdg
