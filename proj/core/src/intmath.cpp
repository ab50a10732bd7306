#include "coverspec/intmath.hpp"

#include "coverspec/error.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <map>

namespace coverspec {

namespace {

bool probably_prime(const BigInt& n) { return boost::multiprecision::miller_rabin_test(n, 30); }

BigInt pollard_rho(const BigInt& n) {
  if (n % 2 == 0) return 2;
  for (BigInt c = 1;; ++c) {
    BigInt x = 2;
    BigInt y = 2;
    BigInt d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      d = gcd(boost::multiprecision::abs(x - y), n);
    }
    if (d != n) return d;
  }
}

void factor_into(const BigInt& n, std::map<BigInt, unsigned>& out) {
  if (n == 1) return;
  if (probably_prime(n)) {
    ++out[n];
    return;
  }
  const BigInt d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& n) {
  if (n == 0) throw Error(ErrorCode::DomainError, "factorize(0)");
  BigInt m = boost::multiprecision::abs(n);
  std::map<BigInt, unsigned> found;
  for (unsigned p = 2; p < 100000u; p += (p == 2 ? 1u : 2u)) {
    if (BigInt(p) * p > m) break;
    while (m % p == 0) {
      ++found[BigInt(p)];
      m /= p;
    }
  }
  if (m > 1) factor_into(m, found);
  return {found.begin(), found.end()};
}

std::vector<BigInt> divisors(const BigInt& n) {
  std::vector<BigInt> result{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t existing = result.size();
    BigInt pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < existing; ++i) result.push_back(result[i] * pk);
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::pair<BigInt, BigInt> split_square(const BigInt& n) {
  if (n == 0) return {0, 0};
  BigInt s = 1;
  BigInt f = n < 0 ? -1 : 1;
  for (const auto& [p, e] : factorize(n)) {
    for (unsigned k = 0; k < e / 2; ++k) s *= p;
    if (e % 2) f *= p;
  }
  return {s, f};
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

int legendre(std::int64_t a, std::uint64_t p) {
  const auto m = static_cast<std::int64_t>(p);
  std::int64_t base = ((a % m) + m) % m;
  if (base == 0) return 0;
  // Euler's criterion: a^((p-1)/2) mod p.
  std::uint64_t result = 1;
  auto b = static_cast<std::uint64_t>(base);
  std::uint64_t e = (p - 1) / 2;
  while (e) {
    if (e & 1u) result = static_cast<std::uint64_t>((static_cast<unsigned __int128>(result) * b) % p);
    b = static_cast<std::uint64_t>((static_cast<unsigned __int128>(b) * b) % p);
    e >>= 1u;
  }
  return result == 1 ? 1 : -1;
}

}  // namespace coverspec
