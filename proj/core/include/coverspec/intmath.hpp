#pragma once

#include "coverspec/rational.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace coverspec {

/// Prime factorization of |n| (n != 0) as (prime, exponent) pairs in increasing prime order.
/// Trial division to 10^5 followed by Miller-Rabin and Pollard rho on the cofactor.
std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& n);

/// Positive divisors of |n|, sorted ascending.
std::vector<BigInt> divisors(const BigInt& n);

/// Writes n = s^2 * f with f square-free (sign carried by f). Returns {s, f}.
std::pair<BigInt, BigInt> split_square(const BigInt& n);

bool is_prime(std::uint64_t n);

/// Legendre symbol (a/p) for an odd prime p: 0, 1 or -1.
int legendre(std::int64_t a, std::uint64_t p);

}  // namespace coverspec
