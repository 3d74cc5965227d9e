#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace srtrunc {

using BigInt = mpz_class;

/// Exact binomial coefficient; zero when k > n or either argument is negative.
BigInt binomial(long n, long k);

inline std::string to_string(const BigInt& v) { return v.get_str(); }

/// (-1)^e as +1 / -1.
constexpr int sign_power(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace srtrunc
