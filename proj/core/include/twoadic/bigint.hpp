#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace twoadic {

using BigInt = mpz_class;

/// Parses a base-10 signed integer; throws UsageError on malformed text.
BigInt parse_bigint(std::string_view text);

std::string to_string(const BigInt& x);

/// 2^k.
BigInt pow2(unsigned long k);

/// The value as int64 when it fits.
std::optional<std::int64_t> to_int64(const BigInt& x);

}  // namespace twoadic
