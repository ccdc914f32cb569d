#pragma once

#include <cstdint>
#include <vector>

#include "twoadic/core_arith.hpp"
#include "twoadic/verdict.hpp"

namespace twoadic {

enum class OrderPath { naive, fast };

/// omega = order of g modulo 2^n.
struct OrderRecord {
  OddInteger g{1L};
  unsigned n = 1;
  BigInt omega;
  OrderPath path = OrderPath::fast;
};

/// Iteration cap for the definitional scan.
inline constexpr std::uint64_t kNaiveOrderCap = std::uint64_t{1} << 22;

/// Least k >= 1 with g^k = 1 mod 2^n, found by multiplying one step at a
/// time. Throws ResourceError once kNaiveOrderCap steps have been taken.
OrderRecord order_naive(const OddInteger& g, PowerOfTwoModulus n);

/// Same value as order_naive via repeated squaring: every unit order mod 2^n
/// is a power of two, so the first j with g^(2^j) = 1 gives omega = 2^j.
OrderRecord order_fast(const OddInteger& g, PowerOfTwoModulus n);

/// log2 of the order (fast path), without building 2^j.
unsigned long order_log2(const OddInteger& g, PowerOfTwoModulus n);

/// Orders for n = 1..n_max, fast path.
std::vector<OrderRecord> order_table(const OddInteger& g, PowerOfTwoModulus n_max);

/// g is congruent to 1 or -1 mod 2^n.
bool is_plus_minus_one(const BigInt& g, PowerOfTwoModulus n);

/// Order doubling: for g != +-1 mod 2^n, omega(2^(n+1)) = 2 omega(2^n).
CheckResult check_lemma1(const OddInteger& g, PowerOfTwoModulus n);

}  // namespace twoadic
