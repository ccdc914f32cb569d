#pragma once

#include <compare>
#include <cstdint>

#include "twoadic/bigint.hpp"

namespace twoadic {

inline constexpr unsigned kDefaultMaxExponent = 4096;

/// Odd signed integer of arbitrary size.
class OddInteger {
 public:
  OddInteger(const BigInt& value);  // NOLINT(google-explicit-constructor)
  OddInteger(long value);            // NOLINT(google-explicit-constructor)

  const BigInt& value() const noexcept { return value_; }

  bool is_unit_sign() const;  // value in {-1, 1}

  friend bool operator==(const OddInteger&, const OddInteger&) = default;

 private:
  BigInt value_;
};

/// The exponent n of a modulus 2^n, 1 <= n <= max_exponent.
class PowerOfTwoModulus {
 public:
  PowerOfTwoModulus(long long n,  // NOLINT(google-explicit-constructor)
                    unsigned max_exponent = kDefaultMaxExponent);

  unsigned exponent() const noexcept { return n_; }
  BigInt modulus() const { return pow2(n_); }
  /// 2^(n-1).
  BigInt half() const { return pow2(n_ - 1); }

  friend auto operator<=>(const PowerOfTwoModulus&, const PowerOfTwoModulus&) = default;

 private:
  unsigned n_;
};

/// Canonical representative in [0, 2^n).
struct Residue {
  BigInt value;
  unsigned n = 1;

  friend bool operator==(const Residue&, const Residue&) = default;
};

/// w = 2^d * odd_part.
struct ValuationDecomposition {
  unsigned long d = 0;
  OddInteger odd_part{1L};
};

Residue canonical_residue(const BigInt& x, PowerOfTwoModulus n);

/// g^e mod 2^n by left-to-right square-and-multiply. Throws DomainError on e < 0.
Residue mod_pow(const BigInt& g, const BigInt& e, PowerOfTwoModulus n);

/// Largest d with 2^d | w. Throws DomainError for w = 0.
unsigned long two_adic_valuation(const BigInt& w);

/// Sign stays with the odd part. Throws DomainError for w = 0.
ValuationDecomposition odd_part(const BigInt& w);

/// c(g) = min{k : g < 2^(k-1) - 1} for g > 1, min{k : g > -2^(k-1) - 1} for
/// g < -1. Throws DomainError for g in {-1, 1}.
unsigned long c_of_g(const OddInteger& g);

}  // namespace twoadic
