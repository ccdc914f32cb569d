#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "twoadic/core_arith.hpp"
#include "twoadic/verdict.hpp"

namespace twoadic {

/// Multiplicities of exponents r in [0, 2^n). The sum it stands for is
/// sum_r count(r) * exp(2 pi i r / 2^n). Entries keep first-insertion order.
class ResidueMultiset {
 public:
  struct Entry {
    BigInt residue;
    std::uint64_t count = 0;
  };

  /// n = 0 is allowed (modulus 1, only residue 0).
  explicit ResidueMultiset(unsigned n);

  /// Throws DomainError when r is outside [0, 2^n).
  void add(const BigInt& r, std::uint64_t count = 1);

  std::uint64_t count(const BigInt& r) const;
  std::uint64_t total() const noexcept { return total_; }
  unsigned exponent() const noexcept { return n_; }
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }

  /// Multiset equality, insertion order ignored.
  friend bool operator==(const ResidueMultiset& a, const ResidueMultiset& b);

 private:
  unsigned n_;
  BigInt modulus_;
  std::uint64_t total_ = 0;
  std::vector<Entry> entries_;
  std::map<BigInt, std::size_t> index_;
};

/// Residues r and r + 2^(n-1) sharing a multiplicity.
struct AntipodalPair {
  BigInt low;
  BigInt high;
  std::uint64_t multiplicity = 0;
};

/// Zero iff every antipodal pair has equal multiplicities (the 2^(n-1) roots
/// with r < 2^(n-1) are linearly independent over Q). On failure, witness is
/// the first r < 2^(n-1) in entry order with count(r) != count(r + 2^(n-1)).
struct ZeroCertificate {
  bool is_zero = false;
  std::vector<AntipodalPair> pairs;
  std::optional<BigInt> witness;
};

/// Largest modulus exponent the floating evaluation accepts.
inline constexpr unsigned kFloatExponentCap = 52;

/// Longest orbit residue_orbit will enumerate.
inline constexpr std::uint64_t kOrbitLengthCap = std::uint64_t{1} << 30;

/// {w g^k mod 2^n : k = 1..omega_g(2^n)} with multiplicities.
ResidueMultiset residue_orbit(const OddInteger& g, const BigInt& w, PowerOfTwoModulus n);

ZeroCertificate is_exact_zero(const ResidueMultiset& m);

/// Re-checks a certificate against the multiset in one pass.
bool verify_certificate(const ResidueMultiset& m, const ZeroCertificate& cert);

/// Numeric value of the sum. Throws PrecisionError for n > kFloatExponentCap.
std::complex<double> float_sum(const ResidueMultiset& m);

/// d(w) + max{3, c(g)}.
unsigned long vanishing_bound(const OddInteger& g, const BigInt& w);

/// For n >= vanishing_bound(g, w), the orbit sum is exactly zero.
CheckResult check_theorem6(const OddInteger& g, const BigInt& w, PowerOfTwoModulus n);

struct MinVanishing {
  unsigned long n = 0;
  long slack = 0;  // vanishing_bound - n
};

/// Least n <= n_max where the sum vanishes exactly.
std::optional<MinVanishing> min_vanishing_n(const OddInteger& g, const BigInt& w,
                                            PowerOfTwoModulus n_max);

/// omega_g(2^n) = 2^d(w) omega_g(2^(n-d(w))). Requires n >= vanishing_bound.
bool order_scaling_holds(const OddInteger& g, const BigInt& w, PowerOfTwoModulus n);

/// With m = n - d(w) and h = omega_g(2^m)/2:
///   w g^(k+h) = 2^(n-1) + w g^k mod 2^n   for k = 1..h.
/// Requires n >= vanishing_bound. Word-size arithmetic when n <= 64.
bool antipodal_shift_holds(const OddInteger& g, const BigInt& w, PowerOfTwoModulus n);

}  // namespace twoadic
