#include "twoadic/exp_sum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "twoadic/errors.hpp"
#include "twoadic/order_engine.hpp"

namespace twoadic {

ResidueMultiset::ResidueMultiset(unsigned n) : n_(n), modulus_(pow2(n)) {}

void ResidueMultiset::add(const BigInt& r, std::uint64_t count) {
  if (sgn(r) < 0 || r >= modulus_) {
    throw DomainError("residue " + to_string(r) + " outside [0, 2^" + std::to_string(n_) + ")");
  }
  if (count == 0) return;
  total_ += count;
  auto [it, inserted] = index_.try_emplace(r, entries_.size());
  if (inserted) {
    entries_.push_back({r, count});
  } else {
    entries_[it->second].count += count;
  }
}

std::uint64_t ResidueMultiset::count(const BigInt& r) const {
  auto it = index_.find(r);
  return it == index_.end() ? 0 : entries_[it->second].count;
}

bool operator==(const ResidueMultiset& a, const ResidueMultiset& b) {
  if (a.n_ != b.n_ || a.total_ != b.total_ || a.entries_.size() != b.entries_.size()) {
    return false;
  }
  return std::all_of(a.entries_.begin(), a.entries_.end(),
                     [&](const auto& e) { return b.count(e.residue) == e.count; });
}

namespace {

void require_admissible(const OddInteger& g, const BigInt& w) {
  if (g.is_unit_sign()) throw DomainError("g must be an odd integer not in {-1, 1}");
  if (sgn(w) == 0) throw DomainError("w must be non-zero");
}

void require_at_bound(const OddInteger& g, const BigInt& w, PowerOfTwoModulus n) {
  const unsigned long bound = vanishing_bound(g, w);
  if (n.exponent() < bound) {
    throw DomainError("requires n >= " + std::to_string(bound) + ", got n = " +
                      std::to_string(n.exponent()));
  }
}

void reduce(BigInt& x, unsigned n) { mpz_fdiv_r_2exp(x.get_mpz_t(), x.get_mpz_t(), n); }

std::uint64_t to_word(const BigInt& x, unsigned n) {
  BigInt r = x;
  reduce(r, n);
  return mpz_get_ui(r.get_mpz_t());
}

}  // namespace

ResidueMultiset residue_orbit(const OddInteger& g, const BigInt& w, PowerOfTwoModulus n) {
  require_admissible(g, w);
  const unsigned long log2_omega = order_log2(g, n);
  if (log2_omega > 30) {
    throw ResourceError("residue_orbit: orbit of length 2^" + std::to_string(log2_omega) +
                        " exceeds the 2^30 cap");
  }
  const std::uint64_t omega = std::uint64_t{1} << log2_omega;
  const unsigned bits = n.exponent();
  const BigInt base = canonical_residue(g.value(), n).value;
  BigInt x = canonical_residue(w, n).value;
  ResidueMultiset orbit(bits);
  for (std::uint64_t k = 1; k <= omega; ++k) {
    x *= base;
    reduce(x, bits);
    orbit.add(x);
  }
  return orbit;
}

ZeroCertificate is_exact_zero(const ResidueMultiset& m) {
  ZeroCertificate cert;
  const unsigned n = m.exponent();
  if (n == 0) {
    cert.is_zero = m.total() == 0;
    if (!cert.is_zero) cert.witness = BigInt(0);
    return cert;
  }
  const BigInt half = pow2(n - 1);
  std::set<BigInt> seen;
  for (const auto& entry : m.entries()) {
    BigInt low = entry.residue;
    mpz_fdiv_r_2exp(low.get_mpz_t(), low.get_mpz_t(), n - 1);
    if (!seen.insert(low).second) continue;
    BigInt high = low + half;
    const std::uint64_t c_low = m.count(low);
    const std::uint64_t c_high = m.count(high);
    if (c_low != c_high) {
      cert.pairs.clear();
      cert.witness = std::move(low);
      return cert;
    }
    cert.pairs.push_back({std::move(low), std::move(high), c_low});
  }
  cert.is_zero = true;
  return cert;
}

bool verify_certificate(const ResidueMultiset& m, const ZeroCertificate& cert) {
  const unsigned n = m.exponent();
  if (n == 0) return cert.is_zero == (m.total() == 0);
  const BigInt half = pow2(n - 1);
  if (!cert.is_zero) {
    if (!cert.witness) return false;
    const BigInt& r = *cert.witness;
    return sgn(r) >= 0 && r < half && m.count(r) != m.count(r + half);
  }
  std::set<BigInt> lows;
  std::uint64_t covered = 0;
  for (const auto& p : cert.pairs) {
    if (sgn(p.low) < 0 || p.low >= half || p.high != p.low + half) return false;
    if (!lows.insert(p.low).second) return false;
    if (m.count(p.low) != p.multiplicity || m.count(p.high) != p.multiplicity) return false;
    covered += 2 * p.multiplicity;
  }
  return covered == m.total();
}

std::complex<double> float_sum(const ResidueMultiset& m) {
  const unsigned n = m.exponent();
  if (n > kFloatExponentCap) {
    throw PrecisionError("float_sum: n = " + std::to_string(n) +
                         " exceeds 52; use is_exact_zero for an exact decision");
  }
  double re = 0.0;
  double im = 0.0;
  for (const auto& e : m.entries()) {
    // r < 2^52, so r / 2^n is exact in double.
    const double turn = std::ldexp(mpz_get_d(e.residue.get_mpz_t()), -static_cast<int>(n));
    const double angle = 2.0 * std::numbers::pi * turn;
    const auto weight = static_cast<double>(e.count);
    re += weight * std::cos(angle);
    im += weight * std::sin(angle);
  }
  return {re, im};
}

unsigned long vanishing_bound(const OddInteger& g, const BigInt& w) {
  require_admissible(g, w);
  return two_adic_valuation(w) + std::max(3UL, c_of_g(g));
}

CheckResult check_theorem6(const OddInteger& g, const BigInt& w, PowerOfTwoModulus n) {
  require_admissible(g, w);
  const unsigned long bound = vanishing_bound(g, w);
  if (n.exponent() < bound) return CheckResult::not_applicable();
  const unsigned long d = two_adic_valuation(w);
  const PowerOfTwoModulus reduced(static_cast<long long>(n.exponent() - d));
  if (is_plus_minus_one(g.value(), reduced)) {
    return CheckResult::violation(Verdict::counterexample,
                                  "guard: g = +-1 mod 2^" + std::to_string(reduced.exponent()),
                                  "g != +-1 mod 2^(n-d(w))");
  }
  const ZeroCertificate cert = is_exact_zero(residue_orbit(g, w, n));
  if (cert.is_zero) return CheckResult::holds();
  return CheckResult::violation(Verdict::counterexample,
                                "nonzero: antipodal mismatch at r = " + to_string(*cert.witness),
                                "exact zero");
}

std::optional<MinVanishing> min_vanishing_n(const OddInteger& g, const BigInt& w,
                                            PowerOfTwoModulus n_max) {
  const unsigned long bound = vanishing_bound(g, w);
  for (unsigned n = 1; n <= n_max.exponent(); ++n) {
    if (is_exact_zero(residue_orbit(g, w, n)).is_zero) {
      return MinVanishing{n, static_cast<long>(bound) - static_cast<long>(n)};
    }
  }
  return std::nullopt;
}

bool order_scaling_holds(const OddInteger& g, const BigInt& w, PowerOfTwoModulus n) {
  require_at_bound(g, w, n);
  const unsigned long d = two_adic_valuation(w);
  const PowerOfTwoModulus reduced(static_cast<long long>(n.exponent() - d));
  return order_log2(g, n) == d + order_log2(g, reduced);
}

bool antipodal_shift_holds(const OddInteger& g, const BigInt& w, PowerOfTwoModulus n) {
  require_at_bound(g, w, n);
  const unsigned bits = n.exponent();
  const unsigned long d = two_adic_valuation(w);
  const PowerOfTwoModulus reduced(static_cast<long long>(bits - d));
  const unsigned long log2_omega = order_log2(g, reduced);
  if (log2_omega - 1 > 30) {
    throw ResourceError("antipodal_shift_holds: half-period 2^" +
                        std::to_string(log2_omega - 1) + " exceeds the 2^30 cap");
  }
  const std::uint64_t h = std::uint64_t{1} << (log2_omega - 1);
  const BigInt shift_factor = mod_pow(g.value(), BigInt(static_cast<unsigned long>(h)), n).value;

  if (bits <= 64) {
    const std::uint64_t mask = bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
    const std::uint64_t half_word = std::uint64_t{1} << (bits - 1);
    const std::uint64_t base = to_word(g.value(), bits);
    std::uint64_t a = (to_word(w, bits) * base) & mask;  // w g^k
    std::uint64_t b = (a * to_word(shift_factor, bits)) & mask;  // w g^(k+h)
    for (std::uint64_t k = 1; k <= h; ++k) {
      if (b != ((a + half_word) & mask)) return false;
      a = (a * base) & mask;
      b = (b * base) & mask;
    }
    return true;
  }

  const BigInt base = canonical_residue(g.value(), n).value;
  const BigInt half = n.half();
  BigInt a = canonical_residue(w * base, n).value;
  BigInt b = a * shift_factor;
  reduce(b, bits);
  BigInt expected;
  for (std::uint64_t k = 1; k <= h; ++k) {
    expected = a + half;
    reduce(expected, bits);
    if (b != expected) return false;
    a *= base;
    reduce(a, bits);
    b *= base;
    reduce(b, bits);
  }
  return true;
}

}  // namespace twoadic
