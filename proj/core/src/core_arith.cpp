#include "twoadic/core_arith.hpp"

#include <string>

#include "twoadic/errors.hpp"

namespace twoadic {

OddInteger::OddInteger(const BigInt& value) : value_(value) {
  if (mpz_even_p(value_.get_mpz_t())) {
    throw DomainError("OddInteger: " + to_string(value_) + " is even");
  }
}

OddInteger::OddInteger(long value) : OddInteger(BigInt(value)) {}

bool OddInteger::is_unit_sign() const { return value_ == 1 || value_ == -1; }

PowerOfTwoModulus::PowerOfTwoModulus(long long n, unsigned max_exponent) {
  if (n < 1) throw DomainError("modulus exponent must be >= 1, got " + std::to_string(n));
  if (n > static_cast<long long>(max_exponent)) {
    throw DomainError("modulus exponent " + std::to_string(n) + " exceeds limit " +
                      std::to_string(max_exponent));
  }
  n_ = static_cast<unsigned>(n);
}

namespace {

void reduce_in_place(BigInt& x, unsigned n) {
  mpz_fdiv_r_2exp(x.get_mpz_t(), x.get_mpz_t(), n);
}

}  // namespace

Residue canonical_residue(const BigInt& x, PowerOfTwoModulus n) {
  Residue r{x, n.exponent()};
  reduce_in_place(r.value, n.exponent());
  return r;
}

Residue mod_pow(const BigInt& g, const BigInt& e, PowerOfTwoModulus n) {
  if (sgn(e) < 0) throw DomainError("mod_pow: negative exponent " + to_string(e));
  const unsigned bits = n.exponent();
  BigInt base = g;
  reduce_in_place(base, bits);
  BigInt acc = 1;
  for (auto i = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; i >= 0; --i) {
    acc *= acc;
    reduce_in_place(acc, bits);
    if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) {
      acc *= base;
      reduce_in_place(acc, bits);
    }
  }
  return {acc, bits};
}

unsigned long two_adic_valuation(const BigInt& w) {
  if (sgn(w) == 0) throw DomainError("valuation undefined for zero");
  // scan1 on a negative two's-complement value finds the same lowest set bit.
  return mpz_scan1(w.get_mpz_t(), 0);
}

ValuationDecomposition odd_part(const BigInt& w) {
  const unsigned long d = two_adic_valuation(w);
  BigInt w0;
  mpz_tdiv_q_2exp(w0.get_mpz_t(), w.get_mpz_t(), d);
  return {d, OddInteger(w0)};
}

unsigned long c_of_g(const OddInteger& g) {
  const BigInt& v = g.value();
  if (g.is_unit_sign()) throw DomainError("c(g) defined only for odd g not in {-1, 1}");
  // g > 1:  g < 2^(k-1) - 1  <=>  2^(k-1) > g + 1, least k-1 = bitlen(g + 1).
  // g < -1: g > -2^(k-1) - 1 <=>  2^(k-1) > |g| - 1, least k-1 = bitlen(|g| - 1).
  BigInt bound = sgn(v) > 0 ? BigInt(v + 1) : BigInt(-v - 1);
  return mpz_sizeinbase(bound.get_mpz_t(), 2) + 1;
}

}  // namespace twoadic
