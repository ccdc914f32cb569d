#include "twoadic/order_engine.hpp"

#include <string>

#include "twoadic/errors.hpp"

namespace twoadic {

namespace {

void mul_mod(BigInt& acc, const BigInt& factor, unsigned n) {
  acc *= factor;
  mpz_fdiv_r_2exp(acc.get_mpz_t(), acc.get_mpz_t(), n);
}

}  // namespace

OrderRecord order_naive(const OddInteger& g, PowerOfTwoModulus n) {
  const BigInt base = canonical_residue(g.value(), n).value;
  BigInt acc = base;
  std::uint64_t k = 1;
  while (acc != 1) {
    if (k == kNaiveOrderCap) {
      throw ResourceError("order_naive: no order <= 2^22 for g=" + to_string(g.value()) +
                          " n=" + std::to_string(n.exponent()));
    }
    mul_mod(acc, base, n.exponent());
    ++k;
  }
  return {g, n.exponent(), BigInt(static_cast<unsigned long>(k)), OrderPath::naive};
}

unsigned long order_log2(const OddInteger& g, PowerOfTwoModulus n) {
  BigInt x = canonical_residue(g.value(), n).value;
  unsigned long j = 0;
  while (x != 1) {
    mul_mod(x, x, n.exponent());
    ++j;
  }
  return j;
}

OrderRecord order_fast(const OddInteger& g, PowerOfTwoModulus n) {
  return {g, n.exponent(), pow2(order_log2(g, n)), OrderPath::fast};
}

std::vector<OrderRecord> order_table(const OddInteger& g, PowerOfTwoModulus n_max) {
  std::vector<OrderRecord> table;
  table.reserve(n_max.exponent());
  for (unsigned n = 1; n <= n_max.exponent(); ++n) table.push_back(order_fast(g, n));
  return table;
}

bool is_plus_minus_one(const BigInt& g, PowerOfTwoModulus n) {
  const BigInt r = canonical_residue(g, n).value;
  return r == 1 || r == n.modulus() - 1;
}

CheckResult check_lemma1(const OddInteger& g, PowerOfTwoModulus n) {
  if (is_plus_minus_one(g.value(), n)) return CheckResult::not_applicable();
  const PowerOfTwoModulus next(n.exponent() + 1LL);
  const unsigned long lower = order_log2(g, n);
  const unsigned long upper = order_log2(g, next);
  if (upper == lower + 1) return CheckResult::holds();
  return CheckResult::violation(Verdict::counterexample,
                                "omega(2^(n+1)) = " + to_string(pow2(upper)),
                                "2*omega(2^n) = " + to_string(pow2(lower + 1)));
}

}  // namespace twoadic
