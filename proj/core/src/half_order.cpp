#include "twoadic/half_order.hpp"

#include <string>

#include "twoadic/errors.hpp"
#include "twoadic/order_engine.hpp"

namespace twoadic {

std::string_view to_string(InvolutionClass c) {
  switch (c) {
    case InvolutionClass::minus_one: return "MINUS_ONE";
    case InvolutionClass::half_minus_one: return "HALF_MINUS_ONE";
    case InvolutionClass::half_plus_one: return "HALF_PLUS_ONE";
    case InvolutionClass::one: return "ONE";
    case InvolutionClass::other: return "OTHER";
  }
  return "OTHER";
}

InvolutionClass classify_involution(const Residue& r) {
  const BigInt modulus = pow2(r.n);
  const BigInt half = pow2(r.n - 1);
  if (r.value == modulus - 1) return InvolutionClass::minus_one;
  if (r.value == half - 1) return InvolutionClass::half_minus_one;
  if (r.value == half + 1) return InvolutionClass::half_plus_one;
  if (r.value == 1) return InvolutionClass::one;
  return InvolutionClass::other;
}

namespace {

void require_not_identity(const OddInteger& g, PowerOfTwoModulus n) {
  if (canonical_residue(g.value(), n).value == 1) {
    throw DomainError("g = 1 mod 2^" + std::to_string(n.exponent()) +
                      ": omega = 1 is odd; half-exponent undefined");
  }
}

void require_at_least(PowerOfTwoModulus n, unsigned lowest) {
  if (n.exponent() < lowest) {
    throw DomainError("requires n >= " + std::to_string(lowest) + ", got n = " +
                      std::to_string(n.exponent()));
  }
}

std::string describe(const HalfOrderResult& r) {
  return std::string(to_string(r.involution)) + " (" + to_string(r.residue.value) + ")";
}

}  // namespace

BigInt half_order_exponent(const OddInteger& g, PowerOfTwoModulus n) {
  if (n.exponent() == 1) {
    throw DomainError("n = 1: every odd g = 1 mod 2; half-exponent undefined");
  }
  require_not_identity(g, n);
  return pow2(order_log2(g, n) - 1);
}

HalfOrderResult half_order_residue(const OddInteger& g, PowerOfTwoModulus n) {
  require_at_least(n, 3);
  HalfOrderResult result{g, n.exponent(), half_order_exponent(g, n), {}, {}, false};
  result.residue = mod_pow(g.value(), result.half_exponent, n);
  result.involution = classify_involution(result.residue);
  const bool g_is_minus_one = canonical_residue(g.value(), n).value == n.modulus() - 1;
  result.matches_theorem5 = g_is_minus_one
                                ? result.involution == InvolutionClass::minus_one
                                : result.involution == InvolutionClass::half_plus_one;
  return result;
}

CheckResult check_lemma2(const OddInteger& g, PowerOfTwoModulus n) {
  const HalfOrderResult r = half_order_residue(g, n);
  switch (r.involution) {
    case InvolutionClass::minus_one:
    case InvolutionClass::half_minus_one:
    case InvolutionClass::half_plus_one:
      return CheckResult::holds();
    default:
      return CheckResult::violation(Verdict::counterexample, describe(r),
                                    "one of {-1, 2^(n-1)-1, 2^(n-1)+1}");
  }
}

CheckResult check_lemma3(const OddInteger& g, PowerOfTwoModulus n) {
  const HalfOrderResult r = half_order_residue(g, n);
  if (r.involution != InvolutionClass::minus_one) return CheckResult::not_applicable();
  const bool omega_is_two = r.half_exponent == 1;
  const bool g_is_minus_one = canonical_residue(g.value(), n).value == n.modulus() - 1;
  if (omega_is_two && g_is_minus_one) return CheckResult::holds();
  return CheckResult::violation(
      Verdict::counterexample,
      "omega = " + to_string(BigInt(2 * r.half_exponent)) + ", g mod 2^n = " +
          to_string(canonical_residue(g.value(), n).value),
      "omega = 2 and g = -1 mod 2^n");
}

CheckResult check_lemma4_theorem5(const OddInteger& g, PowerOfTwoModulus n) {
  const HalfOrderResult r = half_order_residue(g, n);
  if (r.matches_theorem5) return CheckResult::holds();
  const BigInt g_mod = canonical_residue(g.value(), n).value;
  const bool g_is_minus_one = g_mod == n.modulus() - 1;
  const std::string expected = g_is_minus_one ? "MINUS_ONE (2^n-1)" : "HALF_PLUS_ONE (2^(n-1)+1)";
  const bool known_gap =
      g_mod == n.half() - 1 && r.involution == InvolutionClass::half_minus_one;
  return CheckResult::violation(known_gap ? Verdict::paper_exception : Verdict::counterexample,
                                describe(r), expected);
}

}  // namespace twoadic
