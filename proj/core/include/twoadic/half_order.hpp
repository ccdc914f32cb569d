#pragma once

#include <string_view>

#include "twoadic/core_arith.hpp"
#include "twoadic/verdict.hpp"

namespace twoadic {

enum class InvolutionClass { minus_one, half_minus_one, half_plus_one, one, other };

std::string_view to_string(InvolutionClass c);

/// Tags r mod 2^n as -1, 2^(n-1)-1, 2^(n-1)+1, 1 or other. The first three
/// coincide with other labels at n < 3; matched in the order listed.
InvolutionClass classify_involution(const Residue& r);

struct HalfOrderResult {
  OddInteger g{1L};
  unsigned n = 3;
  BigInt half_exponent;
  Residue residue;
  InvolutionClass involution = InvolutionClass::other;
  bool matches_theorem5 = false;
};

/// omega_g(2^n) / 2. Requires n >= 2 and g != 1 mod 2^n.
BigInt half_order_exponent(const OddInteger& g, PowerOfTwoModulus n);

/// g^(omega/2) mod 2^n, its class, and whether it matches the stated case
/// split (2^(n-1)+1 for g != +-1, -1 for g = -1). Requires n >= 3, g != 1.
HalfOrderResult half_order_residue(const OddInteger& g, PowerOfTwoModulus n);

/// The half-order residue is one of {-1, 2^(n-1)-1, 2^(n-1)+1}.
CheckResult check_lemma2(const OddInteger& g, PowerOfTwoModulus n);

/// Residue -1 forces omega = 2 and g = -1.
CheckResult check_lemma3(const OddInteger& g, PowerOfTwoModulus n);

/// The 2^(n-1)-1 class never occurs and g != +-1 gives 2^(n-1)+1. The family
/// g = 2^(n-1)-1 mod 2^n violates both as written; it is reported as
/// paper_exception, anything else as counterexample.
CheckResult check_lemma4_theorem5(const OddInteger& g, PowerOfTwoModulus n);

}  // namespace twoadic
