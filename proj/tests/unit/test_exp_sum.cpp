#include "twoadic/exp_sum.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "support/oracle.hpp"
#include "twoadic/errors.hpp"
#include "twoadic/order_engine.hpp"

namespace twoadic {
namespace {

ResidueMultiset from_pairs(unsigned n, std::initializer_list<std::pair<long, std::uint64_t>> pairs) {
  ResidueMultiset m(n);
  for (auto [r, c] : pairs) m.add(r, c);
  return m;
}

ResidueMultiset from_oracle(long g, long w, unsigned n) {
  ResidueMultiset m(n);
  for (auto v : oracle::orbit_by_definition(g, w, n)) m.add(BigInt(static_cast<unsigned long>(v)));
  return m;
}

TEST(ResidueOrbit, Examples) {
  EXPECT_EQ(oracle::orbit_by_definition(3, 1, 4), (std::vector<std::uint64_t>{3, 9, 11, 1}));
  EXPECT_EQ(oracle::orbit_by_definition(3, 1, 3), (std::vector<std::uint64_t>{3, 1}));
  EXPECT_EQ(oracle::orbit_by_definition(5, 1, 4), (std::vector<std::uint64_t>{5, 9, 13, 1}));
  EXPECT_EQ(residue_orbit(3, 1, 4), from_pairs(4, {{3, 1}, {9, 1}, {11, 1}, {1, 1}}));
  EXPECT_EQ(residue_orbit(3, 1, 3), from_pairs(3, {{3, 1}, {1, 1}}));
  EXPECT_EQ(residue_orbit(5, 1, 4), from_pairs(4, {{5, 1}, {9, 1}, {13, 1}, {1, 1}}));
}

TEST(ResidueOrbit, KeepsOrbitOrder) {
  const auto orbit = residue_orbit(3, 1, 4);
  std::vector<unsigned long> keys;
  for (const auto& e : orbit.entries()) keys.push_back(e.residue.get_ui());
  EXPECT_EQ(keys, (std::vector<unsigned long>{3, 9, 11, 1}));
}

TEST(ResidueOrbit, DomainErrors) {
  EXPECT_THROW(residue_orbit(3, 0, 4), DomainError);
  EXPECT_THROW(residue_orbit(1, 1, 4), DomainError);
  EXPECT_THROW(residue_orbit(-1, 3, 4), DomainError);
  EXPECT_THROW(residue_orbit(3, 1, 40), ResourceError);
}

TEST(ResidueOrbit, MatchesDefinitionAndHasOrderSize) {
  for (unsigned n = 1; n <= 10; ++n) {
    for (long g = -15; g <= 15; g += 2) {
      if (g == 1 || g == -1) continue;
      for (long w = -20; w <= 20; ++w) {
        if (w == 0) continue;
        const auto orbit = residue_orbit(g, w, n);
        ASSERT_EQ(orbit, from_oracle(g, w, n)) << g << " " << w << " " << n;
        ASSERT_EQ(orbit.total(), order_fast(g, n).omega.get_ui());
      }
    }
  }
}

TEST(ResidueOrbit, ReducesToOddPartOrbit) {
  for (long g = -31; g <= 31; g += 2) {
    if (g == 1 || g == -1) continue;
    for (long w = -64; w <= 64; ++w) {
      if (w == 0) continue;
      const auto dec = odd_part(w);
      const unsigned long bound = vanishing_bound(g, w);
      for (unsigned n = static_cast<unsigned>(bound); n <= bound + 2; ++n) {
        const unsigned m = n - static_cast<unsigned>(dec.d);
        const auto small = residue_orbit(g, dec.odd_part.value(), m);
        ResidueMultiset scaled(n);
        const BigInt factor = pow2(dec.d);
        for (const auto& e : small.entries()) {
          scaled.add(BigInt(e.residue * factor), e.count * (std::uint64_t{1} << dec.d));
        }
        ASSERT_EQ(residue_orbit(g, w, n), scaled) << g << " " << w << " " << n;
      }
    }
  }
}

TEST(IsExactZero, Examples) {
  const auto zero = is_exact_zero(from_pairs(4, {{3, 1}, {9, 1}, {11, 1}, {1, 1}}));
  ASSERT_TRUE(zero.is_zero);
  ASSERT_EQ(zero.pairs.size(), 2u);
  EXPECT_EQ(zero.pairs[0].low, 3);
  EXPECT_EQ(zero.pairs[0].high, 11);
  EXPECT_EQ(zero.pairs[1].low, 1);
  EXPECT_EQ(zero.pairs[1].high, 9);
  EXPECT_FALSE(zero.witness);

  const auto nonzero = is_exact_zero(from_pairs(3, {{3, 1}, {1, 1}}));
  EXPECT_FALSE(nonzero.is_zero);
  ASSERT_TRUE(nonzero.witness);
  EXPECT_EQ(*nonzero.witness, 3);

  for (unsigned n : {0u, 1u, 5u, 100u}) EXPECT_TRUE(is_exact_zero(ResidueMultiset(n)).is_zero);
}

TEST(IsExactZero, ModulusOneEdge) {
  ResidueMultiset m(0);
  EXPECT_THROW(m.add(1), DomainError);
  m.add(0, 3);
  EXPECT_FALSE(is_exact_zero(m).is_zero);
  EXPECT_TRUE(verify_certificate(m, is_exact_zero(m)));
}

TEST(IsExactZero, MultiplicitiesMustMatchNotJustSupport) {
  EXPECT_FALSE(is_exact_zero(from_pairs(3, {{1, 2}, {5, 1}})).is_zero);
  EXPECT_TRUE(is_exact_zero(from_pairs(3, {{1, 2}, {5, 2}, {6, 7}, {2, 7}})).is_zero);
}

TEST(IsExactZero, AgreesWithCyclotomicReduction) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 3000; ++trial) {
    const unsigned n = 1 + rng() % 8;
    std::vector<std::uint64_t> exps;
    const std::size_t size = rng() % 12;
    for (std::size_t i = 0; i < size; ++i) exps.push_back(rng() % oracle::modulus(n));
    if (rng() % 2) {  // force an antipodally balanced multiset half the time
      const std::size_t k = exps.size();
      for (std::size_t i = 0; i < k; ++i) exps.push_back((exps[i] + oracle::modulus(n) / 2) % oracle::modulus(n));
    }
    ResidueMultiset m(n);
    for (auto e : exps) m.add(BigInt(static_cast<unsigned long>(e)));
    const auto cert = is_exact_zero(m);
    ASSERT_EQ(cert.is_zero, oracle::cyclotomic_zero(exps, n));
    ASSERT_TRUE(verify_certificate(m, cert));
  }
}

TEST(VerifyCertificate, RejectsForgeries) {
  const auto m = from_pairs(4, {{3, 1}, {9, 1}, {11, 1}, {1, 1}});
  ZeroCertificate forged = is_exact_zero(m);
  forged.pairs.pop_back();
  EXPECT_FALSE(verify_certificate(m, forged));

  const auto bad = from_pairs(3, {{3, 1}, {1, 1}});
  ZeroCertificate claim_zero;
  claim_zero.is_zero = true;
  EXPECT_FALSE(verify_certificate(bad, claim_zero));

  ZeroCertificate wrong_witness;
  wrong_witness.witness = BigInt(2);
  EXPECT_FALSE(verify_certificate(bad, wrong_witness));
}

TEST(FloatSum, Examples) {
  EXPECT_LT(std::abs(float_sum(from_pairs(4, {{3, 1}, {9, 1}, {11, 1}, {1, 1}}))), 1e-12);
  const auto i = float_sum(from_pairs(2, {{1, 1}}));
  EXPECT_NEAR(i.real(), 0.0, 1e-12);
  EXPECT_NEAR(i.imag(), 1.0, 1e-12);
  const auto four = float_sum(from_pairs(3, {{0, 4}}));
  EXPECT_DOUBLE_EQ(four.real(), 4.0);
  EXPECT_DOUBLE_EQ(four.imag(), 0.0);
}

TEST(FloatSum, PrecisionCap) {
  EXPECT_NO_THROW(float_sum(from_pairs(52, {{12345, 1}})));
  EXPECT_THROW(float_sum(from_pairs(53, {{12345, 1}})), PrecisionError);
}

TEST(FloatSum, MatchesLongDoubleOracleAndIsBoundedByTotal) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 500; ++trial) {
    const unsigned n = 1 + rng() % 12;
    const long g = (static_cast<long>(rng() % 63) - 31) | 1;
    const long w = static_cast<long>(rng() % 65) - 32;
    if (g == 1 || g == -1 || w == 0) continue;
    const auto orbit = residue_orbit(g, w, n);
    const auto s = float_sum(orbit);
    const auto ref = oracle::numeric_sum(oracle::orbit_by_definition(g, w, n), n);
    ASSERT_NEAR(s.real(), static_cast<double>(ref.real()), 1e-9);
    ASSERT_NEAR(s.imag(), static_cast<double>(ref.imag()), 1e-9);
    ASSERT_LE(std::abs(s), static_cast<double>(orbit.total()) + 1e-9);
  }
}

TEST(ExactnessCrossCheck, FloatSeparatesZeroFromNonzero) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 3000; ++trial) {
    const unsigned n = 1 + rng() % 12;
    const long g = (static_cast<long>(rng() % 127) - 63) | 1;
    const long w = static_cast<long>(rng() % 129) - 64;
    if (g == 1 || g == -1 || w == 0) continue;
    const auto orbit = residue_orbit(g, w, n);
    const bool zero = is_exact_zero(orbit).is_zero;
    const double mag = std::abs(float_sum(orbit));
    if (zero) {
      ASSERT_LT(mag, 1e-6) << g << " " << w << " " << n;
    } else {
      ASSERT_GT(mag, 1e-3) << g << " " << w << " " << n;
    }
  }
}

TEST(VanishingBound, Examples) {
  EXPECT_EQ(vanishing_bound(3, 1), 4u);
  EXPECT_EQ(vanishing_bound(3, 12), 6u);
  EXPECT_EQ(vanishing_bound(-3, 8), 6u);
  EXPECT_THROW(vanishing_bound(1, 3), DomainError);
  EXPECT_THROW(vanishing_bound(3, 0), DomainError);
}

TEST(Theorem6, Examples) {
  EXPECT_EQ(check_theorem6(3, 1, 4).verdict, Verdict::holds);
  EXPECT_EQ(check_theorem6(3, 1, 3).verdict, Verdict::hypothesis_not_met);
  EXPECT_FALSE(oracle::cyclotomic_zero(oracle::orbit_by_definition(3, 1, 3), 3));
  EXPECT_EQ(check_theorem6(5, 1, 4).verdict, Verdict::holds);
  EXPECT_TRUE(oracle::cyclotomic_zero(oracle::orbit_by_definition(5, 1, 4), 4));
  EXPECT_THROW(check_theorem6(-1, 1, 4), DomainError);
  EXPECT_THROW(check_theorem6(3, 0, 4), DomainError);
}

TEST(Theorem6, HoldsOnSmallDomainAgainstOracle) {
  for (long g = -15; g <= 15; g += 2) {
    if (g == 1 || g == -1) continue;
    for (long w = -16; w <= 16; ++w) {
      if (w == 0) continue;
      const unsigned long bound = vanishing_bound(g, w);
      for (unsigned n = static_cast<unsigned>(bound); n <= bound + 2; ++n) {
        ASSERT_EQ(check_theorem6(g, w, n).verdict, Verdict::holds);
        ASSERT_TRUE(oracle::cyclotomic_zero(oracle::orbit_by_definition(g, w, n), n));
      }
    }
  }
}

TEST(MinVanishingN, Examples) {
  // Oracle: n = 1 gives -1, n = 2 gives -i + i = 0.
  std::vector<bool> zeros;
  for (unsigned n = 1; n <= 4; ++n) zeros.push_back(oracle::cyclotomic_zero(oracle::orbit_by_definition(3, 1, n), n));
  EXPECT_EQ(zeros, (std::vector<bool>{false, true, false, true}));
  const auto a = min_vanishing_n(3, 1, 10);
  ASSERT_TRUE(a);
  EXPECT_EQ(a->n, 2u);
  EXPECT_EQ(a->slack, 2);

  const auto b = min_vanishing_n(7, 1, 10);
  ASSERT_TRUE(b);
  EXPECT_LE(b->n, vanishing_bound(7, 1));
  EXPECT_EQ(vanishing_bound(7, 1), 5u);

  EXPECT_FALSE(min_vanishing_n(3, 16, 3));
}

TEST(AntipodalShift, HoldsAboveBound) {
  std::mt19937_64 rng(47);
  int checked = 0;
  while (checked < 400) {
    const long g = (static_cast<long>(rng() % 511) - 255) | 1;
    const long w = static_cast<long>(rng() % 1025) - 512;
    if (g == 1 || g == -1 || w == 0) continue;
    const unsigned long bound = vanishing_bound(g, w);
    if (bound > 18) continue;
    const unsigned n = static_cast<unsigned>(bound + rng() % (19 - bound));
    ASSERT_TRUE(antipodal_shift_holds(g, w, n)) << g << " " << w << " " << n;
    ++checked;
  }
}

TEST(AntipodalShift, ShiftByFullHalfOrderFailsForEvenW) {
  // With even w the shift must use omega_g(2^(n-d))/2, not omega_g(2^n)/2:
  // w g^(k + omega/2) = w g^k mod 2^n here.
  const long g = 3, w = 2;
  const unsigned n = 6;
  const std::uint64_t omega = oracle::order_by_scan(g, n);
  const std::uint64_t a = oracle::mul(oracle::reduce(w, n), oracle::pow_by_repetition(g, 1, n), n);
  const std::uint64_t b = oracle::mul(oracle::reduce(w, n), oracle::pow_by_repetition(g, 1 + omega / 2, n), n);
  EXPECT_EQ(a, b);
  EXPECT_TRUE(antipodal_shift_holds(g, w, n));
}

TEST(AntipodalShift, WidePathMatchesAcrossWordBoundary) {
  // g = 1 + 2^60 has small order even for n > 64.
  const BigInt g = pow2(60) + 1;
  EXPECT_EQ(vanishing_bound(OddInteger(g), 1), 62u);
  for (unsigned n = 62; n <= 72; ++n) {
    EXPECT_TRUE(antipodal_shift_holds(OddInteger(g), 1, n)) << n;
    EXPECT_TRUE(antipodal_shift_holds(OddInteger(g), -3, n)) << n;
    EXPECT_TRUE(order_scaling_holds(OddInteger(g), 1, n));
  }
  EXPECT_TRUE(antipodal_shift_holds(OddInteger(g), BigInt(12), 70));
  EXPECT_EQ(check_theorem6(OddInteger(g), 5, 70).verdict, Verdict::holds);
}

TEST(AntipodalShift, RequiresBound) {
  EXPECT_THROW(antipodal_shift_holds(3, 1, 3), DomainError);
  EXPECT_THROW(order_scaling_holds(3, 4, 5), DomainError);
}

}  // namespace
}  // namespace twoadic
