#include "twoadic/bigint.hpp"

#include <string>

#include "twoadic/errors.hpp"

namespace twoadic {

BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw UsageError("expected an integer, got an empty string");
  std::size_t digits_from = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (digits_from == s.size()) throw UsageError("expected an integer, got '" + s + "'");
  for (std::size_t i = digits_from; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw UsageError("expected an integer, got '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

std::string to_string(const BigInt& x) { return x.get_str(10); }

BigInt pow2(unsigned long k) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
  return r;
}

std::optional<std::int64_t> to_int64(const BigInt& x) {
  if (!x.fits_slong_p()) return std::nullopt;
  static_assert(sizeof(long) == sizeof(std::int64_t));
  return static_cast<std::int64_t>(x.get_si());
}

}  // namespace twoadic
