#pragma once

// Exact integer utilities shared by every other header.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lep {

/// Arbitrary-precision integer. Nonnegativity of `Nat` values is a
/// documented precondition rather than a separate type.
using Int = boost::multiprecision::cpp_int;
using Nat = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class errc {
  unordered_sides,
  non_positive_partner,
  no_solution_in_bound,
  invalid_pair,
  parity_violation,
  invariant_violation,
  bad_argument,
};

inline const char* to_string(errc e) {
  switch (e) {
    case errc::unordered_sides: return "UnorderedSides";
    case errc::non_positive_partner: return "NonPositivePartner";
    case errc::no_solution_in_bound: return "NoSolutionInBound";
    case errc::invalid_pair: return "InvalidPair";
    case errc::parity_violation: return "ParityViolation";
    case errc::invariant_violation: return "InvariantViolation";
    case errc::bad_argument: return "BadArgument";
  }
  return "Unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

inline std::string to_decimal(const Int& v) { return v.str(); }

/// Parses an optionally signed decimal integer; rejects anything else.
inline std::optional<Int> parse_int(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return std::nullopt;
  for (std::size_t j = i; j < s.size(); ++j)
    if (s[j] < '0' || s[j] > '9') return std::nullopt;
  Int v{std::string(s.substr(i))};
  return s[0] == '-' ? Int(-v) : v;
}

/// floor(sqrt(n)) by Newton iteration. Starting from a power of two above
/// sqrt(n), the iterates decrease strictly until they reach the floor, so
/// the loop stops at the first non-decrease.
inline Nat isqrt(const Nat& n) {
  if (n < 0) throw error(errc::bad_argument, "isqrt of negative value");
  if (n < 2) return n;
  const auto bits = boost::multiprecision::msb(n) + 1;
  Nat x = Nat(1) << ((bits + 1) / 2);
  for (;;) {
    Nat y = (x + n / x) >> 1;
    if (y >= x) return x;
    x = std::move(y);
  }
}

inline std::optional<Nat> is_perfect_square(const Int& n) {
  if (n < 0) return std::nullopt;
  Nat r = isqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

inline Nat gcd(Nat a, Nat b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Nat t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

/// All ordered signed pairs (p, q) with p^2 + q^2 = n, sorted
/// lexicographically.
inline std::vector<std::pair<Int, Int>> two_square_representations(const Nat& n) {
  std::vector<std::pair<Int, Int>> out;
  if (n < 0) return out;
  if (n == 0) {
    out.emplace_back(0, 0);
    return out;
  }
  // Two-pointer walk over the first quadrant: p rises, q falls.
  Nat q = isqrt(n);
  for (Nat p = 0; p <= q; ++p) {
    const Nat pp = p * p;
    while (pp + q * q > n) --q;
    if (q < p) break;
    if (pp + q * q != n) continue;
    for (const auto& [x, y] : {std::pair<Nat, Nat>{p, q}, std::pair<Nat, Nat>{q, p}}) {
      for (int sx : {-1, 1}) {
        if (x == 0 && sx < 0) continue;
        for (int sy : {-1, 1}) {
          if (y == 0 && sy < 0) continue;
          out.emplace_back(x * sx, y * sy);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Trial-division prime factors (distinct, ascending). Desk-scale only.
inline std::vector<Nat> prime_divisors(Nat n) {
  std::vector<Nat> out;
  if (n < 0) n = -n;
  for (Nat p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline std::string to_string(const Rational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace lep
