#pragma once

// Fixed-side branches of the LEP trees and the Pythagorean families.
//
// Along a branch with fixed short side a the next side is
//   f(b) = u b + v + sqrt((u^2 - 1) b^2 + 2 (u + 1) v b + w)
// with u = (a^2 - 2)/2, v = -2a, w = -a^4, and iterates of any map of this
// shape obey x_i = (2u+1)(x_{i-1} - x_{i-2}) + x_{i-3}.

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lep/forest.hpp"
#include "lep/intmath.hpp"
#include "lep/lep.hpp"

namespace lep {

namespace detail {

inline std::optional<Rational> rational_sqrt(const Rational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (r < 0) return std::nullopt;
  auto n = is_perfect_square(numerator(r));
  auto d = is_perfect_square(denominator(r));
  if (!n || !d) return std::nullopt;
  return Rational(*n, *d);
}

}  // namespace detail

struct RecurrenceSpec {
  Rational u;
  Rational v;
  Rational w;

  Rational order3_coeff() const { return 2 * u + 1; }

  /// f(x), or empty when the radicand is not the square of a rational.
  std::optional<Rational> apply(const Rational& x) const {
    const Rational radicand = (u * u - 1) * x * x + 2 * (u + 1) * v * x + w;
    auto root = detail::rational_sqrt(radicand);
    if (!root) return std::nullopt;
    return u * x + v + *root;
  }

  /// The map induced on X = r x + s. u is unchanged and v becomes
  /// r v - u s + s; w absorbs the constant term of the shifted radicand.
  RecurrenceSpec affine(const Rational& r, const Rational& s) const {
    if (r == 0) throw error(errc::bad_argument, "affine scale must be nonzero");
    RecurrenceSpec out;
    out.u = u;
    out.v = r * v - u * s + s;
    out.w = w * r * r + (u * u - 1) * s * s - 2 * (u + 1) * r * v * s;
    return out;
  }
};

inline RecurrenceSpec branch_spec_for_fixed_a(const Nat& a) {
  if (a < 3) throw error(errc::bad_argument, "fixed side must be at least 3");
  RecurrenceSpec s;
  s.u = Rational(a * a - 2, 2);
  s.v = Rational(-2 * a);
  s.w = Rational(Int(-(a * a * a * a)));
  return s;
}

/// Next b along the branch with fixed side a (a need not be the shorter
/// side; (6, 3) steps to (6, 39)).
inline Nat branch_step(const Nat& a, const Nat& b) {
  auto p = lep_check(a, b);
  if (!p) throw error(errc::invalid_pair, "(" + a.str() + "," + b.str() + ") is not a LEP");
  const Int next = detail::branch_image(a, b, p->disc_root(), +1);
  if (!lep_check(a, next)) throw error(errc::invariant_violation, "branch step left the LEP set");
  return next;
}

/// The first `count` sides along the branch from (a, b0). Terms from the
/// fourth on come from the third-order recurrence and are checked against
/// direct stepping.
inline std::vector<Nat> branch_sequence(const Nat& a, const Nat& b0, std::size_t count) {
  std::vector<Nat> out;
  if (count == 0) return out;
  if (!lep_check(a, b0)) throw error(errc::invalid_pair, "(" + a.str() + "," + b0.str() + ") is not a LEP");
  out.push_back(b0);
  const Nat c = a * a - 1;
  while (out.size() < count) {
    const Nat stepped = branch_step(a, out.back());
    const std::size_t i = out.size();
    if (i >= 3) {
      Nat rec = c * (out[i - 1] - out[i - 2]) + out[i - 3];
      if (rec != stepped)
        throw error(errc::invariant_violation, "third-order recurrence disagrees with direct stepping");
    }
    out.push_back(stepped);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pell-like families c y^2 - (c + 4) x^2 = d
// ---------------------------------------------------------------------------

enum class FamilyLabel { F1, F2, F3, F4, F5 };

inline const char* to_string(FamilyLabel f) {
  switch (f) {
    case FamilyLabel::F1: return "F1";
    case FamilyLabel::F2: return "F2";
    case FamilyLabel::F3: return "F3";
    case FamilyLabel::F4: return "F4";
    case FamilyLabel::F5: return "F5";
  }
  return "?";
}

inline std::optional<FamilyLabel> family_from(std::string_view s) {
  if (s == "F1" || s == "f1") return FamilyLabel::F1;
  if (s == "F2" || s == "f2") return FamilyLabel::F2;
  if (s == "F3" || s == "f3") return FamilyLabel::F3;
  if (s == "F4" || s == "f4") return FamilyLabel::F4;
  if (s == "F5" || s == "f5") return FamilyLabel::F5;
  return std::nullopt;
}

struct PellFamily {
  FamilyLabel label;
  int c;
  int d;
  int a_side;
  /// b = b_scale (x^2 + y^2) / b_div
  int b_scale;
  int b_div;
  std::vector<std::pair<int, int>> seeds;

  bool satisfies(const Int& x, const Int& y) const {
    return c * y * y - (c + 4) * x * x == d;
  }

  Nat b_of(const Nat& x, const Nat& y) const {
    const Nat num = b_scale * (x * x + y * y);
    if (num % b_div != 0) throw error(errc::invariant_violation, "non-integral family side");
    return num / b_div;
  }

  static PellFamily of(FamilyLabel f) {
    switch (f) {
      case FamilyLabel::F1: return {f, 1, 4, 3, 3, 2, {{0, 2}}};
      case FamilyLabel::F2: return {f, 2, 2, 4, 4, 1, {{0, 1}}};
      case FamilyLabel::F3: return {f, 3, 20, 5, 1, 2, {{1, 3}, {2, 4}}};
      case FamilyLabel::F4: return {f, 4, 4, 6, 3, 1, {{0, 1}}};
      case FamilyLabel::F5: return {f, 8, 20, 10, 1, 1, {{1, 2}, {3, 4}}};
    }
    throw error(errc::invariant_violation, "unknown family");
  }
};

inline constexpr std::array<FamilyLabel, 5> kAllFamilies{
    FamilyLabel::F1, FamilyLabel::F2, FamilyLabel::F3, FamilyLabel::F4, FamilyLabel::F5};

struct PellSolution {
  Nat x;
  Nat y;
  FamilyLabel family;
  Nat b_value;

  friend bool operator==(const PellSolution&, const PellSolution&) = default;
};

inline PellSolution make_solution(const PellFamily& fam, Nat x, Nat y) {
  if (!fam.satisfies(x, y)) throw error(errc::invariant_violation, "not a solution of the family equation");
  Nat b = fam.b_of(x, y);
  return {std::move(x), std::move(y), fam.label, std::move(b)};
}

/// (x, y) -> (x + c(x+y)/2, 2x + y + c(x+y)/2).
inline PellSolution pell_step(const PellFamily& fam, const PellSolution& s) {
  if (s.family != fam.label || !fam.satisfies(s.x, s.y))
    throw error(errc::invariant_violation, "solution does not belong to the family");
  const Nat cs = fam.c * (s.x + s.y);
  if (cs % 2 != 0) throw error(errc::parity_violation, "c odd and x + y odd");
  return make_solution(fam, s.x + cs / 2, 2 * s.x + s.y + cs / 2);
}

/// The first `count` solutions, merging seed orbits by b value.
inline std::vector<PellSolution> family_solutions(const PellFamily& fam, std::size_t count) {
  std::vector<PellSolution> heads;
  for (auto [x, y] : fam.seeds) heads.push_back(make_solution(fam, x, y));
  std::vector<PellSolution> out;
  while (out.size() < count) {
    auto it = std::min_element(heads.begin(), heads.end(), [](const auto& l, const auto& r) {
      return l.b_value < r.b_value;
    });
    PellSolution next = pell_step(fam, *it);
    if (it->b_value > 0) out.push_back(std::move(*it));
    *it = std::move(next);
  }
  return out;
}

inline std::vector<Nat> family_b_values(const PellFamily& fam, std::size_t count) {
  std::vector<Nat> out;
  for (auto& s : family_solutions(fam, count)) {
    auto p = lep_check(fam.a_side, s.b_value);
    if (!p || !is_pythagorean(*p))
      throw error(errc::invariant_violation, "family member is not a Pythagorean LEP");
    out.push_back(std::move(s.b_value));
  }
  return out;
}

inline std::vector<int> pythagorean_short_sides() { return {3, 4, 5, 6, 10}; }

inline bool is_pythagorean_short_side(const Nat& a) {
  for (int s : pythagorean_short_sides())
    if (a == s) return true;
  return false;
}

}  // namespace lep
