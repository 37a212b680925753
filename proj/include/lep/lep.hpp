#pragma once

// Lattice equable parallelograms: the squareness criterion, the
// (k, m, n) decomposition, exact geometry and special-case classifiers.

#include <algorithm>
#include <array>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "lep/intmath.hpp"

namespace lep {

enum class GcdClass { G3 = 3, G4 = 4, G5 = 5 };

inline int to_int(GcdClass g) { return static_cast<int>(g); }

inline std::optional<GcdClass> gcd_class_from(int g) {
  switch (g) {
    case 3: return GcdClass::G3;
    case 4: return GcdClass::G4;
    case 5: return GcdClass::G5;
    default: return std::nullopt;
  }
}

/// Per-class constants: k = f s^2 and the common side factor f s.
struct ClassConstants {
  int k;
  int f;
  int s;
  int fs() const { return f * s; }
};

inline ClassConstants constants(GcdClass g) {
  switch (g) {
    case GcdClass::G3: return {9, 1, 3};
    case GcdClass::G4: return {8, 2, 2};
    case GcdClass::G5: return {5, 5, 1};
  }
  throw error(errc::invariant_violation, "unknown gcd class");
}

/// a^2 b^2 - 4 (a + b)^2; a pair is a LEP exactly when this is a square.
inline Int discriminant(const Nat& a, const Nat& b) {
  const Int s = a + b;
  return a * a * b * b - 4 * s * s;
}

/// A certified side pair (a <= b) of a lattice equable parallelogram.
/// Only obtainable through lep_check.
class LepPair {
 public:
  const Nat& a() const noexcept { return a_; }
  const Nat& b() const noexcept { return b_; }
  const Nat& disc_root() const noexcept { return disc_root_; }
  GcdClass gcd_class() const noexcept { return class_; }
  Nat sum() const { return a_ + b_; }
  /// Area, equal to the perimeter.
  Nat area() const { return 2 * (a_ + b_); }

  friend bool operator==(const LepPair& l, const LepPair& r) {
    return l.a_ == r.a_ && l.b_ == r.b_;
  }
  /// Ordered by (a + b, a).
  friend bool operator<(const LepPair& l, const LepPair& r) {
    const Nat ls = l.sum(), rs = r.sum();
    if (ls != rs) return ls < rs;
    return l.a_ < r.a_;
  }

 private:
  friend std::optional<LepPair> lep_check(Nat a, Nat b);

  LepPair(Nat a, Nat b, Nat root) : a_(std::move(a)), b_(std::move(b)), disc_root_(std::move(root)) {
    const Nat d = gcd(a_, b_);
    const auto g = d <= 5 ? gcd_class_from(d.convert_to<int>()) : std::nullopt;
    if (!g) throw error(errc::invariant_violation, "LEP with gcd outside {3,4,5}: (" + a_.str() + "," + b_.str() + ")");
    class_ = *g;
  }

  Nat a_;
  Nat b_;
  Nat disc_root_;
  GcdClass class_{};
};

/// Existence of a (not necessarily lattice) equable parallelogram with
/// sides a <= b: ab >= 2(a + b).
inline bool equable_parallelogram_exists(const Nat& a, const Nat& b) {
  if (a < 1 || b < 1) throw error(errc::bad_argument, "sides must be positive");
  if (a > b) throw error(errc::unordered_sides, "expected a <= b");
  return a * b >= 2 * (a + b);
}

inline std::optional<LepPair> lep_check(Nat a, Nat b) {
  if (a < 1 || b < 1) return std::nullopt;
  if (a > b) std::swap(a, b);
  auto root = is_perfect_square(discriminant(a, b));
  if (!root) return std::nullopt;
  return LepPair(std::move(a), std::move(b), std::move(*root));
}

struct Decomposition {
  int k;
  Nat m;
  Nat n;
  Nat q;
  Nat r;
};

inline Decomposition decompose(const LepPair& p) {
  const ClassConstants c = constants(p.gcd_class());
  const Nat ab = p.a() * p.b();
  const auto from_half = [&](const Nat& twice) -> Nat {
    if (twice % (2 * c.k) != 0)
      throw error(errc::invariant_violation, "non-integral k m^2 or k n^2");
    auto root = is_perfect_square(twice / (2 * c.k));
    if (!root) throw error(errc::invariant_violation, "m or n is not an integer");
    return *root;
  };
  Nat n = from_half(ab + p.disc_root());
  Nat m = from_half(ab - p.disc_root());
  if (gcd(m, n) != 1) throw error(errc::invariant_violation, "m and n are not coprime");
  if (p.a() % c.fs() != 0 || p.b() % c.fs() != 0)
    throw error(errc::invariant_violation, "sides not divisible by f s");
  Decomposition d{c.k, std::move(m), std::move(n), p.a() / c.fs(), p.b() / c.fs()};
  if (ab != c.k * (d.m * d.m + d.n * d.n) || p.sum() != c.k * d.m * d.n)
    throw error(errc::invariant_violation, "decomposition does not recombine");
  return d;
}

struct Geometry {
  Nat d_long_sq;
  Nat d_short_sq;
  Rational h_long;
  Rational h_short;
  Rational eta_long_sq;
  Rational eta_short_sq;
  Nat area;
};

inline Geometry geometry(const LepPair& p) {
  const Nat s = p.sum();
  const Nat base = p.a() * p.a() + p.b() * p.b();
  Geometry g;
  g.d_long_sq = base + 2 * p.disc_root();
  g.d_short_sq = base - 2 * p.disc_root();
  g.h_long = Rational(2 * s, p.a());
  g.h_short = Rational(2 * s, p.b());
  g.eta_long_sq = Rational(4 * s * s, g.d_short_sq);
  g.eta_short_sq = Rational(4 * s * s, g.d_long_sq);
  g.area = 2 * s;
  return g;
}

/// Circumscribed by an integer rectangle sharing a diagonal; a | 2b.
inline bool is_pythagorean(const LepPair& p) { return (2 * p.b()) % p.a() == 0; }

enum class Special { Rhombus4, Rhombus5, DoubleRatio3, DoubleRatio5, Generic };

inline const char* to_string(Special s) {
  switch (s) {
    case Special::Rhombus4: return "Rhombus4";
    case Special::Rhombus5: return "Rhombus5";
    case Special::DoubleRatio3: return "DoubleRatio3";
    case Special::DoubleRatio5: return "DoubleRatio5";
    case Special::Generic: return "Generic";
  }
  return "Generic";
}

inline Special classify_special(const LepPair& p) {
  if (p.a() == p.b()) {
    if (p.a() == 4) return Special::Rhombus4;
    if (p.a() == 5) return Special::Rhombus5;
    throw error(errc::invariant_violation, "rhombic LEP with side other than 4 or 5");
  }
  if (p.b() == 2 * p.a()) {
    if (p.a() == 3) return Special::DoubleRatio3;
    if (p.a() == 5) return Special::DoubleRatio5;
    throw error(errc::invariant_violation, "LEP with b = 2a and a other than 3 or 5");
  }
  return Special::Generic;
}

/// The integer-sided triangles whose area equals their perimeter, sorted.
///
/// With u = -a+b+c, v = a-b+c, w = a+b-c Heron's formula becomes
/// uvw = 16(u+v+w); u, v, w are even, so halving gives xyz = 4(x+y+z)
/// with x <= y <= z. Then x <= 3, y <= 8 and z = 4(x+y)/(xy-4).
inline std::vector<std::array<int, 3>> enumerate_equable_triangles() {
  std::vector<std::array<int, 3>> out;
  for (int x = 1; x <= 3; ++x) {
    for (int y = x; y <= 8; ++y) {
      const int den = x * y - 4;
      if (den <= 0) continue;
      const int num = 4 * (x + y);
      if (num % den != 0) continue;
      const int z = num / den;
      if (z < y) continue;
      std::array<int, 3> t{y + z, x + z, x + y};
      std::sort(t.begin(), t.end());
      out.push_back(t);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lep
