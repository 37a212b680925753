#pragma once

// Lattice realisations of LEPs and their classification up to the
// isometries of Z^2 (translations and the dihedral group of order 8).

#include <algorithm>
#include <array>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "lep/intmath.hpp"
#include "lep/lep.hpp"

namespace lep {

struct LatticePoint {
  Int x;
  Int y;

  friend LatticePoint operator+(const LatticePoint& p, const LatticePoint& q) { return {p.x + q.x, p.y + q.y}; }
  friend LatticePoint operator-(const LatticePoint& p, const LatticePoint& q) { return {p.x - q.x, p.y - q.y}; }
  friend bool operator==(const LatticePoint& p, const LatticePoint& q) { return p.x == q.x && p.y == q.y; }
  friend bool operator<(const LatticePoint& p, const LatticePoint& q) { return std::tie(p.x, p.y) < std::tie(q.x, q.y); }
};

inline Int cross(const LatticePoint& u, const LatticePoint& v) { return u.x * v.y - u.y * v.x; }
inline Int norm_sq(const LatticePoint& u) { return u.x * u.x + u.y * u.y; }

/// Four vertices in cyclic order.
struct LatticeParallelogram {
  std::array<LatticePoint, 4> v;

  bool is_closed() const { return v[2] - v[1] == v[3] - v[0]; }
  Int signed_area() const { return cross(v[1] - v[0], v[3] - v[0]); }
  Int side_a_sq() const { return norm_sq(v[1] - v[0]); }
  Int side_b_sq() const { return norm_sq(v[3] - v[0]); }
  Int diagonal_sq(int which) const {
    return which == 0 ? norm_sq(v[2] - v[0]) : norm_sq(v[3] - v[1]);
  }

  friend bool operator==(const LatticeParallelogram& l, const LatticeParallelogram& r) { return l.v == r.v; }
  friend bool operator<(const LatticeParallelogram& l, const LatticeParallelogram& r) { return l.v < r.v; }
};

enum class VerifyStatus { Ok, NotParallelogram, NonIntegerSides, NotEquable };

inline const char* to_string(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::Ok: return "Ok";
    case VerifyStatus::NotParallelogram: return "NotParallelogram";
    case VerifyStatus::NonIntegerSides: return "NonIntegerSides";
    case VerifyStatus::NotEquable: return "NotEquable";
  }
  return "?";
}

struct VerifyResult {
  VerifyStatus status;
  std::optional<LepPair> pair;
};

inline VerifyResult verify_detailed(const LatticeParallelogram& lp) {
  if (!lp.is_closed() || lp.signed_area() == 0) return {VerifyStatus::NotParallelogram, std::nullopt};
  auto a = is_perfect_square(lp.side_a_sq());
  auto b = is_perfect_square(lp.side_b_sq());
  if (!a || !b) return {VerifyStatus::NonIntegerSides, std::nullopt};
  Int area = abs(lp.signed_area());
  if (area != 2 * (*a + *b)) return {VerifyStatus::NotEquable, std::nullopt};
  auto p = lep_check(*a, *b);
  if (!p) throw error(errc::invariant_violation, "lattice equable parallelogram fails the squareness criterion");
  return {VerifyStatus::Ok, p};
}

inline std::optional<LepPair> verify(const LatticeParallelogram& lp) { return verify_detailed(lp).pair; }

inline LatticeParallelogram from_edges(const LatticePoint& u, const LatticePoint& v) {
  LatticePoint o{0, 0};
  return {{o, u, u + v, v}};
}

/// All realisations (0, u, u+v, v) with |u| = a, |v| = b and
/// cross(u, v) = +2(a + b), in representation order.
inline std::vector<LatticeParallelogram> all_realizations(const LepPair& p) {
  const auto us = two_square_representations(p.a() * p.a());
  const auto vs = two_square_representations(p.b() * p.b());
  const Int target = p.area();
  std::vector<LatticeParallelogram> out;
  for (const auto& [ux, uy] : us)
    for (const auto& [vx, vy] : vs)
      if (ux * vy - uy * vx == target) out.push_back(from_edges({ux, uy}, {vx, vy}));
  return out;
}

inline LatticeParallelogram realize(const LepPair& p) {
  const auto us = two_square_representations(p.a() * p.a());
  const auto vs = two_square_representations(p.b() * p.b());
  const Int target = p.area();
  for (const auto& [ux, uy] : us)
    for (const auto& [vx, vy] : vs)
      if (ux * vy - uy * vx == target) return from_edges({ux, uy}, {vx, vy});
  throw error(errc::invariant_violation, "no lattice realisation found for (" + p.a().str() + "," + p.b().str() + ")");
}

/// The 8 linear isometries of Z^2, generated by (x,y)->(-x,y) and (x,y)->(y,x).
inline LatticePoint apply_symmetry(int g, const LatticePoint& p) {
  Int x = p.x, y = p.y;
  if (g & 4) std::swap(x, y);
  if (g & 1) x = -x;
  if (g & 2) y = -y;
  return {x, y};
}

inline LatticeParallelogram canonical_form(const LatticeParallelogram& lp) {
  std::optional<LatticeParallelogram> best;
  for (int g = 0; g < 8; ++g) {
    std::array<LatticePoint, 4> w;
    for (int i = 0; i < 4; ++i) w[i] = apply_symmetry(g, lp.v[i]);
    const LatticePoint least = *std::min_element(w.begin(), w.end());
    for (auto& p : w) p = p - least;
    for (int start = 0; start < 4; ++start)
      for (int dir : {1, 3}) {
        LatticeParallelogram cand;
        for (int i = 0; i < 4; ++i) cand.v[i] = w[(start + dir * i) % 4];
        if (!best || cand < *best) best = cand;
      }
  }
  return *best;
}

inline bool equivalent(const LatticeParallelogram& l, const LatticeParallelogram& r) {
  return canonical_form(l) == canonical_form(r);
}

/// One canonical representative per equivalence class of realisations.
inline std::vector<LatticeParallelogram> realization_classes(const LepPair& p) {
  std::vector<LatticeParallelogram> out;
  for (const auto& lp : all_realizations(p)) out.push_back(canonical_form(lp));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Translates so that min x = min y = 0.
inline LatticeParallelogram first_quadrant(const LatticeParallelogram& lp) {
  Int mx = lp.v[0].x, my = lp.v[0].y;
  for (const auto& p : lp.v) {
    mx = std::min(mx, p.x);
    my = std::min(my, p.y);
  }
  LatticeParallelogram out = lp;
  for (auto& p : out.v) p = p - LatticePoint{mx, my};
  return out;
}

/// Some side pair is parallel to the x-axis.
inline bool has_horizontal_side(const LatticeParallelogram& lp) {
  for (int i = 0; i < 4; ++i)
    if (lp.v[i].y == lp.v[(i + 1) % 4].y) return true;
  return false;
}

inline bool opposite_vertices_share_coordinate(const LatticeParallelogram& lp) {
  return lp.v[0].x == lp.v[2].x || lp.v[0].y == lp.v[2].y || lp.v[1].x == lp.v[3].x || lp.v[1].y == lp.v[3].y;
}

}  // namespace lep
