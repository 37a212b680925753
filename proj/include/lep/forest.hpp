#pragma once

// Generalised Markov equations a x^2 + b y^2 + c z^2 = d x y z, their
// Vieta involutions, and the three trees of LEP side pairs.

#include <algorithm>
#include <array>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lep/intmath.hpp"
#include "lep/lep.hpp"

namespace lep {

// ---------------------------------------------------------------------------
// Triple level
// ---------------------------------------------------------------------------

enum class MrId { M, R1, R2, R3, R4, R5 };

inline const char* to_string(MrId id) {
  switch (id) {
    case MrId::M: return "M";
    case MrId::R1: return "R1";
    case MrId::R2: return "R2";
    case MrId::R3: return "R3";
    case MrId::R4: return "R4";
    case MrId::R5: return "R5";
  }
  return "?";
}

/// ca x^2 + cb y^2 + cc z^2 = cd x y z, one of the six solvable cases.
struct MrEquation {
  int ca;
  int cb;
  int cc;
  int cd;
  MrId id;

  static MrEquation of(MrId id) {
    switch (id) {
      case MrId::M: return {1, 1, 1, 3, id};
      case MrId::R1: return {1, 1, 2, 4, id};
      case MrId::R2: return {1, 2, 3, 6, id};
      case MrId::R3: return {1, 1, 5, 5, id};
      case MrId::R4: return {1, 1, 1, 1, id};
      case MrId::R5: return {1, 1, 2, 2, id};
    }
    throw error(errc::invariant_violation, "unknown equation id");
  }

  bool holds(const Int& x, const Int& y, const Int& z) const {
    return ca * x * x + cb * y * y + cc * z * z == cd * x * y * z;
  }

  friend bool operator==(const MrEquation&, const MrEquation&) = default;
};

inline constexpr std::array<MrId, 6> kAllMrIds{MrId::M, MrId::R1, MrId::R2,
                                               MrId::R3, MrId::R4, MrId::R5};

/// The equation matching a gcd class: m^2 + n^2 + f q^2 = f s m n q.
inline MrEquation equation_for(GcdClass g) {
  switch (g) {
    case GcdClass::G3: return MrEquation::of(MrId::M);
    case GcdClass::G4: return MrEquation::of(MrId::R1);
    case GcdClass::G5: return MrEquation::of(MrId::R3);
  }
  throw error(errc::invariant_violation, "unknown gcd class");
}

struct MrTriple {
  Nat x;
  Nat y;
  Nat z;
  MrEquation equation;

  static MrTriple make(Nat x, Nat y, Nat z, MrEquation eq) {
    if (x < 1 || y < 1 || z < 1 || !eq.holds(x, y, z))
      throw error(errc::invariant_violation, "not a positive solution");
    return {std::move(x), std::move(y), std::move(z), eq};
  }

  friend bool operator==(const MrTriple& l, const MrTriple& r) {
    return l.x == r.x && l.y == r.y && l.z == r.z && l.equation == r.equation;
  }
  friend bool operator<(const MrTriple& l, const MrTriple& r) {
    return std::tie(l.x, l.y, l.z) < std::tie(r.x, r.y, r.z);
  }
};

enum class Axis { X, Y, Z };

/// Replaces one coordinate by the other root of the quadratic it solves.
inline MrTriple mr_involution(const MrTriple& t, Axis axis) {
  const MrEquation& e = t.equation;
  MrTriple out = t;
  Int partner;
  switch (axis) {
    case Axis::X: partner = Int(e.cd / e.ca) * t.y * t.z - t.x; break;
    case Axis::Y: partner = Int(e.cd / e.cb) * t.x * t.z - t.y; break;
    case Axis::Z: partner = Int(e.cd / e.cc) * t.x * t.y - t.z; break;
  }
  if (partner <= 0) throw error(errc::non_positive_partner, "Vieta partner is not positive");
  switch (axis) {
    case Axis::X: out.x = partner; break;
    case Axis::Y: out.y = partner; break;
    case Axis::Z: out.z = partner; break;
  }
  if (!e.holds(out.x, out.y, out.z))
    throw error(errc::invariant_violation, "involution left the solution set");
  return out;
}

/// Solution with least x + y + z (ties lexicographic), coordinates <= 16.
inline MrTriple mr_fundamental(const MrEquation& eq) {
  constexpr int kBound = 16;
  std::optional<std::array<int, 3>> best;
  for (int x = 1; x <= kBound; ++x)
    for (int y = 1; y <= kBound; ++y)
      for (int z = 1; z <= kBound; ++z) {
        if (!eq.holds(x, y, z)) continue;
        std::array<int, 3> cand{x, y, z};
        if (!best || x + y + z < (*best)[0] + (*best)[1] + (*best)[2]) best = cand;
      }
  if (!best) throw error(errc::no_solution_in_bound, std::string("no solution of ") + to_string(eq.id));
  return MrTriple::make((*best)[0], (*best)[1], (*best)[2], eq);
}

/// The side pair a triple (m, n, q) of the class equation corresponds to.
inline std::optional<LepPair> pair_of_triple(const MrTriple& t, GcdClass g) {
  const ClassConstants c = constants(g);
  const Nat a = c.fs() * t.z;
  const Nat total = c.k * t.x * t.y;
  if (total <= a) return std::nullopt;
  return lep_check(a, total - a);
}

/// All solutions of the class equation reachable from the fundamental one
/// through the three involutions, with m <= n and m + n + q <= bound.
/// Used as an independent check on the pair-level trees.
inline std::vector<MrTriple> enumerate_triples(GcdClass g, const Nat& bound) {
  const MrEquation eq = equation_for(g);
  std::set<MrTriple> seen;
  std::deque<MrTriple> queue;
  auto push = [&](MrTriple t) {
    if (t.x + t.y + t.z > bound) return;
    if (seen.insert(t).second) queue.push_back(std::move(t));
  };
  push(mr_fundamental(eq));
  while (!queue.empty()) {
    MrTriple t = queue.front();
    queue.pop_front();
    for (Axis ax : {Axis::X, Axis::Y, Axis::Z}) {
      try {
        push(mr_involution(t, ax));
      } catch (const error& e) {
        if (e.code() != errc::non_positive_partner) throw;
      }
    }
  }
  // The class equations are symmetric in m and n.
  std::set<MrTriple> normalised;
  for (MrTriple t : seen) {
    if (t.x > t.y) std::swap(t.x, t.y);
    normalised.insert(std::move(t));
  }
  return {normalised.begin(), normalised.end()};
}

// ---------------------------------------------------------------------------
// Pair level
// ---------------------------------------------------------------------------

namespace detail {

// (fixed^2 other +/- fixed * root) / 2 - 2 fixed - other
inline Int branch_image(const Nat& fixed, const Nat& other, const Nat& root, int sign) {
  const Int twice = fixed * fixed * other + sign * fixed * root;
  if (twice % 2 != 0) throw error(errc::invariant_violation, "odd numerator in branch map");
  return twice / 2 - 2 * fixed - other;
}

inline LepPair certify(const Int& u, const Int& v) {
  auto p = lep_check(u, v);
  if (!p) throw error(errc::invariant_violation, "branch map produced a non-LEP");
  return *p;
}

}  // namespace detail

/// Moves along the fixed-a branch away from the root.
inline LepPair phi1(const LepPair& p) {
  return detail::certify(p.a(), detail::branch_image(p.a(), p.b(), p.disc_root(), +1));
}

inline std::optional<LepPair> phi2(const LepPair& p) {
  const Int img = detail::branch_image(p.a(), p.b(), p.disc_root(), -1);
  if (img <= 0) return std::nullopt;
  return lep_check(p.a(), img);
}

/// Moves along the fixed-b branch.
inline LepPair psi1(const LepPair& p) {
  return detail::certify(detail::branch_image(p.b(), p.a(), p.disc_root(), +1), p.b());
}

inline std::optional<LepPair> psi2(const LepPair& p) {
  const Int img = detail::branch_image(p.b(), p.a(), p.disc_root(), -1);
  if (img <= 0) return std::nullopt;
  return lep_check(img, p.b());
}

enum class Edge { Root, Phi1, Phi2, Psi1, Psi2 };

inline const char* to_string(Edge e) {
  switch (e) {
    case Edge::Root: return "root";
    case Edge::Phi1: return "phi1";
    case Edge::Phi2: return "phi2";
    case Edge::Psi1: return "psi1";
    case Edge::Psi2: return "psi2";
  }
  return "?";
}

/// The four images in child order [phi1, psi1, psi2, phi2]; absent images
/// are skipped.
inline std::vector<std::pair<Edge, LepPair>> neighbours(const LepPair& p) {
  std::vector<std::pair<Edge, LepPair>> out;
  out.emplace_back(Edge::Phi1, phi1(p));
  out.emplace_back(Edge::Psi1, psi1(p));
  if (auto q = psi2(p)) out.emplace_back(Edge::Psi2, *q);
  if (auto q = phi2(p)) out.emplace_back(Edge::Phi2, *q);
  return out;
}

inline LepPair fundamental_pair(GcdClass g) {
  switch (g) {
    case GcdClass::G3: return *lep_check(3, 6);
    case GcdClass::G4: return *lep_check(4, 4);
    case GcdClass::G5: return *lep_check(5, 5);
  }
  throw error(errc::invariant_violation, "unknown gcd class");
}

struct TreeNode {
  LepPair pair;
  Edge edge_from_parent;
  std::optional<std::size_t> parent;
  std::vector<std::size_t> children;
  std::size_t depth;
};

/// Breadth-first materialisation of one LEP tree; nodes[0] is the root.
struct Tree {
  GcdClass gcd_class;
  Nat bound_sum;
  std::vector<TreeNode> nodes;

  std::optional<std::size_t> find(const Nat& a, const Nat& b) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (nodes[i].pair.a() == a && nodes[i].pair.b() == b) return i;
    return std::nullopt;
  }
};

inline Tree enumerate_tree(GcdClass g, const Nat& bound_sum) {
  Tree tree{g, bound_sum, {}};
  LepPair root = fundamental_pair(g);
  if (root.sum() > bound_sum) return tree;

  std::set<std::pair<Nat, Nat>> visited;
  visited.emplace(root.a(), root.b());
  tree.nodes.push_back(TreeNode{root, Edge::Root, std::nullopt, {}, 0});

  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const LepPair parent = tree.nodes[i].pair;
    for (auto& [edge, child] : neighbours(parent)) {
      if (child.sum() > bound_sum) continue;
      if (!visited.emplace(child.a(), child.b()).second) continue;
      // Pruning by bound_sum is only sound if sums grow away from the root.
      if (!(child.sum() > parent.sum()))
        throw error(errc::invariant_violation, "tree edge does not increase a + b");
      if (child.gcd_class() != g)
        throw error(errc::invariant_violation, "tree edge changed gcd class");
      const std::size_t idx = tree.nodes.size();
      tree.nodes.push_back(TreeNode{child, edge, i, {}, tree.nodes[i].depth + 1});
      tree.nodes[i].children.push_back(idx);
    }
  }
  return tree;
}

/// Every LEP with a + b <= bound_sum, ordered by (a + b, a).
inline std::vector<LepPair> enumerate_all(const Nat& bound_sum) {
  std::vector<LepPair> out;
  for (GcdClass g : {GcdClass::G3, GcdClass::G4, GcdClass::G5})
    for (auto& node : enumerate_tree(g, bound_sum).nodes) out.push_back(node.pair);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lep
