#pragma once

#include <set>
#include <span>
#include <string>
#include <vector>

#include "arrzeta/rational.hpp"

namespace arrzeta {

/// The walls {alpha : <normal, alpha> = gamma} for every gamma congruent to
/// one of the offsets modulo 1. Because the normal is primitive and integral,
/// translating by Z^r moves gamma by integers, so residues mod 1 describe the
/// whole family.
struct WallFamily {
  ZVector normal;            // primitive, componentwise >= 0, nonzero
  std::set<Rational> offsets;  // residues in [0, 1)

  Rational value(std::span<const Rational> point) const;
  bool contains_level(const Rational& gamma) const { return offsets.count(frac(gamma)) > 0; }
};

class WallSet {
 public:
  WallSet() = default;
  explicit WallSet(std::vector<WallFamily> families);

  /// Adds a family, merging offsets into an existing family with the same
  /// normal.
  void add(WallFamily family);
  const std::vector<WallFamily>& families() const { return families_; }
  std::size_t dimension() const;
  bool empty() const { return families_.empty(); }

  friend bool operator==(const WallSet& a, const WallSet& b);

 private:
  std::vector<WallFamily> families_;
};

struct WallInstance {
  ZVector normal;
  Rational level;

  friend bool operator==(const WallInstance& a, const WallInstance& b) {
    return a.normal == b.normal && a.level == b.level;
  }
  friend bool operator<(const WallInstance& a, const WallInstance& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.level < b.level;
  }
};

/// Builds a family from an arbitrary nonzero nonnegative integer normal:
/// {<ord, alpha> in Z} becomes {<ord/c, alpha> in (1/c) Z}, c the content.
WallFamily family_from_order(std::span<const long> ord);
WallSet walls_from_resolution(const std::vector<std::vector<long>>& ords);

std::vector<WallInstance> localized_walls(const WallSet& ws, std::span<const Rational> point);
/// Walls with L(a) <= gamma < L(b) or L(b) <= gamma < L(a).
std::vector<WallInstance> separating_walls(const WallSet& ws, std::span<const Rational> a, std::span<const Rational> b);
bool same_chamber(const WallSet& ws, std::span<const Rational> a, std::span<const Rational> b);
bool on_some_wall(const WallSet& ws, std::span<const Rational> point);

struct ChamberPath {
  RVector start;                     // perturbed a
  RVector end;                       // perturbed b
  std::vector<WallInstance> walls;   // in crossing order
  std::vector<Rational> parameters;  // crossing parameter t in (0, 1) per wall
};

/// Walls crossed by a generic segment from a to b in order. The endpoints are
/// moved to a - eps*v and b - eps*w (v = (1, 1/q, 1/q^2, ...), w the same
/// vector reversed, q the least prime above every normal entry and offset
/// denominator) with eps halved from 1/(4 q^r) until the shifted points lie
/// off all walls, stay in their chambers, and no two walls are crossed at the
/// same parameter. Gives up after 64 halvings.
ChamberPath chamber_path(const WallSet& ws, std::span<const Rational> a, std::span<const Rational> b);

/// For each family and each coordinate subset I with L^I != 0, the family with
/// normal primitive(L^I) and offsets closed under the content of L^I.
WallSet extend_restricted_walls(const WallSet& restricted);

std::string to_string(const WallFamily& f);
std::string to_string(const WallInstance& w);

}  // namespace arrzeta
