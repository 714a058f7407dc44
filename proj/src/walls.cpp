#include "arrzeta/walls.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "arrzeta/error.hpp"
#include "arrzeta/linalg.hpp"

namespace arrzeta {

namespace {

void check_family(const WallFamily& f) {
  if (f.normal.empty()) throw Error("wall family with empty normal");
  bool nonzero = false;
  for (const auto& x : f.normal) {
    if (x < 0) throw Error("wall normals must be componentwise nonnegative");
    nonzero = nonzero || x != 0;
  }
  if (!nonzero) throw Error("wall normal is zero");
  if (gcd(f.normal) != 1) throw Error("wall normal must be primitive");
  for (const auto& o : f.offsets) {
    if (o < 0 || o >= 1) throw Error("wall offsets must lie in [0, 1)");
  }
}

void check_point(const WallSet& ws, std::span<const Rational> p) {
  if (!ws.empty() && p.size() != ws.dimension()) throw Error("point dimension does not match the wall set");
}

ZVector to_z(std::span<const long> v) {
  ZVector out;
  for (long x : v) out.emplace_back(x);
  return out;
}

long next_prime_above(const Integer& bound) {
  long q = bound.fits_slong_p() ? std::max(2L, bound.get_si() + 1) : 2;
  auto prime = [](long x) {
    if (x < 2) return false;
    for (long d = 2; d * d <= x; ++d) {
      if (x % d == 0) return false;
    }
    return true;
  };
  while (!prime(q)) ++q;
  return q;
}

}  // namespace

Rational WallFamily::value(std::span<const Rational> point) const {
  if (point.size() != normal.size()) throw Error("point dimension does not match the wall normal");
  Rational s = 0;
  for (std::size_t i = 0; i < normal.size(); ++i) s += Rational(normal[i]) * point[i];
  return s;
}

WallSet::WallSet(std::vector<WallFamily> families) {
  for (auto& f : families) add(std::move(f));
}

void WallSet::add(WallFamily family) {
  check_family(family);
  if (!families_.empty() && family.normal.size() != dimension())
    throw Error("wall family dimension does not match the wall set");
  for (auto& f : families_) {
    if (f.normal == family.normal) {
      f.offsets.insert(family.offsets.begin(), family.offsets.end());
      return;
    }
  }
  families_.push_back(std::move(family));
}

std::size_t WallSet::dimension() const { return families_.empty() ? 0 : families_.front().normal.size(); }

bool operator==(const WallSet& a, const WallSet& b) {
  if (a.families_.size() != b.families_.size()) return false;
  std::map<ZVector, std::set<Rational>> ma, mb;
  for (const auto& f : a.families_) ma[f.normal] = f.offsets;
  for (const auto& f : b.families_) mb[f.normal] = f.offsets;
  return ma == mb;
}

WallFamily family_from_order(std::span<const long> ord) {
  ZVector z = to_z(ord);
  for (const auto& x : z) {
    if (x < 0) throw Error("walls_from_resolution: order tuples must be nonnegative");
  }
  Integer c = gcd(z);
  if (c == 0) throw Error("walls_from_resolution: zero order tuple");
  WallFamily f;
  for (const auto& x : z) f.normal.push_back(x / c);
  for (Integer k = 0; k < c; ++k) f.offsets.insert(make_rational(k, c));
  return f;
}

WallSet walls_from_resolution(const std::vector<std::vector<long>>& ords) {
  WallSet ws;
  for (const auto& ord : ords) ws.add(family_from_order(ord));
  return ws;
}

std::vector<WallInstance> localized_walls(const WallSet& ws, std::span<const Rational> point) {
  check_point(ws, point);
  std::vector<WallInstance> out;
  for (const auto& f : ws.families()) {
    Rational v = f.value(point);
    if (f.contains_level(v)) out.push_back({f.normal, v});
  }
  return out;
}

std::vector<WallInstance> separating_walls(const WallSet& ws, std::span<const Rational> a, std::span<const Rational> b) {
  check_point(ws, a);
  check_point(ws, b);
  std::vector<WallInstance> out;
  for (const auto& f : ws.families()) {
    Rational va = f.value(a), vb = f.value(b);
    const Rational& lo = va < vb ? va : vb;
    const Rational& hi = va < vb ? vb : va;
    std::vector<Rational> levels;
    for (const auto& o : f.offsets) {
      // Smallest gamma = o + k with gamma >= lo, then step by 1 while < hi.
      Rational gamma = o + Rational(ceil(lo - o));
      for (; gamma < hi; gamma += 1) levels.push_back(gamma);
    }
    std::sort(levels.begin(), levels.end());
    for (auto& g : levels) out.push_back({f.normal, std::move(g)});
  }
  return out;
}

bool same_chamber(const WallSet& ws, std::span<const Rational> a, std::span<const Rational> b) {
  return separating_walls(ws, a, b).empty();
}

bool on_some_wall(const WallSet& ws, std::span<const Rational> point) { return !localized_walls(ws, point).empty(); }

ChamberPath chamber_path(const WallSet& ws, std::span<const Rational> a, std::span<const Rational> b) {
  check_point(ws, a);
  check_point(ws, b);
  if (std::equal(a.begin(), a.end(), b.begin(), b.end())) throw Error("chamber_path: endpoints coincide");
  const std::size_t r = a.size();
  Integer bound = 2;
  for (const auto& f : ws.families()) {
    for (const auto& x : f.normal) bound = std::max(bound, Integer(x));
    for (const auto& o : f.offsets) bound = std::max(bound, Integer(o.get_den()));
  }
  const long q = next_prime_above(bound);
  RVector v(r), w(r);
  Rational step = 1;
  for (std::size_t i = 0; i < r; ++i) {
    v[i] = step;
    w[r - 1 - i] = step;
    step /= q;
  }
  Rational eps = step / 4;  // 1 / (4 q^r)
  for (int attempt = 0; attempt < 64; ++attempt, eps /= 2) {
    ChamberPath path;
    path.start.resize(r);
    path.end.resize(r);
    for (std::size_t i = 0; i < r; ++i) {
      path.start[i] = a[i] - eps * v[i];
      path.end[i] = b[i] - eps * w[i];
    }
    if (on_some_wall(ws, path.start) || on_some_wall(ws, path.end)) continue;
    if (!same_chamber(ws, a, path.start) || !same_chamber(ws, b, path.end)) continue;
    std::vector<std::pair<Rational, WallInstance>> crossings;
    for (auto& wall : separating_walls(ws, path.start, path.end)) {
      WallFamily probe{wall.normal, {}};
      Rational va = probe.value(path.start), vb = probe.value(path.end);
      crossings.emplace_back((wall.level - va) / (vb - va), std::move(wall));
    }
    std::sort(crossings.begin(), crossings.end());
    bool generic = true;
    for (std::size_t k = 1; k < crossings.size(); ++k) generic = generic && crossings[k].first != crossings[k - 1].first;
    if (!generic) continue;
    for (auto& [t, wall] : crossings) {
      path.parameters.push_back(t);
      path.walls.push_back(std::move(wall));
    }
    return path;
  }
  throw Error("chamber_path: no generic perturbation found after 64 halvings");
}

WallSet extend_restricted_walls(const WallSet& restricted) {
  WallSet out;
  for (const auto& f : restricted.families()) {
    const std::size_t r = f.normal.size();
    if (r > 20) throw Error("extend_restricted_walls supports at most 20 coordinates");
    for (unsigned long mask = 1; mask < (1UL << r); ++mask) {
      ZVector li(r, Integer(0));
      for (std::size_t i = 0; i < r; ++i) {
        if ((mask >> i) & 1UL) li[i] = f.normal[i];
      }
      Integer c = gcd(li);
      if (c == 0) continue;
      // beta + L^I(Z^r) = beta + c Z; for the primitive normal P = L^I / c the
      // levels are beta / c + Z.
      WallFamily g;
      for (const auto& x : li) g.normal.push_back(x / c);
      for (const auto& o : f.offsets) {
        for (Integer k = 0; k < c; ++k) g.offsets.insert(frac((o + Rational(k)) / Rational(c)));
      }
      out.add(std::move(g));
    }
  }
  return out;
}

std::string to_string(const WallFamily& f) {
  std::ostringstream os;
  os << "L = (";
  for (std::size_t i = 0; i < f.normal.size(); ++i) os << (i ? ", " : "") << f.normal[i].get_str();
  os << "), offsets {";
  bool first = true;
  for (const auto& o : f.offsets) {
    os << (first ? "" : ", ") << to_string(o);
    first = false;
  }
  os << "} + Z";
  return os.str();
}

std::string to_string(const WallInstance& w) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < w.normal.size(); ++i) {
    if (w.normal[i] == 0) continue;
    os << (first ? "" : " + ");
    if (w.normal[i] != 1) os << w.normal[i].get_str();
    os << "a" << (i + 1);
    first = false;
  }
  os << " = " << to_string(w.level);
  return os.str();
}

}  // namespace arrzeta
