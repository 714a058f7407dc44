#include "arrzeta/vmono.hpp"

#include "arrzeta/error.hpp"

namespace arrzeta::vmono {

namespace {

void require_pair(std::span<const Rational> a, const char* what) {
  if (a.size() != 2) throw Error(std::string(what) + ": expected a pair (alpha_1, alpha_2)");
}

}  // namespace

std::vector<Integer> ncv_generator(const MonomialConnectionSpec& spec, std::span<const Rational> alpha) {
  if (alpha.size() != spec.beta.size()) throw Error("ncv_generator: alpha has wrong length");
  std::vector<Integer> out;
  for (std::size_t i = 0; i < alpha.size(); ++i) out.push_back(ceil(alpha[i] - spec.beta[i]) - 1);
  return out;
}

WallSet ncv_walls(const MonomialConnectionSpec& spec) {
  if (spec.beta.empty()) throw Error("ncv_walls: at least one component required");
  WallSet ws;
  for (std::size_t i = 0; i < spec.beta.size(); ++i) {
    WallFamily f;
    f.normal.assign(spec.beta.size(), Integer(0));
    f.normal[i] = 1;
    f.offsets.insert(frac(spec.beta[i]));
    ws.add(std::move(f));
  }
  return ws;
}

bool diag_vres_member(const DiagClass& c, std::span<const Rational> alpha) {
  require_pair(alpha, "diag_vres_member");
  if (c.k == 0) return true;
  return Rational(c.level()) >= alpha[0] + alpha[1] - 2;
}

Rational diag_s_eigenvalue(const DiagClass& c) { return Rational(-(c.level() + 2)); }

std::vector<long> diag_annihilator(std::span<const Rational> alpha, std::span<const Rational> beta) {
  require_pair(alpha, "diag_annihilator");
  require_pair(beta, "diag_annihilator");
  if (alpha[0] > beta[0] || alpha[1] > beta[1]) throw Error("diag_annihilator: alpha must be <= beta componentwise");
  if (alpha[0] < 0 || alpha[1] < 0) throw Error("diag_annihilator: points must lie in the nonnegative quadrant");
  std::vector<long> levels;
  Rational lo = alpha[0] + alpha[1];
  Rational hi = beta[0] + beta[1];
  for (Integer m = ceil(lo); Rational(m) < hi; ++m) levels.push_back(m.get_si());
  return levels;
}

WallSet diag_restricted_walls() {
  WallFamily f;
  f.normal = {Integer(1), Integer(1)};
  f.offsets.insert(Rational(0));
  return WallSet({f});
}

}  // namespace arrzeta::vmono
