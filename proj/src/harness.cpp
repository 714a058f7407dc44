#include "arrzeta/harness.hpp"

#include <algorithm>
#include <set>

#include "arrzeta/error.hpp"

namespace arrzeta {

namespace {

void require_central_nonempty(const Arrangement& arr, const char* what) {
  if (!arr.is_central()) throw Error(std::string(what) + " requires a central arrangement");
  if (arr.empty()) throw Error(std::string(what) + ": empty arrangement");
}

/// n/d checks need central, essential and indecomposable input.
void require_cei(const Arrangement& arr, const char* what) {
  require_central_nonempty(arr, what);
  if (!is_essential(arr))
    throw Error(std::string(what) + ": arrangement is not essential (the normals span a proper subspace)");
  if (!is_indecomposable(arr))
    throw Error(std::string(what) + ": arrangement is decomposable (its normals split as a direct sum)");
}

Rational sum_over(std::span<const Rational> beta, const IndexSet& indices) {
  Rational s = 0;
  for (auto i : indices) s += beta[i];
  return s;
}

std::string index_set_string(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + std::to_string(s[k] + 1);
  return out + "}";
}

std::vector<IndexSet> bases(const Arrangement& arr) {
  const std::size_t n = arr.dimension(), r = arr.size();
  std::vector<IndexSet> out;
  IndexSet pick;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (pick.size() == n) {
      if (arr.rank(pick) == n) out.push_back(pick);
      return;
    }
    for (std::size_t i = from; i + (n - pick.size()) <= r; ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

IndexSet complement_of(const IndexSet& s, std::size_t r) {
  IndexSet out;
  for (std::size_t i = 0; i < r; ++i) {
    if (!std::binary_search(s.begin(), s.end(), i)) out.push_back(i);
  }
  return out;
}

IndexSet intersect(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

Rational lct(const Arrangement& arr) {
  require_central_nonempty(arr, "lct");
  std::optional<Rational> best;
  for (const Flat& w : dense_edges(arr)) {
    ResolutionDatum d = resolution_datum(arr, w);
    Rational t = make_rational(d.nu, d.N);
    if (!best || t < *best) best = t;
  }
  return *best;
}

Polytope log_canonical_polytope(const Arrangement& arr) {
  if (!arr.is_central()) throw Error("log_canonical_polytope requires a central arrangement");
  Polytope p;
  p.ambient = arr.size();
  for (const Flat& w : dense_edges(arr)) p.inequalities.push_back({w.indices, static_cast<long>(w.codim)});
  return p;
}

bool polytope_member(const Polytope& poly, std::span<const Rational> alpha, bool strict) {
  if (alpha.size() != poly.ambient) throw Error("polytope_member: point has wrong length");
  for (const auto& a : alpha) {
    if (a <= 0) throw Error("polytope_member: entries must be positive");
  }
  for (const auto& ineq : poly.inequalities) {
    Rational s = sum_over(alpha, ineq.indices);
    if (strict ? s >= ineq.bound : s > ineq.bound) return false;
  }
  return true;
}

Verdict validate_adapted(const Arrangement& arr, std::span<const Rational> beta) {
  require_cei(arr, "validate_adapted");
  if (beta.size() != arr.size()) throw Error("validate_adapted: one entry per hyperplane required");
  Verdict v;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (beta[i] <= 0) {
      v.fail("nonpositive entry", "beta_" + std::to_string(i + 1) + " = " + to_string(beta[i]));
    }
  }
  Rational total = 0;
  for (const auto& b : beta) total += b;
  if (total != Rational(static_cast<long>(arr.dimension())))
    v.fail("sum differs from n", "sum = " + to_string(total) + ", n = " + std::to_string(arr.dimension()));
  for (const Flat& w : dense_edges(arr)) {
    Rational s = sum_over(beta, w.indices);
    if (s > Rational(static_cast<long>(w.codim)))
      v.fail("outside log canonical polytope",
             "sum over " + index_set_string(w.indices) + " = " + to_string(s) + " > " + std::to_string(w.codim));
    if (w.codim == arr.dimension()) continue;  // the edge {0}
    if (is_integer(s)) {
      v.fail(w.codim == 1 ? "integral sum at dense hyperplane" : "integral sum at dense edge",
             "sum over " + index_set_string(w.indices) + " = " + to_string(s));
    }
  }
  return v;
}

RVector adapted_vector(const Arrangement& arr) {
  require_cei(arr, "adapted_vector");
  const std::size_t r = arr.size();
  std::vector<IndexSet> all_bases = bases(arr);
  if (all_bases.empty()) throw Error("adapted_vector: no basis among the normals");
  std::vector<Rational> lambda(all_bases.size(), make_rational(1, static_cast<long>(all_bases.size())));

  std::vector<Flat> targets;
  for (const Flat& w : dense_edges(arr)) {
    if (w.codim != arr.dimension()) targets.push_back(w);
  }
  auto combine = [&](const std::vector<Rational>& lam) {
    RVector beta(r, Rational(0));
    for (std::size_t b = 0; b < all_bases.size(); ++b) {
      for (auto i : all_bases[b]) beta[i] += lam[b];
    }
    return beta;
  };
  auto integral_edges = [&](const RVector& beta) {
    std::set<std::size_t> bad;
    for (std::size_t t = 0; t < targets.size(); ++t) {
      if (is_integer(sum_over(beta, targets[t].indices))) bad.insert(t);
    }
    return bad;
  };

  RVector beta = combine(lambda);
  std::set<std::size_t> bad = integral_edges(beta);
  while (!bad.empty()) {
    const Flat& w = targets[*bad.begin()];
    const IndexSet outside = complement_of(w.indices, r);
    const std::size_t outside_rank = arr.rank(outside);
    // A basis extending a basis of the forms not vanishing on W lowers the
    // sum over I_W; one extending a basis of the forms vanishing on W
    // attains codim W.
    std::optional<std::size_t> low, high;
    for (std::size_t b = 0; b < all_bases.size(); ++b) {
      if (!low && arr.rank(intersect(all_bases[b], outside)) == outside_rank) low = b;
      if (!high && arr.rank(intersect(all_bases[b], w.indices)) == w.codim) high = b;
    }
    if (!low || !high || *low == *high) throw Error("adapted_vector: no pair of bases separates an edge");
    Rational eps = lambda[*high] / 2;
    bool moved = false;
    for (int halving = 0; halving < 200 && !moved; ++halving, eps /= 2) {
      std::vector<Rational> trial = lambda;
      trial[*low] += eps;
      trial[*high] -= eps;
      RVector candidate = combine(trial);
      std::set<std::size_t> now = integral_edges(candidate);
      bool shrinks = now.count(*bad.begin()) == 0 && std::includes(bad.begin(), bad.end(), now.begin(), now.end());
      if (shrinks) {
        lambda = std::move(trial);
        beta = std::move(candidate);
        bad = std::move(now);
        moved = true;
      }
    }
    if (!moved) throw Error("adapted_vector: perturbation schedule exhausted");
  }
  return beta;
}

NdReport nd_check(const Arrangement& arr) {
  require_cei(arr, "nd_check");
  NdReport rep;
  rep.n = static_cast<long>(arr.dimension());
  rep.d = arr.degree();
  if (rep.n < 2 && static_cast<long>(arr.size()) <= rep.n)
    throw Error("nd_check: needs n >= 2 or more hyperplanes than n, so that n/d < 1");
  rep.ratio = make_rational(-rep.n, rep.d);
  std::vector<Rational> candidates = candidate_poles(arr);
  rep.is_candidate = std::find(candidates.begin(), candidates.end(), rep.ratio) != candidates.end();
  std::vector<Rational> pv = pole_values(local_zeta(arr));
  rep.is_local_pole = std::find(pv.begin(), pv.end(), rep.ratio) != pv.end();
  if (!rep.is_candidate) rep.verdict.fail("-n/d is not a candidate pole", to_string(rep.ratio));
  return rep;
}

SmcReport smc_verify(const Arrangement& arr, const std::vector<Rational>& roots, bool local) {
  if (roots.empty()) throw Error("smc_verify: the root set is empty");
  SmcReport rep;
  rep.poles = pole_values(local ? local_zeta(arr) : global_zeta(arr));
  std::set<Rational> root_set(roots.begin(), roots.end());
  for (const auto& p : rep.poles) {
    if (!root_set.count(p)) rep.verdict.fail("pole is not a root of b_f", to_string(p));
  }
  return rep;
}

MultiNdReport multi_nd_check(const Arrangement& arr) {
  if (!arr.has_factors()) throw Error("multi_nd_check requires a factorization");
  require_cei(arr, "multi_nd_check");
  MultiNdReport rep;
  RVector degrees;
  for (const auto& row : arr.factors()) {
    long s = 0;
    for (int x : row) s += x;
    degrees.emplace_back(s);
  }
  rep.hyperplane = canonicalize(degrees, Rational(static_cast<long>(arr.dimension()))).form;
  std::vector<AffineForm> candidates = candidate_hyperplanes(arr);
  rep.is_candidate = std::find(candidates.begin(), candidates.end(), rep.hyperplane) != candidates.end();
  ZetaFunction z = multivariate_local_zeta(arr);
  rep.is_polar = z.denominator.count(rep.hyperplane) > 0;
  if (!rep.is_candidate) rep.verdict.fail("hyperplane is not a candidate", to_string(rep.hyperplane));
  return rep;
}

MultiSmcReport multi_smc_verify(const Arrangement& arr, const std::vector<AffineForm>& zero_locus) {
  MultiSmcReport rep;
  ZetaFunction z = multivariate_global_zeta(arr);
  std::set<AffineForm> allowed;
  for (const auto& f : zero_locus) {
    if (f.variables() != z.variables) throw Error("zero locus component has wrong variable count");
    allowed.insert(canonical(f));
  }
  for (const auto& [f, m] : z.denominator) {
    rep.polar_locus.push_back(f);
    if (!allowed.count(f)) rep.verdict.fail("polar hyperplane outside the zero locus", to_string(f));
  }
  return rep;
}

}  // namespace arrzeta
