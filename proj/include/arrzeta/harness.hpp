#pragma once

#include <span>
#include <string>
#include <vector>

#include "arrzeta/affine_form.hpp"
#include "arrzeta/arrangement.hpp"
#include "arrzeta/zeta.hpp"

namespace arrzeta {

/// {beta > 0 : sum_{i in I_W} beta_i <= codim W for every dense edge W}.
struct Polytope {
  struct Inequality {
    IndexSet indices;
    long bound = 0;
  };
  std::size_t ambient = 0;
  std::vector<Inequality> inequalities;
};

struct Witness {
  std::string clause;
  std::string detail;
};

struct Verdict {
  bool pass = true;
  std::vector<Witness> witnesses;  // violations; empty iff pass

  void fail(std::string clause, std::string detail) {
    pass = false;
    witnesses.push_back({std::move(clause), std::move(detail)});
  }
};

Rational lct(const Arrangement& arr);
Polytope log_canonical_polytope(const Arrangement& arr);
bool polytope_member(const Polytope& poly, std::span<const Rational> alpha, bool strict);

Verdict validate_adapted(const Arrangement& arr, std::span<const Rational> beta);
/// Convex combination of basis indicator vectors adjusted until every dense
/// edge other than {0} has a non-integral sum.
RVector adapted_vector(const Arrangement& arr);

struct NdReport {
  long n = 0;
  long d = 0;
  Rational ratio;  // -n/d
  bool is_candidate = false;
  bool is_local_pole = false;
  Verdict verdict;
};

NdReport nd_check(const Arrangement& arr);

struct SmcReport {
  std::vector<Rational> poles;
  Verdict verdict;
};

SmcReport smc_verify(const Arrangement& arr, const std::vector<Rational>& roots, bool local);

struct MultiNdReport {
  AffineForm hyperplane;  // sum_j deg(h_j) s_j + n, canonical
  bool is_candidate = false;
  bool is_polar = false;
  Verdict verdict;
};

MultiNdReport multi_nd_check(const Arrangement& arr);

struct MultiSmcReport {
  std::vector<AffineForm> polar_locus;
  Verdict verdict;
};

MultiSmcReport multi_smc_verify(const Arrangement& arr, const std::vector<AffineForm>& zero_locus);

}  // namespace arrzeta
