#pragma once

#include <span>
#include <vector>

#include "arrzeta/rational.hpp"
#include "arrzeta/walls.hpp"

namespace arrzeta::vmono {

/// Rank-one normal crossings connection with residue exponents beta_i along
/// the components t_i = 0.
struct MonomialConnectionSpec {
  RVector beta;
};

/// Exponents of the monomial generating V^alpha: ceil(alpha_i - beta_i) - 1.
std::vector<Integer> ncv_generator(const MonomialConnectionSpec& spec, std::span<const Rational> alpha);
/// One family per coordinate: alpha_i in beta_i + Z.
WallSet ncv_walls(const MonomialConnectionSpec& spec);

/// Class of t1^m t2^n / (t1 - t2)^k in O[(t1 - t2)^{-1}] / O. k = 0 is the
/// zero class.
struct DiagClass {
  long m = 0;
  long n = 0;
  long k = 0;

  long level() const { return m + n - k; }
};

/// Membership in the restricted filtration: m + n - k >= alpha_1 + alpha_2 - 2.
bool diag_vres_member(const DiagClass& c, std::span<const Rational> alpha);
/// Eigenvalue of s_1 + s_2 on the class: -(m + n - k + 2).
Rational diag_s_eigenvalue(const DiagClass& c);
/// Levels i..j of the walls {alpha_1 + alpha_2 = m}, m >= 0, separating alpha
/// and beta; the quotient V^alpha / V^beta is killed by prod (s1 + s2 + level).
std::vector<long> diag_annihilator(std::span<const Rational> alpha, std::span<const Rational> beta);
/// Restricted walls of the diagonal example: {alpha_1 + alpha_2 in Z}.
WallSet diag_restricted_walls();

}  // namespace arrzeta::vmono
