#include "arrzeta/fixtures.hpp"

#include "arrzeta/error.hpp"

namespace arrzeta::fixtures {

namespace {

RVector row(std::initializer_list<long> xs) {
  RVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

Arrangement veys() {
  return Arrangement::central(3, {row({1, 0, 0}), row({0, 1, 0}), row({1, -1, 0}), row({0, 0, 1}), row({1, 0, -1})},
                              {1, 1, 1, 2, 4});
}

std::vector<Rational> veys_bf_roots() {
  // b_f(s) = (s + 1/3)(s + 2/3)(s + 4/3) prod_{i=1}^{4} (s + i/4)
  //          prod_{i=2}^{8} (s + i/7) prod_{i=4}^{11} (s + i/9)
  std::vector<Rational> roots{make_rational(-1, 3), make_rational(-2, 3), make_rational(-4, 3)};
  for (long i = 1; i <= 4; ++i) roots.push_back(make_rational(-i, 4));
  for (long i = 2; i <= 8; ++i) roots.push_back(make_rational(-i, 7));
  for (long i = 4; i <= 11; ++i) roots.push_back(make_rational(-i, 9));
  return roots;
}

Arrangement three_lines() { return Arrangement::reduced(2, {row({1, 0}), row({0, 1}), row({1, -1})}); }

Arrangement boolean2() { return Arrangement::reduced(2, {row({1, 0}), row({0, 1})}); }

Arrangement two_factor() {
  return Arrangement::central(2, {row({1, 0}), row({0, 1}), row({1, -1})}, {1, 1, 1},
                              FactorMatrix{{1, 0, 0}, {0, 1, 1}});
}

std::vector<std::string> example_names() { return {"boolean2", "threelines", "twofactor", "veys"}; }

io::ArrangementFile example(const std::string& name) {
  if (name == "veys") return {veys(), "veys"};
  if (name == "threelines") return {three_lines(), "threelines"};
  if (name == "boolean2") return {boolean2(), "boolean2"};
  if (name == "twofactor") return {two_factor(), "twofactor"};
  std::string known;
  for (const auto& n : example_names()) known += (known.empty() ? "" : ", ") + n;
  throw Error("unknown example '" + name + "' (known: " + known + ")");
}

std::optional<std::vector<Rational>> example_roots(const std::string& name) {
  if (name == "veys") return veys_bf_roots();
  return std::nullopt;
}

}  // namespace arrzeta::fixtures
