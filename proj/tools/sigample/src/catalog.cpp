#include "sigample/cli/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <utility>

namespace sigample::cli {

namespace {

using Entries = std::vector<std::pair<MultiIndex, Rational>>;

SymmetricForm form(std::size_t rank, std::size_t order, const Entries& entries) {
  SymmetricForm f(rank, order);
  for (const auto& [idx, value] : entries) f.set(idx, value);
  return f;
}

ComponentDescriptor component(std::string name, std::size_t rank, std::size_t dim, const Entries& top,
                              std::vector<Entries> lower_todd) {
  ComponentDescriptor c;
  c.name = std::move(name);
  c.dim = dim;
  c.top_form = form(rank, dim, top);
  std::vector<SymmetricForm> todd;
  for (std::size_t j = 0; j < lower_todd.size(); ++j) todd.push_back(form(rank, j, lower_todd[j]));
  todd.push_back(c.top_form);
  c.todd = std::move(todd);
  return c;
}

AmplenessOracle polyhedral(std::vector<std::vector<long>> facets) {
  PolyhedralCone cone;
  for (const auto& f : facets) cone.facets.emplace_back(f.begin(), f.end());
  return AmplenessOracle{"ample", std::move(cone)};
}

/// ℓ = 1 schemes whose only automorphism action is the identity: Pⁿ and curves.
SchemeFile picard_rank_one(std::string name, std::size_t dim, std::vector<Entries> lower_todd,
                           const Rational& chi) {
  SchemeFile f;
  f.name = std::move(name);
  f.scheme.rank = 1;
  f.scheme.euler_char = chi;
  f.scheme.components.push_back(component("X", 1, dim, {{MultiIndex(dim, 0), 1}}, std::move(lower_todd)));
  f.oracles.push_back(polyhedral({{1}}));
  f.automorphisms.push_back({"id", IntegerMatrix{{1}}});
  f.divisors = {{"D", DivisorClass{1}}, {"D2", DivisorClass{2}}, {"minusD", DivisorClass{-1}}};
  return f;
}

SchemeFile p1() {
  // χ(O(d)) = d + 1
  return picard_rank_one("p1", 1, {{{{}, 1}}}, 1);
}

SchemeFile elliptic_curve() {
  // χ(O(d)) = d
  return picard_rank_one("elliptic_curve", 1, {{}}, 0);
}

SchemeFile p2() {
  // χ(O(d)) = d²/2 + 3d/2 + 1
  return picard_rank_one("p2", 2, {{{{}, 1}}, {{{0}, Rational(3, 2)}}}, 1);
}

SchemeFile pn() {
  // projective 3-space: χ(O(d)) = (d+1)(d+2)(d+3)/6
  return picard_rank_one("pn", 3, {{{{}, 1}}, {{{0}, Rational(11, 6)}}, {{{0, 0}, 2}}}, 1);
}

/// General member of Wehler's family of K3 surfaces in P²×P²: Pic = Z H1 ⊕ Z H2
/// with (H1²) = (H2²) = 2, (H1.H2) = 4, and two involutions. K = 0 and
/// χ(O_X) = 2. There are no (−2)-curves, so the ample cone is the positive
/// cone component containing H1 + H2.
SchemeFile wehler_k3() {
  SchemeFile f;
  f.name = "wehler_k3";
  f.scheme.rank = 2;
  f.scheme.euler_char = 2;
  auto x = component("X", 2, 2, {{{0, 0}, 2}, {{0, 1}, 4}, {{1, 1}, 2}}, {{{{}, 2}}, {}});
  f.scheme.components.push_back(x);
  f.oracles.push_back(AmplenessOracle{"ample", SurfacePositiveCone{x, DivisorClass{1, 1}, {}}});
  const IntegerMatrix s1{{1, 4}, {0, -1}};
  const IntegerMatrix s2{{-1, 0}, {4, 1}};
  f.automorphisms = {{"id", IntegerMatrix::identity(2)}, {"s1", s1}, {"s2", s2}, {"s1s2", s1 * s2}};
  f.divisors = {{"H1", DivisorClass{1, 0}},       {"H2", DivisorClass{0, 1}},
                {"H1plusH2", DivisorClass{1, 1}}, {"minusH1", DivisorClass{-1, 0}},
                {"H1minusH2", DivisorClass{1, -1}}};
  return f;
}

/// E × E for an elliptic curve without complex multiplication. Basis:
/// e1 = {0}×E, e2 = E×{0}, e3 = the diagonal; all self-intersections vanish and
/// distinct basis classes meet once. "shear" is the pullback along
/// (x, y) ↦ (x + y, y): it fixes e2, sends the diagonal to e1, and sends e1 to
/// the antidiagonal 2e1 + 2e2 − e3 (which meets the diagonal in the four
/// 2-torsion points). "swap" exchanges the factors.
SchemeFile abelian_square() {
  SchemeFile f;
  f.name = "abelian_square";
  f.scheme.rank = 3;
  f.scheme.euler_char = 0;
  auto x = component("X", 3, 2, {{{0, 1}, 1}, {{0, 2}, 1}, {{1, 2}, 1}}, {{}, {}});
  f.scheme.components.push_back(x);
  f.oracles.push_back(AmplenessOracle{"ample", SurfacePositiveCone{x, DivisorClass{1, 1, 1}, {}}});
  f.automorphisms = {{"id", IntegerMatrix::identity(3)},
                     {"shear", IntegerMatrix{{2, 0, 1}, {2, 1, 0}, {-1, 0, 0}}},
                     {"swap", IntegerMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}}};
  f.divisors = {{"D111", DivisorClass{1, 1, 1}}, {"D211", DivisorClass{2, 1, 1}},
                {"E1", DivisorClass{1, 0, 0}}, {"minusD111", DivisorClass{-1, -1, -1}}};
  return f;
}

/// P¹ × P¹ with the two rulings as basis; K = (−2, −2), χ(O(a, b)) = (a+1)(b+1).
SchemeFile p1xp1() {
  SchemeFile f;
  f.name = "p1xp1";
  f.scheme.rank = 2;
  f.scheme.euler_char = 1;
  f.scheme.components.push_back(component("X", 2, 2, {{{0, 1}, 1}}, {{{{}, 1}}, {{{0}, 1}, {{1}, 1}}}));
  f.oracles.push_back(polyhedral({{1, 0}, {0, 1}}));
  f.automorphisms = {{"id", IntegerMatrix::identity(2)}, {"swap", IntegerMatrix{{0, 1}, {1, 0}}}};
  f.divisors = {{"O11", DivisorClass{1, 1}}, {"O21", DivisorClass{2, 1}}, {"O10", DivisorClass{1, 0}}};
  return f;
}

const std::map<std::string, std::function<SchemeFile()>, std::less<>>& registry() {
  static const std::map<std::string, std::function<SchemeFile()>, std::less<>> entries{
      {"abelian_square", abelian_square}, {"elliptic_curve", elliptic_curve},
      {"p1", p1},                         {"p1xp1", p1xp1},
      {"p2", p2},                         {"pn", pn},
      {"wehler_k3", wehler_k3},
  };
  return entries;
}

}  // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& [name, make] : registry()) names.push_back(name);
  return names;
}

bool in_catalog(std::string_view name) { return registry().find(name) != registry().end(); }

SchemeFile catalog_entry(std::string_view name) {
  const auto it = registry().find(name);
  if (it == registry().end()) {
    throw Error(ErrorKind::UnknownName, "no catalog entry named '" + std::string(name) + "'");
  }
  return it->second();
}

}  // namespace sigample::cli
