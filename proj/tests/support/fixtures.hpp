#pragma once

// Hand-built scheme data for core unit tests, independent of the CLI catalog.

#include "sigample/sigample.hpp"

namespace sigample::testing {

inline SymmetricForm quadratic_form(const IntegerMatrix& gram) {
  SymmetricForm f(gram.size(), 2);
  for (std::size_t i = 0; i < gram.size(); ++i)
    for (std::size_t j = i; j < gram.size(); ++j) f.set({i, j}, Rational(gram(i, j)));
  return f;
}

inline ComponentDescriptor surface(const IntegerMatrix& gram, const Rational& chi) {
  ComponentDescriptor c;
  c.name = "X";
  c.dim = 2;
  c.top_form = quadratic_form(gram);
  SymmetricForm t0(gram.size(), 0);
  t0.set({}, chi);
  c.todd = std::vector<SymmetricForm>{t0, SymmetricForm(gram.size(), 1), c.top_form};
  return c;
}

struct Wehler {
  ComponentDescriptor x = surface(IntegerMatrix{{2, 4}, {4, 2}}, 2);
  SchemeDescriptor scheme{2, {x}, Rational(2)};
  IntegerMatrix s1{{1, 4}, {0, -1}};
  IntegerMatrix s2{{-1, 0}, {4, 1}};
  IntegerMatrix s1s2 = s1 * s2;
  AmplenessOracle oracle{"ample", SurfacePositiveCone{x, DivisorClass{1, 1}, {}}};
  DivisorClass h1{1, 0};
  DivisorClass h2{0, 1};
};

struct AbelianSquare {
  ComponentDescriptor x = surface(IntegerMatrix{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}, 0);
  SchemeDescriptor scheme{3, {x}, Rational(0)};
  IntegerMatrix shear{{2, 0, 1}, {2, 1, 0}, {-1, 0, 0}};
  AmplenessOracle oracle{"ample", SurfacePositiveCone{x, DivisorClass{1, 1, 1}, {}}};
  DivisorClass d111{1, 1, 1};
};

/// ℓ = 1, top form value 1 in dimension n, identity action; χ from Todd data.
inline SchemeDescriptor rank_one(std::size_t dim, std::vector<Rational> lower_todd) {
  ComponentDescriptor c;
  c.name = "X";
  c.dim = dim;
  c.top_form = SymmetricForm(1, dim);
  c.top_form.set(MultiIndex(dim, 0), 1);
  std::vector<SymmetricForm> todd;
  for (std::size_t j = 0; j < lower_todd.size(); ++j) {
    SymmetricForm t(1, j);
    t.set(MultiIndex(j, 0), lower_todd[j]);
    todd.push_back(t);
  }
  todd.push_back(c.top_form);
  c.todd = todd;
  return SchemeDescriptor{1, {c}, std::nullopt};
}

inline AmplenessOracle positive_ray() {
  return AmplenessOracle{"ample", PolyhedralCone{{{Integer(1)}}}};
}

}  // namespace sigample::testing
