#include "sigample/ampleness/oracle.hpp"

#include <algorithm>
#include <set>

#include "sigample/error.hpp"

namespace sigample {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_rank(std::size_t expected, std::size_t got) {
  if (expected != got) {
    throw Error(ErrorKind::RankMismatch,
                "oracle on rank " + std::to_string(expected) + " given class of rank " +
                    std::to_string(got));
  }
}

std::size_t oracle_rank(const AmplenessOracle& oracle) {
  return std::visit(overloaded{
                        [](const PolyhedralCone& c) {
                          return c.facets.empty() ? std::size_t{0} : c.facets.front().size();
                        },
                        [](const SurfacePositiveCone& c) { return c.reference_ample.rank(); },
                    },
                    oracle.cone);
}

Rational pair(const SymmetricForm& form, const DivisorClass& a, const DivisorClass& b) {
  const std::vector<std::vector<Rational>> args{a.coords, b.coords};
  return form.evaluate<Rational>(args);
}

/// Values of the defining functionals: each must be > 0 for ample, ≥ 0 for nef.
std::vector<Rational> condition_values(const AmplenessOracle& oracle, const DivisorClass& d) {
  require_rank(oracle_rank(oracle), d.rank());
  return std::visit(
      overloaded{
          [&](const PolyhedralCone& c) {
            std::vector<Rational> out;
            for (const auto& f : c.facets) {
              Rational v = 0;
              for (std::size_t i = 0; i < f.size(); ++i) v += Rational(f[i]) * d.coords[i];
              out.push_back(v);
            }
            return out;
          },
          [&](const SurfacePositiveCone& c) {
            const auto& form = c.component.top_form;
            std::vector<Rational> out{pair(form, d, d), pair(form, d, c.reference_ample)};
            for (const auto& curve : c.obstructions) out.push_back(pair(form, d, curve));
            return out;
          },
      },
      oracle.cone);
}

/// Primitive integer representative of the ray through v (v ≠ 0).
std::vector<Integer> primitive(std::span<const Rational> v) {
  Integer lcm_den = 1;
  for (const auto& c : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  Integer g = 0;
  for (const auto& c : v) {
    Integer x = c.get_num() * (lcm_den / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    out.push_back(x);
  }
  if (g != 0) {
    for (auto& x : out) x /= g;
  }
  return out;
}

using Ray = std::vector<Integer>;
struct RayLess {
  bool operator()(const Ray& a, const Ray& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const Integer& x, const Integer& y) { return cmp(x, y) < 0; });
  }
};
using RaySet = std::set<Ray, RayLess>;

}  // namespace

std::vector<std::string> check_oracle(const AmplenessOracle& oracle, std::size_t rank) {
  std::vector<std::string> issues;
  const std::string where = "oracle '" + oracle.name + "': ";
  std::visit(overloaded{
                 [&](const PolyhedralCone& c) {
                   if (c.facets.empty()) issues.push_back(where + "needs at least one facet");
                   for (const auto& f : c.facets) {
                     if (f.size() != rank) issues.push_back(where + "facet has the wrong length");
                   }
                 },
                 [&](const SurfacePositiveCone& c) {
                   if (c.component.dim != 2) {
                     issues.push_back(where + "surface_positive_cone needs a 2-dimensional component");
                     return;
                   }
                   if (c.reference_ample.rank() != rank) {
                     issues.push_back(where + "reference class has the wrong rank");
                     return;
                   }
                   const auto& form = c.component.top_form;
                   if (pair(form, c.reference_ample, c.reference_ample) <= 0) {
                     issues.push_back(where + "reference class must have (A.A) > 0");
                   }
                   for (const auto& curve : c.obstructions) {
                     if (curve.rank() != rank) {
                       issues.push_back(where + "obstruction has the wrong rank");
                     } else if (pair(form, c.reference_ample, curve) <= 0) {
                       issues.push_back(where + "reference class must meet every obstruction positively");
                     }
                   }
                 },
             },
             oracle.cone);
  return issues;
}

bool is_ample(const AmplenessOracle& oracle, const DivisorClass& d) {
  const auto values = condition_values(oracle, d);
  return std::all_of(values.begin(), values.end(), [](const Rational& v) { return v > 0; });
}

bool is_nef(const AmplenessOracle& oracle, const DivisorClass& d) {
  const auto values = condition_values(oracle, d);
  return std::all_of(values.begin(), values.end(), [](const Rational& v) { return v >= 0; });
}

std::vector<NumericalPolynomial> ample_conditions(const AmplenessOracle& oracle,
                                                  std::span<const NumericalPolynomial> family) {
  require_rank(oracle_rank(oracle), family.size());
  const std::vector<NumericalPolynomial> fam(family.begin(), family.end());
  return std::visit(
      overloaded{
          [&](const PolyhedralCone& c) {
            std::vector<NumericalPolynomial> out;
            for (const auto& f : c.facets) {
              NumericalPolynomial v;
              for (std::size_t i = 0; i < f.size(); ++i) v += fam[i] * Rational(f[i]);
              out.push_back(std::move(v));
            }
            return out;
          },
          [&](const SurfacePositiveCone& c) {
            const auto& form = c.component.top_form;
            auto lift = [](const DivisorClass& d) {
              std::vector<NumericalPolynomial> v;
              for (const auto& x : d.coords) v.emplace_back(x);
              return v;
            };
            auto pair_poly = [&](const std::vector<NumericalPolynomial>& b) {
              const std::vector<std::vector<NumericalPolynomial>> args{fam, b};
              return form.evaluate<NumericalPolynomial>(args);
            };
            std::vector<NumericalPolynomial> out{pair_poly(fam), pair_poly(lift(c.reference_ample))};
            for (const auto& curve : c.obstructions) out.push_back(pair_poly(lift(curve)));
            return out;
          },
      },
      oracle.cone);
}

std::optional<Integer> is_ample_symbolic(const AmplenessOracle& oracle,
                                         std::span<const NumericalPolynomial> family) {
  const auto conditions = ample_conditions(oracle, family);
  return exists_common_positive(conditions);
}

bool preserved_by(const AmplenessOracle& oracle, const IntegerMatrix& p) {
  if (p.size() != oracle_rank(oracle)) return false;
  return std::visit(
      overloaded{
          [&](const PolyhedralCone& c) {
            // x ∈ cone ⇔ Px ∈ cone ⇔ (Pᵀf)·x > 0 for all facets f
            const IntegerMatrix pt = p.transpose();
            RaySet original, image;
            for (const auto& f : c.facets) {
              std::vector<Rational> fr(f.begin(), f.end());
              original.insert(primitive(fr));
              image.insert(primitive(pt * std::span<const Rational>(fr)));
            }
            return original == image;
          },
          [&](const SurfacePositiveCone& c) {
            AmplenessOracle self{oracle.name, c};
            if (!is_ample(self, apply(p, c.reference_ample))) return false;
            RaySet original, image;
            for (const auto& curve : c.obstructions) {
              original.insert(primitive(curve.coords));
              image.insert(primitive(apply(p, curve).coords));
            }
            return original == image;
          },
      },
      oracle.cone);
}

}  // namespace sigample
