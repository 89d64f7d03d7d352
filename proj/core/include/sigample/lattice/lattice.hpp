#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sigample/exact/integer_matrix.hpp"
#include "sigample/lattice/symmetric_form.hpp"

namespace sigample {

/// Coordinates of a class in A¹_Num(X) with respect to the lattice basis.
struct DivisorClass {
  std::vector<Rational> coords;

  DivisorClass() = default;
  explicit DivisorClass(std::vector<Rational> c) : coords(std::move(c)) {}
  DivisorClass(std::initializer_list<long> c);

  static DivisorClass zero(std::size_t rank);
  static DivisorClass basis(std::size_t rank, std::size_t i);

  std::size_t rank() const noexcept { return coords.size(); }
  bool is_zero() const;
  bool is_integral() const;

  DivisorClass& operator+=(const DivisorClass& other);
  DivisorClass& operator-=(const DivisorClass& other);
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(const Rational& s, DivisorClass d) {
    for (auto& c : d.coords) c *= s;
    return d;
  }
  DivisorClass operator-() const { return Rational(-1) * *this; }
  bool operator==(const DivisorClass&) const = default;

  std::string to_string() const;
};

/// An irreducible component V of dimension n with its intersection form
/// (D_1.….D_n)_V and, optionally, Riemann–Roch functionals T_0 … T_n with
/// χ(O_V(D)) = Σ_j T_j(D, …, D) / j!.
struct ComponentDescriptor {
  std::string name;
  std::size_t dim = 0;
  SymmetricForm top_form;
  std::optional<std::vector<SymmetricForm>> todd;

  bool operator==(const ComponentDescriptor&) const = default;
};

struct SchemeDescriptor {
  std::size_t rank = 0;
  std::vector<ComponentDescriptor> components;
  std::optional<Rational> euler_char;

  const ComponentDescriptor& component(std::string_view name) const;
  bool has_todd() const;

  bool operator==(const SchemeDescriptor&) const = default;
};

/// The numerical action P of an automorphism on column coordinate vectors.
struct AutomorphismAction {
  std::string name;
  IntegerMatrix matrix;

  bool operator==(const AutomorphismAction&) const = default;
};

/// Structural problems of a scheme (empty when well formed): ranks, integral
/// symmetric top forms, Todd data consistent with the top form.
std::vector<std::string> check_scheme(const SchemeDescriptor& scheme);

/// (D_1.….D_n)_V; RankMismatch unless classes.size() == dim and ranks agree.
Rational intersect(const ComponentDescriptor& component, std::span<const DivisorClass> classes);
Rational intersect(const ComponentDescriptor& component,
                   std::initializer_list<DivisorClass> classes);

/// P·D.
DivisorClass apply(const IntegerMatrix& action, const DivisorClass& d);
DivisorClass apply(const AutomorphismAction& action, const DivisorClass& d);

struct FormFailure {
  std::string component;
  MultiIndex index;
  Rational expected;
  Rational actual;
};

struct ActionValidation {
  Integer determinant;
  bool unimodular = false;
  bool rank_ok = false;
  std::vector<FormFailure> failures;

  bool valid() const { return rank_ok && unimodular && failures.empty(); }
};

/// |det P| = 1 and top_form(P e_{a1}, …, P e_{an}) = top_form(e_{a1}, …) for
/// every non-decreasing basis tuple of every component.
ActionValidation validate(const SchemeDescriptor& scheme, const AutomorphismAction& action);

}  // namespace sigample
