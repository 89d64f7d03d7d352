#include "sigample/lattice/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "sigample/error.hpp"

namespace sigample {

void SymmetricForm::set(const MultiIndex& index, const Rational& value) {
  if (index.size() != order_) {
    throw Error(ErrorKind::InvalidArgument,
                "multi-index of length " + std::to_string(index.size()) + " for order-" +
                    std::to_string(order_) + " form");
  }
  if (!std::is_sorted(index.begin(), index.end())) {
    throw Error(ErrorKind::InvalidArgument, "multi-index must be non-decreasing");
  }
  for (std::size_t i : index) {
    if (i >= rank_) {
      throw Error(ErrorKind::InvalidArgument,
                  "basis index " + std::to_string(i) + " out of range for rank " +
                      std::to_string(rank_));
    }
  }
  if (value == 0) {
    values_.erase(index);
  } else {
    values_[index] = value;
  }
}

Rational SymmetricForm::value(MultiIndex index) const {
  std::sort(index.begin(), index.end());
  const auto it = values_.find(index);
  return it == values_.end() ? Rational(0) : it->second;
}

bool SymmetricForm::is_integral() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const auto& kv) { return sigample::is_integral(kv.second); });
}

std::vector<MultiIndex> SymmetricForm::basis_tuples() const {
  std::vector<MultiIndex> out;
  if (order_ == 0) {
    out.emplace_back();
    return out;
  }
  if (rank_ == 0) return out;
  MultiIndex idx(order_, 0);
  while (true) {
    out.push_back(idx);
    // next non-decreasing tuple
    std::size_t pos = order_;
    while (pos > 0 && idx[pos - 1] == rank_ - 1) --pos;
    if (pos == 0) break;
    const std::size_t v = idx[pos - 1] + 1;
    for (std::size_t j = pos - 1; j < order_; ++j) idx[j] = v;
  }
  return out;
}

DivisorClass::DivisorClass(std::initializer_list<long> c) {
  coords.reserve(c.size());
  for (long v : c) coords.emplace_back(v);
}

DivisorClass DivisorClass::zero(std::size_t rank) {
  return DivisorClass(std::vector<Rational>(rank, Rational(0)));
}

DivisorClass DivisorClass::basis(std::size_t rank, std::size_t i) {
  DivisorClass d = zero(rank);
  d.coords.at(i) = 1;
  return d;
}

bool DivisorClass::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rational& c) { return c == 0; });
}

bool DivisorClass::is_integral() const {
  return std::all_of(coords.begin(), coords.end(),
                     [](const Rational& c) { return sigample::is_integral(c); });
}

namespace {

void require_rank(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorKind::RankMismatch,
                "rank mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
  require_rank(rank(), other.rank());
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += other.coords[i];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& other) {
  require_rank(rank(), other.rank());
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= other.coords[i];
  return *this;
}

std::string DivisorClass::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) os << ',';
    os << sigample::to_string(coords[i]);
  }
  os << ')';
  return os.str();
}

const ComponentDescriptor& SchemeDescriptor::component(std::string_view name) const {
  for (const auto& c : components) {
    if (c.name == name) return c;
  }
  throw Error(ErrorKind::UnknownName, "no component named '" + std::string(name) + "'");
}

bool SchemeDescriptor::has_todd() const {
  return !components.empty() &&
         std::all_of(components.begin(), components.end(),
                     [](const ComponentDescriptor& c) { return c.todd.has_value(); });
}

std::vector<std::string> check_scheme(const SchemeDescriptor& scheme) {
  std::vector<std::string> issues;
  if (scheme.rank == 0) issues.emplace_back("rank must be positive");
  if (scheme.components.empty()) issues.emplace_back("scheme needs at least one component");
  Rational t0_sum = 0;
  bool all_todd = true;
  for (const auto& c : scheme.components) {
    const std::string where = "component '" + c.name + "': ";
    if (c.dim == 0) issues.push_back(where + "dimension must be at least 1");
    if (c.top_form.rank() != scheme.rank || c.top_form.order() != c.dim) {
      issues.push_back(where + "top_form has the wrong rank or order");
    }
    if (!c.top_form.is_integral()) issues.push_back(where + "top_form must be integer valued");
    if (!c.todd) {
      all_todd = false;
      continue;
    }
    if (c.todd->size() != c.dim + 1) {
      issues.push_back(where + "todd needs functionals T_0 … T_" + std::to_string(c.dim));
      continue;
    }
    for (std::size_t j = 0; j < c.todd->size(); ++j) {
      const auto& t = (*c.todd)[j];
      if (t.rank() != scheme.rank || t.order() != j) {
        issues.push_back(where + "T_" + std::to_string(j) + " has the wrong rank or order");
      }
    }
    if (!((*c.todd)[c.dim] == c.top_form)) {
      issues.push_back(where + "T_" + std::to_string(c.dim) + " must equal top_form");
    }
    t0_sum += (*c.todd)[0].value({});
  }
  if (scheme.euler_char && all_todd && *scheme.euler_char != t0_sum) {
    issues.push_back("euler_char " + to_string(*scheme.euler_char) +
                     " differs from the sum of T_0 terms " + to_string(t0_sum));
  }
  return issues;
}

Rational intersect(const ComponentDescriptor& component, std::span<const DivisorClass> classes) {
  if (classes.size() != component.dim) {
    throw Error(ErrorKind::RankMismatch,
                "component '" + component.name + "' has dimension " +
                    std::to_string(component.dim) + " but " + std::to_string(classes.size()) +
                    " classes were given");
  }
  std::vector<std::vector<Rational>> args;
  args.reserve(classes.size());
  for (const auto& d : classes) args.push_back(d.coords);
  return component.top_form.evaluate<Rational>(args);
}

Rational intersect(const ComponentDescriptor& component,
                   std::initializer_list<DivisorClass> classes) {
  return intersect(component, std::span<const DivisorClass>(classes.begin(), classes.size()));
}

DivisorClass apply(const IntegerMatrix& action, const DivisorClass& d) {
  return DivisorClass(action * std::span<const Rational>(d.coords));
}

DivisorClass apply(const AutomorphismAction& action, const DivisorClass& d) {
  return apply(action.matrix, d);
}

ActionValidation validate(const SchemeDescriptor& scheme, const AutomorphismAction& action) {
  ActionValidation report;
  const IntegerMatrix& p = action.matrix;
  report.rank_ok = p.size() == scheme.rank;
  if (!report.rank_ok) return report;
  report.determinant = p.determinant();
  report.unimodular = abs(report.determinant) == 1;

  std::vector<std::vector<Rational>> images(scheme.rank);
  for (std::size_t j = 0; j < scheme.rank; ++j) {
    images[j] = apply(p, DivisorClass::basis(scheme.rank, j)).coords;
  }
  for (const auto& c : scheme.components) {
    for (const auto& idx : c.top_form.basis_tuples()) {
      std::vector<std::vector<Rational>> args;
      args.reserve(idx.size());
      for (std::size_t i : idx) args.push_back(images[i]);
      Rational actual = c.top_form.evaluate<Rational>(args);
      Rational expected = c.top_form.value(idx);
      if (actual != expected) {
        report.failures.push_back(FormFailure{c.name, idx, expected, actual});
      }
    }
  }
  return report;
}

}  // namespace sigample
