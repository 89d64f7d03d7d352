#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "sigample/error.hpp"
#include "sigample/exact/scalar.hpp"

namespace sigample {

using MultiIndex = std::vector<std::size_t>;

/// Symmetric multilinear form of a given order on a rank-ℓ lattice, stored as
/// a value table on non-decreasing basis multi-indices. Absent entries are 0.
class SymmetricForm {
 public:
  SymmetricForm() = default;
  SymmetricForm(std::size_t rank, std::size_t order) : rank_(rank), order_(order) {}

  std::size_t rank() const noexcept { return rank_; }
  std::size_t order() const noexcept { return order_; }

  /// Index must be non-decreasing with entries < rank (InvalidArgument).
  void set(const MultiIndex& index, const Rational& value);
  /// Any argument order; sorted internally.
  Rational value(MultiIndex index) const;

  const std::map<MultiIndex, Rational>& entries() const noexcept { return values_; }

  bool is_integral() const;

  /// All non-decreasing multi-indices of this order, lexicographic.
  std::vector<MultiIndex> basis_tuples() const;

  /// Multilinear evaluation on `order` coordinate vectors whose entries live in
  /// any commutative ring R that can be scaled by a Rational.
  template <typename R>
  R evaluate(std::span<const std::vector<R>> args) const {
    if (args.size() != order_) {
      throw Error(ErrorKind::RankMismatch,
                  "form of order " + std::to_string(order_) + " given " +
                      std::to_string(args.size()) + " arguments");
    }
    for (const auto& a : args) {
      if (a.size() != rank_) {
        throw Error(ErrorKind::RankMismatch,
                    "class of length " + std::to_string(a.size()) + " on rank-" +
                        std::to_string(rank_) + " lattice");
      }
    }
    R total(Rational(0));
    for (const auto& [key, coeff] : values_) {
      MultiIndex perm = key;
      R sum(Rational(0));
      do {
        R term(Rational(1));
        bool zero = false;
        for (std::size_t j = 0; j < order_; ++j) {
          const R& c = args[j][perm[j]];
          if (c == R(Rational(0))) {
            zero = true;
            break;
          }
          term *= c;
        }
        if (!zero) sum += term;
      } while (std::next_permutation(perm.begin(), perm.end()));
      sum *= coeff;
      total += sum;
    }
    return total;
  }

  /// T(v, …, v).
  template <typename R>
  R evaluate_diagonal(const std::vector<R>& v) const {
    const std::vector<std::vector<R>> args(order_, v);
    return evaluate<R>(args);
  }

  bool operator==(const SymmetricForm&) const = default;

 private:
  std::size_t rank_ = 0;
  std::size_t order_ = 0;
  std::map<MultiIndex, Rational> values_;
};

}  // namespace sigample
