#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "sigample/exact/scalar.hpp"

namespace sigample {

/// Exact square integer matrix, row-major. Matrices act on column vectors.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  /// Zero matrix of the given size.
  explicit IntegerMatrix(std::size_t size);
  /// Row-major entries; throws InvalidArgument unless entries.size() == size².
  IntegerMatrix(std::size_t size, std::vector<Integer> entries);
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t size);
  static IntegerMatrix scalar(std::size_t size, const Integer& value);

  std::size_t size() const noexcept { return size_; }

  const Integer& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * size_ + col];
  }
  Integer& operator()(std::size_t row, std::size_t col) {
    return entries_[row * size_ + col];
  }

  std::span<const Integer> entries() const noexcept { return entries_; }

  bool is_zero() const;
  bool is_identity() const;

  Integer trace() const;
  /// Fraction-free (Bareiss) determinant.
  Integer determinant() const;
  /// Classical adjugate: adj(M)·M = det(M)·I.
  IntegerMatrix adjugate() const;
  IntegerMatrix transpose() const;

  IntegerMatrix operator+(const IntegerMatrix& other) const;
  IntegerMatrix operator-(const IntegerMatrix& other) const;
  IntegerMatrix operator*(const IntegerMatrix& other) const;
  IntegerMatrix operator*(const Integer& factor) const;

  std::vector<Rational> operator*(std::span<const Rational> vec) const;

  bool operator==(const IntegerMatrix& other) const = default;

  /// Kronecker product, size n², entry ((i,k),(j,l)) = a_ij·b_kl.
  IntegerMatrix kronecker(const IntegerMatrix& other) const;

  std::string to_string() const;

 private:
  void require_same_size(const IntegerMatrix& other) const;

  std::size_t size_ = 0;
  std::vector<Integer> entries_;
};

}  // namespace sigample
