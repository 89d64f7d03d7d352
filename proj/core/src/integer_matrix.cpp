#include "sigample/exact/integer_matrix.hpp"

#include <sstream>
#include <utility>

#include "sigample/error.hpp"

namespace sigample {

IntegerMatrix::IntegerMatrix(std::size_t size)
    : size_(size), entries_(size * size, Integer(0)) {}

IntegerMatrix::IntegerMatrix(std::size_t size, std::vector<Integer> entries)
    : size_(size), entries_(std::move(entries)) {
  if (entries_.size() != size_ * size_) {
    throw Error(ErrorKind::InvalidArgument,
                "matrix of size " + std::to_string(size_) + " needs " +
                    std::to_string(size_ * size_) + " entries, got " +
                    std::to_string(entries_.size()));
  }
}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : size_(rows.size()) {
  entries_.reserve(size_ * size_);
  for (const auto& row : rows) {
    if (row.size() != size_) {
      throw Error(ErrorKind::InvalidArgument, "matrix rows must be square");
    }
    for (long v : row) entries_.emplace_back(v);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t size) {
  return scalar(size, Integer(1));
}

IntegerMatrix IntegerMatrix::scalar(std::size_t size, const Integer& value) {
  IntegerMatrix m(size);
  for (std::size_t i = 0; i < size; ++i) m(i, i) = value;
  return m;
}

bool IntegerMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (e != 0) return false;
  }
  return true;
}

bool IntegerMatrix::is_identity() const {
  for (std::size_t i = 0; i < size_; ++i) {
    for (std::size_t j = 0; j < size_; ++j) {
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

Integer IntegerMatrix::trace() const {
  Integer t = 0;
  for (std::size_t i = 0; i < size_; ++i) t += (*this)(i, i);
  return t;
}

Integer IntegerMatrix::determinant() const {
  if (size_ == 0) return 1;
  std::vector<Integer> a = entries_;
  const std::size_t n = size_;
  auto at = [&](std::size_t i, std::size_t j) -> Integer& { return a[i * n + j]; };
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && at(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = at(k, k) * at(i, j) - at(i, k) * at(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        at(i, j) = std::move(v);
      }
    }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

IntegerMatrix IntegerMatrix::adjugate() const {
  IntegerMatrix adj(size_);
  if (size_ == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t r = 0; r < size_; ++r) {
    for (std::size_t c = 0; c < size_; ++c) {
      // cofactor C_rc lands at adj(c, r)
      std::vector<Integer> minor;
      minor.reserve((size_ - 1) * (size_ - 1));
      for (std::size_t i = 0; i < size_; ++i) {
        if (i == r) continue;
        for (std::size_t j = 0; j < size_; ++j) {
          if (j != c) minor.push_back((*this)(i, j));
        }
      }
      Integer det = IntegerMatrix(size_ - 1, std::move(minor)).determinant();
      adj(c, r) = ((r + c) % 2 == 0) ? det : Integer(-det);
    }
  }
  return adj;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(size_);
  for (std::size_t i = 0; i < size_; ++i) {
    for (std::size_t j = 0; j < size_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

void IntegerMatrix::require_same_size(const IntegerMatrix& other) const {
  if (other.size_ != size_) {
    throw Error(ErrorKind::RankMismatch,
                "matrix sizes differ: " + std::to_string(size_) + " vs " +
                    std::to_string(other.size_));
  }
}

IntegerMatrix IntegerMatrix::operator+(const IntegerMatrix& other) const {
  require_same_size(other);
  IntegerMatrix out(size_);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out.entries_[i] = entries_[i] + other.entries_[i];
  }
  return out;
}

IntegerMatrix IntegerMatrix::operator-(const IntegerMatrix& other) const {
  require_same_size(other);
  IntegerMatrix out(size_);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out.entries_[i] = entries_[i] - other.entries_[i];
  }
  return out;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& other) const {
  require_same_size(other);
  IntegerMatrix out(size_);
  for (std::size_t i = 0; i < size_; ++i) {
    for (std::size_t k = 0; k < size_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < size_; ++j) out(i, j) += a * other(k, j);
    }
  }
  return out;
}

IntegerMatrix IntegerMatrix::operator*(const Integer& factor) const {
  IntegerMatrix out(size_);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out.entries_[i] = entries_[i] * factor;
  }
  return out;
}

std::vector<Rational> IntegerMatrix::operator*(std::span<const Rational> vec) const {
  if (vec.size() != size_) {
    throw Error(ErrorKind::RankMismatch,
                "vector of length " + std::to_string(vec.size()) +
                    " applied to matrix of size " + std::to_string(size_));
  }
  std::vector<Rational> out(size_, Rational(0));
  for (std::size_t i = 0; i < size_; ++i) {
    for (std::size_t j = 0; j < size_; ++j) {
      if ((*this)(i, j) != 0) out[i] += Rational((*this)(i, j)) * vec[j];
    }
  }
  return out;
}

IntegerMatrix IntegerMatrix::kronecker(const IntegerMatrix& other) const {
  const std::size_t n = size_ * other.size_;
  IntegerMatrix out(n);
  for (std::size_t i = 0; i < size_; ++i) {
    for (std::size_t j = 0; j < size_; ++j) {
      const Integer& a = (*this)(i, j);
      if (a == 0) continue;
      for (std::size_t k = 0; k < other.size_; ++k) {
        for (std::size_t l = 0; l < other.size_; ++l) {
          out(i * other.size_ + k, j * other.size_ + l) = a * other(k, l);
        }
      }
    }
  }
  return out;
}

std::string IntegerMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < size_; ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < size_; ++j) {
      if (j) os << ',';
      os << (*this)(i, j).get_str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace sigample
