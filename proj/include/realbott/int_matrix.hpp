#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace realbott {

// Dense row-major integer matrix with overflow-checked arithmetic.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const std::vector<std::int64_t>& entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::int64_t* row(std::size_t i) const { return data_.data() + i * cols_; }
  std::int64_t* row(std::size_t i) { return data_.data() + i * cols_; }

  IntMatrix transposed() const;
  bool is_zero() const;
  std::vector<std::int64_t> apply(const std::vector<std::int64_t>& v) const;
  std::string to_string() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(std::int64_t s, const IntMatrix& a);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

// Fraction-free (Bareiss) determinant of a square matrix.
std::int64_t determinant(const IntMatrix& m);
// adj(M) with adj(M) M = det(M) I; integral by construction.
IntMatrix adjugate(const IntMatrix& m);

}  // namespace realbott
