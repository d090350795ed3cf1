#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace realbott {

class Permutation;

// Square matrix over Z/2 of size at most 8, one byte per row. Bit j of row i
// is the entry in row i, column j (0-based).
class Gf2Matrix {
 public:
  static constexpr int kMaxDim = 8;

  Gf2Matrix() = default;
  explicit Gf2Matrix(int n);

  static Gf2Matrix identity(int n);
  // Identity plus the single entry (row, col).
  static Gf2Matrix identity_plus_unit(int n, int row, int col);
  // Row-major bits: bit (n*n - 1 - (i*n + j)) of `bits` is entry (i, j), so
  // the first character of bit_string() is the most significant bit.
  static Gf2Matrix from_bits(int n, std::uint64_t bits);
  // Matrix sending basis vector e_i to e_{perm(i)}: entry (perm(i), i) = 1.
  static Gf2Matrix permutation_matrix(const Permutation& perm);

  int dim() const noexcept { return n_; }
  bool entry(int i, int j) const noexcept { return (rows_[i] >> j) & 1u; }
  void set(int i, int j, bool value) noexcept;
  std::uint8_t row_mask(int i) const noexcept { return rows_[i]; }
  std::uint8_t column_mask(int j) const noexcept;
  void set_row_mask(int i, std::uint8_t mask) noexcept { rows_[i] = mask; }

  Gf2Matrix transposed() const;
  int rank() const;
  bool invertible() const { return rank() == n_; }
  std::optional<Gf2Matrix> inverse() const;
  bool is_identity() const { return *this == identity(n_); }
  bool unit_diagonal() const;

  // Matrix-vector product with the vector given as a bit mask.
  std::uint8_t apply(std::uint8_t vector) const;

  std::uint64_t bits() const;
  std::string bit_string() const;

  friend Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b);
  friend Gf2Matrix operator+(const Gf2Matrix& a, const Gf2Matrix& b);
  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  int n_ = 0;
  std::array<std::uint8_t, kMaxDim> rows_{};
};

}  // namespace realbott
