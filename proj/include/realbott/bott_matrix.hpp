#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace realbott {

inline constexpr int kMaxDim = 8;

// A bijection of {0, ..., n-1}; image(i) is where i is sent.
class Permutation {
 public:
  Permutation() = default;
  // Throws std::invalid_argument if `image` is not a bijection.
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& image() const noexcept { return image_; }

  Permutation inverse() const;
  bool is_identity() const;
  // (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

// Sizes (n_1, ..., n_q) of the successive square-zero generator spaces.
struct TypeSignature {
  std::vector<int> parts;

  int total() const;
  std::string to_string() const;  // "(1,1,2)"
  friend auto operator<=>(const TypeSignature&, const TypeSignature&) = default;
};

// Strictly upper-triangular (0,1)-matrix of size n <= 8. Indices are 0-based;
// entry(i, j) is the coefficient of x_i in the first Stiefel-Whitney class of
// the j-th line bundle of the tower, so column j carries the relation
// x_j^2 = x_j * sum_i entry(i, j) x_i.
class BottMatrix {
 public:
  BottMatrix() = default;
  // Zero matrix. Throws std::invalid_argument unless 1 <= n <= 8.
  explicit BottMatrix(int n);

  // Rows given as strings of '0'/'1'. Throws ParseError on shape or triangularity violations.
  static BottMatrix from_rows(const std::vector<std::string>& rows);
  // Inverse of key(). Throws std::invalid_argument if key has too many bits.
  static BottMatrix from_key(int n, std::uint64_t key);
  static BottMatrix from_key_string(int n, std::string_view bits);

  int dim() const noexcept { return n_; }
  bool entry(int i, int j) const noexcept { return (rows_[i] >> j) & 1u; }
  // Throws std::invalid_argument for i >= j or out of range.
  BottMatrix with_entry(int i, int j, bool value) const;

  std::uint8_t row_mask(int i) const noexcept { return rows_[i]; }
  std::uint8_t column_mask(int j) const noexcept;

  // Number of above-diagonal bits, n(n-1)/2.
  int key_bits() const noexcept { return n_ * (n_ - 1) / 2; }
  // Above-diagonal bits read row-major; the first bit read is the most
  // significant, so numeric order equals lexicographic order of key_string().
  std::uint64_t key() const noexcept;
  std::string key_string() const;

  // sigma A sigma^{-1}: entry (sigma(i), sigma(j)) of the result is entry (i, j).
  // Empty when the conjugate is not strictly upper triangular.
  std::optional<BottMatrix> conjugate(const Permutation& sigma) const;

  bool is_zero() const noexcept;

  friend bool operator==(const BottMatrix&, const BottMatrix&) = default;

 private:
  int n_ = 0;
  std::array<std::uint8_t, kMaxDim> rows_{};
};

// Ordering by (dimension, key).
bool key_less(const BottMatrix& a, const BottMatrix& b);

// Matrix file format: decimal n, then n lines of n characters from {0,1}.
BottMatrix parse_matrix(std::string_view text);
std::string format_matrix(const BottMatrix& a);
BottMatrix read_matrix_file(const std::string& path);

bool is_orientable(const BottMatrix& a);

// Generator masks removed at each stage of the square-zero iteration.
std::vector<std::uint8_t> type_stages(const BottMatrix& a);
TypeSignature type_signature(const BottMatrix& a);

struct NormalForm {
  BottMatrix matrix;
  Permutation perm;  // matrix == original.conjugate(perm)
};

// True when the diagonal blocks of A for the given type are zero.
bool has_zero_diagonal_blocks(const BottMatrix& a, const TypeSignature& type);
// True when A is in block form for its own type (equivalently, a fixed point of normal_form).
bool is_normal_form(const BottMatrix& a);
NormalForm normal_form(const BottMatrix& a);

// Block index of each generator for a given type.
std::vector<int> block_of(const TypeSignature& type);
// Permutations that only move generators within their block, identity first.
std::vector<Permutation> within_block_permutations(const TypeSignature& type);

// All conjugates sigma A sigma^{-1} that are in block form for type(A),
// sorted by key. Contains A when A is in normal form.
std::vector<BottMatrix> permutation_orbit(const BottMatrix& a);

// Every n x n Bott matrix exactly once, ascending canonical key.
class MatrixEnumeration {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = BottMatrix;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = BottMatrix;

    iterator() = default;
    iterator(int n, std::uint64_t key) : n_(n), key_(key) {}
    BottMatrix operator*() const { return BottMatrix::from_key(n_, key_); }
    iterator& operator++() {
      ++key_;
      return *this;
    }
    iterator operator++(int) {
      auto old = *this;
      ++key_;
      return old;
    }
    friend bool operator==(const iterator&, const iterator&) = default;

   private:
    int n_ = 0;
    std::uint64_t key_ = 0;
  };

  // Shard `shard` of `shards` covers a contiguous key range.
  MatrixEnumeration(int n, int shard = 0, int shards = 1);

  iterator begin() const { return {n_, first_}; }
  iterator end() const { return {n_, last_}; }
  std::uint64_t size() const { return last_ - first_; }

 private:
  int n_;
  std::uint64_t first_;
  std::uint64_t last_;
};

// Throws std::invalid_argument unless 1 <= n <= 8.
MatrixEnumeration enumerate_all(int n);

}  // namespace realbott
