#include "realbott/gf2_matrix.hpp"

#include <stdexcept>
#include <utility>

#include "realbott/bott_matrix.hpp"

namespace realbott {

Gf2Matrix::Gf2Matrix(int n) : n_(n) {
  if (n < 1 || n > kMaxDim) throw std::invalid_argument("Gf2Matrix: dimension out of range");
}

Gf2Matrix Gf2Matrix::identity(int n) {
  Gf2Matrix m(n);
  for (int i = 0; i < n; ++i) m.rows_[i] = static_cast<std::uint8_t>(1u << i);
  return m;
}

Gf2Matrix Gf2Matrix::identity_plus_unit(int n, int row, int col) {
  Gf2Matrix m = identity(n);
  m.set(row, col, !m.entry(row, col));
  return m;
}

Gf2Matrix Gf2Matrix::from_bits(int n, std::uint64_t bits) {
  Gf2Matrix m(n);
  const int total = n * n;
  for (int p = 0; p < total; ++p) {
    if ((bits >> (total - 1 - p)) & 1u) m.set(p / n, p % n, true);
  }
  return m;
}

Gf2Matrix Gf2Matrix::permutation_matrix(const Permutation& perm) {
  Gf2Matrix m(perm.size());
  for (int i = 0; i < perm.size(); ++i) m.set(perm(i), i, true);
  return m;
}

void Gf2Matrix::set(int i, int j, bool value) noexcept {
  if (value)
    rows_[i] = static_cast<std::uint8_t>(rows_[i] | (1u << j));
  else
    rows_[i] = static_cast<std::uint8_t>(rows_[i] & ~(1u << j));
}

std::uint8_t Gf2Matrix::column_mask(int j) const noexcept {
  std::uint8_t mask = 0;
  for (int i = 0; i < n_; ++i)
    if (entry(i, j)) mask = static_cast<std::uint8_t>(mask | (1u << i));
  return mask;
}

Gf2Matrix Gf2Matrix::transposed() const {
  Gf2Matrix t(n_);
  for (int j = 0; j < n_; ++j) t.rows_[j] = column_mask(j);
  return t;
}

int Gf2Matrix::rank() const {
  auto rows = rows_;
  int rank = 0;
  for (int col = 0; col < n_ && rank < n_; ++col) {
    int pivot = -1;
    for (int r = rank; r < n_; ++r) {
      if ((rows[r] >> col) & 1u) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < n_; ++r)
      if (r != rank && ((rows[r] >> col) & 1u)) rows[r] ^= rows[rank];
    ++rank;
  }
  return rank;
}

std::optional<Gf2Matrix> Gf2Matrix::inverse() const {
  auto rows = rows_;
  Gf2Matrix inv = identity(n_);
  for (int col = 0; col < n_; ++col) {
    int pivot = -1;
    for (int r = col; r < n_; ++r) {
      if ((rows[r] >> col) & 1u) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return std::nullopt;
    std::swap(rows[col], rows[pivot]);
    std::swap(inv.rows_[col], inv.rows_[pivot]);
    for (int r = 0; r < n_; ++r) {
      if (r != col && ((rows[r] >> col) & 1u)) {
        rows[r] ^= rows[col];
        inv.rows_[r] ^= inv.rows_[col];
      }
    }
  }
  return inv;
}

bool Gf2Matrix::unit_diagonal() const {
  for (int i = 0; i < n_; ++i)
    if (!entry(i, i)) return false;
  return true;
}

std::uint8_t Gf2Matrix::apply(std::uint8_t vector) const {
  std::uint8_t out = 0;
  for (int i = 0; i < n_; ++i)
    if (__builtin_parity(static_cast<unsigned>(rows_[i] & vector))) out = static_cast<std::uint8_t>(out | (1u << i));
  return out;
}

std::uint64_t Gf2Matrix::bits() const {
  std::uint64_t b = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) b = (b << 1) | (entry(i, j) ? 1u : 0u);
  return b;
}

std::string Gf2Matrix::bit_string() const {
  std::string s;
  s.reserve(static_cast<std::size_t>(n_ * n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) s.push_back(entry(i, j) ? '1' : '0');
  return s;
}

Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("Gf2Matrix: dimension mismatch");
  Gf2Matrix c(a.n_);
  for (int i = 0; i < a.n_; ++i) {
    std::uint8_t row = 0;
    for (int k = 0; k < a.n_; ++k)
      if (a.entry(i, k)) row ^= b.rows_[k];
    c.rows_[i] = row;
  }
  return c;
}

Gf2Matrix operator+(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("Gf2Matrix: dimension mismatch");
  Gf2Matrix c(a.n_);
  for (int i = 0; i < a.n_; ++i) c.rows_[i] = a.rows_[i] ^ b.rows_[i];
  return c;
}

}  // namespace realbott
