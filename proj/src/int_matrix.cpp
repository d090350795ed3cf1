#include "realbott/int_matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "realbott/checked.hpp"

namespace realbott {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<std::int64_t>& entries) {
  IntMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  for (auto x : data_)
    if (x) return false;
  return true;
}

std::vector<std::int64_t> IntMatrix::apply(const std::vector<std::int64_t>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("IntMatrix::apply: size mismatch");
  std::vector<std::int64_t> out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) && v[j]) acc = checked::add(acc, checked::mul((*this)(i, j), v[j]));
    out[i] = acc;
  }
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows_; ++i) {
    out << '[';
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? " " : "") << (*this)(i, j);
    out << "]\n";
  }
  return out.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: shape mismatch in product");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto aik = a(i, k);
      if (!aik) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j)) c(i, j) = checked::add(c(i, j), checked::mul(aik, b(k, j)));
    }
  }
  return c;
}

IntMatrix operator*(std::int64_t s, const IntMatrix& a) {
  IntMatrix c = a;
  for (auto& x : c.data_) x = checked::mul(s, x);
  return c;
}

// GCC extension; Bareiss intermediates can exceed 64 bits before division.
__extension__ using Wide = __int128;

std::int64_t determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix must be square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<std::vector<Wide>> a(n, std::vector<Wide>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  int sign = 1;
  Wide prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Exact division by the previous pivot (Sylvester's identity).
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        constexpr Wide limit = static_cast<Wide>(1) << 62;
        if (a[i][j] > limit || a[i][j] < -limit) throw OverflowError("determinant: intermediate value too large");
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  const Wide det = sign * a[n - 1][n - 1];
  return static_cast<std::int64_t>(det);
}

IntMatrix adjugate(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("adjugate: matrix must be square");
  const std::size_t n = m.rows();
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(mr, mc++) = m(r, c);
        }
        ++mr;
      }
      const auto cof = determinant(minor);
      // adj(j, i) = (-1)^{i+j} det(minor_{ij})
      adj(j, i) = ((i + j) % 2 == 0) ? cof : checked::neg(cof);
    }
  }
  return adj;
}

}  // namespace realbott
