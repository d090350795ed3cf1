#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <utility>

#include "realbott/checked.hpp"
#include "realbott/cohomology.hpp"

namespace realbott {

namespace {

std::int64_t abs_value(std::int64_t x) { return x < 0 ? checked::neg(x) : x; }

class Reducer {
 public:
  Reducer(const IntMatrix& m, bool certificates)
      : d_(m), rows_(m.rows()), cols_(m.cols()), certificates_(certificates) {
    if (certificates_) {
      u_ = IntMatrix::identity(rows_);
      v_ = IntMatrix::identity(cols_);
    }
  }

  void run() {
    const std::size_t steps = std::min(rows_, cols_);
    for (std::size_t t = 0; t < steps; ++t) {
      if (!move_min_to(t)) break;
      reduce_pivot(t);
      if (d_(t, t) < 0) negate_row(t);
    }
  }

  IntMatrix& diagonal() { return d_; }
  IntMatrix& u() { return u_; }
  IntMatrix& v() { return v_; }

 private:
  // Moves the least nonzero |entry| of the block [t.., t..] to (t, t).
  bool move_min_to(std::size_t t) {
    std::size_t best_i = rows_, best_j = cols_;
    std::int64_t best = 0;
    for (std::size_t i = t; i < rows_; ++i) {
      const auto* row = d_.row(i);
      for (std::size_t j = t; j < cols_; ++j) {
        if (!row[j]) continue;
        const auto a = abs_value(row[j]);
        if (best == 0 || a < best) {
          best = a;
          best_i = i;
          best_j = j;
          if (best == 1) break;
        }
      }
      if (best == 1) break;
    }
    if (best == 0) return false;
    swap_rows(t, best_i);
    swap_cols(t, best_j);
    return true;
  }

  void reduce_pivot(std::size_t t) {
    while (true) {
      const auto pivot = d_(t, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows_; ++i) {
        if (!d_(i, t)) continue;
        add_row_multiple(i, t, -(d_(i, t) / pivot));
        if (d_(i, t)) clean = false;
      }
      for (std::size_t j = t + 1; j < cols_; ++j) {
        if (!d_(t, j)) continue;
        add_col_multiple(j, t, -(d_(t, j) / pivot));
        if (d_(t, j)) clean = false;
      }
      if (!clean) {
        move_min_in_cross(t);
        continue;
      }
      // Enforce d_t | every remaining entry.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows_ && divides; ++i) {
        const auto* row = d_.row(i);
        for (std::size_t j = t + 1; j < cols_; ++j) {
          if (row[j] % pivot != 0) {
            add_row_multiple(t, i, 1);
            divides = false;
            break;
          }
        }
      }
      if (divides) return;
    }
  }

  // Remainders left in row t or column t are smaller than the pivot.
  void move_min_in_cross(std::size_t t) {
    std::size_t best_i = t, best_j = t;
    std::int64_t best = abs_value(d_(t, t));
    for (std::size_t i = t + 1; i < rows_; ++i)
      if (d_(i, t) && abs_value(d_(i, t)) < best) {
        best = abs_value(d_(i, t));
        best_i = i;
        best_j = t;
      }
    for (std::size_t j = t + 1; j < cols_; ++j)
      if (d_(t, j) && abs_value(d_(t, j)) < best) {
        best = abs_value(d_(t, j));
        best_i = t;
        best_j = j;
      }
    swap_rows(t, best_i);
    swap_cols(t, best_j);
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(d_.row(a), d_.row(a) + cols_, d_.row(b));
    if (certificates_) std::swap_ranges(u_.row(a), u_.row(a) + rows_, u_.row(b));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap(d_(i, a), d_(i, b));
    if (certificates_)
      for (std::size_t i = 0; i < cols_; ++i) std::swap(v_(i, a), v_(i, b));
  }

  // row_target += factor * row_source
  void add_row_multiple(std::size_t target, std::size_t source, std::int64_t factor) {
    if (!factor) return;
    auto combine = [factor](std::int64_t* dst, const std::int64_t* src, std::size_t len) {
      for (std::size_t k = 0; k < len; ++k)
        if (src[k]) dst[k] = checked::add(dst[k], checked::mul(factor, src[k]));
    };
    combine(d_.row(target), d_.row(source), cols_);
    if (certificates_) combine(u_.row(target), u_.row(source), rows_);
  }

  // col_target += factor * col_source
  void add_col_multiple(std::size_t target, std::size_t source, std::int64_t factor) {
    if (!factor) return;
    for (std::size_t i = 0; i < rows_; ++i)
      if (d_(i, source)) d_(i, target) = checked::add(d_(i, target), checked::mul(factor, d_(i, source)));
    if (certificates_)
      for (std::size_t i = 0; i < cols_; ++i)
        if (v_(i, source)) v_(i, target) = checked::add(v_(i, target), checked::mul(factor, v_(i, source)));
  }

  void negate_row(std::size_t t) {
    for (std::size_t k = 0; k < cols_; ++k) d_(t, k) = checked::neg(d_(t, k));
    if (certificates_)
      for (std::size_t k = 0; k < rows_; ++k) u_(t, k) = checked::neg(u_(t, k));
  }

  IntMatrix d_;
  IntMatrix u_;
  IntMatrix v_;
  std::size_t rows_;
  std::size_t cols_;
  bool certificates_;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m, bool certificates) {
  Reducer reducer(m, certificates);
  reducer.run();
  SmithForm form;
  form.input = m;
  form.diagonal = std::move(reducer.diagonal());
  form.has_certificates = certificates;
  if (certificates) {
    form.u = std::move(reducer.u());
    form.v = std::move(reducer.v());
  }
  const std::size_t steps = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < steps && form.diagonal(t, t) != 0; ++t) form.divisors.push_back(form.diagonal(t, t));
  return form;
}

bool SmithForm::verify() const {
  if (diagonal.rows() != input.rows() || diagonal.cols() != input.cols()) return false;
  for (std::size_t i = 0; i < diagonal.rows(); ++i)
    for (std::size_t j = 0; j < diagonal.cols(); ++j) {
      const auto x = diagonal(i, j);
      if (i != j && x) return false;
      if (i == j && i < divisors.size() && x != divisors[i]) return false;
      if (i == j && i >= divisors.size() && x) return false;
    }
  for (std::size_t k = 0; k < divisors.size(); ++k) {
    if (divisors[k] <= 0) return false;
    if (k + 1 < divisors.size() && divisors[k + 1] % divisors[k] != 0) return false;
  }
  if (has_certificates) {
    if (u.rows() != input.rows() || u.cols() != input.rows() || v.rows() != input.cols() || v.cols() != input.cols())
      return false;
    if (u * input * v != diagonal) return false;
  }
  return true;
}

}  // namespace realbott
