#include "realbott/cohomology.hpp"

#include <stdexcept>

#include "realbott/checked.hpp"

namespace realbott {

namespace {

std::size_t power(std::size_t base, int k) {
  std::size_t r = 1;
  for (int i = 0; i < k; ++i) r *= base;
  return r;
}

void check_rank(int n, const char* what) {
  if (n < 1 || n > 4) throw std::invalid_argument(std::string(what) + ": rank must be in [1, 4]");
}

}  // namespace

SignCharacter coordinate_character(const BottMatrix& a, int i) { return {a.dim(), a.column_mask(i)}; }

std::vector<std::int64_t> cocycle_coordinate(const CocycleTable& table, int i) {
  const auto order = table.group_order();
  std::vector<std::int64_t> f(order * order);
  for (std::size_t alpha = 0; alpha < order; ++alpha)
    for (std::size_t beta = 0; beta < order; ++beta)
      f[alpha * order + beta] = table.f(static_cast<std::uint8_t>(alpha), static_cast<std::uint8_t>(beta))[static_cast<std::size_t>(i)];
  return f;
}

IntMatrix bar_coboundary(int n, const SignCharacter& phi, int k, bool allow_large) {
  check_rank(n, "bar_coboundary");
  if (k < 0 || k > 2) throw std::invalid_argument("bar_coboundary: degree must be in [0, 2]");
  if (n == 4 && k == 2 && !allow_large) throw std::invalid_argument("bar_coboundary: delta^2 at rank 4 needs allow_large");
  if (phi.n != n) throw std::invalid_argument("bar_coboundary: character rank mismatch");

  const std::size_t g = std::size_t{1} << n;
  const std::size_t rows = power(g, k + 1);
  const std::size_t cols = power(g, k);
  IntMatrix d(rows, cols);
  std::vector<std::size_t> tuple(static_cast<std::size_t>(k + 1));
  for (std::size_t row = 0; row < rows; ++row) {
    for (int i = k, rest = 0; i >= 0; --i, ++rest) tuple[static_cast<std::size_t>(i)] = (row / power(g, rest)) % g;
    auto index = [&](auto&& entry) {
      std::size_t idx = 0;
      for (int i = 0; i < k; ++i) idx = idx * g + entry(i);
      return idx;
    };
    // phi(g_1) c(g_2, ..., g_{k+1})
    d(row, index([&](int i) { return tuple[static_cast<std::size_t>(i + 1)]; })) += phi(static_cast<std::uint32_t>(tuple[0]));
    // (-1)^i c(..., g_i g_{i+1}, ...)
    for (int m = 1; m <= k; ++m) {
      const auto col = index([&](int i) {
        const auto pos = static_cast<std::size_t>(i);
        if (i < m - 1) return tuple[pos];
        if (i == m - 1) return tuple[pos] ^ tuple[pos + 1];
        return tuple[pos + 1];
      });
      d(row, col) += (m % 2 == 0) ? 1 : -1;
    }
    // (-1)^{k+1} c(g_1, ..., g_k)
    d(row, index([&](int i) { return tuple[static_cast<std::size_t>(i)]; })) += ((k + 1) % 2 == 0) ? 1 : -1;
  }
  return d;
}

std::string H2Group::to_string() const {
  std::string s;
  for (int i = 0; i < free_rank; ++i) s += (s.empty() ? "" : " + ") + std::string("Z");
  for (auto t : torsion) s += (s.empty() ? "" : " + ") + ("Z/" + std::to_string(t));
  return s.empty() ? "0" : s;
}

H2Group h2_of_character(int n, const SignCharacter& phi, bool allow_large) {
  const auto d1 = bar_coboundary(n, phi, 1);
  const auto d2 = bar_coboundary(n, phi, 2, allow_large);
  const auto snf1 = smith_normal_form(d1);
  const auto snf2 = smith_normal_form(d2, n <= 3);
  if (!snf1.verify() || !snf2.verify()) throw VerificationError("h2_of_character: Smith form certificate check failed");
  H2Group h;
  const auto kernel_rank = static_cast<std::int64_t>(d2.cols()) - static_cast<std::int64_t>(snf2.rank());
  h.free_rank = static_cast<int>(kernel_rank - static_cast<std::int64_t>(snf1.rank()));
  for (auto d : snf1.divisors)
    if (d > 1) h.torsion.push_back(d);
  return h;
}

bool verify_appendix(int n) {
  if (n < 1 || n > 3) throw std::invalid_argument("verify_appendix: rank must be in [1, 3]");
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const SignCharacter phi{n, static_cast<std::uint8_t>(mask)};
    const auto h = h2_of_character(n, phi);
    const std::size_t expected = phi.trivial() ? static_cast<std::size_t>(n) : static_cast<std::size_t>(n - 1);
    if (h.free_rank != 0 || h.torsion.size() != expected) return false;
    for (auto t : h.torsion)
      if (t != 2) return false;
  }
  return true;
}

std::optional<std::vector<std::int64_t>> is_coboundary(int n, const SignCharacter& phi, const std::vector<std::int64_t>& f) {
  const auto d1 = bar_coboundary(n, phi, 1);
  if (f.size() != d1.rows()) throw std::invalid_argument("is_coboundary: cochain has the wrong size");
  const auto snf = smith_normal_form(d1);
  // D y = U f with lambda = V y.
  const auto g = snf.u.apply(f);
  std::vector<std::int64_t> y(d1.cols(), 0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i < snf.rank()) {
      if (g[i] % snf.divisors[i] != 0) return std::nullopt;
      y[i] = g[i] / snf.divisors[i];
    } else if (g[i] != 0) {
      return std::nullopt;
    }
  }
  auto lambda = snf.v.apply(y);
  if (d1.apply(lambda) != f) throw VerificationError("is_coboundary: witness does not reproduce the cochain");
  return lambda;
}

}  // namespace realbott
