#include <array>
#include <stdexcept>

#include "realbott/ring.hpp"

namespace realbott {

namespace {

Gf2Matrix as_gf2(const BottMatrix& a) {
  Gf2Matrix m(a.dim());
  for (int i = 0; i < a.dim(); ++i) m.set_row_mask(i, a.row_mask(i));
  return m;
}

// Image of the j-th relation given column masks of P for the generators that
// relation touches.
RingElement relation_from_columns(const BottMatrix& a, const CohomologyRing& b_ring,
                                  const std::array<std::uint8_t, kMaxDim>& columns, int j) {
  const int n = a.dim();
  std::uint8_t rhs = 0;
  const auto col = a.column_mask(j);
  for (int i = 0; i < j; ++i)
    if ((col >> i) & 1u) rhs ^= columns[static_cast<std::size_t>(i)];
  const auto c = RingElement::linear(n, columns[static_cast<std::size_t>(j)]);
  // phi(x_j)^2 + phi(x_j) phi(r_j) = phi(x_j) (phi(x_j) + phi(r_j))
  return b_ring.multiply(c, RingElement::linear(n, static_cast<std::uint8_t>(columns[static_cast<std::size_t>(j)] ^ rhs)));
}

// Incremental linear-independence test over Z/2.
struct Echelon {
  std::array<std::uint8_t, kMaxDim> by_pivot{};

  bool insert(std::uint8_t v) {
    for (int bit = kMaxDim - 1; bit >= 0; --bit) {
      if (!((v >> bit) & 1u)) continue;
      if (!by_pivot[static_cast<std::size_t>(bit)]) {
        by_pivot[static_cast<std::size_t>(bit)] = v;
        return true;
      }
      v ^= by_pivot[static_cast<std::size_t>(bit)];
    }
    return false;
  }
};

struct ColumnSearch {
  const BottMatrix& a;
  const CohomologyRing& b_ring;
  // Mask of admissible entries for each column; `forced` bits must be set.
  std::array<std::uint8_t, kMaxDim> allowed{};
  std::array<std::uint8_t, kMaxDim> forced{};
  std::array<std::uint8_t, kMaxDim> columns{};

  bool run(int j, Echelon basis) {
    const int n = a.dim();
    if (j == n) return true;
    const auto free_bits = static_cast<std::uint8_t>(allowed[static_cast<std::size_t>(j)] & ~forced[static_cast<std::size_t>(j)]);
    // Enumerate submasks of free_bits in increasing order.
    for (unsigned sub = 0;; sub = (sub - free_bits) & free_bits) {
      const auto candidate = static_cast<std::uint8_t>(sub | forced[static_cast<std::size_t>(j)]);
      if (candidate) {
        Echelon next = basis;
        if (next.insert(candidate)) {
          columns[static_cast<std::size_t>(j)] = candidate;
          if (relation_from_columns(a, b_ring, columns, j).is_zero() && run(j + 1, next)) return true;
        }
      }
      if (sub == free_bits) break;
    }
    return false;
  }

  GeneratorMap matrix() const {
    GeneratorMap p(a.dim());
    for (int j = 0; j < a.dim(); ++j)
      for (int i = 0; i < a.dim(); ++i)
        if ((columns[static_cast<std::size_t>(j)] >> i) & 1u) p.set(i, j, true);
    return p;
  }
};

}  // namespace

RingElement relation_image(const BottMatrix& a, const CohomologyRing& b_ring, const GeneratorMap& p, int j) {
  if (a.dim() != b_ring.dim() || p.dim() != a.dim()) throw std::invalid_argument("relation_image: dimension mismatch");
  if (j < 0 || j >= a.dim()) throw std::invalid_argument("relation_image: generator index out of range");
  std::array<std::uint8_t, kMaxDim> columns{};
  for (int i = 0; i < a.dim(); ++i) columns[static_cast<std::size_t>(i)] = p.column_mask(i);
  return relation_from_columns(a, b_ring, columns, j);
}

RingElement relation_image(const BottMatrix& a, const BottMatrix& b, const GeneratorMap& p, int j) {
  if (a.dim() != b.dim()) throw std::invalid_argument("relation_image: dimension mismatch");
  return relation_image(a, CohomologyRing(b), p, j);
}

namespace {

bool is_isomorphism_with(const BottMatrix& a, const CohomologyRing& b_ring, const GeneratorMap& p) {
  if (a.dim() != b_ring.dim() || p.dim() != a.dim()) return false;
  if (!p.invertible()) return false;
  for (int j = 0; j < a.dim(); ++j)
    if (!relation_image(a, b_ring, p, j).is_zero()) return false;
  return true;
}

}  // namespace

bool is_isomorphism(const BottMatrix& a, const BottMatrix& b, const GeneratorMap& p) {
  if (a.dim() != b.dim()) return false;
  return is_isomorphism_with(a, CohomologyRing(b), p);
}

std::optional<GeneratorMap> find_isomorphism(const BottMatrix& a, const BottMatrix& b) {
  if (!is_normal_form(a) || !is_normal_form(b)) throw std::invalid_argument("find_isomorphism: inputs must be in normal form");
  if (a.dim() != b.dim()) return std::nullopt;
  const auto type = type_signature(a);
  if (type != type_signature(b)) return std::nullopt;
  const int n = a.dim();
  const auto block = block_of(type);

  std::array<std::uint8_t, kMaxDim> allowed{};
  for (int j = 0; j < n; ++j) {
    std::uint8_t mask = 0;
    for (int i = 0; i < n; ++i)
      if (block[static_cast<std::size_t>(i)] <= block[static_cast<std::size_t>(j)]) mask = static_cast<std::uint8_t>(mask | (1u << i));
    allowed[static_cast<std::size_t>(j)] = mask;
  }

  // Unit-diagonal block-triangular P' against each within-block relabeling
  // of B; P for the original B is P(m, j) = P'(tau(m), j).
  for (const auto& tau : within_block_permutations(type)) {
    const auto relabeled = b.conjugate(tau);
    if (!relabeled) continue;
    const CohomologyRing b_ring(*relabeled);
    ColumnSearch search{a, b_ring, allowed, {}, {}};
    for (int j = 0; j < n; ++j) search.forced[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(1u << j);
    if (!search.run(0, {})) continue;
    const auto p_unit = search.matrix();
    GeneratorMap p(n);
    for (int m = 0; m < n; ++m) p.set_row_mask(m, p_unit.row_mask(tau(m)));
    return p;
  }
  return std::nullopt;
}

std::optional<GeneratorMap> bruteforce_isomorphism(const BottMatrix& a, const BottMatrix& b) {
  if (a.dim() > 4 || b.dim() > 4) throw std::invalid_argument("bruteforce_isomorphism: n <= 4 required");
  if (a.dim() != b.dim()) return std::nullopt;
  const int n = a.dim();
  const CohomologyRing b_ring(b);
  const auto identity = GeneratorMap::identity(n);
  if (is_isomorphism_with(a, b_ring, identity)) return identity;
  const std::uint64_t count = std::uint64_t{1} << (n * n);
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    const auto p = GeneratorMap::from_bits(n, bits);
    if (p == identity) continue;
    if (is_isomorphism_with(a, b_ring, p)) return p;
  }
  return std::nullopt;
}

std::optional<GeneratorMap> exhaustive_isomorphism(const BottMatrix& a, const BottMatrix& b) {
  if (a.dim() != b.dim()) return std::nullopt;
  const int n = a.dim();
  const CohomologyRing b_ring(b);
  ColumnSearch search{a, b_ring, {}, {}, {}};
  for (int j = 0; j < n; ++j) search.allowed[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>((1u << n) - 1u);
  if (!search.run(0, {})) return std::nullopt;
  return search.matrix();
}

std::optional<GeneratorMap> find_isomorphism_any(const BottMatrix& a, const BottMatrix& b) {
  if (a.dim() != b.dim()) return std::nullopt;
  const auto na = normal_form(a);
  const auto nb = normal_form(b);
  const auto p_normal = find_isomorphism(na.matrix, nb.matrix);
  if (!p_normal) return std::nullopt;
  // x'_{sigma(j)} = x_j and y'_{tau(m)} = y_m.
  const int n = a.dim();
  GeneratorMap p(n);
  for (int m = 0; m < n; ++m)
    for (int j = 0; j < n; ++j) p.set(m, j, p_normal->entry(nb.perm(m), na.perm(j)));
  return p;
}

bool isomorphism_necessary_conditions(const BottMatrix& a, const BottMatrix& b, const GeneratorMap& p) {
  const int n = a.dim();
  if (b.dim() != n || p.dim() != n) return false;
  if (p * as_gf2(a) != as_gf2(b)) return false;
  for (int j = 0; j < n; ++j) {
    for (int l = 0; l < n; ++l) {
      for (int i = 0; i < l; ++i) {
        const bool lhs = p.entry(l, j) && b.entry(i, l);
        const bool rhs = (p.entry(i, j) && b.entry(l, j)) ^ (p.entry(l, j) && b.entry(i, j)) ^
                         (p.entry(l, j) && b.entry(l, j) && b.entry(i, l));
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

std::optional<UnitDiagonalForm> unit_diagonal_form(const BottMatrix& b, const GeneratorMap& p) {
  if (p.dim() != b.dim()) throw std::invalid_argument("unit_diagonal_form: dimension mismatch");
  const int n = b.dim();
  for (const auto& tau : within_block_permutations(type_signature(b))) {
    GeneratorMap p_unit(n);
    for (int m = 0; m < n; ++m) p_unit.set_row_mask(tau(m), p.row_mask(m));
    if (!p_unit.unit_diagonal()) continue;
    auto relabeled = b.conjugate(tau);
    if (!relabeled) continue;
    return UnitDiagonalForm{*relabeled, p_unit, tau};
  }
  return std::nullopt;
}

}  // namespace realbott
