#include "realbott/ring.hpp"

#include <stdexcept>

namespace realbott {

RingElement::RingElement(int n) : n_(n) {
  if (n < 1 || n > kMaxDim) throw std::invalid_argument("RingElement: dimension out of range");
}

RingElement RingElement::generator(int n, int i) {
  if (i < 0 || i >= n) throw std::invalid_argument("RingElement: generator index out of range");
  return monomial(n, static_cast<std::uint8_t>(1u << i));
}

RingElement RingElement::monomial(int n, std::uint8_t subset) {
  RingElement e(n);
  if (n < kMaxDim && (subset >> n) != 0) throw std::invalid_argument("RingElement: monomial uses generators beyond n");
  e.coeffs_.set(subset);
  return e;
}

RingElement RingElement::linear(int n, std::uint8_t mask) {
  RingElement e(n);
  for (int i = 0; i < n; ++i)
    if ((mask >> i) & 1u) e.coeffs_.set(1u << i);
  return e;
}

bool RingElement::is_homogeneous(int degree) const {
  for (auto s : monomials())
    if (__builtin_popcount(s) != degree) return false;
  return true;
}

std::vector<std::uint8_t> RingElement::monomials() const {
  std::vector<std::uint8_t> out;
  const unsigned limit = 1u << n_;
  for (unsigned s = 0; s < limit; ++s)
    if (coeffs_.test(s)) out.push_back(static_cast<std::uint8_t>(s));
  return out;
}

std::string RingElement::to_string() const {
  const auto monos = monomials();
  if (monos.empty()) return "0";
  std::string s;
  for (std::size_t m = 0; m < monos.size(); ++m) {
    if (m) s += " + ";
    if (monos[m] == 0) {
      s += "1";
      continue;
    }
    for (int i = 0; i < n_; ++i)
      if ((monos[m] >> i) & 1u) s += "x" + std::to_string(i + 1);
  }
  return s;
}

RingElement& RingElement::operator+=(const RingElement& other) {
  if (n_ != other.n_) throw std::invalid_argument("RingElement: dimension mismatch");
  coeffs_ ^= other.coeffs_;
  return *this;
}

// ------------------------------------------------------------- CohomologyRing

CohomologyRing::CohomologyRing(const BottMatrix& a) : a_(a) {
  const int n = a.dim();
  const std::size_t monos = std::size_t{1} << n;
  table_.assign(monos * static_cast<std::size_t>(n), RingElement(n));
  for (std::size_t u = 0; u < monos; ++u) {
    const auto subset = static_cast<std::uint8_t>(u);
    for (int k = 0; k < n; ++k) {
      auto& out = table_[u * static_cast<std::size_t>(n) + static_cast<std::size_t>(k)];
      if (!((subset >> k) & 1u)) {
        out = RingElement::monomial(n, static_cast<std::uint8_t>(subset | (1u << k)));
        continue;
      }
      // x_U x_k with k in U equals x_U * sum_{i<k} A(i,k) x_i; every such
      // entry was filled earlier in this loop.
      ++rewrites_;
      const auto col = a.column_mask(k);
      for (int i = 0; i < k; ++i)
        if ((col >> i) & 1u) out += product(subset, i);
    }
  }
}

RingElement CohomologyRing::times_generator(const RingElement& u, int k) const {
  if (u.dim() != dim()) throw std::invalid_argument("multiply: ambient dimension mismatch");
  RingElement out(dim());
  for (auto s : u.monomials()) out += product(s, k);
  return out;
}

RingElement CohomologyRing::multiply(const RingElement& u, const RingElement& v) const {
  if (u.dim() != dim() || v.dim() != dim()) throw std::invalid_argument("multiply: ambient dimension mismatch");
  RingElement out(dim());
  for (auto t : v.monomials()) {
    RingElement term = u;
    for (int k = 0; k < dim(); ++k)
      if ((t >> k) & 1u) term = times_generator(term, k);
    out += term;
  }
  return out;
}

RingElement multiply(const BottMatrix& a, const RingElement& u, const RingElement& v) {
  return CohomologyRing(a).multiply(u, v);
}

// ------------------------------------------------------- ring-level type

namespace {

// Subspace of the 2^n-dimensional algebra, kept in insertion-order echelon form.
class Subspace {
 public:
  bool contains(RingElement::Coefficients v) const { return reduce(v).none(); }

  bool insert(RingElement::Coefficients v) {
    v = reduce(v);
    if (v.none()) return false;
    std::size_t pivot = 0;
    while (!v.test(pivot)) ++pivot;
    basis_.emplace_back(pivot, v);
    return true;
  }

 private:
  RingElement::Coefficients reduce(RingElement::Coefficients v) const {
    for (const auto& [pivot, b] : basis_)
      if (v.test(pivot)) v ^= b;
    return v;
  }

  std::vector<std::pair<std::size_t, RingElement::Coefficients>> basis_;
};

}  // namespace

TypeSignature ring_type_signature(const BottMatrix& a) {
  const int n = a.dim();
  const CohomologyRing ring(a);
  const unsigned linear_count = 1u << n;
  Subspace ideal;
  int linear_in_ideal = 0;
  TypeSignature type;

  while (linear_in_ideal < n) {
    std::vector<RingElement> square_zero;
    for (unsigned c = 0; c < linear_count; ++c) {
      auto x = RingElement::linear(n, static_cast<std::uint8_t>(c));
      if (ideal.contains(ring.square(x).coefficients())) square_zero.push_back(std::move(x));
    }
    int dim_w = 0;
    while ((1u << dim_w) < square_zero.size()) ++dim_w;
    if ((1u << dim_w) != square_zero.size()) throw std::logic_error("ring_type_signature: square-zero set is not a subspace");
    const int stage = dim_w - linear_in_ideal;
    if (stage <= 0) throw std::logic_error("ring_type_signature: iteration stalled");
    type.parts.push_back(stage);

    for (const auto& x : square_zero) {
      for (unsigned u = 0; u < linear_count; ++u)
        ideal.insert(ring.multiply(x, RingElement::monomial(n, static_cast<std::uint8_t>(u))).coefficients());
    }
    linear_in_ideal = 0;
    int count = 0;
    for (unsigned c = 0; c < linear_count; ++c)
      if (ideal.contains(RingElement::linear(n, static_cast<std::uint8_t>(c)).coefficients())) ++count;
    while ((1 << linear_in_ideal) < count) ++linear_in_ideal;
  }
  return type;
}

}  // namespace realbott
