#pragma once

#include <bitset>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "realbott/bott_matrix.hpp"
#include "realbott/gf2_matrix.hpp"

namespace realbott {

// Element of H^*(M(A); Z/2) in the square-free monomial basis. Monomial x_S
// is indexed by the bit mask S of its generators; coefficients live in Z/2.
class RingElement {
 public:
  static constexpr int kBasisSize = 1 << kMaxDim;
  using Coefficients = std::bitset<kBasisSize>;

  RingElement() = default;
  explicit RingElement(int n);

  static RingElement zero(int n) { return RingElement(n); }
  static RingElement one(int n) { return monomial(n, 0); }
  static RingElement generator(int n, int i);
  static RingElement monomial(int n, std::uint8_t subset);
  // Sum of x_i over the generators in `mask`.
  static RingElement linear(int n, std::uint8_t mask);

  int dim() const noexcept { return n_; }
  bool contains(std::uint8_t subset) const { return coeffs_.test(subset); }
  void toggle(std::uint8_t subset) { coeffs_.flip(subset); }
  bool is_zero() const { return coeffs_.none(); }
  // True when every monomial has exactly `degree` generators.
  bool is_homogeneous(int degree) const;
  std::vector<std::uint8_t> monomials() const;
  const Coefficients& coefficients() const noexcept { return coeffs_; }

  // "x1x2 + x3", "0" for zero, "1" for the unit; generators printed 1-based.
  std::string to_string() const;

  RingElement& operator+=(const RingElement& other);
  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend bool operator==(const RingElement&, const RingElement&) = default;

 private:
  int n_ = 0;
  Coefficients coeffs_;
};

// The ring Z/2[x_1..x_n] / (x_j^2 - x_j sum_i A(i,j) x_i) with a precomputed
// table of products x_U * x_k for every square-free monomial U and generator k.
class CohomologyRing {
 public:
  explicit CohomologyRing(const BottMatrix& a);

  const BottMatrix& matrix() const noexcept { return a_; }
  int dim() const noexcept { return a_.dim(); }

  // Throws std::invalid_argument on dimension mismatch.
  RingElement multiply(const RingElement& u, const RingElement& v) const;
  RingElement times_generator(const RingElement& u, int k) const;
  RingElement square(const RingElement& u) const { return multiply(u, u); }

  // Number of times the rewrite x_k^2 -> x_k * sum_i A(i,k) x_i was applied
  // while building the product table: once per pair (U, k) with k in U, so
  // exactly n 2^{n-1}. Each rewrite reads only entries x_U x_i with i < k.
  std::uint64_t rewrite_count() const noexcept { return rewrites_; }

 private:
  const RingElement& product(std::uint8_t subset, int k) const {
    return table_[static_cast<std::size_t>(subset) * static_cast<std::size_t>(a_.dim()) + static_cast<std::size_t>(k)];
  }

  BottMatrix a_;
  std::vector<RingElement> table_;
  std::uint64_t rewrites_ = 0;
};

RingElement multiply(const BottMatrix& a, const RingElement& u, const RingElement& v);

// Degree-preserving homomorphism candidate on generators:
// phi(x_j) = sum_i P(i, j) y_i, i.e. column j of P is the image of x_j.
using GeneratorMap = Gf2Matrix;

// The image under phi of the j-th defining relation of the A-ring, reduced in
// the B-ring: phi(x_j)^2 + phi(x_j) * phi(sum_i A(i,j) x_i).
RingElement relation_image(const BottMatrix& a, const BottMatrix& b, const GeneratorMap& p, int j);
RingElement relation_image(const BottMatrix& a, const CohomologyRing& b_ring, const GeneratorMap& p, int j);

bool is_isomorphism(const BottMatrix& a, const BottMatrix& b, const GeneratorMap& p);

// Block-restricted search for normal-form inputs. Throws std::invalid_argument
// when either input is not in normal form.
std::optional<GeneratorMap> find_isomorphism(const BottMatrix& a, const BottMatrix& b);

// Exhaustive search over all of GL(n; Z/2), identity first. n <= 4.
std::optional<GeneratorMap> bruteforce_isomorphism(const BottMatrix& a, const BottMatrix& b);

// Column-by-column backtracking over all invertible P with no block or
// normal-form assumption. Works on raw matrices of any supported size.
std::optional<GeneratorMap> exhaustive_isomorphism(const BottMatrix& a, const BottMatrix& b);

// Normalizes both inputs, searches, and maps the witness back to the
// original generators. The result always satisfies is_isomorphism(a, b, .).
std::optional<GeneratorMap> find_isomorphism_any(const BottMatrix& a, const BottMatrix& b);

// B = PA over Z/2 and
//   P(l,j) B(i,l) = P(i,j) B(l,j) + P(l,j) B(i,j) + P(l,j) B(l,j) B(i,l)
// for all i < l and all j.
bool isomorphism_necessary_conditions(const BottMatrix& a, const BottMatrix& b, const GeneratorMap& p);

// Relabels B within its type blocks so the witness has unit diagonal:
// b_relabeled = B.conjugate(relabel), p_unit(relabel(m), j) = P(m, j).
struct UnitDiagonalForm {
  BottMatrix b_relabeled;
  GeneratorMap p_unit;
  Permutation relabel;
};
// Empty when no within-block relabeling gives a unit diagonal (P not block
// upper triangular with invertible diagonal blocks for the type of B).
std::optional<UnitDiagonalForm> unit_diagonal_form(const BottMatrix& b, const GeneratorMap& p);

// Square-zero iteration performed in the ring itself: at each stage the
// degree-one elements whose square lies in the accumulated ideal are found
// by enumeration, and the ideal is grown by everything they generate.
// Independent of the zero-column rule used by type_signature.
TypeSignature ring_type_signature(const BottMatrix& a);

}  // namespace realbott
