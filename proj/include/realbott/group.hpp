#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "realbott/bott_matrix.hpp"
#include "realbott/int_matrix.hpp"

namespace realbott {

// Integer vector in Z^n, n <= 8; entries at index >= n are kept zero.
using IntVec = std::array<std::int64_t, kMaxDim>;

// Euclidean motion u -> D u + t/2 with D diagonal. Bit k of `flips` set means
// D_kk = -1. Translations are stored doubled so all arithmetic is integral.
struct AffineMotion {
  int n = 0;
  std::uint8_t flips = 0;
  IntVec translation2{};

  int sign(int k) const { return ((flips >> k) & 1u) ? -1 : 1; }
  bool is_lattice_translation() const;
  friend bool operator==(const AffineMotion&, const AffineMotion&) = default;
};

AffineMotion identity_motion(int n);
// Translation by the lattice vector (integral, not doubled).
AffineMotion lattice_translation(int n, const IntVec& lattice);
// s_i: signs (-1)^{A(i,k)}, translation e_i / 2. Throws std::invalid_argument
// for an index out of range.
AffineMotion generator_motion(const BottMatrix& a, int i);
// (D1, v1) o (D2, v2) = (D1 D2, D1 v2 + v1); the right factor acts first.
AffineMotion compose_motions(const AffineMotion& m1, const AffineMotion& m2);
AffineMotion inverse_motion(const AffineMotion& m);
// A diagonal motion fixes a point iff its translation vanishes on every
// coordinate where D is +1.
bool has_fixed_point(const AffineMotion& m);

// s_1^{a_1} s_2^{a_2} ... s_n^{a_n}.
struct GroupWord {
  int n = 0;
  IntVec exponents{};

  friend bool operator==(const GroupWord&, const GroupWord&) = default;
};

GroupWord identity_word(int n);
GroupWord generator_word(int n, int i);
GroupWord make_word(const std::vector<std::int64_t>& exponents);
std::string to_string(const GroupWord& w);

AffineMotion evaluate(const BottMatrix& a, const GroupWord& w);
// Exponent j of the product is (-1)^{sum_{k<j} q_k A(k,j)} p_j + q_j.
GroupWord word_multiply(const BottMatrix& a, const GroupWord& p, const GroupWord& q);
GroupWord word_inverse(const BottMatrix& a, const GroupWord& w);
GroupWord word_power(const BottMatrix& a, const GroupWord& w, std::int64_t k);
// Unique word evaluating to m. Throws realbott::Error when m is not in Gamma(A).
GroupWord word_of_motion(const BottMatrix& a, const AffineMotion& m);

// s_l s_i = s_i s_l^{(-1)^{A(i,l)}} for all i < l, checked on motions.
bool commutation_relations_hold(const BottMatrix& a);
// No non-identity word with |a_i| <= bound has a fixed point.
bool freeness_check(const BottMatrix& a, int bound);

// Element (l, alpha) of Z^n x (Z_2)^n standing for translation(l) o lift(alpha),
// where lift(alpha) = s_1^{alpha_1} ... s_n^{alpha_n}. alpha is a bit mask.
struct ExtensionElement {
  IntVec lattice{};
  std::uint8_t alpha = 0;

  friend bool operator==(const ExtensionElement&, const ExtensionElement&) = default;
};

GroupWord section_word(int n, std::uint8_t alpha);
ExtensionElement decompose(const BottMatrix& a, const GroupWord& w);
GroupWord recompose(const BottMatrix& a, const ExtensionElement& e);

// Matrix of the conjugation action of lift(alpha) on the translation lattice.
IntMatrix conjugation_action(const BottMatrix& a, std::uint8_t alpha);

// f(alpha, beta) = lift(alpha) lift(beta) lift(alpha beta)^{-1} and the
// diagonal action phi(alpha) for the monomial section.
class CocycleTable {
 public:
  CocycleTable() = default;
  CocycleTable(int n, std::vector<IntVec> values, std::vector<std::uint8_t> flips);

  int dim() const noexcept { return n_; }
  std::size_t group_order() const noexcept { return std::size_t{1} << n_; }
  const IntVec& f(std::uint8_t alpha, std::uint8_t beta) const {
    return values_[static_cast<std::size_t>(alpha) * group_order() + beta];
  }
  std::uint8_t phi_flips(std::uint8_t alpha) const { return flips_[alpha]; }
  IntVec act(std::uint8_t alpha, const IntVec& v) const;

  // phi(a) f(b,c) - f(ab,c) + f(a,bc) - f(a,b) = 0 for all triples.
  bool satisfies_cocycle_condition() const;
  // f(0, b) = f(a, 0) = 0.
  bool is_normalized() const;
  // (l,a)(m,b) = (l + phi(a) m + f(a,b), ab).
  ExtensionElement multiply(const ExtensionElement& x, const ExtensionElement& y) const;

 private:
  int n_ = 0;
  std::vector<IntVec> values_;
  std::vector<std::uint8_t> flips_;
};

// Throws VerificationError when the computed table fails the cocycle
// condition or does not reproduce composition of motions.
CocycleTable extension_cocycle(const BottMatrix& a);
// Compares the table's group law with motion composition for all pairs with
// lattice parts in {0,1}^n (n <= 5) or {0, e_1, ..., e_n} (larger n).
bool reproduces_group_law(const BottMatrix& a, const CocycleTable& table);

}  // namespace realbott
