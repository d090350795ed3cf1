#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "realbott/bott_matrix.hpp"
#include "realbott/group.hpp"
#include "realbott/int_matrix.hpp"
#include "realbott/ring.hpp"

namespace realbott {

// The monomorphism rho: Gamma(B) -> Gamma(A), rho(t_r) = s_1^{P(r,1)} ... s_n^{P(r,n)}.
// Built from a ring isomorphism P after relabeling B within its type blocks
// so that P has unit diagonal; `b` and `p` are the relabeled data.
struct MonomorphismData {
  BottMatrix a;
  BottMatrix b;
  Permutation relabel;  // b == original B conjugated by relabel
  GeneratorMap p;
  std::vector<GroupWord> images;  // rho(t_r), words in Gamma(A)
  // Matrix of rho on the lattices: column i holds the s_j^2 coordinates of
  // rho(t_i^2). Q(j, i) = P(i, j) where B(i, j) = 0, and 0 where B(i, j) = 1.
  IntMatrix q;
  std::int64_t det_q = 0;
  IntMatrix q_tilde;  // adj(Q) = det(Q) Q^{-1}
  // rho_bar[alpha] for every alpha in (Z_2)^n (bit masks); equals P^T mod 2.
  std::vector<std::uint8_t> rho_bar;
  std::vector<std::uint8_t> rho_bar_inverse;
  std::vector<IntVec> lambda;  // rho(0, alpha) = (lambda(alpha), rho_bar(alpha))

  int dim() const noexcept { return a.dim(); }
  // rho applied to a word of Gamma(B).
  GroupWord apply(const GroupWord& w) const;
  IntVec apply_lattice(const IntVec& l) const;
};

// Preconditions: A and B in normal form and is_isomorphism(A, B, P).
// Throws VerificationError if a Gamma(B) relation is not preserved, if
// det Q is even or differs from det P, or if rho_bar differs from P^T mod 2.
MonomorphismData build_rho(const BottMatrix& a, const BottMatrix& b, const GeneratorMap& p);

struct ExtensionCheck {
  // Q f_B(a,b) = lambda(a) + phi_A(rb a) lambda(b) - lambda(ab) + f_A(rb a, rb b).
  bool coin = true;
  // Q phi_B(a) = phi_A(rb a) Q.
  bool commutation = true;
  // adj(Q) Q = det(Q) I and phi_B(a) adj(Q) = adj(Q) phi_A(rb a).
  bool q_tilde = true;
  // det(Q) f_B = delta_B(adj(Q) lambda) + adj(Q) f_A(rb., rb.).
  bool coboundary_identity = true;
  // rho(l, a) = (Q l + lambda(a), rb a) for l in {0,1}^n.
  bool homomorphism = true;
  // T(l, a) = (adj(Q) l, rb^{-1} a) respects the group laws.
  bool t_isomorphism = true;
  std::vector<std::string> failures;

  bool all() const { return coin && commutation && q_tilde && coboundary_identity && homomorphism && t_isomorphism; }
};

ExtensionCheck check_extension_identities(const MonomorphismData& rho);
// `b` may be the original B or the relabeled one stored in rho.
bool verify_extension_identities(const BottMatrix& a, const BottMatrix& b, const MonomorphismData& rho);

}  // namespace realbott
