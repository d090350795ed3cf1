#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "realbott/bott_matrix.hpp"
#include "realbott/group.hpp"
#include "realbott/int_matrix.hpp"

namespace realbott {

// phi(alpha) = (-1)^{popcount(alpha & mask)} acting on Z.
struct SignCharacter {
  int n = 0;
  std::uint8_t mask = 0;

  bool trivial() const noexcept { return mask == 0; }
  int operator()(std::uint32_t alpha) const noexcept { return (__builtin_popcount(alpha & mask) & 1) ? -1 : 1; }
};

// Character through which (Z_2)^n acts on coordinate i of the lattice of Gamma(A).
SignCharacter coordinate_character(const BottMatrix& a, int i);
// Coordinate i of the cocycle as a Z-valued 2-cochain indexed by alpha * 2^n + beta.
std::vector<std::int64_t> cocycle_coordinate(const CocycleTable& table, int i);

// Matrix of delta^k: C^k -> C^{k+1} for G = (Z_2)^n with C^k the integer
// functions on G^k. A k-tuple (g_1, ..., g_k) has index sum_i g_i |G|^{k-i}.
// Requires 1 <= n <= 4 and 0 <= k <= 2; k = 2 at n = 4 needs allow_large.
IntMatrix bar_coboundary(int n, const SignCharacter& phi, int k, bool allow_large = false);

// U M V = D with U, V unimodular (products of elementary operations) and D
// diagonal with d_1 | d_2 | ... | d_r, all positive.
struct SmithForm {
  IntMatrix input;
  IntMatrix diagonal;
  IntMatrix u;
  IntMatrix v;
  bool has_certificates = false;
  std::vector<std::int64_t> divisors;  // the r nonzero diagonal entries

  std::size_t rank() const noexcept { return divisors.size(); }
  // Shape, divisibility chain and, with certificates, U M V == D.
  bool verify() const;
};

// Pivots on the entry of least absolute value. Arithmetic is checked and an
// overflow raises OverflowError. Without certificates only D is computed.
SmithForm smith_normal_form(const IntMatrix& m, bool certificates = true);

struct H2Group {
  int free_rank = 0;
  std::vector<std::int64_t> torsion;  // invariant factors > 1

  std::string to_string() const;  // "Z/2 + Z/2", "0"
};

// ker delta^2 / im delta^1. Torsion is read from the Smith form of delta^1;
// ker delta^2 is saturated, so no other torsion can occur.
H2Group h2_of_character(int n, const SignCharacter& phi, bool allow_large = false);

// Trivial character gives (Z/2)^n, every other character (Z/2)^{n-1}.
bool verify_appendix(int n);

// Some lambda with delta^1 lambda = f, or empty when f is not a coboundary.
std::optional<std::vector<std::int64_t>> is_coboundary(int n, const SignCharacter& phi, const std::vector<std::int64_t>& f);

}  // namespace realbott
