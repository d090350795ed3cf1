#include "realbott/group.hpp"

#include <stdexcept>

#include "realbott/checked.hpp"
#include "realbott/error.hpp"

namespace realbott {

namespace {

void require_same_dim(int n1, int n2, const char* what) {
  if (n1 != n2) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

bool odd(std::int64_t x) { return (x & 1) != 0; }

// parity of sum_{k<j} q_k A(k, j)
bool sign_parity(const BottMatrix& a, const IntVec& q, int j) {
  const auto col = a.column_mask(j);
  bool parity = false;
  for (int k = 0; k < j; ++k)
    if (((col >> k) & 1u) && odd(q[static_cast<std::size_t>(k)])) parity = !parity;
  return parity;
}

}  // namespace

// ------------------------------------------------------------ AffineMotion

bool AffineMotion::is_lattice_translation() const {
  if (flips) return false;
  for (int k = 0; k < n; ++k)
    if (odd(translation2[static_cast<std::size_t>(k)])) return false;
  return true;
}

AffineMotion identity_motion(int n) {
  AffineMotion m;
  m.n = n;
  return m;
}

AffineMotion lattice_translation(int n, const IntVec& lattice) {
  AffineMotion m = identity_motion(n);
  for (int k = 0; k < n; ++k) m.translation2[static_cast<std::size_t>(k)] = checked::mul(2, lattice[static_cast<std::size_t>(k)]);
  return m;
}

AffineMotion generator_motion(const BottMatrix& a, int i) {
  if (i < 0 || i >= a.dim()) throw std::invalid_argument("generator_motion: index out of range");
  AffineMotion m = identity_motion(a.dim());
  m.flips = a.row_mask(i);
  m.translation2[static_cast<std::size_t>(i)] = 1;
  return m;
}

AffineMotion compose_motions(const AffineMotion& m1, const AffineMotion& m2) {
  require_same_dim(m1.n, m2.n, "compose_motions");
  AffineMotion out = identity_motion(m1.n);
  out.flips = m1.flips ^ m2.flips;
  for (int k = 0; k < m1.n; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    const auto moved = m1.sign(k) < 0 ? checked::neg(m2.translation2[idx]) : m2.translation2[idx];
    out.translation2[idx] = checked::add(moved, m1.translation2[idx]);
  }
  return out;
}

AffineMotion inverse_motion(const AffineMotion& m) {
  // (D, v)^{-1} = (D, -D v) since D^2 = 1.
  AffineMotion out = identity_motion(m.n);
  out.flips = m.flips;
  for (int k = 0; k < m.n; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    out.translation2[idx] = m.sign(k) < 0 ? m.translation2[idx] : checked::neg(m.translation2[idx]);
  }
  return out;
}

bool has_fixed_point(const AffineMotion& m) {
  for (int k = 0; k < m.n; ++k)
    if (m.sign(k) > 0 && m.translation2[static_cast<std::size_t>(k)] != 0) return false;
  return true;
}

// --------------------------------------------------------------- GroupWord

GroupWord identity_word(int n) {
  GroupWord w;
  w.n = n;
  return w;
}

GroupWord generator_word(int n, int i) {
  if (i < 0 || i >= n) throw std::invalid_argument("generator_word: index out of range");
  GroupWord w = identity_word(n);
  w.exponents[static_cast<std::size_t>(i)] = 1;
  return w;
}

GroupWord make_word(const std::vector<std::int64_t>& exponents) {
  if (exponents.empty() || exponents.size() > static_cast<std::size_t>(kMaxDim))
    throw std::invalid_argument("make_word: length must be in [1, 8]");
  GroupWord w = identity_word(static_cast<int>(exponents.size()));
  for (std::size_t k = 0; k < exponents.size(); ++k) w.exponents[k] = exponents[k];
  return w;
}

std::string to_string(const GroupWord& w) {
  std::string s = "(";
  for (int k = 0; k < w.n; ++k) {
    if (k) s += ',';
    s += std::to_string(w.exponents[static_cast<std::size_t>(k)]);
  }
  return s + ")";
}

AffineMotion evaluate(const BottMatrix& a, const GroupWord& w) {
  require_same_dim(a.dim(), w.n, "evaluate");
  AffineMotion out = identity_motion(a.dim());
  for (int i = 0; i < a.dim(); ++i) {
    const auto e = w.exponents[static_cast<std::size_t>(i)];
    if (e == 0) continue;
    // s_i^e = (D_i^e, (e/2) e_i)
    AffineMotion power = identity_motion(a.dim());
    power.flips = odd(e) ? a.row_mask(i) : 0;
    power.translation2[static_cast<std::size_t>(i)] = e;
    out = compose_motions(out, power);
  }
  return out;
}

GroupWord word_multiply(const BottMatrix& a, const GroupWord& p, const GroupWord& q) {
  require_same_dim(p.n, q.n, "word_multiply");
  require_same_dim(a.dim(), p.n, "word_multiply");
  GroupWord out = identity_word(p.n);
  for (int j = 0; j < p.n; ++j) {
    const auto idx = static_cast<std::size_t>(j);
    const auto pj = sign_parity(a, q.exponents, j) ? checked::neg(p.exponents[idx]) : p.exponents[idx];
    out.exponents[idx] = checked::add(pj, q.exponents[idx]);
  }
  return out;
}

GroupWord word_inverse(const BottMatrix& a, const GroupWord& w) {
  require_same_dim(a.dim(), w.n, "word_inverse");
  GroupWord inv = identity_word(w.n);
  // Solve 0 = (-1)^{sum_{k<j} q_k A(k,j)} p_j + q_j for q, lowest index first.
  for (int j = 0; j < w.n; ++j) {
    const auto idx = static_cast<std::size_t>(j);
    const auto pj = sign_parity(a, inv.exponents, j) ? checked::neg(w.exponents[idx]) : w.exponents[idx];
    inv.exponents[idx] = checked::neg(pj);
  }
  return inv;
}

GroupWord word_power(const BottMatrix& a, const GroupWord& w, std::int64_t k) {
  GroupWord base = k < 0 ? word_inverse(a, w) : w;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1u : static_cast<std::uint64_t>(k);
  GroupWord result = identity_word(w.n);
  while (e) {
    if (e & 1u) result = word_multiply(a, result, base);
    e >>= 1;
    if (e) base = word_multiply(a, base, base);
  }
  return result;
}

GroupWord word_of_motion(const BottMatrix& a, const AffineMotion& m) {
  require_same_dim(a.dim(), m.n, "word_of_motion");
  // Translation coordinate k of s_1^{a_1}...s_n^{a_n} is
  // (-1)^{sum_{i<k} a_i A(i,k)} a_k / 2.
  GroupWord w = identity_word(a.dim());
  std::uint8_t flips = 0;
  for (int k = 0; k < a.dim(); ++k) {
    const auto idx = static_cast<std::size_t>(k);
    const auto t = m.translation2[idx];
    w.exponents[idx] = sign_parity(a, w.exponents, k) ? checked::neg(t) : t;
    if (odd(w.exponents[idx])) flips ^= a.row_mask(k);
  }
  if (flips != m.flips) throw Error("word_of_motion: motion is not in Gamma(A) (linear part inconsistent with translation)");
  return w;
}

bool commutation_relations_hold(const BottMatrix& a) {
  for (int l = 0; l < a.dim(); ++l) {
    const auto sl = generator_motion(a, l);
    for (int i = 0; i < l; ++i) {
      const auto si = generator_motion(a, i);
      const auto right = a.entry(i, l) ? inverse_motion(sl) : sl;
      if (compose_motions(sl, si) != compose_motions(si, right)) return false;
    }
  }
  return true;
}

bool freeness_check(const BottMatrix& a, int bound) {
  if (bound < 1) throw std::invalid_argument("freeness_check: bound must be >= 1");
  const int n = a.dim();
  GroupWord w = identity_word(n);
  for (int k = 0; k < n; ++k) w.exponents[static_cast<std::size_t>(k)] = -bound;
  while (true) {
    bool identity = true;
    for (int k = 0; k < n; ++k) identity = identity && w.exponents[static_cast<std::size_t>(k)] == 0;
    if (!identity && has_fixed_point(evaluate(a, w))) return false;
    int k = 0;
    while (k < n && w.exponents[static_cast<std::size_t>(k)] == bound) w.exponents[static_cast<std::size_t>(k++)] = -bound;
    if (k == n) break;
    ++w.exponents[static_cast<std::size_t>(k)];
  }
  return true;
}

// ------------------------------------------------------- extension structure

GroupWord section_word(int n, std::uint8_t alpha) {
  GroupWord w = identity_word(n);
  for (int k = 0; k < n; ++k) w.exponents[static_cast<std::size_t>(k)] = (alpha >> k) & 1u;
  return w;
}

ExtensionElement decompose(const BottMatrix& a, const GroupWord& w) {
  ExtensionElement e;
  for (int k = 0; k < w.n; ++k)
    if (odd(w.exponents[static_cast<std::size_t>(k)])) e.alpha = static_cast<std::uint8_t>(e.alpha | (1u << k));
  const auto lattice_word = word_multiply(a, w, word_inverse(a, section_word(w.n, e.alpha)));
  for (int k = 0; k < w.n; ++k) {
    const auto x = lattice_word.exponents[static_cast<std::size_t>(k)];
    if (odd(x)) throw std::logic_error("decompose: residual is not a lattice element");
    e.lattice[static_cast<std::size_t>(k)] = x / 2;
  }
  return e;
}

GroupWord recompose(const BottMatrix& a, const ExtensionElement& e) {
  GroupWord lattice_word = identity_word(a.dim());
  for (int k = 0; k < a.dim(); ++k)
    lattice_word.exponents[static_cast<std::size_t>(k)] = checked::mul(2, e.lattice[static_cast<std::size_t>(k)]);
  return word_multiply(a, lattice_word, section_word(a.dim(), e.alpha));
}

IntMatrix conjugation_action(const BottMatrix& a, std::uint8_t alpha) {
  const int n = a.dim();
  const auto lift = evaluate(a, section_word(n, alpha));
  const auto lift_inv = inverse_motion(lift);
  IntMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    IntVec unit{};
    unit[static_cast<std::size_t>(k)] = 1;
    const auto conj = compose_motions(compose_motions(lift, lattice_translation(n, unit)), lift_inv);
    if (!conj.is_lattice_translation()) throw VerificationError("conjugation_action: conjugate of a translation is not a translation");
    for (int r = 0; r < n; ++r) m(static_cast<std::size_t>(r), static_cast<std::size_t>(k)) = conj.translation2[static_cast<std::size_t>(r)] / 2;
  }
  return m;
}

// ------------------------------------------------------------ CocycleTable

CocycleTable::CocycleTable(int n, std::vector<IntVec> values, std::vector<std::uint8_t> flips)
    : n_(n), values_(std::move(values)), flips_(std::move(flips)) {
  if (values_.size() != group_order() * group_order() || flips_.size() != group_order())
    throw std::invalid_argument("CocycleTable: table sizes do not match 2^n");
}

IntVec CocycleTable::act(std::uint8_t alpha, const IntVec& v) const {
  IntVec out{};
  const auto fl = flips_[alpha];
  for (int k = 0; k < n_; ++k) out[static_cast<std::size_t>(k)] = ((fl >> k) & 1u) ? checked::neg(v[static_cast<std::size_t>(k)]) : v[static_cast<std::size_t>(k)];
  return out;
}

bool CocycleTable::satisfies_cocycle_condition() const {
  const auto order = static_cast<unsigned>(group_order());
  for (unsigned a = 0; a < order; ++a) {
    for (unsigned b = 0; b < order; ++b) {
      for (unsigned c = 0; c < order; ++c) {
        const auto ua = static_cast<std::uint8_t>(a), ub = static_cast<std::uint8_t>(b), uc = static_cast<std::uint8_t>(c);
        const auto moved = act(ua, f(ub, uc));
        const auto& f_ab_c = f(static_cast<std::uint8_t>(a ^ b), uc);
        const auto& f_a_bc = f(ua, static_cast<std::uint8_t>(b ^ c));
        const auto& f_a_b = f(ua, ub);
        for (int k = 0; k < n_; ++k) {
          const auto idx = static_cast<std::size_t>(k);
          if (moved[idx] - f_ab_c[idx] + f_a_bc[idx] - f_a_b[idx] != 0) return false;
        }
      }
    }
  }
  return true;
}

bool CocycleTable::is_normalized() const {
  const auto order = static_cast<unsigned>(group_order());
  const IntVec zero{};
  for (unsigned a = 0; a < order; ++a)
    if (f(static_cast<std::uint8_t>(a), 0) != zero || f(0, static_cast<std::uint8_t>(a)) != zero) return false;
  return true;
}

ExtensionElement CocycleTable::multiply(const ExtensionElement& x, const ExtensionElement& y) const {
  ExtensionElement out;
  const auto moved = act(x.alpha, y.lattice);
  const auto& cocycle = f(x.alpha, y.alpha);
  for (int k = 0; k < n_; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    out.lattice[idx] = checked::add(checked::add(x.lattice[idx], moved[idx]), cocycle[idx]);
  }
  out.alpha = x.alpha ^ y.alpha;
  return out;
}

CocycleTable extension_cocycle(const BottMatrix& a) {
  const int n = a.dim();
  const std::size_t order = std::size_t{1} << n;
  std::vector<AffineMotion> lifts(order);
  std::vector<std::uint8_t> flips(order);
  for (std::size_t alpha = 0; alpha < order; ++alpha) {
    lifts[alpha] = evaluate(a, section_word(n, static_cast<std::uint8_t>(alpha)));
    flips[alpha] = lifts[alpha].flips;
  }
  std::vector<IntVec> values(order * order);
  for (std::size_t alpha = 0; alpha < order; ++alpha) {
    for (std::size_t beta = 0; beta < order; ++beta) {
      const auto m = compose_motions(compose_motions(lifts[alpha], lifts[beta]), inverse_motion(lifts[alpha ^ beta]));
      if (!m.is_lattice_translation()) throw VerificationError("extension_cocycle: section defect is not a lattice translation");
      IntVec v{};
      for (int k = 0; k < n; ++k) v[static_cast<std::size_t>(k)] = m.translation2[static_cast<std::size_t>(k)] / 2;
      values[alpha * order + beta] = v;
    }
  }
  CocycleTable table(n, std::move(values), std::move(flips));
  if (!table.satisfies_cocycle_condition()) throw VerificationError("extension_cocycle: cocycle condition fails");
  if (!reproduces_group_law(a, table)) throw VerificationError("extension_cocycle: group law does not match motion composition");
  return table;
}

bool reproduces_group_law(const BottMatrix& a, const CocycleTable& table) {
  const int n = a.dim();
  const auto order = static_cast<unsigned>(table.group_order());
  std::vector<IntVec> lattice_parts;
  if (n <= 5) {
    for (unsigned bits = 0; bits < order; ++bits) {
      IntVec v{};
      for (int k = 0; k < n; ++k) v[static_cast<std::size_t>(k)] = (bits >> k) & 1u;
      lattice_parts.push_back(v);
    }
  } else {
    lattice_parts.push_back(IntVec{});
    for (int k = 0; k < n; ++k) {
      IntVec v{};
      v[static_cast<std::size_t>(k)] = 1;
      lattice_parts.push_back(v);
    }
  }
  std::vector<AffineMotion> lifts(order);
  for (unsigned alpha = 0; alpha < order; ++alpha) lifts[alpha] = evaluate(a, section_word(n, static_cast<std::uint8_t>(alpha)));
  auto as_motion = [&](const ExtensionElement& e) { return compose_motions(lattice_translation(n, e.lattice), lifts[e.alpha]); };

  for (const auto& l : lattice_parts) {
    for (unsigned alpha = 0; alpha < order; ++alpha) {
      const ExtensionElement x{l, static_cast<std::uint8_t>(alpha)};
      const auto mx = as_motion(x);
      for (const auto& m : lattice_parts) {
        for (unsigned beta = 0; beta < order; ++beta) {
          const ExtensionElement y{m, static_cast<std::uint8_t>(beta)};
          if (as_motion(table.multiply(x, y)) != compose_motions(mx, as_motion(y))) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace realbott
