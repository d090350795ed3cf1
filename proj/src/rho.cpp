#include "realbott/rho.hpp"

#include <stdexcept>

#include "realbott/checked.hpp"
#include "realbott/error.hpp"

namespace realbott {

namespace {

IntVec mat_vec(const IntMatrix& m, const IntVec& v, int n) {
  IntVec out{};
  for (int r = 0; r < n; ++r) {
    std::int64_t acc = 0;
    for (int c = 0; c < n; ++c) {
      const auto x = m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
      if (x) acc = checked::add(acc, checked::mul(x, v[static_cast<std::size_t>(c)]));
    }
    out[static_cast<std::size_t>(r)] = acc;
  }
  return out;
}

IntVec add(const IntVec& x, const IntVec& y) {
  IntVec out{};
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = checked::add(x[k], y[k]);
  return out;
}

IntVec sub(const IntVec& x, const IntVec& y) {
  IntVec out{};
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = checked::sub(x[k], y[k]);
  return out;
}

IntVec scale(std::int64_t s, const IntVec& x) {
  IntVec out{};
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = checked::mul(s, x[k]);
  return out;
}

int sign(std::uint8_t flips, int k) { return ((flips >> k) & 1u) ? -1 : 1; }

IntVec bits_vector(unsigned bits, int n) {
  IntVec v{};
  for (int k = 0; k < n; ++k) v[static_cast<std::size_t>(k)] = (bits >> k) & 1u;
  return v;
}

void fail(ExtensionCheck& check, bool& flag, const std::string& what) {
  if (flag && check.failures.size() < 16) check.failures.push_back(what);
  flag = false;
}

}  // namespace

GroupWord MonomorphismData::apply(const GroupWord& w) const {
  if (w.n != dim()) throw std::invalid_argument("MonomorphismData::apply: dimension mismatch");
  GroupWord out = identity_word(dim());
  for (int r = 0; r < dim(); ++r) {
    const auto e = w.exponents[static_cast<std::size_t>(r)];
    if (e) out = word_multiply(a, out, word_power(a, images[static_cast<std::size_t>(r)], e));
  }
  return out;
}

IntVec MonomorphismData::apply_lattice(const IntVec& l) const { return mat_vec(q, l, dim()); }

MonomorphismData build_rho(const BottMatrix& a, const BottMatrix& b, const GeneratorMap& p) {
  const int n = a.dim();
  if (b.dim() != n || p.dim() != n) throw std::invalid_argument("build_rho: dimension mismatch");
  if (!is_normal_form(a) || !is_normal_form(b)) throw std::invalid_argument("build_rho: inputs must be in normal form");
  if (!is_isomorphism(a, b, p)) throw std::invalid_argument("build_rho: P is not a ring isomorphism");

  const auto unit = unit_diagonal_form(b, p);
  if (!unit) throw VerificationError("build_rho: P has no unit-diagonal relabeling within the type blocks");

  MonomorphismData rho;
  rho.a = a;
  rho.b = unit->b_relabeled;
  rho.relabel = unit->relabel;
  rho.p = unit->p_unit;
  if (!is_isomorphism(rho.a, rho.b, rho.p)) throw VerificationError("build_rho: relabeled P is not an isomorphism");

  for (int r = 0; r < n; ++r) {
    GroupWord w = identity_word(n);
    for (int j = 0; j < n; ++j) w.exponents[static_cast<std::size_t>(j)] = rho.p.entry(r, j) ? 1 : 0;
    rho.images.push_back(w);
  }

  // t_l t_i = t_i t_l^{(-1)^{B(i,l)}} for i < l must survive rho.
  for (int l = 0; l < n; ++l) {
    const auto& tl = rho.images[static_cast<std::size_t>(l)];
    for (int i = 0; i < l; ++i) {
      const auto& ti = rho.images[static_cast<std::size_t>(i)];
      const auto right = rho.b.entry(i, l) ? word_inverse(a, tl) : tl;
      if (word_multiply(a, tl, ti) != word_multiply(a, ti, right))
        throw VerificationError("build_rho: relation t" + std::to_string(l + 1) + " t" + std::to_string(i + 1) +
                                " is not preserved");
    }
  }

  rho.q = IntMatrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto& ti = rho.images[static_cast<std::size_t>(i)];
    const auto square = word_multiply(a, ti, ti);
    for (int j = 0; j < n; ++j) {
      const auto e = square.exponents[static_cast<std::size_t>(j)];
      if (e % 2 != 0) throw VerificationError("build_rho: rho(t_i^2) is not a lattice element");
      rho.q(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = e / 2;
    }
  }
  rho.det_q = determinant(rho.q);
  if (rho.det_q % 2 == 0) throw VerificationError("build_rho: det Q = " + std::to_string(rho.det_q) + " is even");
  IntMatrix p_int(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) p_int(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = rho.p.entry(i, j) ? 1 : 0;
  const auto det_p = determinant(p_int);
  if (rho.det_q != det_p)
    throw VerificationError("build_rho: det Q = " + std::to_string(rho.det_q) + " differs from det P = " + std::to_string(det_p));
  rho.q_tilde = adjugate(rho.q);

  const std::size_t order = std::size_t{1} << n;
  const auto p_transposed = rho.p.transposed();
  rho.rho_bar.resize(order);
  rho.rho_bar_inverse.assign(order, 0);
  rho.lambda.resize(order);
  std::vector<bool> hit(order, false);
  for (std::size_t alpha = 0; alpha < order; ++alpha) {
    const auto image = decompose(a, rho.apply(section_word(n, static_cast<std::uint8_t>(alpha))));
    if (image.alpha != p_transposed.apply(static_cast<std::uint8_t>(alpha)))
      throw VerificationError("build_rho: induced map on (Z_2)^n differs from P^T mod 2");
    if (hit[image.alpha]) throw VerificationError("build_rho: induced map on (Z_2)^n is not bijective");
    hit[image.alpha] = true;
    rho.rho_bar[alpha] = image.alpha;
    rho.rho_bar_inverse[image.alpha] = static_cast<std::uint8_t>(alpha);
    rho.lambda[alpha] = image.lattice;
  }
  return rho;
}

ExtensionCheck check_extension_identities(const MonomorphismData& rho) {
  const int n = rho.dim();
  const auto fa = extension_cocycle(rho.a);
  const auto fb = extension_cocycle(rho.b);
  const auto order = static_cast<unsigned>(fa.group_order());
  const auto un = static_cast<std::size_t>(n);
  ExtensionCheck check;

  const auto q_lambda = [&] {
    std::vector<IntVec> c(order);
    for (unsigned alpha = 0; alpha < order; ++alpha) c[alpha] = mat_vec(rho.q_tilde, rho.lambda[alpha], n);
    return c;
  }();

  if (rho.q_tilde * rho.q != rho.det_q * IntMatrix::identity(un)) fail(check, check.q_tilde, "adj(Q) Q != det(Q) I");

  for (unsigned alpha = 0; alpha < order; ++alpha) {
    const auto ua = static_cast<std::uint8_t>(alpha);
    const auto ra = rho.rho_bar[alpha];
    const auto flips_a = fa.phi_flips(ra);
    const auto flips_b = fb.phi_flips(ua);
    for (std::size_t r = 0; r < un; ++r) {
      for (std::size_t c = 0; c < un; ++c) {
        if (rho.q(r, c) * sign(flips_b, static_cast<int>(c)) != sign(flips_a, static_cast<int>(r)) * rho.q(r, c))
          fail(check, check.commutation, "Q phi_B != phi_A Q at alpha=" + std::to_string(alpha));
        if (sign(flips_b, static_cast<int>(r)) * rho.q_tilde(r, c) != rho.q_tilde(r, c) * sign(flips_a, static_cast<int>(c)))
          fail(check, check.q_tilde, "phi_B adj(Q) != adj(Q) phi_A at alpha=" + std::to_string(alpha));
      }
    }

    for (unsigned beta = 0; beta < order; ++beta) {
      const auto ub = static_cast<std::uint8_t>(beta);
      const auto rb = rho.rho_bar[beta];
      const auto ab = static_cast<std::uint8_t>(alpha ^ beta);
      const auto& fa_val = fa.f(ra, rb);

      const auto lhs = mat_vec(rho.q, fb.f(ua, ub), n);
      const auto rhs = add(sub(add(rho.lambda[alpha], fa.act(ra, rho.lambda[beta])), rho.lambda[ab]), fa_val);
      if (lhs != rhs) fail(check, check.coin, "coin fails at (" + std::to_string(alpha) + "," + std::to_string(beta) + ")");

      const auto scaled = scale(rho.det_q, fb.f(ua, ub));
      const auto delta = sub(add(q_lambda[alpha], fb.act(ua, q_lambda[beta])), q_lambda[ab]);
      if (scaled != add(delta, mat_vec(rho.q_tilde, fa_val, n)))
        fail(check, check.coboundary_identity,
             "det(Q) f_B != delta_B(adj(Q) lambda) + adj(Q) f_A at (" + std::to_string(alpha) + "," + std::to_string(beta) + ")");
    }
  }

  // rho(l, alpha) against the affine description.
  for (unsigned bits = 0; bits < order; ++bits) {
    const auto l = bits_vector(bits, n);
    const auto ql = mat_vec(rho.q, l, n);
    for (unsigned alpha = 0; alpha < order; ++alpha) {
      const ExtensionElement x{l, static_cast<std::uint8_t>(alpha)};
      const auto image = decompose(rho.a, rho.apply(recompose(rho.b, x)));
      const ExtensionElement expected{add(ql, rho.lambda[alpha]), rho.rho_bar[alpha]};
      if (image != expected) fail(check, check.homomorphism, "rho(l, alpha) mismatch at alpha=" + std::to_string(alpha));
    }
  }

  // T(x) T(y) == T(xy) with the target law (u,a)(v,b) = (u + phi_B(a) v + adj(Q) f_A(rb a, rb b), ab).
  const auto t_map = [&](const ExtensionElement& x) {
    return ExtensionElement{mat_vec(rho.q_tilde, x.lattice, n), rho.rho_bar_inverse[x.alpha]};
  };
  const auto target_multiply = [&](const ExtensionElement& x, const ExtensionElement& y) {
    const auto cocycle = mat_vec(rho.q_tilde, fa.f(rho.rho_bar[x.alpha], rho.rho_bar[y.alpha]), n);
    return ExtensionElement{add(add(x.lattice, fb.act(x.alpha, y.lattice)), cocycle), static_cast<std::uint8_t>(x.alpha ^ y.alpha)};
  };
  std::vector<ExtensionElement> elements;
  for (unsigned bits = 0; bits < order; ++bits)
    for (unsigned alpha = 0; alpha < order; ++alpha) elements.push_back({bits_vector(bits, n), static_cast<std::uint8_t>(alpha)});
  std::vector<ExtensionElement> images;
  images.reserve(elements.size());
  for (const auto& x : elements) images.push_back(t_map(x));
  for (std::size_t i = 0; i < elements.size() && check.t_isomorphism; ++i)
    for (std::size_t j = 0; j < elements.size(); ++j)
      if (target_multiply(images[i], images[j]) != t_map(fa.multiply(elements[i], elements[j]))) {
        fail(check, check.t_isomorphism, "T(x) T(y) != T(xy)");
        break;
      }
  return check;
}

bool verify_extension_identities(const BottMatrix& a, const BottMatrix& b, const MonomorphismData& rho) {
  if (a != rho.a) return false;
  if (b != rho.b) {
    const auto relabeled = b.conjugate(rho.relabel);
    if (!relabeled || *relabeled != rho.b) return false;
  }
  return check_extension_identities(rho).all();
}

}  // namespace realbott
