#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "realbott/classify.hpp"
#include "realbott/ring.hpp"

using namespace realbott;

namespace {

BottMatrix rows(std::vector<std::string> r) { return BottMatrix::from_rows(r); }

// Reference product: expand into monomials with multiplicities and rewrite
// x_j^2 -> x_j sum_i A(i,j) x_i on the largest repeated index until none is
// left. Counts rewrites so termination can be bounded.
struct NaiveRing {
  const BottMatrix& a;
  std::uint64_t rewrites = 0;
  int max_depth = 0;

  using Monomial = std::vector<int>;  // multiplicity per generator

  void reduce(const Monomial& m, std::map<std::uint8_t, int>& acc, int depth) {
    REQUIRE(depth < 64);
    max_depth = std::max(max_depth, depth);
    int j = -1;
    for (int k = a.dim() - 1; k >= 0 && j < 0; --k)
      if (m[static_cast<std::size_t>(k)] >= 2) j = k;
    if (j < 0) {
      std::uint8_t mask = 0;
      for (int k = 0; k < a.dim(); ++k)
        if (m[static_cast<std::size_t>(k)]) mask = static_cast<std::uint8_t>(mask | (1u << k));
      acc[mask] ^= 1;
      return;
    }
    ++rewrites;
    for (int i = 0; i < j; ++i) {
      if (!a.entry(i, j)) continue;
      Monomial next = m;
      --next[static_cast<std::size_t>(j)];
      ++next[static_cast<std::size_t>(i)];
      reduce(next, acc, depth + 1);
    }
  }

  RingElement multiply(const RingElement& u, const RingElement& v) {
    std::map<std::uint8_t, int> acc;
    for (auto s : u.monomials())
      for (auto t : v.monomials()) {
        Monomial m(static_cast<std::size_t>(a.dim()), 0);
        for (int k = 0; k < a.dim(); ++k) m[static_cast<std::size_t>(k)] = ((s >> k) & 1) + ((t >> k) & 1);
        reduce(m, acc, 0);
      }
    RingElement out(a.dim());
    for (auto [mask, bit] : acc)
      if (bit) out.toggle(mask);
    return out;
  }
};

RingElement random_element(int n, std::mt19937_64& rng) {
  RingElement e(n);
  for (int s = 0; s < (1 << n); ++s)
    if (rng() & 1u) e.toggle(static_cast<std::uint8_t>(s));
  return e;
}

BottMatrix random_matrix(int n, std::mt19937_64& rng) {
  const int bits = n * (n - 1) / 2;
  return BottMatrix::from_key(n, bits ? rng() % (std::uint64_t{1} << bits) : 0);
}

const BottMatrix kA3 = BottMatrix::from_key_string(3, "101");  // A(1,2) = A(2,3) = 1
const BottMatrix kB3 = BottMatrix::from_key_string(3, "111");

}  // namespace

TEST_SUITE("z2-ring") {
  TEST_CASE("multiply examples in the Klein ring") {
    const auto k = rows({"01", "00"});
    const auto x1 = RingElement::generator(2, 0), x2 = RingElement::generator(2, 1);
    CHECK(multiply(k, x1, x1).is_zero());
    CHECK(multiply(k, x2, x2) == RingElement::monomial(2, 0b11));
    CHECK(multiply(k, x1 + x2, x1 + x2) == RingElement::monomial(2, 0b11));
    CHECK(multiply(k, x1 + x2, x1 + x2).to_string() == "x1x2");
    CHECK_THROWS_AS(multiply(k, x1, RingElement::generator(3, 0)), std::invalid_argument);
  }

  TEST_CASE("table product agrees with naive rewriting, rewrite count bounded") {
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 5; ++n) {
      for (int trial = 0; trial < 40; ++trial) {
        const auto a = random_matrix(n, rng);
        const CohomologyRing ring(a);
        CHECK(ring.rewrite_count() == static_cast<std::uint64_t>(n) << (n - 1));
        NaiveRing naive{a};
        const auto u = random_element(n, rng), v = random_element(n, rng);
        CHECK(ring.multiply(u, v) == naive.multiply(u, v));
        // Each rewrite lowers the 0-based index sum, which starts at most n(n-1).
        CHECK(naive.max_depth <= n * (n - 1));
      }
    }
  }

  TEST_CASE("ring axioms on random elements") {
    std::mt19937_64 rng(5);
    for (int n = 1; n <= 5; ++n) {
      for (int trial = 0; trial < 25; ++trial) {
        const CohomologyRing ring(random_matrix(n, rng));
        const auto u = random_element(n, rng), v = random_element(n, rng), w = random_element(n, rng);
        CHECK(ring.multiply(ring.multiply(u, v), w) == ring.multiply(u, ring.multiply(v, w)));
        CHECK(ring.multiply(u, v) == ring.multiply(v, u));
        CHECK(ring.multiply(u, v + w) == ring.multiply(u, v) + ring.multiply(u, w));
        CHECK(ring.multiply(RingElement::one(n), u) == u);
        for (unsigned s = 0; s < (1u << n); ++s)
          for (unsigned t = 0; t < (1u << n); ++t)
            if (!(s & t))
              CHECK(ring.multiply(RingElement::monomial(n, static_cast<std::uint8_t>(s)), RingElement::monomial(n, static_cast<std::uint8_t>(t))) ==
                    RingElement::monomial(n, static_cast<std::uint8_t>(s | t)));
      }
    }
  }

  TEST_CASE("graded dimension is binomial and products are homogeneous") {
    for (int n = 1; n <= 4; ++n) {
      for (auto a : enumerate_all(n)) {
        const CohomologyRing ring(a);
        std::vector<int> count(static_cast<std::size_t>(n + 1), 0);
        for (unsigned s = 0; s < (1u << n); ++s) ++count[static_cast<std::size_t>(__builtin_popcount(s))];
        for (int k = 0; k <= n; ++k) {
          int binom = 1;
          for (int i = 0; i < k; ++i) binom = binom * (n - i) / (i + 1);
          CHECK(count[static_cast<std::size_t>(k)] == binom);
        }
        for (unsigned s = 0; s < (1u << n); ++s)
          for (int k = 0; k < n; ++k) {
            const auto p = ring.times_generator(RingElement::monomial(n, static_cast<std::uint8_t>(s)), k);
            CHECK((p.is_zero() || p.is_homogeneous(__builtin_popcount(s) + 1)));
          }
      }
    }
  }

  TEST_CASE("relation_image examples") {
    const auto p = GeneratorMap::identity_plus_unit(3, 0, 1);
    CHECK(relation_image(kA3, kB3, p, 1).is_zero());
    for (int j = 0; j < 3; ++j) CHECK(relation_image(kA3, kA3, GeneratorMap::identity(3), j).is_zero());
    // y3^2 = y3 (y1 + y2) in the B-ring, but the A-relation asks for y3 y2.
    const auto image = relation_image(kA3, kB3, GeneratorMap::identity(3), 2);
    CHECK(image == RingElement::monomial(3, 0b101));
    CHECK_THROWS_AS(relation_image(kA3, BottMatrix(2), GeneratorMap::identity(3), 0), std::invalid_argument);
  }

  TEST_CASE("is_isomorphism examples") {
    CHECK(is_isomorphism(kA3, kA3, GeneratorMap::identity(3)));
    CHECK(is_isomorphism(kA3, kB3, GeneratorMap::identity_plus_unit(3, 0, 1)));
    const auto zero = BottMatrix(2), k = rows({"01", "00"});
    for (std::uint64_t bits = 0; bits < 16; ++bits) CHECK_FALSE(is_isomorphism(zero, k, GeneratorMap::from_bits(2, bits)));
    // A singular P never qualifies, even when relations vanish.
    CHECK_FALSE(is_isomorphism(zero, zero, GeneratorMap(2)));
  }

  TEST_CASE("find_isomorphism examples") {
    CHECK(find_isomorphism(kA3, kA3) == std::optional<GeneratorMap>(GeneratorMap::identity(3)));
    const auto p = find_isomorphism(kA3, kB3);
    REQUIRE(p.has_value());
    CHECK(*p == GeneratorMap::identity_plus_unit(3, 0, 1));
    const auto type21 = BottMatrix::from_key_string(3, "001"), type12 = BottMatrix::from_key_string(3, "110");
    CHECK_FALSE(find_isomorphism(type21, type12).has_value());
    CHECK_THROWS_AS(find_isomorphism(BottMatrix::from_key_string(3, "100"), kA3), std::invalid_argument);
  }

  TEST_CASE("bruteforce_isomorphism examples") {
    const auto k = rows({"01", "00"});
    CHECK(bruteforce_isomorphism(k, k) == std::optional<GeneratorMap>(GeneratorMap::identity(2)));
    CHECK_FALSE(bruteforce_isomorphism(BottMatrix(2), k).has_value());
    CHECK(bruteforce_isomorphism(kA3, kB3).has_value());
    CHECK_THROWS_AS(bruteforce_isomorphism(BottMatrix(5), BottMatrix(5)), std::invalid_argument);
  }

  TEST_CASE("find, exhaustive and brute-force searches agree on all n <= 3 pairs") {
    for (int n = 1; n <= 3; ++n)
      for (auto a : enumerate_all(n))
        for (auto b : enumerate_all(n)) {
          const bool brute = bruteforce_isomorphism(a, b).has_value();
          CHECK(exhaustive_isomorphism(a, b).has_value() == brute);
          const auto any = find_isomorphism_any(a, b);
          CHECK(any.has_value() == brute);
          if (any) CHECK(is_isomorphism(a, b, *any));
        }
  }

  TEST_CASE("isomorphism_necessary_conditions examples") {
    CHECK(isomorphism_necessary_conditions(kA3, kA3, GeneratorMap::identity(3)));
    CHECK(isomorphism_necessary_conditions(kA3, kB3, GeneratorMap::identity_plus_unit(3, 0, 1)));
    CHECK_FALSE(isomorphism_necessary_conditions(kA3, kB3, GeneratorMap::identity(3)));
  }

  TEST_CASE("unit_diagonal_form relabels B within blocks") {
    // Type (2,2): swapping the two generators of a block cannot be absorbed
    // into the diagonal of P without relabeling B.
    const auto a = BottMatrix::from_key_string(4, "000110");
    const auto orbit = permutation_orbit(a);
    REQUIRE(orbit.size() == 2);
    const auto b = orbit.back() == a ? orbit.front() : orbit.back();
    const auto p = find_isomorphism(a, b);
    REQUIRE(p.has_value());
    const auto unit = unit_diagonal_form(b, *p);
    REQUIRE(unit.has_value());
    CHECK(unit->p_unit.unit_diagonal());
    CHECK(is_isomorphism(a, unit->b_relabeled, unit->p_unit));
    CHECK(isomorphism_necessary_conditions(a, unit->b_relabeled, unit->p_unit));
  }

  TEST_CASE("isomorphism is an equivalence on witnesses for n <= 4") {
    std::mt19937_64 rng(3);
    for (int n = 2; n <= 4; ++n) {
      const auto classes = classify_dimension(n);
      for (const auto& cls : classes.classes) {
        for (int trial = 0; trial < 6; ++trial) {
          const auto pick = [&] { return BottMatrix::from_key(n, cls.members[rng() % cls.members.size()]); };
          const auto a = pick(), b = pick(), c = pick();
          const auto pab = find_isomorphism_any(a, b), pbc = find_isomorphism_any(b, c);
          REQUIRE(pab.has_value());
          REQUIRE(pbc.has_value());
          const auto inverse = pab->inverse();
          REQUIRE(inverse.has_value());
          CHECK(is_isomorphism(b, a, *inverse));
          CHECK(is_isomorphism(a, c, *pbc * *pab));
        }
      }
    }
  }

  TEST_CASE("classify_dimension counts and invariants") {
    const std::vector<std::size_t> expected{1, 2, 4, 12};
    for (int n = 1; n <= 4; ++n) {
      const auto c = classify_dimension(n);
      CHECK(c.classes.size() == expected[static_cast<std::size_t>(n - 1)]);
      std::uint64_t total = 0;
      for (const auto& cls : c.classes) {
        total += cls.member_count;
        CHECK(cls.representative.key() == cls.members.front());
        for (auto key : cls.members) {
          const auto m = BottMatrix::from_key(n, key);
          CHECK(is_orientable(m) == cls.orientable);
          CHECK(type_signature(m) == cls.type);
        }
      }
      CHECK(total == c.total_matrices);
    }
    CHECK_THROWS_AS(classify_dimension(6), std::invalid_argument);
    CHECK_THROWS_AS(classify_dimension(0), std::invalid_argument);
  }

  TEST_CASE("n = 5 class count regression") {
    ClassifyOptions threaded;
    threaded.threads = 3;
    const auto c = classify_dimension(5, threaded);
    CHECK(c.classes.size() == 54);
    ClassifyOptions serial;
    const auto d = classify_dimension(5, serial);
    REQUIRE(d.classes.size() == c.classes.size());
    for (std::size_t i = 0; i < c.classes.size(); ++i) CHECK(c.classes[i].members == d.classes[i].members);
  }
}
