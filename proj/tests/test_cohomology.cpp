#include <doctest.h>

#include <algorithm>
#include <random>

#include "realbott/cohomology.hpp"
#include "realbott/error.hpp"

using namespace realbott;

namespace {

IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

IntMatrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// Mask with bit i moved to position perm[i].
std::uint8_t permute_mask(std::uint8_t mask, const std::vector<int>& perm) {
  std::uint8_t out = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    if ((mask >> i) & 1u) out = static_cast<std::uint8_t>(out | (1u << perm[i]));
  return out;
}

}  // namespace

TEST_SUITE("group-cohomology") {
  TEST_CASE("bar_coboundary examples at rank 1") {
    // Row 3 is the tuple (g, g); columns are c(1), c(g).
    const auto trivial = bar_coboundary(1, {1, 0}, 1);
    CHECK(trivial.rows() == 4);
    CHECK(trivial.cols() == 2);
    CHECK(trivial(3, 0) == -1);
    CHECK(trivial(3, 1) == 2);
    const auto sign = bar_coboundary(1, {1, 1}, 1);
    CHECK(sign(3, 0) == -1);
    CHECK(sign(3, 1) == 0);
    const auto d0 = bar_coboundary(1, {1, 1}, 0);
    CHECK(d0.rows() == 2);
    CHECK(d0(1, 0) == -2);
  }

  TEST_CASE("bar_coboundary validates its arguments") {
    CHECK_THROWS_AS(bar_coboundary(0, {0, 0}, 1), std::invalid_argument);
    CHECK_THROWS_AS(bar_coboundary(5, {5, 0}, 1), std::invalid_argument);
    CHECK_THROWS_AS(bar_coboundary(2, {2, 0}, 3), std::invalid_argument);
    CHECK_THROWS_AS(bar_coboundary(4, {4, 0}, 2), std::invalid_argument);
    CHECK_THROWS_AS(bar_coboundary(2, {3, 0}, 1), std::invalid_argument);
  }

  TEST_CASE("consecutive coboundaries compose to zero") {
    for (int n = 1; n <= 3; ++n)
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        const SignCharacter phi{n, static_cast<std::uint8_t>(mask)};
        const auto d0 = bar_coboundary(n, phi, 0), d1 = bar_coboundary(n, phi, 1), d2 = bar_coboundary(n, phi, 2);
        CHECK((d1 * d0).is_zero());
        CHECK((d2 * d1).is_zero());
      }
  }

  TEST_CASE("smith_normal_form examples") {
    const auto a = smith_normal_form(IntMatrix::diagonal({2, 3}));
    CHECK(a.divisors == std::vector<std::int64_t>{1, 6});
    CHECK(a.verify());
    CHECK(smith_normal_form(IntMatrix::identity(3)).divisors == std::vector<std::int64_t>{1, 1, 1});
    CHECK(smith_normal_form(from_rows({{2}})).divisors == std::vector<std::int64_t>{2});
    CHECK(smith_normal_form(IntMatrix(2, 3)).divisors.empty());
    const auto b = smith_normal_form(from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
    CHECK(b.divisors == std::vector<std::int64_t>{2, 6, 12});
    CHECK(b.verify());
  }

  TEST_CASE("smith_normal_form certificates on random matrices") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
      const auto r = 1 + rng() % 7, c = 1 + rng() % 7;
      const auto m = random_matrix(r, c, rng, 6);
      const auto s = smith_normal_form(m);
      REQUIRE(s.has_certificates);
      CHECK(s.verify());
      CHECK(s.u * m * s.v == s.diagonal);
      CHECK(std::abs(determinant(s.u)) == 1);
      CHECK(std::abs(determinant(s.v)) == 1);
      for (std::size_t i = 1; i < s.divisors.size(); ++i) CHECK(s.divisors[i] % s.divisors[i - 1] == 0);
      const auto bare = smith_normal_form(m, false);
      CHECK_FALSE(bare.has_certificates);
      CHECK(bare.divisors == s.divisors);
    }
  }

  TEST_CASE("smith_normal_form reports overflow") {
    constexpr std::int64_t big = std::int64_t{1} << 62;
    CHECK_THROWS_AS(smith_normal_form(from_rows({{big, big - 1}, {big - 1, -big}})), OverflowError);
  }

  TEST_CASE("h2_of_character examples") {
    CHECK(h2_of_character(1, {1, 0}).torsion == std::vector<std::int64_t>{2});
    CHECK(h2_of_character(1, {1, 1}).torsion.empty());
    CHECK(h2_of_character(1, {1, 1}).to_string() == "0");
    CHECK(h2_of_character(2, {2, 0b10}).torsion == std::vector<std::int64_t>{2});
    const auto h = h2_of_character(3, {3, 0});
    CHECK(h.torsion == std::vector<std::int64_t>{2, 2, 2});
    CHECK(h.free_rank == 0);
    CHECK(h.to_string() == "Z/2 + Z/2 + Z/2");
  }

  TEST_CASE("verify_appendix for n <= 3") {
    CHECK(verify_appendix(1));
    CHECK(verify_appendix(2));
    CHECK(verify_appendix(3));
    CHECK_THROWS_AS(verify_appendix(4), std::invalid_argument);
  }

  TEST_CASE("H^2 is invariant under permuting the character mask") {
    std::vector<int> perm{0, 1, 2};
    for (unsigned mask = 0; mask < 8; ++mask) {
      const auto base = h2_of_character(3, {3, static_cast<std::uint8_t>(mask)});
      std::sort(perm.begin(), perm.end());
      do {
        const auto h = h2_of_character(3, {3, permute_mask(static_cast<std::uint8_t>(mask), perm)});
        CHECK(h.free_rank == base.free_rank);
        CHECK(h.torsion == base.torsion);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }

  TEST_CASE("rank 4 characters give elementary abelian H^2") {
    const auto trivial = h2_of_character(4, {4, 0}, true);
    CHECK(trivial.torsion == std::vector<std::int64_t>(4, 2));
    const auto sign = h2_of_character(4, {4, 0b0101}, true);
    CHECK(sign.torsion == std::vector<std::int64_t>(3, 2));
    CHECK(sign.free_rank == 0);
  }

  TEST_CASE("is_coboundary") {
    std::mt19937_64 rng(43);
    for (int n = 1; n <= 3; ++n)
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        const SignCharacter phi{n, static_cast<std::uint8_t>(mask)};
        const auto d1 = bar_coboundary(n, phi, 1);
        std::uniform_int_distribution<int> d(-5, 5);
        std::vector<std::int64_t> lambda(d1.cols());
        for (auto& x : lambda) x = d(rng);
        const auto f = d1.apply(lambda);
        const auto witness = is_coboundary(n, phi, f);
        REQUIRE(witness.has_value());
        CHECK(d1.apply(*witness) == f);
      }

    // f(g, g) = 1 generates H^2 = Z/2 for the trivial character of rank 1.
    CHECK_FALSE(is_coboundary(1, {1, 0}, {0, 0, 0, 1}).has_value());
    CHECK(is_coboundary(1, {1, 0}, {0, 0, 0, 2}).has_value());
  }

  TEST_CASE("twice the Klein cocycle is a coboundary in each coordinate") {
    const auto k = BottMatrix::from_rows({"01", "00"});
    const auto table = extension_cocycle(k);
    bool some_nontrivial = false;
    for (int i = 0; i < 2; ++i) {
      const auto phi = coordinate_character(k, i);
      auto f = cocycle_coordinate(table, i);
      some_nontrivial = some_nontrivial || !is_coboundary(2, phi, f).has_value();
      for (auto& x : f) x *= 2;
      CHECK(is_coboundary(2, phi, f).has_value());
    }
    // The Klein group is not split, so some coordinate class is nonzero.
    CHECK(some_nontrivial);
  }

  TEST_CASE("twice every cocycle coordinate is a coboundary for n <= 4") {
    for (int n = 1; n <= 4; ++n)
      for (auto a : enumerate_all(n)) {
        const auto table = extension_cocycle(a);
        for (int i = 0; i < n; ++i) {
          auto f = cocycle_coordinate(table, i);
          for (auto& x : f) x *= 2;
          CHECK(is_coboundary(n, coordinate_character(a, i), f).has_value());
        }
      }
  }
}
