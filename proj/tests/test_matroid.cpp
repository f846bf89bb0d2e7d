#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>
#include <vector>

#include "multibetti/bounds.hpp"
#include "multibetti/matrix.hpp"
#include "multibetti/matroid.hpp"

using namespace multibetti;

namespace {

ExactMatrix<RationalField> columns(std::initializer_list<std::initializer_list<int>> cols) {
  const RationalField f;
  const std::size_t n = cols.size();
  const std::size_t r = n == 0 ? 0 : cols.begin()->size();
  ExactMatrix<RationalField> m(f, r, n);
  std::size_t j = 0;
  for (const auto& col : cols) {
    std::size_t i = 0;
    for (int v : col) m.at(i++, j) = f.from_int(v);
    ++j;
  }
  return m;
}

// every r columns independent: Vandermonde at nodes 0..n-1
Matroid uniform_matroid(std::size_t r, std::size_t n) {
  const RationalField f;
  ExactMatrix<RationalField> m(f, r, n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational power = 1;
    for (std::size_t i = 0; i < r; ++i) {
      m.at(i, j) = power;
      power *= static_cast<int>(j);
    }
  }
  return matroid_from_matrix(m);
}

// columns (1,0),(0,1),(1,1),(1,0): one parallel pair, rank 2
Matroid parallel_example() {
  return matroid_from_matrix(columns({{1, 0}, {0, 1}, {1, 1}, {1, 0}}));
}

std::vector<std::size_t> all_ranks(const Matroid& m) {
  std::vector<std::size_t> r(std::size_t{1} << m.size());
  for (std::uint32_t s = 0; s < r.size(); ++s) r[s] = m.rank_of(SubsetMask(s));
  return r;
}

}  // namespace

TEST_CASE("rank oracle basics on the parallel-pair example") {
  const Matroid m = parallel_example();
  CHECK(m.size() == 4);
  CHECK(m.full_rank() == 2);
  CHECK(m.rank_of(SubsetMask::of({0, 3})) == 1);
  CHECK(m.rank_of(SubsetMask::of({0, 1})) == 2);
  CHECK(m.level(SubsetMask::of({0, 3})) == 0);
  CHECK(m.level(SubsetMask::of({0, 1, 2})) == 0);
  CHECK(m.level(SubsetMask::of({0, 1, 2, 3})) == 1);
  CHECK_THROWS_AS(m.rank_of(SubsetMask::of({4})), Error);
}

TEST_CASE("circuits are the minimal dependent sets, canonically ordered") {
  const Matroid m = parallel_example();
  const auto c = m.circuits();
  REQUIRE(c.size() == 3);
  CHECK(c[0] == SubsetMask::of({0, 3}));
  CHECK(c[1] == SubsetMask::of({0, 1, 2}));
  CHECK(c[2] == SubsetMask::of({1, 2, 3}));
}

TEST_CASE("a zero column is a loop and a singleton circuit") {
  const Matroid m = matroid_from_matrix(columns({{1, 0}, {0, 0}, {0, 1}}));
  const auto c = m.circuits();
  REQUIRE(!c.empty());
  CHECK(c[0] == SubsetMask::of({1}));
  CHECK(m.rank_of(SubsetMask::of({1})) == 0);
}

TEST_CASE("flats collect their parallel copies") {
  const Matroid m = parallel_example();
  const auto f0 = m.flats_of_rank(0);
  REQUIRE(f0.size() == 1);
  CHECK(f0[0] == SubsetMask{});
  const auto f1 = m.flats_of_rank(1);
  REQUIRE(f1.size() == 3);
  CHECK(f1[0] == SubsetMask::of({1}));
  CHECK(f1[1] == SubsetMask::of({2}));
  CHECK(f1[2] == SubsetMask::of({0, 3}));
  CHECK(m.flats_of_rank(2) == std::vector<SubsetMask>{SubsetMask::of({0, 1, 2, 3})});
  CHECK(m.flats_of_rank(3).empty());
  CHECK(m.is_flat(SubsetMask::of({0, 3})));
  CHECK(!m.is_flat(SubsetMask::of({0})));
}

TEST_CASE("rank axioms hold exhaustively on represented matroids") {
  std::mt19937 rng(5150);
  const PrimeField f(10007);
  std::vector<Matroid> corpus{parallel_example(), uniform_matroid(2, 5),
                              uniform_matroid(3, 6)};
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t r = 1 + rng() % 3, n = 1 + rng() % 6;
    std::uniform_int_distribution<int> dist(-3, 3);
    ExactMatrix<PrimeField> m(f, r, n);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = f.from_int(dist(rng));
    corpus.push_back(matroid_from_matrix(m));
  }
  for (const Matroid& m : corpus) {
    const auto rk = all_ranks(m);
    const std::size_t subsets = rk.size();
    CHECK(rk[0] == 0);
    for (std::uint32_t s = 0; s < subsets; ++s) {
      CHECK(rk[s] <= SubsetMask(s).count());
      for (std::size_t e = 0; e < m.size(); ++e) {
        const std::uint32_t with = s | (std::uint32_t{1} << e);
        CHECK(rk[s] <= rk[with]);
        CHECK(rk[with] <= rk[s] + 1);
      }
    }
    for (std::uint32_t s = 0; s < subsets; ++s)
      for (std::uint32_t t = 0; t < subsets; ++t)
        CHECK(rk[s | t] + rk[s & t] <= rk[s] + rk[t]);
  }
}

TEST_CASE("dual rank, involution, and basis complementation") {
  std::vector<Matroid> corpus{parallel_example(), uniform_matroid(1, 4),
                              uniform_matroid(2, 5), uniform_matroid(3, 5)};
  for (const Matroid& m : corpus) {
    const std::size_t n = m.size(), r = m.full_rank();
    const Matroid dual = m.dual();
    const Matroid back = dual.dual();
    CHECK(dual.full_rank() == n - r);
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
      const SubsetMask a(s);
      CHECK(back.rank_of(a) == m.rank_of(a));
      CHECK(dual.rank_of(a) == a.count() - r + m.rank_of(a.complement_within(n)));
      if (a.count() == n - r)
        CHECK((dual.rank_of(a) == n - r) ==
              (m.rank_of(a.complement_within(n)) == r));
    }
  }
}

TEST_CASE("uniform duals are uniform of complementary rank") {
  const Matroid dual = uniform_matroid(2, 5).dual();
  for (std::uint32_t s = 0; s < 32; ++s) {
    const SubsetMask a(s);
    CHECK(dual.rank_of(a) == std::min<std::size_t>(a.count(), 3));
  }
}

TEST_CASE("level-0 T-flats are exactly the circuits") {
  std::vector<Matroid> corpus{parallel_example(), uniform_matroid(2, 5),
                              matroid_from_matrix(columns({{1, 0}, {0, 0}, {0, 1}}))};
  for (const Matroid& m : corpus) CHECK(m.tflats_of_level(0) == m.circuits());
}

TEST_CASE("T-flats biject with complements of dual flats") {
  std::vector<Matroid> corpus{parallel_example(), uniform_matroid(2, 5),
                              uniform_matroid(3, 6)};
  for (const Matroid& m : corpus) {
    const std::size_t n = m.size(), r = m.full_rank();
    const Matroid dual = m.dual();
    for (int k = 0; static_cast<std::size_t>(k) + 1 <= n; ++k) {
      const auto tf = m.tflats_of_level(k);
      const long long target = static_cast<long long>(n) - static_cast<long long>(r) - k - 1;
      std::set<SubsetMask> complements;
      for (SubsetMask a : tf) {
        CHECK(m.level(a) == k);
        CHECK(dual.is_flat(a.complement_within(n)));
        complements.insert(a.complement_within(n));
      }
      if (target >= 0) {
        const auto df = dual.flats_of_rank(static_cast<std::size_t>(target));
        std::set<SubsetMask> proper(df.begin(), df.end());
        proper.erase(SubsetMask::full(n));
        CHECK(complements == proper);
      } else {
        CHECK(tf.empty());
      }
    }
  }
}

TEST_CASE("T-flat counts respect the binomial ceiling, sharply when uniform") {
  std::mt19937 rng(99);
  const PrimeField f(10007);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t r = 1 + rng() % 3, n = 2 + rng() % 5;
    std::uniform_int_distribution<int> dist(-5, 5);
    ExactMatrix<PrimeField> grid(f, r, n);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < n; ++j) grid.at(i, j) = f.from_int(dist(rng));
    const Matroid m = matroid_from_matrix(grid);
    for (std::size_t k = 0; k + 1 <= n; ++k)
      CHECK(BigInt(m.tflats_of_level(static_cast<int>(k)).size()) <=
            binomial(static_cast<long long>(n),
                     static_cast<long long>(m.full_rank() + k + 1)));
  }
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t r = 1; r <= n; ++r) {
      const Matroid u = uniform_matroid(r, n);
      for (std::size_t k = 0; k + 1 <= n; ++k)
        CHECK(BigInt(u.tflats_of_level(static_cast<int>(k)).size()) ==
              binomial(static_cast<long long>(n), static_cast<long long>(r + k + 1)));
    }
}

TEST_CASE("enumerations refuse oversized ground sets") {
  const RationalField f;
  ExactMatrix<RationalField> wide(f, 1, 21);
  for (std::size_t j = 0; j < 21; ++j) wide.at(0, j) = f.one();
  const Matroid m = matroid_from_matrix(wide);
  CHECK(m.rank_of(SubsetMask::of({20})) == 1);  // rank oracle still fine
  CHECK_THROWS_AS(m.circuits(), GroundSetTooLarge);
  CHECK_THROWS_AS(m.flats_of_rank(1), GroundSetTooLarge);
  CHECK_THROWS_AS(m.tflats_of_level(0), GroundSetTooLarge);
}
