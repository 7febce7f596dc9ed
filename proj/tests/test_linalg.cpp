#include <catch_amalgamated.hpp>

#include <random>

#include <octacat/linalg.hpp>

using namespace octacat;

namespace {

using Dense = std::vector<std::vector<Rational>>;

// Plain dense Gaussian elimination.
std::size_t dense_rank(Dense a) {
  std::size_t rank = 0, rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      Rational f = a[r][c] / a[rank][c];
      for (std::size_t j = c; j < cols; ++j) a[r][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

MatrixQ random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int density) {
  std::uniform_int_distribution<int> coin(0, density), num(-3, 3);
  MatrixQ m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (coin(rng) == 0) m.set(r, c, Rational(num(rng)));
  return m;
}

Dense to_dense(const MatrixQ& m) {
  Dense d(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) d[r][c] = v;
  return d;
}

}  // namespace

TEST_CASE("products and Kronecker products") {
  MatrixQ a(2, 2), b(2, 1);
  a.set(0, 0, 1);
  a.set(0, 1, 2);
  a.set(1, 1, 3);
  b.set(0, 0, 5);
  b.set(1, 0, 7);
  MatrixQ ab = a * b;
  CHECK(ab.get(0, 0) == 19);
  CHECK(ab.get(1, 0) == 21);
  MatrixQ k = kron(a, b);
  CHECK(k.rows() == 4);
  CHECK(k.cols() == 2);
  // Left factor is the most significant digit.
  CHECK(k.get(1, 1) == a.get(0, 1) * b.get(1, 0));
  CHECK(k.get(2, 1) == a.get(1, 1) * b.get(0, 0));
  CHECK(kron_power(a, 0) == MatrixQ::identity(1));
  CHECK(kron_power(a, 2) == kron(a, a));
  CHECK_THROWS_AS(b * a, SizeMismatch);
  CHECK_THROWS_AS(a + b, SizeMismatch);
  // Mixed-product property.
  std::mt19937_64 rng(1);
  auto p = random_matrix(rng, 2, 3, 1), q = random_matrix(rng, 3, 2, 1);
  auto r = random_matrix(rng, 2, 2, 1), s = random_matrix(rng, 2, 2, 1);
  CHECK(kron(p, r) * kron(q, s) == kron(p * q, r * s));
}

TEST_CASE("rank agrees with dense elimination") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    auto m = random_matrix(rng, 1 + rng() % 6, 1 + rng() % 6, 2);
    CHECK(rank(m) == dense_rank(to_dense(m)));
    CHECK(rref(m).pivots.size() == rank(m));
    CHECK(rank(m.transpose()) == rank(m));
  }
}

TEST_CASE("image splitting of idempotents") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 50; ++i) {
    // E = C (R C)^{-1} R style idempotent: a projection built from a rank factorization.
    auto m = random_matrix(rng, 4, 4, 1);
    auto sp = split_image(m);
    CHECK(sp.include * sp.project == m);
  }
  MatrixQ e(2, 2);
  e.set(0, 0, Rational(1, 2));
  e.set(0, 1, Rational(-1, 2));
  e.set(1, 0, Rational(-1, 2));
  e.set(1, 1, Rational(1, 2));
  REQUIRE(e * e == e);
  auto sp = split_image(e);
  CHECK(sp.project * sp.include == MatrixQ::identity(1));
  CHECK(sp.include * sp.project == e);
}

TEST_CASE("rank over Q(t)") {
  const PolyQ t = PolyQ::t();
  using V = std::map<int, PolyQ>;
  std::vector<V> dependent{{{0, PolyQ(1L)}, {1, t}}, {{0, t}, {1, t * t}}};
  std::vector<V> independent{{{0, PolyQ(1L)}, {1, t}}, {{0, PolyQ(1L)}, {1, t + PolyQ(1L)}}};
  CHECK(rank_over_rational_functions(dependent, 1).rank == 1);
  CHECK(rank_over_rational_functions(independent, 1).rank == 2);
  CHECK(rank_symbolic(dependent) == 1);
  CHECK(rank_symbolic(independent) == 2);
  // Rank drops only at t = 1: (t, 1), (1, t).
  std::vector<V> generic{{{0, t}, {1, PolyQ(1L)}}, {{0, PolyQ(1L)}, {1, t}}};
  auto r = rank_over_rational_functions(generic, 7);
  CHECK(r.rank == 2);
  CHECK(r.agreed);
  CHECK(r.points.size() == 2);

  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> num(-2, 2);
  for (int i = 0; i < 30; ++i) {
    std::vector<V> vs(4);
    for (auto& v : vs)
      for (int k = 0; k < 4; ++k)
        if (PolyQ c = PolyQ::monomial(Rational(num(rng)), rng() % 2) + PolyQ(Rational(num(rng))); !c.is_zero())
          v[k] = c;
    CHECK(rank_symbolic(vs) == rank_over_rational_functions(vs, 3).rank);
  }
}

TEST_CASE("matrix JSON round trip") {
  std::mt19937_64 rng(6);
  auto m = random_matrix(rng, 3, 5, 1) * Rational(1, 3);
  CHECK(matrix_from_json(to_json(m)) == m);
  CHECK_THROWS_AS(matrix_from_json(nlohmann::json{{"rows", 1}}), ParseError);
}
