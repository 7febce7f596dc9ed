#include <catch_amalgamated.hpp>

#include <random>

#include <octacat/matrix_rep.hpp>

using namespace octacat;

namespace {

const PolyQ t = PolyQ::t();

std::vector<std::size_t> digits(std::size_t x, std::size_t base, std::size_t len) {
  std::vector<std::size_t> d(len);
  for (std::size_t i = len; i-- > 0; x /= base) d[i] = x % base;
  return d;
}

std::size_t power(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

// δ_p straight from the definition: same block means same index.
MatrixQ delta_oracle(const Partition& p, std::size_t n) {
  std::size_t k = p.bottom(), l = p.top();
  MatrixQ m(power(n, l), power(n, k));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      auto in = digits(c, n, k), out = digits(r, n, l);
      std::vector<std::size_t> label(in);
      label.insert(label.end(), out.begin(), out.end());
      bool ok = true;
      for (std::size_t a = 0; a < k + l; ++a)
        for (std::size_t b = 0; b < k + l; ++b)
          if (p.block_at(a) == p.block_at(b) && label[a] != label[b]) ok = false;
      if (ok) m.set(r, c, 1);
    }
  return m;
}

// δ_(p,z): same block means same i-label and same product of colour and z.
MatrixQ colored_delta_oracle(const ColoredPartition& cp, std::size_t n) {
  const Partition& p = cp.base();
  std::size_t k = p.bottom(), l = p.top(), dim = 2 * n;
  MatrixQ m(power(dim, l), power(dim, k));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      auto in = digits(c, dim, k), out = digits(r, dim, l);
      std::vector<std::size_t> label(in);
      label.insert(label.end(), out.begin(), out.end());
      bool ok = true;
      for (std::size_t a = 0; a < k + l; ++a)
        for (std::size_t b = 0; b < k + l; ++b) {
          if (p.block_at(a) != p.block_at(b)) continue;
          int ca = label[a] % 2 == 0 ? 1 : -1, cb = label[b] % 2 == 0 ? 1 : -1;
          if (label[a] / 2 != label[b] / 2 || ca * cp.label_at(a) != cb * cp.label_at(b)) ok = false;
        }
      if (ok) m.set(r, c, 1);
    }
  return m;
}

// Rank of Σ_g ρ(g)^{⊗m}, built densely.
std::size_t averaged_rank(const RepSpec& spec, std::size_t m) {
  std::size_t size = power(spec.dim(), m);
  MatrixQ acc(size, size);
  for (const auto& g : all_elements(spec.n)) acc += kron_power(rho(g, spec), m);
  return rank(acc);
}

}  // namespace

TEST_CASE("hyperoctahedral group") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto all = all_elements(n);
    std::size_t fact = 1;
    for (std::size_t i = 2; i <= n; ++i) fact *= i;
    CHECK(all.size() == (std::size_t{1} << n) * fact);
    for (RepKind kind : {RepKind::Reflection, RepKind::Permutation}) {
      RepSpec spec{kind, n};
      for (std::size_t i = 0; i < all.size(); i += 3)
        for (std::size_t j = 0; j < all.size(); j += 5) {
          CHECK(rho(all[i] * all[j], spec) == rho(all[i], spec) * rho(all[j], spec));
        }
      for (const auto& g : all) CHECK(rho(g * inverse(g), spec) == MatrixQ::identity(spec.dim()));
    }
  }
}

TEST_CASE("T matches the delta definition") {
  for (std::size_t n : {2, 3})
    for (std::size_t m = 0; m <= 4; m += 2)
      for (std::size_t k = 0; k <= m; ++k)
        for (const auto& p : enumerate_even(k, m - k)) CHECK(T_even(p, n) == delta_oracle(p, n));
  for (std::size_t m = 0; m <= 3; ++m)
    for (std::size_t k = 0; k <= m; ++k)
      for (const auto& c : enumerate_colored(k, m - k)) CHECK(T_colored(c, 2) == colored_delta_oracle(c, 2));
  CHECK(T_even(identity_partition(1), 3) == MatrixQ::identity(3));
  MatrixQ cap = T_even(parse_partition("2>0: {1,2}"), 2);
  CHECK(cap.rows() == 1);
  CHECK(cap.get(0, 0) == 1);
  CHECK(cap.get(0, 3) == 1);
  CHECK(cap.nonzeros() == 2);
  CHECK_THROWS_AS(T_even(parse_partition("2>1: {1,2,1'}"), 2), NotEven);
}

TEST_CASE("coloured T examples") {
  CHECK(T_colored(ColoredPartition(identity_partition(1)), 2) == MatrixQ::identity(4));
  MatrixQ swap(2, 2);
  swap.set(0, 1, 1);
  swap.set(1, 0, 1);
  CHECK(T_colored(parse_colored("1>1: {1,1':-1}"), 1) == swap);
  CHECK(T_colored(ColoredPartition(identity_partition(1), {1, -1}), 2) ==
        T_colored(ColoredPartition(identity_partition(1), {-1, 1}), 2));
}

TEST_CASE("equivariance") {
  for (std::size_t n = 1; n <= 3; ++n) {
    RepSpec refl{RepKind::Reflection, n}, perm{RepKind::Permutation, n};
    for (std::size_t m = 0; m <= 3; ++m)
      for (std::size_t k = 0; k <= m; ++k) {
        for (const auto& p : enumerate_even(k, m - k)) CHECK(all_pass(equivariance_check(T_even(p, n), k, m - k, refl)));
        if (n <= 2)
          for (const auto& c : enumerate_colored(k, m - k))
            CHECK(all_pass(equivariance_check(T_colored(c, n), k, m - k, perm)));
      }
  }
  // A non-equivariant 0/1 matrix.
  MatrixQ bad(2, 2);
  bad.set(0, 0, 1);
  CHECK_FALSE(all_pass(equivariance_check(bad, 1, 1, {RepKind::Reflection, 2})));
  // The symmetric-group δ of an odd block is not sign-equivariant.
  CHECK_FALSE(all_pass(equivariance_check(T_uncolored(parse_partition("1>0: {1}"), 2), 1, 0,
                                          {RepKind::Reflection, 2})));
}

TEST_CASE("hom_dim against averaging and character oracles") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (RepKind kind : {RepKind::Reflection, RepKind::Permutation}) {
      RepSpec spec{kind, n};
      for (std::size_t m = 0; m <= 4; ++m) {
        if (power(spec.dim(), m) > 256) continue;
        std::size_t h = hom_dim(spec, m, 0);
        CHECK(h == averaged_rank(spec, m));
        CHECK(Rational(static_cast<long>(h)) == hom_dim_by_trace(spec, m, 0));
        CHECK(hom_dim(spec, m / 2, m - m / 2) == h);
      }
    }
  CHECK(hom_dim({RepKind::Reflection, 2}, 1, 1) == 1);
  CHECK(hom_dim({RepKind::Permutation, 3}, 1, 1) == 3);
  CHECK_THROWS_AS(hom_dim({RepKind::Reflection, 5}, 1, 1), TooLarge);
  CHECK_THROWS_AS(hom_dim({RepKind::Permutation, 4}, 2, 3), TooLarge);
}

TEST_CASE("functors G and H") {
  CHECK(functor_G(Morphism<Partition>::identity(2, t), 3) == MatrixQ::identity(9));
  std::mt19937_64 rng(12);
  for (int i = 0; i < 50; ++i) {
    std::size_t k = rng() % 4, l = rng() % 4, m = rng() % 4;
    if ((k + l) % 2) ++l;
    if ((l + m) % 2) ++m;
    auto pb = enumerate_even(k, l), qb = enumerate_even(l, m);
    Morphism<Partition> f(pb[rng() % pb.size()], t, PolyQ(Rational(static_cast<long>(rng() % 5) - 2)));
    f += Morphism<Partition>(pb[rng() % pb.size()], t, t);
    Morphism<Partition> g(qb[rng() % qb.size()], t);
    CHECK(functor_G(compose(g, f), 2) == functor_G(g, 2) * functor_G(f, 2));
  }
  Morphism<ColoredPartition> cc(parse_colored("2>0: {1,2}"), t * Rational(2));
  CHECK(functor_H(cc, 2).nonzeros() == 4);
  CHECK_THROWS_AS(functor_G(Morphism<Partition>::identity(1, t), 2, Rational(3)), SpecializationMismatch);
  CHECK_THROWS_AS(functor_H(cc, 2, Rational(4)), SpecializationMismatch);
}

TEST_CASE("the splitting of e") {
  for (std::size_t n = 1; n <= 3; ++n) {
    CHECK(pi(n) * iota(n) == MatrixQ::identity(n));
    MatrixQ e = iota(n) * pi(n);
    CHECK(e * e == e);
    Morphism<ColoredPartition> id1(ColoredPartition(identity_partition(1)), t * Rational(2));
    Morphism<ColoredPartition> tok(parse_colored("1>1: {1,1':-1}"), t * Rational(2));
    auto eprime = (id1 - tok) * PolyQ(Rational(1, 2));
    CHECK(functor_H(eprime, n) == e);
    KaroubiObject<ColoredPartition> x(1, eprime);
    CHECK(karoubi_image_dim(x, n, Rational(static_cast<long>(n))) == n);
    CHECK(functor_H(KaroubiMorphism<ColoredPartition>::identity(x), n, Rational(static_cast<long>(n))) ==
          MatrixQ::identity(n));
  }
}

TEST_CASE("matrix data satisfy their universal properties") {
  for (std::size_t n : {1, 2, 3}) {
    for (const auto& c : verify_datum(h_dblprime_datum(n))) {
      INFO(c.to_text());
      CHECK(c.pass);
    }
    for (const auto& c : verify_datum(g_dblprime_datum(n))) {
      INFO(c.to_text());
      CHECK(c.pass);
    }
  }
  // The matrix data agree with T on canonical words.
  for (std::size_t m = 0; m <= 3; ++m)
    for (std::size_t k = 0; k <= m; ++k)
      for (const auto& c : enumerate_colored(k, m - k)) {
        auto w = canonical_word_colored(c);
        CHECK(eval_in_target(w, h_dblprime_datum(2)) == T_colored(c, 2));
      }
  for (std::size_t m = 0; m <= 4; m += 2)
    for (std::size_t k = 0; k <= m; ++k)
      for (const auto& p : enumerate_even(k, m - k))
        CHECK(eval_in_target(canonical_word(p), g_dblprime_datum(3)) == T_even(p, 3));
}
