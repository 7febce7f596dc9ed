#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diagrams.hpp"
#include "karoubi.hpp"
#include "linalg.hpp"
#include "matrix_rep.hpp"
#include "morphism.hpp"
#include "report.hpp"

namespace octacat {

using EvenMorphism = Morphism<Partition>;
using ColoredMorphism = Morphism<ColoredPartition>;

/// Loop weight of the codomain of Ω: twice the source weight.
inline PolyQ doubled(const PolyQ& w) { return w * Rational(2); }

inline ColoredMorphism token_strand(Sign g, const PolyQ& w) {
  return ColoredMorphism(ColoredPartition(identity_partition(1), {1, g}), w);
}

/// ½(strand − signed strand).
inline ColoredMorphism e_prime(const PolyQ& w = doubled(PolyQ::t())) {
  return (token_strand(1, w) - token_strand(-1, w)) * PolyQ(Rational(1, 2));
}

/// ½(strand + signed strand) = id − e′.
inline ColoredMorphism e_dblprime(const PolyQ& w = doubled(PolyQ::t())) {
  return (token_strand(1, w) + token_strand(-1, w)) * PolyQ(Rational(1, 2));
}

inline ColoredMorphism e_prime_power(std::size_t k, const PolyQ& w = doubled(PolyQ::t())) {
  ColoredMorphism acc = ColoredMorphism::identity(0, w);
  ColoredMorphism e = e_prime(w);
  for (std::size_t i = 0; i < k; ++i) acc = tensor(acc, e);
  return acc;
}

/// (e′)^{⊗l} ∘ g ∘ (e′)^{⊗k}.
inline ColoredMorphism compress(const ColoredMorphism& g) {
  const PolyQ& w = g.loop_weight();
  return compose(e_prime_power(g.target(), w), compose(g, e_prime_power(g.source(), w)));
}

/// Exponent ((Σ m_i) − 2s)/2 for an even partition with block sizes m_i.
inline std::size_t omega_exponent(const Partition& p) {
  if (!p.is_even()) throw NotEven("Ω₀ scaling of a non-even diagram");
  return p.vertex_count() / 2 - p.block_count();
}

/// Ω₀ on morphisms, as a raw morphism of Par(Z₂, 2w); each basis diagram is
/// scaled by its own block count.
inline ColoredMorphism omega0_raw(const EvenMorphism& f) {
  PolyQ w = doubled(f.loop_weight());
  ColoredMorphism out = ColoredMorphism::zero(f.source(), f.target(), w);
  ColoredMorphism lo = e_prime_power(f.source(), w);
  ColoredMorphism hi = e_prime_power(f.target(), w);
  for (const auto& [p, c] : f.terms()) {
    Rational scale = 1;
    for (std::size_t i = 0; i < omega_exponent(p); ++i) scale *= 2;
    ColoredMorphism d(ColoredPartition(p), w, c * PolyQ(scale));
    out += compose(hi, compose(d, lo));
  }
  return out;
}

inline KaroubiObject<ColoredPartition> omega0_object(std::size_t k, const PolyQ& w = PolyQ::t()) {
  return KaroubiObject<ColoredPartition>(k, e_prime_power(k, doubled(w)));
}

inline KaroubiMorphism<ColoredPartition> omega0(const EvenMorphism& f) {
  auto src = omega0_object(f.source(), f.loop_weight());
  auto dst = omega0_object(f.target(), f.loop_weight());
  return KaroubiMorphism<ColoredPartition>::assemble(src, dst, {{omega0_raw(f)}});
}

/// Ω((⊕ ([k_i], e_i))) = ⊕ ([k̃_i], Ω₀(e_i)).
inline KaroubiObject<ColoredPartition> omega(const KaroubiObject<Partition>& x) {
  std::vector<Summand<ColoredPartition>> out;
  for (const auto& s : x.summands()) out.push_back({s.k, omega0_raw(s.e)});
  return KaroubiObject<ColoredPartition>(std::move(out));
}

inline KaroubiMorphism<ColoredPartition> omega(const KaroubiMorphism<Partition>& f) {
  auto src = omega(f.source());
  auto dst = omega(f.target());
  std::vector<std::vector<ColoredMorphism>> entries(dst.size());
  for (std::size_t j = 0; j < dst.size(); ++j)
    for (std::size_t i = 0; i < src.size(); ++i) entries[j].push_back(omega0_raw(f.entry(j, i)));
  return KaroubiMorphism<ColoredPartition>::assemble(src, dst, std::move(entries));
}

// ---------------------------------------------------------------------------
// Verification batteries

namespace detail {

inline std::map<ColoredPartition, PolyQ> as_vector(const ColoredMorphism& f) {
  return {f.terms().begin(), f.terms().end()};
}

/// The scalar c with a = c·b, if one exists and b ≠ 0.
inline std::optional<Rational> proportionality(const MatrixQ& a, const MatrixQ& b) {
  for (std::size_t r = 0; r < b.rows(); ++r) {
    if (b.row(r).empty()) continue;
    const auto& [col, v] = *b.row(r).begin();
    Rational c = a.get(r, col) / v;
    if (a == b * c) return c;
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace detail

/// Faithfulness: {Ω₀(p)} is independent. Fullness: the compressions of all
/// coloured diagrams span a space of rank |P_even(k,l)| inside span{Ω₀(p)}.
inline Report verify_full_faithful(std::size_t k, std::size_t l, std::uint64_t seed = 1) {
  const PolyQ t = PolyQ::t();
  auto even = enumerate_even(k, l);
  std::vector<std::map<ColoredPartition, PolyQ>> images, compressions;
  for (const auto& p : even) images.push_back(detail::as_vector(omega0_raw(EvenMorphism(p, t))));
  for (const auto& c : enumerate_colored(k, l))
    compressions.push_back(detail::as_vector(compress(ColoredMorphism(c, doubled(t)))));

  Report report;
  nlohmann::json params{{"k", k}, {"l", l}, {"seed", seed}, {"expected_rank", even.size()}};

  auto faithful = rank_over_rational_functions(images, seed);
  CheckResult a;
  a.check = "omega:faithful";
  a.params = params;
  a.params["rank"] = faithful.rank;
  a.pass = faithful.rank == even.size() && faithful.agreed;
  if (!a.pass) a.counterexample = nlohmann::json{{"ranks_at_points", faithful.ranks_at_points}};
  report.push_back(a);

  auto full = rank_over_rational_functions(compressions, seed);
  // Span containment at every specialization point used above.
  bool contained = true;
  for (const Rational& x : full.points) {
    EchelonBasis<ColoredPartition> basis;
    auto at = [&](const std::map<ColoredPartition, PolyQ>& v) {
      std::map<ColoredPartition, Rational> s;
      for (const auto& [key, p] : v)
        if (Rational y = p.eval(x); y != 0) s.emplace(key, y);
      return s;
    };
    for (const auto& v : images) basis.insert(at(v));
    for (const auto& v : compressions)
      if (!basis.contains(at(v))) contained = false;
  }
  CheckResult b;
  b.check = "omega:full";
  b.params = params;
  b.params["rank"] = full.rank;
  b.params["coloured_basis"] = compressions.size();
  b.pass = full.rank == even.size() && full.agreed && contained;
  if (!b.pass)
    b.counterexample = nlohmann::json{{"ranks_at_points", full.ranks_at_points}, {"contained", contained}};
  report.push_back(b);
  return report;
}

/// The decomposition [1̃] ≅ Ω([1]) ⊕ Ω(([2], FOURLEGS)) with explicit maps.
struct EssSurjWitness {
  ColoredMorphism e1;     // e′
  ColoredMorphism e2;     // e″
  ColoredMorphism E;      // 2 (e′⊗e′) ∘ FOURLEGS ∘ (e′⊗e′)
  ColoredMorphism alpha;  // E ∘ (2 split) ∘ e″
  ColoredMorphism beta;   // e″ ∘ merge ∘ E
};

inline EssSurjWitness ess_surj_maps(const PolyQ& t = PolyQ::t()) {
  PolyQ w = doubled(t);
  EssSurjWitness x{e_prime(w), e_dblprime(w), ColoredMorphism::zero(2, 2, w), ColoredMorphism::zero(1, 2, w),
                   ColoredMorphism::zero(2, 1, w)};
  x.E = omega0_raw(EvenMorphism(one_block(2, 2), t));
  ColoredMorphism split(parse_colored("1>2: {1,1',2'}"), w, PolyQ(2L));
  ColoredMorphism merge(parse_colored("2>1: {1,2,1'}"), w);
  x.alpha = compose(x.E, compose(split, x.e2));
  x.beta = compose(x.e2, compose(merge, x.E));
  return x;
}

inline Report ess_surj_witness(const PolyQ& t = PolyQ::t()) {
  auto x = ess_surj_maps(t);
  PolyQ w = doubled(t);
  Report report;
  auto add = [&](const std::string& name, const ColoredMorphism& lhs, const ColoredMorphism& rhs) {
    CheckResult c;
    c.check = "omega:ess-surj:" + name;
    c.pass = lhs == rhs;
    if (!c.pass) c.counterexample = nlohmann::json{{"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}};
    report.push_back(std::move(c));
  };
  add("compressed fourlegs idempotent", compose(x.E, x.E), x.E);
  add("beta∘alpha = e''", compose(x.beta, x.alpha), x.e2);
  add("alpha∘beta = compressed identity", compose(x.alpha, x.beta), x.E);
  add("e' + e'' = id", x.e1 + x.e2, ColoredMorphism::identity(1, w));
  add("e'∘e'' = 0", compose(x.e1, x.e2), ColoredMorphism::zero(1, 1, w));
  add("alpha∘e' = 0", compose(x.alpha, x.e1), ColoredMorphism::zero(1, 2, w));
  add("e'∘beta = 0", compose(x.e1, x.beta), ColoredMorphism::zero(2, 1, w));
  add("dim(([1~],e')) = t", ColoredMorphism(ColoredPartition(identity_partition(0)), w, trace(x.e1)),
      ColoredMorphism(ColoredPartition(identity_partition(0)), w, t));
  return report;
}

/// π^{⊗l} · H(Ω₀(f)) · ι^{⊗k} = G(f) at t = n, for every even basis diagram with k, l ≤ kmax.
inline Report verify_square(std::size_t n, std::size_t kmax) {
  Report report;
  const PolyQ t = PolyQ::t();
  Rational tn(static_cast<long>(n));
  MatrixQ io = iota(n), pr = pi(n);
  std::vector<MatrixQ> io_pow{MatrixQ::identity(1)}, pr_pow{MatrixQ::identity(1)};
  for (std::size_t i = 0; i < kmax; ++i) {
    io_pow.push_back(kron(io_pow.back(), io));
    pr_pow.push_back(kron(pr_pow.back(), pr));
  }
  for (std::size_t k = 0; k <= kmax; ++k) {
    for (std::size_t l = 0; l <= kmax; ++l) {
      CheckResult c;
      c.check = "omega:square";
      c.params = {{"n", n}, {"k", k}, {"l", l}};
      std::size_t count = 0;
      for (const auto& p : enumerate_even(k, l)) {
        ++count;
        EvenMorphism f(p, t);
        MatrixQ lhs = pr_pow[l] * functor_H(omega0_raw(f), n, tn) * io_pow[k];
        MatrixQ rhs = functor_G(f, n, tn);
        if (!(lhs == rhs) && c.pass) {
          c.pass = false;
          c.counterexample = nlohmann::json{{"diagram", to_string(p)}};
          if (auto r = detail::proportionality(lhs, rhs)) (*c.counterexample)["lhs_over_rhs"] = to_string(*r);
        }
      }
      c.params["diagrams"] = count;
      report.push_back(std::move(c));
    }
  }
  return report;
}

}  // namespace octacat
