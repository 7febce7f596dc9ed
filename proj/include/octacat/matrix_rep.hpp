#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "diagrams.hpp"
#include "errors.hpp"
#include "karoubi.hpp"
#include "linalg.hpp"
#include "morphism.hpp"
#include "presentations.hpp"
#include "report.hpp"

namespace octacat {

/// Signed permutation (a, σ) in the hyperoctahedral group H_n.
struct GroupElement {
  std::vector<Sign> signs;
  Permutation perm;

  static GroupElement identity(std::size_t n) { return {std::vector<Sign>(n, 1), identity_permutation(n)}; }

  std::size_t degree() const { return perm.size(); }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// (a, σ)(b, ρ) = (a · (b ∘ σ⁻¹), σρ).
inline GroupElement operator*(const GroupElement& x, const GroupElement& y) {
  std::size_t n = x.degree();
  if (y.degree() != n) throw SizeMismatch("group elements of different degrees");
  Permutation sigma_inv = inverse(x.perm);
  GroupElement out;
  out.signs.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.signs[i] = static_cast<Sign>(x.signs[i] * y.signs[sigma_inv[i]]);
  out.perm = compose(x.perm, y.perm);
  return out;
}

inline GroupElement inverse(const GroupElement& x) {
  // (a, σ)⁻¹ = (a ∘ σ, σ⁻¹)
  GroupElement out;
  out.perm = inverse(x.perm);
  out.signs.resize(x.degree());
  for (std::size_t i = 0; i < x.degree(); ++i) out.signs[i] = x.signs[x.perm[i]];
  return out;
}

/// Sign flips y_i and adjacent transpositions.
inline std::vector<GroupElement> generators(std::size_t n) {
  std::vector<GroupElement> out;
  for (std::size_t i = 0; i < n; ++i) {
    auto g = GroupElement::identity(n);
    g.signs[i] = -1;
    out.push_back(std::move(g));
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    auto g = GroupElement::identity(n);
    std::swap(g.perm[i], g.perm[i + 1]);
    out.push_back(std::move(g));
  }
  return out;
}

/// All 2^n n! elements.
inline std::vector<GroupElement> all_elements(std::size_t n) {
  std::vector<GroupElement> out;
  Permutation p = identity_permutation(n);
  do {
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      GroupElement g{std::vector<Sign>(n, 1), p};
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::size_t{1} << i)) g.signs[i] = -1;
      out.push_back(std::move(g));
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

enum class RepKind { Reflection, Permutation };

struct RepSpec {
  RepKind kind = RepKind::Reflection;
  std::size_t n = 1;

  std::size_t dim() const { return kind == RepKind::Reflection ? n : 2 * n; }
};

/// Flat index of e^i_g (i 0-based): 2i for g = +1, 2i+1 for g = -1.
inline std::size_t perm_index(std::size_t i, Sign g) { return 2 * i + (g == 1 ? 0 : 1); }

/// Image of basis vector `col` under g, as (row, sign).
inline std::pair<std::size_t, Sign> act(const GroupElement& g, const RepSpec& spec, std::size_t col) {
  if (spec.kind == RepKind::Reflection) {
    std::size_t target = g.perm[col];
    return {target, g.signs[target]};
  }
  std::size_t i = col / 2;
  Sign j = col % 2 == 0 ? Sign{1} : Sign{-1};
  std::size_t target = g.perm[i];
  return {perm_index(target, static_cast<Sign>(g.signs[target] * j)), Sign{1}};
}

inline MatrixQ rho(const GroupElement& g, const RepSpec& spec) {
  if (g.degree() != spec.n) throw SizeMismatch("group element degree differs from representation");
  MatrixQ m(spec.dim(), spec.dim());
  for (std::size_t c = 0; c < spec.dim(); ++c) {
    auto [r, s] = act(g, spec, c);
    m.set(r, c, Rational(s));
  }
  return m;
}

// ---------------------------------------------------------------------------
// Interpolation maps

namespace detail {

inline std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

// Calls emit(row, col) for every labelling that is constant on blocks;
// `vertex_label(pos, block_value)` gives the basis index at a vertex.
template <class VertexLabel, class Emit>
void for_each_block_labelling(const Partition& p, std::size_t values, std::size_t dim, VertexLabel vertex_label,
                              Emit emit) {
  std::size_t nb = p.block_count(), k = p.bottom(), l = p.top();
  std::vector<std::size_t> choice(nb, 0);
  while (true) {
    std::size_t col = 0, row = 0;
    for (std::size_t i = 0; i < k; ++i) col = col * dim + vertex_label(i, choice[p.block_at(i)]);
    for (std::size_t j = 0; j < l; ++j) row = row * dim + vertex_label(k + j, choice[p.block_at(k + j)]);
    emit(row, col);
    std::size_t b = 0;
    while (b < nb && ++choice[b] == values) choice[b++] = 0;
    if (b == nb) break;
  }
}

}  // namespace detail

/// δ_p matrix for any partition (the symmetric-group variant), n^k -> n^l.
inline MatrixQ T_uncolored(const Partition& p, std::size_t n) {
  std::size_t dim = n;
  MatrixQ m(detail::ipow(dim, p.top()), detail::ipow(dim, p.bottom()));
  if (n == 0 && p.block_count() > 0) return m;
  detail::for_each_block_labelling(
      p, n, dim, [](std::size_t, std::size_t v) { return v; },
      [&](std::size_t r, std::size_t c) { m.set(r, c, 1); });
  return m;
}

inline MatrixQ T_even(const Partition& p, std::size_t n) {
  if (!p.is_even()) throw NotEven("T_even of non-even diagram " + to_string(p));
  return T_uncolored(p, n);
}

/// δ_(p,z) matrix, (2n)^k -> (2n)^l: a block labelled (b, s) puts e^b_{s z_v} at vertex v.
inline MatrixQ T_colored(const ColoredPartition& c, std::size_t n) {
  const Partition& p = c.base();
  std::size_t dim = 2 * n;
  MatrixQ m(detail::ipow(dim, p.top()), detail::ipow(dim, p.bottom()));
  if (n == 0 && p.block_count() > 0) return m;
  detail::for_each_block_labelling(
      p, 2 * n, dim,
      [&](std::size_t pos, std::size_t v) {
        Sign s = v % 2 == 0 ? Sign{1} : Sign{-1};
        return perm_index(v / 2, static_cast<Sign>(s * c.label_at(pos)));
      },
      [&](std::size_t r, std::size_t col) { m.set(r, col, 1); });
  return m;
}

inline MatrixQ T_diagram(const Partition& p, std::size_t n) { return T_even(p, n); }
inline MatrixQ T_diagram(const ColoredPartition& c, std::size_t n) { return T_colored(c, n); }

inline std::size_t rep_dim(const Partition*, std::size_t n) { return n; }
inline std::size_t rep_dim(const ColoredPartition*, std::size_t n) { return 2 * n; }

/// Σ c(t) T_d at a fixed value of t; no check of the loop weight.
template <class D>
MatrixQ T_morphism(const Morphism<D>& f, std::size_t n, const Rational& t) {
  std::size_t dim = rep_dim(static_cast<const D*>(nullptr), n);
  MatrixQ m(detail::ipow(dim, f.target()), detail::ipow(dim, f.source()));
  for (const auto& [d, c] : f.terms()) {
    Rational x = c.eval(t);
    if (x != 0) m += T_diagram(d, n) * x;
  }
  return m;
}

inline Report equivariance_check(const MatrixQ& T, std::size_t k, std::size_t l, const RepSpec& spec,
                                 const std::string& label = "T") {
  Report report;
  for (const auto& g : generators(spec.n)) {
    MatrixQ r = rho(g, spec);
    CheckResult c;
    c.check = "equivariance";
    nlohmann::json signs = g.signs, perm = g.perm;
    c.params = {{"map", label}, {"k", k}, {"l", l}, {"n", spec.n}, {"signs", signs}, {"perm", perm}};
    c.pass = T * kron_power(r, k) == kron_power(r, l) * T;
    if (!c.pass) c.counterexample = nlohmann::json{{"generator", {{"signs", signs}, {"perm", perm}}}};
    report.push_back(std::move(c));
  }
  return report;
}

/// dim Hom_{H_n}(spec^{⊗k}, spec^{⊗l}) as the rank of the group-averaging projector.
///
/// ρ(g) is a signed permutation matrix, hence orthogonal, so the projector is
/// the average of ρ(g)^{⊗(k+l)}; the 1/|H_n| factor does not change the rank.
inline std::size_t hom_dim(const RepSpec& spec, std::size_t k, std::size_t l) {
  if (spec.n > 4) throw TooLarge("hom_dim needs n <= 4, got n = " + std::to_string(spec.n));
  std::size_t dim = spec.dim(), m = k + l;
  std::size_t size = 1;
  for (std::size_t i = 0; i < m; ++i) {
    size *= dim;
    if (size > 4096) throw TooLarge("hom_dim: tensor power has more than 4096 basis vectors");
  }
  auto group = all_elements(spec.n);
  // Monomial action on each factor, tabulated once per group element.
  std::vector<std::vector<std::pair<std::size_t, Sign>>> action;
  for (const auto& g : group) {
    std::vector<std::pair<std::size_t, Sign>> a;
    for (std::size_t c = 0; c < dim; ++c) a.push_back(act(g, spec, c));
    action.push_back(std::move(a));
  }
  std::vector<char> done(size, 0);
  EchelonBasis<std::size_t> basis;
  std::vector<std::size_t> digits(m);
  for (std::size_t col = 0; col < size; ++col) {
    // Columns in one orbit agree up to sign, so one representative suffices.
    if (done[col]) continue;
    std::map<std::size_t, Rational> v;
    for (std::size_t c = col, i = m; i-- > 0; c /= dim) digits[i] = c % dim;
    for (const auto& a : action) {
      std::size_t row = 0;
      int sign = 1;
      for (std::size_t i = 0; i < m; ++i) {
        auto [r, s] = a[digits[i]];
        row = row * dim + r;
        sign *= s;
      }
      done[row] = 1;
      auto [it, inserted] = v.try_emplace(row, sign);
      if (!inserted) {
        it->second += sign;
        if (it->second == 0) v.erase(it);
      }
    }
    basis.insert(std::move(v));
  }
  return basis.rank();
}

/// (1/|H_n|) Σ χ(g)^{k+l}: the trace of the same projector, used as a cross-check.
inline Rational hom_dim_by_trace(const RepSpec& spec, std::size_t k, std::size_t l) {
  auto group = all_elements(spec.n);
  Rational acc = 0;
  for (const auto& g : group) {
    long chi = 0;
    for (std::size_t c = 0; c < spec.dim(); ++c) {
      auto [r, s] = act(g, spec, c);
      if (r == c) chi += s;
    }
    Rational p = 1;
    for (std::size_t i = 0; i < k + l; ++i) p *= chi;
    acc += p;
  }
  return acc / Rational(static_cast<long>(group.size()));
}

// ---------------------------------------------------------------------------
// Functors G and H

namespace detail {

inline Rational solve_linear(const PolyQ& w, const Rational& value, const char* functor) {
  if (w.degree() != 1)
    throw SpecializationMismatch(std::string(functor) + ": cannot solve loop weight " + w.str() + " for t");
  return (value - w.coeff(0)) / w.coeff(1);
}

template <class D>
void check_specialization(const Morphism<D>& f, std::size_t n, const Rational& t, const char* functor) {
  Rational target = rep_dim(static_cast<const D*>(nullptr), n);
  if (f.loop_weight().eval(t) != target)
    throw SpecializationMismatch(std::string(functor) + ": loop weight " + f.loop_weight().str() + " at t = " +
                                 t.get_str() + " is " + f.loop_weight().eval(t).get_str() + ", expected " +
                                 target.get_str());
}

}  // namespace detail

inline MatrixQ functor_G(const Morphism<Partition>& f, std::size_t n, const Rational& t) {
  detail::check_specialization(f, n, t, "G");
  return T_morphism(f, n, t);
}
inline MatrixQ functor_G(const Morphism<Partition>& f, std::size_t n) {
  return functor_G(f, n, detail::solve_linear(f.loop_weight(), Rational(static_cast<long>(n)), "G"));
}

inline MatrixQ functor_H(const Morphism<ColoredPartition>& f, std::size_t n, const Rational& t) {
  detail::check_specialization(f, n, t, "H");
  return T_morphism(f, n, t);
}
inline MatrixQ functor_H(const Morphism<ColoredPartition>& f, std::size_t n) {
  return functor_H(f, n, detail::solve_linear(f.loop_weight(), Rational(2 * static_cast<long>(n)), "H"));
}

/// Image of a Karoubi object: one rank factorization of T(e) per summand.
template <class D>
std::vector<Splitting> karoubi_splittings(const KaroubiObject<D>& x, std::size_t n, const Rational& t) {
  std::vector<Splitting> out;
  for (const auto& s : x.summands()) {
    detail::check_specialization(s.e, n, t, "Karoubi extension");
    out.push_back(split_image(T_morphism(s.e, n, t)));
  }
  return out;
}

template <class D>
std::size_t karoubi_image_dim(const KaroubiObject<D>& x, std::size_t n, const Rational& t) {
  std::size_t d = 0;
  for (const auto& s : karoubi_splittings(x, n, t)) d += s.include.cols();
  return d;
}

/// Block matrix with block (j, i) = R_j T(g_ji) C_i.
template <class D>
MatrixQ functor_karoubi(const KaroubiMorphism<D>& f, std::size_t n, const Rational& t) {
  auto src = karoubi_splittings(f.source(), n, t);
  auto dst = karoubi_splittings(f.target(), n, t);
  std::vector<std::size_t> col_off{0}, row_off{0};
  for (const auto& s : src) col_off.push_back(col_off.back() + s.include.cols());
  for (const auto& s : dst) row_off.push_back(row_off.back() + s.project.rows());
  MatrixQ out(row_off.back(), col_off.back());
  for (std::size_t j = 0; j < dst.size(); ++j) {
    for (std::size_t i = 0; i < src.size(); ++i) {
      MatrixQ block = dst[j].project * T_morphism(f.entry(j, i), n, t) * src[i].include;
      for (std::size_t r = 0; r < block.rows(); ++r)
        for (const auto& [c, v] : block.row(r)) out.set(row_off[j] + r, col_off[i] + c, v);
    }
  }
  return out;
}

inline MatrixQ functor_G(const KaroubiMorphism<Partition>& f, std::size_t n, const Rational& t) {
  return functor_karoubi(f, n, t);
}
inline MatrixQ functor_H(const KaroubiMorphism<ColoredPartition>& f, std::size_t n, const Rational& t) {
  return functor_karoubi(f, n, t);
}

/// ι: u -> V, e_i ↦ e^i_1 − e^i_{-1}.
inline MatrixQ iota(std::size_t n) {
  MatrixQ m(2 * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.set(perm_index(i, 1), i, 1);
    m.set(perm_index(i, -1), i, -1);
  }
  return m;
}

/// π: V -> u, e^i_1 ↦ ½ e_i, e^i_{-1} ↦ −½ e_i.
inline MatrixQ pi(std::size_t n) {
  MatrixQ m(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    m.set(i, perm_index(i, 1), Rational(1, 2));
    m.set(i, perm_index(i, -1), Rational(-1, 2));
  }
  return m;
}

// ---------------------------------------------------------------------------
// Matrix data for the universal properties

namespace detail {

inline TargetDatum<MatrixQ> matrix_datum(Presentation p, std::size_t dim, Rational t,
                                         std::function<MatrixQ(const Generator&)> gens) {
  TargetDatum<MatrixQ> d;
  d.presentation = p;
  d.identity = [dim](std::size_t k) { return MatrixQ::identity(ipow(dim, k)); };
  d.generator = std::move(gens);
  d.compose = [](const MatrixQ& g, const MatrixQ& f) { return g * f; };
  d.tensor = [](const MatrixQ& f, const MatrixQ& g) { return kron(f, g); };
  d.add = [](const MatrixQ& f, const MatrixQ& g) { return f + g; };
  d.scale = [t](const PolyQ& c, const MatrixQ& f) { return f * c.eval(t); };
  d.equal = [](const MatrixQ& f, const MatrixQ& g) { return f == g; };
  d.difference = [](const MatrixQ& f, const MatrixQ& g) {
    if (f.rows() != g.rows() || f.cols() != g.cols()) return std::string("shapes differ");
    return std::to_string((f - g).nonzeros()) + " differing entries";
  };
  return d;
}

inline MatrixQ swap_matrix(std::size_t dim) {
  MatrixQ m(dim * dim, dim * dim);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) m.set(b * dim + a, a * dim + b, 1);
  return m;
}

}  // namespace detail

/// Frobenius object with involution on V = C^{2n} (t = 2n).
inline TargetDatum<MatrixQ> h_dblprime_datum(std::size_t n) {
  std::size_t dim = 2 * n;
  Rational t(2 * static_cast<long>(n));
  auto gens = [n, dim, t](const Generator& g) -> MatrixQ {
    switch (g.kind) {
      case Gen::Merge: {
        MatrixQ m(dim, dim * dim);
        for (std::size_t a = 0; a < dim; ++a) m.set(a, a * dim + a, 1);
        return m;
      }
      case Gen::Split: {
        MatrixQ m(dim * dim, dim);
        for (std::size_t a = 0; a < dim; ++a) m.set(a * dim + a, a, 1);
        return m;
      }
      case Gen::Cross: return detail::swap_matrix(dim);
      case Gen::BottomPin: {
        MatrixQ m(dim, 1);
        for (std::size_t a = 0; a < dim; ++a) m.set(a, 0, 1);
        return m;
      }
      case Gen::TopPin: {
        MatrixQ m(1, dim);
        for (std::size_t a = 0; a < dim; ++a) m.set(0, a, 1);
        return m;
      }
      case Gen::Token: {
        MatrixQ m(dim, dim);
        for (std::size_t i = 0; i < n; ++i)
          for (Sign h : {Sign{1}, Sign{-1}}) m.set(perm_index(i, static_cast<Sign>(g.g * h)), perm_index(i, h), 1);
        return m;
      }
      case Gen::Lolly: {
        MatrixQ m(1, 1);
        m.set(0, 0, t);
        return m;
      }
      default: throw ArityMismatch(std::string("generator '") + name_of(g.kind) + "' has no image");
    }
  };
  return detail::matrix_datum(Presentation::ParZ2, dim, t, gens);
}

/// Self-dual rigid object with neutralizer on u = C^n (t = n).
inline TargetDatum<MatrixQ> g_dblprime_datum(std::size_t n) {
  Rational t(static_cast<long>(n));
  auto gens = [n](const Generator& g) -> MatrixQ {
    switch (g.kind) {
      case Gen::FourLegs: {
        MatrixQ m(n * n, n * n);
        for (std::size_t i = 0; i < n; ++i) m.set(i * n + i, i * n + i, 1);
        return m;
      }
      case Gen::Cap: {
        MatrixQ m(1, n * n);
        for (std::size_t i = 0; i < n; ++i) m.set(0, i * n + i, 1);
        return m;
      }
      case Gen::Cup: {
        MatrixQ m(n * n, 1);
        for (std::size_t i = 0; i < n; ++i) m.set(i * n + i, 0, 1);
        return m;
      }
      case Gen::Cross: return detail::swap_matrix(n);
      default: throw ArityMismatch(std::string("generator '") + name_of(g.kind) + "' has no image");
    }
  };
  return detail::matrix_datum(Presentation::ParT, n, t, gens);
}

}  // namespace octacat
