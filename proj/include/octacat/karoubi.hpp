#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "morphism.hpp"

namespace octacat {

template <class D>
struct Summand {
  std::size_t k;
  Morphism<D> e;

  friend bool operator==(const Summand&, const Summand&) = default;
};

/// Formal direct sum of images of idempotents.
template <class D>
class KaroubiObject {
 public:
  KaroubiObject() = default;

  explicit KaroubiObject(std::vector<Summand<D>> summands) : summands_(std::move(summands)) {
    for (std::size_t i = 0; i < summands_.size(); ++i) {
      const auto& [k, e] = summands_[i];
      if (e.source() != k || e.target() != k) throw NotEndomorphism("summand " + std::to_string(i) + " is not an endomorphism of " + std::to_string(k));
      auto defect = compose(e, e) - e;
      if (!defect.is_zero())
        throw NotIdempotent("summand " + std::to_string(i) + ": e∘e − e = " + to_string(defect));
    }
  }

  /// ([k], e) as a one-summand object.
  KaroubiObject(std::size_t k, Morphism<D> e) : KaroubiObject(std::vector<Summand<D>>{{k, std::move(e)}}) {}

  /// ([k], id).
  static KaroubiObject plain(std::size_t k, const PolyQ& loop_weight) {
    return KaroubiObject(k, Morphism<D>::identity(k, loop_weight));
  }

  const std::vector<Summand<D>>& summands() const { return summands_; }
  std::size_t size() const { return summands_.size(); }
  const Summand<D>& operator[](std::size_t i) const { return summands_[i]; }

  friend bool operator==(const KaroubiObject&, const KaroubiObject&) = default;

 private:
  std::vector<Summand<D>> summands_;
};

/// Matrix of compressed morphisms; entry (j, i) maps summand i of the source
/// to summand j of the target and satisfies f_j ∘ g ∘ e_i = g.
template <class D>
class KaroubiMorphism {
 public:
  KaroubiMorphism() = default;

  /// Compresses each raw entry, so any g is accepted.
  static KaroubiMorphism compressed(const KaroubiObject<D>& src, const KaroubiObject<D>& dst,
                                    const std::vector<std::vector<Morphism<D>>>& raw) {
    check_shape(src, dst, raw);
    KaroubiMorphism m(src, dst);
    for (std::size_t j = 0; j < dst.size(); ++j)
      for (std::size_t i = 0; i < src.size(); ++i)
        m.entries_[j][i] = compose(dst[j].e, compose(raw[j][i], src[i].e));
    return m;
  }

  /// Takes entries as given; throws CompressionViolation unless each is already compressed.
  static KaroubiMorphism checked(const KaroubiObject<D>& src, const KaroubiObject<D>& dst,
                                 std::vector<std::vector<Morphism<D>>> entries) {
    check_shape(src, dst, entries);
    KaroubiMorphism m(src, dst);
    m.entries_ = std::move(entries);
    if (auto bad = m.compression_defect()) throw CompressionViolation(*bad);
    return m;
  }

  /// Trusted assembly for entries that are compressed by construction.
  static KaroubiMorphism assemble(const KaroubiObject<D>& src, const KaroubiObject<D>& dst,
                                  std::vector<std::vector<Morphism<D>>> entries) {
    check_shape(src, dst, entries);
    KaroubiMorphism m(src, dst);
    m.entries_ = std::move(entries);
    return m;
  }

  static KaroubiMorphism zero(const KaroubiObject<D>& src, const KaroubiObject<D>& dst) {
    return KaroubiMorphism(src, dst);
  }

  static KaroubiMorphism identity(const KaroubiObject<D>& x) {
    KaroubiMorphism m(x, x);
    for (std::size_t i = 0; i < x.size(); ++i) m.entries_[i][i] = x[i].e;
    return m;
  }

  const KaroubiObject<D>& source() const { return src_; }
  const KaroubiObject<D>& target() const { return dst_; }
  const Morphism<D>& entry(std::size_t j, std::size_t i) const { return entries_[j][i]; }
  const std::vector<std::vector<Morphism<D>>>& entries() const { return entries_; }

  /// Describes the first entry with f∘g∘e ≠ g, if any.
  std::optional<std::string> compression_defect() const {
    for (std::size_t j = 0; j < dst_.size(); ++j) {
      for (std::size_t i = 0; i < src_.size(); ++i) {
        const auto& g = entries_[j][i];
        if (!(compose(dst_[j].e, compose(g, src_[i].e)) == g))
          return "entry (" + std::to_string(j) + "," + std::to_string(i) + ") is not compressed";
      }
    }
    return std::nullopt;
  }

  KaroubiMorphism& operator+=(const KaroubiMorphism& o) {
    if (!(src_ == o.src_) || !(dst_ == o.dst_)) throw SizeMismatch("cannot add Karoubi morphisms between different objects");
    for (std::size_t j = 0; j < dst_.size(); ++j)
      for (std::size_t i = 0; i < src_.size(); ++i) entries_[j][i] += o.entries_[j][i];
    return *this;
  }
  KaroubiMorphism& operator*=(const PolyQ& c) {
    for (auto& row : entries_)
      for (auto& g : row) g *= c;
    return *this;
  }
  friend KaroubiMorphism operator+(KaroubiMorphism a, const KaroubiMorphism& b) { return a += b; }
  friend KaroubiMorphism operator*(KaroubiMorphism a, const PolyQ& c) { return a *= c; }
  friend KaroubiMorphism operator*(const PolyQ& c, KaroubiMorphism a) { return a *= c; }

  friend bool operator==(const KaroubiMorphism& a, const KaroubiMorphism& b) {
    return a.src_ == b.src_ && a.dst_ == b.dst_ && a.entries_ == b.entries_;
  }

 private:
  KaroubiMorphism(const KaroubiObject<D>& src, const KaroubiObject<D>& dst) : src_(src), dst_(dst) {
    PolyQ w = src.size() ? src[0].e.loop_weight() : dst.size() ? dst[0].e.loop_weight() : PolyQ::t();
    entries_.resize(dst.size());
    for (std::size_t j = 0; j < dst.size(); ++j)
      for (std::size_t i = 0; i < src.size(); ++i) entries_[j].push_back(Morphism<D>::zero(src[i].k, dst[j].k, w));
  }

  static void check_shape(const KaroubiObject<D>& src, const KaroubiObject<D>& dst,
                          const std::vector<std::vector<Morphism<D>>>& m) {
    if (m.size() != dst.size()) throw SizeMismatch("entry matrix has wrong number of rows");
    for (std::size_t j = 0; j < dst.size(); ++j) {
      if (m[j].size() != src.size()) throw SizeMismatch("entry matrix has wrong number of columns");
      for (std::size_t i = 0; i < src.size(); ++i)
        if (m[j][i].source() != src[i].k || m[j][i].target() != dst[j].k)
          throw SizeMismatch("entry (" + std::to_string(j) + "," + std::to_string(i) + ") has the wrong size");
    }
  }

  KaroubiObject<D> src_;
  KaroubiObject<D> dst_;
  std::vector<std::vector<Morphism<D>>> entries_;
};

template <class D>
KaroubiMorphism<D> compose(const KaroubiMorphism<D>& g, const KaroubiMorphism<D>& f) {
  if (!(f.target() == g.source())) throw SizeMismatch("cannot compose Karoubi morphisms: objects differ");
  std::vector<std::vector<Morphism<D>>> raw(g.target().size());
  for (std::size_t j = 0; j < g.target().size(); ++j) {
    for (std::size_t i = 0; i < f.source().size(); ++i) {
      const auto& s = f.source()[i];
      const auto& r = g.target()[j];
      Morphism<D> acc = Morphism<D>::zero(s.k, r.k, s.e.loop_weight());
      for (std::size_t m = 0; m < f.target().size(); ++m) acc += compose(g.entry(j, m), f.entry(m, i));
      raw[j].push_back(std::move(acc));
    }
  }
  return KaroubiMorphism<D>::assemble(f.source(), g.target(), std::move(raw));
}

/// Summands of X ⊗ Y are ordered lexicographically by (summand of X, summand of Y).
template <class D>
KaroubiObject<D> tensor(const KaroubiObject<D>& x, const KaroubiObject<D>& y) {
  std::vector<Summand<D>> out;
  for (const auto& a : x.summands())
    for (const auto& b : y.summands()) out.push_back({a.k + b.k, tensor(a.e, b.e)});
  return KaroubiObject<D>(std::move(out));
}

template <class D>
KaroubiMorphism<D> tensor(const KaroubiMorphism<D>& f, const KaroubiMorphism<D>& g) {
  auto src = tensor(f.source(), g.source());
  auto dst = tensor(f.target(), g.target());
  std::size_t gs = g.source().size(), gt = g.target().size();
  std::vector<std::vector<Morphism<D>>> raw(dst.size());
  for (std::size_t j = 0; j < f.target().size(); ++j)
    for (std::size_t jj = 0; jj < gt; ++jj)
      for (std::size_t i = 0; i < f.source().size(); ++i)
        for (std::size_t ii = 0; ii < gs; ++ii) raw[j * gt + jj].push_back(tensor(f.entry(j, i), g.entry(jj, ii)));
  return KaroubiMorphism<D>::assemble(src, dst, std::move(raw));
}

/// Categorical dimension: sum of traces of the summand idempotents.
template <class D>
PolyQ dim(const KaroubiObject<D>& x) {
  PolyQ acc;
  for (const auto& s : x.summands()) acc += trace(s.e);
  return acc;
}

}  // namespace octacat
