#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <json.hpp>

#include "diagrams.hpp"
#include "errors.hpp"
#include "polyq.hpp"

namespace octacat {

/// Per-diagram-type operations used by `Morphism`.
template <class D>
struct DiagramTraits;

template <>
struct DiagramTraits<Partition> {
  static constexpr const char* name = "EvenPartitions";
  static void check(const Partition& p) {
    if (!p.is_even()) throw NotEven("diagram " + to_string(p) + " has an odd block");
  }
  static std::optional<StackResult<Partition>> stack(const Partition& q, const Partition& p) {
    return octacat::stack(q, p);
  }
  static Partition identity(std::size_t n) { return identity_partition(n); }
  static Partition parse(std::string_view s) { return parse_partition(s); }
  static const Partition& base(const Partition& p) { return p; }
};

template <>
struct DiagramTraits<ColoredPartition> {
  static constexpr const char* name = "ColoredPartitions";
  static void check(const ColoredPartition&) {}
  static std::optional<StackResult<ColoredPartition>> stack(const ColoredPartition& q, const ColoredPartition& p) {
    return colored_stack(q, p);
  }
  static ColoredPartition identity(std::size_t n) { return ColoredPartition(identity_partition(n)); }
  static ColoredPartition parse(std::string_view s) { return parse_colored(s); }
  static const Partition& base(const ColoredPartition& p) { return p.base(); }
};

/// Formal linear combination of diagrams of size (k, l) over Q[t].
///
/// `loop_weight` is the scalar each closed loop evaluates to. Morphisms with
/// different loop weights live in different categories and never mix.
template <class D>
class Morphism {
 public:
  using Diagram = D;
  using Terms = std::map<D, PolyQ>;

  Morphism() = default;
  Morphism(std::size_t k, std::size_t l, PolyQ loop_weight) : k_(k), l_(l), w_(std::move(loop_weight)) {}
  Morphism(const D& d, PolyQ loop_weight, PolyQ coeff = PolyQ(1L))
      : k_(DiagramTraits<D>::base(d).bottom()), l_(DiagramTraits<D>::base(d).top()), w_(std::move(loop_weight)) {
    add_term(d, coeff);
  }

  static Morphism identity(std::size_t n, const PolyQ& loop_weight) {
    return Morphism(DiagramTraits<D>::identity(n), loop_weight);
  }
  static Morphism zero(std::size_t k, std::size_t l, const PolyQ& loop_weight) { return Morphism(k, l, loop_weight); }

  std::size_t source() const { return k_; }
  std::size_t target() const { return l_; }
  const PolyQ& loop_weight() const { return w_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  PolyQ coeff(const D& d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? PolyQ() : it->second;
  }

  void add_term(const D& d, const PolyQ& c) {
    const Partition& b = DiagramTraits<D>::base(d);
    if (b.bottom() != k_ || b.top() != l_)
      throw SizeMismatch("term of size (" + std::to_string(b.bottom()) + "," + std::to_string(b.top()) +
                         ") added to morphism of size (" + std::to_string(k_) + "," + std::to_string(l_) + ")");
    if (c.is_zero()) return;
    DiagramTraits<D>::check(d);
    auto [it, inserted] = terms_.try_emplace(d, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Morphism& operator+=(const Morphism& o) {
    check_same_category(o);
    if (o.k_ != k_ || o.l_ != l_) throw SizeMismatch("cannot add morphisms of different sizes");
    for (const auto& [d, c] : o.terms_) add_term(d, c);
    return *this;
  }
  Morphism& operator-=(const Morphism& o) { return *this += o * PolyQ(-1L); }
  Morphism& operator*=(const PolyQ& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [d, x] : terms_) x *= c;
    return *this;
  }

  friend Morphism operator+(Morphism a, const Morphism& b) { return a += b; }
  friend Morphism operator-(Morphism a, const Morphism& b) { return a -= b; }
  friend Morphism operator*(Morphism a, const PolyQ& c) { return a *= c; }
  friend Morphism operator*(const PolyQ& c, Morphism a) { return a *= c; }

  friend bool operator==(const Morphism& a, const Morphism& b) {
    return a.k_ == b.k_ && a.l_ == b.l_ && a.w_ == b.w_ && a.terms_ == b.terms_;
  }

  void check_same_category(const Morphism& o) const {
    if (!(w_ == o.w_))
      throw CategoryMismatch("loop weights differ: " + w_.str() + " vs " + o.w_.str());
  }

 private:
  std::size_t k_ = 0;
  std::size_t l_ = 0;
  PolyQ w_ = PolyQ::t();
  Terms terms_;
};

/// g ∘ f (f first).
template <class D>
Morphism<D> compose(const Morphism<D>& g, const Morphism<D>& f) {
  g.check_same_category(f);
  if (f.target() != g.source())
    throw SizeMismatch("cannot compose: target " + std::to_string(f.target()) + " != source " +
                       std::to_string(g.source()));
  Morphism<D> out(f.source(), g.target(), f.loop_weight());
  std::vector<PolyQ> weight_pow{PolyQ(1L)};
  for (const auto& [q, cq] : g.terms()) {
    for (const auto& [p, cp] : f.terms()) {
      auto r = DiagramTraits<D>::stack(q, p);
      if (!r) continue;
      while (weight_pow.size() <= r->loops) weight_pow.push_back(weight_pow.back() * f.loop_weight());
      out.add_term(r->composite, cq * cp * weight_pow[r->loops]);
    }
  }
  return out;
}

template <class D>
Morphism<D> tensor(const Morphism<D>& f, const Morphism<D>& g) {
  f.check_same_category(g);
  Morphism<D> out(f.source() + g.source(), f.target() + g.target(), f.loop_weight());
  for (const auto& [p, cp] : f.terms())
    for (const auto& [q, cq] : g.terms()) out.add_term(tensor(p, q), cp * cq);
  return out;
}

template <class D>
Morphism<D> involution(const Morphism<D>& f) {
  Morphism<D> out(f.target(), f.source(), f.loop_weight());
  for (const auto& [p, c] : f.terms()) out.add_term(involution(p), c);
  return out;
}

/// Nested cups {i', (2n+1-i)'} : 0 -> 2n.
template <class D>
Morphism<D> nested_cup(std::size_t n, const PolyQ& w) {
  std::vector<std::vector<Vertex>> blocks;
  for (std::size_t i = 1; i <= n; ++i) blocks.push_back({{Row::Top, i}, {Row::Top, 2 * n + 1 - i}});
  Partition p = make_partition(0, 2 * n, blocks);
  if constexpr (std::is_same_v<D, Partition>) {
    return Morphism<D>(p, w);
  } else {
    return Morphism<D>(ColoredPartition(p), w);
  }
}

template <class D>
Morphism<D> nested_cap(std::size_t n, const PolyQ& w) {
  return involution(nested_cup<D>(n, w));
}

/// Closes f : n -> n with strands on the right: cap ∘ (f ⊗ id) ∘ cup.
template <class D>
PolyQ trace(const Morphism<D>& f) {
  if (f.source() != f.target()) throw NotEndomorphism("trace of a non-endomorphism");
  std::size_t n = f.source();
  const PolyQ& w = f.loop_weight();
  auto closed = compose(nested_cap<D>(n, w), compose(tensor(f, Morphism<D>::identity(n, w)), nested_cup<D>(n, w)));
  return closed.coeff(DiagramTraits<D>::identity(0));
}

/// Closure with strands on the left: cap ∘ (id ⊗ f) ∘ cup.
template <class D>
PolyQ trace_left(const Morphism<D>& f) {
  if (f.source() != f.target()) throw NotEndomorphism("trace of a non-endomorphism");
  std::size_t n = f.source();
  const PolyQ& w = f.loop_weight();
  auto closed = compose(nested_cap<D>(n, w), compose(tensor(Morphism<D>::identity(n, w), f), nested_cup<D>(n, w)));
  return closed.coeff(DiagramTraits<D>::identity(0));
}

// ---------------------------------------------------------------------------
// Text and JSON

template <class D>
std::string to_string(const Morphism<D>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [d, c] : f.terms()) {
    if (!first) out += " + ";
    first = false;
    std::string cs = c.str();
    bool compound = c.coefficients().size() > 1 &&
                    std::count_if(c.coefficients().begin(), c.coefficients().end(),
                                  [](const Rational& x) { return x != 0; }) > 1;
    if (compound) cs = "(" + cs + ")";
    out += cs + " * (" + to_string(d) + ")";
  }
  return out;
}

template <class D>
nlohmann::json to_json(const Morphism<D>& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [d, c] : f.terms()) terms.push_back({{"diagram", to_string(d)}, {"coeff", c.str()}});
  return {{"category", DiagramTraits<D>::name},
          {"loop_weight", f.loop_weight().str()},
          {"k", f.source()},
          {"l", f.target()},
          {"terms", terms}};
}

template <class D>
Morphism<D> morphism_from_json(const nlohmann::json& j) {
  try {
    if (j.at("category").get<std::string>() != DiagramTraits<D>::name)
      throw CategoryMismatch("expected a " + std::string(DiagramTraits<D>::name) + " morphism");
    Morphism<D> f(j.at("k").get<std::size_t>(), j.at("l").get<std::size_t>(),
                  PolyQ::parse(j.at("loop_weight").get<std::string>()));
    for (const auto& term : j.at("terms"))
      f.add_term(DiagramTraits<D>::parse(term.at("diagram").get<std::string>()),
                 PolyQ::parse(term.at("coeff").get<std::string>()));
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed morphism JSON: ") + e.what());
  }
}

}  // namespace octacat
