#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "diagrams.hpp"
#include "errors.hpp"
#include "morphism.hpp"
#include "polyq.hpp"
#include "report.hpp"

namespace octacat {

/// ParZ2: the coloured presentation on one object W.
/// ParT:  the presentation of the even-partition category.
enum class Presentation { ParZ2, ParT };

inline const char* name_of(Presentation p) { return p == Presentation::ParZ2 ? "parz2" : "part"; }

enum class Gen { Merge, Split, Cross, Token, BottomPin, TopPin, Lolly, FourLegs, Cap, Cup };

struct Generator {
  Gen kind = Gen::Cross;
  Sign g = 1;  // token label; unused otherwise

  friend bool operator==(const Generator&, const Generator&) = default;
};

inline std::pair<std::size_t, std::size_t> arity(Gen g) {
  switch (g) {
    case Gen::Merge: return {2, 1};
    case Gen::Split: return {1, 2};
    case Gen::Cross: return {2, 2};
    case Gen::Token: return {1, 1};
    case Gen::BottomPin: return {0, 1};
    case Gen::TopPin: return {1, 0};
    case Gen::Lolly: return {0, 0};
    case Gen::FourLegs: return {2, 2};
    case Gen::Cap: return {2, 0};
    case Gen::Cup: return {0, 2};
  }
  return {0, 0};
}

inline const char* name_of(Gen g) {
  switch (g) {
    case Gen::Merge: return "merge";
    case Gen::Split: return "split";
    case Gen::Cross: return "cross";
    case Gen::Token: return "token";
    case Gen::BottomPin: return "bottompin";
    case Gen::TopPin: return "toppin";
    case Gen::Lolly: return "lolly";
    case Gen::FourLegs: return "fourlegs";
    case Gen::Cap: return "cap";
    case Gen::Cup: return "cup";
  }
  return "?";
}

inline bool belongs(Gen g, Presentation p) {
  if (g == Gen::Cross) return true;
  bool coloured = g == Gen::Merge || g == Gen::Split || g == Gen::Token || g == Gen::BottomPin ||
                  g == Gen::TopPin || g == Gen::Lolly;
  return coloured == (p == Presentation::ParZ2);
}

inline std::optional<Gen> gen_from_name(std::string_view s) {
  for (Gen g : {Gen::Merge, Gen::Split, Gen::Cross, Gen::Token, Gen::BottomPin, Gen::TopPin, Gen::Lolly,
                Gen::FourLegs, Gen::Cap, Gen::Cup})
    if (s == name_of(g)) return g;
  return std::nullopt;
}

/// Immutable term over the generators of a presentation.
///
/// `compose(a, b, c)` is a ∘ b ∘ c, so c is applied first.
class GenWord {
 public:
  enum class Kind { Gen, Id, Compose, Tensor, Sum, Scale };

  struct Node {
    Kind kind;
    Generator gen;
    std::size_t width = 0;
    PolyQ scalar;
    std::vector<std::shared_ptr<const Node>> children;
    std::size_t in = 0;
    std::size_t out = 0;
  };

  static GenWord id(Presentation p, std::size_t n = 1) {
    auto node = std::make_shared<Node>(Node{Kind::Id, {}, n, {}, {}, n, n});
    return GenWord(p, std::move(node));
  }

  static GenWord gen(Presentation p, Generator g) {
    if (!belongs(g.kind, p))
      throw ArityMismatch(std::string("generator '") + name_of(g.kind) + "' is not part of the " + name_of(p) +
                          " presentation");
    if (g.kind == Gen::Token && g.g != 1 && g.g != -1) throw ArityMismatch("token label must be 1 or -1");
    if (g.kind != Gen::Token) g.g = 1;
    auto [in, out] = arity(g.kind);
    auto node = std::make_shared<Node>(Node{Kind::Gen, g, 0, {}, {}, in, out});
    return GenWord(p, std::move(node));
  }
  static GenWord gen(Presentation p, Gen g) { return gen(p, Generator{g, 1}); }
  static GenWord token(Sign g) { return gen(Presentation::ParZ2, Generator{Gen::Token, g}); }

  static GenWord compose(const std::vector<GenWord>& parts) {
    if (parts.empty()) throw ArityMismatch("compose needs at least one argument");
    Presentation p = common(parts);
    for (std::size_t i = 0; i + 1 < parts.size(); ++i)
      if (parts[i].source() != parts[i + 1].target())
        throw ArityMismatch("compose: argument " + std::to_string(i + 1) + " has " +
                            std::to_string(parts[i].source()) + " inputs but argument " + std::to_string(i + 2) +
                            " has " + std::to_string(parts[i + 1].target()) + " outputs");
    if (parts.size() == 1) return parts[0];
    auto node = std::make_shared<Node>(
        Node{Kind::Compose, {}, 0, {}, nodes_of(parts), parts.back().source(), parts.front().target()});
    return GenWord(p, std::move(node));
  }

  static GenWord tensor(const std::vector<GenWord>& parts) {
    if (parts.empty()) throw ArityMismatch("tensor needs at least one argument");
    Presentation p = common(parts);
    if (parts.size() == 1) return parts[0];
    std::size_t in = 0, out = 0;
    for (const auto& w : parts) {
      in += w.source();
      out += w.target();
    }
    auto node = std::make_shared<Node>(Node{Kind::Tensor, {}, 0, {}, nodes_of(parts), in, out});
    return GenWord(p, std::move(node));
  }

  static GenWord sum(const std::vector<GenWord>& parts) {
    if (parts.empty()) throw ArityMismatch("sum needs at least one argument");
    Presentation p = common(parts);
    for (const auto& w : parts)
      if (w.source() != parts[0].source() || w.target() != parts[0].target())
        throw ArityMismatch("sum: summands have different arities");
    if (parts.size() == 1) return parts[0];
    auto node = std::make_shared<Node>(
        Node{Kind::Sum, {}, 0, {}, nodes_of(parts), parts[0].source(), parts[0].target()});
    return GenWord(p, std::move(node));
  }

  static GenWord scale(const PolyQ& c, const GenWord& w) {
    auto node = std::make_shared<Node>(Node{Kind::Scale, {}, 0, c, {w.node_}, w.source(), w.target()});
    return GenWord(w.pres_, std::move(node));
  }

  Presentation presentation() const { return pres_; }
  std::size_t source() const { return node_->in; }
  std::size_t target() const { return node_->out; }
  const Node& node() const { return *node_; }

  std::string str() const { return print(*node_); }

  friend bool operator==(const GenWord& a, const GenWord& b) { return a.pres_ == b.pres_ && a.str() == b.str(); }

  /// Rebuilds a word from a node of this presentation.
  GenWord rewrap(std::shared_ptr<const Node> n) const { return GenWord(pres_, std::move(n)); }
  std::shared_ptr<const Node> node_ptr() const { return node_; }

 private:
  GenWord(Presentation p, std::shared_ptr<const Node> n) : pres_(p), node_(std::move(n)) {}

  static Presentation common(const std::vector<GenWord>& parts) {
    for (const auto& w : parts)
      if (w.pres_ != parts[0].pres_) throw ArityMismatch("words from different presentations");
    return parts[0].pres_;
  }

  static std::vector<std::shared_ptr<const Node>> nodes_of(const std::vector<GenWord>& parts) {
    std::vector<std::shared_ptr<const Node>> out;
    for (const auto& w : parts) out.push_back(w.node_);
    return out;
  }

  static std::string print(const Node& n) {
    switch (n.kind) {
      case Kind::Id: return n.width == 1 ? "id" : "(id " + std::to_string(n.width) + ")";
      case Kind::Gen:
        if (n.gen.kind == Gen::Token) return n.gen.g == 1 ? "(token 1)" : "(token -1)";
        return name_of(n.gen.kind);
      case Kind::Scale: {
        std::string c;
        for (char ch : n.scalar.str())
          if (ch != ' ') c.push_back(ch);
        return "(scale " + c + " " + print(*n.children[0]) + ")";
      }
      default: {
        std::string head = n.kind == Kind::Compose ? "compose" : n.kind == Kind::Tensor ? "tensor" : "sum";
        std::string out = "(" + head;
        for (const auto& c : n.children) out += " " + print(*c);
        return out + ")";
      }
    }
  }

  Presentation pres_;
  std::shared_ptr<const Node> node_;
};

// ---------------------------------------------------------------------------
// S-expression parsing

namespace detail {

struct SExpr {
  std::string atom;  // empty for lists
  std::vector<SExpr> items;
  bool is_list = false;
};

inline std::vector<std::string> sexpr_tokens(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '(' || c == ')') {
      out.emplace_back(1, c);
      ++i;
    } else {
      std::size_t j = i;
      while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])) && s[j] != '(' && s[j] != ')') ++j;
      out.emplace_back(s.substr(i, j - i));
      i = j;
    }
  }
  return out;
}

inline SExpr read_sexpr(const std::vector<std::string>& toks, std::size_t& pos, std::string_view text) {
  if (pos >= toks.size()) throw ParseError("unexpected end of word '" + std::string(text) + "'");
  if (toks[pos] == ")") throw ParseError("unexpected ')' in word '" + std::string(text) + "'");
  if (toks[pos] != "(") return SExpr{toks[pos++], {}, false};
  ++pos;
  SExpr list;
  list.is_list = true;
  while (true) {
    if (pos >= toks.size()) throw ParseError("missing ')' in word '" + std::string(text) + "'");
    if (toks[pos] == ")") {
      ++pos;
      break;
    }
    list.items.push_back(read_sexpr(toks, pos, text));
  }
  if (list.items.empty()) throw ParseError("empty list in word '" + std::string(text) + "'");
  return list;
}

inline std::size_t parse_count(const std::string& s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError("expected a non-negative integer, got '" + s + "'");
  return std::stoul(s);
}

inline GenWord build_word(Presentation p, const SExpr& e) {
  if (!e.is_list) {
    if (e.atom == "id") return GenWord::id(p, 1);
    auto g = gen_from_name(e.atom);
    if (!g) throw ParseError("unknown word atom '" + e.atom + "'");
    if (*g == Gen::Token) throw ParseError("token needs a label, e.g. (token -1)");
    return GenWord::gen(p, *g);
  }
  if (e.items[0].is_list) throw ParseError("list head must be an atom");
  const std::string& head = e.items[0].atom;
  auto args = [&](std::size_t from) {
    std::vector<GenWord> out;
    for (std::size_t i = from; i < e.items.size(); ++i) out.push_back(build_word(p, e.items[i]));
    return out;
  };
  auto need = [&](std::size_t n) {
    if (e.items.size() != n + 1)
      throw ParseError("'" + head + "' expects " + std::to_string(n) + " argument(s), got " +
                       std::to_string(e.items.size() - 1));
  };
  if (head == "compose") return GenWord::compose(args(1));
  if (head == "tensor") return GenWord::tensor(args(1));
  if (head == "sum") return GenWord::sum(args(1));
  if (head == "scale") {
    need(2);
    if (e.items[1].is_list) throw ParseError("scale coefficient must be a polynomial literal without spaces");
    return GenWord::scale(PolyQ::parse(e.items[1].atom), build_word(p, e.items[2]));
  }
  if (head == "id") {
    if (e.items.size() == 1) return GenWord::id(p, 1);
    need(1);
    return GenWord::id(p, parse_count(e.items[1].atom));
  }
  if (head == "token") {
    need(1);
    const std::string& s = e.items[1].atom;
    if (s == "1" || s == "+1") return GenWord::gen(p, Generator{Gen::Token, 1});
    if (s == "-1") return GenWord::gen(p, Generator{Gen::Token, -1});
    throw ParseError("token label must be 1 or -1, got '" + s + "'");
  }
  auto g = gen_from_name(head);
  if (!g) throw ParseError("unknown word head '" + head + "'");
  if (*g == Gen::Token) throw ParseError("token needs a label");
  need(0);
  return GenWord::gen(p, *g);
}

}  // namespace detail

inline GenWord parse_word(Presentation p, std::string_view text) {
  auto toks = detail::sexpr_tokens(text);
  std::size_t pos = 0;
  auto e = detail::read_sexpr(toks, pos, text);
  if (pos != toks.size()) throw ParseError("trailing tokens in word '" + std::string(text) + "'");
  return detail::build_word(p, e);
}

// ---------------------------------------------------------------------------
// Reflections

namespace detail {

inline Gen vertical_partner(Gen g) {
  switch (g) {
    case Gen::Merge: return Gen::Split;
    case Gen::Split: return Gen::Merge;
    case Gen::BottomPin: return Gen::TopPin;
    case Gen::TopPin: return Gen::BottomPin;
    case Gen::Cap: return Gen::Cup;
    case Gen::Cup: return Gen::Cap;
    default: return g;
  }
}

inline std::shared_ptr<const GenWord::Node> reflect(const GenWord::Node& n, bool vertical) {
  auto out = std::make_shared<GenWord::Node>(n);
  if (n.kind == GenWord::Kind::Gen && vertical) {
    out->gen.kind = vertical_partner(n.gen.kind);
    auto [in, o] = arity(out->gen.kind);
    out->in = in;
    out->out = o;
    return out;
  }
  out->children.clear();
  for (const auto& c : n.children) out->children.push_back(reflect(*c, vertical));
  if (vertical) {
    std::swap(out->in, out->out);
    if (n.kind == GenWord::Kind::Compose) std::reverse(out->children.begin(), out->children.end());
  } else if (n.kind == GenWord::Kind::Tensor) {
    std::reverse(out->children.begin(), out->children.end());
  }
  return out;
}

}  // namespace detail

/// Upside-down reflection: reverses composition and swaps merge/split, pins, cap/cup.
/// Token labels are their own inverses in Z2, so tokens are fixed.
inline GenWord vertical_flip(const GenWord& w) { return w.rewrap(detail::reflect(w.node(), true)); }

/// Left-right mirror: reverses every tensor product. Every generator is mirror-symmetric.
inline GenWord mirror(const GenWord& w) { return w.rewrap(detail::reflect(w.node(), false)); }

// ---------------------------------------------------------------------------
// Evaluation in a target

/// A strict linear symmetric monoidal target together with the images of
/// the generators. `scale` receives scalars as polynomials in t so that
/// specialized targets can evaluate them.
template <class M>
struct TargetDatum {
  Presentation presentation = Presentation::ParZ2;
  std::function<M(std::size_t)> identity;
  std::function<M(const Generator&)> generator;
  std::function<M(const M&, const M&)> compose;  // (g, f) -> g ∘ f
  std::function<M(const M&, const M&)> tensor;
  std::function<M(const M&, const M&)> add;
  std::function<M(const PolyQ&, const M&)> scale;
  std::function<bool(const M&, const M&)> equal;
  std::function<std::string(const M&, const M&)> difference;  // optional, for reports
};

namespace detail {

template <class M>
M eval_node(const GenWord::Node& n, const TargetDatum<M>& d) {
  switch (n.kind) {
    case GenWord::Kind::Id: return d.identity(n.width);
    case GenWord::Kind::Gen: return d.generator(n.gen);
    case GenWord::Kind::Scale: return d.scale(n.scalar, eval_node(*n.children[0], d));
    case GenWord::Kind::Compose: {
      M acc = eval_node(*n.children.back(), d);
      for (std::size_t i = n.children.size() - 1; i-- > 0;) acc = d.compose(eval_node(*n.children[i], d), acc);
      return acc;
    }
    case GenWord::Kind::Tensor: {
      M acc = eval_node(*n.children[0], d);
      for (std::size_t i = 1; i < n.children.size(); ++i) acc = d.tensor(acc, eval_node(*n.children[i], d));
      return acc;
    }
    case GenWord::Kind::Sum: {
      M acc = eval_node(*n.children[0], d);
      for (std::size_t i = 1; i < n.children.size(); ++i) acc = d.add(acc, eval_node(*n.children[i], d));
      return acc;
    }
  }
  throw Error("corrupt word node");
}

}  // namespace detail

template <class M>
M eval_in_target(const GenWord& w, const TargetDatum<M>& d) {
  if (w.presentation() != d.presentation)
    throw ArityMismatch(std::string("word of the ") + name_of(w.presentation()) + " presentation given to a " +
                        name_of(d.presentation) + " datum");
  return detail::eval_node(w.node(), d);
}

template <class D>
TargetDatum<Morphism<D>> diagram_datum(Presentation p, const PolyQ& loop_weight,
                                       std::function<Morphism<D>(const Generator&)> gens) {
  TargetDatum<Morphism<D>> d;
  d.presentation = p;
  d.identity = [w = loop_weight](std::size_t n) { return Morphism<D>::identity(n, w); };
  d.generator = std::move(gens);
  d.compose = [](const Morphism<D>& g, const Morphism<D>& f) { return octacat::compose(g, f); };
  d.tensor = [](const Morphism<D>& f, const Morphism<D>& g) { return octacat::tensor(f, g); };
  d.add = [](const Morphism<D>& f, const Morphism<D>& g) { return f + g; };
  d.scale = [](const PolyQ& c, const Morphism<D>& f) { return f * c; };
  d.equal = [](const Morphism<D>& f, const Morphism<D>& g) { return f == g; };
  d.difference = [](const Morphism<D>& f, const Morphism<D>& g) {
    if (f.source() != g.source() || f.target() != g.target()) return std::string("sizes differ");
    return to_string(f - g);
  };
  return d;
}

/// The coloured diagram category as a target: the generator table of H̃.
inline TargetDatum<Morphism<ColoredPartition>> htilde_datum(const PolyQ& loop_weight = PolyQ::t()) {
  auto gens = [w = loop_weight](const Generator& g) -> Morphism<ColoredPartition> {
    auto diagram = [&](std::string_view text) { return Morphism<ColoredPartition>(parse_colored(text), w); };
    switch (g.kind) {
      case Gen::Merge: return diagram("2>1: {1,2,1'}");
      case Gen::Split: return diagram("1>2: {1,1',2'}");
      case Gen::Cross: return diagram("2>2: {1,2'},{2,1'}");
      case Gen::BottomPin: return diagram("0>1: {1'}");
      case Gen::TopPin: return diagram("1>0: {1}");
      case Gen::Token: return diagram(g.g == 1 ? "1>1: {1,1'}" : "1>1: {1,1':-1}");
      case Gen::Lolly: return Morphism<ColoredPartition>(ColoredPartition(identity_partition(0)), w, w);
      default: throw ArityMismatch(std::string("generator '") + name_of(g.kind) + "' has no coloured image");
    }
  };
  return diagram_datum<ColoredPartition>(Presentation::ParZ2, loop_weight, gens);
}

/// The even-partition category as a target: the generator table of G̃.
inline TargetDatum<Morphism<Partition>> gtilde_datum(const PolyQ& loop_weight = PolyQ::t()) {
  auto gens = [w = loop_weight](const Generator& g) -> Morphism<Partition> {
    auto diagram = [&](std::string_view text) { return Morphism<Partition>(parse_partition(text), w); };
    switch (g.kind) {
      case Gen::FourLegs: return diagram("2>2: {1,2,1',2'}");
      case Gen::Cap: return diagram("2>0: {1,2}");
      case Gen::Cup: return diagram("0>2: {1',2'}");
      case Gen::Cross: return diagram("2>2: {1,2'},{2,1'}");
      default: throw ArityMismatch(std::string("generator '") + name_of(g.kind) + "' has no even-partition image");
    }
  };
  return diagram_datum<Partition>(Presentation::ParT, loop_weight, gens);
}

inline Morphism<ColoredPartition> eval_Htilde(const GenWord& w, const PolyQ& loop_weight = PolyQ::t()) {
  return eval_in_target(w, htilde_datum(loop_weight));
}

inline Morphism<Partition> eval_Gtilde(const GenWord& w, const PolyQ& loop_weight = PolyQ::t()) {
  return eval_in_target(w, gtilde_datum(loop_weight));
}

// ---------------------------------------------------------------------------
// Relations

struct Relation {
  std::string name;
  GenWord lhs;
  GenWord rhs;
};

namespace detail {

inline std::vector<Relation> parse_relations(Presentation p,
                                             const std::vector<std::tuple<std::string, std::string, std::string>>& rows) {
  std::vector<Relation> out;
  for (const auto& [name, lhs, rhs] : rows) out.push_back({name, parse_word(p, lhs), parse_word(p, rhs)});
  return out;
}

inline std::string tok(int g) { return g == 1 ? "(token 1)" : "(token -1)"; }

inline std::vector<Relation> base_relations_parz2() {
  std::vector<std::tuple<std::string, std::string, std::string>> rows = {
      {"unit-left", "(compose merge (tensor bottompin id))", "id"},
      {"unit-right", "(compose merge (tensor id bottompin))", "id"},
      {"counit-left", "(compose (tensor toppin id) split)", "id"},
      {"counit-right", "(compose (tensor id toppin) split)", "id"},
      {"frobenius-left", "(compose (tensor merge id) (tensor id split))", "(compose split merge)"},
      {"frobenius-right", "(compose (tensor id merge) (tensor split id))", "(compose split merge)"},
      {"cross-involutive", "(compose cross cross)", "(id 2)"},
      {"braid", "(compose (tensor cross id) (tensor id cross) (tensor cross id))",
       "(compose (tensor id cross) (tensor cross id) (tensor id cross))"},
      {"bottompin-natural", "(compose cross (tensor id bottompin))", "(tensor bottompin id)"},
      {"toppin-natural", "(compose (tensor id toppin) cross)", "(tensor toppin id)"},
      {"merge-natural", "(compose (tensor id merge) (tensor cross id) (tensor id cross))",
       "(compose cross (tensor merge id))"},
      {"split-natural", "(compose (tensor id cross) (tensor cross id) (tensor id split))",
       "(compose (tensor split id) cross)"},
      {"commutative", "(compose merge cross)", "merge"},
      {"lolly", "lolly", "(scale t (id 0))"},
      {"pins-close", "(compose toppin bottompin)", "lolly"},
      {"token-unit", "(token 1)", "id"},
  };
  for (int g : {1, -1}) {
    for (int h : {1, -1}) {
      std::string name = std::string("token-delta[") + (g == 1 ? "+" : "-") + (h == 1 ? "+" : "-") + "]";
      std::string lhs = "(compose merge (tensor " + tok(g) + " " + tok(h) + ") split)";
      rows.emplace_back(name, lhs, g == h ? tok(g) : "(scale 0 id)");
      std::string pname = std::string("token-product[") + (g == 1 ? "+" : "-") + (h == 1 ? "+" : "-") + "]";
      rows.emplace_back(pname, "(compose " + tok(g) + " " + tok(h) + ")", tok(g * h));
    }
    std::string s = g == 1 ? "[+]" : "[-]";
    rows.emplace_back("token-cross" + s, "(compose cross (tensor " + tok(g) + " id))",
                      "(compose (tensor id " + tok(g) + ") cross)");
    rows.emplace_back("token-split" + s, "(compose split " + tok(g) + ")",
                      "(compose (tensor " + tok(g) + " " + tok(g) + ") split)");
    rows.emplace_back("token-bottompin" + s, "(compose " + tok(g) + " bottompin)", "bottompin");
  }
  return parse_relations(Presentation::ParZ2, rows);
}

inline std::vector<Relation> base_relations_part() {
  return parse_relations(
      Presentation::ParT,
      {
          {"fourlegs-idempotent", "(compose fourlegs fourlegs)", "fourlegs"},
          {"fourlegs-associative", "(compose (tensor id fourlegs) (tensor fourlegs id))",
           "(compose (tensor fourlegs id) (tensor id fourlegs))"},
          {"loop", "(compose cap cup)", "(scale t (id 0))"},
          {"snake-left", "(compose (tensor id cap) (tensor cup id))", "id"},
          {"snake-right", "(compose (tensor cap id) (tensor id cup))", "id"},
          {"fourlegs-cup", "(compose fourlegs cup)", "cup"},
          {"fourlegs-slide", "(compose (tensor id fourlegs) (tensor cup id))",
           "(compose (tensor fourlegs id) (tensor id cup))"},
          {"cross-involutive", "(compose cross cross)", "(id 2)"},
          {"braid", "(compose (tensor cross id) (tensor id cross) (tensor cross id))",
           "(compose (tensor id cross) (tensor cross id) (tensor id cross))"},
          {"cap-cross", "(compose cap cross)", "cap"},
          {"fourlegs-cross", "(compose fourlegs cross)", "fourlegs"},
          {"fourlegs-natural", "(compose (tensor id fourlegs) (tensor cross id) (tensor id cross))",
           "(compose (tensor cross id) (tensor id cross) (tensor fourlegs id))"},
          {"cap-natural", "(compose (tensor id cap) (tensor cross id) (tensor id cross))", "(tensor cap id)"},
      });
}

}  // namespace detail

/// Base relations only, in their listed order.
inline std::vector<Relation> base_relations(Presentation p) {
  return p == Presentation::ParZ2 ? detail::base_relations_parz2() : detail::base_relations_part();
}

/// Base relations together with their vertical, mirrored and doubly reflected
/// forms; reflections that coincide with an earlier relation are dropped.
inline std::vector<Relation> relation_suite(Presentation p) {
  std::vector<Relation> out;
  std::set<std::pair<std::string, std::string>> seen;
  auto push = [&](std::string name, const GenWord& lhs, const GenWord& rhs) {
    auto a = lhs.str(), b = rhs.str();
    if (a == b) return;
    if (seen.count({a, b}) || seen.count({b, a})) return;
    seen.insert({a, b});
    out.push_back({std::move(name), lhs, rhs});
  };
  for (const auto& r : base_relations(p)) {
    push(r.name, r.lhs, r.rhs);
    push(r.name + "/flip", vertical_flip(r.lhs), vertical_flip(r.rhs));
    push(r.name + "/mirror", mirror(r.lhs), mirror(r.rhs));
    push(r.name + "/flip+mirror", mirror(vertical_flip(r.lhs)), mirror(vertical_flip(r.rhs)));
  }
  return out;
}

template <class M>
Report verify_relations(const std::vector<Relation>& relations, const TargetDatum<M>& d,
                        const std::string& prefix = "relation") {
  Report report;
  for (const auto& r : relations) {
    CheckResult c;
    c.check = prefix + ":" + r.name;
    c.params = {{"lhs", r.lhs.str()}, {"rhs", r.rhs.str()}};
    try {
      M lhs = eval_in_target(r.lhs, d);
      M rhs = eval_in_target(r.rhs, d);
      c.pass = d.equal(lhs, rhs);
      if (!c.pass) c.counterexample = nlohmann::json{{"difference", d.difference ? d.difference(lhs, rhs) : "unequal"}};
    } catch (const Error& e) {
      c.pass = false;
      c.counterexample = nlohmann::json{{"error", e.what()}};
    }
    report.push_back(std::move(c));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Universal-property axioms

namespace detail {

/// Word for the symmetry A^{⊗m} ⊗ A -> A ⊗ A^{⊗m}.
inline GenWord pull_last_to_front(Presentation p, std::size_t m) {
  if (m == 0) return GenWord::id(p, 1);
  std::vector<GenWord> crosses;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<GenWord> parts;
    if (i) parts.push_back(GenWord::id(p, i));
    parts.push_back(GenWord::gen(p, Gen::Cross));
    if (m - 1 - i) parts.push_back(GenWord::id(p, m - 1 - i));
    crosses.push_back(GenWord::tensor(parts));
  }
  return GenWord::compose(crosses);
}

inline Relation swap_natural(Presentation p, const std::string& name, const GenWord& a) {
  GenWord one = GenWord::id(p, 1);
  GenWord lhs = GenWord::compose({pull_last_to_front(p, a.target()), GenWord::tensor({a, one})});
  GenWord rhs = GenWord::compose({GenWord::tensor({one, a}), pull_last_to_front(p, a.source())});
  return {"symmetric: swap natural in " + name, lhs, rhs};
}

}  // namespace detail

/// Axioms a target datum must satisfy, named after the universal property
/// (special commutative Frobenius object with involution for ParZ2, self-dual
/// rigid object with neutralizer for ParT), plus the symmetric structure.
inline std::vector<Relation> datum_axioms(Presentation p) {
  std::vector<std::tuple<std::string, std::string, std::string>> rows;
  if (p == Presentation::ParZ2) {
    rows = {
        {"frobenius: unit right", "(compose merge (tensor id bottompin))", "id"},
        {"frobenius: unit left", "(compose merge (tensor bottompin id))", "id"},
        {"frobenius: counit right", "(compose (tensor id toppin) split)", "id"},
        {"frobenius: counit left", "(compose (tensor toppin id) split)", "id"},
        {"frobenius: compatibility left", "(compose (tensor merge id) (tensor id split))", "(compose split merge)"},
        {"frobenius: compatibility right", "(compose (tensor id merge) (tensor split id))", "(compose split merge)"},
        {"commutative", "(compose merge cross)", "merge"},
        {"special", "(compose merge split)", "id"},
        {"dimension", "(compose toppin bottompin)", "(scale t (id 0))"},
        {"involution", "(compose (token -1) (token -1))", "id"},
        {"involution: comultiplicative", "(compose split (token -1))", "(compose (tensor (token -1) (token -1)) split)"},
        {"involution: fixes unit", "(compose (token -1) bottompin)", "bottompin"},
        {"involution: twisted special", "(compose merge (tensor (token -1) (token -1)) split)", "(token -1)"},
        {"involution: orthogonal right", "(compose merge (tensor id (token -1)) split)", "(scale 0 id)"},
        {"involution: orthogonal left", "(compose merge (tensor (token -1) id) split)", "(scale 0 id)"},
    };
  } else {
    rows = {
        {"rigid: snake left", "(compose (tensor id cap) (tensor cup id))", "id"},
        {"rigid: snake right", "(compose (tensor cap id) (tensor id cup))", "id"},
        {"dimension", "(compose cap cup)", "(scale t (id 0))"},
        {"neutralizer: idempotent", "(compose fourlegs fourlegs)", "fourlegs"},
        {"neutralizer: associative", "(compose (tensor id fourlegs) (tensor fourlegs id))",
         "(compose (tensor fourlegs id) (tensor id fourlegs))"},
        {"neutralizer: fixes coevaluation", "(compose fourlegs cup)", "cup"},
        {"neutralizer: fixes evaluation", "(compose cap fourlegs)", "cap"},
        {"neutralizer: slides on coevaluation", "(compose (tensor id fourlegs) (tensor cup id))",
         "(compose (tensor fourlegs id) (tensor id cup))"},
        {"neutralizer: slides on evaluation", "(compose (tensor cap id) (tensor id fourlegs))",
         "(compose (tensor id cap) (tensor fourlegs id))"},
    };
  }
  rows.emplace_back("symmetric: swap involutive", "(compose cross cross)", "(id 2)");
  rows.emplace_back("symmetric: braid", "(compose (tensor cross id) (tensor id cross) (tensor cross id))",
                    "(compose (tensor id cross) (tensor cross id) (tensor id cross))");
  auto out = detail::parse_relations(p, rows);
  std::vector<Gen> gens = p == Presentation::ParZ2
                              ? std::vector<Gen>{Gen::Merge, Gen::Split, Gen::BottomPin, Gen::TopPin}
                              : std::vector<Gen>{Gen::FourLegs, Gen::Cap, Gen::Cup};
  for (Gen g : gens) out.push_back(detail::swap_natural(p, name_of(g), GenWord::gen(p, g)));
  if (p == Presentation::ParZ2) out.push_back(detail::swap_natural(p, "token -1", GenWord::token(-1)));
  return out;
}

template <class M>
Report verify_datum(const TargetDatum<M>& d) {
  return verify_relations(datum_axioms(d.presentation), d, "datum");
}

/// Evaluation functor out of a presentation, available only for data that
/// pass every axiom.
template <class M>
class CheckedFunctor {
 public:
  explicit CheckedFunctor(TargetDatum<M> d) : datum_(std::move(d)) {
    Report r = verify_datum(datum_);
    if (const CheckResult* bad = first_failure(r)) throw DatumViolation("datum violates axiom '" + bad->check.substr(6) + "'");
  }

  M operator()(const GenWord& w) const { return eval_in_target(w, datum_); }
  const TargetDatum<M>& datum() const { return datum_; }

 private:
  TargetDatum<M> datum_;
};

// ---------------------------------------------------------------------------
// Canonical preimage words

/// φ′(σ): crossings of adjacent strands, peeling off the leftmost descent.
inline GenWord permutation_word(Presentation p, const Permutation& sigma) {
  std::size_t n = sigma.size();
  Permutation cur = sigma;
  std::vector<GenWord> crosses;
  while (true) {
    std::size_t i = 0;
    while (i + 1 < n && cur[i] < cur[i + 1]) ++i;
    if (i + 1 >= n) break;
    std::swap(cur[i], cur[i + 1]);  // cur ∘ s_i
    std::vector<GenWord> parts;
    if (i) parts.push_back(GenWord::id(p, i));
    parts.push_back(GenWord::gen(p, Gen::Cross));
    if (n - i - 2) parts.push_back(GenWord::id(p, n - i - 2));
    crosses.push_back(GenWord::tensor(parts));
  }
  if (crosses.empty()) return GenWord::id(p, n);
  // Each step replaced cur by cur ∘ s_i until cur = id, so σ is the product
  // of the recorded crossings with the last one outermost.
  std::reverse(crosses.begin(), crosses.end());
  return GenWord::compose(crosses);
}

namespace detail {

inline GenWord ids(Presentation p, std::size_t n) { return GenWord::id(p, n); }

/// Appends `id^n` to a tensor factor list when n > 0.
inline void pad(std::vector<GenWord>& parts, Presentation p, std::size_t n) {
  if (n) parts.push_back(ids(p, n));
}

// s_1 = id, s_n = (s_{n-1} ⊗ id) ∘ (id^{n-2} ⊗ F): one block on n bottoms and n tops.
inline GenWord s_ladder(std::size_t n) {
  const auto P = Presentation::ParT;
  if (n == 1) return ids(P, 1);
  std::vector<GenWord> lower;
  pad(lower, P, n - 2);
  lower.push_back(GenWord::gen(P, Gen::FourLegs));
  return GenWord::compose({GenWord::tensor({s_ladder(n - 1), ids(P, 1)}), GenWord::tensor(lower)});
}

// t_1 = id, t_{n+2} = (cap ⊗ id) ∘ (id ⊗ F) ∘ (id ⊗ id ⊗ t_n): one block on n bottoms and 1 top.
inline GenWord t_ladder(std::size_t n) {
  const auto P = Presentation::ParT;
  if (n == 1) return ids(P, 1);
  if (n % 2 == 0) throw NotEven("t ladder needs an odd number of inputs");
  return GenWord::compose({GenWord::tensor({GenWord::gen(P, Gen::Cap), ids(P, 1)}),
                           GenWord::tensor({ids(P, 1), GenWord::gen(P, Gen::FourLegs)}),
                           n == 3 ? ids(P, 3) : GenWord::tensor({ids(P, 2), t_ladder(n - 2)})});
}

inline GenWord even_block_word(std::size_t k, std::size_t l) {
  const auto P = Presentation::ParT;
  if ((k + l) % 2 != 0 || k + l == 0) throw NotEven("block of odd size");
  if (k == l) return s_ladder(k);
  if (l == 0) {
    if (k == 2) return GenWord::gen(P, Gen::Cap);
    return GenWord::compose({GenWord::gen(P, Gen::Cap), GenWord::tensor({t_ladder(k - 1), ids(P, 1)})});
  }
  if (k == 0) return vertical_flip(even_block_word(l, 0));
  if (k < l) return vertical_flip(even_block_word(l, k));
  std::vector<GenWord> lower{t_ladder(k - l + 1)};
  pad(lower, P, l - 1);
  if (l == 1) return GenWord::tensor(lower);
  return GenWord::compose({s_ladder(l), GenWord::tensor(lower)});
}

// merges(a): a -> 1 (bottompin for a = 0); splits(b): 1 -> b (toppin for b = 0).
inline GenWord merges(std::size_t a) {
  const auto P = Presentation::ParZ2;
  if (a == 0) return GenWord::gen(P, Gen::BottomPin);
  if (a == 1) return ids(P, 1);
  return GenWord::compose({GenWord::gen(P, Gen::Merge), GenWord::tensor({merges(a - 1), ids(P, 1)})});
}

inline GenWord splits(std::size_t b) {
  const auto P = Presentation::ParZ2;
  if (b == 0) return GenWord::gen(P, Gen::TopPin);
  if (b == 1) return ids(P, 1);
  return GenWord::compose({GenWord::tensor({splits(b - 1), ids(P, 1)}), GenWord::gen(P, Gen::Split)});
}

inline GenWord colored_block_word(std::size_t a, std::size_t b) {
  if (a == 0 && b == 1) return merges(0);
  if (a == 1 && b == 0) return splits(0);
  if (a == 1) return splits(b);
  if (b == 1) return merges(a);
  return GenWord::compose({splits(b), merges(a)});
}

template <class BlockWord>
GenWord assemble_normal_form(Presentation p, const Partition& part, BlockWord block_word) {
  NormalForm nf = normal_form(part);
  bool strands_only = std::all_of(nf.block_shapes.begin(), nf.block_shapes.end(),
                                  [](const auto& s) { return s.first == 1 && s.second == 1; });
  std::vector<GenWord> factors;
  if (nf.sigma != identity_permutation(nf.sigma.size())) factors.push_back(permutation_word(p, nf.sigma));
  if (!strands_only) {
    std::vector<GenWord> blocks;
    for (auto [a, b] : nf.block_shapes) blocks.push_back(block_word(a, b));
    factors.push_back(GenWord::tensor(blocks));
  }
  if (nf.rho != identity_permutation(nf.rho.size())) factors.push_back(permutation_word(p, nf.rho));
  if (factors.empty()) factors.push_back(GenWord::id(p, part.bottom()));
  return GenWord::compose(factors);
}

inline GenWord token_row(const std::vector<Sign>& labels, std::size_t from, std::size_t count) {
  const auto P = Presentation::ParZ2;
  std::vector<GenWord> parts;
  for (std::size_t i = 0; i < count; ++i)
    parts.push_back(labels[from + i] == 1 ? GenWord::id(P, 1) : GenWord::token(-1));
  return GenWord::tensor(parts);
}

}  // namespace detail

/// Word in the ParT generators whose image under G̃ is exactly `p`.
inline GenWord canonical_word(const Partition& p) {
  if (!p.is_even()) throw NotEven("canonical word requested for non-even diagram " + to_string(p));
  return detail::assemble_normal_form(Presentation::ParT, p, detail::even_block_word);
}

/// Word in the ParZ2 generators whose image under H̃ is exactly `c`.
inline GenWord canonical_word_colored(const ColoredPartition& c) {
  const auto P = Presentation::ParZ2;
  GenWord core = detail::assemble_normal_form(P, c.base(), detail::colored_block_word);
  std::size_t k = c.bottom(), l = c.top();
  const auto& z = c.labels();
  bool bottom_plain = std::all_of(z.begin(), z.begin() + static_cast<long>(k), [](Sign s) { return s == 1; });
  bool top_plain = std::all_of(z.begin() + static_cast<long>(k), z.end(), [](Sign s) { return s == 1; });
  std::vector<GenWord> factors;
  if (!top_plain) factors.push_back(detail::token_row(z, k, l));
  factors.push_back(core);
  if (!bottom_plain) factors.push_back(detail::token_row(z, 0, k));
  return GenWord::compose(factors);
}

}  // namespace octacat
