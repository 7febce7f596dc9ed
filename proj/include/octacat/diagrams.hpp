#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "union_find.hpp"

namespace octacat {

enum class Row : std::uint8_t { Bottom, Top };

/// A vertex of a diagram of size (k, l); `index` is 1-based within its row.
struct Vertex {
  Row row = Row::Bottom;
  std::size_t index = 1;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;

  std::string str() const { return std::to_string(index) + (row == Row::Top ? "'" : ""); }
};

/// Permutation of {0..n-1}; `perm[i]` is the image of `i`.
using Permutation = std::vector<std::size_t>;

inline Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  return p;
}

inline Permutation inverse(const Permutation& p) {
  Permutation inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = i;
  return inv;
}

/// (a * b)(i) = a(b(i)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

/// Set partition of {1..k} (bottom row) and {1'..l'} (top row).
///
/// Vertices are addressed by position: bottom vertex i sits at i-1 and top
/// vertex j' at k+j-1. The partition is stored as a restricted growth string
/// over that order, which is exactly the canonical form "blocks sorted
/// internally, then ordered by their minimal vertex": two values compare
/// equal iff they describe the same set partition.
class Partition {
 public:
  using BlockId = std::uint16_t;

  Partition() = default;

  /// Builds from an arbitrary block labelling of the k+l positions.
  template <class Labels>
  static Partition from_labels(std::size_t k, std::size_t l, const Labels& labels) {
    Partition p;
    p.k_ = k;
    p.l_ = l;
    p.rgs_.resize(k + l);
    std::vector<std::pair<std::size_t, BlockId>> seen;
    for (std::size_t pos = 0; pos < k + l; ++pos) {
      auto key = static_cast<std::size_t>(labels[pos]);
      auto it = std::find_if(seen.begin(), seen.end(), [&](const auto& e) { return e.first == key; });
      if (it == seen.end()) {
        seen.emplace_back(key, static_cast<BlockId>(seen.size()));
        p.rgs_[pos] = seen.back().second;
      } else {
        p.rgs_[pos] = it->second;
      }
    }
    p.blocks_ = seen.size();
    return p;
  }

  std::size_t bottom() const { return k_; }
  std::size_t top() const { return l_; }
  std::size_t vertex_count() const { return k_ + l_; }
  std::size_t block_count() const { return blocks_; }

  /// Block of the vertex at `pos` (see class comment for positions).
  BlockId block_at(std::size_t pos) const { return rgs_[pos]; }
  const std::vector<BlockId>& block_labels() const { return rgs_; }

  std::size_t position(const Vertex& v) const { return v.row == Row::Bottom ? v.index - 1 : k_ + v.index - 1; }
  Vertex vertex_at(std::size_t pos) const {
    return pos < k_ ? Vertex{Row::Bottom, pos + 1} : Vertex{Row::Top, pos - k_ + 1};
  }

  std::vector<std::vector<Vertex>> blocks() const {
    std::vector<std::vector<Vertex>> out(blocks_);
    for (std::size_t pos = 0; pos < rgs_.size(); ++pos) out[rgs_[pos]].push_back(vertex_at(pos));
    return out;
  }

  /// (bottom count, top count) of every block.
  std::vector<std::pair<std::size_t, std::size_t>> block_shapes() const {
    std::vector<std::pair<std::size_t, std::size_t>> out(blocks_, {0, 0});
    for (std::size_t pos = 0; pos < rgs_.size(); ++pos) {
      if (pos < k_) {
        ++out[rgs_[pos]].first;
      } else {
        ++out[rgs_[pos]].second;
      }
    }
    return out;
  }

  bool is_even() const {
    std::vector<std::size_t> count(blocks_, 0);
    for (auto b : rgs_) ++count[b];
    return std::all_of(count.begin(), count.end(), [](std::size_t c) { return c % 2 == 0; });
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    if (auto c = a.k_ <=> b.k_; c != 0) return c;
    if (auto c = a.l_ <=> b.l_; c != 0) return c;
    return a.rgs_ <=> b.rgs_;
  }

 private:
  std::size_t k_ = 0;
  std::size_t l_ = 0;
  std::size_t blocks_ = 0;
  std::vector<BlockId> rgs_;
};

/// Validating constructor from explicit blocks.
inline Partition make_partition(std::size_t k, std::size_t l, const std::vector<std::vector<Vertex>>& blocks) {
  constexpr std::size_t unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> labels(k + l, unset);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw Error("empty block in partition");
    for (const Vertex& v : blocks[b]) {
      std::size_t limit = v.row == Row::Bottom ? k : l;
      if (v.index < 1 || v.index > limit) throw OutOfRangeVertex("vertex " + v.str() + " out of range");
      std::size_t pos = v.row == Row::Bottom ? v.index - 1 : k + v.index - 1;
      if (labels[pos] != unset) throw DuplicateVertex("vertex " + v.str() + " appears twice");
      labels[pos] = b;
    }
  }
  for (std::size_t pos = 0; pos < k + l; ++pos) {
    if (labels[pos] == unset) {
      Vertex v = pos < k ? Vertex{Row::Bottom, pos + 1} : Vertex{Row::Top, pos - k + 1};
      throw MissingVertex("vertex " + v.str() + " is missing");
    }
  }
  return Partition::from_labels(k, l, labels);
}

/// Identity diagram {1,1'},...,{n,n'}.
inline Partition identity_partition(std::size_t n) {
  std::vector<std::size_t> labels(2 * n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = labels[n + i] = i;
  return Partition::from_labels(n, n, labels);
}

/// A single block containing every vertex of size (k, l).
inline Partition one_block(std::size_t k, std::size_t l) {
  std::vector<std::size_t> labels(k + l, 0);
  return Partition::from_labels(k, l, labels);
}

/// Horizontal concatenation: q sits to the right of p.
inline Partition tensor(const Partition& p, const Partition& q) {
  std::size_t k = p.bottom(), l = p.top(), m = q.bottom(), n = q.top();
  std::size_t off = p.block_count();
  std::vector<std::size_t> labels;
  labels.reserve(k + l + m + n);
  for (std::size_t i = 0; i < k; ++i) labels.push_back(p.block_at(i));
  for (std::size_t i = 0; i < m; ++i) labels.push_back(off + q.block_at(i));
  for (std::size_t j = 0; j < l; ++j) labels.push_back(p.block_at(k + j));
  for (std::size_t j = 0; j < n; ++j) labels.push_back(off + q.block_at(m + j));
  return Partition::from_labels(k + m, l + n, labels);
}

/// Swaps the two rows.
inline Partition involution(const Partition& p) {
  std::size_t k = p.bottom(), l = p.top();
  std::vector<std::size_t> labels;
  labels.reserve(k + l);
  for (std::size_t j = 0; j < l; ++j) labels.push_back(p.block_at(k + j));
  for (std::size_t i = 0; i < k; ++i) labels.push_back(p.block_at(i));
  return Partition::from_labels(l, k, labels);
}

/// φ(σ): blocks {i, σ(i)'}.
inline Partition perm_partition(const Permutation& sigma) {
  std::size_t n = sigma.size();
  std::vector<std::size_t> labels(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = i;
    labels[n + sigma[i]] = i;
  }
  return Partition::from_labels(n, n, labels);
}

template <class D>
struct StackResult {
  D composite;
  std::size_t loops = 0;

  friend bool operator==(const StackResult&, const StackResult&) = default;
};

namespace detail {

// Shared skeleton of vertical concatenation: nodes are the blocks of p
// followed by the blocks of q, glued along the l middle vertices.
struct StackGraph {
  std::size_t p_blocks;
  std::size_t q_blocks;
  ParityUnionFind uf;

  StackGraph(const Partition& q, const Partition& p)
      : p_blocks(p.block_count()), q_blocks(q.block_count()), uf(p.block_count() + q.block_count()) {}

  std::size_t count_loops(const Partition& q, const Partition& p) {
    std::vector<char> outer(p_blocks + q_blocks, 0);
    for (std::size_t i = 0; i < p.bottom(); ++i) outer[uf.root(p.block_at(i))] = 1;
    for (std::size_t j = 0; j < q.top(); ++j) outer[uf.root(p_blocks + q.block_at(q.bottom() + j))] = 1;
    std::size_t loops = 0;
    for (std::size_t node = 0; node < p_blocks + q_blocks; ++node)
      if (uf.root(node) == node && !outer[node]) ++loops;
    return loops;
  }

  Partition composite(const Partition& q, const Partition& p) {
    std::vector<std::size_t> labels;
    labels.reserve(p.bottom() + q.top());
    for (std::size_t i = 0; i < p.bottom(); ++i) labels.push_back(uf.root(p.block_at(i)));
    for (std::size_t j = 0; j < q.top(); ++j) labels.push_back(uf.root(p_blocks + q.block_at(q.bottom() + j)));
    return Partition::from_labels(p.bottom(), q.top(), labels);
  }
};

}  // namespace detail

/// Stacks q (size (l, m)) on top of p (size (k, l)).
inline StackResult<Partition> stack(const Partition& q, const Partition& p) {
  if (q.bottom() != p.top())
    throw SizeMismatch("cannot stack: top of lower diagram has " + std::to_string(p.top()) +
                       " vertices, bottom of upper has " + std::to_string(q.bottom()));
  detail::StackGraph g(q, p);
  std::size_t l = p.top();
  for (std::size_t j = 0; j < l; ++j) g.uf.unite(p.block_at(p.bottom() + j), g.p_blocks + q.block_at(j));
  return {g.composite(q, p), g.count_loops(q, p)};
}

// ---------------------------------------------------------------------------
// Z2-coloured partitions

/// Label in Z2 = {+1, -1}.
using Sign = std::int8_t;

/// A partition with a ±1 label on each vertex, stored as the representative
/// of its class whose minimal vertex in every block is labelled +1.
class ColoredPartition {
 public:
  ColoredPartition() = default;

  /// Canonicalizes (p, z); `z` is indexed by vertex position.
  ColoredPartition(Partition base, std::vector<Sign> labels) : base_(std::move(base)), labels_(std::move(labels)) {
    if (labels_.size() != base_.vertex_count())
      throw SizeMismatch("label vector has " + std::to_string(labels_.size()) + " entries, diagram has " +
                         std::to_string(base_.vertex_count()) + " vertices");
    std::vector<Sign> flip(base_.block_count(), 0);
    for (std::size_t pos = 0; pos < labels_.size(); ++pos) {
      if (labels_[pos] != 1 && labels_[pos] != -1) throw Error("labels must be +1 or -1");
      auto b = base_.block_at(pos);
      if (flip[b] == 0) flip[b] = labels_[pos];
      labels_[pos] = static_cast<Sign>(labels_[pos] * flip[b]);
    }
  }

  /// All labels +1.
  explicit ColoredPartition(Partition base) : base_(std::move(base)), labels_(base_.vertex_count(), 1) {}

  const Partition& base() const { return base_; }
  const std::vector<Sign>& labels() const { return labels_; }
  Sign label_at(std::size_t pos) const { return labels_[pos]; }
  std::size_t bottom() const { return base_.bottom(); }
  std::size_t top() const { return base_.top(); }
  bool is_uncolored() const {
    return std::all_of(labels_.begin(), labels_.end(), [](Sign s) { return s == 1; });
  }

  friend bool operator==(const ColoredPartition&, const ColoredPartition&) = default;
  friend auto operator<=>(const ColoredPartition& a, const ColoredPartition& b) {
    if (auto c = a.base_ <=> b.base_; c != 0) return c;
    return a.labels_ <=> b.labels_;
  }

 private:
  Partition base_;
  std::vector<Sign> labels_;
};

inline ColoredPartition colored_canon(const Partition& p, const std::vector<Sign>& z) { return ColoredPartition(p, z); }

inline ColoredPartition tensor(const ColoredPartition& p, const ColoredPartition& q) {
  std::size_t k = p.bottom(), l = p.top(), m = q.bottom();
  std::vector<Sign> z;
  z.reserve(p.labels().size() + q.labels().size());
  z.insert(z.end(), p.labels().begin(), p.labels().begin() + static_cast<long>(k));
  z.insert(z.end(), q.labels().begin(), q.labels().begin() + static_cast<long>(m));
  z.insert(z.end(), p.labels().begin() + static_cast<long>(k), p.labels().begin() + static_cast<long>(k + l));
  z.insert(z.end(), q.labels().begin() + static_cast<long>(m), q.labels().end());
  return ColoredPartition(tensor(p.base(), q.base()), std::move(z));
}

inline ColoredPartition involution(const ColoredPartition& p) {
  std::size_t k = p.bottom();
  std::vector<Sign> z(p.labels().begin() + static_cast<long>(k), p.labels().end());
  z.insert(z.end(), p.labels().begin(), p.labels().begin() + static_cast<long>(k));
  return ColoredPartition(involution(p.base()), std::move(z));
}

/// Vertical concatenation of coloured classes.
///
/// Each middle vertex j imposes flip(P) * flip(Q) = z1(j') * z2(j) between
/// the p-block P and the q-block Q that meet there. The pair is compatible
/// iff that Z2 system is solvable; flipping by a solution makes every middle
/// product +1, after which the composite keeps the flipped outer labels.
/// Returns nullopt for incompatible pairs.
inline std::optional<StackResult<ColoredPartition>> colored_stack(const ColoredPartition& q,
                                                                   const ColoredPartition& p) {
  const Partition& pb = p.base();
  const Partition& qb = q.base();
  if (qb.bottom() != pb.top())
    throw SizeMismatch("cannot stack: top of lower diagram has " + std::to_string(pb.top()) +
                       " vertices, bottom of upper has " + std::to_string(qb.bottom()));
  detail::StackGraph g(qb, pb);
  std::size_t k = pb.bottom(), l = pb.top();
  for (std::size_t j = 0; j < l; ++j) {
    unsigned w = (p.label_at(k + j) * q.label_at(j)) < 0 ? 1U : 0U;
    if (!g.uf.unite(pb.block_at(k + j), g.p_blocks + qb.block_at(j), w)) return std::nullopt;
  }
  std::size_t loops = g.count_loops(qb, pb);
  Partition composite = g.composite(qb, pb);
  std::vector<Sign> z;
  z.reserve(composite.vertex_count());
  for (std::size_t i = 0; i < k; ++i) {
    unsigned s = g.uf.find(pb.block_at(i)).second;
    z.push_back(static_cast<Sign>(s ? -p.label_at(i) : p.label_at(i)));
  }
  for (std::size_t j = 0; j < qb.top(); ++j) {
    unsigned s = g.uf.find(g.p_blocks + qb.block_at(qb.bottom() + j)).second;
    Sign lab = q.label_at(qb.bottom() + j);
    z.push_back(static_cast<Sign>(s ? -lab : lab));
  }
  return StackResult<ColoredPartition>{ColoredPartition(std::move(composite), std::move(z)), loops};
}

// ---------------------------------------------------------------------------
// Normal forms

/// p = φ(sigma) ∘ p' ∘ φ(rho), with p' the tensor product of single-block
/// diagrams of the listed shapes, taken in `block_order`.
struct NormalForm {
  Permutation sigma;                 // of the top row
  Permutation rho;                   // of the bottom row
  std::vector<std::size_t> block_order;
  std::vector<std::pair<std::size_t, std::size_t>> block_shapes;  // (bottom, top) per factor of p'

  Partition middle() const {
    Partition acc = identity_partition(0);
    for (auto [a, b] : block_shapes) acc = tensor(acc, one_block(a, b));
    return acc;
  }
};

/// Blocks ordered by minimal bottom vertex, then by minimal top vertex.
inline NormalForm normal_form(const Partition& p) {
  std::size_t k = p.bottom(), l = p.top(), nb = p.block_count();
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  std::vector<std::pair<std::size_t, std::size_t>> first(nb, {none, none});
  for (std::size_t pos = 0; pos < k + l; ++pos) {
    auto b = p.block_at(pos);
    if (pos < k) {
      first[b].first = std::min(first[b].first, pos);
    } else {
      first[b].second = std::min(first[b].second, pos - k);
    }
  }
  NormalForm nf;
  nf.block_order.resize(nb);
  for (std::size_t b = 0; b < nb; ++b) nf.block_order[b] = b;
  std::stable_sort(nf.block_order.begin(), nf.block_order.end(),
                   [&](std::size_t a, std::size_t b) { return first[a] < first[b]; });
  auto shapes = p.block_shapes();
  nf.rho.assign(k, 0);
  nf.sigma.assign(l, 0);
  std::size_t next_bottom = 0, next_top = 0;
  for (std::size_t b : nf.block_order) {
    nf.block_shapes.push_back(shapes[b]);
    for (std::size_t i = 0; i < k; ++i)
      if (p.block_at(i) == b) nf.rho[i] = next_bottom++;
    for (std::size_t j = 0; j < l; ++j)
      if (p.block_at(k + j) == b) nf.sigma[next_top++] = j;
  }
  return nf;
}

/// Rebuilds the partition from its normal form by two loop-free stackings.
inline Partition reassemble(const NormalForm& nf) {
  auto lower = stack(nf.middle(), perm_partition(nf.rho));
  auto upper = stack(perm_partition(nf.sigma), lower.composite);
  if (lower.loops != 0 || upper.loops != 0) throw Error("normal form reassembly produced loops");
  return upper.composite;
}

// ---------------------------------------------------------------------------
// Enumeration

enum class DiagramKind { All, Even, ColoredClasses };

/// All partitions of size (k, l) in canonical order, via restricted growth strings.
inline std::vector<Partition> enumerate_partitions(std::size_t k, std::size_t l, bool even_only = false) {
  std::size_t n = k + l;
  std::vector<Partition> out;
  std::vector<std::size_t> rgs(n, 0);
  auto emit = [&] {
    Partition p = Partition::from_labels(k, l, rgs);
    if (!even_only || p.is_even()) out.push_back(std::move(p));
  };
  if (n == 0) {
    emit();
    return out;
  }
  // Iterative RGS successor: rgs[i] <= 1 + max(rgs[0..i-1]).
  std::vector<std::size_t> prefix_max(n, 0);
  while (true) {
    emit();
    std::size_t i = n;
    while (i-- > 1) {
      if (rgs[i] <= prefix_max[i - 1]) break;
    }
    if (i == 0) break;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
  return out;
}

inline std::vector<Partition> enumerate_even(std::size_t k, std::size_t l) { return enumerate_partitions(k, l, true); }

/// Canonical representatives of all coloured classes of size (k, l).
inline std::vector<ColoredPartition> enumerate_colored(std::size_t k, std::size_t l) {
  std::vector<ColoredPartition> out;
  for (const Partition& p : enumerate_partitions(k, l)) {
    std::vector<std::size_t> free_positions;
    std::vector<char> seen(p.block_count(), 0);
    for (std::size_t pos = 0; pos < p.vertex_count(); ++pos) {
      if (seen[p.block_at(pos)]) {
        free_positions.push_back(pos);
      } else {
        seen[p.block_at(pos)] = 1;
      }
    }
    std::size_t count = std::size_t{1} << free_positions.size();
    for (std::size_t mask = 0; mask < count; ++mask) {
      std::vector<Sign> z(p.vertex_count(), 1);
      for (std::size_t b = 0; b < free_positions.size(); ++b)
        if (mask & (std::size_t{1} << b)) z[free_positions[b]] = -1;
      out.emplace_back(p, std::move(z));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Text grammar:  k>l: {v,...},{v,...}   with v = 3 | 3'   and optional :-1

namespace detail {

struct ParsedVertex {
  Vertex v;
  Sign label = 1;
};

struct ParsedDiagram {
  std::size_t k = 0;
  std::size_t l = 0;
  std::vector<std::vector<ParsedVertex>> blocks;
  bool has_labels = false;
};

class DiagramLexer {
 public:
  explicit DiagramLexer(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  std::size_t number() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::stoul(std::string(s_.substr(start, pos_ - start)));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in diagram '" + std::string(s_) + "'");
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

inline ParsedDiagram parse_diagram_text(std::string_view text) {
  DiagramLexer lx(text);
  ParsedDiagram d;
  d.k = lx.number();
  lx.expect('>');
  d.l = lx.number();
  lx.expect(':');
  if (lx.at_end()) return d;
  do {
    lx.expect('{');
    std::vector<ParsedVertex> block;
    do {
      ParsedVertex pv;
      pv.v.index = lx.number();
      pv.v.row = lx.accept('\'') ? Row::Top : Row::Bottom;
      if (lx.accept(':')) {
        int sign = 1;
        if (lx.accept('-')) {
          sign = -1;
        } else {
          lx.accept('+');
        }
        if (lx.number() != 1) lx.fail("label must be 1 or -1");
        pv.label = static_cast<Sign>(sign);
        d.has_labels = true;
      }
      block.push_back(pv);
    } while (lx.accept(','));
    lx.expect('}');
    d.blocks.push_back(std::move(block));
  } while (lx.accept(','));
  if (!lx.at_end()) lx.fail("trailing characters");
  return d;
}

inline std::string format_blocks(const Partition& p, const std::vector<Sign>* labels) {
  std::string out = std::to_string(p.bottom()) + ">" + std::to_string(p.top()) + ":";
  auto blocks = p.blocks();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    out += b == 0 ? " {" : ",{";
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      if (i) out += ",";
      out += blocks[b][i].str();
      if (labels && (*labels)[p.position(blocks[b][i])] == -1) out += ":-1";
    }
    out += "}";
  }
  return out;
}

}  // namespace detail

inline std::string to_string(const Partition& p) { return detail::format_blocks(p, nullptr); }
inline std::string to_string(const ColoredPartition& c) { return detail::format_blocks(c.base(), &c.labels()); }

inline Partition parse_partition(std::string_view text) {
  auto d = detail::parse_diagram_text(text);
  if (d.has_labels) throw ParseError("labels are not allowed in an uncoloured diagram: '" + std::string(text) + "'");
  std::vector<std::vector<Vertex>> blocks;
  for (auto& b : d.blocks) {
    blocks.emplace_back();
    for (auto& pv : b) blocks.back().push_back(pv.v);
  }
  return make_partition(d.k, d.l, blocks);
}

inline ColoredPartition parse_colored(std::string_view text) {
  auto d = detail::parse_diagram_text(text);
  std::vector<std::vector<Vertex>> blocks;
  for (auto& b : d.blocks) {
    blocks.emplace_back();
    for (auto& pv : b) blocks.back().push_back(pv.v);
  }
  Partition p = make_partition(d.k, d.l, blocks);
  std::vector<Sign> z(p.vertex_count(), 1);
  for (auto& b : d.blocks)
    for (auto& pv : b) z[p.position(pv.v)] = pv.label;
  return ColoredPartition(std::move(p), std::move(z));
}

}  // namespace octacat
