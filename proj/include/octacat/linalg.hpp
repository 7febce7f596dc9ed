#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "polyq.hpp"

namespace octacat {

/// Exact sparse rational matrix; each row keeps its nonzero entries by column.
class MatrixQ {
 public:
  using Row = std::map<std::size_t, Rational>;

  MatrixQ() = default;
  MatrixQ(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows) {}

  static MatrixQ identity(std::size_t n) {
    MatrixQ m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace(i, 1);
    return m;
  }

  std::size_t rows() const { return data_.size(); }
  std::size_t cols() const { return cols_; }
  const Row& row(std::size_t r) const { return data_[r]; }
  const std::vector<Row>& row_data() const { return data_; }

  Rational get(std::size_t r, std::size_t c) const {
    auto it = data_[r].find(c);
    return it == data_[r].end() ? Rational(0) : it->second;
  }
  void set(std::size_t r, std::size_t c, const Rational& v) {
    if (r >= rows() || c >= cols_) throw SizeMismatch("matrix index out of range");
    if (v == 0) {
      data_[r].erase(c);
    } else {
      Rational& x = data_[r][c];
      x = v;
      x.canonicalize();
    }
  }
  void add_to(std::size_t r, std::size_t c, const Rational& v) {
    if (v == 0) return;
    auto [it, inserted] = data_[r].try_emplace(c, v);
    if (inserted) {
      it->second.canonicalize();
    } else {
      it->second += v;
      if (it->second == 0) data_[r].erase(it);
    }
  }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
  }
  bool is_zero() const { return nonzeros() == 0; }

  MatrixQ transpose() const {
    MatrixQ t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r)
      for (const auto& [c, v] : data_[r]) t.data_[c].emplace(r, v);
    return t;
  }

  MatrixQ& operator+=(const MatrixQ& o) {
    check_same_shape(o);
    for (std::size_t r = 0; r < rows(); ++r)
      for (const auto& [c, v] : o.data_[r]) add_to(r, c, v);
    return *this;
  }
  MatrixQ& operator-=(const MatrixQ& o) {
    check_same_shape(o);
    for (std::size_t r = 0; r < rows(); ++r)
      for (const auto& [c, v] : o.data_[r]) add_to(r, c, -v);
    return *this;
  }
  MatrixQ& operator*=(const Rational& s) {
    if (s == 0) {
      for (auto& r : data_) r.clear();
      return *this;
    }
    for (auto& r : data_)
      for (auto& [c, v] : r) v *= s;
    return *this;
  }

  friend MatrixQ operator+(MatrixQ a, const MatrixQ& b) { return a += b; }
  friend MatrixQ operator-(MatrixQ a, const MatrixQ& b) { return a -= b; }
  friend MatrixQ operator*(MatrixQ a, const Rational& s) { return a *= s; }
  friend MatrixQ operator*(const Rational& s, MatrixQ a) { return a *= s; }

  friend MatrixQ operator*(const MatrixQ& a, const MatrixQ& b) {
    if (a.cols_ != b.rows())
      throw SizeMismatch("matrix product: " + std::to_string(a.cols_) + " columns vs " + std::to_string(b.rows()) +
                         " rows");
    MatrixQ out(a.rows(), b.cols_);
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (const auto& [m, x] : a.data_[r])
        for (const auto& [c, y] : b.data_[m]) out.add_to(r, c, x * y);
    return out;
  }

  friend bool operator==(const MatrixQ&, const MatrixQ&) = default;

  void check_same_shape(const MatrixQ& o) const {
    if (rows() != o.rows() || cols_ != o.cols_) throw SizeMismatch("matrix shapes differ");
  }

 private:
  std::size_t cols_ = 0;
  std::vector<Row> data_;
};

/// Kronecker product; the left factor indexes the most significant digit.
inline MatrixQ kron(const MatrixQ& a, const MatrixQ& b) {
  MatrixQ out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (const auto& [c, x] : a.row(r))
      for (std::size_t rr = 0; rr < b.rows(); ++rr)
        for (const auto& [cc, y] : b.row(rr)) out.set(r * b.rows() + rr, c * b.cols() + cc, x * y);
  return out;
}

inline MatrixQ kron_power(const MatrixQ& a, std::size_t k) {
  MatrixQ acc = MatrixQ::identity(1);
  for (std::size_t i = 0; i < k; ++i) acc = kron(acc, a);
  return acc;
}

/// Reduced row echelon form with smallest-index pivoting.
struct Rref {
  MatrixQ reduced;                  // nonzero rows only
  std::vector<std::size_t> pivots;  // pivot column of each row
};

inline Rref rref(const MatrixQ& m) {
  std::vector<MatrixQ::Row> rows = m.row_data();
  std::vector<std::size_t> pivots;
  for (std::size_t col = 0, next = 0; col < m.cols() && next < rows.size(); ++col) {
    std::size_t pick = rows.size();
    for (std::size_t r = next; r < rows.size(); ++r)
      if (rows[r].count(col)) {
        pick = r;
        break;
      }
    if (pick == rows.size()) continue;
    std::swap(rows[next], rows[pick]);
    Rational inv = 1 / rows[next].at(col);
    for (auto& [c, v] : rows[next]) v *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next) continue;
      auto it = rows[r].find(col);
      if (it == rows[r].end()) continue;
      Rational f = it->second;
      for (const auto& [c, v] : rows[next]) {
        auto [jt, inserted] = rows[r].try_emplace(c, -f * v);
        if (!inserted) {
          jt->second -= f * v;
          if (jt->second == 0) rows[r].erase(jt);
        }
      }
    }
    pivots.push_back(col);
    ++next;
  }
  Rref out{MatrixQ(pivots.size(), m.cols()), pivots};
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (const auto& [c, v] : rows[r]) out.reduced.set(r, c, v);
  return out;
}

/// Rank factorization E = C R with R C = I, C the pivot columns of E.
struct Splitting {
  MatrixQ include;  // C
  MatrixQ project;  // R
};

inline Splitting split_image(const MatrixQ& e) {
  Rref r = rref(e);
  MatrixQ c(e.rows(), r.pivots.size());
  for (std::size_t row = 0; row < e.rows(); ++row)
    for (std::size_t j = 0; j < r.pivots.size(); ++j) c.set(row, j, e.get(row, r.pivots[j]));
  return {c, r.reduced};
}

// ---------------------------------------------------------------------------
// Rank of families of sparse vectors

/// Incremental echelon basis keyed by each row's leading (smallest) key.
template <class Key, class Field = Rational>
class EchelonBasis {
 public:
  using Vec = std::map<Key, Field>;

  /// Reduces v against the basis; inserts the remainder if nonzero. Returns true if v was independent.
  bool insert(Vec v) {
    reduce(v);
    if (v.empty()) return false;
    Field inv = 1 / v.begin()->second;
    for (auto& [k, x] : v) x *= inv;
    Key lead = v.begin()->first;
    pivots_.emplace(lead, std::move(v));
    return true;
  }

  /// True if v lies in the span.
  bool contains(Vec v) const {
    reduce(v);
    return v.empty();
  }

  std::size_t rank() const { return pivots_.size(); }

 private:
  // Pivots are monic, so subtracting one clears its lead and only touches larger keys.
  void reduce(Vec& v) const {
    for (auto it = v.begin(); it != v.end();) {
      auto p = pivots_.find(it->first);
      if (p == pivots_.end()) {
        ++it;
        continue;
      }
      Key key = it->first;
      Field f = it->second;
      for (const auto& [k, x] : p->second) {
        auto [jt, inserted] = v.try_emplace(k, -f * x);
        if (!inserted) {
          jt->second -= f * x;
          if (jt->second == 0) v.erase(jt);
        }
      }
      it = v.upper_bound(key);
    }
  }

  std::map<Key, Vec> pivots_;
};

template <class Key>
std::size_t rank_of(const std::vector<std::map<Key, Rational>>& vectors) {
  EchelonBasis<Key> basis;
  for (const auto& v : vectors) basis.insert(v);
  return basis.rank();
}

inline std::size_t rank(const MatrixQ& m) {
  EchelonBasis<std::size_t> basis;
  for (const auto& r : m.row_data()) basis.insert(r);
  return basis.rank();
}

/// Large random rational with numerator in [10^6, 10^9) and denominator in [1, 10^4).
inline Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(1'000'000L, 999'999'999L);
  std::uniform_int_distribution<long> den(1L, 9'999L);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

struct RankResult {
  std::size_t rank = 0;
  std::vector<Rational> points;
  std::vector<std::size_t> ranks_at_points;
  bool agreed = true;
};

/// Rank over Q(t) of PolyQ-valued vectors: the larger of the ranks at two
/// seeded random specializations. A specialization can only lower the rank,
/// and `agreed` records whether both points gave the same answer.
template <class Key>
RankResult rank_over_rational_functions(const std::vector<std::map<Key, PolyQ>>& vectors, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  RankResult out;
  for (int attempt = 0; attempt < 2; ++attempt) {
    Rational x = random_rational(rng);
    while (std::find(out.points.begin(), out.points.end(), x) != out.points.end()) x = random_rational(rng);
    EchelonBasis<Key> basis;
    for (const auto& v : vectors) {
      std::map<Key, Rational> s;
      for (const auto& [k, p] : v) {
        Rational y = p.eval(x);
        if (y != 0) s.emplace(k, y);
      }
      basis.insert(std::move(s));
    }
    out.points.push_back(x);
    out.ranks_at_points.push_back(basis.rank());
  }
  out.rank = std::max(out.ranks_at_points[0], out.ranks_at_points[1]);
  out.agreed = out.ranks_at_points[0] == out.ranks_at_points[1];
  return out;
}

/// Deterministic rank over Q(t) by fraction-free elimination on PolyQ rows.
template <class Key>
std::size_t rank_symbolic(const std::vector<std::map<Key, PolyQ>>& vectors) {
  std::map<Key, std::map<Key, PolyQ>> pivots;
  for (auto v : vectors) {
    while (!v.empty()) {
      auto p = pivots.find(v.begin()->first);
      if (p == pivots.end()) break;
      PolyQ a = p->second.begin()->second;  // pivot lead
      PolyQ b = v.begin()->second;
      std::map<Key, PolyQ> next;
      for (const auto& [k, x] : v) next[k] += x * a;
      for (const auto& [k, x] : p->second) next[k] -= x * b;
      for (auto it = next.begin(); it != next.end();) it = it->second.is_zero() ? next.erase(it) : std::next(it);
      v = std::move(next);
    }
    if (!v.empty()) {
      Key lead = v.begin()->first;
      pivots.emplace(lead, std::move(v));
    }
  }
  return pivots.size();
}

// ---------------------------------------------------------------------------
// JSON

inline nlohmann::json to_json(const MatrixQ& m) {
  nlohmann::json triplets = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) triplets.push_back({r, c, v.get_str()});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"triplets", triplets}};
}

inline MatrixQ matrix_from_json(const nlohmann::json& j) {
  try {
    MatrixQ m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
    for (const auto& t : j.at("triplets"))
      m.set(t.at(0).get<std::size_t>(), t.at(1).get<std::size_t>(), parse_rational(t.at(2).get<std::string>()));
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed matrix JSON: ") + e.what());
  }
}

inline std::string to_string(const MatrixQ& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ' ';
      out += m.get(r, c).get_str();
    }
    out += '\n';
  }
  return out;
}

}  // namespace octacat
