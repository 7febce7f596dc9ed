// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <octacat/octacat.hpp>

using namespace octacat;

namespace {

const PolyQ t = PolyQ::t();

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
  void require(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
  void absorb(const Report& r) {
    if (const CheckResult* bad = first_failure(r)) fail(bad->to_text());
  }
};

std::size_t power(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

// Set partitions of n points by brute force over all maps into {0..n-1}.
std::set<std::vector<int>> brute_partitions(std::size_t n) {
  std::set<std::vector<int>> out;
  std::vector<int> f(n, 0);
  while (true) {
    std::vector<int> rel(n);
    std::map<int, int> seen;
    for (std::size_t i = 0; i < n; ++i) rel[i] = seen.try_emplace(f[i], static_cast<int>(seen.size())).first->second;
    out.insert(rel);
    std::size_t i = 0;
    while (i < n && ++f[i] == static_cast<int>(n)) f[i++] = 0;
    if (i == n) break;
  }
  return out;
}

std::size_t bell(std::size_t n) {
  std::vector<std::size_t> row{1};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> next{row.back()};
    for (std::size_t x : row) next.push_back(next.back() + x);
    row = next;
  }
  return row.front();
}

std::map<std::size_t, Rational> flatten(const MatrixQ& m) {
  std::map<std::size_t, Rational> v;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, x] : m.row(r)) v.emplace(r * m.cols() + c, x);
  return v;
}

// ---------------------------------------------------------------------------

Outcome relation_suites() {
  Outcome o;
  auto z2 = verify_relations(relation_suite(Presentation::ParZ2), htilde_datum());
  auto pt = verify_relations(relation_suite(Presentation::ParT), gtilde_datum());
  o.absorb(z2);
  o.absorb(pt);
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(z2.size()) + " ParZ2 and " + std::to_string(pt.size()) +
              " ParT relations";
  return o;
}

Outcome counting() {
  Outcome o;
  for (std::size_t n = 0; n <= 8; ++n) {
    auto oracle = brute_partitions(n);
    o.require(oracle.size() == bell(n), "brute-force partition count differs from Bell(" + std::to_string(n) + ")");
    std::size_t even = 0;
    for (const auto& rgs : oracle) {
      std::map<int, int> size;
      for (int b : rgs) ++size[b];
      bool ok = true;
      for (const auto& [b, s] : size) ok = ok && s % 2 == 0;
      even += ok;
    }
    for (std::size_t k = 0; k <= n; ++k) {
      std::string at = "(" + std::to_string(k) + "," + std::to_string(n - k) + ")";
      o.require(enumerate_partitions(k, n - k).size() == bell(n), "|P" + at + "| != Bell");
      o.require(enumerate_even(k, n - k).size() == even, "|P_even" + at + "| != brute-force filter");
    }
  }
  o.require(enumerate_even(2, 2).size() == 4, "|P_even(2,2)| != 4");
  for (std::size_t n = 0; n <= 6; ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      std::size_t formula = 0, orbits = 0;
      for (const auto& p : enumerate_partitions(k, n - k)) {
        formula += std::size_t{1} << (n - p.block_count());
        std::set<std::vector<int>> seen;
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
          std::vector<int> z(n);
          for (std::size_t i = 0; i < n; ++i) z[i] = (mask >> i) & 1 ? -1 : 1;
          if (seen.count(z)) continue;
          ++orbits;
          for (std::size_t f = 0; f < (std::size_t{1} << p.block_count()); ++f) {
            auto w = z;
            for (std::size_t i = 0; i < n; ++i)
              if ((f >> p.block_at(i)) & 1) w[i] = -w[i];
            seen.insert(w);
          }
        }
      }
      std::size_t got = enumerate_colored(k, n - k).size();
      o.require(got == formula && got == orbits,
                "coloured classes (" + std::to_string(k) + "," + std::to_string(n - k) + "): " + std::to_string(got) +
                    " vs formula " + std::to_string(formula) + " vs orbits " + std::to_string(orbits));
    }
  return o;
}

template <class D>
void category_axioms(Outcome& o, const PolyQ& w, std::function<std::vector<D>(std::size_t, std::size_t)> basis) {
  using M = Morphism<D>;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<M>> b;
  for (std::size_t k = 0; k <= 2; ++k)
    for (std::size_t l = 0; l <= 2; ++l)
      for (const auto& d : basis(k, l)) b[{k, l}].push_back(M(d, w));
  const PolyQ a = t, c = PolyQ(1L) - t * t;
  for (std::size_t k = 0; k <= 2; ++k)
    for (std::size_t l = 0; l <= 2; ++l) {
      for (const auto& f : b[{k, l}]) {
        o.require(compose(M::identity(l, w), f) == f && compose(f, M::identity(k, w)) == f,
                  "identity law fails for " + to_string(f));
      }
      for (std::size_t m = 0; m <= 2; ++m) {
        const auto& fs = b[{k, l}];
        const auto& gs = b[{l, m}];
        for (std::size_t i = 0; i < gs.size(); ++i)
          for (std::size_t j = 0; j < fs.size(); ++j) {
            const auto& g = gs[i];
            const auto& f = fs[j];
            const auto& f2 = fs[(j + 1) % fs.size()];
            const auto& g2 = gs[(i + 1) % gs.size()];
            o.require(compose(g, f * a + f2 * c) == compose(g, f) * a + compose(g, f2) * c,
                      "right bilinearity fails");
            o.require(compose(g * a + g2 * c, f) == compose(g, f) * a + compose(g2, f) * c, "left bilinearity fails");
          }
        for (std::size_t p = 0; p <= 2; ++p) {
          const auto& hs = b[{m, p}];
          for (const auto& h : hs)
            for (const auto& g : gs) {
              M hg = compose(h, g);
              for (const auto& f : fs)
                if (!(compose(hg, f) == compose(h, compose(g, f)))) {
                  o.fail("associativity fails for " + to_string(h) + ", " + to_string(g) + ", " + to_string(f));
                  return;
                }
            }
        }
      }
    }
}

Outcome category_laws() {
  Outcome o;
  category_axioms<Partition>(o, t, [](std::size_t k, std::size_t l) { return enumerate_even(k, l); });
  category_axioms<ColoredPartition>(o, t, [](std::size_t k, std::size_t l) { return enumerate_colored(k, l); });
  return o;
}

Outcome interpolation_functoriality() {
  Outcome o;
  for (std::size_t n : {2, 3})
    for (std::size_t k = 0; k <= 2; ++k)
      for (std::size_t l = 0; l <= 2; ++l)
        for (std::size_t m = 0; m <= 2; ++m)
          for (const auto& p : enumerate_even(k, l))
            for (const auto& q : enumerate_even(l, m)) {
              auto r = stack(q, p);
              MatrixQ lhs = T_even(q, n) * T_even(p, n);
              MatrixQ rhs = T_even(r.composite, n) * Rational(static_cast<long>(power(n, r.loops)));
              o.require(lhs == rhs, "T_q T_p != n^loops T_qp for q=" + to_string(q) + ", p=" + to_string(p) +
                                        ", n=" + std::to_string(n));
            }
  const std::size_t n = 2;
  for (std::size_t k = 0; k <= 2; ++k)
    for (std::size_t l = 0; l <= 2; ++l)
      for (std::size_t m = 0; m <= 2; ++m)
        for (const auto& p : enumerate_colored(k, l))
          for (const auto& q : enumerate_colored(l, m)) {
            MatrixQ lhs = T_colored(q, n) * T_colored(p, n);
            auto r = colored_stack(q, p);
            MatrixQ rhs = r ? T_colored(r->composite, n) * Rational(static_cast<long>(power(2 * n, r->loops)))
                            : MatrixQ(lhs.rows(), lhs.cols());
            o.require(lhs == rhs, "coloured functoriality fails for q=" + to_string(q) + ", p=" + to_string(p));
          }
  for (std::size_t nn = 1; nn <= 3; ++nn) {
    RepSpec refl{RepKind::Reflection, nn}, perm{RepKind::Permutation, nn};
    for (std::size_t s = 0; s <= 3; ++s)
      for (std::size_t k = 0; k <= s; ++k) {
        for (const auto& p : enumerate_even(k, s - k)) o.absorb(equivariance_check(T_even(p, nn), k, s - k, refl));
        for (const auto& c : enumerate_colored(k, s - k))
          o.absorb(equivariance_check(T_colored(c, nn), k, s - k, perm, to_string(c)));
      }
  }
  return o;
}

Outcome schur_weyl() {
  Outcome o;
  for (std::size_t n : {2, 3})
    for (std::size_t s = 0; s <= 4; ++s)
      for (std::size_t k = 0; k <= s; ++k) {
        std::size_t l = s - k;
        std::vector<std::map<std::size_t, Rational>> ev, col;
        for (const auto& p : enumerate_even(k, l)) ev.push_back(flatten(T_even(p, n)));
        for (const auto& c : enumerate_colored(k, l)) col.push_back(flatten(T_colored(c, n)));
        std::string at = " at n=" + std::to_string(n) + ", (k,l)=(" + std::to_string(k) + "," + std::to_string(l) + ")";
        std::size_t he = hom_dim({RepKind::Reflection, n}, k, l), hc = hom_dim({RepKind::Permutation, n}, k, l);
        o.require(rank_of(ev) == he, "even rank " + std::to_string(rank_of(ev)) + " != hom_dim " + std::to_string(he) + at);
        o.require(rank_of(col) == hc,
                  "coloured rank " + std::to_string(rank_of(col)) + " != hom_dim " + std::to_string(hc) + at);
      }
  for (std::size_t s = 0; s <= 4; ++s)
    for (std::size_t k = 0; k <= s; ++k) {
      std::vector<std::map<std::size_t, Rational>> ev;
      for (const auto& p : enumerate_even(k, s - k)) ev.push_back(flatten(T_even(p, 4)));
      o.require(rank_of(ev) == ev.size(), "even T not independent at n=4, k+l=" + std::to_string(s));
    }
  for (std::size_t s = 0; s <= 3; ++s)
    for (std::size_t k = 0; k <= s; ++k) {
      std::vector<std::map<std::size_t, Rational>> col;
      for (const auto& c : enumerate_colored(k, s - k)) col.push_back(flatten(T_colored(c, 3)));
      o.require(rank_of(col) == col.size(), "coloured T not independent at n=3, k+l=" + std::to_string(s));
    }
  return o;
}

Outcome omega_battery() {
  Outcome o;
  const PolyQ w2 = t * Rational(2);
  for (std::size_t k = 0; k <= 3; ++k)
    for (std::size_t l = 0; l <= 3; ++l)
      for (std::size_t m = 0; m <= 3; ++m) {
        if ((k + l) % 2 || (l + m) % 2) continue;
        for (const auto& p : enumerate_even(k, l)) {
          EvenMorphism f(p, t);
          auto of = omega0_raw(f);
          for (const auto& q : enumerate_even(l, m)) {
            EvenMorphism g(q, t);
            o.require(omega0_raw(compose(g, f)) == compose(omega0_raw(g), of),
                      "Ω₀ not functorial on q=" + to_string(q) + ", p=" + to_string(p));
          }
        }
      }
  for (std::size_t s = 0; s <= 5; ++s)
    for (std::size_t k = 0; k <= s; ++k)
      for (const auto& c : enumerate_colored(k, s - k)) {
        if (c.base().is_even()) continue;
        o.require(compress(ColoredMorphism(c, w2)).is_zero(), "compression of " + to_string(c) + " is nonzero");
      }
  for (std::size_t s = 0; s <= 6; ++s)
    for (std::size_t k = 0; k <= s; ++k) o.absorb(verify_full_faithful(k, s - k, 1));
  o.absorb(ess_surj_witness());
  o.require(trace(e_prime()) == t, "dim(([1̃],e′)) != t");
  o.require(dim(omega0_object(1)) == t, "dim(Ω([1])) != t");
  return o;
}

Outcome commuting_square() {
  Outcome o;
  std::size_t failing = 0, total = 0;
  for (std::size_t n : {2, 3}) {
    auto r = verify_square(n, 3);
    o.absorb(r);
    for (const auto& c : r) {
      total += c.params["diagrams"].get<std::size_t>();
      if (!c.pass) ++failing;
    }
  }
  if (!o.pass) o.detail += " (" + std::to_string(failing) + " failing (n,k,l) cells; " + std::to_string(total) + " diagrams)";
  return o;
}

Outcome universal_data() {
  Outcome o;
  o.absorb(verify_datum(h_dblprime_datum(2)));
  o.absorb(verify_datum(g_dblprime_datum(2)));
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    Outcome (*run)();
  };
  const std::vector<Criterion> criteria = {
      {1, "relation suites hold under the diagram functors", relation_suites},
      {2, "partition counts match brute force", counting},
      {3, "category axioms on full bases", category_laws},
      {4, "interpolation maps are functorial and equivariant", interpolation_functoriality},
      {5, "Schur-Weyl ranks and independence", schur_weyl},
      {6, "Omega battery", omega_battery},
      {7, "commuting square", commuting_square},
      {8, "matrix data satisfy the universal properties", universal_data},
  };
  bool all = true;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %d: %s (%.1fs)%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs,
                o.detail.empty() ? "" : " -- ", o.detail.c_str());
    std::fflush(stdout);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
