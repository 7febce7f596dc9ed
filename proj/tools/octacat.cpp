// octacat: command-line front end for the diagram categories, the
// interpolation functors and the verification batteries.
//
// Exit status: 0 when everything requested passes, 1 when a check fails,
// 2 on a usage or parse error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <octacat/octacat.hpp>

using namespace octacat;

namespace {

struct Options {
  std::string cat = "even";
  std::string t_value;
  bool weight2t = false;
  std::size_t n = 2;
  std::size_t k = 1;
  std::size_t l = 1;
  std::size_t kmax = 2;
  std::string rep = "reflection";
  std::string suite;
  std::string format = "text";
  std::uint64_t seed = 1;
  std::vector<std::string> inputs;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

PolyQ loop_weight(const Options& o) { return o.weight2t ? PolyQ::t() * Rational(2) : PolyQ::t(); }

std::optional<Rational> specialization(const Options& o) {
  if (o.t_value.empty()) return std::nullopt;
  return parse_rational(o.t_value);
}

bool is_word(const std::string& s) { return !s.empty() && (s.front() == '(' || s.find('>') == std::string::npos); }

template <class D>
Morphism<D> read_input(const std::string& s, const PolyQ& w) {
  if (is_word(s)) {
    if constexpr (std::is_same_v<D, Partition>) {
      return eval_Gtilde(parse_word(Presentation::ParT, s), w);
    } else {
      return eval_Htilde(parse_word(Presentation::ParZ2, s), w);
    }
  }
  return Morphism<D>(DiagramTraits<D>::parse(s), w);
}

template <class D>
Morphism<D> specialize(const Morphism<D>& f, const std::optional<Rational>& t) {
  if (!t) return f;
  Morphism<D> out(f.source(), f.target(), f.loop_weight());
  for (const auto& [d, c] : f.terms()) out.add_term(d, PolyQ(c.eval(*t)));
  return out;
}

std::string scalar_text(const PolyQ& p, const std::optional<Rational>& t) { return t ? p.eval(*t).get_str() : p.str(); }

template <class D>
void print(const Morphism<D>& f, const Options& o) {
  auto g = specialize(f, specialization(o));
  if (o.format == "json") {
    std::cout << to_json(g).dump(2) << "\n";
  } else {
    std::cout << to_string(g) << "\n";
  }
}

void print(const MatrixQ& m, const Options& o) {
  if (o.format == "json") {
    std::cout << to_json(m).dump(2) << "\n";
  } else {
    std::cout << to_string(m);
  }
}

int print(const Report& r, const Options& o) {
  if (o.format == "json") {
    std::cout << to_json(r).dump(2) << "\n";
  } else {
    for (const auto& c : r) std::cout << c.to_text() << "\n";
  }
  return all_pass(r) ? 0 : 1;
}

void need_inputs(const Options& o, std::size_t count, const char* verb) {
  if (o.inputs.size() != count)
    throw UsageError(std::string(verb) + " takes " + std::to_string(count) + " diagram or word argument" +
                     (count == 1 ? "" : "s") + ", got " + std::to_string(o.inputs.size()));
}

// ---------------------------------------------------------------------------
// Verbs

template <class D>
int run_compose(const Options& o) {
  need_inputs(o, 2, "compose");
  print(compose(read_input<D>(o.inputs[0], loop_weight(o)), read_input<D>(o.inputs[1], loop_weight(o))), o);
  return 0;
}

template <class D>
int run_tensor(const Options& o) {
  need_inputs(o, 2, "tensor");
  print(tensor(read_input<D>(o.inputs[0], loop_weight(o)), read_input<D>(o.inputs[1], loop_weight(o))), o);
  return 0;
}

template <class D>
int run_dual(const Options& o) {
  need_inputs(o, 1, "dual");
  print(involution(read_input<D>(o.inputs[0], loop_weight(o))), o);
  return 0;
}

template <class D>
int run_trace(const Options& o) {
  need_inputs(o, 1, "trace");
  PolyQ tr = trace(read_input<D>(o.inputs[0], loop_weight(o)));
  std::string s = scalar_text(tr, specialization(o));
  if (o.format == "json") {
    std::cout << nlohmann::json{{"trace", s}}.dump(2) << "\n";
  } else {
    std::cout << s << "\n";
  }
  return 0;
}

int run_omega(const Options& o) {
  need_inputs(o, 1, "omega");
  if (o.cat != "even") throw UsageError("omega takes an even-category input (--cat even)");
  print(omega0_raw(read_input<Partition>(o.inputs[0], PolyQ::t())), o);
  return 0;
}

template <class D>
int run_matrix(const Options& o) {
  need_inputs(o, 1, "matrix");
  auto f = read_input<D>(o.inputs[0], loop_weight(o));
  auto t = specialization(o);
  MatrixQ m;
  if constexpr (std::is_same_v<D, Partition>) {
    m = t ? functor_G(f, o.n, *t) : functor_G(f, o.n);
  } else {
    m = t ? functor_H(f, o.n, *t) : functor_H(f, o.n);
  }
  print(m, o);
  return 0;
}

RepSpec rep_spec(const Options& o) {
  if (o.rep == "reflection") return {RepKind::Reflection, o.n};
  if (o.rep == "permutation") return {RepKind::Permutation, o.n};
  throw UsageError("unknown representation '" + o.rep + "' (expected reflection or permutation)");
}

int run_homdim(const Options& o) {
  RepSpec spec = rep_spec(o);
  std::size_t h = hom_dim(spec, o.k, o.l);
  if (o.format == "json") {
    std::cout << nlohmann::json{{"rep", o.rep}, {"n", o.n}, {"k", o.k}, {"l", o.l}, {"hom_dim", h},
                                {"character_formula", hom_dim_by_trace(spec, o.k, o.l).get_str()}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << h << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Suites

std::map<std::size_t, Rational> flatten(const MatrixQ& m) {
  std::map<std::size_t, Rational> v;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, x] : m.row(r)) v.emplace(r * m.cols() + c, x);
  return v;
}

Report suite_counting(const Options& o) {
  Report r;
  std::vector<std::size_t> bell{1};
  {
    std::vector<std::size_t> row{1};
    for (std::size_t i = 0; i < 2 * o.kmax; ++i) {
      std::vector<std::size_t> next{row.back()};
      for (std::size_t x : row) next.push_back(next.back() + x);
      row = next;
      bell.push_back(row.front());
    }
  }
  for (std::size_t k = 0; k <= o.kmax; ++k)
    for (std::size_t l = 0; l <= o.kmax; ++l) {
      CheckResult c;
      c.check = "counting";
      std::size_t all = enumerate_partitions(k, l).size(), formula = 0;
      for (const auto& p : enumerate_partitions(k, l)) formula += std::size_t{1} << (k + l - p.block_count());
      std::size_t colored = enumerate_colored(k, l).size();
      c.params = {{"k", k}, {"l", l}, {"partitions", all}, {"bell", bell[k + l]}, {"colored", colored},
                  {"colored_formula", formula}, {"even", enumerate_even(k, l).size()}};
      c.pass = all == bell[k + l] && colored == formula;
      r.push_back(std::move(c));
    }
  return r;
}

Report suite_functoriality(const Options& o) {
  Report r;
  for (std::size_t k = 0; k <= o.kmax; ++k)
    for (std::size_t l = 0; l <= o.kmax; ++l)
      for (std::size_t m = 0; m <= o.kmax; ++m) {
        CheckResult c;
        c.check = "functoriality";
        c.params = {{"n", o.n}, {"k", k}, {"l", l}, {"m", m}};
        for (const auto& p : enumerate_even(k, l))
          for (const auto& q : enumerate_even(l, m)) {
            auto s = stack(q, p);
            Rational scale = 1;
            for (std::size_t i = 0; i < s.loops; ++i) scale *= static_cast<long>(o.n);
            if (c.pass && !(T_even(q, o.n) * T_even(p, o.n) == T_even(s.composite, o.n) * scale)) {
              c.pass = false;
              c.counterexample = nlohmann::json{{"q", to_string(q)}, {"p", to_string(p)}};
            }
          }
        r.push_back(std::move(c));
      }
  return r;
}

Report suite_equivariance(const Options& o) {
  Report r;
  RepSpec refl{RepKind::Reflection, o.n}, perm{RepKind::Permutation, o.n};
  for (std::size_t s = 0; s <= o.kmax; ++s)
    for (std::size_t k = 0; k <= s; ++k) {
      for (const auto& p : enumerate_even(k, s - k))
        append(r, equivariance_check(T_even(p, o.n), k, s - k, refl, to_string(p)));
      for (const auto& c : enumerate_colored(k, s - k))
        append(r, equivariance_check(T_colored(c, o.n), k, s - k, perm, to_string(c)));
    }
  return r;
}

Report suite_schur_weyl(const Options& o) {
  Report r;
  for (std::size_t s = 0; s <= o.kmax; ++s)
    for (std::size_t k = 0; k <= s; ++k) {
      std::size_t l = s - k;
      std::vector<std::map<std::size_t, Rational>> ev, col;
      for (const auto& p : enumerate_even(k, l)) ev.push_back(flatten(T_even(p, o.n)));
      for (const auto& c : enumerate_colored(k, l)) col.push_back(flatten(T_colored(c, o.n)));
      for (bool colored : {false, true}) {
        CheckResult c;
        c.check = colored ? "schur-weyl:colored" : "schur-weyl:even";
        std::size_t rank = rank_of(colored ? col : ev);
        std::size_t h = hom_dim({colored ? RepKind::Permutation : RepKind::Reflection, o.n}, k, l);
        std::size_t basis = colored ? col.size() : ev.size();
        c.params = {{"n", o.n}, {"k", k}, {"l", l}, {"rank", rank}, {"hom_dim", h}, {"basis", basis}};
        c.pass = rank == h && (s > o.n || rank == basis);
        r.push_back(std::move(c));
      }
    }
  return r;
}

Report suite_omega(const Options& o) {
  Report r;
  for (std::size_t k = 0; k <= o.kmax; ++k)
    for (std::size_t l = 0; l <= o.kmax; ++l)
      for (std::size_t m = 0; m <= o.kmax; ++m) {
        if ((k + l) % 2 || (l + m) % 2) continue;
        CheckResult c;
        c.check = "omega:functorial";
        c.params = {{"k", k}, {"l", l}, {"m", m}};
        for (const auto& p : enumerate_even(k, l))
          for (const auto& q : enumerate_even(l, m)) {
            EvenMorphism f(p, PolyQ::t()), g(q, PolyQ::t());
            if (c.pass && !(omega0_raw(compose(g, f)) == compose(omega0_raw(g), omega0_raw(f)))) {
              c.pass = false;
              c.counterexample = nlohmann::json{{"q", to_string(q)}, {"p", to_string(p)}};
            }
          }
        r.push_back(std::move(c));
      }
  return r;
}

Report suite_full_faithful(const Options& o) {
  Report r;
  for (std::size_t s = 0; s <= o.kmax; ++s)
    for (std::size_t k = 0; k <= s; ++k) append(r, verify_full_faithful(k, s - k, o.seed));
  return r;
}

int run_verify(const Options& o) {
  const std::string& s = o.suite;
  if (s == "relations-parz2") return print(verify_relations(relation_suite(Presentation::ParZ2), htilde_datum()), o);
  if (s == "relations-part") return print(verify_relations(relation_suite(Presentation::ParT), gtilde_datum()), o);
  if (s == "datum-h") return print(verify_datum(h_dblprime_datum(o.n)), o);
  if (s == "datum-g") return print(verify_datum(g_dblprime_datum(o.n)), o);
  if (s == "counting") return print(suite_counting(o), o);
  if (s == "functoriality") return print(suite_functoriality(o), o);
  if (s == "equivariance") return print(suite_equivariance(o), o);
  if (s == "schur-weyl") return print(suite_schur_weyl(o), o);
  if (s == "omega") return print(suite_omega(o), o);
  if (s == "full-faithful") return print(suite_full_faithful(o), o);
  if (s == "ess-surj") return print(ess_surj_witness(), o);
  if (s == "square") return print(verify_square(o.n, o.kmax), o);
  throw UsageError("unknown suite '" + s + "'");
}

template <class D>
int dispatch(const std::string& verb, const Options& o) {
  if (verb == "compose") return run_compose<D>(o);
  if (verb == "tensor") return run_tensor<D>(o);
  if (verb == "dual") return run_dual<D>(o);
  if (verb == "trace") return run_trace<D>(o);
  if (verb == "matrix") return run_matrix<D>(o);
  throw UsageError("unknown verb '" + verb + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"octacat: diagram categories for the hyperoctahedral groups"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--cat", o.cat, "Diagram category")->check(CLI::IsMember({"even", "colored"}));
    sub->add_option("--t", o.t_value, "Specialize t to this rational");
    sub->add_flag("--weight2t", o.weight2t, "Use loop weight 2t");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  std::vector<std::pair<std::string, std::string>> verbs = {
      {"compose", "g ∘ f of two diagrams or words (g first on the command line)"},
      {"tensor", "f ⊗ g"},
      {"dual", "Vertical reflection"},
      {"trace", "Right closure of an endomorphism"},
      {"omega", "Raw Ω₀ of an even morphism, in Par(Z2, 2t)"},
      {"matrix", "Matrix of G (even) or H (colored) at n"},
  };
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, help] : verbs) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub);
    sub->add_option("inputs", o.inputs, "Diagram literals such as \"2>0: {1,2}\" or words such as \"(compose cap cup)\"");
    if (name == "matrix") sub->add_option("--n", o.n, "Group degree");
    subs[name] = sub;
  }
  auto* homdim = app.add_subcommand("homdim", "dim Hom(V^k, V^l) for the hyperoctahedral group");
  homdim->add_option("--rep", o.rep, "reflection or permutation")->check(CLI::IsMember({"reflection", "permutation"}));
  homdim->add_option("--n", o.n, "Group degree");
  homdim->add_option("--k", o.k, "Source tensor power");
  homdim->add_option("--l", o.l, "Target tensor power");
  homdim->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", o.suite, "Suite name")->required();
  verify->add_option("--n", o.n, "Group degree");
  verify->add_option("--kmax", o.kmax, "Largest size");
  verify->add_option("--seed", o.seed, "Seed for rank specialization points");
  verify->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (homdim->parsed()) return run_homdim(o);
    if (verify->parsed()) return run_verify(o);
    if (subs["omega"]->parsed()) return run_omega(o);
    for (const auto& [name, sub] : subs)
      if (sub->parsed()) return o.cat == "even" ? dispatch<Partition>(name, o) : dispatch<ColoredPartition>(name, o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const octacat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
