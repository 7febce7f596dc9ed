#include <catch_amalgamated.hpp>

#include <set>

#include <octacat/presentations.hpp>

using namespace octacat;

namespace {

const PolyQ t = PolyQ::t();

GenWord z2(const char* s) { return parse_word(Presentation::ParZ2, s); }
GenWord pt(const char* s) { return parse_word(Presentation::ParT, s); }

}  // namespace

TEST_CASE("generator images") {
  CHECK(to_string(eval_Htilde(z2("merge"))) == "1 * (2>1: {1,2,1'})");
  CHECK(eval_Htilde(z2("lolly")) == Morphism<ColoredPartition>(ColoredPartition(identity_partition(0)), t, t));
  CHECK(eval_Htilde(z2("(compose (token -1) (token -1))")) == eval_Htilde(z2("id")));
  CHECK(to_string(eval_Htilde(z2("(compose (token 1) (token -1))"))) == "1 * (1>1: {1,1':-1})");
  CHECK(to_string(eval_Gtilde(pt("fourlegs"))) == "1 * (2>2: {1,2,1',2'})");
  CHECK(to_string(eval_Gtilde(pt("(compose cap cup)"))) == "t * (0>0:)");
  CHECK(eval_Gtilde(pt("(compose cross cross)")) == Morphism<Partition>::identity(2, t));
}

TEST_CASE("word syntax") {
  auto w = z2("(scale 1/2 (sum id (scale -1 (token -1))))");
  CHECK(w.source() == 1);
  CHECK(w.target() == 1);
  CHECK(z2(w.str().c_str()).str() == w.str());
  CHECK(z2("(id 3)").source() == 3);
  CHECK(z2("(compose (tensor id merge) (tensor split id))").source() == 2);
  CHECK_THROWS_AS(z2("(compose merge merge)"), ArityMismatch);
  CHECK_THROWS_AS(z2("(compose merge"), ParseError);
  CHECK_THROWS_AS(z2("fourlegs"), ArityMismatch);
  CHECK_THROWS_AS(pt("merge"), ArityMismatch);
  CHECK_THROWS_AS(z2("frobnicate"), ParseError);
  CHECK_THROWS_AS(z2("(sum merge split)"), ArityMismatch);
  CHECK_THROWS_AS(z2("(token 2)"), ParseError);
}

TEST_CASE("relation suites hold in the diagram categories") {
  for (auto p : {Presentation::ParZ2, Presentation::ParT}) {
    auto suite = relation_suite(p);
    Report r = p == Presentation::ParZ2 ? verify_relations(suite, htilde_datum()) : verify_relations(suite, gtilde_datum());
    for (const auto& c : r) {
      INFO(c.to_text());
      CHECK(c.pass);
    }
    CHECK(suite.size() > base_relations(p).size());
    std::set<std::string> names;
    for (const auto& rel : suite) names.insert(rel.name);
    CHECK(names.size() == suite.size());
  }
}

TEST_CASE("a corrupted relation is reported") {
  std::vector<Relation> bad{{"corrupt", z2("(compose merge split)"), z2("(compose split merge)")}};
  auto r = verify_relations(bad, htilde_datum());
  REQUIRE(r.size() == 1);
  CHECK_FALSE(r[0].pass);
  CHECK(r[0].counterexample.has_value());
  std::vector<Relation> wrong_size{{"sizes", z2("merge"), z2("split")}};
  CHECK_FALSE(verify_relations(wrong_size, htilde_datum())[0].pass);
}

TEST_CASE("reflections evaluate to reflected morphisms") {
  for (const auto& rel : relation_suite(Presentation::ParZ2)) {
    CHECK(eval_Htilde(vertical_flip(rel.lhs)) == involution(eval_Htilde(rel.lhs)));
  }
  for (const auto& rel : relation_suite(Presentation::ParT)) {
    CHECK(eval_Gtilde(vertical_flip(rel.lhs)) == involution(eval_Gtilde(rel.lhs)));
  }
  auto w = z2("(tensor merge id)");
  CHECK(mirror(w).str() == "(tensor id merge)");
  CHECK(mirror(mirror(w)).str() == w.str());
  CHECK(vertical_flip(z2("(compose merge (tensor bottompin id))")).str() == "(compose (tensor toppin id) split)");
}

TEST_CASE("canonical words are preimages") {
  for (std::size_t n = 0; n <= 6; n += 2)
    for (std::size_t k = 0; k <= n; ++k)
      for (const auto& p : enumerate_even(k, n - k)) {
        auto w = canonical_word(p);
        CHECK(eval_Gtilde(w) == Morphism<Partition>(p, t));
      }
  for (std::size_t n = 0; n <= 4; ++n)
    for (std::size_t k = 0; k <= n; ++k)
      for (const auto& c : enumerate_colored(k, n - k)) {
        auto w = canonical_word_colored(c);
        CHECK(eval_Htilde(w) == Morphism<ColoredPartition>(c, t));
      }
  CHECK(eval_Gtilde(canonical_word(identity_partition(3))) == Morphism<Partition>::identity(3, t));
  CHECK(to_string(eval_Gtilde(canonical_word(one_block(3, 1)))) == "1 * (3>1: {1,2,3,1'})");
}

TEST_CASE("tautological data") {
  CHECK(all_pass(verify_datum(htilde_datum())));
  CHECK(all_pass(verify_datum(gtilde_datum())));
  auto w = z2("(compose merge (tensor (token -1) id) split)");
  CHECK(eval_in_target(w, htilde_datum()) == eval_Htilde(w));
}

TEST_CASE("a functor needs a lawful datum") {
  auto d = htilde_datum();
  // A doubled unit breaks the unit axioms.
  d.generator = [base = htilde_datum()](const Generator& g) {
    if (g.kind == Gen::BottomPin)
      return base.generator(g) * PolyQ(2L);
    return base.generator(g);
  };
  CHECK_THROWS_AS(CheckedFunctor<Morphism<ColoredPartition>>(d), DatumViolation);
  CheckedFunctor<Morphism<Partition>> g(gtilde_datum());
  CHECK(g(pt("(compose cap cup)")) == eval_Gtilde(pt("(compose cap cup)")));
  CHECK_THROWS_AS(eval_in_target(pt("cap"), htilde_datum()), ArityMismatch);
}
