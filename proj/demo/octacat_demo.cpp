// A short tour: compose diagrams, split e′, push a diagram through Ω₀
// and realize it as a matrix at n = 2.

#include <iostream>

#include <octacat/octacat.hpp>

using namespace octacat;

int main() {
  const PolyQ t = PolyQ::t();

  EvenMorphism cap(parse_partition("2>0: {1,2}"), t);
  EvenMorphism cup(parse_partition("0>2: {1',2'}"), t);
  std::cout << "cap ∘ cup        = " << to_string(compose(cap, cup)) << "\n";

  auto e = e_prime();
  std::cout << "e′               = " << to_string(e) << "\n";
  std::cout << "e′ ∘ e′ == e′    : " << std::boolalpha << (compose(e, e) == e) << "\n";
  std::cout << "trace(e′)        = " << trace(e).str() << "\n";

  EvenMorphism four(parse_partition("2>2: {1,2,1',2'}"), t);
  std::cout << "Ω₀(fourlegs)     = " << to_string(omega0_raw(four)) << "\n";

  std::cout << "G(cross) at n=2  =\n" << to_string(functor_G(EvenMorphism(parse_partition("2>2: {1,2'},{2,1'}"), t), 2));
  std::cout << "dim Hom(V⊗V, 1)  = " << hom_dim({RepKind::Reflection, 2}, 2, 0) << "\n";
}
