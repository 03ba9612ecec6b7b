#include "duplex/simplicial.hpp"

namespace duplex {

TruncAugSimplicial<CatTarget> bar_resolution(const Comonad& g, const FinFunctor& f, ObjId x, int trunc) {
  FunctorPowers powers(g.endo);
  return bar_resolution(g, powers, f, x, trunc);
}

TruncAugSimplicial<CatTarget> bar_resolution(const Comonad& g, FunctorPowers& powers, const FinFunctor& f,
                                             ObjId x, int trunc) {
  if (!same_category(f.dom(), g.base())) {
    throw Error(ErrorKind::ShapeMismatch, "bar resolution functor must start at the comonad's base");
  }
  for (int k = 0; k <= trunc + 2; ++k) powers.power(k);
  return TruncAugSimplicial<CatTarget>::build(
      CatTarget{f.cod()}, trunc, true, [&](int n) { return f.obj(powers.power(n + 1).obj(x)); },
      [&](int n, int i) { return f.mor(powers.power(i).mor(g.counit.at(powers.power(n - i).obj(x)))); },
      [&](int n, int j) { return f.mor(powers.power(j).mor(g.comult.at(powers.power(n - j).obj(x)))); });
}

}  // namespace duplex
