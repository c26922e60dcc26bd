#include "fraxform/sampling.hpp"

namespace fraxform {

Rational random_rational(std::mt19937_64& rng, long lo, long hi, long max_den) {
  std::uniform_int_distribution<long> num(lo, hi);
  std::uniform_int_distribution<long> den(1, max_den);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

TimeExpr random_expr(std::mt19937_64& rng, const Rational& alpha, int max_atoms) {
  std::uniform_int_distribution<int> count(1, max_atoms);
  std::vector<Atom> atoms;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    const Rational rate = random_rational(rng, 1, 12, 4);
    const Rational coef = random_rational(rng, -20, 20, 5);
    atoms.push_back(Atom{coef, rate});
  }
  return TimeExpr(alpha, std::move(atoms));
}

Rational random_scalable_factor(std::mt19937_64& rng, const Rational& alpha) {
  const unsigned long den = alpha.get_den().get_ui();
  std::uniform_int_distribution<long> base(2, den == 1 ? 7 : 3);
  return rational_pow(Rational(base(rng)), den);
}

}  // namespace fraxform
