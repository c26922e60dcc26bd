#pragma once

// Hand-rolled generators for property tests. Independent of the library's own
// sampling helpers so a bug there cannot hide a bug in the engine.

#include <cstdint>
#include <vector>

#include "fraxform/atoms.hpp"
#include "fraxform/specdomain.hpp"

namespace gen {

// splitmix64
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi].
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

inline fraxform::Rational rational(Rng& r, long lo, long hi, long max_den) {
  fraxform::Rational q(r.range(lo, hi), r.range(1, max_den));
  q.canonicalize();
  return q;
}

inline fraxform::Rational positive_rational(Rng& r, long hi, long max_den) {
  return rational(r, 1, hi, max_den);
}

inline fraxform::Rational nonzero_rational(Rng& r, long mag, long max_den) {
  fraxform::Rational q = rational(r, 1, mag, max_den);
  return r.range(0, 1) ? q : fraxform::Rational(-q);
}

inline fraxform::TimeExpr expr(Rng& r, const fraxform::Rational& alpha, int max_atoms = 5) {
  std::vector<fraxform::Atom> atoms;
  const long n = r.range(1, max_atoms);
  for (long i = 0; i < n; ++i) {
    atoms.push_back({nonzero_rational(r, 30, 6), positive_rational(r, 15, 5)});
  }
  return fraxform::TimeExpr(alpha, std::move(atoms));
}

inline fraxform::PolyS poly(Rng& r, long max_degree) {
  std::vector<fraxform::Rational> c;
  const long d = r.range(0, max_degree);
  for (long i = 0; i <= d; ++i) c.push_back(rational(r, -12, 12, 4));
  return fraxform::PolyS(std::move(c));
}

// Distinct positive q values.
inline std::vector<fraxform::Rational> distinct_qs(Rng& r, long count) {
  std::vector<fraxform::Rational> out;
  while (static_cast<long>(out.size()) < count) {
    fraxform::Rational q = positive_rational(r, 40, 3);
    bool dup = false;
    for (const auto& x : out) dup = dup || x == q;
    if (!dup) out.push_back(q);
  }
  return out;
}

inline const fraxform::Rational kAlphas[] = {fraxform::Rational(1, 2), fraxform::Rational(3, 4),
                                             fraxform::Rational(9, 10), fraxform::Rational(1)};

}  // namespace gen
