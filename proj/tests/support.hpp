#pragma once

#include <random>

#include "hsalg/exactcore/gauss_rational.hpp"

namespace hsalg::testing {

inline Rational random_rational(std::mt19937_64& rng, int range = 5, int max_den = 4) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, max_den);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline GaussRational random_gauss(std::mt19937_64& rng, int range = 5, int max_den = 4) {
  return {random_rational(rng, range, max_den), random_rational(rng, range, max_den)};
}

}  // namespace hsalg::testing
