#pragma once

// Shared helpers for the test suites: ring shorthands and seeded generators.

#include <random>
#include <string>
#include <vector>

#include "egs/rings.hpp"

namespace egs::testing {

inline RingDescriptor zz() { return RingDescriptor::integers(); }
inline RingDescriptor zz_xy() { return RingDescriptor::polynomial({"x", "y"}, BaseRing::integers); }
inline RingDescriptor qq_xy() { return RingDescriptor::polynomial({"x", "y"}, BaseRing::rationals); }
inline RingDescriptor qq_x() { return RingDescriptor::polynomial({"x"}, BaseRing::rationals); }
inline RingDescriptor zz_x() { return RingDescriptor::polynomial({"x"}, BaseRing::integers); }

inline RingElement P(const std::string& s, const RingDescriptor& r) { return parse_element(s, r); }
inline RingElement Z(long v) { return RingElement::integer(zz(), v); }

inline std::vector<RingElement> parse_all(const std::vector<std::string>& xs, const RingDescriptor& r) {
  std::vector<RingElement> out;
  for (const auto& x : xs) out.push_back(P(x, r));
  return out;
}

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

/// Nonzero integer in [-bound, bound].
inline RingElement random_nonzero_int(std::mt19937_64& rng, long bound) {
  long v = 0;
  while (v == 0) v = uniform(rng, -bound, bound);
  return Z(v);
}

/// Random polynomial in `ring` with small integer coefficients, at most
/// `terms` terms and each exponent at most `max_exp`.
inline RingElement random_poly(std::mt19937_64& rng, const RingDescriptor& ring, int terms, int max_exp,
                               long coeff_bound) {
  RingElement p = RingElement::zero(ring);
  for (int t = 0; t < terms; ++t) {
    RingElement m = RingElement::integer(ring, uniform(rng, -coeff_bound, coeff_bound));
    for (std::size_t v = 0; v < ring.num_variables(); ++v)
      m *= pow(RingElement::variable(ring, v), static_cast<unsigned long>(uniform(rng, 0, max_exp)));
    p += m;
  }
  return p;
}

inline RingElement random_nonzero_poly(std::mt19937_64& rng, const RingDescriptor& ring, int terms, int max_exp,
                                       long coeff_bound) {
  for (;;) {
    auto p = random_poly(rng, ring, terms, max_exp, coeff_bound);
    if (!p.is_zero()) return p;
  }
}

}  // namespace egs::testing
