#pragma once

// gcd/lcm identities for nonzero a_1..a_n, b and a CRT cross-check against
// exhaustive search. Each returns an empty string when everything holds.

#include <numeric>
#include <string>
#include <vector>

#include "egs/rings.hpp"

namespace egs::testing {

inline std::string lcm_gcd_identities(const std::vector<RingElement>& a, const RingElement& b) {
  const auto& ring = b.ring();
  std::vector<RingElement> gcds, lcms;
  for (const auto& x : a) {
    gcds.push_back(gcd(x, b));
    lcms.push_back(lcm(x, b));
  }
  // 1. ([a_1..a_n], b) = [(a_1,b)..(a_n,b)]
  if (!is_associate(gcd(lcm_many(a, ring), b), lcm_many(gcds, ring))) return "item 1";
  // 2. [(a_1..a_n), b] = ([a_1,b]..[a_n,b])
  if (!is_associate(lcm(gcd_many(a, ring), b), gcd_many(lcms, ring))) return "item 2";
  // 3. [a1,a2,a3] = a1 a2 a3 (a1,a2,a3) / ((a1,a2)(a1,a3)(a2,a3))
  if (a.size() >= 3) {
    const auto &a1 = a[0], &a2 = a[1], &a3 = a[2];
    const auto num = a1 * a2 * a3 * gcd(gcd(a1, a2), a3);
    const auto q = try_exact_div(num, gcd(a1, a2) * gcd(a1, a3) * gcd(a2, a3));
    if (!q) return "item 3: not exact";
    if (!is_associate(*q, lcm(lcm(a1, a2), a3))) return "item 3";
  }
  // 4. (â_1..â_n) = a_1...a_n / [a_1..a_n]
  RingElement prod = RingElement::one(ring);
  for (const auto& x : a) prod *= x;
  std::vector<RingElement> hats;
  for (std::size_t i = 0; i < a.size(); ++i) {
    RingElement h = RingElement::one(ring);
    for (std::size_t j = 0; j < a.size(); ++j)
      if (j != i) h *= a[j];
    hats.push_back(h);
  }
  const auto q = try_exact_div(prod, lcm_many(a, ring));
  if (!q) return "item 4: not exact";
  if (!is_associate(gcd_many(hats, ring), *q)) return "item 4";
  return "";
}

/// Integer system x = r_k mod m_k (m_k > 0) against a scan of 0..prod(m)-1.
inline std::string crt_matches_search(const std::vector<long>& residues, const std::vector<long>& moduli) {
  const auto zz = RingDescriptor::integers();
  std::vector<Congruence> sys;
  long prod = 1, l = 1;
  for (std::size_t k = 0; k < moduli.size(); ++k) {
    sys.push_back({RingElement::integer(zz, residues[k]), RingElement::integer(zz, moduli[k])});
    prod *= moduli[k];
    l = std::lcm(l, moduli[k]);
  }
  long first = -1;
  for (long x = 0; x < prod && first < 0; ++x) {
    bool ok = true;
    for (std::size_t k = 0; k < moduli.size() && ok; ++k) ok = ((x - residues[k]) % moduli[k]) == 0;
    if (ok) first = x;
  }
  const CrtResult res = crt(sys);
  if (res.solvable() != (first >= 0)) return "solvability differs from search";
  if (!res.solvable()) {
    const auto& bad = *res.conflict;
    const RingElement d = gcd(sys[bad.first].modulus, sys[bad.second].modulus);
    if (divides(d, sys[bad.first].residue - sys[bad.second].residue)) return "reported pair is compatible";
    return "";
  }
  const auto& sol = *res.solution;
  for (const auto& c : sys)
    if (!try_exact_div(sol.solution - c.residue, c.modulus)) return "solution misses a congruence";
  if (!is_associate(sol.modulus, RingElement::integer(zz, l))) return "modulus is not the lcm";
  if (!divides(sol.modulus, sol.solution - RingElement::integer(zz, first))) return "differs from search";
  return "";
}

}  // namespace egs::testing
