#include "egs/rings.hpp"
#include "poly_ops.hpp"

namespace egs {

namespace {

void require_euclidean(const RingDescriptor& ring) {
  if (!ring.is_euclidean())
    throw RingError("operation needs a Euclidean ring (ZZ or QQ[x]); got " + ring.to_string());
}

}  // namespace

DivMod euclid_divmod(const RingElement& a, const RingElement& b) {
  const auto& ring = a.ring();
  if (!(ring == b.ring())) throw RingError("descriptor mismatch");
  require_euclidean(ring);
  if (b.is_zero()) throw RingError("division by zero");

  if (ring.is_integers()) {
    const mpz_class n = a.constant_value().get_num();
    const mpz_class d = b.constant_value().get_num();
    const mpz_class ad = abs(d);
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), ad.get_mpz_t());
    if (sgn(d) < 0) q = -q;
    return {RingElement::constant(ring, mpq_class(q)), RingElement::constant(ring, mpq_class(r))};
  }

  // QQ[x]: coefficients are level-0 rationals.
  const auto& bc = b.poly().coeffs;
  const std::size_t db = bc.size() - 1;
  const mpq_class lead = bc.back().constant;
  detail::Poly r = a.poly();
  detail::Poly q;
  if (r.coeffs.size() > db) q.coeffs.assign(r.coeffs.size() - db, detail::Poly{});
  while (!r.coeffs.empty() && r.coeffs.size() - 1 >= db) {
    const std::size_t shift = r.coeffs.size() - 1 - db;
    const mpq_class c = r.coeffs.back().constant / lead;
    q.coeffs[shift].constant = c;
    for (std::size_t i = 0; i <= db; ++i) r.coeffs[shift + i].constant -= c * bc[i].constant;
    detail::trim(r, 1);
  }
  return {RingElement(ring, std::move(q)), RingElement(ring, std::move(r))};
}

ExtendedGcd extended_gcd(const RingElement& a, const RingElement& b) {
  const auto& ring = a.ring();
  require_euclidean(ring);
  RingElement r0 = a, r1 = b;
  RingElement s0 = RingElement::one(ring), s1 = RingElement::zero(ring);
  RingElement t0 = RingElement::zero(ring), t1 = RingElement::one(ring);
  while (!r1.is_zero()) {
    auto [q, r] = euclid_divmod(r0, r1);
    r0 = std::exchange(r1, std::move(r));
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, RingElement::zero(ring), RingElement::zero(ring)};
  auto [u, g] = split_unit(r0);
  return {std::move(g), exact_div(s0, u), exact_div(t0, u)};
}

CrtResult crt(std::span<const Congruence> congruences) {
  if (congruences.empty()) throw RingError("crt needs at least one congruence");
  const auto& ring = congruences.front().modulus.ring();
  require_euclidean(ring);
  for (const auto& c : congruences) {
    if (!(c.residue.ring() == ring) || !(c.modulus.ring() == ring)) throw RingError("descriptor mismatch");
    if (c.modulus.is_zero()) throw RingError("zero modulus");
  }

  for (std::size_t i = 0; i < congruences.size(); ++i) {
    for (std::size_t j = i + 1; j < congruences.size(); ++j) {
      const auto g = gcd(congruences[i].modulus, congruences[j].modulus);
      if (!divides(g, congruences[i].residue - congruences[j].residue))
        return CrtResult{std::nullopt, CrtIncompatible{i, j}};
    }
  }

  RingElement x = euclid_divmod(congruences.front().residue, congruences.front().modulus).remainder;
  RingElement m = normalize(congruences.front().modulus);
  for (std::size_t k = 1; k < congruences.size(); ++k) {
    const auto& [a, b] = congruences[k];
    // x + m*t = a (mod b)  <=>  (m/g)*t = (a-x)/g (mod b/g)
    const auto eg = extended_gcd(m, b);
    const RingElement step = exact_div(b, eg.gcd);
    const RingElement t = euclid_divmod(eg.s * exact_div(a - x, eg.gcd), step).remainder;
    x = x + m * t;
    m = normalize(m * step);
    x = euclid_divmod(x, m).remainder;
  }
  return CrtResult{CrtSolution{std::move(x), std::move(m)}, std::nullopt};
}

}  // namespace egs
