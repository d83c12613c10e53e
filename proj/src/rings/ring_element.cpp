#include <algorithm>
#include <ostream>
#include <set>

#include "egs/rings.hpp"
#include "poly_ops.hpp"

namespace egs {

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(s[0])) return false;
  return std::all_of(s.begin() + 1, s.end(), [&](char c) { return alpha(c) || digit(c) || c == '_'; });
}

}  // namespace

RingDescriptor RingDescriptor::integers() {
  static const auto data = std::make_shared<const Data>(Data{{}, BaseRing::integers});
  return RingDescriptor(data);
}

RingDescriptor RingDescriptor::polynomial(std::vector<std::string> variables, BaseRing base) {
  if (variables.empty()) throw RingError("polynomial ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (!is_identifier(v)) throw RingError("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw RingError("duplicate variable name '" + v + "'");
  }
  return RingDescriptor(std::make_shared<const Data>(Data{std::move(variables), base}));
}

bool RingDescriptor::is_pid() const {
  if (is_integers()) return true;
  return num_variables() == 1 && base() == BaseRing::rationals;
}

std::optional<std::size_t> RingDescriptor::variable_index(std::string_view name) const {
  const auto& vars = data_->variables;
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return i;
  return std::nullopt;
}

std::string RingDescriptor::to_string() const {
  std::string s = base() == BaseRing::integers ? "ZZ" : "QQ";
  if (is_integers()) return s;
  s += '[';
  for (std::size_t i = 0; i < num_variables(); ++i) {
    if (i) s += ',';
    s += data_->variables[i];
  }
  return s + ']';
}

bool operator==(const RingDescriptor& a, const RingDescriptor& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->base == b.data_->base && a.data_->variables == b.data_->variables;
}

RingElement::RingElement(RingDescriptor ring, detail::Poly poly) : ring_(std::move(ring)), poly_(std::move(poly)) {
  detail::trim(poly_, level());
}

RingElement RingElement::zero(const RingDescriptor& ring) { return {ring, detail::Poly{}}; }
RingElement RingElement::one(const RingDescriptor& ring) { return constant(ring, 1); }

RingElement RingElement::constant(const RingDescriptor& ring, const mpq_class& value) {
  if (ring.base() == BaseRing::integers && value.get_den() != 1)
    throw RingError("non-integral constant in " + ring.to_string());
  return {ring, detail::constant_poly(value, ring.num_variables())};
}

RingElement RingElement::variable(const RingDescriptor& ring, std::size_t index) {
  if (index >= ring.num_variables()) throw RingError("variable index out of range");
  return {ring, detail::variable_poly(index, ring.num_variables())};
}

bool RingElement::is_zero() const { return detail::is_zero(poly_, level()); }

bool RingElement::is_constant() const {
  const detail::Poly* p = &poly_;
  for (std::size_t l = level(); l > 0; --l) {
    if (p->coeffs.empty()) return true;
    if (p->coeffs.size() != 1) return false;
    p = &p->coeffs[0];
  }
  return true;
}

const mpq_class& RingElement::constant_value() const {
  static const mpq_class zero_value;
  if (!is_constant()) throw RingError("element is not a constant");
  const detail::Poly* p = &poly_;
  for (std::size_t l = level(); l > 0; --l) {
    if (p->coeffs.empty()) return zero_value;
    p = &p->coeffs[0];
  }
  return p->constant;
}

int RingElement::total_degree() const {
  int deg = -1;
  detail::for_each_term(poly_, level(), [&](const std::vector<unsigned>& e, const mpq_class&) {
    int d = 0;
    for (auto x : e) d += static_cast<int>(x);
    deg = std::max(deg, d);
  });
  return deg;
}

int RingElement::main_degree() const {
  if (is_zero()) return -1;
  if (level() == 0) return 0;
  return static_cast<int>(poly_.coeffs.size()) - 1;
}

std::vector<Term> RingElement::terms() const {
  std::vector<Term> out;
  detail::for_each_term(poly_, level(), [&](const std::vector<unsigned>& e, const mpq_class& c) {
    out.push_back(Term{e, c});
  });
  std::sort(out.begin(), out.end(),
            [](const Term& a, const Term& b) { return detail::grlex_greater(a.exponents, b.exponents); });
  return out;
}

mpq_class RingElement::leading_coefficient() const { return detail::leading_numeric(poly_, level()); }

void RingElement::require_same_ring(const RingElement& other) const {
  if (!(ring_ == other.ring_))
    throw RingError("descriptor mismatch: " + ring_.to_string() + " vs " + other.ring_.to_string());
}

RingElement RingElement::operator-() const { return {ring_, detail::neg(poly_, level())}; }

RingElement& RingElement::operator+=(const RingElement& other) {
  require_same_ring(other);
  poly_ = detail::add(poly_, other.poly_, level());
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& other) {
  require_same_ring(other);
  poly_ = detail::sub(poly_, other.poly_, level());
  return *this;
}

RingElement& RingElement::operator*=(const RingElement& other) {
  require_same_ring(other);
  poly_ = detail::mul(poly_, other.poly_, level());
  return *this;
}

bool operator==(const RingElement& a, const RingElement& b) {
  return a.ring_ == b.ring_ && detail::equal(a.poly_, b.poly_, a.level());
}

RingElement pow(const RingElement& a, unsigned long exponent) {
  RingElement result = RingElement::one(a.ring());
  RingElement base = a;
  while (exponent) {
    if (exponent & 1UL) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

std::optional<RingElement> try_exact_div(const RingElement& a, const RingElement& b) {
  if (!(a.ring() == b.ring())) throw RingError("descriptor mismatch");
  auto q = detail::divide_exact(a.poly(), b.poly(), a.level(), a.ring().base());
  if (!q) return std::nullopt;
  return RingElement(a.ring(), std::move(*q));
}

RingElement exact_div(const RingElement& a, const RingElement& b) {
  auto q = try_exact_div(a, b);
  if (!q) throw NotDivisible();
  return std::move(*q);
}

bool divides(const RingElement& d, const RingElement& a) {
  if (d.is_zero()) return a.is_zero();
  return try_exact_div(a, d).has_value();
}

std::pair<RingElement, RingElement> split_unit(const RingElement& a) {
  const auto& ring = a.ring();
  if (a.is_zero()) return {RingElement::one(ring), a};
  const mpq_class lc = a.leading_coefficient();
  mpq_class u = ring.base() == BaseRing::integers ? mpq_class(sgn(lc)) : lc;
  RingElement normalized(ring, detail::scale(a.poly(), 1 / u, a.level()));
  return {RingElement::constant(ring, u), std::move(normalized)};
}

RingElement normalize(const RingElement& a) { return split_unit(a).second; }

RingElement gcd(const RingElement& a, const RingElement& b) {
  if (!(a.ring() == b.ring())) throw RingError("descriptor mismatch");
  return normalize(RingElement(a.ring(), detail::gcd_raw(a.poly(), b.poly(), a.level(), a.ring().base())));
}

RingElement lcm(const RingElement& a, const RingElement& b) {
  if (!(a.ring() == b.ring())) throw RingError("descriptor mismatch");
  if (a.is_zero() || b.is_zero()) return RingElement::zero(a.ring());
  return normalize(exact_div(a * b, gcd(a, b)));
}

RingElement gcd_many(std::span<const RingElement> xs, const RingDescriptor& ring) {
  RingElement g = RingElement::zero(ring);
  for (const auto& x : xs) {
    g = gcd(g, x);
    if (g == RingElement::one(ring)) break;
  }
  return g;
}

RingElement lcm_many(std::span<const RingElement> xs, const RingDescriptor& ring) {
  RingElement l = RingElement::one(ring);
  for (const auto& x : xs) l = lcm(l, x);
  return l;
}

bool is_unit(const RingElement& a) {
  if (a.is_zero()) return false;
  return try_exact_div(RingElement::one(a.ring()), a).has_value();
}

std::optional<RingElement> associate_unit(const RingElement& a, const RingElement& b) {
  if (!(a.ring() == b.ring())) throw RingError("descriptor mismatch");
  if (a.is_zero() || b.is_zero()) {
    if (a.is_zero() && b.is_zero()) return RingElement::one(a.ring());
    return std::nullopt;
  }
  auto u = try_exact_div(a, b);
  if (!u || !try_exact_div(b, a)) return std::nullopt;
  return u;
}

ContentSplit content_and_primitive(const RingElement& p) {
  const auto& ring = p.ring();
  if (p.is_zero()) return {RingElement::zero(ring), RingElement::zero(ring)};
  mpq_class c;
  if (ring.base() == BaseRing::rationals) {
    c = p.leading_coefficient();
  } else {
    mpz_class g;
    detail::for_each_term(p.poly(), p.level(), [&](const std::vector<unsigned>&, const mpq_class& x) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num().get_mpz_t());
    });
    c = mpq_class(sgn(p.leading_coefficient()) < 0 ? mpz_class(-g) : g);
  }
  RingElement content = RingElement::constant(ring, c);
  RingElement primitive(ring, detail::scale(p.poly(), 1 / c, p.level()));
  return {std::move(content), std::move(primitive)};
}

namespace {

// Embeds a level-(k-1) polynomial into the level-k ring as a main-degree-0 element.
detail::Poly embed_lower(const detail::Poly& c, std::size_t level) {
  detail::Poly p;
  if (!detail::is_zero(c, level - 1)) p.coeffs.push_back(c);
  return p;
}

}  // namespace

ContentSplit recursive_content_and_primitive(const RingElement& p) {
  const auto& ring = p.ring();
  if (p.level() == 0) {
    auto g = normalize(p);
    return {g, p.is_zero() ? p : exact_div(p, g)};
  }
  if (p.is_zero()) return {RingElement::zero(ring), RingElement::zero(ring)};
  RingElement content = normalize(RingElement(ring, embed_lower(detail::main_content(p.poly(), p.level(), ring.base()), p.level())));
  RingElement primitive = exact_div(p, content);
  return {std::move(content), std::move(primitive)};
}

std::ostream& operator<<(std::ostream& os, const RingElement& a) { return os << format_element(a); }

}  // namespace egs
