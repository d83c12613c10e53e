#include "poly_ops.hpp"

#include <algorithm>
#include <utility>

namespace egs::detail {

bool is_zero(const Poly& p, std::size_t level) {
  return level == 0 ? sgn(p.constant) == 0 : p.coeffs.empty();
}

void trim(Poly& p, std::size_t level) {
  if (level == 0) return;
  while (!p.coeffs.empty() && is_zero(p.coeffs.back(), level - 1)) p.coeffs.pop_back();
}

Poly constant_poly(const mpq_class& c, std::size_t level) {
  Poly p;
  if (level == 0) {
    p.constant = c;
  } else if (sgn(c) != 0) {
    p.coeffs.push_back(constant_poly(c, level - 1));
  }
  return p;
}

// Variable `index` (0-based, descriptor order) lives at level index+1.
Poly variable_poly(std::size_t index, std::size_t level) {
  if (level == index + 1) {
    Poly p;
    p.coeffs.push_back(Poly{});
    p.coeffs.push_back(constant_poly(1, level - 1));
    return p;
  }
  Poly p;
  p.coeffs.push_back(variable_poly(index, level - 1));
  return p;
}

bool equal(const Poly& a, const Poly& b, std::size_t level) {
  if (level == 0) return a.constant == b.constant;
  if (a.coeffs.size() != b.coeffs.size()) return false;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    if (!equal(a.coeffs[i], b.coeffs[i], level - 1)) return false;
  return true;
}

Poly add(const Poly& a, const Poly& b, std::size_t level) {
  Poly r;
  if (level == 0) {
    r.constant = a.constant + b.constant;
    return r;
  }
  const auto& longer = a.coeffs.size() >= b.coeffs.size() ? a : b;
  const auto& shorter = a.coeffs.size() >= b.coeffs.size() ? b : a;
  r.coeffs = longer.coeffs;
  for (std::size_t i = 0; i < shorter.coeffs.size(); ++i)
    r.coeffs[i] = add(r.coeffs[i], shorter.coeffs[i], level - 1);
  trim(r, level);
  return r;
}

Poly neg(const Poly& a, std::size_t level) {
  Poly r;
  if (level == 0) {
    r.constant = -a.constant;
    return r;
  }
  r.coeffs.reserve(a.coeffs.size());
  for (const auto& c : a.coeffs) r.coeffs.push_back(neg(c, level - 1));
  return r;
}

Poly sub(const Poly& a, const Poly& b, std::size_t level) { return add(a, neg(b, level), level); }

Poly mul(const Poly& a, const Poly& b, std::size_t level) {
  Poly r;
  if (level == 0) {
    r.constant = a.constant * b.constant;
    return r;
  }
  if (a.coeffs.empty() || b.coeffs.empty()) return r;
  r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, Poly{});
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (is_zero(a.coeffs[i], level - 1)) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      if (is_zero(b.coeffs[j], level - 1)) continue;
      r.coeffs[i + j] = add(r.coeffs[i + j], mul(a.coeffs[i], b.coeffs[j], level - 1), level - 1);
    }
  }
  trim(r, level);
  return r;
}

Poly scale(const Poly& a, const mpq_class& c, std::size_t level) {
  if (sgn(c) == 0) return Poly{};
  Poly r;
  if (level == 0) {
    r.constant = a.constant * c;
    return r;
  }
  r.coeffs.reserve(a.coeffs.size());
  for (const auto& x : a.coeffs) r.coeffs.push_back(scale(x, c, level - 1));
  return r;
}

Poly mul_lower(const Poly& a, const Poly& c, std::size_t level) {
  Poly r;
  if (is_zero(c, level - 1)) return r;
  r.coeffs.reserve(a.coeffs.size());
  for (const auto& x : a.coeffs) r.coeffs.push_back(mul(x, c, level - 1));
  trim(r, level);
  return r;
}

namespace {

// x^shift * c * b, c a level-(k-1) coefficient.
Poly shifted_product(const Poly& b, const Poly& c, std::size_t shift, std::size_t level) {
  Poly r;
  r.coeffs.assign(shift, Poly{});
  for (const auto& x : b.coeffs) r.coeffs.push_back(mul(x, c, level - 1));
  trim(r, level);
  return r;
}

}  // namespace

std::optional<Poly> divide_exact(const Poly& a, const Poly& b, std::size_t level, BaseRing base) {
  if (is_zero(b, level)) throw RingError("division by zero");
  if (level == 0) {
    Poly q;
    if (base == BaseRing::rationals) {
      q.constant = a.constant / b.constant;
      return q;
    }
    const mpz_class& n = a.constant.get_num();
    const mpz_class& d = b.constant.get_num();
    if (!mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) return std::nullopt;
    mpz_class quo;
    mpz_divexact(quo.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    q.constant = quo;
    return q;
  }
  if (is_zero(a, level)) return Poly{};
  if (a.coeffs.size() < b.coeffs.size()) return std::nullopt;
  const std::size_t db = b.coeffs.size() - 1;
  const Poly& lb = b.coeffs.back();

  if (db == 0) {
    Poly q;
    q.coeffs.reserve(a.coeffs.size());
    for (const auto& c : a.coeffs) {
      auto qc = divide_exact(c, lb, level - 1, base);
      if (!qc) return std::nullopt;
      q.coeffs.push_back(std::move(*qc));
    }
    return q;
  }

  Poly q;
  q.coeffs.assign(a.coeffs.size() - db, Poly{});
  Poly r = a;
  while (!r.coeffs.empty()) {
    if (r.coeffs.size() < b.coeffs.size()) return std::nullopt;
    const std::size_t shift = r.coeffs.size() - 1 - db;
    auto qc = divide_exact(r.coeffs.back(), lb, level - 1, base);
    if (!qc) return std::nullopt;
    r = sub(r, shifted_product(b, *qc, shift, level), level);
    q.coeffs[shift] = std::move(*qc);
  }
  trim(q, level);
  return q;
}

namespace {

mpq_class numeric_gcd(const mpq_class& a, const mpq_class& b, BaseRing base) {
  if (sgn(a) == 0) return abs(b);
  if (sgn(b) == 0) return abs(a);
  if (base == BaseRing::integers) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
    return mpq_class(g);
  }
  // Over a field any nonzero element is a gcd; gcd(num)/lcm(den) keeps primitive
  // parts integral and small.
  mpz_class n, d;
  mpz_gcd(n.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
  mpz_lcm(d.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
  mpq_class r(n, d);
  r.canonicalize();
  return r;
}

Poly primitive_part(const Poly& p, const Poly& content, std::size_t level, BaseRing base) {
  Poly r;
  r.coeffs.reserve(p.coeffs.size());
  for (const auto& c : p.coeffs) r.coeffs.push_back(*divide_exact(c, content, level - 1, base));
  return r;
}

bool is_constant_unit_one(const Poly& p, std::size_t level) {
  if (level == 0) return p.constant == 1;
  return p.coeffs.size() == 1 && is_constant_unit_one(p.coeffs[0], level - 1);
}

Poly pseudo_remainder(const Poly& a, const Poly& b, std::size_t level) {
  const std::size_t db = b.coeffs.size() - 1;
  const Poly& lb = b.coeffs.back();
  Poly r = a;
  while (!r.coeffs.empty() && r.coeffs.size() - 1 >= db) {
    const std::size_t shift = r.coeffs.size() - 1 - db;
    Poly lr = r.coeffs.back();
    r = sub(mul_lower(r, lb, level), shifted_product(b, lr, shift, level), level);
  }
  return r;
}

}  // namespace

Poly main_content(const Poly& p, std::size_t level, BaseRing base) {
  Poly c;
  bool first = true;
  for (const auto& x : p.coeffs) {
    if (is_zero(x, level - 1)) continue;
    c = first ? x : gcd_raw(c, x, level - 1, base);
    first = false;
    if (is_constant_unit_one(c, level - 1)) break;
  }
  return c;
}

Poly gcd_raw(const Poly& a, const Poly& b, std::size_t level, BaseRing base) {
  if (is_zero(a, level)) return b;
  if (is_zero(b, level)) return a;
  if (level == 0) {
    Poly g;
    g.constant = numeric_gcd(a.constant, b.constant, base);
    return g;
  }
  const Poly ca = main_content(a, level, base);
  const Poly cb = main_content(b, level, base);
  const Poly c = gcd_raw(ca, cb, level - 1, base);
  Poly pa = primitive_part(a, ca, level, base);
  Poly pb = primitive_part(b, cb, level, base);
  if (pa.coeffs.size() < pb.coeffs.size()) std::swap(pa, pb);

  Poly g;
  for (;;) {
    if (pb.coeffs.size() == 1) {  // degree 0 in the main variable
      g = constant_poly(1, level);
      break;
    }
    Poly r = pseudo_remainder(pa, pb, level);
    if (r.coeffs.empty()) {
      g = std::move(pb);
      break;
    }
    pa = std::move(pb);
    pb = primitive_part(r, main_content(r, level, base), level, base);
  }
  return mul_lower(g, c, level);
}

namespace {

void walk_terms(const Poly& p, std::size_t level, std::vector<unsigned>& exps,
                const std::function<void(const std::vector<unsigned>&, const mpq_class&)>& fn) {
  if (level == 0) {
    if (sgn(p.constant) != 0) fn(exps, p.constant);
    return;
  }
  for (std::size_t d = 0; d < p.coeffs.size(); ++d) {
    exps[level - 1] = static_cast<unsigned>(d);
    walk_terms(p.coeffs[d], level - 1, exps, fn);
  }
  exps[level - 1] = 0;
}

}  // namespace

void for_each_term(const Poly& p, std::size_t level,
                   const std::function<void(const std::vector<unsigned>&, const mpq_class&)>& fn) {
  std::vector<unsigned> exps(level, 0);
  walk_terms(p, level, exps, fn);
}

bool grlex_greater(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
  unsigned da = 0, db = 0;
  for (auto e : a) da += e;
  for (auto e : b) db += e;
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

mpq_class leading_numeric(const Poly& p, std::size_t level) {
  mpq_class best;
  std::vector<unsigned> best_exps;
  bool found = false;
  for_each_term(p, level, [&](const std::vector<unsigned>& e, const mpq_class& c) {
    if (!found || grlex_greater(e, best_exps)) {
      best = c;
      best_exps = e;
      found = true;
    }
  });
  return best;
}

}  // namespace egs::detail
