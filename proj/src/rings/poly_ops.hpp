#pragma once

// Level-indexed kernels on the recursive polynomial representation. A level-k
// polynomial has k variables; its coefficients are level k-1 polynomials.

#include <functional>
#include <optional>
#include <vector>

#include "egs/rings.hpp"

namespace egs::detail {

bool is_zero(const Poly& p, std::size_t level);
void trim(Poly& p, std::size_t level);
Poly constant_poly(const mpq_class& c, std::size_t level);
Poly variable_poly(std::size_t index, std::size_t level);

bool equal(const Poly& a, const Poly& b, std::size_t level);
Poly add(const Poly& a, const Poly& b, std::size_t level);
Poly sub(const Poly& a, const Poly& b, std::size_t level);
Poly neg(const Poly& a, std::size_t level);
Poly mul(const Poly& a, const Poly& b, std::size_t level);
/// Multiplies every numeric coefficient by c.
Poly scale(const Poly& a, const mpq_class& c, std::size_t level);
/// Multiplies a level-k polynomial by a level-(k-1) polynomial.
Poly mul_lower(const Poly& a, const Poly& c, std::size_t level);

std::optional<Poly> divide_exact(const Poly& a, const Poly& b, std::size_t level, BaseRing base);

/// A (non-normalized) gcd: correct up to units.
Poly gcd_raw(const Poly& a, const Poly& b, std::size_t level, BaseRing base);
/// Content in the main variable (a level-(k-1) polynomial) for level k >= 1.
Poly main_content(const Poly& p, std::size_t level, BaseRing base);

void for_each_term(const Poly& p, std::size_t level,
                   const std::function<void(const std::vector<unsigned>&, const mpq_class&)>& fn);
/// Graded-lex comparison of exponent vectors: returns true when a > b.
bool grlex_greater(const std::vector<unsigned>& a, const std::vector<unsigned>& b);
/// Numeric coefficient of the graded-lex leading term.
mpq_class leading_numeric(const Poly& p, std::size_t level);

}  // namespace egs::detail
