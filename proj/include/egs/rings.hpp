#pragma once

// Exact arithmetic over the supported GCD domains: ZZ, ZZ[x1..xk], QQ[x1..xk].
//
// Every element is a polynomial stored recursively in the LAST variable of its
// descriptor, with coefficients in the ring of one fewer variable. The integers
// are the zero-variable case. Numeric coefficients are GMP rationals; over an
// integer base they always have denominator 1.

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace egs {

enum class BaseRing { integers, rationals };

class RingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotDivisible : public RingError {
 public:
  NotDivisible() : RingError("not divisible") {}
};

class ParseError : public RingError {
 public:
  ParseError(std::size_t position, const std::string& what)
      : RingError("at position " + std::to_string(position) + ": " + what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class RingDescriptor {
 public:
  static RingDescriptor integers();
  static RingDescriptor polynomial(std::vector<std::string> variables, BaseRing base);

  std::span<const std::string> variables() const { return data_->variables; }
  std::size_t num_variables() const { return data_->variables.size(); }
  BaseRing base() const { return data_->base; }
  bool is_integers() const { return num_variables() == 0; }

  /// ZZ and QQ[x] are principal ideal (and Euclidean) domains here; every other
  /// descriptor is treated as a GCD domain only.
  bool is_pid() const;
  bool is_euclidean() const { return is_pid(); }

  std::optional<std::size_t> variable_index(std::string_view name) const;
  std::string to_string() const;

  friend bool operator==(const RingDescriptor& a, const RingDescriptor& b);

 private:
  struct Data {
    std::vector<std::string> variables;
    BaseRing base;
  };
  explicit RingDescriptor(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
};

namespace detail {

// Dense recursive polynomial. At level 0 only `constant` is meaningful; at
// level k > 0, coeffs[d] is the coefficient of x_k^d, a level k-1 polynomial,
// with no trailing zeros (the zero polynomial has no coefficients).
struct Poly {
  mpq_class constant;
  std::vector<Poly> coeffs;
};

}  // namespace detail

/// One term of a flattened polynomial: exponents follow the descriptor's
/// variable order.
struct Term {
  std::vector<unsigned> exponents;
  mpq_class coefficient;
};

class RingElement {
 public:
  RingElement(RingDescriptor ring, detail::Poly poly);

  static RingElement zero(const RingDescriptor& ring);
  static RingElement one(const RingDescriptor& ring);
  static RingElement constant(const RingDescriptor& ring, const mpq_class& value);
  static RingElement integer(const RingDescriptor& ring, long value) { return constant(ring, mpq_class(value)); }
  static RingElement variable(const RingDescriptor& ring, std::size_t index);

  const RingDescriptor& ring() const { return ring_; }
  const detail::Poly& poly() const { return poly_; }
  std::size_t level() const { return ring_.num_variables(); }

  bool is_zero() const;
  bool is_constant() const;
  /// Numeric value of a constant element.
  const mpq_class& constant_value() const;
  /// Total degree; -1 for zero.
  int total_degree() const;
  /// Degree in the main (last) variable; -1 for zero. Constants have degree 0.
  int main_degree() const;

  /// Terms in descending graded-lex order.
  std::vector<Term> terms() const;
  /// Coefficient of the graded-lex leading term; zero for the zero element.
  mpq_class leading_coefficient() const;

  RingElement operator-() const;
  RingElement& operator+=(const RingElement& other);
  RingElement& operator-=(const RingElement& other);
  RingElement& operator*=(const RingElement& other);

  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(RingElement a, const RingElement& b) { return a *= b; }
  friend bool operator==(const RingElement& a, const RingElement& b);

 private:
  void require_same_ring(const RingElement& other) const;

  RingDescriptor ring_;
  detail::Poly poly_;
};

RingElement pow(const RingElement& a, unsigned long exponent);

/// q with a = q*b, or nullopt when b does not divide a. Throws on b == 0.
std::optional<RingElement> try_exact_div(const RingElement& a, const RingElement& b);
/// Throws NotDivisible when b does not divide a.
RingElement exact_div(const RingElement& a, const RingElement& b);
bool divides(const RingElement& d, const RingElement& a);

/// Splits a = u * n into a unit u and the normalized representative n
/// (nonnegative over ZZ, positive graded-lex leading coefficient over ZZ[vars],
/// monic over QQ[vars]). The zero element returns (1, 0).
std::pair<RingElement, RingElement> split_unit(const RingElement& a);
RingElement normalize(const RingElement& a);

RingElement gcd(const RingElement& a, const RingElement& b);
RingElement lcm(const RingElement& a, const RingElement& b);
/// gcd of an empty list is 0; lcm of an empty list is 1.
RingElement gcd_many(std::span<const RingElement> xs, const RingDescriptor& ring);
RingElement lcm_many(std::span<const RingElement> xs, const RingDescriptor& ring);

bool is_unit(const RingElement& a);
/// The unit u with a = u*b when a and b are associates.
std::optional<RingElement> associate_unit(const RingElement& a, const RingElement& b);
inline bool is_associate(const RingElement& a, const RingElement& b) { return associate_unit(a, b).has_value(); }

struct ContentSplit {
  RingElement content;
  RingElement primitive;
};

/// Numeric content: p = content * primitive, with the content a constant of
/// p's ring carrying the sign (ZZ base) or the leading coefficient (QQ base),
/// so the primitive part has coprime integer coefficients and positive leading
/// coefficient, or is monic.
ContentSplit content_and_primitive(const RingElement& p);
/// Content with respect to the main (last) variable: gcd of the coefficients of
/// p viewed as a polynomial in that variable, embedded back into p's ring.
ContentSplit recursive_content_and_primitive(const RingElement& p);

// Euclidean operations; only valid when ring().is_euclidean().

struct DivMod {
  RingElement quotient;
  RingElement remainder;
};
/// a = q*b + r with 0 <= r < |b| over ZZ, deg r < deg b over QQ[x].
DivMod euclid_divmod(const RingElement& a, const RingElement& b);

struct ExtendedGcd {
  RingElement gcd;  // normalized
  RingElement s;
  RingElement t;    // s*a + t*b == gcd
};
ExtendedGcd extended_gcd(const RingElement& a, const RingElement& b);

struct Congruence {
  RingElement residue;
  RingElement modulus;
};

struct CrtSolution {
  RingElement solution;
  RingElement modulus;
};

struct CrtIncompatible {
  std::size_t first;   // 0-based indices of a violating pair, first < second
  std::size_t second;
};

struct CrtResult {
  std::optional<CrtSolution> solution;
  std::optional<CrtIncompatible> conflict;
  bool solvable() const { return solution.has_value(); }
};

/// Solves x = a_i mod b_i over a Euclidean descriptor. The system is solvable
/// iff every pair satisfies a_i = a_j mod (b_i, b_j); otherwise the first such
/// violating pair is returned.
CrtResult crt(std::span<const Congruence> congruences);

RingElement parse_element(std::string_view text, const RingDescriptor& ring);
std::string format_element(const RingElement& a);

std::ostream& operator<<(std::ostream& os, const RingElement& a);

}  // namespace egs
