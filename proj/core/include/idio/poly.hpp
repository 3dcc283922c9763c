#pragma once

// Sparse polynomials in Z[X, y, z] with arbitrary-precision coefficients.
//
// X is the characteristic-polynomial variable; y and z are the weights
// attached to non-arcs and reversed arcs in the generalized adjacency
// matrix. Terms are stored in descending lexicographic order X > y > z
// with no zero coefficients, so structural equality is polynomial
// equality and str() is a canonical encoding.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace idio {

using Integer = mpz_class;

struct Exponents {
  unsigned x = 0;
  unsigned y = 0;
  unsigned z = 0;

  friend bool operator==(const Exponents&, const Exponents&) = default;
};

class MPoly {
 public:
  struct Term {
    std::uint64_t key;  // packed exponents, see pack()
    Integer coeff;
  };

  MPoly() = default;
  MPoly(long c);  // NOLINT(google-explicit-constructor): constants read naturally
  explicit MPoly(const Integer& c);

  static MPoly monomial(const Integer& c, Exponents e);
  static MPoly X() { return monomial(1, {1, 0, 0}); }
  static MPoly y() { return monomial(1, {0, 1, 0}); }
  static MPoly z() { return monomial(1, {0, 0, 1}); }

  /// Parses sums of products such as "X^3 - 3*X*y + 2". Accepts any term
  /// order and repeated monomials; throws std::invalid_argument on bad input.
  static MPoly parse(std::string_view text);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  Integer coeff(Exponents e) const;
  unsigned degree_x() const;
  bool depends_on_x() const;
  bool depends_on_yz() const;

  Integer eval(const Integer& x, const Integer& y, const Integer& z) const;

  /// Substitutes the given variables and keeps the others symbolic.
  MPoly substitute(const std::optional<Integer>& x, const std::optional<Integer>& y,
                   const std::optional<Integer>& z) const;

  MPoly pow(unsigned e) const;

  std::string str() const;

  MPoly& operator+=(const MPoly& rhs);
  MPoly& operator-=(const MPoly& rhs);
  MPoly& operator*=(const MPoly& rhs);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator-(MPoly a);

  friend bool operator==(const MPoly& a, const MPoly& b);

  static std::uint64_t pack(Exponents e);
  static Exponents unpack(std::uint64_t key);

 private:
  friend MPoly exact_div(const MPoly& num, const MPoly& den);
  friend MPoly exact_div(const MPoly& num, const Integer& den);

  static MPoly from_sorted(std::vector<Term> terms);

  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const MPoly& p);

/// Quotient of an exact division. Throws std::logic_error when the divisor
/// does not divide the numerator; in fraction-free elimination that only
/// happens on an implementation bug, never on valid input.
MPoly exact_div(const MPoly& num, const MPoly& den);
MPoly exact_div(const MPoly& num, const Integer& den);

/// Polynomial with Gaussian-integer coefficients: re + i*im.
struct GaussPoly {
  MPoly re;
  MPoly im;

  static GaussPoly i_power(unsigned n);

  friend GaussPoly operator+(const GaussPoly& a, const GaussPoly& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussPoly operator-(const GaussPoly& a, const GaussPoly& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussPoly operator*(const GaussPoly& a, const GaussPoly& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussPoly&, const GaussPoly&) = default;
};

/// P(-iX) for P univariate in X.
GaussPoly substitute_neg_i_x(const MPoly& p);

/// True iff i^n * P(-iX) is real and equal to Q. P and Q must be univariate
/// in X with degree at most n (std::invalid_argument otherwise).
bool gaussian_identity_check(const MPoly& p, const MPoly& q, unsigned n);

}  // namespace idio
