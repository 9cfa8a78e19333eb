#pragma once

// Sparse multivariate Laurent polynomials with exact rational coefficients,
// canonicalized as an ordered map from exponent vectors to coefficients, so
// equality is plain comparison.  Exponents may be negative; the adjoint
// machinery additionally uses half-integer exponents for formal radicals by
// working with doubled exponents (sqrt(x) = exponent 1 when the unit is 1/2).

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hsx/numeric.hpp"

namespace hsx {

using Mono = std::vector<int16_t>;

class Poly {
 public:
  Poly() = default;
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly constant(int nvars, const Rat& c);
  // Single variable with the given exponent (in exponent units).
  static Poly monomial(int nvars, int var, int exp, const Rat& c = 1);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Mono, Rat>& terms() const { return terms_; }

  void add_term(const Mono& m, const Rat& c);

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& c) const;
  bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  Rat evaluate(const std::vector<Rat>& values) const;  // exponent unit 1, all >= 0 or value != 0

  bool exponents_all_even() const;  // for the doubled-exponent radical check

  std::string to_string(const std::vector<std::string>& names, int exp_unit_halves = 1) const;

 private:
  int nvars_ = 0;
  std::map<Mono, Rat> terms_;
};

// Quotient of polynomials; denominators are never reduced (no multivariate
// gcd), equality goes through cross multiplication.
struct RationalFn {
  Poly num, den;

  explicit RationalFn(int nvars = 0) : num(nvars), den(Poly::constant(nvars, 1)) {}
  RationalFn(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) {}

  static RationalFn from_poly(Poly p) {
    int n = p.nvars();
    return RationalFn(std::move(p), Poly::constant(n, 1));
  }

  RationalFn operator+(const RationalFn& o) const { return {num * o.den + o.num * den, den * o.den}; }
  RationalFn operator-(const RationalFn& o) const { return {num * o.den - o.num * den, den * o.den}; }
  RationalFn operator*(const RationalFn& o) const { return {num * o.num, den * o.den}; }
  bool equals(const RationalFn& o) const { return (num * o.den) == (o.num * den); }
  bool is_zero() const { return num.is_zero(); }
};

}  // namespace hsx
