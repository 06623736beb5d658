#pragma once

// Exact coefficient arithmetic: sparse Laurent polynomials in q^{±1}, Q_1..Q_m
// over arbitrary-precision integers, and the fraction field used by the linear
// solvers.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace superschur {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exponent vector of one monomial: q-exponent (may be negative) followed by
// the Q_1..Q_m exponents (never negative; the Q_i are not inverted).
struct ExponentVec {
  int q = 0;
  std::vector<int> Q;

  auto operator<=>(const ExponentVec&) const = default;
};

class LaurentPolynomial {
 public:
  LaurentPolynomial() : nq_(0) {}
  explicit LaurentPolynomial(int num_q_vars) : nq_(num_q_vars) {}

  static LaurentPolynomial zero(int nq) { return LaurentPolynomial(nq); }
  static LaurentPolynomial constant(int nq, const Integer& c);
  static LaurentPolynomial one(int nq) { return constant(nq, 1); }
  // q^e, e arbitrary sign
  static LaurentPolynomial q_power(int nq, int e);
  // Q_i, 1-based i
  static LaurentPolynomial Q_var(int nq, int i);

  int num_q_vars() const { return nq_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  std::size_t term_count() const { return terms_.size(); }
  const std::map<ExponentVec, Integer>& terms() const { return terms_; }

  // Coefficient of a monomial (zero if absent).
  Integer coeff(const ExponentVec& e) const;
  void set_coeff(const ExponentVec& e, const Integer& c);

  LaurentPolynomial operator-() const;
  LaurentPolynomial operator+(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-(const LaurentPolynomial& o) const;
  LaurentPolynomial operator*(const LaurentPolynomial& o) const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const LaurentPolynomial& o);
  LaurentPolynomial scaled(const Integer& c) const;

  bool operator==(const LaurentPolynomial& o) const {
    return nq_ == o.nq_ && terms_ == o.terms_;
  }
  bool operator!=(const LaurentPolynomial& o) const { return !(*this == o); }
  // Lexicographic on canonical term lists; a total order usable as a map key.
  std::strong_ordering operator<=>(const LaurentPolynomial& o) const;

  // gcd of all integer coefficients (positive; 0 for the zero polynomial)
  Integer content() const;
  // Coefficient of the lexicographically largest exponent vector.
  Integer leading_coeff() const;
  const ExponentVec& leading_exponent() const;

  // Exact division: returns the quotient when divisor divides exactly,
  // nullopt otherwise. Divisor must be nonzero.
  std::optional<LaurentPolynomial> exact_divide(const LaurentPolynomial& divisor) const;

  int total_degree() const;

  // Canonical text form: terms sorted lexicographically on exponent vectors,
  // e.g. "-2*q^-1*Q1^2 + 3".
  std::string to_string() const;

 private:
  void check_compatible(const LaurentPolynomial& o) const;
  void prune();

  int nq_;
  std::map<ExponentVec, Integer> terms_;
};

// num/den with den != 0, reduced by integer content and normalized so the
// denominator's leading coefficient is positive. Equality is mathematical
// (cross multiplication), not representational.
class RationalFunction {
 public:
  RationalFunction() = default;
  explicit RationalFunction(const LaurentPolynomial& p)
      : num_(p), den_(LaurentPolynomial::one(p.num_q_vars())) {}
  RationalFunction(LaurentPolynomial num, LaurentPolynomial den);

  static RationalFunction zero(int nq) {
    return RationalFunction(LaurentPolynomial::zero(nq));
  }

  const LaurentPolynomial& num() const { return num_; }
  const LaurentPolynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction operator-() const;

  bool operator==(const RationalFunction& o) const;
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  // The polynomial this fraction reduces to, when the denominator divides the
  // numerator exactly.
  std::optional<LaurentPolynomial> as_polynomial() const;

  std::string to_string() const;

 private:
  void normalize();

  LaurentPolynomial num_, den_;
};

}  // namespace superschur
