#pragma once

// Specialization targets: the rationals, or a quotient field Q[t]/(p(t)) with
// p monic of positive degree. Elements are polynomials in t of degree < deg p.
// Irreducibility of p is the caller's responsibility; only monicity and
// nonzero degree are checked.

#include <memory>
#include <string>
#include <vector>

#include "superschur/ring.hpp"

namespace superschur {

class NumberField;

class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(const NumberField* field, std::vector<Rational> coeffs);

  const NumberField* field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem inverse() const;
  FieldElem pow(long e) const;  // e may be negative for invertible elements

  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  const NumberField* field_ = nullptr;
  std::vector<Rational> coeffs_;
};

class NumberField {
 public:
  // Q itself: realized as Q[t]/(t), so elements are constants.
  NumberField();
  // Q[t]/(p), p monic with positive degree, given by coefficients
  // p_0 + p_1 t + ... + p_{d-1} t^{d-1} + t^d  (the leading 1 included).
  explicit NumberField(std::vector<Rational> modulus);

  int degree() const { return static_cast<int>(modulus_.size()) - 1; }
  bool is_rationals() const { return degree() == 1 && modulus_[0] == 0; }
  const std::vector<Rational>& modulus() const { return modulus_; }

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_rational(const Rational& r) const;
  FieldElem generator() const;  // the class of t

  // Reduce a polynomial in t modulo p.
  std::vector<Rational> reduce(std::vector<Rational> v) const;

 private:
  std::vector<Rational> modulus_;
};

// The cyclotomic polynomial of index d, d <= 4 (what the tests need).
NumberField cyclotomic_field(int index);

struct SpecializationTarget {
  std::shared_ptr<NumberField> field;
  FieldElem q_value;
  std::vector<FieldElem> Q_values;

  // The rationals with the given values.
  static SpecializationTarget rationals(const Rational& q, const std::vector<Rational>& Qs);
  // Quotient field with q |-> q_val(t), Q_i |-> Q_vals[i](t), given as
  // coefficient vectors in t.
  static SpecializationTarget quotient(std::vector<Rational> modulus,
                                       std::vector<Rational> q_val,
                                       std::vector<std::vector<Rational>> Q_vals);
  // q = 1, Q_i = xi^i for xi a primitive m-th root of unity (m <= 4).
  static SpecializationTarget group_algebra(int m);
};

FieldElem specialize(const LaurentPolynomial& p, const SpecializationTarget& target);

}  // namespace superschur
