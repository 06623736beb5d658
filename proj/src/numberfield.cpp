#include "superschur/numberfield.hpp"

#include <sstream>
#include <stdexcept>

namespace superschur {

namespace {

// Polynomial division a = q*b + r over Q[t], b nonzero. Returns {q, r}.
std::pair<std::vector<Rational>, std::vector<Rational>> poly_divmod(
    std::vector<Rational> a, const std::vector<Rational>& b) {
  auto deg = [](const std::vector<Rational>& v) {
    int d = static_cast<int>(v.size()) - 1;
    while (d >= 0 && v[d] == 0) --d;
    return d;
  };
  int db = deg(b);
  if (db < 0) throw std::invalid_argument("division by zero polynomial");
  std::vector<Rational> q(a.size(), Rational(0));
  int da = deg(a);
  while (da >= db) {
    Rational c = a[da] / b[db];
    q[da - db] = c;
    for (int i = 0; i <= db; ++i) a[da - db + i] -= c * b[i];
    da = deg(a);
  }
  a.resize(std::max(db, 1));
  return {q, a};
}

std::vector<Rational> poly_mul(const std::vector<Rational>& a,
                               const std::vector<Rational>& b) {
  std::vector<Rational> r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

}  // namespace

FieldElem::FieldElem(const NumberField* field, std::vector<Rational> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  coeffs_.resize(field->degree(), Rational(0));
}

bool FieldElem::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  std::vector<Rational> r = coeffs_;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += o.coeffs_[i];
  return FieldElem(field_, std::move(r));
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  std::vector<Rational> r = coeffs_;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= o.coeffs_[i];
  return FieldElem(field_, std::move(r));
}

FieldElem FieldElem::operator-() const {
  std::vector<Rational> r = coeffs_;
  for (auto& c : r) c = -c;
  return FieldElem(field_, std::move(r));
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  return FieldElem(field_, field_->reduce(poly_mul(coeffs_, o.coeffs_)));
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw std::invalid_argument("inverse of zero");
  // Extended Euclid in Q[t] for gcd(this, modulus) = 1.
  std::vector<Rational> r0 = field_->modulus(), r1 = coeffs_;
  std::vector<Rational> s0 = {Rational(0)}, s1 = {Rational(1)};
  auto is_zero_poly = [](const std::vector<Rational>& v) {
    for (const auto& c : v)
      if (c != 0) return false;
    return true;
  };
  while (true) {
    auto [q, r] = poly_divmod(r0, r1);
    if (is_zero_poly(r)) break;
    std::vector<Rational> qs1 = poly_mul(q, s1);
    std::vector<Rational> s2(std::max(s0.size(), qs1.size()), Rational(0));
    for (std::size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
    for (std::size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
    r0 = r1;
    r1 = r;
    s0 = s1;
    s1 = s2;
  }
  // r1 is the gcd; must be a nonzero constant if the modulus is irreducible
  // (or the element is a unit in the quotient ring).
  int d = static_cast<int>(r1.size()) - 1;
  while (d >= 0 && r1[d] == 0) --d;
  if (d != 0) throw std::invalid_argument("element not invertible (reducible modulus?)");
  Rational lead = r1[0];
  for (auto& c : s1) c /= lead;
  return FieldElem(field_, field_->reduce(std::move(s1)));
}

FieldElem FieldElem::pow(long e) const {
  FieldElem base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? -static_cast<unsigned long>(e) : e;
  FieldElem acc = field_->one();
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

bool FieldElem::operator==(const FieldElem& o) const { return coeffs_ == o.coeffs_; }

std::string FieldElem::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    os << coeffs_[i].str();
    if (i >= 1) os << "*t" << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

NumberField::NumberField() : modulus_{Rational(0), Rational(1)} {}

NumberField::NumberField(std::vector<Rational> modulus) : modulus_(std::move(modulus)) {
  if (modulus_.size() < 2) throw std::invalid_argument("modulus must have positive degree");
  if (modulus_.back() != 1) throw std::invalid_argument("modulus must be monic");
}

FieldElem NumberField::zero() const {
  return FieldElem(this, std::vector<Rational>(degree(), Rational(0)));
}

FieldElem NumberField::one() const { return from_rational(Rational(1)); }

FieldElem NumberField::from_rational(const Rational& r) const {
  std::vector<Rational> v(degree(), Rational(0));
  v[0] = r;
  return FieldElem(this, std::move(v));
}

FieldElem NumberField::generator() const {
  std::vector<Rational> v(std::max(degree(), 2), Rational(0));
  v[1] = 1;
  return FieldElem(this, reduce(std::move(v)));
}

std::vector<Rational> NumberField::reduce(std::vector<Rational> v) const {
  auto [q, r] = poly_divmod(std::move(v), modulus_);
  r.resize(degree(), Rational(0));
  return r;
}

NumberField cyclotomic_field(int index) {
  switch (index) {
    case 1:  // t - 1
      return NumberField({Rational(-1), Rational(1)});
    case 2:  // t + 1
      return NumberField({Rational(1), Rational(1)});
    case 3:  // t^2 + t + 1
      return NumberField({Rational(1), Rational(1), Rational(1)});
    case 4:  // t^2 + 1
      return NumberField({Rational(1), Rational(0), Rational(1)});
    default:
      throw std::invalid_argument("cyclotomic_field supports index <= 4");
  }
}

SpecializationTarget SpecializationTarget::rationals(const Rational& q,
                                                     const std::vector<Rational>& Qs) {
  SpecializationTarget t;
  t.field = std::make_shared<NumberField>();
  t.q_value = t.field->from_rational(q);
  if (t.q_value.is_zero()) throw std::invalid_argument("q must be invertible");
  for (const auto& v : Qs) t.Q_values.push_back(t.field->from_rational(v));
  return t;
}

SpecializationTarget SpecializationTarget::quotient(
    std::vector<Rational> modulus, std::vector<Rational> q_val,
    std::vector<std::vector<Rational>> Q_vals) {
  SpecializationTarget t;
  t.field = std::make_shared<NumberField>(std::move(modulus));
  t.q_value = FieldElem(t.field.get(), t.field->reduce(std::move(q_val)));
  if (t.q_value.is_zero()) throw std::invalid_argument("q must be invertible");
  for (auto& v : Q_vals)
    t.Q_values.push_back(FieldElem(t.field.get(), t.field->reduce(std::move(v))));
  return t;
}

SpecializationTarget SpecializationTarget::group_algebra(int m) {
  if (m == 1) return rationals(1, {Rational(1)});
  if (m == 2) return rationals(1, {Rational(-1), Rational(1)});
  SpecializationTarget t;
  t.field = std::make_shared<NumberField>(cyclotomic_field(m));
  t.q_value = t.field->one();
  FieldElem xi = t.field->generator();
  FieldElem p = t.field->one();
  for (int i = 1; i <= m; ++i) {
    p = p * xi;
    t.Q_values.push_back(p);
  }
  return t;
}

FieldElem specialize(const LaurentPolynomial& p, const SpecializationTarget& target) {
  if (static_cast<int>(target.Q_values.size()) < p.num_q_vars())
    throw std::invalid_argument("target does not assign all Q variables");
  const NumberField& F = *target.field;
  FieldElem acc = F.zero();
  for (const auto& [e, c] : p.terms()) {
    FieldElem term = F.from_rational(Rational(c));
    term = term * target.q_value.pow(e.q);
    for (int i = 0; i < p.num_q_vars(); ++i)
      if (e.Q[i] != 0) term = term * target.Q_values[i].pow(e.Q[i]);
    acc = acc + term;
  }
  return acc;
}

}  // namespace superschur
