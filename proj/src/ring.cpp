#include "superschur/ring.hpp"

#include <sstream>

namespace superschur {

namespace {

Integer integer_gcd(Integer a, Integer b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Integer t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

LaurentPolynomial LaurentPolynomial::constant(int nq, const Integer& c) {
  LaurentPolynomial p(nq);
  if (c != 0) p.terms_[ExponentVec{0, std::vector<int>(nq, 0)}] = c;
  return p;
}

LaurentPolynomial LaurentPolynomial::q_power(int nq, int e) {
  LaurentPolynomial p(nq);
  p.terms_[ExponentVec{e, std::vector<int>(nq, 0)}] = 1;
  return p;
}

LaurentPolynomial LaurentPolynomial::Q_var(int nq, int i) {
  if (i < 1 || i > nq) throw std::invalid_argument("Q index out of range");
  LaurentPolynomial p(nq);
  ExponentVec e{0, std::vector<int>(nq, 0)};
  e.Q[i - 1] = 1;
  p.terms_[e] = 1;
  return p;
}

bool LaurentPolynomial::is_one() const {
  if (terms_.size() != 1) return false;
  const auto& [e, c] = *terms_.begin();
  if (c != 1 || e.q != 0) return false;
  for (int x : e.Q)
    if (x != 0) return false;
  return true;
}

Integer LaurentPolynomial::coeff(const ExponentVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPolynomial::set_coeff(const ExponentVec& e, const Integer& c) {
  for (int x : e.Q)
    if (x < 0) throw std::invalid_argument("negative Q exponent");
  if (c == 0)
    terms_.erase(e);
  else
    terms_[e] = c;
}

void LaurentPolynomial::check_compatible(const LaurentPolynomial& o) const {
  if (nq_ != o.nq_) throw std::invalid_argument("mixed Q-variable counts");
}

void LaurentPolynomial::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(e, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
  LaurentPolynomial r(*this);
  r += o;
  return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
  LaurentPolynomial r(*this);
  r -= o;
  return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
  check_compatible(o);
  LaurentPolynomial r(nq_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      ExponentVec e{ea.q + eb.q, ea.Q};
      for (int i = 0; i < nq_; ++i) e.Q[i] += eb.Q[i];
      auto [it, inserted] = r.terms_.emplace(std::move(e), ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  r.prune();
  return r;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& o) {
  *this = *this * o;
  return *this;
}

LaurentPolynomial LaurentPolynomial::scaled(const Integer& c) const {
  LaurentPolynomial r(nq_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& [e, v] : r.terms_) v *= c;
  return r;
}

std::strong_ordering LaurentPolynomial::operator<=>(const LaurentPolynomial& o) const {
  if (auto c = nq_ <=> o.nq_; c != 0) return c;
  auto ia = terms_.begin(), ib = o.terms_.begin();
  for (; ia != terms_.end() && ib != o.terms_.end(); ++ia, ++ib) {
    if (auto c = ia->first <=> ib->first; c != 0) return c;
    if (auto c = ia->second.compare(ib->second); c != 0)
      return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (ia != terms_.end()) return std::strong_ordering::greater;
  if (ib != o.terms_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

Integer LaurentPolynomial::content() const {
  Integer g = 0;
  for (const auto& [e, c] : terms_) {
    g = integer_gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

Integer LaurentPolynomial::leading_coeff() const {
  if (terms_.empty()) return 0;
  return terms_.rbegin()->second;
}

const ExponentVec& LaurentPolynomial::leading_exponent() const {
  if (terms_.empty()) throw std::logic_error("leading_exponent of zero");
  return terms_.rbegin()->first;
}

std::optional<LaurentPolynomial> LaurentPolynomial::exact_divide(
    const LaurentPolynomial& divisor) const {
  check_compatible(divisor);
  if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
  LaurentPolynomial rem(*this), quot(nq_);
  const ExponentVec& de = divisor.leading_exponent();
  const Integer& dc = divisor.leading_coeff();
  while (!rem.is_zero()) {
    const ExponentVec& re = rem.leading_exponent();
    // q divides always (Laurent); Q exponents must not go negative.
    ExponentVec m{re.q - de.q, re.Q};
    bool ok = true;
    for (int i = 0; i < nq_; ++i) {
      m.Q[i] -= de.Q[i];
      if (m.Q[i] < 0) ok = false;
    }
    Integer c = rem.leading_coeff();
    if (!ok || c % dc != 0) return std::nullopt;
    c /= dc;
    LaurentPolynomial mono(nq_);
    mono.terms_[m] = c;
    quot += mono;
    rem -= mono * divisor;
    if (!rem.is_zero() && rem.leading_exponent() >= re) return std::nullopt;
  }
  return quot;
}

int LaurentPolynomial::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int t = std::abs(e.q);
    for (int x : e.Q) t += x;
    d = std::max(d, t);
  }
  return d;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    std::vector<std::string> factors;
    if (e.q != 0)
      factors.push_back(e.q == 1 ? "q" : "q^" + std::to_string(e.q));
    for (int i = 0; i < nq_; ++i) {
      if (e.Q[i] != 0) {
        std::string f = "Q" + std::to_string(i + 1);
        if (e.Q[i] != 1) f += "^" + std::to_string(e.Q[i]);
        factors.push_back(f);
      }
    }
    if (factors.empty()) {
      os << a.str();
    } else {
      if (a != 1) os << a.str() << "*";
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) os << "*";
        os << factors[i];
      }
    }
    first = false;
  }
  return os.str();
}

RationalFunction::RationalFunction(LaurentPolynomial num, LaurentPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPolynomial::one(den_.num_q_vars());
    return;
  }
  Integer g = integer_gcd(num_.content(), den_.content());
  if (g > 1) {
    Integer gg = g;
    LaurentPolynomial n2(num_.num_q_vars()), d2(den_.num_q_vars());
    for (const auto& [e, c] : num_.terms()) n2.set_coeff(e, c / gg);
    for (const auto& [e, c] : den_.terms()) d2.set_coeff(e, c / gg);
    num_ = std::move(n2);
    den_ = std::move(d2);
  }
  if (den_.leading_coeff() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw std::invalid_argument("division by zero");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r(*this);
  r.num_ = -r.num_;
  return r;
}

bool RationalFunction::operator==(const RationalFunction& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

std::optional<LaurentPolynomial> RationalFunction::as_polynomial() const {
  if (num_.is_zero()) return LaurentPolynomial::zero(den_.num_q_vars());
  return num_.exact_divide(den_);
}

std::string RationalFunction::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace superschur
