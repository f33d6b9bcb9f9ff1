#include <superklr/qpi.hpp>

#include <sstream>

namespace superklr {

QPiPolynomial QPiPolynomial::monomial(BigInt coeff, long q_exp, Parity par) {
  QPiPolynomial p;
  p.add_term(q_exp, par, coeff);
  return p;
}

BigInt QPiPolynomial::coefficient(long q_exp, Parity par) const {
  const auto it = terms_.find(QPiKey{q_exp, par});
  return it == terms_.end() ? BigInt(0) : it->second;
}

void QPiPolynomial::add_term(long q_exp, Parity par, const BigInt& coeff) {
  if (coeff == 0) return;
  const QPiKey key{q_exp, par};
  auto [it, inserted] = terms_.emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

QPiPolynomial& QPiPolynomial::operator+=(const QPiPolynomial& rhs) {
  for (const auto& [key, coeff] : rhs.terms_) add_term(key.q, key.par, coeff);
  return *this;
}

QPiPolynomial& QPiPolynomial::operator-=(const QPiPolynomial& rhs) {
  for (const auto& [key, coeff] : rhs.terms_) add_term(key.q, key.par, -coeff);
  return *this;
}

QPiPolynomial& QPiPolynomial::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, coeff] : terms_) coeff *= scalar;
  return *this;
}

QPiPolynomial operator*(const QPiPolynomial& a, const QPiPolynomial& b) {
  QPiPolynomial out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      // pi^2 = 1: parities add mod 2.
      out.add_term(ka.q + kb.q, parity_sum(ka.par, kb.par), ca * cb);
    }
  }
  return out;
}

QPiPolynomial QPiPolynomial::shifted(long q_exp, Parity par) const {
  QPiPolynomial out;
  for (const auto& [key, coeff] : terms_)
    out.add_term(key.q + q_exp, parity_sum(key.par, par), coeff);
  return out;
}

namespace {

void append_signed_coefficient(std::ostringstream& os, const BigInt& coeff,
                               bool first, bool has_symbol) {
  const bool negative = coeff < 0;
  const BigInt mag = negative ? BigInt(-coeff) : coeff;
  if (first) {
    if (negative) os << "-";
  } else {
    os << (negative ? " - " : " + ");
  }
  if (mag != 1 || !has_symbol) os << mag.get_str();
}

void append_q_power(std::ostringstream& os, long e, bool need_star) {
  if (e == 0) return;
  if (need_star) os << "*";
  os << "q";
  if (e != 1) os << "^" << e;
}

}  // namespace

std::string QPiPolynomial::to_text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, coeff] : terms_) {
    const bool has_symbol = is_odd(key.par) || key.q != 0;
    append_signed_coefficient(os, coeff, first, has_symbol);
    bool star_needed = !(coeff == 1 || coeff == -1) && has_symbol;
    if (is_odd(key.par)) {
      if (star_needed) os << "*";
      os << "p";
      star_needed = true;
    }
    append_q_power(os, key.q, star_needed);
    first = false;
  }
  return os.str();
}

LaurentPolynomial LaurentPolynomial::monomial(BigInt coeff, long q_exp) {
  LaurentPolynomial p;
  p.add_term(q_exp, coeff);
  return p;
}

BigInt LaurentPolynomial::coefficient(long q_exp) const {
  const auto it = terms_.find(q_exp);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPolynomial::add_term(long q_exp, const BigInt& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(q_exp, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

std::string LaurentPolynomial::to_text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, coeff] : terms_) {
    append_signed_coefficient(os, coeff, first, e != 0);
    append_q_power(os, e, !(coeff == 1 || coeff == -1));
    first = false;
  }
  return os.str();
}

QPiPolynomial quantum_bracket(long m, long d, Parity parity) {
  if (m < 0) {
    // [m] = -pi_i^{|m|} [|m|]; this is forced by the defining identity.
    QPiPolynomial out = quantum_bracket(-m, d, parity).shifted(0, parity_pow(parity, -m));
    out *= BigInt(-1);
    return out;
  }
  QPiPolynomial out;
  for (long k = 0; k < m; ++k)
    out.add_term(d * (m - 1 - 2 * k), parity_pow(parity, m - 1 - k), 1);
  return out;
}

LaurentPolynomial specialize_pi_one(const QPiPolynomial& p) {
  LaurentPolynomial out;
  for (const auto& [key, coeff] : p.terms()) out.add_term(key.q, coeff);
  return out;
}

BigInt specialize_total(const QPiPolynomial& p) {
  BigInt out = 0;
  for (const auto& [key, coeff] : p.terms()) out += coeff;
  return out;
}

BigInt specialize_total(const LaurentPolynomial& p) {
  BigInt out = 0;
  for (const auto& [e, coeff] : p.terms()) out += coeff;
  return out;
}

}  // namespace superklr
