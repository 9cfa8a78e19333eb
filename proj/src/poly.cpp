#include "hsx/poly.hpp"

#include "hsx/error.hpp"

namespace hsx {

Poly Poly::constant(int nvars, const Rat& c) {
  Poly p(nvars);
  if (c != 0) p.terms_.emplace(Mono(nvars, 0), c);
  return p;
}

Poly Poly::monomial(int nvars, int var, int exp, const Rat& c) {
  Poly p(nvars);
  if (c == 0) return p;
  Mono m(nvars, 0);
  m[var] = static_cast<int16_t>(exp);
  p.terms_.emplace(std::move(m), c);
  return p;
}

void Poly::add_term(const Mono& m, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly p(nvars_);
  for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
  return p;
}

Poly Poly::operator+(const Poly& o) const {
  Poly p = *this;
  for (const auto& [m, c] : o.terms_) p.add_term(m, c);
  return p;
}

Poly Poly::operator-(const Poly& o) const {
  Poly p = *this;
  for (const auto& [m, c] : o.terms_) p.add_term(m, -c);
  return p;
}

Poly Poly::operator*(const Poly& o) const {
  Poly p(nvars_);
  Mono m(nvars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) m[i] = static_cast<int16_t>(ma[i] + mb[i]);
      p.add_term(m, ca * cb);
    }
  return p;
}

Poly Poly::operator*(const Rat& c) const {
  Poly p(nvars_);
  if (c == 0) return p;
  for (const auto& [m, k] : terms_) p.terms_.emplace(m, k * c);
  return p;
}

Rat Poly::evaluate(const std::vector<Rat>& values) const {
  require(static_cast<int>(values.size()) == nvars_, Errc::BadInput, "evaluation arity");
  Rat out = 0;
  for (const auto& [m, c] : terms_) {
    Rat t = c;
    for (int i = 0; i < nvars_; ++i) {
      int e = m[i];
      if (e == 0) continue;
      Rat b = values[i];
      if (e < 0) {
        require(b != 0, Errc::IrregularPoint, "division by zero in evaluation");
        b = Rat(1) / b;
        e = -e;
      }
      for (int j = 0; j < e; ++j) t *= b;
    }
    out += t;
  }
  return out;
}

bool Poly::exponents_all_even() const {
  for (const auto& [m, c] : terms_) {
    (void)c;
    for (int16_t e : m)
      if (e & 1) return false;
  }
  return true;
}

std::string Poly::to_string(const std::vector<std::string>& names, int exp_unit_halves) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) s += " + ";
    first = false;
    s += c.str();
    for (int i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      s += "*" + names[i];
      int num = m[i], den = exp_unit_halves;
      if (num % den == 0) {
        if (num / den != 1) s += "^" + std::to_string(num / den);
      } else {
        s += "^(" + std::to_string(num) + "/" + std::to_string(den) + ")";
      }
    }
  }
  return s;
}

}  // namespace hsx
