#include "cyclo/poly.hpp"

namespace cyclo {

Poly::Poly(Rat c) {
  if (c != 0) coeffs_.push_back(std::move(c));
}

Poly Poly::variable() { return monomial(1, Rat(1)); }

Poly Poly::linear(Rat c) {
  Poly p;
  p.coeffs_ = {std::move(c), Rat(1)};
  return p;
}

Poly Poly::monomial(int d, Rat c) {
  Poly p;
  if (c == 0) return p;
  p.coeffs_.assign(d + 1, Rat(0));
  p.coeffs_[d] = std::move(c);
  return p;
}

const Rat& Poly::coeff(int d) const {
  static const Rat zero(0);
  if (d < 0 || d >= static_cast<int>(coeffs_.size())) return zero;
  return coeffs_[d];
}

Rat Poly::leading() const {
  if (is_zero()) return Rat(0);
  return coeffs_.back();
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly& Poly::operator+=(const Poly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rat> out(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * o.coeffs_[j];
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rat& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::shifted(const Rat& c) const {
  // Horner in (z + c).
  Poly acc;
  Poly zc = Poly::linear(c);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= zc;
    acc += Poly(*it);
  }
  return acc;
}

}  // namespace cyclo
