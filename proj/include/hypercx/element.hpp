#pragma once

// Exact element arithmetic over a structure table: bilinear product,
// conjugation, norm (computed as YY*, not assumed), and the conjugate/norm
// inverse with a verified two-sidedness flag.

#include <stdexcept>
#include <utility>
#include <vector>

#include "hypercx/algebra.hpp"
#include "hypercx/rational.hpp"

namespace hypercx {

class Element {
 public:
  Element(int level, std::vector<Rational> coeffs)
      : level_(level), coeffs_(std::move(coeffs)) {
    if (level < 0) throw std::domain_error("algebra level must be >= 0");
    if (coeffs_.size() != static_cast<size_t>(1) << level)
      throw std::invalid_argument("coefficient vector length must equal 2^level");
  }

  static Element zero(int level) {
    return Element(level, std::vector<Rational>(static_cast<size_t>(1) << level));
  }

  static Element basis(int level, int index, Rational coeff = Rational(1)) {
    Element e = zero(level);
    if (index < 0 || index >= e.dim())
      throw std::domain_error("basis index out of range");
    e.coeffs_[static_cast<size_t>(index)] = std::move(coeff);
    return e;
  }

  int level() const noexcept { return level_; }
  int dim() const noexcept { return static_cast<int>(coeffs_.size()); }
  const Rational& operator[](int i) const { return coeffs_.at(static_cast<size_t>(i)); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const {
    for (const Rational& c : coeffs_)
      if (!c.is_zero()) return false;
    return true;
  }

  friend Element operator+(const Element& x, const Element& y) {
    Element r = x.check_same_level(y);
    for (size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += y.coeffs_[i];
    return r;
  }
  friend Element operator-(const Element& x, const Element& y) {
    Element r = x.check_same_level(y);
    for (size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] -= y.coeffs_[i];
    return r;
  }
  friend Element operator*(const Rational& s, const Element& x) {
    Element r = x;
    for (Rational& c : r.coeffs_) c *= s;
    return r;
  }
  friend Element operator-(const Element& x) { return Rational(-1) * x; }

  friend bool operator==(const Element&, const Element&) = default;

 private:
  Element check_same_level(const Element& other) const {
    if (level_ != other.level_)
      throw std::invalid_argument("element levels differ");
    return *this;
  }

  int level_;
  std::vector<Rational> coeffs_;
};

/// Bilinear extension of the basis products. Skips zero coefficients, so
/// sparse operands cost only their support.
inline Element multiply(const StructureTable& table, const Element& x,
                        const Element& y) {
  if (x.level() != table.level() || y.level() != table.level())
    throw std::invalid_argument("element level does not match table level");
  const int dim = table.dim();
  std::vector<Rational> out(static_cast<size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[j].is_zero()) continue;
      const SignedUnit p = table.product(i, j);
      if (p.sign > 0)
        out[static_cast<size_t>(p.index)] += x[i] * y[j];
      else
        out[static_cast<size_t>(p.index)] -= x[i] * y[j];
    }
  }
  return Element(table.level(), std::move(out));
}

/// y0 e0 - y_i e_i.
inline Element conjugate(const Element& x) {
  std::vector<Rational> c(x.coeffs());
  for (size_t i = 1; i < c.size(); ++i) c[i] = -c[i];
  return Element(x.level(), std::move(c));
}

/// The scalar YY*. The product is evaluated, its imaginary part checked to
/// vanish, and the scalar component returned; no shortcut through the
/// sum-of-squares identity (tests establish that equality separately).
inline Rational norm(const StructureTable& table, const Element& x) {
  const Element p = multiply(table, x, conjugate(x));
  for (int i = 1; i < p.dim(); ++i)
    if (!p[i].is_zero())
      throw std::logic_error("YY* produced a non-scalar result");
  return p[0];
}

struct InverseResult {
  Element value;
  // Y * value == e0 and value * Y == e0, verified by multiplication.
  bool two_sided = false;
};

/// Y* / ||Y||, with the two-sided identity checked on the actual element.
inline InverseResult inverse(const StructureTable& table, const Element& x) {
  if (x.is_zero()) throw std::domain_error("zero element has no inverse");
  const Rational n = norm(table, x);
  const Element inv = Rational(1 / n) * conjugate(x);
  const Element one = Element::basis(table.level(), 0);
  const bool two_sided =
      multiply(table, x, inv) == one && multiply(table, inv, x) == one;
  return {inv, two_sided};
}

}  // namespace hypercx
