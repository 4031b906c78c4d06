#pragma once

#include <string>
#include <utility>
#include <vector>

#include "curvforge/linalg.hpp"
#include "curvforge/rational.hpp"

namespace curvforge {

/// Univariate polynomial over the rationals. Coefficients are stored lowest
/// degree first and kept trimmed, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  /// λ − root
  static Polynomial linear_factor(const Rational& root);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t power) const;
  Rational leading() const;

  Rational operator()(const Rational& x) const;
  Polynomial derivative() const;
  Polynomial monic() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Rational& s, const Polynomial& p);

/// Euclidean division: a = q·b + r with deg r < deg b.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor (zero if both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// p / gcd(p, p'), monic. Its degree counts the distinct complex roots of p.
Polynomial squarefree_part(const Polynomial& p);

/// Number of distinct real roots, via a Sturm sequence (exact).
int count_real_roots(const Polynomial& p);

/// A rational root together with its multiplicity.
struct RationalRoot {
  Rational value;
  int multiplicity = 0;
};

/// Factors p as Π(λ − r_i)^{m_i} · rest over the rationals. Roots come out in
/// ascending order; `rest` carries no rational roots. Candidates are located
/// numerically and every accepted root is confirmed by exact evaluation.
struct RationalFactorization {
  std::vector<RationalRoot> roots;
  Polynomial rest;
  bool fully_split() const { return rest.degree() <= 0; }
};
RationalFactorization factor_rational_roots(const Polynomial& p);

/// det(λ·id − A) by exact Faddeev-LeVerrier.
Polynomial char_poly(const Matrix& a);

/// Monic minimal polynomial of A, found as the first linear dependency among
/// I, A, A², …
Polynomial minimal_poly(const Matrix& a);

/// Evaluates p at a square matrix by Horner's rule.
Matrix evaluate(const Polynomial& p, const Matrix& a);

/// e.g. "x^3 - 3*x^2 + 3*x - 1"
std::string to_string(const Polynomial& p, const std::string& var = "x");

}  // namespace curvforge
