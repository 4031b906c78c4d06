#include "curvforge/polynomial.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include "curvforge/error.hpp"

namespace curvforge {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::linear_factor(const Rational& root) { return Polynomial({-root, 1}); }

Rational Polynomial::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

Rational Polynomial::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  return (1 / leading()) * *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  const auto& ca = a.coefficients();
  const auto& cb = b.coefficients();
  std::vector<Rational> c(std::max(ca.size(), cb.size()));
  for (std::size_t i = 0; i < ca.size(); ++i) c[i] += ca[i];
  for (std::size_t i = 0; i < cb.size(); ++i) c[i] += cb[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + Rational(-1) * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& ca = a.coefficients();
  const auto& cb = b.coefficients();
  std::vector<Rational> c(ca.size() + cb.size() - 1);
  for (std::size_t i = 0; i < ca.size(); ++i) {
    for (std::size_t j = 0; j < cb.size(); ++j) c[i + j] += ca[i] * cb[j];
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
  std::vector<Rational> c = p.coefficients();
  for (auto& x : c) x *= s;
  return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw InputError("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational lead_inv = 1 / b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    const Rational q = rem[static_cast<std::size_t>(k + db)] * lead_inv;
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(k + j)] -= q * b.coefficient(static_cast<std::size_t>(j));
    }
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() <= 0) return p.monic();
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

int count_real_roots(const Polynomial& p) {
  if (p.degree() <= 0) return 0;
  std::vector<Polynomial> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    Polynomial r = divmod(chain[chain.size() - 2], chain.back()).second;
    chain.push_back(Rational(-1) * r);
  }
  chain.pop_back();
  auto variations = [&](bool at_plus_infinity) {
    int changes = 0;
    int last = 0;
    for (const auto& q : chain) {
      int s = sgn(q.leading());
      if (!at_plus_infinity && q.degree() % 2 == 1) s = -s;
      if (s == 0) continue;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  };
  return variations(false) - variations(true);
}

namespace {

// Integer coefficients with content 1, same roots as p.
std::vector<Integer> primitive_integer_coeffs(const Polynomial& p) {
  Integer den_lcm = 1;
  for (const auto& c : p.coefficients()) den_lcm = lcm(den_lcm, Integer(c.get_den()));
  std::vector<Integer> out;
  Integer content = 0;
  for (const auto& c : p.coefficients()) {
    out.push_back(Integer(c.get_num()) * (den_lcm / Integer(c.get_den())));
    content = gcd(content, out.back());
  }
  if (content != 0) {
    for (auto& c : out) c /= content;
  }
  return out;
}

std::vector<Integer> small_divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> out;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

const Integer kDivisorEnumerationLimit = Integer(1000000);

// Rational roots of a squarefree polynomial with nonzero constant term.
std::vector<Rational> simple_rational_roots(const Polynomial& s) {
  std::vector<Rational> found;
  auto try_candidate = [&](const Rational& r) {
    if (std::find(found.begin(), found.end(), r) != found.end()) return;
    if (s(r) == 0) found.push_back(r);
  };
  const auto ints = primitive_integer_coeffs(s);
  const Integer& a0 = ints.front();
  const Integer& an = ints.back();

  if (abs(a0) <= kDivisorEnumerationLimit && abs(an) <= kDivisorEnumerationLimit) {
    for (const auto& p : small_divisors(a0)) {
      for (const auto& q : small_divisors(an)) {
        Rational r(p, q);
        r.canonicalize();
        try_candidate(r);
        try_candidate(-r);
      }
    }
    return found;
  }

  // Large coefficients: locate roots numerically, then recover rational
  // candidates as continued-fraction convergents and confirm them exactly.
  const int n = s.degree();
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  const double lead = s.leading().get_d();
  for (int i = 0; i < n; ++i) {
    companion(i, n - 1) = -s.coefficient(static_cast<std::size_t>(i)).get_d() / lead;
    if (i > 0) companion(i, i - 1) = 1.0;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  for (int i = 0; i < n; ++i) {
    const std::complex<double> z = solver.eigenvalues()[i];
    if (std::abs(z.imag()) > 1e-6 * (1.0 + std::abs(z))) continue;
    long double x = z.real();
    for (int it = 0; it < 8; ++it) {
      long double f = 0, df = 0;
      for (int k = n; k >= 0; --k) {
        df = df * x + f;
        f = f * x + static_cast<long double>(s.coefficient(static_cast<std::size_t>(k)).get_d());
      }
      if (df == 0) break;
      x -= f / df;
    }
    // Continued-fraction convergents h/k of x, denominators bounded by |an|.
    long double rest = x;
    Integer h_prev = 1, h_prev2 = 0, k_prev = 0, k_prev2 = 1;
    for (int step = 0; step < 64; ++step) {
      const long double a_ld = std::floor(rest);
      if (std::fabs(a_ld) > 1e18L) break;
      const Integer a(static_cast<long>(a_ld));
      const Integer h = a * h_prev + h_prev2;
      const Integer k = a * k_prev + k_prev2;
      if (abs(k) > abs(an)) break;
      Rational r(h, k);
      r.canonicalize();
      try_candidate(r);
      h_prev2 = h_prev;
      h_prev = h;
      k_prev2 = k_prev;
      k_prev = k;
      const long double frac = rest - a_ld;
      if (frac < 1e-18L) break;
      rest = 1.0L / frac;
    }
  }
  return found;
}

}  // namespace

RationalFactorization factor_rational_roots(const Polynomial& p) {
  RationalFactorization out;
  if (p.degree() <= 0) {
    out.rest = p;
    return out;
  }
  Polynomial rest = p;
  std::vector<Rational> candidates;
  int zero_mult = 0;
  while (rest.coefficient(0) == 0 && !rest.is_zero()) {
    rest = divmod(rest, Polynomial({0, 1})).first;
    ++zero_mult;
  }
  if (zero_mult > 0) out.roots.push_back({Rational(0), zero_mult});
  if (rest.degree() > 0) {
    for (const auto& r : simple_rational_roots(squarefree_part(rest))) {
      int mult = 0;
      const Polynomial factor = Polynomial::linear_factor(r);
      while (rest.degree() > 0) {
        auto [q, rem] = divmod(rest, factor);
        if (!rem.is_zero()) break;
        rest = std::move(q);
        ++mult;
      }
      if (mult > 0) out.roots.push_back({r, mult});
    }
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const RationalRoot& a, const RationalRoot& b) { return a.value < b.value; });
  out.rest = std::move(rest);
  return out;
}

Polynomial char_poly(const Matrix& a) {
  if (!a.is_square()) throw InputError("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Matrix m(n, n);
  const Matrix id = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + c[n - k + 1] * id;
    c[n - k] = -(a * m).trace() / static_cast<long>(k);
  }
  return Polynomial(std::move(c));
}

Polynomial minimal_poly(const Matrix& a) {
  if (!a.is_square()) throw InputError("minimal polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<Vector> powers;
  Matrix power = Matrix::identity(n);
  for (std::size_t d = 0; d <= n; ++d) {
    std::vector<Rational> flat;
    flat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) flat.push_back(power(i, j));
    }
    powers.emplace_back(std::move(flat));
    const auto kernel = nullspace(Matrix::from_columns(powers));
    if (!kernel.empty()) {
      // Earlier powers are independent, so the kernel is one-dimensional and
      // its last coordinate is the free variable (= 1).
      return Polynomial(std::vector<Rational>(kernel.front().begin(), kernel.front().end()))
          .monic();
    }
    power = a * power;
  }
  throw InternalError("minimal polynomial exceeded matrix size");
}

Matrix evaluate(const Polynomial& p, const Matrix& a) {
  const std::size_t n = a.rows();
  Matrix acc(n, n);
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * a + *it * Matrix::identity(n);
  }
  return acc;
}

std::string to_string(const Polynomial& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    Rational c = p.coefficient(static_cast<std::size_t>(k));
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    c = abs(c);
    if (c != 1 || k == 0) {
      os << to_string(c);
      if (k > 0) os << "*";
    }
    if (k > 0) os << var;
    if (k > 1) os << "^" << k;
    first = false;
  }
  return os.str();
}

}  // namespace curvforge
