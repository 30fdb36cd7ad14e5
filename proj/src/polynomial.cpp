#include "superchab/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "superchab/errors.hpp"

namespace superchab {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::monomial(const Rational& c, long degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear_root(const Rational& theta) { return Polynomial({Rational(-theta), Rational(1)}); }

Rational Polynomial::coefficient(long i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[i];
}

Rational Polynomial::leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

PadicNumber Polynomial::evaluate(const PadicNumber& x) const {
  PadicNumber acc(x.context());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + PadicNumber::from_rational(*it, x.context());
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d;
  for (size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<long>(i));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(1 / leading());
}

Polynomial Polynomial::shifted(const Rational& t) const {
  Polynomial out;
  const Polynomial x_plus_t({t, Rational(1)});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) out = out * x_plus_t + Polynomial({*it});
  return out;
}

Polynomial Polynomial::reversed(long n) const {
  if (n < degree()) throw DomainError("reversal degree below polynomial degree");
  std::vector<Rational> v(n + 1, Rational(0));
  for (long i = 0; i <= degree(); ++i) v[n - i] = coeffs_[i];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::pow(long k) const {
  Polynomial out({Rational(1)});
  for (long i = 0; i < k; ++i) out = out * *this;
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + b.scaled(-1); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(v));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  std::vector<Rational> v = coeffs_;
  for (auto& x : v) x *= c;
  return Polynomial(std::move(v));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
  if (d.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = coeffs_;
  const long dd = d.degree();
  if (degree() < dd) return {Polynomial(), *this};
  std::vector<Rational> quot(degree() - dd + 1, Rational(0));
  for (long i = degree(); i >= dd; --i) {
    const Rational q = rem[i] / d.leading();
    quot[i - dd] = q;
    if (q == 0) continue;
    for (long j = 0; j <= dd; ++j) rem[i - dd + j] -= q * d.coeffs_[j];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::vector<Integer> Polynomial::primitive_integer() const {
  Integer den = 1;
  for (const auto& c : coeffs_) den = lcm(den, c.get_den());
  std::vector<Integer> out;
  Integer content = 0;
  for (const auto& c : coeffs_) {
    Integer n = c.get_num() * (den / c.get_den());
    content = gcd(content, n);
    out.push_back(n);
  }
  if (content == 0) return out;
  if (out.back() < 0) content = -content;
  for (auto& n : out) n /= content;
  return out;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    os << "(" << to_fraction_string(coeffs_[i]) << ")";
    if (i > 0) os << "*x^" << i;
    first = false;
  }
  return os.str();
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = x.divmod(y).second;
    x = y;
    y = r;
  }
  return x.monic();
}

std::vector<SquareFreePart> square_free_decomposition(const Polynomial& f) {
  if (f.degree() < 1) return {};
  const Polynomial g = f.monic();
  const Polynomial one({Rational(1)});
  Polynomial a = gcd(g, g.derivative());
  Polynomial b = g.divmod(a).first;
  Polynomial c = g.derivative().divmod(a).first;
  Polynomial d = c - b.derivative();
  std::vector<SquareFreePart> out;
  for (long i = 1; b.degree() > 0; ++i) {
    a = gcd(b, d);
    if (a.degree() > 0) out.push_back({a, i});
    b = b.divmod(a).first;
    c = d.divmod(a).first;
    d = c - b.derivative();
  }
  return out;
}

namespace {

std::vector<Integer> divisors(Integer n) {
  n = abs(n);
  std::vector<std::pair<Integer, int>> factors;
  for (Integer q = 2; q * q <= n && q < 1000000; ++q) {
    int e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    if (e) factors.emplace_back(q, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<Integer> out{1};
  for (const auto& [q, e] : factors) {
    const size_t base = out.size();
    Integer qk = 1;
    for (int k = 1; k <= e; ++k) {
      qk *= q;
      for (size_t i = 0; i < base; ++i) out.push_back(out[i] * qk);
    }
  }
  return out;
}

Integer eval_mod(const std::vector<Integer>& g, const Integer& x, const Integer& mod) {
  Integer acc = 0;
  for (auto it = g.rbegin(); it != g.rend(); ++it) acc = mod_positive(acc * x + *it, mod);
  return acc;
}

std::vector<Integer> derivative_of(const std::vector<Integer>& g) {
  std::vector<Integer> d;
  for (size_t i = 1; i < g.size(); ++i) d.push_back(g[i] * static_cast<long>(i));
  return d;
}

// Roots in Z_p modulo p^prec; `complete` drops to false when the branching depth runs out.
void integral_roots(const std::vector<Integer>& g, long p, long prec, int depth, std::vector<Integer>& out,
                    bool& complete) {
  const std::vector<Integer> dg = derivative_of(g);
  const Integer P = p;
  for (long r0 = 0; r0 < p; ++r0) {
    if (eval_mod(g, r0, P) != 0) continue;
    if (eval_mod(dg, r0, P) != 0) {
      Integer r = r0;
      for (long k = 1; k < prec;) {
        k = std::min(2 * k, prec);
        const Integer mod = pow_p(p, k);
        const Integer inv = mod_inverse(eval_mod(dg, r, mod), mod);
        r = mod_positive(r - eval_mod(g, r, mod) * inv, mod);
      }
      out.push_back(mod_positive(r, pow_p(p, prec)));
      continue;
    }
    if (depth <= 0 || prec <= 1) {
      complete = false;
      continue;
    }
    // g(r0 + p x) with its p-content removed.
    std::vector<Integer> h(g.size(), Integer(0));
    std::vector<Integer> power{1};  // (r0 + p x)^i
    for (size_t i = 0; i < g.size(); ++i) {
      for (size_t j = 0; j < power.size(); ++j) h[j] += g[i] * power[j];
      std::vector<Integer> next(power.size() + 1, Integer(0));
      for (size_t j = 0; j < power.size(); ++j) {
        next[j] += power[j] * r0;
        next[j + 1] += power[j] * p;
      }
      power = std::move(next);
    }
    long content = kInfinity;
    for (const auto& c : h) content = std::min(content, valuation(c, p));
    if (content >= kInfinity) {
      complete = false;
      continue;
    }
    const Integer scale = pow_p(p, content);
    for (auto& c : h) c /= scale;
    std::vector<Integer> sub;
    integral_roots(h, p, prec - 1, depth - 1, sub, complete);
    const Integer mod = pow_p(p, prec);
    for (const auto& s : sub) out.push_back(mod_positive(r0 + p * s, mod));
  }
}

}  // namespace

std::vector<Rational> rational_roots(const Polynomial& f) {
  if (f.degree() < 1) return {};
  std::vector<Integer> g = f.primitive_integer();
  std::set<Rational> roots;
  size_t lead_zero = 0;
  while (lead_zero < g.size() && g[lead_zero] == 0) ++lead_zero;
  if (lead_zero > 0) roots.insert(Rational(0));
  g.erase(g.begin(), g.begin() + lead_zero);
  if (g.size() > 1) {
    const Polynomial h = [&] {
      std::vector<Rational> v;
      for (const auto& c : g) v.emplace_back(c);
      return Polynomial(std::move(v));
    }();
    for (const auto& num : divisors(g.front())) {
      for (const auto& den : divisors(g.back())) {
        for (int sign : {1, -1}) {
          Rational q(num * sign, den);
          q.canonicalize();
          if (h.evaluate(q) == 0) roots.insert(q);
        }
      }
    }
  }
  return {roots.begin(), roots.end()};
}

PadicRoots padic_roots(const Polynomial& f, const PadicContext& ctx) {
  PadicRoots out;
  if (f.degree() < 1) {
    out.complete = true;
    return out;
  }
  const long p = ctx.prime();
  const long N = ctx.precision();
  const int depth = 40;
  const long prec = N + depth;
  bool complete = true;

  const std::vector<Integer> g = f.primitive_integer();
  std::vector<Integer> found;
  integral_roots(g, p, prec, depth, found, complete);
  for (const auto& r : found) {
    out.roots.push_back(PadicNumber::from_integer(r, ctx).with_absolute_precision(N));
  }
  std::vector<Integer> rev(g.rbegin(), g.rend());
  std::vector<Integer> found_rev;
  integral_roots(rev, p, prec, depth, found_rev, complete);
  for (const auto& r : found_rev) {
    if (r % p != 0) continue;  // units were found above
    PadicNumber t = PadicNumber::from_integer(r, ctx).with_absolute_precision(prec);
    out.roots.push_back(t.inverse());
  }
  out.complete = complete && static_cast<long>(out.roots.size()) == f.degree();
  return out;
}

}  // namespace superchab
