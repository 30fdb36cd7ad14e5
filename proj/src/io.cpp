#include "superchab/io.hpp"

#include <cctype>
#include <map>

#include "superchab/errors.hpp"

namespace superchab {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  CurveInput parse() {
    std::optional<long> m;
    std::optional<std::vector<Rational>> coeffs;
    std::optional<std::vector<std::pair<Rational, long>>> roots;
    std::pair<int, int> roots_at{1, 1};
    std::optional<Rational> c;
    CurveInput in;
    skip_space();
    int positional = 0;
    while (!at_end()) {
      const auto [line, col] = position();
      if (!std::isalpha(static_cast<unsigned char>(peek()))) {
        // Positional forms: "m; [a0,...]" and "m; c; [(theta,n),...]".
        if (positional++ == 0) {
          m = integer_value();
        } else if (peek() == '[' && next_nonspace(pos_ + 1) == '(') {
          roots_at = position();
          roots = tuples();
        } else if (peek() == '[') {
          coeffs = list();
        } else {
          c = rational();
        }
        skip_space();
        if (at_end()) break;
        expect(';');
        skip_space();
        continue;
      }
      const std::string key = identifier();
      skip_space();
      expect('=');
      skip_space();
      if (key == "m") {
        m = integer_value();
      } else if (key == "f") {
        if (peek() == '[') {
          coeffs = list();
        } else {
          roots_at = position();
          roots = product();
        }
      } else if (key == "c") {
        c = rational();
      } else if (key == "rank") {
        in.rank = integer_value();
      } else if (key == "prime") {
        in.prime = integer_value();
      } else if (key == "precision") {
        in.precision = integer_value();
      } else if (key == "height") {
        in.height = integer_value();
      } else {
        throw ParseError("unknown key '" + key + "'", line, col);
      }
      skip_space();
      if (at_end()) break;
      expect(';');
      skip_space();
    }
    if (!m) fail("missing m=<int>");
    if (!coeffs && !roots) fail("missing f=[...] or f=prod[...]");
    if (*m < 2) fail("m must be at least 2");
    if (c && !roots) fail("c= only applies to f=prod[...]");
    if (in.rank && *in.rank < 0) fail("rank must be nonnegative");
    if (in.precision < 1) fail("precision must be positive");
    if (in.height < 0) fail("height must be nonnegative");
    in.m = *m;
    if (coeffs) {
      in.f = Polynomial(*coeffs);
    } else {
      const Rational lead = c.value_or(Rational(1));
      if (lead == 0) fail("c must be nonzero");
      Polynomial f({lead});
      for (const auto& [theta, n] : *roots) {
        if (n < 1) throw ParseError("multiplicity must be positive", roots_at.first, roots_at.second);
        if (n >= in.m) {
          throw HypothesisError({"multiplicity " + std::to_string(n) + " not < m = " + std::to_string(in.m)});
        }
        f = f * Polynomial::linear_root(theta).pow(n);
      }
      in.f = f;
    }
    if (in.f.degree() < 1) fail("f must be nonconstant");
    return in;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  std::pair<int, int> position() const {
    int line = 1, col = 1;
    for (size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {line, col};
  }

  [[noreturn]] void fail(const std::string& message) const {
    const auto [line, col] = position();
    throw ParseError(message, line, col);
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  void expect(char ch) {
    if (peek() != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  std::string identifier() {
    const size_t start = pos_;
    while (!at_end() && (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    if (start == pos_) fail("expected a key");
    return text_.substr(start, pos_ - start);
  }

  std::string digits() {
    const size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return text_.substr(start, pos_ - start);
  }

  Integer signed_integer() {
    std::string s;
    if (peek() == '-' || peek() == '+') {
      if (peek() == '-') s = "-";
      ++pos_;
    }
    return Integer(s + digits());
  }

  long integer_value() {
    const auto [line, col] = position();
    const Integer v = signed_integer();
    if (!v.fits_slong_p()) throw ParseError("integer out of range", line, col);
    return v.get_si();
  }

  Rational rational() {
    const Integer num = signed_integer();
    if (peek() != '/') return Rational(num);
    ++pos_;
    const auto [line, col] = position();
    const Integer den(digits());
    if (den == 0) throw ParseError("zero denominator", line, col);
    return frac(num, den);
  }

  std::vector<Rational> list() {
    expect('[');
    std::vector<Rational> out;
    skip_space();
    if (peek() == ']') fail("empty coefficient list");
    while (true) {
      skip_space();
      out.push_back(rational());
      skip_space();
      if (peek() == ']') break;
      expect(',');
    }
    ++pos_;
    return out;
  }

  char next_nonspace(size_t i) const {
    while (i < text_.size() && std::isspace(static_cast<unsigned char>(text_[i]))) ++i;
    return i < text_.size() ? text_[i] : '\0';
  }

  std::vector<std::pair<Rational, long>> product() {
    if (text_.compare(pos_, 4, "prod") != 0) fail("expected '[' or 'prod['");
    pos_ += 4;
    skip_space();
    return tuples();
  }

  std::vector<std::pair<Rational, long>> tuples() {
    expect('[');
    std::vector<std::pair<Rational, long>> out;
    skip_space();
    if (peek() == ']') fail("empty root list");
    while (true) {
      skip_space();
      expect('(');
      skip_space();
      const Rational theta = rational();
      skip_space();
      expect(',');
      skip_space();
      const long n = integer_value();
      skip_space();
      expect(')');
      out.emplace_back(theta, n);
      skip_space();
      if (peek() == ']') break;
      expect(',');
    }
    ++pos_;
    return out;
  }

  const std::string& text_;
  size_t pos_ = 0;
};

}  // namespace

CurveInput parse_curve_input(const std::string& text) { return Parser(text).parse(); }

std::string fraction(const Rational& q) { return to_fraction_string(q); }

Json polynomial_json(const Polynomial& f) {
  Json out = Json::array();
  for (const auto& c : f.coefficients()) out.push_back(fraction(c));
  return out;
}

Json curve_json(const SuperellipticCurve& curve) {
  Json out;
  out["m"] = curve.m();
  out["f"] = polynomial_json(curve.f());
  out["degree"] = curve.degree();
  return out;
}

Json bound_json(const BoundReport& r) {
  Json out;
  out["g"] = r.g;
  out["rank"] = Json{{"value", r.r}, {"source", "user-asserted"}};
  out["m"] = r.m;
  out["degree"] = r.degree;
  out["normalized_degree"] = r.normalized_degree;
  out["prime"] = r.p;
  out["e"] = r.e;
  out["mu"] = fraction(r.mu);
  out["rank_ok"] = r.rank_ok;
  out["disc_bound"] = r.disc_bound;
  out["annulus_bound"] = r.annulus_bound;
  out["sharp_total"] = r.sharp_total;
  out["sharp_relation"] = "<=";
  out["theorem3_total"] = r.theorem3_total;
  out["theorem3_relation"] = "<";
  out["prop13_warning"] = r.prop13_warning;
  return out;
}

Json point_json(const RationalPoint& pt) {
  if (pt.at_infinity) return Json{{"at_infinity", true}};
  return Json{{"x", fraction(pt.x)}, {"y", fraction(pt.y)}};
}

Json search_json(const SearchReport& report) {
  Json out;
  out["height"] = report.height;
  Json pts = Json::array();
  for (const auto& pt : report.points) pts.push_back(point_json(pt));
  out["points"] = pts;
  out["count"] = report.count();
  out["infinity_count"] = report.infinity_count;
  if (report.bound) {
    out["bound"] = Json{{"theorem3_total", report.bound->theorem3_total},
                        {"rank", Json{{"value", report.bound->r}, {"source", "user-asserted"}}},
                        {"total_points", report.count() + report.infinity_count},
                        {"satisfied", report.bound->satisfied}};
  }
  return out;
}

Json padic_json(const PadicNumber& x) {
  Json out;
  if (x.is_zero()) {
    out["zero"] = true;
    out["absolute_precision"] = x.is_exact_zero() ? Json(nullptr) : Json(x.absolute_precision());
    return out;
  }
  out["valuation"] = x.valuation();
  out["unit"] = x.unit().get_str();
  out["relative_precision"] = x.relative_precision();
  return out;
}

namespace {

Json optional_rational(const std::optional<Rational>& q) { return q ? Json(fraction(*q)) : Json(nullptr); }

}  // namespace

Json annulus_json(const ResidueAnnulus& a, const AnnulusCharts& charts) {
  Json out;
  out["center"] = fraction(a.center.lift());
  out["interval"] = Json::array({a.v_lo, a.v_hi});
  out["theta0"] = a.theta0;
  out["n0"] = a.n0;
  out["d"] = a.d;
  out["case"] = to_string(a.kind);
  out["merged"] = a.merged;
  out["verdict"] = to_string(charts.verdict);
  if (!charts.detail.empty()) out["detail"] = charts.detail;
  if (charts.verdict == ChartVerdict::charted) {
    out["unit"] = charts.unit;
    out["gamma"] = padic_json(*charts.gamma);
    out["inner_exponent"] = charts.inner_exponent;
    out["z_domain"] = Json::array({optional_rational(charts.domain.lower), optional_rational(charts.domain.upper)});
    out["sheets"] = static_cast<long>(charts.charts.size());
    out["tau_rotation"] = charts.tau_rotation;
    out["attained_precision"] = charts.attained;
  }
  return out;
}

}  // namespace superchab
