#include "causal/rational.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace causal {

namespace {

Integer parse_integer(std::string_view s, std::string_view whole) {
  if (s.empty()) throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  std::size_t i = 0;
  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  Integer value = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    value = value * 10 + (s[i] - '0');
  }
  return negative ? Integer(-value) : value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const Integer p = parse_integer(trim(s.substr(0, slash)), text);
    const Integer q = parse_integer(trim(s.substr(slash + 1)), text);
    if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return q < 0 ? Rational(Integer(-p), Integer(-q)) : Rational(p, q);
  }
  if (const auto dot_pos = s.find('.'); dot_pos != std::string_view::npos) {
    std::string digits(s.substr(0, dot_pos));
    const std::string_view frac = s.substr(dot_pos + 1);
    digits += frac;
    if (digits == "-" || digits == "+" || digits.empty())
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    Integer scale = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
    return Rational(parse_integer(digits, text), scale);
  }
  return Rational(parse_integer(s, text));
}

std::string format_rational(const Rational& r) {
  const Integer num = numerator(r);
  const Integer den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

int sign(const Rational& r) { return r.sign(); }

RationalVector RationalVector::unit(std::size_t dim, std::size_t i) {
  RationalVector v(dim);
  v[i] = 1;
  return v;
}

bool RationalVector::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

std::vector<double> RationalVector::to_double() const {
  std::vector<double> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) out.push_back(causal::to_double(c));
  return out;
}

RationalVector& RationalVector::operator+=(const RationalVector& o) {
  require_same_dim(dim(), o.dim(), "vector addition");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

RationalVector& RationalVector::operator-=(const RationalVector& o) {
  require_same_dim(dim(), o.dim(), "vector subtraction");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

RationalVector& RationalVector::operator*=(const Rational& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

RationalVector operator/(RationalVector a, const Rational& s) {
  if (s == 0) throw std::domain_error("division of a vector by zero");
  for (auto& c : a.coords_) c /= s;
  return a;
}

RationalVector operator-(RationalVector a) {
  for (auto& c : a.coords_) c = -c;
  return a;
}

bool lex_less(const RationalVector& a, const RationalVector& b) {
  require_same_dim(a.dim(), b.dim(), "lexicographic comparison");
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return false;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  require_same_dim(a.dim(), b.dim(), "inner product");
  Rational s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

double dot(std::span<const double> a, const RationalVector& b) {
  require_same_dim(a.size(), b.dim(), "inner product");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * to_double(b[i]);
  return s;
}

Rational norm2(const RationalVector& a) { return dot(a, a); }

RationalVector primitive(const RationalVector& v) {
  if (v.is_zero()) return v;
  Integer l = 1;
  for (const auto& c : v) l = boost::multiprecision::lcm(l, denominator(c));
  Integer g = 0;
  std::vector<Integer> ints;
  ints.reserve(v.dim());
  for (const auto& c : v) {
    Integer n = numerator(c) * (l / denominator(c));
    ints.push_back(n);
    g = boost::multiprecision::gcd(g, n);
  }
  if (g < 0) g = -g;
  RationalVector out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = Rational(ints[i] / g);
  return out;
}

namespace {

// Row-reduces in place; returns pivot columns.
std::vector<std::size_t> row_reduce(std::vector<RationalVector>& m, std::size_t dim) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < dim && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[row], m[p]);
    const Rational inv = 1 / m[row][col];
    m[row] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      m[r] -= m[row] * f;
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

}  // namespace

std::size_t rank_of(std::span<const RationalVector> rows, std::size_t dim) {
  std::vector<RationalVector> m(rows.begin(), rows.end());
  for (const auto& r : m) require_same_dim(r.dim(), dim, "rank computation");
  return row_reduce(m, dim).size();
}

std::vector<RationalVector> null_space(std::span<const RationalVector> rows, std::size_t dim) {
  std::vector<RationalVector> m(rows.begin(), rows.end());
  for (const auto& r : m) require_same_dim(r.dim(), dim, "null space");
  const auto pivots = row_reduce(m, dim);
  std::vector<bool> is_pivot(dim, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < dim; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(dim);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

RationalVector solve(std::span<const RationalVector> rows, const RationalVector& rhs) {
  const std::size_t n = rows.size();
  require_same_dim(n, rhs.dim(), "linear solve");
  std::vector<RationalVector> aug;
  aug.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    require_same_dim(rows[i].dim(), n, "linear solve");
    RationalVector r(n + 1);
    for (std::size_t j = 0; j < n; ++j) r[j] = rows[i][j];
    r[n] = rhs[i];
    aug.push_back(std::move(r));
  }
  const auto pivots = row_reduce(aug, n);
  if (pivots.size() != n) throw std::domain_error("singular linear system");
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[pivots[i]] = aug[i][n];
  return x;
}

std::string format_vector(const RationalVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) s += ", ";
    s += format_rational(v[i]);
  }
  return s + ")";
}

std::vector<std::string> format_coords(const RationalVector& v) {
  std::vector<std::string> out;
  out.reserve(v.dim());
  for (const auto& c : v) out.push_back(format_rational(c));
  return out;
}

RationalVector from_doubles(std::span<const double> values) {
  RationalVector v(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double x = values[i];
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite coordinate");
    int exp = 0;
    const double mant = std::frexp(x, &exp);
    // 53-bit mantissa scaled to an integer
    const auto scaled = static_cast<long long>(std::ldexp(mant, 53));
    Rational r(scaled);
    const int shift = exp - 53;
    Integer pow2 = 1;
    pow2 <<= (shift >= 0 ? shift : -shift);
    v[i] = shift >= 0 ? r * Rational(pow2) : r / Rational(pow2);
  }
  return v;
}

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    std::ostringstream os;
    os << "dimension mismatch in " << what << ": " << a << " vs " << b;
    throw std::invalid_argument(os.str());
  }
}

}  // namespace causal
