#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace causal {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Parses "p/q", "p", or a plain decimal such as "-0.125" into an exact rational.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q" with q > 1, or "p" for integers.
std::string format_rational(const Rational& r);

double to_double(const Rational& r);
int sign(const Rational& r);

/// Exact coordinate vector in a fixed orthonormal basis e_1..e_n.
class RationalVector {
 public:
  RationalVector() = default;
  explicit RationalVector(std::size_t dim) : coords_(dim) {}
  RationalVector(std::initializer_list<Rational> coords) : coords_(coords) {}
  explicit RationalVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}

  static RationalVector unit(std::size_t dim, std::size_t i);

  std::size_t dim() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  std::vector<double> to_double() const;

  RationalVector& operator+=(const RationalVector& o);
  RationalVector& operator-=(const RationalVector& o);
  RationalVector& operator*=(const Rational& s);

  friend RationalVector operator+(RationalVector a, const RationalVector& b) { return a += b; }
  friend RationalVector operator-(RationalVector a, const RationalVector& b) { return a -= b; }
  friend RationalVector operator*(RationalVector a, const Rational& s) { return a *= s; }
  friend RationalVector operator*(const Rational& s, RationalVector a) { return a *= s; }
  friend RationalVector operator/(RationalVector a, const Rational& s);
  friend RationalVector operator-(RationalVector a);
  friend bool operator==(const RationalVector&, const RationalVector&) = default;

 private:
  std::vector<Rational> coords_;
};

/// Lexicographic order on coordinates; dimensions must agree.
bool lex_less(const RationalVector& a, const RationalVector& b);

Rational dot(const RationalVector& a, const RationalVector& b);
double dot(std::span<const double> a, const RationalVector& b);
Rational norm2(const RationalVector& a);

/// Positive multiple with coprime integer coordinates (zero stays zero).
RationalVector primitive(const RationalVector& v);

/// Rank of a family of vectors (exact Gaussian elimination).
std::size_t rank_of(std::span<const RationalVector> rows, std::size_t dim);

/// Basis of {x : <row, x> = 0 for every row}, in reduced form.
std::vector<RationalVector> null_space(std::span<const RationalVector> rows, std::size_t dim);

/// Solves the square system M x = b where rows of M are given; throws if singular.
RationalVector solve(std::span<const RationalVector> rows, const RationalVector& rhs);

std::string format_vector(const RationalVector& v);
std::vector<std::string> format_coords(const RationalVector& v);

RationalVector from_doubles(std::span<const double> values);  // exact binary values

void require_same_dim(std::size_t a, std::size_t b, const char* what);

}  // namespace causal
