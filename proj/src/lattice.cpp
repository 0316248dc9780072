#include "vinberg/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace vinberg {

namespace checked {

Coord mul(Coord a, Coord b) {
  Coord r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("integer overflow in product");
  return r;
}

Coord add(Coord a, Coord b) {
  Coord r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("integer overflow in sum");
  return r;
}

} // namespace checked

Rational parse_rational(const std::string& text) {
  if (text.empty())
    throw std::invalid_argument("empty rational");
  auto slash = text.find('/');
  auto parse_int = [](const std::string& s) {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size())
      throw std::invalid_argument("malformed integer '" + s + "'");
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9')
        throw std::invalid_argument("malformed integer '" + s + "'");
    return BigInt(s[0] == '+' ? s.substr(1) : s);
  };
  if (slash == std::string::npos)
    return Rational(parse_int(text));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0)
    throw std::invalid_argument("zero denominator in '" + text + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

QuadraticForm::QuadraticForm(Coord phi, int n) : phi_(phi), n_(n) {
  if (phi < 1)
    throw ConfigError("phi must be a positive integer, got " + std::to_string(phi));
  if (n < 2)
    throw ConfigError("dimension must be at least 2, got " + std::to_string(n));
}

bool LatticeVector::is_zero() const {
  for (Coord c : coords_)
    if (c != 0)
      return false;
  return true;
}

std::string to_string(const LatticeVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      s += ", ";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

namespace {

void check_size(const QuadraticForm& form, std::size_t size) {
  if (size != form.size())
    throw DimensionError("vector has " + std::to_string(size) + " coordinates, form expects " +
                         std::to_string(form.size()));
}

} // namespace

Coord inner_product(const QuadraticForm& form, const LatticeVector& x, const LatticeVector& y) {
  check_size(form, x.size());
  check_size(form, y.size());
  Coord acc = -checked::mul(form.phi(), checked::mul(x[0], y[0]));
  for (std::size_t i = 1; i < x.size(); ++i)
    acc = checked::add(acc, checked::mul(x[i], y[i]));
  return acc;
}

Coord norm(const QuadraticForm& form, const LatticeVector& x) { return inner_product(form, x, x); }

Rational inner_product(const QuadraticForm& form, const RationalVector& x, const RationalVector& y) {
  check_size(form, x.size());
  check_size(form, y.size());
  Rational acc = -Rational(form.phi()) * x[0] * y[0];
  for (std::size_t i = 1; i < x.size(); ++i)
    acc += x[i] * y[i];
  return acc;
}

bool is_primitive(const LatticeVector& x) {
  Coord g = 0;
  for (Coord c : x.coords())
    g = std::gcd(g, c);
  if (g == 0)
    throw ZeroVectorError("primitivity is undefined for the zero vector");
  return g == 1;
}

Root Root::make(const QuadraticForm& form, LatticeVector v) {
  if (v.is_zero())
    throw ZeroVectorError("a root cannot be the zero vector");
  Coord n = vinberg::norm(form, v);
  if (n <= 0)
    throw ConfigError("root " + to_string(v) + " has non-positive norm " + std::to_string(n));
  if (!is_primitive(v))
    throw ConfigError("root " + to_string(v) + " is not primitive");
  Root r{std::move(v), n};
  if (!crystallographic_ok(form, r))
    throw ConfigError("root " + to_string(r.vector) + " fails the crystallographic condition");
  return r;
}

RationalVector to_rational(const LatticeVector& v) {
  RationalVector out;
  out.reserve(v.size());
  for (Coord c : v.coords())
    out.emplace_back(c);
  return out;
}

RationalVector reflect(const QuadraticForm& form, const Root& root, const RationalVector& x) {
  check_size(form, root.size());
  if (root.norm <= 0)
    throw ConfigError("reflection needs a root of positive norm");
  RationalVector e = to_rational(root.vector);
  Rational factor = 2 * inner_product(form, x, e) / Rational(root.norm);
  RationalVector out = x;
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] -= factor * e[i];
  return out;
}

RationalVector reflect(const QuadraticForm& form, const Root& root, const LatticeVector& x) {
  return reflect(form, root, to_rational(x));
}

bool crystallographic_ok(const QuadraticForm& form, const Root& root) {
  check_size(form, root.size());
  const Coord d = root.norm;
  if (d <= 0)
    return false;
  if (checked::mul(checked::mul(2, form.phi()), root[0]) % d != 0)
    return false;
  for (std::size_t j = 1; j < root.size(); ++j)
    if (checked::mul(2, root[j]) % d != 0)
      return false;
  return true;
}

std::vector<Coord> admissible_norms(const QuadraticForm& form) {
  const Coord twice = checked::mul(2, form.phi());
  std::vector<Coord> out;
  for (Coord d = 1; d * d <= twice; ++d) {
    if (twice % d == 0) {
      out.push_back(d);
      if (d * d != twice)
        out.push_back(twice / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace vinberg
