#ifndef DEPENS_RATIONAL_HPP
#define DEPENS_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace depens {

// Exact non-negative rational, used for ensemble weights so that weighted
// voting stays integer-exact (a weight w = p/q is equivalent to duplicating
// an individual p times under a common denominator q).
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
    if (den <= 0) throw std::invalid_argument("rational: denominator must be positive");
    if (num < 0) throw std::invalid_argument("rational: negative weight");
    normalize();
  }

  void normalize() {
    const std::int64_t g = std::gcd(num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
};

// Parses "2", "0.5", "2/3" into an exact rational.
Rational parse_rational(const std::string& s);

std::string to_string(const Rational& r);

}  // namespace depens

#endif
