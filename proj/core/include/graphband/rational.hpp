#ifndef GRAPHBAND_RATIONAL_HPP
#define GRAPHBAND_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace graphband {

// Exact rational with int64 numerator/denominator, always normalized
// (den > 0, gcd(|num|, den) == 1).  Floor and fractional part are exact,
// which is what the integer/fractional vertex split requires.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    std::int64_t floor() const;
    Rational frac() const;  // *this - floor(), in [0,1)

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator-() const { return Rational(-num_, den_); }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;

    std::string str() const;

    // Accepts "p/q", "p", "-p/q".  Decimal notation is rejected: exact
    // coordinates are part of the input contract.
    static Rational parse(const std::string& s);

private:
    std::int64_t num_, den_;
};

using RationalVec = std::vector<Rational>;

}  // namespace graphband

#endif
