#include "graphband/rational.hpp"

#include <numeric>
#include <stdexcept>

#include "graphband/errors.hpp"

namespace graphband {

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw ValidationError("rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    num_ = n;
    den_ = d;
}

std::int64_t Rational::floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

Rational Rational::frac() const {
    return *this - Rational(floor());
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

bool Rational::operator<(const Rational& o) const {
    return num_ * o.den_ < o.num_ * den_;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw ValidationError("empty rational literal");
    if (s.find('.') != std::string::npos)
        throw ValidationError("decimal coordinate '" + s + "' rejected, use p/q");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(std::stoll(s));
        }
        std::int64_t n = std::stoll(s.substr(0, slash));
        std::int64_t d = std::stoll(s.substr(slash + 1));
        return Rational(n, d);
    } catch (const std::invalid_argument&) {
        throw ValidationError("malformed rational literal '" + s + "'");
    } catch (const std::out_of_range&) {
        throw ValidationError("rational literal out of range '" + s + "'");
    }
}

}  // namespace graphband
