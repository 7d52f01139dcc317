#include "sidon/rational.hpp"

#include <cstdio>

namespace sidon {

std::string format_rational(const Rational& r) {
    const auto num = boost::multiprecision::numerator(r);
    const auto den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string format_decimal(const Rational& r, int significant) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant, r.convert_to<double>());
    return buf;
}

std::string format_fixed(const Rational& r, int digits) {
    using boost::multiprecision::cpp_int;
    cpp_int scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    const bool negative = r < 0;
    const Rational a = negative ? Rational(-r) : r;
    // round half up on the magnitude
    const cpp_int scaled = (boost::multiprecision::numerator(a) * scale * 2 + boost::multiprecision::denominator(a)) /
                           (boost::multiprecision::denominator(a) * 2);
    const cpp_int whole = scaled / scale;
    std::string frac = cpp_int(scaled % scale).str();
    if (static_cast<int>(frac.size()) < digits) frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
    std::string out = (negative && scaled != 0 ? "-" : "") + whole.str();
    if (digits > 0) out += "." + frac;
    return out;
}

}  // namespace sidon
