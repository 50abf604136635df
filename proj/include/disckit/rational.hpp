#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace disckit {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    if (den == 0) throw Error("zero denominator");
    return Rational(Integer(num), Integer(den));
}

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline Rational pow(const Rational& base, unsigned exp) {
    Rational out = 1;
    for (unsigned i = 0; i < exp; ++i) out *= base;
    return out;
}

inline Integer ipow(std::int64_t base, unsigned exp) {
    Integer out = 1;
    for (unsigned i = 0; i < exp; ++i) out *= base;
    return out;
}

inline Integer ceil(const Rational& r) {
    Integer n = boost::multiprecision::numerator(r);
    Integer d = boost::multiprecision::denominator(r);
    Integer q = n / d;
    if (q * d != n && n > 0) q += 1;
    return q;
}

inline Integer floor(const Rational& r) {
    Integer n = boost::multiprecision::numerator(r);
    Integer d = boost::multiprecision::denominator(r);
    Integer q = n / d;
    if (q * d != n && n < 0) q -= 1;
    return q;
}

// Always "num/den", reduced, den > 0.
inline std::string to_string(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

inline Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            auto dot = text.find('.');
            if (dot == std::string_view::npos) return Rational(Integer(std::string(text)));
            std::string whole(text.substr(0, dot));
            std::string frac(text.substr(dot + 1));
            bool neg = !whole.empty() && whole[0] == '-';
            if (whole.empty() || whole == "-") whole += "0";
            Integer scale = ipow(10, static_cast<unsigned>(frac.size()));
            Integer w(whole);
            Integer f = frac.empty() ? Integer(0) : Integer(frac);
            Rational out(neg ? Integer(w * scale - f) : Integer(w * scale + f), scale);
            return out;
        }
        Integer num(std::string(text.substr(0, slash)));
        Integer den(std::string(text.substr(slash + 1)));
        if (den == 0) throw Error("zero denominator");
        return Rational(num, den);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw Error("bad rational: " + std::string(text));
    }
}

inline std::int64_t to_int64(const Integer& v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw Error("integer overflow");
    return static_cast<std::int64_t>(v);
}

}  // namespace disckit
