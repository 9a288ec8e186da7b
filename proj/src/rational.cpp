#include "hyperslice/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace hyperslice {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

mpz_class pow10(long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
    return r;
}

}  // namespace

Rational parse_rational(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty number");
    bool neg = false;
    std::size_t pos = 0;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        pos = 1;
    }
    std::string_view body = s.substr(pos);

    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto num = body.substr(0, slash), den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) throw std::invalid_argument("bad rational");
        mpz_class d(std::string{den});
        if (d == 0) throw std::invalid_argument("zero denominator");
        Rational r(mpz_class(std::string(num)), d);
        r.canonicalize();
        return neg ? Rational(-r) : r;
    }

    long exponent = 0;
    if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
        auto ex = body.substr(e + 1);
        bool eneg = false;
        if (!ex.empty() && (ex[0] == '+' || ex[0] == '-')) {
            eneg = ex[0] == '-';
            ex.remove_prefix(1);
        }
        if (!all_digits(ex) || ex.size() > 6) throw std::invalid_argument("bad exponent");
        exponent = std::stol(std::string(ex));
        if (eneg) exponent = -exponent;
        body = body.substr(0, e);
    }
    std::string digits;
    long frac = 0;
    if (auto dot = body.find('.'); dot != std::string_view::npos) {
        auto ip = body.substr(0, dot), fp = body.substr(dot + 1);
        if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
            (!fp.empty() && !all_digits(fp)))
            throw std::invalid_argument("bad decimal");
        digits = std::string(ip) + std::string(fp);
        frac = static_cast<long>(fp.size());
    } else {
        if (!all_digits(body)) throw std::invalid_argument("bad number");
        digits = std::string(body);
    }
    if (digits.empty()) digits = "0";
    mpz_class num(digits);
    long shift = exponent - frac;
    Rational r;
    if (shift >= 0)
        r = Rational(num * pow10(shift));
    else
        r = Rational(num, pow10(-shift));
    r.canonicalize();
    return neg ? Rational(-r) : r;
}

std::string rational_to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rational_from_double(double d) {
    if (!std::isfinite(d)) throw std::invalid_argument("non-finite value");
    return Rational(d);
}

}  // namespace hyperslice
