#include "rcft/rational.hpp"

#include <cctype>

#include "rcft/error.hpp"

namespace rcft {

Rational frac(const Rational& r) {
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return r - Rational(fl);
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
    auto is_int = [](std::string_view s, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
    if (!is_int(num, true) || !is_int(den, false))
        throw Error(Errc::parse, "malformed rational '" + std::string(text) + "'");
    std::string n(num);
    if (!n.empty() && n[0] == '+') n.erase(0, 1);
    Integer p(n, 10), q(std::string(den), 10);
    if (q == 0) throw Error(Errc::parse, "zero denominator in '" + std::string(text) + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

long to_long(const Integer& z) {
    if (!z.fits_slong_p()) throw Error(Errc::precondition, "integer " + z.get_str() + " out of range");
    return z.get_si();
}

}  // namespace rcft
