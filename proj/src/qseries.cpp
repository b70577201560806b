#include "mahler/qseries.hpp"

#include <sstream>

namespace mahler {

std::string format_exponent(long e24) {
    if (e24 % 24 == 0) return std::to_string(e24 / 24);
    Rational e(e24, 24);
    std::ostringstream os;
    os << "(" << e << ")";
    return os.str();
}

namespace {
std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}
}  // namespace

std::string to_string(const QSeries<Rational>& a) {
    // A fractional or negative lead is printed as a q-power prefix.
    bool prefixed = a.lead24() % 24 != 0 || a.lead24() < 0;
    long base24 = prefixed ? 0 : a.lead24();
    std::ostringstream os;
    if (prefixed) os << "q^" << format_exponent(a.lead24()) << " * (";
    bool first = true;
    for (long i = 0; i <= a.order(); ++i) {
        const Rational& c = a[i];
        if (c == 0) continue;
        Rational ac = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        long e24 = base24 + 24 * i;
        bool unit = (ac == 1);
        if (e24 == 0) {
            os << rational_str(ac);
        } else {
            if (!unit) {
                if (denominator(ac) == 1)
                    os << rational_str(ac);
                else
                    os << "(" << rational_str(ac) << ")";
            }
            os << "q";
            if (e24 != 24) os << "^" << format_exponent(e24);
        }
    }
    if (first) os << "0";
    if (prefixed) os << ")";
    return os.str();
}

}  // namespace mahler
