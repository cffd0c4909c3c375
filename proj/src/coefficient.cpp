#include "laurentbi/coefficient.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace laurentbi {

mpq_class parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/' && c != '-' && c != '+')
            throw std::invalid_argument("bad rational literal: " + s);
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

std::string rational_to_string(const mpq_class& q) { return q.get_str(); }

mpq_class rational_from_double(double x) {
    mpq_class q;
    mpq_set_d(q.get_mpq_t(), x);
    q.canonicalize();
    return q;
}

std::string Coefficient::to_string() const {
    if (is_exact()) {
        return ex().re.get_str() + (sgn(ex().im) >= 0 ? "+" : "") + ex().im.get_str() + "i";
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", fl().real(), fl().imag());
    return buf;
}

}  // namespace laurentbi
