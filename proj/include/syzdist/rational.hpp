#ifndef SYZDIST_RATIONAL_HPP
#define SYZDIST_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace syzdist {

using Rat = mpq_class;
using Int = mpz_class;

// mpq_class(num, den) does not canonicalize; route all two-arg construction here.
inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("rat: bad literal '" + s + "'");
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline Rat rat_pow(const Rat& q, unsigned e) {
    Rat r(1);
    Rat base = q;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

} // namespace syzdist

#endif
