#ifndef HGW_RATIONAL_HPP
#define HGW_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hgw/errors.hpp"

namespace hgw {

using Int = mpz_class;
using Rat = mpq_class;

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }
inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

inline int cmpabs(const Int& a, const Int& b) {
    return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

/* The mpq_class(num, den) constructor does not reduce; this does. */
inline Rat ratio(const Int& num, const Int& den) {
    if (sgn(den) == 0) fail(errc::division_by_zero, "zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/* Exact serialization: "a" for integers, "a/b" otherwise (b > 0, reduced).
 * This is the on-disk form for every rational in instance files and reports. */
inline std::string rat_to_string(const Rat& x) { return x.get_str(); }

inline Rat rat_from_string(const std::string& s) {
    Rat x;
    if (s.empty() || x.set_str(s, 10) != 0)
        fail(errc::malformed_input, "not a rational: '" + s + "'");
    // mpq accepts "4/6" and "1/-2" verbatim; normalize to the canonical form.
    if (x.get_den() == 0) fail(errc::malformed_input, "zero denominator: '" + s + "'");
    x.canonicalize();
    return x;
}

inline Int int_from_string(const std::string& s) {
    Int x;
    if (s.empty() || x.set_str(s, 10) != 0)
        fail(errc::malformed_input, "not an integer: '" + s + "'");
    return x;
}

/* p-adic valuation of a nonzero rational. */
inline long valuation(Rat x, const Int& p) {
    if (is_zero(x)) fail(errc::invalid_argument, "valuation of zero");
    long v = 0;
    Int num = x.get_num(), den = x.get_den();
    while (mpz_divisible_p(num.get_mpz_t(), p.get_mpz_t())) { num /= p; ++v; }
    while (mpz_divisible_p(den.get_mpz_t(), p.get_mpz_t())) { den /= p; --v; }
    return v;
}

inline bool divides(const Int& d, const Int& n) {
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

/* Trial-division factorization; fine at workbench scale where the integers
 * being factored are lattice indices and discriminants of small orders. */
inline std::map<Int, unsigned> factor(Int n) {
    std::map<Int, unsigned> out;
    if (sgn(n) < 0) n = -n;
    if (n <= 1) return out;
    for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2))
        while (divides(p, n)) { out[p]++; n /= p; }
    if (n > 1) out[n]++;
    return out;
}

inline bool is_prime(const Int& p) {
    return mpz_probab_prime_p(p.get_mpz_t(), 40) != 0;
}

inline bool is_prime_power(const Int& n) {
    auto f = factor(n);
    return f.size() == 1;
}

} // namespace hgw

#endif
