#include "qdt/witt.hpp"

namespace qdt {

Sign epsilon(long long m) {
    if (m == 0) throw std::domain_error("epsilon undefined at 0");
    long long r = ((m % 4) + 4) % 4;
    return (r == 1 || r == 2) ? Sign::plus() : Sign::minus();
}

namespace {

// Numerator and denominator accumulated as big integers and reduced once.
Rational signed_power_product(const WeightChar& c, bool with_epsilon) {
    if (c.has_zero_weight()) throw zero_weight_error();
    long long rank = c.virtual_rank();
    if (rank != 0) throw nonzero_rank_error(rank);
    Integer num = 1, den = 1;
    for (const auto& [w, v] : c.weights()) {
        long long base = with_epsilon ? epsilon(w).value() * w : w;
        Integer b(static_cast<long>(base));
        Integer p;
        unsigned long e = static_cast<unsigned long>(v > 0 ? v : -v);
        mpz_pow_ui(p.get_mpz_t(), b.get_mpz_t(), e);
        // exponent is -v: v > 0 lands in the denominator
        if (v > 0)
            den *= p;
        else
            num *= p;
    }
    return make_rational(num, den);
}

}  // namespace

Rational euler_ratio(const WeightChar& c) { return signed_power_product(c, true); }

Rational classical_euler_ratio(const WeightChar& c) { return signed_power_product(c, false); }

Sign sign_product(const WeightChar& c) {
    if (c.has_zero_weight()) throw zero_weight_error();
    long long minus_count = 0;
    for (const auto& [w, v] : c.weights())
        if (epsilon(w) == Sign::minus()) minus_count += v;
    return (((minus_count % 2) + 2) % 2 == 0) ? Sign::plus() : Sign::minus();
}

Rational gamma_ratio(const WeightTriple& s) {
    if (s.s1 == 0 || s.s2 == 0 || s.s3 == 0)
        throw std::domain_error("gamma_ratio requires nonzero weights");
    Integer n = Integer(static_cast<long>(s.s1 + s.s2)) * Integer(static_cast<long>(s.s1 + s.s3)) *
                Integer(static_cast<long>(s.s2 + s.s3));
    Integer d = Integer(static_cast<long>(s.s1)) * Integer(static_cast<long>(s.s2)) *
                Integer(static_cast<long>(s.s3));
    return make_rational(n, d);
}

}  // namespace qdt
