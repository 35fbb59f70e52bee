#include "qdt/series.hpp"

#include <stdexcept>

namespace qdt {

namespace {

void require_same_order(const PowerSeries& a, const PowerSeries& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("series order mismatch: " + std::to_string(a.order()) +
                                    " vs " + std::to_string(b.order()));
}

}  // namespace

PowerSeries::PowerSeries(int order) {
    if (order < 0) throw std::invalid_argument("negative series order");
    coeff_.assign(static_cast<size_t>(order) + 1, Rational(0));
}

PowerSeries PowerSeries::constant(const Rational& c, int order) {
    PowerSeries s(order);
    s[0] = c;
    return s;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    require_same_order(a, b);
    PowerSeries c(a.order());
    for (int n = 0; n <= a.order(); ++n) c[n] = a[n] + b[n];
    return c;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    require_same_order(a, b);
    PowerSeries c(a.order());
    for (int n = 0; n <= a.order(); ++n) c[n] = a[n] - b[n];
    return c;
}

PowerSeries operator-(const PowerSeries& a) {
    PowerSeries c(a.order());
    for (int n = 0; n <= a.order(); ++n) c[n] = -a[n];
    return c;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    require_same_order(a, b);
    PowerSeries c(a.order());
    for (int i = 0; i <= a.order(); ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= a.order(); ++j) {
            if (b[j] == 0) continue;
            c[i + j] += a[i] * b[j];
        }
    }
    return c;
}

PowerSeries operator*(const Rational& c, const PowerSeries& a) {
    PowerSeries r(a.order());
    for (int n = 0; n <= a.order(); ++n) r[n] = c * a[n];
    return r;
}

// log and exp go through the first-order relations (log a)' * a = a' and
// b' = a' * b, which stay exact over the rationals.
PowerSeries series_log(const PowerSeries& a) {
    if (a[0] != 1) throw std::invalid_argument("series_log requires constant term 1");
    const int N = a.order();
    PowerSeries b(N);
    std::vector<Rational> bd(static_cast<size_t>(N), Rational(0));  // bd[m] = (m+1) b_{m+1}
    for (int m = 0; m < N; ++m) {
        Rational t = Rational(m + 1) * a[m + 1];
        for (int j = 1; j <= m; ++j) t -= a[j] * bd[static_cast<size_t>(m - j)];
        bd[static_cast<size_t>(m)] = t;
        b[m + 1] = t / Rational(m + 1);
    }
    return b;
}

PowerSeries series_exp(const PowerSeries& a) {
    if (a[0] != 0) throw std::invalid_argument("series_exp requires constant term 0");
    const int N = a.order();
    PowerSeries b(N);
    b[0] = 1;
    for (int m = 0; m < N; ++m) {
        Rational t(0);
        for (int j = 0; j <= m; ++j) t += Rational(j + 1) * a[j + 1] * b[m - j];
        b[m + 1] = t / Rational(m + 1);
    }
    return b;
}

PowerSeries series_pow(const PowerSeries& a, const Rational& e) {
    if (a[0] != 1) throw std::invalid_argument("series_pow requires constant term 1");
    return series_exp(e * series_log(a));
}

PowerSeries macmahon(int order) {
    if (order < 0) throw std::invalid_argument("negative series order");
    PowerSeries m = PowerSeries::one(order);
    for (int n = 1; n <= order; ++n) {
        // (1-q^n)^{-n} = sum_k binom(n+k-1, k) q^{nk}
        PowerSeries f(order);
        for (int k = 0; n * k <= order; ++k) {
            Integer binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n + k - 1),
                         static_cast<unsigned long>(k));
            f[n * k] = Rational(binom);
        }
        m = m * f;
    }
    return m;
}

PowerSeries substitute(const PowerSeries& a, Subst mode) {
    switch (mode) {
        case Subst::q_to_q2: {
            PowerSeries r(2 * a.order());
            for (int n = 0; n <= a.order(); ++n) r[2 * n] = a[n];
            return r;
        }
        case Subst::q_to_minus_q: {
            PowerSeries r(a.order());
            for (int n = 0; n <= a.order(); ++n) r[n] = (n % 2 == 0) ? a[n] : -a[n];
            return r;
        }
        case Subst::q_to_minus_q2: {
            PowerSeries r(2 * a.order());
            for (int n = 0; n <= a.order(); ++n) r[2 * n] = (n % 2 == 0) ? a[n] : -a[n];
            return r;
        }
    }
    throw std::logic_error("unknown substitution mode");
}

PowerSeries truncated(const PowerSeries& a, int order) {
    if (order > a.order())
        throw std::invalid_argument("cannot truncate to a higher order than computed");
    PowerSeries r(order);
    for (int n = 0; n <= order; ++n) r[n] = a[n];
    return r;
}

std::vector<std::string> to_strings(const PowerSeries& a) {
    std::vector<std::string> out;
    out.reserve(static_cast<size_t>(a.order()) + 1);
    for (int n = 0; n <= a.order(); ++n) out.push_back(to_string(a[n]));
    return out;
}

}  // namespace qdt
