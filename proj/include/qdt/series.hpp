// Truncated formal power series in one variable over exact rationals.
//
// A series carries its truncation order explicitly; arithmetic between
// series of different orders is an error rather than a silent truncation.

#pragma once

#include <string>
#include <vector>

#include "qdt/rational.hpp"

namespace qdt {

class PowerSeries {
public:
    // The zero series truncated at `order` (inclusive).
    explicit PowerSeries(int order);

    static PowerSeries constant(const Rational& c, int order);
    static PowerSeries one(int order) { return constant(1, order); }

    int order() const { return static_cast<int>(coeff_.size()) - 1; }

    const Rational& operator[](int n) const { return coeff_.at(static_cast<size_t>(n)); }
    Rational& operator[](int n) { return coeff_.at(static_cast<size_t>(n)); }

    const std::vector<Rational>& coefficients() const { return coeff_; }

    bool operator==(const PowerSeries& other) const { return coeff_ == other.coeff_; }
    bool operator!=(const PowerSeries& other) const { return !(*this == other); }

private:
    std::vector<Rational> coeff_;  // index n holds the q^n coefficient
};

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a);

// Cauchy product truncated at the common order.
PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator*(const Rational& c, const PowerSeries& a);

inline PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b) { return a * b; }

// Formal log; requires constant term 1.
PowerSeries series_log(const PowerSeries& a);

// Formal exponential; requires constant term 0.
PowerSeries series_exp(const PowerSeries& a);

// a^e = exp(e * log a) for rational e; requires constant term 1.
PowerSeries series_pow(const PowerSeries& a, const Rational& e);

// MacMahon function prod_{n>=1} (1-q^n)^{-n}, the generating series of
// 3-dimensional partitions, truncated at `order`.
PowerSeries macmahon(int order);

enum class Subst {
    q_to_q2,        // q -> q^2   (output order doubles)
    q_to_minus_q,   // q -> -q
    q_to_minus_q2,  // q -> -q^2  (output order doubles)
};

PowerSeries substitute(const PowerSeries& a, Subst mode);

// Copy of `a` truncated at `order` <= a.order().
PowerSeries truncated(const PowerSeries& a, int order);

// Coefficients rendered canonically ("n" or "n/d"), constant term first.
std::vector<std::string> to_strings(const PowerSeries& a);

}  // namespace qdt
