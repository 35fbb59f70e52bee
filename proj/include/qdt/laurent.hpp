// Sparse integer Laurent polynomials in three variables (lattice-form
// virtual characters), their specializations to single-variable weight
// characters, and integer weight triples.

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

namespace qdt {

using Exponent = std::array<int, 3>;

class LaurentZ3 {
public:
    LaurentZ3() = default;

    static LaurentZ3 monomial(const Exponent& e, long long c = 1);

    // No zero coefficients are stored.
    const std::map<Exponent, long long>& terms() const { return terms_; }

    long long coefficient(const Exponent& e) const;
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    // Sum of all coefficients (the virtual rank of the character).
    long long coefficient_sum() const;

    void add_term(const Exponent& e, long long c);

    // All exponents negated: L(t) -> L(t^{-1}).
    LaurentZ3 bar() const;

    // Multiplication by the monomial t^shift.
    LaurentZ3 shifted(const Exponent& shift) const;

    bool operator==(const LaurentZ3& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentZ3& o) const { return terms_ != o.terms_; }

    std::string to_string() const;  // diagnostics

private:
    std::map<Exponent, long long> terms_;
};

LaurentZ3 operator+(const LaurentZ3& a, const LaurentZ3& b);
LaurentZ3 operator-(const LaurentZ3& a, const LaurentZ3& b);
LaurentZ3 operator-(const LaurentZ3& a);
LaurentZ3 operator*(const LaurentZ3& a, const LaurentZ3& b);

// Integer weights (s1, s2, s3) of a one-parameter torus acting on the three
// coordinates of an affine chart.
struct WeightTriple {
    long long s1 = 0, s2 = 0, s3 = 0;

    long long dot(const Exponent& e) const { return s1 * e[0] + s2 * e[1] + s3 * e[2]; }

    // Each entry even and s1+s2+s3 = 2 mod 4.
    bool is_admissible() const;

    bool operator==(const WeightTriple& o) const = default;

    std::string to_string() const;
};

// Sparse map weight -> net integer multiplicity after specializing a
// lattice character at a weight triple.  Entries that cancel to zero are
// dropped; a surviving entry at weight 0 is recorded, not an error here.
class WeightChar {
public:
    WeightChar() = default;

    const std::map<long long, long long>& weights() const { return mult_; }

    void add(long long w, long long m);

    long long multiplicity(long long w) const;
    bool has_zero_weight() const { return mult_.count(0) != 0; }
    long long virtual_rank() const;
    bool empty() const { return mult_.empty(); }

    // Disjoint union of characters: multiplicities add.
    WeightChar disjoint_union(const WeightChar& o) const;

    bool operator==(const WeightChar& o) const { return mult_ == o.mult_; }

    std::string to_string() const;

private:
    std::map<long long, long long> mult_;
};

}  // namespace qdt
