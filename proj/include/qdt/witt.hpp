// Localized Witt-valued Euler classes of weight characters, taken after
// inverting the Euler class of the weight-1 bundle, i.e. in W(R) = Z via the
// signature.  The epsilon sign encodes the localized Euler class of the
// rank-2 irreducible representation of weight w.

#pragma once

#include <stdexcept>

#include "qdt/laurent.hpp"
#include "qdt/rational.hpp"

namespace qdt {

// Element of the multiplicative group {+1, -1}.
class Sign {
public:
    static Sign plus() { return Sign(1); }
    static Sign minus() { return Sign(-1); }

    int value() const { return v_; }
    Sign operator*(Sign o) const { return Sign(v_ * o.v_); }
    bool operator==(Sign o) const { return v_ == o.v_; }

private:
    explicit Sign(int v) : v_(v) {}
    int v_;
};

struct zero_weight_error : std::domain_error {
    zero_weight_error() : std::domain_error("weight character has a weight-0 entry") {}
};

struct nonzero_rank_error : std::domain_error {
    explicit nonzero_rank_error(long long rank)
        : std::domain_error("weight character has nonzero virtual rank " +
                            std::to_string(rank)) {}
};

// +1 on residues 1, 2 mod 4 and -1 on residues 0, 3 mod 4; rejects 0.
Sign epsilon(long long m);

// prod_w (epsilon(w) * w)^{-v_w}.  Requires no weight-0 entry and virtual
// rank 0 (so numerator and denominator degrees balance).
Rational euler_ratio(const WeightChar& c);

// prod_w w^{-v_w}, without the epsilon sign.  Same preconditions.
Rational classical_euler_ratio(const WeightChar& c);

// prod_w epsilon(w)^{v_w}.  Requires no weight-0 entry.
Sign sign_product(const WeightChar& c);

// (s1+s2)(s1+s3)(s2+s3) / (s1 s2 s3); requires nonzero entries.
Rational gamma_ratio(const WeightTriple& s);

}  // namespace qdt
