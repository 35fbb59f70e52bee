// Assembly of fan data and vertex measures into Donaldson-Thomas generating
// series: generic weight selection, per-cone torus weights, the quadratic
// series, the classical series, the Bott residue for deg c3(T_X (x) K_X),
// and a brute-force localization oracle.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdt/fan.hpp"
#include "qdt/laurent.hpp"
#include "qdt/rational.hpp"
#include "qdt/series.hpp"
#include "qdt/vertex.hpp"

namespace qdt {

// Odd positive coprime exponents of the one-parameter subgroup embedding.
struct EmbeddingParams {
    long long a = 1, b = 1, c = 1;

    // Class of (a,b,c) in ((Z/4)^x)^3 / {+-1}, indexed 0..3 by the canonical
    // representatives (1,1,1), (1,1,3), (1,3,1), (1,3,3).
    int tau_class() const;
    static std::string tau_name(int tau);

    bool operator==(const EmbeddingParams& o) const = default;
    std::string to_string() const;
};

struct weight_search_exhausted : std::runtime_error {
    explicit weight_search_exhausted(const std::string& what) : std::runtime_error(what) {}
};

// One weight triple per maximal cone: s^k = (a,b,c) . weight_matrix(k).
// Opposite cones get exactly opposite triples.
std::vector<WeightTriple> cone_weights(const Fan& f, const EmbeddingParams& p);

// First odd positive coprime triple (ordered by max entry, then
// lexicographically) whose cone weights keep every trace of colength
// <= max_colength free of net weight-0 entries, certified by exhaustive
// check over the orbit representatives.  `tau` restricts the search to one
// tau class.  Throws weight_search_exhausted past `bound`.
EmbeddingParams select_weights(const Fan& f, int max_colength,
                               std::optional<int> tau = std::nullopt, long long bound = 299);

// First `count` triples accepted by the same search.
std::vector<EmbeddingParams> select_weights_multi(const Fan& f, int max_colength, int count,
                                                  std::optional<int> tau = std::nullopt,
                                                  long long bound = 299);

struct DTReport {
    PowerSeries series = PowerSeries(0);
    Rational exponent;                       // q^2 coefficient of the series
    Rational bott_c3;                        // deg c3(T_X (x) K_X) = 2 * exponent
    EmbeddingParams weights;
    std::vector<int> representatives;        // cone indices, one per orbit
    std::vector<WeightTriple> rep_weights;   // aligned with representatives
};

// Product over orbit representatives of the quadratic vertex measure,
// truncated at max_order (even).  Verifies that odd coefficients vanish and
// that the series is the MacMahon power prescribed by its own q^2
// coefficient; fills the Bott residue.
DTReport quadratic_dt_series(const Fan& f, const EmbeddingParams& p, int max_order, int jobs = 1);

// - sum over ALL maximal cones of (s1+s2)(s1+s3)(s2+s3)/(s1 s2 s3); always an
// even integer for an orientation-passing fan.
Rational bott_residue_c3(const Fan& f, const EmbeddingParams& p);

// MacMahon power M(-q)^{deg c3(T_X (x) K_X)} truncated at max_order.
PowerSeries classical_dt_series(const Fan& f, const EmbeddingParams& p, int max_order);

// Degree-n localized invariant by direct enumeration of fixed-point tuples
// (one partition per orbit representative, total colength n/2), independent
// of the series product.  Returns 0 for odd n.
Rational localization_oracle(const Fan& f, const EmbeddingParams& p, int n, int jobs = 1);

struct TauIndependenceReport {
    struct Entry {
        int tau = 0;
        EmbeddingParams params;
        PowerSeries series = PowerSeries(0);
    };
    std::vector<Entry> entries;
    bool all_equal = false;
};

// Computes the quadratic series for one generic triple in each of the four
// tau classes and reports whether the four series coincide.
TauIndependenceReport tau_independence_check(const Fan& f, int max_order, int jobs = 1);

}  // namespace qdt
