// Complete regular simplicial fans in Z^3: validation, per-cone coordinate
// frames and weight matrices, the orientation criterion, orbit
// representatives under the central involution, and equivariant star
// subdivision (the toric picture of blowing up a pair of fixed points).

#pragma once

#include <array>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdt/laurent.hpp"

namespace qdt {

using Ray = std::array<long long, 3>;
using Mat3 = std::array<std::array<long long, 3>, 3>;

struct Fan {
    std::vector<Ray> rays;                   // primitive integer vectors
    std::vector<std::array<int, 3>> cones;   // ray-index triples, 0-based
};

struct fan_error : std::runtime_error {
    explicit fan_error(const std::string& what) : std::runtime_error(what) {}
};

struct fan_parse_error : std::runtime_error {
    explicit fan_parse_error(const std::string& what) : std::runtime_error(what) {}
};

// --- file format ----------------------------------------------------------
// A fan file is a JSON object {"rays": [[x,y,z],...], "cones": [[i,j,k],...]}
// with 0-based ray indices.  Order is preserved on round-trip.

Fan parse_fan(const std::string& text);
Fan load_fan(const std::string& path);
std::string serialize_fan(const Fan& f);

// --- validation ------------------------------------------------------------

struct ValidationCheck {
    std::string name;
    bool pass;
    std::string detail;  // empty on pass
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool all_pass() const;
    std::string summary() const;
};

// Checks: well-formed structure, primitive distinct rays, unimodular cones,
// every 2-face shared by exactly two maximal cones, Euler count
// rays - faces + cones == 2, and central symmetry of rays and cones.
ValidationReport validate_fan(const Fan& f);

// --- frames and weights ------------------------------------------------------

struct ConeFrame {
    int cone = -1;
    std::array<int, 3> ray_order{};  // ray indices in the row order used below
    Mat3 V{};                        // rows are the cone generators
    Mat3 R{};                        // exact integer inverse of V
    int det_sign = 0;                // det V = det R = +-1
};

// One frame per maximal cone, indexed like f.cones.  Generators are
// normalized to lexicographic order; when the fan is centrally symmetric the
// partner of each orbit representative instead uses the negated rows of the
// representative, so that R(-cone) = -R(cone) and det flips sign exactly.
std::vector<ConeFrame> cone_frames(const Fan& f);

struct OrientationReport {
    bool pass = false;
    std::string detail;
    int bad_cone = -1;                 // condition (a) violator, if any
    std::array<int, 2> bad_pair{-1, -1};  // condition (b) violator, if any
};

// Condition (a): the entries of R sum to an odd number in every cone.
// Condition (b): row sums of R agree mod 2 across all cones.
// Requires validate_fan to pass, including central symmetry.
OrientationReport orientation_check(const Fan& f);

// Per-cone matrices s = -2 R, indexed like f.cones.  Requires the
// orientation check to pass.
std::vector<Mat3> weight_matrices(const Fan& f);

// Index of the cone whose ray set is the negation of cone `c`; -1 if none.
int negation_partner(const Fan& f, int cone);

// One cone index per {cone, -cone} pair: the member with lexicographically
// smaller sorted generator matrix.  Sorted by cone index.
std::vector<int> sigma_orbit_representatives(const Fan& f);

// Star subdivision at the pair {cone, -cone}: inserts the rays
// +-(v1+v2+v3) and replaces the two cones by three each.  `cone` may be
// either member of the pair.
Fan star_subdivide(const Fan& f, int cone);

}  // namespace qdt
