// Lattice-form partition and trace characters of monomial ideals, their
// Serre-duality splitting, specialization at integer weights, and the
// quadratic / classical equivariant vertex measures.

#pragma once

#include <stdexcept>

#include "qdt/laurent.hpp"
#include "qdt/partitions.hpp"
#include "qdt/rational.hpp"
#include "qdt/series.hpp"

namespace qdt {

// Raised when a partition's specialized trace keeps a net weight-0 entry:
// the chosen weights are not generic at this colength and the caller must
// reselect them.  `cone` is filled by callers that know which fixed point
// the weights came from.
struct degenerate_weights : std::runtime_error {
    degenerate_weights(WeightTriple s_, Partition3D partition_, int cone_ = -1)
        : std::runtime_error("weights " + s_.to_string() +
                             " are degenerate: weight 0 survives in the trace of " +
                             partition_.to_string() +
                             (cone_ >= 0 ? " at cone " + std::to_string(cone_) : "")),
          s(s_),
          partition(std::move(partition_)),
          cone(cone_) {}

    WeightTriple s;
    Partition3D partition;
    int cone;
};

// Q(t) = sum of t^k over the boxes k of P; all coefficients +1.
LaurentZ3 q_lattice(const Partition3D& p);

// V = Q - Qbar/(t1 t2 t3) + Q Qbar (1-t1)(1-t2)(1-t3)/(t1 t2 t3), with
// Qbar(t) = Q(t^{-1}).  Virtual rank 0, coefficient 0 at exponent (0,0,0).
// Results are memoized per partition (insert-once, safe across threads).
LaurentZ3 trace_lattice(const Partition3D& p);

// V+ = Q - Q Qbar (1-t1)(1-t2)/(t1 t2)
// V- = -Qbar/(t1 t2 t3) + Q Qbar (1-t1)(1-t2)/(t1 t2 t3)
// so that split_plus + split_minus == trace_lattice exactly, and
// V+(t^{-1}) = -V-(t) * t1 t2 t3.
LaurentZ3 split_plus(const Partition3D& p);
LaurentZ3 split_minus(const Partition3D& p);

// Exponent k contributes its coefficient to weight s.k; net-zero entries
// are dropped.
WeightChar specialize(const LaurentZ3& l, const WeightTriple& s);

// W(s, q) = 1 + sum_{l>=1} q^{2l} sum_{P in Mon_l} prod_w (eps(w) w)^{-v_w}.
// Requires admissible s and even max_order; throws degenerate_weights when
// some trace keeps a net weight-0 entry.
PowerSeries vertex_measure_quadratic(const WeightTriple& s, int max_order, int jobs = 1);

// W'(s, q) = 1 + sum_{l>=1} q^l sum_{P in Mon_l} prod_w w^{-v_w}, without
// the epsilon sign and without a parity requirement on s.
PowerSeries vertex_measure_classical(const WeightTriple& s, int max_order, int jobs = 1);

}  // namespace qdt
