#include "qdt/vertex.hpp"

#include <future>
#include <map>
#include <mutex>
#include <vector>

#include "qdt/witt.hpp"

namespace qdt {

namespace {

// (1-t1)(1-t2)(1-t3) and (1-t1)(1-t2)
LaurentZ3 corner_factor3() {
    LaurentZ3 e;
    for (int d1 = 0; d1 <= 1; ++d1)
        for (int d2 = 0; d2 <= 1; ++d2)
            for (int d3 = 0; d3 <= 1; ++d3)
                e.add_term({d1, d2, d3}, ((d1 + d2 + d3) % 2 == 0) ? 1 : -1);
    return e;
}

LaurentZ3 corner_factor2() {
    LaurentZ3 e;
    for (int d1 = 0; d1 <= 1; ++d1)
        for (int d2 = 0; d2 <= 1; ++d2) e.add_term({d1, d2, 0}, ((d1 + d2) % 2 == 0) ? 1 : -1);
    return e;
}

LaurentZ3 compute_trace(const Partition3D& p) {
    LaurentZ3 q = q_lattice(p);
    LaurentZ3 qb = q.bar();
    LaurentZ3 v = q - qb.shifted({-1, -1, -1}) + (q * qb * corner_factor3()).shifted({-1, -1, -1});
    return v;
}

// Insert-once memo; duplicate computation is fine, torn values are not.
std::mutex trace_mutex;
std::map<Partition3D, LaurentZ3> trace_memo;

// Exact sum of f(p) over the partitions, optionally fanned out over
// `jobs` worker threads.  Rational addition commutes, so the result does
// not depend on the split.
template <typename F>
Rational sum_over(const std::vector<Partition3D>& parts, int jobs, F&& f) {
    if (jobs <= 1 || parts.size() < 2) {
        Rational total(0);
        for (const auto& p : parts) total += f(p);
        return total;
    }
    size_t nthreads = std::min<size_t>(static_cast<size_t>(jobs), parts.size());
    std::vector<std::future<Rational>> futs;
    for (size_t t = 0; t < nthreads; ++t)
        futs.push_back(std::async(std::launch::async, [&, t]() {
            Rational partial(0);
            for (size_t i = t; i < parts.size(); i += nthreads) partial += f(parts[i]);
            return partial;
        }));
    Rational total(0);
    for (auto& fut : futs) total += fut.get();
    return total;
}

PowerSeries vertex_measure_impl(const WeightTriple& s, int max_order, int jobs, bool quadratic) {
    if (max_order < 0) throw std::invalid_argument("negative truncation order");
    if (quadratic) {
        if (max_order % 2 != 0)
            throw std::invalid_argument("quadratic vertex measure needs an even order");
        if (!s.is_admissible())
            throw std::invalid_argument("weights " + s.to_string() +
                                        " are not admissible (need even entries with sum = 2 mod 4)");
    }
    if (s.s1 == 0 || s.s2 == 0 || s.s3 == 0)
        throw degenerate_weights(s, enumerate_partitions(1).front());

    PowerSeries w = PowerSeries::one(max_order);
    int max_colength = quadratic ? max_order / 2 : max_order;
    for (int l = 1; l <= max_colength; ++l) {
        std::vector<Partition3D> mon = enumerate_partitions(l);
        Rational coeff = sum_over(mon, jobs, [&](const Partition3D& p) {
            WeightChar c = specialize(trace_lattice(p), s);
            if (c.has_zero_weight()) throw degenerate_weights(s, p);
            return quadratic ? euler_ratio(c) : classical_euler_ratio(c);
        });
        w[quadratic ? 2 * l : l] = coeff;
    }
    return w;
}

}  // namespace

LaurentZ3 q_lattice(const Partition3D& p) {
    LaurentZ3 q;
    for (const Box& b : p.boxes()) q.add_term({b[0], b[1], b[2]}, 1);
    return q;
}

LaurentZ3 trace_lattice(const Partition3D& p) {
    {
        std::lock_guard<std::mutex> lock(trace_mutex);
        auto it = trace_memo.find(p);
        if (it != trace_memo.end()) return it->second;
    }
    LaurentZ3 v = compute_trace(p);
    std::lock_guard<std::mutex> lock(trace_mutex);
    return trace_memo.emplace(p, std::move(v)).first->second;
}

LaurentZ3 split_plus(const Partition3D& p) {
    LaurentZ3 q = q_lattice(p);
    LaurentZ3 qb = q.bar();
    return q - (q * qb * corner_factor2()).shifted({-1, -1, 0});
}

LaurentZ3 split_minus(const Partition3D& p) {
    LaurentZ3 q = q_lattice(p);
    LaurentZ3 qb = q.bar();
    return (q * qb * corner_factor2() - qb).shifted({-1, -1, -1});
}

WeightChar specialize(const LaurentZ3& l, const WeightTriple& s) {
    WeightChar c;
    for (const auto& [e, coeff] : l.terms()) c.add(s.dot(e), coeff);
    return c;
}

PowerSeries vertex_measure_quadratic(const WeightTriple& s, int max_order, int jobs) {
    return vertex_measure_impl(s, max_order, jobs, true);
}

PowerSeries vertex_measure_classical(const WeightTriple& s, int max_order, int jobs) {
    return vertex_measure_impl(s, max_order, jobs, false);
}

}  // namespace qdt
