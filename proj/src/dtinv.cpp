#include "qdt/dtinv.hpp"

#include <algorithm>
#include <future>
#include <numeric>

#include "qdt/witt.hpp"

namespace qdt {

namespace {

std::vector<WeightTriple> weights_at(const std::vector<Mat3>& mats, const EmbeddingParams& p) {
    std::vector<WeightTriple> out(mats.size());
    for (size_t c = 0; c < mats.size(); ++c) {
        WeightTriple s;
        s.s1 = p.a * mats[c][0][0] + p.b * mats[c][1][0] + p.c * mats[c][2][0];
        s.s2 = p.a * mats[c][0][1] + p.b * mats[c][1][1] + p.c * mats[c][2][1];
        s.s3 = p.a * mats[c][0][2] + p.b * mats[c][1][2] + p.c * mats[c][2][2];
        out[c] = s;
    }
    return out;
}

// True iff no trace of colength <= max_colength keeps a net weight-0 entry
// at any representative's weights.
bool weights_generic(const std::vector<WeightTriple>& w, const std::vector<int>& reps,
                     int max_colength) {
    for (int l = 1; l <= max_colength; ++l)
        for (const Partition3D& p : enumerate_partitions(l)) {
            LaurentZ3 v = trace_lattice(p);
            for (int rep : reps) {
                const WeightTriple& s = w[static_cast<size_t>(rep)];
                if (s.s1 == 0 || s.s2 == 0 || s.s3 == 0) return false;
                if (specialize(v, s).has_zero_weight()) return false;
            }
        }
    return true;
}

template <typename Accept>
void scan_triples(long long bound, const std::optional<int>& tau, Accept&& accept) {
    for (long long maxv = 1; maxv <= bound; maxv += 2)
        for (long long a = 1; a <= maxv; a += 2)
            for (long long b = 1; b <= maxv; b += 2)
                for (long long c = 1; c <= maxv; c += 2) {
                    if (std::max({a, b, c}) != maxv) continue;
                    if (std::gcd(std::gcd(a, b), c) != 1) continue;
                    EmbeddingParams p{a, b, c};
                    if (tau && p.tau_class() != *tau) continue;
                    if (accept(p)) return;
                }
}

}  // namespace

int EmbeddingParams::tau_class() const {
    auto r4 = [](long long x) { return static_cast<int>(((x % 4) + 4) % 4); };
    int ra = r4(a), rb = r4(b), rc = r4(c);
    if (ra == 3) {  // global sign: flip 1 <-> 3
        ra = 1;
        rb = 4 - rb;
        rc = 4 - rc;
    }
    return 2 * (rb == 3) + (rc == 3);
}

std::string EmbeddingParams::tau_name(int tau) {
    static const char* names[4] = {"(1,1,1)", "(1,1,3)", "(1,3,1)", "(1,3,3)"};
    if (tau < 0 || tau > 3) throw std::invalid_argument("tau class must be 0..3");
    return names[tau];
}

std::string EmbeddingParams::to_string() const {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

std::vector<WeightTriple> cone_weights(const Fan& f, const EmbeddingParams& p) {
    return weights_at(weight_matrices(f), p);
}

EmbeddingParams select_weights(const Fan& f, int max_colength, std::optional<int> tau,
                               long long bound) {
    auto found = select_weights_multi(f, max_colength, 1, tau, bound);
    return found.front();
}

std::vector<EmbeddingParams> select_weights_multi(const Fan& f, int max_colength, int count,
                                                  std::optional<int> tau, long long bound) {
    if (max_colength < 1) throw std::invalid_argument("max_colength must be >= 1");
    std::vector<Mat3> mats = weight_matrices(f);
    std::vector<int> reps = sigma_orbit_representatives(f);
    std::vector<EmbeddingParams> out;
    scan_triples(bound, tau, [&](const EmbeddingParams& p) {
        if (weights_generic(weights_at(mats, p), reps, max_colength)) out.push_back(p);
        return static_cast<int>(out.size()) >= count;
    });
    if (static_cast<int>(out.size()) < count)
        throw weight_search_exhausted(
            "no generic odd coprime triple with entries <= " + std::to_string(bound) +
            " for colength " + std::to_string(max_colength) + "; raise the bound");
    return out;
}

DTReport quadratic_dt_series(const Fan& f, const EmbeddingParams& p, int max_order, int jobs) {
    if (max_order < 2 || max_order % 2 != 0)
        throw std::invalid_argument("max_order must be even and >= 2");
    DTReport rep;
    rep.weights = p;
    rep.representatives = sigma_orbit_representatives(f);
    std::vector<WeightTriple> all = cone_weights(f, p);
    for (int r : rep.representatives) rep.rep_weights.push_back(all[static_cast<size_t>(r)]);

    // Per-representative measures, optionally in parallel; the product fold
    // stays sequential.
    std::vector<PowerSeries> measures;
    measures.reserve(rep.rep_weights.size());
    if (jobs > 1 && rep.rep_weights.size() > 1) {
        std::vector<std::future<PowerSeries>> futs;
        for (size_t i = 0; i < rep.rep_weights.size(); ++i) {
            const WeightTriple s = rep.rep_weights[i];
            const int cone = rep.representatives[i];
            futs.push_back(std::async(std::launch::async, [=]() {
                try {
                    return vertex_measure_quadratic(s, max_order, 1);
                } catch (const degenerate_weights& e) {
                    throw degenerate_weights(e.s, e.partition, cone);
                }
            }));
        }
        for (auto& fut : futs) measures.push_back(fut.get());
    } else {
        for (size_t i = 0; i < rep.rep_weights.size(); ++i) {
            try {
                measures.push_back(vertex_measure_quadratic(rep.rep_weights[i], max_order, jobs));
            } catch (const degenerate_weights& e) {
                throw degenerate_weights(e.s, e.partition, rep.representatives[i]);
            }
        }
    }
    PowerSeries z = PowerSeries::one(max_order);
    for (const auto& m : measures) z = z * m;

    for (int n = 1; n <= max_order; n += 2)
        if (z[n] != 0) throw std::logic_error("odd-degree coefficient survives in the series");

    rep.series = z;
    rep.exponent = z[2];
    rep.bott_c3 = bott_residue_c3(f, p);
    if (rep.bott_c3 != Rational(2) * rep.exponent)
        throw std::logic_error("Bott residue disagrees with twice the q^2 coefficient");

    PowerSeries mac = substitute(series_pow(macmahon(max_order / 2), rep.exponent), Subst::q_to_q2);
    if (mac != z) throw std::logic_error("series is not the MacMahon power of its q^2 coefficient");
    return rep;
}

Rational bott_residue_c3(const Fan& f, const EmbeddingParams& p) {
    std::vector<WeightTriple> w = cone_weights(f, p);
    Rational total(0);
    for (size_t c = 0; c < w.size(); ++c) {
        const WeightTriple& s = w[c];
        if (s.s1 == 0 || s.s2 == 0 || s.s3 == 0 || s.s1 + s.s2 == 0 || s.s1 + s.s3 == 0 ||
            s.s2 + s.s3 == 0)
            throw degenerate_weights(s, enumerate_partitions(1).front(), static_cast<int>(c));
        total += gamma_ratio(s);
    }
    Rational residue = -total;
    if (!is_even_integer(residue))
        throw std::logic_error("Bott residue " + to_string(residue) + " is not an even integer");
    return residue;
}

PowerSeries classical_dt_series(const Fan& f, const EmbeddingParams& p, int max_order) {
    Rational deg = bott_residue_c3(f, p);
    return substitute(series_pow(macmahon(max_order), deg), Subst::q_to_minus_q);
}

namespace {

// Sum over assignments of a partition to each remaining representative with
// prescribed total box count.
Rational oracle_sum(const std::vector<WeightTriple>& rep_weights,
                    const std::vector<int>& rep_cones, size_t idx, int boxes_left) {
    if (idx == rep_weights.size()) return boxes_left == 0 ? Rational(1) : Rational(0);
    if (boxes_left == 0) return Rational(1);  // remaining representatives take empty partitions
    Rational total(0);
    for (int m = 0; m <= boxes_left; ++m) {
        Rational level(0);
        if (m == 0) {
            level = 1;
        } else {
            for (const Partition3D& p : enumerate_partitions(m)) {
                WeightChar c = specialize(trace_lattice(p), rep_weights[idx]);
                if (c.has_zero_weight())
                    throw degenerate_weights(rep_weights[idx], p, rep_cones[idx]);
                level += euler_ratio(c);
            }
        }
        if (level != 0)
            total += level * oracle_sum(rep_weights, rep_cones, idx + 1, boxes_left - m);
    }
    return total;
}

}  // namespace

Rational localization_oracle(const Fan& f, const EmbeddingParams& p, int n, int jobs) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (n % 2 != 0) return Rational(0);  // no fixed points in odd colength
    int m = n / 2;
    std::vector<int> reps = sigma_orbit_representatives(f);
    std::vector<WeightTriple> all = cone_weights(f, p);
    std::vector<WeightTriple> rep_weights;
    for (int r : reps) rep_weights.push_back(all[static_cast<size_t>(r)]);

    // Parallelize over the first representative's box count.
    if (jobs > 1 && m > 1) {
        std::vector<std::future<Rational>> futs;
        for (int m0 = 0; m0 <= m; ++m0)
            futs.push_back(std::async(std::launch::async, [&, m0]() -> Rational {
                Rational level(0);
                if (m0 == 0) {
                    level = 1;
                } else {
                    for (const Partition3D& p0 : enumerate_partitions(m0)) {
                        WeightChar c = specialize(trace_lattice(p0), rep_weights[0]);
                        if (c.has_zero_weight()) throw degenerate_weights(rep_weights[0], p0, reps[0]);
                        level += euler_ratio(c);
                    }
                }
                return level * oracle_sum(rep_weights, reps, 1, m - m0);
            }));
        Rational total(0);
        for (auto& fut : futs) total += fut.get();
        return total;
    }
    return oracle_sum(rep_weights, reps, 0, m);
}

TauIndependenceReport tau_independence_check(const Fan& f, int max_order, int jobs) {
    if (max_order < 2 || max_order % 2 != 0)
        throw std::invalid_argument("max_order must be even and >= 2");
    TauIndependenceReport rep;
    for (int tau = 0; tau < 4; ++tau) {
        TauIndependenceReport::Entry e;
        e.tau = tau;
        e.params = select_weights(f, max_order / 2, tau);
        e.series = quadratic_dt_series(f, e.params, max_order, jobs).series;
        rep.entries.push_back(std::move(e));
    }
    rep.all_equal = true;
    for (size_t i = 1; i < rep.entries.size(); ++i)
        if (rep.entries[i].series != rep.entries[0].series) rep.all_equal = false;
    return rep;
}

}  // namespace qdt
