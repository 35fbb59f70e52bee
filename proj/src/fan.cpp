#include "qdt/fan.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

namespace qdt {

namespace {

using ordered_json = nlohmann::ordered_json;

long long det3(const Mat3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Inverse of a matrix with det = +-1: adjugate divided by the determinant.
Mat3 unimodular_inverse(const Mat3& m, long long det) {
    Mat3 adj{};
    adj[0][0] = m[1][1] * m[2][2] - m[1][2] * m[2][1];
    adj[0][1] = m[0][2] * m[2][1] - m[0][1] * m[2][2];
    adj[0][2] = m[0][1] * m[1][2] - m[0][2] * m[1][1];
    adj[1][0] = m[1][2] * m[2][0] - m[1][0] * m[2][2];
    adj[1][1] = m[0][0] * m[2][2] - m[0][2] * m[2][0];
    adj[1][2] = m[0][2] * m[1][0] - m[0][0] * m[1][2];
    adj[2][0] = m[1][0] * m[2][1] - m[1][1] * m[2][0];
    adj[2][1] = m[0][1] * m[2][0] - m[0][0] * m[2][1];
    adj[2][2] = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    for (auto& row : adj)
        for (auto& x : row) x *= det;  // det is +-1
    return adj;
}

Ray negated(const Ray& r) { return {-r[0], -r[1], -r[2]}; }

long long gcd3(const Ray& r) {
    long long g = std::gcd(std::gcd(std::llabs(r[0]), std::llabs(r[1])), std::llabs(r[2]));
    return g;
}

std::array<Ray, 3> cone_rays(const Fan& f, int c) {
    const auto& ix = f.cones[static_cast<size_t>(c)];
    return {f.rays[static_cast<size_t>(ix[0])], f.rays[static_cast<size_t>(ix[1])],
            f.rays[static_cast<size_t>(ix[2])]};
}

std::array<Ray, 3> sorted_rays(const Fan& f, int c) {
    auto rays = cone_rays(f, c);
    std::sort(rays.begin(), rays.end());
    return rays;
}

bool well_formed(const Fan& f, std::string* why) {
    if (f.rays.empty() || f.cones.empty()) {
        *why = "fan needs at least one ray and one cone";
        return false;
    }
    std::set<std::array<int, 3>> seen;
    for (size_t c = 0; c < f.cones.size(); ++c) {
        auto ix = f.cones[c];
        for (int j : ix)
            if (j < 0 || static_cast<size_t>(j) >= f.rays.size()) {
                *why = "cone " + std::to_string(c) + " has ray index " + std::to_string(j) +
                       " out of range";
                return false;
            }
        if (ix[0] == ix[1] || ix[0] == ix[2] || ix[1] == ix[2]) {
            *why = "cone " + std::to_string(c) + " repeats a ray";
            return false;
        }
        std::sort(ix.begin(), ix.end());
        if (!seen.insert(ix).second) {
            *why = "duplicate cone " + std::to_string(c);
            return false;
        }
    }
    return true;
}

ConeFrame frame_from_rows(const Fan& f, int cone, const std::array<Ray, 3>& rows) {
    ConeFrame fr;
    fr.cone = cone;
    const auto& ix = f.cones[static_cast<size_t>(cone)];
    for (int i = 0; i < 3; ++i) {
        bool found = false;
        for (int j : ix)
            if (f.rays[static_cast<size_t>(j)] == rows[static_cast<size_t>(i)]) {
                fr.ray_order[static_cast<size_t>(i)] = j;
                found = true;
            }
        if (!found) throw fan_error("internal: frame row is not a ray of the cone");
        for (int k = 0; k < 3; ++k)
            fr.V[static_cast<size_t>(i)][static_cast<size_t>(k)] =
                rows[static_cast<size_t>(i)][static_cast<size_t>(k)];
    }
    long long det = det3(fr.V);
    if (det != 1 && det != -1)
        throw fan_error("cone " + std::to_string(cone) + " is not unimodular (det = " +
                        std::to_string(det) + ")");
    fr.det_sign = static_cast<int>(det);
    fr.R = unimodular_inverse(fr.V, det);
    return fr;
}

}  // namespace

// --- file format -------------------------------------------------------------

Fan parse_fan(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw fan_parse_error(std::string("invalid fan file: ") + e.what());
    }
    if (!j.is_object() || !j.contains("rays") || !j.contains("cones"))
        throw fan_parse_error("fan file must be an object with 'rays' and 'cones'");
    Fan f;
    const auto& rays = j["rays"];
    if (!rays.is_array()) throw fan_parse_error("field 'rays' must be an array");
    for (size_t i = 0; i < rays.size(); ++i) {
        const auto& r = rays[i];
        if (!r.is_array() || r.size() != 3 || !r[0].is_number_integer() ||
            !r[1].is_number_integer() || !r[2].is_number_integer())
            throw fan_parse_error("rays[" + std::to_string(i) + "] must be 3 integers");
        f.rays.push_back({r[0].get<long long>(), r[1].get<long long>(), r[2].get<long long>()});
    }
    const auto& cones = j["cones"];
    if (!cones.is_array()) throw fan_parse_error("field 'cones' must be an array");
    for (size_t i = 0; i < cones.size(); ++i) {
        const auto& c = cones[i];
        if (!c.is_array() || c.size() != 3 || !c[0].is_number_integer() ||
            !c[1].is_number_integer() || !c[2].is_number_integer())
            throw fan_parse_error("cones[" + std::to_string(i) + "] must be 3 ray indices");
        f.cones.push_back({c[0].get<int>(), c[1].get<int>(), c[2].get<int>()});
    }
    std::string why;
    if (!well_formed(f, &why)) throw fan_parse_error(why);
    return f;
}

Fan load_fan(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw fan_parse_error("cannot open fan file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_fan(ss.str());
}

std::string serialize_fan(const Fan& f) {
    ordered_json j;
    j["rays"] = ordered_json::array();
    for (const Ray& r : f.rays) j["rays"].push_back({r[0], r[1], r[2]});
    j["cones"] = ordered_json::array();
    for (const auto& c : f.cones) j["cones"].push_back({c[0], c[1], c[2]});
    return j.dump(2) + "\n";
}

// --- validation ----------------------------------------------------------------

bool ValidationReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string ValidationReport::summary() const {
    std::string s;
    for (const auto& c : checks) {
        s += (c.pass ? "PASS " : "FAIL ") + c.name;
        if (!c.pass && !c.detail.empty()) s += ": " + c.detail;
        s += "\n";
    }
    return s;
}

ValidationReport validate_fan(const Fan& f) {
    ValidationReport rep;
    auto add = [&](const std::string& name, bool pass, const std::string& detail = "") {
        rep.checks.push_back({name, pass, pass ? "" : detail});
    };

    std::string why;
    bool wf = well_formed(f, &why);
    add("structure", wf, why);
    if (!wf) return rep;

    bool primitive = true;
    std::string pdetail;
    std::set<Ray> ray_set(f.rays.begin(), f.rays.end());
    if (ray_set.size() != f.rays.size()) {
        primitive = false;
        pdetail = "duplicate rays";
    }
    for (size_t i = 0; i < f.rays.size() && primitive; ++i) {
        const Ray& r = f.rays[i];
        if (r == Ray{0, 0, 0} || gcd3(r) != 1) {
            primitive = false;
            pdetail = "ray " + std::to_string(i) + " is not primitive";
        }
    }
    add("primitive_rays", primitive, pdetail);

    bool regular = true;
    std::string rdetail;
    for (size_t c = 0; c < f.cones.size() && regular; ++c) {
        Mat3 v{};
        auto rays = cone_rays(f, static_cast<int>(c));
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k)
                v[static_cast<size_t>(i)][static_cast<size_t>(k)] =
                    rays[static_cast<size_t>(i)][static_cast<size_t>(k)];
        long long det = det3(v);
        if (det != 1 && det != -1) {
            regular = false;
            rdetail = "cone " + std::to_string(c) + " has determinant " + std::to_string(det);
        }
    }
    add("regular_cones", regular, rdetail);

    // Each 2-face (unordered ray pair within a cone) must lie in exactly two
    // maximal cones; together with the Euler count this pins down a
    // triangulation of the sphere.
    std::map<std::pair<int, int>, int> face_count;
    for (const auto& c : f.cones) {
        std::array<int, 3> ix = c;
        std::sort(ix.begin(), ix.end());
        ++face_count[{ix[0], ix[1]}];
        ++face_count[{ix[0], ix[2]}];
        ++face_count[{ix[1], ix[2]}];
    }
    bool faces_ok = true;
    std::string fdetail;
    for (const auto& [face, count] : face_count)
        if (count != 2) {
            faces_ok = false;
            fdetail = "face {" + std::to_string(face.first) + "," + std::to_string(face.second) +
                      "} lies in " + std::to_string(count) + " cones";
            break;
        }
    add("face_pairing", faces_ok, fdetail);

    long long euler = static_cast<long long>(f.rays.size()) -
                      static_cast<long long>(face_count.size()) +
                      static_cast<long long>(f.cones.size());
    add("euler_count", euler == 2,
        "rays - faces + cones = " + std::to_string(euler) + ", expected 2");

    bool sym = true;
    std::string sdetail;
    for (size_t i = 0; i < f.rays.size() && sym; ++i)
        if (!ray_set.count(negated(f.rays[i]))) {
            sym = false;
            sdetail = "ray " + std::to_string(i) + " has no negation";
        }
    if (sym) {
        for (size_t c = 0; c < f.cones.size() && sym; ++c)
            if (negation_partner(f, static_cast<int>(c)) < 0) {
                sym = false;
                sdetail = "cone " + std::to_string(c) + " has no negation";
            }
    }
    add("central_symmetry", sym, sdetail);

    return rep;
}

// --- frames ---------------------------------------------------------------------

int negation_partner(const Fan& f, int cone) {
    auto target = sorted_rays(f, cone);
    for (auto& r : target) r = negated(r);
    std::sort(target.begin(), target.end());
    for (size_t c = 0; c < f.cones.size(); ++c)
        if (sorted_rays(f, static_cast<int>(c)) == target) return static_cast<int>(c);
    return -1;
}

std::vector<ConeFrame> cone_frames(const Fan& f) {
    std::vector<ConeFrame> frames(f.cones.size());
    std::vector<bool> done(f.cones.size(), false);
    for (size_t c = 0; c < f.cones.size(); ++c) {
        if (done[c]) continue;
        int partner = negation_partner(f, static_cast<int>(c));
        if (partner < 0 || partner == static_cast<int>(c)) {
            frames[c] = frame_from_rows(f, static_cast<int>(c), sorted_rays(f, static_cast<int>(c)));
            done[c] = true;
            continue;
        }
        // Orbit pair: the representative gets lexicographically sorted rows,
        // the partner the negated rows in the same order.
        size_t p = static_cast<size_t>(partner);
        size_t rep = (sorted_rays(f, static_cast<int>(c)) <= sorted_rays(f, partner)) ? c : p;
        size_t other = (rep == c) ? p : c;
        frames[rep] = frame_from_rows(f, static_cast<int>(rep), sorted_rays(f, static_cast<int>(rep)));
        std::array<Ray, 3> neg_rows;
        for (int i = 0; i < 3; ++i)
            neg_rows[static_cast<size_t>(i)] = negated({frames[rep].V[static_cast<size_t>(i)][0],
                                                        frames[rep].V[static_cast<size_t>(i)][1],
                                                        frames[rep].V[static_cast<size_t>(i)][2]});
        frames[other] = frame_from_rows(f, static_cast<int>(other), neg_rows);
        done[c] = done[p] = true;
    }
    return frames;
}

OrientationReport orientation_check(const Fan& f) {
    OrientationReport rep;
    ValidationReport v = validate_fan(f);
    if (!v.all_pass()) {
        rep.pass = false;
        for (const auto& check : v.checks)
            if (!check.pass) {
                rep.detail = "fan validation failed at '" + check.name + "': " + check.detail;
                break;
            }
        return rep;
    }

    std::vector<ConeFrame> frames = cone_frames(f);
    for (const auto& fr : frames) {
        long long total = 0;
        for (const auto& row : fr.R)
            for (long long x : row) total += x;
        if (((total % 2) + 2) % 2 != 1) {
            rep.pass = false;
            rep.bad_cone = fr.cone;
            rep.detail = "cone " + std::to_string(fr.cone) +
                         ": entries of the frame inverse sum to the even number " +
                         std::to_string(total);
            return rep;
        }
    }

    auto row_parity = [](const ConeFrame& fr) {
        std::array<long long, 3> p{};
        for (int i = 0; i < 3; ++i) {
            long long s = 0;
            for (long long x : fr.R[static_cast<size_t>(i)]) s += x;
            p[static_cast<size_t>(i)] = ((s % 2) + 2) % 2;
        }
        return p;
    };
    auto p0 = row_parity(frames[0]);
    for (size_t c = 1; c < frames.size(); ++c) {
        auto pc = row_parity(frames[c]);
        for (int i = 0; i < 3; ++i)
            if (pc[static_cast<size_t>(i)] != p0[static_cast<size_t>(i)]) {
                rep.pass = false;
                rep.bad_pair = {0, static_cast<int>(c)};
                rep.detail = "cones 0 and " + std::to_string(c) + " differ in row " +
                             std::to_string(i) + " sum parity";
                return rep;
            }
    }

    rep.pass = true;
    return rep;
}

std::vector<Mat3> weight_matrices(const Fan& f) {
    OrientationReport rep = orientation_check(f);
    if (!rep.pass) throw fan_error("orientation criterion fails: " + rep.detail);
    std::vector<ConeFrame> frames = cone_frames(f);
    std::vector<Mat3> out(frames.size());
    for (size_t c = 0; c < frames.size(); ++c) {
        long long total = 0;
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k) {
                out[c][static_cast<size_t>(i)][static_cast<size_t>(k)] =
                    -2 * frames[c].R[static_cast<size_t>(i)][static_cast<size_t>(k)];
                total += out[c][static_cast<size_t>(i)][static_cast<size_t>(k)];
            }
        if (((total % 4) + 4) % 4 != 2)
            throw fan_error("internal: weight matrix total is not 2 mod 4 at cone " +
                            std::to_string(c));
    }
    return out;
}

std::vector<int> sigma_orbit_representatives(const Fan& f) {
    std::vector<int> reps;
    std::vector<bool> seen(f.cones.size(), false);
    for (size_t c = 0; c < f.cones.size(); ++c) {
        if (seen[c]) continue;
        int partner = negation_partner(f, static_cast<int>(c));
        if (partner < 0 || partner == static_cast<int>(c))
            throw fan_error("cone " + std::to_string(c) + " has no negation partner");
        size_t p = static_cast<size_t>(partner);
        seen[c] = seen[p] = true;
        size_t rep = (sorted_rays(f, static_cast<int>(c)) <= sorted_rays(f, partner)) ? c : p;
        reps.push_back(static_cast<int>(rep));
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

Fan star_subdivide(const Fan& f, int cone) {
    if (cone < 0 || static_cast<size_t>(cone) >= f.cones.size())
        throw fan_error("cone index " + std::to_string(cone) + " out of range");
    int partner = negation_partner(f, cone);
    if (partner < 0)
        throw fan_error("cone " + std::to_string(cone) + " has no negation partner to subdivide");

    auto rays = cone_rays(f, cone);
    Ray vsum = {rays[0][0] + rays[1][0] + rays[2][0], rays[0][1] + rays[1][1] + rays[2][1],
                rays[0][2] + rays[1][2] + rays[2][2]};
    Ray vneg = negated(vsum);
    for (const Ray& r : f.rays)
        if (r == vsum || r == vneg)
            throw fan_error("subdivision ray (" + std::to_string(vsum[0]) + "," +
                            std::to_string(vsum[1]) + "," + std::to_string(vsum[2]) +
                            ") is already present");

    Fan out;
    out.rays = f.rays;
    int new_plus = static_cast<int>(out.rays.size());
    out.rays.push_back(vsum);
    int new_minus = static_cast<int>(out.rays.size());
    out.rays.push_back(vneg);

    for (size_t c = 0; c < f.cones.size(); ++c)
        if (static_cast<int>(c) != cone && static_cast<int>(c) != partner)
            out.cones.push_back(f.cones[c]);
    const auto& ka = f.cones[static_cast<size_t>(cone)];
    const auto& kb = f.cones[static_cast<size_t>(partner)];
    for (int i = 0; i < 3; ++i) {
        std::array<int, 3> ca = ka, cb = kb;
        ca[static_cast<size_t>(i)] = new_plus;
        cb[static_cast<size_t>(i)] = new_minus;
        out.cones.push_back(ca);
        out.cones.push_back(cb);
    }
    return out;
}

}  // namespace qdt
