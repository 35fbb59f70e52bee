// Command-line front end: fan validation, DT invariants, vertex measures,
// blowups and the localization oracle, with reproducible structured output.
//
// Exit status: 0 success, 1 validation failure, 2 degenerate weights,
// 3 I/O or parse error.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qdt/dtinv.hpp"
#include "qdt/fan.hpp"
#include "qdt/series.hpp"
#include "qdt/version.hpp"
#include "qdt/vertex.hpp"
#include "qdt/witt.hpp"

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitDegenerate = 2;
constexpr int kExitIo = 3;

std::string fnv1a_digest(const std::string& bytes) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[20];
    snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw qdt::fan_parse_error("cannot open fan file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int default_jobs() {
    if (const char* env = std::getenv("QDT_JOBS")) {
        int j = std::atoi(env);
        if (j > 0) return j;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

struct Manifest {
    std::string command;
    std::string fan_path;    // empty when the command takes no fan
    std::string fan_digest;  // empty when the command takes no fan
    ordered_json parameters = ordered_json::object();

    ordered_json to_json() const {
        ordered_json m;
        m["tool"] = qdt::kToolName;
        m["version"] = qdt::kToolVersion;
        m["command"] = command;
        if (!fan_path.empty()) {
            m["fan"] = fan_path;
            m["fan_digest"] = fan_digest;
        }
        m["parameters"] = parameters;
        return m;
    }
};

void print_structured(const Manifest& manifest, ordered_json result) {
    ordered_json doc;
    doc["manifest"] = manifest.to_json();
    for (auto& [key, value] : result.items()) doc[key] = value;
    std::cout << doc.dump(2) << "\n";
}

void print_manifest_table(const Manifest& manifest) {
    std::cout << "# tool: " << qdt::kToolName << " " << qdt::kToolVersion << "\n";
    std::cout << "# command: " << manifest.command << "\n";
    if (!manifest.fan_path.empty())
        std::cout << "# fan: " << manifest.fan_path << " (" << manifest.fan_digest << ")\n";
    std::cout << "# parameters: " << manifest.parameters.dump() << "\n";
}

ordered_json series_json(const qdt::PowerSeries& s) {
    ordered_json arr = ordered_json::array();
    for (const auto& str : qdt::to_strings(s)) arr.push_back(str);
    return arr;
}

ordered_json weight_triple_json(const qdt::WeightTriple& s) {
    return ordered_json::array({s.s1, s.s2, s.s3});
}

void print_series_table(const qdt::PowerSeries& s) {
    for (int n = 0; n <= s.order(); ++n)
        std::cout << n << " -> " << qdt::to_string(s[n]) << "\n";
}

class Timer {
public:
    ~Timer() {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start_)
                      .count();
        std::cerr << "elapsed_ms=" << ms << "\n";
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct WeightOptions {
    std::vector<long long> weights;  // empty => auto
    std::optional<int> tau;

    qdt::EmbeddingParams resolve(const qdt::Fan& fan, int max_colength) const {
        if (!weights.empty()) {
            qdt::EmbeddingParams p{weights[0], weights[1], weights[2]};
            if (tau && p.tau_class() != *tau)
                throw std::invalid_argument("explicit weights are not in the requested tau class");
            return p;
        }
        return qdt::select_weights(fan, max_colength, tau);
    }
};

int cmd_check(const std::string& fan_path, const std::string& format) {
    Timer timer;
    std::string text = read_file(fan_path);
    qdt::Fan fan = qdt::parse_fan(text);
    Manifest manifest{"check", fan_path, fnv1a_digest(text), ordered_json::object()};

    qdt::ValidationReport vrep = qdt::validate_fan(fan);
    qdt::OrientationReport orep;
    if (vrep.all_pass()) orep = qdt::orientation_check(fan);

    bool pass = vrep.all_pass() && orep.pass;
    if (format == "structured") {
        ordered_json result;
        ordered_json checks = ordered_json::array();
        for (const auto& c : vrep.checks) {
            ordered_json jc;
            jc["name"] = c.name;
            jc["pass"] = c.pass;
            if (!c.pass) jc["detail"] = c.detail;
            checks.push_back(jc);
        }
        result["validation"] = checks;
        ordered_json jo;
        jo["pass"] = orep.pass;
        if (!vrep.all_pass()) jo["detail"] = "skipped: fan validation failed";
        else if (!orep.pass) {
            jo["detail"] = orep.detail;
            if (orep.bad_cone >= 0) jo["cone"] = orep.bad_cone;
        }
        result["orientation"] = jo;
        result["pass"] = pass;
        print_structured(manifest, result);
    } else {
        print_manifest_table(manifest);
        std::cout << vrep.summary();
        if (!vrep.all_pass())
            std::cout << "SKIP orientation: fan validation failed\n";
        else
            std::cout << (orep.pass ? "PASS orientation\n" : "FAIL orientation: " + orep.detail + "\n");
        std::cout << (pass ? "PASS\n" : "FAIL\n");
    }
    return pass ? 0 : kExitValidation;
}

int cmd_invariants(const std::string& fan_path, int max_order, const WeightOptions& wopts,
                   const std::string& format, int jobs) {
    Timer timer;
    std::string text = read_file(fan_path);
    qdt::Fan fan = qdt::parse_fan(text);
    if (max_order % 2 != 0) {
        std::cerr << "warning: odd max order " << max_order << " rounded down to "
                  << max_order - 1 << "\n";
        --max_order;
    }
    if (max_order < 2) throw std::invalid_argument("max order must be >= 2");

    Manifest manifest{"invariants", fan_path, fnv1a_digest(text), ordered_json::object()};
    manifest.parameters["max_order"] = max_order;

    qdt::EmbeddingParams params = wopts.resolve(fan, max_order / 2);
    manifest.parameters["weights"] = ordered_json::array({params.a, params.b, params.c});
    manifest.parameters["weights_mode"] = wopts.weights.empty() ? "auto" : "explicit";
    if (wopts.tau) manifest.parameters["tau"] = *wopts.tau;

    qdt::DTReport rep = qdt::quadratic_dt_series(fan, params, max_order, jobs);

    if (format == "structured") {
        ordered_json result;
        result["series"] = series_json(rep.series);
        result["exponent"] = qdt::to_string(rep.exponent);
        result["bott_c3"] = qdt::to_string(rep.bott_c3);
        ordered_json w;
        w["a"] = rep.weights.a;
        w["b"] = rep.weights.b;
        w["c"] = rep.weights.c;
        w["tau"] = rep.weights.tau_class();
        result["weights"] = w;
        result["representatives"] = rep.representatives;
        ordered_json cw = ordered_json::array();
        for (const auto& s : rep.rep_weights) cw.push_back(weight_triple_json(s));
        result["cone_weights"] = cw;
        print_structured(manifest, result);
    } else {
        print_manifest_table(manifest);
        print_series_table(rep.series);
        std::cout << "exponent " << qdt::to_string(rep.exponent) << "\n";
        std::cout << "bott_c3 " << qdt::to_string(rep.bott_c3) << "\n";
    }
    return 0;
}

int cmd_vertex(const std::vector<long long>& s_in, int max_order, bool classical,
               const std::string& format, int jobs) {
    Timer timer;
    qdt::WeightTriple s{s_in[0], s_in[1], s_in[2]};
    Manifest manifest{"vertex", "", "", ordered_json::object()};
    manifest.parameters["weights"] = ordered_json::array({s.s1, s.s2, s.s3});
    manifest.parameters["max_order"] = max_order;
    manifest.parameters["classical"] = classical;

    qdt::PowerSeries series = [&]() {
        if (classical) return qdt::vertex_measure_classical(s, max_order, jobs);
        int order = max_order;
        if (order % 2 != 0) {
            std::cerr << "warning: odd max order " << order << " rounded down to " << order - 1
                      << "\n";
            --order;
        }
        return qdt::vertex_measure_quadratic(s, order, jobs);
    }();

    if (format == "structured") {
        ordered_json result;
        result["series"] = series_json(series);
        print_structured(manifest, result);
    } else {
        print_manifest_table(manifest);
        print_series_table(series);
    }
    return 0;
}

int cmd_blowup(const std::string& fan_path, int orbit, const std::string& out_path) {
    Timer timer;
    std::string text = read_file(fan_path);
    qdt::Fan fan = qdt::parse_fan(text);
    std::vector<int> reps = qdt::sigma_orbit_representatives(fan);
    if (orbit < 0 || static_cast<size_t>(orbit) >= reps.size())
        throw qdt::fan_error("orbit index " + std::to_string(orbit) + " out of range (0.." +
                             std::to_string(reps.size() - 1) + ")");
    qdt::Fan out = qdt::star_subdivide(fan, reps[static_cast<size_t>(orbit)]);
    qdt::ValidationReport vrep = qdt::validate_fan(out);
    if (!vrep.all_pass()) throw qdt::fan_error("subdivided fan fails validation");

    std::ofstream os(out_path);
    if (!os) throw qdt::fan_parse_error("cannot write fan file '" + out_path + "'");
    os << qdt::serialize_fan(out);
    std::cerr << "wrote " << out_path << " (" << out.rays.size() << " rays, " << out.cones.size()
              << " cones)\n";
    return 0;
}

int cmd_oracle(const std::string& fan_path, int n, const WeightOptions& wopts,
               const std::string& format, int jobs) {
    Timer timer;
    std::string text = read_file(fan_path);
    qdt::Fan fan = qdt::parse_fan(text);
    if (n < 1) throw std::invalid_argument("n must be >= 1");

    Manifest manifest{"oracle", fan_path, fnv1a_digest(text), ordered_json::object()};
    manifest.parameters["n"] = n;

    int colength = (n + 1) / 2;
    qdt::EmbeddingParams params = wopts.resolve(fan, colength);
    manifest.parameters["weights"] = ordered_json::array({params.a, params.b, params.c});
    manifest.parameters["weights_mode"] = wopts.weights.empty() ? "auto" : "explicit";

    qdt::Rational value = qdt::localization_oracle(fan, params, n, jobs);
    int order = n + (n % 2);
    order = std::max(order, 2);
    qdt::DTReport rep = qdt::quadratic_dt_series(fan, params, order, jobs);
    qdt::Rational coeff = rep.series[n];
    bool match = (value == coeff);

    if (format == "structured") {
        ordered_json result;
        result["n"] = n;
        result["oracle"] = qdt::to_string(value);
        result["series_coefficient"] = qdt::to_string(coeff);
        result["match"] = match;
        print_structured(manifest, result);
    } else {
        print_manifest_table(manifest);
        std::cout << "oracle " << qdt::to_string(value) << "\n";
        std::cout << "series " << qdt::to_string(coeff) << "\n";
        std::cout << (match ? "MATCH\n" : "MISMATCH\n");
    }
    return match ? 0 : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equivariant quadratic Donaldson-Thomas series for toric threefolds"};
    app.set_version_flag("--version", std::string(qdt::kToolVersion));
    int jobs = default_jobs();
    app.add_option("--jobs", jobs, "worker threads (default: cores, or QDT_JOBS)");

    std::string fan_path, out_path, format = "table";
    int max_order = 8, orbit = 0, n = 2;
    std::vector<long long> weights, svec;
    std::optional<int> tau;
    bool auto_weights = false, classical = false;

    auto add_format = [&](CLI::App* cmd) {
        cmd->fallthrough();  // lets --jobs appear after the subcommand
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"table", "structured"}));
    };

    CLI::App* check = app.add_subcommand("check", "validate a fan and its orientation data");
    check->add_option("fan", fan_path, "fan file")->required();
    add_format(check);

    CLI::App* inv = app.add_subcommand("invariants", "quadratic DT generating series");
    inv->add_option("fan", fan_path, "fan file")->required();
    inv->add_option("--max-order", max_order, "truncation order (even)");
    inv->add_option("--weights", weights, "embedding exponents a b c")->expected(3);
    inv->add_flag("--auto", auto_weights, "search weights automatically (default)");
    auto* tau_opt_inv = inv->add_option("--tau", "tau class 0..3")->check(CLI::Range(0, 3));
    add_format(inv);

    CLI::App* vertex = app.add_subcommand("vertex", "equivariant vertex measure at fixed weights");
    vertex->add_option("--weights", svec, "torus weights s1 s2 s3")->expected(3)->required();
    vertex->add_option("--max-order", max_order, "truncation order");
    vertex->add_flag("--classical", classical, "classical measure (no sign, q-grading)");
    add_format(vertex);

    CLI::App* blowup = app.add_subcommand("blowup", "equivariant star subdivision at an orbit");
    blowup->fallthrough();
    blowup->add_option("fan", fan_path, "fan file")->required();
    blowup->add_option("--cone-orbit", orbit, "orbit index (into the representative list)")
        ->required();
    blowup->add_option("--out", out_path, "output fan file")->required();

    CLI::App* oracle = app.add_subcommand("oracle", "localization sum vs. series coefficient");
    oracle->add_option("fan", fan_path, "fan file")->required();
    oracle->add_option("--n", n, "total colength")->required();
    oracle->add_option("--weights", weights, "embedding exponents a b c")->expected(3);
    oracle->add_flag("--auto", auto_weights, "search weights automatically (default)");
    add_format(oracle);

    app.require_subcommand(1);
    CLI11_PARSE(app, argc, argv);

    if (tau_opt_inv->count() > 0) tau = static_cast<int>(tau_opt_inv->as<int>());

    try {
        WeightOptions wopts{weights, tau};
        if (check->parsed()) return cmd_check(fan_path, format);
        if (inv->parsed()) return cmd_invariants(fan_path, max_order, wopts, format, jobs);
        if (vertex->parsed()) return cmd_vertex(svec, max_order, classical, format, jobs);
        if (blowup->parsed()) return cmd_blowup(fan_path, orbit, out_path);
        if (oracle->parsed()) return cmd_oracle(fan_path, n, wopts, format, jobs);
    } catch (const qdt::degenerate_weights& e) {
        ordered_json err;
        err["error"] = "degenerate_weights";
        err["detail"] = e.what();
        err["weights"] = ordered_json::array({e.s.s1, e.s.s2, e.s.s3});
        err["partition"] = e.partition.to_string();
        if (e.cone >= 0) err["cone"] = e.cone;
        err["hint"] = "re-run weight selection with a larger colength bound";
        std::cout << err.dump(2) << "\n";
        return kExitDegenerate;
    } catch (const qdt::fan_parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const qdt::fan_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return 0;
}
