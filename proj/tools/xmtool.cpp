/*
 * Command-line surface over the library: enumeration of highest weight
 * words and rigged configurations, the statistic-preserving bijection in
 * both directions, one-dimensional sums, fermionic sums, spin-1/2 chain
 * state counting, and sweep verifiers for the sum identity and the
 * bijection itself.
 *
 * Exit codes: 0 success, 1 a verification found a counterexample,
 * 2 usage or domain errors. Machine output goes to stdout, diagnostics to
 * stderr. Identical invocations print byte-identical output regardless of
 * --jobs.
 */

#include "xm/bijection.hpp"
#include "xm/energy.hpp"
#include "xm/json_io.hpp"
#include "xm/parallel.hpp"
#include "xm/xxx_counting.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using nlohmann::json;
using namespace xm;

struct SpecOptions {
    std::string family = "A";
    int rank = 1;
    int length = 0;
    std::string weight;
};

CartanType parse_type(const SpecOptions& o) {
    if (o.family == "A") return type_a(o.rank);
    if (o.family == "D") return type_d(o.rank);
    throw std::invalid_argument("unknown type '" + o.family + "' (expected A or D)");
}

json load_json(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot open input file '" + file + "'");
    json j;
    in >> j;
    return j;
}

void add_spec_flags(CLI::App* cmd, SpecOptions& o, bool with_weight = true) {
    cmd->add_option("--type", o.family, "Cartan family, A or D")->required();
    cmd->add_option("--rank", o.rank, "classical rank n")->required();
    cmd->add_option("--length", o.length, "tensor power L")->required();
    if (with_weight)
        cmd->add_option("--weight", o.weight,
                        "weight: epsilon coordinates like 3,2 or fundamental "
                        "syntax like L3+L4, 2L3");
}

std::string format_weight_results(bool json_mode, const std::vector<json>& rows) {
    if (!json_mode) {
        std::string out;
        for (const json& row : rows) out += row.at("line").get<std::string>() + "\n";
        return out;
    }
    json arr = json::array();
    for (json row : rows) {
        row.erase("line");
        arr.push_back(std::move(row));
    }
    return arr.dump() + "\n";
}

// ---- verify-xm ------------------------------------------------------------

json check_xm_weight(const TensorSpec& spec, const Weight& lambda) {
    const Laurent x = one_dim_sum(spec, lambda);
    const Laurent m = fermionic_M(spec, lambda);
    const bool ok = x.inverted_q() == m;
    std::ostringstream line;
    if (ok) {
        line << "PASS weight=" << weight_str(lambda) << " X(q^-1) = M = " << m.str();
    } else {
        line << "FAIL weight=" << weight_str(lambda) << " X(q^-1) = " << x.inverted_q().str()
             << " but M = " << m.str();
    }
    return json{{"weight", lambda.coords},
                {"ok", ok},
                {"X_inverted", to_json(x.inverted_q())},
                {"M", to_json(m)},
                {"line", line.str()}};
}

// ---- verify-bijection ------------------------------------------------------

json check_bijection_weight(const TensorSpec& spec, const Weight& lambda) {
    const BijectionTable table(spec, lambda);
    const auto paths = enumerate_paths(spec, lambda);

    std::string failure;
    const RiggedConfiguration* witness = nullptr;

    if (table.rcs().size() != paths.size()) failure = "cardinality mismatch";

    std::set<std::vector<Letter>> images;
    for (size_t k = 0; k < table.rcs().size() && failure.empty(); ++k) {
        const Path& image = table.images()[k];
        const RiggedConfiguration& rc = table.rcs()[k];
        if (!images.insert(image.factors).second) {
            failure = "phi_tilde is not injective";
            witness = &rc;
        } else if (!is_classically_highest(image) || !(path_weight(image) == lambda)) {
            failure = "image is not a highest weight path of the right weight";
            witness = &rc;
        } else if (cocharge(rc) != -energy(image)) {
            failure = "cocharge does not match -energy";
            witness = &rc;
        } else if (!(*table.rc_for(image) == rc)) {
            failure = "round trip through the inverse table failed";
            witness = &rc;
        }
    }
    for (const Path& p : paths) {
        if (!failure.empty()) break;
        if (table.rc_for(p) == nullptr) {
            failure = "highest weight path missing from the image: " + path_str(p);
        }
    }

    std::ostringstream line;
    json row{{"weight", lambda.coords},
             {"ok", failure.empty()},
             {"paths", paths.size()},
             {"rigged", table.rcs().size()}};
    if (failure.empty()) {
        line << "PASS weight=" << weight_str(lambda) << " bijection on " << paths.size()
             << " elements, statistics preserved";
    } else {
        line << "FAIL weight=" << weight_str(lambda) << " " << failure;
        row["error"] = failure;
        if (witness) {
            row["offender"] = to_json(*witness);
            line << "\n" << to_json(*witness).dump();
        }
    }
    row["line"] = line.str();
    return row;
}

// ---- per-verb drivers -------------------------------------------------------

int run_enumerate_paths(const SpecOptions& o, bool json_mode) {
    const CartanType t = parse_type(o);
    if (o.weight.empty()) throw std::invalid_argument("--weight is required");
    const auto paths = enumerate_paths({t, o.length}, parse_weight(o.weight, t));
    if (json_mode) {
        json arr = json::array();
        for (const Path& p : paths) arr.push_back(to_json(p));
        std::cout << arr.dump() << "\n";
    } else {
        for (const Path& p : paths) std::cout << path_str(p) << "\n";
        std::cerr << paths.size() << " classically highest weight paths\n";
    }
    return 0;
}

int run_enumerate_rc(const SpecOptions& o, bool json_mode) {
    const CartanType t = parse_type(o);
    if (o.weight.empty()) throw std::invalid_argument("--weight is required");
    const auto rcs = enumerate_rc({t, o.length}, parse_weight(o.weight, t));
    if (json_mode) {
        json arr = json::array();
        for (const auto& rc : rcs) arr.push_back(to_json(rc));
        std::cout << arr.dump() << "\n";
    } else {
        for (const auto& rc : rcs)
            std::cout << rc_str(rc) << "  cc=" << cocharge(rc) << "\n";
        std::cerr << rcs.size() << " rigged configurations\n";
    }
    return 0;
}

int run_rc_to_path(const std::string& input, bool json_mode, bool trace_on) {
    const RiggedConfiguration rc = rc_from_json(load_json(input));
    std::vector<DeltaStep> steps;
    const Path p = phi_tilde(rc, trace_on ? &steps : nullptr);
    if (json_mode) {
        json out = to_json(p);
        if (trace_on) {
            json tr = json::array();
            for (const DeltaStep& s : steps)
                tr.push_back(json{{"rank", letter_str(s.rank)}, {"rest", to_json(s.rest)}});
            out = json{{"path", out}, {"trace", tr}};
        }
        std::cout << out.dump() << "\n";
    } else {
        if (trace_on) {
            std::cout << "complemented: " << rc_str(complement(rc), true) << "\n";
            for (const DeltaStep& s : steps)
                std::cout << "rank " << letter_str(s.rank) << " -> " << rc_str(s.rest, true)
                          << "\n";
        }
        std::cout << path_str(p) << "\n";
        std::cerr << "cocharge=" << cocharge(rc) << " energy=" << energy(p) << "\n";
    }
    return 0;
}

int run_path_to_rc(const std::string& input, bool json_mode) {
    const Path p = path_from_json(load_json(input));
    const RiggedConfiguration rc = rc_from_path(p);
    if (json_mode)
        std::cout << to_json(rc).dump() << "\n";
    else
        std::cout << rc_str(rc) << "\n";
    return 0;
}

int run_sum(const SpecOptions& o, bool json_mode, bool fermionic) {
    const CartanType t = parse_type(o);
    if (o.weight.empty()) throw std::invalid_argument("--weight is required");
    const Weight lambda = parse_weight(o.weight, t);
    const Laurent value =
        fermionic ? fermionic_M({t, o.length}, lambda) : one_dim_sum({t, o.length}, lambda);
    if (json_mode) {
        std::cout << to_json(value).dump() << "\n";
    } else {
        std::cout << value.str() << "\n";
        std::cerr << (fermionic ? "M(B,lambda;q), exponents >= 0\n"
                                : "X(B,lambda;q), energy convention E <= 0\n");
    }
    return 0;
}

int run_verify(const SpecOptions& o, bool json_mode, int jobs, bool bijection) {
    const CartanType t = parse_type(o);
    const TensorSpec spec{t, o.length};
    std::vector<Weight> weights;
    if (!o.weight.empty())
        weights.push_back(parse_weight(o.weight, t));
    else
        weights = dominant_weights(t, o.length);
    const auto rows = parallel_map<json>(
        jobs, static_cast<int>(weights.size()), [&](int k) {
            return bijection ? check_bijection_weight(spec, weights[static_cast<size_t>(k)])
                             : check_xm_weight(spec, weights[static_cast<size_t>(k)]);
        });
    std::cout << format_weight_results(json_mode, rows);
    int failures = 0;
    for (const json& row : rows) failures += row.at("ok").get<bool>() ? 0 : 1;
    if (failures > 0) {
        std::cerr << failures << " of " << rows.size() << " weights failed\n";
        return 1;
    }
    std::cerr << "all " << rows.size() << " weights verified\n";
    return 0;
}

int run_xxx_count(int sites, int down) {
    std::cout << count_total(sites, down) << "\n";
    return 0;
}

int run_xxx_psi(const std::string& input, bool json_mode, bool trace_on) {
    const Path p = path_from_json(load_json(input));
    std::vector<RiggedConfiguration> steps;
    const RiggedConfiguration rc = psi_su2(p, trace_on ? &steps : nullptr);
    if (json_mode) {
        json out = to_json(rc);
        if (trace_on) {
            json tr = json::array();
            for (const auto& s : steps) tr.push_back(to_json(s));
            out = json{{"rc", out}, {"trace", tr}};
        }
        std::cout << out.dump() << "\n";
    } else {
        if (trace_on) {
            const int L = static_cast<int>(p.factors.size());
            for (size_t k = 0; k < steps.size(); ++k) {
                std::string prefix;
                for (int j = L - 1 - static_cast<int>(k); j < L; ++j)
                    prefix += letter_str(p.factors[static_cast<size_t>(j)]);
                std::cout << prefix << ": " << rc_str(steps[k], true) << "\n";
            }
        }
        std::cout << rc_str(rc) << "\n";
        std::cerr << "cocharge=" << cocharge(rc) << " energy_su2=" << energy_su2(p) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rigged configurations, crystal paths, and their statistics"};
    app.require_subcommand(1);

    SpecOptions opts;
    std::string format = "text";
    std::string input;
    int jobs = 1;
    bool trace_on = false;
    int sites = 0, down = 0;

    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    auto* cmd_paths = app.add_subcommand("enumerate-paths",
                                         "classically highest weight paths of a weight");
    add_spec_flags(cmd_paths, opts);
    add_format(cmd_paths);

    auto* cmd_rc = app.add_subcommand("enumerate-rc", "rigged configurations of a weight");
    add_spec_flags(cmd_rc, opts);
    add_format(cmd_rc);

    auto* cmd_r2p = app.add_subcommand("rc-to-path",
                                       "map a rigged configuration to its path (label "
                                       "complementation followed by box removal)");
    cmd_r2p->add_option("--input", input, "JSON rigged configuration")->required();
    cmd_r2p->add_flag("--trace", trace_on, "print the step table");
    add_format(cmd_r2p);

    auto* cmd_p2r = app.add_subcommand("path-to-rc",
                                       "map a highest weight path back to its rigged "
                                       "configuration (inverse lookup)");
    cmd_p2r->add_option("--input", input, "JSON path")->required();
    add_format(cmd_p2r);

    auto* cmd_xsum = app.add_subcommand("xsum", "one-dimensional sum X(B,lambda;q)");
    add_spec_flags(cmd_xsum, opts);
    add_format(cmd_xsum);

    auto* cmd_msum = app.add_subcommand("msum", "fermionic sum M(B,lambda;q)");
    add_spec_flags(cmd_msum, opts);
    add_format(cmd_msum);

    auto* cmd_vxm = app.add_subcommand("verify-xm",
                                       "check X(B,lambda;q^-1) = M(B,lambda;q); sweeps all "
                                       "reachable dominant weights when --weight is absent");
    add_spec_flags(cmd_vxm, opts);
    cmd_vxm->add_option("--jobs", jobs, "parallel weight checks");
    add_format(cmd_vxm);

    auto* cmd_vbij = app.add_subcommand("verify-bijection",
                                        "check the statistic-preserving bijection per weight");
    add_spec_flags(cmd_vbij, opts);
    cmd_vbij->add_option("--jobs", jobs, "parallel weight checks");
    add_format(cmd_vbij);

    auto* cmd_count = app.add_subcommand("xxx-count", "spin-1/2 chain highest weight state count");
    cmd_count->add_option("--sites", sites, "number of sites N")->required();
    cmd_count->add_option("--down", down, "number of down spins n")->required();

    auto* cmd_psi = app.add_subcommand("xxx-psi",
                                       "build the rigged configuration of a two-letter "
                                       "highest weight word by string insertion");
    cmd_psi->add_option("--input", input, "JSON path")->required();
    cmd_psi->add_flag("--trace", trace_on, "print the insertion steps");
    add_format(cmd_psi);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const bool json_mode = format == "json";
    try {
        if (cmd_paths->parsed()) return run_enumerate_paths(opts, json_mode);
        if (cmd_rc->parsed()) return run_enumerate_rc(opts, json_mode);
        if (cmd_r2p->parsed()) return run_rc_to_path(input, json_mode, trace_on);
        if (cmd_p2r->parsed()) return run_path_to_rc(input, json_mode);
        if (cmd_xsum->parsed()) return run_sum(opts, json_mode, false);
        if (cmd_msum->parsed()) return run_sum(opts, json_mode, true);
        if (cmd_vxm->parsed()) return run_verify(opts, json_mode, jobs, false);
        if (cmd_vbij->parsed()) return run_verify(opts, json_mode, jobs, true);
        if (cmd_count->parsed()) return run_xxx_count(sites, down);
        if (cmd_psi->parsed()) return run_xxx_psi(input, json_mode, trace_on);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
