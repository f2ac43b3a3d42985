// Command-line front end: build parity subgroup specs, verify ground states,
// run exact censuses, export volumes as DOT.
//
// Exit codes: 0 success/pass, 1 usage or input error, 2 verification failed,
// 3 closed-form comparison disagreement (census only).

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cayleygs/census.hpp"
#include "cayleygs/json_io.hpp"

namespace {

using cayleygs::ordered_json;

std::string utc_timestamp() {
    auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

ordered_json make_manifest(const std::string& subcommand, ordered_json parameters,
                           std::vector<std::string> inputs, const std::string& output) {
    ordered_json m;
    m["subcommand"] = subcommand;
    m["parameters"] = std::move(parameters);
    m["inputs"] = std::move(inputs);
    m["output"] = output.empty() ? "-" : output;
    m["deterministic"] = true;
    m["timestamp"] = utc_timestamp();
    return m;
}

void emit(const ordered_json& j, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(output_path);
    if (!out) {
        throw cayleygs::Error("cannot write '" + output_path + "'");
    }
    out << j.dump(2) << "\n";
}

std::vector<uint32_t> parse_vectors_csv(const std::string& csv, int m) {
    std::vector<uint32_t> vs;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        vs.push_back(cayleygs::parse_label(item, m));
    }
    return vs;
}

int run_subgroup(int k, int m, const std::string& vectors_csv, int region,
                 const std::string& output) {
    cayleygs::SubgroupSpec spec =
        vectors_csv.empty()
            ? (k == (1 << (m - 1)) - 1 ? cayleygs::build_a_sets(k, m)
                                       : cayleygs::generalize_a_sets(k, m))
            : cayleygs::generalize_a_sets(k, m, parse_vectors_csv(vectors_csv, m));
    cayleygs::GammaReport gamma = cayleygs::gamma_check(spec, region);

    ordered_json params_echo;
    params_echo["k"] = k;
    params_echo["m"] = m;
    if (!vectors_csv.empty()) {
        params_echo["vectors"] = vectors_csv;
    }
    params_echo["region"] = region;

    ordered_json j;
    j["manifest"] = make_manifest("subgroup", std::move(params_echo), {}, output);
    ordered_json body = cayleygs::spec_to_json(spec);
    for (auto& [key, value] : body.items()) {
        j[key] = value;
    }
    ordered_json vecs = ordered_json::array();
    for (uint32_t v : spec.generator_vectors()) {
        vecs.push_back(cayleygs::format_label(v, m));
    }
    j["vectors"] = std::move(vecs);
    j["valid"] = spec.valid();
    j["full_index"] = spec.full_index();
    ordered_json gj;
    gj["pass"] = gamma.pass;
    gj["region_radius"] = region;
    gj["witness"] = gamma.witness ? ordered_json(gamma.witness->str()) : ordered_json(nullptr);
    j["gamma"] = std::move(gj);
    emit(j, output);
    return spec.valid() && gamma.pass ? 0 : 1;
}

struct CheckInputs {
    cayleygs::ModelParams params;
    int n;
    cayleygs::SpinConfiguration config;
    std::vector<std::string> files;
};

CheckInputs load_check_inputs(const std::string& config_path, const std::string& spec_path,
                              const std::string& coloring_path, std::optional<int> n_flag,
                              std::optional<int> q_flag, int r_flag,
                              const std::string& j_flag) {
    if (!config_path.empty()) {
        cayleygs::LoadedConfig loaded =
            cayleygs::config_from_json(cayleygs::load_json_file(config_path));
        int n = n_flag.value_or(loaded.n);
        cayleygs::ModelParams params = loaded.params;
        if (!j_flag.empty()) {
            params = cayleygs::ModelParams(params.tree.k, params.r, params.q,
                                           cayleygs::Rational::parse(j_flag));
        }
        return CheckInputs{params, n, std::move(loaded.config), {config_path}};
    }
    if (spec_path.empty() || coloring_path.empty()) {
        throw cayleygs::Error("check needs either --config or both --spec and --coloring");
    }
    if (!q_flag || !n_flag || j_flag.empty()) {
        throw cayleygs::Error("check with --spec/--coloring needs --q, --n and --J");
    }
    cayleygs::SubgroupSpec spec = cayleygs::spec_from_json(cayleygs::load_json_file(spec_path));
    cayleygs::CosetColoring coloring =
        cayleygs::coloring_from_json(cayleygs::load_json_file(coloring_path));
    cayleygs::ModelParams params(spec.k(), r_flag, *q_flag, cayleygs::Rational::parse(j_flag));
    cayleygs::SpinConfiguration config =
        cayleygs::periodic_config(coloring, spec, *n_flag, *q_flag);
    return CheckInputs{params, *n_flag, std::move(config), {spec_path, coloring_path}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact ground-state toolkit for finite-range models on Cayley trees"};
    app.require_subcommand(1);
    app.fallthrough();

    // subgroup
    auto* sub = app.add_subcommand("subgroup", "build a parity subgroup spec and check it");
    int sg_k = 0, sg_m = 0, sg_region = 4;
    std::string sg_vectors, sg_output;
    sub->add_option("--k", sg_k, "tree order")->required();
    sub->add_option("--m", sg_m, "number of parity sets (index 2^m)")->required();
    sub->add_option("--vectors", sg_vectors, "comma-separated m-bit generator vectors");
    sub->add_option("--region", sg_region, "radius of the gamma-check scan");
    sub->add_option("--output", sg_output, "output JSON path (default stdout)");

    // check
    auto* chk = app.add_subcommand("check", "verify a configuration against per-ball targets");
    std::string chk_config, chk_spec, chk_coloring, chk_J, chk_output;
    int chk_n = 0, chk_q = 0, chk_r = 2;
    chk->add_option("--config", chk_config, "configuration JSON file");
    chk->add_option("--spec", chk_spec, "subgroup spec JSON file");
    chk->add_option("--coloring", chk_coloring, "coset coloring JSON file");
    auto* chk_n_opt = chk->add_option("--n", chk_n, "volume radius");
    auto* chk_q_opt = chk->add_option("--q", chk_q, "spin count (with --spec/--coloring)");
    chk->add_option("--r", chk_r, "interaction range (with --spec/--coloring)");
    chk->add_option("--J", chk_J, "coupling, rational string");
    chk->add_option("--output", chk_output, "output JSON path (default stdout)");

    // census
    auto* census = app.add_subcommand("census", "exact ground-state counting");
    census->require_subcommand(1);
    uint64_t budget = cayleygs::CensusOptions{}.budget;
    int workers = 1;
    census->add_option("--budget", budget, "max enumerated states");
    census->add_option("--workers", workers, "worker threads (must not affect results)");

    auto* cex = census->add_subcommand("exhaustive", "enumerate all configurations on V_n");
    int ce_k = 0, ce_r = 2, ce_q = 0, ce_n = 0;
    std::string ce_J = "1", ce_output;
    cex->add_option("--k", ce_k, "tree order")->required();
    cex->add_option("--r", ce_r, "interaction range");
    cex->add_option("--q", ce_q, "spin count")->required();
    cex->add_option("--n", ce_n, "volume radius")->required();
    cex->add_option("--J", ce_J, "coupling, rational string");
    cex->add_option("--output", ce_output, "output JSON path (default stdout)");

    auto* cper = census->add_subcommand("periodic", "count coset colorings that are ground states (r = 2)");
    std::string cp_spec, cp_J = "-1", cp_output;
    int cp_q = 0;
    cper->add_option("--spec", cp_spec, "subgroup spec JSON file")->required();
    cper->add_option("--q", cp_q, "spin count")->required();
    cper->add_option("--J", cp_J, "coupling, rational string (sign selects the target)");
    cper->add_option("--output", cp_output, "output JSON path (default stdout)");

    // export
    auto* exp = app.add_subcommand("export", "write the volume as a DOT graph");
    std::string ex_config, ex_output;
    int ex_n = 0, ex_k = 0;
    exp->add_option("--config", ex_config, "configuration JSON file (colors vertices by spin)");
    auto* ex_k_opt = exp->add_option("--k", ex_k, "tree order (when no --config is given)");
    auto* ex_n_opt = exp->add_option("--n", ex_n, "volume radius");
    exp->add_option("--output", ex_output, "output DOT path (default stdout)");

    // ball
    auto* bl = app.add_subcommand("ball", "list the ball around a center word");
    int bl_k = 0, bl_radius = 0;
    std::string bl_center = "e", bl_output;
    bl->add_option("--k", bl_k, "tree order")->required();
    bl->add_option("--center", bl_center, "center word, e.g. \"1 2\"");
    bl->add_option("--radius", bl_radius, "ball radius")->required();
    bl->add_option("--output", bl_output, "output JSON path (default stdout)");

    // energy
    auto* en = app.add_subcommand("energy", "exact Hamiltonian of a configuration");
    std::string en_config, en_output;
    int en_n = 0;
    en->add_option("--config", en_config, "configuration JSON file")->required();
    auto* en_n_opt = en->add_option("--n", en_n, "volume radius override");
    en->add_option("--output", en_output, "output JSON path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (sub->parsed()) {
            return run_subgroup(sg_k, sg_m, sg_vectors, sg_region, sg_output);
        }

        if (chk->parsed()) {
            std::optional<int> n_flag =
                chk_n_opt->count() ? std::optional<int>(chk_n) : std::nullopt;
            std::optional<int> q_flag =
                chk_q_opt->count() ? std::optional<int>(chk_q) : std::nullopt;
            CheckInputs in = load_check_inputs(chk_config, chk_spec, chk_coloring, n_flag, q_flag,
                                               chk_r, chk_J);
            cayleygs::GroundStateReport report =
                cayleygs::is_ground_state(in.config, in.params, in.n);
            ordered_json params_echo;
            params_echo["k"] = in.params.tree.k;
            params_echo["r"] = in.params.r;
            params_echo["q"] = in.params.q;
            params_echo["J"] = in.params.J.str();
            params_echo["n"] = in.n;
            ordered_json j;
            j["manifest"] = make_manifest("check", std::move(params_echo), in.files, chk_output);
            ordered_json body = cayleygs::ground_state_report_to_json(report);
            for (auto& [key, value] : body.items()) {
                j[key] = value;
            }
            emit(j, chk_output);
            return report.pass ? 0 : 2;
        }

        if (cex->parsed() || cper->parsed()) {
            cayleygs::CensusOptions opts;
            opts.budget = budget;
            opts.workers = workers;
            cayleygs::CensusResult result;
            ordered_json params_echo;
            std::vector<std::string> inputs;
            std::string output;
            if (cex->parsed()) {
                cayleygs::ModelParams params(ce_k, ce_r, ce_q, cayleygs::Rational::parse(ce_J));
                result = cayleygs::exhaustive_min_energy(params, ce_n, opts);
                params_echo["k"] = ce_k;
                params_echo["r"] = ce_r;
                params_echo["q"] = ce_q;
                params_echo["n"] = ce_n;
                params_echo["J"] = ce_J;
                output = ce_output;
            } else {
                cayleygs::SubgroupSpec spec =
                    cayleygs::spec_from_json(cayleygs::load_json_file(cp_spec));
                result = cayleygs::count_periodic_ground_states(
                    spec, cp_q, cayleygs::Rational::parse(cp_J), opts);
                params_echo["spec"] = cp_spec;
                params_echo["q"] = cp_q;
                params_echo["J"] = cp_J;
                inputs.push_back(cp_spec);
                output = cp_output;
            }
            params_echo["budget"] = budget;
            params_echo["workers"] = workers;
            ordered_json j;
            j["manifest"] = make_manifest(cex->parsed() ? "census exhaustive" : "census periodic",
                                          std::move(params_echo), inputs, output);
            ordered_json body = cayleygs::census_to_json(result);
            for (auto& [key, value] : body.items()) {
                j[key] = value;
            }
            emit(j, output);
            if (result.formula_agreement && !*result.formula_agreement) {
                return 3;
            }
            return result.all_checks_agree() ? 0 : 2;
        }

        if (exp->parsed()) {
            std::ostringstream dot;
            if (!ex_config.empty()) {
                cayleygs::LoadedConfig loaded =
                    cayleygs::config_from_json(cayleygs::load_json_file(ex_config));
                int n = ex_n_opt->count() ? ex_n : loaded.n;
                cayleygs::write_dot(dot, loaded.params.tree, n, &loaded.config);
            } else {
                if (!ex_k_opt->count() || !ex_n_opt->count()) {
                    throw cayleygs::Error("export needs --config, or --k and --n");
                }
                cayleygs::TreeParams tree(ex_k);
                cayleygs::write_dot(dot, tree, ex_n, nullptr);
            }
            if (ex_output.empty()) {
                std::cout << dot.str();
            } else {
                std::ofstream out(ex_output);
                if (!out) {
                    throw cayleygs::Error("cannot write '" + ex_output + "'");
                }
                out << dot.str();
            }
            return 0;
        }

        if (bl->parsed()) {
            cayleygs::TreeParams tree(bl_k);
            cayleygs::Word center = cayleygs::Word::parse(bl_center, tree);
            cayleygs::VertexSet b = cayleygs::ball(center, bl_radius, tree);
            ordered_json params_echo;
            params_echo["k"] = bl_k;
            params_echo["center"] = center.str();
            params_echo["radius"] = bl_radius;
            ordered_json j;
            j["manifest"] = make_manifest("ball", std::move(params_echo), {}, bl_output);
            j["center"] = center.str();
            j["radius"] = bl_radius;
            j["size"] = b.size();
            ordered_json verts = ordered_json::array();
            for (const cayleygs::Word& w : b) {
                verts.push_back(w.str());
            }
            j["vertices"] = std::move(verts);
            emit(j, bl_output);
            return 0;
        }

        if (en->parsed()) {
            cayleygs::LoadedConfig loaded =
                cayleygs::config_from_json(cayleygs::load_json_file(en_config));
            int n = en_n_opt->count() ? en_n : loaded.n;
            int64_t total = cayleygs::total_interaction(loaded.config, loaded.params, n);
            cayleygs::Rational h = cayleygs::hamiltonian(loaded.config, loaded.params, n);
            cayleygs::BallFamily family = cayleygs::interior_ball_family(n, loaded.params);
            ordered_json params_echo;
            params_echo["config"] = en_config;
            params_echo["n"] = n;
            ordered_json j;
            j["manifest"] = make_manifest("energy", std::move(params_echo), {en_config}, en_output);
            j["energy"] = h.str();
            j["total_u"] = total;
            j["ball_count"] = family.size();
            j["volume_too_small"] = family.volume_too_small;
            emit(j, en_output);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
