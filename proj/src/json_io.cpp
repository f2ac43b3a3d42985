#include "cayleygs/json_io.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <ostream>

namespace cayleygs {

namespace {

std::string count_str(uint64_t v) { return std::to_string(v); }

}  // namespace

ordered_json config_to_json(const ModelParams& params, int n, const SpinConfiguration& config) {
    ordered_json j;
    j["k"] = params.tree.k;
    j["r"] = params.r;
    j["q"] = params.q;
    j["J"] = params.J.str();
    j["n"] = n;
    ordered_json values = ordered_json::object();
    const auto& support = config.support();
    for (size_t i = 0; i < support.size(); ++i) {
        values[support[i].str()] = config.values()[i];
    }
    j["values"] = std::move(values);
    return j;
}

LoadedConfig config_from_json(const ordered_json& j) {
    ModelParams params(j.at("k").get<int>(), j.at("r").get<int>(), j.at("q").get<int>(),
                       Rational::parse(j.at("J").get<std::string>()));
    int n = j.at("n").get<int>();
    std::vector<Word> words;
    std::vector<std::pair<Word, int>> pairs;
    for (const auto& [key, value] : j.at("values").items()) {
        pairs.emplace_back(Word::parse(key, params.tree), value.get<int>());
    }
    std::sort(pairs.begin(), pairs.end());
    std::vector<Word> support;
    std::vector<int> values;
    for (auto& [w, v] : pairs) {
        if (!support.empty() && support.back() == w) {
            throw Error("duplicate vertex '" + w.str() + "' in configuration values");
        }
        support.push_back(std::move(w));
        values.push_back(v);
    }
    return LoadedConfig{params, n,
                        SpinConfiguration(VertexSet::from_sorted(std::move(support)),
                                          std::move(values), params.q)};
}

ordered_json spec_to_json(const SubgroupSpec& spec) {
    ordered_json j;
    j["m"] = spec.m();
    j["k"] = spec.k();
    j["A"] = spec.a_sets();
    return j;
}

SubgroupSpec spec_from_json(const ordered_json& j) {
    return SubgroupSpec::from_a_sets(j.at("k").get<int>(), j.at("m").get<int>(),
                                     j.at("A").get<std::vector<std::vector<int>>>());
}

ordered_json coloring_to_json(const CosetColoring& coloring) {
    ordered_json j;
    j["m"] = coloring.m();
    ordered_json colors = ordered_json::object();
    for (uint32_t label = 0; label < coloring.label_count(); ++label) {
        colors[format_label(label, coloring.m())] = coloring.color(label);
    }
    j["colors"] = std::move(colors);
    return j;
}

CosetColoring coloring_from_json(const ordered_json& j) {
    int m = j.at("m").get<int>();
    if (m < 1 || m > 20) {
        throw Error("coloring m out of range");
    }
    const auto& colors_obj = j.at("colors");
    std::vector<int> colors(size_t{1} << m, 0);
    std::vector<bool> seen(size_t{1} << m, false);
    for (const auto& [key, value] : colors_obj.items()) {
        uint32_t label = parse_label(key, m);
        colors[label] = value.get<int>();
        seen[label] = true;
    }
    for (size_t label = 0; label < seen.size(); ++label) {
        if (!seen[label]) {
            throw Error("coloring is missing label '" +
                        format_label(static_cast<uint32_t>(label), m) + "'");
        }
    }
    return CosetColoring(m, std::move(colors));
}

ordered_json ground_state_report_to_json(const GroundStateReport& report) {
    ordered_json j;
    j["pass"] = report.pass;
    ordered_json reports = ordered_json::array();
    for (const BallReport& br : report.reports) {
        ordered_json rb;
        rb["center"] = br.center.str();
        ordered_json vertices = ordered_json::array();
        for (const Word& w : br.vertices) {
            vertices.push_back(w.str());
        }
        rb["vertices"] = std::move(vertices);
        rb["u"] = br.u_value;
        rb["target"] = br.target;
        rb["pass"] = br.pass;
        reports.push_back(std::move(rb));
    }
    j["reports"] = std::move(reports);
    return j;
}

ordered_json census_to_json(const CensusResult& result) {
    ordered_json j;
    j["mode"] = result.mode;
    j["k"] = result.k;
    j["r"] = result.r;
    j["q"] = result.q;
    if (result.mode == "exhaustive") {
        j["n"] = result.n;
    } else {
        j["m"] = result.m;
    }
    j["J"] = result.J.str();
    j["search_space"] = count_str(result.search_space);
    if (result.min_energy) {
        j["min_energy"] = result.min_energy->str();
    }
    if (result.minimizer_count) {
        j["minimizer_count"] = count_str(*result.minimizer_count);
        j["minimizers"] = result.minimizers;
        j["minimizers_truncated"] = result.minimizers_truncated;
    }
    if (result.checker_equivalence) {
        j["checker_equivalence"] = *result.checker_equivalence;
    }
    if (result.periodic_count) {
        j["periodic_count"] = count_str(*result.periodic_count);
    }
    if (result.graph_count) {
        j["graph_count"] = count_str(*result.graph_count);
    }
    if (result.formula_count) {
        j["formula_count"] = count_str(*result.formula_count);
    }
    if (result.ball_restriction_count) {
        j["ball_restriction_count"] = count_str(*result.ball_restriction_count);
    }
    if (result.method_agreement) {
        j["method_agreement"] = *result.method_agreement;
    }
    if (result.formula_agreement) {
        j["formula_agreement"] = *result.formula_agreement;
    }
    j["wall_ms"] = result.wall_ms;
    return j;
}

ordered_json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open '" + path + "'");
    }
    ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error("bad JSON in '" + path + "': " + e.what());
    }
    return j;
}

std::string spin_fill_color(int spin) {
    // deterministic palette keyed by spin index, cycling past 16
    static constexpr std::array<const char*, 16> palette = {
        "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#46f0f0",
        "#f032e6", "#bcf60c", "#fabebe", "#008080", "#e6beff", "#9a6324",
        "#fffac8", "#800000", "#aaffc3", "#808000"};
    return palette[static_cast<size_t>((spin - 1) % static_cast<int>(palette.size()))];
}

void write_dot(std::ostream& out, const TreeParams& params, int n,
               const SpinConfiguration* config) {
    VertexSet volume = ball(Word{}, n, params);
    out << "graph cayley_tree {\n";
    out << "  node [shape=circle, style=filled, fillcolor=\"#d3d3d3\"];\n";
    for (const Word& w : volume) {
        out << "  \"" << w.str() << "\"";
        if (config) {
            out << " [fillcolor=\"" << spin_fill_color(config->spin_at(w)) << "\"]";
        }
        out << ";\n";
    }
    // each non-identity word hangs off the word with its last letter removed
    for (const Word& w : volume) {
        if (w.is_identity()) {
            continue;
        }
        std::vector<uint32_t> parent(w.letters().begin(), w.letters().end() - 1);
        out << "  \"" << Word::from_reduced(std::move(parent)).str() << "\" -- \"" << w.str()
            << "\";\n";
    }
    out << "}\n";
}

}  // namespace cayleygs
