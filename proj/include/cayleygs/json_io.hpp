#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "cayleygs/census.hpp"

namespace cayleygs {

// Interchange formats. Counts and energies that can outgrow 2^53 are emitted
// as decimal strings so the JSON survives double-precision parsers.

using ordered_json = nlohmann::ordered_json;

struct LoadedConfig {
    ModelParams params;
    int n;
    SpinConfiguration config;
};

ordered_json config_to_json(const ModelParams& params, int n, const SpinConfiguration& config);
LoadedConfig config_from_json(const ordered_json& j);

ordered_json spec_to_json(const SubgroupSpec& spec);
SubgroupSpec spec_from_json(const ordered_json& j);

ordered_json coloring_to_json(const CosetColoring& coloring);
CosetColoring coloring_from_json(const ordered_json& j);

ordered_json ground_state_report_to_json(const GroundStateReport& report);
ordered_json census_to_json(const CensusResult& result);

// reads either inline JSON content or a file path
ordered_json load_json_file(const std::string& path);

// Undirected tree drawing of the volume of radius n; when a configuration is
// given, vertices are filled with a deterministic per-spin palette color.
void write_dot(std::ostream& out, const TreeParams& params, int n,
               const SpinConfiguration* config);

// palette entry for a spin value (cycles past the palette size)
std::string spin_fill_color(int spin);

}  // namespace cayleygs
