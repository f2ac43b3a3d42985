// Python bindings for the core operations. Words and coset labels cross the
// boundary as their textual forms ("1 2 1", "e"; "110"), census results and
// reports as plain dicts mirroring the JSON interchange schema.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cayleygs/census.hpp"
#include "cayleygs/json_io.hpp"

namespace py = pybind11;
using namespace cayleygs;

namespace {

py::object json_to_py(const ordered_json& j) {
    py::module_ pyjson = py::module_::import("json");
    return pyjson.attr("loads")(j.dump());
}

std::vector<uint32_t> parse_label_list(const std::vector<std::string>& texts, int m) {
    std::vector<uint32_t> out;
    out.reserve(texts.size());
    for (const auto& t : texts) {
        out.push_back(parse_label(t, m));
    }
    return out;
}

CosetColoring coloring_from_dict(const py::dict& colors, int m) {
    std::vector<int> values(size_t{1} << m, 0);
    std::vector<bool> seen(size_t{1} << m, false);
    for (auto item : colors) {
        uint32_t label = parse_label(py::cast<std::string>(item.first), m);
        values[label] = py::cast<int>(item.second);
        seen[label] = true;
    }
    for (size_t label = 0; label < seen.size(); ++label) {
        if (!seen[label]) {
            throw Error("coloring is missing label '" +
                        format_label(static_cast<uint32_t>(label), m) + "'");
        }
    }
    return CosetColoring(m, std::move(values));
}

SpinConfiguration config_from_dict(const py::dict& values, const TreeParams& tree, int q) {
    std::vector<std::pair<Word, int>> pairs;
    for (auto item : values) {
        pairs.emplace_back(Word::parse(py::cast<std::string>(item.first), tree),
                           py::cast<int>(item.second));
    }
    std::sort(pairs.begin(), pairs.end());
    std::vector<Word> support;
    std::vector<int> spins;
    for (auto& [w, v] : pairs) {
        support.push_back(std::move(w));
        spins.push_back(v);
    }
    return SpinConfiguration(VertexSet::from_sorted(std::move(support)), std::move(spins), q);
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "exact ground-state toolkit for finite-range models on Cayley trees";

    py::register_exception<Error>(mod, "ToolkitError");

    // tree group
    mod.def(
        "reduce",
        [](const std::vector<uint32_t>& letters, int k) {
            return reduce(letters, TreeParams(k)).str();
        },
        py::arg("letters"), py::arg("k"));
    mod.def(
        "multiply",
        [](const std::string& x, const std::string& y, int k) {
            TreeParams tree(k);
            return multiply(Word::parse(x, tree), Word::parse(y, tree), tree).str();
        },
        py::arg("x"), py::arg("y"), py::arg("k"));
    mod.def(
        "distance",
        [](const std::string& x, const std::string& y, int k) {
            TreeParams tree(k);
            return distance(Word::parse(x, tree), Word::parse(y, tree), tree);
        },
        py::arg("x"), py::arg("y"), py::arg("k"));
    mod.def(
        "ball",
        [](const std::string& center, int radius, int k) {
            TreeParams tree(k);
            std::vector<std::string> out;
            for (const Word& w : ball(Word::parse(center, tree), radius, tree)) {
                out.push_back(w.str());
            }
            return out;
        },
        py::arg("center"), py::arg("radius"), py::arg("k"));
    mod.def(
        "sphere",
        [](int n, int k) {
            std::vector<std::string> out;
            for (const Word& w : sphere(n, TreeParams(k))) {
                out.push_back(w.str());
            }
            return out;
        },
        py::arg("n"), py::arg("k"));
    mod.def(
        "letter_count",
        [](const std::string& x, uint32_t j, int k) {
            TreeParams tree(k);
            return letter_count(Word::parse(x, tree), j, tree);
        },
        py::arg("x"), py::arg("j"), py::arg("k"));

    // spin configurations
    mod.def(
        "kronecker_u",
        [](const std::vector<int>& spins, int q) { return kronecker_u(spins, q); },
        py::arg("spins"), py::arg("q"));
    mod.def(
        "u_extremes",
        [](int ball_size, int q) {
            auto [lo, hi] = u_extremes(ball_size, q);
            return py::make_tuple(lo, hi);
        },
        py::arg("ball_size"), py::arg("q"));
    mod.def(
        "hamiltonian",
        [](const py::dict& values, int k, int r, int q, const std::string& J, int n) {
            ModelParams params(k, r, q, Rational::parse(J));
            return hamiltonian(config_from_dict(values, params.tree, q), params, n).str();
        },
        py::arg("values"), py::arg("k"), py::arg("r"), py::arg("q"), py::arg("J"), py::arg("n"));
    mod.def(
        "is_ground_state",
        [](const py::dict& values, int k, int r, int q, const std::string& J, int n) {
            ModelParams params(k, r, q, Rational::parse(J));
            GroundStateReport report =
                is_ground_state(config_from_dict(values, params.tree, q), params, n);
            return py::make_tuple(report.pass, json_to_py(ground_state_report_to_json(report)));
        },
        py::arg("values"), py::arg("k"), py::arg("r"), py::arg("q"), py::arg("J"), py::arg("n"));

    // parity subgroups
    py::class_<SubgroupSpec>(mod, "SubgroupSpec")
        .def_property_readonly("k", &SubgroupSpec::k)
        .def_property_readonly("m", &SubgroupSpec::m)
        .def_property_readonly("a_sets",
                               [](const SubgroupSpec& s) { return s.a_sets(); })
        .def_property_readonly("vectors",
                               [](const SubgroupSpec& s) {
                                   std::vector<std::string> out;
                                   for (uint32_t v : s.generator_vectors()) {
                                       out.push_back(format_label(v, s.m()));
                                   }
                                   return out;
                               })
        .def_property_readonly("valid", &SubgroupSpec::valid)
        .def_property_readonly("full_index", &SubgroupSpec::full_index)
        .def("__repr__", [](const SubgroupSpec& s) {
            return "SubgroupSpec(k=" + std::to_string(s.k()) + ", m=" + std::to_string(s.m()) +
                   ")";
        });

    mod.def("build_alpha_patterns", [](int m) {
        std::vector<std::string> out;
        for (const ParityPattern& p : build_alpha_patterns(m)) {
            out.push_back(p.letters());
        }
        return out;
    });
    mod.def("build_a_sets", &build_a_sets, py::arg("k"), py::arg("m"));
    mod.def(
        "generalize_a_sets",
        [](int k, int m, const std::optional<std::vector<std::string>>& vectors) {
            if (vectors) {
                return generalize_a_sets(k, m, parse_label_list(*vectors, m));
            }
            return generalize_a_sets(k, m);
        },
        py::arg("k"), py::arg("m"), py::arg("vectors") = std::nullopt);
    mod.def(
        "spec_from_a_sets",
        [](int k, int m, const std::vector<std::vector<int>>& a_sets) {
            return SubgroupSpec::from_a_sets(k, m, a_sets);
        },
        py::arg("k"), py::arg("m"), py::arg("a_sets"));
    mod.def(
        "parity_vector",
        [](const std::string& x, const SubgroupSpec& spec) {
            return format_label(parity_vector(Word::parse(x, TreeParams(spec.k())), spec),
                                spec.m());
        },
        py::arg("x"), py::arg("spec"));
    mod.def(
        "gamma_check",
        [](const SubgroupSpec& spec, int region_radius) {
            GammaReport report = gamma_check(spec, region_radius);
            return py::make_tuple(report.pass, report.witness
                                                   ? py::object(py::str(report.witness->str()))
                                                   : py::object(py::none()));
        },
        py::arg("spec"), py::arg("region_radius"));
    mod.def(
        "periodic_config",
        [](const py::dict& colors, const SubgroupSpec& spec, int n, int q) {
            CosetColoring coloring = coloring_from_dict(colors, spec.m());
            SpinConfiguration config = periodic_config(coloring, spec, n, q);
            py::dict out;
            for (size_t i = 0; i < config.support().size(); ++i) {
                out[py::str(config.support()[i].str())] = config.values()[i];
            }
            return out;
        },
        py::arg("colors"), py::arg("spec"), py::arg("n"), py::arg("q"));

    // census
    mod.def(
        "exhaustive_min_energy",
        [](int k, int r, int q, int n, const std::string& J, uint64_t budget, int workers) {
            CensusOptions opts;
            opts.budget = budget;
            opts.workers = workers;
            return json_to_py(
                census_to_json(exhaustive_min_energy(ModelParams(k, r, q, Rational::parse(J)),
                                                     n, opts)));
        },
        py::arg("k"), py::arg("r"), py::arg("q"), py::arg("n"), py::arg("J") = "1",
        py::arg("budget") = CensusOptions{}.budget, py::arg("workers") = 1);
    mod.def(
        "count_periodic_ground_states",
        [](const SubgroupSpec& spec, int q, const std::string& J, uint64_t budget, int workers) {
            CensusOptions opts;
            opts.budget = budget;
            opts.workers = workers;
            return json_to_py(
                census_to_json(count_periodic_ground_states(spec, q, Rational::parse(J), opts)));
        },
        py::arg("spec"), py::arg("q"), py::arg("J") = "-1",
        py::arg("budget") = CensusOptions{}.budget, py::arg("workers") = 1);
    mod.def("cooccurrence_differences", [](const SubgroupSpec& spec) {
        std::vector<std::string> out;
        for (uint32_t d : cooccurrence_differences(spec)) {
            out.push_back(format_label(d, spec.m()));
        }
        return out;
    });
    mod.def(
        "count_label_colorings",
        [](int m, const std::vector<std::string>& differences, int q) {
            return count_label_colorings(m, parse_label_list(differences, m), q);
        },
        py::arg("m"), py::arg("differences"), py::arg("q"));
    mod.def("count_by_constraint_graph", &count_by_constraint_graph, py::arg("spec"),
            py::arg("q"));
    mod.def("ordered_injections", &ordered_injections, py::arg("q"), py::arg("size"));
    mod.def("predicted_periodic_count", &predicted_periodic_count, py::arg("q"), py::arg("k"),
            py::arg("j_sign"));
}
