#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cayleygs/periodic_subgroups.hpp"

namespace cayleygs {

struct CensusOptions {
    uint64_t budget = 100000000;  // max enumerated states / colorings
    int workers = 1;
    uint64_t max_stored_minimizers = 1024;
};

// Result of an exact census run. Counts are exact; agreement flags are
// computed from the enumerations, never assumed.
struct CensusResult {
    std::string mode;  // "exhaustive" | "periodic"

    // parameter echo
    int k = 0;
    int r = 0;
    int q = 0;
    int n = 0;
    int m = 0;
    Rational J;
    uint64_t search_space = 0;

    // exhaustive mode
    std::optional<Rational> min_energy;
    std::optional<uint64_t> minimizer_count;
    std::vector<std::vector<int>> minimizers;  // first few, canonical order
    bool minimizers_truncated = false;
    // hamiltonian minimizers coincide with the per-ball-target checker's passes
    std::optional<bool> checker_equivalence;

    // periodic mode
    std::optional<uint64_t> periodic_count;          // direct coloring enumeration
    std::optional<uint64_t> graph_count;             // constraint-graph backtracking
    std::optional<uint64_t> formula_count;           // closed-form prediction
    std::optional<uint64_t> ball_restriction_count;  // distinct single-ball restrictions
    std::optional<bool> method_agreement;
    std::optional<bool> formula_agreement;

    double wall_ms = 0.0;

    bool all_checks_agree() const;
};

// Enumerates every configuration on the volume of radius n, reports the exact
// minimum of H with all minimizers, and cross-checks the minimizer set
// against the per-ball ground-state checker. Refuses (BudgetExceededError)
// when q^|V_n| exceeds the budget.
CensusResult exhaustive_min_energy(const ModelParams& params, int n,
                                   const CensusOptions& opts = {});

// Unit-ball (r = 2) periodic census for a valid full-index spec: enumerates
// all q^(2^m) coset colorings and counts those whose induced configuration
// meets the per-ball target everywhere -- constancy on each coset-level ball
// for J>0, pairwise-distinct colors for J<0 (which needs q >= k+2). Reports
// the count next to the constraint-graph count and the closed-form value.
CensusResult count_periodic_ground_states(const SubgroupSpec& spec, int q, const Rational& J,
                                          const CensusOptions& opts = {});

// the per-coloring acceptance predicate used by the periodic census
bool coloring_passes(const SubgroupSpec& spec, const std::vector<int>& colors, int j_sign);

// D = {v_j} union {v_i ^ v_j}: two labels share some coset-level unit ball
// iff their XOR lies in D. Sorted, never contains zero for valid specs.
std::vector<uint32_t> cooccurrence_differences(const SubgroupSpec& spec);

// proper q-colorings of the graph on 2^m labels with edges {p, p^d}, d in D
uint64_t count_label_colorings(int m, const std::vector<uint32_t>& differences, int q);
uint64_t count_by_constraint_graph(const SubgroupSpec& spec, int q);

// q (q-1) ... (q-size+1); the number of injective ball colorings. 0 when
// size > q, width-checked.
uint64_t ordered_injections(int q, int size);

// closed-form periodic ground-state count: q for J>0, ordered_injections(q, k+2) for J<0
uint64_t predicted_periodic_count(int q, int k, int j_sign);

}  // namespace cayleygs
