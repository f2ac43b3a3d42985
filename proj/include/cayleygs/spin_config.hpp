#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cayleygs/rational.hpp"
#include "cayleygs/tree_group.hpp"

namespace cayleygs {

// k: tree order, r: interaction range, q: spin count, J: nonzero coupling.
// Interactions act on balls of radius r' = floor((r+1)/2).
struct ModelParams {
    ModelParams(int k, int r, int q, Rational J);
    TreeParams tree;
    int r;
    int q;
    Rational J;
    int r_prime() const { return (r + 1) / 2; }
};

// Spin assignment on a finite support, one value in 1..q per vertex.
// Values are stored aligned with the support's canonical order.
class SpinConfiguration {
  public:
    SpinConfiguration(VertexSet support, std::vector<int> values, int q);
    static SpinConfiguration constant(VertexSet support, int spin, int q);

    const VertexSet& support() const { return support_; }
    const std::vector<int>& values() const { return values_; }
    int q() const { return q_; }

    int spin_at(const Word& w) const;  // MissingVertexError when absent
    std::optional<int> try_spin_at(const Word& w) const;

  private:
    VertexSet support_;
    std::vector<int> values_;
    int q_;
};

// |spins| minus the number of distinct values; 0 for a single spin,
// the Kronecker delta of the pair when |spins| = 2.
int kronecker_u(std::span<const int> spins, int q);

struct UExtremes {
    int u_min;
    int u_max;
};
UExtremes u_extremes(int ball_size, int q);

// the per-ball value a ground state must achieve: maximal for J>0, minimal for J<0
int ball_target(int ball_size, int q, int j_sign);

// All interaction balls lying wholly inside the volume of radius n: one ball
// of radius r' per center within distance n - r' of e, in canonical center
// order. volume_too_small flags n < r' (empty family, not an error).
struct BallFamily {
    std::vector<Word> centers;
    std::vector<VertexSet> balls;
    bool volume_too_small = false;
    size_t size() const { return balls.size(); }
};
BallFamily interior_ball_family(int n, const ModelParams& params);

// sum of kronecker_u over the interior balls (the J-independent part of H)
int64_t total_interaction(const SpinConfiguration& config, const ModelParams& params, int n);

// H = -J * total_interaction, exact
Rational hamiltonian(const SpinConfiguration& config, const ModelParams& params, int n);

// Per-ball certificate for the ground-state check.
struct BallReport {
    Word center;
    VertexSet vertices;
    int u_value;
    int target;
    bool pass;
};

struct GroundStateReport {
    bool pass = true;
    // failing balls first, canonical center order within each group
    std::vector<BallReport> reports;
};

// Checks every interior ball against its target U value.
// Requires n >= r' so that at least the central ball is in play.
GroundStateReport is_ground_state(const SpinConfiguration& config, const ModelParams& params,
                                  int n);

}  // namespace cayleygs
