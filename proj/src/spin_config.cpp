#include "cayleygs/spin_config.hpp"

#include <algorithm>

namespace cayleygs {

ModelParams::ModelParams(int k_, int r_, int q_, Rational J_)
    : tree(k_), r(r_), q(q_), J(std::move(J_)) {
    if (r < 1) {
        throw Error("interaction range r must be >= 1, got " + std::to_string(r));
    }
    if (q < 2) {
        throw Error("spin count q must be >= 2, got " + std::to_string(q));
    }
    if (J.is_zero()) {
        throw Error("coupling J must be nonzero");
    }
}

SpinConfiguration::SpinConfiguration(VertexSet support, std::vector<int> values, int q)
    : support_(std::move(support)), values_(std::move(values)), q_(q) {
    if (values_.size() != support_.size()) {
        throw Error("configuration needs exactly one value per support vertex (" +
                    std::to_string(support_.size()) + " vertices, " +
                    std::to_string(values_.size()) + " values)");
    }
    for (int v : values_) {
        if (v < 1 || v > q_) {
            throw InvalidSpinError("spin " + std::to_string(v) + " outside 1.." +
                                   std::to_string(q_));
        }
    }
}

SpinConfiguration SpinConfiguration::constant(VertexSet support, int spin, int q) {
    std::vector<int> values(support.size(), spin);
    return SpinConfiguration(std::move(support), std::move(values), q);
}

int SpinConfiguration::spin_at(const Word& w) const {
    auto idx = support_.index_of(w);
    if (!idx) {
        throw MissingVertexError(w.str());
    }
    return values_[*idx];
}

std::optional<int> SpinConfiguration::try_spin_at(const Word& w) const {
    auto idx = support_.index_of(w);
    if (!idx) {
        return std::nullopt;
    }
    return values_[*idx];
}

int kronecker_u(std::span<const int> spins, int q) {
    if (spins.empty()) {
        throw Error("kronecker_u of an empty spin sequence");
    }
    std::vector<char> seen(static_cast<size_t>(q) + 1, 0);
    int distinct = 0;
    for (int s : spins) {
        if (s < 1 || s > q) {
            throw InvalidSpinError("spin " + std::to_string(s) + " outside 1.." + std::to_string(q));
        }
        if (!seen[static_cast<size_t>(s)]) {
            seen[static_cast<size_t>(s)] = 1;
            ++distinct;
        }
    }
    return static_cast<int>(spins.size()) - distinct;
}

UExtremes u_extremes(int ball_size, int q) {
    if (ball_size < 1 || q < 2) {
        throw Error("u_extremes needs ball_size >= 1 and q >= 2");
    }
    return {ball_size - std::min(ball_size, q), ball_size - 1};
}

int ball_target(int ball_size, int q, int j_sign) {
    auto [lo, hi] = u_extremes(ball_size, q);
    return j_sign > 0 ? hi : lo;
}

BallFamily interior_ball_family(int n, const ModelParams& params) {
    BallFamily family;
    if (n < params.r_prime()) {
        family.volume_too_small = true;
        return family;
    }
    VertexSet centers = ball(Word{}, n - params.r_prime(), params.tree);
    family.centers.assign(centers.begin(), centers.end());
    family.balls.reserve(family.centers.size());
    for (const Word& c : family.centers) {
        family.balls.push_back(ball(c, params.r_prime(), params.tree));
    }
    return family;
}

namespace {

// requires support >= V_n; names the first absent vertex in canonical order
void check_volume_covered(const SpinConfiguration& config, const ModelParams& params, int n) {
    VertexSet volume = ball(Word{}, n, params.tree);
    for (const Word& w : volume) {
        if (!config.support().contains(w)) {
            throw MissingVertexError(w.str());
        }
    }
}

}  // namespace

int64_t total_interaction(const SpinConfiguration& config, const ModelParams& params, int n) {
    check_volume_covered(config, params, n);
    BallFamily family = interior_ball_family(n, params);
    int64_t total = 0;
    std::vector<int> spins;
    for (const VertexSet& b : family.balls) {
        spins.clear();
        for (const Word& w : b) {
            spins.push_back(config.spin_at(w));
        }
        total += kronecker_u(spins, params.q);
    }
    return total;
}

Rational hamiltonian(const SpinConfiguration& config, const ModelParams& params, int n) {
    return -params.J * Rational(total_interaction(config, params, n));
}

GroundStateReport is_ground_state(const SpinConfiguration& config, const ModelParams& params,
                                  int n) {
    if (n < params.r_prime()) {
        throw Error("ground-state check needs n >= r' (n=" + std::to_string(n) +
                    ", r'=" + std::to_string(params.r_prime()) + ")");
    }
    check_volume_covered(config, params, n);
    BallFamily family = interior_ball_family(n, params);
    int j_sign = params.J.sign();

    GroundStateReport report;
    std::vector<BallReport> failing;
    std::vector<BallReport> passing;
    std::vector<int> spins;
    for (size_t i = 0; i < family.size(); ++i) {
        const VertexSet& b = family.balls[i];
        spins.clear();
        for (const Word& w : b) {
            spins.push_back(config.spin_at(w));
        }
        int u = kronecker_u(spins, params.q);
        int target = ball_target(static_cast<int>(b.size()), params.q, j_sign);
        BallReport br{family.centers[i], b, u, target, u == target};
        (br.pass ? passing : failing).push_back(std::move(br));
    }
    report.pass = failing.empty();
    report.reports = std::move(failing);
    report.reports.insert(report.reports.end(), std::make_move_iterator(passing.begin()),
                          std::make_move_iterator(passing.end()));
    return report;
}

}  // namespace cayleygs
