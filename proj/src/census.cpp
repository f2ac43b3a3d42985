#include "cayleygs/census.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <thread>

namespace cayleygs {

bool CensusResult::all_checks_agree() const {
    if (checker_equivalence && !*checker_equivalence) {
        return false;
    }
    if (method_agreement && !*method_agreement) {
        return false;
    }
    if (formula_agreement && !*formula_agreement) {
        return false;
    }
    return true;
}

namespace {

struct Range {
    uint64_t lo;
    uint64_t hi;
};

// Contiguous index ranges, merged back in range order, so neither the
// partition boundaries nor the worker count can show up in any result.
std::vector<Range> split_ranges(uint64_t total, int workers) {
    int w = std::max(1, workers);
    std::vector<Range> out;
    uint64_t chunk = total / static_cast<uint64_t>(w);
    uint64_t rem = total % static_cast<uint64_t>(w);
    uint64_t lo = 0;
    for (int i = 0; i < w; ++i) {
        uint64_t len = chunk + (static_cast<uint64_t>(i) < rem ? 1 : 0);
        out.push_back({lo, lo + len});
        lo += len;
    }
    return out;
}

// base-q digits of value, most significant digit first
std::vector<int> decode_digits(uint64_t value, int q, size_t width) {
    std::vector<int> digits(width, 0);
    for (size_t i = width; i-- > 0;) {
        digits[i] = static_cast<int>(value % static_cast<uint64_t>(q));
        value /= static_cast<uint64_t>(q);
    }
    return digits;
}

void increment_digits(std::vector<int>& digits, int q) {
    for (size_t i = digits.size(); i-- > 0;) {
        if (++digits[i] < q) {
            return;
        }
        digits[i] = 0;
    }
}

uint64_t checked_state_count(int q, size_t width, uint64_t budget) {
    try {
        uint64_t states = checked_pow_u64(static_cast<uint64_t>(q), width);
        if (states > budget) {
            throw BudgetExceededError(std::to_string(states), budget);
        }
        return states;
    } catch (const ArithmeticOverflowError&) {
        throw BudgetExceededError(std::to_string(q) + "^" + std::to_string(width), budget);
    }
}

struct ExhaustiveShard {
    bool any = false;
    int64_t best_total = 0;        // extremal sum of U over balls
    uint64_t count_at_best = 0;
    uint64_t checker_passes = 0;   // states meeting every per-ball target
    std::vector<uint64_t> stored;  // first indices at local best, up to cap
};

}  // namespace

CensusResult exhaustive_min_energy(const ModelParams& params, int n, const CensusOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    if (n < params.r_prime()) {
        throw Error("exhaustive census needs n >= r' (n=" + std::to_string(n) +
                    ", r'=" + std::to_string(params.r_prime()) + ")");
    }
    VertexSet volume = ball(Word{}, n, params.tree);
    const size_t N = volume.size();
    const uint64_t states = checked_state_count(params.q, N, opts.budget);

    BallFamily family = interior_ball_family(n, params);
    std::vector<std::vector<size_t>> ball_idx;
    std::vector<int> targets;
    int64_t target_sum = 0;
    for (const VertexSet& b : family.balls) {
        std::vector<size_t> idx;
        for (const Word& w : b) {
            idx.push_back(*volume.index_of(w));
        }
        ball_idx.push_back(std::move(idx));
        int t = ball_target(static_cast<int>(b.size()), params.q, params.J.sign());
        targets.push_back(t);
        target_sum += t;
    }

    const int j_sign = params.J.sign();
    const int q = params.q;
    const uint64_t cap = opts.max_stored_minimizers;

    auto ranges = split_ranges(states, opts.workers);
    std::vector<ExhaustiveShard> shards(ranges.size());

    auto run_range = [&](const Range& range, ExhaustiveShard& shard) {
        if (range.lo >= range.hi) {
            return;
        }
        std::vector<int> digits = decode_digits(range.lo, q, N);
        std::vector<uint64_t> stamp(static_cast<size_t>(q), 0);
        uint64_t epoch = 0;
        for (uint64_t idx = range.lo; idx < range.hi; ++idx) {
            int64_t total = 0;
            bool all_at_target = true;
            for (size_t bi = 0; bi < ball_idx.size(); ++bi) {
                ++epoch;
                int distinct = 0;
                for (size_t vi : ball_idx[bi]) {
                    auto d = static_cast<size_t>(digits[vi]);
                    if (stamp[d] != epoch) {
                        stamp[d] = epoch;
                        ++distinct;
                    }
                }
                int u = static_cast<int>(ball_idx[bi].size()) - distinct;
                total += u;
                all_at_target = all_at_target && (u == targets[bi]);
            }
            if (all_at_target) {
                ++shard.checker_passes;
            }
            bool better = !shard.any || (j_sign > 0 ? total > shard.best_total
                                                    : total < shard.best_total);
            if (better) {
                shard.any = true;
                shard.best_total = total;
                shard.count_at_best = 1;
                shard.stored.clear();
                shard.stored.push_back(idx);
            } else if (total == shard.best_total) {
                ++shard.count_at_best;
                if (shard.stored.size() < cap) {
                    shard.stored.push_back(idx);
                }
            }
            increment_digits(digits, q);
        }
    };

    if (ranges.size() == 1) {
        run_range(ranges[0], shards[0]);
    } else {
        std::vector<std::thread> threads;
        for (size_t i = 0; i < ranges.size(); ++i) {
            threads.emplace_back(run_range, std::cref(ranges[i]), std::ref(shards[i]));
        }
        for (auto& t : threads) {
            t.join();
        }
    }

    // merge in range order
    int64_t best_total = 0;
    bool any = false;
    for (const auto& s : shards) {
        if (!s.any) {
            continue;
        }
        if (!any || (j_sign > 0 ? s.best_total > best_total : s.best_total < best_total)) {
            any = true;
            best_total = s.best_total;
        }
    }
    uint64_t minimizer_count = 0;
    uint64_t checker_passes = 0;
    std::vector<uint64_t> stored;
    for (const auto& s : shards) {
        checker_passes += s.checker_passes;
        if (s.any && s.best_total == best_total) {
            minimizer_count += s.count_at_best;
            for (uint64_t idx : s.stored) {
                if (stored.size() < cap) {
                    stored.push_back(idx);
                }
            }
        }
    }

    CensusResult result;
    result.mode = "exhaustive";
    result.k = params.tree.k;
    result.r = params.r;
    result.q = q;
    result.n = n;
    result.J = params.J;
    result.search_space = states;
    result.min_energy = -params.J * Rational(best_total);
    result.minimizer_count = minimizer_count;
    for (uint64_t idx : stored) {
        std::vector<int> digits = decode_digits(idx, q, N);
        for (int& d : digits) {
            ++d;  // digit 0 is spin 1
        }
        result.minimizers.push_back(std::move(digits));
    }
    result.minimizers_truncated = minimizer_count > stored.size();
    result.checker_equivalence =
        (best_total == target_sum) && (checker_passes == minimizer_count);
    result.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                               t0)
                         .count();
    return result;
}

namespace {

std::vector<std::vector<uint32_t>> coset_balls(const SubgroupSpec& spec) {
    const uint32_t L = spec.label_count();
    std::vector<std::vector<uint32_t>> balls(L);
    for (uint32_t g = 0; g < L; ++g) {
        balls[g].push_back(g);
        for (uint32_t v : spec.generator_vectors()) {
            balls[g].push_back(g ^ v);
        }
    }
    return balls;
}

bool ball_ok(const std::vector<int>& colors, const std::vector<uint32_t>& members, int j_sign) {
    if (j_sign > 0) {
        int first = colors[members[0]];
        for (uint32_t lab : members) {
            if (colors[lab] != first) {
                return false;
            }
        }
        return true;
    }
    for (size_t a = 0; a < members.size(); ++a) {
        for (size_t b = a + 1; b < members.size(); ++b) {
            if (colors[members[a]] == colors[members[b]]) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

bool coloring_passes(const SubgroupSpec& spec, const std::vector<int>& colors, int j_sign) {
    if (colors.size() != spec.label_count()) {
        throw ParameterError("coloring size does not match the spec's 2^m labels");
    }
    auto balls = coset_balls(spec);
    for (const auto& members : balls) {
        if (!ball_ok(colors, members, j_sign)) {
            return false;
        }
    }
    return true;
}

CensusResult count_periodic_ground_states(const SubgroupSpec& spec, int q, const Rational& J,
                                          const CensusOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    if (!spec.valid()) {
        throw Error("periodic census needs a valid spec (distinct nonzero generator vectors)");
    }
    if (!spec.full_index()) {
        throw Error("periodic census needs a full-index spec (vectors spanning all m bits)");
    }
    if (J.is_zero()) {
        throw Error("coupling J must be nonzero");
    }
    if (q < 2) {
        throw Error("spin count q must be >= 2");
    }
    const int j_sign = J.sign();
    const int k = spec.k();
    if (j_sign < 0 && q < k + 2) {
        throw RegimeError("J<0 census needs q >= k+2 so that balls can take distinct spins (q=" +
                          std::to_string(q) + ", k+2=" + std::to_string(k + 2) + ")");
    }
    const uint32_t L = spec.label_count();
    const uint64_t colorings = checked_state_count(q, L, opts.budget);
    const auto balls = coset_balls(spec);

    struct Shard {
        uint64_t count = 0;
        std::set<std::vector<int>> restrictions;
    };

    auto ranges = split_ranges(colorings, opts.workers);
    std::vector<Shard> shards(ranges.size());

    auto run_range = [&](const Range& range, Shard& shard) {
        if (range.lo >= range.hi) {
            return;
        }
        std::vector<int> digits = decode_digits(range.lo, q, L);
        std::vector<int> colors(L, 0);
        for (uint64_t idx = range.lo; idx < range.hi; ++idx) {
            for (uint32_t lab = 0; lab < L; ++lab) {
                colors[lab] = digits[lab] + 1;
            }
            bool ok = true;
            for (const auto& members : balls) {
                if (!ball_ok(colors, members, j_sign)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                ++shard.count;
                std::vector<int> tuple;
                tuple.reserve(balls[0].size());
                for (uint32_t lab : balls[0]) {
                    tuple.push_back(colors[lab]);
                }
                shard.restrictions.insert(std::move(tuple));
            }
            increment_digits(digits, q);
        }
    };

    if (ranges.size() == 1) {
        run_range(ranges[0], shards[0]);
    } else {
        std::vector<std::thread> threads;
        for (size_t i = 0; i < ranges.size(); ++i) {
            threads.emplace_back(run_range, std::cref(ranges[i]), std::ref(shards[i]));
        }
        for (auto& t : threads) {
            t.join();
        }
    }

    uint64_t count = 0;
    std::set<std::vector<int>> restrictions;
    for (auto& s : shards) {
        count += s.count;
        restrictions.merge(s.restrictions);
    }

    CensusResult result;
    result.mode = "periodic";
    result.k = k;
    result.r = 2;
    result.q = q;
    result.m = spec.m();
    result.J = J;
    result.search_space = colorings;
    result.periodic_count = count;
    result.ball_restriction_count = restrictions.size();
    if (j_sign < 0) {
        result.graph_count = count_by_constraint_graph(spec, q);
        result.method_agreement = (*result.graph_count == count);
    }
    result.formula_count = predicted_periodic_count(q, k, j_sign);
    result.formula_agreement = (*result.formula_count == count);
    result.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                               t0)
                         .count();
    return result;
}

std::vector<uint32_t> cooccurrence_differences(const SubgroupSpec& spec) {
    std::set<uint32_t> d;
    const auto& vs = spec.generator_vectors();
    for (size_t i = 0; i < vs.size(); ++i) {
        d.insert(vs[i]);
        for (size_t j = i + 1; j < vs.size(); ++j) {
            d.insert(vs[i] ^ vs[j]);
        }
    }
    d.erase(0);
    return {d.begin(), d.end()};
}

uint64_t count_label_colorings(int m, const std::vector<uint32_t>& differences, int q) {
    if (m < 1 || m > 20) {
        throw Error("m out of range for label coloring");
    }
    const uint32_t L = uint32_t{1} << m;
    std::set<uint32_t> d(differences.begin(), differences.end());
    d.erase(0);
    for (uint32_t v : d) {
        if (v >= L) {
            throw Error("difference vector does not fit in " + std::to_string(m) + " bits");
        }
    }
    // backtracking over labels in order; only earlier-assigned neighbors constrain
    std::vector<std::vector<uint32_t>> lower(L);
    for (uint32_t p = 0; p < L; ++p) {
        for (uint32_t v : d) {
            if ((p ^ v) < p) {
                lower[p].push_back(p ^ v);
            }
        }
    }
    std::vector<int> color(L, 0);
    uint64_t count = 0;
    uint32_t level = 0;
    std::vector<int> next_try(L, 1);
    while (true) {
        if (level == L) {
            ++count;
            --level;
            continue;
        }
        bool advanced = false;
        for (int c = next_try[level]; c <= q; ++c) {
            bool ok = true;
            for (uint32_t nb : lower[level]) {
                if (color[nb] == c) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                color[level] = c;
                next_try[level] = c + 1;
                ++level;
                if (level < L) {
                    next_try[level] = 1;
                }
                advanced = true;
                break;
            }
        }
        if (!advanced) {
            if (level == 0) {
                break;
            }
            next_try[level] = 1;
            --level;
        }
    }
    return count;
}

uint64_t count_by_constraint_graph(const SubgroupSpec& spec, int q) {
    if (!spec.valid()) {
        throw Error("constraint-graph count needs a valid spec");
    }
    return count_label_colorings(spec.m(), cooccurrence_differences(spec), q);
}

uint64_t ordered_injections(int q, int size) {
    if (q < 0 || size < 0) {
        throw Error("ordered_injections needs nonnegative arguments");
    }
    if (size > q) {
        return 0;
    }
    uint64_t out = 1;
    for (int i = 0; i < size; ++i) {
        out = checked_mul_u64(out, static_cast<uint64_t>(q - i));
    }
    return out;
}

uint64_t predicted_periodic_count(int q, int k, int j_sign) {
    if (j_sign > 0) {
        return static_cast<uint64_t>(q);
    }
    return ordered_injections(q, k + 2);
}

}  // namespace cayleygs
