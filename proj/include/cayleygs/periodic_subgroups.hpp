#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cayleygs/spin_config.hpp"

namespace cayleygs {

// Parity requirement per position 1..m: 'e' = even, 'o' = odd.
class ParityPattern {
  public:
    explicit ParityPattern(std::string letters);

    const std::string& letters() const { return letters_; }
    int size() const { return static_cast<int>(letters_.size()); }
    int odd_count() const;
    bool all_even() const { return odd_count() == 0; }

    // positions read as bits with position 1 least significant; this is the
    // order in which patterns with equal odd-count are listed
    uint32_t rank_value() const;

    // odd positions as a coset-label mask (position i <-> label bit for A_i)
    uint32_t label_mask() const;

    bool operator==(const ParityPattern& o) const = default;

  private:
    std::string letters_;
};

// The 2^(m-1) selected patterns: every pattern with strictly more 'e' than
// 'o', plus one pattern from each complementary pair among the balanced ones
// (the pair member of smaller rank_value). All-even comes first, then
// ascending odd-count, then ascending rank_value.
std::vector<ParityPattern> build_alpha_patterns(int m);

// Coset labels are m-bit values in [0, 2^m); the bit for A_i sits at binary
// digit m-i, so the textual form writes the A_1 bit leftmost ("110").
std::string format_label(uint32_t value, int m);
uint32_t parse_label(std::string_view text, int m);

// The family A_1..A_m of generator-index subsets, together with the derived
// generator vectors v_1..v_{k+1} (bit i of v_j set iff j is in A_i). The
// kernel of the induced parity map is the subgroup F; labels are its cosets.
class SubgroupSpec {
  public:
    static SubgroupSpec from_a_sets(int k, int m, std::vector<std::vector<int>> a_sets);
    static SubgroupSpec from_vectors(int k, int m, std::vector<uint32_t> vectors);

    int k() const { return k_; }
    int m() const { return m_; }
    uint32_t label_count() const { return uint32_t{1} << m_; }
    const std::vector<std::vector<int>>& a_sets() const { return a_sets_; }
    const std::vector<uint32_t>& generator_vectors() const { return vectors_; }

    // pairwise-distinct nonzero vectors; exactly the condition for every
    // unit ball to meet each coset class at most once
    bool valid() const;
    // vectors span GF(2)^m, i.e. the parity map is onto and F has index 2^m
    bool full_index() const;

    bool operator==(const SubgroupSpec& o) const = default;

  private:
    SubgroupSpec() = default;
    int k_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> a_sets_;
    std::vector<uint32_t> vectors_;
};

// Literal A-set construction: A_i collects the generators j <= k whose
// assigned pattern (the j-th non-all-even selected pattern) is odd at
// position i, joined with {k+1}. Only defined for k = 2^(m-1) - 1; other k
// raise RegimeError and are served by generalize_a_sets.
SubgroupSpec build_a_sets(int k, int m);

// Assigns pairwise-distinct nonzero m-bit vectors to the k+1 generators
// (defaults: v_j = j for j <= k, v_{k+1} = all-ones if unused, else the next
// free vector) and rebuilds the A-sets from them. PigeonholeError when
// k+1 > 2^m - 1.
SubgroupSpec generalize_a_sets(int k, int m,
                               std::optional<std::vector<uint32_t>> vectors = std::nullopt);

// XOR of the generator vectors over the letters of x; bit i is the parity of
// the letter count over A_i. x lies in F exactly when the label is zero.
uint32_t parity_vector(const Word& x, const SubgroupSpec& spec);

struct GammaReport {
    bool pass = true;
    std::optional<Word> witness;  // first center whose unit-ball labels collide
};

// Scans every center x in the volume of the given radius and requires the
// k+2 labels of the unit ball around x to be pairwise distinct. The labels
// only shift by XOR as x moves, so this holds everywhere iff it holds at e,
// i.e. iff the spec is valid; the scan re-verifies that on the tree.
GammaReport gamma_check(const SubgroupSpec& spec, int region_radius);

// Total assignment of a spin to each of the 2^m coset labels.
class CosetColoring {
  public:
    CosetColoring(int m, std::vector<int> colors);  // colors indexed by label
    static CosetColoring constant(int m, int spin);

    int m() const { return m_; }
    uint32_t label_count() const { return uint32_t{1} << m_; }
    const std::vector<int>& colors() const { return colors_; }
    int color(uint32_t label) const { return colors_[label]; }

  private:
    int m_;
    std::vector<int> colors_;
};

// The F-periodic configuration sigma(x) = coloring(parity_vector(x)) on the
// volume of radius n. Constant on left cosets of the kernel F.
SpinConfiguration periodic_config(const CosetColoring& coloring, const SubgroupSpec& spec, int n,
                                  int q);

}  // namespace cayleygs
