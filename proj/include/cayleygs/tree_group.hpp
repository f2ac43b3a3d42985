#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cayleygs/errors.hpp"

namespace cayleygs {

// Order of the tree: every vertex has exactly k+1 neighbors.
struct TreeParams {
    explicit TreeParams(int order);  // order >= 1
    int k;
    int degree() const { return k + 1; }
};

// A vertex of the tree, held as a reduced word over the generators 1..k+1.
// Every generator is an involution, so a word is reduced exactly when no two
// adjacent letters are equal; the empty word is the identity e. Reduced form
// is unique, so letter-sequence equality is group equality.
class Word {
  public:
    Word() = default;

    const std::vector<uint32_t>& letters() const { return letters_; }
    size_t length() const { return letters_.size(); }
    bool is_identity() const { return letters_.empty(); }

    // each generator is its own inverse, so the inverse is the reversal
    Word inverse() const;

    bool operator==(const Word& o) const = default;
    // canonical order: by length, then lexicographic
    std::strong_ordering operator<=>(const Word& o) const;

    std::string str() const;  // "1 2 1", "e" for the identity
    static Word parse(std::string_view text, const TreeParams& params);

    // trusts that `letters` is already reduced; used by enumeration loops
    static Word from_reduced(std::vector<uint32_t> letters);

  private:
    std::vector<uint32_t> letters_;
};

struct WordHash {
    size_t operator()(const Word& w) const;
};

// Deletes adjacent equal pairs until none remain. The result is the unique
// reduced representative, independent of deletion order.
Word reduce(std::span<const uint32_t> letters, const TreeParams& params);

Word multiply(const Word& x, const Word& y, const TreeParams& params);

// length of the shortest path = |x^{-1} y|
int distance(const Word& x, const Word& y, const TreeParams& params);

// occurrences of generator j in the reduced word
uint64_t letter_count(const Word& x, uint32_t j, const TreeParams& params);

// Duplicate-free set of words kept in canonical order.
class VertexSet {
  public:
    VertexSet() = default;
    explicit VertexSet(std::vector<Word> words);           // sorts and dedups
    static VertexSet from_sorted(std::vector<Word> words);  // trusted input

    const std::vector<Word>& words() const { return words_; }
    size_t size() const { return words_.size(); }
    bool empty() const { return words_.empty(); }
    const Word& operator[](size_t i) const { return words_[i]; }

    bool contains(const Word& w) const;
    std::optional<size_t> index_of(const Word& w) const;

    auto begin() const { return words_.begin(); }
    auto end() const { return words_.end(); }

    bool operator==(const VertexSet& o) const = default;

  private:
    std::vector<Word> words_;
};

// all words within the given distance of the center
VertexSet ball(const Word& center, int radius, const TreeParams& params);

// all words of length exactly n (the sphere W_n around e)
VertexSet sphere(int n, const TreeParams& params);

// closed forms for |ball(e, radius)| and |sphere(n)|
uint64_t ball_size(int k, int radius);
uint64_t sphere_size(int k, int n);

}  // namespace cayleygs
