#include "cayleygs/tree_group.hpp"

#include <algorithm>
#include <sstream>

#include "cayleygs/rational.hpp"

namespace cayleygs {

TreeParams::TreeParams(int order) : k(order) {
    if (k < 1) {
        throw Error("tree order k must be >= 1, got " + std::to_string(k));
    }
}

namespace {

void check_letter(uint32_t j, const TreeParams& params) {
    if (j < 1 || j > static_cast<uint32_t>(params.degree())) {
        throw InvalidGeneratorError("generator index " + std::to_string(j) + " outside 1.." +
                                    std::to_string(params.degree()));
    }
}

// stack cancellation of adjacent equal pairs; confluent because every
// generator is an involution
std::vector<uint32_t> cancel(std::span<const uint32_t> letters) {
    std::vector<uint32_t> out;
    out.reserve(letters.size());
    for (uint32_t a : letters) {
        if (!out.empty() && out.back() == a) {
            out.pop_back();
        } else {
            out.push_back(a);
        }
    }
    return out;
}

}  // namespace

Word Word::from_reduced(std::vector<uint32_t> letters) {
    Word w;
    w.letters_ = std::move(letters);
    return w;
}

Word Word::inverse() const {
    std::vector<uint32_t> rev(letters_.rbegin(), letters_.rend());
    return from_reduced(std::move(rev));
}

std::strong_ordering Word::operator<=>(const Word& o) const {
    if (auto c = letters_.size() <=> o.letters_.size(); c != 0) {
        return c;
    }
    return std::lexicographical_compare_three_way(letters_.begin(), letters_.end(),
                                                  o.letters_.begin(), o.letters_.end());
}

std::string Word::str() const {
    if (letters_.empty()) {
        return "e";
    }
    std::string out;
    for (size_t i = 0; i < letters_.size(); ++i) {
        if (i) {
            out += ' ';
        }
        out += std::to_string(letters_[i]);
    }
    return out;
}

Word Word::parse(std::string_view text, const TreeParams& params) {
    // trim
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) {
        text.remove_prefix(1);
    }
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) {
        text.remove_suffix(1);
    }
    if (text.empty() || text == "e") {
        return Word{};
    }
    std::vector<uint32_t> letters;
    std::istringstream in{std::string(text)};
    long v = 0;
    while (in >> v) {
        if (v < 1) {
            throw InvalidGeneratorError("generator index " + std::to_string(v) + " outside 1.." +
                                        std::to_string(params.degree()));
        }
        letters.push_back(static_cast<uint32_t>(v));
    }
    if (!in.eof()) {
        throw Error("bad word literal: '" + std::string(text) + "'");
    }
    return reduce(letters, params);
}

size_t WordHash::operator()(const Word& w) const {
    size_t h = 0xcbf29ce484222325ull;
    for (uint32_t a : w.letters()) {
        h ^= a;
        h *= 0x100000001b3ull;
    }
    return h;
}

Word reduce(std::span<const uint32_t> letters, const TreeParams& params) {
    for (uint32_t a : letters) {
        check_letter(a, params);
    }
    return Word::from_reduced(cancel(letters));
}

Word multiply(const Word& x, const Word& y, const TreeParams& params) {
    for (uint32_t a : x.letters()) {
        if (a > static_cast<uint32_t>(params.degree())) {
            throw ParameterError("word '" + x.str() + "' uses generators outside the tree of order " +
                                 std::to_string(params.k));
        }
    }
    for (uint32_t a : y.letters()) {
        if (a > static_cast<uint32_t>(params.degree())) {
            throw ParameterError("word '" + y.str() + "' uses generators outside the tree of order " +
                                 std::to_string(params.k));
        }
    }
    std::vector<uint32_t> cat;
    cat.reserve(x.length() + y.length());
    cat.insert(cat.end(), x.letters().begin(), x.letters().end());
    cat.insert(cat.end(), y.letters().begin(), y.letters().end());
    return Word::from_reduced(cancel(cat));
}

int distance(const Word& x, const Word& y, const TreeParams& params) {
    return static_cast<int>(multiply(x.inverse(), y, params).length());
}

uint64_t letter_count(const Word& x, uint32_t j, const TreeParams& params) {
    check_letter(j, params);
    return static_cast<uint64_t>(std::count(x.letters().begin(), x.letters().end(), j));
}

VertexSet::VertexSet(std::vector<Word> words) : words_(std::move(words)) {
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

VertexSet VertexSet::from_sorted(std::vector<Word> words) {
    VertexSet s;
    s.words_ = std::move(words);
    return s;
}

bool VertexSet::contains(const Word& w) const {
    return std::binary_search(words_.begin(), words_.end(), w);
}

std::optional<size_t> VertexSet::index_of(const Word& w) const {
    auto it = std::lower_bound(words_.begin(), words_.end(), w);
    if (it == words_.end() || *it != w) {
        return std::nullopt;
    }
    return static_cast<size_t>(it - words_.begin());
}

namespace {

// BFS around e; level-by-level with children appended in increasing letter
// order, which is exactly the canonical (length, lex) order
std::vector<std::vector<Word>> levels_around_e(int radius, const TreeParams& params) {
    std::vector<std::vector<Word>> levels;
    levels.push_back({Word{}});
    for (int d = 0; d < radius; ++d) {
        std::vector<Word> next;
        next.reserve(levels.back().size() * params.degree());
        for (const Word& w : levels.back()) {
            for (uint32_t j = 1; j <= static_cast<uint32_t>(params.degree()); ++j) {
                if (w.is_identity() || w.letters().back() != j) {
                    std::vector<uint32_t> ext = w.letters();
                    ext.push_back(j);
                    next.push_back(Word::from_reduced(std::move(ext)));
                }
            }
        }
        levels.push_back(std::move(next));
    }
    return levels;
}

}  // namespace

VertexSet ball(const Word& center, int radius, const TreeParams& params) {
    if (radius < 0) {
        throw Error("ball radius must be >= 0");
    }
    auto levels = levels_around_e(radius, params);
    std::vector<Word> members;
    for (auto& level : levels) {
        for (auto& w : level) {
            members.push_back(std::move(w));
        }
    }
    if (center.is_identity()) {
        return VertexSet::from_sorted(std::move(members));  // BFS order is canonical
    }
    for (auto& w : members) {
        w = multiply(center, w, params);
    }
    return VertexSet(std::move(members));
}

VertexSet sphere(int n, const TreeParams& params) {
    if (n < 0) {
        throw Error("sphere index must be >= 0");
    }
    auto levels = levels_around_e(n, params);
    return VertexSet::from_sorted(std::move(levels.back()));
}

uint64_t ball_size(int k, int radius) {
    if (k == 1) {
        return 1 + 2 * static_cast<uint64_t>(radius);
    }
    // 1 + (k+1)(k^radius - 1)/(k-1)
    uint64_t pw = checked_pow_u64(static_cast<uint64_t>(k), static_cast<uint64_t>(radius));
    return 1 + checked_mul_u64(static_cast<uint64_t>(k) + 1, pw - 1) / (static_cast<uint64_t>(k) - 1);
}

uint64_t sphere_size(int k, int n) {
    if (n == 0) {
        return 1;
    }
    return checked_mul_u64(static_cast<uint64_t>(k) + 1,
                           checked_pow_u64(static_cast<uint64_t>(k), static_cast<uint64_t>(n - 1)));
}

}  // namespace cayleygs
