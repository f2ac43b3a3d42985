#include "cayleygs/periodic_subgroups.hpp"

#include <algorithm>
#include <set>

namespace cayleygs {

namespace {

void check_m(int m) {
    if (m < 1) {
        throw Error("m must be >= 1, got " + std::to_string(m));
    }
    if (m > 20) {
        throw Error("m = " + std::to_string(m) + " labels would not fit a practical census");
    }
}

}  // namespace

ParityPattern::ParityPattern(std::string letters) : letters_(std::move(letters)) {
    if (letters_.empty()) {
        throw Error("empty parity pattern");
    }
    for (char c : letters_) {
        if (c != 'e' && c != 'o') {
            throw Error("parity pattern letters must be 'e' or 'o'");
        }
    }
}

int ParityPattern::odd_count() const {
    return static_cast<int>(std::count(letters_.begin(), letters_.end(), 'o'));
}

uint32_t ParityPattern::rank_value() const {
    uint32_t v = 0;
    for (size_t i = 0; i < letters_.size(); ++i) {
        if (letters_[i] == 'o') {
            v |= uint32_t{1} << i;
        }
    }
    return v;
}

uint32_t ParityPattern::label_mask() const {
    const int m = size();
    uint32_t v = 0;
    for (int i = 1; i <= m; ++i) {
        if (letters_[static_cast<size_t>(i - 1)] == 'o') {
            v |= uint32_t{1} << (m - i);
        }
    }
    return v;
}

std::vector<ParityPattern> build_alpha_patterns(int m) {
    check_m(m);
    std::vector<ParityPattern> selected;
    for (uint32_t bits = 0; bits < (uint32_t{1} << m); ++bits) {
        int odd = __builtin_popcount(bits);
        bool keep = false;
        if (2 * odd < m) {
            keep = true;  // strictly more 'e' than 'o'
        } else if (2 * odd == m) {
            // balanced: keep the member of each complementary pair with the
            // smaller rank value
            uint32_t complement = ~bits & ((uint32_t{1} << m) - 1);
            keep = bits < complement;
        }
        if (keep) {
            std::string letters(static_cast<size_t>(m), 'e');
            for (int i = 0; i < m; ++i) {
                if (bits & (uint32_t{1} << i)) {
                    letters[static_cast<size_t>(i)] = 'o';
                }
            }
            selected.emplace_back(std::move(letters));
        }
    }
    std::sort(selected.begin(), selected.end(), [](const ParityPattern& a, const ParityPattern& b) {
        if (a.odd_count() != b.odd_count()) {
            return a.odd_count() < b.odd_count();
        }
        return a.rank_value() < b.rank_value();
    });
    return selected;
}

std::string format_label(uint32_t value, int m) {
    std::string out(static_cast<size_t>(m), '0');
    for (int i = 1; i <= m; ++i) {
        if (value & (uint32_t{1} << (m - i))) {
            out[static_cast<size_t>(i - 1)] = '1';
        }
    }
    return out;
}

uint32_t parse_label(std::string_view text, int m) {
    if (static_cast<int>(text.size()) != m) {
        throw Error("label '" + std::string(text) + "' is not " + std::to_string(m) + " bits");
    }
    uint32_t v = 0;
    for (int i = 1; i <= m; ++i) {
        char c = text[static_cast<size_t>(i - 1)];
        if (c == '1') {
            v |= uint32_t{1} << (m - i);
        } else if (c != '0') {
            throw Error("label '" + std::string(text) + "' has non-binary characters");
        }
    }
    return v;
}

SubgroupSpec SubgroupSpec::from_a_sets(int k, int m, std::vector<std::vector<int>> a_sets) {
    check_m(m);
    TreeParams tree(k);
    if (static_cast<int>(a_sets.size()) != m) {
        throw Error("expected " + std::to_string(m) + " A-sets, got " +
                    std::to_string(a_sets.size()));
    }
    SubgroupSpec spec;
    spec.k_ = k;
    spec.m_ = m;
    for (auto& a : a_sets) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        for (int j : a) {
            if (j < 1 || j > tree.degree()) {
                throw InvalidGeneratorError("A-set member " + std::to_string(j) + " outside 1.." +
                                            std::to_string(tree.degree()));
            }
        }
    }
    spec.a_sets_ = std::move(a_sets);
    spec.vectors_.assign(static_cast<size_t>(tree.degree()), 0);
    for (int i = 1; i <= m; ++i) {
        for (int j : spec.a_sets_[static_cast<size_t>(i - 1)]) {
            spec.vectors_[static_cast<size_t>(j - 1)] |= uint32_t{1} << (m - i);
        }
    }
    return spec;
}

SubgroupSpec SubgroupSpec::from_vectors(int k, int m, std::vector<uint32_t> vectors) {
    check_m(m);
    TreeParams tree(k);
    if (static_cast<int>(vectors.size()) != tree.degree()) {
        throw Error("expected " + std::to_string(tree.degree()) + " generator vectors, got " +
                    std::to_string(vectors.size()));
    }
    for (uint32_t v : vectors) {
        if (v >= (uint32_t{1} << m)) {
            throw Error("generator vector does not fit in " + std::to_string(m) + " bits");
        }
    }
    SubgroupSpec spec;
    spec.k_ = k;
    spec.m_ = m;
    spec.vectors_ = std::move(vectors);
    spec.a_sets_.assign(static_cast<size_t>(m), {});
    for (int j = 1; j <= tree.degree(); ++j) {
        uint32_t v = spec.vectors_[static_cast<size_t>(j - 1)];
        for (int i = 1; i <= m; ++i) {
            if (v & (uint32_t{1} << (m - i))) {
                spec.a_sets_[static_cast<size_t>(i - 1)].push_back(j);
            }
        }
    }
    return spec;
}

bool SubgroupSpec::valid() const {
    std::set<uint32_t> distinct;
    for (uint32_t v : vectors_) {
        if (v == 0 || !distinct.insert(v).second) {
            return false;
        }
    }
    return true;
}

bool SubgroupSpec::full_index() const {
    // GF(2) rank via Gaussian elimination
    std::vector<uint32_t> basis;
    for (uint32_t v : vectors_) {
        for (uint32_t b : basis) {
            v = std::min(v, v ^ b);
        }
        if (v) {
            basis.push_back(v);
        }
    }
    return static_cast<int>(basis.size()) == m_;
}

SubgroupSpec build_a_sets(int k, int m) {
    check_m(m);
    TreeParams tree(k);
    if (k != (1 << (m - 1)) - 1) {
        throw RegimeError("the literal A-set construction needs k = 2^(m-1) - 1 (k=" +
                          std::to_string(k) + ", m=" + std::to_string(m) +
                          "); use generalize_a_sets for other k");
    }
    auto patterns = build_alpha_patterns(m);
    // patterns[0] is all-even; patterns[1..k] are assigned to generators 1..k
    std::vector<std::vector<int>> a_sets(static_cast<size_t>(m));
    for (int i = 1; i <= m; ++i) {
        auto& a = a_sets[static_cast<size_t>(i - 1)];
        for (int j = 1; j <= k; ++j) {
            if (patterns[static_cast<size_t>(j)].letters()[static_cast<size_t>(i - 1)] == 'o') {
                a.push_back(j);
            }
        }
        a.push_back(k + 1);
    }
    return SubgroupSpec::from_a_sets(k, m, std::move(a_sets));
}

SubgroupSpec generalize_a_sets(int k, int m, std::optional<std::vector<uint32_t>> vectors) {
    check_m(m);
    TreeParams tree(k);
    const uint32_t nonzero = (uint32_t{1} << m) - 1;
    if (static_cast<uint32_t>(tree.degree()) > nonzero) {
        throw PigeonholeError("no valid spec exists: " + std::to_string(tree.degree()) +
                              " generators need distinct nonzero " + std::to_string(m) +
                              "-bit vectors, only " + std::to_string(nonzero) + " exist");
    }
    std::vector<uint32_t> vs;
    if (vectors) {
        vs = std::move(*vectors);
    } else {
        for (int j = 1; j <= k; ++j) {
            vs.push_back(static_cast<uint32_t>(j));
        }
        uint32_t all_ones = nonzero;
        if (std::find(vs.begin(), vs.end(), all_ones) == vs.end()) {
            vs.push_back(all_ones);
        } else {
            for (uint32_t c = 1; c <= nonzero; ++c) {
                if (std::find(vs.begin(), vs.end(), c) == vs.end()) {
                    vs.push_back(c);
                    break;
                }
            }
        }
    }
    SubgroupSpec spec = SubgroupSpec::from_vectors(k, m, std::move(vs));
    if (!spec.valid()) {
        throw Error("generator vectors must be pairwise distinct and nonzero");
    }
    return spec;
}

uint32_t parity_vector(const Word& x, const SubgroupSpec& spec) {
    uint32_t p = 0;
    for (uint32_t a : x.letters()) {
        if (a > spec.generator_vectors().size()) {
            throw ParameterError("word '" + x.str() + "' uses generators outside the spec's tree");
        }
        p ^= spec.generator_vectors()[a - 1];
    }
    return p;
}

GammaReport gamma_check(const SubgroupSpec& spec, int region_radius) {
    if (region_radius < 0) {
        throw Error("region radius must be >= 0");
    }
    TreeParams tree(spec.k());
    VertexSet region = ball(Word{}, region_radius, tree);
    GammaReport report;
    std::vector<uint32_t> labels;
    for (const Word& x : region) {
        uint32_t base = parity_vector(x, spec);
        labels.clear();
        labels.push_back(base);
        for (uint32_t v : spec.generator_vectors()) {
            labels.push_back(base ^ v);
        }
        std::sort(labels.begin(), labels.end());
        if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
            report.pass = false;
            report.witness = x;
            return report;
        }
    }
    return report;
}

CosetColoring::CosetColoring(int m, std::vector<int> colors) : m_(m), colors_(std::move(colors)) {
    check_m(m_);
    if (colors_.size() != (size_t{1} << m_)) {
        throw Error("coloring needs exactly " + std::to_string(size_t{1} << m_) +
                    " colors, got " + std::to_string(colors_.size()));
    }
}

CosetColoring CosetColoring::constant(int m, int spin) {
    check_m(m);
    return CosetColoring(m, std::vector<int>(size_t{1} << m, spin));
}

SpinConfiguration periodic_config(const CosetColoring& coloring, const SubgroupSpec& spec, int n,
                                  int q) {
    if (coloring.m() != spec.m()) {
        throw ParameterError("coloring has " + std::to_string(coloring.m()) +
                             " bit labels, spec has " + std::to_string(spec.m()));
    }
    for (int c : coloring.colors()) {
        if (c < 1 || c > q) {
            throw InvalidSpinError("coloring uses spin " + std::to_string(c) + " outside 1.." +
                                   std::to_string(q));
        }
    }
    TreeParams tree(spec.k());
    VertexSet support = ball(Word{}, n, tree);
    std::vector<int> values;
    values.reserve(support.size());
    for (const Word& x : support) {
        values.push_back(coloring.color(parity_vector(x, spec)));
    }
    return SpinConfiguration(std::move(support), std::move(values), q);
}

}  // namespace cayleygs
