#ifndef LYU_STRANDS_HPP
#define LYU_STRANDS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lyu/resolution.hpp"

namespace lyu {

enum class RankMode { exact, randomized };

struct RankOptions {
    RankMode mode = RankMode::exact;
    std::uint64_t seed = 0;
    int trials = 3;
    // randomized results are cross-validated against exact elimination for
    // matrices smaller than this dimension
    int cross_validate_below = 12;
};

// The nu-table of an ideal: nu_{i,j} indexed by (homological degree i, total
// degree j); l is the minimum generator degree.
struct NuTable {
    int l = 0;
    int nvars = 0;
    std::map<std::pair<int, int>, long> entries;
    // per-matrix Schwartz-Zippel failure bounds, present in randomized mode
    std::vector<RandomizedRankMeta> randomized_meta;

    long nu(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }
    void set(int i, int j, long v) {
        if (v != 0) entries[{i, j}] = v;
    }
    long alternating_sum() const {
        long s = 0;
        for (auto& [ij, v] : entries) s += (ij.first % 2 == 0 ? v : -v);
        return s;
    }
    bool operator==(const NuTable& o) const { return l == o.l && entries == o.entries; }
};

// r-linear strand of a minimal complex: generators of total degree i + r in
// homological degree i, with only the degree-1 entries of the differentials.
template <class F>
struct LinearStrandT {
    int r = 0;
    std::vector<long> ranks;       // ranks[i] = beta_{i,i+r}
    std::vector<MonoMat<F>> diffs; // diffs[i-1]: strand degree i -> i-1
};

template <class F>
LinearStrandT<F> linear_strand(const FreeComplexT<F>& cx, int r) {
    if (!cx.minimal) throw InputError("linear_strand needs a minimal complex");
    LinearStrandT<F> s;
    s.r = r;
    std::vector<std::vector<int>> keep(cx.length());
    for (int i = 0; i < cx.length(); ++i) {
        for (std::size_t j = 0; j < cx.terms[i].size(); ++j)
            if (cx.terms[i][j].degree() == i + r) keep[i].push_back(static_cast<int>(j));
        s.ranks.push_back(static_cast<long>(keep[i].size()));
    }
    while (!s.ranks.empty() && s.ranks.back() == 0) s.ranks.pop_back();
    for (int i = 1; i < static_cast<int>(s.ranks.size()); ++i) {
        std::map<int, int> colmap, rowmap;
        for (std::size_t j = 0; j < keep[i].size(); ++j) colmap[keep[i][j]] = static_cast<int>(j);
        for (std::size_t j = 0; j < keep[i - 1].size(); ++j) rowmap[keep[i - 1][j]] = static_cast<int>(j);
        MonoMat<F> d(static_cast<int>(keep[i - 1].size()), static_cast<int>(keep[i].size()));
        const auto& src = cx.diff(i);
        for (auto& [orig_row, newr] : rowmap)
            for (auto& [c, ent] : src.row[orig_row]) {
                auto it = colmap.find(c);
                if (it == colmap.end()) continue;
                if (ent.m.degree() != 1) continue;  // keeps only the linear part
                d.set(newr, it->second, ent.c, ent.m);
            }
        s.diffs.push_back(std::move(d));
    }
    return s;
}

namespace detail {

template <class F>
int strand_rank(const MonoMat<F>& m, const F& f, const RankOptions& opt,
                std::vector<RandomizedRankMeta>* metas) {
    if (opt.mode == RankMode::exact) return generic_rank_exact(m, f);
    RandomizedRankMeta meta;
    int r = generic_rank_randomized(m, f, opt.seed + static_cast<std::uint64_t>(m.rows) * 1000003u +
                                            static_cast<std::uint64_t>(m.cols),
                                    opt.trials, &meta);
    if (std::min(m.rows, m.cols) < opt.cross_validate_below) {
        int ex = generic_rank_exact(m, f);
        if (ex != r)
            throw PropertyViolation("randomized generic rank disagreed with exact elimination");
    }
    if (metas) metas->push_back(meta);
    return r;
}

// nu-table from an already-minimal resolution
template <class F>
NuTable nu_table_from_minimal(const FreeComplexT<F>& cx, const RankOptions& opt) {
    NuTable t;
    t.nvars = cx.n;
    std::set<int> offsets;
    int l = -1;
    for (int i = 0; i < cx.length(); ++i)
        for (auto& m : cx.terms[i]) {
            offsets.insert(m.degree() - i);
            if (i == 0 && (l < 0 || m.degree() < l)) l = m.degree();
        }
    t.l = l;
    for (int r : offsets) {
        auto s = linear_strand(cx, r);
        std::vector<int> ranks(s.ranks.size() + 1, 0);  // ranks[i] = rank of diff out of i
        for (int i = 1; i < static_cast<int>(s.ranks.size()); ++i)
            ranks[i] = strand_rank(s.diffs[i - 1], cx.field, opt, &t.randomized_meta);
        for (int i = 0; i < static_cast<int>(s.ranks.size()); ++i) {
            long inward = i + 1 < static_cast<int>(ranks.size()) ? ranks[i + 1] : 0;
            t.set(i, i + r, s.ranks[i] - ranks[i] - inward);
        }
    }
    return t;
}

}  // namespace detail

// asserts the structural nu-table invariants; throws PropertyViolation
void check_nu_invariants(const NuTable& t, const BettiTable& betti);

template <class F>
NuTable nu_table_impl(const MonomialIdeal& ideal, F field, const RankOptions& opt,
                      int generator_budget = 20) {
    auto minimal = prune_to_minimal(rooted_subcomplex(ideal, field, generator_budget));
    NuTable t = detail::nu_table_from_minimal(minimal, opt);
    check_nu_invariants(t, betti_table(minimal));
    return t;
}

// runtime entry point, dispatching on the field spec
NuTable nu_table(const MonomialIdeal& ideal, const FieldSpec& k, const RankOptions& opt = {},
                 int generator_budget = 20);

// minimal Betti numbers through the Taylor-prune pipeline (runtime dispatch)
BettiTable resolution_betti(const MonomialIdeal& ideal, const FieldSpec& k,
                            int generator_budget = 20);

bool is_trivial_nu(const NuTable& t);

struct NuColumnSums {
    std::vector<long> sums;                // nu_i = sum_j nu_{i,j}
    std::vector<bool> nontrivial;          // nu_0 nontrivial means >= 2, later columns >= 1
    bool last_column_trivial = true;       // nu_n must always be trivial
};
NuColumnSums nu_column_sums(const NuTable& t);

struct ConsecutivenessReport {
    bool pass = true;
    int violating_index = -1;
    std::string clause;
};
ConsecutivenessReport check_nu_consecutiveness(const NuTable& t);

struct ComponentwiseLinearReport {
    bool componentwise_linear = false;
    int sweep_min = 0;
    int sweep_max = 0;  // the audited degree range [sweep_min, sweep_max]
    int failing_degree = -1;
};
ComponentwiseLinearReport is_componentwise_linear(const MonomialIdeal& ideal, const FieldSpec& k,
                                                  int degree_budget = 12);

}  // namespace lyu

#endif
