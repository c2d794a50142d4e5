#ifndef LYU_RESOLUTION_HPP
#define LYU_RESOLUTION_HPP

#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "lyu/exactla.hpp"
#include "lyu/field.hpp"
#include "lyu/monomial.hpp"
#include "lyu/simplicial.hpp"

namespace lyu {

// ---------------------------------------------------------------------------
// Betti tables.

struct BettiTable {
    // beta_{i,j} by (homological degree, total degree)
    std::map<std::pair<int, int>, long> by_ij;
    // multigraded refinement (homological degree, multidegree)
    std::map<std::pair<int, std::vector<int>>, long> by_mdeg;

    long beta(int i, int j) const {
        auto it = by_ij.find({i, j});
        return it == by_ij.end() ? 0 : it->second;
    }
    void add(int i, const Monomial& mdeg, long count = 1) {
        by_ij[{i, mdeg.degree()}] += count;
        by_mdeg[{i, mdeg.e}] += count;
    }
    long alternating_sum() const {
        long s = 0;
        for (auto& [ij, b] : by_ij) s += (ij.first % 2 == 0 ? b : -b);
        return s;
    }
    int max_total_degree() const {
        int d = 0;
        for (auto& [ij, b] : by_ij)
            if (b != 0) d = std::max(d, ij.second);
        return d;
    }
    int max_homological_degree() const {
        int d = 0;
        for (auto& [ij, b] : by_ij)
            if (b != 0) d = std::max(d, ij.first);
        return d;
    }
    bool operator==(const BettiTable& o) const { return by_mdeg == o.by_mdeg; }
};

// ---------------------------------------------------------------------------
// Multigraded free complexes over a field context F.
//
// terms[i] lists the generator multidegrees in homological degree i; the
// differential out of degree i (i >= 1) maps terms[i] -> terms[i-1].

template <class F>
struct FreeComplexT {
    int n = 0;
    F field;
    std::vector<std::vector<Monomial>> terms;
    std::vector<MonoMat<F>> diffs;  // diffs[i-1] is the differential out of degree i
    bool minimal = false;

    explicit FreeComplexT(int nvars, F f) : n(nvars), field(std::move(f)) {}

    int length() const { return static_cast<int>(terms.size()); }
    const MonoMat<F>& diff(int i) const { return diffs.at(i - 1); }
    MonoMat<F>& diff(int i) { return diffs.at(i - 1); }

    bool is_minimal() const {
        for (auto& d : diffs)
            for (auto& r : d.row)
                for (auto& [c, ent] : r)
                    if (ent.m.degree() == 0) return false;
        return true;
    }

    // every entry's monomial must equal source multidegree / target multidegree
    bool is_multihomogeneous() const {
        for (int i = 1; i < length(); ++i)
            for (int r = 0; r < diff(i).rows; ++r)
                for (auto& [c, ent] : diff(i).row[r]) {
                    const Monomial& src = terms[i][c];
                    const Monomial& dst = terms[i - 1][r];
                    if (!dst.divides(src) || !(src.quotient(dst) == ent.m)) return false;
                }
        return true;
    }

    // exact check that consecutive differentials compose to zero
    bool composes_to_zero() const {
        for (int i = 2; i < length(); ++i) {
            const auto& hi = diff(i);      // degree i -> i-1
            const auto& lo = diff(i - 1);  // degree i-1 -> i-2
            for (int c = 0; c < hi.cols; ++c) {
                std::map<std::pair<int, std::vector<int>>, typename F::Elem> acc;
                for (int mid = 0; mid < hi.rows; ++mid) {
                    auto* e1 = hi.get(mid, c);
                    if (!e1) continue;
                    for (int r = 0; r < lo.rows; ++r) {
                        auto* e2 = lo.get(r, mid);
                        if (!e2) continue;
                        auto prod = field.mul(e1->c, e2->c);
                        auto key = std::make_pair(r, e1->m.times(e2->m).e);
                        auto [it, fresh] = acc.try_emplace(key, prod);
                        if (!fresh) it->second = field.add(it->second, prod);
                    }
                }
                for (auto& [key, v] : acc)
                    if (!field.is_zero(v)) return false;
            }
        }
        return true;
    }
};

// ---------------------------------------------------------------------------
// Taylor complex: term i has a generator for each (i+1)-subset S of the
// generating set, with multidegree lcm(S); differential entries are signed
// lcm quotients.

template <class F>
FreeComplexT<F> taylor_complex(const MonomialIdeal& ideal, F field, int generator_budget = 20) {
    if (!ideal.is_proper_nonzero())
        throw InputError("taylor complex needs a proper nonzero ideal");
    const int g = static_cast<int>(ideal.gens().size());
    if (g > generator_budget)
        throw BudgetError("taylor complex: " + std::to_string(g) + " generators exceed budget " +
                          std::to_string(generator_budget));
    const int n = ideal.nvars();
    FreeComplexT<F> cx(n, field);

    // subsets grouped by cardinality, with index maps
    std::vector<std::vector<std::uint32_t>> subsets(g + 1);
    for (std::uint32_t s = 1; s < (std::uint32_t(1) << g); ++s)
        subsets[std::popcount(s)].push_back(s);
    std::vector<std::map<std::uint32_t, int>> index(g + 1);
    for (int c = 1; c <= g; ++c)
        for (std::size_t i = 0; i < subsets[c].size(); ++i) index[c][subsets[c][i]] = static_cast<int>(i);

    std::vector<std::map<std::uint32_t, Monomial>> lcms(g + 1);
    for (int c = 1; c <= g; ++c)
        for (auto s : subsets[c]) {
            Monomial l = Monomial::one(n);
            for (int j = 0; j < g; ++j)
                if (s >> j & 1) l = Monomial::lcm(l, ideal.gens()[j]);
            lcms[c].emplace(s, std::move(l));
        }

    for (int c = 1; c <= g; ++c) {
        std::vector<Monomial> term;
        for (auto s : subsets[c]) term.push_back(lcms[c].at(s));
        cx.terms.push_back(std::move(term));
    }
    for (int c = 2; c <= g; ++c) {
        MonoMat<F> d(static_cast<int>(subsets[c - 1].size()), static_cast<int>(subsets[c].size()));
        for (std::size_t col = 0; col < subsets[c].size(); ++col) {
            std::uint32_t s = subsets[c][col];
            const Monomial& ls = lcms[c].at(s);
            int pos = 0;
            for (int j = 0; j < g; ++j) {
                if (!(s >> j & 1)) continue;
                std::uint32_t t = s & ~(std::uint32_t(1) << j);
                const Monomial& lt = lcms[c - 1].at(t);
                auto coef = pos % 2 == 0 ? field.one() : field.neg(field.one());
                d.set(index[c - 1].at(t), static_cast<int>(col), coef, ls.quotient(lt));
                ++pos;
            }
        }
        cx.diffs.push_back(std::move(d));
    }
    cx.minimal = cx.is_minimal();
    return cx;
}

// ---------------------------------------------------------------------------
// Rooted subcomplex of the Taylor complex.  S = {i_1 < ... < i_k} is rooted
// when no earlier generator divides the lcm of any suffix {i_t, ..., i_k}.
// Rooted sets are closed under deletion, so the restricted differential is a
// subcomplex, and it is still a free resolution; usually far smaller than the
// full Taylor complex, which makes it the better pruning start for ideals
// near the generator budget.

template <class F>
FreeComplexT<F> rooted_subcomplex(const MonomialIdeal& ideal, F field, int generator_budget = 20) {
    if (!ideal.is_proper_nonzero())
        throw InputError("rooted subcomplex needs a proper nonzero ideal");
    const int g = static_cast<int>(ideal.gens().size());
    if (g > generator_budget)
        throw BudgetError("taylor complex: " + std::to_string(g) + " generators exceed budget " +
                          std::to_string(generator_budget));
    const int n = ideal.nvars();
    const auto& gens = ideal.gens();

    // DFS by prepending smaller indices; the new suffix is the whole set, so
    // only the new element's condition needs checking at each step.
    std::vector<std::vector<std::pair<std::uint64_t, Monomial>>> levels(g + 1);
    std::vector<std::pair<std::uint64_t, Monomial>> stack;
    for (int i = g - 1; i >= 0; --i) {
        bool ok = true;
        for (int j = 0; j < i && ok; ++j)
            if (gens[j].divides(gens[i])) ok = false;
        if (ok) stack.emplace_back(std::uint64_t(1) << i, gens[i]);
    }
    while (!stack.empty()) {
        auto [s, l] = std::move(stack.back());
        stack.pop_back();
        levels[std::popcount(s)].emplace_back(s, l);
        const int lo = std::countr_zero(s);
        for (int i = lo - 1; i >= 0; --i) {
            Monomial l2 = Monomial::lcm(gens[i], l);
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                if (gens[j].divides(l2)) ok = false;
            if (ok) stack.emplace_back(s | (std::uint64_t(1) << i), std::move(l2));
        }
    }

    FreeComplexT<F> cx(n, field);
    std::vector<std::map<std::uint64_t, int>> index(g + 1);
    int top = g;
    while (top >= 1 && levels[top].empty()) --top;
    for (int c = 1; c <= top; ++c) {
        std::sort(levels[c].begin(), levels[c].end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<Monomial> term;
        for (std::size_t i = 0; i < levels[c].size(); ++i) {
            index[c][levels[c][i].first] = static_cast<int>(i);
            term.push_back(levels[c][i].second);
        }
        cx.terms.push_back(std::move(term));
    }
    for (int c = 2; c <= top; ++c) {
        MonoMat<F> d(static_cast<int>(levels[c - 1].size()), static_cast<int>(levels[c].size()));
        for (std::size_t col = 0; col < levels[c].size(); ++col) {
            auto [s, ls] = levels[c][col];
            int pos = 0;
            for (int j = 0; j < g; ++j) {
                if (!(s >> j & 1)) continue;
                std::uint64_t t = s & ~(std::uint64_t(1) << j);
                Monomial lt = Monomial::one(n);
                for (int q = 0; q < g; ++q)
                    if (t >> q & 1) lt = Monomial::lcm(lt, gens[q]);
                auto coef = pos % 2 == 0 ? field.one() : field.neg(field.one());
                d.set(index[c - 1].at(t), static_cast<int>(col), coef, ls.quotient(lt));
                ++pos;
            }
        }
        cx.diffs.push_back(std::move(d));
    }
    cx.minimal = cx.is_minimal();
    return cx;
}

// ---------------------------------------------------------------------------
// Pruning: iterated cancellation of invertible (degree-zero) entries.

enum class PruneOrder { low_degree_first, high_degree_first };

namespace detail {

// Cancels the unit entry at (r, c) of the differential out of homological
// degree i.  alive flags mark surviving generators; entries are updated in
// place on the row-map representation.
template <class F>
void cancel_unit(FreeComplexT<F>& cx, int i, int r, int c,
                 std::vector<std::vector<char>>& alive) {
    const F& f = cx.field;
    auto& d = cx.diff(i);
    auto unit = d.get(r, c)->c;
    auto unit_inv = f.inv(unit);

    // capture pivot row (entries e[r, b]) and pivot column (entries e[a, c])
    std::vector<std::pair<int, typename MonoMat<F>::Ent>> prow(d.row[r].begin(), d.row[r].end());
    std::vector<std::pair<int, typename MonoMat<F>::Ent>> pcol;
    for (int a = 0; a < d.rows; ++a) {
        if (a == r || !alive[i - 1][a]) continue;
        auto* e = d.get(a, c);
        if (e) pcol.emplace_back(a, *e);
    }
    // e[a,b] -= e[a,c] * unit^{-1} * e[r,b]; multihomogeneity makes the
    // correction a single scalar*monomial term with the same monomial slot
    for (auto& [a, eac] : pcol) {
        for (auto& [b, erb] : prow) {
            if (b == c || !alive[i][b]) continue;
            auto corr = f.mul(f.mul(eac.c, unit_inv), erb.c);
            Monomial m = eac.m.times(erb.m);
            auto it = d.row[a].find(b);
            if (it == d.row[a].end()) {
                d.row[a][b] = {f.neg(corr), std::move(m)};
            } else {
                it->second.c = f.sub(it->second.c, corr);
                if (f.is_zero(it->second.c)) d.row[a].erase(it);
            }
        }
    }
    // drop the cancelled generators' rows/columns
    alive[i][c] = 0;
    alive[i - 1][r] = 0;
    d.row[r].clear();
    for (int a = 0; a < d.rows; ++a) d.row[a].erase(c);
    if (i < cx.length() - 1) {          // differential into degree i: delete row c
        auto& up = cx.diff(i + 1);
        up.row[c].clear();
    }
    if (i >= 2) {                       // differential out of degree i-1: delete column r
        auto& down = cx.diff(i - 1);
        for (int a = 0; a < down.rows; ++a) down.row[a].erase(r);
    }
}

}  // namespace detail

template <class F>
FreeComplexT<F> prune_to_minimal(const FreeComplexT<F>& input,
                                 PruneOrder order = PruneOrder::low_degree_first,
                                 bool debug_check = false) {
    FreeComplexT<F> cx = input;
    const F& f = cx.field;
    std::vector<std::vector<char>> alive;
    for (auto& t : cx.terms) alive.emplace_back(t.size(), 1);

    bool progress = true;
    while (progress) {
        progress = false;
        std::vector<int> degrees(cx.length() - 1);
        for (int k = 0; k < cx.length() - 1; ++k)
            degrees[k] = order == PruneOrder::low_degree_first ? k + 1 : cx.length() - 1 - k;
        for (int i : degrees) {
            auto& d = cx.diff(i);
            bool found = true;
            while (found) {
                found = false;
                for (int r = 0; r < d.rows && !found; ++r) {
                    if (!alive[i - 1][r]) continue;
                    for (auto& [c, ent] : d.row[r]) {
                        if (!alive[i][c]) continue;
                        if (ent.m.degree() == 0 && !f.is_zero(ent.c)) {
                            detail::cancel_unit(cx, i, r, c, alive);
                            found = true;
                            progress = true;
                            break;
                        }
                    }
                }
            }
        }
    }

    // compress to surviving generators
    FreeComplexT<F> out(cx.n, f);
    std::vector<std::vector<int>> remap(cx.length());
    for (int i = 0; i < cx.length(); ++i) {
        remap[i].assign(cx.terms[i].size(), -1);
        std::vector<Monomial> term;
        for (std::size_t j = 0; j < cx.terms[i].size(); ++j)
            if (alive[i][j]) {
                remap[i][j] = static_cast<int>(term.size());
                term.push_back(cx.terms[i][j]);
            }
        out.terms.push_back(std::move(term));
    }
    while (!out.terms.empty() && out.terms.back().empty()) out.terms.pop_back();
    for (int i = 1; i < out.length(); ++i) {
        MonoMat<F> d(static_cast<int>(out.terms[i - 1].size()),
                     static_cast<int>(out.terms[i].size()));
        auto& src = cx.diff(i);
        for (int r = 0; r < src.rows; ++r) {
            if (remap[i - 1][r] < 0) continue;
            for (auto& [c, ent] : src.row[r])
                if (remap[i][c] >= 0) d.set(remap[i - 1][r], remap[i][c], ent.c, ent.m);
        }
        out.diffs.push_back(std::move(d));
    }
    out.minimal = true;
    if (!out.is_minimal() || !out.is_multihomogeneous())
        throw PropertyViolation("pruning failed to reach a minimal multihomogeneous complex");
    if (debug_check && !out.composes_to_zero())
        throw PropertyViolation("pruning produced d o d != 0");
    return out;
}

// ranks of a minimal complex per (homological degree, degree/multidegree)
template <class F>
BettiTable betti_table(const FreeComplexT<F>& cx) {
    if (!cx.minimal || !cx.is_minimal())
        throw InputError("betti_table needs a minimal complex");
    BettiTable t;
    for (int i = 0; i < cx.length(); ++i)
        for (auto& m : cx.terms[i]) t.add(i, m);
    return t;
}

// ---------------------------------------------------------------------------
// Independent oracles.

// Hochster's formula: beta_{i,sigma}(I_Delta) = dim H~_{|sigma|-i-2}(Delta|_sigma)
BettiTable hochster_betti(const MonomialIdeal& ideal, const FieldSpec& k);

// Upper Koszul simplicial complexes: beta_{i,b}(I) = dim H~_{i-1}(K^b(I));
// candidate multidegrees are the lcms of generator subsets.
BettiTable koszul_betti(const MonomialIdeal& ideal, const FieldSpec& k);

}  // namespace lyu

#endif
