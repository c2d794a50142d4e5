#ifndef LYU_EXACTLA_HPP
#define LYU_EXACTLA_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "lyu/errors.hpp"
#include "lyu/field.hpp"
#include "lyu/monomial.hpp"

namespace lyu {

// ---------------------------------------------------------------------------
// Dense scalar matrices with entries in a field context F.

template <class F>
struct ScalarMat {
    int rows = 0, cols = 0;
    std::vector<typename F::Elem> a;

    ScalarMat() = default;
    ScalarMat(int r, int c, const F& f) : rows(r), cols(c), a(std::size_t(r) * c, f.zero()) {}

    typename F::Elem& at(int r, int c) { return a[std::size_t(r) * cols + c]; }
    const typename F::Elem& at(int r, int c) const { return a[std::size_t(r) * cols + c]; }
};

// exact rank by Gaussian elimination (works on a private copy)
template <class F>
int rank(ScalarMat<F> m, const F& f) {
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (!f.is_zero(m.at(i, c))) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = c; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        auto inv = f.inv(m.at(r, c));
        for (int i = r + 1; i < m.rows; ++i) {
            if (f.is_zero(m.at(i, c))) continue;
            auto factor = f.mul(m.at(i, c), inv);
            for (int j = c; j < m.cols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
        }
        ++r;
    }
    return r;
}

// rank of a {0, +1, -1} integer matrix over the given coefficient field
int sign_matrix_rank(int rows, int cols, const std::vector<int>& entries, const FieldSpec& k);

// ---------------------------------------------------------------------------
// Sparse matrices whose entries are scalar multiples of monomials.

template <class F>
struct MonoMat {
    struct Ent {
        typename F::Elem c;
        Monomial m;
    };

    int rows = 0, cols = 0;
    // row-major sparse storage; absent key means zero entry
    std::vector<std::map<int, Ent>> row;

    MonoMat() = default;
    MonoMat(int r, int c) : rows(r), cols(c), row(r) {}

    void set(int r, int c, typename F::Elem coef, Monomial m) {
        row[r][c] = Ent{std::move(coef), std::move(m)};
    }
    const Ent* get(int r, int c) const {
        auto it = row[r].find(c);
        return it == row[r].end() ? nullptr : &it->second;
    }
    long nnz() const {
        long s = 0;
        for (auto& rr : row) s += static_cast<long>(rr.size());
        return s;
    }
    int max_entry_degree() const {
        int d = 0;
        for (auto& rr : row)
            for (auto& [c, ent] : rr) d = std::max(d, ent.m.degree());
        return d;
    }
};

// ---------------------------------------------------------------------------
// Sparse multivariate polynomials with Kronecker-packed exponents, used only
// inside the fraction-free elimination.  Packing: 128 bits split evenly over
// the variables, variable 1 in the highest block, so integer comparison of
// packed keys is lex comparison of exponent vectors.

using PackedExp = unsigned __int128;

struct ExpPack {
    int n = 1;
    int shift = 128;

    explicit ExpPack(int nvars) : n(std::max(nvars, 1)), shift(128 / std::max(nvars, 1)) {}

    std::uint64_t capacity() const {
        return shift >= 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << shift) - 1;
    }
    PackedExp pack(const Monomial& m) const {
        PackedExp p = 0;
        for (int i = 0; i < n; ++i) {
            if (static_cast<std::uint64_t>(m.e[i]) > capacity())
                throw BudgetError("exponent overflow in packed representation");
            p = (p << shift) | static_cast<PackedExp>(m.e[i]);
        }
        return p;
    }
    int total_degree(PackedExp p) const {
        PackedExp mask = (PackedExp(1) << shift) - 1;
        int d = 0;
        for (int i = 0; i < n; ++i) {
            d += static_cast<int>(p & mask);
            p >>= shift;
        }
        return d;
    }
};

template <class F>
struct Poly {
    // terms sorted by packed exponent descending; leading term first
    std::vector<std::pair<PackedExp, typename F::Elem>> t;

    bool zero() const { return t.empty(); }
    static Poly monomial(PackedExp e, typename F::Elem c) { return Poly{{{e, std::move(c)}}}; }
};

template <class F>
Poly<F> poly_sub(const Poly<F>& a, const Poly<F>& b, const F& f) {
    Poly<F> r;
    r.t.reserve(a.t.size() + b.t.size());
    std::size_t i = 0, j = 0;
    while (i < a.t.size() || j < b.t.size()) {
        if (j == b.t.size() || (i < a.t.size() && a.t[i].first > b.t[j].first)) {
            r.t.push_back(a.t[i++]);
        } else if (i == a.t.size() || b.t[j].first > a.t[i].first) {
            r.t.emplace_back(b.t[j].first, f.neg(b.t[j].second));
            ++j;
        } else {
            auto c = f.sub(a.t[i].second, b.t[j].second);
            if (!f.is_zero(c)) r.t.emplace_back(a.t[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return r;
}

template <class F>
Poly<F> poly_mul(const Poly<F>& a, const Poly<F>& b, const F& f) {
    if (a.zero() || b.zero()) return {};
    std::map<PackedExp, typename F::Elem, std::greater<PackedExp>> acc;
    for (auto& [ea, ca] : a.t)
        for (auto& [eb, cb] : b.t) {
            auto prod = f.mul(ca, cb);
            auto [it, fresh] = acc.try_emplace(ea + eb, prod);
            if (!fresh) it->second = f.add(it->second, prod);
        }
    Poly<F> r;
    r.t.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (!f.is_zero(c)) r.t.emplace_back(e, c);
    return r;
}

// exact division, divisor known to divide the dividend (Bareiss guarantee)
template <class F>
Poly<F> poly_divexact(Poly<F> a, const Poly<F>& b, const F& f) {
    if (b.zero()) throw std::domain_error("polynomial division by zero");
    Poly<F> q;
    auto lead_inv = f.inv(b.t[0].second);
    PackedExp lead_exp = b.t[0].first;
    while (!a.zero()) {
        PackedExp e = a.t[0].first - lead_exp;  // exactness: subtraction is valid
        auto c = f.mul(a.t[0].second, lead_inv);
        q.t.emplace_back(e, c);
        a = poly_sub(a, poly_mul(Poly<F>::monomial(e, c), b, f), f);
    }
    return q;
}

// ---------------------------------------------------------------------------
// Rank over the fraction field K = Frac(k[x1..xn]).

// Deterministic fraction-free (Bareiss) elimination with polynomial pivots.
// Pivot choice: smallest total degree, ties broken by position.
template <class F>
int generic_rank_exact(const MonoMat<F>& m, const F& f) {
    const int rows = m.rows, cols = m.cols;
    if (rows == 0 || cols == 0) return 0;
    int nvars = 1;
    for (auto& rr : m.row)
        for (auto& [c, ent] : rr) nvars = std::max(nvars, ent.m.nvars());
    ExpPack pk(nvars);
    std::vector<std::vector<Poly<F>>> a(rows, std::vector<Poly<F>>(cols));
    for (int r = 0; r < rows; ++r)
        for (auto& [c, ent] : m.row[r]) a[r][c] = Poly<F>::monomial(pk.pack(ent.m), ent.c);

    Poly<F> prev;  // previous pivot; empty means "1"
    int rnk = 0;
    for (int step = 0; step < std::min(rows, cols); ++step) {
        // pivot search over the trailing block
        int pr = -1, pc = -1, best = -1;
        for (int r = step; r < rows; ++r)
            for (int c = step; c < cols; ++c) {
                if (a[r][c].zero()) continue;
                int deg = pk.total_degree(a[r][c].t[0].first);
                for (auto& [e, coef] : a[r][c].t) deg = std::max(deg, pk.total_degree(e));
                if (pr < 0 || deg < best) {
                    pr = r;
                    pc = c;
                    best = deg;
                }
            }
        if (pr < 0) break;
        std::swap(a[pr], a[step]);
        for (int r = 0; r < rows; ++r) std::swap(a[r][pc], a[r][step]);
        const Poly<F>& piv = a[step][step];
        for (int r = step + 1; r < rows; ++r) {
            for (int c = step + 1; c < cols; ++c) {
                Poly<F> num = poly_sub(poly_mul(a[r][c], piv, f), poly_mul(a[r][step], a[step][c], f), f);
                a[r][c] = prev.zero() ? std::move(num) : poly_divexact(std::move(num), prev, f);
            }
            a[r][step] = {};
        }
        prev = piv;
        ++rnk;
    }
    return rnk;
}

struct RandomizedRankMeta {
    int trials = 0;
    long sample_set_size = 0;
    // Schwartz-Zippel bound on the probability that a single trial
    // underestimates the generic rank
    double per_trial_failure_bound = 0.0;
    int extension_degree = 1;  // 1 when no field extension was needed
};

namespace detail {

template <class F, class Sampler>
int evaluated_rank(const MonoMat<F>& m, const F& f, int nvars, Sampler&& sample) {
    std::vector<typename F::Elem> vals;
    vals.reserve(nvars);
    for (int i = 0; i < nvars; ++i) vals.push_back(sample());
    ScalarMat<F> s(m.rows, m.cols, f);
    for (int r = 0; r < m.rows; ++r)
        for (auto& [c, ent] : m.row[r]) {
            auto v = ent.c;
            for (int i = 0; i < nvars; ++i)
                for (int k = 0; k < ent.m.e[i]; ++k) v = f.mul(v, vals[i]);
            s.at(r, c) = v;
        }
    return rank(std::move(s), f);
}

}  // namespace detail

// Monte-Carlo generic rank: max over trials of the rank at random evaluation
// points.  Always a lower bound on the exact generic rank; sample points come
// from k itself when |k| is large enough relative to the matrix, otherwise
// from an extension field of sufficient size.
template <class F>
int generic_rank_randomized(const MonoMat<F>& m, const F& f, std::uint64_t seed, int trials,
                            RandomizedRankMeta* meta = nullptr);

template <>
int generic_rank_randomized<RatField>(const MonoMat<RatField>& m, const RatField& f,
                                      std::uint64_t seed, int trials, RandomizedRankMeta* meta);
template <>
int generic_rank_randomized<FpField>(const MonoMat<FpField>& m, const FpField& f,
                                     std::uint64_t seed, int trials, RandomizedRankMeta* meta);

}  // namespace lyu

#endif
