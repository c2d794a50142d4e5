#include "lyu/monomial.hpp"

#include <bit>
#include <functional>
#include <set>

#include "lyu/simplicial.hpp"

namespace lyu {

std::string Monomial::str() const {
    std::string s;
    for (int i = 0; i < nvars(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i + 1);
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool keep = true;
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (i != j && gens[j].divides(gens[i]) && !(gens[i] == gens[j])) {
                keep = false;
                break;
            }
        // among equal monomials only the deduped copy remains, so i != j is safe
        if (keep) out.push_back(gens[i]);
    }
    return out;
}

MonomialIdeal MonomialIdeal::from_gens(int n, std::vector<Monomial> gens) {
    for (auto& g : gens) {
        if (g.nvars() != n) throw InputError("generator has wrong number of variables");
        for (int x : g.e)
            if (x < 0) throw InputError("negative exponent");
    }
    if (gens.empty()) return zero_ideal(n);
    auto mg = minimalize(std::move(gens));
    if (mg.size() == 1 && mg[0].is_one()) return unit_ideal(n);
    return MonomialIdeal(n, std::move(mg), State::proper);
}

int MonomialIdeal::min_gen_degree() const {
    if (!is_proper_nonzero()) throw InputError("degree of marker ideal");
    int d = gens_[0].degree();
    for (auto& g : gens_) d = std::min(d, g.degree());
    return d;
}

int MonomialIdeal::max_gen_degree() const {
    if (!is_proper_nonzero()) throw InputError("degree of marker ideal");
    int d = 0;
    for (auto& g : gens_) d = std::max(d, g.degree());
    return d;
}

MonomialIdeal MonomialIdeal::radical() const {
    if (!is_proper_nonzero()) return *this;
    std::vector<Monomial> sq;
    for (auto& g : gens_) sq.push_back(Monomial::from_mask(n_, g.support_mask()));
    return from_gens(n_, std::move(sq));
}

MonomialIdeal from_complex(const SimplicialComplex& delta) {
    if (delta.is_full_simplex())
        throw InputError("the full simplex has zero Stanley-Reisner ideal");
    const int n = delta.nvertices();
    if (delta.is_void()) return MonomialIdeal::unit_ideal(n);
    std::vector<Monomial> gens;
    for (auto nf : delta.minimal_nonfaces()) gens.push_back(Monomial::from_mask(n, nf));
    return MonomialIdeal::from_gens(n, std::move(gens));
}

SimplicialComplex to_complex(const MonomialIdeal& ideal) {
    if (!ideal.is_squarefree()) throw InputError("Stanley-Reisner inverse needs a squarefree ideal");
    if (ideal.is_zero()) return SimplicialComplex::full_simplex(ideal.nvars());
    if (ideal.is_unit()) return SimplicialComplex::void_complex(ideal.nvars());
    const int n = ideal.nvars();
    // faces = subsets containing no generator support; facets = complements of
    // the minimal transversals of the generator supports (same dualization as
    // on the complex side, run in reverse)
    std::vector<std::uint64_t> covers{0};
    for (auto& g : ideal.gens()) {
        std::uint64_t edge = g.support_mask();
        std::vector<std::uint64_t> next;
        for (auto t : covers) {
            if (t & edge) {
                next.push_back(t);
                continue;
            }
            for (int v = 0; v < n; ++v)
                if (edge >> v & 1) next.push_back(t | (std::uint64_t(1) << v));
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        std::vector<std::uint64_t> kept;
        for (std::size_t i = 0; i < next.size(); ++i) {
            bool minimal = true;
            for (std::size_t j = 0; j < next.size(); ++j)
                if (i != j && (next[j] & ~next[i]) == 0 && next[i] != next[j]) {
                    minimal = false;
                    break;
                }
            if (minimal) kept.push_back(next[i]);
        }
        covers = std::move(kept);
    }
    std::uint64_t full = n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
    std::vector<std::uint64_t> facets;
    for (auto c : covers) facets.push_back(full & ~c);
    return SimplicialComplex::from_facets(n, std::move(facets));
}

MonomialIdeal dual_ideal(const MonomialIdeal& ideal) {
    if (!ideal.is_squarefree()) throw InputError("Alexander dual needs a squarefree ideal");
    if (!ideal.is_proper_nonzero()) throw InputError("Alexander dual needs a proper nonzero ideal");
    SimplicialComplex delta = to_complex(ideal);
    std::vector<Monomial> gens;
    for (auto f : delta.facets())
        gens.push_back(Monomial::from_mask(ideal.nvars(), delta.full_mask() & ~f));
    return MonomialIdeal::from_gens(ideal.nvars(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.nvars() != b.nvars()) throw InputError("intersect: variable counts differ");
    if (a.is_zero() || b.is_zero()) return MonomialIdeal::zero_ideal(a.nvars());
    if (a.is_unit()) return b;
    if (b.is_unit()) return a;
    std::vector<Monomial> gens;
    for (auto& g : a.gens())
        for (auto& h : b.gens()) gens.push_back(Monomial::lcm(g, h));
    return MonomialIdeal::from_gens(a.nvars(), std::move(gens));
}

MonomialIdeal sum_disjoint(const MonomialIdeal& a, const MonomialIdeal& b) {
    const int m = a.nvars(), n = b.nvars();
    if (a.is_unit() || b.is_unit()) return MonomialIdeal::unit_ideal(m + n);
    std::vector<Monomial> gens;
    for (auto& g : a.gens()) {
        Monomial e = Monomial::one(m + n);
        std::copy(g.e.begin(), g.e.end(), e.e.begin());
        gens.push_back(std::move(e));
    }
    for (auto& h : b.gens()) {
        Monomial e = Monomial::one(m + n);
        std::copy(h.e.begin(), h.e.end(), e.e.begin() + m);
        gens.push_back(std::move(e));
    }
    if (gens.empty()) return MonomialIdeal::zero_ideal(m + n);
    return MonomialIdeal::from_gens(m + n, std::move(gens));
}

MonomialIdeal degree_component(const MonomialIdeal& ideal, int r, int degree_budget) {
    if (r < 0) throw InputError("degree must be nonnegative");
    if (r > degree_budget)
        throw BudgetError("degree_component degree " + std::to_string(r) + " exceeds budget " +
                          std::to_string(degree_budget));
    if (ideal.is_zero()) return ideal;
    const int n = ideal.nvars();
    if (ideal.is_unit()) {
        // component of R in degree r is everything of that degree
        if (r == 0) return MonomialIdeal::unit_ideal(n);
    }
    std::vector<Monomial> gens;
    // multiply each generator of degree <= r up to degree exactly r
    std::function<void(Monomial&, int, int)> extend = [&](Monomial& m, int var, int left) {
        if (left == 0) {
            gens.push_back(m);
            return;
        }
        if (var == n) return;
        for (int take = left; take >= 0; --take) {
            m.e[var] += take;
            extend(m, var + 1, left - take);
            m.e[var] -= take;
        }
    };
    for (auto& g : ideal.gens()) {
        if (g.degree() > r) continue;
        Monomial m = g;
        extend(m, 0, r - g.degree());
    }
    if (gens.empty()) return MonomialIdeal::zero_ideal(n);
    return MonomialIdeal::from_gens(n, std::move(gens));
}

int height(const MonomialIdeal& ideal) {
    return dual_ideal(ideal).min_gen_degree();
}

MonomialIdeal embed(const MonomialIdeal& ideal, int bigger_n) {
    if (bigger_n < ideal.nvars()) throw InputError("embed: target ring is smaller");
    if (ideal.is_zero()) return MonomialIdeal::zero_ideal(bigger_n);
    if (ideal.is_unit()) return MonomialIdeal::unit_ideal(bigger_n);
    std::vector<Monomial> gens;
    for (auto& g : ideal.gens()) {
        Monomial e = Monomial::one(bigger_n);
        std::copy(g.e.begin(), g.e.end(), e.e.begin());
        gens.push_back(std::move(e));
    }
    return MonomialIdeal::from_gens(bigger_n, std::move(gens));
}

}  // namespace lyu
