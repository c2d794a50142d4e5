#ifndef LYU_MONOMIAL_HPP
#define LYU_MONOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "lyu/errors.hpp"

namespace lyu {

class SimplicialComplex;

// Monomial in a fixed number of variables, dense exponent vector.
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

    static Monomial one(int n) { return Monomial(std::vector<int>(n, 0)); }
    static Monomial variable(int n, int i) {
        Monomial m = one(n);
        m.e.at(i) = 1;
        return m;
    }
    // squarefree monomial from a vertex-subset bitmask
    static Monomial from_mask(int n, std::uint64_t mask) {
        Monomial m = one(n);
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) m.e[i] = 1;
        return m;
    }

    int nvars() const { return static_cast<int>(e.size()); }
    int degree() const { return std::accumulate(e.begin(), e.end(), 0); }
    bool is_one() const { return degree() == 0; }
    bool is_squarefree() const {
        return std::all_of(e.begin(), e.end(), [](int x) { return x <= 1; });
    }
    std::uint64_t support_mask() const {
        std::uint64_t m = 0;
        for (int i = 0; i < nvars(); ++i)
            if (e[i] > 0) m |= std::uint64_t(1) << i;
        return m;
    }

    bool divides(const Monomial& o) const {
        for (int i = 0; i < nvars(); ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    Monomial times(const Monomial& o) const {
        Monomial r = *this;
        for (int i = 0; i < nvars(); ++i) r.e[i] += o.e[i];
        return r;
    }
    // componentwise this / o, requires o.divides(*this)
    Monomial quotient(const Monomial& o) const {
        Monomial r = *this;
        for (int i = 0; i < nvars(); ++i) r.e[i] -= o.e[i];
        return r;
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (int i = 0; i < a.nvars(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
        return r;
    }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator<(const Monomial& o) const {
        int da = degree(), db = o.degree();
        if (da != db) return da < db;
        return e < o.e;  // degree, then lex
    }

    std::string str() const;  // "x1*x2^2" style, "1" for the empty product
};

// Monomial ideal given by its unique minimal generating set.  The zero ideal
// and the unit ideal are explicit marker states; resolution-facing operations
// reject both.
class MonomialIdeal {
  public:
    enum class State { proper, unit, zero };

    static MonomialIdeal from_gens(int n, std::vector<Monomial> gens);
    static MonomialIdeal zero_ideal(int n) { return MonomialIdeal(n, {}, State::zero); }
    static MonomialIdeal unit_ideal(int n) { return MonomialIdeal(n, {Monomial::one(n)}, State::unit); }

    int nvars() const { return n_; }
    State state() const { return state_; }
    bool is_zero() const { return state_ == State::zero; }
    bool is_unit() const { return state_ == State::unit; }
    bool is_proper_nonzero() const { return state_ == State::proper; }
    const std::vector<Monomial>& gens() const { return gens_; }

    bool is_squarefree() const {
        return std::all_of(gens_.begin(), gens_.end(),
                           [](const Monomial& g) { return g.is_squarefree(); });
    }
    bool contains(const Monomial& m) const {
        if (is_unit()) return true;
        return std::any_of(gens_.begin(), gens_.end(),
                           [&](const Monomial& g) { return g.divides(m); });
    }
    int min_gen_degree() const;
    int max_gen_degree() const;

    // componentwise squarefree-ing of the generators, then minimalization
    MonomialIdeal radical() const;

    bool operator==(const MonomialIdeal& o) const {
        return n_ == o.n_ && state_ == o.state_ && gens_ == o.gens_;
    }

  private:
    MonomialIdeal(int n, std::vector<Monomial> gens, State s)
        : n_(n), gens_(std::move(gens)), state_(s) {}

    int n_;
    std::vector<Monomial> gens_;
    State state_;
};

// drops generators divisible by another, sorts (degree, lex)
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

// Stanley-Reisner correspondence
MonomialIdeal from_complex(const SimplicialComplex& delta);
SimplicialComplex to_complex(const MonomialIdeal& ideal);

// Alexander dual ideal: generators are the complements of the facets of the
// complex of a squarefree proper ideal.
MonomialIdeal dual_ideal(const MonomialIdeal& ideal);

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

// generators of a and b placed in disjoint variable blocks of a ring on
// a.nvars() + b.nvars() variables
MonomialIdeal sum_disjoint(const MonomialIdeal& a, const MonomialIdeal& b);

// ideal generated by the degree-r component I_r; zero marker when I_r = 0
MonomialIdeal degree_component(const MonomialIdeal& ideal, int r, int degree_budget = 12);

// minimum generator degree of the Alexander dual (the minimal vertex-cover
// size of the generator supports)
int height(const MonomialIdeal& ideal);

// same generators viewed in a larger polynomial ring
MonomialIdeal embed(const MonomialIdeal& ideal, int bigger_n);

}  // namespace lyu

#endif
