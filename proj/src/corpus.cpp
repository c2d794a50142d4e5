#include "lyu/corpus.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>

namespace lyu::corpus {

namespace {

std::uint64_t permute_mask(std::uint64_t m, const std::vector<int>& perm) {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        if (m >> i & 1) r |= std::uint64_t(1) << perm[i];
    return r;
}

std::vector<std::uint64_t> canonical_form(const std::vector<std::uint64_t>& facets, int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint64_t> best;
    do {
        std::vector<std::uint64_t> img;
        img.reserve(facets.size());
        for (auto f : facets) img.push_back(permute_mask(f, perm));
        std::sort(img.begin(), img.end());
        if (best.empty() || img < best) best = std::move(img);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace

std::vector<SimplicialComplex> complexes_up_to_iso(int n, bool include_full_simplex) {
    const std::uint64_t full = (std::uint64_t(1) << n) - 1;
    std::set<std::vector<std::uint64_t>> seen;
    std::vector<SimplicialComplex> out;
    auto emit = [&](const std::vector<std::uint64_t>& facets) {
        if (!include_full_simplex && facets.size() == 1 && facets[0] == full) return;
        if (seen.insert(canonical_form(facets, n)).second)
            out.push_back(SimplicialComplex::from_facets(n, std::vector<std::uint64_t>(facets)));
    };
    emit({0});  // the empty complex {emptyset}
    // DFS over antichains of nonempty masks, chosen in increasing order
    std::vector<std::uint64_t> chosen;
    auto rec = [&](auto&& self, std::uint64_t next) -> void {
        if (!chosen.empty()) emit(chosen);
        for (std::uint64_t m = next; m <= full; ++m) {
            bool ok = true;
            for (auto c : chosen)
                if ((c & ~m) == 0 || (m & ~c) == 0) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(m);
            self(self, m + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

MonomialIdeal rp2_ideal() {
    const int n = 6;
    auto v = [&](std::initializer_list<int> idx) {
        Monomial m = Monomial::one(n);
        for (int i : idx) m.e[i - 1] = 1;
        return m;
    };
    return MonomialIdeal::from_gens(
        n, {v({1, 2, 3}), v({1, 2, 4}), v({1, 3, 5}), v({2, 4, 5}), v({3, 4, 5}),
            v({2, 3, 6}), v({1, 4, 6}), v({3, 4, 6}), v({1, 5, 6}), v({2, 5, 6})});
}

MonomialIdeal prime_ideal(int n, std::initializer_list<int> vars) {
    std::vector<Monomial> g;
    for (int i : vars) g.push_back(Monomial::variable(n, i - 1));
    return MonomialIdeal::from_gens(n, std::move(g));
}

MonomialIdeal five_var_ideal() {
    auto p = [](std::initializer_list<int> v) { return prime_ideal(5, v); };
    return intersect(intersect(intersect(p({1, 2}), p({3, 4})), intersect(p({1, 5}), p({2, 5}))),
                     intersect(p({3, 5}), p({4, 5})));
}

MonomialIdeal fig1_ideal() {
    auto p = [](std::initializer_list<int> v) { return prime_ideal(7, v); };
    return intersect(intersect(p({2, 3, 4, 5, 6, 7}), p({1, 4, 5, 6, 7})),
                     intersect(p({1, 2, 3, 6, 7}), p({1, 2, 3, 4, 5})));
}

SimplicialComplex fig1_complex() { return to_complex(fig1_ideal()); }

LyubeznikTable example22_table() {
    LyubeznikTable t;
    t.d = 4;
    t.characteristic = FieldSpec::rationals();
    t.set(0, 3, 1);
    t.set(2, 4, 1);
    t.set(4, 4, 1);
    return t;
}

MonomialIdeal random_ideal(std::mt19937_64& rng, int nvars, int max_gens, bool squarefree) {
    std::uniform_int_distribution<int> ngen(1, max_gens);
    std::uniform_int_distribution<int> expo(0, squarefree ? 1 : 2);
    for (;;) {
        std::vector<Monomial> gens;
        int g = ngen(rng);
        for (int i = 0; i < g; ++i) {
            Monomial m = Monomial::one(nvars);
            for (int v = 0; v < nvars; ++v) m.e[v] = expo(rng);
            if (!m.is_one()) gens.push_back(std::move(m));
        }
        if (gens.empty()) continue;
        auto ideal = MonomialIdeal::from_gens(nvars, std::move(gens));
        if (ideal.is_proper_nonzero()) return ideal;
    }
}

namespace {

struct Battery {
    const BatteryOptions& opt;
    BatteryResult res;
    bool fault_pending;

    explicit Battery(const BatteryOptions& o) : opt(o), fault_pending(o.inject_fault) {}

    void check(bool ok, const std::string& what) {
        ++res.checks;
        if (!ok) res.violations.push_back(what);
    }

    template <class Fn>
    void guarded(const std::string& ctx, Fn&& fn) {
        try {
            fn();
        } catch (const BudgetError&) {
            ++res.skipped_budget;
        } catch (const std::exception& e) {
            res.violations.push_back(ctx + ": " + e.what());
        }
    }

    // self-test: a perturbed table must be rejected by the invariant checker
    void try_fault(const NuTable& nu, const BettiTable& betti) {
        if (!fault_pending || nu.entries.empty()) return;
        fault_pending = false;
        NuTable bad = nu;
        bad.entries.begin()->second += 1;
        bool detected = false;
        try {
            check_nu_invariants(bad, betti);
        } catch (const PropertyViolation&) {
            detected = true;
        }
        check(detected, "injected fault was not detected");
    }

    void run_complex(const SimplicialComplex& delta, const std::string& ctx) {
        auto dual = alexander_dual(delta);
        check(alexander_dual(dual).facets() == delta.facets() &&
                  alexander_dual(dual).is_void() == delta.is_void(),
              ctx + ": dual is not an involution");

        MonomialIdeal ideal = from_complex(delta);
        if (ideal.is_proper_nonzero())
            check(to_complex(ideal).facets() == delta.facets(),
                  ctx + ": Stanley-Reisner round trip failed");

        for (long c : opt.characteristics) {
            auto k = FieldSpec::from_characteristic(c);
            std::string kctx = ctx + " char " + std::to_string(c);

            // Euler-Poincare against the face count
            auto dims = reduced_homology_dims(delta, k);
            long lhs = 0;
            for (std::size_t i = 0; i < dims.size(); ++i)
                lhs += (i % 2 == 0 ? -dims[i] : dims[i]);  // index 0 is degree -1
            long rhs = -1;
            for (auto f : delta.all_faces())
                if (f != 0) rhs += (std::popcount(f) % 2 == 0 ? -1 : 1);
            check(lhs == rhs, kctx + ": Euler-Poincare mismatch");

            if (!ideal.is_proper_nonzero()) continue;
            guarded(kctx, [&] { run_ideal(ideal, delta, k, kctx); });
        }
    }

    void run_ideal(const MonomialIdeal& ideal, const SimplicialComplex& delta, const FieldSpec& k,
                   const std::string& ctx) {
        BettiTable direct = resolution_betti(ideal, k, opt.generator_budget);
        BettiTable koszul = koszul_betti(ideal, k);
        check(direct == koszul, ctx + ": Taylor-prune vs Koszul oracle mismatch");
        if (ideal.is_squarefree())
            check(direct == hochster_betti(ideal, k), ctx + ": Hochster oracle mismatch");
        check(direct.alternating_sum() == 1, ctx + ": Betti alternating sum != 1");

        NuTable nu = nu_table(ideal, k, opt.rank, opt.generator_budget);
        try_fault(nu, direct);
        check(check_nu_consecutiveness(nu).pass, ctx + ": nu consecutiveness failed");
        if (ideal.min_gen_degree() == 1)
            check(is_trivial_nu(nu), ctx + ": degree-one generator but nontrivial nu-table");
        if (is_componentwise_linear(ideal, k).componentwise_linear)
            check(is_trivial_nu(nu), ctx + ": componentwise linear but nontrivial nu-table");

        RankOptions rnd = opt.rank;
        rnd.mode = RankMode::randomized;
        rnd.seed = 0x5eed;
        NuTable nu2 = nu_table(ideal, k, rnd, opt.generator_budget);
        check(nu == nu2, ctx + ": randomized nu-table differs from exact");

        if (!ideal.is_squarefree()) return;
        LyubeznikTable lam = lyubeznik_table(ideal, k, opt.rank, opt.generator_budget);
        check(check_lambda_consecutiveness(lam).pass, ctx + ": lambda consecutiveness failed");
        if (lam.d >= 2)
            check(lam.lambda(0, 1) == lambda_01_topological(delta),
                  ctx + ": lambda_{0,1} disagrees with the connectivity count");
        if (delta.is_pure() && !delta.is_void())
            check(lam.lambda(lam.d, lam.d) == lambda_dd_topological(delta),
                  ctx + ": lambda_{d,d} disagrees with codim-one components");
        if (is_sequentially_cm(ideal, k))
            check(is_trivial_lyubeznik(lam), ctx + ": sequentially CM but nontrivial table");
    }

    void run_exhaustive() {
        for (int n = 1; n <= 5; ++n) {
            auto cx = complexes_up_to_iso(n);
            for (std::size_t i = 0; i < cx.size(); ++i) {
                std::string ctx = "n=" + std::to_string(n) + " #" + std::to_string(i);
                guarded(ctx, [&] { run_complex(cx[i], ctx); });
            }
        }
    }

    void run_paper_examples() {
        auto q = FieldSpec::rationals();
        auto f2 = FieldSpec::prime_field(2);
        auto I = rp2_ideal();

        auto lam_q = lyubeznik_table(I, q, opt.rank);
        check(is_trivial_lyubeznik(lam_q) && lam_q.d == 3, "projective-plane table over Q not trivial");
        auto lam_2 = lyubeznik_table(I, f2, opt.rank);
        LyubeznikTable expect2;
        expect2.d = 3;
        expect2.set(0, 2, 1);
        expect2.set(2, 3, 1);
        expect2.set(3, 3, 1);
        check(lam_2.entries == expect2.entries, "projective-plane table over F_2 mismatch");

        auto x7 = prime_ideal(1, {1});
        auto p2 = prime_ideal(2, {1, 2});
        for (auto k : {q, f2}) {
            check(is_trivial_lyubeznik(lyubeznik_table(intersect_disjoint(I, x7), k, opt.rank)),
                  "intersection with a hyperplane is not trivial");
            auto big = intersect_disjoint(intersect_disjoint(I, p2), p2);
            auto lam = lyubeznik_table(big, k, opt.rank);
            check(lam.lambda(6, 7) == (k.is_rationals() ? 1 : 2),
                  "lambda_{6,7} of the 10-variable example is wrong");
            auto rep = verify_composition(intersect_disjoint(I, p2), p2, k,
                                          CompositionMode::intersection_lambda, opt.rank);
            check(rep.match && rep.routes_agree, "composition prediction mismatch (10 variables)");
        }

        for (auto k : {q, f2}) {
            auto five = five_var_ideal();
            check(is_trivial_lyubeznik(lyubeznik_table(five, k, opt.rank)),
                  "five-variable example table not trivial");
            check(!is_sequentially_cm(five, k), "five-variable example wrongly sequentially CM");
        }

        auto fig = fig1_ideal();
        check(lyubeznik_table(fig, q, opt.rank).lambda(0, 1) == 2, "figure-one lambda_{0,1} != 2");
        check(lambda_01_topological(fig1_complex()) == 2,
              "figure-one connectivity route lambda_{0,1} != 2");

        check(check_lambda_consecutiveness(example22_table()).pass,
              "printed determinantal table fails consecutiveness");
        auto rho = rho_sums(example22_table());
        check(rho.rho == std::vector<long>({1, 0, 1, 1, 0}),
              "printed determinantal table rho sums unexpected");

        if (fault_pending) {
            auto dual = dual_ideal(I);
            try_fault(nu_table(dual, f2, opt.rank), resolution_betti(dual, f2));
        }
    }

    void run_random_compositions() {
        std::mt19937_64 rng(opt.rank.seed ^ 0x9e3779b97f4a7c15ull);
        for (int t = 0; t < 100; ++t) {
            auto a = random_ideal(rng, 1 + int(rng() % 4), 4, false);
            auto b = random_ideal(rng, 1 + int(rng() % 4), 4, false);
            for (long c : opt.characteristics) {
                auto k = FieldSpec::from_characteristic(c);
                std::string ctx = "pair " + std::to_string(t) + " char " + std::to_string(c);
                guarded(ctx, [&] {
                    auto rep = verify_composition(a, b, k, CompositionMode::sum_nu, opt.rank,
                                                  opt.generator_budget);
                    check(rep.match, ctx + ": nu-sum prediction mismatch (" + rep.clause + ")");
                });
                auto as = random_ideal(rng, 1 + int(rng() % 4), 4, true);
                auto bs = random_ideal(rng, 1 + int(rng() % 4), 4, true);
                guarded(ctx, [&] {
                    auto rep = verify_composition(as, bs, k, CompositionMode::intersection_lambda,
                                                  opt.rank, opt.generator_budget);
                    check(rep.match && rep.routes_agree,
                          ctx + ": intersection-lambda prediction mismatch (" + rep.clause + ")");
                });
            }
        }
        // degree-one clause: one factor always has a linear generator
        for (int t = 0; t < 20; ++t) {
            auto a = random_ideal(rng, 1 + int(rng() % 4), 4, false);
            auto lin = prime_ideal(1 + int(rng() % 3), {1});
            for (long c : opt.characteristics) {
                auto k = FieldSpec::from_characteristic(c);
                std::string ctx = "linear pair " + std::to_string(t) + " char " + std::to_string(c);
                guarded(ctx, [&] {
                    auto rep = verify_composition(a, lin, k, CompositionMode::sum_nu, opt.rank,
                                                  opt.generator_budget);
                    check(rep.match, ctx + ": nu-sum prediction mismatch (" + rep.clause + ")");
                });
            }
        }
    }
};

}  // namespace

BatteryResult run_battery(const std::string& corpus_name, const BatteryOptions& opt) {
    Battery b(opt);
    if (corpus_name == "n5-exhaustive") {
        b.run_exhaustive();
    } else if (corpus_name == "paper-examples") {
        b.run_paper_examples();
    } else if (corpus_name == "random-compositions") {
        b.run_random_compositions();
    } else {
        throw InputError("unknown corpus '" + corpus_name +
                         "'; available: n5-exhaustive, paper-examples, random-compositions");
    }
    if (opt.inject_fault && b.fault_pending)
        b.res.violations.push_back("fault injection requested but no table was perturbed");
    return b.res;
}

}  // namespace lyu::corpus
