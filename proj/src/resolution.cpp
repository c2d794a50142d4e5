#include "lyu/resolution.hpp"

#include <bit>
#include <queue>
#include <unordered_set>

namespace lyu {

BettiTable hochster_betti(const MonomialIdeal& ideal, const FieldSpec& k) {
    if (!ideal.is_squarefree()) throw InputError("Hochster's formula needs a squarefree ideal");
    if (!ideal.is_proper_nonzero()) throw InputError("Hochster's formula needs a proper nonzero ideal");
    const int n = ideal.nvars();
    SimplicialComplex delta = to_complex(ideal);
    BettiTable t;
    std::uint64_t full = delta.full_mask();
    for (std::uint64_t sigma = 1; sigma <= full; ++sigma) {
        const int card = std::popcount(sigma);
        SimplicialComplex res = restriction(delta, sigma);
        auto dims = reduced_homology_dims(res, k);  // index 0 <-> degree -1
        for (int deg = -1; deg < static_cast<int>(dims.size()) - 1; ++deg) {
            long h = dims[deg + 1];
            if (h == 0) continue;
            int i = card - deg - 2;
            if (i < 0) continue;
            t.add(i, Monomial::from_mask(n, sigma), h);
        }
    }
    return t;
}

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace

BettiTable koszul_betti(const MonomialIdeal& ideal, const FieldSpec& k) {
    if (!ideal.is_proper_nonzero()) throw InputError("Koszul oracle needs a proper nonzero ideal");
    const int n = ideal.nvars();
    const auto& gens = ideal.gens();

    // closure of the generator multidegrees under lcm
    std::unordered_set<std::vector<int>, VecHash> seen;
    std::queue<Monomial> work;
    for (auto& g : gens) {
        if (seen.insert(g.e).second) work.push(g);
    }
    std::vector<Monomial> candidates;
    while (!work.empty()) {
        Monomial m = work.front();
        work.pop();
        candidates.push_back(m);
        for (auto& g : gens) {
            Monomial l = Monomial::lcm(m, g);
            if (seen.insert(l.e).second) work.push(l);
        }
    }

    BettiTable t;
    for (auto& b : candidates) {
        // upper Koszul complex at b: subsets tau of supp(b) with x^(b-tau) in I
        std::uint64_t supp = b.support_mask();
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if (supp >> v & 1) verts.push_back(v);
        const int nv = static_cast<int>(verts.size());
        std::vector<std::uint64_t> faces;
        for (std::uint64_t tau = 0; tau < (std::uint64_t(1) << nv); ++tau) {
            Monomial q = b;
            for (int i = 0; i < nv; ++i)
                if (tau >> i & 1) q.e[verts[i]] -= 1;
            if (ideal.contains(q)) faces.push_back(tau);
        }
        if (faces.empty()) continue;  // b itself not in I
        SimplicialComplex kb = SimplicialComplex::from_facets(std::max(nv, 1), std::move(faces));
        auto dims = reduced_homology_dims(kb, k);
        for (int deg = -1; deg < static_cast<int>(dims.size()) - 1; ++deg) {
            long h = dims[deg + 1];
            if (h == 0) continue;
            int i = deg + 1;  // beta_{i,b}(I) = dim H~_{i-1}(K^b)
            t.add(i, b, h);
        }
    }
    return t;
}

}  // namespace lyu
