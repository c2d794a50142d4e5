#include "lyu/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_set>

#include "lyu/exactla.hpp"

namespace lyu {

namespace {

bool subset(std::uint64_t a, std::uint64_t b) { return (a & ~b) == 0; }

// keep only the inclusion-maximal masks, sorted
std::vector<std::uint64_t> maximalize(std::vector<std::uint64_t> masks, bool* dropped) {
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < masks.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < masks.size(); ++j)
            if (i != j && subset(masks[i], masks[j]) && masks[i] != masks[j]) {
                maximal = false;
                break;
            }
        if (maximal)
            out.push_back(masks[i]);
        else if (dropped)
            *dropped = true;
    }
    std::sort(out.begin(), out.end(), [](std::uint64_t a, std::uint64_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    return out;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(int n, std::vector<std::uint64_t> faces,
                                                 bool* dropped_warning) {
    if (n < 1 || n > kMaxVertices) throw InputError("vertex count out of range");
    if (faces.empty()) throw InputError("no facets given; use void_complex for the void complex");
    SimplicialComplex tmp(n, {}, false);
    for (auto f : faces)
        if (!subset(f, tmp.full_mask())) throw InputError("facet uses a vertex beyond n");
    bool dropped = false;
    auto facets = maximalize(std::move(faces), &dropped);
    if (dropped_warning) *dropped_warning = dropped;
    return SimplicialComplex(n, std::move(facets), false);
}

SimplicialComplex SimplicialComplex::void_complex(int n) {
    if (n < 1 || n > kMaxVertices) throw InputError("vertex count out of range");
    return SimplicialComplex(n, {}, true);
}

SimplicialComplex SimplicialComplex::full_simplex(int n) {
    SimplicialComplex tmp(n, {}, false);
    return from_facets(n, {tmp.full_mask()});
}

bool SimplicialComplex::has_face(std::uint64_t f) const {
    if (void_) return false;
    return std::any_of(facets_.begin(), facets_.end(),
                       [&](std::uint64_t g) { return subset(f, g); });
}

int SimplicialComplex::dim() const {
    if (void_) throw InputError("void complex has no dimension");
    int d = -1;
    for (auto f : facets_) d = std::max(d, std::popcount(f) - 1);
    return d;
}

std::vector<std::uint64_t> SimplicialComplex::all_faces() const {
    if (void_) return {};
    std::unordered_set<std::uint64_t> seen;
    for (auto f : facets_) {
        // enumerate all submasks of f, including 0
        std::uint64_t s = f;
        while (true) {
            seen.insert(s);
            if (s == 0) break;
            s = (s - 1) & f;
        }
    }
    std::vector<std::uint64_t> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](std::uint64_t a, std::uint64_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    return out;
}

std::vector<std::uint64_t> SimplicialComplex::minimal_nonfaces() const {
    if (void_) return {0};
    if (is_full_simplex()) return {};
    // Minimal nonfaces are the minimal transversals of the hypergraph of
    // facet complements (F is a nonface iff it meets every facet complement).
    // Berge-style incremental transversal computation.
    std::vector<std::uint64_t> transversals{0};
    for (auto f : facets_) {
        std::uint64_t edge = full_mask() & ~f;
        std::vector<std::uint64_t> next;
        for (auto t : transversals) {
            if (t & edge) {
                next.push_back(t);
                continue;
            }
            for (int v = 0; v < n_; ++v)
                if (edge >> v & 1) next.push_back(t | (std::uint64_t(1) << v));
        }
        // minimalize
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        std::vector<std::uint64_t> kept;
        for (std::size_t i = 0; i < next.size(); ++i) {
            bool minimal = true;
            for (std::size_t j = 0; j < next.size(); ++j)
                if (i != j && subset(next[j], next[i]) && next[i] != next[j]) {
                    minimal = false;
                    break;
                }
            if (minimal) kept.push_back(next[i]);
        }
        transversals = std::move(kept);
    }
    std::sort(transversals.begin(), transversals.end(), [](std::uint64_t a, std::uint64_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    return transversals;
}

bool SimplicialComplex::is_pure() const {
    if (void_ || facets_.empty()) return true;
    int d = std::popcount(facets_.front());
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](std::uint64_t f) { return std::popcount(f) == d; });
}

SimplicialComplex alexander_dual(const SimplicialComplex& delta) {
    if (delta.is_void()) return SimplicialComplex::full_simplex(delta.nvertices());
    if (delta.is_full_simplex()) return SimplicialComplex::void_complex(delta.nvertices());
    std::vector<std::uint64_t> facets;
    for (auto nf : delta.minimal_nonfaces()) facets.push_back(delta.full_mask() & ~nf);
    return SimplicialComplex::from_facets(delta.nvertices(), std::move(facets));
}

SimplicialComplex restriction(const SimplicialComplex& delta, std::uint64_t sigma) {
    if (delta.is_void()) return SimplicialComplex::void_complex(std::max(std::popcount(sigma), 1));
    // map vertices of sigma to 0..k-1 in increasing order
    std::vector<int> verts;
    for (int v = 0; v < delta.nvertices(); ++v)
        if (sigma >> v & 1) verts.push_back(v);
    const int k = static_cast<int>(verts.size());
    std::vector<std::uint64_t> faces;
    for (auto f : delta.facets()) {
        std::uint64_t cut = f & sigma;
        std::uint64_t re = 0;
        for (int i = 0; i < k; ++i)
            if (cut >> verts[i] & 1) re |= std::uint64_t(1) << i;
        faces.push_back(re);
    }
    return SimplicialComplex::from_facets(std::max(k, 1), std::move(faces));
}

std::vector<long> reduced_homology_dims(const SimplicialComplex& delta, const FieldSpec& k) {
    if (delta.is_void()) throw InputError("void complex has no homology convention here");
    auto faces = delta.all_faces();
    // group by cardinality; chain degree i holds faces of cardinality i+1,
    // degree -1 holds the empty face
    const int d = delta.dim();
    std::vector<std::vector<std::uint64_t>> level(static_cast<std::size_t>(d) + 2);
    for (auto f : faces) level[std::popcount(f)].push_back(f);

    auto boundary_rank = [&](int i) -> long {
        // rank of boundary from degree i (cardinality i+1) to degree i-1
        const auto& src = level[i + 1];
        const auto& dst = level[i];
        if (src.empty() || dst.empty()) return 0;
        std::map<std::uint64_t, int> dst_index;
        for (std::size_t j = 0; j < dst.size(); ++j) dst_index[dst[j]] = static_cast<int>(j);
        std::vector<int> entries(src.size() * dst.size(), 0);
        for (std::size_t c = 0; c < src.size(); ++c) {
            std::uint64_t f = src[c];
            int pos = 0;
            for (int v = 0; v < delta.nvertices(); ++v) {
                if (!(f >> v & 1)) continue;
                std::uint64_t sub = f & ~(std::uint64_t(1) << v);
                int r = dst_index.at(sub);
                entries[std::size_t(r) * src.size() + c] = (pos % 2 == 0) ? 1 : -1;
                ++pos;
            }
        }
        return sign_matrix_rank(static_cast<int>(dst.size()), static_cast<int>(src.size()),
                                entries, k);
    };

    std::vector<long> ranks(static_cast<std::size_t>(d) + 2, 0);  // ranks[i+1] = rank of del_i
    for (int i = 0; i <= d; ++i) ranks[i + 1] = boundary_rank(i);

    std::vector<long> dims;  // index 0 <-> homology degree -1
    for (int i = -1; i <= d; ++i) {
        long chain = static_cast<long>(level[i + 1].size());
        long out = i >= 0 ? ranks[i + 1] : 0;       // rank of del_i leaving degree i
        long in = i + 2 < static_cast<int>(ranks.size()) ? ranks[i + 2] : 0;
        dims.push_back(chain - out - in);
    }
    return dims;
}

int connected_components_nonisolated(const SimplicialComplex& delta) {
    if (delta.is_void()) return 0;
    std::vector<int> parent(delta.nvertices());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    std::uint64_t used = 0;
    for (auto f : delta.facets()) {
        if (std::popcount(f) < 2) continue;
        used |= f;
        int first = std::countr_zero(f);
        for (int v = first + 1; v < delta.nvertices(); ++v)
            if (f >> v & 1) parent[find(v)] = find(first);
    }
    std::unordered_set<int> roots;
    for (int v = 0; v < delta.nvertices(); ++v)
        if (used >> v & 1) roots.insert(find(v));
    return static_cast<int>(roots.size());
}

int codim_one_component_count(const SimplicialComplex& delta) {
    if (delta.is_void()) return 0;
    // nodes are facets; the empty complex has the single facet emptyset
    if (delta.is_empty_complex()) return 1;
    if (!delta.is_pure()) throw InputError("codim-one components require a pure complex");
    const auto& fs = delta.facets();
    const int m = static_cast<int>(fs.size());
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    const int card = std::popcount(fs[0]);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (std::popcount(fs[i] & fs[j]) == card - 1) parent[find(i)] = find(j);
    std::unordered_set<int> roots;
    for (int i = 0; i < m; ++i) roots.insert(find(i));
    return static_cast<int>(roots.size());
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& delta, int vertex_budget) {
    if (delta.is_void()) return delta;
    if (delta.is_empty_complex()) return delta;
    auto faces = delta.all_faces();
    std::vector<std::uint64_t> nonempty(faces.begin() + 1, faces.end());  // faces[0] == 0
    const int nv = static_cast<int>(nonempty.size());
    if (nv > vertex_budget)
        throw BudgetError("barycentric subdivision would need " + std::to_string(nv) +
                          " vertices, budget is " + std::to_string(vertex_budget));
    std::map<std::uint64_t, int> index;
    for (int i = 0; i < nv; ++i) index[nonempty[i]] = i;

    // facets of sd = maximal chains = vertex orderings of the facets of delta
    std::vector<std::uint64_t> sd_facets;
    for (auto f : delta.facets()) {
        std::vector<int> verts;
        for (int v = 0; v < delta.nvertices(); ++v)
            if (f >> v & 1) verts.push_back(v);
        std::sort(verts.begin(), verts.end());
        do {
            std::uint64_t chain = 0, prefix = 0;
            for (int v : verts) {
                prefix |= std::uint64_t(1) << v;
                chain |= std::uint64_t(1) << index.at(prefix);
            }
            sd_facets.push_back(chain);
        } while (std::next_permutation(verts.begin(), verts.end()));
    }
    return SimplicialComplex::from_facets(nv, std::move(sd_facets));
}

}  // namespace lyu
