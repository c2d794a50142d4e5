#ifndef LYU_SIMPLICIAL_HPP
#define LYU_SIMPLICIAL_HPP

#include <cstdint>
#include <vector>

#include "lyu/errors.hpp"
#include "lyu/field.hpp"

namespace lyu {

// Simplicial complex on vertex set {1..n}, faces encoded as bitmasks.
// Only the inclusion-maximal faces are stored; face membership is "subset of
// some facet".  The void complex (no faces at all) and the empty complex
// {emptyset} are distinct: void has zero facets and the void flag set, the
// empty complex has the single facet 0.
class SimplicialComplex {
  public:
    static constexpr int kMaxVertices = 63;

    // Non-maximal input faces are dropped (dropped_warning reports that).
    static SimplicialComplex from_facets(int n, std::vector<std::uint64_t> faces,
                                         bool* dropped_warning = nullptr);
    static SimplicialComplex void_complex(int n);
    static SimplicialComplex empty_complex(int n) { return from_facets(n, {0}); }
    static SimplicialComplex full_simplex(int n);

    int nvertices() const { return n_; }
    std::uint64_t full_mask() const { return n_ == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n_) - 1; }
    const std::vector<std::uint64_t>& facets() const { return facets_; }

    bool is_void() const { return void_; }
    bool is_empty_complex() const { return !void_ && facets_.size() == 1 && facets_[0] == 0; }
    bool is_full_simplex() const { return !void_ && facets_.size() == 1 && facets_[0] == full_mask(); }
    bool has_face(std::uint64_t f) const;

    // -1 for the empty complex; error on void
    int dim() const;
    // all faces including the empty face 0, sorted by (cardinality, value)
    std::vector<std::uint64_t> all_faces() const;
    std::vector<std::uint64_t> minimal_nonfaces() const;
    bool is_pure() const;

    bool operator==(const SimplicialComplex& o) const {
        return n_ == o.n_ && void_ == o.void_ && facets_ == o.facets_;
    }

  private:
    SimplicialComplex(int n, std::vector<std::uint64_t> facets, bool v)
        : n_(n), facets_(std::move(facets)), void_(v) {}

    int n_;
    std::vector<std::uint64_t> facets_;  // sorted, pairwise incomparable
    bool void_;
};

// Delta^vee = {F : complement of F is not a face}.  The dual of the full
// simplex is the void complex (flagged, not an error).
SimplicialComplex alexander_dual(const SimplicialComplex& delta);

// {F in Delta : F subset sigma}, re-indexed on the vertices of sigma
SimplicialComplex restriction(const SimplicialComplex& delta, std::uint64_t sigma);

// dim_k of reduced homology; index 0 of the result is degree -1.
// Convention: H~_{-1}({emptyset}) = k, and 0 for any nonempty complex.
std::vector<long> reduced_homology_dims(const SimplicialComplex& delta, const FieldSpec& k);

// components of the subcomplex generated by facets of dimension >= 1;
// 0 when every facet is a point
int connected_components_nonisolated(const SimplicialComplex& delta);

// facet-adjacency components (facets adjacent when they share a face of
// codimension one in them); input must be pure
int codim_one_component_count(const SimplicialComplex& delta);

// vertices = nonempty faces, faces = chains; refuses when the number of
// vertices of the subdivision would exceed the budget
SimplicialComplex barycentric_subdivision(const SimplicialComplex& delta, int vertex_budget = 24);

}  // namespace lyu

#endif
