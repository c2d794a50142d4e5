#ifndef LYU_COMPOSE_HPP
#define LYU_COMPOSE_HPP

#include <string>
#include <vector>

#include "lyu/lyubeznik.hpp"

namespace lyu {

// Prediction of a composed table from factor data alone; `provenance` records
// which formula clause fired.
struct NuPrediction {
    NuTable table;
    std::string provenance;
};
struct LambdaPrediction {
    LyubeznikTable table;
    std::string provenance;
};

// nu-table of the disjoint-variable sum from the factor tables.  Degree-one
// generators trivialize everything; otherwise entrywise sum plus convolution.
NuPrediction predict_nu_sum(const NuTable& nu_i, const NuTable& nu_j, bool i1_nonzero,
                            bool j1_nonzero, int l_i, int l_j);

// Lyubeznik table of the disjoint-variable intersection from the factor
// tables; m and n are the factor variable counts.
LambdaPrediction predict_lambda_intersection(const LyubeznikTable& lam_i, int m,
                                             const LyubeznikTable& lam_j, int n, int ht_i,
                                             int ht_j);

// places J's variables after I's: generators of I keep their positions,
// generators of J are shifted by I's variable count
MonomialIdeal intersect_disjoint(const MonomialIdeal& a, const MonomialIdeal& b);

enum class CompositionMode { sum_nu, intersection_lambda };

struct CompositionMismatch {
    int p = 0, i = 0;
    long expected = 0, actual = 0;
};

struct CompositionReport {
    CompositionMode mode;
    bool match = true;
    std::string clause;
    std::vector<CompositionMismatch> mismatches;
    // intersection mode only: the direct route and the dual-sum route agreed
    bool routes_agree = true;
};

// Builds the composed ideal, computes its table directly, and compares with
// the prediction entry by entry.
CompositionReport verify_composition(const MonomialIdeal& a, const MonomialIdeal& b,
                                     const FieldSpec& k, CompositionMode mode,
                                     const RankOptions& opt = {}, int generator_budget = 20);

}  // namespace lyu

#endif
