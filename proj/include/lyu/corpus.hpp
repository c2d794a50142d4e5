#ifndef LYU_CORPUS_HPP
#define LYU_CORPUS_HPP

#include <random>
#include <string>
#include <vector>

#include "lyu/compose.hpp"

namespace lyu::corpus {

// All simplicial complexes on n vertices up to vertex permutation, as facet
// antichains.  Includes the empty complex {emptyset}; excludes the void
// complex and (by default) the full simplex.
std::vector<SimplicialComplex> complexes_up_to_iso(int n, bool include_full_simplex = false);

// fixtures built from printed data
MonomialIdeal rp2_ideal();                  // 10 cubics in 6 variables
MonomialIdeal five_var_ideal();             // six height-2 primes intersected
MonomialIdeal fig1_ideal();                 // 7 variables; complex = point + 3 segments
SimplicialComplex fig1_complex();
LyubeznikTable example22_table();           // printed 5x5 table of a determinantal ideal
MonomialIdeal prime_ideal(int n, std::initializer_list<int> vars);

// random monomial ideal with at most max_gens generators in nvars variables
MonomialIdeal random_ideal(std::mt19937_64& rng, int nvars, int max_gens, bool squarefree);

struct BatteryOptions {
    std::vector<long> characteristics{0, 2};
    RankOptions rank;
    // self-test: perturb one computed table entry and expect a detection
    bool inject_fault = false;
    int subdivision_vertex_budget = 24;
    int generator_budget = 20;
};

struct BatteryResult {
    long checks = 0;
    long skipped_budget = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// named corpora: "n5-exhaustive", "paper-examples", "random-compositions"
BatteryResult run_battery(const std::string& corpus_name, const BatteryOptions& opt = {});

}  // namespace lyu::corpus

#endif
