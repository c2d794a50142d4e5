#include "lyu/exactla.hpp"

#include <cmath>

namespace lyu {

int sign_matrix_rank(int rows, int cols, const std::vector<int>& entries, const FieldSpec& k) {
    if (k.is_rationals()) {
        RatField f;
        ScalarMat<RatField> m(rows, cols, f);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) m.at(r, c) = f.from_int(entries[std::size_t(r) * cols + c]);
        return rank(std::move(m), f);
    }
    FpField f(static_cast<std::uint64_t>(k.characteristic));
    ScalarMat<FpField> m(rows, cols, f);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = f.from_int(entries[std::size_t(r) * cols + c]);
    return rank(std::move(m), f);
}

namespace {

int count_vars(const MonoMat<RatField>& m) {
    int n = 1;
    for (auto& rr : m.row)
        for (auto& [c, ent] : rr) n = std::max(n, ent.m.nvars());
    return n;
}

int count_vars(const MonoMat<FpField>& m) {
    int n = 1;
    for (auto& rr : m.row)
        for (auto& [c, ent] : rr) n = std::max(n, ent.m.nvars());
    return n;
}

}  // namespace

template <>
int generic_rank_randomized<RatField>(const MonoMat<RatField>& m, const RatField& f,
                                      std::uint64_t seed, int trials, RandomizedRankMeta* meta) {
    if (trials < 1) throw InputError("trials must be >= 1");
    const int nvars = count_vars(m);
    const long dim = std::min(m.rows, m.cols);
    const int maxdeg = m.max_entry_degree();
    // sample points are nonzero integers in [1, B]
    const long B = 1L << 24;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(1, B);
    int best = 0;
    for (int t = 0; t < trials; ++t)
        best = std::max(best, detail::evaluated_rank(m, f, nvars,
                                                     [&] { return f.from_int(dist(rng)); }));
    if (meta) {
        meta->trials = trials;
        meta->sample_set_size = B;
        meta->per_trial_failure_bound = double(dim) * maxdeg / double(B);
        meta->extension_degree = 1;
    }
    return best;
}

template <>
int generic_rank_randomized<FpField>(const MonoMat<FpField>& m, const FpField& f,
                                     std::uint64_t seed, int trials, RandomizedRankMeta* meta) {
    if (trials < 1) throw InputError("trials must be >= 1");
    const int nvars = count_vars(m);
    const long dim = std::min(m.rows, m.cols);
    const int maxdeg = m.max_entry_degree();
    // sample set large enough for a per-trial failure bound <= 2^-16, so that
    // a disagreement across a whole corpus sweep is effectively impossible
    const long need = (dim * std::max(maxdeg, 1)) << 16;
    std::mt19937_64 rng(seed);

    if (static_cast<long>(f.p) > need) {
        std::uniform_int_distribution<std::uint64_t> dist(0, f.p - 1);
        int best = 0;
        for (int t = 0; t < trials; ++t)
            best = std::max(best, detail::evaluated_rank(m, f, nvars, [&] { return dist(rng); }));
        if (meta) {
            meta->trials = trials;
            meta->sample_set_size = static_cast<long>(f.p);
            meta->per_trial_failure_bound = double(dim) * maxdeg / double(f.p);
            meta->extension_degree = 1;
        }
        return best;
    }

    // small base field: evaluate in F_{p^e} with p^e above the same threshold
    int e = 1;
    double size = double(f.p);
    while (size <= double(need)) {
        ++e;
        size *= double(f.p);
    }
    GFExtField ext = make_extension(f.p, e);
    std::uniform_int_distribution<std::uint64_t> dist(0, f.p - 1);
    // lift the matrix coefficients into the extension
    MonoMat<GFExtField> lifted(m.rows, m.cols);
    for (int r = 0; r < m.rows; ++r)
        for (auto& [c, ent] : m.row[r]) {
            GFExtField::Elem coef = ext.zero();
            coef[0] = ent.c;
            lifted.set(r, c, std::move(coef), ent.m);
        }
    int best = 0;
    for (int t = 0; t < trials; ++t) {
        auto sample = [&] {
            std::vector<std::uint64_t> c(ext.degree());
            for (auto& x : c) x = dist(rng);
            return ext.from_coeffs(c);
        };
        best = std::max(best, detail::evaluated_rank(lifted, ext, nvars, sample));
    }
    if (meta) {
        meta->trials = trials;
        meta->sample_set_size = static_cast<long>(size);
        meta->per_trial_failure_bound = double(dim) * maxdeg / size;
        meta->extension_degree = e;
    }
    return best;
}

}  // namespace lyu
