#ifndef LYU_TEST_UTIL_HPP
#define LYU_TEST_UTIL_HPP

#include <cstdint>
#include <initializer_list>

#include "lyu/monomial.hpp"
#include "lyu/simplicial.hpp"

namespace lyu::test {

// 1-based vertex list to bitmask
inline std::uint64_t face(std::initializer_list<int> verts) {
    std::uint64_t m = 0;
    for (int v : verts) m |= std::uint64_t(1) << (v - 1);
    return m;
}

// squarefree monomial on 1-based variable indices
inline Monomial sq(int n, std::initializer_list<int> vars) {
    Monomial m = Monomial::one(n);
    for (int v : vars) m.e[v - 1] = 1;
    return m;
}

inline Monomial mono(std::initializer_list<int> exps) {
    return Monomial(std::vector<int>(exps));
}

}  // namespace lyu::test

#endif
