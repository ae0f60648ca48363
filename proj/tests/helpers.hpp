#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "frobalg/ideal.hpp"

namespace frobalg::testing {

inline std::mt19937& rng() {
    static std::mt19937 gen(20240817);
    return gen;
}

inline int rand_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng());
}

inline Monomial random_monomial(int n, int max_exp) {
    std::vector<int> e(n);
    for (int& v : e) v = rand_int(0, max_exp);
    return Monomial(std::move(e));
}

inline MonomialIdeal random_ideal(int n, int max_exp, int max_gens) {
    std::vector<Monomial> gens;
    int count = rand_int(1, max_gens);
    for (int i = 0; i < count; ++i) gens.push_back(random_monomial(n, max_exp));
    return make_ideal(n, std::move(gens));
}

// proper, nonzero, squarefree
inline MonomialIdeal random_squarefree_ideal(int n, int max_gens) {
    std::vector<Monomial> gens;
    int count = rand_int(1, max_gens);
    for (int i = 0; i < count; ++i) {
        std::vector<int> e(n, 0);
        int support = rand_int(1, (1 << n) - 1);
        for (int j = 0; j < n; ++j)
            if (support & (1 << j)) e[j] = 1;
        gens.emplace_back(std::move(e));
    }
    MonomialIdeal I = make_ideal(n, std::move(gens));
    return I.is_unit() ? random_squarefree_ideal(n, max_gens) : I;
}

inline SymbolicIdeal random_symbolic_ideal(int n, int max_gens) {
    std::vector<SymbolicMonomial> gens;
    int count = rand_int(1, max_gens);
    for (int i = 0; i < count; ++i) {
        std::vector<SymExp> e(n);
        for (SymExp& s : e) s = static_cast<SymExp>(rand_int(0, 2));
        gens.emplace_back(std::move(e));
    }
    return make_ideal(n, std::move(gens));
}

// Every antichain of nonempty subsets of {1..n}, i.e. every generator-support
// family of a proper nonzero squarefree ideal.
inline std::vector<std::vector<std::uint32_t>> all_antichains(int n) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> current;
    const std::uint32_t full = (1u << n) - 1;
    auto recurse = [&](auto&& self, std::uint32_t next) -> void {
        if (!current.empty()) out.push_back(current);
        for (std::uint32_t m = next; m <= full; ++m) {
            bool comparable = false;
            for (std::uint32_t c : current)
                if ((c & m) == c || (c & m) == m) {
                    comparable = true;
                    break;
                }
            if (comparable) continue;
            current.push_back(m);
            self(self, m + 1);
            current.pop_back();
        }
    };
    recurse(recurse, 1);
    return out;
}

inline MonomialIdeal ideal_from_supports(int n, const std::vector<std::uint32_t>& supports) {
    std::vector<Monomial> gens;
    for (std::uint32_t s : supports) {
        std::vector<int> e(n, 0);
        for (int j = 0; j < n; ++j)
            if (s & (1u << j)) e[j] = 1;
        gens.emplace_back(std::move(e));
    }
    return make_ideal(n, std::move(gens));
}

}  // namespace frobalg::testing
