#pragma once

#include "frobalg/frobenius.hpp"

namespace frobalg {

// Decomposition in canonical form: the lexicographically smallest sorted
// component list over all variable permutations.
struct CanonicalIdeal {
    int n = 0;
    std::vector<std::uint32_t> components;

    bool operator==(const CanonicalIdeal&) const = default;
    bool operator<(const CanonicalIdeal& o) const { return components < o.components; }
};

struct CensusRow {
    int n = 0;
    int height = 0;
    long long pg = 0;
    long long gor = 0;
    long long ig = 0;
};

CanonicalIdeal canonical_form(const Decomposition& D);

bool is_canonical(int n, const std::vector<std::uint32_t>& sorted_components);

// All decompositions with the given height (the component size when pure,
// the minimum size otherwise), one representative per relabeling orbit.
std::vector<CanonicalIdeal> enumerate_ideals(int n, int height, bool pure,
                                             bool covering);

MonomialIdeal ideal_of(const CanonicalIdeal& c);

// One row per pure height: ideals counted by generation type of F(E_R) and
// by Gorensteinness at characteristic p. Covering ideals only.
std::vector<CensusRow> census(int n, int p, int jobs = 1);

// Intersection of all face ideals of pure height k in n variables.
MonomialIdeal build_Ikn(int k, int n);

// (x_1..x_r, block products of x_{r+1}..x_n split at the cut points)
// intersected with (x_{r+1}, ..., x_n).
MonomialIdeal build_family_4_2(int n, int r, const std::vector<int>& cuts);

}  // namespace frobalg
