#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "frobalg/ideal.hpp"

namespace frobalg {

// Prime ideal generated by a subset of the variables, encoded as a bitmask.
struct FaceIdeal {
    std::uint32_t support = 0;
    int n = 0;

    int height() const;
    bool operator==(const FaceIdeal&) const = default;
};

// Minimal primary decomposition into face ideals. The components form an
// antichain and are kept sorted ascending by mask.
struct Decomposition {
    int n = 0;
    std::vector<std::uint32_t> components;

    bool operator==(const Decomposition&) const = default;
};

// Facets (maximal faces) of a simplicial complex on vertices x1..xn. An empty
// facet list is the void complex; {0} is the complex whose only face is the
// empty face.
struct SimplicialComplex {
    int n = 0;
    std::vector<std::uint32_t> facets;

    bool is_void() const { return facets.empty(); }
    int dim() const;  // -2 for the void complex

    bool operator==(const SimplicialComplex&) const = default;
};

struct HomologyProfile {
    int p = 0;
    bool void_complex = false;
    int top_dim = -2;
    std::map<int, int> dims;  // degree -> dim_k of reduced homology

    int dim_at(int i) const;
};

struct HeightProfile {
    int height = 0;
    bool pure = false;
    bool covering = false;
};

Decomposition primary_decomposition(const MonomialIdeal& I);

// Rebuild the ideal as the intersection of the component face ideals.
MonomialIdeal intersection_ideal(const Decomposition& D);

SimplicialComplex complex_of(const MonomialIdeal& I);

MonomialIdeal alexander_dual(const MonomialIdeal& I);

bool is_face(const SimplicialComplex& c, std::uint32_t sigma);

SimplicialComplex link(const SimplicialComplex& c, std::uint32_t sigma);

// Every face, including the empty one; void complex has none.
std::vector<std::uint32_t> faces_of(const SimplicialComplex& c);

HomologyProfile reduced_homology(const SimplicialComplex& c, int p);

// Restriction to the vertices that do not lie in every facet.
SimplicialComplex core_complex(const SimplicialComplex& c);

// Every core link must be a homology sphere of full dimension over F_p.
bool is_gorenstein(const MonomialIdeal& I, int p);

// Reisner: every link has vanishing reduced homology below its dimension.
bool is_cohen_macaulay(const MonomialIdeal& I, int p);

HeightProfile height_profile(const Decomposition& D);

// dim_k of the degree-alpha piece in the local cohomology description:
// reduced homology of the link of the complementary face in degree
// |alpha| - height(I) - 1. Zero when the complementary face is missing.
int hochster_piece(const MonomialIdeal& I, std::uint32_t alpha, int p);

}  // namespace frobalg
