#pragma once

#include <string>
#include <vector>

#include "frobalg/simplicial.hpp"

namespace frobalg {

enum class GenTag { in_frobenius_power, principal_part, extra };

std::string to_string(GenTag t);

// Symbolic minimal generators of (I^[q] : I), one tag per generator. The
// extra generators are the ones outside I^[q] + (x^supp)^(q-1); their
// presence forces infinite generation of the Frobenius algebra.
struct ColonPresentation {
    SymbolicIdeal symbolic;
    std::vector<GenTag> tags;

    int extra_count() const;
    std::vector<SymbolicMonomial> extras() const;
    SymbolicMonomial principal() const;
};

// Generation type of F(E_R): all component heights > 1 without/with extra
// generators (IA/IB), mixed heights with height(I) = 1 (II), or all
// component heights 1 (III). Finitely generated exactly in IA and III.
enum class CaseTag { IA, IB, II, III };

std::string to_string(CaseTag t);

struct ClassificationReport {
    int p = 2;
    Decomposition decomposition;
    HeightProfile heights;
    CaseTag case_tag = CaseTag::IA;
    bool finitely_generated = false;
    int mu = 0;
    ColonPresentation colon;
    bool gorenstein = false;
    bool cohen_macaulay = false;
};

// (I_a^[q] : I_a) = I_a^[q] + (x^a)^(q-1); collapses to ((x^a)^(q-1)) in
// height one.
SymbolicIdeal face_colon(const FaceIdeal& a);

// (I^[q] : I) as the intersection of the face colons of the minimal primary
// decomposition, with each minimal generator tagged.
ColonPresentation colon_formula(const MonomialIdeal& I);

ClassificationReport classify(const MonomialIdeal& I, int p);

// Number of new Frobenius-algebra generators contributed by each graded
// piece; zero exactly when principally generated.
int mu(const MonomialIdeal& I);

// prod(h_i + 1) - prod(h_i) - 1 for components on pairwise disjoint variables.
long long mu_disjoint(const std::vector<int>& heights);

// For each variable x_j of the chosen component, the smallest minimal
// generator of I meeting the component support exactly in {x_j}.
MonomialIdeal companion_ideal(const MonomialIdeal& I, int component_index);

// L_e: the sum over compositions e = b_1 + ... + b_s (s >= 2, parts < e) of
// K_{b_1} K_{b_2}^[p^{b_1}] ... K_{b_s}^[p^{b_1+...+b_{s-1}}], where
// K_b = (I^[p^b] : I). Equals F_{<e} cap F^e(E_R).
MonomialIdeal katzman_L(const MonomialIdeal& I, int p, int e);

struct KatzmanWitness {
    int e = 0;
    Monomial witness;
};

// For each level 1..e_max, a minimal generator of K_e lying outside L_e,
// certifying that degree e brings new algebra generators. Callable only on
// infinitely generated inputs; a missing witness is an internal failure.
std::vector<KatzmanWitness> verify_infinitely_generated(const MonomialIdeal& I, int p,
                                                        int e_max);

std::string presentation_string(const ClassificationReport& report, int p);

}  // namespace frobalg
