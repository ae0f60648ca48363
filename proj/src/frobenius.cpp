#include "frobalg/frobenius.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>

#include "frobalg/parse.hpp"

namespace frobalg {

namespace {

void require_classifiable(const MonomialIdeal& I) {
    if (!is_squarefree(I)) throw PreconditionError("ideal is not squarefree");
    if (I.is_unit()) throw PreconditionError("ideal is not proper");
    if (I.is_zero()) throw PreconditionError("ideal is zero");
}

void require_prime(int p) {
    if (p < 2) throw PreconditionError("p must be a prime >= 2");
}

long long checked_pow(int p, int e) {
    long long q = 1;
    for (int i = 0; i < e; ++i) {
        q *= p;
        if (q > std::numeric_limits<int>::max())
            throw PreconditionError("p^e exponent overflow");
    }
    return q;
}

}  // namespace

std::string to_string(GenTag t) {
    switch (t) {
        case GenTag::in_frobenius_power: return "frobenius_power";
        case GenTag::principal_part: return "principal";
        default: return "extra";
    }
}

std::string to_string(CaseTag t) {
    switch (t) {
        case CaseTag::IA: return "IA";
        case CaseTag::IB: return "IB";
        case CaseTag::II: return "II";
        default: return "III";
    }
}

int ColonPresentation::extra_count() const {
    return static_cast<int>(std::count(tags.begin(), tags.end(), GenTag::extra));
}

std::vector<SymbolicMonomial> ColonPresentation::extras() const {
    std::vector<SymbolicMonomial> out;
    for (std::size_t i = 0; i < tags.size(); ++i)
        if (tags[i] == GenTag::extra) out.push_back(symbolic.gens[i]);
    return out;
}

SymbolicMonomial ColonPresentation::principal() const {
    for (std::size_t i = 0; i < tags.size(); ++i)
        if (tags[i] == GenTag::principal_part) return symbolic.gens[i];
    throw InternalError("colon presentation without a principal part");
}

SymbolicIdeal face_colon(const FaceIdeal& a) {
    if (a.support == 0) throw PreconditionError("face ideal needs nonempty support");
    std::vector<SymbolicMonomial> gens;
    for (int i = 0; i < a.n; ++i)
        if (a.support & (1u << i)) gens.push_back(SymbolicMonomial::q_on(a.n, 1u << i));
    gens.push_back(SymbolicMonomial::qm1_on(a.n, a.support));
    // in height one the q-th power is absorbed by the principal generator
    return make_ideal(a.n, std::move(gens));
}

ColonPresentation colon_formula(const MonomialIdeal& I) {
    require_classifiable(I);
    Decomposition D = primary_decomposition(I);

    bool first = true;
    SymbolicIdeal acc;
    std::uint32_t supp = 0;
    for (std::uint32_t comp : D.components) {
        SymbolicIdeal fc = face_colon(FaceIdeal{comp, D.n});
        acc = first ? std::move(fc) : intersect(acc, fc);
        first = false;
        supp |= comp;
    }

    SymbolicIdeal fp = frobenius_power_symbolic(I);
    SymbolicMonomial principal = SymbolicMonomial::qm1_on(D.n, supp);

    ColonPresentation out;
    out.symbolic = std::move(acc);
    out.tags.reserve(out.symbolic.gens.size());
    int principal_count = 0;
    for (const SymbolicMonomial& g : out.symbolic.gens) {
        if (g == principal) {
            out.tags.push_back(GenTag::principal_part);
            ++principal_count;
        } else if (contains(fp, g)) {
            out.tags.push_back(GenTag::in_frobenius_power);
        } else {
            // shape established by the case analysis: an extra generator
            // mixes q, q-1 and 0 over the support variables
            bool zero_on_supp = (g.support_of(SymExp::zero) & supp) != 0;
            if (!g.has(SymExp::q) || !g.has(SymExp::qm1) || !zero_on_supp)
                throw InternalError("extra generator with unexpected shape: " +
                                    to_string(g));
            out.tags.push_back(GenTag::extra);
        }
    }
    if (principal_count != 1)
        throw InternalError("colon formula lost the principal part");
    return out;
}

ClassificationReport classify(const MonomialIdeal& I, int p) {
    require_prime(p);
    ClassificationReport report;
    report.p = p;
    report.colon = colon_formula(I);
    report.decomposition = primary_decomposition(I);
    report.heights = height_profile(report.decomposition);
    report.mu = report.colon.extra_count();

    // unused variables never show up in the component heights, so the case
    // split is insensitive to them
    bool all_height_one = true;
    bool some_above_one = false;
    for (std::uint32_t comp : report.decomposition.components) {
        if (std::popcount(comp) > 1) {
            some_above_one = true;
            all_height_one = false;
        }
    }

    if (all_height_one) {
        report.case_tag = CaseTag::III;
        if (report.mu != 0)
            throw InternalError("height-one case produced extra generators");
    } else if (report.heights.height == 1 && some_above_one) {
        report.case_tag = CaseTag::II;
        if (report.mu == 0)
            throw InternalError("mixed-height case produced no extra generator");
    } else {
        report.case_tag = report.mu == 0 ? CaseTag::IA : CaseTag::IB;
    }
    report.finitely_generated =
        report.case_tag == CaseTag::IA || report.case_tag == CaseTag::III;
    if ((report.mu == 0) != report.finitely_generated)
        throw InternalError("mu and the generation verdict disagree");

    report.gorenstein = is_gorenstein(I, p);
    report.cohen_macaulay = is_cohen_macaulay(I, p);
    return report;
}

int mu(const MonomialIdeal& I) { return colon_formula(I).extra_count(); }

long long mu_disjoint(const std::vector<int>& heights) {
    if (heights.empty()) throw PreconditionError("mu_disjoint needs >= 1 component");
    long long with = 1, without = 1;
    for (int h : heights) {
        if (h < 1) throw PreconditionError("component heights must be >= 1");
        with *= h + 1;
        without *= h;
    }
    return with - without - 1;
}

MonomialIdeal companion_ideal(const MonomialIdeal& I, int component_index) {
    require_classifiable(I);
    Decomposition D = primary_decomposition(I);
    if (component_index < 0 ||
        component_index >= static_cast<int>(D.components.size()))
        throw PreconditionError("component index out of range");
    std::uint32_t comp = D.components[component_index];

    std::vector<Monomial> picked;
    for (int j = 0; j < D.n; ++j) {
        if (!(comp & (1u << j))) continue;
        const Monomial* best = nullptr;
        for (const Monomial& g : I.gens) {
            if ((g.support() & comp) != (1u << j)) continue;
            if (!best || g.support() < best->support()) best = &g;
        }
        if (!best)
            throw InternalError("no companion generator for variable " +
                                variable_name(j) + "; decomposition not minimal?");
        picked.push_back(*best);
    }
    return make_ideal(I.n, std::move(picked));
}

MonomialIdeal katzman_L(const MonomialIdeal& I, int p, int e) {
    require_prime(p);
    if (e < 1) throw PreconditionError("katzman_L needs e >= 1");
    MonomialIdeal acc = MonomialIdeal::zero(I.n);
    if (e == 1) return acc;

    std::vector<MonomialIdeal> K(e);  // K[b] = (I^[p^b] : I) for 1 <= b < e
    for (int b = 1; b < e; ++b)
        K[b] = colon(frobenius_power(I, checked_pow(p, b)), I);

    // walk every composition of e with parts in [1, e-1]
    std::vector<int> parts;
    auto recurse = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            if (parts.size() < 2) return;  // a single part would need b = e
            MonomialIdeal prod = K[parts[0]];
            int shift = parts[0];
            for (std::size_t j = 1; j < parts.size(); ++j) {
                prod = product(prod, frobenius_power(K[parts[j]], checked_pow(p, shift)));
                shift += parts[j];
            }
            acc = sum(acc, prod);
            return;
        }
        for (int b = 1; b < e && b <= remaining; ++b) {
            parts.push_back(b);
            self(self, remaining - b);
            parts.pop_back();
        }
    };
    recurse(recurse, e);
    return acc;
}

std::vector<KatzmanWitness> verify_infinitely_generated(const MonomialIdeal& I, int p,
                                                        int e_max) {
    require_prime(p);
    if (e_max < 1) throw PreconditionError("e_max must be >= 1");
    ColonPresentation cp = colon_formula(I);
    if (cp.extra_count() == 0)
        throw PreconditionError(
            "Katzman certificate applies to infinitely generated algebras only");

    std::vector<KatzmanWitness> out;
    for (int e = 1; e <= e_max; ++e) {
        MonomialIdeal L = katzman_L(I, p, e);
        int q = static_cast<int>(checked_pow(p, e));
        bool found = false;
        for (const SymbolicMonomial& g : cp.extras()) {
            Monomial w = instantiate(g, q);
            if (!contains(L, w)) {
                out.push_back({e, std::move(w)});
                found = true;
                break;
            }
        }
        if (!found)
            throw InternalError("no witness outside L_e at level " + std::to_string(e) +
                                "; expected by the case analysis");
    }
    return out;
}

std::string presentation_string(const ClassificationReport& report, int p) {
    std::uint32_t supp = 0;
    for (std::uint32_t comp : report.decomposition.components) supp |= comp;
    std::ostringstream out;
    std::string u;
    for (int i = 0; i < report.decomposition.n; ++i)
        if (supp & (1u << i)) {
            if (!u.empty()) u += "*";
            u += variable_name(i);
        }
    if (report.finitely_generated) {
        out << "R[(" << u << ")^(p-1)*theta; F]  (p=" << p << ")";
    } else {
        out << "infinitely generated: each degree e adds mu=" << report.mu
            << " generators (q=p^e): ";
        bool first = true;
        for (const SymbolicMonomial& g : report.colon.extras()) {
            if (!first) out << ", ";
            out << to_string(g);
            first = false;
        }
        out << "; plus the principal part (" << u << ")^(q-1)";
    }
    return out.str();
}

}  // namespace frobalg
