#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "frobalg/monomial.hpp"

namespace frobalg {

// Monomial ideal held by its minimal generating set: an antichain under
// divisibility, sorted by the canonical generator order. The zero ideal has
// no generators; the unit ideal is generated by the constant monomial.
template <class M>
struct Ideal {
    int n = 0;
    std::vector<M> gens;

    static Ideal zero(int n) { return Ideal{n, {}}; }
    static Ideal unit(int n) { return Ideal{n, {M::one(n)}}; }

    bool is_zero() const { return gens.empty(); }
    bool is_unit() const { return gens.size() == 1 && gens.front().is_one(); }
    bool is_proper() const { return !is_unit(); }

    bool operator==(const Ideal&) const = default;
};

using MonomialIdeal = Ideal<Monomial>;
using SymbolicIdeal = Ideal<SymbolicMonomial>;

// Drop duplicates and every generator divisible by another one.
template <class M>
std::vector<M> minimal_generators(std::vector<M> gens) {
    std::sort(gens.begin(), gens.end(),
              [](const M& a, const M& b) { return lex_desc_less(a, b); });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<M> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < gens.size() && !dominated; ++j)
            if (j != i && divides(gens[j], gens[i])) dominated = true;
        if (!dominated) out.push_back(gens[i]);
    }
    return out;
}

template <class M>
Ideal<M> make_ideal(int n, std::vector<M> gens) {
    if (n < 0) throw PreconditionError("negative ambient variable count");
    for (const M& g : gens)
        if (g.n() != n) throw PreconditionError("generator/ambient dimension mismatch");
    return Ideal<M>{n, minimal_generators(std::move(gens))};
}

template <class M>
void require_same_ambient(const Ideal<M>& a, const Ideal<M>& b) {
    if (a.n != b.n) throw PreconditionError("ambient variable count mismatch");
}

// I cap J: minimalized pairwise lcms of the generators.
template <class M>
Ideal<M> intersect(const Ideal<M>& a, const Ideal<M>& b) {
    require_same_ambient(a, b);
    std::vector<M> out;
    out.reserve(a.gens.size() * b.gens.size());
    for (const M& g : a.gens)
        for (const M& h : b.gens) out.push_back(lcm(g, h));
    return make_ideal(a.n, std::move(out));
}

// I + J: minimalized union of the generating sets.
template <class M>
Ideal<M> sum(const Ideal<M>& a, const Ideal<M>& b) {
    require_same_ambient(a, b);
    std::vector<M> out = a.gens;
    out.insert(out.end(), b.gens.begin(), b.gens.end());
    return make_ideal(a.n, std::move(out));
}

template <class M>
bool contains(const Ideal<M>& I, const M& m) {
    if (I.n != m.n()) throw PreconditionError("ambient variable count mismatch");
    return std::any_of(I.gens.begin(), I.gens.end(),
                       [&](const M& g) { return divides(g, m); });
}

// J subseteq I as ideals, i.e. every generator of J lies in I.
template <class M>
bool ideal_contains(const Ideal<M>& I, const Ideal<M>& J) {
    require_same_ambient(I, J);
    return std::all_of(J.gens.begin(), J.gens.end(),
                       [&](const M& g) { return contains(I, g); });
}

// Sound because both sides carry their minimal generators in canonical order.
template <class M>
bool ideal_equal(const Ideal<M>& a, const Ideal<M>& b) {
    require_same_ambient(a, b);
    return a.gens == b.gens;
}

bool is_squarefree(const MonomialIdeal& I);

// Prime ideal generated by the variables in the support mask.
MonomialIdeal face_ideal_of(int n, std::uint32_t support);

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);

// (J : I), exact, via (J : f) = (1/f)(J cap (f)) per generator f of I.
MonomialIdeal colon(const MonomialIdeal& J, const MonomialIdeal& I);

MonomialIdeal frobenius_power(const MonomialIdeal& I, long long q);

// One symbolic Frobenius power valid for every q = p^e; needs I squarefree.
SymbolicIdeal frobenius_power_symbolic(const MonomialIdeal& I);

MonomialIdeal instantiate(const SymbolicIdeal& I, int q);

}  // namespace frobalg
