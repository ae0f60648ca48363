#include "frobalg/ideal.hpp"

#include <limits>

namespace frobalg {

bool is_squarefree(const MonomialIdeal& I) {
    return std::all_of(I.gens.begin(), I.gens.end(),
                       [](const Monomial& g) { return g.squarefree(); });
}

MonomialIdeal face_ideal_of(int n, std::uint32_t support) {
    if (n < 1 || n > 31) throw PreconditionError("face ideal needs 1 <= n <= 31");
    if (support == 0) throw PreconditionError("face ideal needs nonempty support");
    if (support >> n) throw PreconditionError("support outside ambient variables");
    std::vector<Monomial> gens;
    for (int i = 0; i < n; ++i)
        if (support & (1u << i)) gens.push_back(Monomial::variable(n, i));
    return make_ideal(n, std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ambient(a, b);
    std::vector<Monomial> out;
    out.reserve(a.gens.size() * b.gens.size());
    for (const Monomial& g : a.gens)
        for (const Monomial& h : b.gens) out.push_back(g * h);
    return make_ideal(a.n, std::move(out));
}

MonomialIdeal colon(const MonomialIdeal& J, const MonomialIdeal& I) {
    require_same_ambient(J, I);
    if (I.is_zero()) throw PreconditionError("colon by the zero ideal");
    bool first = true;
    MonomialIdeal acc;
    for (const Monomial& f : I.gens) {
        std::vector<Monomial> quot;
        quot.reserve(J.gens.size());
        for (const Monomial& g : J.gens) quot.push_back(exact_quotient(lcm(g, f), f));
        MonomialIdeal Jf = make_ideal(J.n, std::move(quot));
        acc = first ? std::move(Jf) : intersect(acc, Jf);
        first = false;
    }
    return acc;
}

MonomialIdeal frobenius_power(const MonomialIdeal& I, long long q) {
    if (q < 1) throw PreconditionError("Frobenius power needs q >= 1");
    std::vector<Monomial> out;
    out.reserve(I.gens.size());
    for (const Monomial& g : I.gens) {
        std::vector<int> e(g.exp);
        for (int& v : e) {
            long long s = static_cast<long long>(v) * q;
            if (s > std::numeric_limits<int>::max())
                throw PreconditionError("Frobenius power exponent overflow");
            v = static_cast<int>(s);
        }
        out.emplace_back(std::move(e));
    }
    // scaling preserves minimality and the generator order
    return MonomialIdeal{I.n, std::move(out)};
}

SymbolicIdeal frobenius_power_symbolic(const MonomialIdeal& I) {
    if (!is_squarefree(I))
        throw PreconditionError("symbolic Frobenius power needs a squarefree ideal");
    std::vector<SymbolicMonomial> out;
    out.reserve(I.gens.size());
    for (const Monomial& g : I.gens) out.push_back(symbolic_from_squarefree(g));
    return SymbolicIdeal{I.n, std::move(out)};
}

MonomialIdeal instantiate(const SymbolicIdeal& I, int q) {
    if (q < 2) throw PreconditionError("instantiation needs q >= 2");
    std::vector<Monomial> out;
    out.reserve(I.gens.size());
    // the SymExp order is the integer order at every q >= 2, so minimality
    // and the generator order carry over unchanged
    for (const SymbolicMonomial& g : I.gens) out.push_back(instantiate(g, q));
    return MonomialIdeal{I.n, std::move(out)};
}

}  // namespace frobalg
