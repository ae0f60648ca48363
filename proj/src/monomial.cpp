#include "frobalg/monomial.hpp"

#include <algorithm>

namespace frobalg {

int instantiate(SymExp s, int q) {
    if (q < 2) throw PreconditionError("symbolic exponents need q >= 2");
    switch (s) {
        case SymExp::zero: return 0;
        case SymExp::qm1: return q - 1;
        default: return q;
    }
}

Monomial::Monomial(std::vector<int> e) : exp(std::move(e)) {
    for (int v : exp)
        if (v < 0) throw PreconditionError("negative exponent");
}

Monomial Monomial::one(int n) { return Monomial(std::vector<int>(n, 0)); }

Monomial Monomial::variable(int n, int i, int power) {
    if (i < 0 || i >= n) throw PreconditionError("variable index out of range");
    std::vector<int> e(n, 0);
    e[i] = power;
    return Monomial(std::move(e));
}

bool Monomial::is_one() const {
    return std::all_of(exp.begin(), exp.end(), [](int v) { return v == 0; });
}

bool Monomial::squarefree() const {
    return std::all_of(exp.begin(), exp.end(), [](int v) { return v <= 1; });
}

int Monomial::max_norm() const {
    int m = 0;
    for (int v : exp) m = std::max(m, v);
    return m;
}

int Monomial::degree() const {
    int d = 0;
    for (int v : exp) d += v;
    return d;
}

std::uint32_t Monomial::support() const {
    std::uint32_t s = 0;
    for (int i = 0; i < n(); ++i)
        if (exp[i] > 0) s |= 1u << i;
    return s;
}

SymbolicMonomial::SymbolicMonomial(std::vector<SymExp> e) : exp(std::move(e)) {}

SymbolicMonomial SymbolicMonomial::one(int n) {
    return SymbolicMonomial(std::vector<SymExp>(n, SymExp::zero));
}

SymbolicMonomial SymbolicMonomial::q_on(int n, std::uint32_t mask) {
    std::vector<SymExp> e(n, SymExp::zero);
    for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) e[i] = SymExp::q;
    return SymbolicMonomial(std::move(e));
}

SymbolicMonomial SymbolicMonomial::qm1_on(int n, std::uint32_t mask) {
    std::vector<SymExp> e(n, SymExp::zero);
    for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) e[i] = SymExp::qm1;
    return SymbolicMonomial(std::move(e));
}

bool SymbolicMonomial::is_one() const {
    return std::all_of(exp.begin(), exp.end(), [](SymExp s) { return s == SymExp::zero; });
}

bool SymbolicMonomial::has(SymExp s) const {
    return std::find(exp.begin(), exp.end(), s) != exp.end();
}

std::uint32_t SymbolicMonomial::support_of(SymExp s) const {
    std::uint32_t m = 0;
    for (int i = 0; i < n(); ++i)
        if (exp[i] == s) m |= 1u << i;
    return m;
}

namespace {

void require_same_n(int a, int b) {
    if (a != b) throw PreconditionError("ambient variable count mismatch");
}

}  // namespace

bool divides(const Monomial& a, const Monomial& b) {
    require_same_n(a.n(), b.n());
    for (int i = 0; i < a.n(); ++i)
        if (a.exp[i] > b.exp[i]) return false;
    return true;
}

bool divides(const SymbolicMonomial& a, const SymbolicMonomial& b) {
    require_same_n(a.n(), b.n());
    for (int i = 0; i < a.n(); ++i)
        if (a.exp[i] > b.exp[i]) return false;
    return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    require_same_n(a.n(), b.n());
    std::vector<int> e(a.n());
    for (int i = 0; i < a.n(); ++i) e[i] = std::max(a.exp[i], b.exp[i]);
    return Monomial(std::move(e));
}

SymbolicMonomial lcm(const SymbolicMonomial& a, const SymbolicMonomial& b) {
    require_same_n(a.n(), b.n());
    std::vector<SymExp> e(a.n());
    for (int i = 0; i < a.n(); ++i) e[i] = std::max(a.exp[i], b.exp[i]);
    return SymbolicMonomial(std::move(e));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    require_same_n(a.n(), b.n());
    std::vector<int> e(a.n());
    for (int i = 0; i < a.n(); ++i) e[i] = a.exp[i] + b.exp[i];
    return Monomial(std::move(e));
}

Monomial exact_quotient(const Monomial& a, const Monomial& b) {
    if (!divides(b, a)) throw PreconditionError("quotient is not a monomial");
    std::vector<int> e(a.n());
    for (int i = 0; i < a.n(); ++i) e[i] = a.exp[i] - b.exp[i];
    return Monomial(std::move(e));
}

Monomial instantiate(const SymbolicMonomial& m, int q) {
    std::vector<int> e(m.n());
    for (int i = 0; i < m.n(); ++i) e[i] = instantiate(m.exp[i], q);
    return Monomial(std::move(e));
}

SymbolicMonomial symbolic_from_squarefree(const Monomial& m) {
    if (!m.squarefree())
        throw PreconditionError("symbolic Frobenius powers need a squarefree monomial");
    std::vector<SymExp> e(m.n(), SymExp::zero);
    for (int i = 0; i < m.n(); ++i)
        if (m.exp[i] == 1) e[i] = SymExp::q;
    return SymbolicMonomial(std::move(e));
}

bool lex_desc_less(const Monomial& a, const Monomial& b) {
    return std::lexicographical_compare(a.exp.begin(), a.exp.end(), b.exp.begin(),
                                        b.exp.end(), std::greater<int>());
}

bool lex_desc_less(const SymbolicMonomial& a, const SymbolicMonomial& b) {
    return std::lexicographical_compare(a.exp.begin(), a.exp.end(), b.exp.begin(),
                                        b.exp.end(), std::greater<SymExp>());
}

}  // namespace frobalg
