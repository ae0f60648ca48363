#include "frobalg/cartier.hpp"

#include <limits>

namespace frobalg {

namespace {

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

void add_term(const Ring& R, RingElement& out, const Monomial& m, int coeff) {
    coeff %= R.p;
    if (coeff < 0) coeff += R.p;
    if (coeff == 0) return;
    if (contains(R.ideal, m)) return;
    auto [it, inserted] = out.terms.emplace(m, 0);
    it->second = (it->second + coeff) % R.p;
    if (it->second == 0) out.terms.erase(it);
}

}  // namespace

RingElement ring_zero() { return {}; }

RingElement ring_one(const Ring& R) { return monomial_element(R, Monomial::one(R.n())); }

RingElement monomial_element(const Ring& R, const Monomial& m, int coeff) {
    if (m.n() != R.n()) throw PreconditionError("ambient variable count mismatch");
    RingElement out;
    add_term(R, out, m, coeff);
    return out;
}

RingElement add(const Ring& R, const RingElement& a, const RingElement& b) {
    RingElement out = a;
    for (const auto& [m, c] : b.terms) add_term(R, out, m, c);
    return out;
}

RingElement mul(const Ring& R, const RingElement& a, const RingElement& b) {
    RingElement out;
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) add_term(R, out, ma * mb, ca * cb);
    return out;
}

RingElement pow_element(const Ring& R, const RingElement& a, long long k) {
    if (k < 0) throw PreconditionError("negative power");
    RingElement out = ring_one(R);
    for (long long i = 0; i < k; ++i) out = mul(R, out, a);
    return out;
}

std::vector<CartierGenerator> cartier_generators(const MonomialIdeal& I, int p, int e) {
    require_prime(p);
    if (e < 1) throw PreconditionError("Cartier generators need e >= 1");
    std::vector<CartierGenerator> out;
    // the principal generator is x^{(q-1) * 1} over the full ambient ring,
    // so it splits the Frobenius even when I misses variables
    const std::uint32_t full = (1u << I.n) - 1;
    out.push_back({e, CartierKind::principal, SymbolicMonomial::qm1_on(I.n, full)});
    for (const SymbolicMonomial& g : colon_formula(I).extras())
        out.push_back({e, CartierKind::extra, g});
    return out;
}

Monomial cartier_gamma(const CartierGenerator& g, int p) {
    return instantiate(g.gamma, static_cast<int>(checked_pow(p, g.e)));
}

RingElement psi_eval(const Ring& R, const CartierGenerator& g, const RingElement& r) {
    const long long q = checked_pow(R.p, g.e);
    const Monomial gamma = cartier_gamma(g, R.p);
    if (gamma.n() != R.n()) throw PreconditionError("ambient variable count mismatch");

    RingElement out;
    for (const auto& [m, c] : r.terms) {
        std::vector<int> target(R.n());
        bool hit = true;
        for (int j = 0; j < R.n() && hit; ++j) {
            long long s = static_cast<long long>(m.exp[j]) + gamma.exp[j] + 1;
            if (s % q != 0)
                hit = false;
            else
                target[j] = static_cast<int>(s / q - 1);
        }
        // coefficients live in F_p, so c^(1/q) = c
        if (hit) add_term(R, out, Monomial(std::move(target)), c);
    }
    return out;
}

std::optional<int> gauge(const RingElement& r) {
    if (r.is_zero()) return std::nullopt;
    int d = 0;
    for (const auto& [m, c] : r.terms) d = std::max(d, m.max_norm());
    return d;
}

GaugeReport check_gauge_bound(const Ring& R, int e,
                              const std::vector<RingElement>& samples) {
    const long long q = checked_pow(R.p, e);
    GaugeReport report;
    report.slack_den = q;
    const auto gens = cartier_generators(R.ideal, R.p, e);
    for (const CartierGenerator& g : gens) {
        for (const RingElement& r : samples) {
            ++report.evaluations;
            RingElement image = psi_eval(R, g, r);
            std::optional<int> din = gauge(r);
            std::optional<int> dout = gauge(image);
            if (!dout) {
                ++report.zero_results;
                continue;  // -inf satisfies every bound
            }
            long long lhs = static_cast<long long>(*dout) * q;
            long long rhs = static_cast<long long>(din.value_or(0)) + 1;
            long long slack = rhs - lhs;
            if (!din || slack < 0) ++report.violations;
            if (!report.min_slack_num || slack < *report.min_slack_num)
                report.min_slack_num = slack;
            if (!report.max_slack_num || slack > *report.max_slack_num)
                report.max_slack_num = slack;
        }
    }
    return report;
}

std::vector<RingElement> monomial_samples_below(const Ring& R, int bound) {
    if (bound < 1) throw PreconditionError("sample bound must be >= 1");
    double box = 1;
    for (int i = 0; i < R.n(); ++i) box *= bound;
    if (box > 4e6)
        throw PreconditionError(
            "sample box too large; lower the level or the variable count");
    std::vector<RingElement> out;
    std::vector<int> e(R.n(), 0);
    while (true) {
        RingElement m = monomial_element(R, Monomial(e));
        if (!m.is_zero()) out.push_back(std::move(m));
        int j = 0;
        while (j < R.n()) {
            if (++e[j] < bound) break;
            e[j] = 0;
            ++j;
        }
        if (j == R.n()) break;
    }
    return out;
}

bool f_split_check(const MonomialIdeal& I, int p) {
    require_prime(p);
    if (!is_squarefree(I) || I.is_unit())
        throw PreconditionError("F-split check needs a proper squarefree ideal");
    Ring R{I, p};
    const std::uint32_t full = (1u << I.n) - 1;
    CartierGenerator principal{1, CartierKind::principal,
                               SymbolicMonomial::qm1_on(I.n, full)};
    return psi_eval(R, principal, ring_one(R)) == ring_one(R);
}

}  // namespace frobalg
