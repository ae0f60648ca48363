#pragma once

#include <map>
#include <optional>
#include <vector>

#include "frobalg/frobenius.hpp"

namespace frobalg {

// Quotient R = S/I over the prime field F_p with its canonical monomial basis
// (the monomials outside I).
struct Ring {
    MonomialIdeal ideal;
    int p = 2;

    int n() const { return ideal.n; }
};

struct CanonicalLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return lex_desc_less(a, b);
    }
};

// Element of R in normal form: coefficients in [1, p), no basis monomial in I.
struct RingElement {
    std::map<Monomial, int, CanonicalLess> terms;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const RingElement&) const = default;
};

RingElement ring_zero();
RingElement ring_one(const Ring& R);
RingElement monomial_element(const Ring& R, const Monomial& m, int coeff = 1);
RingElement add(const Ring& R, const RingElement& a, const RingElement& b);
RingElement mul(const Ring& R, const RingElement& a, const RingElement& b);
RingElement pow_element(const Ring& R, const RingElement& a, long long k);

enum class CartierKind { principal, extra };

// Right R-module generator psi_{e,gamma} = psi_e o x^gamma of C_e(R). The
// principal generator has gamma = (q-1, ..., q-1); the extras carry the
// extra colon generators, all read at q = p^e.
struct CartierGenerator {
    int e = 1;
    CartierKind kind = CartierKind::principal;
    SymbolicMonomial gamma;
};

std::vector<CartierGenerator> cartier_generators(const MonomialIdeal& I, int p, int e);

Monomial cartier_gamma(const CartierGenerator& g, int p);

// psi_{e,gamma}(c x^a) = c x^{(a+gamma+1)/q - 1} when q divides every
// a_j + gamma_j + 1, else 0; extended additively, result in normal form.
RingElement psi_eval(const Ring& R, const CartierGenerator& g, const RingElement& r);

// Max-norm filtration degree of the normal form; empty for 0.
std::optional<int> gauge(const RingElement& r);

// Exact record of the inequality delta(psi(r)) <= delta(r)/q + 1/q, i.e.
// K/(p-1) with K = (p-1)/q. Scaled by q so every slack is an integer:
// slack = delta(r) + 1 - q * delta(psi(r)).
struct GaugeReport {
    long long evaluations = 0;
    long long zero_results = 0;
    long long violations = 0;
    long long slack_den = 1;
    std::optional<long long> min_slack_num;
    std::optional<long long> max_slack_num;

    bool ok() const { return violations == 0; }
};

GaugeReport check_gauge_bound(const Ring& R, int e,
                              const std::vector<RingElement>& samples);

// All monomials of max-norm < bound that survive in R, as ring elements.
std::vector<RingElement> monomial_samples_below(const Ring& R, int bound);

// psi_{1,u}(1) = 1 for u = x^{(p-1) * (1,...,1)}: the Frobenius splitting.
bool f_split_check(const MonomialIdeal& I, int p);

}  // namespace frobalg
