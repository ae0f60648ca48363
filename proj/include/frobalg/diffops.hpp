#pragma once

#include <optional>
#include <string>

#include "frobalg/cartier.hpp"

namespace frobalg {

// binom(a, b) mod p, digit by digit in base p (Lucas).
int lucas_binom(long long a, long long b, int p);

// c * x^beta * d^(alpha) with a divided-power order alpha.
struct DiffTerm {
    int coeff = 1;
    Monomial beta;
    Monomial alpha;

    bool operator==(const DiffTerm&) const = default;
};

// Formal sum of terms, member of D_R^(e): all alpha entries < p^e.
struct DiffOp {
    int level = 1;
    std::vector<DiffTerm> terms;
};

// Combine equal (beta, alpha) pairs and drop zero coefficients.
DiffOp normalize(DiffOp op, int p);

int order(const DiffOp& op);

std::string to_string(const DiffOp& op);

// x^beta d^(alpha) sends x^g to binom(g, alpha) x^{g - alpha + beta};
// extended linearly and reduced into normal form mod I.
RingElement apply(const Ring& R, const DiffOp& op, const RingElement& r);

// Traves: x^beta d^(alpha) acts on R iff for every component either
// x^beta lies in it or x^alpha does not.
bool in_DR(const Monomial& beta, const Monomial& alpha, const Decomposition& D);

// Composite Phi_e(psi_{e,gamma} (x) F^e) written in normal form via the
// commutation rule d^(a) o x^b = sum_k binom(b, k) x^{b-k} d^(a-k).
DiffOp phi_image(const CartierGenerator& g, int p);

// op o (multiplication by x^delta), normalized.
DiffOp compose_multiplier(const DiffOp& op, const Monomial& delta, int p);

// a o b as operators, with the divided-power rule
// d^(s) o d^(t) = binom(s+t, t) d^(s+t).
DiffOp compose(const DiffOp& a, const DiffOp& b, int p);

DiffOp scale(const DiffOp& op, int c, int p);

// Action comparison on all monomials with exponents < p^e + max order;
// level-e operators are determined by these values.
bool operators_equal(const Ring& R, const DiffOp& a, const DiffOp& b, int e);

struct NonImageWitness {
    Monomial beta;
    Monomial alpha;
    bool bounded_check_passed = false;
};

// x_i d_i^{p^e - 1} for the first variable missing from some component; the
// bounded check compares it against c * phi_image(g) o x^delta for every
// generator, unit c and multiplier with max-norm <= p^e. Absent when every
// variable lies in every component.
std::optional<NonImageWitness> non_image_witness(const MonomialIdeal& I, int p, int e);

}  // namespace frobalg
