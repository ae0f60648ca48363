#pragma once

#include <cstdint>
#include <vector>

#include "frobalg/errors.hpp"

namespace frobalg {

// One exponent over the symbolic alphabet {0, q-1, q}. The order
// zero < qm1 < q agrees with the integer order after substituting
// any q >= 2, so symbolic divisibility is decidable for all q at once.
enum class SymExp : std::uint8_t { zero = 0, qm1 = 1, q = 2 };

int instantiate(SymExp s, int q);

// Exponent vector of x1^e1 * ... * xn^en; all entries >= 0.
struct Monomial {
    std::vector<int> exp;

    Monomial() = default;
    explicit Monomial(std::vector<int> e);

    static Monomial one(int n);
    static Monomial variable(int n, int i, int power = 1);  // i is 0-based

    int n() const { return static_cast<int>(exp.size()); }
    bool is_one() const;
    bool squarefree() const;
    int max_norm() const;
    int degree() const;
    std::uint32_t support() const;

    bool operator==(const Monomial&) const = default;
};

// Monomial with exponents in the symbolic alphabet.
struct SymbolicMonomial {
    std::vector<SymExp> exp;

    SymbolicMonomial() = default;
    explicit SymbolicMonomial(std::vector<SymExp> e);

    static SymbolicMonomial one(int n);
    static SymbolicMonomial q_on(int n, std::uint32_t mask);
    static SymbolicMonomial qm1_on(int n, std::uint32_t mask);

    int n() const { return static_cast<int>(exp.size()); }
    bool is_one() const;
    bool has(SymExp s) const;
    std::uint32_t support_of(SymExp s) const;

    bool operator==(const SymbolicMonomial&) const = default;
};

bool divides(const Monomial& a, const Monomial& b);
bool divides(const SymbolicMonomial& a, const SymbolicMonomial& b);

Monomial lcm(const Monomial& a, const Monomial& b);
SymbolicMonomial lcm(const SymbolicMonomial& a, const SymbolicMonomial& b);

Monomial operator*(const Monomial& a, const Monomial& b);

// a / b; requires b | a
Monomial exact_quotient(const Monomial& a, const Monomial& b);

Monomial instantiate(const SymbolicMonomial& m, int q);

// 0 -> zero, 1 -> q; input must be squarefree
SymbolicMonomial symbolic_from_squarefree(const Monomial& m);

// Canonical generator order: descending lexicographic on exponent vectors,
// so generators carrying high powers of early variables come first.
bool lex_desc_less(const Monomial& a, const Monomial& b);
bool lex_desc_less(const SymbolicMonomial& a, const SymbolicMonomial& b);

}  // namespace frobalg
