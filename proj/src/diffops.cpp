#include "frobalg/diffops.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include "frobalg/parse.hpp"

namespace frobalg {

namespace {

long long checked_pow(int p, int e) {
    long long q = 1;
    for (int i = 0; i < e; ++i) {
        q *= p;
        if (q > std::numeric_limits<int>::max())
            throw PreconditionError("p^e exponent overflow");
    }
    return q;
}

int binom_digit(int a, int b, int p) {
    // a, b < p; multiplicative formula with Fermat inverses
    if (b > a) return 0;
    long long num = 1, den = 1;
    for (int i = 0; i < b; ++i) {
        num = num * ((a - i) % p) % p;
        den = den * ((i + 1) % p) % p;
    }
    long long inv = 1, base = den, exp = p - 2;
    while (exp > 0) {
        if (exp & 1) inv = inv * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return static_cast<int>(num * inv % p);
}

}  // namespace

int lucas_binom(long long a, long long b, int p) {
    if (p < 2) throw PreconditionError("p must be a prime >= 2");
    if (b < 0 || a < 0) return 0;
    int result = 1;
    while (a > 0 || b > 0) {
        int da = static_cast<int>(a % p), db = static_cast<int>(b % p);
        result = result * binom_digit(da, db, p) % p;
        if (result == 0) return 0;
        a /= p;
        b /= p;
    }
    return result;
}

DiffOp normalize(DiffOp op, int p) {
    std::map<std::pair<std::vector<int>, std::vector<int>>, int> acc;
    for (const DiffTerm& t : op.terms) {
        int& c = acc[{t.beta.exp, t.alpha.exp}];
        c = ((c + t.coeff) % p + p) % p;
    }
    DiffOp out;
    out.level = op.level;
    for (const auto& [key, c] : acc)
        if (c != 0) out.terms.push_back({c, Monomial(key.first), Monomial(key.second)});
    return out;
}

int order(const DiffOp& op) {
    int d = 0;
    for (const DiffTerm& t : op.terms) d = std::max(d, t.alpha.max_norm());
    return d;
}

std::string to_string(const DiffOp& op) {
    if (op.terms.empty()) return "0";
    std::ostringstream out;
    bool first_term = true;
    for (const DiffTerm& t : op.terms) {
        if (!first_term) out << " + ";
        first_term = false;
        bool printed = false;
        if (t.coeff != 1) {
            out << t.coeff;
            printed = true;
        }
        if (!t.beta.is_one()) {
            if (printed) out << '*';
            out << to_string(t.beta);
            printed = true;
        }
        for (int i = 0; i < t.alpha.n(); ++i) {
            if (t.alpha.exp[i] == 0) continue;
            if (printed) out << '*';
            out << 'd' << (i + 1);
            if (t.alpha.exp[i] != 1) out << '^' << t.alpha.exp[i];
            printed = true;
        }
        if (!printed) out << '1';
    }
    return out.str();
}

RingElement apply(const Ring& R, const DiffOp& op, const RingElement& r) {
    RingElement out;
    for (const auto& [m, c] : r.terms) {
        for (const DiffTerm& t : op.terms) {
            if (t.alpha.n() != m.n() || t.beta.n() != m.n())
                throw PreconditionError("ambient variable count mismatch");
            int coeff = c * t.coeff % R.p;
            std::vector<int> target(m.n());
            bool ok = true;
            for (int i = 0; i < m.n() && ok; ++i) {
                if (m.exp[i] < t.alpha.exp[i]) {
                    ok = false;
                    break;
                }
                coeff = static_cast<int>(
                    static_cast<long long>(coeff) *
                    lucas_binom(m.exp[i], t.alpha.exp[i], R.p) % R.p);
                if (coeff == 0) {
                    ok = false;
                    break;
                }
                target[i] = m.exp[i] - t.alpha.exp[i] + t.beta.exp[i];
            }
            if (ok) {
                RingElement piece = monomial_element(R, Monomial(std::move(target)), coeff);
                out = add(R, out, piece);
            }
        }
    }
    return out;
}

bool in_DR(const Monomial& beta, const Monomial& alpha, const Decomposition& D) {
    if (beta.n() != D.n || alpha.n() != D.n)
        throw PreconditionError("ambient variable count mismatch");
    for (std::uint32_t comp : D.components) {
        bool beta_in = (beta.support() & comp) != 0;
        bool alpha_in = (alpha.support() & comp) != 0;
        if (!beta_in && alpha_in) return false;
    }
    return true;
}

namespace {

// d^(a) o (multiply by x^b) expanded over the k <= min(a, b) grid, with an
// extra left multiplier prepended to beta.
void expand_commutation(DiffOp& out, int coeff, const Monomial& left,
                        const Monomial& a, const Monomial& b, int p) {
    int n = a.n();
    std::vector<int> k(n, 0);
    while (true) {
        long long c = coeff;
        for (int i = 0; i < n && c != 0; ++i) c = c * lucas_binom(b.exp[i], k[i], p) % p;
        if (c != 0) {
            std::vector<int> beta(n), alpha(n);
            for (int i = 0; i < n; ++i) {
                beta[i] = left.exp[i] + b.exp[i] - k[i];
                alpha[i] = a.exp[i] - k[i];
            }
            out.terms.push_back(
                {static_cast<int>(c), Monomial(std::move(beta)), Monomial(std::move(alpha))});
        }
        int j = 0;
        while (j < n) {
            if (++k[j] <= std::min(a.exp[j], b.exp[j])) break;
            k[j] = 0;
            ++j;
        }
        if (j == n) break;
    }
}

}  // namespace

DiffOp phi_image(const CartierGenerator& g, int p) {
    const int n = g.gamma.n();
    const long long q = checked_pow(p, g.e);
    DiffOp out;
    out.level = g.e;

    const Monomial dq(std::vector<int>(n, static_cast<int>(q - 1)));
    if (g.kind == CartierKind::principal) {
        // d^{(q-1)1} o x^{(q-1)1}
        expand_commutation(out, 1, Monomial::one(n), dq, dq, p);
    } else {
        // x^{q a} o d^{(q-1)1} o x^{(q-1) b} with a, b the indicator vectors
        // of supp_q(gamma) and supp_{q-1}(gamma)
        std::uint32_t a_mask = g.gamma.support_of(SymExp::q);
        std::uint32_t b_mask = g.gamma.support_of(SymExp::qm1);
        std::vector<int> left(n, 0), right(n, 0);
        for (int i = 0; i < n; ++i) {
            if (a_mask & (1u << i)) left[i] = static_cast<int>(q);
            if (b_mask & (1u << i)) right[i] = static_cast<int>(q - 1);
        }
        expand_commutation(out, 1, Monomial(std::move(left)), dq, Monomial(std::move(right)),
                           p);
    }
    return normalize(std::move(out), p);
}

DiffOp compose_multiplier(const DiffOp& op, const Monomial& delta, int p) {
    DiffOp out;
    out.level = op.level;
    for (const DiffTerm& t : op.terms)
        expand_commutation(out, t.coeff, t.beta, t.alpha, delta, p);
    return normalize(std::move(out), p);
}

DiffOp compose(const DiffOp& a, const DiffOp& b, int p) {
    DiffOp out;
    out.level = a.level + b.level;  // tightened below once the orders are known
    for (const DiffTerm& ta : a.terms)
        for (const DiffTerm& tb : b.terms) {
            DiffOp middle;  // d^(alpha_a) o x^(beta_b), shifted by beta_a
            expand_commutation(middle, ta.coeff * tb.coeff % p, ta.beta, ta.alpha,
                               tb.beta, p);
            for (const DiffTerm& tm : middle.terms) {
                long long c = tm.coeff;
                std::vector<int> alpha(tm.alpha.n());
                for (int i = 0; i < tm.alpha.n() && c != 0; ++i) {
                    alpha[i] = tm.alpha.exp[i] + tb.alpha.exp[i];
                    c = c * lucas_binom(alpha[i], tb.alpha.exp[i], p) % p;
                }
                if (c != 0)
                    out.terms.push_back({static_cast<int>(c), tm.beta,
                                         Monomial(std::move(alpha))});
            }
        }
    out = normalize(std::move(out), p);
    int level = 1;
    long long q = p;
    while (q <= order(out)) {
        q *= p;
        ++level;
    }
    out.level = level;
    return out;
}

DiffOp scale(const DiffOp& op, int c, int p) {
    DiffOp out;
    out.level = op.level;
    for (const DiffTerm& t : op.terms)
        out.terms.push_back({t.coeff * c % p, t.beta, t.alpha});
    return normalize(std::move(out), p);
}

bool operators_equal(const Ring& R, const DiffOp& a, const DiffOp& b, int e) {
    if (a.level > e || b.level > e)
        throw PreconditionError("operator level exceeds the comparison level");
    const long long q = checked_pow(R.p, e);
    const long long bound = q + std::max(order(a), order(b));
    double grid = 1;
    for (int i = 0; i < R.n(); ++i) grid *= static_cast<double>(bound);
    if (bound > 64 || grid > 4e6)
        throw PreconditionError("comparison grid too large");

    std::vector<int> exp(R.n(), 0);
    while (true) {
        RingElement m = monomial_element(R, Monomial(exp));
        if (!m.is_zero() && !(apply(R, a, m) == apply(R, b, m))) return false;
        int j = 0;
        while (j < R.n()) {
            if (++exp[j] < bound) break;
            exp[j] = 0;
            ++j;
        }
        if (j == R.n()) break;
    }
    return true;
}

std::optional<NonImageWitness> non_image_witness(const MonomialIdeal& I, int p, int e) {
    if (e < 1) throw PreconditionError("witness level must be >= 1");
    Decomposition D = primary_decomposition(I);
    const long long q = checked_pow(p, e);

    int pick = -1;
    for (int i = 0; i < D.n && pick < 0; ++i)
        for (std::uint32_t comp : D.components)
            if (!(comp & (1u << i))) {
                pick = i;
                break;
            }
    if (pick < 0) return std::nullopt;

    NonImageWitness w;
    w.beta = Monomial::variable(D.n, pick);
    w.alpha = Monomial::variable(D.n, pick, static_cast<int>(q - 1));
    DiffOp witness{e, {{1, w.beta, w.alpha}}};

    Ring R{I, p};
    w.bounded_check_passed = true;
    const auto gens = cartier_generators(I, p, e);
    std::vector<int> delta(D.n, 0);
    for (const CartierGenerator& g : gens) {
        DiffOp base = phi_image(g, p);
        std::fill(delta.begin(), delta.end(), 0);
        while (w.bounded_check_passed) {
            DiffOp composed = compose_multiplier(base, Monomial(delta), p);
            for (int c = 1; c < p && w.bounded_check_passed; ++c)
                if (operators_equal(R, scale(composed, c, p), witness, e))
                    w.bounded_check_passed = false;
            int j = 0;
            while (j < D.n) {
                if (++delta[j] <= q) break;
                delta[j] = 0;
                ++j;
            }
            if (j == D.n) break;
        }
        if (!w.bounded_check_passed) break;
    }
    return w;
}

}  // namespace frobalg
