#include "frobalg/parse.hpp"

#include <cctype>
#include <sstream>

namespace frobalg {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    int integer() {
        skip_ws();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("expected an integer at position " + std::to_string(i));
        long long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + (s[i] - '0');
            if (v > 1000000) throw ParseError("integer literal out of range");
            ++i;
        }
        return static_cast<int>(v);
    }
};

struct RawFactor {
    int index;  // 1-based variable index
    int power;
};

}  // namespace

MonomialIdeal parse_ideal(const std::string& text, int n) {
    if (n < 0) throw ParseError("negative variable count");
    Cursor c{text};
    std::vector<std::vector<RawFactor>> monomials;
    int max_index = 0;

    while (true) {
        std::vector<RawFactor> factors;
        while (true) {
            if (!c.eat('x'))
                throw ParseError("expected 'x' at position " + std::to_string(c.i));
            int idx = c.integer();
            if (idx < 1) throw ParseError("variable indices start at 1");
            int pow = 1;
            if (c.eat('^')) pow = c.integer();
            factors.push_back({idx, pow});
            max_index = std::max(max_index, idx);
            if (!c.eat('*')) break;
        }
        monomials.push_back(std::move(factors));
        if (!c.eat(',')) break;
    }
    if (!c.done())
        throw ParseError("trailing input at position " + std::to_string(c.i));

    if (n == 0) n = max_index;
    if (max_index > n)
        throw ParseError("variable x" + std::to_string(max_index) +
                         " exceeds the declared variable count " + std::to_string(n));

    std::vector<Monomial> gens;
    gens.reserve(monomials.size());
    for (const auto& factors : monomials) {
        std::vector<int> e(n, 0);
        for (const RawFactor& f : factors) e[f.index - 1] += f.power;
        gens.emplace_back(std::move(e));
    }
    return make_ideal(n, std::move(gens));
}

std::string variable_name(int i) { return "x" + std::to_string(i + 1); }

std::string to_string(const Monomial& m) {
    if (m.is_one()) return "1";
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < m.n(); ++i) {
        if (m.exp[i] == 0) continue;
        if (!first) out << '*';
        out << variable_name(i);
        if (m.exp[i] != 1) out << '^' << m.exp[i];
        first = false;
    }
    return out.str();
}

std::string to_string(const SymbolicMonomial& m) {
    if (m.is_one()) return "1";
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < m.n(); ++i) {
        if (m.exp[i] == SymExp::zero) continue;
        if (!first) out << '*';
        out << variable_name(i);
        out << (m.exp[i] == SymExp::q ? "^q" : "^(q-1)");
        first = false;
    }
    return out.str();
}

namespace {

template <class I>
std::string ideal_string(const I& ideal) {
    if (ideal.is_zero()) return "0";
    std::ostringstream out;
    for (std::size_t i = 0; i < ideal.gens.size(); ++i) {
        if (i) out << ", ";
        out << to_string(ideal.gens[i]);
    }
    return out.str();
}

}  // namespace

std::string to_string(const MonomialIdeal& I) { return ideal_string(I); }
std::string to_string(const SymbolicIdeal& I) { return ideal_string(I); }

}  // namespace frobalg
