#include "opgb/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace opgb {

void TreePolynomial::add_term(const Tree& t, const Rational& coeff) {
    if (coeff == 0) return;
    if (!validate_tree(t))
        throw InvalidTree("polynomial term " + to_string(t));
    if (terms_.empty()) {
        arity_ = t.arity();
    } else if (t.arity() != arity_) {
        throw ArityMismatch("term of arity " + std::to_string(t.arity()) +
                            " in a polynomial of arity " +
                            std::to_string(arity_));
    }
    auto [it, inserted] = terms_.emplace(t, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
    if (terms_.empty()) arity_ = 0;
}

Rational TreePolynomial::coeff_of(const Tree& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Rational(0) : it->second;
}

TreePolynomial& TreePolynomial::operator+=(const TreePolynomial& o) {
    for (const auto& [t, c] : o.terms_) add_term(t, c);
    return *this;
}

TreePolynomial& TreePolynomial::operator-=(const TreePolynomial& o) {
    for (const auto& [t, c] : o.terms_) add_term(t, -c);
    return *this;
}

TreePolynomial& TreePolynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        arity_ = 0;
        return *this;
    }
    for (auto& [t, v] : terms_) v *= c;
    return *this;
}

LeadingTerm leading_term(const TreePolynomial& p, const MonomialOrder& order) {
    if (p.is_zero()) throw ZeroPolynomial("leading_term of 0");
    auto it = p.terms().begin();
    auto best = it;
    for (++it; it != p.terms().end(); ++it)
        if (order.less(best->first, it->first)) best = it;
    return {best->first, best->second};
}

Tree leading_monomial(const TreePolynomial& p, const MonomialOrder& order) {
    return leading_term(p, order).tree;
}

TreePolynomial monic(const TreePolynomial& p, const MonomialOrder& order) {
    LeadingTerm lt = leading_term(p, order);
    TreePolynomial out = p;
    out *= Rational(1) / lt.coeff;
    return out;
}

namespace {

std::string render_terms(const std::vector<std::pair<Tree, Rational>>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [t, c] : terms) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (mag != 1) out += to_string(mag) + "*";
        out += to_string(t);
    }
    return out;
}

} // namespace

std::string to_string(const TreePolynomial& p, const MonomialOrder& order) {
    std::vector<std::pair<Tree, Rational>> terms(p.terms().begin(),
                                                 p.terms().end());
    std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
        return order.less(b.first, a.first);
    });
    return render_terms(terms);
}

std::string to_string(const TreePolynomial& p) {
    return render_terms({p.terms().begin(), p.terms().end()});
}

TreePolynomial parse_polynomial(const std::string& text,
                                const GeneratorSet& gens) {
    TreePolynomial out;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() &&
               std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    skip_ws();
    if (pos == text.size()) throw ParseError("empty polynomial");
    if (text[pos] == '0') {
        std::size_t rest = pos + 1;
        while (rest < text.size() &&
               std::isspace(static_cast<unsigned char>(text[rest])))
            ++rest;
        if (rest == text.size()) return out;
    }
    bool first = true;
    while (pos < text.size()) {
        int sign = 1;
        skip_ws();
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            throw ParseError("expected '+' or '-' at offset " +
                             std::to_string(pos) + " in '" + text + "'");
        }
        skip_ws();
        Rational coeff = 1;
        if (pos < text.size() &&
            std::isdigit(static_cast<unsigned char>(text[pos]))) {
            std::size_t start = pos;
            while (pos < text.size() &&
                   (std::isdigit(static_cast<unsigned char>(text[pos])) ||
                    text[pos] == '/'))
                ++pos;
            coeff = parse_rational(text.substr(start, pos - start));
            skip_ws();
            if (pos >= text.size() || text[pos] != '*')
                throw ParseError("expected '*' after coefficient in '" + text +
                                 "'");
            ++pos;
            skip_ws();
        }
        std::size_t start = pos;
        int depth = 0;
        while (pos < text.size()) {
            char ch = text[pos];
            if (ch == '(') ++depth;
            if (ch == ')') --depth;
            if (depth == 0 && (ch == '+' || (ch == '-' && pos > start))) break;
            ++pos;
        }
        if (depth != 0) throw ParseError("unbalanced parentheses in '" + text + "'");
        Tree t = parse_tree(text.substr(start, pos - start), gens);
        out.add_term(t, Rational(sign) * coeff);
        first = false;
        skip_ws();
    }
    return out;
}

} // namespace opgb
