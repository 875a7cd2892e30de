#include "opgb/monoid.hpp"

#include <algorithm>
#include <cctype>

namespace opgb {

std::string to_string(Cmp c) {
    switch (c) {
        case Cmp::less: return "less";
        case Cmp::greater: return "greater";
        case Cmp::equal: return "equal";
        case Cmp::incomparable: return "incomparable";
    }
    return "incomparable";
}

FreeMonoid::FreeMonoid(std::vector<std::string> alphabet)
    : alphabet_(std::move(alphabet)) {
    for (std::size_t i = 0; i < alphabet_.size(); ++i)
        for (std::size_t j = i + 1; j < alphabet_.size(); ++j)
            if (alphabet_[i] == alphabet_[j])
                throw ParseError("duplicate letter '" + alphabet_[i] + "'");
}

FreeMonoid::Element FreeMonoid::product(const Element& a, const Element& b) const {
    Element out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

Cmp FreeMonoid::compare(const Element& a, const Element& b) const {
    if (a.size() != b.size())
        return a.size() < b.size() ? Cmp::less : Cmp::greater;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? Cmp::less : Cmp::greater;
    }
    return Cmp::equal;
}

std::string FreeMonoid::to_string(const Element& w) const {
    if (w.empty()) return "1";
    bool multichar = false;
    for (const auto& s : alphabet_)
        if (s.size() > 1) multichar = true;
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0 && multichar) out += '.';
        out += alphabet_.at(static_cast<std::size_t>(w[i]));
    }
    return out;
}

FreeMonoid::Element FreeMonoid::letter(const std::string& name) const {
    for (std::size_t i = 0; i < alphabet_.size(); ++i)
        if (alphabet_[i] == name) return {static_cast<int>(i)};
    throw UnknownLetter(name);
}

QMElement QMonoid::product(const Element& a, const Element& b) const {
    return {a.k + b.k, a.l + b.l, a.m + b.m + a.l * b.k};
}

Cmp QMonoid::compare(const Element& a, const Element& b) const {
    if (a.k != b.k) return a.k > b.k ? Cmp::less : Cmp::greater;
    if (a.l != b.l) return a.l < b.l ? Cmp::less : Cmp::greater;
    if (a.m != b.m) return a.m < b.m ? Cmp::less : Cmp::greater;
    return Cmp::equal;
}

std::string QMonoid::to_string(const Element& e) const {
    if (e.k == 0 && e.l == 0 && e.m == 0) return "1";
    std::string out;
    auto part = [&](char letter, const Integer& exp) {
        if (exp == 0) return;
        out += letter;
        if (exp != 1) out += "^" + exp.str();
    };
    part('x', e.k);
    part('y', e.l);
    part('q', e.m);
    return out;
}

QMonoid::Element QMonoid::parse(const std::string& text) const {
    if (text == "1") return identity();
    Element e = identity();
    std::size_t pos = 0;
    int last = -1; // enforce x < y < q part order, each at most once
    while (pos < text.size()) {
        char c = text[pos];
        int which = c == 'x' ? 0 : c == 'y' ? 1 : c == 'q' ? 2 : -1;
        if (which < 0) throw UnknownLetter(std::string(1, c));
        if (which <= last)
            throw ParseError("'" + text + "' is not in x^k y^l q^m normal form");
        last = which;
        ++pos;
        Integer exp = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (start == pos) throw ParseError("missing exponent in '" + text + "'");
            exp = Integer(text.substr(start, pos - start));
            if (exp < 1) throw ParseError("exponent must be positive in '" + text + "'");
        }
        if (which == 0) e.k = exp;
        else if (which == 1) e.l = exp;
        else e.m = exp;
    }
    if (last < 0) throw ParseError("empty element text");
    return e;
}

QMonoid::Element QMonoid::from_word(const std::string& letters) const {
    Element acc = identity();
    for (char c : letters) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        Element next;
        if (c == 'x') next = {1, 0, 0};
        else if (c == 'y') next = {0, 1, 0};
        else if (c == 'q') next = {0, 0, 1};
        else throw UnknownLetter(std::string(1, c));
        acc = product(acc, next);
    }
    return acc;
}

QMElement qm_mul(const QMElement& a, const QMElement& b) {
    return QMonoid{}.product(a, b);
}

Cmp qm_compare(const QMElement& a, const QMElement& b) {
    return QMonoid{}.compare(a, b);
}

QMElement qm_from_word(const std::string& letters) {
    return QMonoid{}.from_word(letters);
}

} // namespace opgb
