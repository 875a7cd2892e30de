#ifndef OPGB_MONOID_HPP
#define OPGB_MONOID_HPP

#include <string>
#include <vector>

#include "opgb/errors.hpp"
#include "opgb/rational.hpp"

namespace opgb {

enum class Cmp { less, greater, equal, incomparable };

inline Cmp flip(Cmp c) {
    if (c == Cmp::less) return Cmp::greater;
    if (c == Cmp::greater) return Cmp::less;
    return c;
}

std::string to_string(Cmp c);

// Monoid implementations expose: Element, identity(), product(a,b),
// compare(a,b) -> Cmp, to_string(e).  compare must be a strict partial
// order; ordered monoids additionally promise translation invariance
// (checked empirically by check_ordered_monoid, never assumed).

// Free monoid on a finite alphabet; elements are letter-index words.
// compare is degree-then-lex: shorter words are smaller, ties broken by the
// first differing letter in alphabet order.
class FreeMonoid {
public:
    using Element = std::vector<int>;

    explicit FreeMonoid(std::vector<std::string> alphabet);

    Element identity() const { return {}; }
    Element product(const Element& a, const Element& b) const;
    Cmp compare(const Element& a, const Element& b) const;
    std::string to_string(const Element& w) const;

    Element letter(const std::string& name) const; // UnknownLetter
    const std::vector<std::string>& alphabet() const { return alphabet_; }

private:
    std::vector<std::string> alphabet_;
};

// The monoid with three generators x, y, q subject to xq = qx, yq = qy and
// yx = xyq; every element has the normal form x^k y^l q^m, stored as the
// exponent triple.  Exponents are arbitrary-precision: m grows by products
// of the factors' exponents, quadratically in word length.
struct QMElement {
    Integer k, l, m;
    bool operator==(const QMElement& o) const = default;
};

class QMonoid {
public:
    using Element = QMElement;

    Element identity() const { return {0, 0, 0}; }

    // (x^k y^l q^m)(x^k' y^l' q^m') = x^{k+k'} y^{l+l'} q^{m+m'+l k'}:
    // moving x^k' through y^l costs l*k' powers of q.
    Element product(const Element& a, const Element& b) const;

    // Total order: larger x-exponent means SMALLER element; ties go to the
    // smaller y-exponent, then the smaller q-exponent.
    Cmp compare(const Element& a, const Element& b) const;

    std::string to_string(const Element& e) const;
    Element parse(const std::string& text) const; // normal form, bit-exact round trip
    Element from_word(const std::string& letters) const; // fold of arbitrary x/y/q string
};

QMElement qm_mul(const QMElement& a, const QMElement& b);
Cmp qm_compare(const QMElement& a, const QMElement& b);
QMElement qm_from_word(const std::string& letters);

} // namespace opgb

#endif
