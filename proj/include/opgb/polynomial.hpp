#ifndef OPGB_POLYNOMIAL_HPP
#define OPGB_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <utility>

#include "opgb/order.hpp"
#include "opgb/rational.hpp"
#include "opgb/tree.hpp"

namespace opgb {

struct TreeLess {
    bool operator()(const Tree& a, const Tree& b) const {
        return Tree::cmp(a, b) < 0;
    }
};

// Finite linear combination of valid trees of one shared arity; zero
// coefficients are never stored, so is_zero() == terms().empty().  The term
// map is keyed structurally; order-dependent views (leading term, display)
// take the MonomialOrder explicitly.
class TreePolynomial {
public:
    using TermMap = std::map<Tree, Rational, TreeLess>;

    TreePolynomial() = default;

    // Accumulates coeff onto the tree's coefficient.  InvalidTree on a
    // non-shuffle tree, ArityMismatch against existing terms.
    void add_term(const Tree& t, const Rational& coeff);

    bool is_zero() const { return terms_.empty(); }
    int arity() const { return arity_; } // 0 when zero
    std::size_t size() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    Rational coeff_of(const Tree& t) const;

    TreePolynomial& operator+=(const TreePolynomial& o);
    TreePolynomial& operator-=(const TreePolynomial& o);
    TreePolynomial& operator*=(const Rational& c);

    friend TreePolynomial operator+(TreePolynomial a, const TreePolynomial& b) {
        a += b;
        return a;
    }
    friend TreePolynomial operator-(TreePolynomial a, const TreePolynomial& b) {
        a -= b;
        return a;
    }
    friend TreePolynomial operator*(TreePolynomial a, const Rational& c) {
        a *= c;
        return a;
    }

    bool operator==(const TreePolynomial& o) const { return terms_ == o.terms_; }

private:
    TermMap terms_;
    int arity_ = 0;
};

struct LeadingTerm {
    Tree tree;
    Rational coeff;
};

// Maximal term under the order.  ZeroPolynomial on the zero polynomial.
LeadingTerm leading_term(const TreePolynomial& p, const MonomialOrder& order);
Tree leading_monomial(const TreePolynomial& p, const MonomialOrder& order);

// p scaled so its leading coefficient is 1.
TreePolynomial monic(const TreePolynomial& p, const MonomialOrder& order);

// Terms joined with " + " / " - ", coefficient magnitudes other than 1
// rendered as "p/q*tree".  With an order, terms appear in decreasing order;
// without, in structural order.  Zero prints "0".
std::string to_string(const TreePolynomial& p, const MonomialOrder& order);
std::string to_string(const TreePolynomial& p);

// Grammar: [sign] term (sign term)*, term = [rational "*"] tree.
TreePolynomial parse_polynomial(const std::string& text, const GeneratorSet& gens);

} // namespace opgb

#endif
