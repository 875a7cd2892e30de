#ifndef OPGB_PRESENTATION_HPP
#define OPGB_PRESENTATION_HPP

#include <string>
#include <utility>
#include <vector>

#include "opgb/polynomial.hpp"

namespace opgb {

// A relation written with argument placeholders a1..a3 in arbitrary planar
// positions.  Term trees are raw: placeholder i sits at a leaf labelled i,
// and children need not satisfy the shuffle condition.
struct SymmetricTerm {
    Rational coeff;
    Tree planar;
};
struct SymmetricRelation {
    std::vector<SymmetricTerm> terms;
};

std::string to_string(const SymmetricRelation& rel);

// Audit trail of one expansion: the source relation, the independent
// relations kept, and the dependent or vanishing relabelings dropped.
struct ExpansionRecord {
    std::string source;
    std::vector<std::string> kept;
    std::vector<std::string> discarded;
};

// Instantiates the placeholders with each permutation of {1,2,3}, rewrites
// every term into a valid tree by sorting children into min-leaf order (a
// swap at a skew vertex flips the coefficient's sign, at a symmetric vertex
// keeps it), and keeps a maximal independent subset of the results, chosen
// greedily by exact rank.  All generators involved must be binary with a
// declared symmetry: UnsupportedArity / UnknownSymmetry otherwise.
std::vector<TreePolynomial> expand_symmetric(const SymmetricRelation& rel,
                                             ExpansionRecord* record = nullptr);

// Parses placeholder syntax like "lam(a1, mu(a2, a3)) - mu(lam(a1, a2), a3)".
SymmetricRelation parse_symmetric_relation(const std::string& text,
                                           const GeneratorSet& gens);

struct Presentation {
    std::string name;
    GeneratorSet generators;
    std::vector<TreePolynomial> relations;
    std::vector<ExpansionRecord> provenance;
};

// Built-in presentations: "com" (one symmetric binary generator mu with
// associativity), "lie" (one skew binary generator lam with the Jacobi
// identity), "pois" (both, adding the Leibniz rule), and "ass" (a test
// fixture: a binary generator with no symmetry, given as the pair m /
// twisted mo with the six shuffle associativity relations).  UnknownName
// otherwise.
Presentation builtin(const std::string& name);

// Line-oriented format: a "generators:" section of "name arity [symmetry]"
// lines, then a "relations:" section of polynomials in tree syntax; lines
// prefixed "symmetric:" hold placeholder relations that get expanded.
// '#' starts a comment.
Presentation parse_presentation(const std::string& text, std::string name);
Presentation load_presentation(const std::string& path);

} // namespace opgb

#endif
