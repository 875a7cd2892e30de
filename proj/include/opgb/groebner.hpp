#ifndef OPGB_GROEBNER_HPP
#define OPGB_GROEBNER_HPP

#include <string>
#include <vector>

#include "opgb/divisor.hpp"
#include "opgb/polynomial.hpp"

namespace opgb {

// The lifting of g through an occurrence of one of its terms: substitutes
// every term of g at the occurrence and combines with g's coefficients.
// Substituting the term the occurrence was found for returns the host
// itself, so the host appears with that term's coefficient.
TreePolynomial lift_at(const Tree& host, const Occurrence& occ,
                       const TreePolynomial& g);

// Division remainder: repeatedly cancels the leading term against the first
// basis element whose leading monomial divides it; irreducible leading terms
// move to the remainder.  Terminates because the leading term strictly
// decreases inside a finite arity component.
TreePolynomial reduce(const TreePolynomial& p,
                      const std::vector<TreePolynomial>& basis,
                      const MonomialOrder& order);

// Difference of the monic liftings of p1 and p2 onto the overlap host; the
// shared leading term cancels.  NotAnOverlap unless the occurrences really
// embed the leading monomials, share an internal vertex, and jointly cover
// the host.
TreePolynomial s_polynomial(const TreePolynomial& p1, const TreePolynomial& p2,
                            const Overlap& overlap, const MonomialOrder& order);

// Reduces each element against the others until stable; zero remainders are
// dropped, the rest are stored monic in their original order.
std::vector<TreePolynomial> interreduce(std::vector<TreePolynomial> polys,
                                        const MonomialOrder& order);

struct GroebnerReport {
    std::string order_name;
    int max_arity = 0;
    std::vector<TreePolynomial> input;
    std::vector<TreePolynomial> basis;     // reduced, monic
    std::vector<TreePolynomial> survivors; // nonzero reduced S-polynomials
    long processed_overlaps = 0;
    // True when some pair admits overlaps beyond max_arity, so the verdict
    // only covers arities up to the bound.
    bool bound_exceeded = false;
    // Normal-form count per arity 1..max_arity for the final basis.
    std::vector<long> normal_form_counts;

    bool groebner_within_bound() const { return survivors.empty(); }
};

// Bounded Buchberger completion.  Overlaps are processed in increasing host
// arity, ties broken by the serialized host and occurrence data, so reports
// are deterministic.  Survivors are adjoined to the basis as they appear and
// spawn further overlaps within the bound.
GroebnerReport buchberger(const std::vector<TreePolynomial>& relations,
                          const GeneratorSet& gens, const MonomialOrder& order,
                          int max_arity);

// Number of trees of the arity with no occurrence of any leading term.
// Arity 1 is the unit component, counted as 1.
long count_normal_forms(const std::vector<Tree>& leading_terms,
                        const GeneratorSet& gens, int arity);

// Dimension of the quotient's arity component by exact linear algebra:
// spans the ideal component with every lifting of every relation into every
// tree of the arity and subtracts the rank from the tree count.  Needs no
// monomial order; cross-checks count_normal_forms on a Groebner basis.
long ideal_dimension_oracle(const std::vector<TreePolynomial>& relations,
                            const GeneratorSet& gens, int arity);

} // namespace opgb

#endif
