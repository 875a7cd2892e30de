#ifndef OPGB_ORDER_HPP
#define OPGB_ORDER_HPP

#include <memory>
#include <string>
#include <vector>

#include "opgb/monoid.hpp"
#include "opgb/tree.hpp"
#include "opgb/word_operad.hpp"

namespace opgb {

// One comparison stage of a monomial order.  compare may declare ties
// (Cmp::equal) that a later stage breaks; incomparable also falls through.
class OrderStage {
public:
    virtual ~OrderStage() = default;
    virtual std::string name() const = 0;
    virtual Cmp compare(const Tree& a, const Tree& b) const = 0;
    virtual std::string image(const Tree& t) const = 0;
};

// Lexicographic superposition of stages.  Total when the joint stage images
// separate trees of equal arity; the shipped orders are total because the
// path-word and permutation images together determine the tree.
class MonomialOrder {
public:
    MonomialOrder(std::string name,
                  std::vector<std::shared_ptr<const OrderStage>> stages);

    const std::string& name() const { return name_; }
    const std::vector<std::shared_ptr<const OrderStage>>& stages() const {
        return stages_;
    }

    Cmp compare(const Tree& a, const Tree& b) const; // ArityMismatch across arities
    bool less(const Tree& a, const Tree& b) const;

    struct TraceLine {
        std::string stage;
        std::string image_a;
        std::string image_b;
        Cmp result = Cmp::equal;
    };
    // One line per stage, stopping after the deciding one.
    std::vector<TraceLine> trace(const Tree& a, const Tree& b) const;

private:
    std::string name_;
    std::vector<std::shared_ptr<const OrderStage>> stages_;
};

std::shared_ptr<const OrderStage> make_qm_word_stage(Assignment<QMonoid> psi);
std::shared_ptr<const OrderStage> make_pathlex_stage(const GeneratorSet& alphabet);
std::shared_ptr<const OrderStage> make_permutation_stage();

// word(qm) with mu -> (x,x), lam -> (y,y), then path words with mu < lam,
// then the planar permutation.  Accepts any nonempty subset of those two
// binary generators so single-generator presentations can reuse it;
// anything else is WrongSignature.
MonomialOrder build_poisson_order(const GeneratorSet& gens);

// Path words over the presentation's generators in declaration order, then
// the planar permutation.
MonomialOrder build_pathlex_order(const GeneratorSet& gens);

// Resolves a named order ("poisson-qm", "pathlex") or parses a stage spec
// such as "word(qm; mu=(x,x), lam=(y,y)) > pathlex(mu<lam) > perm".
MonomialOrder resolve_order(const std::string& text, const GeneratorSet& gens);

} // namespace opgb

#endif
