#ifndef OPGB_TREE_HPP
#define OPGB_TREE_HPP

#include <string>
#include <vector>

#include "opgb/generator.hpp"

namespace opgb {

// A tree monomial: planar rooted tree, internal vertices labelled by
// generators, leaves labelled by distinct positive integers.  A valid tree
// has leaf labels exactly 1..n and, at every internal vertex, children in
// strictly increasing order of minimal leaf label (the shuffle condition).
// Subtrees of a valid tree carry the host's labels, so labels of a Tree in
// isolation are just distinct positive integers.
//
// Immutable after construction.  Tree::node enforces the child order and
// rejects violations instead of reordering, so a misordered argument list
// surfaces as an error at the call site; raw_node skips that check and
// exists to build deliberately broken fixtures and parser intermediates.
class Tree {
public:
    static Tree leaf(int label);
    static Tree node(const Generator& g, std::vector<Tree> children);
    static Tree raw_node(const Generator& g, std::vector<Tree> children);

    bool is_leaf() const { return leaf_ != 0; }
    int label() const { return leaf_; }
    const Generator& gen() const { return gen_; }
    const std::vector<Tree>& children() const { return children_; }

    int arity() const { return arity_; }       // number of leaves
    int weight() const { return weight_; }     // number of internal vertices
    int min_leaf() const { return min_leaf_; }

    bool operator==(const Tree& o) const { return cmp(*this, o) == 0; }
    bool operator!=(const Tree& o) const { return cmp(*this, o) != 0; }
    bool operator<(const Tree& o) const { return cmp(*this, o) < 0; }

    // Structural comparison used for canonical storage; unrelated to any
    // monomial order.
    static int cmp(const Tree& a, const Tree& b);

private:
    Tree() = default;

    int leaf_ = 0;
    Generator gen_;
    std::vector<Tree> children_;
    int arity_ = 1;
    int weight_ = 0;
    int min_leaf_ = 0;
};

using Path = std::vector<int>; // 0-based child indices from the root

// True iff leaf labels are exactly 1..arity and every vertex satisfies the
// shuffle condition.  Total on arbitrary raw trees.
bool validate_tree(const Tree& t);

std::vector<int> leaf_labels_planar(const Tree& t);
const Tree& subtree_at(const Tree& t, const Path& path);

// Grafts `inner` at the leaf of `outer` labelled `slot` and relabels the
// result with 1..(arity(outer)+arity(inner)-1): inner's leaves take the
// labels in `inner_labels` (strictly increasing) in order, the remaining
// labels go to outer's other leaves in order.  Rejects relabelings whose
// result violates the shuffle condition.
Tree compose(const Tree& outer, int slot, const Tree& inner,
             const std::vector<int>& inner_labels);

// Canonical text form: leaves print as their labels, vertices as
// "name(child, child, ...)".
std::string to_string(const Tree& t);
Tree parse_tree(const std::string& text, const GeneratorSet& gens);

} // namespace opgb

#endif
