#ifndef OPGB_DIVISOR_HPP
#define OPGB_DIVISOR_HPP

#include <vector>

#include "opgb/tree.hpp"

namespace opgb {

// One embedding of a pattern into a host tree.  The embedding is determined
// by the anchor vertex: the pattern's internal skeleton must match the
// host's vertex-for-vertex from there, and leaf_positions[r-1] records where
// the argument subtree sitting under pattern leaf r hangs in the host.
// Argument subtrees must have strictly increasing min-leaf labels in pattern
// leaf order, so that substituting any tree of the pattern's arity at the
// occurrence yields a valid shuffle tree.
struct Occurrence {
    Path anchor;
    std::vector<Path> leaf_positions;

    bool operator==(const Occurrence& o) const {
        return anchor == o.anchor && leaf_positions == o.leaf_positions;
    }
    bool operator<(const Occurrence& o) const {
        if (anchor != o.anchor) return anchor < o.anchor;
        return leaf_positions < o.leaf_positions;
    }
};

// All occurrences of pattern in host, anchors in depth-first preorder.
// Pattern must be valid with weight >= 1.
std::vector<Occurrence> find_occurrences(const Tree& host, const Tree& pattern);

// Replaces the matched region with `replacement` (same arity as the matched
// pattern), keeping the host's argument subtrees and leaf labels.
Tree substitute(const Tree& host, const Occurrence& occ, const Tree& replacement);

// Internal-vertex paths of t in depth-first preorder.
std::vector<Path> internal_paths(const Tree& t);

// Host paths of the internal vertices covered by an occurrence of pattern.
std::vector<Path> region_paths(const Tree& pattern, const Occurrence& occ);

// All distinct valid tree monomials of the given arity, sorted structurally.
// Arity 1 yields the bare identity leaf.
std::vector<Tree> enumerate_trees(const GeneratorSet& gens, int arity);

// A small common multiple of two patterns: a host tree carrying one
// occurrence of each, the two regions sharing at least one vertex and
// jointly covering every internal vertex of the host.
struct Overlap {
    Tree host;
    Occurrence left;  // occurrence of the first pattern
    Occurrence right; // occurrence of the second pattern
};

std::vector<Overlap> enumerate_overlaps(const Tree& p1, const Tree& p2,
                                        int max_arity);

} // namespace opgb

#endif
