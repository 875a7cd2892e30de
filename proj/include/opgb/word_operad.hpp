#ifndef OPGB_WORD_OPERAD_HPP
#define OPGB_WORD_OPERAD_HPP

#include <map>
#include <string>
#include <vector>

#include "opgb/monoid.hpp"
#include "opgb/tree.hpp"

namespace opgb {

// Arity-n component of the word operad over M: a tuple of monoid elements
// indexed by 1..n.  entries[i-1] belongs to input i.
template <class M>
struct WordSeq {
    std::vector<typename M::Element> entries;

    bool operator==(const WordSeq& o) const { return entries == o.entries; }
};

template <class M>
std::string to_string(const M& m, const WordSeq<M>& w) {
    std::string out = "(";
    for (std::size_t i = 0; i < w.entries.size(); ++i) {
        if (i > 0) out += ", ";
        out += m.to_string(w.entries[i]);
    }
    out += ")";
    return out;
}

// Entrywise comparison in index order; the first strict difference decides.
// Incomparable entries stop the scan.
template <class M>
Cmp lex_compare(const M& m, const WordSeq<M>& a, const WordSeq<M>& b) {
    if (a.entries.size() != b.entries.size())
        throw LengthMismatch("comparing word sequences of lengths " +
                             std::to_string(a.entries.size()) + " and " +
                             std::to_string(b.entries.size()));
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        Cmp c = m.compare(a.entries[i], b.entries[i]);
        if (c != Cmp::equal) return c;
    }
    return Cmp::equal;
}

// Structure map of the word operad.  f maps result index i (1-based, given
// as f[i-1]) to an input slot of a; the composed entry at i is
// a(f(i)) * b_{f(i)}(r) where r counts i's position within its fiber in
// increasing index order.
template <class M>
WordSeq<M> word_compose(const M& m, const std::vector<int>& f,
                        const WordSeq<M>& a, const std::vector<WordSeq<M>>& bs) {
    const int n = static_cast<int>(a.entries.size());
    if (static_cast<int>(bs.size()) != n)
        throw LengthMismatch("need one inner sequence per slot: got " +
                             std::to_string(bs.size()) + " for arity " +
                             std::to_string(n));
    std::vector<std::size_t> fiber_size(static_cast<std::size_t>(n), 0);
    for (int v : f) {
        if (v < 1 || v > n)
            throw SlotOutOfRange("f value " + std::to_string(v) +
                                 " outside 1.." + std::to_string(n));
        ++fiber_size[static_cast<std::size_t>(v) - 1];
    }
    for (int i = 0; i < n; ++i)
        if (fiber_size[static_cast<std::size_t>(i)] !=
            bs[static_cast<std::size_t>(i)].entries.size())
            throw LengthMismatch("inner sequence " + std::to_string(i + 1) +
                                 " has length " +
                                 std::to_string(bs[static_cast<std::size_t>(i)].entries.size()) +
                                 " but fiber has size " +
                                 std::to_string(fiber_size[static_cast<std::size_t>(i)]));
    WordSeq<M> out;
    out.entries.reserve(f.size());
    std::vector<std::size_t> seen(static_cast<std::size_t>(n), 0);
    for (int v : f) {
        std::size_t slot = static_cast<std::size_t>(v) - 1;
        out.entries.push_back(
            m.product(a.entries[slot], bs[slot].entries[seen[slot]]));
        ++seen[slot];
    }
    return out;
}

// Per-generator tuples fed to evaluate_tree: one monoid element per slot.
template <class M>
using Assignment = std::map<std::string, std::vector<typename M::Element>>;

namespace detail {

template <class M>
void eval_walk(const M& m, const Tree& t, const Assignment<M>& asgn,
               const typename M::Element& prefix,
               std::vector<typename M::Element>& out) {
    if (t.is_leaf()) {
        out[static_cast<std::size_t>(t.label()) - 1] = prefix;
        return;
    }
    auto it = asgn.find(t.gen().name);
    if (it == asgn.end()) throw MissingGenerator(t.gen().name);
    if (static_cast<int>(it->second.size()) != t.gen().arity)
        throw LengthMismatch("assignment for '" + t.gen().name + "' has " +
                             std::to_string(it->second.size()) +
                             " entries for arity " +
                             std::to_string(t.gen().arity));
    for (std::size_t j = 0; j < t.children().size(); ++j)
        eval_walk(m, t.children()[j], asgn, m.product(prefix, it->second[j]),
                  out);
}

} // namespace detail

// Entry i is the ordered product of the per-slot assignment values along the
// root-to-leaf-i path, root factor leftmost.  The identity tree evaluates to
// the identity element.
template <class M>
WordSeq<M> evaluate_tree(const M& m, const Tree& t, const Assignment<M>& asgn) {
    if (!validate_tree(t)) throw InvalidTree("evaluate_tree needs a valid tree");
    WordSeq<M> out;
    out.entries.assign(static_cast<std::size_t>(t.arity()), m.identity());
    detail::eval_walk(m, t, asgn, m.identity(), out.entries);
    return out;
}

// Free monoid whose letters are the generator names, in declaration order.
FreeMonoid path_alphabet(const GeneratorSet& gens);

// The diagonal evaluation: every slot of generator g contributes the letter
// g, so entry i spells the generator names along the path to leaf i.
WordSeq<FreeMonoid> path_sequence(const Tree& t, const FreeMonoid& alphabet);

// Leaf labels in planar left-to-right order.
std::vector<int> permutation_of(const Tree& t);

} // namespace opgb

#endif
