#include "opgb/word_operad.hpp"

namespace opgb {

FreeMonoid path_alphabet(const GeneratorSet& gens) {
    std::vector<std::string> letters;
    letters.reserve(gens.size());
    for (const Generator& g : gens) letters.push_back(g.name);
    return FreeMonoid(std::move(letters));
}

WordSeq<FreeMonoid> path_sequence(const Tree& t, const FreeMonoid& alphabet) {
    Assignment<FreeMonoid> asgn;
    auto fill = [&](const Tree& node, auto&& self) -> void {
        if (node.is_leaf()) return;
        const std::string& name = node.gen().name;
        if (asgn.find(name) == asgn.end()) {
            FreeMonoid::Element l = alphabet.letter(name);
            asgn.emplace(name,
                         std::vector<FreeMonoid::Element>(
                             static_cast<std::size_t>(node.gen().arity), l));
        }
        for (const Tree& c : node.children()) self(c, self);
    };
    fill(t, fill);
    return evaluate_tree(alphabet, t, asgn);
}

std::vector<int> permutation_of(const Tree& t) {
    if (!validate_tree(t))
        throw InvalidTree("permutation_of needs a valid tree");
    return leaf_labels_planar(t);
}

} // namespace opgb
