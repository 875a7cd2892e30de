#include "opgb/tree.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "opgb/errors.hpp"

namespace opgb {

std::string to_string(Symmetry s) {
    switch (s) {
        case Symmetry::none: return "none";
        case Symmetry::symmetric: return "symmetric";
        case Symmetry::skew: return "skew";
    }
    return "none";
}

Symmetry parse_symmetry(const std::string& text) {
    if (text == "none") return Symmetry::none;
    if (text == "symmetric") return Symmetry::symmetric;
    if (text == "skew") return Symmetry::skew;
    throw UnknownSymmetry(text);
}

GeneratorSet::GeneratorSet(std::vector<Generator> gens) {
    for (const auto& g : gens) add(g);
}

void GeneratorSet::add(const Generator& g) {
    if (g.arity < 2)
        throw UnsupportedArity("generator '" + g.name + "' has arity " +
                               std::to_string(g.arity) + "; need >= 2");
    if (find(g.name) != nullptr)
        throw ParseError("duplicate generator '" + g.name + "'");
    gens_.push_back(g);
}

const Generator* GeneratorSet::find(const std::string& name) const {
    for (const auto& g : gens_)
        if (g.name == name) return &g;
    return nullptr;
}

const Generator& GeneratorSet::at(const std::string& name) const {
    const Generator* g = find(name);
    if (g == nullptr) throw MissingGenerator(name);
    return *g;
}

int GeneratorSet::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return static_cast<int>(i);
    return -1;
}

Tree Tree::leaf(int label) {
    if (label < 1) throw InvalidTree("leaf label must be positive");
    Tree t;
    t.leaf_ = label;
    t.arity_ = 1;
    t.weight_ = 0;
    t.min_leaf_ = label;
    return t;
}

Tree Tree::raw_node(const Generator& g, std::vector<Tree> children) {
    if (g.arity < 2)
        throw UnsupportedArity("generator '" + g.name + "' has arity " +
                               std::to_string(g.arity));
    if (static_cast<int>(children.size()) != g.arity)
        throw ArityMismatch("generator '" + g.name + "' expects " +
                            std::to_string(g.arity) + " children, got " +
                            std::to_string(children.size()));
    Tree t;
    t.gen_ = g;
    t.arity_ = 0;
    t.weight_ = 1;
    for (const auto& c : children) {
        t.arity_ += c.arity();
        t.weight_ += c.weight();
    }
    t.min_leaf_ = children.front().min_leaf();
    for (const auto& c : children)
        t.min_leaf_ = std::min(t.min_leaf_, c.min_leaf());
    t.children_ = std::move(children);
    return t;
}

Tree Tree::node(const Generator& g, std::vector<Tree> children) {
    for (std::size_t i = 0; i + 1 < children.size(); ++i)
        if (children[i].min_leaf() >= children[i + 1].min_leaf())
            throw InvalidTree(
                "children of '" + g.name +
                "' not in strictly increasing min-leaf order");
    return raw_node(g, std::move(children));
}

int Tree::cmp(const Tree& a, const Tree& b) {
    if (a.is_leaf() != b.is_leaf()) return a.is_leaf() ? -1 : 1;
    if (a.is_leaf()) return a.label() < b.label() ? -1 : (a.label() == b.label() ? 0 : 1);
    if (int c = a.gen().name.compare(b.gen().name); c != 0) return c < 0 ? -1 : 1;
    if (a.children_.size() != b.children_.size())
        return a.children_.size() < b.children_.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.children_.size(); ++i)
        if (int c = cmp(a.children_[i], b.children_[i]); c != 0) return c;
    return 0;
}

namespace {

void collect_labels(const Tree& t, std::vector<int>& out) {
    if (t.is_leaf()) {
        out.push_back(t.label());
        return;
    }
    for (const auto& c : t.children()) collect_labels(c, out);
}

bool shuffle_ok(const Tree& t) {
    if (t.is_leaf()) return true;
    for (std::size_t i = 0; i + 1 < t.children().size(); ++i)
        if (t.children()[i].min_leaf() >= t.children()[i + 1].min_leaf())
            return false;
    for (const auto& c : t.children())
        if (!shuffle_ok(c)) return false;
    return true;
}

} // namespace

bool validate_tree(const Tree& t) {
    if (!shuffle_ok(t)) return false;
    std::vector<int> labels;
    collect_labels(t, labels);
    std::sort(labels.begin(), labels.end());
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] != static_cast<int>(i) + 1) return false;
    return true;
}

std::vector<int> leaf_labels_planar(const Tree& t) {
    std::vector<int> out;
    collect_labels(t, out);
    return out;
}

const Tree& subtree_at(const Tree& t, const Path& path) {
    const Tree* cur = &t;
    for (int step : path) {
        if (cur->is_leaf() || step < 0 ||
            step >= static_cast<int>(cur->children().size()))
            throw InvalidTree("path leaves the tree");
        cur = &cur->children()[step];
    }
    return *cur;
}

namespace {

// Rebuilds `t` with every leaf label pushed through `relabel`, splicing
// `replacement` in place of the leaf labelled `slot` (slot 0: no splice).
Tree relabel_and_splice(const Tree& t, const std::vector<int>& relabel,
                        int slot, const Tree* replacement) {
    if (t.is_leaf()) {
        if (t.label() == slot && replacement != nullptr) return *replacement;
        int fresh = relabel[static_cast<std::size_t>(t.label())];
        return Tree::leaf(fresh);
    }
    std::vector<Tree> children;
    children.reserve(t.children().size());
    for (const auto& c : t.children())
        children.push_back(relabel_and_splice(c, relabel, slot, replacement));
    return Tree::node(t.gen(), std::move(children)); // throws on misorder
}

} // namespace

Tree compose(const Tree& outer, int slot, const Tree& inner,
             const std::vector<int>& inner_labels) {
    if (!validate_tree(outer) || !validate_tree(inner))
        throw InvalidTree("compose requires valid trees");
    const int m = outer.arity();
    const int k = inner.arity();
    const int n = m + k - 1;
    if (slot < 1 || slot > m)
        throw SlotOutOfRange("slot " + std::to_string(slot) + " of arity " +
                             std::to_string(m));
    if (static_cast<int>(inner_labels.size()) != k)
        throw InvalidComposition("need " + std::to_string(k) +
                                 " labels for the inner tree, got " +
                                 std::to_string(inner_labels.size()));
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    for (std::size_t i = 0; i < inner_labels.size(); ++i) {
        int v = inner_labels[i];
        if (v < 1 || v > n || used[static_cast<std::size_t>(v)])
            throw InvalidComposition("inner labels must be distinct values in 1.." +
                                     std::to_string(n));
        if (i > 0 && inner_labels[i - 1] >= v)
            throw InvalidComposition("inner labels must be strictly increasing");
        used[static_cast<std::size_t>(v)] = true;
    }

    // Inner leaf r takes inner_labels[r-1]; outer's other leaves take the
    // complement in increasing order.
    std::vector<int> inner_map(static_cast<std::size_t>(k) + 1, 0);
    for (int r = 1; r <= k; ++r)
        inner_map[static_cast<std::size_t>(r)] = inner_labels[static_cast<std::size_t>(r) - 1];
    std::vector<int> complement;
    for (int v = 1; v <= n; ++v)
        if (!used[static_cast<std::size_t>(v)]) complement.push_back(v);

    std::vector<int> outer_map(static_cast<std::size_t>(m) + 1, 0);
    std::size_t next = 0;
    for (int j = 1; j <= m; ++j) {
        if (j == slot) continue;
        outer_map[static_cast<std::size_t>(j)] = complement[next++];
    }

    try {
        Tree relabeled_inner = relabel_and_splice(inner, inner_map, 0, nullptr);
        Tree result =
            relabel_and_splice(outer, outer_map, slot, &relabeled_inner);
        if (!validate_tree(result))
            throw InvalidComposition("relabeled result is not a shuffle tree");
        return result;
    } catch (const InvalidTree& e) {
        throw InvalidComposition(e.what());
    }
}

std::string to_string(const Tree& t) {
    if (t.is_leaf()) return std::to_string(t.label());
    std::string out = t.gen().name;
    out += '(';
    for (std::size_t i = 0; i < t.children().size(); ++i) {
        if (i > 0) out += ", ";
        out += to_string(t.children()[i]);
    }
    out += ')';
    return out;
}

namespace {

struct TreeParser {
    const std::string& text;
    const GeneratorSet& gens;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg + " at offset " + std::to_string(pos) + " in '" +
                         text + "'");
    }

    void expect(char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            fail(std::string("expected '") + c + "'");
        ++pos;
    }

    Tree parse_term() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            return Tree::leaf(std::stoi(text.substr(start, pos - start)));
        }
        if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_'))
            fail("expected leaf label or generator name");
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        std::string name = text.substr(start, pos - start);
        const Generator* g = gens.find(name);
        if (g == nullptr)
            throw ParseError("unknown generator '" + name + "' in '" + text + "'");
        expect('(');
        std::vector<Tree> children;
        children.push_back(parse_term());
        skip_ws();
        while (pos < text.size() && text[pos] == ',') {
            ++pos;
            children.push_back(parse_term());
            skip_ws();
        }
        expect(')');
        if (static_cast<int>(children.size()) != g->arity)
            throw ParseError("generator '" + name + "' expects " +
                             std::to_string(g->arity) + " arguments, got " +
                             std::to_string(children.size()));
        return Tree::raw_node(*g, std::move(children));
    }
};

} // namespace

Tree parse_tree(const std::string& text, const GeneratorSet& gens) {
    TreeParser p{text, gens};
    Tree t = p.parse_term();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    if (!validate_tree(t))
        throw InvalidTree("'" + text + "' is not a valid shuffle tree");
    return t;
}

} // namespace opgb
