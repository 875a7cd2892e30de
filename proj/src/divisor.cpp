#include "opgb/divisor.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "opgb/errors.hpp"

namespace opgb {

namespace {

void check_pattern(const Tree& pattern) {
    if (!validate_tree(pattern))
        throw InvalidTree("pattern is not a valid shuffle tree");
    if (pattern.weight() < 1)
        throw InvalidTree("pattern needs at least one internal vertex");
}

// Walks pattern and host in lockstep from an anchor; fills leaf_positions
// indexed by pattern leaf label.  Fails on any generator mismatch.
bool match_region(const Tree& host_sub, const Tree& pattern, const Path& at,
                  std::vector<Path>& leaf_positions) {
    if (pattern.is_leaf()) {
        leaf_positions[static_cast<std::size_t>(pattern.label()) - 1] = at;
        return true;
    }
    if (host_sub.is_leaf()) return false;
    if (!(host_sub.gen() == pattern.gen())) return false;
    for (std::size_t i = 0; i < pattern.children().size(); ++i) {
        Path next = at;
        next.push_back(static_cast<int>(i));
        if (!match_region(host_sub.children()[i], pattern.children()[i], next,
                          leaf_positions))
            return false;
    }
    return true;
}

void collect_internal_paths(const Tree& t, Path& cur, std::vector<Path>& out) {
    if (t.is_leaf()) return;
    out.push_back(cur);
    for (std::size_t i = 0; i < t.children().size(); ++i) {
        cur.push_back(static_cast<int>(i));
        collect_internal_paths(t.children()[i], cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Path> internal_paths(const Tree& t) {
    std::vector<Path> out;
    Path cur;
    collect_internal_paths(t, cur, out);
    return out;
}

std::vector<Occurrence> find_occurrences(const Tree& host, const Tree& pattern) {
    check_pattern(pattern);
    if (!validate_tree(host)) throw InvalidTree("host is not a valid shuffle tree");
    std::vector<Occurrence> out;
    for (const Path& anchor : internal_paths(host)) {
        const Tree& sub = subtree_at(host, anchor);
        std::vector<Path> leaf_positions(
            static_cast<std::size_t>(pattern.arity()));
        if (!match_region(sub, pattern, anchor, leaf_positions)) continue;
        // Argument min-labels must increase with the pattern's leaf labels;
        // otherwise the region is not reachable by shuffle composition.
        bool mins_ok = true;
        int prev = 0;
        for (const Path& p : leaf_positions) {
            int m = subtree_at(host, p).min_leaf();
            if (m <= prev) {
                mins_ok = false;
                break;
            }
            prev = m;
        }
        if (!mins_ok) continue;
        out.push_back(Occurrence{anchor, std::move(leaf_positions)});
    }
    return out;
}

namespace {

Tree build_replacement(const Tree& shape, const std::vector<Tree>& args) {
    if (shape.is_leaf())
        return args[static_cast<std::size_t>(shape.label()) - 1];
    std::vector<Tree> children;
    children.reserve(shape.children().size());
    for (const auto& c : shape.children())
        children.push_back(build_replacement(c, args));
    return Tree::node(shape.gen(), std::move(children));
}

Tree splice_at(const Tree& t, const Path& anchor, std::size_t depth,
               const Tree& built) {
    if (depth == anchor.size()) return built;
    if (t.is_leaf()) throw InvalidTree("anchor path leaves the tree");
    std::vector<Tree> children = t.children();
    auto step = static_cast<std::size_t>(anchor[depth]);
    children[step] = splice_at(children[step], anchor, depth + 1, built);
    return Tree::node(t.gen(), std::move(children));
}

} // namespace

Tree substitute(const Tree& host, const Occurrence& occ, const Tree& replacement) {
    if (replacement.arity() != static_cast<int>(occ.leaf_positions.size()))
        throw ArityMismatch("replacement arity " +
                            std::to_string(replacement.arity()) +
                            " does not fit an occurrence with " +
                            std::to_string(occ.leaf_positions.size()) +
                            " arguments");
    std::vector<Tree> args;
    args.reserve(occ.leaf_positions.size());
    for (const Path& p : occ.leaf_positions) args.push_back(subtree_at(host, p));
    Tree built = build_replacement(replacement, args);
    return splice_at(host, occ.anchor, 0, built);
}

std::vector<Path> region_paths(const Tree& pattern, const Occurrence& occ) {
    std::vector<Path> out;
    for (const Path& rel : internal_paths(pattern)) {
        Path abs = occ.anchor;
        abs.insert(abs.end(), rel.begin(), rel.end());
        out.push_back(std::move(abs));
    }
    return out;
}

namespace {

// Partitions of `labels` into exactly `blocks` nonempty parts, as
// restricted-growth assignments.  Labels are scanned in increasing order, so
// parts come out ordered by their minima.
void partitions(const std::vector<int>& labels, int blocks,
                std::vector<int>& assign, int used,
                std::vector<std::vector<std::vector<int>>>& out) {
    std::size_t i = assign.size();
    if (i == labels.size()) {
        if (used != blocks) return;
        std::vector<std::vector<int>> parts(static_cast<std::size_t>(blocks));
        for (std::size_t j = 0; j < labels.size(); ++j)
            parts[static_cast<std::size_t>(assign[j])].push_back(labels[j]);
        out.push_back(std::move(parts));
        return;
    }
    int remaining = static_cast<int>(labels.size() - i);
    for (int b = 0; b <= used && b < blocks; ++b) {
        assign.push_back(b);
        int next_used = (b == used) ? used + 1 : used;
        // The labels left after this one must suffice to open every block
        // still closed.
        if (blocks - next_used <= remaining - 1)
            partitions(labels, blocks, assign, next_used, out);
        assign.pop_back();
    }
}

void trees_over(const GeneratorSet& gens, const std::vector<int>& labels,
                std::vector<Tree>& out);

void product_over_blocks(const Generator& g,
                         const std::vector<std::vector<Tree>>& choices,
                         std::vector<Tree>& partial, std::vector<Tree>& out) {
    std::size_t i = partial.size();
    if (i == choices.size()) {
        out.push_back(Tree::node(g, partial));
        return;
    }
    for (const Tree& t : choices[i]) {
        partial.push_back(t);
        product_over_blocks(g, choices, partial, out);
        partial.pop_back();
    }
}

void trees_over(const GeneratorSet& gens, const std::vector<int>& labels,
                std::vector<Tree>& out) {
    if (labels.size() == 1) {
        out.push_back(Tree::leaf(labels[0]));
        return;
    }
    for (const Generator& g : gens) {
        if (g.arity > static_cast<int>(labels.size())) continue;
        std::vector<std::vector<std::vector<int>>> parts;
        std::vector<int> assign;
        partitions(labels, g.arity, assign, 0, parts);
        for (const auto& blocks : parts) {
            std::vector<std::vector<Tree>> choices;
            choices.reserve(blocks.size());
            for (const auto& block : blocks) {
                std::vector<Tree> sub;
                trees_over(gens, block, sub);
                choices.push_back(std::move(sub));
            }
            std::vector<Tree> partial;
            product_over_blocks(g, choices, partial, out);
        }
    }
}

} // namespace

std::vector<Tree> enumerate_trees(const GeneratorSet& gens, int arity) {
    if (arity < 1) throw UnsupportedArity("arity must be >= 1");
    std::vector<int> labels(static_cast<std::size_t>(arity));
    for (int i = 0; i < arity; ++i) labels[static_cast<std::size_t>(i)] = i + 1;
    std::vector<Tree> out;
    trees_over(gens, labels, out);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

GeneratorSet generators_of(const Tree& a, const Tree& b) {
    std::map<std::string, Generator> by_name;
    auto walk = [&](const Tree& t, auto&& self) -> void {
        if (t.is_leaf()) return;
        auto it = by_name.find(t.gen().name);
        if (it == by_name.end()) {
            by_name.emplace(t.gen().name, t.gen());
        } else if (!(it->second == t.gen())) {
            throw ArityMismatch("generator '" + t.gen().name +
                                "' used with two arities");
        }
        for (const auto& c : t.children()) self(c, self);
    };
    walk(a, walk);
    walk(b, walk);
    GeneratorSet gens;
    for (const auto& [name, g] : by_name) gens.add(g);
    return gens;
}

} // namespace

std::vector<Overlap> enumerate_overlaps(const Tree& p1, const Tree& p2,
                                        int max_arity) {
    check_pattern(p1);
    check_pattern(p2);
    GeneratorSet gens = generators_of(p1, p2);
    std::vector<Overlap> out;
    bool same_pattern = p1 == p2;
    int start = std::max(p1.arity(), p2.arity());
    for (int a = start; a <= max_arity; ++a) {
        for (const Tree& host : enumerate_trees(gens, a)) {
            auto occs1 = find_occurrences(host, p1);
            if (occs1.empty()) continue;
            auto occs2 = find_occurrences(host, p2);
            if (occs2.empty()) continue;
            std::vector<Path> all = internal_paths(host);
            for (const Occurrence& o1 : occs1) {
                std::set<Path> r1;
                for (auto& p : region_paths(p1, o1)) r1.insert(p);
                for (const Occurrence& o2 : occs2) {
                    // the same region paired with itself is not an overlap
                    if (same_pattern && o1 == o2) continue;
                    std::set<Path> r2;
                    for (auto& p : region_paths(p2, o2)) r2.insert(p);
                    bool share = false;
                    for (const auto& p : r1)
                        if (r2.count(p)) { share = true; break; }
                    if (!share) continue;
                    bool covered = true;
                    for (const auto& p : all)
                        if (!r1.count(p) && !r2.count(p)) { covered = false; break; }
                    if (!covered) continue;
                    out.push_back(Overlap{host, o1, o2});
                }
            }
        }
    }
    return out;
}

} // namespace opgb
