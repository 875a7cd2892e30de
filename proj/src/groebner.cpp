#include "opgb/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace opgb {

TreePolynomial lift_at(const Tree& host, const Occurrence& occ,
                       const TreePolynomial& g) {
    if (g.is_zero()) throw ZeroPolynomial("lift_at of 0");
    TreePolynomial out;
    for (const auto& [q, c] : g.terms())
        out.add_term(substitute(host, occ, q), c);
    return out;
}

TreePolynomial reduce(const TreePolynomial& p,
                      const std::vector<TreePolynomial>& basis,
                      const MonomialOrder& order) {
    std::vector<LeadingTerm> lts;
    lts.reserve(basis.size());
    for (const auto& g : basis) lts.push_back(leading_term(g, order));

    TreePolynomial remainder;
    TreePolynomial work = p;
    while (!work.is_zero()) {
        LeadingTerm lt = leading_term(work, order);
        bool cancelled = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (lts[i].tree.arity() > lt.tree.arity()) continue;
            auto occs = find_occurrences(lt.tree, lts[i].tree);
            if (occs.empty()) continue;
            TreePolynomial lift = lift_at(lt.tree, occs.front(), basis[i]);
            lift *= lt.coeff / lts[i].coeff;
            work -= lift;
            cancelled = true;
            break;
        }
        if (!cancelled) {
            remainder.add_term(lt.tree, lt.coeff);
            work.add_term(lt.tree, -lt.coeff);
        }
    }
    return remainder;
}

TreePolynomial s_polynomial(const TreePolynomial& p1, const TreePolynomial& p2,
                            const Overlap& overlap, const MonomialOrder& order) {
    LeadingTerm lt1 = leading_term(p1, order);
    LeadingTerm lt2 = leading_term(p2, order);

    auto embeds = [&](const Tree& pattern, const Occurrence& occ) {
        auto occs = find_occurrences(overlap.host, pattern);
        return std::find(occs.begin(), occs.end(), occ) != occs.end();
    };
    if (!embeds(lt1.tree, overlap.left) || !embeds(lt2.tree, overlap.right))
        throw NotAnOverlap("occurrences do not embed the leading monomials");

    auto left_region = region_paths(lt1.tree, overlap.left);
    auto right_region = region_paths(lt2.tree, overlap.right);
    std::set<Path> covered(left_region.begin(), left_region.end());
    bool share = false;
    for (const auto& path : right_region) {
        if (!covered.insert(path).second) share = true;
    }
    if (!share) throw NotAnOverlap("regions share no internal vertex");
    if (covered.size() != internal_paths(overlap.host).size())
        throw NotAnOverlap("regions do not cover the host");

    TreePolynomial s = lift_at(overlap.host, overlap.left, p1);
    s *= Rational(1) / lt1.coeff;
    TreePolynomial rhs = lift_at(overlap.host, overlap.right, p2);
    rhs *= Rational(1) / lt2.coeff;
    s -= rhs;
    return s;
}

std::vector<TreePolynomial> interreduce(std::vector<TreePolynomial> polys,
                                        const MonomialOrder& order) {
    std::vector<TreePolynomial> out;
    for (const auto& p : polys)
        if (!p.is_zero()) out.push_back(monic(p, order));
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < out.size(); ++i) {
            std::vector<TreePolynomial> others;
            others.reserve(out.size() - 1);
            for (std::size_t j = 0; j < out.size(); ++j)
                if (j != i) others.push_back(out[j]);
            TreePolynomial r = reduce(out[i], others, order);
            if (r == out[i]) continue;
            changed = true;
            if (r.is_zero()) {
                out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
                --i;
            } else {
                out[i] = monic(r, order);
            }
        }
    }
    return out;
}

namespace {

// Pending S-polynomial source, keyed for the processing order: host arity
// first, then serialized host, then basis indices and occurrence data.
struct OverlapItem {
    int arity;
    std::string host_text;
    std::size_t i, j;
    Overlap ov;

    bool operator<(const OverlapItem& o) const {
        return std::tie(arity, host_text, i, j, ov.left, ov.right) <
               std::tie(o.arity, o.host_text, o.i, o.j, o.ov.left, o.ov.right);
    }
};

void add_pair_overlaps(std::set<OverlapItem>& pending,
                       const std::vector<Tree>& lts, std::size_t i,
                       std::size_t j, int max_arity, bool& bound_exceeded) {
    // Two patterns sharing a vertex fit inside arity a_i + a_j - 2; beyond
    // max_arity part of that range is unchecked.
    if (lts[i].arity() + lts[j].arity() - 2 > max_arity) bound_exceeded = true;
    for (Overlap& ov : enumerate_overlaps(lts[i], lts[j], max_arity)) {
        if (i == j && ov.right < ov.left) continue; // mirror of (left,right)
        OverlapItem item{ov.host.arity(), to_string(ov.host), i, j,
                         std::move(ov)};
        pending.insert(std::move(item));
    }
}

} // namespace

GroebnerReport buchberger(const std::vector<TreePolynomial>& relations,
                          const GeneratorSet& gens, const MonomialOrder& order,
                          int max_arity) {
    GroebnerReport report;
    report.order_name = order.name();
    report.max_arity = max_arity;
    report.input = relations;

    std::vector<TreePolynomial> start;
    for (const auto& g : relations)
        if (!g.is_zero()) start.push_back(g);
    std::vector<TreePolynomial> basis = interreduce(std::move(start), order);

    std::vector<Tree> lts;
    for (const auto& g : basis) lts.push_back(leading_monomial(g, order));

    std::set<OverlapItem> pending;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i; j < basis.size(); ++j)
            add_pair_overlaps(pending, lts, i, j, max_arity,
                              report.bound_exceeded);

    while (!pending.empty()) {
        OverlapItem item = *pending.begin();
        pending.erase(pending.begin());
        ++report.processed_overlaps;

        TreePolynomial s =
            s_polynomial(basis[item.i], basis[item.j], item.ov, order);
        TreePolynomial r = reduce(s, basis, order);
        if (r.is_zero()) continue;

        r = monic(r, order);
        report.survivors.push_back(r);
        basis.push_back(r);
        lts.push_back(leading_monomial(r, order));
        std::size_t n = basis.size() - 1;
        for (std::size_t k = 0; k <= n; ++k)
            add_pair_overlaps(pending, lts, k, n, max_arity,
                              report.bound_exceeded);
    }

    report.basis = interreduce(std::move(basis), order);

    std::vector<Tree> final_lts;
    for (const auto& g : report.basis)
        final_lts.push_back(leading_monomial(g, order));
    for (int a = 1; a <= max_arity; ++a)
        report.normal_form_counts.push_back(
            count_normal_forms(final_lts, gens, a));
    return report;
}

long count_normal_forms(const std::vector<Tree>& leading_terms,
                        const GeneratorSet& gens, int arity) {
    if (arity == 1) return 1;
    long count = 0;
    for (const Tree& t : enumerate_trees(gens, arity)) {
        bool divisible = false;
        for (const Tree& lt : leading_terms) {
            if (lt.arity() > arity) continue;
            if (!find_occurrences(t, lt).empty()) {
                divisible = true;
                break;
            }
        }
        if (!divisible) ++count;
    }
    return count;
}

long ideal_dimension_oracle(const std::vector<TreePolynomial>& relations,
                            const GeneratorSet& gens, int arity) {
    if (arity == 1) return 1;
    std::vector<Tree> trees = enumerate_trees(gens, arity);
    if (trees.empty()) return 0;
    // The rank is independent of the column order, but aligning columns with
    // a fixed admissible order makes each row's pivot its leading monomial,
    // so elimination behaves like polynomial reduction and fill-in stays at
    // normal-form size instead of exploding.
    MonomialOrder column_order = build_pathlex_order(gens);
    std::sort(trees.begin(), trees.end(), [&](const Tree& a, const Tree& b) {
        return column_order.less(b, a);
    });
    std::map<Tree, int, TreeLess> col;
    for (std::size_t i = 0; i < trees.size(); ++i)
        col.emplace(trees[i], static_cast<int>(i));

    // Streaming row echelon: pivots[c] holds a monic row whose smallest
    // column is c.  Rows are column-sorted vectors; elimination is a linear
    // merge, which keeps the exact rational arithmetic but avoids the node
    // churn of map-based rows.
    using Row = std::vector<std::pair<int, Rational>>;
    std::vector<Row> pivots(trees.size());
    std::vector<bool> has_pivot(trees.size(), false);
    long rank = 0;

    auto axpy = [](const Row& row, const Rational& f, const Row& pivot) {
        Row out;
        out.reserve(row.size() + pivot.size());
        auto a = row.begin();
        auto b = pivot.begin();
        while (a != row.end() && b != pivot.end()) {
            if (a->first < b->first) {
                out.push_back(*a);
                ++a;
            } else if (b->first < a->first) {
                out.emplace_back(b->first, -f * b->second);
                ++b;
            } else {
                Rational v = a->second - f * b->second;
                if (!(v == 0)) out.emplace_back(a->first, std::move(v));
                ++a;
                ++b;
            }
        }
        for (; a != row.end(); ++a) out.push_back(*a);
        for (; b != pivot.end(); ++b) out.emplace_back(b->first, -f * b->second);
        return out;
    };

    auto eliminate = [&](Row row) {
        while (!row.empty()) {
            int c = row.front().first;
            if (has_pivot[static_cast<std::size_t>(c)]) {
                // the pivot row is monic at c, so the front entry cancels
                row = axpy(row, row.front().second,
                           pivots[static_cast<std::size_t>(c)]);
            } else {
                Rational inv = Rational(1) / row.front().second;
                for (auto& [cc, v] : row) v *= inv;
                pivots[static_cast<std::size_t>(c)] = std::move(row);
                has_pivot[static_cast<std::size_t>(c)] = true;
                ++rank;
                return;
            }
        }
    };

    std::vector<Row> all_rows;
    for (const TreePolynomial& g : relations) {
        if (g.is_zero() || g.arity() > arity) continue;
        // Any fixed term works as the anchor: an embedding of the relation's
        // region is an occurrence of each term in that term's substitution
        // result, so one anchor term enumerates every lifting exactly once.
        const Tree& anchor = g.terms().begin()->first;
        for (const Tree& t : trees) {
            for (const Occurrence& occ : find_occurrences(t, anchor)) {
                TreePolynomial lifted = lift_at(t, occ, g);
                Row row;
                row.reserve(lifted.terms().size());
                for (const auto& [tree, c] : lifted.terms())
                    row.emplace_back(col.at(tree), c);
                std::sort(row.begin(), row.end(),
                          [](const auto& x, const auto& y) {
                              return x.first < y.first;
                          });
                all_rows.push_back(std::move(row));
            }
        }
    }
    // Rows whose lead column is rightmost (smallest monomial) come first:
    // the first row seen for each lead column becomes a pivot with no
    // arithmetic, so most of the elimination is free and the rest reduces
    // against short triangular rows.
    std::stable_sort(all_rows.begin(), all_rows.end(),
                     [](const Row& x, const Row& y) {
                         return x.front().first > y.front().first;
                     });
    for (Row& row : all_rows) eliminate(std::move(row));
    return static_cast<long>(trees.size()) - rank;
}

} // namespace opgb
