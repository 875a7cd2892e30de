#include "opgb/checks.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "opgb/divisor.hpp"

namespace opgb {

std::vector<int> Rng::subset(int n, int k) {
    std::vector<int> values(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = i + 1;
    for (int i = 0; i < k; ++i)
        std::swap(values[static_cast<std::size_t>(i)],
                  values[static_cast<std::size_t>(i + below(n - i))]);
    values.resize(static_cast<std::size_t>(k));
    std::sort(values.begin(), values.end());
    return values;
}

CheckReport check_qm_invariance_exhaustive(int max_exp) {
    CheckReport report;
    report.suite = "qm-invariance-exhaustive";
    QMonoid qm;
    std::vector<QMElement> elems;
    for (int k = 0; k <= max_exp; ++k)
        for (int l = 0; l <= max_exp; ++l)
            for (int m = 0; m <= max_exp; ++m)
                elems.push_back({k, l, m});
    for (const auto& a : elems) {
        for (const auto& b : elems) {
            if (qm.compare(a, b) != Cmp::less) continue;
            for (const auto& c : elems) {
                ++report.trials;
                if (qm.compare(qm.product(a, c), qm.product(b, c)) != Cmp::less)
                    report.fail("right translation: a=" + qm.to_string(a) +
                                " b=" + qm.to_string(b) + " c=" + qm.to_string(c));
                if (qm.compare(qm.product(c, a), qm.product(c, b)) != Cmp::less)
                    report.fail("left translation: a=" + qm.to_string(a) +
                                " b=" + qm.to_string(b) + " c=" + qm.to_string(c));
            }
        }
    }
    return report;
}

namespace {

// Cache of enumerate_trees per arity, shared by the sampled suites.
struct TreePool {
    const GeneratorSet& gens;
    std::map<int, std::vector<Tree>> byArity;

    const std::vector<Tree>& of(int arity) {
        auto it = byArity.find(arity);
        if (it == byArity.end())
            it = byArity.emplace(arity, enumerate_trees(gens, arity)).first;
        return it->second;
    }

    const Tree& pick(int arity, Rng& rng) {
        const auto& pool = of(arity);
        return pool[static_cast<std::size_t>(
            rng.below(static_cast<int>(pool.size())))];
    }
};

struct LegalGraft {
    int inner_arity;
    int outer_arity;
    int slot;
    std::vector<int> labels;
};

// Any ascending label set is legal exactly when the slot is the rank of its
// minimum among all composite labels outside it; with singleton fibers
// elsewhere that rank is min(labels) itself.
LegalGraft sample_graft(int max_arity, Rng& rng) {
    LegalGraft g;
    g.inner_arity = 2 + rng.below(max_arity - 2);
    g.outer_arity = 2 + rng.below(max_arity - g.inner_arity);
    int total = g.outer_arity + g.inner_arity - 1;
    g.labels = rng.subset(total, g.inner_arity);
    g.slot = g.labels.front();
    return g;
}

std::string labels_text(const std::vector<int>& labels) {
    std::string out = "{";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(labels[i]);
    }
    return out + "}";
}

} // namespace

CheckReport check_admissible(const MonomialOrder& order,
                             const GeneratorSet& gens, long trials,
                             int max_arity, Rng& rng) {
    CheckReport report;
    report.suite = "admissible(" + order.name() + ")";
    TreePool pool{gens, {}};
    while (report.trials < trials) {
        LegalGraft g = sample_graft(max_arity, rng);

        const Tree& t1 = pool.pick(g.inner_arity, rng);
        const Tree& t2 = pool.pick(g.inner_arity, rng);
        Cmp c = order.compare(t1, t2);
        if (c != Cmp::less && c != Cmp::greater) continue;
        const Tree& lo = c == Cmp::less ? t1 : t2;
        const Tree& hi = c == Cmp::less ? t2 : t1;
        ++report.trials;

        const Tree& outer = pool.pick(g.outer_arity, rng);
        try {
            Tree ta = compose(outer, g.slot, lo, g.labels);
            Tree tb = compose(outer, g.slot, hi, g.labels);
            if (order.compare(ta, tb) != Cmp::less)
                report.fail("context above: outer=" + to_string(outer) +
                            " slot=" + std::to_string(g.slot) + " labels=" +
                            labels_text(g.labels) + " lo=" + to_string(lo) +
                            " hi=" + to_string(hi));
        } catch (const Error& e) {
            report.fail(std::string("context above rejected a legal graft: ") +
                        e.what());
        }

        const Tree& o1 = pool.pick(g.outer_arity, rng);
        const Tree& o2 = pool.pick(g.outer_arity, rng);
        Cmp co = order.compare(o1, o2);
        if (co != Cmp::less && co != Cmp::greater) continue;
        const Tree& olo = co == Cmp::less ? o1 : o2;
        const Tree& ohi = co == Cmp::less ? o2 : o1;
        const Tree& arg = pool.pick(g.inner_arity, rng);
        try {
            Tree ua = compose(olo, g.slot, arg, g.labels);
            Tree ub = compose(ohi, g.slot, arg, g.labels);
            if (order.compare(ua, ub) != Cmp::less)
                report.fail("argument below: arg=" + to_string(arg) + " slot=" +
                            std::to_string(g.slot) + " labels=" +
                            labels_text(g.labels) + " lo=" + to_string(olo) +
                            " hi=" + to_string(ohi));
        } catch (const Error& e) {
            report.fail(std::string("argument below rejected a legal graft: ") +
                        e.what());
        }
    }
    return report;
}

std::vector<int> composition_map(int outer_arity, int slot, int inner_arity,
                                 const std::vector<int>& inner_labels) {
    int total = outer_arity + inner_arity - 1;
    std::vector<bool> in_labels(static_cast<std::size_t>(total) + 1, false);
    for (int v : inner_labels) in_labels[static_cast<std::size_t>(v)] = true;
    std::vector<int> others;
    for (int j = 1; j <= outer_arity; ++j)
        if (j != slot) others.push_back(j);
    std::vector<int> f;
    f.reserve(static_cast<std::size_t>(total));
    std::size_t idx = 0;
    for (int i = 1; i <= total; ++i) {
        if (in_labels[static_cast<std::size_t>(i)])
            f.push_back(slot);
        else
            f.push_back(others[idx++]);
    }
    return f;
}

CheckReport check_word_morphisms(const GeneratorSet& gens,
                                 const Assignment<QMonoid>* psi, long trials,
                                 int max_arity, Rng& rng) {
    CheckReport report;
    report.suite = "word-morphisms";
    FreeMonoid alphabet = path_alphabet(gens);
    QMonoid qm;
    TreePool pool{gens, {}};
    while (report.trials < trials) {
        LegalGraft g = sample_graft(max_arity, rng);
        const Tree& outer = pool.pick(g.outer_arity, rng);
        const Tree& inner = pool.pick(g.inner_arity, rng);
        ++report.trials;

        Tree composite = compose(outer, g.slot, inner, g.labels);
        std::vector<int> f =
            composition_map(g.outer_arity, g.slot, g.inner_arity, g.labels);
        std::string where = "outer=" + to_string(outer) + " slot=" +
                            std::to_string(g.slot) + " labels=" +
                            labels_text(g.labels) + " inner=" + to_string(inner);

        std::vector<WordSeq<FreeMonoid>> bs(
            static_cast<std::size_t>(g.outer_arity));
        for (int j = 1; j <= g.outer_arity; ++j) {
            if (j == g.slot)
                bs[static_cast<std::size_t>(j - 1)] =
                    path_sequence(inner, alphabet);
            else
                bs[static_cast<std::size_t>(j - 1)].entries.push_back(
                    alphabet.identity());
        }
        if (!(path_sequence(composite, alphabet) ==
              word_compose(alphabet, f, path_sequence(outer, alphabet), bs)))
            report.fail("path sequence does not compose: " + where);

        std::vector<int> complement;
        for (int i = 1; i <= composite.arity(); ++i)
            if (std::find(g.labels.begin(), g.labels.end(), i) ==
                g.labels.end())
                complement.push_back(i);
        std::vector<int> other_label(static_cast<std::size_t>(g.outer_arity) + 1,
                                     0);
        std::size_t idx = 0;
        for (int j = 1; j <= g.outer_arity; ++j)
            if (j != g.slot) other_label[static_cast<std::size_t>(j)] =
                complement[idx++];
        std::vector<int> expected;
        for (int p : permutation_of(outer)) {
            if (p == g.slot) {
                for (int r : permutation_of(inner))
                    expected.push_back(
                        g.labels[static_cast<std::size_t>(r - 1)]);
            } else {
                expected.push_back(other_label[static_cast<std::size_t>(p)]);
            }
        }
        if (permutation_of(composite) != expected)
            report.fail("planar permutation does not compose: " + where);

        if (psi) {
            std::vector<WordSeq<QMonoid>> qbs(
                static_cast<std::size_t>(g.outer_arity));
            for (int j = 1; j <= g.outer_arity; ++j) {
                if (j == g.slot)
                    qbs[static_cast<std::size_t>(j - 1)] =
                        evaluate_tree(qm, inner, *psi);
                else
                    qbs[static_cast<std::size_t>(j - 1)].entries.push_back(
                        qm.identity());
            }
            if (!(evaluate_tree(qm, composite, *psi) ==
                  word_compose(qm, f, evaluate_tree(qm, outer, *psi), qbs)))
                report.fail("qm evaluation does not compose: " + where);
        }
    }
    return report;
}

CheckReport check_word_injectivity(const GeneratorSet& gens, int max_arity) {
    CheckReport report;
    report.suite = "word-injectivity";
    FreeMonoid alphabet = path_alphabet(gens);
    for (int arity = 2; arity <= max_arity; ++arity) {
        std::map<std::pair<std::string, std::vector<int>>, Tree> seen;
        for (const Tree& t : enumerate_trees(gens, arity)) {
            ++report.trials;
            std::pair<std::string, std::vector<int>> key{
                to_string(alphabet, path_sequence(t, alphabet)),
                permutation_of(t)};
            auto [it, inserted] = seen.emplace(key, t);
            if (!inserted)
                report.fail("arity " + std::to_string(arity) + ": " +
                            to_string(it->second) + " and " + to_string(t) +
                            " share " + key.first);
        }
    }
    return report;
}

namespace {

class ReversedWordStage final : public OrderStage {
public:
    explicit ReversedWordStage(Assignment<QMReversedM> psi)
        : psi_(std::move(psi)) {}

    std::string name() const override { return "word(qm-mrev)"; }

    Cmp compare(const Tree& a, const Tree& b) const override {
        return lex_compare(m_, evaluate_tree(m_, a, psi_),
                           evaluate_tree(m_, b, psi_));
    }

    std::string image(const Tree& t) const override {
        return to_string(m_, evaluate_tree(m_, t, psi_));
    }

private:
    QMReversedM m_;
    Assignment<QMReversedM> psi_;
};

} // namespace

MonomialOrder make_m_reversed_order(const GeneratorSet& gens) {
    Assignment<QMReversedM> psi;
    for (const Generator& g : gens) {
        if (g.arity != 2 || (g.name != "mu" && g.name != "lam"))
            throw WrongSignature("the reversed order mirrors poisson-qm; got '" +
                                 g.name + "'");
        if (g.name == "mu")
            psi.emplace("mu", std::vector<QMElement>{{1, 0, 0}, {1, 0, 0}});
        else
            psi.emplace("lam", std::vector<QMElement>{{0, 1, 0}, {0, 1, 0}});
    }
    GeneratorSet alphabet;
    if (gens.find("mu")) alphabet.add(*gens.find("mu"));
    if (gens.find("lam")) alphabet.add(*gens.find("lam"));
    return MonomialOrder(
        "poisson-qm-mrev",
        {std::make_shared<ReversedWordStage>(std::move(psi)),
         make_pathlex_stage(alphabet), make_permutation_stage()});
}

} // namespace opgb
