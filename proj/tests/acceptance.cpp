// Acceptance gate: one pass/fail line per criterion, nonzero exit when any
// fails.  argv[1] is the path to the CLI binary (used by the determinism
// criterion); everything else exercises the library directly.

#include <chrono>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "opgb/checks.hpp"
#include "opgb/groebner.hpp"
#include "opgb/presentation.hpp"

using namespace opgb;

namespace {

std::string g_cli;

long factorial(int n) {
    long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

// ---- criterion 1: rewriting schedules reach one normal form ----

// One random rewrite schedule: repeatedly pick an applicable position at
// random and rewrite until no rule applies.
std::string rewrite_random(std::string w, Rng& rng) {
    for (;;) {
        std::vector<std::size_t> sites;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            char a = w[i], b = w[i + 1];
            if ((a == 'q' && (b == 'x' || b == 'y')) || (a == 'y' && b == 'x'))
                sites.push_back(i);
        }
        if (sites.empty()) return w;
        std::size_t i = sites[static_cast<std::size_t>(
            rng.below(static_cast<int>(sites.size())))];
        if (w[i] == 'q') {
            std::swap(w[i], w[i + 1]);
        } else {
            w.replace(i, 2, "xyq");
        }
    }
}

bool is_sorted_form(const std::string& w, long& k, long& l, long& m) {
    k = l = m = 0;
    int phase = 0;
    for (char c : w) {
        int p = c == 'x' ? 0 : c == 'y' ? 1 : 2;
        if (p < phase) return false;
        phase = p;
        if (p == 0) ++k;
        else if (p == 1) ++l;
        else ++m;
    }
    return true;
}

Outcome criterion1() {
    Rng rng(1);
    const std::string letters = "xyq";
    std::vector<std::string> words{""};
    for (int len = 1; len <= 8; ++len) {
        std::vector<std::string> next;
        for (const auto& w : words)
            if (static_cast<int>(w.size()) == len - 1)
                for (char c : letters) next.push_back(w + c);
        words.insert(words.end(), next.begin(), next.end());
    }
    long checked = 0;
    for (const auto& w : words) {
        QMElement expect = qm_from_word(w);
        for (int s = 0; s < 50; ++s) {
            std::string nf = rewrite_random(w, rng);
            long k, l, m;
            if (!is_sorted_form(nf, k, l, m))
                return {false, "schedule left an unsorted word: " + nf};
            if (!(QMElement{k, l, m} == expect))
                return {false, "word " + w + " rewrote to " + nf +
                                   " but qm_from_word says " +
                                   QMonoid().to_string(expect)};
            ++checked;
        }
    }
    std::ostringstream os;
    os << words.size() << " words x 50 random schedules (" << checked
       << " rewrites), every normal form matches qm_from_word";
    return {true, os.str()};
}

// ---- criterion 2: translation invariance of the QM order ----

Outcome criterion2() {
    CheckReport ex = check_qm_invariance_exhaustive(4);
    if (!ex.passed())
        return {false, "exhaustive sweep found " + std::to_string(ex.failures) +
                           " violations, e.g. " + ex.counterexamples.front()};
    Rng rng(2);
    auto big = [](Rng& r) {
        return QMElement{r.below(1000), r.below(1000), r.below(1000)};
    };
    CheckReport rnd =
        check_ordered_monoid(QMonoid{}, "qm-large", big, 10000, rng);
    if (!rnd.passed())
        return {false, "random large triples found " +
                           std::to_string(rnd.failures) + " violations"};
    std::ostringstream os;
    os << "exhaustive exponents <= 4 (" << ex.trials
       << " ordered pairs x translators) and " << rnd.trials
       << " random large triples, zero counterexamples";
    return {true, os.str()};
}

// ---- criterion 3: ordered-operad law for QM and the free monoid ----

Outcome criterion3() {
    Rng rng(3);
    auto qm_sample = [](Rng& r) {
        return QMElement{r.below(11), r.below(11), r.below(11)};
    };
    CheckReport qm =
        check_ordered_operad(QMonoid{}, "qm", qm_sample, 10000, 5, rng);
    if (!qm.passed())
        return {false, "QM word operad: " + std::to_string(qm.failures) +
                           " violations, e.g. " + qm.counterexamples.front()};

    FreeMonoid free({"a", "b"});
    auto free_sample = [&](Rng& r) {
        FreeMonoid::Element w;
        int len = r.below(7);
        for (int i = 0; i < len; ++i) w.push_back(r.below(2));
        return w;
    };
    CheckReport fr =
        check_ordered_operad(free, "free", free_sample, 10000, 5, rng);
    if (!fr.passed())
        return {false, "free monoid word operad: " +
                           std::to_string(fr.failures) + " violations"};
    return {true, "10^4 composition contexts of arity <= 5 for QM and for "
                  "the free monoid under length-lex, zero counterexamples"};
}

// ---- criterion 4: path sequence and planar permutation of the example ----

Outcome criterion4() {
    GeneratorSet gens({{"a", 2, Symmetry::none}, {"b", 2, Symmetry::none}});
    Tree t = parse_tree("a(b(1, 3), 2)", gens);
    FreeMonoid alphabet = path_alphabet(gens);
    std::string theta = to_string(alphabet, path_sequence(t, alphabet));
    std::vector<int> sigma = permutation_of(t);
    if (theta != "(ab, a, ab)")
        return {false, "path sequence printed " + theta};
    if (sigma != std::vector<int>{1, 3, 2}) {
        std::string got;
        for (int v : sigma) got += std::to_string(v) + " ";
        return {false, "planar permutation was " + got};
    }
    return {true, "a(b(1, 3), 2) has path sequence (ab, a, ab) and planar "
                  "permutation (1, 3, 2)"};
}

// ---- criterion 5: leading terms of the Leibniz relations ----

Outcome criterion5() {
    Presentation pois = builtin("pois");
    MonomialOrder order = build_poisson_order(pois.generators);
    const char* expected[] = {"lam(1, mu(2, 3))", "lam(mu(1, 3), 2)",
                              "lam(mu(1, 2), 3)"};
    for (int i = 0; i < 3; ++i) {
        const TreePolynomial& rel = pois.relations[static_cast<std::size_t>(3 + i)];
        Tree lt = leading_monomial(rel, order);
        Tree want = parse_tree(expected[i], pois.generators);
        if (!(Tree::cmp(lt, want) == 0))
            return {false, "relation " + std::to_string(3 + i) +
                               " has leading term " + to_string(lt) +
                               ", expected " + expected[i]};
    }
    return {true, "each expanded Leibniz relation leads with its left-hand "
                  "side tree under the Poisson order"};
}

// ---- criterion 6: quadratic Groebner basis for pois at arity 4 ----

Outcome criterion6() {
    Presentation pois = builtin("pois");
    MonomialOrder order = build_poisson_order(pois.generators);
    GroebnerReport rep = buchberger(pois.relations, pois.generators, order, 4);
    if (!rep.survivors.empty())
        return {false, std::to_string(rep.survivors.size()) +
                           " S-polynomials survived reduction"};
    if (rep.basis.size() != 6)
        return {false, "basis has " + std::to_string(rep.basis.size()) +
                           " elements, expected the 6 inputs"};
    for (std::size_t i = 0; i < 6; ++i)
        if (!(rep.basis[i] == monic(pois.relations[i], order)))
            return {false, "basis element " + std::to_string(i) +
                               " differs from the monic input relation"};
    std::ostringstream os;
    os << "zero survivors among " << rep.processed_overlaps
       << " overlaps; reduced basis is the 6 defining relations, monic";
    return {true, os.str()};
}

// ---- criterion 7: Poisson dimensions are n! by count and by oracle ----

Outcome criterion7() {
    Presentation pois = builtin("pois");
    MonomialOrder order = build_poisson_order(pois.generators);
    std::vector<Tree> lts;
    for (const auto& p : pois.relations)
        lts.push_back(leading_monomial(p, order));
    std::ostringstream os;
    for (int a = 2; a <= 6; ++a) {
        long nf = count_normal_forms(lts, pois.generators, a);
        long oracle = ideal_dimension_oracle(pois.relations, pois.generators, a);
        long want = factorial(a);
        if (nf != want || oracle != want)
            return {false, "arity " + std::to_string(a) + ": normal forms " +
                               std::to_string(nf) + ", oracle " +
                               std::to_string(oracle) + ", expected " +
                               std::to_string(want)};
        os << (a > 2 ? ", " : "") << nf;
    }
    return {true, "dimensions 2..6 are " + os.str() +
                      " by normal-form count and by rank oracle"};
}

// ---- criterion 8: Com and Lie sub-presentations ----

Outcome criterion8() {
    struct Case {
        const char* preset;
        std::vector<long> dims; // arities 2..6
    };
    std::vector<Case> cases{{"com", {1, 1, 1, 1, 1}},
                            {"lie", {1, 2, 6, 24, 120}}};
    for (const auto& c : cases) {
        Presentation pres = builtin(c.preset);
        MonomialOrder restricted = build_poisson_order(pres.generators);
        MonomialOrder pathlex = build_pathlex_order(pres.generators);
        for (const MonomialOrder* order : {&restricted, &pathlex}) {
            GroebnerReport rep =
                buchberger(pres.relations, pres.generators, *order, 4);
            if (!rep.survivors.empty())
                return {false, std::string(c.preset) + " under " +
                                   order->name() + ": " +
                                   std::to_string(rep.survivors.size()) +
                                   " survivors"};
            std::vector<Tree> lts;
            for (const auto& p : rep.basis)
                lts.push_back(leading_monomial(p, *order));
            for (int a = 2; a <= 6; ++a) {
                long nf = count_normal_forms(lts, pres.generators, a);
                long want = c.dims[static_cast<std::size_t>(a - 2)];
                if (nf != want)
                    return {false, std::string(c.preset) + " under " +
                                       order->name() + " arity " +
                                       std::to_string(a) + ": " +
                                       std::to_string(nf) + " normal forms, "
                                       "expected " + std::to_string(want)};
            }
        }
        for (int a = 2; a <= 6; ++a) {
            long oracle =
                ideal_dimension_oracle(pres.relations, pres.generators, a);
            long want = c.dims[static_cast<std::size_t>(a - 2)];
            if (oracle != want)
                return {false, std::string(c.preset) + " oracle arity " +
                                   std::to_string(a) + ": " +
                                   std::to_string(oracle) + ", expected " +
                                   std::to_string(want)};
        }
    }
    return {true, "com dimensions all 1, lie dimensions (n-1)!, by count "
                  "under both orders and by oracle; zero survivors under "
                  "poisson-qm restricted and pathlex"};
}

// ---- criterion 9: morphism laws and injectivity of (theta, sigma) ----

Outcome criterion9() {
    Presentation pois = builtin("pois");
    Assignment<QMonoid> psi{{"mu", {QMElement{1, 0, 0}, QMElement{1, 0, 0}}},
                            {"lam", {QMElement{0, 1, 0}, QMElement{0, 1, 0}}}};
    Rng rng(9);
    CheckReport mor =
        check_word_morphisms(pois.generators, &psi, 10000, 5, rng);
    if (!mor.passed())
        return {false, "morphism laws: " + std::to_string(mor.failures) +
                           " violations, e.g. " + mor.counterexamples.front()};
    CheckReport inj = check_word_injectivity(pois.generators, 5);
    if (!inj.passed())
        return {false, "injectivity: " + std::to_string(inj.failures) +
                           " collisions, e.g. " + inj.counterexamples.front()};
    std::ostringstream os;
    os << "theta/sigma/psi commute with composition on " << mor.trials
       << " random pairs; (theta, sigma) separates all " << inj.trials
       << " trees of arity <= 5";
    return {true, os.str()};
}

// ---- criterion 10: byte-identical CLI reports ----

std::string capture(const std::string& cmd, int& status) {
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        status = -1;
        return out;
    }
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int rc = pclose(pipe);
    status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return out;
}

Outcome criterion10() {
    if (g_cli.empty()) return {false, "no CLI binary path on the command line"};
    std::string cmd = "'" + g_cli +
                      "' gb --preset pois --order poisson-qm --format json "
                      "--seed 7 2>/dev/null";
    int s1 = -1, s2 = -1;
    std::string r1 = capture(cmd, s1);
    std::string r2 = capture(cmd, s2);
    if (s1 != 0 || s2 != 0)
        return {false, "gb exited with " + std::to_string(s1) + " and " +
                           std::to_string(s2)};
    if (r1 != r2) return {false, "the two reports differ"};
    if (r1.empty()) return {false, "empty report"};
    return {true, "two runs produced byte-identical JSON reports (" +
                      std::to_string(r1.size()) + " bytes)"};
}

} // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli = argv[1];

    struct Entry {
        int id;
        double bound_s; // 0 means no pinned bound
        const char* label;
        Outcome (*run)();
    };
    std::vector<Entry> entries{
        {1, 10.0, "QM normal-form uniqueness under random schedules", criterion1},
        {2, 30.0, "translation invariance of the QM order", criterion2},
        {3, 30.0, "ordered-operad law for QM and free word operads", criterion3},
        {4, 0.0, "path sequence and planar permutation of the example tree", criterion4},
        {5, 0.0, "Leibniz relations lead with their left-hand sides", criterion5},
        {6, 60.0, "quadratic Groebner basis for the Poisson relations", criterion6},
        {7, 300.0, "Poisson dimensions n! by count and by oracle", criterion7},
        {8, 0.0, "Com and Lie bases and dimensions under two orders", criterion8},
        {9, 0.0, "word-operad morphism laws and injectivity", criterion9},
        {10, 0.0, "byte-identical gb reports across runs", criterion10},
    };

    bool all = true;
    std::cout << std::fixed << std::setprecision(1);
    for (const auto& e : entries) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = e.run();
        } catch (const std::exception& ex) {
            out = {false, std::string("exception: ") + ex.what()};
        }
        double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
        if (e.bound_s > 0 && secs >= e.bound_s) {
            out.pass = false;
            out.detail += " [exceeded " + std::to_string(static_cast<int>(e.bound_s)) +
                          "s budget]";
        }
        all = all && out.pass;
        std::cout << "C" << e.id << " " << (out.pass ? "PASS" : "FAIL") << " ("
                  << secs << "s): " << e.label << ": " << out.detail << "\n";
    }
    std::cout << (all ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << "\n";
    return all ? 0 : 1;
}
