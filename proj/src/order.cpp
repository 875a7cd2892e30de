#include "opgb/order.hpp"

#include <algorithm>
#include <cctype>

namespace opgb {

MonomialOrder::MonomialOrder(
    std::string name, std::vector<std::shared_ptr<const OrderStage>> stages)
    : name_(std::move(name)), stages_(std::move(stages)) {
    if (stages_.empty()) throw Error("a monomial order needs at least one stage");
}

Cmp MonomialOrder::compare(const Tree& a, const Tree& b) const {
    if (a.arity() != b.arity())
        throw ArityMismatch("comparing trees of arities " +
                            std::to_string(a.arity()) + " and " +
                            std::to_string(b.arity()));
    for (const auto& stage : stages_) {
        Cmp c = stage->compare(a, b);
        if (c == Cmp::less || c == Cmp::greater) return c;
    }
    return Cmp::equal;
}

bool MonomialOrder::less(const Tree& a, const Tree& b) const {
    return compare(a, b) == Cmp::less;
}

std::vector<MonomialOrder::TraceLine> MonomialOrder::trace(const Tree& a,
                                                           const Tree& b) const {
    std::vector<TraceLine> out;
    for (const auto& stage : stages_) {
        TraceLine line{stage->name(), stage->image(a), stage->image(b),
                       stage->compare(a, b)};
        bool decided = line.result == Cmp::less || line.result == Cmp::greater;
        out.push_back(std::move(line));
        if (decided) break;
    }
    return out;
}

namespace {

class QMWordStage final : public OrderStage {
public:
    explicit QMWordStage(Assignment<QMonoid> psi) : psi_(std::move(psi)) {}

    std::string name() const override { return "word(qm)"; }

    Cmp compare(const Tree& a, const Tree& b) const override {
        return lex_compare(m_, evaluate_tree(m_, a, psi_),
                           evaluate_tree(m_, b, psi_));
    }

    std::string image(const Tree& t) const override {
        return to_string(m_, evaluate_tree(m_, t, psi_));
    }

private:
    QMonoid m_;
    Assignment<QMonoid> psi_;
};

class PathLexStage final : public OrderStage {
public:
    explicit PathLexStage(FreeMonoid alphabet) : alphabet_(std::move(alphabet)) {}

    std::string name() const override { return "pathlex"; }

    Cmp compare(const Tree& a, const Tree& b) const override {
        return lex_compare(alphabet_, path_sequence(a, alphabet_),
                           path_sequence(b, alphabet_));
    }

    std::string image(const Tree& t) const override {
        return to_string(alphabet_, path_sequence(t, alphabet_));
    }

private:
    FreeMonoid alphabet_;
};

class PermutationStage final : public OrderStage {
public:
    std::string name() const override { return "perm"; }

    Cmp compare(const Tree& a, const Tree& b) const override {
        std::vector<int> pa = permutation_of(a);
        std::vector<int> pb = permutation_of(b);
        if (pa.size() != pb.size())
            throw ArityMismatch("permutation lengths differ");
        if (pa < pb) return Cmp::less;
        if (pb < pa) return Cmp::greater;
        return Cmp::equal;
    }

    std::string image(const Tree& t) const override {
        std::vector<int> p = permutation_of(t);
        std::string out = "(";
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i > 0) out += ", ";
            out += std::to_string(p[i]);
        }
        return out + ")";
    }
};

} // namespace

std::shared_ptr<const OrderStage> make_qm_word_stage(Assignment<QMonoid> psi) {
    return std::make_shared<QMWordStage>(std::move(psi));
}

std::shared_ptr<const OrderStage> make_pathlex_stage(const GeneratorSet& alphabet) {
    return std::make_shared<PathLexStage>(path_alphabet(alphabet));
}

std::shared_ptr<const OrderStage> make_permutation_stage() {
    return std::make_shared<PermutationStage>();
}

MonomialOrder build_poisson_order(const GeneratorSet& gens) {
    if (gens.empty())
        throw WrongSignature("poisson-qm needs at least one generator");
    Assignment<QMonoid> psi;
    for (const Generator& g : gens) {
        if (g.arity != 2)
            throw WrongSignature("poisson-qm needs binary generators; '" +
                                 g.name + "' has arity " +
                                 std::to_string(g.arity));
        if (g.name == "mu")
            psi.emplace("mu", std::vector<QMElement>{{1, 0, 0}, {1, 0, 0}});
        else if (g.name == "lam")
            psi.emplace("lam", std::vector<QMElement>{{0, 1, 0}, {0, 1, 0}});
        else
            throw WrongSignature("poisson-qm knows only generators mu and lam; got '" +
                                 g.name + "'");
    }
    // Path alphabet mu < lam regardless of declaration order.
    GeneratorSet alphabet;
    if (gens.find("mu")) alphabet.add(*gens.find("mu"));
    if (gens.find("lam")) alphabet.add(*gens.find("lam"));
    return MonomialOrder("poisson-qm",
                         {make_qm_word_stage(std::move(psi)),
                          make_pathlex_stage(alphabet), make_permutation_stage()});
}

MonomialOrder build_pathlex_order(const GeneratorSet& gens) {
    if (gens.empty())
        throw WrongSignature("pathlex needs at least one generator");
    return MonomialOrder("pathlex",
                         {make_pathlex_stage(gens), make_permutation_stage()});
}

namespace {

struct SpecParser {
    const std::string& text;
    const GeneratorSet& gens;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError("order spec: " + msg + " at offset " +
                         std::to_string(pos) + " in '" + text + "'");
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                text[pos] == '_' || text[pos] == '-'))
            ++pos;
        if (start == pos) fail("expected a name");
        return text.substr(start, pos - start);
    }

    std::shared_ptr<const OrderStage> stage() {
        std::string head = ident();
        if (head == "perm") return make_permutation_stage();
        if (head == "pathlex") {
            expect('(');
            GeneratorSet alphabet;
            alphabet.add(gens.at(ident()));
            while (eat('<')) alphabet.add(gens.at(ident()));
            expect(')');
            if (alphabet.size() != gens.size())
                throw WrongSignature(
                    "pathlex alphabet must list every generator exactly once");
            return make_pathlex_stage(alphabet);
        }
        if (head == "word") {
            expect('(');
            std::string monoid = ident();
            if (monoid != "qm")
                throw UnknownName("word stage supports only the qm monoid, got '" +
                                  monoid + "'");
            expect(';');
            QMonoid qm;
            Assignment<QMonoid> psi;
            do {
                std::string gname = ident();
                const Generator& g = gens.at(gname);
                if (psi.count(gname))
                    fail("duplicate binding for '" + gname + "'");
                expect('=');
                expect('(');
                std::vector<QMElement> tuple;
                do {
                    skip_ws();
                    std::size_t start = pos;
                    while (pos < text.size() &&
                           (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                            text[pos] == '^'))
                        ++pos;
                    if (start == pos) fail("expected a monoid element");
                    std::string word = text.substr(start, pos - start);
                    bool normal_form =
                        word == "1" || word.find_first_of("^0123456789") !=
                                           std::string::npos;
                    tuple.push_back(normal_form ? qm.parse(word)
                                                : qm.from_word(word));
                } while (eat(','));
                expect(')');
                if (static_cast<int>(tuple.size()) != g.arity)
                    throw LengthMismatch("binding for '" + gname + "' has " +
                                         std::to_string(tuple.size()) +
                                         " entries for arity " +
                                         std::to_string(g.arity));
                psi.emplace(gname, std::move(tuple));
            } while (eat(','));
            expect(')');
            for (const Generator& g : gens)
                if (!psi.count(g.name))
                    throw WrongSignature("word stage lacks a binding for '" +
                                         g.name + "'");
            return make_qm_word_stage(std::move(psi));
        }
        fail("unknown stage '" + head + "'");
    }

    MonomialOrder parse() {
        std::vector<std::shared_ptr<const OrderStage>> stages;
        stages.push_back(stage());
        while (eat('>')) stages.push_back(stage());
        skip_ws();
        if (pos != text.size()) fail("trailing input");
        return MonomialOrder(text, std::move(stages));
    }
};

} // namespace

MonomialOrder resolve_order(const std::string& text, const GeneratorSet& gens) {
    if (text == "poisson-qm") return build_poisson_order(gens);
    if (text == "pathlex") return build_pathlex_order(gens);
    if (text.find('(') != std::string::npos || text.find('>') != std::string::npos) {
        SpecParser p{text, gens};
        return p.parse();
    }
    throw UnknownName("order '" + text + "'");
}

} // namespace opgb
