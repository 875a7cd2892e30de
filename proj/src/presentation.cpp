#include "opgb/presentation.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace opgb {

namespace {

std::string print_raw(const Tree& t) {
    if (t.is_leaf()) return "a" + std::to_string(t.label());
    std::string out = t.gen().name + "(";
    for (std::size_t i = 0; i < t.children().size(); ++i) {
        if (i > 0) out += ", ";
        out += print_raw(t.children()[i]);
    }
    return out + ")";
}

} // namespace

std::string to_string(const SymmetricRelation& rel) {
    if (rel.terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& term : rel.terms) {
        Rational mag = term.coeff < 0 ? Rational(-term.coeff) : term.coeff;
        if (first) {
            if (term.coeff < 0) out += "-";
            first = false;
        } else {
            out += term.coeff < 0 ? " - " : " + ";
        }
        if (mag != 1) out += to_string(mag) + "*";
        out += print_raw(term.planar);
    }
    return out;
}

namespace {

Tree relabel_leaves(const Tree& t, const std::array<int, 3>& tau) {
    if (t.is_leaf()) return Tree::leaf(tau[static_cast<std::size_t>(t.label()) - 1]);
    std::vector<Tree> children;
    children.reserve(t.children().size());
    for (const Tree& c : t.children()) children.push_back(relabel_leaves(c, tau));
    return Tree::raw_node(t.gen(), std::move(children));
}

// Sorts every vertex's children into min-leaf order; a swap costs a sign at
// a skew vertex and nothing at a symmetric one.
std::pair<Tree, int> normalize_planar(const Tree& t) {
    if (t.is_leaf()) return {t, 1};
    if (t.gen().arity != 2)
        throw UnsupportedArity("symmetric expansion handles binary generators; '" +
                               t.gen().name + "' has arity " +
                               std::to_string(t.gen().arity));
    if (t.gen().symmetry == Symmetry::none)
        throw UnknownSymmetry("generator '" + t.gen().name +
                              "' declares no symmetry");
    auto [left, sign_l] = normalize_planar(t.children()[0]);
    auto [right, sign_r] = normalize_planar(t.children()[1]);
    int sign = sign_l * sign_r;
    if (left.min_leaf() > right.min_leaf()) {
        std::swap(left, right);
        if (t.gen().symmetry == Symmetry::skew) sign = -sign;
    }
    return {Tree::raw_node(t.gen(), {std::move(left), std::move(right)}), sign};
}

void check_placeholders(const Tree& t) {
    if (t.arity() != 3)
        throw InvalidTree("symmetric relation terms need placeholders a1, a2, a3");
    std::vector<int> labels = leaf_labels_planar(t);
    std::sort(labels.begin(), labels.end());
    if (labels != std::vector<int>{1, 2, 3})
        throw InvalidTree("symmetric relation terms need each of a1, a2, a3 once");
}

// Keeps rows forming an independent set; lead monomial is the structurally
// smallest tree.
struct RankFilter {
    std::map<Tree, TreePolynomial, TreeLess> pivots;

    bool try_insert(TreePolynomial p) {
        while (!p.is_zero()) {
            auto lead = p.terms().begin();
            auto it = pivots.find(lead->first);
            if (it == pivots.end()) {
                TreePolynomial stored = p;
                stored *= Rational(1) / lead->second;
                pivots.emplace(lead->first, std::move(stored));
                return true;
            }
            p -= it->second * lead->second;
        }
        return false;
    }
};

constexpr std::array<std::array<int, 3>, 6> kRelabelings = {{
    {1, 2, 3},
    {2, 1, 3},
    {3, 2, 1},
    {1, 3, 2},
    {2, 3, 1},
    {3, 1, 2},
}};

std::string tau_text(const std::array<int, 3>& tau) {
    return "tau=(" + std::to_string(tau[0]) + "," + std::to_string(tau[1]) +
           "," + std::to_string(tau[2]) + ")";
}

} // namespace

std::vector<TreePolynomial> expand_symmetric(const SymmetricRelation& rel,
                                             ExpansionRecord* record) {
    for (const auto& term : rel.terms) check_placeholders(term.planar);
    if (record) record->source = to_string(rel);

    std::vector<TreePolynomial> kept;
    RankFilter filter;
    for (const auto& tau : kRelabelings) {
        TreePolynomial poly;
        for (const auto& term : rel.terms) {
            auto [tree, sign] = normalize_planar(relabel_leaves(term.planar, tau));
            poly.add_term(tree, term.coeff * sign);
        }
        if (poly.is_zero()) {
            if (record)
                record->discarded.push_back(tau_text(tau) + ": cancels to 0");
            continue;
        }
        if (filter.try_insert(poly)) {
            if (record)
                record->kept.push_back(tau_text(tau) + ": " + to_string(poly));
            kept.push_back(std::move(poly));
        } else if (record) {
            record->discarded.push_back(tau_text(tau) + ": dependent: " +
                                        to_string(poly));
        }
    }
    return kept;
}

namespace {

SymmetricRelation jacobi_relation(const Generator& lam) {
    auto L = [&](Tree a, Tree b) {
        return Tree::raw_node(lam, {std::move(a), std::move(b)});
    };
    Tree a1 = Tree::leaf(1), a2 = Tree::leaf(2), a3 = Tree::leaf(3);
    SymmetricRelation rel;
    rel.terms.push_back({Rational(1), L(a1, L(a2, a3))});
    rel.terms.push_back({Rational(-1), L(L(a1, a2), a3)});
    rel.terms.push_back({Rational(1), L(L(a1, a3), a2)});
    return rel;
}

SymmetricRelation assoc_relation(const Generator& mu) {
    auto M = [&](Tree a, Tree b) {
        return Tree::raw_node(mu, {std::move(a), std::move(b)});
    };
    Tree a1 = Tree::leaf(1), a2 = Tree::leaf(2), a3 = Tree::leaf(3);
    SymmetricRelation rel;
    rel.terms.push_back({Rational(1), M(M(a1, a2), a3)});
    rel.terms.push_back({Rational(-1), M(a1, M(a2, a3))});
    return rel;
}

SymmetricRelation leibniz_relation(const Generator& mu, const Generator& lam) {
    auto M = [&](Tree a, Tree b) {
        return Tree::raw_node(mu, {std::move(a), std::move(b)});
    };
    auto L = [&](Tree a, Tree b) {
        return Tree::raw_node(lam, {std::move(a), std::move(b)});
    };
    Tree a1 = Tree::leaf(1), a2 = Tree::leaf(2), a3 = Tree::leaf(3);
    SymmetricRelation rel;
    rel.terms.push_back({Rational(1), L(a1, M(a2, a3))});
    rel.terms.push_back({Rational(-1), M(L(a1, a2), a3)});
    rel.terms.push_back({Rational(-1), M(L(a1, a3), a2)});
    return rel;
}

void expand_into(Presentation& pres, const SymmetricRelation& rel) {
    ExpansionRecord record;
    for (TreePolynomial& p : expand_symmetric(rel, &record))
        pres.relations.push_back(std::move(p));
    pres.provenance.push_back(std::move(record));
}

} // namespace

Presentation builtin(const std::string& name) {
    Presentation pres;
    pres.name = name;
    if (name == "com") {
        Generator mu{"mu", 2, Symmetry::symmetric};
        pres.generators.add(mu);
        expand_into(pres, assoc_relation(mu));
        return pres;
    }
    if (name == "lie") {
        Generator lam{"lam", 2, Symmetry::skew};
        pres.generators.add(lam);
        expand_into(pres, jacobi_relation(lam));
        return pres;
    }
    if (name == "pois") {
        Generator mu{"mu", 2, Symmetry::symmetric};
        Generator lam{"lam", 2, Symmetry::skew};
        pres.generators.add(mu);
        pres.generators.add(lam);
        expand_into(pres, assoc_relation(mu));
        expand_into(pres, jacobi_relation(lam));
        expand_into(pres, leibniz_relation(mu, lam));
        return pres;
    }
    if (name == "ass") {
        pres.generators.add({"m", 2, Symmetry::none});
        pres.generators.add({"mo", 2, Symmetry::none});
        const char* relations[] = {
            "m(m(1,2),3) - m(1,m(2,3))",     "m(mo(1,2),3) - mo(m(1,3),2)",
            "mo(1,mo(2,3)) - mo(mo(1,2),3)", "m(m(1,3),2) - m(1,mo(2,3))",
            "mo(1,m(2,3)) - mo(mo(1,3),2)",  "m(mo(1,3),2) - mo(m(1,2),3)",
        };
        for (const char* text : relations)
            pres.relations.push_back(parse_polynomial(text, pres.generators));
        return pres;
    }
    throw UnknownName("builtin presentation '" + name + "'");
}

namespace {

struct RawTermParser {
    const std::string& text;
    const GeneratorSet& gens;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() &&
               std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                text[pos] == '_'))
            ++pos;
        if (start == pos)
            throw ParseError("expected a name at offset " + std::to_string(pos) +
                             " in '" + text + "'");
        return text.substr(start, pos - start);
    }

    void expect(char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw ParseError(std::string("expected '") + c + "' at offset " +
                             std::to_string(pos) + " in '" + text + "'");
        ++pos;
    }

    Tree tree() {
        std::string head = ident();
        if (head.size() >= 2 && head[0] == 'a' &&
            head.find_first_not_of("0123456789", 1) == std::string::npos &&
            !gens.find(head)) {
            return Tree::leaf(std::stoi(head.substr(1)));
        }
        const Generator& g = gens.at(head);
        expect('(');
        std::vector<Tree> children;
        children.push_back(tree());
        while (true) {
            skip_ws();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                children.push_back(tree());
            } else {
                break;
            }
        }
        expect(')');
        if (static_cast<int>(children.size()) != g.arity)
            throw ParseError("'" + head + "' takes " + std::to_string(g.arity) +
                             " arguments, got " + std::to_string(children.size()));
        return Tree::raw_node(g, std::move(children));
    }
};

} // namespace

SymmetricRelation parse_symmetric_relation(const std::string& text,
                                           const GeneratorSet& gens) {
    SymmetricRelation rel;
    RawTermParser parser{text, gens};
    bool first = true;
    while (true) {
        parser.skip_ws();
        if (parser.pos == text.size()) break;
        int sign = 1;
        if (text[parser.pos] == '+' || text[parser.pos] == '-') {
            sign = text[parser.pos] == '-' ? -1 : 1;
            ++parser.pos;
        } else if (!first) {
            throw ParseError("expected '+' or '-' at offset " +
                             std::to_string(parser.pos) + " in '" + text + "'");
        }
        parser.skip_ws();
        Rational coeff = 1;
        if (parser.pos < text.size() &&
            std::isdigit(static_cast<unsigned char>(text[parser.pos]))) {
            std::size_t start = parser.pos;
            while (parser.pos < text.size() &&
                   (std::isdigit(static_cast<unsigned char>(text[parser.pos])) ||
                    text[parser.pos] == '/'))
                ++parser.pos;
            coeff = parse_rational(text.substr(start, parser.pos - start));
            parser.expect('*');
        }
        rel.terms.push_back({Rational(sign) * coeff, parser.tree()});
        first = false;
    }
    if (rel.terms.empty()) throw ParseError("empty symmetric relation");
    return rel;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

} // namespace

Presentation parse_presentation(const std::string& text, std::string name) {
    Presentation pres;
    pres.name = std::move(name);
    enum class Section { none, generators, relations };
    Section section = Section::none;

    std::istringstream in(text);
    std::string raw_line;
    int line_no = 0;
    while (std::getline(in, raw_line)) {
        ++line_no;
        std::string line = raw_line;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line == "generators:") {
            section = Section::generators;
            continue;
        }
        if (line == "relations:") {
            section = Section::relations;
            continue;
        }
        if (section == Section::none)
            throw ParseError("line " + std::to_string(line_no) +
                             ": expected 'generators:' or 'relations:'");

        if (section == Section::generators) {
            std::istringstream fields(line);
            std::string gname, symmetry;
            int arity = 0;
            if (!(fields >> gname >> arity))
                throw ParseError("line " + std::to_string(line_no) +
                                 ": expected 'name arity [symmetry]'");
            Generator g{gname, arity, Symmetry::none};
            if (fields >> symmetry) g.symmetry = parse_symmetry(symmetry);
            std::string extra;
            if (fields >> extra)
                throw ParseError("line " + std::to_string(line_no) +
                                 ": unexpected '" + extra + "'");
            pres.generators.add(g);
            continue;
        }

        const std::string prefix = "symmetric:";
        if (line.compare(0, prefix.size(), prefix) == 0) {
            SymmetricRelation rel = parse_symmetric_relation(
                line.substr(prefix.size()), pres.generators);
            expand_into(pres, rel);
        } else {
            TreePolynomial p = parse_polynomial(line, pres.generators);
            if (p.is_zero())
                throw ParseError("line " + std::to_string(line_no) +
                                 ": relation is zero");
            pres.relations.push_back(std::move(p));
        }
    }
    return pres;
}

Presentation load_presentation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_presentation(buf.str(),
                              std::filesystem::path(path).stem().string());
}

} // namespace opgb
