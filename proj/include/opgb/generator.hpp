#ifndef OPGB_GENERATOR_HPP
#define OPGB_GENERATOR_HPP

#include <string>
#include <vector>

#include "opgb/errors.hpp"

namespace opgb {

// Symmetry tags how a binary generator transforms under swapping its two
// arguments when a symmetric-style relation is rewritten in shuffle form.
enum class Symmetry { none, symmetric, skew };

std::string to_string(Symmetry s);
Symmetry parse_symmetry(const std::string& text);

struct Generator {
    std::string name;
    int arity = 2;
    Symmetry symmetry = Symmetry::none;

    bool operator==(const Generator& o) const {
        return name == o.name && arity == o.arity;
    }
};

// Ordered list of generators; names are unique.  List order is meaningful:
// it fixes the alphabet order used by path-word comparisons.
class GeneratorSet {
public:
    GeneratorSet() = default;
    explicit GeneratorSet(std::vector<Generator> gens);

    void add(const Generator& g);
    const Generator* find(const std::string& name) const;
    const Generator& at(const std::string& name) const; // throws MissingGenerator
    int index_of(const std::string& name) const;        // -1 when absent

    std::size_t size() const { return gens_.size(); }
    bool empty() const { return gens_.empty(); }
    const std::vector<Generator>& list() const { return gens_; }
    auto begin() const { return gens_.begin(); }
    auto end() const { return gens_.end(); }

private:
    std::vector<Generator> gens_;
};

} // namespace opgb

#endif
