#ifndef DLAPPROX_DISJUNCTION_HPP
#define DLAPPROX_DISJUNCTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "dlapprox/concepts.hpp"

namespace dla {

// Canonical disjunction of conjunctions over atomic concepts (concept names
// and existential restrictions). Disjuncts are sorted atom vectors, the
// disjunct list is sorted and de-duplicated. The empty disjunction denotes
// Bottom; a conjunction is never empty ({Top} stands for the empty one).
class Disjunction {
public:
    Disjunction() = default;
    explicit Disjunction(std::vector<std::vector<ConceptPtr>> disjuncts);

    static Disjunction bottom() { return Disjunction(); }

    // Flattens a concept in DNF shape (Or of And of atoms); arguments of
    // existential restrictions are kept verbatim. dropBot removes disjuncts
    // with a Bottom conjunct (the ELUbot reading).
    static Disjunction fromConcept(const ConceptPtr& c, bool dropBot);

    const std::vector<std::vector<ConceptPtr>>& disjuncts() const { return disjuncts_; }
    bool isBottom() const { return disjuncts_.empty(); }
    std::size_t arity() const { return disjuncts_.size(); }
    bool inDisMinus() const { return disjuncts_.size() >= 2; }

    ConceptPtr asConcept() const;
    std::string key() const { return render(asConcept()); }

    // Atoms common to every disjunct (empty when bottom).
    std::vector<ConceptPtr> commonAtoms() const;
    // All atoms of all disjuncts.
    ConceptSet atoms() const;

    bool operator==(const Disjunction& o) const;
    bool operator<(const Disjunction& o) const;

    // Pointwise comparison: every disjunct of *this contains some disjunct of
    // o as a subset. Implies {} |= *this [= o.
    bool pointwiseStrongerThan(const Disjunction& o) const;

private:
    std::vector<std::vector<ConceptPtr>> disjuncts_;
};

} // namespace dla

#endif
