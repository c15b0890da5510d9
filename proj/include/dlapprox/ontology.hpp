#ifndef DLAPPROX_ONTOLOGY_HPP
#define DLAPPROX_ONTOLOGY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dlapprox/concepts.hpp"

namespace dla {

enum class AxiomKind : std::uint8_t { Inclusion, Equivalence };

struct Axiom {
    AxiomKind kind = AxiomKind::Inclusion;
    ConceptPtr lhs;
    ConceptPtr rhs;
};

bool operator==(const Axiom& a, const Axiom& b);

class Ontology {
public:
    Ontology() = default;
    explicit Ontology(std::vector<Axiom> axioms);

    const std::vector<Axiom>& axioms() const { return axioms_; }
    Fragment fragment() const { return fragment_; }
    bool empty() const { return axioms_.empty(); }

    void add(Axiom ax);

    // Equivalences expanded into two inclusions; this is the reasoning view.
    std::vector<Axiom> inclusions() const;

    Signature signature() const;
    long long size() const;

    bool operator==(const Ontology& o) const;

private:
    std::vector<Axiom> axioms_;
    Fragment fragment_ = Fragment::EL;
};

// All subconcepts of concepts in o, canonical.
ConceptSet subconcepts(const Ontology& o);

// Restriction of subconcepts(o) to concept names and existential
// restrictions; Top is always injected.
ConceptSet subMinus(const Ontology& o);

// Existential restrictions occurring on the right-hand side of an inclusion
// (equivalences contribute both sides).
ConceptSet rhsExistentials(const Ontology& o);

struct AcyclicityResult {
    bool acyclic = false;
    // On failure either a violated shape constraint...
    std::string shapeViolation;
    // ...or a definitorial cycle A_0, ..., A_n (A_0 repeated at the end).
    std::vector<std::string> cycle;
};

AcyclicityResult isAcyclic(const Ontology& o);

// Canonical multi-line rendering, one axiom per line.
std::string render(const Ontology& o);

} // namespace dla

#endif
