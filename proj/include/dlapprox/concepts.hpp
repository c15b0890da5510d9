#ifndef DLAPPROX_CONCEPTS_HPP
#define DLAPPROX_CONCEPTS_HPP

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace dla {

enum class Kind : std::uint8_t { Top, Bot, Name, Not, Exists, Forall, And, Or };

// Language fragments, ordered so that leq() matches the inclusion lattice.
enum class Fragment : std::uint8_t { EL, ELbot, ELU, ELUbot, ALC };

bool fragmentLeq(Fragment a, Fragment b);
Fragment fragmentJoin(Fragment a, Fragment b);
const char* fragmentName(Fragment f);

class Concept;
using ConceptPtr = std::shared_ptr<const Concept>;

// Immutable concept term in canonical form: And/Or children are flattened,
// deduplicated and sorted; unit simplifications (double negation, absorbing
// Top/Bot) are applied by the builders. Structural equality is total-order
// compare() == 0; a precomputed hash backs the unordered containers.
class Concept {
public:
    Kind kind;
    std::string name;               // Name: concept name; Exists/Forall: role name
    std::vector<ConceptPtr> kids;   // Not/Exists/Forall: 1; And/Or: >= 2

    int depth() const { return depth_; }
    std::uint64_t hash() const { return hash_; }

    static ConceptPtr top();
    static ConceptPtr bot();
    static ConceptPtr named(const std::string& n);
    static ConceptPtr negation(ConceptPtr c);
    static ConceptPtr exists(const std::string& role, ConceptPtr arg);
    static ConceptPtr forall(const std::string& role, ConceptPtr arg);
    static ConceptPtr conj(std::vector<ConceptPtr> kids);
    static ConceptPtr disj(std::vector<ConceptPtr> kids);

    Concept(Kind k, std::string n, std::vector<ConceptPtr> c);

private:
    int depth_ = 0;
    std::uint64_t hash_ = 0;
};

// Total canonical order: constructor tag, then name, then children.
int compare(const ConceptPtr& a, const ConceptPtr& b);

struct ConceptLess {
    bool operator()(const ConceptPtr& a, const ConceptPtr& b) const {
        return compare(a, b) < 0;
    }
};
struct ConceptEq {
    bool operator()(const ConceptPtr& a, const ConceptPtr& b) const {
        return compare(a, b) == 0;
    }
};
struct ConceptHash {
    std::size_t operator()(const ConceptPtr& c) const {
        return static_cast<std::size_t>(c->hash());
    }
};

using ConceptSet = std::set<ConceptPtr, ConceptLess>;

// Symbol counting: every concept/role name occurrence is 1; Top, Bot and each
// quantifier or connective occurrence count 1 (an n-ary And/Or counts n-1,
// as written with binary operators); parentheses count 0.
long long conceptSize(const ConceptPtr& c);

int conceptDepth(const ConceptPtr& c);

Fragment conceptFragment(const ConceptPtr& c);

void collectSubconcepts(const ConceptPtr& c, ConceptSet& out);

struct Signature {
    std::set<std::string> conceptNames;
    std::set<std::string> roleNames;
    void merge(const Signature& o);
};

Signature conceptSignature(const ConceptPtr& c);

// Canonical rendering in the toolkit's textual grammar (bit-stable).
std::string render(const ConceptPtr& c);

// True if d occurs in c (canonical subterm test).
bool containsSubconcept(const ConceptPtr& c, const ConceptPtr& d);

// Replace every occurrence of `from` in `c` by `to`.
ConceptPtr replaceSubconcept(const ConceptPtr& c, const ConceptPtr& from, const ConceptPtr& to);

// Structural EL(bot) subsumption under the empty ontology: returns true iff
// {} |= c [= d. Only valid for EL/ELbot concepts; used for reduced-form
// pruning and up-to-equivalence deduplication.
bool structuralSubsumes(const ConceptPtr& c, const ConceptPtr& d);

} // namespace dla

#endif
