#ifndef DLAPPROX_NORMALIZE_HPP
#define DLAPPROX_NORMALIZE_HPP

#include <functional>
#include <optional>

#include "dlapprox/disjunction.hpp"
#include "dlapprox/ontology.hpp"
#include "dlapprox/registry.hpp"

namespace dla {

// Rewrites an ELU(bot) ontology so that every left-hand side is
// disjunction-free: each disjunction D occurring on a left-hand side is
// replaced by X_D and C [= X_D is added for each disjunct C. Conservative
// extension over the input signature.
Ontology eliminateLhsDisjunctions(const Ontology& o, FreshNameRegistry& reg);

// ALC -> ELUbot reduction: value restrictions become negated existentials,
// then innermost negation-free not-C subconcepts are named apart with
// Top [= C or A_notC and C and A_notC [= Bottom.
Ontology alcToEluBot(const Ontology& o, FreshNameRegistry& reg);

// Disjunctive normal form treating existential restrictions as atomic (their
// arguments are left untouched). dropBot removes disjuncts with a Bottom
// conjunct. nodeCap bounds the distribution blow-up.
ConceptPtr dnf(const ConceptPtr& c, bool dropBot = false, std::size_t nodeCap = 1u << 16);

// Replaces every outermost disjunction with >= 2 disjuncts by its X-name.
// When `allowedAtoms` is given, a replaced disjunction whose atoms are not
// all in the set is a contract violation (it lies outside Dis(O_S)).
ConceptPtr uparrow(const ConceptPtr& c, FreshNameRegistry& reg,
                   const ConceptSet* allowedAtoms = nullptr, bool dropBot = false);

ConceptPtr uparrow(const Disjunction& d, FreshNameRegistry& reg,
                   const ConceptSet* allowedAtoms = nullptr, bool dropBot = false);

// Replaces every registered fresh name by its definition.
ConceptPtr downarrow(const ConceptPtr& c, const FreshNameRegistry& reg);

// All decorations of an EL concept with disjunctions at leaves: every
// depth-0 argument E of an existential may become E and D, and a depth-0
// concept C may become C and D. "No decoration" is emitted as a choice at
// every leaf. Stops after `budget` results (returns true when truncated).
bool decorate(const ConceptPtr& c, const std::vector<Disjunction>& dis,
              std::size_t budget, const std::function<void(const ConceptPtr&)>& emit);

// CNF clause set K_D of a disjunction: atoms act as propositional variables,
// clauses are subset-minimal. Each clause is a flat disjunction over atoms.
std::vector<Disjunction> cnfClauses(const Disjunction& d, std::size_t cap = 1u << 16);

// Replaces every X_D name in the ontology by the conjunction of clause names
// Y_D' for D' in K_D.
Ontology cnfCompress(const Ontology& o, FreshNameRegistry& reg);

} // namespace dla

#endif
