#ifndef DLAPPROX_REGISTRY_HPP
#define DLAPPROX_REGISTRY_HPP

#include <map>
#include <mutex>
#include <set>
#include <string>

#include "dlapprox/concepts.hpp"

namespace dla {

// Deterministic minting of fresh concept names, keyed by the canonical
// rendering of the named concept. The name embeds a stable 64-bit hash of
// the key so that independent runs (and parallel builds) agree. Namespaces:
//   X  - named disjunction X_D
//   Y  - CNF clause name Y_D'
//   N  - negation name A_notC from the ALC reduction
// Minted names never collide with the reserved signature.
class FreshNameRegistry {
public:
    FreshNameRegistry() = default;

    void reserve(const std::set<std::string>& names);

    // Get-or-insert; definition is the concept the name abbreviates
    // (the disjunction for X/Y, the negated concept for N).
    std::string mint(char ns, const ConceptPtr& definition);

    bool isRegistered(const std::string& name) const;
    // Definition lookup; null when the name is not registered.
    ConceptPtr definitionOf(const std::string& name) const;
    std::string nameFor(char ns, const ConceptPtr& definition) const;

    // Deterministic dump: name -> canonical definition text.
    std::map<std::string, std::string> table() const;

    std::size_t size() const;
    std::size_t countNamespace(char ns) const;

private:
    mutable std::mutex mu_;
    std::set<std::string> reserved_;
    std::map<std::string, std::string> byKey_;   // ns+key -> name
    std::map<std::string, ConceptPtr> byName_;   // name -> definition
};

} // namespace dla

#endif
