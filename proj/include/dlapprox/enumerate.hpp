#ifndef DLAPPROX_ENUMERATE_HPP
#define DLAPPROX_ENUMERATE_HPP

#include <string>
#include <vector>

#include "dlapprox/concepts.hpp"

namespace dla {

struct UniverseCaps {
    int maxDepth = 2;
    long long maxSize = 9;
    std::size_t maxCount = 20000;
    int maxConjNames = 3;     // name conjuncts per node
    int maxConjExists = 2;    // existential conjuncts per node
    bool includeBot = false;
};

struct Universe {
    std::vector<ConceptPtr> concepts; // length-lex order of canonical rendering
    bool truncated = false;
};

// Reduced canonical EL(bot) concepts over the given signature: per node a
// set of concept names plus per role an antichain of existential children
// (no child subsumes a sibling under the empty ontology). Up to empty-
// ontology equivalence every EL concept has exactly one reduced form here.
// Enumeration order: (size, canonical text), so results are reproducible.
Universe enumerateConcepts(const std::vector<std::string>& names,
                           const std::vector<std::string>& roles,
                           const UniverseCaps& caps, bool throwOnCap = false);

} // namespace dla

#endif
