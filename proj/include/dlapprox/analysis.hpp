#ifndef DLAPPROX_ANALYSIS_HPP
#define DLAPPROX_ANALYSIS_HPP

#include <optional>
#include <string>
#include <vector>

#include "dlapprox/ontology.hpp"
#include "dlapprox/reasoner.hpp"

namespace dla {

struct CycleWitness {
    ConceptPtr startExistential;       // the RHS exists r.D the chain starts from
    std::vector<std::string> prefix;   // roles leading into the cycle
    std::vector<std::string> cycle;    // roles along the cycle (nonempty)
};

struct GeneratingVerdict {
    bool finite = true;
    int bound = 0;                      // max generatable depth when finite
    std::optional<CycleWitness> cycle;  // present when infinite
};

struct AnalysisCaps {
    std::size_t maxNodes = 4096;        // type-set nodes materialized
    std::size_t maxChoiceSets = 1024;   // successor sets per (node, role)
    ReasonerCaps reasonerCaps;
};

// Decides whether o (ELU) is finitely generating: saturates the graph of
// type sets X reachable from each right-hand-side existential via
// "every X-point is forced to have an r-successor, all of which land in X'".
// A reachable cycle pumps arbitrarily deep generatable concepts; otherwise
// the longest path bounds the generatable depth exactly.
GeneratingVerdict finitelyGenerating(const Ontology& o, const AnalysisCaps& caps = {});

// Projection of finitelyGenerating: generatable depth bound, or nullopt for
// infinity.
std::optional<int> generatableDepthBound(const Ontology& o, const AnalysisCaps& caps = {});

// Deterministic JSON report: fragment, acyclicity, counts, verdict, census.
std::string analyzeReportJson(const Ontology& o, const AnalysisCaps& caps = {});

// Role word realizing a chain of length n from the witness (for tests):
// o |= D [= exists w1. ... exists wn. Top.
std::vector<std::string> witnessWord(const CycleWitness& w, int n);

} // namespace dla

#endif
