#ifndef DLAPPROX_OMQ_HPP
#define DLAPPROX_OMQ_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dlapprox/chase.hpp"
#include "dlapprox/ontology.hpp"

namespace dla {

// Plain ABox: concept-name and role assertions only.
struct ABox {
    std::set<std::pair<std::string, std::string>> conceptAsserts; // (A, a)
    std::set<std::tuple<std::string, std::string, std::string>> roleAsserts; // (r, a, b)

    std::set<std::string> individuals() const;
    Signature signature() const;
    std::string renderText() const;
};

ABox parsePlainABox(const std::string& text);

struct OMQ {
    Ontology ontology;
    Signature sigma;
    ConceptPtr query; // unary: AQ = concept name, ELQ = EL concept
};

// Exact certain answers. ELbot ontologies use completion over the ABox
// individuals; other fragments use type assignments over the ABox graph
// extended with anonymous witnesses. Inconsistent (O, A) yields all
// individuals.
std::set<std::string> certainAnswers(const OMQ& q, const ABox& a,
                                     ReasonerCaps caps = {});

// Tree unfolding of the ABox at `ind` to the given depth; individuals are
// words a0.r1.a1....
ABox unfold(const ABox& a, const std::string& ind, int depthCap);

struct OmqBudgets {
    int aboxSize = 3;         // max assertions per enumerated ABox
    int individuals = 2;      // max individuals per enumerated ABox
    int queryDepth = 2;
    long long querySize = 7;
    std::size_t maxQueries = 64;
    std::size_t maxAboxes = 20000;
    ReasonerCaps reasonerCaps;
};

struct ApproxQueryReport {
    bool violationFound = false;
    std::string condition;        // "1" or "2"
    std::string abox;             // counterexample rendering
    std::string query;
    std::string individual;
    std::size_t aboxesChecked = 0;
    std::size_t pairsChecked = 0;
    std::vector<std::string> notes;
};

// Definition-3 style check of o_t against o_s w.r.t. AQ or ELQ over the
// given ABox signature. Condition 1 (soundness) is tested exhaustively
// within budgets; Condition 2 against the supplied competitor ontologies.
ApproxQueryReport checkQueryApproximation(const Ontology& oS, const Ontology& oT,
                                          bool elq, const Signature& sigma,
                                          const std::vector<Ontology>& competitors,
                                          const OmqBudgets& budgets = {});

struct RewritabilityVerdict {
    bool counterexample = false;  // conclusive: not (ELbot, AQ)-rewritable
    std::string abox;
    std::string individual;
    std::size_t aboxesChecked = 0;
    std::string minusOntology;    // the constructed O_T^- (rendered)
};

// Bounded (ELbot, AQ)-rewritability probe via the finite core O_T^-.
RewritabilityVerdict aqRewritabilityProbe(const Ontology& o, const Signature& sigma,
                                          const std::string& queryName,
                                          const OmqBudgets& budgets = {});

// Enumerate sigma-ABoxes within budgets (canonical order).
std::vector<ABox> enumerateSigmaABoxes(const Signature& sigma, const OmqBudgets& budgets);

} // namespace dla

#endif
