#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dlapprox/concepts.hpp"
#include "dlapprox/ontology.hpp"
#include "dlapprox/parse.hpp"

#include <random>

using namespace dla;

namespace {

ConceptPtr C(const std::string& s) { return parseConcept(s); }

// Deterministic random EL(U) concept generator for round-trip properties.
struct Rng {
    std::mt19937 g;
    explicit Rng(unsigned seed) : g(seed) {}
    int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(g); }
};

ConceptPtr randomConcept(Rng& r, int depth, bool allowOr, bool allowBot) {
    static const std::vector<std::string> names{"A", "B", "C", "D"};
    static const std::vector<std::string> roles{"r", "s"};
    if (depth <= 0) {
        if (allowBot && r.pick(8) == 0) return Concept::bot();
        if (r.pick(4) == 0) {
            std::vector<ConceptPtr> kids{Concept::named(names[r.pick(names.size())]),
                                         Concept::named(names[r.pick(names.size())])};
            return allowOr && r.pick(2) ? Concept::disj(std::move(kids))
                                        : Concept::conj(std::move(kids));
        }
        return Concept::named(names[r.pick(names.size())]);
    }
    switch (r.pick(allowOr ? 5 : 4)) {
        case 0:
            if (allowBot && r.pick(6) == 0) return Concept::bot();
            return Concept::named(names[r.pick(names.size())]);
        case 1: {
            std::vector<ConceptPtr> kids;
            int n = 2 + r.pick(2);
            for (int i = 0; i < n; ++i)
                kids.push_back(randomConcept(r, depth - 1, allowOr, allowBot));
            return Concept::conj(std::move(kids));
        }
        case 2: {
            if (!allowOr)
                return Concept::exists(roles[r.pick(roles.size())],
                                       randomConcept(r, depth - 1, allowOr, allowBot));
            std::vector<ConceptPtr> kids;
            int n = 2 + r.pick(2);
            for (int i = 0; i < n; ++i)
                kids.push_back(randomConcept(r, depth - 1, allowOr, allowBot));
            return Concept::disj(std::move(kids));
        }
        default:
            return Concept::exists(roles[r.pick(roles.size())],
                                   randomConcept(r, depth - 1, allowOr, allowBot));
    }
}

} // namespace

TEST_CASE("parse: the running job example is ELU") {
    Ontology o = parseOntology("Job SubClassOf MainJob or SideJob");
    REQUIRE(o.axioms().size() == 1);
    CHECK(o.fragment() == Fragment::ELU);
    CHECK(render(o.axioms()[0].rhs) == "MainJob or SideJob");
}

TEST_CASE("parse: empty document yields the empty EL ontology") {
    Ontology o = parseOntology("");
    CHECK(o.empty());
    CHECK(o.fragment() == Fragment::EL);
    CHECK(o.size() == 0);
}

TEST_CASE("parse: unclosed parenthesis is a syntax error with position") {
    CHECK_THROWS_AS(parseOntology("A SubClassOf (B and"), ParseError);
    try {
        parseOntology("A SubClassOf (B and");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.column > 0);
    }
}

TEST_CASE("parse: role/concept name collision is rejected") {
    CHECK_THROWS_AS(parseOntology("A SubClassOf r some B\nr SubClassOf A"), ParseError);
}

TEST_CASE("parse: EquivalentTo requires a name on the left") {
    CHECK_THROWS_AS(parseOntology("A and B EquivalentTo C"), ParseError);
    Ontology o = parseOntology("A EquivalentTo B1 and B2");
    CHECK(o.axioms()[0].kind == AxiomKind::Equivalence);
    CHECK(o.inclusions().size() == 2);
}

TEST_CASE("depth follows the restriction nesting") {
    CHECK(conceptDepth(C("r some B and r some s some A")) == 2);
    CHECK(conceptDepth(C("A and B")) == 0);
    CHECK(conceptDepth(C("r only s some Top")) == 2);
}

TEST_CASE("size convention is fixed and stable") {
    CHECK(conceptSize(C("A")) == 1);
    // one quantifier + one role + (A, and, B)
    CHECK(conceptSize(C("r some (A and B)")) == 5);
    CHECK(parseOntology("").size() == 0);
    CHECK(parseOntology("A SubClassOf B").size() == 3);
}

TEST_CASE("sub^- of the first proposition ontology") {
    Ontology o = parseOntology(
        "A SubClassOf B1 or B2\n"
        "r some B1 SubClassOf B1\n"
        "r some B2 SubClassOf B2\n"
        "B1 and A' SubClassOf M\n"
        "B2 and A' SubClassOf M\n");
    auto sm = subMinus(o);
    for (auto& t : {"A", "B1", "B2", "A'", "M", "r some B1", "r some B2", "Top"})
        CHECK_MESSAGE(sm.count(C(t)) == 1, t);
}

TEST_CASE("sub^- of the empty ontology is {Top}") {
    auto sm = subMinus(parseOntology(""));
    REQUIRE(sm.size() == 1);
    CHECK((*sm.begin())->kind == Kind::Top);
}

TEST_CASE("sub^- keeps compound existentials from the job example") {
    Ontology o = parseOntology(
        "Job SubClassOf MainJob or SideJob\n"
        "job some SideJob SubClassOf job some (MainJob and PartTime)\n");
    CHECK(subMinus(o).count(C("job some (MainJob and PartTime)")) == 1);
}

TEST_CASE("acyclicity: definition sets and cycles") {
    Ontology ac = parseOntology("A EquivalentTo (B1 and B2) or (B1 and B3)");
    CHECK(isAcyclic(ac).acyclic);

    Ontology cyc = parseOntology("L SubClassOf s some L");
    auto res = isAcyclic(cyc);
    CHECK_FALSE(res.acyclic);
    REQUIRE(res.cycle.size() >= 2);
    CHECK(res.cycle.front() == "L");
    CHECK(res.cycle.back() == "L");

    CHECK(isAcyclic(parseOntology("")).acyclic);

    auto shape = isAcyclic(parseOntology("A and B SubClassOf C"));
    CHECK_FALSE(shape.acyclic);
    CHECK_FALSE(shape.shapeViolation.empty());
}

TEST_CASE("round trip: parse(render(o)) preserves the canonical axiom set") {
    Rng r(7);
    for (int i = 0; i < 200; ++i) {
        Ontology o;
        int n = 1 + r.pick(4);
        for (int k = 0; k < n; ++k)
            o.add({AxiomKind::Inclusion, randomConcept(r, 2, true, false),
                   randomConcept(r, 2, true, false)});
        Ontology back = parseOntology(render(o));
        CHECK(back == o);
    }
}

TEST_CASE("canonicalization is idempotent and order-insensitive") {
    auto a = Concept::conj({C("B"), C("A"), C("B")});
    auto b = Concept::conj({C("A"), C("B")});
    CHECK(compare(a, b) == 0);
    CHECK(render(a) == "A and B");
    // flattening
    auto nested = Concept::conj({C("A"), Concept::conj({C("B"), C("C")})});
    CHECK(render(nested) == "A and B and C");
    // unit simplifications
    CHECK(render(Concept::conj({C("A"), Concept::top()})) == "A");
    CHECK(Concept::conj({C("A"), Concept::bot()})->kind == Kind::Bot);
    CHECK(Concept::disj({C("A"), Concept::top()})->kind == Kind::Top);
    CHECK(render(Concept::disj({C("A"), Concept::bot()})) == "A");
    CHECK(Concept::exists("r", Concept::bot())->kind == Kind::Bot);
    CHECK(Concept::negation(Concept::negation(C("A")))->kind == Kind::Name);
}

TEST_CASE("fragment lattice agrees with a constructor scan") {
    CHECK(conceptFragment(C("A and r some B")) == Fragment::EL);
    CHECK(conceptFragment(C("A or B")) == Fragment::ELU);
    CHECK(conceptFragment(C("Bottom")) == Fragment::ELbot);
    // canonicalization drops the Bottom disjunct entirely
    CHECK(conceptFragment(C("A or (B and Bottom)")) == Fragment::EL);
    CHECK(render(C("A or (B and Bottom)")) == "A");
    CHECK(conceptFragment(C("not A")) == Fragment::ALC);
    CHECK(conceptFragment(C("r only A")) == Fragment::ALC);
    // every EL concept classifies into the larger fragments
    for (auto f : {Fragment::ELbot, Fragment::ELU, Fragment::ELUbot, Fragment::ALC})
        CHECK(fragmentLeq(Fragment::EL, f));
    CHECK_FALSE(fragmentLeq(Fragment::ELU, Fragment::ELbot));
    CHECK(fragmentJoin(Fragment::ELbot, Fragment::ELU) == Fragment::ELUbot);
}

TEST_CASE("depth and size are nonnegative and monotone under embedding") {
    Rng r(11);
    for (int i = 0; i < 100; ++i) {
        auto inner = randomConcept(r, 1, true, false);
        auto outer = Concept::exists("r", Concept::conj({inner, C("Z")}));
        CHECK(conceptSize(outer) > conceptSize(inner));
        CHECK(conceptDepth(outer) >= conceptDepth(inner));
        CHECK(conceptSize(inner) >= 1);
    }
}

TEST_CASE("rendering is bit-stable on a fixed example") {
    auto c = C("(B or A) and s some (D and C)");
    // canonical child order: constructor tag first, so the existential
    // precedes the parenthesized disjunction
    CHECK(render(c) == "s some (C and D) and (A or B)");
    CHECK(render(parseConcept(render(c))) == render(c));
}
