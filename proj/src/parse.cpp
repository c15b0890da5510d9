#include "dlapprox/parse.hpp"

#include <cctype>
#include <map>
#include <set>
#include <vector>

namespace dla {

namespace {

struct Token {
    std::string text;
    int line;
    int col;
};

bool isNameStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool isNameChar(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') { ++line; col = 1; ++i; continue; }
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) { ++col; ++i; continue; }
        if (c == '(' || c == ')') {
            out.push_back({std::string(1, c), line, col});
            ++col; ++i;
            continue;
        }
        if (isNameStart(c)) {
            int startCol = col;
            std::string w;
            while (i < text.size() && isNameChar(text[i])) { w += text[i]; ++i; ++col; }
            out.push_back({std::move(w), line, startCol});
            continue;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    return out;
}

const std::set<std::string>& keywords() {
    static std::set<std::string> kw{"Top", "Bottom", "and", "or", "not",
                                    "some", "only", "SubClassOf", "EquivalentTo"};
    return kw;
}

class Parser {
public:
    Parser(std::vector<Token> toks, std::set<std::string>& conceptNames,
           std::map<std::string, std::pair<int, int>>& roleNames)
        : toks_(std::move(toks)), conceptNames_(conceptNames), roleNames_(roleNames) {}

    ConceptPtr parseConceptAll() {
        auto c = parseOr();
        if (!atEnd()) fail("unexpected token '" + peek().text + "'");
        return c;
    }

    ConceptPtr parseOr() {
        std::vector<ConceptPtr> kids{parseAnd()};
        while (accept("or")) kids.push_back(parseAnd());
        return kids.size() == 1 ? kids[0] : Concept::disj(std::move(kids));
    }

    bool atEnd() const { return pos_ >= toks_.size(); }
    const Token& peek() const { return toks_[pos_]; }

    [[noreturn]] void fail(const std::string& msg) {
        if (atEnd()) {
            int line = toks_.empty() ? 1 : toks_.back().line;
            int col = toks_.empty() ? 1 : toks_.back().col + static_cast<int>(toks_.back().text.size());
            throw ParseError(msg + " at end of input", line, col);
        }
        throw ParseError(msg, peek().line, peek().col);
    }

    bool accept(const std::string& t) {
        if (!atEnd() && peek().text == t) { ++pos_; return true; }
        return false;
    }

    void expect(const std::string& t) {
        if (!accept(t)) fail("expected '" + t + "'");
    }

private:
    ConceptPtr parseAnd() {
        std::vector<ConceptPtr> kids{parseUnary()};
        while (accept("and")) kids.push_back(parseUnary());
        return kids.size() == 1 ? kids[0] : Concept::conj(std::move(kids));
    }

    ConceptPtr parseUnary() {
        if (atEnd()) fail("expected concept");
        const Token& t = peek();
        if (t.text == "not") {
            ++pos_;
            return Concept::negation(parseUnary());
        }
        if (isNameStart(t.text[0]) && !keywords().count(t.text) && pos_ + 1 < toks_.size() &&
            (toks_[pos_ + 1].text == "some" || toks_[pos_ + 1].text == "only")) {
            std::string role = t.text;
            roleNames_.emplace(role, std::make_pair(t.line, t.col));
            bool some = toks_[pos_ + 1].text == "some";
            pos_ += 2;
            auto arg = parseUnary();
            return some ? Concept::exists(role, arg) : Concept::forall(role, arg);
        }
        return parseAtom();
    }

    ConceptPtr parseAtom() {
        if (atEnd()) fail("expected concept");
        const Token& t = peek();
        if (t.text == "Top") { ++pos_; return Concept::top(); }
        if (t.text == "Bottom") { ++pos_; return Concept::bot(); }
        if (t.text == "(") {
            ++pos_;
            auto c = parseOr();
            expect(")");
            return c;
        }
        if (keywords().count(t.text)) fail("unexpected keyword '" + t.text + "'");
        if (!isNameStart(t.text[0])) fail("expected concept name");
        ++pos_;
        conceptNames_.insert(t.text);
        return Concept::named(t.text);
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::set<std::string>& conceptNames_;
    std::map<std::string, std::pair<int, int>>& roleNames_;
};

} // namespace

Ontology parseOntology(const std::string& text) {
    Ontology onto;
    std::set<std::string> conceptNames;
    std::map<std::string, std::pair<int, int>> roleNames;

    std::size_t start = 0;
    int lineNo = 1;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        std::string line = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
        auto toks = lex(line);
        for (auto& t : toks) t.line = lineNo;
        if (!toks.empty()) {
            // Split on SubClassOf / EquivalentTo.
            std::size_t sep = toks.size();
            bool equiv = false;
            for (std::size_t i = 0; i < toks.size(); ++i) {
                if (toks[i].text == "SubClassOf" || toks[i].text == "EquivalentTo") {
                    sep = i;
                    equiv = toks[i].text == "EquivalentTo";
                    break;
                }
            }
            if (sep == toks.size())
                throw ParseError("expected 'SubClassOf' or 'EquivalentTo'", lineNo,
                                 toks.back().col + static_cast<int>(toks.back().text.size()));
            std::vector<Token> left(toks.begin(), toks.begin() + sep);
            std::vector<Token> right(toks.begin() + sep + 1, toks.end());
            if (left.empty())
                throw ParseError("missing left-hand side", lineNo, toks[sep].col);
            if (right.empty())
                throw ParseError("missing right-hand side", lineNo,
                                 toks[sep].col + static_cast<int>(toks[sep].text.size()));
            Parser lp(left, conceptNames, roleNames);
            auto lhs = lp.parseConceptAll();
            Parser rp(right, conceptNames, roleNames);
            auto rhs = rp.parseConceptAll();
            if (equiv && lhs->kind != Kind::Name)
                throw ParseError("left-hand side of EquivalentTo must be a concept name",
                                 lineNo, left.front().col);
            onto.add({equiv ? AxiomKind::Equivalence : AxiomKind::Inclusion, lhs, rhs});
        }
        if (end == std::string::npos) break;
        start = end + 1;
        ++lineNo;
    }
    for (auto& [r, pos] : roleNames)
        if (conceptNames.count(r))
            throw ParseError("name '" + r + "' used both as role and concept name",
                             pos.first, pos.second);
    return onto;
}

ConceptPtr parseConcept(const std::string& text) {
    std::set<std::string> cn;
    std::map<std::string, std::pair<int, int>> rn;
    Parser p(lex(text), cn, rn);
    if (p.atEnd()) throw ParseError("empty concept", 1, 1);
    auto c = p.parseConceptAll();
    for (auto& [r, pos] : rn)
        if (cn.count(r))
            throw ParseError("name '" + r + "' used both as role and concept name",
                             pos.first, pos.second);
    return c;
}

} // namespace dla
