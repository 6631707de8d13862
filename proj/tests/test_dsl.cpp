#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "norm/parser.hpp"

using namespace norm;

TEST_CASE("strict rule from the semantic rule set") {
    Rulebase rb = parse_rules("Vrai(Stationne,A,T) -> Vrai(Arret,A,T).", "t.rules");
    REQUIRE(rb.rules.size() == 1);
    const Rule& r = rb.rules[0];
    CHECK(r.kind == RuleKind::Strict);
    CHECK(r.id == "t.rules:1");
    REQUIRE(r.premises.size() == 1);
    REQUIRE(r.conclusions.size() == 1);
    CHECK(r.justifications.empty());
    CHECK(to_string(r.premises[0]) == "Vrai(Stationne,A,T)");
    CHECK(to_string(r.conclusions[0]) == "Vrai(Arret,A,T)");
}

TEST_CASE("normal default with a time offset in the conclusion") {
    Rulebase rb = parse_rules(
        "Vrai(Combine(MemeFile,A),B,T) & Vrai(Combine(Heurter,A),B,T)"
        " : Vrai(Combine(Suiv,A),B,T-1).");
    REQUIRE(rb.rules.size() == 1);
    const Rule& r = rb.rules[0];
    CHECK(r.kind == RuleKind::NormalDefault);
    CHECK(r.premises.size() == 2);
    REQUIRE(r.conclusions.size() == 1);
    CHECK(r.conclusions[0].time == TimeExpr::variable("T", -1));
}

TEST_CASE("semi-normal default with negative justifications") {
    Rulebase rb = parse_rules(
        "Vrai(Demarrer,B,T-1) & Vrai(Combine(Choc,A),B,T) : Doit(neg(Demarrer),B,T-2)"
        " [!Vrai(Combine(Prioritaire,A),B,T-1), !Vrai(Combine(Suiv,B),A,T-1)].");
    REQUIRE(rb.rules.size() == 1);
    const Rule& r = rb.rules[0];
    CHECK(r.kind == RuleKind::SemiNormalDefault);
    REQUIRE(r.justifications.size() == 2);
    CHECK_FALSE(r.justifications[0].positive);
    // Doit(neg(Demarrer)) normalizes to a negative duty literal
    REQUIRE(r.conclusions.size() == 1);
    CHECK_FALSE(r.conclusions[0].positive);
    CHECK(r.conclusions[0].property == Property::simple("Demarrer"));
    CHECK(r.conclusions[0].time == TimeExpr::variable("T", -2));
}

TEST_CASE("a default with a conjunctive conclusion is an arity error") {
    CHECK_THROWS_AS(parse_rules("Vrai(Arret,A,T) : Doit(P,A,T) & Doit(Q,A,T)."), ArityError);
}

TEST_CASE("unbound conclusion and justification variables are range errors") {
    CHECK_THROWS_AS(parse_rules("Vrai(Arret,A,T) : Vrai(Suiv,B,T)."), RangeError);
    CHECK_THROWS_AS(parse_rules("Vrai(Arret,A,T) : Vrai(Arret,A,T2)."), RangeError);
    CHECK_THROWS_AS(parse_rules("Vrai(Arret,A,T) : Vrai(Choc,A,T) [Vrai(Suiv,B,T)]."), RangeError);
    CHECK_NOTHROW(parse_rules("Vrai(Combine(Suiv,B),A,T) -> Vrai(Combine(CauseArret,B),A,T)."));
}

TEST_CASE("declarations populate the static tables") {
    Rulebase rb = parse_rules(
        "action Freiner.\n"
        "cause_pot(Arret, Freiner).\n"
        "incompatible(Avancer, Reculer).\n");
    CHECK(rb.actions == std::set<std::string>{"Freiner"});
    CHECK(rb.cause_pot.count({"Arret", "Freiner"}) == 1);
    REQUIRE(rb.incompatibilities.extra.size() == 1);
    CHECK(incompatible(Property::simple("Avancer"), Property::simple("Reculer"),
                       rb.incompatibilities));
}

TEST_CASE("facts parse with polarity and groundness checks") {
    auto facts = parse_facts("Vrai(Arret,\"V\",1).\n!Vrai(Arret,\"W\",2).\n");
    REQUIRE(facts.size() == 2);
    CHECK(facts[0].positive);
    CHECK_FALSE(facts[1].positive);
    CHECK(facts[1].agent == Term::agent("W"));

    CHECK_THROWS_AS(parse_facts("Vrai(Arret,A,1)."), NonGroundError);
    CHECK_THROWS_AS(parse_facts("Vrai(Combine(Suiv,B),\"V\",1)."), NonGroundError);
}

TEST_CASE("multi-letter capitalized identifiers are constants, not variables") {
    auto facts = parse_facts("Vrai(Combine(Feu,Rouge),\"V\",1).");
    REQUIRE(facts.size() == 1);
    CHECK(facts[0].is_ground());
    CHECK(to_string(facts[0]) == "Vrai(Combine(Feu,Rouge),\"V\",1)");

    // P1 is a variable (letter plus digits), Rouge is not
    CHECK_THROWS_AS(parse_facts("Vrai(Combine(Feu,P1),\"V\",1)."), NonGroundError);
}

TEST_CASE("parse errors carry a position inside the offending token") {
    try {
        parse_rules("Vrai(Stationne,A,T) ->\nVrai(Arret,A.", "bad.rules");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.pos().file == "bad.rules");
        CHECK(e.pos().line == 2);
        CHECK(e.pos().col > 1);
        CHECK(std::string(e.what()).find("bad.rules:2:") == 0);
    }

    CHECK_THROWS_AS(parse_rules("Vrai(Arret,\"V\",0)."), ParseError);  // instants start at 1
    CHECK_THROWS_AS(parse_rules("Vrai(Arret,A,T) & Vrai(Choc,A,T)."), ParseError);
    CHECK_THROWS_AS(parse_rules("Truc(Arret,A,T) -> Vrai(Choc,A,T)."), ParseError);
}

TEST_CASE("comments and whitespace are ignored") {
    Rulebase rb = parse_rules(
        "% a comment line\n"
        "Vrai(Stationne,A,T)   % trailing comment\n"
        "  -> Vrai(Arret,A,T).\n",
        "t0.rules");
    CHECK(rb.rules.size() == 1);
    CHECK(rb.rules[0].id == "t0.rules:2");
}

TEST_CASE("rulebase files may carry ground facts") {
    Rulebase rb = parse_rules("Vrai(Arret,\"V\",1).\nVrai(Stationne,A,T) -> Vrai(Arret,A,T).");
    CHECK(rb.facts.size() == 1);
    CHECK(rb.rules.size() == 1);
    CHECK_THROWS_AS(parse_rules("Vrai(Arret,A,1)."), NonGroundError);
}

TEST_CASE("render round-trips the three rule kinds and declarations") {
    const char* text =
        "action Freiner.\n"
        "cause_pot(Arret, Freiner).\n"
        "incompatible(Combine(SensInverse,A), Combine(Suiv,A)).\n"
        "Vrai(Arret,\"V\",1).\n"
        "Vrai(Stationne,A,T) -> Vrai(Arret,A,T) & Vrai(Controle,A,T).\n"
        "Vrai(Combine(MemeFile,A),B,T) : Vrai(Combine(Suiv,A),B,T-1).\n"
        "Vrai(Demarrer,B,T) : Doit(neg(Demarrer),B,T) [!Vrai(Prioritaire,B,T)].\n";
    Rulebase rb = parse_rules(text, "a.rules");
    Rulebase back = parse_rules(render(rb), "b.rules");
    CHECK(structurally_equal(rb, back));
}

namespace {

// Random rule generator for the round-trip property. Conclusions reuse
// premise variables so the range restriction always holds.
Rulebase random_rulebase(std::mt19937& rng) {
    static const char* props[] = {"Pa", "Pb", "Pc", "Pd", "Pe"};
    static const char* syms[] = {"rouge", "bleu", "Gauche"};
    auto literal = [&](bool allow_negative) {
        Property p = Property::simple(props[rng() % 5]);
        if (rng() % 3 == 0)
            p = Property::combine(p, rng() % 2 ? Term::var("A") : Term::symbol(syms[rng() % 3]));
        if (rng() % 4 == 0) p = Property::neg(p);
        Modality m = rng() % 3 == 0 ? Modality::Duty : Modality::Fact;
        Term agent = rng() % 2 ? Term::var("A") : Term::agent(rng() % 2 ? "v1" : "v2");
        TimeExpr t = rng() % 2 ? TimeExpr::variable("T", int(rng() % 3) - 1)
                               : TimeExpr::constant(int(rng() % 3) + 1);
        return Literal(allow_negative ? rng() % 2 == 0 : true, m, std::move(p), std::move(agent),
                       std::move(t));
    };
    Rulebase rb;
    int nrules = 1 + int(rng() % 6);
    for (int i = 0; i < nrules; ++i) {
        Rule r;
        r.id = "gen:" + std::to_string(i);
        int nprem = 1 + int(rng() % 3);
        bool has_var = false;
        for (int j = 0; j < nprem; ++j) {
            r.premises.push_back(literal(true));
            VarOccurrences occ;
            collect_vars(r.premises.back(), occ);
            has_var = has_var || (!occ.term_vars.empty() && !occ.time_vars.empty());
        }
        if (!has_var)
            r.premises.push_back(Literal(true, Modality::Fact, Property::simple("Pa"),
                                         Term::var("A"), TimeExpr::variable("T")));
        switch (rng() % 3) {
            case 0: {
                r.kind = RuleKind::Strict;
                int nconc = 1 + int(rng() % 2);
                for (int j = 0; j < nconc; ++j) r.conclusions.push_back(literal(true));
                break;
            }
            case 1:
                r.kind = RuleKind::NormalDefault;
                r.conclusions.push_back(literal(true));
                break;
            default:
                r.kind = RuleKind::SemiNormalDefault;
                r.conclusions.push_back(literal(true));
                r.justifications.push_back(literal(true));
                if (rng() % 2) r.justifications.push_back(literal(true));
        }
        rb.rules.push_back(std::move(r));
    }
    if (rng() % 2) rb.actions.insert("Freiner");
    if (rng() % 2) rb.cause_pot.emplace("Arret", "Freiner");
    if (rng() % 3 == 0) rb.incompatibilities.add(Property::simple("Pa"), Property::simple("Pb"));
    if (rng() % 3 == 0)
        rb.facts.push_back(Literal(rng() % 2 == 0, Modality::Fact, Property::simple("Pa"),
                                   Term::agent("v1"), TimeExpr::constant(1)));
    return rb;
}

}  // namespace

TEST_CASE("parse after render is the identity on random rulebases") {
    std::mt19937 rng(2024);
    for (int i = 0; i < 200; ++i) {
        Rulebase rb = random_rulebase(rng);
        Rulebase back = parse_rules(render(rb), "roundtrip.rules");
        CHECK(structurally_equal(rb, back));
    }
}
