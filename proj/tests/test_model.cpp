#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "norm/model.hpp"

using namespace norm;

namespace {

Property simple(const char* s) { return Property::simple(s); }

Literal fact(bool pos, Property p, const char* agent, int t) {
    return Literal(pos, Modality::Fact, std::move(p), Term::agent(agent), TimeExpr::constant(t));
}

// Random normalized property without a top-level Neg, for the
// incompatibility properties.
Property random_property(std::mt19937& rng, int depth = 0) {
    static const char* names[] = {"Arret", "Choc", "Suiv", "Heurter"};
    std::uniform_int_distribution<int> pick(0, depth >= 2 ? 0 : 2);
    switch (pick(rng)) {
        case 1:
            return Property::combine(random_property(rng, depth + 1),
                                     Term::agent(rng() % 2 ? "V" : "W"));
        case 2:
            return Property::combine(simple(names[rng() % 4]),
                                     Term::symbol(rng() % 2 ? "arriere" : "Rouge"));
        default:
            return simple(names[rng() % 4]);
    }
}

}  // namespace

TEST_CASE("double negation is eliminated on construction") {
    Property arret = simple("Arret");
    CHECK(Property::neg(Property::neg(arret)) == arret);
    CHECK(Property::neg(arret) != arret);
    CHECK(normalize(Property::neg(Property::neg(arret))) == arret);

    Property combined = Property::combine(simple("Heurter"), Term::agent("V"));
    CHECK(normalize(combined) == combined);
    CHECK(Property::neg(combined) == Property::neg(combined));
}

TEST_CASE("normalize is idempotent over random properties") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        Property p = random_property(rng);
        Property q = i % 2 ? Property::neg(p) : p;
        CHECK(normalize(normalize(q)) == normalize(q));
    }
}

TEST_CASE("literal normalization folds neg into polarity") {
    Literal a = fact(true, Property::neg(simple("Arret")), "W", 2);
    CHECK_FALSE(a.positive);
    CHECK(a.property == simple("Arret"));

    Literal b = fact(false, Property::neg(simple("Arret")), "W", 2);
    CHECK(b.positive);

    // the two encodings are indistinguishable
    CHECK(a == fact(false, simple("Arret"), "W", 2));
}

TEST_CASE("complement flips polarity after normalization") {
    Literal pos = fact(true, simple("Arret"), "W", 2);
    CHECK(complement(pos) == fact(false, simple("Arret"), "W", 2));
    CHECK(complement(complement(pos)) == pos);

    // positive on neg(Arret) normalizes, then flips back to positive
    Literal negged = fact(true, Property::neg(simple("Arret")), "W", 2);
    CHECK(complement(negged) == fact(true, simple("Arret"), "W", 2));

    Literal duty(false, Modality::Duty, simple("Demarrer"), Term::agent("B"), TimeExpr::constant(1));
    CHECK(complement(duty).positive);
}

TEST_CASE("predicate key abstracts Combine arguments and negation") {
    Property combined = Property::combine(simple("Suiv"), Term::agent("B"));
    CHECK(predicate_key(Modality::Fact, combined) == predicate_key(Modality::Fact, simple("Suiv")));
    CHECK(predicate_key(Modality::Fact, Property::neg(simple("Suiv"))) ==
          (PredicateKey{Modality::Fact, "Suiv"}));
    CHECK(predicate_key(Modality::Fact, simple("Suiv")) !=
          predicate_key(Modality::Duty, simple("Suiv")));
    CHECK(to_string(PredicateKey{Modality::Duty, "Arret"}) == "Doit:Arret");
}

TEST_CASE("built-in incompatibility is the neg pair") {
    IncompatibilityTable table;
    Property arret = simple("Arret");
    CHECK(incompatible(arret, Property::neg(arret), table));
    CHECK(incompatible(Property::neg(arret), arret, table));
    CHECK_FALSE(incompatible(arret, arret, table));
    CHECK_FALSE(incompatible(arret, simple("Demarrer"), table));
}

TEST_CASE("declared incompatibilities match with shared bindings") {
    IncompatibilityTable table;
    table.add(simple("Avancer"), simple("Reculer"));
    CHECK(incompatible(simple("Avancer"), simple("Reculer"), table));
    CHECK(incompatible(simple("Reculer"), simple("Avancer"), table));
    CHECK_FALSE(incompatible(simple("Avancer"), simple("Arret"), table));

    // a shared variable must bind to the same term on both sides
    IncompatibilityTable shared;
    shared.add(Property::combine(simple("SensInverse"), Term::var("A")),
               Property::combine(simple("Suiv"), Term::var("A")));
    Property si_v = Property::combine(simple("SensInverse"), Term::agent("V"));
    CHECK(incompatible(si_v, Property::combine(simple("Suiv"), Term::agent("V")), shared));
    CHECK_FALSE(incompatible(si_v, Property::combine(simple("Suiv"), Term::agent("W")), shared));
}

TEST_CASE("incompatibility is symmetric and irreflexive over random properties") {
    std::mt19937 rng(11);
    IncompatibilityTable table;
    table.add(simple("Avancer"), simple("Reculer"));
    for (int i = 0; i < 200; ++i) {
        Property p = random_property(rng);
        Property q = random_property(rng);
        CHECK(incompatible(p, q, table) == incompatible(q, p, table));
        CHECK_FALSE(incompatible(p, p, table));
    }
}

TEST_CASE("substitution grounds variables and leaves the rest") {
    std::map<std::string, Term> terms{{"A", Term::agent("V")}};
    std::map<std::string, int> times{{"T", 2}};
    Literal pattern(true, Modality::Fact, Property::combine(simple("Heurter"), Term::var("A")),
                    Term::var("B"), TimeExpr::variable("T", -1));
    Literal half = substitute(pattern, terms, times);
    CHECK_FALSE(half.is_ground());  // B is untouched
    CHECK(half.time == TimeExpr::constant(1));

    terms.emplace("B", Term::agent("W"));
    Literal full = substitute(pattern, terms, times);
    CHECK(full.is_ground());
    CHECK(to_string(full) == "Vrai(Combine(Heurter,\"V\"),\"W\",1)");
}

TEST_CASE("rendering round-trips through to_string forms") {
    Literal lit(false, Modality::Duty, Property::combine(simple("Suiv"), Term::symbol("arriere")),
                Term::agent("W"), TimeExpr::variable("T", 1));
    CHECK(to_string(lit) == "!Doit(Combine(Suiv,arriere),\"W\",T+1)");
    CHECK(sexpr(lit.property) == "(Combine Suiv arriere)");
    CHECK(sexpr(Property::neg(simple("Arret"))) == "(neg Arret)");
}
