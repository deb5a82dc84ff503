#pragma once

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "ontoembed/ontology.hpp"
#include "ontoembed/projection.hpp"
#include "ontoembed/rng.hpp"

namespace testsupport {

using namespace ontoembed;

// --- fixtures mirroring the two ontology fragments used across the tests ---

namespace helis {
inline const std::string ns = "http://www.fbk.eu/ontologies/virtualcoach#";
inline const std::string food4001 = ns + "FOOD-4001";
inline const std::string beer = ns + "Beer";
inline const std::string alcoholic = ns + "AlcoholicBeverages";
inline const std::string milk_and_yogurt = ns + "MilkAndYogurt";
inline const std::string vitamin_c_100 = ns + "VitaminC_100";
inline const std::string has_nutrient = ns + "hasNutrient";
inline const std::string amount_nutrient = ns + "amountNutrient";
inline const std::string amount_calories = ns + "amountCalories";
}  // namespace helis

namespace foodon {
inline const std::string ns = "http://purl.obolibrary.org/obo/";
inline const std::string edamame = ns + "FOODON_00002809";
inline const std::string plant = ns + "FOODON_03411347";
inline const std::string derives_from = ns + "RO_0001000";
inline const std::string definition = ns + "IAO_0000115";
}  // namespace foodon

std::string helis_fragment_nt();
std::string foodon_fragment_nt();

// --- blank-node canonicalization for round-trip comparison -----------------

// Renames blank nodes by iterative signature refinement with tie-breaking
// individualization; two graphs equal up to blank renaming canonicalize to
// the same sorted triple list.
std::vector<Triple> canonical_blanks(std::vector<Triple> triples);

bool same_up_to_blanks(const std::vector<Triple>& a, const std::vector<Triple>& b,
                       std::string* diff = nullptr);

// --- random ontology generator over the supported axiom subset -------------

Ontology random_ontology(Rng& rng, int axiom_budget = 200);

// --- independent oracles ----------------------------------------------------

using EdgeKey = std::tuple<std::string, std::string, std::string>;

// Brute-force application of the projection rule table, one pattern scan per
// rule, iterated to a fixpoint. Independent of project_rules.
std::set<EdgeKey> oracle_project_rules(const Ontology& onto, bool inverse);

std::set<EdgeKey> edge_keys(const ProjectedGraph& g);

// Strict transitive closure by Floyd-Warshall over an explicit edge list.
std::map<Iri, std::set<Iri>> warshall_closure(const std::set<Iri>& nodes,
                                              const std::vector<std::pair<Iri, Iri>>& edges);

}  // namespace testsupport
