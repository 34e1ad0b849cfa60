#pragma once

#include "annetto/graph.hpp"
#include "annetto/term.hpp"

#include <map>
#include <optional>
#include <set>

namespace annetto {

struct OntClassDef {
    Iri iri;
    std::set<Iri> parents;
};

enum class PropertyKind { Object, Data };

struct PropertyDef {
    Iri iri;
    PropertyKind kind = PropertyKind::Object;
    std::optional<Iri> inverse_of;
    bool symmetric = false;
    std::optional<Iri> domain_hint;
    std::optional<Iri> range_hint;
};

// The vocabulary: class hierarchy plus property definitions. Immutable once
// built; extension returns a new model. Subclass queries use a precomputed
// reflexive-transitive closure.
class SchemaModel {
public:
    // The built-in ANNETT-O roster (topology, training, evaluation,
    // auxiliary classes and their properties).
    static SchemaModel builtin();

    // Union of this model and the class/property definitions asserted in g
    // (rdfs:subClassOf, owl:Class, owl:ObjectProperty, owl:DatatypeProperty,
    // owl:inverseOf, owl:SymmetricProperty, rdfs:domain/range). Built-in
    // definitions are kept; throws Error on a subclass cycle.
    SchemaModel extended_with(const Graph& g) const;

    bool has_class(const Iri& cls) const { return classes_.count(cls) != 0; }

    // True iff sup is in the reflexive-transitive parent closure of sub.
    // Throws Error when either IRI is not a known class.
    bool is_subclass(const Iri& sub, const Iri& sup) const;

    // Reflexive-transitive parent set; throws Error on an unknown class.
    const std::set<Iri>& superclosure(const Iri& cls) const;

    const std::map<Iri, OntClassDef>& classes() const { return classes_; }
    const std::map<Iri, PropertyDef>& properties() const { return properties_; }
    const PropertyDef* property(const Iri& iri) const;

private:
    void add_class(const Iri& iri, std::initializer_list<Iri> parents);
    void add_parent(const Iri& iri, const Iri& parent);
    void add_object_property(const Iri& iri);
    void add_data_property(const Iri& iri);
    // Recomputes closure_; throws Error naming a cycle if one exists.
    void rebuild_closure();

    std::map<Iri, OntClassDef> classes_;
    std::map<Iri, PropertyDef> properties_;
    std::map<Iri, std::set<Iri>> closure_;
};

}  // namespace annetto
