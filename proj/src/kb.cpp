#include "annetto/kb.hpp"

#include "annetto/vocab.hpp"

#include <algorithm>

namespace annetto {

std::set<Iri> types_with_inference(const KB& kb, const Iri& individual) {
    std::set<Iri> out;
    for (const Triple& t : kb.graph.match(individual, vocab::kRdfType, std::nullopt)) {
        const Iri* cls = as_iri(t.object);
        if (!cls) continue;
        if (kb.schema.has_class(*cls)) {
            const std::set<Iri>& clo = kb.schema.superclosure(*cls);
            out.insert(clo.begin(), clo.end());
        } else {
            out.insert(*cls);
        }
    }
    return out;
}

bool has_type(const KB& kb, const Iri& individual, const Iri& cls) {
    return types_with_inference(kb, individual).count(cls) != 0;
}

std::vector<Iri> instances_of(const KB& kb, const Iri& cls) {
    std::set<Iri> found;
    for (const Triple& t : kb.graph.match(std::nullopt, vocab::kRdfType, std::nullopt)) {
        const Iri* asserted = as_iri(t.object);
        if (!asserted) continue;
        if (*asserted == cls ||
            (kb.schema.has_class(*asserted) && kb.schema.superclosure(*asserted).count(cls))) {
            found.insert(t.subject);
        }
    }
    return std::vector<Iri>(found.begin(), found.end());
}

}  // namespace annetto
