#include "annetto/schema.hpp"

#include "annetto/vocab.hpp"

namespace annetto {

namespace v = vocab;

void SchemaModel::add_class(const Iri& iri, std::initializer_list<Iri> parents) {
    OntClassDef& def = classes_[iri];
    def.iri = iri;
    for (const Iri& p : parents) def.parents.insert(p);
}

void SchemaModel::add_parent(const Iri& iri, const Iri& parent) {
    OntClassDef& def = classes_[iri];
    def.iri = iri;
    def.parents.insert(parent);
    OntClassDef& pdef = classes_[parent];
    pdef.iri = parent;
}

void SchemaModel::add_object_property(const Iri& iri) {
    PropertyDef& def = properties_[iri];
    def.iri = iri;
    def.kind = PropertyKind::Object;
}

void SchemaModel::add_data_property(const Iri& iri) {
    PropertyDef& def = properties_[iri];
    def.iri = iri;
    def.kind = PropertyKind::Data;
}

const PropertyDef* SchemaModel::property(const Iri& iri) const {
    auto it = properties_.find(iri);
    return it == properties_.end() ? nullptr : &it->second;
}

SchemaModel SchemaModel::builtin() {
    SchemaModel m;

    m.add_class(v::kANNConfiguration, {});
    m.add_class(v::kNetwork, {});
    m.add_class(v::kLayer, {});
    m.add_class(v::kHiddenLayer, {v::kLayer});
    m.add_class(v::kInOutLayer, {v::kLayer});
    m.add_class(v::kActivationLayer, {v::kHiddenLayer});
    m.add_class(v::kAggregationLayer, {v::kHiddenLayer});
    m.add_class(v::kSeparationLayer, {v::kHiddenLayer});
    m.add_class(v::kModificationLayer, {v::kHiddenLayer});
    m.add_class(v::kFullyConnectedLayer, {v::kActivationLayer});
    m.add_class(v::kConcatLayer, {v::kAggregationLayer});
    m.add_class(v::kInputLayer, {v::kInOutLayer});
    m.add_class(v::kOutputLayer, {v::kInOutLayer});
    m.add_class(v::kTrainingStrategy, {});
    m.add_class(v::kTrainingSession, {});
    m.add_class(v::kTrainingStep, {});
    m.add_class(v::kTrainingLoop, {v::kTrainingStep});
    m.add_class(v::kTrainingSingle, {v::kTrainingStep});
    m.add_class(v::kTrainingSingleForwardOnly, {v::kTrainingStep});
    m.add_class(v::kTrainingOptimizer, {});
    m.add_class(v::kNetworkEvaluation, {});
    m.add_class(v::kFunction, {});
    m.add_class(v::kActivationFunction, {v::kFunction});
    m.add_class(v::kRelu, {v::kActivationFunction});
    m.add_class(v::kSoftmax, {v::kActivationFunction});
    m.add_class(v::kObjectiveFunction, {v::kFunction});
    m.add_class(v::kCostFunction, {v::kObjectiveFunction});
    m.add_class(v::kMetric, {v::kFunction});
    m.add_class(v::kAccuracy, {v::kMetric});
    m.add_class(v::kDataset, {});
    m.add_class(v::kLabelset, {v::kDataset});
    m.add_class(v::kDatasetPipe, {});
    m.add_class(v::kTrainedModel, {});
    m.add_class(v::kTaskCharacterization, {});
    m.add_class(v::kClustering, {v::kTaskCharacterization});
    m.add_class(v::kClassification, {v::kTaskCharacterization});
    m.add_class(v::kGeneration, {v::kTaskCharacterization});
    m.add_class(v::kDiscrimination, {v::kTaskCharacterization});
    m.add_class(v::kAdversarial, {v::kTaskCharacterization});
    m.add_class(v::kDataCharacterization, {});

    m.add_object_property(v::kHasNetwork);
    m.properties_[v::kHasNetwork].domain_hint = v::kANNConfiguration;
    m.properties_[v::kHasNetwork].range_hint = v::kNetwork;
    m.add_object_property(v::kHasLayer);
    m.properties_[v::kHasLayer].domain_hint = v::kNetwork;
    m.properties_[v::kHasLayer].range_hint = v::kLayer;
    m.add_object_property(v::kNextLayer);
    m.add_object_property(v::kPreviousLayer);
    m.properties_[v::kNextLayer].inverse_of = v::kPreviousLayer;
    m.properties_[v::kPreviousLayer].inverse_of = v::kNextLayer;
    m.add_object_property(v::kSameLayerAs);
    m.properties_[v::kSameLayerAs].symmetric = true;
    m.add_object_property(v::kHasActivationFunction);
    m.properties_[v::kHasActivationFunction].domain_hint = v::kActivationLayer;
    m.properties_[v::kHasActivationFunction].range_hint = v::kActivationFunction;
    m.add_object_property(v::kHasTrainingStrategy);
    m.add_object_property(v::kHasTrainingSession);
    m.add_object_property(v::kNextTrainingSession);
    m.add_object_property(v::kHasTrainingStep);
    m.add_object_property(v::kNextTrainingStep);
    m.add_object_property(v::kHasTaskType);
    m.add_object_property(v::kUpdatesLayer);
    m.add_object_property(v::kEvaluatesNetwork);
    m.add_object_property(v::kBasedOnTrainingStrategy);
    m.add_object_property(v::kHasEvaluationMetric);
    m.add_object_property(v::kEvaluatesOnDataset);
    m.add_object_property(v::kEvaluatesConfiguration);
    m.add_object_property(v::kPipeLayer);
    m.properties_[v::kPipeLayer].range_hint = v::kInOutLayer;
    m.add_object_property(v::kPipeDataset);
    m.properties_[v::kPipeDataset].range_hint = v::kDataset;
    m.add_object_property(v::kHasObjectiveFunction);
    m.add_object_property(v::kHasTrainingOptimizer);
    m.add_object_property(v::kTrainsNetwork);
    m.add_object_property(v::kHasLoopStep);
    m.add_object_property(v::kProducesDataset);
    m.add_object_property(v::kHasDataType);

    m.add_data_property(v::kEvalScore);
    m.add_data_property(v::kEvalDate);
    m.add_data_property(v::kFunctionMath);
    m.add_data_property(v::kLoopCount);
    m.add_data_property(v::kLoopCondition);
    m.add_data_property(v::kIsTransient);

    m.rebuild_closure();
    return m;
}

SchemaModel SchemaModel::extended_with(const Graph& g) const {
    SchemaModel out = *this;

    for (const Triple& t : g.match(std::nullopt, vocab::kRdfsSubClassOf, std::nullopt)) {
        const Iri* parent = as_iri(t.object);
        if (!parent) continue;
        out.add_parent(t.subject, *parent);
    }
    for (const Triple& t : g.match(std::nullopt, vocab::kRdfType, std::nullopt)) {
        const Iri* cls = as_iri(t.object);
        if (!cls) continue;
        if (*cls == vocab::kOwlClass) {
            out.add_class(t.subject, {});
        } else if (*cls == vocab::kOwlObjectProperty) {
            if (!out.properties_.count(t.subject)) out.add_object_property(t.subject);
        } else if (*cls == vocab::kOwlDatatypeProperty) {
            if (!out.properties_.count(t.subject)) out.add_data_property(t.subject);
        } else if (*cls == vocab::kOwlSymmetricProperty) {
            if (!out.properties_.count(t.subject)) out.add_object_property(t.subject);
            out.properties_[t.subject].symmetric = true;
        }
    }
    for (const Triple& t : g.match(std::nullopt, vocab::kOwlInverseOf, std::nullopt)) {
        const Iri* other = as_iri(t.object);
        if (!other) continue;
        if (!out.properties_.count(t.subject)) out.add_object_property(t.subject);
        if (!out.properties_.count(*other)) out.add_object_property(*other);
        out.properties_[t.subject].inverse_of = *other;
        out.properties_[*other].inverse_of = t.subject;
    }
    for (const Triple& t : g.match(std::nullopt, vocab::kRdfsDomain, std::nullopt)) {
        if (const Iri* d = as_iri(t.object); d && out.properties_.count(t.subject)) {
            out.properties_[t.subject].domain_hint = *d;
        }
    }
    for (const Triple& t : g.match(std::nullopt, vocab::kRdfsRange, std::nullopt)) {
        if (const Iri* r = as_iri(t.object); r && out.properties_.count(t.subject)) {
            out.properties_[t.subject].range_hint = *r;
        }
    }

    out.rebuild_closure();
    return out;
}

void SchemaModel::rebuild_closure() {
    closure_.clear();
    // Iterative DFS with cycle detection; 0 = unvisited, 1 = on stack, 2 = done.
    std::map<Iri, int> state;

    struct Frame {
        const OntClassDef* def;
        std::set<Iri>::const_iterator next;
    };

    for (const auto& [iri, def] : classes_) {
        if (state[iri] == 2) continue;
        std::vector<Frame> stack;
        stack.push_back({&def, def.parents.begin()});
        state[iri] = 1;
        while (!stack.empty()) {
            Frame& top = stack.back();
            const Iri& cur = top.def->iri;
            if (top.next == top.def->parents.end()) {
                std::set<Iri>& clo = closure_[cur];
                clo.insert(cur);
                for (const Iri& p : top.def->parents) {
                    const std::set<Iri>& pc = closure_[p];
                    clo.insert(pc.begin(), pc.end());
                }
                state[cur] = 2;
                stack.pop_back();
                continue;
            }
            const Iri& parent = *top.next;
            ++top.next;
            auto pit = classes_.find(parent);
            if (pit == classes_.end()) {
                // Referenced but undeclared parent: treat as a root.
                closure_[parent].insert(parent);
                state[parent] = 2;
                continue;
            }
            if (state[parent] == 1) {
                throw Error("subclass cycle involving '" + parent.value() + "' and '" + cur.value() + "'");
            }
            if (state[parent] == 0) {
                state[parent] = 1;
                stack.push_back({&pit->second, pit->second.parents.begin()});
            }
        }
    }
}

bool SchemaModel::is_subclass(const Iri& sub, const Iri& sup) const {
    if (!closure_.count(sup) && !classes_.count(sup)) {
        throw Error("unknown ontology class '" + sup.value() + "'");
    }
    return superclosure(sub).count(sup) != 0;
}

const std::set<Iri>& SchemaModel::superclosure(const Iri& cls) const {
    auto it = closure_.find(cls);
    if (it == closure_.end()) {
        throw Error("unknown ontology class '" + cls.value() + "'");
    }
    return it->second;
}

}  // namespace annetto
