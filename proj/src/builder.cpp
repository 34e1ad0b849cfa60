#include "annetto/builder.hpp"

#include "annetto/vocab.hpp"

#include <algorithm>
#include <cctype>

namespace annetto {

namespace v = vocab;

namespace {

void insert(KB& kb, const Iri& s, const Iri& p, const Term& o) {
    kb.graph.insert(Triple{s, p, o});
}

bool is_defined(const KB& kb, const Iri& individual) {
    return !kb.graph.match(individual, v::kRdfType, std::nullopt).empty();
}

Iri fresh(KB& kb, std::string_view name, const char* what) {
    Iri iri = kb_name(kb, name);
    if (is_defined(kb, iri)) {
        throw Error(std::string(what) + " '" + iri.value() + "' already exists");
    }
    return iri;
}

void require_type(const KB& kb, const Iri& individual, const Iri& cls, const char* what) {
    if (!is_defined(kb, individual)) {
        throw Error(std::string(what) + " '" + individual.value() + "' does not exist");
    }
    if (!has_type(kb, individual, cls)) {
        throw Error(std::string(what) + " '" + individual.value() + "' is not a " +
                    cls.value());
    }
}

void require_subclass(const KB& kb, const Iri& cls, const Iri& sup, const char* what) {
    if (!kb.schema.has_class(cls) || !kb.schema.is_subclass(cls, sup)) {
        throw Error(std::string(what) + ": '" + cls.value() + "' is not a subclass of " +
                    sup.value());
    }
}

// Networks that own the layer via hasLayer.
std::vector<Iri> networks_of(const KB& kb, const Iri& layer) {
    std::vector<Iri> out;
    for (const Triple& t : kb.graph.match(std::nullopt, v::kHasLayer, Term{layer})) {
        out.push_back(t.subject);
    }
    return out;
}

std::string local_name(const Iri& iri) {
    const std::string& s = iri.value();
    std::size_t pos = s.find_last_of("/#");
    return pos == std::string::npos ? s : s.substr(pos + 1);
}

}  // namespace

Iri kb_name(const KB& kb, std::string_view name) {
    if (!valid_local_name(name)) {
        throw Error("invalid individual name '" + std::string(name) + "'");
    }
    auto ns = kb.graph.prefixes().ns_of("");
    if (!ns) {
        throw Error("knowledge base has no default namespace");
    }
    return Iri(*ns + std::string(name));
}

Iri add_configuration(KB& kb, std::string_view name) {
    Iri iri = fresh(kb, name, "configuration");
    insert(kb, iri, v::kRdfType, v::kANNConfiguration);
    return iri;
}

Iri add_network(KB& kb, const Iri& config, std::string_view name, std::optional<Iri> task_class) {
    require_type(kb, config, v::kANNConfiguration, "configuration");
    Iri net = fresh(kb, name, "network");
    insert(kb, net, v::kRdfType, v::kNetwork);
    insert(kb, config, v::kHasNetwork, net);
    if (task_class) {
        require_subclass(kb, *task_class, v::kTaskCharacterization, "task");
        Iri task = fresh(kb, std::string(name) + "_task", "task");
        insert(kb, task, v::kRdfType, *task_class);
        insert(kb, net, v::kHasTaskType, task);
    }
    return net;
}

Iri add_layer(KB& kb, const Iri& network, std::string_view name, const Iri& layer_class,
              std::optional<Iri> activation_class) {
    require_type(kb, network, v::kNetwork, "network");
    require_subclass(kb, layer_class, v::kLayer, "layer class");
    Iri layer = kb_name(kb, name);
    if (is_defined(kb, layer)) {
        std::vector<Iri> owners = networks_of(kb, layer);
        if (!owners.empty()) {
            throw Error("layer '" + layer.value() + "' already belongs to network '" +
                        owners.front().value() + "'");
        }
        throw Error("layer '" + layer.value() + "' already exists");
    }
    insert(kb, layer, v::kRdfType, layer_class);
    insert(kb, network, v::kHasLayer, layer);
    if (activation_class) {
        require_subclass(kb, *activation_class, v::kActivationFunction, "activation");
        std::string fn_name = local_name(*activation_class);
        std::transform(fn_name.begin(), fn_name.end(), fn_name.begin(),
                       [](unsigned char c) { return std::tolower(c); });
        Iri fn = kb_name(kb, fn_name + "_fn");
        if (!is_defined(kb, fn)) {
            insert(kb, fn, v::kRdfType, *activation_class);
        }
        insert(kb, layer, v::kHasActivationFunction, fn);
    }
    return layer;
}

void connect(KB& kb, const Iri& from, const Iri& to) {
    require_type(kb, from, v::kLayer, "layer");
    require_type(kb, to, v::kLayer, "layer");
    if (kb.graph.contains(Triple{from, v::kNextLayer, to})) return;

    std::vector<Iri> from_nets = networks_of(kb, from);
    std::vector<Iri> to_nets = networks_of(kb, to);
    if (from_nets.size() != 1 || to_nets.size() != 1 || from_nets != to_nets) {
        throw Error("cannot connect '" + from.value() + "' to '" + to.value() +
                    "': layers must belong to the same network");
    }
    if (has_type(kb, from, v::kOutputLayer)) {
        throw Error("'" + from.value() + "' is an OutputLayer and may not have layers connecting from it");
    }
    if (has_type(kb, to, v::kInputLayer)) {
        throw Error("'" + to.value() + "' is an InputLayer and may not have layers connecting into it");
    }
    if (!has_type(kb, from, v::kSeparationLayer) &&
        !kb.graph.match(from, v::kNextLayer, std::nullopt).empty()) {
        throw Error("'" + from.value() + "' already connects to a layer and is not a SeparationLayer");
    }
    if (!has_type(kb, to, v::kAggregationLayer) &&
        !kb.graph.match(to, v::kPreviousLayer, std::nullopt).empty()) {
        throw Error("'" + to.value() + "' already has an incoming layer and is not an AggregationLayer");
    }
    insert(kb, from, v::kNextLayer, to);
    insert(kb, to, v::kPreviousLayer, from);
}

void same_layer(KB& kb, const Iri& a, const Iri& b) {
    require_type(kb, a, v::kLayer, "layer");
    require_type(kb, b, v::kLayer, "layer");
    if (a == b) {
        throw Error("sameLayerAs requires two distinct layers");
    }
    std::vector<Iri> a_nets = networks_of(kb, a);
    std::vector<Iri> b_nets = networks_of(kb, b);
    for (const Iri& n : a_nets) {
        if (std::find(b_nets.begin(), b_nets.end(), n) != b_nets.end()) {
            throw Error("sameLayerAs requires layers of different networks, both are in '" +
                        n.value() + "'");
        }
    }
    insert(kb, a, v::kSameLayerAs, b);
    insert(kb, b, v::kSameLayerAs, a);
}

Iri add_training(KB& kb, const Iri& config, std::string_view strategy_name) {
    require_type(kb, config, v::kANNConfiguration, "configuration");
    Iri strategy = fresh(kb, strategy_name, "training strategy");
    insert(kb, strategy, v::kRdfType, v::kTrainingStrategy);
    insert(kb, config, v::kHasTrainingStrategy, strategy);
    return strategy;
}

Iri add_session(KB& kb, const Iri& strategy, std::string_view name, std::optional<Iri> after) {
    require_type(kb, strategy, v::kTrainingStrategy, "training strategy");
    Iri session = fresh(kb, name, "training session");
    if (after) {
        require_type(kb, *after, v::kTrainingSession, "session");
        if (!kb.graph.contains(Triple{strategy, v::kHasTrainingSession, Term{*after}})) {
            throw Error("session '" + after->value() + "' does not belong to strategy '" +
                        strategy.value() + "'");
        }
        if (!kb.graph.match(*after, v::kNextTrainingSession, std::nullopt).empty()) {
            throw Error("session '" + after->value() +
                        "' already has a next session; nextTrainingSession may appear at most once");
        }
    }
    insert(kb, session, v::kRdfType, v::kTrainingSession);
    insert(kb, strategy, v::kHasTrainingSession, session);
    if (after) {
        insert(kb, *after, v::kNextTrainingSession, session);
    }
    return session;
}

Iri add_step(KB& kb, const Iri& session, std::string_view name, const Iri& step_class,
             std::optional<Iri> network, std::optional<Iri> after) {
    require_type(kb, session, v::kTrainingSession, "training session");
    require_subclass(kb, step_class, v::kTrainingStep, "step class");
    if (kb.schema.is_subclass(step_class, v::kTrainingLoop)) {
        throw Error("training loops are created with add_loop");
    }
    Iri step = fresh(kb, name, "training step");
    if (after) {
        require_type(kb, *after, v::kTrainingStep, "step");
        if (!kb.graph.contains(Triple{session, v::kHasTrainingStep, Term{*after}})) {
            throw Error("step '" + after->value() + "' does not belong to session '" +
                        session.value() + "'");
        }
        if (!kb.graph.match(*after, v::kNextTrainingStep, std::nullopt).empty()) {
            throw Error("step '" + after->value() + "' already has a next step");
        }
    }
    insert(kb, step, v::kRdfType, step_class);
    insert(kb, session, v::kHasTrainingStep, step);
    if (network) {
        require_type(kb, *network, v::kNetwork, "network");
        insert(kb, step, v::kTrainsNetwork, *network);
    }
    if (after) {
        insert(kb, *after, v::kNextTrainingStep, step);
    }
    return step;
}

Iri add_loop(KB& kb, const Iri& session, std::string_view name, std::int64_t count,
             const std::vector<Iri>& inner, std::optional<Iri> after) {
    require_type(kb, session, v::kTrainingSession, "training session");
    if (count < 1) {
        throw Error("loop count must be at least 1");
    }
    if (inner.empty()) {
        throw Error("a training loop needs at least one inner step");
    }
    for (const Iri& step : inner) {
        require_type(kb, step, v::kTrainingStep, "inner step");
        if (!kb.graph.contains(Triple{session, v::kHasTrainingStep, Term{step}})) {
            throw Error("inner step '" + step.value() + "' does not belong to session '" +
                        session.value() + "'");
        }
        if (!kb.graph.match(std::nullopt, v::kHasLoopStep, Term{step}).empty()) {
            throw Error("step '" + step.value() + "' is already part of a loop");
        }
    }
    Iri loop = fresh(kb, name, "training loop");
    if (after) {
        require_type(kb, *after, v::kTrainingStep, "step");
        if (!kb.graph.match(*after, v::kNextTrainingStep, std::nullopt).empty()) {
            throw Error("step '" + after->value() + "' already has a next step");
        }
    }
    insert(kb, loop, v::kRdfType, v::kTrainingLoop);
    insert(kb, session, v::kHasTrainingStep, loop);
    insert(kb, loop, v::kLoopCount, Literal::integer(count));
    for (std::size_t i = 0; i < inner.size(); ++i) {
        insert(kb, loop, v::kHasLoopStep, inner[i]);
        if (i + 1 < inner.size()) {
            insert(kb, inner[i], v::kNextTrainingStep, inner[i + 1]);
        }
    }
    if (after) {
        insert(kb, *after, v::kNextTrainingStep, loop);
    }
    return loop;
}

Iri add_dataset(KB& kb, std::string_view name, const Iri& dataset_class,
                std::optional<Iri> characterization_class) {
    require_subclass(kb, dataset_class, v::kDataset, "dataset class");
    Iri dataset = fresh(kb, name, "dataset");
    insert(kb, dataset, v::kRdfType, dataset_class);
    if (characterization_class) {
        require_subclass(kb, *characterization_class, v::kDataCharacterization,
                         "data characterization");
        Iri ch = fresh(kb, std::string(name) + "_characterization", "characterization");
        insert(kb, ch, v::kRdfType, *characterization_class);
        insert(kb, dataset, v::kHasDataType, ch);
    }
    return dataset;
}

void set_transient(KB& kb, const Iri& dataset) {
    require_type(kb, dataset, v::kDataset, "dataset");
    insert(kb, dataset, v::kIsTransient, Literal::integer(1));
}

void set_produces(KB& kb, const Iri& step, const Iri& dataset) {
    require_type(kb, step, v::kTrainingSingleForwardOnly, "forward-only step");
    require_type(kb, dataset, v::kDataset, "dataset");
    insert(kb, step, v::kProducesDataset, dataset);
}

Iri add_pipe(KB& kb, std::string_view name, const Iri& dataset, const Iri& layer) {
    require_type(kb, dataset, v::kDataset, "dataset");
    require_type(kb, layer, v::kInOutLayer, "pipe layer");
    Iri pipe = fresh(kb, name, "dataset pipe");
    insert(kb, pipe, v::kRdfType, v::kDatasetPipe);
    insert(kb, pipe, v::kPipeDataset, dataset);
    insert(kb, pipe, v::kPipeLayer, layer);
    return pipe;
}

Iri add_function(KB& kb, std::string_view name, const Iri& function_class,
                 std::optional<std::string_view> math) {
    require_subclass(kb, function_class, v::kFunction, "function class");
    Iri fn = fresh(kb, name, "function");
    insert(kb, fn, v::kRdfType, function_class);
    if (math) {
        insert(kb, fn, v::kFunctionMath, Literal::str(std::string(*math)));
    }
    return fn;
}

Iri add_objective(KB& kb, const Iri& network, std::string_view name, const Iri& objective_class) {
    require_subclass(kb, objective_class, v::kObjectiveFunction, "objective class");
    Iri objective = add_function(kb, name, objective_class);
    link_objective(kb, network, objective);
    return objective;
}

void link_objective(KB& kb, const Iri& network, const Iri& objective) {
    require_type(kb, network, v::kNetwork, "network");
    require_type(kb, objective, v::kObjectiveFunction, "objective");
    if (!kb.graph.match(network, v::kHasObjectiveFunction, std::nullopt).empty()) {
        throw Error("network '" + network.value() + "' already has an objective function");
    }
    insert(kb, network, v::kHasObjectiveFunction, objective);
}

Iri add_optimizer(KB& kb, const Iri& step, std::string_view name) {
    require_type(kb, step, v::kTrainingStep, "training step");
    Iri opt = kb_name(kb, name);
    if (!is_defined(kb, opt)) {
        insert(kb, opt, v::kRdfType, v::kTrainingOptimizer);
    } else if (!has_type(kb, opt, v::kTrainingOptimizer)) {
        throw Error("'" + opt.value() + "' exists and is not a TrainingOptimizer");
    }
    insert(kb, step, v::kHasTrainingOptimizer, opt);
    return opt;
}

void set_updates_layer(KB& kb, const Iri& step, const Iri& layer) {
    require_type(kb, step, v::kTrainingStep, "training step");
    require_type(kb, layer, v::kLayer, "layer");
    insert(kb, step, v::kUpdatesLayer, layer);
}

Iri add_trained_model(KB& kb, std::string_view name) {
    Iri model = fresh(kb, name, "trained model");
    insert(kb, model, v::kRdfType, v::kTrainedModel);
    return model;
}

Iri add_evaluation(KB& kb, std::string_view name, const Iri& network, const Iri& config,
                   const Iri& strategy, const Iri& metric, const Iri& dataset, double score,
                   std::optional<std::string_view> date) {
    require_type(kb, network, v::kNetwork, "network");
    require_type(kb, config, v::kANNConfiguration, "configuration");
    require_type(kb, strategy, v::kTrainingStrategy, "training strategy");
    require_type(kb, metric, v::kMetric, "metric");
    require_type(kb, dataset, v::kDataset, "dataset");
    Iri eval = fresh(kb, name, "evaluation");
    insert(kb, eval, v::kRdfType, v::kNetworkEvaluation);
    insert(kb, eval, v::kEvaluatesNetwork, network);
    insert(kb, eval, v::kEvaluatesConfiguration, config);
    insert(kb, eval, v::kBasedOnTrainingStrategy, strategy);
    insert(kb, eval, v::kHasEvaluationMetric, metric);
    insert(kb, eval, v::kEvaluatesOnDataset, dataset);
    insert(kb, eval, v::kEvalScore, Literal::real(score));
    if (date) {
        insert(kb, eval, v::kEvalDate, Literal::date_time(std::string(*date)));
    }
    return eval;
}

}  // namespace annetto
