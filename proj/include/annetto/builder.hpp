#pragma once

#include "annetto/kb.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

// Typed construction layer. Every operation emits well-formed triples and
// enforces the ontology's build-time rules (layer exclusivity, connection
// cardinality, chain uniqueness), so builder output passes validation.
// All operations throw Error on misuse.

namespace annetto {

// Resolves a local name against the graph's default namespace.
Iri kb_name(const KB& kb, std::string_view name);

Iri add_configuration(KB& kb, std::string_view name);

// Creates a Network inside config; when task_class (a TaskCharacterization
// subclass) is given, a task individual "<name>_task" is created and linked
// via hasTaskType.
Iri add_network(KB& kb, const Iri& config, std::string_view name,
                std::optional<Iri> task_class = std::nullopt);

// Creates a layer of layer_class (a Layer subclass) inside network. When
// activation_class (an ActivationFunction subclass) is given, a shared
// function individual is created on first use and linked via
// hasActivationFunction.
Iri add_layer(KB& kb, const Iri& network, std::string_view name, const Iri& layer_class,
              std::optional<Iri> activation_class = std::nullopt);

// Inserts (from, nextLayer, to) and the mirrored previousLayer triple.
// Both layers must belong to the same network; fan-out beyond one is only
// allowed out of SeparationLayers and fan-in beyond one only into
// AggregationLayers; InputLayers accept no incoming and OutputLayers no
// outgoing connections.
void connect(KB& kb, const Iri& from, const Iri& to);

// Declares two layers of different networks to be physically the same;
// both directions of sameLayerAs are inserted.
void same_layer(KB& kb, const Iri& a, const Iri& b);

Iri add_training(KB& kb, const Iri& config, std::string_view strategy_name);

// Appends a session to the strategy; `after` chains it behind an existing
// session of the same strategy (at most one successor per session).
Iri add_session(KB& kb, const Iri& strategy, std::string_view name,
                std::optional<Iri> after = std::nullopt);

// Adds a step of step_class (TrainingSingle, TrainingSingleForwardOnly, or
// another non-loop TrainingStep subclass) to the session. `network` links
// via trainsNetwork; `after` chains via nextTrainingStep.
Iri add_step(KB& kb, const Iri& session, std::string_view name, const Iri& step_class,
             std::optional<Iri> network = std::nullopt,
             std::optional<Iri> after = std::nullopt);

// Wraps existing steps of the session into a TrainingLoop repeated `count`
// times: the loop is linked to each inner step via hasLoopStep and the
// inner steps are chained in the given order.
Iri add_loop(KB& kb, const Iri& session, std::string_view name, std::int64_t count,
             const std::vector<Iri>& inner, std::optional<Iri> after = std::nullopt);

Iri add_dataset(KB& kb, std::string_view name, const Iri& dataset_class,
                std::optional<Iri> characterization_class = std::nullopt);

// Marks a dataset as transient (created during training, not persisted).
void set_transient(KB& kb, const Iri& dataset);

// Records that a forward-only step emits the given dataset.
void set_produces(KB& kb, const Iri& step, const Iri& dataset);

// Connects a dataset to an input or output layer through a DatasetPipe.
Iri add_pipe(KB& kb, std::string_view name, const Iri& dataset, const Iri& layer);

// A reusable Function individual (activation, objective, metric); `math`
// stores its mathematical form via function_math.
Iri add_function(KB& kb, std::string_view name, const Iri& function_class,
                 std::optional<std::string_view> math = std::nullopt);

Iri add_objective(KB& kb, const Iri& network, std::string_view name, const Iri& objective_class);
void link_objective(KB& kb, const Iri& network, const Iri& objective);

Iri add_optimizer(KB& kb, const Iri& step, std::string_view name);

void set_updates_layer(KB& kb, const Iri& step, const Iri& layer);

Iri add_trained_model(KB& kb, std::string_view name);

Iri add_evaluation(KB& kb, std::string_view name, const Iri& network, const Iri& config,
                   const Iri& strategy, const Iri& metric, const Iri& dataset, double score,
                   std::optional<std::string_view> date = std::nullopt);

}  // namespace annetto
