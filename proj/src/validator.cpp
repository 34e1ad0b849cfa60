#include "annetto/validator.hpp"

#include "annetto/vocab.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace annetto {

namespace v = vocab;

namespace {

// Shared lookups for one validation pass over an immutable KB.
struct Context {
    const KB& kb;
    std::vector<Violation>* violations;
    std::vector<Violation>* warnings;

    void flag(const std::string& rule, const Iri& subject, const std::string& message) const {
        violations->push_back({rule, subject, message});
    }

    void warn(const std::string& rule, const Iri& subject, const std::string& message) const {
        warnings->push_back({rule, subject, message});
    }

    std::size_t count(const Iri& s, const Iri& p) const {
        return kb.graph.match(s, p, std::nullopt).size();
    }

    std::size_t count_incoming(const Iri& p, const Iri& o) const {
        return kb.graph.match(std::nullopt, p, Term{o}).size();
    }

    std::vector<Iri> objects_of(const Iri& s, const Iri& p) const {
        std::vector<Iri> out;
        for (const Triple& t : kb.graph.match(s, p, std::nullopt)) {
            if (const Iri* o = as_iri(t.object)) out.push_back(*o);
        }
        return out;
    }
};

void check_networks(const Context& c) {
    for (const Iri& net : instances_of(c.kb, v::kNetwork)) {
        if (c.count_incoming(v::kHasNetwork, net) == 0) {
            c.flag("R1", net, "network is not associated with any ANNConfiguration");
        }
    }
}

void check_objectives(const Context& c) {
    for (const Iri& net : instances_of(c.kb, v::kNetwork)) {
        std::size_t objectives = c.count(net, v::kHasObjectiveFunction);
        if (objectives > 1) {
            c.flag("R2", net,
                   "network has " + std::to_string(objectives) + " objective functions, expected one");
            continue;
        }
        if (objectives == 1) continue;
        // No objective: an error only for networks some non-forward-only step trains.
        bool trained = false;
        for (const Triple& t : c.kb.graph.match(std::nullopt, v::kTrainsNetwork, Term{net})) {
            if (!has_type(c.kb, t.subject, v::kTrainingSingleForwardOnly)) {
                trained = true;
                break;
            }
        }
        if (trained) {
            c.flag("R2", net, "trained network has no objective function");
        } else {
            c.warn("R2", net, "network has no objective function (not trained by any step)");
        }
    }
}

void check_layer_ownership(const Context& c) {
    for (const Iri& layer : instances_of(c.kb, v::kLayer)) {
        std::size_t owners = c.count_incoming(v::kHasLayer, layer);
        if (owners != 1) {
            c.flag("R3", layer,
                   "layer belongs to " + std::to_string(owners) + " networks, expected exactly one");
        }
    }
}

void check_connection_cardinality(const Context& c) {
    for (const Iri& layer : instances_of(c.kb, v::kLayer)) {
        std::size_t out_degree = c.count(layer, v::kNextLayer);
        if (out_degree > 1 && !has_type(c.kb, layer, v::kSeparationLayer)) {
            c.flag("R4", layer,
                   "layer connects to " + std::to_string(out_degree) +
                       " layers but is not a SeparationLayer");
        }
        std::size_t in_degree = c.count(layer, v::kPreviousLayer);
        if (in_degree > 1 && !has_type(c.kb, layer, v::kAggregationLayer)) {
            c.flag("R4", layer,
                   "layer has " + std::to_string(in_degree) +
                       " incoming layers but is not an AggregationLayer");
        }
    }
}

void check_boundary_layers(const Context& c) {
    for (const Iri& layer : instances_of(c.kb, v::kInputLayer)) {
        if (c.count(layer, v::kPreviousLayer) > 0 || c.count_incoming(v::kNextLayer, layer) > 0) {
            c.flag("R5", layer, "InputLayer has layers connecting into it");
        }
    }
    for (const Iri& layer : instances_of(c.kb, v::kOutputLayer)) {
        if (c.count(layer, v::kNextLayer) > 0 || c.count_incoming(v::kPreviousLayer, layer) > 0) {
            c.flag("R5", layer, "OutputLayer has layers connecting from it");
        }
    }
}

void check_mirrored_connections(const Context& c) {
    for (const Triple& t : c.kb.graph.match(std::nullopt, v::kNextLayer, std::nullopt)) {
        const Iri* to = as_iri(t.object);
        if (!to || !c.kb.graph.contains(Triple{*to, v::kPreviousLayer, Term{t.subject}})) {
            c.flag("R6", t.subject,
                   "nextLayer to '" + (to ? to->value() : std::string("?")) +
                       "' has no mirrored previousLayer");
        }
    }
    for (const Triple& t : c.kb.graph.match(std::nullopt, v::kPreviousLayer, std::nullopt)) {
        const Iri* from = as_iri(t.object);
        if (!from || !c.kb.graph.contains(Triple{*from, v::kNextLayer, Term{t.subject}})) {
            c.flag("R6", t.subject,
                   "previousLayer to '" + (from ? from->value() : std::string("?")) +
                       "' has no mirrored nextLayer");
        }
    }
}

void check_same_layer(const Context& c) {
    for (const Triple& t : c.kb.graph.match(std::nullopt, v::kSameLayerAs, std::nullopt)) {
        const Iri* other = as_iri(t.object);
        if (!other) continue;
        if (!c.kb.graph.contains(Triple{*other, v::kSameLayerAs, Term{t.subject}})) {
            c.flag("R7", t.subject, "sameLayerAs '" + other->value() + "' is not symmetric");
        }
        std::set<Iri> lhs_nets, rhs_nets;
        for (const Triple& owner : c.kb.graph.match(std::nullopt, v::kHasLayer, Term{t.subject})) {
            lhs_nets.insert(owner.subject);
        }
        for (const Triple& owner : c.kb.graph.match(std::nullopt, v::kHasLayer, Term{*other})) {
            rhs_nets.insert(owner.subject);
        }
        bool shared = t.subject == *other;
        for (const Iri& n : lhs_nets) {
            if (rhs_nets.count(n)) shared = true;
        }
        if (shared) {
            c.flag("R7", t.subject,
                   "sameLayerAs '" + other->value() + "' links layers of the same network");
        }
    }
}

void check_connection_network(const Context& c) {
    for (const Triple& t : c.kb.graph.match(std::nullopt, v::kNextLayer, std::nullopt)) {
        const Iri* to = as_iri(t.object);
        if (!to) continue;
        std::set<Iri> from_nets, to_nets;
        for (const Triple& owner : c.kb.graph.match(std::nullopt, v::kHasLayer, Term{t.subject})) {
            from_nets.insert(owner.subject);
        }
        for (const Triple& owner : c.kb.graph.match(std::nullopt, v::kHasLayer, Term{*to})) {
            to_nets.insert(owner.subject);
        }
        if (from_nets.empty() || to_nets.empty()) continue;  // R3 reports missing ownership
        bool shared = false;
        for (const Iri& n : from_nets) {
            if (to_nets.count(n)) shared = true;
        }
        if (!shared) {
            c.flag("R8", t.subject,
                   "nextLayer to '" + to->value() + "' crosses network boundaries");
        }
    }
}

void check_strategies(const Context& c) {
    for (const Iri& strategy : instances_of(c.kb, v::kTrainingStrategy)) {
        if (c.count(strategy, v::kHasTrainingSession) == 0) {
            c.flag("R9", strategy, "training strategy has no training session");
        }
    }
}

void check_sessions_have_steps(const Context& c) {
    for (const Iri& session : instances_of(c.kb, v::kTrainingSession)) {
        if (c.count(session, v::kHasTrainingStep) == 0) {
            c.flag("R10", session, "training session has no training step");
        }
    }
}

// Linear, acyclic successor chains: out-degree <= 1, in-degree <= 1, no cycles.
void check_chain(const Context& c, const std::string& rule, const std::vector<Iri>& nodes,
                 const Iri& edge, const char* what) {
    std::set<Iri> node_set(nodes.begin(), nodes.end());
    std::map<Iri, std::vector<Iri>> successors;
    std::map<Iri, std::size_t> in_degree;
    for (const Iri& n : nodes) {
        for (const Iri& succ : c.objects_of(n, edge)) {
            if (!node_set.count(succ)) continue;
            successors[n].push_back(succ);
            ++in_degree[succ];
        }
    }
    for (const Iri& n : nodes) {
        if (successors[n].size() > 1) {
            c.flag(rule, n, std::string(what) + " has more than one successor");
        }
        if (in_degree[n] > 1) {
            c.flag(rule, n, std::string(what) + " has more than one predecessor");
        }
    }
    // Cycle detection over the successor relation (3-color DFS).
    std::map<Iri, int> state;
    std::function<void(const Iri&)> dfs = [&](const Iri& node) {
        state[node] = 1;
        for (const Iri& succ : successors[node]) {
            if (state[succ] == 1) {
                c.flag(rule, succ, std::string(what) + " chain contains a cycle");
            } else if (state[succ] == 0) {
                dfs(succ);
            }
        }
        state[node] = 2;
    };
    for (const Iri& n : nodes) {
        if (state[n] == 0) dfs(n);
    }
}

void check_session_chains(const Context& c) {
    check_chain(c, "R11", instances_of(c.kb, v::kTrainingSession), v::kNextTrainingSession,
                "training session");
}

void check_step_chains(const Context& c) {
    // Steps nested inside loops are excluded: only the top-level sequence of
    // each session must be linear.
    std::set<Iri> loop_inner;
    for (const Triple& t : c.kb.graph.match(std::nullopt, v::kHasLoopStep, std::nullopt)) {
        if (const Iri* step = as_iri(t.object)) loop_inner.insert(*step);
    }
    for (const Iri& session : instances_of(c.kb, v::kTrainingSession)) {
        std::vector<Iri> top_level;
        for (const Iri& step : c.objects_of(session, v::kHasTrainingStep)) {
            if (!loop_inner.count(step)) top_level.push_back(step);
        }
        std::sort(top_level.begin(), top_level.end());
        check_chain(c, "R12", top_level, v::kNextTrainingStep, "training step");
    }
    for (const Iri& loop : instances_of(c.kb, v::kTrainingLoop)) {
        bool has_condition = c.count(loop, v::kLoopCondition) > 0;
        bool has_count = false;
        for (const Triple& t : c.kb.graph.match(loop, v::kLoopCount, std::nullopt)) {
            const Literal* lit = as_literal(t.object);
            if (lit && lit->type() == LiteralType::Integer && lit->integer_value() >= 1) {
                has_count = true;
            }
        }
        if (!has_count && !has_condition) {
            c.flag("R12", loop, "training loop has neither loop_count >= 1 nor a loop_condition");
        }
    }
}

void check_evaluations(const Context& c) {
    for (const Iri& eval : instances_of(c.kb, v::kNetworkEvaluation)) {
        if (c.count(eval, v::kEvaluatesNetwork) == 0) {
            c.flag("R13", eval, "evaluation does not reference a network");
        }
        bool has_score = false;
        for (const Triple& t : c.kb.graph.match(eval, v::kEvalScore, std::nullopt)) {
            const Literal* lit = as_literal(t.object);
            if (lit && lit->type() == LiteralType::Double) has_score = true;
        }
        if (!has_score) {
            c.flag("R13", eval, "evaluation has no eval_score double");
        }
        if (c.count(eval, v::kHasEvaluationMetric) == 0) {
            c.flag("R13", eval, "evaluation has no metric");
        }
    }
}

void check_pipes(const Context& c) {
    for (const Iri& pipe : instances_of(c.kb, v::kDatasetPipe)) {
        std::vector<Iri> layers = c.objects_of(pipe, v::kPipeLayer);
        std::vector<Iri> datasets = c.objects_of(pipe, v::kPipeDataset);
        if (layers.empty()) {
            c.flag("R14", pipe, "dataset pipe has no layer endpoint");
        }
        if (datasets.empty()) {
            c.flag("R14", pipe, "dataset pipe has no dataset endpoint");
        }
        for (const Iri& layer : layers) {
            if (!has_type(c.kb, layer, v::kInOutLayer)) {
                c.flag("R14", pipe, "pipe layer '" + layer.value() + "' is not an InOutLayer");
            }
        }
        for (const Iri& ds : datasets) {
            if (!has_type(c.kb, ds, v::kDataset)) {
                c.flag("R14", pipe, "pipe dataset '" + ds.value() + "' is not a Dataset");
            }
        }
    }
}

void check_activations(const Context& c) {
    for (const Iri& layer : instances_of(c.kb, v::kActivationLayer)) {
        bool ok = false;
        for (const Iri& fn : c.objects_of(layer, v::kHasActivationFunction)) {
            if (has_type(c.kb, fn, v::kActivationFunction)) ok = true;
        }
        if (!ok) {
            c.flag("R15", layer, "activation layer has no ActivationFunction");
        }
    }
}

// Advisory: a non-loop step is expected to reference exactly one network.
void check_step_networks(const Context& c) {
    for (const Iri& step : instances_of(c.kb, v::kTrainingStep)) {
        if (has_type(c.kb, step, v::kTrainingLoop)) continue;
        std::size_t nets = c.count(step, v::kTrainsNetwork);
        if (nets != 1) {
            c.warn("W1", step,
                   "training step references " + std::to_string(nets) +
                       " networks, expected one");
        }
    }
}

// Strict feedforward mode: the nextLayer relation must be acyclic inside
// every network.
void check_feedforward(const Context& c) {
    for (const Iri& net : instances_of(c.kb, v::kNetwork)) {
        std::vector<Iri> layers = c.objects_of(net, v::kHasLayer);
        std::set<Iri> layer_set(layers.begin(), layers.end());
        std::map<Iri, int> state;
        bool cyclic = false;
        std::function<void(const Iri&)> dfs = [&](const Iri& node) {
            state[node] = 1;
            for (const Iri& succ : c.objects_of(node, v::kNextLayer)) {
                if (!layer_set.count(succ)) continue;
                if (state[succ] == 1) {
                    cyclic = true;
                } else if (state[succ] == 0) {
                    dfs(succ);
                }
            }
            state[node] = 2;
        };
        for (const Iri& start : layers) {
            if (state[start] == 0) dfs(start);
        }
        if (cyclic) {
            c.flag("R16", net, "network has a nextLayer cycle (strict feedforward mode)");
        }
    }
}

}  // namespace

ValidationReport validate(const KB& kb, const ValidateOptions& options) {
    ValidationReport report;
    Context c{kb, &report.violations, &report.warnings};

    check_networks(c);
    check_objectives(c);
    check_layer_ownership(c);
    check_connection_cardinality(c);
    check_boundary_layers(c);
    check_mirrored_connections(c);
    check_same_layer(c);
    check_connection_network(c);
    check_strategies(c);
    check_sessions_have_steps(c);
    check_session_chains(c);
    check_step_chains(c);
    check_evaluations(c);
    check_pipes(c);
    check_activations(c);
    check_step_networks(c);
    for (int i = 1; i <= 15; ++i) {
        report.checked_rule_ids.push_back("R" + std::to_string(i));
    }
    if (options.strict_feedforward) {
        check_feedforward(c);
        report.checked_rule_ids.push_back("R16");
    }

    auto order = [](const Violation& a, const Violation& b) {
        auto rank = [](const std::string& id) {
            return std::stoi(id.substr(1));
        };
        if (rank(a.rule_id) != rank(b.rule_id)) return rank(a.rule_id) < rank(b.rule_id);
        if (a.subject != b.subject) return a.subject < b.subject;
        return a.message < b.message;
    };
    std::sort(report.violations.begin(), report.violations.end(), order);
    std::sort(report.warnings.begin(), report.warnings.end(), order);
    return report;
}

std::string report_to_text(const ValidationReport& report, const PrefixMap& prefixes) {
    std::ostringstream out;
    for (const Violation& violation : report.violations) {
        std::string subject = violation.subject.value().empty()
                                  ? std::string("-")
                                  : prefixes.shrink(violation.subject.value())
                                        .value_or(violation.subject.value());
        out << violation.rule_id << "\t" << subject << "\t" << violation.message << "\n";
    }
    return out.str();
}

}  // namespace annetto
