#pragma once

#include "annetto/kb.hpp"

#include <string>
#include <vector>

namespace annetto {

struct Violation {
    std::string rule_id;
    Iri subject;
    std::string message;
};

// Result of validate(). Violations are hard rule breaches; warnings carry
// advisory findings: an untrained network without an objective function
// (reported under R2) and a non-loop step that does not reference exactly
// one network (reported under W1). Empty violations means the KB is valid
// under the checked rules.
struct ValidationReport {
    std::vector<Violation> violations;
    std::vector<Violation> warnings;
    std::vector<std::string> checked_rule_ids;

    bool valid() const { return violations.empty(); }
};

struct ValidateOptions {
    // Adds a per-network nextLayer acyclicity check (rule R16). Off by
    // default so recurrent topologies stay describable.
    bool strict_feedforward = false;
};

// Checks the knowledge base against the rule table:
//   R1  every Network belongs to at least one configuration
//   R2  a trained Network has exactly one objective function
//   R3  every Layer belongs to exactly one Network
//   R4  fan-out <= 1 except SeparationLayers; fan-in <= 1 except AggregationLayers
//   R5  InputLayers have no incoming, OutputLayers no outgoing connection
//   R6  nextLayer and previousLayer mirror each other
//   R7  sameLayerAs is symmetric and never intra-network
//   R8  nextLayer endpoints belong to the same Network
//   R9  every TrainingStrategy has at least one TrainingSession
//   R10 every TrainingSession has at least one TrainingStep
//   R11 nextTrainingSession chains are linear and acyclic
//   R12 top-level nextTrainingStep chains are linear and acyclic; every
//       TrainingLoop has loop_count >= 1 or a loop_condition
//   R13 every NetworkEvaluation has a network, a double eval_score, and a metric
//   R14 every DatasetPipe connects an InOutLayer with a Dataset
//   R15 every ActivationLayer has an ActivationFunction
// Rules are independent; one defect may trigger several rules. Validation
// never modifies the graph.
ValidationReport validate(const KB& kb, const ValidateOptions& options = {});

// One "RULE\tSUBJECT\tMESSAGE" line per violation.
std::string report_to_text(const ValidationReport& report, const PrefixMap& prefixes);

}  // namespace annetto
