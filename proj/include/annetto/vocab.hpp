#pragma once

#include "annetto/term.hpp"

// The ANNETT-O vocabulary plus the handful of RDF/RDFS/OWL/XSD terms the
// engine understands. Everything lives under http://w3id.org/annett-o/
// unless noted.

namespace annetto::vocab {

inline constexpr std::string_view kInstanceNs = "http://w3id.org/annett-o/";
inline constexpr std::string_view kXsdNs = "http://www.w3.org/2001/XMLSchema#";

// Standard vocabulary.
inline const Iri kRdfType{"http://www.w3.org/1999/02/22-rdf-syntax-ns#type"};
inline const Iri kRdfsSubClassOf{"http://www.w3.org/2000/01/rdf-schema#subClassOf"};
inline const Iri kRdfsDomain{"http://www.w3.org/2000/01/rdf-schema#domain"};
inline const Iri kRdfsRange{"http://www.w3.org/2000/01/rdf-schema#range"};
inline const Iri kOwlClass{"http://www.w3.org/2002/07/owl#Class"};
inline const Iri kOwlObjectProperty{"http://www.w3.org/2002/07/owl#ObjectProperty"};
inline const Iri kOwlDatatypeProperty{"http://www.w3.org/2002/07/owl#DatatypeProperty"};
inline const Iri kOwlInverseOf{"http://www.w3.org/2002/07/owl#inverseOf"};
inline const Iri kOwlSymmetricProperty{"http://www.w3.org/2002/07/owl#SymmetricProperty"};

inline const Iri kXsdString{"http://www.w3.org/2001/XMLSchema#string"};
inline const Iri kXsdInteger{"http://www.w3.org/2001/XMLSchema#integer"};
inline const Iri kXsdDouble{"http://www.w3.org/2001/XMLSchema#double"};
inline const Iri kXsdDateTime{"http://www.w3.org/2001/XMLSchema#dateTime"};

// Ontology classes.
inline const Iri kANNConfiguration{"http://w3id.org/annett-o/ANNConfiguration"};
inline const Iri kNetwork{"http://w3id.org/annett-o/Network"};
inline const Iri kLayer{"http://w3id.org/annett-o/Layer"};
inline const Iri kHiddenLayer{"http://w3id.org/annett-o/HiddenLayer"};
inline const Iri kInOutLayer{"http://w3id.org/annett-o/InOutLayer"};
inline const Iri kActivationLayer{"http://w3id.org/annett-o/ActivationLayer"};
inline const Iri kAggregationLayer{"http://w3id.org/annett-o/AggregationLayer"};
inline const Iri kSeparationLayer{"http://w3id.org/annett-o/SeparationLayer"};
inline const Iri kModificationLayer{"http://w3id.org/annett-o/ModificationLayer"};
inline const Iri kFullyConnectedLayer{"http://w3id.org/annett-o/FullyConnectedLayer"};
inline const Iri kConcatLayer{"http://w3id.org/annett-o/ConcatLayer"};
inline const Iri kInputLayer{"http://w3id.org/annett-o/InputLayer"};
inline const Iri kOutputLayer{"http://w3id.org/annett-o/OutputLayer"};
inline const Iri kTrainingStrategy{"http://w3id.org/annett-o/TrainingStrategy"};
inline const Iri kTrainingSession{"http://w3id.org/annett-o/TrainingSession"};
inline const Iri kTrainingStep{"http://w3id.org/annett-o/TrainingStep"};
inline const Iri kTrainingLoop{"http://w3id.org/annett-o/TrainingLoop"};
inline const Iri kTrainingSingle{"http://w3id.org/annett-o/TrainingSingle"};
inline const Iri kTrainingSingleForwardOnly{"http://w3id.org/annett-o/TrainingSingleForwardOnly"};
inline const Iri kTrainingOptimizer{"http://w3id.org/annett-o/TrainingOptimizer"};
inline const Iri kNetworkEvaluation{"http://w3id.org/annett-o/NetworkEvaluation"};
inline const Iri kFunction{"http://w3id.org/annett-o/Function"};
inline const Iri kActivationFunction{"http://w3id.org/annett-o/ActivationFunction"};
inline const Iri kRelu{"http://w3id.org/annett-o/Relu"};
inline const Iri kSoftmax{"http://w3id.org/annett-o/Softmax"};
inline const Iri kObjectiveFunction{"http://w3id.org/annett-o/ObjectiveFunction"};
inline const Iri kCostFunction{"http://w3id.org/annett-o/CostFunction"};
inline const Iri kMetric{"http://w3id.org/annett-o/Metric"};
inline const Iri kAccuracy{"http://w3id.org/annett-o/Accuracy"};
inline const Iri kDataset{"http://w3id.org/annett-o/Dataset"};
inline const Iri kLabelset{"http://w3id.org/annett-o/Labelset"};
inline const Iri kDatasetPipe{"http://w3id.org/annett-o/DatasetPipe"};
inline const Iri kTrainedModel{"http://w3id.org/annett-o/TrainedModel"};
inline const Iri kTaskCharacterization{"http://w3id.org/annett-o/TaskCharacterization"};
inline const Iri kClustering{"http://w3id.org/annett-o/Clustering"};
inline const Iri kClassification{"http://w3id.org/annett-o/Classification"};
inline const Iri kGeneration{"http://w3id.org/annett-o/Generation"};
inline const Iri kDiscrimination{"http://w3id.org/annett-o/Discrimination"};
inline const Iri kAdversarial{"http://w3id.org/annett-o/Adversarial"};
inline const Iri kDataCharacterization{"http://w3id.org/annett-o/DataCharacterization"};

// Object properties.
inline const Iri kHasNetwork{"http://w3id.org/annett-o/hasNetwork"};
inline const Iri kHasLayer{"http://w3id.org/annett-o/hasLayer"};
inline const Iri kNextLayer{"http://w3id.org/annett-o/nextLayer"};
inline const Iri kPreviousLayer{"http://w3id.org/annett-o/previousLayer"};
inline const Iri kSameLayerAs{"http://w3id.org/annett-o/sameLayerAs"};
inline const Iri kHasActivationFunction{"http://w3id.org/annett-o/hasActivationFunction"};
inline const Iri kHasTrainingStrategy{"http://w3id.org/annett-o/hasTrainingStrategy"};
inline const Iri kHasTrainingSession{"http://w3id.org/annett-o/hasTrainingSession"};
inline const Iri kNextTrainingSession{"http://w3id.org/annett-o/nextTrainingSession"};
inline const Iri kHasTrainingStep{"http://w3id.org/annett-o/hasTrainingStep"};
inline const Iri kNextTrainingStep{"http://w3id.org/annett-o/nextTrainingStep"};
inline const Iri kHasTaskType{"http://w3id.org/annett-o/hasTaskType"};
inline const Iri kUpdatesLayer{"http://w3id.org/annett-o/updatesLayer"};
inline const Iri kEvaluatesNetwork{"http://w3id.org/annett-o/evaluatesNetwork"};
inline const Iri kBasedOnTrainingStrategy{"http://w3id.org/annett-o/basedOnTrainingStrategy"};
inline const Iri kHasEvaluationMetric{"http://w3id.org/annett-o/hasEvaluationMetric"};
inline const Iri kEvaluatesOnDataset{"http://w3id.org/annett-o/evaluatesOnDataset"};
inline const Iri kEvaluatesConfiguration{"http://w3id.org/annett-o/evaluatesConfiguration"};
inline const Iri kPipeLayer{"http://w3id.org/annett-o/pipeLayer"};
inline const Iri kPipeDataset{"http://w3id.org/annett-o/pipeDataset"};
inline const Iri kHasObjectiveFunction{"http://w3id.org/annett-o/hasObjectiveFunction"};
inline const Iri kHasTrainingOptimizer{"http://w3id.org/annett-o/hasTrainingOptimizer"};
inline const Iri kTrainsNetwork{"http://w3id.org/annett-o/trainsNetwork"};
inline const Iri kHasLoopStep{"http://w3id.org/annett-o/hasLoopStep"};
inline const Iri kProducesDataset{"http://w3id.org/annett-o/producesDataset"};
inline const Iri kHasDataType{"http://w3id.org/annett-o/hasDataType"};

// Data properties.
inline const Iri kEvalScore{"http://w3id.org/annett-o/eval_score"};
inline const Iri kEvalDate{"http://w3id.org/annett-o/eval_date"};
inline const Iri kFunctionMath{"http://w3id.org/annett-o/function_math"};
inline const Iri kLoopCount{"http://w3id.org/annett-o/loop_count"};
inline const Iri kLoopCondition{"http://w3id.org/annett-o/loop_condition"};
inline const Iri kIsTransient{"http://w3id.org/annett-o/is_transient"};

}  // namespace annetto::vocab
