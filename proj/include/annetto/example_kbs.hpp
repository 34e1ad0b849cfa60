#pragma once

#include "annetto/kb.hpp"

#include <filesystem>
#include <string_view>

// Ready-made knowledge bases of increasing complexity: a single-network
// classifier, a generative adversarial network (three Network individuals),
// and an adversarial autoencoder (seven Network individuals). They exercise
// every part of the vocabulary and all validate cleanly, so they double as
// fixtures for the query and validation tooling.

namespace annetto::examples {

KB build_simple_classifier();
KB build_gan();
KB build_aae();

// Declared score constants used by the builders.
inline constexpr double kSimpleClassifierScore = 0.93;
inline constexpr double kGanParzenScore = -120.0;
inline constexpr double kAaeClusteringScore = 0.68;

// The stock queries shipped next to the knowledge bases.
std::string_view query_text(std::string_view name);  // "q1" .. "q4", "q1_prose"

// Writes simple.ttl, gan.ttl, aae.ttl plus q1.rq..q4.rq and q1_prose.rq
// into dir (created if needed). Output is byte-stable across runs.
void export_examples(const std::filesystem::path& dir);

}  // namespace annetto::examples
