#pragma once

#include "dc1lab/systems.hpp"

#include <string>

namespace dc1lab {

/// System configs are YAML documents:
///
///   name: golden-mean
///   kind: sft                 # interval-pw-linear | circle-affine | sft
///   metric: symbolic          # absolute | arc | symbolic
///   parameters:
///     alphabet: 2
///     adjacency: [[1, 1], [1, 0]]
///     depth: 2
///
/// Rational parameters are written as strings ("1/3", "0.25").
SystemSpec parse_system_config(const std::string& text);
SystemSpec load_system_config(const std::string& path);

/// Inverse of parse_system_config; the output parses back to an equal spec.
std::string dump_system_config(const SystemSpec& spec);

}  // namespace dc1lab
