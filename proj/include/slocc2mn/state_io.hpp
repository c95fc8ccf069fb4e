#pragma once

#include <string>
#include <vector>

#include "slocc2mn/pencil.hpp"

namespace slocc::io {

/// Interchange form of a state: exact scalar strings, never floats, so files
/// are platform-independent ground truth.
struct StateDocument {
    int m = 0;
    int n = 0;
    std::vector<std::vector<std::string>> gamma1;
    std::vector<std::vector<std::string>> gamma2;
};

StateDocument parse_state_document(const std::string& json_text); // ParseError on malformed input
pencil::PencilState to_state(const StateDocument& doc);
StateDocument from_state(const pencil::PencilState& s);

std::string state_to_json(const pencil::PencilState& s, int indent = 2);
std::string label_to_json(const pencil::ClassLabel& label, int indent = 2);

/// One JSON document listing every label of (M, N) and, where constructible,
/// its representative state.
std::string catalog_to_json(int m, int n, int indent = 2);

} // namespace slocc::io
