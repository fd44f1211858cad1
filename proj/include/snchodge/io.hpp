#pragma once

#include "snchodge/geometries.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace snchodge {

struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Serialized model: the variety plus named bundles and classes.
struct InputModel {
    SncVariety variety;
    std::map<std::string, std::vector<std::vector<Scalar>>> bundles;
    std::map<std::string, std::vector<std::vector<Scalar>>> named_classes;
    std::vector<std::string> notes;
};

InputModel model_of(const Scenario& s);

// Canonical JSON text of a model; parsing it back is the identity.
std::string serialize_model(const InputModel& m);

// Parses a document produced by serialize_model (or hand-written in the same
// schema). Throws ParseError with a line position for malformed JSON and
// SchemaError with a field path for structural problems. The environment
// variable SNC_HODGE_MAX_DIM (default 512) caps every coordinate dimension.
InputModel parse_model(const std::string& text);
InputModel parse_model_file(const std::string& path);

std::uint64_t fnv1a_digest(const std::string& data);

}  // namespace snchodge
