#pragma once

#include <string>

#include <json.hpp>

#include "relcol/instance.hpp"

namespace relcol {

/// Instance document: {"t": <int>, "parts": [<int>...]}. Parts may appear
/// in any order; the instance canonicalizes them.
MultipartiteInstance instance_from_json(const nlohmann::json& doc);
MultipartiteInstance parse_instance(const std::string& text);

/// Coloring document: the instance fields plus "colors", an array of
/// integer rows. Row columns follow the file's "parts" order and are
/// remapped to canonical order on load.
struct ColoringDocument {
    MultipartiteInstance instance;
    CountColoring coloring;
};

ColoringDocument coloring_from_json(const nlohmann::json& doc);
ColoringDocument parse_coloring(const std::string& text);

/// Emission is always in canonical part order, so emitted documents
/// reparse to identical objects.
nlohmann::json instance_to_json(const MultipartiteInstance& inst);
nlohmann::json coloring_to_json(const MultipartiteInstance& inst,
                                const CountColoring& col);

}  // namespace relcol
