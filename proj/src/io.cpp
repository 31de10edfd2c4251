#include "relcol/io.hpp"

namespace relcol {

using nlohmann::json;

namespace {

int require_int(const json& value, const char* what) {
    if (!value.is_number_integer())
        throw std::invalid_argument(std::string(what) + " must be an integer");
    return value.get<int>();
}

json parse_text(const std::string& text) {
    json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded()) throw std::invalid_argument("malformed JSON document");
    return doc;
}

}  // namespace

MultipartiteInstance instance_from_json(const json& doc) {
    if (!doc.is_object())
        throw std::invalid_argument("instance document must be a JSON object");
    if (!doc.contains("t") || !doc.contains("parts"))
        throw std::invalid_argument("instance document needs fields 't' and 'parts'");
    const int t = require_int(doc.at("t"), "'t'");
    const json& parts = doc.at("parts");
    if (!parts.is_array() || parts.empty())
        throw std::invalid_argument("'parts' must be a non-empty integer array");
    std::vector<int> sizes;
    sizes.reserve(parts.size());
    for (const json& p : parts) sizes.push_back(require_int(p, "part size"));
    return make_instance(std::move(sizes), t);
}

MultipartiteInstance parse_instance(const std::string& text) {
    return instance_from_json(parse_text(text));
}

ColoringDocument coloring_from_json(const json& doc) {
    MultipartiteInstance inst = instance_from_json(doc);
    if (!doc.contains("colors"))
        throw std::invalid_argument("coloring document needs a 'colors' field");
    const json& rows = doc.at("colors");
    if (!rows.is_array() || rows.empty())
        throw std::invalid_argument("'colors' must be a non-empty array of rows");
    const int s = inst.part_count();
    CountColoring col;
    col.rows.reserve(rows.size());
    for (const json& row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != s)
            throw std::invalid_argument("every color row needs one entry per part");
        std::vector<int> file_row;
        file_row.reserve(s);
        for (const json& v : row) file_row.push_back(require_int(v, "color count"));
        // Row columns follow the file's part order; store them canonically.
        std::vector<int> canon_row(s, 0);
        for (int orig = 0; orig < s; ++orig)
            canon_row[inst.canonical_index(orig)] = file_row[orig];
        col.rows.push_back(std::move(canon_row));
    }
    return {std::move(inst), std::move(col)};
}

ColoringDocument parse_coloring(const std::string& text) {
    return coloring_from_json(parse_text(text));
}

json instance_to_json(const MultipartiteInstance& inst) {
    json doc;
    doc["t"] = inst.t();
    doc["parts"] = inst.part_sizes();
    return doc;
}

json coloring_to_json(const MultipartiteInstance& inst, const CountColoring& col) {
    json doc = instance_to_json(inst);
    doc["colors"] = col.rows;
    return doc;
}

}  // namespace relcol
