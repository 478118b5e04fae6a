#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "shufcompat/composition.hpp"
#include "shufcompat/enriched.hpp"
#include "shufcompat/intset.hpp"
#include "shufcompat/permutation.hpp"
#include "shufcompat/qsym.hpp"
#include "shufcompat/shuffle.hpp"

namespace shufcompat::cli {

using Json = nlohmann::ordered_json;

enum class OutputFormat { json, tsv, text };

/// What every subcommand hands back: a JSON document, an optional flat table and the exit code.
struct Report {
    Json doc;
    std::optional<std::vector<std::vector<std::string>>> table;
    int exit_code = 0;
};

/// Starts {"command": ..., "parameters": {...}}.
Json make_doc(const std::string& command, Json parameters);

Json to_json(const IntSet& s);
Json to_json(const Composition& c);
Json to_json(const Permutation& p);
Json to_json(const QSymElement& e);
Json to_json(const PowPoly& p);
Json to_json(const StatMultiset& m);
Json to_json(const PairInstance& p);

std::string render(const Report& r, OutputFormat format);

}  // namespace shufcompat::cli
