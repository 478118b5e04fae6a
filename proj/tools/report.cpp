#include "report.hpp"

#include <sstream>

namespace shufcompat::cli {

Json make_doc(const std::string& command, Json parameters) {
    Json doc;
    doc["command"] = command;
    doc["parameters"] = std::move(parameters);
    return doc;
}

Json to_json(const IntSet& s) { return Json(s.elements()); }
Json to_json(const Composition& c) { return Json(c.parts()); }
Json to_json(const Permutation& p) { return Json(p.letters()); }

Json to_json(const QSymElement& e) {
    Json terms = Json::array();
    for (const auto& [alpha, c] : e.terms())
        terms.push_back({{"composition", to_json(alpha)}, {"coefficient", to_string(c)}});
    return {{"basis", e.basis() == Basis::F ? "F" : "M"}, {"text", e.to_string()}, {"terms", terms}};
}

Json to_json(const PowPoly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"exponents", e}, {"coefficient", to_string(c)}});
    return {{"value_cap", p.value_cap()}, {"text", p.to_string()}, {"terms", terms}};
}

Json to_json(const StatMultiset& m) {
    Json out = Json::array();
    for (const auto& [v, k] : m.counts()) out.push_back({{"value", to_string(v)}, {"count", k}});
    return out;
}

Json to_json(const PairInstance& p) { return {{"pi", to_json(p.first)}, {"sigma", to_json(p.second)}}; }

namespace {

std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

bool is_flat_array(const Json& v) {
    if (!v.is_array()) return false;
    for (const auto& x : v)
        if (x.is_object() || (x.is_array() && !is_flat_array(x))) return false;
    return true;
}

std::string flat_array_text(const Json& v) {
    std::string out = "[";
    bool first = true;
    for (const auto& x : v) {
        if (!first) out += ", ";
        first = false;
        out += x.is_array() ? flat_array_text(x) : scalar_text(x);
    }
    return out + "]";
}

void text_lines(const Json& v, int indent, std::ostringstream& out) {
    std::string pad(indent, ' ');
    if (v.is_object()) {
        for (const auto& [k, x] : v.items()) {
            if (x.is_structured() && !is_flat_array(x)) {
                out << pad << k << ":\n";
                text_lines(x, indent + 2, out);
            } else {
                out << pad << k << ": " << (x.is_array() ? flat_array_text(x) : scalar_text(x)) << "\n";
            }
        }
    } else if (v.is_array()) {
        for (const auto& x : v) {
            if (x.is_structured() && !is_flat_array(x)) {
                out << pad << "-\n";
                text_lines(x, indent + 2, out);
            } else {
                out << pad << "- " << (x.is_array() ? flat_array_text(x) : scalar_text(x)) << "\n";
            }
        }
    } else {
        out << pad << scalar_text(v) << "\n";
    }
}

void flatten(const Json& v, const std::string& path, std::vector<std::vector<std::string>>& rows) {
    if (v.is_object()) {
        for (const auto& [k, x] : v.items()) flatten(x, path.empty() ? k : path + "." + k, rows);
    } else if (v.is_array()) {
        std::size_t i = 0;
        for (const auto& x : v) flatten(x, path + "." + std::to_string(i++), rows);
        if (v.empty()) rows.push_back({path, "[]"});
    } else {
        rows.push_back({path, scalar_text(v)});
    }
}

}  // namespace

std::string render(const Report& r, OutputFormat format) {
    switch (format) {
        case OutputFormat::json: return r.doc.dump(2) + "\n";
        case OutputFormat::text: {
            std::ostringstream out;
            text_lines(r.doc, 0, out);
            return out.str();
        }
        case OutputFormat::tsv: {
            std::vector<std::vector<std::string>> rows;
            if (r.table) rows = *r.table;
            else flatten(r.doc, "", rows);
            std::string out;
            for (const auto& row : rows) {
                for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "\t" : "") + row[i];
                out += "\n";
            }
            return out;
        }
    }
    return "";
}

}  // namespace shufcompat::cli
