#include "glindex/io.hpp"

#include <json.hpp>

namespace glindex {

namespace {

using json = nlohmann::ordered_json;

json parse_document(const std::string& text)
{
    try {
        json doc = json::parse(text);
        if (!doc.is_object())
            throw InputError("input must be a JSON object");
        return doc;
    } catch (const json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
}

bool has_ideal_shape(const json& doc) { return doc.contains("vars") || doc.contains("generators"); }
bool has_clutter_shape(const json& doc)
{
    return doc.contains("n") || doc.contains("d") || doc.contains("circuits");
}

template <class T>
T field_of(const json& doc, const char* key)
{
    if (!doc.contains(key))
        throw InputError(std::string("missing field \"") + key + "\"");
    try {
        return doc.at(key).get<T>();
    } catch (const json::exception&) {
        throw InputError(std::string("field \"") + key + "\" has the wrong type");
    }
}

IdealInput ideal_from(const json& doc)
{
    const auto n = field_of<long long>(doc, "vars");
    if (n < 0)
        throw InputError("\"vars\" must be non-negative");
    const auto rows = field_of<std::vector<std::vector<int>>>(doc, "generators");
    std::vector<Monomial> gens;
    try {
        for (const auto& row : rows) {
            if (row.size() != static_cast<std::size_t>(n))
                throw InputError("every exponent vector must have \"vars\" entries");
            gens.emplace_back(static_cast<std::size_t>(n), row);
        }
        IdealInput out{MonomialIdeal(static_cast<std::size_t>(n), gens), true};
        out.was_minimal = out.ideal.size() == gens.size();
        return out;
    } catch (const DimensionError& e) {
        throw InputError(e.what());
    }
}

Clutter clutter_from(const json& doc)
{
    const auto n = field_of<long long>(doc, "n");
    const auto d = field_of<long long>(doc, "d");
    if (n < 0 || d < 0)
        throw InputError("\"n\" and \"d\" must be non-negative");
    const auto circuits = field_of<std::vector<std::vector<int>>>(doc, "circuits");
    try {
        return Clutter::from_lists(static_cast<std::size_t>(n), static_cast<std::size_t>(d), circuits);
    } catch (const UnsupportedInput&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

json exponents(const Monomial& m) { return m.exponents(); }

} // namespace

ParsedInput parse_input(const std::string& text)
{
    const json doc = parse_document(text);
    const bool ideal = has_ideal_shape(doc), clutter = has_clutter_shape(doc);
    if (ideal && clutter)
        throw InputError("ambiguous input: both ideal and clutter fields present");
    if (ideal)
        return ideal_from(doc);
    if (clutter)
        return clutter_from(doc);
    throw InputError("input is neither an ideal {\"vars\", \"generators\"} nor a clutter {\"n\", \"d\", \"circuits\"}");
}

IdealInput parse_ideal(const std::string& text)
{
    auto parsed = parse_input(text);
    if (auto* c = std::get_if<Clutter>(&parsed))
        return IdealInput{edge_ideal(*c), true};
    return std::get<IdealInput>(parsed);
}

Clutter parse_clutter(const std::string& text)
{
    auto parsed = parse_input(text);
    if (auto* c = std::get_if<Clutter>(&parsed))
        return *c;
    throw InputError("expected a clutter {\"n\", \"d\", \"circuits\"}");
}

std::string clutter_to_json(const Clutter& c)
{
    json doc;
    doc["circuits"] = c.to_lists();
    doc["d"] = c.uniformity();
    doc["n"] = c.vertices();
    return doc.dump();
}

std::string ideal_to_json(const MonomialIdeal& ideal)
{
    json gens = json::array();
    for (const auto& g : ideal.generators())
        gens.push_back(exponents(g));
    json doc;
    doc["generators"] = gens;
    doc["vars"] = ideal.vars();
    return doc.dump();
}

std::string betti_to_json(const BettiTable& table)
{
    json graded = json::array();
    for (const auto& [key, rank] : table.graded())
        graded.push_back({key.first, key.second, rank});
    json multi = json::array();
    for (const auto& e : table.multigraded())
        multi.push_back({e.i, exponents(e.degree), e.rank});
    json doc;
    doc["graded"] = graded;
    doc["multigraded"] = multi;
    return doc.dump();
}

std::string presentation_to_json(const PresentationResult& result, const MonomialIdeal& ideal)
{
    json doc;
    doc["linearly_presented"] = result.linearly_presented;
    if (result.witness) {
        json witness;
        const auto conn = pair_connected(ideal, result.witness->u, result.witness->v);
        if (conn.connected) {
            json path = json::array();
            for (const auto& m : conn.path)
                path.push_back(exponents(m));
            witness["path"] = path;
        } else {
            witness["path"] = nullptr;
        }
        witness["u"] = exponents(result.witness->u);
        witness["v"] = exponents(result.witness->v);
        doc["witness"] = witness;
    } else {
        doc["witness"] = nullptr;
    }
    return doc.dump();
}

} // namespace glindex
