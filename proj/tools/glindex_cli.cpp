// Command-line front end: reads ideals or clutters as JSON and prints JSON results.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "glindex/betti.hpp"
#include "glindex/clutter.hpp"
#include "glindex/io.hpp"
#include "glindex/linpres.hpp"
#include "glindex/search.hpp"

namespace {

using json = nlohmann::json;
using namespace glindex;

constexpr int kExitMalformed = 2;
constexpr int kExitUnsupported = 3;

struct GlobalFlags {
    std::string field = "q";
    unsigned jobs = 0;
    std::string cache_dir;
};

std::string read_source(const std::string& path)
{
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

MonomialIdeal load_ideal(const std::string& path)
{
    auto parsed = parse_input(read_source(path));
    if (auto* c = std::get_if<Clutter>(&parsed))
        return edge_ideal(*c);
    auto& in = std::get<IdealInput>(parsed);
    if (!in.was_minimal)
        std::cerr << "warning: generators were not minimal; using the minimal generating set\n";
    return in.ideal;
}

Clutter load_clutter(const std::string& path) { return parse_clutter(read_source(path)); }

json clutter_json(const Clutter& c) { return json::parse(clutter_to_json(c)); }

json vertex_list(std::uint64_t mask)
{
    json out = json::array();
    for (int v = 0; v < 64; ++v)
        if (mask >> v & 1)
            out.push_back(v + 1);
    return out;
}

SearchOptions search_options(const GlobalFlags& flags)
{
    SearchOptions opts;
    opts.jobs = flags.jobs;
    opts.cache_dir = flags.cache_dir;
    if (const char* env = std::getenv("GLINDEX_CACHE_DIR"); env && *env)
        opts.cache_dir = env;
    return opts;
}

MonomialIdeal apply_power(const MonomialIdeal& ideal, int power)
{
    if (power < 1)
        throw UnsupportedInput("--power must be at least 1");
    return power == 1 ? ideal : power_generators(ideal, power);
}

json free_check(const Clutter& c, const std::string& family, const SearchOptions& opts)
{
    json out{{"family", family}};
    if (family == "C") {
        const auto members = catalog::family_c();
        const std::vector<std::string> names{"B", "B1", "B2", "Bprime"};
        auto hit = find_family_member(c, members);
        out["free"] = !hit.has_value();
        if (hit) {
            json verts = json::array();
            for (int v : hit->embedding)
                verts.push_back(v + 1);
            out["witness"] = {{"member", names[hit->pattern_index]}, {"vertices", verts}};
        } else {
            out["witness"] = nullptr;
        }
        return out;
    }
    const auto members = family_d(opts);
    CanonicalFamily fam(members);
    auto hit = fam.find(c);
    out["free"] = !hit.has_value();
    if (hit)
        out["witness"] = {{"member", clutter_json(members[hit->member])}, {"vertices", vertex_list(hit->vertices)}};
    else
        out["witness"] = nullptr;
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Green-Lazarsfeld indices, Betti numbers and forbidden subclutters of monomial ideals"};
    app.require_subcommand(1);
    GlobalFlags flags;
    app.add_option("--field", flags.field, "Coefficient field: q or a prime")->capture_default_str();
    app.add_option("--jobs", flags.jobs, "Worker threads (0 = all cores)")->capture_default_str();
    app.add_option("--cache-dir", flags.cache_dir, "Directory for cached search results (GLINDEX_CACHE_DIR overrides)");

    std::string input;
    int power = 1;
    std::string family = "C";
    std::size_t d = 3, k = 1, n = 6;
    bool reps = false;
    std::string name;

    auto* betti = app.add_subcommand("betti", "Graded and multigraded Betti numbers");
    betti->add_option("input", input, "JSON ideal or clutter ('-' for stdin)")->required();
    betti->add_option("--power", power, "Use the k-th power")->capture_default_str();

    auto* index = app.add_subcommand("index", "Green-Lazarsfeld index");
    index->add_option("input", input, "JSON ideal or clutter ('-' for stdin)")->required();
    index->add_option("--power", power, "Use the k-th power")->capture_default_str();

    auto* linpres = app.add_subcommand("linpres", "Linear presentation via generator-graph paths");
    linpres->add_option("input", input, "JSON ideal or clutter ('-' for stdin)")->required();
    linpres->add_option("--power", power, "Use the k-th power")->capture_default_str();

    auto* check = app.add_subcommand("check-free", "Search a clutter for an induced member of a family");
    check->add_option("input", input, "JSON clutter ('-' for stdin)")->required();
    check->add_option("--family", family, "C or D")->check(CLI::IsMember({"C", "D"}))->capture_default_str();

    auto* classify = app.add_subcommand("classify", "Family tests and index tests for a 3-uniform clutter");
    classify->add_option("input", input, "JSON clutter ('-' for stdin)")->required();

    auto* enumerate = app.add_subcommand("enumerate", "Count minimal clutters whose k-th power first fails");
    enumerate->add_option("--d", d, "Uniformity")->required();
    enumerate->add_option("--k", k, "Power")->required();
    enumerate->add_option("--n", n, "Vertex count")->required();
    enumerate->add_flag("--reps", reps, "Include representatives");

    auto* census = app.add_subcommand("census-105", "Case census for two disjoint triples");

    auto* kappa_cmd = app.add_subcommand("kappa", "Least clutter size whose complement ideal is not linear");
    kappa_cmd->add_option("--d", d, "Uniformity")->required();

    auto* catalog_cmd = app.add_subcommand("catalog", "Named clutters and ideals");
    catalog_cmd->add_option("--name", name, "Name to dump; omit to list names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitMalformed;
    }

    try {
        const Field field = Field::parse(flags.field);
        const SearchOptions opts = search_options(flags);
        json out;
        if (betti->parsed()) {
            out = json::parse(betti_to_json(betti_table(apply_power(load_ideal(input), power), field)));
        } else if (index->parsed()) {
            auto value = gl_index(apply_power(load_ideal(input), power), field);
            out["index"] = value.is_infinite() ? json("inf") : json(value.value());
        } else if (linpres->parsed()) {
            const auto ideal = apply_power(load_ideal(input), power);
            out = json::parse(presentation_to_json(linearly_presented_graph(ideal), ideal));
        } else if (check->parsed()) {
            out = free_check(load_clutter(input), family, opts);
        } else if (classify->parsed()) {
            const Clutter c = load_clutter(input);
            if (c.uniformity() != 3)
                throw UnsupportedInput("classify expects a 3-uniform clutter");
            const auto ideal = edge_ideal(c);
            out["complement_C_free"] = is_family_free(complement(c), catalog::family_c());
            out["index_gt1"] = power_check(ideal, 1).linearly_presented;
            out["index_sq_gt1"] = power_check(ideal, 2).linearly_presented;
            const auto members = family_d(opts);
            out["D_free"] = CanonicalFamily(members).is_free(c);
        } else if (enumerate->parsed()) {
            auto result = enumerate_omega(d, k, n, opts);
            out = {{"count", result.count}, {"d", d}, {"k", k}, {"n", n}};
            if (reps) {
                json list = json::array();
                for (const auto& c : result.representatives)
                    list.push_back(clutter_json(c));
                out["representatives"] = list;
            }
        } else if (census->parsed()) {
            auto result = case_census_deg6();
            out = {{"all_obstructed", result.all_obstructed},
                   {"cases", result.cases},
                   {"orbit_counts", result.orbit_counts},
                   {"representatives", result.representatives}};
        } else if (kappa_cmd->parsed()) {
            auto result = kappa(d, opts);
            out = {{"d", d}, {"kappa", result.kappa}, {"witness", clutter_json(result.witness)}};
        } else if (catalog_cmd->parsed()) {
            if (name.empty()) {
                auto names = catalog::clutter_names();
                names.push_back("conca");
                out["names"] = names;
            } else if (name == "conca") {
                out = json::parse(ideal_to_json(catalog::conca()));
            } else if (auto c = catalog::lookup(name)) {
                out = clutter_json(*c);
            } else {
                throw InputError("unknown catalog name: " + name);
            }
        }
        std::cout << out.dump() << '\n';
        return 0;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMalformed;
    } catch (const UnsupportedInput& e) {
        std::cerr << "unsupported: " << e.what() << '\n';
        return kExitUnsupported;
    } catch (const DimensionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMalformed;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMalformed;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
