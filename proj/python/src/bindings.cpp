// Python bindings. Monomials cross the boundary as exponent lists, clutters as
// 1-based vertex lists.
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>

#include "glindex/betti.hpp"
#include "glindex/clutter.hpp"
#include "glindex/io.hpp"
#include "glindex/linpres.hpp"
#include "glindex/search.hpp"

namespace py = pybind11;
using namespace glindex;

namespace {

MonomialIdeal make_ideal(std::size_t vars, const std::vector<std::vector<int>>& rows)
{
    std::vector<Monomial> gens;
    gens.reserve(rows.size());
    for (const auto& row : rows)
        gens.emplace_back(vars, row);
    return MonomialIdeal(vars, gens);
}

std::vector<std::vector<int>> rows_of(const MonomialIdeal& ideal)
{
    std::vector<std::vector<int>> out;
    for (const auto& g : ideal.generators())
        out.push_back(g.exponents());
    return out;
}

SearchOptions options(unsigned jobs, const std::string& cache_dir)
{
    SearchOptions o;
    o.jobs = jobs;
    o.cache_dir = cache_dir;
    return o;
}

py::object index_value(const IndexValue& v)
{
    if (v.is_infinite())
        return py::float_(std::numeric_limits<double>::infinity());
    return py::int_(v.value());
}

} // namespace

PYBIND11_MODULE(_glindex, m)
{
    m.doc() = "Betti numbers, Green-Lazarsfeld indices and forbidden-subclutter searches for monomial ideals";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<UnsupportedInput>(m, "UnsupportedInput", PyExc_ValueError);
    py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);

    py::class_<MonomialIdeal>(m, "MonomialIdeal")
        .def(py::init(&make_ideal), py::arg("vars"), py::arg("generators"))
        .def_property_readonly("vars", &MonomialIdeal::vars)
        .def_property_readonly("generators", &rows_of)
        .def("power", &power_generators, py::arg("k"))
        .def("to_json", &ideal_to_json)
        .def("__len__", &MonomialIdeal::size)
        .def("__repr__", [](const MonomialIdeal& i) { return "MonomialIdeal(" + i.serialize() + ")"; });

    py::class_<Clutter>(m, "Clutter")
        .def(py::init(&Clutter::from_lists), py::arg("n"), py::arg("d"), py::arg("circuits"))
        .def_property_readonly("n", &Clutter::vertices)
        .def_property_readonly("d", &Clutter::uniformity)
        .def_property_readonly("circuits", &Clutter::to_lists)
        .def("complement", &complement)
        .def("edge_ideal", &edge_ideal)
        .def("canonical_form", &canonical_form)
        .def("is_isomorphic", &are_isomorphic)
        .def("to_json", &clutter_to_json)
        .def("__len__", &Clutter::size)
        .def(py::self == py::self)
        .def("__repr__", [](const Clutter& c) { return "Clutter(" + c.to_string() + ")"; });

    m.def("parse", [](const std::string& text) -> py::object {
        auto parsed = parse_input(text);
        if (auto* c = std::get_if<Clutter>(&parsed))
            return py::cast(*c);
        return py::cast(std::get<IdealInput>(parsed).ideal);
    }, py::arg("text"), "Parse a JSON ideal or clutter");

    m.def("betti_table", [](const MonomialIdeal& ideal, const std::string& field) {
        std::map<std::pair<int, int>, std::size_t> out = betti_table(ideal, Field::parse(field)).graded();
        return out;
    }, py::arg("ideal"), py::arg("field") = "q", "Graded Betti numbers as {(i, j): rank}");
    m.def("multigraded_betti", [](const MonomialIdeal& ideal, const std::string& field) {
        std::vector<std::tuple<int, std::vector<int>, std::size_t>> out;
        for (const auto& e : betti_table(ideal, Field::parse(field)).multigraded())
            out.emplace_back(e.i, e.degree.exponents(), e.rank);
        return out;
    }, py::arg("ideal"), py::arg("field") = "q");
    m.def("beta", [](const MonomialIdeal& ideal, int i, int j, const std::string& field) {
        return beta_graded(ideal, i, j, Field::parse(field));
    }, py::arg("ideal"), py::arg("i"), py::arg("j"), py::arg("field") = "q");
    m.def("gl_index", [](const MonomialIdeal& ideal, const std::string& field) {
        return index_value(gl_index(ideal, Field::parse(field)));
    }, py::arg("ideal"), py::arg("field") = "q", "Green-Lazarsfeld index; math.inf for a linear resolution");
    m.def("is_linearly_presented", [](const MonomialIdeal& ideal, int power) {
        return power_check(ideal, power).linearly_presented;
    }, py::arg("ideal"), py::arg("power") = 1, "Path criterion on the generators of the given power");

    m.def("is_c_free", [](const Clutter& c) { return is_family_free(c, catalog::family_c()); }, py::arg("clutter"),
          "No induced copy of B, B1, B2 or B'");
    m.def("is_d_free", [](const Clutter& c, unsigned jobs, const std::string& cache_dir) {
        return CanonicalFamily(family_d(options(jobs, cache_dir))).is_free(c);
    }, py::arg("clutter"), py::arg("jobs") = 0, py::arg("cache_dir") = "");
    m.def("family_d", [](unsigned jobs, const std::string& cache_dir) { return family_d(options(jobs, cache_dir)); },
          py::arg("jobs") = 0, py::arg("cache_dir") = "");

    m.def("enumerate_minimal", [](std::size_t d, std::size_t k, std::size_t n, unsigned jobs) {
        auto r = enumerate_omega(d, k, n, options(jobs, ""));
        return r.representatives;
    }, py::arg("d"), py::arg("k"), py::arg("n"), py::arg("jobs") = 0,
       "Minimal d-uniform clutters on n vertices whose ideal's k-th power is the first not linearly presented");
    m.def("kappa", [](std::size_t d) {
        auto r = kappa(d);
        return std::make_pair(r.kappa, r.witness);
    }, py::arg("d"));
    m.def("census", []() {
        auto r = case_census_deg6();
        py::dict out;
        out["cases"] = r.cases;
        out["representatives"] = r.representatives;
        out["orbit_counts"] = r.orbit_counts;
        out["all_obstructed"] = r.all_obstructed;
        return out;
    });

    m.def("catalog_names", [] {
        auto names = catalog::clutter_names();
        names.push_back("conca");
        return names;
    });
    m.def("catalog", [](const std::string& name) -> py::object {
        if (name == "conca")
            return py::cast(catalog::conca());
        if (auto c = catalog::lookup(name))
            return py::cast(*c);
        throw InputError("unknown catalog name: " + name);
    }, py::arg("name"));
}
