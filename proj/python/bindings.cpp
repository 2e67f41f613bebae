#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mdh/errors.hpp"
#include "mdh/inner_homology.hpp"
#include "mdh/io.hpp"
#include "mdh/outer_homology.hpp"
#include "mdh/quotient.hpp"
#include "mdh/realization.hpp"
#include "mdh/snakes.hpp"

namespace py = pybind11;
using namespace mdh;
using io::json;

// Structured values cross the boundary as JSON text; the Python package
// converts them to and from dicts.
namespace {

HolderComplex complex_arg(const std::string& s) { return io::complex_from_json(io::parse(s)); }
SnakeInstance snake_arg(const std::string& s) { return io::snake_from_json(io::parse(s)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Moderately discontinuous homology of Holder complexes and snakes";

  auto base = py::register_exception<Error>(m, "MdhError", PyExc_ValueError);
  py::register_exception<InputError>(m, "InputError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<CoverageError>(m, "CoverageError", base.ptr());
  py::register_exception<ArithmeticError>(m, "ArithmeticError", base.ptr());
  py::register_exception<ConsistencyError>(m, "ConsistencyError", base.ptr());
  py::register_exception<DegeneracyError>(m, "DegeneracyError", base.ptr());
  py::register_exception<CapacityError>(m, "CapacityError", base.ptr());
  py::register_exception<UnsupportedSizeError>(m, "UnsupportedSizeError", base.ptr());

  m.def("mdh_inner", [](const std::string& c, const std::string& b, int degree) {
    return mdh_inner(complex_arg(c), Exponent::parse(b), degree);
  });
  m.def("inner_profile", [](const std::string& c, int degree) {
    return io::to_json(inner_profile(complex_arg(c), degree)).dump();
  });
  m.def("b_reduce", [](const std::string& c, const std::string& b) {
    const auto [reduced, trace] = b_reduce(complex_arg(c), Exponent::parse(b));
    return json{{"complex", io::to_json(reduced)}, {"trace", io::to_json(trace)}}.dump();
  });
  m.def("simplify", [](const std::string& c) { return io::to_json(simplify(complex_arg(c))).dump(); });
  m.def("is_isomorphic", [](const std::string& a, const std::string& b, std::size_t max_vertices) {
    return is_isomorphic(complex_arg(a), complex_arg(b), max_vertices);
  });
  m.def("link_betti", [](const std::string& c) {
    const auto lb = link_betti(complex_arg(c));
    return std::make_pair(lb.b0, lb.b1);
  });
  m.def("quotient_rank", [](const std::string& c, const std::string& b,
                            const std::vector<std::pair<std::string, std::string>>& merges) {
    const auto complex = complex_arg(c);
    auto q = quotient_from_complex(complex);
    for (const auto& [u, v] : merges) {
      const auto iu = complex.index_of(u), iv = complex.index_of(v);
      if (!iu || !iv) throw InputError("merge names an unknown vertex");
      q.merges.emplace_back(*iu, *iv);
    }
    const auto r = quotient_rank(q, Exponent::parse(b));
    return std::make_pair(r.rank, r.components);
  });

  m.def("validate_snake_name", [](const std::vector<std::string>& word) {
    std::vector<std::tuple<std::string, std::size_t, std::string>> out;
    for (const auto& v : validate_snake_name(word)) out.emplace_back(v.kind, v.position, v.detail);
    return out;
  });
  m.def("make_gluing_word", &make_gluing_word);
  m.def("node_counts", [](const std::vector<std::string>& word) {
    const auto n = node_counts(word);
    return std::make_pair(n.nodes, n.nodal_zones);
  });
  m.def("mdh1_basic_snake", [](const std::string& s) {
    return io::to_json(mdh1_basic_snake(snake_arg(s).spec)).dump();
  });

  m.def("realize_snake", [](const std::string& s) { return io::to_json(realize_snake_instance(snake_arg(s))).dump(); });
  m.def("realize_bubble_snake", [](const std::string& beta, const std::string& alpha) {
    return io::to_json(realize_bubble_snake(Exponent::parse(beta), Exponent::parse(alpha))).dump();
  });
  m.def("realize_nonsnake_bubble", [](int k, const std::string& beta, const std::vector<std::string>& alphas) {
    std::vector<Exponent> a;
    for (const auto& s : alphas) a.push_back(Exponent::parse(s));
    return io::to_json(realize_nonsnake_bubble(k, Exponent::parse(beta), a)).dump();
  });
  m.def("tord", [](const std::string& a, const std::string& b) {
    return tord_symbolic(io::arc_from_json(io::parse(a)), io::arc_from_json(io::parse(b))).to_string();
  });
  m.def("tord_numeric", [](const std::string& a, const std::string& b) {
    return tord_numeric(io::arc_from_json(io::parse(a)), io::arc_from_json(io::parse(b)));
  });

  m.def("outer_profile_snake", [](const std::string& s, int degree) {
    return io::to_json(outer_profile(link_model_from_arcs(realize_snake_instance(snake_arg(s))), degree)).dump();
  });
  m.def("outer_profile_model", [](const std::string& model, int degree) {
    return io::to_json(outer_profile(io::model_from_json(io::parse(model)), degree)).dump();
  });
  m.def("build_target_snake", [](const std::vector<int>& ks, const std::vector<std::string>& qs, const std::string& beta) {
    std::vector<Exponent> q;
    for (const auto& s : qs) q.push_back(Exponent::parse(s));
    const auto t = build_target_snake(ks, q, Exponent::parse(beta));
    json out{{"expected", io::to_json(t.expected)}, {"oracle", io::to_json(outer_profile(link_model_from_arcs(t.arcs)))}};
    if (t.spec) out["snake"] = io::to_json(SnakeInstance{*t.spec, {}});
    return out.dump();
  });
  m.def("weak_equiv_same_homology", [](const std::string& a, const std::string& b) {
    return io::to_json(weak_equiv_same_homology(snake_arg(a), snake_arg(b))).dump();
  });
}
