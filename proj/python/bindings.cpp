#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "coxlen/affsym.hpp"
#include "coxlen/errors.hpp"
#include "coxlen/genfun.hpp"
#include "coxlen/oracle.hpp"
#include "coxlen/parse.hpp"
#include "coxlen/reflen.hpp"
#include "coxlen/svg.hpp"

namespace py = pybind11;
using namespace coxlen;

namespace {

py::object fraction(const Rational& q) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(q.get_str());
}

py::list fractions(const Vector& v) {
  py::list out;
  for (const auto& q : v) out.append(fraction(q));
  return out;
}

Vector to_vector(const py::sequence& seq) {
  Vector v;
  for (auto item : seq) v.push_back(parse_rational(py::str(item).cast<std::string>()));
  return v;
}

py::dict element_dict(const AffineElement& w) {
  py::list rows;
  for (std::size_t i = 0; i < w.linear.rows(); ++i) rows.append(fractions(w.linear.row(i)));
  py::dict d;
  d["linear"] = rows;
  d["translation"] = fractions(w.translation);
  return d;
}

py::list factor_list(const ReflectionFactorization& f) {
  py::list out;
  for (const auto& r : f.factors) out.append(py::make_tuple(fractions(r.root), r.level));
  return out;
}

py::dict poly_dict(const BivariatePolynomial& p) {
  py::dict d;
  for (const auto& [e, c] : p.terms()) d[py::make_tuple(e.first, e.second)] = c;
  return d;
}

std::vector<Block> to_blocks(const std::vector<BlockMask>& masks) {
  std::vector<Block> out;
  for (auto m : masks) out.push_back(to_block(m));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Reflection length in affine Weyl groups";

  auto base = py::register_exception<Error>(m, "CoxlenError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<UnsupportedError>(m, "UnsupportedError", base.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());

  py::class_<RootSystem, std::shared_ptr<RootSystem>>(m, "RootSystem")
      .def(py::init([](const std::string& type) { return std::make_shared<RootSystem>(parse_type(type)); }),
           py::arg("type"))
      .def_property_readonly("name", &RootSystem::name)
      .def_property_readonly("rank", &RootSystem::rank)
      .def_property_readonly("ambient_dim", &RootSystem::ambient_dim)
      .def_property_readonly("exponents", &RootSystem::exponents)
      .def_property_readonly("w0_order", &RootSystem::w0_order)
      .def_property_readonly("roots",
                             [](const RootSystem& rs) {
                               py::list out;
                               for (const auto& r : rs.roots()) out.append(fractions(r));
                               return out;
                             })
      .def_property_readonly("positive_roots",
                             [](const RootSystem& rs) {
                               py::list out;
                               for (auto i : rs.positive_roots()) out.append(fractions(rs.root(i)));
                               return out;
                             })
      .def_property_readonly("simple_roots",
                             [](const RootSystem& rs) {
                               py::list out;
                               for (const auto& r : rs.simple_roots()) out.append(fractions(r));
                               return out;
                             })
      .def("coroot", [](const RootSystem& rs, const py::sequence& a) { return fractions(rs.coroot(to_vector(a))); })
      .def("element", [](const RootSystem& rs, const std::string& text) { return element_dict(parse_element(rs, text)); })
      .def("__repr__", [](const RootSystem& rs) { return "RootSystem('" + rs.name() + "')"; });

  m.def(
      "dimension_report",
      [](const RootSystem& rs, const std::string& element) {
        DimensionReport r = dimension_report(rs, parse_element(rs, element));
        py::dict d;
        d["e"] = r.e;
        d["d"] = r.d;
        d["dim"] = r.dim;
        d["length"] = r.length;
        return d;
      },
      py::arg("rs"), py::arg("element"));
  m.def(
      "reflection_length",
      [](const RootSystem& rs, const std::string& element) {
        return dimension_report(rs, parse_element(rs, element)).length;
      },
      py::arg("rs"), py::arg("element"));
  m.def(
      "min_factorization",
      [](const RootSystem& rs, const std::string& element) {
        return factor_list(min_factorization(rs, parse_element(rs, element)));
      },
      py::arg("rs"), py::arg("element"));
  m.def(
      "translation_elliptic_split",
      [](const RootSystem& rs, const std::string& element, std::size_t budget) {
        ReflenConfig config;
        config.hurwitz_budget = budget;
        auto s = translation_elliptic_split(rs, parse_element(rs, element), config);
        py::dict d;
        d["translation"] = fractions(s.translation.translation);
        d["elliptic"] = element_dict(s.elliptic);
        d["factorization"] = factor_list(s.factorization);
        d["states_explored"] = s.states_explored;
        return d;
      },
      py::arg("rs"), py::arg("element"), py::arg("budget") = ReflenConfig{}.hurwitz_budget);

  m.def("window_normal_form", [](const IntVector& window) {
    auto nf = window_to_normal_form(Window{window});
    return py::make_tuple(nf.lambda, nf.pi);
  });
  m.def("window_length", [](const IntVector& window) { return reflection_length_affsym(Window{window}); });
  m.def("cycles", [](const Permutation& pi) { return cycles(pi).blocks; });
  m.def("l_map", [](std::vector<Block> blocks, const IntVector& v) {
    return l_map(make_partition(std::move(blocks), static_cast<int>(v.size())), v);
  });
  m.def("nullity", &nullity);
  m.def("relative_nullity", &relative_nullity);
  m.def("minimal_null_blocks", [](const IntVector& v) { return to_blocks(minimal_null_blocks(v)); });
  m.def("null_complex", [](const IntVector& v) {
    NullComplex cx = null_complex(v);
    py::dict d;
    d["vertices"] = cx.vertices;
    d["edges"] = cx.edges;
    d["maximal_cliques"] = cx.maximal_cliques;
    d["nullity"] = cx.nullity;
    return d;
  });

  m.def("local_genfun", [](const RootSystem& rs, const py::sequence& lambda) {
    return poly_dict(local_genfun(rs, to_vector(lambda)));
  });
  m.def("spherical_genfun", [](const RootSystem& rs) {
    Polynomial p = spherical_genfun(enumerate_w0(rs));
    std::vector<long> coeffs(static_cast<std::size_t>(p.degree() + 1), 0);
    for (const auto& [deg, c] : p.terms()) coeffs[static_cast<std::size_t>(deg)] = c;
    return coeffs;
  });
  m.def("classify_coroots", [](const RootSystem& rs, int radius) {
    py::list out;
    for (const auto& cls : classify_coroots(rs, radius)) out.append(py::make_tuple(poly_dict(cls.polynomial), cls.points));
    return out;
  });

  m.def(
      "brute_reflection_length",
      [](const RootSystem& rs, const std::string& element, std::optional<long> J, std::optional<int> K) {
        CertifiedLength r = brute_reflection_length(rs, parse_element(rs, element), J, K);
        py::dict d;
        d["length"] = r.found() ? py::object(py::int_(r.length)) : py::object(py::none());
        d["certified"] = r.certified;
        d["method"] = r.method;
        d["level_bound"] = r.level_bound;
        return d;
      },
      py::arg("rs"), py::arg("element"), py::arg("J") = py::none(), py::arg("K") = py::none());
  m.def("brute_nullity", &brute_nullity);

  m.def(
      "render_svg",
      [](const RootSystem& rs, const std::string& mode, int radius) {
        SvgOptions opt;
        opt.mode = parse_svg_mode(mode);
        opt.radius = radius;
        return render_svg(rs, opt);
      },
      py::arg("rs"), py::arg("mode") = "alcove-length", py::arg("radius") = 2);
}
