#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <limits>

#include "twconj/json_io.hpp"
#include "twconj/structure.hpp"
#include "twconj/verify.hpp"

namespace py = pybind11;
using namespace twconj;

namespace {

py::object extnat_to_py(const ExtNat& v) {
  if (v.is_infinite()) return py::cast(std::numeric_limits<double>::infinity());
  return py::cast(v.value());
}

py::list spectrum_to_py(const Spectrum& s) {
  py::list out;
  for (const auto& v : s.values()) out.append(extnat_to_py(v));
  return out;
}

std::vector<int> perm_from_py(const std::vector<int>& one_based) {
  Perm p;
  p.reserve(one_based.size());
  for (int v : one_based) p.push_back(v - 1);
  if (!is_permutation(p))
    throw Error(ErrorKind::InvalidInput, "expected a 1-based permutation image list");
  return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "twisted conjugacy classes, Reidemeister numbers and spectra of finite groups";

  py::register_exception<Error>(m, "TwconjError");

  py::classh<FiniteGroup>(m, "FiniteGroup")
      .def_property_readonly("order", &FiniteGroup::order)
      .def("mul", &FiniteGroup::mul)
      .def("inv", &FiniteGroup::inv)
      .def("element_order", &FiniteGroup::element_order)
      .def_property_readonly("abelian", &FiniteGroup::is_abelian)
      .def_property_readonly("generators", &FiniteGroup::generators)
      .def("name_of", &FiniteGroup::name_of)
      .def("__len__", &FiniteGroup::order)
      .def("__repr__", [](const FiniteGroup& g) {
        return "<FiniteGroup order=" + std::to_string(g.order()) + ">";
      });

  py::class_<Subgroup>(m, "Subgroup")
      .def_property_readonly("elements", &Subgroup::elements)
      .def_property_readonly("order", &Subgroup::order)
      .def("is_normal", &Subgroup::is_normal)
      .def("__len__", &Subgroup::order);

  py::class_<GroupHom>(m, "GroupHom")
      .def_readonly("domain", &GroupHom::domain)
      .def_readonly("codomain", &GroupHom::codomain)
      .def_readonly("map", &GroupHom::map)
      .def("__call__", &GroupHom::operator())
      .def("is_bijective", &GroupHom::is_bijective)
      .def("is_identity", &GroupHom::is_identity)
      .def("is_trivial", &GroupHom::is_trivial)
      .def("__eq__", [](const GroupHom& a, const GroupHom& b) { return a == b; })
      .def("__repr__", [](const GroupHom& f) {
        return "<GroupHom " + std::to_string(f.domain->order()) + " -> " +
               std::to_string(f.codomain->order()) + ">";
      });

  py::class_<ProductGroup>(m, "ProductGroup")
      .def_readonly("group", &ProductGroup::group)
      .def_readonly("factors", &ProductGroup::factors)
      .def_readonly("embed", &ProductGroup::embed)
      .def_readonly("project", &ProductGroup::project)
      .def("encode", &ProductGroup::encode)
      .def("decode", &ProductGroup::decode);

  m.def("preset", &preset, py::arg("name"), py::arg("params") = std::vector<int>{},
        py::arg("order_cap") = kDefaultOrderCap);
  m.def("from_cayley_table", &FiniteGroup::from_cayley_table, py::arg("table"),
        py::arg("names") = std::vector<std::string>{});
  m.def("direct_product", &direct_product, py::arg("factors"),
        py::arg("order_cap") = kDefaultOrderCap);
  m.def("center", [](const GroupPtr& g) { return center(g); });
  m.def("conjugacy_classes", [](const GroupPtr& g) { return conjugacy_classes(g); });

  m.def("identity_hom", &identity_hom);
  m.def("trivial_hom", &trivial_hom);
  m.def("hom_from_map", &hom_from_map);
  m.def("hom_from_generator_images", &hom_from_generator_images);
  m.def("compose", &compose);
  m.def("pointwise_product", &pointwise_product);
  m.def("inner_automorphism", &inner_automorphism);
  m.def("inverse_automorphism", &inverse_automorphism);
  m.def("hom_image", &hom_image);
  m.def("hom_kernel", &hom_kernel);
  m.def("enumerate_homs", &enumerate_homs, py::arg("domain"), py::arg("codomain"),
        py::arg("budget") = kDefaultSearchBudget);
  m.def("enumerate_automorphisms", &enumerate_automorphisms, py::arg("group"),
        py::arg("budget") = kDefaultSearchBudget);

  m.def("reidemeister_number", [](const GroupPtr& g, const GroupHom& f) {
    return extnat_to_py(reidemeister_number(g, f));
  });
  m.def("reidemeister_classes", [](const GroupPtr& g, const GroupHom& f) {
    return reidemeister_partition(g, f).classes;
  });
  m.def("twisted_stabilizer", &twisted_stabilizer);
  m.def("fixed_points", &fixed_points);
  m.def("reidemeister_spectrum", [](const GroupPtr& g, std::int64_t budget) {
    return spectrum_to_py(reidemeister_spectrum(g, budget));
  }, py::arg("group"), py::arg("budget") = kDefaultSearchBudget);

  m.def("diag_endo", &diag_endo);
  m.def("diag_reidemeister", [](const std::vector<GroupHom>& homs) {
    return extnat_to_py(diag_reidemeister(homs));
  });
  m.def("perm_endo", [](const ProductGroup& p, const std::vector<int>& sigma) {
    return perm_endo(p, perm_from_py(sigma)).endo;
  });
  m.def("wreath_embed", [](const ProductGroup& p, const std::vector<GroupHom>& homs,
                           const std::vector<int>& sigma) {
    return wreath_embed(p, homs, perm_from_py(sigma));
  });
  m.def("permuted_diag_endo", [](const ProductGroup& p, const std::vector<GroupHom>& homs,
                                 const std::vector<int>& sigma) {
    return permuted_diag_endo(p, homs, perm_from_py(sigma));
  });
  m.def("permuted_diag_reidemeister",
        [](const std::vector<GroupHom>& homs, const std::vector<int>& sigma) {
          return extnat_to_py(permuted_diag_reidemeister(homs, perm_from_py(sigma)));
        });
  m.def("sum_formula_reidemeister",
        [](const GroupHom& alpha, const GroupHom& beta, const GroupHom& delta) {
          return extnat_to_py(sum_formula_reidemeister(alpha, beta, delta));
        });
  m.def("triangular_endo", &triangular_endo);
  m.def("rho_orbits", &rho_orbits);

  m.def("spectrum_of_centreless_product",
        [](const std::vector<GroupPtr>& factors, const std::vector<int>& mults,
           std::int64_t budget) {
          return spectrum_to_py(spectrum_of_centreless_product(factors, mults, budget));
        },
        py::arg("factors"), py::arg("multiplicities"),
        py::arg("budget") = kDefaultSearchBudget);
  m.def("is_centerless", &is_centerless);
  m.def("is_directly_indecomposable", &is_directly_indecomposable, py::arg("group"),
        py::arg("budget") = kDefaultSearchBudget);
  m.def("are_isomorphic", &are_isomorphic, py::arg("a"), py::arg("b"),
        py::arg("budget") = kDefaultSearchBudget);

  m.def("run_verifier", [](const std::string& id, int samples, std::uint64_t seed,
                           int max_order, std::int64_t budget) {
    VerifyOptions opt;
    opt.samples = samples;
    opt.seed = seed;
    opt.max_order = max_order;
    opt.budget = budget;
    VerifyResult result = run_verifier(id, opt);
    py::dict d;
    d["lemma"] = result.id;
    d["ok"] = result.ok;
    d["cases"] = result.cases;
    d["summary"] = result.summary;
    d["counterexample"] = result.counterexample.is_null()
                              ? std::string("null")
                              : result.counterexample.dump();
    return d;
  }, py::arg("id"), py::arg("samples") = 0, py::arg("seed") = 0x5eed2024u,
     py::arg("max_order") = 0, py::arg("budget") = kDefaultSearchBudget);
  m.def("verifier_ids", &verifier_ids);
}
