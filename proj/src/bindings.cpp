#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nlnum/analysis.hpp"
#include "nlnum/inequalities.hpp"
#include "nlnum/newell_littlewood.hpp"
#include "nlnum/partition.hpp"
#include "nlnum/polytope.hpp"
#include "nlnum/symfunc.hpp"
#include "nlnum/tableau.hpp"

namespace py = pybind11;
using namespace nlnum;

namespace {

using Parts = std::vector<Int>;

Partition make(const Parts& parts) { return Partition(parts); }

template <class Tag>
std::vector<std::pair<Parts, Int>> expansion_to_list(const Expansion<Tag>& e) {
  std::vector<std::pair<Parts, Int>> out;
  for (const auto& [p, c] : e.terms()) out.emplace_back(p.parts(), c);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Newell-Littlewood numbers, Koike-Terada products, and the "
            "verification toolkit around them. Partitions are lists of "
            "weakly decreasing nonnegative integers.";

  // partition operations
  m.def("conjugate", [](const Parts& p) { return conjugate(make(p)).parts(); });
  m.def("meet", [](const Parts& a, const Parts& b) {
    return meet(make(a), make(b)).parts();
  });
  m.def("join", [](const Parts& a, const Parts& b) {
    return join(make(a), make(b)).parts();
  });
  m.def("sym_diff_size", [](const Parts& a, const Parts& b) {
    return sym_diff_size(make(a), make(b));
  });
  m.def("union_sorted", [](const Parts& a, const Parts& b) {
    return union_sorted(make(a), make(b)).parts();
  });
  m.def("subpartitions_of_size", [](const Parts& bound, Int s) {
    std::vector<Parts> out;
    for (const auto& p : subpartitions_of_size(make(bound), s))
      out.push_back(p.parts());
    return out;
  });

  // tableaux
  m.def("lr_coefficient", [](const Parts& mu, const Parts& nu, const Parts& lam) {
    return lr_coefficient(make(mu), make(nu), make(lam));
  });
  m.def("standard_count", [](const Parts& lam) { return standard_count(make(lam)); });

  // Newell-Littlewood numbers
  m.def("nl_number", [](const Parts& mu, const Parts& nu, const Parts& lam) {
    return nl_number(make(mu), make(nu), make(lam));
  });
  m.def("nl_witnesses", [](const Parts& mu, const Parts& nu, const Parts& lam) {
    std::vector<std::tuple<Parts, Parts, Parts, Int>> out;
    for (const auto& w : nl_witnesses(make(mu), make(nu), make(lam)))
      out.emplace_back(w.alpha.parts(), w.beta.parts(), w.gamma.parts(),
                       w.multiplicity);
    return out;
  });
  m.def("nl_product", [](const Parts& mu, const Parts& nu) {
    return expansion_to_list(nl_product(make(mu), make(nu)));
  });
  m.def("nl_pieri", [](const Parts& mu, Int p) {
    return expansion_to_list(nl_pieri(make(mu), p));
  });
  m.def("h_profile", [](const Parts& mu, const Parts& nu) {
    return h_profile(make(mu), make(nu)).values;
  });
  m.def("detection_witness", [](const Parts& lam) {
    return detection_witness(make(lam)).parts();
  });
  m.def("oscillating_count", [](const Parts& lam, Int k) {
    return oscillating_count(make(lam), k);
  });

  // symmetric functions
  m.def("kt_to_schur", [](const Parts& lam) {
    return expansion_to_list(kt_to_schur(make(lam)));
  });
  m.def("kt_product_via_schur", [](const Parts& mu, const Parts& nu) {
    return expansion_to_list(kt_product_via_schur(make(mu), make(nu)));
  });
  m.def("schur_product", [](const Parts& mu, const Parts& nu) {
    return expansion_to_list(schur_product_basis(make(mu), make(nu)));
  });
  m.def("skew_schur", [](const Parts& outer, const Parts& inner) {
    return expansion_to_list(skew_schur(SkewShape{make(outer), make(inner)}));
  });

  // polytope
  m.def(
      "count_lattice_points",
      [](const Parts& mu, const Parts& nu, const Parts& lam, std::size_t n) {
        Partition m_ = make(mu), n_ = make(nu), l_ = make(lam);
        if (n == 0)
          n = std::max({m_.length(), n_.length(), l_.length(), std::size_t{1}});
        return count_lattice_points(NLPolytope::build(m_, n_, l_, n));
      },
      py::arg("mu"), py::arg("nu"), py::arg("lam"), py::arg("n") = 0);

  // inequalities
  m.def("horn_holds", [](const Parts& mu, const Parts& nu, const Parts& lam, int n) {
    return horn_holds(make(mu), make(nu), make(lam), n);
  });
  m.def("extended_weyl_holds",
        [](const Parts& mu, const Parts& nu, const Parts& lam, int n) {
          return extended_weyl_holds(make(mu), make(nu), make(lam), n);
        });
  m.def("nl2_member", [](const Parts& mu, const Parts& nu, const Parts& lam) {
    return nl2_member(make(mu), make(nu), make(lam));
  });

  // analysis
  m.def("is_nl_multiplicity_free", [](const Parts& mu, const Parts& nu) {
    return is_nl_multiplicity_free(make(mu), make(nu));
  });
  m.def("nl_function", [](const Parts& mu, const Parts& nu, const Parts& lam, Int k) {
    return nl_function(make(mu), make(nu), make(lam), k).values;
  });
  m.def("kleber_rank", [](Int a, Int b) { return kleber_rank(a, b); });
}
