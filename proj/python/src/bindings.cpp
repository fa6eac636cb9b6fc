#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "hecke/arith.hpp"
#include "hecke/bound.hpp"
#include "hecke/cli.hpp"
#include "hecke/groups.hpp"
#include "hecke/table.hpp"

namespace py = pybind11;

namespace {

py::int_ to_py(const hecke::Integer& n) {
  const std::string digits = hecke::to_decimal(n);
  return py::reinterpret_steal<py::int_>(PyLong_FromString(digits.c_str(), nullptr, 10));
}

py::object to_py(const hecke::ExactRational& r) {
  static const py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(r.numerator()), to_py(r.denominator()));
}

hecke::Family parse_family(const std::string& name) {
  if (name == "GL" || name == "general_linear") return hecke::Family::GeneralLinear;
  if (name == "GSp" || name == "symplectic_similitude") return hecke::Family::SymplecticSimilitude;
  if (name == "GU" || name == "unitary_similitude") return hecke::Family::UnitarySimilitude;
  throw py::value_error("unknown family '" + name + "' (expected GL, GSp or GU)");
}

py::dict breakdown_dict(const hecke::BoundBreakdown& b) {
  py::dict d;
  d["g"] = b.params.g();
  d["N"] = b.params.N();
  d["p"] = b.params.p();
  d["c_g"] = to_py(b.mass_constant);
  d["gsp_order"] = to_py(b.gsp_order);
  d["signed_product"] = to_py(b.signed_product);
  d["sigma_count"] = to_py(b.sigma_count);
  d["rep_sum_bound"] = to_py(b.rep_sum_bound);
  d["total"] = to_py(b.total);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact arithmetic for the Hecke eigenvalue bound of mod-p Siegel modular forms";

  auto domain_error = py::register_exception<hecke::DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<hecke::ConventionError>(m, "ConventionError", domain_error.ptr());
  py::register_exception<hecke::HypothesisError>(m, "HypothesisError", domain_error.ptr());
  py::register_exception<hecke::CutoffExceeded>(m, "CutoffExceeded", PyExc_RuntimeError);
  py::register_exception<hecke::ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);

  // arith
  m.def("bernoulli", [](unsigned mm) { return to_py(hecke::bernoulli(mm)); }, py::arg("m"));
  m.def("zeta_negative", [](int j) { return to_py(hecke::zeta_negative(j)); }, py::arg("j"),
        "zeta(1 - 2j) as a Fraction.");
  m.def("factorize", [](std::uint64_t n) {
    py::list out;
    for (const auto& f : hecke::factorize(n).factors) out.append(py::make_tuple(f.prime, f.exponent));
    return out;
  }, py::arg("n"));
  m.def("is_prime", &hecke::is_prime, py::arg("n"));

  // groups
  m.def("order_gsp_prime", [](unsigned g, std::uint64_t p) { return to_py(hecke::order_gsp_prime(g, p)); },
        py::arg("g"), py::arg("p"));
  m.def("order_gsp_prime_power",
        [](unsigned g, std::uint64_t p, unsigned k) { return to_py(hecke::order_gsp_prime_power(g, p, k)); },
        py::arg("g"), py::arg("p"), py::arg("k"));
  m.def("order_gsp_modn", [](unsigned g, std::int64_t n) { return to_py(hecke::order_gsp_modn(g, n)); },
        py::arg("g"), py::arg("N"));
  m.def("order_gu", [](unsigned g, std::uint64_t p) { return to_py(hecke::order_gu(g, p)); }, py::arg("g"),
        py::arg("p"));
  m.def("sylow_p_bound", &hecke::sylow_p_bound, py::arg("g"));
  m.def("max_irrep_dim_bound", [](unsigned g, std::uint64_t p) { return to_py(hecke::max_irrep_dim_bound(g, p)); },
        py::arg("g"), py::arg("p"));
  m.def("num_irreps", [](unsigned g, std::uint64_t p) { return to_py(hecke::num_irreps(g, p)); }, py::arg("g"),
        py::arg("p"));
  m.def(
      "enumerate_order",
      [](const std::string& family, unsigned g, std::optional<std::uint64_t> modulus, std::optional<std::uint64_t> p,
         std::uint64_t cutoff) {
        const hecke::Family fam = parse_family(family);
        if (modulus.has_value() == p.has_value()) throw py::value_error("pass exactly one of modulus= or p=");
        hecke::CoefficientRing ring = modulus ? hecke::CoefficientRing(hecke::IntegersModN{*modulus})
                                              : hecke::CoefficientRing(hecke::QuadraticField{*p});
        const hecke::GroupDescriptor desc(fam, g, ring);
        py::gil_scoped_release release;
        return hecke::enumerate_order(desc, cutoff);
      },
      py::arg("family"), py::arg("g"), py::kw_only(), py::arg("modulus") = py::none(), py::arg("p") = py::none(),
      py::arg("cutoff") = hecke::kDefaultEnumerationCutoff,
      "Brute-force group order. family is GL, GSp or GU; modulus= selects Z/NZ, p= selects F_{p^2}.");

  // bound
  m.def("mass_constant", [](int g) { return to_py(hecke::mass_constant(g)); }, py::arg("g"));
  m.def("mass_constant_bernoulli", [](int g) { return to_py(hecke::mass_constant_bernoulli(g)); }, py::arg("g"));
  m.def("ekedahl_mass", [](unsigned g, std::uint64_t p) { return to_py(hecke::ekedahl_mass(g, p)); },
        py::arg("g"), py::arg("p"));
  m.def("sigma_count",
        [](std::int64_t g, std::int64_t n, std::int64_t p) {
          return to_py(hecke::sigma_count(hecke::Parameters(g, n, p)));
        },
        py::arg("g"), py::arg("N"), py::arg("p"));
  m.def("rep_sum_bound", [](unsigned g, std::uint64_t p) { return to_py(hecke::rep_sum_bound(g, p)); },
        py::arg("g"), py::arg("p"));
  m.def("hecke_bound",
        [](std::int64_t g, std::int64_t n, std::int64_t p) {
          return breakdown_dict(hecke::hecke_bound(hecke::Parameters(g, n, p)));
        },
        py::arg("g"), py::arg("N"), py::arg("p"));
  m.def("asymptotic_exponents", [](unsigned g) {
    const auto e = hecke::asymptotic_exponents(g);
    return py::make_tuple(e.n_exponent, e.p_exponent);
  }, py::arg("g"));

  // sweeps and CLI
  m.def(
      "sweep",
      [](const std::string& g, const std::string& n, const std::string& p, const std::string& format) {
        const auto result =
            hecke::build_sweep(hecke::Range::parse(g), hecke::Range::parse(n), hecke::Range::parse(p));
        std::ostringstream os;
        if (format == "json") {
          hecke::write_jsonl(os, result.table);
        } else if (format == "csv") {
          hecke::write_csv(os, result.table);
        } else {
          throw py::value_error("format must be csv or json");
        }
        return py::make_tuple(os.str(), result.skipped);
      },
      py::arg("g"), py::arg("N"), py::arg("p"), py::arg("format") = "csv",
      "Sweep table text and the number of skipped cells.");
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = hecke::cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
