#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "verlinde/alcove.hpp"
#include "verlinde/cli.hpp"
#include "verlinde/completion.hpp"
#include "verlinde/errors.hpp"
#include "verlinde/report.hpp"
#include "verlinde/root_system.hpp"
#include "verlinde/type_counters.hpp"

namespace py = pybind11;
using namespace verlinde;

namespace {

py::int_ to_py(const BigInt& value) { return py::int_(py::str(value.str())); }

py::tuple to_py(const Rational& value) { return py::make_tuple(to_py(value.numerator()), to_py(value.denominator())); }

py::tuple to_py(const Weight& w) {
  py::tuple t(w.rank());
  for (int i = 0; i < w.rank(); ++i) t[static_cast<std::size_t>(i)] = py::int_(w[i]);
  return t;
}

Weight weight_from(const std::vector<std::int64_t>& coords) { return Weight(coords); }

py::object json_to_py(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact completion profiles of level-m Verlinde algebras";

  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

  py::class_<RootSystem>(m, "RootSystem")
      .def_property_readonly("type", [](const RootSystem& rs) { return to_string(rs.type); })
      .def_property_readonly("rank", &RootSystem::rank)
      .def_readonly("cartan", &RootSystem::cartan)
      .def_property_readonly("symmetrizers",
                             [](const RootSystem& rs) {
                               py::list out;
                               for (const auto& d : rs.symmetrizers) out.append(to_py(d));
                               return out;
                             })
      .def_property_readonly("gram",
                             [](const RootSystem& rs) {
                               py::list rows;
                               for (const auto& row : rs.gram) {
                                 py::list r;
                                 for (const auto& x : row) r.append(to_py(x));
                                 rows.append(r);
                               }
                               return rows;
                             })
      .def_property_readonly("highest_root", [](const RootSystem& rs) { return to_py(rs.highest_root); })
      .def_readonly("connection_index", &RootSystem::connection_index)
      .def_readonly("dual_coxeter_number", &RootSystem::dual_coxeter_number)
      .def_readonly("marks", &RootSystem::marks)
      .def("__repr__", [](const RootSystem& rs) { return "<RootSystem " + to_string(rs.type) + ">"; });

  m.def("build_root_system", [](const std::string& name) { return build_root_system(parse_lie_type(name)); },
        py::arg("type"));

  m.def("validate", [](const RootSystem& rs) {
    py::list out;
    for (const auto& c : validate(rs).checks)
      out.append(py::dict(py::arg("name") = c.name, py::arg("passed") = c.passed, py::arg("detail") = c.detail));
    return out;
  });

  m.def("_inner_product",
        [](const RootSystem& rs, const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
          return to_py(inner_product(rs, weight_from(a), weight_from(b)));
        });

  m.def("theta_level", [](const RootSystem& rs, const std::vector<std::int64_t>& a) {
    return theta_level(rs, weight_from(a));
  });

  m.def("enumerate_regular_weights", [](const RootSystem& rs, std::int64_t level) {
    py::list out;
    for (const auto& w : enumerate_regular_weights(rs, level).weights) out.append(to_py(w));
    return out;
  });

  m.def("count_regular_weights", &count_regular_weights);

  m.def("_phi_phase", [](const RootSystem& rs, const std::vector<std::int64_t>& a, std::int64_t level,
                         const std::vector<std::int64_t>& w) {
    return to_py(phi_phase(rs, weight_from(a), level, weight_from(w)).value);
  });

  m.def("denominator_profile", [](const RootSystem& rs, const std::vector<std::int64_t>& a, std::int64_t level) {
    return denominator_profile(rs, weight_from(a), level).lcm_denominator;
  });

  m.def("classify", [](std::uint64_t lcm_denominator) -> py::tuple {
    const Classification c = classify(DenominatorProfile{Weight{}, lcm_denominator});
    if (const auto* pp = std::get_if<PrimePower>(&c)) return py::make_tuple("prime_power", pp->prime, pp->exponent);
    return py::make_tuple("mixed");
  });

  m.def("completion_profile", [](const RootSystem& rs, std::int64_t level) {
    return json_to_py(to_json(completion_profile(rs, level)));
  });

  m.def("candidate_primes", &candidate_primes);

  m.def(
      "decompose_level",
      [](std::int64_t level, std::uint64_t p, std::optional<std::int64_t> n_plus_1) {
        const LevelDecomposition d = decompose_level(level, p, n_plus_1);
        py::dict out(py::arg("prime") = d.prime, py::arg("i") = d.i, py::arg("m_prime") = d.m_prime);
        if (d.ell) {
          out["ell"] = *d.ell;
          out["n_plus_1_prime"] = *d.n_plus_1_prime;
        }
        return out;
      },
      py::arg("level"), py::arg("p"), py::arg("n_plus_1") = py::none());

  m.def(
      "count",
      [](const std::string& type, std::int64_t level, std::uint64_t p, const std::string& reading) {
        return count(parse_lie_type(type), level, p, parse_reading(reading));
      },
      py::arg("type"), py::arg("level"), py::arg("p"), py::arg("reading") = "literal");

  m.def(
      "verify",
      [](const std::vector<std::string>& types, std::int64_t level_min, std::int64_t level_max,
         const std::vector<std::uint64_t>& primes, const std::string& reading, bool allow_flagged) {
        RunConfig config;
        for (const auto& t : types) config.types.push_back(parse_lie_type(t));
        config.level_min = level_min;
        config.level_max = level_max;
        config.primes = primes;
        config.reading = parse_reading(reading);
        config.allow_flagged = allow_flagged;
        CrossCheckReport report;
        {
          py::gil_scoped_release release;
          report = run_verify(config);
        }
        py::dict out = json_to_py(to_json(report));
        out["exit_code"] = report.exit_code(allow_flagged);
        return out;
      },
      py::arg("types"), py::arg("level_min"), py::arg("level_max"), py::arg("primes") = std::vector<std::uint64_t>{},
      py::arg("reading") = "literal", py::arg("allow_flagged") = false);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
