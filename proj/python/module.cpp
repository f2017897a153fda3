#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hopfq/disk.hpp"
#include "hopfq/fermion.hpp"
#include "hopfq/hamiltonians.hpp"
#include "hopfq/json_io.hpp"
#include "hopfq/kp.hpp"
#include "hopfq/schur.hpp"

namespace py = pybind11;
using namespace hopfq;

namespace {

py::object fraction(const Rational& r) {
  static py::object Fraction = py::module_::import("fractions").attr("Fraction");
  return Fraction(py::int_(py::str(r.get_num().get_str())), py::int_(py::str(r.get_den().get_str())));
}

Rational from_py(const py::handle& x) {
  return parse_rational(py::str(x).cast<std::string>());
}

// {(eps power, u0 power): Fraction}
py::dict scalar(const ExactScalar& s) {
  py::dict d;
  for (const auto& t : s.terms()) d[py::make_tuple(t.eps, t.u0)] = fraction(t.coeff);
  return d;
}

Partition part(const std::vector<int>& parts) { return Partition(parts); }

py::tuple multi(const MultiIndex& m) {
  py::list l;
  for (const auto& [k, mult] : m.entries()) l.append(py::make_tuple(k, mult));
  return py::tuple(l);
}

// {(alpha, beta): scalar} with alpha, beta tuples of (index, multiplicity)
py::dict op_dict(const NormalOrderedOperator& op) {
  py::dict d;
  for (const auto& [key, c] : op.terms()) d[py::make_tuple(multi(key.first), multi(key.second))] = scalar(c);
  return d;
}

py::dict poly_dict(const FockPolynomial& f) {
  py::dict d;
  for (const auto& [m, c] : f.terms()) d[multi(m)] = scalar(c);
  return d;
}

std::optional<Rational> opt(const py::object& x) {
  if (x.is_none()) return std::nullopt;
  return from_py(x);
}

}  // namespace

PYBIND11_MODULE(_hopfq, m) {
  m.doc() = "Exact quantized Hopf hierarchy: Hamiltonians, eigenvalues, disk potential, KP and Hurwitz checks";

  m.def("bernoulli", [](int n) { return fraction(bernoulli(n)); });
  m.def("partitions_of", [](int n) {
    std::vector<std::vector<int>> out;
    for (const auto& p : partitions_of(n)) out.push_back(p.parts());
    return out;
  });
  m.def("dim", [](const std::vector<int>& l) { return py::int_(py::str(dim(part(l)).get_str())); });
  m.def("frobenius", [](const std::vector<int>& l) {
    const auto f = frobenius(part(l));
    return py::make_tuple(f.alpha, f.beta);
  });
  m.def("schur", [](const std::vector<int>& l) { return poly_dict(schur(part(l))); });
  m.def("scaled_schur", [](const std::vector<int>& l) { return poly_dict(scaled_schur(part(l))); });

  m.def("naive_hamiltonian", [](int n, int W) { return op_dict(naive_hamiltonian(n, W)); }, py::arg("n"),
        py::arg("max_weight"));
  m.def("hamiltonian", [](int n, int W) { return op_dict(quantum_hamiltonian(n, W)); }, py::arg("n"),
        py::arg("max_weight"));
  m.def("hamiltonian_json", [](int n, int W) { return to_json(quantum_hamiltonian(n, W)).dump(); }, py::arg("n"),
        py::arg("max_weight"));
  m.def("hamiltonian_text", [](int n, int W) { return quantum_hamiltonian(n, W).to_string(); }, py::arg("n"),
        py::arg("max_weight"));
  m.def("eigenvalue", [](int k, const std::vector<int>& l) { return scalar(eigenvalue_closed_form(k, part(l))); });
  m.def("vacuum_constant", [](int k) { return scalar(vacuum_constant(k)); });

  m.def("verify_commutativity", [](int N, int W, int jobs) {
    py::gil_scoped_release release;
    return verify_commutativity(N, W, jobs).ok();
  }, py::arg("N"), py::arg("max_weight"), py::arg("jobs") = 1);
  m.def("verify_eigenvectors", [](int K, int W, int jobs) {
    py::gil_scoped_release release;
    return verify_eigenvectors(K, W, jobs).ok();
  }, py::arg("K"), py::arg("max_weight"), py::arg("jobs") = 1);

  m.def("disk_table", [](int W, int K, const py::object& u0) {
    DiskPotential pot = disk_potential(W, K);
    if (!u0.is_none()) pot = specialize_u0(pot, from_py(u0));
    py::list rows;
    for (const auto& a : pot.amplitudes) {
      py::list ex;
      for (const auto& x : a.exponents) ex.append(scalar(x));
      rows.append(py::make_tuple(a.lambda.parts(), scalar(a.prefactor), ex));
    }
    return rows;
  }, py::arg("max_weight"), py::arg("K"), py::arg("u0") = py::none());
  m.def("plane_wave_check", &plane_wave_check);
  m.def("p1_routes_agree", [](int D, int K) {
    return p1_partition_function(D, K) == p1_partition_function_by_pairing(D, K);
  });
  m.def("hurwitz_oracle", [](int n, int mm, const std::vector<int>& mu) { return fraction(hurwitz_oracle(n, mm, part(mu))); });
  m.def("hurwitz_series", [](int W, int M) {
    py::dict d;
    for (const auto& [key, poly] : hurwitz_series(W, M)) d[py::make_tuple(key.first, key.second)] = poly_dict(poly);
    return d;
  });

  m.def("boson_fermion_sign", [](const std::vector<int>& l) { return boson_fermion_sign(part(l)); });

  m.def("kp_check", [](const std::string& equation, int W, const std::set<int>& active, const py::object& u0,
                       const py::object& eps) {
    const auto tau = tau_from_disk(disk_potential(W, active.empty() ? 0 : *active.rbegin()), active, opt(u0), opt(eps));
    KPCheck c;
    if (equation == "bilinear-1") c = kp_bilinear_check(1, tau);
    else if (equation == "bilinear-2") c = kp_bilinear_check(2, tau);
    else if (equation == "kp-equation") c = kp_equation_check(tau);
    else throw py::value_error("equation must be bilinear-1, bilinear-2 or kp-equation");
    return py::make_tuple(c.residual_zero, c.weight_validated);
  }, py::arg("equation"), py::arg("max_weight"), py::arg("active"), py::arg("u0") = py::none(),
     py::arg("eps") = py::none());

  py::register_exception<std::domain_error>(m, "RefusedError", PyExc_ValueError);
}
