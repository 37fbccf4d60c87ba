#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wreathfock/characters.hpp"
#include "wreathfock/chern.hpp"
#include "wreathfock/correlators.hpp"
#include "wreathfock/fock.hpp"
#include "wreathfock/json_io.hpp"
#include "wreathfock/verify.hpp"
#include "wreathfock/wreath.hpp"

namespace py = pybind11;
namespace wfk = wreathfock;

namespace {

using PartsList = std::vector<int>;
using MultiParts = std::vector<std::vector<int>>;

wfk::Partition make_partition(const PartsList& parts) { return wfk::Partition(parts); }

wfk::MultiPartition make_multipartition(const MultiParts& comps) {
    std::vector<wfk::Partition> parts;
    parts.reserve(comps.size());
    for (const auto& c : comps) parts.emplace_back(c);
    return wfk::MultiPartition(static_cast<unsigned>(comps.size()), std::move(parts));
}

MultiParts dump_multipartition(const wfk::MultiPartition& mp) {
    MultiParts out;
    for (const auto& c : mp.components()) out.push_back(c.parts());
    return out;
}

py::object big_to_py(const wfk::BigInt& value) {
    return py::module_::import("builtins").attr("int")(value.str());
}

wfk::Charge make_charge(unsigned r, const std::vector<int>& coords) {
    if (coords.empty()) return wfk::Charge(r);
    return wfk::Charge(r, coords);
}

}  // namespace

PYBIND11_MODULE(_wreathfock, m) {
    m.doc() = "exact Fock-space and wreath-product class-algebra computations";

    m.def("multipartitions", [](int n, unsigned r) {
        std::vector<MultiParts> out;
        for (const auto& mp : wfk::enumerate_multipartitions(n, r))
            out.push_back(dump_multipartition(mp));
        return out;
    }, py::arg("n"), py::arg("r"));

    m.def("multipartition_count",
          [](int n, unsigned r) { return big_to_py(wfk::colored_partition_count(n, r)); },
          py::arg("n"), py::arg("r"));

    m.def("hook_product",
          [](const PartsList& parts) { return big_to_py(make_partition(parts).hook_product()); },
          py::arg("parts"));

    m.def("contents", [](const PartsList& parts) { return make_partition(parts).contents(); },
          py::arg("parts"));

    m.def("centralizer_order",
          [](const MultiParts& mp) { return big_to_py(make_multipartition(mp).centralizer_order()); },
          py::arg("mp"));

    m.def("degree", [](const MultiParts& mp) { return make_multipartition(mp).degree(); },
          py::arg("mp"));

    m.def("modified_type",
          [](const MultiParts& mp) { return dump_multipartition(make_multipartition(mp).modified_type()); },
          py::arg("mp"));

    m.def("sym_char",
          [](const PartsList& nu, const PartsList& mu) {
              return big_to_py(wfk::sym_char(make_partition(nu), make_partition(mu)));
          },
          py::arg("nu"), py::arg("mu"));

    // Heavier objects cross the boundary as canonical JSON strings; the
    // Python package turns them into dicts.
    m.def("char_table_json", [](unsigned r, int n, const std::string& cache_dir) {
        return wfk::to_json(wfk::wreath_char_table_cached(r, n, cache_dir)).dump();
    }, py::arg("r"), py::arg("n"), py::arg("cache_dir") = std::string());

    m.def("convolve_json",
          [](const std::string& f, const std::string& g, const std::string& method) {
              wfk::ClassFunction cf = wfk::class_function_from_json(wfk::Json::parse(f));
              wfk::ClassFunction cg = wfk::class_function_from_json(wfk::Json::parse(g));
              if (method == "bruteforce") {
                  wfk::WreathGroup G(cf.r, cf.n);
                  return wfk::to_json(wfk::convolve_bruteforce(G, cf, cg)).dump();
              }
              return wfk::to_json(wfk::convolve_fast(cf, cg)).dump();
          },
          py::arg("f"), py::arg("g"), py::arg("method") = "fast");

    m.def("heis_apply_json",
          [](int mode, const std::vector<std::string>& alpha, const std::string& v_json) {
              wfk::FockVector<wfk::Rational> v =
                  wfk::fock_vector_from_json(wfk::Json::parse(v_json));
              std::vector<wfk::Rational> coords;
              for (const auto& c : alpha) coords.push_back(wfk::rational_from_string(c));
              wfk::H1Vector dir(v.r(), std::move(coords));
              auto out = (mode == 0) ? wfk::heis_zero(dir, v) : wfk::heis_apply(mode, dir, v);
              return wfk::to_json(out).dump();
          },
          py::arg("mode"), py::arg("alpha"), py::arg("v"));

    m.def("eigen_series_json",
          [](const std::string& op, unsigned k, const std::vector<int>& charge,
             const MultiParts& lambda, int order) {
              wfk::MultiPartition mp = make_multipartition(lambda);
              wfk::Charge p = make_charge(mp.r(), charge);
              wfk::RatSeries series = [&] {
                  if (op == "eps") return wfk::eps_eigen(k, p, mp, order);
                  if (op == "hk") return wfk::hk_eigen(k, p, mp, order);
                  if (op == "gk") return wfk::gk_eigen(k, p, mp, order);
                  if (op == "gk-tilde") return wfk::gk_tilde_eigen(k, p, mp, order);
                  if (op == "jm") return wfk::jm_spectrum(mp.r(), mp.norm(), k, order).at(mp);
                  throw std::invalid_argument("unknown operator: " + op);
              }();
              return wfk::to_json(series).dump();
          },
          py::arg("op"), py::arg("k"), py::arg("charge"), py::arg("lambda"), py::arg("order") = 8);

    m.def("modified_chern_eigen",
          [](unsigned k, int mode, const std::vector<int>& charge, const MultiParts& lambda) {
              wfk::MultiPartition mp = make_multipartition(lambda);
              return wfk::rational_to_string(
                  wfk::modified_chern_eigen(k, mode, make_charge(mp.r(), charge), mp));
          },
          py::arg("k"), py::arg("m"), py::arg("charge"), py::arg("lambda"));

    m.def("npoint_json",
          [](const MultiParts& lambda, const MultiParts& mu, const std::vector<unsigned>& ks,
             int order, const std::string& method) {
              auto result = (method == "reduced")
                                ? wfk::npoint_reduced(make_multipartition(lambda),
                                                      make_multipartition(mu), ks, order)
                                : wfk::npoint_direct(make_multipartition(lambda),
                                                     make_multipartition(mu), ks, order);
              return wfk::to_json(result.series).dump();
          },
          py::arg("lambda"), py::arg("mu"), py::arg("ks"), py::arg("order") = 6,
          py::arg("method") = "direct");

    m.def("tau_json",
          [](unsigned r, const std::vector<int>& charge, int total_degree, int t_max,
             const std::vector<int>& x_modes) {
              wfk::TauParams params;
              params.degree = total_degree;
              params.t_max = t_max;
              params.x_modes = x_modes;
              auto result = wfk::tau_truncated(make_charge(r, charge), params);
              return wfk::to_json(result.series).dump();
          },
          py::arg("r"), py::arg("charge"), py::arg("degree") = 4, py::arg("t_max") = 4,
          py::arg("x_modes") = std::vector<int>{});

    m.def("toda_residuals_json",
          [](unsigned r, unsigned color, int charge_lo, int charge_hi, int total_degree, int t_max,
             const std::vector<int>& x_modes) {
              wfk::TauParams params;
              params.degree = total_degree;
              params.t_max = t_max;
              params.x_modes = x_modes;
              auto conv = wfk::calibrate_toda_convention(r, color, total_degree, t_max);
              std::map<int, std::string> out;
              for (const auto& [charge, series] :
                   wfk::toda_residual(r, color, charge_lo, charge_hi, params, conv))
                  out[charge] = wfk::to_json(series).dump();
              return out;
          },
          py::arg("r"), py::arg("color"), py::arg("charge_lo") = -2, py::arg("charge_hi") = 2,
          py::arg("degree") = 4, py::arg("t_max") = 4, py::arg("x_modes") = std::vector<int>{});

    m.def("mckay_check", [](unsigned r) {
        auto report = wfk::mckay_check(r);
        return py::make_tuple(report.ok, report.detail);
    }, py::arg("r"));

    m.def("verify", [](const std::string& suite) {
        py::list out;
        for (const auto& res : wfk::run_verify_suite(suite, wfk::VerifyOptions{}))
            out.append(py::make_tuple(res.name, res.pass, res.detail));
        return out;
    }, py::arg("suite") = "all");

    py::register_exception<wfk::guard_error>(m, "GuardError", PyExc_RuntimeError);
}
