#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "growthcodes/construct.hpp"
#include "growthcodes/errors.hpp"
#include "growthcodes/growth.hpp"
#include "growthcodes/io.hpp"
#include "growthcodes/reedmuller.hpp"
#include "growthcodes/seeds.hpp"

namespace py = pybind11;
using namespace growthcodes;

namespace {

py::object to_py(const BigInt& v) { return py::module_::import("builtins").attr("int")(v.str()); }

py::object to_py(const Rational& q) {
  return py::module_::import("fractions").attr("Fraction")(to_py(numerator(q)), to_py(denominator(q)));
}

BigInt from_py(const py::int_& v) { return BigInt(py::str(v).cast<std::string>()); }

py::dict params_dict(const CodeParams& p) {
  py::dict d;
  d["n"] = to_py(p.n);
  d["k"] = to_py(p.k);
  d["d"] = to_py(p.d);
  d["u"] = p.u ? to_py(*p.u) : py::none();
  d["kd_over_n"] = to_py(kd_over_n(p));
  return d;
}

py::dict chain_dict(const ChainParams& c) {
  py::dict d = params_dict(c.params());
  d["j"] = c.j;
  d["d_exact"] = c.d_exact;
  d["bounded_after"] = c.bounded_after;
  d["input_inequality_ok"] = c.input_inequality_ok;
  return d;
}

std::vector<std::vector<Residue>> rows_of(const FieldMatrix& m) {
  std::vector<std::vector<Residue>> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) out[r].assign(m.row(r).begin(), m.row(r).end());
  return out;
}

FieldMatrix matrix_from(std::uint64_t q, const std::vector<std::vector<std::int64_t>>& rows) {
  const PrimeField f(q);
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  FieldMatrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw LengthMismatch("rows have different lengths");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = f.reduce(rows[r][c]);
  }
  return m;
}

SearchOptions search(std::optional<std::uint64_t> budget, unsigned workers) {
  SearchOptions s = SearchOptions::from_environment();
  if (budget) s.budget = *budget;
  s.workers = workers;
  return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Recursive linear code families over prime fields";

  auto base = py::register_exception<Error>(m, "GrowthCodesError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());
  py::register_exception<DependentBasis>(m, "DependentBasis", base.ptr());
  py::register_exception<CompositeModulus>(m, "CompositeModulus", base.ptr());
  py::register_exception<RangeViolation>(m, "RangeViolation", base.ptr());
  py::register_exception<UnknownFamily>(m, "UnknownFamily", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  m.def("is_prime", &is_prime, py::arg("p"));

  py::class_<LinearCode>(m, "LinearCode")
      .def(py::init([](std::uint64_t q, const std::vector<std::vector<std::int64_t>>& rows) {
             return LinearCode(matrix_from(q, rows));
           }),
           py::arg("q"), py::arg("rows"))
      .def_static("from_text",
                  [](const std::string& text) {
                    std::istringstream in(text);
                    return read_code(in);
                  })
      .def("to_text", [](const LinearCode& c) { return to_text(c.generator()); })
      .def_property_readonly("q", [](const LinearCode& c) { return c.field().modulus(); })
      .def_property_readonly("length", &LinearCode::length)
      .def_property_readonly("dimension", &LinearCode::dimension)
      .def_property_readonly("rows", [](const LinearCode& c) { return rows_of(c.generator()); })
      .def("basis_weights", &LinearCode::basis_weights)
      .def_property_readonly("verified_distance", [](const LinearCode& c) { return c.verified_distance(); })
      .def(
          "min_distance",
          [](LinearCode& c, std::optional<std::uint64_t> budget, unsigned workers) {
            const SearchOptions s = search(budget, workers);
            py::gil_scoped_release release;
            return min_distance_exhaustive(c, s);
          },
          py::arg("budget") = py::none(), py::arg("workers") = 1)
      .def("__eq__", [](const LinearCode& a, const LinearCode& b) { return a == b; })
      .def("__repr__", [](const LinearCode& c) {
        std::ostringstream s;
        s << "LinearCode(q=" << c.field().modulus() << ", n=" << c.length() << ", k=" << c.dimension() << ")";
        return s.str();
      });

  m.def("direct_sum", &direct_sum, py::arg("code"), py::arg("s"));
  m.def("repetition", &repetition, py::arg("code"), py::arg("s"));
  m.def("construction_step", py::overload_cast<const LinearCode&>(&construction_step), py::arg("code"));
  m.def(
      "iterate", [](const LinearCode& c, std::uint64_t steps) { return iterate(c, steps); }, py::arg("code"),
      py::arg("steps"));
  m.def(
      "check_bounded",
      [](LinearCode& c, std::uint64_t u, std::optional<std::uint64_t> budget) {
        const BoundednessReport r = check_bounded(c, u, search(budget, 1));
        py::dict d;
        d["u"] = r.u;
        d["bounded"] = r.bounded();
        d["weights_equal_u"] = r.cond_weights_ok;
        d["sum_weight_equals_d"] = r.cond_sum_ok;
        d["inequality"] = r.cond_inequality_ok;
        d["d"] = r.d_used;
        d["sum_weight"] = r.sum_weight;
        d["basis_weights"] = r.basis_weights;
        return d;
      },
      py::arg("code"), py::arg("u"), py::arg("budget") = py::none());
  m.def(
      "predict_params",
      [](const py::int_& n, const py::int_& k, const py::int_& d, const py::int_& u, std::uint64_t j) {
        return chain_dict(predict_params(from_py(n), from_py(k), from_py(d), from_py(u), j));
      },
      py::arg("n"), py::arg("k"), py::arg("d"), py::arg("u"), py::arg("j"));

  m.def(
      "seed_matrix", [](std::uint64_t i, std::uint64_t q) { return rows_of(build_seed_matrices(PrimeField(q), i).A); },
      py::arg("i"), py::arg("q") = 2);
  m.def(
      "seed_code", [](std::uint64_t i, std::uint64_t q) { return seed_code(PrimeField(q), i); }, py::arg("i"),
      py::arg("q") = 2);
  m.def(
      "family_code",
      [](std::uint64_t i, std::uint64_t j, std::uint64_t q, bool verify) {
        FamilyOptions opts;
        opts.verify = verify;
        FamilyMember member = family_code(PrimeField(q), i, j, opts);
        py::dict d = chain_dict(member.params);
        d["code"] = member.code ? py::cast(*member.code) : py::none();
        return d;
      },
      py::arg("i"), py::arg("j"), py::arg("q") = 2, py::arg("verify") = true);
  m.def(
      "series_params",
      [](std::uint64_t i) {
        const SeriesMember s = series_params(i);
        py::dict d = chain_dict(s.params);
        d["i"] = s.i;
        d["kd_over_n"] = to_py(s.kd_over_n);
        d["j_alternate"] = s.j_alternate;
        d["alternate"] = chain_dict(s.alternate_params);
        d["alternate_kd_over_n"] = to_py(s.alternate_kd_over_n);
        return d;
      },
      py::arg("i"));

  m.def(
      "rm_generator", [](std::uint64_t mm, std::uint64_t r) { return rm_generator(mm, r); }, py::arg("m"),
      py::arg("r"));
  m.def(
      "rm_params", [](std::uint64_t mm, std::uint64_t r) { return params_dict(rm_params(mm, r).params); },
      py::arg("m"), py::arg("r"));
  m.def(
      "rm_third",
      [](std::uint64_t mm) {
        const RMThirdRecord rec = rm_third_series(mm);
        py::dict d = params_dict(rec.rm.params);
        d["m"] = rec.rm.m;
        d["r"] = rec.rm.r;
        d["asymptote_ratio"] = rec.asymptote_ratio;
        return d;
      },
      py::arg("m"));

  m.def(
      "theorem_main_check",
      [](std::uint64_t i_max) {
        py::list out;
        for (const auto& row : theorem_main_check(i_max)) out.append(py::make_tuple(row.i, to_py(row.k), row.holds));
        return out;
      },
      py::arg("i_max"));
  m.def(
      "growth_table",
      [](const std::string& family, std::uint64_t first, std::uint64_t last, std::uint64_t seed_i, std::uint64_t q,
         bool verify, const std::string& format) {
        GrowthQuery query;
        query.family = parse_family(family);
        query.first = first;
        query.last = last;
        query.seed_i = seed_i;
        query.field = q;
        query.options.verify = verify;
        query.options.search = SearchOptions::from_environment();
        const auto rows = growth_table(query);
        if (format == "json") return growth_json(rows).dump(2) + "\n";
        if (format != "csv") throw InvalidArgument("format must be csv or json");
        std::ostringstream out;
        write_growth_csv(out, rows);
        return out.str();
      },
      py::arg("family"), py::arg("first") = 1, py::arg("last") = 1, py::arg("seed_i") = 2, py::arg("q") = 2,
      py::arg("verify") = true, py::arg("format") = "csv");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
