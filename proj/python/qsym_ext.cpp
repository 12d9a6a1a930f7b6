#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "qsym/cli.hpp"
#include "qsym/errors.hpp"
#include "qsym/identities.hpp"
#include "qsym/qbernoulli.hpp"
#include "qsym/qcore.hpp"
#include "qsym/serialize.hpp"
#include "qsym/volkenborn.hpp"

namespace py = pybind11;
using namespace qsym;

namespace {

using Terms = std::vector<std::pair<std::int64_t, std::string>>;

Terms terms_of(const LaurentPoly& p) {
  Terms out;
  for (const auto& [e, c] : p.terms()) {
    out.emplace_back(e, c.to_string());
  }
  return out;
}

LaurentPoly laurent_of(const Terms& terms) {
  std::vector<LaurentPoly::Term> v;
  for (const auto& [e, c] : terms) {
    v.emplace_back(e, Rational::parse(c));
  }
  return LaurentPoly::from_terms(std::move(v));
}

using Range = std::pair<std::int64_t, std::int64_t>;

PadicContext make_context(std::int64_t p, std::int64_t levels, const std::optional<std::string>& q0,
                          std::int64_t budget) {
  const Rational q = q0 ? Rational::parse(*q0) : (is_prime(p) ? PadicContext::default_q0(p) : Rational(0));
  return PadicContext(p, q, levels, budget);
}

CheckReport check_by_name(const std::string& name, std::int64_t n, std::optional<std::int64_t> r,
                          std::optional<std::int64_t> h, std::optional<std::int64_t> w1,
                          std::optional<std::int64_t> w2, std::optional<std::int64_t> x) {
  const Identity id = identity_from_name(name);
  auto need = [&](const std::optional<std::int64_t>& v, const char* field) {
    if (!v) {
      throw DomainError(std::string(identity_name(id)) + " needs " + field);
    }
    return *v;
  };
  switch (id) {
    case Identity::recurrence:
      return check_recurrence(n);
    case Identity::shift:
      return check_shift(n);
    case Identity::expansion:
      return check_expansion(n, need(x, "x"));
    case Identity::limit_q1:
      return check_limit_q1(n, need(r, "r"), need(x, "x"));
    case Identity::thm3:
      return check_thm3(n, need(r, "r"), need(w1, "w1"), need(w2, "w2"), need(x, "x"));
    case Identity::thm4:
      return check_thm4(n, need(r, "r"), need(w1, "w1"), need(w2, "w2"), need(x, "x"));
    case Identity::thm5:
      return check_thm5(n, need(h, "h"), need(r, "r"), need(w1, "w1"), need(w2, "w2"), need(x, "x"));
    case Identity::thm6:
      return check_thm6(n, need(h, "h"), need(r, "r"), need(w1, "w1"), need(w2, "w2"), need(x, "x"));
    case Identity::multiplication:
      return check_multiplication(n, need(r, "r"), need(w1, "w1"), need(x, "x"));
  }
  throw DomainError("unknown identity");
}

}  // namespace

PYBIND11_MODULE(_qsym, m) {
  m.doc() = "Exact Carlitz q-Bernoulli polynomials as rational functions in q";

  // Translators run newest first, so bases are registered before subclasses.
  auto base_error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  auto domain_error = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", base_error.ptr());
  py::register_exception<DivisionByZero>(m, "DivisionByZero", domain_error.ptr());
  py::register_exception<PoleError>(m, "PoleError", domain_error.ptr());
  py::register_exception<DegeneracyError>(m, "DegeneracyError", domain_error.ptr());

  py::class_<RatFun>(m, "RatFun", "Element of Q(q), always shown in canonical form")
      .def(py::init<long>(), py::arg("c") = 0)
      .def(py::init([](const Terms& num, const Terms& den) { return RatFun(laurent_of(num), laurent_of(den)); }),
           py::arg("num"), py::arg("den"))
      .def_static("from_json", [](const std::string& text) { return ratfun_from_json(Json::parse(text)); })
      .def("to_json", [](const RatFun& f) { return to_json(f).dump(); })
      .def("numerator", [](const RatFun& f) { return terms_of(f.canonical().numerator()); })
      .def("denominator", [](const RatFun& f) { return terms_of(f.canonical().denominator()); })
      .def("pretty", &RatFun::pretty)
      .def("is_zero", &RatFun::is_zero)
      .def("eval", [](const RatFun& f, const std::string& q0) { return f.eval(Rational::parse(q0)).to_string(); })
      .def("limit_at_one", [](const RatFun& f) { return f.limit_at_one().to_string(); })
      .def("pow", &RatFun::pow)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__ne__", [](const RatFun& a, const RatFun& b) { return !(a == b); })
      .def("__str__", &RatFun::pretty)
      .def("__repr__", [](const RatFun& f) { return "RatFun(" + f.pretty() + ")"; });

  m.def("q_power", &RatFun::q_power, py::arg("k"));
  m.def(
      "q_bracket", [](std::int64_t m_, std::int64_t w) { return q_bracket(m_, BaseExp(w)); }, py::arg("m"),
      py::arg("w") = 1);
  m.def(
      "q_factorial", [](std::int64_t r, std::int64_t w) { return q_factorial(r, BaseExp(w)); }, py::arg("r"),
      py::arg("w") = 1);
  m.def(
      "q_binomial", [](std::int64_t m_, std::int64_t r, std::int64_t w) { return q_binomial(m_, r, BaseExp(w)); },
      py::arg("m"), py::arg("r"), py::arg("w") = 1);

  m.def(
      "beta_higher",
      [](std::int64_t n, std::int64_t r, std::int64_t w, std::int64_t arg) {
        return beta_higher(BetaQuery{n, r, BaseExp(w), arg});
      },
      py::arg("n"), py::arg("r") = 1, py::arg("w") = 1, py::arg("arg") = 0);
  m.def("beta_number", &beta_number, py::arg("n"));
  m.def(
      "beta_weighted",
      [](std::int64_t n, std::int64_t h, std::int64_t r, std::int64_t w, std::int64_t arg) {
        return beta_weighted(WeightedBetaQuery{n, h, r, BaseExp(w), arg});
      },
      py::arg("n"), py::arg("h"), py::arg("r") = 1, py::arg("w") = 1, py::arg("arg") = 0);
  m.def("is_nondegenerate", &is_nondegenerate, py::arg("n"), py::arg("h"), py::arg("r"));
  m.def(
      "t_sum",
      [](std::int64_t n, std::int64_t i, std::int64_t r, std::int64_t wlim, std::int64_t b) {
        return t_sum(n, i, r, wlim, BaseExp(b));
      },
      py::arg("n"), py::arg("i"), py::arg("r"), py::arg("wlim"), py::arg("b") = 1);
  m.def(
      "t_sum_h",
      [](std::int64_t n, std::int64_t i, std::int64_t h, std::int64_t r, std::int64_t wlim, std::int64_t b) {
        return t_sum_h(n, i, h, r, wlim, BaseExp(b));
      },
      py::arg("n"), py::arg("i"), py::arg("h"), py::arg("r"), py::arg("wlim"), py::arg("b") = 1);
  m.def(
      "classical_bernoulli_higher",
      [](std::int64_t n, std::int64_t r, const std::string& x) {
        return classical_bernoulli_higher(n, r, Rational::parse(x)).to_string();
      },
      py::arg("n"), py::arg("r"), py::arg("x") = "0");

  py::class_<CheckReport>(m, "CheckReport")
      .def_property_readonly("identity", [](const CheckReport& c) { return std::string(identity_name(c.identity)); })
      .def_property_readonly("params", [](const CheckReport& c) { return to_json(c.params).dump(); })
      .def_readonly("lhs", &CheckReport::lhs)
      .def_readonly("rhs", &CheckReport::rhs)
      .def_readonly("holds", &CheckReport::holds)
      .def(
          "to_json", [](const CheckReport& c, bool with_sides) { return to_json(c, with_sides).dump(); },
          py::arg("with_sides") = false);

  m.def("identity_names", [] {
    std::vector<std::string> names;
    for (Identity id : all_identities()) {
      names.emplace_back(identity_name(id));
    }
    return names;
  });
  m.def("check", &check_by_name, py::arg("identity"), py::arg("n"), py::arg("r") = py::none(),
        py::arg("h") = py::none(), py::arg("w1") = py::none(), py::arg("w2") = py::none(), py::arg("x") = py::none(),
        py::call_guard<py::gil_scoped_release>());
  m.def(
      "sweep",
      [](const std::vector<std::string>& identities, Range n, Range r, Range h, Range w1, Range w2, Range x,
         unsigned threads, bool mutate) {
        SweepConfig cfg;
        cfg.identities.clear();
        for (const auto& name : identities) {
          cfg.identities.push_back(identity_from_name(name));
        }
        cfg.n = {n.first, n.second};
        cfg.r = {r.first, r.second};
        cfg.h = {h.first, h.second};
        cfg.w1 = {w1.first, w1.second};
        cfg.w2 = {w2.first, w2.second};
        cfg.x = {x.first, x.second};
        cfg.threads = threads;
        cfg.mutation = mutate ? Mutation::thm4_lhs_exponent : Mutation::none;
        return sweep(cfg);
      },
      py::arg("identities"), py::arg("n") = Range{0, 3}, py::arg("r") = Range{1, 2}, py::arg("h") = Range{1, 4},
      py::arg("w1") = Range{1, 3}, py::arg("w2") = Range{1, 3}, py::arg("x") = Range{0, 1}, py::arg("threads") = 1,
      py::arg("mutate") = false, py::call_guard<py::gil_scoped_release>());

  m.def(
      "p_valuation",
      [](const std::string& r, std::int64_t p) -> std::optional<std::int64_t> {
        const Valuation v = p_valuation(Rational::parse(r), p);
        if (v.is_infinite()) {
          return std::nullopt;
        }
        return v.value();
      },
      py::arg("r"), py::arg("p"));
  m.def(
      "riemann_sum_multi",
      [](std::int64_t n, std::int64_t r, std::int64_t x, std::int64_t p, std::int64_t level,
         const std::optional<std::string>& q0, std::int64_t budget, unsigned threads) {
        return riemann_sum_multi(n, r, x, make_context(p, level, q0, budget), level, threads).to_string();
      },
      py::arg("n"), py::arg("r"), py::arg("x"), py::arg("p"), py::arg("N"), py::arg("q0") = py::none(),
      py::arg("budget") = PadicContext::kDefaultBudget, py::arg("threads") = 1,
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "riemann_sum_weighted",
      [](std::int64_t n, std::int64_t h, std::int64_t r, std::int64_t x, std::int64_t p, std::int64_t level,
         const std::optional<std::string>& q0, std::int64_t budget, unsigned threads) {
        return riemann_sum_weighted(n, h, r, x, make_context(p, level, q0, budget), level, threads).to_string();
      },
      py::arg("n"), py::arg("h"), py::arg("r"), py::arg("x"), py::arg("p"), py::arg("N"), py::arg("q0") = py::none(),
      py::arg("budget") = PadicContext::kDefaultBudget, py::arg("threads") = 1,
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "convergence_report",
      [](const std::string& family, std::int64_t n, std::int64_t r, std::int64_t h, std::int64_t x, std::int64_t p,
         std::int64_t levels, const std::optional<std::string>& q0, std::int64_t budget, unsigned threads) {
        const auto rep = convergence_report(family_from_name(family), FamilyParams{n, r, h, x},
                                            make_context(p, levels, q0, budget), threads);
        return to_json(rep).dump();
      },
      py::arg("family"), py::arg("n"), py::arg("r") = 1, py::arg("h") = 1, py::arg("x") = 0, py::arg("p") = 5,
      py::arg("N") = 3, py::arg("q0") = py::none(), py::arg("budget") = PadicContext::kDefaultBudget,
      py::arg("threads") = 1, py::call_guard<py::gil_scoped_release>());

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return std::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), py::call_guard<py::gil_scoped_release>());
}
