#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "loccalc/expr.hpp"
#include "loccalc/gysin.hpp"
#include "loccalc/job.hpp"
#include "loccalc/localize.hpp"
#include "loccalc/symfun.hpp"

namespace py = pybind11;
using namespace loccalc;

namespace {

// Constants come back as "p/q" text, anything else as the rendered polynomial.
py::tuple resultPair(const Poly& p) {
  if (p.isConstant()) return py::make_tuple(true, toString(p.constantTerm()));
  return py::make_tuple(false, render(p));
}

py::tuple grassmann(int n, int k, std::vector<int> exponents, unsigned threads, bool evaluation) {
  GrassmannProblem problem(n, k, std::move(exponents));
  if (evaluation) return py::make_tuple(true, toString(grassmannianByEvaluation(problem, 1)));
  Poly p;
  {
    py::gil_scoped_release release;
    p = grassmannianChernNumber(problem, {threads}).polynomial;
  }
  return resultPair(p);
}

py::tuple flagIntegralPy(const std::string& type, int rank, const std::string& poly, unsigned threads,
                         bool negatedRoots) {
  RootSystem rs = buildRootSystem(parseRootType(type), rank);
  FlagIntegralProblem problem(rs, parsePoly(poly, rs.nvars, 'y'));
  LocalizationOptions options{threads, negatedRoots ? RootConvention::Negated : RootConvention::Standard};
  Poly p;
  {
    py::gil_scoped_release release;
    p = flagIntegral(problem, options).polynomial;
  }
  return resultPair(p);
}

py::tuple gysinFlag(int rank, const std::string& poly, bool dualRoots) {
  if (rank < 1) throw PreconditionError("flag bundle rank must be at least 1");
  FiberClass b(rank, parsePoly(poly, static_cast<std::size_t>(rank), 'a'));
  auto r = flagPushforward(b, {dualRoots});
  return py::make_tuple(render(r.symmetricPoly), r.chernForm.render());
}

std::uint64_t eulerChar(const std::string& type, int rank, bool evaluation, unsigned threads) {
  py::gil_scoped_release release;
  return eulerCharacteristicGT(parseRootType(type), rank, evaluation ? EulerMethod::Evaluation : EulerMethod::Symbolic,
                               {threads});
}

py::tuple runCliPy(const std::vector<std::string>& args) {
  std::ostringstream out;
  int status = runCli(args, out);
  return py::make_tuple(status, out.str());
}

}  // namespace

PYBIND11_MODULE(_loccalc, m) {
  m.doc() = "Exact fixed-point computations on flag manifolds and Grassmannians";

  auto base = py::register_exception<Error>(m, "LoccalcError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<InvariantViolation>(m, "InvariantViolation", base.ptr());

  m.def("grassmann", &grassmann, py::arg("n"), py::arg("k"), py::arg("exponents"), py::arg("threads") = 1,
        py::arg("evaluation") = false);
  m.def("flag_integral", &flagIntegralPy, py::arg("type"), py::arg("rank"), py::arg("poly"),
        py::arg("threads") = 1, py::arg("negated_roots") = false);
  m.def("gysin_flag", &gysinFlag, py::arg("rank"), py::arg("poly"), py::arg("dual_roots") = false);
  m.def("euler_characteristic", &eulerChar, py::arg("type"), py::arg("rank"), py::arg("evaluation") = false,
        py::arg("threads") = 1);
  m.def(
      "chern_number_oracle",
      [](std::vector<int> exponents, int n, int k) { return toString(chernMonomialIntegral(exponents, n, k)); },
      py::arg("exponents"), py::arg("n"), py::arg("k"));
  m.def(
      "parse", [](const std::string& src) { return toString(parseExpr(src)); }, py::arg("src"));
  m.def(
      "expand",
      [](const std::string& src, std::size_t nvars) { return render(parsePoly(src, nvars)); },
      py::arg("src"), py::arg("nvars"));
  m.def("run_cli", &runCliPy, py::arg("args"));
}
