#include "loccalc/job.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>

#include "CLI11.hpp"
#include "loccalc/expr.hpp"
#include "loccalc/gysin.hpp"
#include "loccalc/localize.hpp"
#include "loccalc/symfun.hpp"

namespace loccalc {

namespace {

constexpr int kCrossCheckPoints = 3;

void putResult(Json& doc, const Poly& p) {
  if (p.isConstant()) {
    Rational v = p.constantTerm();
    doc["value"] = toString(v);
    doc["integer"] = isInteger(v);
  } else {
    doc["polynomial"] = render(p);
  }
}

Json crossChecks(bool evaluation, std::optional<bool> oracle) {
  Json checks;
  checks["evaluation"] = evaluation;
  checks["oracle"] = oracle ? Json(*oracle) : Json(nullptr);
  return checks;
}

Poly lowerInput(const std::string& src, std::size_t nvars, char prefix) {
  return lowerToPoly(parseExpr(src), nvars, prefix);
}

Json runFlagIntegral(const JobSpec& spec) {
  RootSystem rs = buildRootSystem(spec.type, spec.rank);
  FlagIntegralProblem problem(rs, lowerInput(spec.poly, rs.nvars, 'y'));
  Poly result;
  std::size_t fixedPoints = weylGroupOrder(spec.type, spec.rank);
  if (spec.method == Method::Symbolic) {
    result = flagIntegral(problem, {spec.threads}).polynomial;
    for (const auto& x : crossCheckPoints(rs.nvars, spec.seed, kCrossCheckPoints)) {
      if (flagIntegralAt(problem, x) != evalAt(result, x)) {
        throw InvariantViolation("flag integral: symbolic result disagrees with scalar fixed-point sum");
      }
    }
  } else {
    result = Poly::constant(rs.ring(), flagIntegralByEvaluation(problem, spec.seed, kCrossCheckPoints));
  }
  Json doc;
  doc["command"] = "flag-integral";
  putResult(doc, result);
  doc["fixed_points"] = fixedPoints;
  doc["cross_checks"] = crossChecks(true, std::nullopt);
  return doc;
}

Json runGrassmann(const JobSpec& spec) {
  GrassmannProblem problem(spec.n, spec.k, spec.exponents);
  const Ring ring{static_cast<std::size_t>(spec.n), 'u'};
  Poly result;
  std::size_t fixedPoints = 0;
  if (spec.method == Method::Symbolic) {
    auto r = grassmannianChernNumber(problem, {spec.threads});
    result = r.polynomial;
    fixedPoints = r.fixedPoints;
    for (const auto& x : crossCheckPoints(ring.nvars, spec.seed, kCrossCheckPoints)) {
      if (grassmannianChernNumberAt(problem, x) != evalAt(result, x)) {
        throw InvariantViolation("Grassmannian: symbolic result disagrees with scalar fixed-point sum");
      }
    }
  } else {
    result = Poly::constant(ring, grassmannianByEvaluation(problem, spec.seed, kCrossCheckPoints));
    fixedPoints = subsets(spec.n, spec.k).size();
  }
  std::optional<bool> oracle;
  if (spec.oracleCheck && problem.weightedDegree() <= problem.dimension()) {
    // The fixed-point formula carries the orientation sign (-1)^{k(n-k)}
    // relative to the Schubert-calculus value.
    Rational expected = chernMonomialIntegral(spec.exponents, spec.n, spec.k);
    if (problem.dimension() % 2 == 1) expected = -expected;
    if (!result.isConstant() || result.constantTerm() != expected) {
      throw InvariantViolation("Grassmannian: localization value " + render(result) +
                               " disagrees with Pieri oracle " + toString(expected));
    }
    oracle = true;
  }
  Json doc;
  doc["command"] = "grassmann";
  putResult(doc, result);
  doc["fixed_points"] = fixedPoints;
  doc["cross_checks"] = crossChecks(true, oracle);
  return doc;
}

Json runEulerChar(const JobSpec& spec) {
  RootSystem rs = buildRootSystem(spec.type, spec.rank);
  const std::uint64_t order = weylGroupOrder(spec.type, spec.rank);
  FlagIntegralProblem problem(rs, topClass(rs));
  Rational evaluated = flagIntegralByEvaluation(problem, spec.seed, kCrossCheckPoints);
  Rational value = spec.method == Method::Symbolic ? flagIntegral(problem, {spec.threads}).value() : evaluated;
  if (value != evaluated) throw InvariantViolation("Euler characteristic: symbolic and evaluation paths disagree");
  if (value != Rational(Integer(std::to_string(order), 10))) {
    throw InvariantViolation("Euler characteristic: integral " + toString(value) + " differs from |W| = " +
                             std::to_string(order));
  }
  Json doc;
  doc["command"] = "euler-char";
  doc["value"] = toString(value);
  doc["integer"] = true;
  doc["fixed_points"] = order;
  doc["cross_checks"] = crossChecks(true, true);
  return doc;
}

Json runGysinFlag(const JobSpec& spec) {
  if (spec.rank < 1) throw PreconditionError("flag bundle rank must be at least 1");
  const auto n = static_cast<std::size_t>(spec.rank);
  FiberClass b(spec.rank, lowerInput(spec.poly, n, 'a'));
  PushforwardResult result = flagPushforward(b, {spec.dualRoots});
  std::size_t fixedPoints = 1;
  for (std::size_t i = 2; i <= n; ++i) fixedPoints *= i;
  if (n >= 2) {
    FlagIntegralProblem literal(buildRootSystem(RootType::A, spec.rank - 1), b.poly.withPrefix('y'));
    for (const auto& x : crossCheckPoints(n, spec.seed, kCrossCheckPoints)) {
      if (flagIntegralAt(literal, x) != evalAt(result.symmetricPoly, x)) {
        throw InvariantViolation("gysin-flag: pushforward disagrees with scalar symmetrizer");
      }
    }
  }
  Json doc;
  doc["command"] = "gysin-flag";
  doc["symmetric"] = render(result.symmetricPoly);
  doc["chern_basis"] = result.chernForm.render();
  doc["fixed_points"] = fixedPoints;
  doc["cross_checks"] = crossChecks(true, std::nullopt);
  return doc;
}

}  // namespace

std::string toString(Command command) {
  switch (command) {
    case Command::FlagIntegral: return "flag-integral";
    case Command::Grassmann: return "grassmann";
    case Command::GysinFlag: return "gysin-flag";
    case Command::EulerChar: return "euler-char";
  }
  return "?";
}

Json runJob(const JobSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  Json doc;
  switch (spec.command) {
    case Command::FlagIntegral: doc = runFlagIntegral(spec); break;
    case Command::Grassmann: doc = runGrassmann(spec); break;
    case Command::GysinFlag: doc = runGysinFlag(spec); break;
    case Command::EulerChar: doc = runEulerChar(spec); break;
  }
  const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
  doc["elapsed_ms"] = std::round(elapsed.count() * 1000.0) / 1000.0;
  return doc;
}

Json errorDocument(int code, const std::string& message, std::optional<std::size_t> position) {
  Json inner;
  inner["code"] = code;
  inner["message"] = message;
  inner["position"] = position ? Json(*position) : Json(nullptr);
  Json doc;
  doc["error"] = std::move(inner);
  return doc;
}

Json errorDocument(const Error& error) {
  std::optional<std::size_t> position;
  if (const auto* parse = dynamic_cast<const ParseError*>(&error)) position = parse->position();
  return errorDocument(error.exitCode(), error.what(), position);
}

int runCli(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Exact fixed-point (localization) computations on flag manifolds and Grassmannians", "loccalc"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  bool jsonOutput = true;
  bool pretty = false;
  std::string method = "symbolic";
  JobSpec spec;
  std::string typeName = "A";

  app.add_flag("--json", jsonOutput, "Emit JSON (default)");
  app.add_flag("--pretty", pretty, "Indent the JSON output");
  app.add_option("--threads", spec.threads, "Worker threads for fixed-point sums")->check(CLI::Range(1U, 256U));
  app.add_option("--seed", spec.seed, "Seed for evaluation cross-check points");
  app.add_option("--method", method, "symbolic (default) or evaluation")
      ->check(CLI::IsMember({"symbolic", "evaluation"}));

  auto* grassmann = app.add_subcommand("grassmann", "Chern number of the tautological subbundle on G(k, C^n)");
  grassmann->add_option("--n", spec.n, "Ambient dimension")->required();
  grassmann->add_option("--k", spec.k, "Subspace dimension")->required();
  grassmann->add_option("--exponents", spec.exponents, "m1,...,mk for c_1(S)^m1 ... c_k(S)^mk")
      ->required()
      ->delimiter(',');
  grassmann->add_flag("--oracle-check", spec.oracleCheck, "Compare with the Pieri-rule Schubert calculus oracle");

  auto* flag = app.add_subcommand("flag-integral", "Integral of f(y) over G/T");
  flag->add_option("--type", typeName, "Root system type")->required()->check(CLI::IsMember({"A", "B", "C", "D"}));
  flag->add_option("--rank", spec.rank, "Rank")->required();
  flag->add_option("--poly", spec.poly, "Integrand in y1..yn")->required();

  auto* gysin = app.add_subcommand("gysin-flag", "Gysin pushforward along a complete flag bundle");
  gysin->add_option("--rank", spec.rank, "Rank of the vector bundle")->required();
  gysin->add_option("--poly", spec.poly, "Class in a1..an")->required();
  gysin->add_flag("--dual-roots", spec.dualRoots, "Read a_i as -(Chern roots) for the e-basis output");

  auto* euler = app.add_subcommand("euler-char", "Euler characteristic of G/T as a fixed-point count");
  euler->add_option("--type", typeName, "Root system type")->required()->check(CLI::IsMember({"A", "B", "C", "D"}));
  euler->add_option("--rank", spec.rank, "Rank")->required();

  auto emit = [&](const Json& doc) { out << (pretty ? doc.dump(2) : doc.dump()) << '\n'; };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, out);
  } catch (const CLI::ParseError& e) {
    emit(errorDocument(2, e.what()));
    return 2;
  }

  if (grassmann->parsed()) spec.command = Command::Grassmann;
  if (flag->parsed()) spec.command = Command::FlagIntegral;
  if (gysin->parsed()) spec.command = Command::GysinFlag;
  if (euler->parsed()) spec.command = Command::EulerChar;
  spec.method = method == "evaluation" ? Method::Evaluation : Method::Symbolic;

  try {
    spec.type = parseRootType(typeName);
    emit(runJob(spec));
    return 0;
  } catch (const Error& e) {
    emit(errorDocument(e));
    return e.exitCode();
  } catch (const std::exception& e) {
    emit(errorDocument(4, std::string("internal error: ") + e.what()));
    return 4;
  }
}

}  // namespace loccalc
