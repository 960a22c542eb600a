#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "loccalc/error.hpp"
#include "loccalc/weyl.hpp"

namespace loccalc {

enum class Command { FlagIntegral, Grassmann, GysinFlag, EulerChar };
enum class Method { Symbolic, Evaluation };

std::string toString(Command command);

/// One CLI invocation. Only the fields of the chosen command are read.
struct JobSpec {
  Command command = Command::EulerChar;
  // flag-integral, euler-char
  RootType type = RootType::A;
  int rank = 0;
  // grassmann
  int n = 0;
  int k = 0;
  std::vector<int> exponents;
  bool oracleCheck = false;
  // flag-integral, gysin-flag
  std::string poly;
  bool dualRoots = false;
  // global
  Method method = Method::Symbolic;
  unsigned threads = 1;
  std::uint64_t seed = 1;
};

using Json = nlohmann::ordered_json;

/// Runs the job and returns the success document. Engine errors propagate
/// as loccalc::Error.
Json runJob(const JobSpec& spec);

/// {"error": {"code", "message", "position"}}.
Json errorDocument(int code, const std::string& message, std::optional<std::size_t> position = std::nullopt);
Json errorDocument(const Error& error);

/// Full command-line entry point: parses argv, runs the job and writes one
/// JSON document to `out`. Returns the process exit status.
int runCli(const std::vector<std::string>& args, std::ostream& out);

}  // namespace loccalc
