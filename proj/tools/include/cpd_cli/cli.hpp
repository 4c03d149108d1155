#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cpd::cli
{

enum ExitCode
{
  Computed = 0,
  BadInputExit = 1,
  HypothesisExit = 2,
  CapExit = 3,
  DisagreementExit = 4,
};

/// Parses and runs one `cpd` invocation; args excludes the program name.
int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

} // namespace cpd::cli
