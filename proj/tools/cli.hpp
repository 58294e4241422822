#pragma once

#include "weilzeta/arith.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace weilzeta::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kRangeError = 64,
};

/// S1 | S2 | S3 | all | none | mod:d:r1,r2[:inc=p,q][:exc=p,q]
PrimeSet parse_prime_set(const std::string& text);

/// Runs one command line (args excludes the program name). Data goes to `out`
/// unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace weilzeta::cli
