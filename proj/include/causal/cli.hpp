#pragma once

#include "causal/rational.hpp"

#include <iosfwd>
#include <string_view>
#include <vector>

namespace causal {

/// Exit codes: 0 success, 1 a verification check failed, 2 usage or case error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// "a,b,..." of rationals.
RationalVector parse_lambda(std::string_view text);
/// "from:to:steps@d1,d2,...": steps points t_i on [from, to], lambda_i = t_i * direction.
std::vector<RationalVector> parse_grid(std::string_view text);

/// "2e1 - e2 + (1/2)e3"; "0" for the zero vector.
std::string format_e(const RationalVector& v);

}  // namespace causal
