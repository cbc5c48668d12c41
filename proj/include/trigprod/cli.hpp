#ifndef TRIGPROD_CLI_HPP
#define TRIGPROD_CLI_HPP

#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include "trigprod/pointeval.hpp"

namespace trigprod::cli {

/// Theta expression grammar: "<int>pi/<int>", "<decimal>pi", or "<decimal>".
/// Multiples of pi parse to PiRational and take the exact-zero fast path.
std::variant<double, PiRational> parse_theta(const std::string& text);

/// Entry point behind main(). args excludes argv[0].
/// Exit codes: 0 success, 1 accuracy/integrity failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out = std::cout,
        std::ostream& err = std::cerr);

}  // namespace trigprod::cli

#endif
