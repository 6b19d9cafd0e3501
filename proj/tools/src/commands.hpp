#pragma once

#include <iosfwd>

#include "options.hpp"

namespace cli {

int cmd_solve(const RunConfig& cfg, std::ostream& out);
int cmd_wavefunction(const RunConfig& cfg, std::ostream& out);
int cmd_density(const RunConfig& cfg, std::ostream& out);
int cmd_entropy(const RunConfig& cfg, std::ostream& out);
int cmd_qes(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);

}  // namespace cli
