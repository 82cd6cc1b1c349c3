#pragma once

#include <string>
#include <vector>

#include "tdsm/instance.hpp"

namespace tdsm {

// Bundled reference instances: the two 16-edge dimension-3 instances
// with no stable matching ("fig2", "fig3"), their rank/edge variants,
// and the dimension-4 instance ("appendix4").
std::vector<std::string> builtin_names();
Instance builtin_instance(const std::string& name);  // throws on unknown name

}  // namespace tdsm
