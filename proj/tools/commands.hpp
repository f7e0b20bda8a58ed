#pragma once

#include <string>

#include "report.hpp"
#include "run_config.hpp"

namespace hermsq::cli {

Report run_command(const RunConfig& cfg);

Report cmd_hvalue(const RunConfig& cfg);
Report cmd_pk(const RunConfig& cfg);
Report cmd_verify(const RunConfig& cfg);
Report cmd_gfcheck(const RunConfig& cfg);
Report cmd_dn(const RunConfig& cfg);
Report cmd_asym(const RunConfig& cfg);
Report cmd_table(const RunConfig& cfg);

/// Canonical "a b c : coefficient" serialization used by `pk --format text`.
std::string pk_canonical_text(int k);

}  // namespace hermsq::cli
