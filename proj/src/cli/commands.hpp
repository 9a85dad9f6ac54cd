// Copyright 2026 the lgcavity authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LGCAVITY_CLI_COMMANDS_HPP
#define LGCAVITY_CLI_COMMANDS_HPP

#include <iosfwd>

#include "cli/run_config.hpp"

namespace lgcavity::cli {

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitNumericalError = 3;
inline constexpr int kExitFitNotConverged = 4;

/// LG time scan; CSV columns
/// T,lg_pp,lg_pm,lg_mp,lg_mm,exp_A0,exp_A1,corr_A0A1,v_re,v_im,terms_used.
int cmd_scan(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Temperature sweep of the first violating minimum; CSV columns
/// inv_beta,g,T_min,LG_min,refined. Temperatures without a violation end
/// the sweep and are reported on err.
int cmd_minima(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Power-law fit of a minima CSV; JSON object
/// {a, b, c, converged, n_points, residual_rms}. Non-convergence still
/// emits the JSON and exits 4.
int cmd_fit(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Temperature sweep plus fits per coupling value; CSV columns
/// g,b1,b1_converged,b2,b2_converged,n_records.
int cmd_sweep_g(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Cross-validation against the Fock oracle; JSON object
/// {max_vtrace_err, g6_ratio, prob_norm_err, mode_discrepancy_max}.
int cmd_oracle_check(const RunConfig& config, std::ostream& out,
                     std::ostream& err);

}  // namespace lgcavity::cli

#endif  // LGCAVITY_CLI_COMMANDS_HPP
