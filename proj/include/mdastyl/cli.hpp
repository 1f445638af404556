#pragma once

#include <ostream>

#include "mdastyl/config.hpp"

namespace mdastyl {

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitData = 3;

void cmd_ingest(const RunConfig& config, std::ostream& out);
void cmd_train_tagger(const RunConfig& config, std::ostream& out);
void cmd_analyze(const RunConfig& config, std::ostream& out);
void cmd_report(const RunConfig& config, std::ostream& out);

/// Parses arguments, merges the config file (--config, else the
/// MDA_STYL_CONFIG variable) under command-line flags, runs one command and
/// maps ConfigError to 2 and data errors to 3.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mdastyl
