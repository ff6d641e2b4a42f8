#pragma once

#include <string>
#include <vector>

#include "config.hpp"

namespace storyfear {

// Pipeline commands. Each one validates its inputs, takes the output-dir
// lock, writes its report files plus a `run_<command>.json` summary, and
// throws a storyfear::Error on failure. Stages communicate only through
// files in out_dir, so the expensive ones can be re-run independently.
void cmd_ingest(const RunConfig& config);
void cmd_stats(const RunConfig& config);
void cmd_sstop(const RunConfig& config);
void cmd_similarity(const RunConfig& config);
void cmd_fear_train(const RunConfig& config);
void cmd_fear_eval(const RunConfig& config);
void cmd_modes(const RunConfig& config);
void cmd_topics(const RunConfig& config);
void cmd_disease(const RunConfig& config);

const std::vector<std::string>& command_names();
void run_command(const RunConfig& config, const std::string& name);

// Cache/report locations inside out_dir.
std::string scary_cache_path(const std::string& out_dir);
std::string baseline_cache_path(const std::string& out_dir);
std::string lexicon_csv_path(const std::string& out_dir);
std::string fear_model_path(const std::string& out_dir);

}  // namespace storyfear
