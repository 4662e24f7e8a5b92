#pragma once
// Run configuration: JSON file plus command-line overrides.  Relative data
// paths are resolved against the working directory at load time.

#include <cstdint>
#include <string>

namespace dk {

struct RunConfig {
  long precision = 128;          // working precision, bits
  uint64_t sieve_limit = 1000000;
  int workers = 1;
  std::string format = "csv";    // "csv" or "jsonl"
  std::string out_dir = "out";
  std::string rows_path = "data/method_rows.json";
  std::string lambda_path = "data/lambda.tsv";
  std::string reference_path = "data/reference_tables.json";
  std::string literature_path = "data/literature.json";

  // ConfigError on broken invariants: 64 <= precision <= 8192,
  // 100 <= sieve_limit <= 2e8, 1 <= workers <= 256, known format.
  void validate() const;
};

// Missing file or malformed JSON raise ConfigError; absent keys keep their
// defaults, unknown keys are ignored.
RunConfig load_run_config(const std::string& path);

}  // namespace dk
