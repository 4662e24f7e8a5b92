#include "dk/config.hpp"

#include <fstream>

#include "dk/encl.hpp"
#include "json.hpp"

namespace dk {

using nlohmann::json;

void RunConfig::validate() const {
  if (precision < 64 || precision > 8192)
    throw ConfigError("precision out of range [64, 8192]: " + std::to_string(precision));
  if (sieve_limit < 100 || sieve_limit > 200000000ull)
    throw ConfigError("sieve_limit out of range [100, 2e8]: " + std::to_string(sieve_limit));
  if (workers < 1 || workers > 256)
    throw ConfigError("workers out of range [1, 256]: " + std::to_string(workers));
  if (format != "csv" && format != "jsonl")
    throw ConfigError("format must be csv or jsonl, got: " + format);
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("malformed config " + path + ": " + e.what());
  }
  RunConfig c;
  try {
    if (j.contains("precision")) c.precision = j["precision"].get<long>();
    if (j.contains("sieve_limit")) c.sieve_limit = j["sieve_limit"].get<uint64_t>();
    if (j.contains("workers")) c.workers = j["workers"].get<int>();
    if (j.contains("format")) c.format = j["format"].get<std::string>();
    if (j.contains("out_dir")) c.out_dir = j["out_dir"].get<std::string>();
    if (j.contains("rows_path")) c.rows_path = j["rows_path"].get<std::string>();
    if (j.contains("lambda_path")) c.lambda_path = j["lambda_path"].get<std::string>();
    if (j.contains("reference_path")) c.reference_path = j["reference_path"].get<std::string>();
    if (j.contains("literature_path")) c.literature_path = j["literature_path"].get<std::string>();
  } catch (const json::exception& e) {
    throw ConfigError("bad field type in " + path + ": " + e.what());
  }
  c.validate();
  return c;
}

}  // namespace dk
