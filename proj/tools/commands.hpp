#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace subcur::cli {

enum class Format { Tsv, Json };

struct RunConfig {
  int rank = 2;
  std::uint64_t seed = 42;
  int samples = 100;
  int max_gen_len = 6;
  int max_gens = 3;
  int grade = 2;
  int n_max = 20;
  bool diagonal = false;
  Format format = Format::Json;
  std::string dot;                  // optional DOT output path
  std::vector<std::string> inputs;  // subgroup files, in command order
};

inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kAssertion = 2;

// Each writes its report to `out` and diagnostics to `err`. Library errors
// propagate; run() maps them to exit codes.
int cmd_core(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_product(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_shnc_scan(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_converge(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_intersect(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_cylinders(const RunConfig& config, std::ostream& out, std::ostream& err);

int run(const std::string& command, const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace subcur::cli
