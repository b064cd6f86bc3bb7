#pragma once

#include "loopstab/matrix.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>

namespace loopstab::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

struct VerifyArgs {
  std::string loops;
  std::size_t cap = kDefaultClosureCap;
  int max_rank = 4;
  std::string out_path;
};

struct DecomposeArgs {
  int n = 0;
  int m = 0;
  std::string cycles;
  std::string format = "text";
};

struct PreimageArgs {
  std::string loops;
  std::string kind;
  int i = 0;
  int j = 0;
  int k = 0;
};

// Each command writes its result to `out` and diagnostics to `err`, and
// returns the process exit code: 0 pass, 1 a check failed, 2 bad input or a
// violated precondition.
int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);
int cmd_graph(const std::string& loops, const std::string& out_path, std::ostream& out,
              std::ostream& err);
int cmd_decompose(const DecomposeArgs& args, std::ostream& out, std::ostream& err);
int cmd_preimage(const PreimageArgs& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace loopstab::cli
