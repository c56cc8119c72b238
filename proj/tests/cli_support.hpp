#pragma once

// Runs the command-line tool as a subprocess.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace cli {

struct Result {
  int code = -1;
  std::string out;
};

inline std::string binary() { return SEMIBRICK_CLI; }

// `args` is passed through the shell; stderr is discarded unless redirected.
inline Result run(const std::string& args, const std::string& env = {}) {
  const std::string cmd = (env.empty() ? "" : env + " ") + "'" + binary() + "' " + args + " 2>/dev/null";
  Result r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string temp_path(const std::string& name) { return std::string(SEMIBRICK_TMP) + "/" + name; }

}  // namespace cli
