#include <cstdio>
#include <string>
#include <vector>

#include "krull/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  krull::CliResult r = krull::run_cli(args);
  std::fputs(r.output.c_str(), stdout);
  return r.code;
}
