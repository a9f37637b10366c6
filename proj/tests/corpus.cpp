#include "corpus.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "rloop/looptab.hpp"

namespace rloop::testing {

std::string data_dir() {
  if (const char* env = std::getenv("RLOOP_DATA")) return env;
  return "tests/data";
}

std::string cli_path() {
  if (const char* env = std::getenv("RLOOP_CLI")) return env;
  return "./rloop";
}

RightLoopTable load_loop(const std::string& filename) {
  LoopFile file = read_looptab_file(data_dir() + "/" + filename);
  return RightLoopTable(file.table, file.identity);
}

FiniteGroup load_group(const std::string& filename) {
  LoopFile file = read_looptab_file(data_dir() + "/" + filename);
  return FiniteGroup::from_table(file.table, file.identity);
}

const std::vector<std::string>& corpus_loop_files() {
  static const std::vector<std::string> files = {
      "z1.grouptab", "z2.grouptab", "z3.grouptab",  "z4.grouptab",
      "k4.grouptab", "z5.grouptab", "z6.grouptab",  "s3.grouptab",
      "z7.grouptab", "z8.grouptab", "z4x2.grouptab", "e8.grouptab",
      "d4.grouptab", "q8.grouptab", "loop5.looptab", "steiner10.looptab"};
  return files;
}

const std::vector<std::string>& corpus_group_files() {
  static const std::vector<std::string> files = {
      "z1.grouptab", "z2.grouptab", "z3.grouptab",  "z4.grouptab",
      "k4.grouptab", "z5.grouptab", "z6.grouptab",  "s3.grouptab",
      "z7.grouptab", "z8.grouptab", "z4x2.grouptab", "e8.grouptab",
      "d4.grouptab", "q8.grouptab"};
  return files;
}

CayleyTable cyclic_table(int n) {
  std::vector<std::string> names;
  std::vector<int> entries;
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) entries.push_back((r + c) % n);
  return CayleyTable(std::move(names), std::move(entries));
}

RightLoopTable cyclic_group(int n) { return RightLoopTable(cyclic_table(n), 0); }

std::uint64_t TestRng::next() {
  state_ ^= state_ << 13;
  state_ ^= state_ >> 7;
  state_ ^= state_ << 17;
  return state_;
}

int TestRng::below(int bound) { return static_cast<int>(next() % static_cast<std::uint64_t>(bound)); }

Permutation random_identity_fixing_perm(int degree, int identity, TestRng& rng) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) images[static_cast<std::size_t>(i)] = i;
  // Fisher-Yates over the non-identity positions
  std::vector<int> movable;
  for (int i = 0; i < degree; ++i)
    if (i != identity) movable.push_back(i);
  for (std::size_t i = movable.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.below(static_cast<int>(i)));
    std::swap(movable[i - 1], movable[j]);
  }
  std::size_t k = 0;
  for (int i = 0; i < degree; ++i)
    if (i != identity) images[static_cast<std::size_t>(i)] = movable[k++];
  return Permutation(std::move(images));
}

std::vector<int> random_b_subset(int order, int identity, TestRng& rng) {
  std::vector<int> b;
  for (int i = 0; i < order; ++i)
    if (i != identity && rng.below(3) == 0) b.push_back(i);
  // bias toward nonempty: pick one element when the coin came up empty
  if (b.empty() && order > 1) {
    int pick = rng.below(order - 1);
    for (int i = 0, seen = 0; i < order; ++i)
      if (i != identity && seen++ == pick) b.push_back(i);
  }
  return b;
}

CliResult run_cli(const std::vector<std::string>& args) {
  std::string out_file = temp_path("cli_out");
  std::string err_file = temp_path("cli_err");
  std::string cmd = "'" + cli_path() + "'";
  for (const std::string& a : args) {
    cmd += " '";
    for (char c : a) {
      if (c == '\'') cmd += "'\\''";
      else cmd += c;
    }
    cmd += "'";
  }
  cmd += " > " + out_file + " 2> " + err_file;
  int status = std::system(cmd.c_str());
  CliResult result;
  result.exit_code = status < 0 ? status : WEXITSTATUS(status);
  result.out = read_file(out_file);
  result.err = read_file(err_file);
  std::remove(out_file.c_str());
  std::remove(err_file.c_str());
  return result;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string temp_path(const std::string& stem) {
  static int counter = 0;
  const char* base = std::getenv("TMPDIR");
  std::string dir = base ? base : "/tmp";
  return dir + "/rloop_test_" + std::to_string(getpid()) + "_" + stem + "_" +
         std::to_string(counter++);
}

}  // namespace rloop::testing
