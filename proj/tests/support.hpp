#pragma once

// Shared fixtures and independent brute-force oracles for the test suites.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "quandles/perm_group.hpp"
#include "quandles/permutation.hpp"
#include "quandles/quandle.hpp"

namespace testsupport {

using namespace quandles;

inline Permutation cyc(int degree, const std::string& text) {
  return parse_permutation(text, degree);
}

// Dihedral-type quandle on Z_n: x |> y = 2y - x (mod n).
inline Quandle dihedral_quandle(int n) {
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) table[x][y] = ((2 * y - x) % n + n) % n;
  return Quandle::from_table(std::move(table));
}

inline Quandle make_r3() { return dihedral_quandle(3); }
inline Quandle make_r4() { return dihedral_quandle(4); }

inline Quandle trivial_quandle(int n) {
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) table[x][y] = x;
  return Quandle::from_table(std::move(table));
}

inline Quandle point_quandle() { return trivial_quandle(1); }

inline PermGroup sym3() {
  return PermGroup::generate(3, {cyc(3, "(0 1)"), cyc(3, "(1 2)")});
}

inline PermGroup sym4() {
  return PermGroup::generate(4, {cyc(4, "(0 1)"), cyc(4, "(0 1 2 3)")});
}

inline PermGroup alt4() {
  return PermGroup::generate(4, {cyc(4, "(0 1 2)"), cyc(4, "(1 2 3)")});
}

inline PermGroup dihedral4() {
  return PermGroup::generate(4, {cyc(4, "(0 1 2 3)"), cyc(4, "(1 3)")});
}

// Constant map onto the one-element quandle.
inline QuandleHom collapse_to_point(const Quandle& q) {
  return QuandleHom(q, point_quandle(), std::vector<int>(q.size(), 0));
}

// Independent oracle: every subgroup, as closures of all generator subsets
// of size <= 4 (sufficient for |G| <= 24 since 2^5 > 24).
inline std::vector<PermGroup> brute_subgroups(const PermGroup& g) {
  const auto& elems = g.elements();
  const std::size_t n = elems.size();
  std::set<std::vector<Permutation>> seen;
  std::vector<PermGroup> out;
  auto add = [&](std::vector<Permutation> gens) {
    PermGroup sub = PermGroup::generate(g.degree(), std::move(gens));
    if (seen.insert(sub.elements()).second) out.push_back(std::move(sub));
  };
  add({});
  for (std::size_t a = 0; a < n; ++a) {
    add({elems[a]});
    for (std::size_t b = a + 1; b < n; ++b) {
      add({elems[a], elems[b]});
      for (std::size_t c = b + 1; c < n; ++c) {
        add({elems[a], elems[b], elems[c]});
        for (std::size_t d = c + 1; d < n; ++d) add({elems[a], elems[b], elems[c], elems[d]});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const PermGroup& x, const PermGroup& y) {
    if (x.order() != y.order()) return x.order() < y.order();
    return x.elements() < y.elements();
  });
  return out;
}

inline std::vector<PermGroup> brute_normal_subgroups(const PermGroup& g) {
  std::vector<PermGroup> out;
  for (auto& sub : brute_subgroups(g)) {
    bool normal = true;
    for (const auto& e : g.elements()) {
      for (const auto& h : sub.elements())
        if (!sub.contains(e.inverse() * h * e)) {
          normal = false;
          break;
        }
      if (!normal) break;
    }
    if (normal) out.push_back(std::move(sub));
  }
  return out;
}

// Independent oracle: exhaustive search over all bijections.
inline std::optional<std::vector<int>> brute_isomorphism(const Quandle& a, const Quandle& b) {
  if (a.size() != b.size()) return std::nullopt;
  std::vector<int> map(a.size());
  std::iota(map.begin(), map.end(), 0);
  do {
    bool ok = true;
    for (int x = 0; x < a.size() && ok; ++x)
      for (int y = 0; y < a.size() && ok; ++y)
        if (map[a.op(x, y)] != b.op(map[x], map[y])) ok = false;
    if (ok) return map;
  } while (std::next_permutation(map.begin(), map.end()));
  return std::nullopt;
}

inline std::mt19937& rng() {
  static std::mt19937 engine(20240811);
  return engine;
}

inline Permutation random_permutation(int degree) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), rng());
  return Permutation(std::move(images));
}

inline std::filesystem::path fresh_temp_dir(const std::string& tag) {
  auto base = std::filesystem::temp_directory_path();
  std::uniform_int_distribution<unsigned long> dist;
  std::filesystem::path dir;
  do {
    std::ostringstream name;
    name << tag << "_" << std::hex << dist(rng());
    dir = base / name.str();
  } while (std::filesystem::exists(dir));
  std::filesystem::create_directories(dir);
  return dir;
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct CliResult {
  int exit_code = -1;
  std::string output;
};

inline CliResult run_cli(const std::string& binary, const std::string& args,
                         const std::filesystem::path& scratch) {
  const std::filesystem::path capture = scratch / "cli_output.txt";
  std::string command = binary + " " + args + " > " + capture.string() + " 2>&1";
  int status = std::system(command.c_str());
  CliResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.output = read_file(capture);
  return result;
}

}  // namespace testsupport
