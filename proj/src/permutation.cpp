#include "quandles/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace quandles {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) throw std::invalid_argument("permutation degree must be at least 1");
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[v])
      throw std::invalid_argument("permutation images are not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  if (degree < 1) throw std::invalid_argument("permutation degree must be at least 1");
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i];
      int to = cycle[(i + 1) % cycle.size()];
      if (from < 0 || from >= degree || to < 0 || to >= degree)
        throw std::invalid_argument("cycle point out of range");
      images[from] = to;
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int degree, int a, int b) {
  return from_cycles(degree, {{a, b}});
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw std::invalid_argument("permutation degree mismatch");
  std::vector<int> images(images_.size());
  for (int x = 0; x < degree(); ++x) images[x] = rhs.images_[images_[x]];
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> images(images_.size());
  for (int x = 0; x < degree(); ++x) images[images_[x]] = x;
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (int x = 0; x < degree(); ++x)
    if (images_[x] != x) return false;
  return true;
}

int Permutation::order() const {
  int result = 1;
  for (int len : cycle_type()) result = std::lcm(result, len);
  return result;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<char> seen(images_.size(), 0);
  for (int x = 0; x < degree(); ++x) {
    if (seen[x]) continue;
    int len = 0;
    for (int y = x; !seen[y]; y = images_[y]) {
      seen[y] = 1;
      ++len;
    }
    if (len >= 2) lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::string Permutation::cycle_string() const {
  std::ostringstream out;
  std::vector<char> seen(images_.size(), 0);
  bool any = false;
  for (int x = 0; x < degree(); ++x) {
    if (seen[x] || images_[x] == x) {
      seen[x] = 1;
      continue;
    }
    any = true;
    out << '(';
    bool first = true;
    for (int y = x; !seen[y]; y = images_[y]) {
      seen[y] = 1;
      if (!first) out << ' ';
      out << y;
      first = false;
    }
    out << ')';
  }
  return any ? out.str() : std::string("id");
}

Permutation parse_permutation(const std::string& text, int degree) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
      ++pos;
  };
  skip_ws();
  if (text.compare(pos, 2, "id") == 0) {
    pos += 2;
    skip_ws();
    if (pos != text.size()) throw std::invalid_argument("trailing input after 'id'");
    return Permutation::identity(degree);
  }
  std::vector<std::vector<int>> cycles;
  std::vector<char> used(degree, 0);
  while (pos < text.size()) {
    if (text[pos] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    ++pos;
    std::vector<int> cycle;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw std::invalid_argument("expected point in cycle notation");
      int value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        value = value * 10 + (text[pos++] - '0');
      if (value >= degree) throw std::invalid_argument("cycle point out of range");
      if (used[value]) throw std::invalid_argument("point repeated across cycles");
      used[value] = 1;
      cycle.push_back(value);
      skip_ws();
    }
    if (pos == text.size()) throw std::invalid_argument("unterminated cycle");
    ++pos;  // ')'
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return Permutation::from_cycles(degree, cycles);
}

}  // namespace quandles
