#include "quandles/catalog.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "quandles/augment.hpp"
#include "quandles/coset.hpp"
#include "quandles/error.hpp"
#include "quandles/quotient.hpp"

namespace quandles {

namespace {

constexpr std::size_t kMaxBuiltinOrder = 48;

Permutation rotation(int n) {
  std::vector<std::vector<int>> cycle(1);
  cycle[0].resize(n);
  std::iota(cycle[0].begin(), cycle[0].end(), 0);
  return Permutation::from_cycles(n, cycle);
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int multiplicative_order(int u, int p) {
  int value = u % p;
  int order = 1;
  while (value != 1) {
    value = (value * u) % p;
    ++order;
  }
  return order;
}

}  // namespace

std::vector<GroupSpec> builtin_groups(std::size_t max_order) {
  if (max_order > kMaxBuiltinOrder)
    throw std::invalid_argument("built-in group catalog is capped at order 48");
  std::vector<GroupSpec> specs;

  for (std::size_t n = 1; n <= max_order; ++n) {
    GroupSpec spec{"cyclic(" + std::to_string(n) + ")", static_cast<int>(n), {}, n};
    if (n >= 2) spec.generators.push_back(rotation(static_cast<int>(n)));
    specs.push_back(std::move(spec));
  }

  for (int n = 3; 2 * static_cast<std::size_t>(n) <= max_order; ++n) {
    std::vector<int> reflect(n);
    for (int i = 0; i < n; ++i) reflect[i] = (n - i) % n;
    specs.push_back(GroupSpec{"dihedral(" + std::to_string(n) + ")", n,
                              {rotation(n), Permutation(std::move(reflect))},
                              2 * static_cast<std::size_t>(n)});
  }

  for (int n = 3;; ++n) {
    std::size_t factorial = 1;
    for (int i = 2; i <= n; ++i) factorial *= static_cast<std::size_t>(i);
    if (factorial > max_order) break;
    specs.push_back(GroupSpec{"symmetric(" + std::to_string(n) + ")", n,
                              {Permutation::transposition(n, 0, 1), rotation(n)}, factorial});
  }

  for (int n = 3;; ++n) {
    std::size_t factorial = 1;
    for (int i = 2; i <= n; ++i) factorial *= static_cast<std::size_t>(i);
    if (factorial / 2 > max_order) break;
    std::vector<Permutation> gens{Permutation::from_cycles(n, {{0, 1, 2}})};
    if (n > 3) {
      if (n % 2 == 1) {
        gens.push_back(rotation(n));
      } else {
        std::vector<int> cycle(n - 1);
        std::iota(cycle.begin(), cycle.end(), 1);
        gens.push_back(Permutation::from_cycles(n, {cycle}));
      }
    }
    specs.push_back(GroupSpec{"alternating(" + std::to_string(n) + ")", n, std::move(gens),
                              factorial / 2});
  }

  for (int p = 3; static_cast<std::size_t>(p) <= max_order; ++p) {
    if (!is_prime(p)) continue;
    for (int k = 3; k < p; ++k) {
      if ((p - 1) % k != 0 || static_cast<std::size_t>(p) * k > max_order) continue;
      int u = 0;
      for (int candidate = 2; candidate < p; ++candidate)
        if (multiplicative_order(candidate, p) == k) {
          u = candidate;
          break;
        }
      std::vector<int> scale(p);
      for (int x = 0; x < p; ++x) scale[x] = (x * u) % p;
      specs.push_back(GroupSpec{
          "frobenius(" + std::to_string(p) + "," + std::to_string(k) + ")", p,
          {rotation(p), Permutation(std::move(scale))}, static_cast<std::size_t>(p) * k});
    }
  }

  if (max_order >= 24) {
    // Nonzero vectors of F_3^2 in lexicographic order.
    std::vector<std::pair<int, int>> points;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        if (a || b) points.emplace_back(a, b);
    auto index_of = [&](int a, int b) {
      a = ((a % 3) + 3) % 3;
      b = ((b % 3) + 3) % 3;
      for (std::size_t i = 0; i < points.size(); ++i)
        if (points[i] == std::make_pair(a, b)) return static_cast<int>(i);
      throw std::logic_error("unreachable");
    };
    std::vector<int> s_images(8), t_images(8);
    for (std::size_t i = 0; i < points.size(); ++i) {
      auto [a, b] = points[i];
      s_images[i] = index_of(-b, a);     // [[0,-1],[1,0]]
      t_images[i] = index_of(a + b, b);  // [[1,1],[0,1]]
    }
    specs.push_back(GroupSpec{"special_linear(2,3)", 8,
                              {Permutation(std::move(s_images)), Permutation(std::move(t_images))},
                              24});
  }

  return specs;
}

std::vector<int> canonical_form(const Quandle& q) {
  const int n = q.size();
  if (n > 8) throw ResourceLimitError("canonical forms are computed for sizes up to 8");
  std::vector<int> relabel(n);
  std::iota(relabel.begin(), relabel.end(), 0);
  std::vector<int> best;
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  std::vector<int> inverse(n);
  do {
    for (int x = 0; x < n; ++x) inverse[relabel[x]] = x;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        flat[static_cast<std::size_t>(x) * n + y] = relabel[q.op(inverse[x], inverse[y])];
    if (best.empty() || flat < best) best = flat;
  } while (std::next_permutation(relabel.begin(), relabel.end()));
  return best;
}

namespace {

std::vector<QuandleRecord> dedup_and_sort(std::vector<QuandleRecord> records) {
  std::vector<QuandleRecord> unique;
  if (!records.empty() && records.front().quandle.size() <= 8) {
    std::set<std::vector<int>> seen;
    for (auto& record : records) {
      record.canonical_form = canonical_form(record.quandle);
      if (seen.insert(record.canonical_form).second) unique.push_back(std::move(record));
    }
    std::sort(unique.begin(), unique.end(), [](const QuandleRecord& a, const QuandleRecord& b) {
      return a.canonical_form < b.canonical_form;
    });
  } else {
    for (auto& record : records) {
      bool fresh = true;
      for (const auto& kept : unique)
        if (is_isomorphic(kept.quandle, record.quandle)) {
          fresh = false;
          break;
        }
      if (fresh) unique.push_back(std::move(record));
    }
  }
  return unique;
}

std::vector<QuandleRecord> triples_for_spec(const GroupSpec& spec, int n) {
  std::vector<QuandleRecord> records;
  PermGroup group = PermGroup::generate(spec.degree, spec.generators);
  if (group.order() % static_cast<std::size_t>(n) != 0) return records;
  const std::size_t stabilizer_order = group.order() / static_cast<std::size_t>(n);

  for (const PermGroup& stabilizer : all_subgroups(group)) {
    if (stabilizer.order() != stabilizer_order) continue;
    PermGroup central = center(stabilizer);
    for (const Permutation& eta : central.elements()) {
      std::set<Permutation> conjugates;
      for (const auto& e : group.elements()) conjugates.insert(e.inverse() * eta * e);
      PermGroup generated = PermGroup::generate(
          group.degree(), std::vector<Permutation>(conjugates.begin(), conjugates.end()));
      if (!(generated == group)) continue;

      CosetPresentation presentation = make_presentation(group, stabilizer, eta);
      BuiltQuandle built = from_presentation(presentation);
      internal_check(built.quandle.size() == n, "triple must present a quandle of the right size");
      std::ostringstream detail;
      detail << spec.name << " with |H|=" << stabilizer.order() << ", eta=" << eta.cycle_string();
      records.push_back(
          QuandleRecord{std::move(built.quandle), Provenance::FromTriple, detail.str(), {}});
    }
  }
  return records;
}

}  // namespace

std::vector<QuandleRecord> enumerate_connected_by_triples(int n, std::size_t max_group_order) {
  if (n < 1) throw std::invalid_argument("quandle size must be positive");
  const std::vector<GroupSpec> specs = builtin_groups(max_group_order);

  std::vector<std::future<std::vector<QuandleRecord>>> futures;
  futures.reserve(specs.size());
  for (const GroupSpec& spec : specs)
    futures.push_back(std::async(std::launch::async | std::launch::deferred,
                                 [&spec, n] { return triples_for_spec(spec, n); }));

  std::vector<QuandleRecord> records;
  for (auto& future : futures) {
    auto part = future.get();
    std::move(part.begin(), part.end(), std::back_inserter(records));
  }
  return dedup_and_sort(std::move(records));
}

namespace {

// Column c of a quandle table is a permutation fixing c. Right
// distributivity pins every column reachable from two chosen ones:
// col_y * col_z = col_z * col_{col_z(y)}, so col_{col_z(y)} is forced to be
// the conjugate of col_y by col_z. The search assigns columns in order and
// propagates those forced values.
struct TableSearch {
  int n;
  std::vector<std::vector<Permutation>> candidates;  // per column
  std::vector<Permutation> columns;
  std::vector<std::vector<int>> tables_out;

  explicit TableSearch(int size) : n(size) {
    candidates.resize(n);
    for (int c = 0; c < n; ++c) {
      std::vector<int> rest;
      for (int x = 0; x < n; ++x)
        if (x != c) rest.push_back(x);
      std::vector<int> target = rest;
      do {
        std::vector<int> images(n);
        images[c] = c;
        for (std::size_t i = 0; i < rest.size(); ++i) images[rest[i]] = target[i];
        candidates[c].emplace_back(std::move(images));
      } while (std::next_permutation(target.begin(), target.end()));
    }
  }

  // Checks all constraints among assigned columns and computes the forced
  // value for column `next`, if any. Returns false on contradiction.
  bool consistent(std::optional<Permutation>& forced_next) const {
    const int k = static_cast<int>(columns.size());
    for (int y = 0; y < k; ++y) {
      for (int z = 0; z < k; ++z) {
        const int t = columns[z](y);
        const Permutation conjugate = columns[z].inverse() * columns[y] * columns[z];
        if (t < k) {
          if (!(conjugate == columns[t])) return false;
        } else if (t == k) {
          if (forced_next && !(*forced_next == conjugate)) return false;
          forced_next = conjugate;
        }
      }
    }
    return true;
  }

  void run(int depth) {
    std::optional<Permutation> forced;
    if (!consistent(forced)) return;
    if (depth == n) {
      std::vector<int> flat;
      flat.reserve(static_cast<std::size_t>(n) * n);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) flat.push_back(columns[y](x));
      tables_out.push_back(std::move(flat));
      return;
    }
    if (forced) {
      if ((*forced)(depth) != depth) return;
      columns.push_back(*forced);
      run(depth + 1);
      columns.pop_back();
      return;
    }
    for (const Permutation& candidate : candidates[depth]) {
      columns.push_back(candidate);
      run(depth + 1);
      columns.pop_back();
    }
  }
};

bool table_is_connected(const std::vector<int>& flat, int n) {
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  std::vector<int> frontier{0};
  int count = 1;
  while (!frontier.empty()) {
    int x = frontier.back();
    frontier.pop_back();
    for (int y = 0; y < n; ++y) {
      int forward = flat[static_cast<std::size_t>(x) * n + y];  // x |> y
      if (!seen[forward]) {
        seen[forward] = 1;
        frontier.push_back(forward);
        ++count;
      }
    }
    // Symmetries are invertible; walk backwards too.
    for (int w = 0; w < n; ++w)
      for (int y = 0; y < n; ++y)
        if (flat[static_cast<std::size_t>(w) * n + y] == x && !seen[w]) {
          seen[w] = 1;
          frontier.push_back(w);
          ++count;
        }
  }
  return count == n;
}

}  // namespace

std::vector<QuandleRecord> enumerate_connected_exhaustive(int n) {
  if (n < 1) throw std::invalid_argument("quandle size must be positive");
  if (n > 6) throw std::invalid_argument("exhaustive table search is guarded to sizes up to 6");

  TableSearch seed(n);
  std::vector<std::future<std::vector<std::vector<int>>>> futures;
  if (n == 1) {
    seed.run(0);
  } else {
    // Parallel over the choice of the first column; deterministic merge.
    for (const Permutation& first : seed.candidates[0]) {
      futures.push_back(std::async(std::launch::async | std::launch::deferred, [n, first] {
        TableSearch search(n);
        search.columns.push_back(first);
        search.run(1);
        return std::move(search.tables_out);
      }));
    }
  }

  std::vector<std::vector<int>> tables = std::move(seed.tables_out);
  for (auto& future : futures) {
    auto part = future.get();
    std::move(part.begin(), part.end(), std::back_inserter(tables));
  }

  std::vector<QuandleRecord> records;
  for (const auto& flat : tables) {
    if (!table_is_connected(flat, n)) continue;
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) table[x][y] = flat[static_cast<std::size_t>(x) * n + y];
    internal_check(!Quandle::check_table(table).has_value(),
                   "search columns must satisfy the quandle axioms");
    records.push_back(QuandleRecord{Quandle::from_table(std::move(table)),
                                    Provenance::ExhaustiveSearch, "table search", {}});
  }
  return dedup_and_sort(std::move(records));
}

std::vector<Quandle> connected_catalog(int max_size, std::size_t max_group_order) {
  std::vector<Quandle> catalog;
  for (int n = 1; n <= max_size; ++n) {
    std::vector<QuandleRecord> records = enumerate_connected_by_triples(n, max_group_order);
    if (n <= 6) {
      auto exhaustive = enumerate_connected_exhaustive(n);
      std::move(exhaustive.begin(), exhaustive.end(), std::back_inserter(records));
      records = dedup_and_sort(std::move(records));
    }
    for (auto& record : records) catalog.push_back(std::move(record.quandle));
  }
  return catalog;
}

std::vector<QuandleHom> enumerate_surjections(const Quandle& q) {
  if (!is_connected(q)) throw std::domain_error("surjections are enumerated for connected quandles");

  std::vector<QuandleHom> out;
  const PermGroup group = inn(q);
  for (const PermGroup& kernel : all_normal_subgroups(group)) {
    if (!is_realizable_kernel(q, kernel)) continue;
    OrbitQuotient oq = orbit_quotient(q, kernel);
    Presented presented = to_presentation(oq.quotient, 0);
    BuiltQuandle coset_quandle = from_presentation(presented.presentation);

    std::vector<int> relabel(presented.identification.size());
    for (std::size_t i = 0; i < presented.identification.size(); ++i)
      relabel[presented.identification[i]] = static_cast<int>(i);
    QuandleHom to_cosets(oq.quotient, coset_quandle.quandle, std::move(relabel));

    for (const PermGroup& bigger : all_subgroups(presented.presentation.group)) {
      RigidQuotientResult rigid = rigid_quotient_of_presentation(presented.presentation, bigger);
      if (!rigid.hom) continue;
      out.push_back(oq.projection.then(to_cosets).then(*rigid.hom));
    }
  }
  return out;
}

}  // namespace quandles
