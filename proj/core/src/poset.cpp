#include "cellalg/poset.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace cellalg {

Poset::Poset(std::vector<std::string> elements,
             std::vector<std::pair<std::string, std::string>> covers)
    : ids_(std::move(elements)) {
  const int n = static_cast<int>(ids_.size());
  for (int i = 0; i < n; ++i) {
    if (!index_.emplace(ids_[i], i).second)
      throw std::invalid_argument("Poset: duplicate element id " + ids_[i]);
  }
  std::vector<std::vector<bool>> edge(n, std::vector<bool>(n, false));
  for (const auto& [lo, hi] : covers) {
    int a = index(lo), b = index(hi);
    if (a == b) throw std::invalid_argument("Poset: reflexive cover " + lo);
    edge[a][b] = true;
  }
  // reachability closure, with cycle detection
  leq_.assign(n, std::vector<bool>(n, false));
  std::vector<int> state(n, 0);
  std::function<void(int)> dfs = [&](int v) {
    state[v] = 1;
    leq_[v][v] = true;
    for (int w = 0; w < n; ++w) {
      if (!edge[v][w]) continue;
      if (state[w] == 1)
        throw std::invalid_argument("Poset: cover relation has a cycle through " +
                                    ids_[w]);
      if (state[w] == 0) dfs(w);
      for (int u = 0; u < n; ++u)
        if (leq_[w][u]) leq_[v][u] = true;
    }
    state[v] = 2;
  };
  for (int v = 0; v < n; ++v)
    if (state[v] == 0) dfs(v);

  // Hasse normalization: keep (a,b) only when nothing sits strictly between.
  up_.assign(n, {});
  down_.assign(n, {});
  std::size_t kept = 0, given = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (edge[a][b]) ++given;
      if (a == b || !leq_[a][b]) continue;
      bool is_cover = true;
      for (int z = 0; z < n && is_cover; ++z)
        if (z != a && z != b && leq_[a][z] && leq_[z][b]) is_cover = false;
      if (is_cover) {
        up_[a].push_back(b);
        down_[b].push_back(a);
        ++kept;
      }
    }
  dropped_redundant_ = given != kept;
}

int Poset::index(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end())
    throw std::out_of_range("Poset: unknown element id " + id);
  return it->second;
}

std::optional<int> Poset::find(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < static_cast<int>(size()); ++a)
    for (int b : up_[a]) out.emplace_back(a, b);
  return out;
}

std::vector<int> Poset::up_set(int a) const {
  std::vector<int> out;
  for (int b = 0; b < static_cast<int>(size()); ++b)
    if (leq_[a][b]) out.push_back(b);
  return out;
}

std::vector<int> Poset::down_set(int a) const {
  std::vector<int> out;
  for (int b = 0; b < static_cast<int>(size()); ++b)
    if (leq_[b][a]) out.push_back(b);
  return out;
}

std::vector<int> Poset::maximal_elements() const {
  std::vector<int> out;
  for (int a = 0; a < static_cast<int>(size()); ++a)
    if (up_[a].empty()) out.push_back(a);
  return out;
}

std::vector<int> Poset::minimal_elements() const {
  std::vector<int> out;
  for (int a = 0; a < static_cast<int>(size()); ++a)
    if (down_[a].empty()) out.push_back(a);
  return out;
}

std::vector<int> Poset::linear_extension() const {
  const int n = static_cast<int>(size());
  std::vector<int> indeg(n, 0), order;
  for (int a = 0; a < n; ++a) indeg[a] = static_cast<int>(down_[a].size());
  std::vector<int> ready;
  for (int a = 0; a < n; ++a)
    if (indeg[a] == 0) ready.push_back(a);
  while (!ready.empty()) {
    int v = ready.front();
    ready.erase(ready.begin());
    order.push_back(v);
    for (int w : up_[v])
      if (--indeg[w] == 0) ready.push_back(w);
  }
  return order;
}

long long Poset::mobius(int x, int y) const {
  if (!leq_[x][y])
    throw std::invalid_argument("Poset::mobius: incomparable pair (" + ids_[x] +
                                ", " + ids_[y] + ")");
  if (x == y) return 1;
  auto key = std::make_pair(x, y);
  if (auto it = mobius_cache_.find(key); it != mobius_cache_.end())
    return it->second;
  long long s = 0;
  for (int z = 0; z < static_cast<int>(size()); ++z)
    if (leq_[x][z] && leq_[z][y] && z != y) s += mobius(x, z);
  mobius_cache_[key] = -s;
  return -s;
}

Poset Poset::adjoin_top() const {
  std::string top = "@top";
  while (index_.count(top)) top += "'";
  std::vector<std::string> elems = ids_;
  elems.push_back(top);
  std::vector<std::pair<std::string, std::string>> covers;
  for (auto [a, b] : cover_pairs()) covers.emplace_back(ids_[a], ids_[b]);
  for (int m : maximal_elements()) covers.emplace_back(ids_[m], top);
  return Poset(std::move(elems), std::move(covers));
}

std::pair<bool, std::optional<std::pair<int, int>>> Poset::is_meet_semilattice()
    const {
  const int n = static_cast<int>(size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      std::vector<int> ub;
      for (int c = 0; c < n; ++c)
        if (leq_[a][c] && leq_[b][c]) ub.push_back(c);
      if (ub.empty()) continue;
      bool has_least = false;
      for (int c : ub) {
        bool least = true;
        for (int d : ub)
          if (!leq_[c][d]) {
            least = false;
            break;
          }
        if (least) {
          has_least = true;
          break;
        }
      }
      if (!has_least) return {false, std::make_pair(a, b)};
    }
  return {true, std::nullopt};
}

std::optional<int> Poset::join(int a, int b) const {
  const int n = static_cast<int>(size());
  std::vector<int> ub;
  for (int c = 0; c < n; ++c)
    if (leq_[a][c] && leq_[b][c]) ub.push_back(c);
  if (ub.empty()) return std::nullopt;
  for (int c : ub) {
    bool least = true;
    for (int d : ub)
      if (!leq_[c][d]) {
        least = false;
        break;
      }
    if (least) return c;
  }
  // find two minimal upper bounds for the diagnostic
  std::vector<int> mins;
  for (int c : ub) {
    bool minimal = true;
    for (int d : ub)
      if (d != c && leq_[d][c]) minimal = false;
    if (minimal) mins.push_back(c);
  }
  throw std::logic_error("Poset::join: no least upper bound of (" + ids_[a] +
                         ", " + ids_[b] + "); minimal upper bounds include " +
                         ids_[mins[0]] + " and " + ids_[mins[1]]);
}

Poset Poset::opposite() const {
  std::vector<std::pair<std::string, std::string>> covers;
  for (auto [a, b] : cover_pairs()) covers.emplace_back(ids_[b], ids_[a]);
  return Poset(ids_, std::move(covers));
}

std::vector<std::vector<int>> Poset::chains() const {
  std::vector<std::vector<int>> out;
  std::vector<int> order = linear_extension();
  std::vector<int> pos(size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  std::function<void(std::vector<int>&)> extend = [&](std::vector<int>& chain) {
    out.push_back(chain);
    int last = chain.back();
    for (int w : order) {
      if (pos[w] <= pos[last] || !less(last, w)) continue;
      chain.push_back(w);
      extend(chain);
      chain.pop_back();
    }
  };
  for (int v : order) {
    std::vector<int> chain{v};
    extend(chain);
  }
  return out;
}

}  // namespace cellalg
