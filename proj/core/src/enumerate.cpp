#include "gaidx/enumerate.hpp"

#include <algorithm>
#include <map>

#include "gaidx/error.hpp"

namespace gaidx {
namespace {

// Unlabeled rooted trees. A tree is its size plus a non-increasing list of
// child tree ids. Ids grow with size, so the list is a multiset key.
struct RootedTree {
  int size = 1;
  std::vector<int> children;
};

class RootedTreeCatalog {
 public:
  explicit RootedTreeCatalog(int max_size) : by_size_(max_size + 1) {
    for (int m = 1; m <= max_size; ++m) {
      std::vector<RootedTree> fresh;
      std::vector<int> chosen;
      collect(m - 1, static_cast<int>(trees_.size()) - 1, chosen, fresh);
      for (auto& t : fresh) {
        t.size = m;
        by_size_[m].push_back(static_cast<int>(trees_.size()));
        trees_.push_back(std::move(t));
      }
    }
  }

  const std::vector<int>& of_size(int m) const { return by_size_.at(m); }
  int size_of(int id) const { return trees_[id].size; }

  /// Emits the edges of tree `id` hanging from `root`, allocating ids from `next`.
  void attach(int id, Vertex root, Vertex& next, std::vector<Edge>& edges) const {
    for (int child : trees_[id].children) {
      const Vertex c = next++;
      edges.push_back({root, c});
      attach(child, c, next, edges);
    }
  }

 private:
  void collect(int remaining, int max_id, std::vector<int>& chosen,
               std::vector<RootedTree>& out) const {
    if (remaining == 0) {
      out.push_back({0, chosen});
      return;
    }
    for (int id = max_id; id >= 0; --id) {
      if (trees_[id].size > remaining) continue;
      chosen.push_back(id);
      collect(remaining - trees_[id].size, id, chosen, out);
      chosen.pop_back();
    }
  }

  std::vector<RootedTree> trees_;
  std::vector<std::vector<int>> by_size_;
};

// True when `seq` is the lexicographically least of its rotations and reflections.
bool is_least_dihedral(const std::vector<int>& seq) {
  const std::size_t g = seq.size();
  std::vector<int> alt(g);
  for (std::size_t shift = 0; shift < g; ++shift) {
    for (int dir : {+1, -1}) {
      for (std::size_t i = 0; i < g; ++i) {
        const std::size_t j = dir > 0 ? (shift + i) % g : (shift + g - i) % g;
        alt[i] = seq[j];
      }
      if (alt < seq) return false;
    }
  }
  return true;
}

void check_order(int n) {
  if (n < kMinEnumerationOrder || n > kMaxEnumerationOrder) {
    throw DomainError("enumeration order must be in [" + std::to_string(kMinEnumerationOrder) +
                      ", " + std::to_string(kMaxEnumerationOrder) + "], got " +
                      std::to_string(n));
  }
}

}  // namespace

std::size_t rooted_tree_count(int m) {
  if (m < 1 || m > 20) throw DomainError("rooted_tree_count supports 1 <= m <= 20");
  return RootedTreeCatalog(m).of_size(m).size();
}

std::vector<UnicyclicClass> enumerate_unicyclic(int n) {
  check_order(n);
  const RootedTreeCatalog catalog(n - 2);
  std::map<CanonicalKey, Graph> classes;

  for (int girth = 3; girth <= n; ++girth) {
    // Tree ids per cycle position; sizes sum to n.
    std::vector<int> seq(girth);
    auto place = [&](auto&& self, int pos, int remaining) -> void {
      const int slots_left = girth - pos;
      if (pos == girth) {
        if (remaining != 0 || !is_least_dihedral(seq)) return;
        std::vector<Edge> edges;
        for (Vertex i = 0; i < girth; ++i) edges.push_back({i, (i + 1) % girth});
        Vertex next = girth;
        for (int i = 0; i < girth; ++i) catalog.attach(seq[i], i, next, edges);
        Graph g = Graph::build(n, edges);
        CanonicalKey key = canonical_form(g);
        classes.try_emplace(std::move(key), std::move(g));
        return;
      }
      for (int size = 1; size <= remaining - (slots_left - 1); ++size) {
        for (int id : catalog.of_size(size)) {
          seq[pos] = id;
          self(self, pos + 1, remaining - size);
        }
      }
    };
    place(place, 0, n);
  }

  std::vector<UnicyclicClass> out;
  out.reserve(classes.size());
  for (auto& [key, g] : classes) out.push_back({key, g});
  return out;
}

void for_each_unicyclic(int n, const std::function<void(const UnicyclicClass&)>& visit) {
  for (const auto& c : enumerate_unicyclic(n)) visit(c);
}

}  // namespace gaidx
