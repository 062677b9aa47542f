#include "gaidx/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "gaidx/error.hpp"

namespace gaidx {
namespace {

using Coloring = std::vector<int>;

int color_count(const Coloring& colors) {
  return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
}

// Equitable refinement. New colours are ranks of (colour, sorted neighbour
// colours), so the result depends only on the structure and the input
// colouring, never on vertex ids.
Coloring refine(const Graph& g, Coloring colors) {
  const int n = g.order();
  using Signature = std::pair<int, std::vector<int>>;
  std::vector<Signature> sig(n);
  int classes = color_count(colors);
  while (true) {
    for (Vertex v = 0; v < n; ++v) {
      sig[v].first = colors[v];
      sig[v].second.clear();
      for (Vertex w : g.neighbors(v)) sig[v].second.push_back(colors[w]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return sig[a] < sig[b]; });
    Coloring next(n);
    int rank = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++rank;
      next[order[i]] = rank;
    }
    const int next_classes = rank + 1;
    colors = std::move(next);
    if (next_classes == classes) return colors;
    classes = next_classes;
  }
}

Coloring individualize(const Coloring& colors, Vertex x) {
  // x moves in front of the rest of its cell; every later cell shifts by one.
  Coloring out(colors.size());
  for (std::size_t v = 0; v < colors.size(); ++v) {
    if (colors[v] < colors[x]) {
      out[v] = colors[v];
    } else if (static_cast<Vertex>(v) == x) {
      out[v] = colors[x];
    } else {
      out[v] = colors[v] + 1;
    }
  }
  return out;
}

// a and b are twins when swapping them is an automorphism.
bool twins(const Graph& g, Vertex a, Vertex b) {
  auto strip = [&](Vertex x, Vertex drop) {
    std::vector<Vertex> nb;
    for (Vertex y : g.neighbors(x)) {
      if (y != drop) nb.push_back(y);
    }
    return nb;
  };
  return strip(a, b) == strip(b, a);
}

std::string certificate(const Graph& g, const Coloring& discrete) {
  const int n = g.order();
  std::vector<Vertex> at(n);
  for (Vertex v = 0; v < n; ++v) at[discrete[v]] = v;
  std::string out(1, static_cast<char>(n));
  unsigned char acc = 0;
  int bits = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      acc = static_cast<unsigned char>((acc << 1) | (g.has_edge(at[i], at[j]) ? 1 : 0));
      if (++bits == 8) {
        out.push_back(static_cast<char>(acc));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>(acc << (8 - bits)));
  return out;
}

struct Search {
  const Graph& g;
  std::optional<std::string> best;
  Coloring best_coloring;

  void run(Coloring colors) {
    colors = refine(g, std::move(colors));
    const int n = g.order();
    const int classes = color_count(colors);
    if (classes == n) {
      std::string cert = certificate(g, colors);
      if (!best || cert < *best) {
        best = std::move(cert);
        best_coloring = colors;
      }
      return;
    }
    // First non-singleton cell.
    std::vector<int> cell_size(classes, 0);
    for (int c : colors) ++cell_size[c];
    int target = 0;
    while (cell_size[target] == 1) ++target;
    std::vector<Vertex> cell;
    for (Vertex v = 0; v < n; ++v) {
      if (colors[v] == target) cell.push_back(v);
    }
    std::vector<Vertex> reps;
    for (Vertex v : cell) {
      bool covered = std::any_of(reps.begin(), reps.end(), [&](Vertex r) { return twins(g, r, v); });
      if (!covered) reps.push_back(v);
    }
    for (Vertex v : reps) run(individualize(colors, v));
  }
};

}  // namespace

std::string CanonicalKey::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (unsigned char c : bytes_) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

CanonicalResult canonical_labeling(const Graph& g) {
  if (g.order() > 255) throw DomainError("canonical labeling supports at most 255 vertices");
  Search search{g, std::nullopt, {}};
  search.run(Coloring(g.order(), 0));
  return {CanonicalKey(*search.best), search.best_coloring};
}

CanonicalKey canonical_form(const Graph& g) { return canonical_labeling(g).key; }

bool are_isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

}  // namespace gaidx
