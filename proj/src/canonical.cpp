#include "sti/canonical.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace sti {
namespace {

constexpr std::size_t kMaxStoredAutomorphisms = 64;

// Replaces arbitrary colour values by their ranks; returns the class count.
int normalise(std::vector<int>& colour) {
  std::vector<int> values(colour);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  for (int& c : colour) {
    c = static_cast<int>(std::lower_bound(values.begin(), values.end(), c) - values.begin());
  }
  return static_cast<int>(values.size());
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      auto& p = parent[static_cast<std::size_t>(x)];
      p = parent[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

class Canoniser {
 public:
  Canoniser(const Graph& g, std::span<const int> colours)
      : g_(g), n_(g.order()), initial_(colours.begin(), colours.end()) {
    if (initial_.empty()) initial_.assign(static_cast<std::size_t>(n_), 0);
    if (static_cast<int>(initial_.size()) != n_) {
      throw GraphError("colouring size does not match graph order");
    }
  }

  std::vector<int> run() {
    std::vector<int> colour(initial_);
    std::vector<int> prefix;
    descend(colour, prefix);
    return best_perm_;
  }

  // Unpruned walk: each leaf whose certificate equals the first leaf's
  // yields one distinct automorphism.
  std::vector<std::vector<int>> group() {
    enumerate_all_ = true;
    std::vector<int> colour(initial_);
    std::vector<int> prefix;
    descend(colour, prefix);
    return group_;
  }

 private:
  // Equitable refinement: split classes by neighbour counts per class until
  // stable. Class order depends only on isomorphism-invariant data.
  void refine(std::vector<int>& colour) const {
    int classes = normalise(colour);
    std::vector<int> order(static_cast<std::size_t>(n_));
    std::vector<int> sig(static_cast<std::size_t>(n_ * (n_ + 1)));
    std::vector<Row> mask(static_cast<std::size_t>(n_));
    while (classes < n_) {
      std::fill(mask.begin(), mask.begin() + classes, 0);
      for (int v = 0; v < n_; ++v) mask[static_cast<std::size_t>(colour[static_cast<std::size_t>(v)])] |= bit(v);
      const int width = classes + 1;
      for (int v = 0; v < n_; ++v) {
        int* s = &sig[static_cast<std::size_t>(v * width)];
        s[0] = colour[static_cast<std::size_t>(v)];
        for (int c = 0; c < classes; ++c) {
          s[c + 1] = std::popcount(g_.neighbors(v) & mask[static_cast<std::size_t>(c)]);
        }
      }
      std::iota(order.begin(), order.end(), 0);
      auto at = [&](int v) { return &sig[static_cast<std::size_t>(v * width)]; };
      std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::lexicographical_compare(at(a), at(a) + width, at(b), at(b) + width);
      });
      int next = 0;
      for (std::size_t i = 0; i < order.size(); ++i) {
        if (i > 0 && !std::equal(at(order[i - 1]), at(order[i - 1]) + width, at(order[i]))) ++next;
        colour[static_cast<std::size_t>(order[i])] = next;
      }
      const int refined = next + 1;
      if (refined == classes) break;
      classes = refined;
    }
  }

  void leaf(const std::vector<int>& position) {
    std::vector<Row> cert(static_cast<std::size_t>(2 * n_), 0);
    for (int v = 0; v < n_; ++v) {
      Row mapped = 0;
      for (Row r = g_.neighbors(v); r != 0; r &= r - 1) {
        mapped |= bit(position[static_cast<std::size_t>(std::countr_zero(r))]);
      }
      const auto p = static_cast<std::size_t>(position[static_cast<std::size_t>(v)]);
      cert[p] = mapped;
      cert[static_cast<std::size_t>(n_) + p] = static_cast<Row>(initial_[static_cast<std::size_t>(v)]);
    }
    if (enumerate_all_) {
      if (best_perm_.empty()) {
        best_cert_ = std::move(cert);
        best_perm_ = position;
        group_.push_back(identity());
      } else if (cert == best_cert_) {
        group_.push_back(automorphism_to(position));
      }
      return;
    }
    if (best_perm_.empty() || cert > best_cert_) {
      best_cert_ = std::move(cert);
      best_perm_ = position;
      return;
    }
    if (cert == best_cert_ && automorphisms_.size() < kMaxStoredAutomorphisms) {
      automorphisms_.push_back(automorphism_to(position));
    }
  }

  std::vector<int> identity() const {
    std::vector<int> id(static_cast<std::size_t>(n_));
    std::iota(id.begin(), id.end(), 0);
    return id;
  }

  // The automorphism taking v to the vertex the best leaf places where
  // `position` places v.
  std::vector<int> automorphism_to(const std::vector<int>& position) const {
    std::vector<int> inverse(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) inverse[static_cast<std::size_t>(best_perm_[static_cast<std::size_t>(v)])] = v;
    std::vector<int> gamma(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) {
      gamma[static_cast<std::size_t>(v)] = inverse[static_cast<std::size_t>(position[static_cast<std::size_t>(v)])];
    }
    return gamma;
  }

  // Orbits of the pointwise stabiliser of `prefix` generated by the stored
  // automorphisms and by twin transpositions inside `cell`.
  UnionFind orbits(const std::vector<int>& prefix, const std::vector<int>& cell) const {
    UnionFind uf(n_);
    for (const auto& gamma : automorphisms_) {
      const bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int v) {
        return gamma[static_cast<std::size_t>(v)] == v;
      });
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) uf.unite(v, gamma[static_cast<std::size_t>(v)]);
    }
    for (std::size_t i = 0; i < cell.size(); ++i) {
      for (std::size_t j = i + 1; j < cell.size(); ++j) {
        const int a = cell[i];
        const int b = cell[j];
        if ((g_.neighbors(a) & ~bit(b)) == (g_.neighbors(b) & ~bit(a))) uf.unite(a, b);
      }
    }
    return uf;
  }

  void descend(std::vector<int>& colour, std::vector<int>& prefix) {
    refine(colour);
    // Target cell: the first non-singleton class.
    std::vector<int> size(static_cast<std::size_t>(n_), 0);
    for (int c : colour) ++size[static_cast<std::size_t>(c)];
    int target = -1;
    for (int c = 0; c < n_; ++c) {
      if (size[static_cast<std::size_t>(c)] > 1) {
        target = c;
        break;
      }
    }
    if (target < 0) {
      leaf(colour);
      return;
    }
    std::vector<int> cell;
    for (int v = 0; v < n_; ++v) {
      if (colour[static_cast<std::size_t>(v)] == target) cell.push_back(v);
    }
    std::vector<int> explored;
    for (int v : cell) {
      if (!enumerate_all_ && !explored.empty()) {
        UnionFind uf = orbits(prefix, cell);
        const int root = uf.find(v);
        if (std::any_of(explored.begin(), explored.end(), [&](int w) { return uf.find(w) == root; })) {
          continue;
        }
      }
      std::vector<int> child(colour);
      for (int& c : child) c *= 2;
      for (int x = 0; x < n_; ++x) {
        if (x != v && colour[static_cast<std::size_t>(x)] == target) ++child[static_cast<std::size_t>(x)];
      }
      prefix.push_back(v);
      descend(child, prefix);
      prefix.pop_back();
      explored.push_back(v);
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> initial_;
  std::vector<Row> best_cert_;
  std::vector<int> best_perm_;
  std::vector<std::vector<int>> automorphisms_;
  bool enumerate_all_ = false;
  std::vector<std::vector<int>> group_;
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g, std::span<const int> colours) {
  return Canoniser(g, colours).run();
}

Graph canonical_graph(const Graph& g, std::span<const int> colours) {
  return g.relabeled(canonical_labeling(g, colours));
}

std::vector<std::vector<int>> automorphism_group(const Graph& g) {
  return Canoniser(g, {}).group();
}

CanonicalForm canonical_form(const Graph& g) {
  if (g.order() > kCanonicalOrderLimit) {
    throw GraphError("canonical_form: order " + std::to_string(g.order()) +
                     " exceeds limit " + std::to_string(kCanonicalOrderLimit));
  }
  return CanonicalForm{to_graph6(canonical_graph(g))};
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  auto degrees = [](const Graph& g) {
    std::vector<int> d;
    for (int v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degrees(a) != degrees(b)) return false;
  return canonical_graph(a) == canonical_graph(b);
}

}  // namespace sti
