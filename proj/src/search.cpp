#include "ternary/search.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <random>
#include <stdexcept>

#include "ternary/counting.hpp"

namespace ternary {

bool VertexSet::none() const noexcept {
  return std::all_of(blocks_.begin(), blocks_.end(), [](std::uint64_t b) { return b == 0; });
}

int VertexSet::count() const noexcept {
  int c = 0;
  for (auto b : blocks_) c += std::popcount(b);
  return c;
}

int VertexSet::first() const noexcept {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i]) return static_cast<int>(i * 64) + std::countr_zero(blocks_[i]);
  }
  return -1;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) noexcept {
  for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] &= other.blocks_[i];
  return *this;
}

VertexSet& VertexSet::subtract(const VertexSet& other) noexcept {
  for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] &= ~other.blocks_[i];
  return *this;
}

CompatibilityGraph::CompatibilityGraph(int vertex_count, const std::function<bool(int, int)>& compatible)
    : rows_(static_cast<std::size_t>(vertex_count), VertexSet(vertex_count)) {
  for (int u = 0; u < vertex_count; ++u) {
    for (int v = u + 1; v < vertex_count; ++v) {
      if (compatible(u, v)) {
        rows_[static_cast<std::size_t>(u)].set(v);
        rows_[static_cast<std::size_t>(v)].set(u);
      }
    }
  }
}

namespace {

/// Smallest-last order: repeatedly strip a minimum-degree vertex (lowest id
/// on ties); the result lists the last stripped vertex first.
std::vector<int> degeneracy_order(const CompatibilityGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> degree(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) degree[static_cast<std::size_t>(v)] = g.degree(v);
  std::vector<bool> removed(static_cast<std::size_t>(n), false);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (!removed[static_cast<std::size_t>(v)] &&
          (pick < 0 || degree[static_cast<std::size_t>(v)] < degree[static_cast<std::size_t>(pick)])) {
        pick = v;
      }
    }
    removed[static_cast<std::size_t>(pick)] = true;
    order.push_back(pick);
    for (int u = 0; u < n; ++u) {
      if (!removed[static_cast<std::size_t>(u)] && g.adjacent(pick, u)) --degree[static_cast<std::size_t>(u)];
    }
  }
  std::reverse(order.begin(), order.end());
  return order;
}

class RootSolver {
 public:
  RootSolver(const std::vector<VertexSet>& adj, std::size_t threshold, std::uint64_t budget)
      : adj_(adj), threshold_(threshold), budget_(budget) {}

  /// Searches for cliques larger than the seed threshold containing `root`.
  void solve(int root, VertexSet candidates) {
    std::vector<int> current{root};
    std::vector<int> order;
    std::vector<int> colours;
    colour(candidates, order, colours);
    upper_ = 1 + (colours.empty() ? 0 : colours.back());
    if (candidates.none()) {
      if (1 > threshold_) best_ = current;
      return;
    }
    expand(candidates, current);
  }

  const std::vector<int>& best() const { return best_; }
  int root_upper() const { return upper_; }
  bool aborted() const { return aborted_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::size_t bar() const { return std::max(threshold_, best_.size()); }

  void colour(const VertexSet& p, std::vector<int>& order, std::vector<int>& colours) const {
    order.clear();
    colours.clear();
    VertexSet uncoloured = p;
    int colour_class = 0;
    while (!uncoloured.none()) {
      ++colour_class;
      VertexSet open = uncoloured;
      for (int v = open.first(); v >= 0; v = open.first()) {
        open.reset(v);
        open.subtract(adj_[static_cast<std::size_t>(v)]);
        uncoloured.reset(v);
        order.push_back(v);
        colours.push_back(colour_class);
      }
    }
  }

  void expand(VertexSet p, std::vector<int>& current) {
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    std::vector<int> order;
    std::vector<int> colours;
    colour(p, order, colours);
    for (std::size_t k = order.size(); k-- > 0;) {
      if (aborted_) return;
      if (current.size() + static_cast<std::size_t>(colours[k]) <= bar()) return;
      const int v = order[k];
      current.push_back(v);
      VertexSet next = p;
      next &= adj_[static_cast<std::size_t>(v)];
      if (next.none()) {
        if (current.size() > bar()) best_ = current;
      } else {
        expand(std::move(next), current);
      }
      current.pop_back();
      p.reset(v);
    }
  }

  const std::vector<VertexSet>& adj_;
  std::size_t threshold_;
  std::uint64_t budget_;
  std::vector<int> best_;
  int upper_ = 0;
  bool aborted_ = false;
  std::uint64_t nodes_ = 0;
};

struct RootOutcome {
  std::vector<int> clique;
  int upper = 0;
  bool complete = true;
  std::uint64_t nodes = 0;
};

std::uint64_t checked_power(int base, int exponent, std::uint64_t limit) {
  std::uint64_t p = 1;
  for (int i = 0; i < exponent; ++i) {
    if (p > limit / static_cast<std::uint64_t>(base) + 1) return limit + 1;
    p *= static_cast<std::uint64_t>(base);
  }
  return p;
}

void require_within_limit(std::uint64_t vertices, std::uint64_t limit, const std::string& what) {
  if (vertices > limit) {
    throw LimitExceeded(what + " has " + std::to_string(vertices) + " words, above the vertex limit " +
                                std::to_string(limit) + "; use the bounds table instead");
  }
}

SearchOutcome outcome_of(const CliqueResult& r) {
  return SearchOutcome{static_cast<long long>(r.clique.size()), r.upper, r.complete, r.nodes};
}

/// Roots (-1,...,-1,0,...,0): one per orbit of Q^n under coordinate
/// permutations and per-coordinate sign changes, both of which preserve d1.
std::vector<int> full_space_roots(int n) {
  std::vector<int> roots;
  for (int zeros = 0; zeros <= n; ++zeros) {
    std::vector<int> s(static_cast<std::size_t>(n), -1);
    std::fill(s.end() - zeros, s.end(), 0);
    roots.push_back(static_cast<int>(TernaryWord(s).index()));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace

CliqueResult max_clique(const CompatibilityGraph& graph, std::span<const int> roots, std::uint64_t budget,
                        Execution exec) {
  const int n = graph.vertex_count();
  CliqueResult result;
  if (n == 0) {
    result.complete = true;
    return result;
  }

  // Greedy seed in original vertex order.
  std::vector<int> seed;
  for (int v = 0; v < n; ++v) {
    if (std::all_of(seed.begin(), seed.end(), [&](int u) { return graph.adjacent(u, v); })) seed.push_back(v);
  }

  const auto order = degeneracy_order(graph);
  std::vector<int> position(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) position[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
  std::vector<VertexSet> adj(static_cast<std::size_t>(n), VertexSet(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (graph.adjacent(order[static_cast<std::size_t>(a)], order[static_cast<std::size_t>(b)])) {
        adj[static_cast<std::size_t>(a)].set(b);
      }
    }
  }

  const auto root_count = static_cast<std::int64_t>(roots.size());
  std::vector<RootOutcome> outcomes(roots.size());
  auto solve_root = [&](std::int64_t i) {
    const int root = position[static_cast<std::size_t>(roots[static_cast<std::size_t>(i)])];
    VertexSet candidates = adj[static_cast<std::size_t>(root)];
    for (std::int64_t j = 0; j < i; ++j) candidates.reset(position[static_cast<std::size_t>(roots[static_cast<std::size_t>(j)])]);
    RootSolver solver(adj, seed.size(), budget);
    solver.solve(root, std::move(candidates));
    auto& out = outcomes[static_cast<std::size_t>(i)];
    out.clique = solver.best();
    out.upper = solver.root_upper();
    out.complete = !solver.aborted();
    out.nodes = solver.nodes();
  };

  if (exec == Execution::Serial) {
    for (std::int64_t i = 0; i < root_count; ++i) solve_root(i);
  } else {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < root_count; ++i) solve_root(i);
  }

  std::vector<int> best = seed;
  bool from_seed = true;
  int upper = 0;
  result.complete = true;
  for (const auto& out : outcomes) {
    result.nodes += out.nodes;
    if (out.clique.size() > best.size()) {
      best = out.clique;
      from_seed = false;
    }
    if (!out.complete) {
      result.complete = false;
      upper = std::max(upper, out.upper);
    }
  }
  if (!from_seed) {
    for (auto& v : best) v = order[static_cast<std::size_t>(v)];
  }
  std::sort(best.begin(), best.end());
  result.clique = std::move(best);
  result.upper = std::max(upper, static_cast<int>(result.clique.size()));
  return result;
}

std::string SearchOutcome::to_string() const {
  if (complete) return std::to_string(lower);
  return "[" + std::to_string(lower) + ", " + std::to_string(upper) + "]";
}

TernarySearchResult exact_T(int n, int d, const SearchOptions& options) {
  if (n < 1) throw std::invalid_argument("exact_T needs n >= 1");
  require_within_limit(checked_power(3, n, options.vertex_limit), options.vertex_limit,
                       "Q^" + std::to_string(n));
  const auto words = all_ternary_words(n);
  CompatibilityGraph graph(static_cast<int>(words.size()), [&](int u, int v) {
    return d1_distance(words[static_cast<std::size_t>(u)], words[static_cast<std::size_t>(v)]) >= d;
  });
  const auto roots = full_space_roots(n);
  const auto clique = max_clique(graph, roots, options.budget, options.exec);
  std::vector<TernaryWord> chosen;
  for (int v : clique.clique) chosen.push_back(words[static_cast<std::size_t>(v)]);
  return TernarySearchResult{outcome_of(clique), TernaryCode(n, std::move(chosen))};
}

HammingSearchResult exact_A(int q, int n, int d, const SearchOptions& options) {
  if (q < 2 || n < 1) throw std::invalid_argument("exact_A needs q >= 2 and n >= 1");
  const auto count = checked_power(q, n, options.vertex_limit);
  require_within_limit(count, options.vertex_limit,
                       "the " + std::to_string(q) + "-ary space of length " + std::to_string(n));
  std::vector<QaryWord> words(count, QaryWord(static_cast<std::size_t>(n)));
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    auto rest = idx;
    for (int i = n - 1; i >= 0; --i) {
      words[idx][static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::uint64_t>(q));
      rest /= static_cast<std::uint64_t>(q);
    }
  }
  CompatibilityGraph graph(static_cast<int>(count), [&](int u, int v) {
    int dist = 0;
    for (int i = 0; i < n; ++i) {
      dist += words[static_cast<std::size_t>(u)][static_cast<std::size_t>(i)] !=
              words[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)];
    }
    return dist >= d;
  });
  // Hamming space is vertex transitive, so some maximum code contains 0^n.
  const std::vector<int> roots{0};
  const auto clique = max_clique(graph, roots, options.budget, options.exec);
  HammingSearchResult r;
  r.outcome = outcome_of(clique);
  r.q = q;
  r.n = n;
  for (int v : clique.clique) r.witness.push_back(words[static_cast<std::size_t>(v)]);
  return r;
}

TernarySearchResult exact_T_constant_weight(int n, int w, int d, const SearchOptions& options) {
  if (n < 1 || w < 0 || w > n) throw std::invalid_argument("exact_T_constant_weight needs 0 <= w <= n");
  const mpz_class shell = shell_size(n, w);
  require_within_limit(shell.fits_ulong_p() ? shell.get_ui() : std::numeric_limits<std::uint64_t>::max(),
                       options.vertex_limit, "the weight shell Q^" + std::to_string(n) + "_" + std::to_string(w));
  if (n > kExhaustiveLimit) throw LimitExceeded("length above the exhaustive limit");
  std::vector<TernaryWord> words;
  for (const auto& x : all_ternary_words(n)) {
    if (x.weight() == w) words.push_back(x);
  }
  CompatibilityGraph graph(static_cast<int>(words.size()), [&](int u, int v) {
    return d1_distance(words[static_cast<std::size_t>(u)], words[static_cast<std::size_t>(v)]) >= d;
  });
  // Permutations and per-coordinate sign changes act transitively on the shell.
  const std::vector<int> roots{0};
  const auto clique = max_clique(graph, roots, options.budget, options.exec);
  std::vector<TernaryWord> chosen;
  for (int v : clique.clique) chosen.push_back(words[static_cast<std::size_t>(v)]);
  return TernarySearchResult{outcome_of(clique), TernaryCode(n, std::move(chosen))};
}

void for_each_in_d1_ball(const TernaryWord& x, int r, const std::function<void(std::uint64_t)>& visit) {
  const int n = x.length();
  // Depth-first over coordinates, tracking the index prefix and spent radius.
  auto recurse = [&](auto&& self, int i, std::uint64_t prefix, int spent) -> void {
    if (i == n) {
      visit(prefix);
      return;
    }
    const int xi = x[i];
    for (int s = -1; s <= 1; ++s) {
      const int cost = std::abs(s - xi);
      if (spent + cost <= r) self(self, i + 1, prefix * 3 + static_cast<std::uint64_t>(s + 1), spent + cost);
    }
  };
  recurse(recurse, 0, 0, 0);
}

TernaryCode greedy_gv_code(int n, int d, GreedyOrder order, std::uint64_t seed) {
  if (n < 1 || n > kExhaustiveLimit) throw LimitExceeded("greedy_gv_code length outside 1..12");
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  std::vector<std::uint64_t> scan(total);
  for (std::uint64_t i = 0; i < total; ++i) scan[i] = i;
  if (order == GreedyOrder::Random) {
    std::mt19937_64 rng(seed);
    for (std::uint64_t i = total - 1; i > 0; --i) std::swap(scan[i], scan[rng() % (i + 1)]);
  }
  std::vector<bool> blocked(total, false);
  std::vector<TernaryWord> kept;
  for (auto idx : scan) {
    if (blocked[idx]) continue;
    const auto x = TernaryWord::from_index(n, idx);
    kept.push_back(x);
    if (d >= 1) for_each_in_d1_ball(x, d - 1, [&](std::uint64_t y) { blocked[y] = true; });
  }
  return TernaryCode(n, std::move(kept));
}

ColumnStats column_stats(const TernaryCode& code) {
  ColumnStats s;
  s.length = code.length();
  s.size = static_cast<long long>(code.size());
  s.counts.assign(static_cast<std::size_t>(code.length()), {0, 0, 0});
  for (const auto& w : code) {
    for (int i = 0; i < code.length(); ++i) ++s.counts[static_cast<std::size_t>(i)][static_cast<std::size_t>(w[i] + 1)];
  }
  for (const auto& c : s.counts) {
    const long long minus = c[0], zero = c[1], plus = c[2];
    s.pair_distance_sum += 2 * zero * (plus + minus) + 4 * plus * minus;
  }
  return s;
}

PlotkinReport plotkin_witness_check(const TernaryCode& code, int d) {
  if (code.empty()) throw std::invalid_argument("Plotkin check needs a nonempty code");
  if (!min_distance(code).satisfies(d)) {
    throw std::invalid_argument("code minimum distance " + min_distance(code).to_string() + " is below d = " +
                                std::to_string(d));
  }
  PlotkinReport r;
  r.stats = column_stats(code);
  const long long m = r.stats.size;
  r.min_distance_side = m * (m - 1) * d;
  for (int i = 0; i < code.length(); ++i) r.zero_square_sum += r.stats.zeros(i) * r.stats.zeros(i);
  r.column_side = static_cast<long long>(code.length()) * m * m - r.zero_square_sum;
  if (code.size() <= 4096) {
    long long direct = 0;
    for (const auto& x : code) {
      for (const auto& y : code) direct += d1_distance(x, y);
    }
    r.direct_pair_sum = direct;
  }
  return r;
}

}  // namespace ternary
