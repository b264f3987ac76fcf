#include "sigmaforge/search.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <string>

#include "sigmaforge/errors.hpp"

namespace sigmaforge {

const char* mode_name(Mode mode) { return mode == Mode::sigma ? "sigma" : "lucky"; }

Mode parse_mode(std::string_view text) {
  if (text == "sigma") return Mode::sigma;
  if (text == "lucky") return Mode::lucky;
  throw InputError("unknown mode '" + std::string(text) + "' (expected sigma or lucky)");
}

TwinClasses twin_classes(const Graph& g) {
  std::map<std::vector<Vertex>, std::vector<Vertex>> closed, open;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::vector<Vertex> nb(g.neighbors(v).begin(), g.neighbors(v).end());
    open[nb].push_back(v);
    nb.insert(std::lower_bound(nb.begin(), nb.end(), v), v);
    closed[nb].push_back(v);
  }
  TwinClasses out;
  for (auto& [key, members] : closed)
    if (members.size() > 1) out.closed.push_back(members);
  for (auto& [key, members] : open)
    if (members.size() > 1) out.open.push_back(members);
  auto by_first = [](const auto& a, const auto& b) { return a.front() < b.front(); };
  std::sort(out.closed.begin(), out.closed.end(), by_first);
  std::sort(out.open.begin(), out.open.end(), by_first);
  return out;
}

namespace {

struct Occurrence {
  int constraint;
  int sign;
};

struct OrderLink {
  Vertex other;
  bool strict;
  bool other_is_larger;  // other must carry the larger label
};

struct TrailEntry {
  Vertex var;
  std::uint32_t old_domain;
  bool assignment;
};

}  // namespace

struct LabelSearch::Impl {
  SearchConfig cfg;
  int n = 0;
  int k = 0;

  // constraints, flattened
  std::vector<int> begin;
  std::vector<Vertex> term_var;
  std::vector<int> term_sign;
  std::vector<std::vector<Occurrence>> occ;
  std::vector<std::vector<OrderLink>> links;
  std::vector<std::pair<Vertex, Vertex>> closed_pairs;

  // state
  std::vector<int> value;
  std::vector<std::uint32_t> domain;
  std::vector<int> free_count;
  std::vector<std::int64_t> sum;  // lucky
  std::vector<int> vec;           // sigma, k entries per constraint
  std::vector<int> nonzero;       // sigma
  std::vector<int> used;
  std::vector<TrailEntry> trail;
  std::vector<Vertex> queue;
  bool root_failed = false;

  std::uint64_t node_count = 0;
  std::uint64_t budget = 0;
  bool budget_hit = false;

  std::uint32_t full_mask() const { return k >= 32 ? ~0u : ((1u << k) - 1u); }
  int constraint_count() const { return static_cast<int>(begin.size()) - 1; }

  void build(const Graph& g) {
    n = g.vertex_count();
    k = cfg.k;
    if (k < 1 || k > 31) throw InputError("label count must lie in 1..31");
    std::set<Edge> skip;
    for (auto [u, v] : cfg.unchecked_edges) skip.insert(u < v ? Edge{u, v} : Edge{v, u});

    occ.assign(static_cast<std::size_t>(n), {});
    begin.push_back(0);
    for (const auto& [u, v] : g.edges()) {
      if (skip.count({u, v})) continue;
      if (cfg.mode == Mode::sigma && g.degree(u) != g.degree(v)) continue;
      const auto nu = g.neighbors(u);
      const auto nv = g.neighbors(v);
      const int c = constraint_count();
      for (Vertex w : nu)
        if (!std::binary_search(nv.begin(), nv.end(), w)) {
          term_var.push_back(w);
          term_sign.push_back(+1);
          occ[static_cast<std::size_t>(w)].push_back({c, +1});
        }
      for (Vertex w : nv)
        if (!std::binary_search(nu.begin(), nu.end(), w)) {
          term_var.push_back(w);
          term_sign.push_back(-1);
          occ[static_cast<std::size_t>(w)].push_back({c, -1});
        }
      begin.push_back(static_cast<int>(term_var.size()));
    }

    links.assign(static_cast<std::size_t>(n), {});
    const auto twins = twin_classes(g);
    for (const auto& cls : twins.closed)
      if (cls.size() == 2) closed_pairs.emplace_back(cls[0], cls[1]);
    if (cfg.twin_ordering) {
      auto chain = [&](const std::vector<Vertex>& cls, bool strict) {
        for (std::size_t i = 0; i + 1 < cls.size(); ++i) {
          links[static_cast<std::size_t>(cls[i])].push_back({cls[i + 1], strict, true});
          links[static_cast<std::size_t>(cls[i + 1])].push_back({cls[i], strict, false});
        }
      };
      for (const auto& cls : twins.closed) chain(cls, true);
      for (const auto& cls : twins.open) chain(cls, false);
    }

    const int m = constraint_count();
    value.assign(static_cast<std::size_t>(n), -1);
    domain.assign(static_cast<std::size_t>(n), full_mask());
    free_count.resize(static_cast<std::size_t>(m));
    for (int c = 0; c < m; ++c) free_count[static_cast<std::size_t>(c)] = begin[c + 1] - begin[c];
    sum.assign(static_cast<std::size_t>(m), 0);
    vec.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(k), 0);
    nonzero.assign(static_cast<std::size_t>(m), 0);
    used.assign(static_cast<std::size_t>(k), 0);
    if (cfg.pin_vertex_zero && n > 0) domain[0] = 1u;
  }

  bool is_zero(int c) const {
    return cfg.mode == Mode::lucky ? sum[static_cast<std::size_t>(c)] == 0 : nonzero[static_cast<std::size_t>(c)] == 0;
  }

  // Returns the 0-based label that would zero constraint c if given to its
  // last free term (sign s), or -1.
  int forbidden_label(int c, int s) const {
    if (cfg.mode == Mode::lucky) {
      const std::int64_t label = -sum[static_cast<std::size_t>(c)] * s;
      return (label >= 1 && label <= k) ? static_cast<int>(label - 1) : -1;
    }
    if (nonzero[static_cast<std::size_t>(c)] != 1) return -1;
    const int* row = &vec[static_cast<std::size_t>(c) * static_cast<std::size_t>(k)];
    for (int i = 0; i < k; ++i)
      if (row[i] != 0) return row[i] == -s ? i : -1;
    return -1;
  }

  void apply(int c, int s, int label) {
    if (cfg.mode == Mode::lucky) {
      sum[static_cast<std::size_t>(c)] += static_cast<std::int64_t>(s) * (label + 1);
      return;
    }
    int& cell = vec[static_cast<std::size_t>(c) * static_cast<std::size_t>(k) + static_cast<std::size_t>(label)];
    const bool was_zero = cell == 0;
    cell += s;
    if (was_zero) ++nonzero[static_cast<std::size_t>(c)];
    else if (cell == 0) --nonzero[static_cast<std::size_t>(c)];
  }

  // Shrinks a domain; false on wipe-out.
  bool narrow(Vertex w, std::uint32_t keep) {
    auto& d = domain[static_cast<std::size_t>(w)];
    const std::uint32_t next = d & keep;
    if (next == d) return true;
    trail.push_back({w, d, false});
    d = next;
    if (next == 0) return false;
    if (std::has_single_bit(next) && value[static_cast<std::size_t>(w)] < 0) queue.push_back(w);
    return true;
  }

  bool assign(Vertex v, int label) {
    const auto vi = static_cast<std::size_t>(v);
    trail.push_back({v, domain[vi], true});
    domain[vi] = 1u << label;
    value[vi] = label;
    ++used[static_cast<std::size_t>(label)];
    for (const auto& [c, s] : occ[vi]) {
      --free_count[static_cast<std::size_t>(c)];
      apply(c, s, label);
    }
    for (const auto& [c, s] : occ[vi]) {
      const int left = free_count[static_cast<std::size_t>(c)];
      if (left == 0) {
        if (is_zero(c)) return false;
      } else if (left == 1) {
        for (int t = begin[c]; t < begin[c + 1]; ++t) {
          const Vertex w = term_var[static_cast<std::size_t>(t)];
          if (value[static_cast<std::size_t>(w)] >= 0) continue;
          const int bad = forbidden_label(c, term_sign[static_cast<std::size_t>(t)]);
          if (bad >= 0 && !narrow(w, ~(1u << bad))) return false;
          break;
        }
      }
    }
    for (const auto& link : links[vi]) {
      // other >= label (or >) when other is larger, else other <= label (or <)
      std::uint32_t keep = 0;
      for (int l = 0; l < k; ++l) {
        const bool ok = link.other_is_larger ? (link.strict ? l > label : l >= label)
                                             : (link.strict ? l < label : l <= label);
        if (ok) keep |= 1u << l;
      }
      if (!narrow(link.other, keep)) return false;
    }
    return true;
  }

  bool propagate() {
    while (!queue.empty()) {
      const Vertex w = queue.back();
      queue.pop_back();
      if (value[static_cast<std::size_t>(w)] >= 0) continue;
      const auto d = domain[static_cast<std::size_t>(w)];
      if (d == 0) {
        queue.clear();
        return false;
      }
      if (!assign(w, std::countr_zero(d))) {
        queue.clear();
        return false;
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail.size() > mark) {
      const TrailEntry e = trail.back();
      trail.pop_back();
      const auto vi = static_cast<std::size_t>(e.var);
      if (e.assignment) {
        const int label = value[vi];
        for (const auto& [c, s] : occ[vi]) {
          ++free_count[static_cast<std::size_t>(c)];
          apply(c, -s, label);
        }
        --used[static_cast<std::size_t>(label)];
        value[vi] = -1;
      }
      domain[vi] = e.old_domain;
    }
  }

  // Initial propagation of restricted domains.
  bool start() {
    trail.clear();
    queue.clear();
    node_count = 0;
    budget_hit = false;
    if (root_failed) return false;
    for (Vertex v = 0; v < n; ++v) {
      const auto d = domain[static_cast<std::size_t>(v)];
      if (d == 0) return false;
      if (std::has_single_bit(d)) queue.push_back(v);
    }
    std::reverse(queue.begin(), queue.end());
    return propagate();
  }

  Vertex choose() const {
    Vertex best = -1;
    int best_size = 0;
    std::uint64_t best_score = 0;
    for (Vertex v = 0; v < n; ++v) {
      const auto vi = static_cast<std::size_t>(v);
      if (value[vi] >= 0) continue;
      const int size = std::popcount(domain[vi]);
      std::uint64_t score = 0;
      for (const auto& [c, s] : occ[vi]) {
        const int left = free_count[static_cast<std::size_t>(c)];
        score += std::uint64_t{1} << std::max(0, 16 - left);
      }
      if (best < 0 || size < best_size || (size == best_size && score > best_score)) {
        best = v;
        best_size = size;
        best_score = score;
      }
    }
    return best;
  }

  std::vector<int> labels_one_based() const {
    std::vector<int> out(value.begin(), value.end());
    for (auto& l : out) ++l;
    return out;
  }

  std::vector<int> branch_values(Vertex v) const {
    std::vector<int> order;
    bool fresh_taken = false;
    for (int i = 0; i < k; ++i) {
      const int l = cfg.descending_values ? k - 1 - i : i;
      if (!(domain[static_cast<std::size_t>(v)] & (1u << l))) continue;
      if (cfg.value_symmetry && used[static_cast<std::size_t>(l)] == 0) {
        if (fresh_taken) continue;
        fresh_taken = true;
      }
      order.push_back(l);
    }
    return order;
  }

  // Generic DFS; on_leaf returns true to stop. bound (optional) prunes nodes.
  template <class Leaf, class Prune>
  bool dfs(Leaf& on_leaf, Prune& prune) {
    if (prune()) return false;
    const Vertex v = choose();
    if (v < 0) return on_leaf();
    for (int l : branch_values(v)) {
      if (node_count >= budget) {
        budget_hit = true;
        return true;
      }
      ++node_count;
      const std::size_t mark = trail.size();
      if (assign(v, l) && propagate()) {
        if (dfs(on_leaf, prune)) {
          undo(mark);
          return true;
        }
      }
      queue.clear();
      undo(mark);
    }
    return false;
  }

  int lower_bound() const {
    int lb = used[0];
    for (const auto& [a, b] : closed_pairs)
      if (value[static_cast<std::size_t>(a)] < 0 && value[static_cast<std::size_t>(b)] < 0) ++lb;
    return lb;
  }
};

LabelSearch::LabelSearch(const Graph& g, SearchConfig config) : impl_(new Impl{}) {
  impl_->cfg = std::move(config);
  try {
    impl_->build(g);
  } catch (...) {
    delete impl_;
    throw;
  }
}

LabelSearch::~LabelSearch() { delete impl_; }

void LabelSearch::restrict(Vertex v, const std::vector<int>& labels) {
  if (v < 0 || v >= impl_->n) throw InputError("restricted vertex out of range");
  std::uint32_t mask = 0;
  for (int l : labels) {
    if (l < 1 || l > impl_->k) throw InputError("restricted label out of range");
    mask |= 1u << (l - 1);
  }
  impl_->domain[static_cast<std::size_t>(v)] &= mask;
  if (impl_->domain[static_cast<std::size_t>(v)] == 0) impl_->root_failed = true;
}

std::uint64_t LabelSearch::nodes() const noexcept { return impl_->node_count; }

LabelSearch::Status LabelSearch::find(std::uint64_t budget, std::vector<int>& labels) {
  return enumerate(budget, [&](const std::vector<int>& found) {
    labels = found;
    return false;
  });
}

LabelSearch::Status LabelSearch::enumerate(std::uint64_t budget,
                                           const std::function<bool(const std::vector<int>&)>& visit) {
  Impl& s = *impl_;
  s.budget = budget;
  const std::size_t root = 0;
  if (!s.start()) {
    s.undo(root);
    return Status::exhausted;
  }
  bool stopped = false;
  auto on_leaf = [&]() {
    if (!visit(s.labels_one_based())) {
      stopped = true;
      return true;
    }
    return false;
  };
  auto no_prune = []() { return false; };
  s.dfs(on_leaf, no_prune);
  s.undo(root);
  if (stopped) return Status::found;
  return s.budget_hit ? Status::budget : Status::exhausted;
}

LabelSearch::Status LabelSearch::minimize_label_one(std::uint64_t budget, std::vector<int>& labels, int& best) {
  Impl& s = *impl_;
  s.budget = budget;
  best = -1;
  const std::size_t root = 0;
  if (!s.start()) {
    s.undo(root);
    return Status::exhausted;
  }
  auto on_leaf = [&]() {
    const int count = s.used[0];
    if (best < 0 || count < best) {
      best = count;
      labels = s.labels_one_based();
    }
    return best == 0;
  };
  auto prune = [&]() { return best >= 0 && s.lower_bound() >= best; };
  s.dfs(on_leaf, prune);
  s.undo(root);
  if (s.budget_hit) return Status::budget;
  return best >= 0 ? Status::found : Status::exhausted;
}

}  // namespace sigmaforge
