#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "equalizer.hpp"
#include "matching.hpp"

namespace eqdim {

struct SolverOptions {
  std::optional<double> time_limit_seconds;
  std::optional<std::uint64_t> node_limit;
  /// Explore root branches on several threads. The value is still exact; the
  /// returned set may be any optimum.
  bool parallel = false;
  /// Optional starting incumbent; ignored unless it is a distance-equalizer set.
  std::optional<VertexSet> hint;
};

enum class SolveStatus { Optimal, BudgetExceeded };

struct SolveResult {
  SolveStatus status = SolveStatus::Optimal;
  std::size_t lower_bound = 0;
  std::size_t upper_bound = 0;
  /// Optimum, or the best incumbent when the budget ran out.
  VertexSet set;
  EqualizerCertificate certificate;
  std::uint64_t nodes = 0;
  bool parallel = false;
  /// Root lower bound met the initial incumbent; no branching happened.
  bool closed_at_root = false;

  bool exact() const noexcept { return status == SolveStatus::Optimal; }
  std::optional<std::size_t> value() const {
    if (!exact()) return std::nullopt;
    return upper_bound;
  }
};

namespace detail {

/// Hit-sets with duplicates and supersets removed, sorted by (size, members).
inline std::vector<VertexSet> reduced_hit_sets(const WitnessFamily& fam) {
  std::vector<VertexSet> all;
  all.reserve(fam.size());
  for (const auto& h : fam.sets()) all.push_back(h.members);
  std::vector<std::size_t> sizes(all.size());
  std::vector<std::size_t> idx(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    sizes[i] = all[i].count();
    idx[i] = i;
  }
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (sizes[a] != sizes[b]) return sizes[a] < sizes[b];
    return lex_less(all[a], all[b]);
  });
  std::vector<VertexSet> kept;
  for (auto i : idx) {
    bool dominated = false;
    for (const auto& k : kept)
      if (k.is_subset_of(all[i])) {
        dominated = true;
        break;
      }
    if (!dominated) kept.push_back(all[i]);
  }
  return kept;
}

/// Greedy max-coverage cover followed by removal of redundant members (highest id first).
inline VertexSet greedy_hitting_set(const std::vector<VertexSet>& sets, std::size_t n) {
  VertexSet chosen(n);
  std::vector<char> covered(sets.size(), 0);
  std::size_t remaining = sets.size();
  std::vector<std::size_t> score(n);
  while (remaining > 0) {
    std::fill(score.begin(), score.end(), 0);
    for (std::size_t i = 0; i < sets.size(); ++i)
      if (!covered[i]) sets[i].for_each([&](VertexId v) { ++score[v]; });
    VertexId pick = 0;
    for (VertexId v = 1; v < n; ++v)
      if (score[v] > score[pick]) pick = v;
    chosen.set(pick);
    for (std::size_t i = 0; i < sets.size(); ++i)
      if (!covered[i] && sets[i].test(pick)) {
        covered[i] = 1;
        --remaining;
      }
  }
  auto members = chosen.members();
  for (auto it = members.rbegin(); it != members.rend(); ++it) {
    chosen.reset(*it);
    bool ok = std::all_of(sets.begin(), sets.end(), [&](const VertexSet& s) { return s.intersects(chosen); });
    if (!ok) chosen.set(*it);
  }
  return chosen;
}

struct SharedState {
  std::atomic<std::size_t> best_size;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> budget_hit{false};
  std::size_t global_lb = 0;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  std::optional<std::uint64_t> node_limit;
};

/**
 * Depth-first branch and bound for minimum hitting set. Each node propagates
 * unit sets, bounds with max(forced-pair matching, greedy disjoint packing), and
 * branches on the smallest open set: child j takes its j-th element and excludes
 * the earlier ones.
 */
class HittingSetSearch {
 public:
  HittingSetSearch(const std::vector<VertexSet>& sets, std::size_t n, SharedState& shared)
      : sets_(sets), n_(n), shared_(shared) {}

  std::optional<VertexSet> best;  // improvements found by this search only

  struct Node {
    VertexSet chosen;
    VertexSet excluded;
    std::vector<std::size_t> open;
  };

  enum class Propagation { Infeasible, Solved, Open };

  /// Unit propagation; on Open fills `residual` (parallel to node.open).
  Propagation propagate(Node& node, std::vector<VertexSet>& residual) const {
    while (true) {
      bool changed = false;
      std::vector<std::size_t> still;
      still.reserve(node.open.size());
      residual.clear();
      for (auto i : node.open) {
        if (sets_[i].intersects(node.chosen)) continue;
        VertexSet r = sets_[i] - node.excluded;
        auto c = r.count();
        if (c == 0) return Propagation::Infeasible;
        if (c == 1) {
          node.chosen.set(static_cast<VertexId>(r.first()));
          changed = true;
          continue;
        }
        still.push_back(i);
        residual.push_back(std::move(r));
      }
      node.open = std::move(still);
      if (!changed) break;
    }
    return node.open.empty() ? Propagation::Solved : Propagation::Open;
  }

  std::size_t lower_bound(const std::vector<VertexSet>& residual) const {
    std::vector<Edge> pairs;
    for (const auto& r : residual)
      if (r.count() == 2) {
        auto a = static_cast<VertexId>(r.first());
        auto b = static_cast<VertexId>(r.next(a + 1));
        pairs.emplace_back(a, b);
      }
    std::size_t matching = forced_pair_lower_bound(n_, pairs);

    std::vector<std::size_t> order(residual.size());
    std::vector<std::size_t> sizes(residual.size());
    for (std::size_t i = 0; i < residual.size(); ++i) {
      order[i] = i;
      sizes[i] = residual[i].count();
    }
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return sizes[a] < sizes[b]; });
    VertexSet used(n_);
    std::size_t packing = 0;
    for (auto i : order)
      if (!residual[i].intersects(used)) {
        used |= residual[i];
        ++packing;
      }
    return std::max(matching, packing);
  }

  bool out_of_budget() {
    auto nodes = ++shared_.nodes;
    if (shared_.node_limit && nodes > *shared_.node_limit) {
      shared_.budget_hit = true;
      shared_.stop = true;
    }
    if (shared_.deadline && (nodes & 0xff) == 0 && std::chrono::steady_clock::now() > *shared_.deadline) {
      shared_.budget_hit = true;
      shared_.stop = true;
    }
    return shared_.stop.load(std::memory_order_relaxed);
  }

  void offer(const VertexSet& s) {
    auto size = s.count();
    auto cur = shared_.best_size.load();
    while (size < cur && !shared_.best_size.compare_exchange_weak(cur, size)) {
    }
    if (!best || size < best->count()) best = s;
    if (size <= shared_.global_lb) shared_.stop = true;
  }

  /// Branch children of an open node, in exploration order.
  std::vector<Node> children(const Node& node, const std::vector<VertexSet>& residual) const {
    std::size_t pick = 0;
    for (std::size_t k = 1; k < residual.size(); ++k)
      if (residual[k].count() < residual[pick].count()) pick = k;
    std::vector<Node> out;
    VertexSet excluded = node.excluded;
    residual[pick].for_each([&](VertexId e) {
      Node child{node.chosen, excluded, node.open};
      child.chosen.set(e);
      out.push_back(std::move(child));
      excluded.set(e);
    });
    return out;
  }

  void search(Node node) {
    if (out_of_budget()) return;
    std::vector<VertexSet> residual;
    auto state = propagate(node, residual);
    if (state == Propagation::Infeasible) return;
    if (state == Propagation::Solved) {
      if (node.chosen.count() < shared_.best_size.load()) offer(node.chosen);
      return;
    }
    if (node.chosen.count() + lower_bound(residual) >= shared_.best_size.load()) return;
    for (auto& child : children(node, residual)) {
      if (shared_.stop.load(std::memory_order_relaxed)) return;
      if (child.chosen.count() >= shared_.best_size.load()) continue;
      search(std::move(child));
    }
  }

 private:
  const std::vector<VertexSet>& sets_;
  std::size_t n_;
  SharedState& shared_;
};

}  // namespace detail

/**
 * Exact equidistant dimension: minimum hitting set of the witness family.
 * Sequential runs are deterministic; the returned set is the first optimum met
 * in ascending-id branching order. On budget exhaustion the result carries the
 * incumbent and the interval [lower_bound, upper_bound].
 */
inline SolveResult eqdim_exact(const DistanceMatrix& d, const SolverOptions& opt = {}) {
  const auto n = d.size();
  SolveResult res;
  res.parallel = opt.parallel;
  if (n <= 1) {
    res.set = VertexSet(n);
    res.certificate = std::get<EqualizerCertificate>(is_distance_equalizer(d, res.set));
    return res;
  }

  auto fam = witness_family(d);
  auto sets = detail::reduced_hit_sets(fam);

  VertexSet incumbent = detail::greedy_hitting_set(sets, n);
  if (opt.hint && opt.hint->universe() == n && fam.is_hit_by(*opt.hint) && opt.hint->count() < incumbent.count())
    incumbent = *opt.hint;

  detail::SharedState shared;
  shared.best_size = incumbent.count();
  shared.node_limit = opt.node_limit;
  if (opt.time_limit_seconds)
    shared.deadline = std::chrono::steady_clock::now() +
                      std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                          std::chrono::duration<double>(*opt.time_limit_seconds));

  detail::HittingSetSearch root_search(sets, n, shared);
  detail::HittingSetSearch::Node root{VertexSet(n), VertexSet(n), {}};
  root.open.resize(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) root.open[i] = i;

  std::vector<VertexSet> residual;
  auto state = root_search.propagate(root, residual);
  std::size_t root_lb = root.chosen.count();
  if (state == detail::HittingSetSearch::Propagation::Open) root_lb += root_search.lower_bound(residual);
  shared.global_lb = root_lb;
  ++shared.nodes;

  VertexSet best = incumbent;
  if (state == detail::HittingSetSearch::Propagation::Solved && root.chosen.count() < best.count()) best = root.chosen;

  if (best.count() <= root_lb) {
    res.closed_at_root = true;
  } else if (state == detail::HittingSetSearch::Propagation::Open) {
    auto kids = root_search.children(root, residual);
    if (!opt.parallel || kids.size() < 2) {
      for (auto& child : kids) {
        if (shared.stop) break;
        if (child.chosen.count() >= shared.best_size.load()) continue;
        root_search.search(std::move(child));
      }
      if (root_search.best) best = *root_search.best;
    } else {
      // One task per root child, handed out in order; shared incumbent size.
      std::vector<std::optional<VertexSet>> found(kids.size());
      std::atomic<std::size_t> next{0};
      auto workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), static_cast<unsigned>(kids.size())));
      {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < workers; ++t)
          pool.emplace_back([&] {
            for (std::size_t k = next++; k < kids.size(); k = next++) {
              if (shared.stop) return;
              if (kids[k].chosen.count() >= shared.best_size.load()) continue;
              detail::HittingSetSearch s(sets, n, shared);
              s.search(kids[k]);
              found[k] = s.best;
            }
          });
      }
      for (const auto& f : found)
        if (f && f->count() < best.count()) best = *f;
    }
  }

  res.nodes = shared.nodes.load();
  res.set = best;
  res.certificate = std::get<EqualizerCertificate>(is_distance_equalizer(d, best));
  res.upper_bound = best.count();
  if (shared.budget_hit && best.count() > root_lb) {
    res.status = SolveStatus::BudgetExceeded;
    res.lower_bound = root_lb;
  } else {
    res.status = SolveStatus::Optimal;
    res.lower_bound = best.count();
  }
  return res;
}

inline SolveResult eqdim_exact(const Graph& g, const SolverOptions& opt = {}) {
  return eqdim_exact(all_pairs_distances(g), opt);
}

}  // namespace eqdim
