#include <algorithm>
#include <queue>

#include "queueposet/errors.hpp"
#include "queueposet/strategies.hpp"

namespace queueposet {

namespace {

// Lazy extension of the subposet on `group` (sorted element indices) with
// respect to the chains in `chains`, which cover `group`. Returns elements of
// the original poset.
std::vector<Element> lazy_order_of_group(const Poset& p, const std::vector<Element>& group,
                                         const std::vector<std::vector<Element>>& chains) {
  Poset sub = p.induced(group);
  std::vector<std::size_t> local(p.size(), p.size());
  for (std::size_t i = 0; i < group.size(); ++i) local[group[i]] = i;
  ChainPartition partition;
  for (const auto& chain : chains) {
    std::vector<Element> mapped;
    for (Element e : chain) mapped.push_back(local[e]);
    partition.chains.push_back(std::move(mapped));
  }
  const bool needs_zero = !sub.zero();
  if (needs_zero) {
    sub = with_bounds(sub, true, false);
    partition.chains.front().insert(partition.chains.front().begin(), group.size());
  }
  LinearExtension ext = lazy_extension(sub, partition);
  std::vector<Element> order;
  for (Element e : ext.order()) {
    if (e < group.size()) order.push_back(group[e]);
  }
  return order;
}

std::vector<std::vector<std::vector<Element>>> pair_up(const ChainPartition& partition) {
  std::vector<std::vector<std::vector<Element>>> groups;
  const auto& chains = partition.chains;
  for (std::size_t i = 0; i < chains.size(); i += 2) {
    std::vector<std::vector<Element>> group{chains[i]};
    if (i + 1 < chains.size()) group.push_back(chains[i + 1]);
    groups.push_back(std::move(group));
  }
  return groups;
}

std::vector<Element> flatten_sorted(const std::vector<std::vector<Element>>& chains) {
  std::vector<Element> out;
  for (const auto& c : chains) out.insert(out.end(), c.begin(), c.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

LinearExtension min_index_extension(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::size_t> indeg(n);
  for (const auto& c : p.covers()) ++indeg[c.upper];
  std::priority_queue<Element, std::vector<Element>, std::greater<>> ready;
  for (Element e = 0; e < n; ++e) {
    if (indeg[e] == 0) ready.push(e);
  }
  std::vector<Element> order;
  order.reserve(n);
  while (!ready.empty()) {
    Element v = ready.top();
    ready.pop();
    order.push_back(v);
    for (Element w : p.upper_covers(v)) {
      if (--indeg[w] == 0) ready.push(w);
    }
  }
  return LinearExtension::unchecked(std::move(order));
}

QueueLayout any_extension_layout(const Poset& p) { return assign_queues(p, min_index_extension(p)); }

LinearExtension lazy_extension(const Poset& p, const ChainPartition& partition) {
  const std::size_t n = p.size();
  const auto chain_of = partition.chain_of(n);
  for (Element e = 0; e < n; ++e) {
    if (chain_of[e] == partition.chains.size()) throw Error("chain partition misses " + p.name(e));
  }
  std::vector<std::size_t> head(partition.chains.size(), 0);
  std::vector<std::size_t> missing(n);
  for (const auto& c : p.covers()) ++missing[c.upper];

  auto available = [&](std::size_t chain) {
    const auto& elems = partition.chains[chain];
    return head[chain] < elems.size() && missing[elems[head[chain]]] == 0;
  };

  std::vector<Element> order;
  order.reserve(n);
  std::size_t previous = partition.chains.size();
  while (order.size() < n) {
    std::size_t chain = partition.chains.size();
    if (previous < partition.chains.size() && available(previous)) {
      chain = previous;
    } else {
      for (std::size_t c = 0; c < partition.chains.size(); ++c) {
        if (available(c)) {
          chain = c;
          break;
        }
      }
    }
    if (chain == partition.chains.size()) {
      throw Error("chain partition is not ordered consistently with the poset");
    }
    Element v = partition.chains[chain][head[chain]++];
    order.push_back(v);
    for (Element w : p.upper_covers(v)) --missing[w];
    previous = chain;
  }
  return LinearExtension(p, std::move(order));
}

std::vector<std::vector<Element>> blocks(const LinearExtension& ext,
                                         const ChainPartition& partition, std::size_t n) {
  const auto chain_of = partition.chain_of(n);
  std::vector<std::vector<Element>> out;
  for (Element e : ext.order()) {
    if (out.empty() || chain_of[out.back().back()] != chain_of[e]) out.emplace_back();
    out.back().push_back(e);
  }
  return out;
}

QueueLayout lazy_width2_layout(const Poset& p) {
  if (p.empty()) return QueueLayout{};
  const auto w = width(p);
  if (w.width > 2) {
    throw WidthExceeded("lazy layout needs width at most 2, got " + std::to_string(w.width));
  }
  std::vector<Element> all(p.size());
  for (Element e = 0; e < p.size(); ++e) all[e] = e;
  auto order = lazy_order_of_group(p, all, w.partition.chains);
  return assign_queues(p, LinearExtension(p, std::move(order)));
}

std::vector<std::vector<Element>> chain_pairs(const Poset& p) {
  if (p.empty()) return {};
  std::vector<std::vector<Element>> out;
  for (const auto& group : pair_up(width(p).partition)) out.push_back(flatten_sorted(group));
  return out;
}

QueueLayout paired_chain_layout(const Poset& p) {
  const std::size_t n = p.size();
  if (n == 0) return QueueLayout{};
  const auto groups = pair_up(width(p).partition);

  std::vector<std::vector<Element>> sequences;
  for (const auto& group : groups) {
    sequences.push_back(lazy_order_of_group(p, flatten_sorted(group), group));
  }

  // Merge: repeatedly emit the next element of the lowest-index group whose
  // next element is minimal among the remaining elements.
  std::vector<std::size_t> missing(n);
  for (const auto& c : p.covers()) ++missing[c.upper];
  std::vector<char> placed(n, 0);
  std::vector<std::size_t> head(sequences.size(), 0);
  std::vector<Element> order;
  order.reserve(n);
  auto emit = [&](Element v) {
    placed[v] = 1;
    order.push_back(v);
    for (Element w : p.upper_covers(v)) --missing[w];
  };
  while (order.size() < n) {
    bool progressed = false;
    for (std::size_t g = 0; g < sequences.size() && !progressed; ++g) {
      auto& seq = sequences[g];
      while (head[g] < seq.size() && placed[seq[head[g]]]) ++head[g];
      if (head[g] < seq.size() && missing[seq[head[g]]] == 0) {
        emit(seq[head[g]++]);
        progressed = true;
      }
    }
    if (progressed) continue;
    // The group orders admit no common refinement here; release the
    // smallest-index minimal element out of its group's order.
    for (Element e = 0; e < n; ++e) {
      if (!placed[e] && missing[e] == 0) {
        emit(e);
        break;
      }
    }
  }
  return assign_queues(p, LinearExtension(p, std::move(order)));
}

}  // namespace queueposet
