#include "wnc/network.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "wnc/rng.hpp"

namespace wnc {

namespace {

struct Builder {
  std::vector<std::string> names;
  std::unordered_map<std::string, int> index;
  std::vector<Edge> edges;
  std::string source;
  std::vector<std::string> receivers;

  int node(const std::string& name) {
    auto it = index.find(name);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(names.size());
    names.push_back(name);
    index.emplace(name, id);
    return id;
  }
};

}  // namespace

int Network::node_index(const std::string& name) const {
  for (size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  throw std::invalid_argument("unknown node: " + name);
}

void Network::finalize() {
  const size_t n = names_.size();
  in_.assign(n, {});
  out_.assign(n, {});
  for (size_t e = 0; e < edges_.size(); ++e) {
    out_[edges_[e].tail].push_back(static_cast<int>(e));
    in_[edges_[e].head].push_back(static_cast<int>(e));
  }
  if (source_ < 0) throw std::invalid_argument("missing source");
  if (receivers_.empty()) throw std::invalid_argument("no receivers");
  std::vector<int> seen;
  for (int r : receivers_) {
    if (r == source_)
      throw std::invalid_argument("receiver equals source");
    if (std::find(seen.begin(), seen.end(), r) != seen.end())
      throw std::invalid_argument("duplicate receiver");
    seen.push_back(r);
  }

  // Kahn topological sort, smallest node index first.
  std::vector<int> indeg(n, 0);
  for (const Edge& e : edges_) ++indeg[e.head];
  std::vector<int> ready;
  for (size_t v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push_back(static_cast<int>(v));
  topo_.clear();
  while (!ready.empty()) {
    auto it = std::min_element(ready.begin(), ready.end());
    int v = *it;
    ready.erase(it);
    topo_.push_back(v);
    for (int e : out_[v]) {
      if (--indeg[edges_[e].head] == 0) ready.push_back(edges_[e].head);
    }
  }
  if (topo_.size() != n) throw std::invalid_argument("cycle detected");
  topo_rank_.assign(n, 0);
  for (size_t i = 0; i < n; ++i) topo_rank_[topo_[i]] = static_cast<int>(i);
}

Network Network::parse(const std::string& text) {
  Builder b;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word[0] == '#') continue;
    if (word == "node") {
      std::string id;
      if (!(ls >> id)) throw std::invalid_argument("node line needs an id");
      b.node(id);
    } else if (word == "edge") {
      std::string tail, head;
      if (!(ls >> tail >> head))
        throw std::invalid_argument("edge line needs tail and head");
      b.edges.push_back({b.node(tail), b.node(head)});
    } else if (word == "source") {
      if (!(ls >> b.source))
        throw std::invalid_argument("source line needs an id");
    } else if (word == "receiver") {
      std::string id;
      if (!(ls >> id)) throw std::invalid_argument("receiver line needs an id");
      b.receivers.push_back(id);
    } else {
      throw std::invalid_argument("unknown directive: " + word);
    }
  }
  Network net;
  net.names_ = b.names;
  net.edges_ = b.edges;
  if (b.source.empty()) throw std::invalid_argument("missing source");
  auto it = b.index.find(b.source);
  if (it == b.index.end())
    throw std::invalid_argument("unknown node in source line: " + b.source);
  net.source_ = it->second;
  for (const auto& r : b.receivers) {
    auto rit = b.index.find(r);
    if (rit == b.index.end())
      throw std::invalid_argument("unknown node in receiver line: " + r);
    net.receivers_.push_back(rit->second);
  }
  net.finalize();
  return net;
}

std::string Network::serialize() const {
  std::ostringstream os;
  for (const Edge& e : edges_)
    os << "edge " << names_[e.tail] << " " << names_[e.head] << "\n";
  os << "source " << names_[source_] << "\n";
  for (int r : receivers_) os << "receiver " << names_[r] << "\n";
  return os.str();
}

Network Network::butterfly() {
  return parse(
      "edge S A\n"
      "edge S C\n"
      "edge A B\n"
      "edge C B\n"
      "edge A D\n"
      "edge C F\n"
      "edge B E\n"
      "edge E D\n"
      "edge E F\n"
      "source S\n"
      "receiver D\n"
      "receiver F\n");
}

Network Network::combination(int n, int mid, long max_receivers) {
  if (n < 1 || mid < n)
    throw std::invalid_argument("combination network needs 1 <= n <= M");
  // C(mid, n) receivers, one per n-subset of the middle layer.
  long receivers = 1;
  for (int i = 0; i < n; ++i) {
    receivers = receivers * (mid - i) / (i + 1);
    if (receivers > max_receivers)
      throw std::invalid_argument("combination network receiver ceiling hit");
  }
  std::ostringstream os;
  for (int j = 0; j < mid; ++j) os << "edge S M" << j << "\n";
  std::vector<int> subset(n);
  for (int i = 0; i < n; ++i) subset[i] = i;
  int rcount = 0;
  while (true) {
    for (int i = 0; i < n; ++i)
      os << "edge M" << subset[i] << " R" << rcount << "\n";
    ++rcount;
    int i = n - 1;
    while (i >= 0 && subset[i] == mid - n + i) --i;
    if (i < 0) break;
    ++subset[i];
    for (int j = i + 1; j < n; ++j) subset[j] = subset[j - 1] + 1;
  }
  os << "source S\n";
  for (int r = 0; r < rcount; ++r) os << "receiver R" << r << "\n";
  return parse(os.str());
}

Network Network::random_dag(const RandomDagSpec& spec) {
  if (spec.nodes < 2 || spec.edges < 1 || spec.receivers < 1 ||
      spec.receivers >= spec.nodes)
    throw std::invalid_argument("bad random dag parameters");
  Rng rng(spec.seed);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::ostringstream os;
    // Forward edges only, under the fixed node order v0 < v1 < ..., so the
    // result is acyclic by construction. Parallel edges are allowed.
    for (int e = 0; e < spec.edges; ++e) {
      int tail = static_cast<int>(rng.below(static_cast<uint32_t>(spec.nodes - 1)));
      int head =
          tail + 1 +
          static_cast<int>(rng.below(static_cast<uint32_t>(spec.nodes - 1 - tail)));
      os << "edge v" << tail << " v" << head << "\n";
    }
    std::vector<int> pool;
    for (int v = 1; v < spec.nodes; ++v) pool.push_back(v);
    for (int i = 0; i < spec.receivers; ++i) {
      size_t j = i + rng.below(static_cast<uint32_t>(pool.size() - i));
      std::swap(pool[i], pool[j]);
    }
    std::vector<int> chosen(pool.begin(), pool.begin() + spec.receivers);
    std::sort(chosen.begin(), chosen.end());
    os << "source v0\n";
    for (int r : chosen) os << "receiver v" << r << "\n";
    Network net;
    try {
      net = parse(os.str());
    } catch (const std::invalid_argument&) {
      continue;  // e.g. a receiver node never appeared in any edge
    }
    bool ok = true;
    for (int r : net.receivers_) {
      if (net.min_cut(r) < 1) {
        ok = false;
        break;
      }
    }
    if (ok) return net;
  }
  throw std::invalid_argument("random dag generation failed to converge");
}

std::vector<int> Network::edges_in_topo_order() const {
  std::vector<int> order(edges_.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [this](int a, int b) {
    int ra = topo_rank_[edges_[a].tail];
    int rb = topo_rank_[edges_[b].tail];
    if (ra != rb) return ra < rb;
    return a < b;
  });
  return order;
}

namespace {

// Unit-capacity max flow by BFS augmentation, value capped at `limit`.
// flow[e] = 1 marks a used forward edge. Deterministic: BFS scans edges in
// id order.
int augment_flows(const Network& net, int target, int limit,
                  std::vector<char>& flow) {
  int value = 0;
  const auto& edges = net.edges();
  while (value < limit) {
    std::vector<int> pred_edge(net.node_count(), -1);
    std::vector<char> pred_dir(net.node_count(), 0);  // 1 fwd, 2 back
    std::vector<char> visited(net.node_count(), 0);
    std::deque<int> queue;
    queue.push_back(net.source());
    visited[net.source()] = 1;
    while (!queue.empty() && !visited[target]) {
      int v = queue.front();
      queue.pop_front();
      for (int e : net.out_edges(v)) {
        int h = edges[e].head;
        if (!flow[e] && !visited[h]) {
          visited[h] = 1;
          pred_edge[h] = e;
          pred_dir[h] = 1;
          queue.push_back(h);
        }
      }
      for (int e : net.in_edges(v)) {
        int t = edges[e].tail;
        if (flow[e] && !visited[t]) {
          visited[t] = 1;
          pred_edge[t] = e;
          pred_dir[t] = 2;
          queue.push_back(t);
        }
      }
    }
    if (!visited[target]) break;
    int v = target;
    while (v != net.source()) {
      int e = pred_edge[v];
      if (pred_dir[v] == 1) {
        flow[e] = 1;
        v = edges[e].tail;
      } else {
        flow[e] = 0;
        v = edges[e].head;
      }
    }
    ++value;
  }
  return value;
}

}  // namespace

int Network::min_cut(int receiver) const {
  if (std::find(receivers_.begin(), receivers_.end(), receiver) ==
      receivers_.end())
    throw std::invalid_argument("unknown receiver");
  std::vector<char> flow(edges_.size(), 0);
  return augment_flows(*this, receiver, static_cast<int>(edges_.size()), flow);
}

int Network::min_cut(const std::string& receiver) const {
  return min_cut(node_index(receiver));
}

std::vector<Flow> Network::extract_flows(int n) const {
  if (n < 0) throw std::invalid_argument("flow value must be >= 0");
  std::vector<Flow> flows;
  for (int r : receivers_) {
    std::vector<char> flow(edges_.size(), 0);
    int got = augment_flows(*this, r, n, flow);
    if (got < n)
      throw std::invalid_argument("min-cut below requested rate at receiver " +
                                  names_[r]);
    // Decompose into edge-disjoint paths: walk from the source along the
    // smallest-id unused flow edge; conservation guarantees arrival.
    Flow f;
    f.receiver = r;
    for (int i = 0; i < n; ++i) {
      std::vector<int> path;
      int v = source_;
      while (v != r) {
        int chosen = -1;
        for (int e : out_[v]) {
          if (flow[e]) {
            chosen = e;
            break;
          }
        }
        if (chosen < 0) throw std::logic_error("flow decomposition stuck");
        flow[chosen] = 0;
        path.push_back(chosen);
        v = edges_[chosen].head;
      }
      f.paths.push_back(std::move(path));
    }
    std::sort(f.paths.begin(), f.paths.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                return a.front() < b.front();
              });
    flows.push_back(std::move(f));
  }
  return flows;
}

SubsetEnumerator::SubsetEnumerator(std::vector<int> ids, size_t k)
    : ids_(std::move(ids)), k_(k), done_(k > ids_.size()) {
  std::sort(ids_.begin(), ids_.end());
  state_.resize(k_);
  for (size_t i = 0; i < k_; ++i) state_[i] = i;
}

std::optional<std::vector<int>> SubsetEnumerator::next() {
  if (done_) return std::nullopt;
  std::vector<int> out(k_);
  for (size_t i = 0; i < k_; ++i) out[i] = ids_[state_[i]];
  // Advance to the lexicographic successor.
  size_t i = k_;
  while (i-- > 0) {
    if (state_[i] != ids_.size() - k_ + i) {
      ++state_[i];
      for (size_t j = i + 1; j < k_; ++j) state_[j] = state_[j - 1] + 1;
      return out;
    }
  }
  done_ = true;
  return out;
}

std::vector<std::vector<int>> SubsetEnumerator::collect() {
  std::vector<std::vector<int>> out;
  while (auto s = next()) out.push_back(std::move(*s));
  return out;
}

SubsetEnumerator wiretap_sets(const Network& net, size_t mu,
                              const std::optional<std::vector<int>>& restrict_to) {
  std::vector<int> ids;
  if (restrict_to) {
    for (int e : *restrict_to) {
      if (e < 0 || e >= static_cast<int>(net.edge_count()))
        throw std::invalid_argument("wiretap set restriction names unknown edge");
      ids.push_back(e);
    }
  } else {
    for (size_t e = 0; e < net.edge_count(); ++e)
      ids.push_back(static_cast<int>(e));
  }
  if (mu > ids.size())
    throw std::invalid_argument("wiretap set size exceeds edge count");
  return SubsetEnumerator(std::move(ids), mu);
}

}  // namespace wnc
