#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "kpe/graph.hpp"

namespace kpe {

std::size_t RankGraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& e : out_) n += e.size();
  return n;
}

void RankGraph::add_edge(std::size_t from, std::size_t to, double weight) {
  if (from >= out_.size() || to >= out_.size()) throw std::invalid_argument("edge node out of range");
  if (from == to) throw std::invalid_argument("self-loops are not allowed");
  if (!(weight >= 0.0) || !std::isfinite(weight)) {
    throw std::invalid_argument("edge weights must be finite and non-negative");
  }
  if (weight == 0.0) return;
  auto& out = out_[from];
  auto it = std::find_if(out.begin(), out.end(), [&](const Edge& e) { return e.to == to; });
  if (it != out.end()) {
    it->weight += weight;
    auto& in = in_[to];
    std::find_if(in.begin(), in.end(), [&](const Edge& e) { return e.to == from; })->weight += weight;
    return;
  }
  out.push_back({to, weight});
  in_[to].push_back({from, weight});
}

void RankGraph::add_undirected(std::size_t a, std::size_t b, double weight) {
  add_edge(a, b, weight);
  add_edge(b, a, weight);
}

double RankGraph::weight(std::size_t from, std::size_t to) const {
  for (const auto& e : out_.at(from)) {
    if (e.to == to) return e.weight;
  }
  return 0.0;
}

void RankGraph::scale_incoming(std::size_t node, double factor) {
  if (!(factor >= 0.0)) throw std::invalid_argument("scale factor must be non-negative");
  for (auto& in : in_.at(node)) {
    in.weight *= factor;
    for (auto& out : out_[in.to]) {
      if (out.to == node) out.weight *= factor;
    }
  }
}

double RankGraph::out_weight(std::size_t node) const {
  double total = 0.0;
  for (const auto& e : out_[node]) total += e.weight;
  return total;
}

TextRankResult textrank_scores(const RankGraph& graph, double lambda, double tol,
                               std::size_t max_iter) {
  const std::size_t n = graph.node_count();
  TextRankResult result;
  result.scores.assign(n, 1.0);
  std::vector<double> out_weight(n);
  for (std::size_t i = 0; i < n; ++i) out_weight[i] = graph.out_weight(i);

  std::vector<double> next(n);
  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    double max_change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double sum = 0.0;
      for (const auto& e : graph.predecessors(i)) {
        if (out_weight[e.to] > 0.0) sum += e.weight * result.scores[e.to] / out_weight[e.to];
      }
      next[i] = (1.0 - lambda) + lambda * sum;
      max_change = std::max(max_change, std::abs(next[i] - result.scores[i]));
    }
    result.scores.swap(next);
    result.iterations = iter + 1;
    result.max_changes.push_back(max_change);
    if (max_change < tol) {
      result.converged = true;
      break;
    }
  }
  if (n == 0) result.converged = true;
  return result;
}

void write_graph_dump(std::ostream& out, const RankGraph& graph,
                      const std::vector<std::string>& labels) {
  out << "# nodes " << graph.node_count() << '\n';
  for (std::size_t i = 0; i < graph.node_count(); ++i) {
    out << "node\t" << i << '\t' << (i < labels.size() ? labels[i] : "") << '\n';
  }
  out << "# edges " << graph.edge_count() << '\n';
  for (std::size_t i = 0; i < graph.node_count(); ++i) {
    for (const auto& e : graph.successors(i)) out << "edge\t" << i << '\t' << e.to << '\t' << e.weight << '\n';
  }
}

}  // namespace kpe
