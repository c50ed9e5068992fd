#include "matchbound/exact_oracle.hpp"

#include <string>
#include <vector>

#include "matchbound/error.hpp"

namespace matchbound {
namespace {

class BranchAndBound {
 public:
  explicit BranchAndBound(const Graph& g)
      : g_(g), alive_(g.vertex_count(), true), residual_(g.vertex_count(), 0) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      residual_[v] = g.degree(v);
      if (residual_[v] > 0) ++active_;
    }
  }

  std::vector<Edge> solve() {
    search();
    return best_;
  }

 private:
  void search() {
    if (current_.size() + active_ / 2 <= best_.size()) {
      // Nothing better below; also covers the leaf case (active_ == 0).
      return;
    }
    Vertex pivot = 0;
    while (!(alive_[pivot] && residual_[pivot] > 0)) ++pivot;

    kill(pivot);
    if (current_.size() > best_.size()) best_ = current_;
    search();
    revive(pivot);

    for (Vertex w : g_.neighbors(pivot)) {
      if (!alive_[w]) continue;
      kill(pivot);
      kill(w);
      current_.push_back(normalized({pivot, w}));
      if (current_.size() > best_.size()) best_ = current_;
      search();
      current_.pop_back();
      revive(w);
      revive(pivot);
    }
  }

  void kill(Vertex v) {
    alive_[v] = false;
    if (residual_[v] > 0) --active_;
    for (Vertex w : g_.neighbors(v)) {
      if (alive_[w] && --residual_[w] == 0) --active_;
    }
  }

  // Exact inverse of kill(); calls must nest.
  void revive(Vertex v) {
    for (Vertex w : g_.neighbors(v)) {
      if (alive_[w] && residual_[w]++ == 0) ++active_;
    }
    alive_[v] = true;
    if (residual_[v] > 0) ++active_;
  }

  const Graph& g_;
  std::vector<bool> alive_;
  // Number of alive neighbors; maintained for alive vertices only.
  std::vector<std::size_t> residual_;
  std::size_t active_ = 0;
  std::vector<Edge> current_;
  std::vector<Edge> best_;
};

}  // namespace

Matching exact_max_matching(const Graph& g, OracleLimits limits) {
  if (limits.max_edges == 0 || limits.max_vertices == 0) {
    throw MatchboundError(ErrorKind::InvalidParameter, "(oracle limits must be positive)");
  }
  if (g.edge_count() > limits.max_edges || g.vertex_count() > limits.max_vertices) {
    throw MatchboundError(
        ErrorKind::InstanceTooLarge,
        "(n=" + std::to_string(g.vertex_count()) + ", m=" + std::to_string(g.edge_count()) +
            " exceeds limits E=" + std::to_string(limits.max_edges) +
            ", V=" + std::to_string(limits.max_vertices) + ")");
  }
  BranchAndBound solver(g);
  return validate_matching(g, solver.solve());
}

}  // namespace matchbound
