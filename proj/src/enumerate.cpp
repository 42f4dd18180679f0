#include <stdexcept>

#include "pgg/solve.hpp"

namespace pgg {

namespace {

// Depth-first walk over partial profiles, assigning nodes in id order.
// Tracks, per node, the number of assigned productive neighbors and the
// number of still-unassigned neighbors, so the achievable final neighbor
// count of any node always lies in [productive, productive + open].
class ConsistentWalk {
 public:
  ConsistentWalk(const Graph& g, const Pattern& t, const std::vector<NodeRole>& roles,
                 const std::vector<std::int8_t>& pins,
                 const std::function<bool(const Profile&)>& visit, SearchStats* stats)
      : g_(g), t_(t), roles_(roles), pins_(pins), visit_(visit), stats_(stats) {
    const auto n = static_cast<size_t>(g.node_count());
    if (roles.size() != n || pins.size() != n)
      throw std::invalid_argument("roles/pins length does not match node count");
    values_.assign(n, 0);
    productive_.assign(n, 0);
    open_.resize(n);
    for (size_t i = 0; i < n; ++i) open_[i] = g.degree(static_cast<int>(i));
    max_one_ = t.max_one_index();
  }

  void run() { descend(0); }

 private:
  // Could node `j`, already holding its value, still end up consistent given
  // that its final productive count lies in [productive_[j], productive_[j]
  // + open_[j]]? Exact once open_[j] reaches zero.
  bool still_feasible(int j) const {
    const auto ji = static_cast<size_t>(j);
    const NodeRole role = roles_[ji];
    if (role == NodeRole::kFreeInput) return true;
    const int lo = productive_[ji];
    const int hi = lo + open_[ji];
    const bool plays = values_[ji] != 0;
    if (role == NodeRole::kPortFreeOutside) {
      // Value 0 is always explainable by enough productive outsiders; value 1
      // needs some reachable total count the pattern maps to 1, and outside
      // help only raises the count.
      return !plays || lo <= max_one_;
    }
    if (plays) {
      if (lo > max_one_) return false;
      for (int c = lo; c <= hi && c <= max_one_; ++c)
        if (t_.query(c)) return true;
      return false;
    }
    if (hi > max_one_) return true;  // any count past the last 1 maps to 0
    for (int c = lo; c <= hi; ++c)
      if (!t_.query(c)) return true;
    return false;
  }

  bool descend(int i) {
    const int n = g_.node_count();
    if (i == n) {
      if (stats_) ++stats_->visited;
      return visit_(values_);
    }
    const auto ii = static_cast<size_t>(i);
    for (std::uint8_t v = 0; v <= 1; ++v) {
      if (pins_[ii] != -1 && pins_[ii] != v) continue;
      values_[ii] = v;
      for (int nb : g_.neighbors(i)) {
        --open_[static_cast<size_t>(nb)];
        if (v) ++productive_[static_cast<size_t>(nb)];
      }
      bool ok = still_feasible(i);
      if (ok) {
        for (int nb : g_.neighbors(i)) {
          if (nb < i && !still_feasible(nb)) {
            ok = false;
            break;
          }
        }
      }
      bool keep_going = true;
      if (ok) {
        keep_going = descend(i + 1);
      } else if (stats_) {
        ++stats_->pruned;
      }
      for (int nb : g_.neighbors(i)) {
        ++open_[static_cast<size_t>(nb)];
        if (v) --productive_[static_cast<size_t>(nb)];
      }
      if (!keep_going) return false;
    }
    return true;
  }

  const Graph& g_;
  const Pattern& t_;
  const std::vector<NodeRole>& roles_;
  const std::vector<std::int8_t>& pins_;
  const std::function<bool(const Profile&)>& visit_;
  SearchStats* stats_;
  Profile values_;
  std::vector<int> productive_;
  std::vector<int> open_;
  int max_one_ = -1;
};

}  // namespace

void for_each_consistent(const Graph& g, const Pattern& t,
                         const std::vector<NodeRole>& roles,
                         const std::vector<std::int8_t>& pins,
                         const std::function<bool(const Profile&)>& visit,
                         SearchStats* stats) {
  ConsistentWalk walk(g, t, roles, pins, visit, stats);
  walk.run();
}

std::vector<Profile> enumerate_ntpne(const PggInstance& inst, int limit, int cap,
                                     SearchStats* stats) {
  const int n = inst.graph.node_count();
  if (n > cap)
    throw std::invalid_argument("graph has " + std::to_string(n) +
                                " nodes, above the exhaustive cap of " + std::to_string(cap));
  std::vector<NodeRole> roles(static_cast<size_t>(n), NodeRole::kConstrained);
  std::vector<std::int8_t> pins(static_cast<size_t>(n), -1);
  std::vector<Profile> found;
  for_each_consistent(
      inst.graph, inst.pattern, roles, pins,
      [&](const Profile& s) {
        bool any = false;
        for (std::uint8_t b : s) any = any || b != 0;
        if (!any) return true;  // skip the trivial all-zero equilibrium
        found.push_back(s);
        return limit == 0 || static_cast<int>(found.size()) < limit;
      },
      stats);
  return found;
}

}  // namespace pgg
