#include "table_search.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace mgraph::detail {

namespace {

using Mask = std::uint32_t;

class Engine {
 public:
  Engine(const TableProblem& p, SharedBudget& budget)
      : p_(p), n_(p.n), budget_(budget), dom_(n_ * n_), val_(n_ * n_, -1), by_value_(n_) {
    if (n_ > 32) throw std::logic_error("table search supports at most 32 elements");
    full_ = n_ == 32 ? ~Mask{0} : (Mask{1} << n_) - 1;
    std::fill(dom_.begin(), dom_.end(), full_);
    is_gen_.assign(n_, 0);
    for (Element c : p_.connection) is_gen_[c] = 1;
    build_masks();
  }

  EngineResult run() {
    EngineResult result;
    if (!setup() || !propagate()) return result;
    const bool found = search();
    if (found) {
      result.status = EngineStatus::found;
      result.products = val_;
    } else if (aborted_) {
      result.status = EngineStatus::aborted;
    }
    return result;
  }

 private:
  int cell(int a, int b) const { return a * n_ + b; }
  int T(int a, int b) const { return val_[a * n_ + b]; }

  void build_masks() {
    out_.assign(n_, 0);
    in_.assign(n_, 0);
    closed_.assign(n_, 0);
    if (p_.directed) {
      for (auto [u, v] : p_.directed->arcs()) {
        out_[u] |= Mask{1} << v;
        in_[v] |= Mask{1} << u;
      }
    } else {
      for (Vertex v = 0; v < n_; ++v) {
        closed_[v] = Mask{1} << v;
        for (Vertex w : p_.undirected->neighbors(v)) closed_[v] |= Mask{1} << w;
      }
    }
  }

  // ---- trail-based state changes -----------------------------------------

  struct TrailEntry {
    int cell;
    Mask dom;
    int val;
  };

  bool assign(int c, int v) {
    if (val_[c] >= 0) return val_[c] == v;
    if (!((dom_[c] >> v) & 1u)) return false;
    trail_.push_back({c, dom_[c], val_[c]});
    dom_[c] = Mask{1} << v;
    val_[c] = v;
    by_value_[v].push_back(c);
    queue_.push_back(c);
    return true;
  }

  bool restrict(int c, Mask allowed) {
    const Mask next = dom_[c] & allowed;
    if (next == dom_[c]) return true;
    if (next == 0) return false;
    if (val_[c] >= 0) return false;
    if (std::has_single_bit(next)) return assign(c, std::countr_zero(next));
    trail_.push_back({c, dom_[c], val_[c]});
    dom_[c] = next;
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      const auto& t = trail_.back();
      if (t.val < 0 && val_[t.cell] >= 0) by_value_[val_[t.cell]].pop_back();
      dom_[t.cell] = t.dom;
      val_[t.cell] = t.val;
      trail_.pop_back();
    }
    queue_.clear();
  }

  // ---- root domains ---------------------------------------------------------

  bool setup() {
    if (p_.identity) {
      const Element e = *p_.identity;
      for (Element x = 0; x < n_; ++x) {
        if (!assign(cell(e, x), x) || !assign(cell(x, e), x)) return false;
      }
    }
    for (Element x = 0; x < n_; ++x) {
      for (Element c : p_.connection) {
        const Mask allowed = p_.directed ? out_[x] : closed_[x];
        if (!restrict(cell(x, c), allowed)) return false;
      }
    }
    if (p_.walk_domains && p_.directed) {
      if (!walk_setup()) return false;
    }
    return true;
  }

  // If y = c1...ck with every ci in C, then x*y is the end of a walk of
  // length k from x. Walks from c in the graph spell such products, so the
  // shortest k is read off a BFS seeded with C (and the identity at 0).
  bool walk_setup() {
    std::vector<int> length(n_, -1);
    std::vector<Element> frontier;
    if (p_.identity) {
      length[*p_.identity] = 0;
      frontier.push_back(*p_.identity);
    }
    for (Element c : p_.connection) {
      if (length[c] < 0) {
        length[c] = 1;
        frontier.push_back(c);
      }
    }
    std::sort(frontier.begin(), frontier.end(),
              [&](Element a, Element b) { return length[a] < length[b]; });
    for (std::size_t head = 0; head < frontier.size(); ++head) {
      const Element y = frontier[head];
      for (Mask rest = out_[y]; rest; rest &= rest - 1) {
        const int z = std::countr_zero(rest);
        if (length[z] < 0) {
          length[z] = length[y] + 1;
          frontier.push_back(z);
        }
      }
    }
    // walks[k][x]: ends of walks of length exactly k from x.
    int max_len = 0;
    for (int l : length) max_len = std::max(max_len, l);
    std::vector<std::vector<Mask>> walks(max_len + 1, std::vector<Mask>(n_));
    for (Element x = 0; x < n_; ++x) walks[0][x] = Mask{1} << x;
    for (int k = 1; k <= max_len; ++k) {
      for (Element x = 0; x < n_; ++x) {
        Mask m = 0;
        for (Mask rest = walks[k - 1][x]; rest; rest &= rest - 1) m |= out_[std::countr_zero(rest)];
        walks[k][x] = m;
      }
    }
    for (Element y = 0; y < n_; ++y) {
      if (length[y] < 0) continue;
      for (Element x = 0; x < n_; ++x) {
        if (!restrict(cell(x, y), walks[length[y]][x])) return false;
      }
    }
    return true;
  }

  // ---- propagation ----------------------------------------------------------

  // (x*y) must equal r.
  bool force(int x, int y, int r) { return assign(cell(x, y), r); }

  // Left side l = (..)*.. and right side r; either may be unknown (-1), in
  // which case the known one is written into the unknown cell.
  bool settle(int lx, int ly, int rx, int ry) {
    const int l = T(lx, ly);
    const int r = T(rx, ry);
    if (l >= 0 && r >= 0) return l == r;
    if (l >= 0) return force(rx, ry, l);
    if (r >= 0) return force(lx, ly, r);
    return true;
  }

  bool propagate_cell(int c) {
    const int a = c / n_;
    const int b = c % n_;
    const int v = val_[c];
    // (a b) c' = a (b c')
    for (int z = 0; z < n_; ++z) {
      const int w = T(b, z);
      if (w >= 0 && !settle(v, z, a, w)) return false;
    }
    // (x a) b = x (a b)
    for (int x = 0; x < n_; ++x) {
      const int u = T(x, a);
      if (u >= 0 && !settle(u, b, x, v)) return false;
    }
    // a = x y: (x y) b = x (y b)
    for (std::size_t i = 0; i < by_value_[a].size(); ++i) {
      const int other = by_value_[a][i];
      const int x = other / n_;
      const int y = other % n_;
      const int w = T(y, b);
      if (w >= 0 && !force(x, w, v)) return false;
    }
    // b = y z: (a y) z = a (y z)
    for (std::size_t i = 0; i < by_value_[b].size(); ++i) {
      const int other = by_value_[b][i];
      const int y = other / n_;
      const int z = other % n_;
      const int u = T(a, y);
      if (u >= 0 && !force(u, z, v)) return false;
    }
    if (p_.endomorphism_rows) {
      if (p_.directed) {
        for (Mask rest = out_[b]; rest; rest &= rest - 1) {
          if (!restrict(cell(a, std::countr_zero(rest)), out_[v])) return false;
        }
        for (Mask rest = in_[b]; rest; rest &= rest - 1) {
          if (!restrict(cell(a, std::countr_zero(rest)), in_[v])) return false;
        }
      } else {
        for (Mask rest = closed_[b] & ~(Mask{1} << b); rest; rest &= rest - 1) {
          if (!restrict(cell(a, std::countr_zero(rest)), closed_[v])) return false;
        }
      }
    }
    if (p_.left_cancellative) {
      for (int z = 0; z < n_; ++z) {
        if (z != b && !restrict(cell(a, z), ~(Mask{1} << v))) return false;
      }
    }
    return true;
  }

  // Every arc (edge) of the graph must be produced by some generator cell.
  bool coverage(bool& changed) {
    if (p_.directed) {
      for (Element x = 0; x < n_; ++x) {
        for (Mask rest = out_[x]; rest; rest &= rest - 1) {
          const int w = std::countr_zero(rest);
          int hits = 0;
          int last = -1;
          for (Element c : p_.connection) {
            if ((dom_[cell(x, c)] >> w) & 1u) {
              ++hits;
              last = cell(x, c);
            }
          }
          if (hits == 0) return false;
          if (hits == 1 && val_[last] < 0) {
            if (!assign(last, w)) return false;
            changed = true;
          }
        }
      }
    } else {
      for (auto [x, y] : p_.undirected->edges()) {
        int hits = 0;
        int last = -1;
        int target = -1;
        for (Element c : p_.connection) {
          if ((dom_[cell(x, c)] >> y) & 1u) {
            ++hits;
            last = cell(x, c);
            target = y;
          }
          if ((dom_[cell(y, c)] >> x) & 1u) {
            ++hits;
            last = cell(y, c);
            target = x;
          }
        }
        if (hits == 0) return false;
        if (hits == 1 && val_[last] < 0) {
          if (!assign(last, target)) return false;
          changed = true;
        }
      }
    }
    return true;
  }

  bool propagate() {
    while (true) {
      while (!queue_.empty()) {
        const int c = queue_.back();
        queue_.pop_back();
        if (!propagate_cell(c)) return false;
      }
      bool changed = false;
      if (!coverage(changed)) return false;
      if (!changed && queue_.empty()) return true;
    }
  }

  // ---- branching ------------------------------------------------------------

  int choose_cell() const {
    int best = -1;
    int best_size = 1 << 30;
    bool best_gen = false;
    for (int c = 0; c < n_ * n_; ++c) {
      if (val_[c] >= 0) continue;
      const bool gen = is_gen_[c % n_];
      const int size = std::popcount(dom_[c]);
      if (best < 0 || (gen && !best_gen) || (gen == best_gen && size < best_size)) {
        best = c;
        best_size = size;
        best_gen = gen;
      }
    }
    return best;
  }

  bool leaf_ok() const {
    if (!p_.require_generated) return true;
    std::vector<char> in(n_, 0);
    std::vector<Element> queue;
    auto push = [&](Element x) {
      if (!in[x]) {
        in[x] = 1;
        queue.push_back(x);
      }
    };
    if (p_.identity) push(*p_.identity);
    for (Element c : p_.connection) push(c);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Element c : p_.connection) push(T(queue[head], c));
    }
    return static_cast<int>(queue.size()) == n_;
  }

  bool search() {
    const int c = choose_cell();
    if (c < 0) return leaf_ok();
    for (Mask rest = dom_[c]; rest; rest &= rest - 1) {
      if (!budget_.tick()) {
        aborted_ = true;
        return false;
      }
      const std::size_t mark = trail_.size();
      if (assign(c, std::countr_zero(rest)) && propagate() && search()) return true;
      undo_to(mark);
      if (aborted_) return false;
    }
    return false;
  }

  const TableProblem& p_;
  int n_;
  SharedBudget& budget_;
  Mask full_ = 0;
  std::vector<Mask> dom_;
  std::vector<int> val_;
  std::vector<std::vector<int>> by_value_;
  std::vector<char> is_gen_;
  std::vector<Mask> out_;
  std::vector<Mask> in_;
  std::vector<Mask> closed_;
  std::vector<TrailEntry> trail_;
  std::vector<int> queue_;
  bool aborted_ = false;
};

}  // namespace

EngineResult solve_table(const TableProblem& problem, SharedBudget& budget) {
  Engine engine(problem, budget);
  return engine.run();
}

}  // namespace mgraph::detail
