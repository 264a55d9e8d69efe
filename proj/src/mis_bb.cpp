#include "tww/mis_bb.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>

#include "tww/errors.hpp"

namespace tww {

OracleBudget OracleBudget::from_env() {
  OracleBudget b;
  if (const char* env = std::getenv("TWW_BUDGET_MS")) {
    const long long ms = std::atoll(env);
    if (ms > 0) b.time_limit_ms = ms;
  }
  return b;
}

namespace {

template <class W>
class Search {
 public:
  Search(const std::vector<Bits>& adj, std::vector<W> w, const OracleBudget& budget)
      : adj_(adj), w_(std::move(w)), budget_(budget), n_(static_cast<int>(adj.size())),
        start_(std::chrono::steady_clock::now()) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return w_[a] > w_[b]; });
    cur_ = Bits(n_);
    best_set_ = Bits(n_);
  }

  void run() {
    Bits all(n_);
    for (int v = 0; v < n_; ++v)
      if (w_[v] > 0) all.set(v);
    best_ = 0;
    recurse(all, 0);
  }

  Bits best_set() const { return best_set_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void tick() {
    ++nodes_;
    if (nodes_ > budget_.node_limit) throw BudgetExceeded("exact oracle exceeded its node budget");
    if ((nodes_ & 4095) == 0) {
      const auto ms =
          std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
      if (ms > budget_.time_limit_ms) throw BudgetExceeded("exact oracle exceeded its time budget");
    }
  }

  W cover_bound(const Bits& cand) {
    W bound = 0;
    common_.clear();
    for (int v : order_) {
      if (!cand[v]) continue;
      bool placed = false;
      for (auto& c : common_) {
        if (c[v]) {
          c &= adj_[v];
          placed = true;
          break;
        }
      }
      if (!placed) {
        common_.push_back(adj_[v] & cand);
        bound += w_[v];
      }
    }
    return bound;
  }

  void recurse(Bits cand, W value) {
    tick();
    Bits taken(n_);
    for (auto v = cand.find_first(); v != Bits::npos; v = cand.find_next(v)) {
      if ((adj_[v] & cand).none()) {
        taken.set(v);
        value += w_[v];
      }
    }
    cand -= taken;
    cur_ |= taken;
    if (cand.none()) {
      if (value > best_) {
        best_ = value;
        best_set_ = cur_;
      }
    } else if (value + cover_bound(cand) > best_) {
      int pick = -1;
      std::size_t pick_deg = 0;
      for (auto v = cand.find_first(); v != Bits::npos; v = cand.find_next(v)) {
        const std::size_t deg = (adj_[v] & cand).count();
        if (pick < 0 || deg > pick_deg) {
          pick = static_cast<int>(v);
          pick_deg = deg;
        }
      }
      Bits with = cand - adj_[pick];
      with.reset(pick);
      cur_.set(pick);
      recurse(with, value + w_[pick]);
      cur_.reset(pick);
      Bits without = cand;
      without.reset(pick);
      recurse(without, value);
    }
    cur_ -= taken;
  }

  const std::vector<Bits>& adj_;
  std::vector<W> w_;
  OracleBudget budget_;
  int n_;
  std::chrono::steady_clock::time_point start_;
  std::vector<int> order_;
  std::vector<Bits> common_;
  Bits cur_, best_set_;
  W best_ = 0;
  std::uint64_t nodes_ = 0;
};

template <class W>
WeightedSetResult solve(const std::vector<Bits>& adj, std::vector<W> w, const OracleBudget& budget) {
  Search<W> s(adj, std::move(w), budget);
  s.run();
  WeightedSetResult res;
  const Bits best = s.best_set();
  for (auto v = best.find_first(); v != Bits::npos; v = best.find_next(v)) res.set.push_back(static_cast<int>(v));
  res.nodes = s.nodes();
  return res;
}

}  // namespace

WeightedSetResult max_weight_independent_set(const std::vector<Bits>& adj, const std::vector<Rational>& weight,
                                             const OracleBudget& budget) {
  const std::size_t n = adj.size();
  if (weight.size() != n) throw InputError("weight vector size differs from vertex count");
  BigInt scale = 1;
  for (const auto& q : weight) {
    if (q < 0) throw InputError("negative weight");
    const BigInt den = boost::multiprecision::denominator(q);
    scale = scale / boost::multiprecision::gcd(scale, den) * den;
  }
  std::vector<BigInt> scaled(n);
  BigInt total = 0;
  for (std::size_t v = 0; v < n; ++v) {
    scaled[v] = boost::multiprecision::numerator(weight[v]) * (scale / boost::multiprecision::denominator(weight[v]));
    total += scaled[v];
  }
  WeightedSetResult res;
  if (total < BigInt(std::numeric_limits<std::int64_t>::max() / 4)) {
    std::vector<std::int64_t> w(n);
    for (std::size_t v = 0; v < n; ++v) w[v] = static_cast<std::int64_t>(scaled[v]);
    res = solve(adj, std::move(w), budget);
  } else {
    res = solve(adj, std::move(scaled), budget);
  }
  res.value = 0;
  for (int v : res.set) res.value += weight[v];
  return res;
}

}  // namespace tww
