#include "tww/balance.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "tww/errors.hpp"

namespace tww {

BalanceParams BalanceParams::make(int d_hat, std::optional<long double> c_d_override) {
  BalanceParams p;
  p.d_hat = d_hat;
  p.d = 2 * d_hat + 2;
  const long double t = p.d;
  p.c_d = c_d_override ? *c_d_override : 8.0L / 3.0L * (t + 1) * (t + 1) * std::pow(2.0L, 4 * t);
  p.log2_s = 4 * p.c_d + 4;
  p.log2_d_prime = std::log2(p.c_d) + p.log2_s;
  return p;
}

static int clamp_cap(long double x) { return x >= static_cast<long double>(INT_MAX) ? INT_MAX : std::max(1, static_cast<int>(x)); }

void BalanceParams::apply_caps(const std::string& spec) {
  if (spec == "practical") {
    mixed_value_cap = 8;
    part_size_cap = 4;
    theoretical = false;
    return;
  }
  if (spec == "theoretical") {
    mixed_value_cap = clamp_cap(4 * c_d);
    part_size_cap = clamp_cap(std::pow(2.0L, 4 * c_d + 2));
    theoretical = true;
    return;
  }
  int mv = -1, ps = -1;
  std::istringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("bad caps item '" + item + "'");
    const std::string key = item.substr(0, eq);
    int value = 0;
    try {
      value = std::stoi(item.substr(eq + 1));
    } catch (const std::logic_error&) {
      throw InputError("bad caps value in '" + item + "'");
    }
    if (value < 1) throw InputError("caps must be at least 1");
    if (key == "mv") mv = value;
    else if (key == "ps") ps = value;
    else if (key == "rd") red_degree_cap = value;
    else throw InputError("unknown caps key '" + key + "'");
  }
  if (mv < 0 && ps < 0) throw InputError("caps spec '" + spec + "' sets nothing");
  if (mv > 0) mixed_value_cap = mv;
  if (ps > 0) part_size_cap = ps;
  theoretical = false;
}

namespace {

bool window_corner(const NeatlyDividedMatrix& m, int i, int j) {
  if (i < 0 || j < 0 || i + 1 >= m.n || j + 1 >= m.n) return false;
  return has_corner(m, i, i + 2, j, j + 2);
}

// Mixed zones and raw cuts of a symmetric neat division. Column statistics equal row
// statistics by symmetry, so only rows are stored.
struct ZoneTable {
  const NeatlyDividedMatrix* m = nullptr;
  int k = 0;
  std::vector<std::vector<char>> mixed;  // k x k
  std::vector<std::vector<char>> cut;    // k x (k-1): corner across boundary b inside row part P
  std::vector<int> value;

  void build(const NeatlyDividedMatrix& mat) {
    m = &mat;
    k = mat.parts();
    mixed.assign(k, std::vector<char>(k, 0));
    cut.assign(k, std::vector<char>(std::max(0, k - 1), 0));
    value.assign(k, 0);
    for (int p = 0; p < k; ++p)
      for (int q = 0; q < k; ++q) mixed[p][q] = mat.at(mat.part_begin(p), mat.part_begin(q)) == kRed;
    for (int p = 0; p < k; ++p) {
      for (int b = 0; b + 1 < k; ++b) {
        const int c = mat.part_end(b) - 1;
        cut[p][b] = has_corner(mat, mat.part_begin(p), mat.part_end(p), c, c + 2);
      }
      int v = 0;
      for (int q = 0; q < k; ++q) v += mixed[p][q];
      for (int b = 0; b + 1 < k; ++b) v += cut[p][b];
      value[p] = v;
    }
  }

  int max_value() const { return value.empty() ? 0 : *std::max_element(value.begin(), value.end()); }
  char cut_at(int p, int b) const { return b >= 0 && b + 1 < k ? cut[p][b] : 0; }

  struct Fusion {
    std::vector<char> mixed_with;  // old part index -> fused zone mixed (index a+1 unused)
    int max_value = 0;
  };

  // Statistics after fusing parts a and a+1 and closing the division.
  Fusion try_fuse(int a) const {
    const NeatlyDividedMatrix& mat = *m;
    Fusion f;
    f.mixed_with.assign(k, 0);
    for (int j = 0; j < k; ++j) {
      if (j == a || j == a + 1) continue;
      f.mixed_with[j] = mixed[a][j] || mixed[a + 1][j] || cut[j][a];
    }
    const int mid = mat.part_end(a);
    f.mixed_with[a] = mixed[a][a] || mixed[a][a + 1] || mixed[a + 1][a + 1] || cut[a][a] || cut[a + 1][a] ||
                      window_corner(mat, mid - 1, mid - 1);
    auto fused_mixed = [&](int old) { return old == a + 1 ? f.mixed_with[a] : f.mixed_with[old]; };

    int best = 0;
    for (int j = 0; j < k; ++j) {
      if (j == a || j == a + 1) continue;
      const bool mn = f.mixed_with[j];
      int v = value[j] - mixed[j][a] - mixed[j][a + 1] - cut_at(j, a - 1) - cut_at(j, a) - cut_at(j, a + 1);
      v += mn;
      if (!mn) v += cut_at(j, a - 1) + cut_at(j, a + 1);
      best = std::max(best, v);
    }
    int fv = f.mixed_with[a];
    for (int j = 0; j < k; ++j)
      if (j != a && j != a + 1) fv += f.mixed_with[j];
    for (int b = 0; b + 1 < k; ++b) {
      if (b == a) continue;
      if (fused_mixed(b) || fused_mixed(b + 1)) continue;
      const int c = mat.part_end(b) - 1;
      if (cut[a][b] || cut[a + 1][b] || window_corner(mat, mid - 1, c)) ++fv;
    }
    f.max_value = std::max(best, fv);
    return f;
  }
};

NeatlyDividedMatrix apply_fusion(const NeatlyDividedMatrix& m, int a, const std::vector<char>& mixed_with,
                                 const ZoneTable& table) {
  NeatlyDividedMatrix out = m;
  const int begin = m.part_begin(a), end = m.part_end(a + 1);
  for (int j = 0; j < table.k; ++j) {
    if (j == a + 1 || !mixed_with[j]) continue;
    const bool already = j == a ? false : (table.mixed[a][j] && table.mixed[a + 1][j]);
    if (already) continue;
    const int jb = j == a ? begin : m.part_begin(j);
    const int je = j == a ? end : m.part_end(j);
    for (int i = begin; i < end; ++i)
      for (int x = jb; x < je; ++x) out.put(i, x, kRed);
  }
  out.starts.erase(out.starts.begin() + a + 1);
  return out;
}

std::vector<std::pair<int, int>> identical_pairs(const NeatlyDividedMatrix& m) {
  // Twin columns: equal on every row other than the pair itself.
  std::vector<std::pair<int, int>> pairs;
  for (int p = 0; p < m.parts(); ++p) {
    const int b = m.part_begin(p), e = m.part_end(p);
    std::vector<bool> used(m.n, false);
    std::vector<std::size_t> hash(e - b);
    for (int x = b; x < e; ++x) {
      std::size_t h = 1469598103934665603ULL;
      for (int i = 0; i < m.n; ++i) {
        if (i >= b && i < e) continue;  // rows of the own part are compared exactly below
        h = (h ^ m.at(i, x)) * 1099511628211ULL;
      }
      hash[x - b] = h;
    }
    for (int x = b; x < e; ++x) {
      if (used[x]) continue;
      for (int y = x + 1; y < e; ++y) {
        if (used[y] || hash[x - b] != hash[y - b]) continue;
        bool same = true;
        for (int i = 0; i < m.n && same; ++i) {
          if (i == x || i == y) continue;
          same = m.at(i, x) == m.at(i, y);
        }
        if (same) {
          used[x] = used[y] = true;
          pairs.emplace_back(x, y);
          break;
        }
      }
    }
  }
  return pairs;
}

}  // namespace

CoarsenResult coarsen_step(const NeatlyDividedMatrix& m, const BalanceParams& params) {
  CoarsenResult res;
  res.matrix = m;
  ZoneTable table;
  table.build(res.matrix);
  int a = 0;
  while (a + 1 < table.k) {
    const int size = res.matrix.part_len(a) + res.matrix.part_len(a + 1);
    if (size <= params.part_size_cap) {
      const auto f = table.try_fuse(a);
      if (f.max_value <= params.mixed_value_cap) {
        NeatlyDividedMatrix next = apply_fusion(res.matrix, a, f.mixed_with, table);
        if (params.red_degree_cap > 0 && red_number(next) > params.red_degree_cap) {
          ++a;
          continue;
        }
        res.matrix = std::move(next);
        table.build(res.matrix);
        ++res.fusions;
        continue;  // try to grow the fused part further
      }
    }
    ++a;
  }
  res.pairs = identical_pairs(res.matrix);
  if (res.fusions == 0 && res.pairs.empty()) {
    throw CoarseningStalled("coarsening stalled: no fusion within caps and no identical columns", m.n, m.parts(),
                            table.max_value());
  }
  res.s_eff = static_cast<double>(m.n) / std::max<std::size_t>(1, res.pairs.size());
  return res;
}

NeatlyDividedMatrix ConformProvider::matrix_for_induced(const std::vector<int>& vertices) const {
  std::unordered_map<int, int> position;
  for (std::size_t i = 0; i < vertices.size(); ++i) position[vertices[i]] = static_cast<int>(i);
  std::vector<int> drop;
  for (int row = 0; row < initial_.n; ++row)
    if (!position.count(initial_.vmap[row])) drop.push_back(row);
  NeatlyDividedMatrix out = delete_rowcols(initial_, drop);
  if (out.n != static_cast<int>(vertices.size())) throw InputError("matrix_for_induced: unknown vertex");
  for (int& v : out.vmap) v = position.at(v);
  return out;
}

NeatlyDividedMatrix ConformProvider::matrix_for_quotient(const std::vector<int>& parts) const {
  std::unordered_map<int, int> position;
  for (std::size_t i = 0; i < parts.size(); ++i) position[parts[i]] = static_cast<int>(i);
  std::vector<int> drop;
  for (int row = 0; row < final_.n; ++row)
    if (!position.count(final_.vmap[row])) drop.push_back(row);
  NeatlyDividedMatrix out = delete_rowcols(final_, drop);
  if (out.n != static_cast<int>(parts.size())) throw InputError("matrix_for_quotient: unknown part");
  for (int& v : out.vmap) v = position.at(v);
  return out;
}

namespace {

int isqrt(int n) {
  int k = static_cast<int>(std::sqrt(static_cast<double>(n)));
  while (k > 0 && k * k > n) --k;
  while ((k + 1) * (k + 1) <= n) ++k;
  return k;
}

// Identifies adjacent rows/columns x and x+1; disagreeing entries become r, the division is re-closed.
NeatlyDividedMatrix forced_merge(const NeatlyDividedMatrix& m, int x) {
  const int y = x + 1;
  NeatlyDividedMatrix out;
  out.n = m.n - 1;
  out.entries.assign(static_cast<std::size_t>(out.n) * out.n, kZero);
  auto old_index = [&](int i) { return i < y ? i : i + 1; };
  for (int i = 0; i < out.n; ++i) {
    for (int j = i; j < out.n; ++j) {
      const int oi = old_index(i), oj = old_index(j);
      std::uint8_t e;
      if (i == x && j == x) {
        e = (m.at(x, x) == kRed || m.at(y, y) == kRed) ? kRed : kZero;
      } else if (i == x || j == x) {
        const int other = i == x ? oj : oi;
        e = m.at(x, other) == m.at(y, other) ? m.at(x, other) : static_cast<std::uint8_t>(kRed);
      } else {
        e = m.at(oi, oj);
      }
      out.put(i, j, e);
    }
  }
  for (int s : m.starts) {
    if (s == y) continue;
    out.starts.push_back(s > y ? s - 1 : s);
  }
  for (int i = 0; i < out.n; ++i) out.vmap.push_back(m.vmap.empty() ? i : m.vmap[old_index(i)]);
  return coarsen_to(out, out.starts);
}

void trace_round(const BalanceParams& params, int round, const NeatlyDividedMatrix& m, int mv, std::size_t pairs,
                 int pick_x, int pick_y, int size) {
  if (!params.trace) return;
  std::ostream& os = *params.trace;
  os << "round=" << round << " cols=" << m.n << " parts=" << m.parts() << " mv=" << mv << " rn=" << red_number(m)
     << " pairs=" << pairs << " pick=" << pick_x << "," << pick_y << " size=" << size << "\n";
  os << "div";
  for (int s : m.starts) os << " " << s;
  os << "\n";
}

struct RunState {
  NeatlyDividedMatrix cur;
  std::vector<std::vector<int>> groups;  // column -> original vertices
};

BalancedPartitionResult finish(const Trigraph& g, const NeatlyDividedMatrix& initial, RunState state,
                               BalancedPartitionResult res) {
  for (auto& grp : state.groups) std::sort(grp.begin(), grp.end());
  res.partition = VertexPartition::from_parts(g.n(), state.groups);
  NeatlyDividedMatrix fin = state.cur;
  for (int i = 0; i < fin.n; ++i) fin.vmap[i] = i;  // row i <-> part i
  res.provider = ConformProvider(initial, fin);
  res.achieved_part_size = res.partition.max_part_size();
  res.achieved_red_degree = quotient(g, res.partition).max_red_degree();
  return res;
}

BalancedPartitionResult run(const Trigraph& g, const NeatlyDividedMatrix& initial, const ContractionSequence* seq,
                            BalanceParams params) {
  const int n = g.n();
  if (initial.n != n || static_cast<int>(initial.vmap.size()) != n) {
    throw InputError("conform matrix does not match the trigraph size");
  }
  BalancedPartitionResult res;
  if (n == 0) {
    res.provider = ConformProvider(initial, initial);
    return res;
  }
  const int k = isqrt(n);
  const long double limit_ld = static_cast<long double>(params.part_size_cap) * std::sqrt(static_cast<long double>(n));
  const int limit = limit_ld >= INT_MAX ? INT_MAX : static_cast<int>(std::floor(limit_ld));

  for (int attempt = 0;; ++attempt) {
    RunState state{initial, {}};
    for (int i = 0; i < n; ++i) state.groups.push_back({initial.vmap[i]});
    res.rounds = res.fusions = 0;
    res.s_eff = 0;
    res.max_mixed_value = 0;
    bool stalled = false, invalid = false;
    while (state.cur.n > k) {
      CoarsenResult step;
      try {
        step = coarsen_step(state.cur, params);
      } catch (const CoarseningStalled&) {
        stalled = true;
        break;
      }
      ++res.rounds;
      res.fusions += step.fusions;
      res.s_eff = std::max(res.s_eff, step.s_eff);
      res.max_mixed_value = std::max(res.max_mixed_value, mixed_value(step.matrix));
      if (params.validity_scan && !is_neat(step.matrix)) {
        invalid = true;
        break;
      }
      int best = -1, best_size = INT_MAX;
      for (std::size_t i = 0; i < step.pairs.size(); ++i) {
        const auto [x, y] = step.pairs[i];
        const int size = static_cast<int>(state.groups[x].size() + state.groups[y].size());
        if (size <= limit && size < best_size) {
          best = static_cast<int>(i);
          best_size = size;
        }
      }
      if (best < 0) {
        state.cur = std::move(step.matrix);
        if (step.fusions == 0) {
          stalled = true;
          break;
        }
        continue;
      }
      const auto [x, y] = step.pairs[best];
      trace_round(params, res.rounds, step.matrix, res.max_mixed_value, step.pairs.size(), x, y, best_size);
      auto& gx = state.groups[x];
      gx.insert(gx.end(), state.groups[y].begin(), state.groups[y].end());
      state.groups.erase(state.groups.begin() + y);
      state.cur = delete_rowcols(step.matrix, {y});
      if (params.validity_scan && !is_neat(state.cur)) {
        invalid = true;
        break;
      }
    }
    if (invalid && (params.mixed_value_cap > 1 || params.part_size_cap > 1) && attempt < 16) {
      params.mixed_value_cap = std::max(1, params.mixed_value_cap - 1);
      params.part_size_cap = std::max(1, params.part_size_cap - 1);
      continue;
    }
    if (!stalled && !invalid) return finish(g, initial, std::move(state), res);

    res.balance_certified = false;
    if (seq && static_cast<int>(seq->steps.size()) >= n - k) {
      VertexPartition prefix = partition_at(g, *seq, k);
      if (prefix.max_part_size() <= limit) {
        res.fallback = "prefix";
        RunState ps;
        ps.groups = prefix.parts;
        ps.cur = adjacency_matrix(quotient(g, prefix), [&] {
          std::vector<int> order(k);
          for (int i = 0; i < k; ++i) order[i] = i;
          return order;
        }());
        return finish(g, initial, std::move(ps), res);
      }
    }
    res.fallback = "forced-merge";
    while (state.cur.n > k) {
      int best = 0;
      std::size_t best_size = SIZE_MAX;
      for (int i = 0; i + 1 < state.cur.n; ++i) {
        const std::size_t size = state.groups[i].size() + state.groups[i + 1].size();
        if (size < best_size) {
          best = i;
          best_size = size;
        }
      }
      state.cur = forced_merge(state.cur, best);
      auto& gx = state.groups[best];
      gx.insert(gx.end(), state.groups[best + 1].begin(), state.groups[best + 1].end());
      state.groups.erase(state.groups.begin() + best + 1);
      trace_round(params, ++res.rounds, state.cur, -1, 0, best, best + 1, static_cast<int>(best_size));
    }
    return finish(g, initial, std::move(state), res);
  }
}

}  // namespace

BalancedPartitionResult balanced_partition(const Trigraph& g, const ContractionSequence& seq,
                                           const BalanceParams& params) {
  return run(g, finest_conform_matrix(g, seq), &seq, params);
}

BalancedPartitionResult balanced_partition(const Trigraph& g, const NeatlyDividedMatrix& m,
                                           const BalanceParams& params) {
  return run(g, m, nullptr, params);
}

}  // namespace tww
