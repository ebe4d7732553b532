#include "difacet/graphs.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace difacet {

Graph::Graph(int n) : n_(n) {
  if (n < 1 || n > 64) throw std::invalid_argument("Graph: n must be in [1, 64]");
  adj_.assign(static_cast<std::size_t>(n), 0);
}

void Graph::add_edge(int i, int j) {
  if (i < 1 || i > n_ || j < 1 || j > n_) throw std::invalid_argument("Graph: endpoint out of range");
  if (i == j) throw std::invalid_argument("Graph: loops not allowed");
  adj_[static_cast<std::size_t>(i) - 1] |= std::uint64_t{1} << (j - 1);
  adj_[static_cast<std::size_t>(j) - 1] |= std::uint64_t{1} << (i - 1);
}

bool Graph::has_edge(int i, int j) const {
  return (adj_[static_cast<std::size_t>(i) - 1] >> (j - 1)) & 1;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> es;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (has_edge(i, j)) es.push_back({i, j});
  return es;
}

std::size_t Graph::edge_count() const {
  std::size_t c = 0;
  for (std::uint64_t m : adj_) c += static_cast<std::size_t>(std::popcount(m));
  return c / 2;
}

int Graph::degree(int v) const {
  return std::popcount(adj_[static_cast<std::size_t>(v) - 1]);
}

bool Graph::connected_in_mask(std::uint64_t mask) const {
  if (mask == 0) return true;
  std::uint64_t start = mask & (~mask + 1);
  std::uint64_t seen = start;
  std::uint64_t frontier = start;
  while (frontier) {
    std::uint64_t next = 0;
    std::uint64_t f = frontier;
    while (f) {
      int v = std::countr_zero(f) + 1;
      f &= f - 1;
      next |= adj_[static_cast<std::size_t>(v) - 1] & mask;
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == mask;
}

std::vector<std::uint64_t> Graph::components_in_mask(std::uint64_t mask) const {
  std::vector<std::uint64_t> comps;
  std::uint64_t rest = mask;
  while (rest) {
    std::uint64_t start = rest & (~rest + 1);
    std::uint64_t seen = start;
    std::uint64_t frontier = start;
    while (frontier) {
      std::uint64_t next = 0;
      std::uint64_t f = frontier;
      while (f) {
        int v = std::countr_zero(f) + 1;
        f &= f - 1;
        next |= adj_[static_cast<std::size_t>(v) - 1] & mask;
      }
      frontier = next & ~seen;
      seen |= next;
    }
    comps.push_back(seen);
    rest &= ~seen;
  }
  return comps;
}

std::string Graph::to_string() const {
  std::ostringstream os;
  write_graph(os, *this);
  return os.str();
}

Graph relabel(const Graph& g, const Labelling& pi) {
  if (pi.size() != g.n()) throw std::invalid_argument("relabel: labelling size mismatch");
  Graph out(g.n());
  for (auto [i, j] : g.edges()) out.add_edge(pi.apply(i), pi.apply(j));
  return out;
}

bool is_connected_graph(const Graph& g) {
  std::uint64_t all = g.n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n()) - 1;
  return g.connected_in_mask(all);
}

bool OrientedGraph::has_arc(int i, int j) const {
  return std::find(arcs.begin(), arcs.end(), std::pair<int, int>{i, j}) != arcs.end();
}

OrientedGraph orient_by_labels(const Graph& g) {
  OrientedGraph og;
  og.n = g.n();
  og.arcs = g.edges();  // edges() already lists pairs as (smaller, larger)
  return og;
}

bool is_forest(const Graph& g) {
  std::uint64_t all = g.n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n()) - 1;
  std::size_t edges = 0, verts = 0, comps = 0;
  for (std::uint64_t c : g.components_in_mask(all)) {
    ++comps;
    verts += static_cast<std::size_t>(std::popcount(c));
    std::uint64_t m = c;
    while (m) {
      int v = std::countr_zero(m) + 1;
      m &= m - 1;
      edges += static_cast<std::size_t>(std::popcount(g.neighbors_mask(v) & c));
    }
  }
  edges /= 2;
  return edges + comps == verts;
}

namespace {

bool for_each_subset_masks(int n, int r, const std::function<bool(std::uint64_t, const std::vector<int>&)>& fn) {
  if (r > n) return true;
  std::vector<int> idx(static_cast<std::size_t>(r));
  std::iota(idx.begin(), idx.end(), 1);
  if (r == 0) return fn(0, {});
  while (true) {
    std::uint64_t mask = 0;
    for (int v : idx) mask |= std::uint64_t{1} << (v - 1);
    if (!fn(mask, idx)) return false;
    int t = r - 1;
    while (t >= 0 && idx[static_cast<std::size_t>(t)] == n - (r - 1 - t)) --t;
    if (t < 0) return true;
    ++idx[static_cast<std::size_t>(t)];
    for (std::size_t s = static_cast<std::size_t>(t) + 1; s < idx.size(); ++s)
      idx[s] = idx[s - 1] + 1;
  }
}

std::vector<int> mask_to_vertices(std::uint64_t mask) {
  std::vector<int> vs;
  while (mask) {
    vs.push_back(std::countr_zero(mask) + 1);
    mask &= mask - 1;
  }
  return vs;
}

}  // namespace

SimplicialComplex delta_d(const Graph& g, int d) {
  if (d < 1) throw std::invalid_argument("delta_d: d must be positive");
  std::vector<std::vector<int>> facets;
  for_each_subset_masks(g.n(), d + 1, [&](std::uint64_t mask, const std::vector<int>& vs) {
    if (g.connected_in_mask(mask)) facets.push_back(vs);
    return true;
  });
  return SimplicialComplex(g.n(), d, std::move(facets));
}

bool is_d_independent_mask(const Graph& g, std::uint64_t mask, int d) {
  for (std::uint64_t c : g.components_in_mask(mask))
    if (std::popcount(c) > d) return false;
  return true;
}

bool is_d_independent(const Graph& g, const std::vector<int>& u, int d) {
  std::uint64_t mask = 0;
  for (int v : u) {
    if (v < 1 || v > g.n()) throw std::invalid_argument("is_d_independent: vertex out of range");
    mask |= std::uint64_t{1} << (v - 1);
  }
  return is_d_independent_mask(g, mask, d);
}

bool IndFaces::has_face(std::uint64_t mask) const {
  std::size_t k = static_cast<std::size_t>(std::popcount(mask));
  if (k >= by_card.size()) return false;
  return std::binary_search(by_card[k].begin(), by_card[k].end(), mask);
}

std::size_t IndFaces::face_count() const {
  std::size_t c = 0;
  for (const auto& v : by_card) c += v.size();
  return c;
}

std::vector<std::vector<int>> IndFaces::all_faces() const {
  std::vector<std::vector<int>> fs;
  for (const auto& level : by_card)
    for (std::uint64_t m : level) fs.push_back(mask_to_vertices(m));
  return fs;
}

IndFaces ind_d(const Graph& g, int d) {
  if (d < 1) throw std::invalid_argument("ind_d: d must be positive");
  if (g.n() > 20) throw std::invalid_argument("ind_d: n too large for subset enumeration");
  IndFaces out;
  out.n = g.n();
  out.by_card.assign(static_cast<std::size_t>(g.n()) + 1, {});
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.n()); ++mask)
    if (is_d_independent_mask(g, mask, d))
      out.by_card[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
  for (auto& level : out.by_card) std::sort(level.begin(), level.end());
  return out;
}

Graph corona(const Graph& g, const std::vector<Graph>& h) {
  if (static_cast<int>(h.size()) != g.n())
    throw std::invalid_argument("corona: need one attached graph per vertex of G");
  int total = g.n();
  for (const Graph& hx : h) total += hx.n();
  Graph out(total);
  for (auto [i, j] : g.edges()) out.add_edge(i, j);
  int offset = g.n();
  for (int x = 1; x <= g.n(); ++x) {
    const Graph& hx = h[static_cast<std::size_t>(x) - 1];
    for (auto [i, j] : hx.edges()) out.add_edge(offset + i, offset + j);
    for (int v = 1; v <= hx.n(); ++v) out.add_edge(x, offset + v);
    offset += hx.n();
  }
  return out;
}

std::optional<ClawWitness> find_d_claw(const Graph& g, int d) {
  if (d < 1) throw std::invalid_argument("find_d_claw: d must be positive");
  const int n = g.n();
  for (int v = 1; v <= n; ++v) {
    std::uint64_t vbit = std::uint64_t{1} << (v - 1);
    // Candidate branch remainders: nonempty S of size <= d, v not in S,
    // G[S + v] connected.
    std::vector<std::uint64_t> branches;
    std::vector<int> rest;
    for (int u = 1; u <= n; ++u)
      if (u != v) rest.push_back(u);
    for (int size = 1; size <= d; ++size) {
      std::vector<int> idx(static_cast<std::size_t>(size));
      std::iota(idx.begin(), idx.end(), 0);
      if (size > static_cast<int>(rest.size())) break;
      while (true) {
        std::uint64_t mask = 0;
        for (int t = 0; t < size; ++t)
          mask |= std::uint64_t{1} << (rest[static_cast<std::size_t>(idx[static_cast<std::size_t>(t)])] - 1);
        if (g.connected_in_mask(mask | vbit)) branches.push_back(mask);
        int t = size - 1;
        while (t >= 0 &&
               idx[static_cast<std::size_t>(t)] == static_cast<int>(rest.size()) - (size - t))
          --t;
        if (t < 0) break;
        ++idx[static_cast<std::size_t>(t)];
        for (std::size_t s = static_cast<std::size_t>(t) + 1; s < idx.size(); ++s)
          idx[s] = idx[s - 1] + 1;
      }
    }
    for (std::size_t a = 0; a < branches.size(); ++a)
      for (std::size_t b = a + 1; b < branches.size(); ++b) {
        if (branches[a] & branches[b]) continue;
        if (std::popcount(branches[a]) + std::popcount(branches[b]) < d) continue;
        // No edges between the two branch remainders.
        bool cross_ab = false;
        std::uint64_t ma = branches[a];
        while (ma && !cross_ab) {
          int u = std::countr_zero(ma) + 1;
          ma &= ma - 1;
          if (g.neighbors_mask(u) & branches[b]) cross_ab = true;
        }
        if (cross_ab) continue;
        for (std::size_t c = b + 1; c < branches.size(); ++c) {
          if ((branches[c] & (branches[a] | branches[b])) != 0) continue;
          if (std::popcount(branches[a]) + std::popcount(branches[c]) < d) continue;
          if (std::popcount(branches[b]) + std::popcount(branches[c]) < d) continue;
          bool cross = false;
          std::uint64_t m = branches[a] | branches[b];
          while (m && !cross) {
            int u = std::countr_zero(m) + 1;
            m &= m - 1;
            if (g.neighbors_mask(u) & branches[c]) cross = true;
          }
          if (cross) continue;
          ClawWitness w;
          w.center = v;
          for (std::size_t t = 0; t < 3; ++t) {
            std::uint64_t bm = t == 0 ? branches[a] : t == 1 ? branches[b] : branches[c];
            w.branches[t] = mask_to_vertices(bm | vbit);
          }
          return w;
        }
      }
  }
  return std::nullopt;
}

std::optional<std::vector<int>> find_d_paw(const Graph& g, int d) {
  if (d < 1) throw std::invalid_argument("find_d_paw: d must be positive");
  std::optional<std::vector<int>> witness;
  for_each_subset_masks(g.n(), d + 2, [&](std::uint64_t mask, const std::vector<int>& vs) {
    if (!g.connected_in_mask(mask)) return true;
    int leaves = 0;
    for (int v : vs)
      if (std::popcount(g.neighbors_mask(v) & mask) == 1) ++leaves;
    if (leaves == 3) {
      witness = vs;
      return false;
    }
    return true;
  });
  return witness;
}

bool has_induced_cycle_of_length_at_least(const Graph& g, int len) {
  if (len < 3) throw std::invalid_argument("has_induced_cycle_of_length_at_least: len >= 3");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.n()); ++mask) {
    int size = std::popcount(mask);
    if (size < len) continue;
    if (!g.connected_in_mask(mask)) continue;
    // Induced cycle: every vertex has degree exactly 2 inside the subset.
    bool cycle = true;
    std::uint64_t m = mask;
    while (m) {
      int v = std::countr_zero(m) + 1;
      m &= m - 1;
      if (std::popcount(g.neighbors_mask(v) & mask) != 2) {
        cycle = false;
        break;
      }
    }
    if (cycle) return true;
  }
  return false;
}

bool is_chordal(const Graph& g) { return !has_induced_cycle_of_length_at_least(g, 4); }

namespace {

void bron_kerbosch(const Graph& g, std::uint64_t r, std::uint64_t p, std::uint64_t x,
                   std::vector<std::uint64_t>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  std::uint64_t pivot_candidates = p | x;
  int pivot = std::countr_zero(pivot_candidates) + 1;
  int best = -1;
  std::uint64_t pc = pivot_candidates;
  while (pc) {
    int u = std::countr_zero(pc) + 1;
    pc &= pc - 1;
    int cnt = std::popcount(g.neighbors_mask(u) & p);
    if (cnt > best) {
      best = cnt;
      pivot = u;
    }
  }
  std::uint64_t ext = p & ~g.neighbors_mask(pivot);
  while (ext) {
    int v = std::countr_zero(ext) + 1;
    ext &= ext - 1;
    std::uint64_t vbit = std::uint64_t{1} << (v - 1);
    bron_kerbosch(g, r | vbit, p & g.neighbors_mask(v), x & g.neighbors_mask(v), out);
    p &= ~vbit;
    x |= vbit;
  }
}

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const Graph& g) {
  std::uint64_t all = g.n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n()) - 1;
  std::vector<std::uint64_t> masks;
  bron_kerbosch(g, 0, all, 0, masks);
  std::sort(masks.begin(), masks.end());
  std::vector<std::vector<int>> out;
  out.reserve(masks.size());
  for (std::uint64_t m : masks) out.push_back(mask_to_vertices(m));
  return out;
}

bool exists_consecutive_arrangement(const std::vector<std::uint64_t>& sets, int n) {
  const std::size_t m = sets.size();
  if (m <= 1) return true;
  std::vector<bool> used(m, false);
  // Place sets left to right; an element whose run has ended may not
  // reappear in a later set.
  std::function<bool(std::size_t, std::uint64_t, std::uint64_t)> place =
      [&](std::size_t placed, std::uint64_t open, std::uint64_t closed) -> bool {
    if (placed == m) return true;
    for (std::size_t i = 0; i < m; ++i) {
      if (used[i]) continue;
      if (sets[i] & closed) continue;
      std::uint64_t new_closed = closed | (open & ~sets[i]);
      used[i] = true;
      if (place(placed + 1, sets[i], new_closed)) {
        used[i] = false;
        return true;
      }
      used[i] = false;
    }
    return false;
  };
  (void)n;
  return place(0, 0, 0);
}

namespace {

bool is_integer_interval(const std::vector<int>& vs) {
  for (std::size_t i = 1; i < vs.size(); ++i)
    if (vs[i] != vs[i - 1] + 1) return false;
  return true;
}

bool is_clique(const Graph& g, const std::vector<int>& vs) {
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (!g.has_edge(vs[a], vs[b])) return false;
  return true;
}

// All shortest paths between every pair run monotonically from the smaller
// label to the larger, i.e. every edge traversal on a shortest path is an
// arc of the orientation G*. Equivalently: no edge is ever traversed
// downward on any shortest path.
bool criterion_c14(const Graph& g) {
  const int n = g.n();
  const int INF = 1 << 20;
  std::vector<std::vector<int>> dist(static_cast<std::size_t>(n) + 1,
                                     std::vector<int>(static_cast<std::size_t>(n) + 1, INF));
  for (int s = 1; s <= n; ++s) {
    dist[static_cast<std::size_t>(s)][static_cast<std::size_t>(s)] = 0;
    std::vector<int> queue{s};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      std::uint64_t nb = g.neighbors_mask(u);
      while (nb) {
        int w = std::countr_zero(nb) + 1;
        nb &= nb - 1;
        if (dist[static_cast<std::size_t>(s)][static_cast<std::size_t>(w)] == INF) {
          dist[static_cast<std::size_t>(s)][static_cast<std::size_t>(w)] =
              dist[static_cast<std::size_t>(s)][static_cast<std::size_t>(u)] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  auto d = [&](int a, int b) { return dist[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (d(i, j) >= INF) continue;
      // Edge (a -> b) with a > b lying on a shortest i-j path breaks it.
      for (auto [x, y] : g.edges())
        for (int dir = 0; dir < 2; ++dir) {
          int a = dir ? y : x, b = dir ? x : y;
          if (a > b && d(i, a) + 1 + d(b, j) == d(i, j)) return false;
        }
    }
  return true;
}

bool criterion_c22(const Graph& g) {
  if (g.n() > 8) throw std::invalid_argument("cor33 C22: brute force capped at n <= 8");
  std::vector<std::vector<int>> cliques = maximal_cliques(g);
  const std::size_t m = cliques.size();
  std::vector<int> order(static_cast<std::size_t>(g.n()));
  std::iota(order.begin(), order.end(), 1);
  // position[v] = rank of v in the candidate vertex ordering
  do {
    std::vector<int> pos(static_cast<std::size_t>(g.n()) + 1);
    for (int r = 0; r < g.n(); ++r) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(r)])] = r;
    bool rows_ok = true;
    for (const auto& c : cliques) {
      std::vector<int> ranks;
      ranks.reserve(c.size());
      for (int v : c) ranks.push_back(pos[static_cast<std::size_t>(v)]);
      std::sort(ranks.begin(), ranks.end());
      if (!is_integer_interval(ranks)) {
        rows_ok = false;
        break;
      }
    }
    if (!rows_ok) continue;
    // Columns: some clique ordering makes every vertex's cliques
    // consecutive.
    std::vector<std::uint64_t> sets;
    sets.reserve(m);
    for (const auto& c : cliques) sets.push_back(vertex_set_mask(c));
    if (exists_consecutive_arrangement(sets, g.n())) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

}  // namespace

Cor33 cor33_from_string(const std::string& s) {
  if (s == "C12") return Cor33::C12;
  if (s == "C14") return Cor33::C14;
  if (s == "C15") return Cor33::C15;
  if (s == "C16") return Cor33::C16;
  if (s == "C17") return Cor33::C17;
  if (s == "C18") return Cor33::C18;
  if (s == "C19") return Cor33::C19;
  if (s == "C20") return Cor33::C20;
  if (s == "C22") return Cor33::C22;
  throw std::invalid_argument("unknown Corollary 3.13 criterion id: " + s);
}

std::string cor33_name(Cor33 c) {
  switch (c) {
    case Cor33::C12: return "C12";
    case Cor33::C14: return "C14";
    case Cor33::C15: return "C15";
    case Cor33::C16: return "C16";
    case Cor33::C17: return "C17";
    case Cor33::C18: return "C18";
    case Cor33::C19: return "C19";
    case Cor33::C20: return "C20";
    case Cor33::C22: return "C22";
  }
  return "?";
}

bool cor33_criterion(const Graph& g, Cor33 criterion) {
  const int n = g.n();
  switch (criterion) {
    case Cor33::C12: {
      Basis b = determinantal_facet_ideal(delta_d(g, 1));
      if (b.polys.empty()) return true;
      return is_groebner(b).is_gb;
    }
    case Cor33::C14:
      return criterion_c14(g);
    case Cor33::C15: {
      for (const auto& c : maximal_cliques(g))
        if (!is_integer_interval(c)) return false;
      return true;
    }
    case Cor33::C16: {
      for (auto [i, j] : g.edges()) {
        std::vector<int> span;
        for (int v = i; v <= j; ++v) span.push_back(v);
        if (!is_clique(g, span)) return false;
      }
      return true;
    }
    case Cor33::C17: {
      for (int i = 1; i <= n; ++i) {
        std::vector<int> nb{i};
        for (int u = i + 1; u <= n; ++u)
          if (g.has_edge(i, u)) nb.push_back(u);
        std::sort(nb.begin(), nb.end());
        if (!is_clique(g, nb) || !is_integer_interval(nb)) return false;
      }
      return true;
    }
    case Cor33::C18: {
      for (int i = 1; i <= n; ++i) {
        std::vector<int> nb;
        for (int u = 1; u < i; ++u)
          if (g.has_edge(i, u)) nb.push_back(u);
        nb.push_back(i);
        if (!is_clique(g, nb) || !is_integer_interval(nb)) return false;
      }
      return true;
    }
    case Cor33::C19: {
      for (int i = 1; i <= n; ++i) {
        std::vector<int> nb;
        for (int u = 1; u <= n; ++u)
          if (u == i || g.has_edge(i, u)) nb.push_back(u);
        if (!is_integer_interval(nb)) return false;
      }
      return true;
    }
    case Cor33::C20: {
      for (int i = 1; i <= n; ++i) {
        std::vector<int> before, after;
        for (int u = 1; u < i; ++u)
          if (g.has_edge(i, u)) before.push_back(u);
        for (int u = i + 1; u <= n; ++u)
          if (g.has_edge(i, u)) after.push_back(u);
        before.push_back(i);
        after.insert(after.begin(), i);
        if (!is_clique(g, before) || !is_clique(g, after)) return false;
      }
      return true;
    }
    case Cor33::C22:
      return criterion_c22(g);
  }
  throw std::logic_error("cor33_criterion: unknown criterion");
}

IntervalRecognition is_interval_graph(const Graph& g, std::uint64_t budget, std::uint64_t seed) {
  IntervalRecognition rec;
  SimplicialComplex d1 = delta_d(g, 1);
  rec.outcome = exists_labelling(d1, ComplexClass::GlobalInterval, budget, seed);
  if (!rec.outcome.found()) return rec;
  rec.labelling = rec.outcome.labelling;
  Graph relabelled = relabel(g, *rec.labelling);

  // Clique-interval construction: order the maximal cliques by (min, max);
  // the interval of v is the index range of the cliques containing v.
  std::vector<std::vector<int>> cliques = maximal_cliques(relabelled);
  std::sort(cliques.begin(), cliques.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    if (a.front() != b.front()) return a.front() < b.front();
    return a.back() < b.back();
  });
  IntervalRep rep;
  rep.intervals.assign(static_cast<std::size_t>(g.n()), {Rational(0), Rational(0)});
  for (int v = 1; v <= g.n(); ++v) {
    int lo = -1, hi = -1;
    for (std::size_t idx = 0; idx < cliques.size(); ++idx)
      if (std::binary_search(cliques[idx].begin(), cliques[idx].end(), v)) {
        if (lo < 0) lo = static_cast<int>(idx) + 1;
        hi = static_cast<int>(idx) + 1;
      }
    rep.intervals[static_cast<std::size_t>(v) - 1] = {Rational(lo), Rational(hi)};
  }
  rec.rep = rep;
  rec.rep_verified = is_strong_interval_with_rep(delta_d(relabelled, 1), rep);
  return rec;
}

Graph read_graph(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> payload_linenos;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n) || n < 1) throw ParseError(lineno, "first line must be the vertex count");
      int extra;
      if (ls >> extra) throw ParseError(lineno, "first line must contain only the vertex count");
    } else {
      int i, j;
      if (!(ls >> i >> j)) throw ParseError(lineno, "edge line must be 'i j'");
      edges.push_back({i, j});
      payload_linenos.push_back(lineno);
    }
  }
  if (n < 0) throw ParseError(lineno == 0 ? 1 : lineno, "missing vertex count");
  Graph g(n);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    try {
      g.add_edge(edges[k].first, edges[k].second);
    } catch (const std::invalid_argument& e) {
      throw ParseError(payload_linenos[k], e.what());
    }
  }
  return g;
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.n() << "\n";
  for (auto [i, j] : g.edges()) out << i << " " << j << "\n";
}

}  // namespace difacet
