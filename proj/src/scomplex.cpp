#include "difacet/scomplex.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "difacet/symmatrix.hpp"

namespace difacet {

Labelling Labelling::identity(int n) {
  Labelling l;
  l.perm.resize(static_cast<std::size_t>(n));
  std::iota(l.perm.begin(), l.perm.end(), 1);
  return l;
}

Labelling Labelling::inverse() const {
  Labelling inv;
  inv.perm.resize(perm.size());
  for (std::size_t v = 0; v < perm.size(); ++v)
    inv.perm[static_cast<std::size_t>(perm[v]) - 1] = static_cast<int>(v) + 1;
  return inv;
}

std::string Labelling::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(perm[i]);
  }
  return out + ")";
}

std::uint64_t vertex_set_mask(const std::vector<int>& vs) {
  std::uint64_t m = 0;
  for (int v : vs) m |= std::uint64_t{1} << (v - 1);
  return m;
}

SimplicialComplex::SimplicialComplex(int n, int d, std::vector<std::vector<int>> facets)
    : n_(n), d_(d) {
  if (n < 1 || n > 64) throw std::invalid_argument("SimplicialComplex: n must be in [1, 64]");
  if (d < 0) throw std::invalid_argument("SimplicialComplex: dimension must be nonnegative");
  for (std::vector<int>& f : facets) {
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
      throw std::invalid_argument("SimplicialComplex: repeated vertex in facet");
    if (static_cast<int>(f.size()) != d + 1)
      throw std::invalid_argument("SimplicialComplex: impure input, facet size != d+1");
    for (int v : f)
      if (v < 1 || v > n) throw std::invalid_argument("SimplicialComplex: vertex out of range");
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  facets_ = std::move(facets);
  masks_.reserve(facets_.size());
  for (const auto& f : facets_) masks_.push_back(vertex_set_mask(f));
  std::sort(masks_.begin(), masks_.end());
}

bool SimplicialComplex::has_facet_mask(std::uint64_t mask) const {
  return std::binary_search(masks_.begin(), masks_.end(), mask);
}

std::string SimplicialComplex::to_string() const {
  std::ostringstream os;
  write_complex(os, *this);
  return os.str();
}

SimplicialComplex relabel(const SimplicialComplex& dc, const Labelling& pi) {
  if (pi.size() != dc.n()) throw std::invalid_argument("relabel: labelling size mismatch");
  std::vector<std::vector<int>> facets;
  facets.reserve(dc.facet_count());
  for (const auto& f : dc.facets()) {
    std::vector<int> g;
    g.reserve(f.size());
    for (int v : f) g.push_back(pi.apply(v));
    facets.push_back(std::move(g));
  }
  return SimplicialComplex(dc.n(), dc.dim(), std::move(facets));
}

namespace {

// Enumerates r-subsets of `base`, calling fn with each sorted pick; fn
// returns false to abort. Returns false if aborted.
bool for_each_subset_of(const std::vector<int>& base, int r,
                        const std::function<bool(const std::vector<int>&)>& fn) {
  const int len = static_cast<int>(base.size());
  if (r > len) return true;
  if (r == 0) return fn({});
  std::vector<int> pick(static_cast<std::size_t>(r));
  std::vector<int> idx(static_cast<std::size_t>(r));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    for (int t = 0; t < r; ++t)
      pick[static_cast<std::size_t>(t)] = base[static_cast<std::size_t>(idx[static_cast<std::size_t>(t)])];
    if (!fn(pick)) return false;
    int t = r - 1;
    while (t >= 0 && idx[static_cast<std::size_t>(t)] == len - (r - t)) --t;
    if (t < 0) return true;
    ++idx[static_cast<std::size_t>(t)];
    for (std::size_t s = static_cast<std::size_t>(t) + 1; s < idx.size(); ++s) idx[s] = idx[s - 1] + 1;
  }
}

// r-subsets of the integer window [lo, hi].
bool for_each_window_subset(int lo, int hi, int r,
                            const std::function<bool(const std::vector<int>&)>& fn) {
  std::vector<int> base;
  for (int v = lo; v <= hi; ++v) base.push_back(v);
  return for_each_subset_of(base, r, fn);
}

bool facets_share_position(const std::vector<int>& f, const std::vector<int>& g) {
  for (std::size_t k = 0; k < f.size(); ++k)
    if (f[k] == g[k]) return true;
  return false;
}

std::vector<int> set_union_sorted(const std::vector<int>& f, const std::vector<int>& g) {
  std::vector<int> u;
  std::set_union(f.begin(), f.end(), g.begin(), g.end(), std::back_inserter(u));
  return u;
}

}  // namespace

SimplicialComplex skeleton(const SimplicialComplex& dc, int k) {
  if (k < 0 || k > dc.dim()) throw std::invalid_argument("skeleton: k out of range");
  if (k == dc.dim()) return dc;
  std::vector<std::vector<int>> out;
  for (const auto& f : dc.facets())
    for_each_subset_of(f, k + 1, [&](const std::vector<int>& s) {
      out.push_back(s);
      return true;
    });
  return SimplicialComplex(dc.n(), k, std::move(out));
}

bool is_closed_lab(const SimplicialComplex& dc) {
  const auto& fs = dc.facets();
  for (std::size_t a = 0; a < fs.size(); ++a)
    for (std::size_t b = a + 1; b < fs.size(); ++b) {
      if (!facets_share_position(fs[a], fs[b])) continue;
      std::vector<int> u = set_union_sorted(fs[a], fs[b]);
      bool ok = for_each_subset_of(u, dc.dim() + 1, [&](const std::vector<int>& s) {
        return dc.has_facet_mask(vertex_set_mask(s));
      });
      if (!ok) return false;
    }
  return true;
}

bool is_unit_interval_lab(const SimplicialComplex& dc) {
  for (const auto& f : dc.facets()) {
    bool ok = for_each_window_subset(f.front(), f.back(), dc.dim() + 1,
                                     [&](const std::vector<int>& s) {
                                       return dc.has_facet_mask(vertex_set_mask(s));
                                     });
    if (!ok) return false;
  }
  return true;
}

bool is_poor_closed_lab(const SimplicialComplex& dc) {
  const auto& fs = dc.facets();
  const auto& ms = dc.facet_masks();
  for (std::size_t a = 0; a < fs.size(); ++a)
    for (std::size_t b = a + 1; b < fs.size(); ++b) {
      if (!facets_share_position(fs[a], fs[b])) continue;
      std::uint64_t ua = vertex_set_mask(fs[a]);
      std::uint64_t ub = vertex_set_mask(fs[b]);
      std::uint64_t u = ua | ub;
      bool witness = false;
      for (std::uint64_t h : ms)
        if ((h & u) == h && h != ua && h != ub) {
          witness = true;
          break;
        }
      if (!witness) return false;
    }
  return true;
}

bool is_global_interval_lab(const SimplicialComplex& dc) {
  for (const auto& f : dc.facets()) {
    std::uint64_t fmask = vertex_set_mask(f);
    for (int j = f.front() + 1; j < f.back(); ++j) {
      if (fmask & (std::uint64_t{1} << (j - 1))) continue;
      std::uint64_t candidate = (fmask & ~(std::uint64_t{1} << (f.back() - 1))) |
                                (std::uint64_t{1} << (j - 1));
      if (!dc.has_facet_mask(candidate)) return false;
    }
  }
  return true;
}

namespace {

// covered[a][b]: some facet contains both a and b.
std::vector<std::vector<bool>> pair_cover_table(const SimplicialComplex& dc) {
  std::vector<std::vector<bool>> cov(static_cast<std::size_t>(dc.n()) + 1,
                                     std::vector<bool>(static_cast<std::size_t>(dc.n()) + 1, false));
  for (const auto& f : dc.facets())
    for (std::size_t p = 0; p < f.size(); ++p)
      for (std::size_t q = 0; q < f.size(); ++q)
        cov[static_cast<std::size_t>(f[p])][static_cast<std::size_t>(f[q])] = true;
  return cov;
}

}  // namespace

bool is_proper_interval_lab(const SimplicialComplex& dc) {
  auto cov = pair_cover_table(dc);
  for (const auto& f : dc.facets()) {
    std::uint64_t fmask = vertex_set_mask(f);
    for (int j = f.front() + 1; j < f.back(); ++j) {
      if (fmask & (std::uint64_t{1} << (j - 1))) continue;
      for (int ik : f) {
        if (!cov[static_cast<std::size_t>(j)][static_cast<std::size_t>(ik)]) continue;
        std::uint64_t candidate =
            (fmask & ~(std::uint64_t{1} << (ik - 1))) | (std::uint64_t{1} << (j - 1));
        if (!dc.has_facet_mask(candidate)) return false;
      }
    }
  }
  return true;
}

bool lemma_connection_condition(const SimplicialComplex& dc) {
  auto cov = pair_cover_table(dc);
  for (const auto& f : dc.facets()) {
    std::uint64_t fmask = vertex_set_mask(f);
    for (int j = f.front() + 1; j < f.back(); ++j) {
      if (fmask & (std::uint64_t{1} << (j - 1))) continue;
      bool any = false;
      for (int ik : f)
        if (cov[static_cast<std::size_t>(j)][static_cast<std::size_t>(ik)]) {
          any = true;
          break;
        }
      if (!any) return false;
    }
  }
  return true;
}

bool lemma_connection_condition_all(const SimplicialComplex& dc) {
  auto cov = pair_cover_table(dc);
  for (const auto& f : dc.facets()) {
    std::uint64_t fmask = vertex_set_mask(f);
    for (int j = f.front() + 1; j < f.back(); ++j) {
      if (fmask & (std::uint64_t{1} << (j - 1))) continue;
      for (int ik : f)
        if (!cov[static_cast<std::size_t>(j)][static_cast<std::size_t>(ik)]) return false;
    }
  }
  return true;
}

bool evaluate_class(const SimplicialComplex& dc, ComplexClass cls) {
  switch (cls) {
    case ComplexClass::Closed:
      return is_closed_lab(dc);
    case ComplexClass::UnitInterval:
      return is_unit_interval_lab(dc);
    case ComplexClass::PoorClosed:
      return is_poor_closed_lab(dc);
    case ComplexClass::GlobalInterval:
      return is_global_interval_lab(dc);
    case ComplexClass::ProperInterval:
      return is_proper_interval_lab(dc);
  }
  throw std::logic_error("evaluate_class: unknown class");
}

std::string class_name(ComplexClass cls) {
  switch (cls) {
    case ComplexClass::Closed:
      return "closed";
    case ComplexClass::UnitInterval:
      return "unit_interval";
    case ComplexClass::PoorClosed:
      return "poor_closed";
    case ComplexClass::GlobalInterval:
      return "global_interval";
    case ComplexClass::ProperInterval:
      return "proper_interval";
  }
  return "?";
}

std::string IntervalRep::to_string() const {
  std::ostringstream os;
  write_interval_rep(os, *this);
  return os.str();
}

bool is_strong_interval_with_rep(const SimplicialComplex& dc, const IntervalRep& rep) {
  if (rep.size() != dc.n())
    throw std::invalid_argument("is_strong_interval_with_rep: representation misses vertices");
  for (const auto& [a, b] : rep.intervals)
    if (a > b) throw std::invalid_argument("is_strong_interval_with_rep: interval with a > b");

  bool consistent = true;
  for_each_window_subset(1, dc.n(), dc.dim() + 1, [&](const std::vector<int>& u) {
    // Union of closed intervals connected: sweep by left endpoint.
    std::vector<std::pair<Rational, Rational>> ivs;
    ivs.reserve(u.size());
    for (int v : u) ivs.push_back(rep.intervals[static_cast<std::size_t>(v) - 1]);
    std::sort(ivs.begin(), ivs.end());
    bool connected = true;
    Rational reach = ivs.front().second;
    for (std::size_t k = 1; k < ivs.size(); ++k) {
      if (ivs[k].first > reach) {
        connected = false;
        break;
      }
      reach = std::max(reach, ivs[k].second);
    }
    bool member = dc.has_facet_mask(vertex_set_mask(u));
    if (member != connected) {
      consistent = false;
      return false;
    }
    return true;
  });
  return consistent;
}

std::string SearchOutcome::kind_name() const {
  switch (kind) {
    case Kind::Found:
      return "Found";
    case Kind::ExhaustedNone:
      return "ExhaustedNone";
    case Kind::BudgetExceeded:
      return "BudgetExceeded";
  }
  return "?";
}

std::vector<int> automorphism_orbit_reps(const SimplicialComplex& dc) {
  const int n = dc.n();
  std::vector<int> rep(static_cast<std::size_t>(n) + 1);
  std::iota(rep.begin(), rep.end(), 0);
  if (n > 9) return rep;  // exact orbits too costly; singleton orbits are sound

  std::vector<int> find_path;
  auto find = [&](int v) {
    while (rep[static_cast<std::size_t>(v)] != v) v = rep[static_cast<std::size_t>(v)];
    return v;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    rep[static_cast<std::size_t>(b)] = a;
  };

  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    Labelling pi{perm};
    bool automorphism = true;
    for (const auto& f : dc.facets()) {
      std::uint64_t m = 0;
      for (int v : f) m |= std::uint64_t{1} << (pi.apply(v) - 1);
      if (!dc.has_facet_mask(m)) {
        automorphism = false;
        break;
      }
    }
    if (automorphism)
      for (int v = 1; v <= n; ++v) unite(v, pi.apply(v));
  } while (std::next_permutation(perm.begin(), perm.end()));

  for (int v = 1; v <= n; ++v) rep[static_cast<std::size_t>(v)] = find(v);
  return rep;
}

SearchOutcome exists_labelling(const SimplicialComplex& dc, ComplexClass cls, std::uint64_t budget,
                               std::uint64_t seed) {
  const int n = dc.n();
  SearchOutcome out;

  std::vector<int> orbit = automorphism_orbit_reps(dc);
  std::vector<int> receivers;  // candidate receivers of label 1: orbit minima
  for (int v = 1; v <= n; ++v)
    if (orbit[static_cast<std::size_t>(v)] == v) receivers.push_back(v);

  // Exhaustive count: |receivers| * (n-1)!.
  long double fact = 1;
  for (int k = 2; k <= n - 1; ++k) fact *= k;
  long double total = fact * static_cast<long double>(receivers.size());

  auto try_inverse = [&](const std::vector<int>& inv) -> bool {
    // inv[label-1] = vertex receiving that label.
    Labelling pi;
    pi.perm.resize(static_cast<std::size_t>(n));
    for (int lab = 1; lab <= n; ++lab)
      pi.perm[static_cast<std::size_t>(inv[static_cast<std::size_t>(lab) - 1]) - 1] = lab;
    ++out.examined;
    if (evaluate_class(relabel(dc, pi), cls)) {
      out.kind = SearchOutcome::Kind::Found;
      out.labelling = pi;
      return true;
    }
    return false;
  };

  if (total <= static_cast<long double>(budget)) {
    for (int v : receivers) {
      std::vector<int> rest;
      for (int u = 1; u <= n; ++u)
        if (u != v) rest.push_back(u);
      std::vector<int> inv(static_cast<std::size_t>(n));
      do {
        inv[0] = v;
        std::copy(rest.begin(), rest.end(), inv.begin() + 1);
        if (try_inverse(inv)) return out;
      } while (std::next_permutation(rest.begin(), rest.end()));
    }
    out.kind = SearchOutcome::Kind::ExhaustedNone;
    return out;
  }

  // Randomized restarts under budget.
  std::mt19937_64 rng(seed);
  std::vector<int> inv(static_cast<std::size_t>(n));
  std::iota(inv.begin(), inv.end(), 1);
  while (out.examined < budget) {
    std::shuffle(inv.begin(), inv.end(), rng);
    if (try_inverse(inv)) return out;
  }
  out.kind = SearchOutcome::Kind::BudgetExceeded;
  return out;
}

SearchOutcome search_strong_rep(const SimplicialComplex& dc, std::uint64_t budget) {
  const int n = dc.n();
  SearchOutcome out;
  if (n > 7) {
    out.kind = SearchOutcome::Kind::BudgetExceeded;
    return out;
  }
  const int hi = 2 * n;  // endpoint range [0, 2n], length <= n

  // Depth-first over vertices in label order; endpoints nondecreasing in
  // (left, right), the order under which strong implies global.
  std::vector<std::pair<int, int>> chosen(static_cast<std::size_t>(n));
  bool found = false;

  // Incremental feasibility: once vertices 1..v are assigned, every
  // (d+1)-subset with maximum = v is fully decided and must match.
  auto check_prefix = [&](int v) -> bool {
    bool ok = true;
    for_each_window_subset(1, v, dc.dim() + 1, [&](const std::vector<int>& u) {
      if (u.back() != v) return true;
      std::vector<std::pair<Rational, Rational>> ivs;
      for (int w : u)
        ivs.push_back({Rational(chosen[static_cast<std::size_t>(w) - 1].first),
                       Rational(chosen[static_cast<std::size_t>(w) - 1].second)});
      std::sort(ivs.begin(), ivs.end());
      Rational reach = ivs.front().second;
      bool connected = true;
      for (std::size_t k = 1; k < ivs.size(); ++k) {
        if (ivs[k].first > reach) {
          connected = false;
          break;
        }
        reach = std::max(reach, ivs[k].second);
      }
      if (connected != dc.has_facet_mask(vertex_set_mask(u))) {
        ok = false;
        return false;
      }
      return true;
    });
    return ok;
  };

  std::function<bool(int)> dfs = [&](int v) -> bool {
    if (out.examined >= budget) return false;
    if (v > n) {
      found = true;
      return true;
    }
    int lo_a = v == 1 ? 0 : chosen[static_cast<std::size_t>(v) - 2].first;
    for (int a = lo_a; a <= hi; ++a) {
      int lo_b = a;
      if (v > 1 && a == chosen[static_cast<std::size_t>(v) - 2].first)
        lo_b = std::max(lo_b, chosen[static_cast<std::size_t>(v) - 2].second);
      for (int b = lo_b; b <= std::min(hi, a + n); ++b) {
        ++out.examined;
        if (out.examined >= budget) return false;
        chosen[static_cast<std::size_t>(v) - 1] = {a, b};
        if (check_prefix(v) && dfs(v + 1)) return true;
      }
    }
    return false;
  };

  bool complete = dfs(1);
  if (found) {
    IntervalRep rep;
    for (auto [a, b] : chosen) rep.intervals.push_back({Rational(a), Rational(b)});
    out.kind = SearchOutcome::Kind::Found;
    out.rep = std::move(rep);
  } else if (!complete && out.examined >= budget) {
    out.kind = SearchOutcome::Kind::BudgetExceeded;
  } else {
    out.kind = SearchOutcome::Kind::ExhaustedNone;
  }
  return out;
}

bool is_connected_complex(const SimplicialComplex& dc) {
  const int n = dc.n();
  std::vector<int> parent(static_cast<std::size_t>(n) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    return parent[static_cast<std::size_t>(v)] == v ? v : parent[static_cast<std::size_t>(v)] = find(parent[static_cast<std::size_t>(v)]);
  };
  std::vector<bool> covered(static_cast<std::size_t>(n) + 1, false);
  for (const auto& f : dc.facets()) {
    for (int v : f) covered[static_cast<std::size_t>(v)] = true;
    for (std::size_t k = 1; k < f.size(); ++k) {
      int a = find(f[0]), b = find(f[k]);
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  }
  for (int v = 1; v <= n; ++v)
    if (!covered[static_cast<std::size_t>(v)]) return n == 1;  // isolated vertices disconnect
  for (int v = 2; v <= n; ++v)
    if (find(v) != find(1)) return false;
  return true;
}

Basis determinantal_facet_ideal(const SimplicialComplex& dc, const FieldSpec& field) {
  MatrixContext ctx(dc.dim() + 1, dc.n(), field);
  Basis b(ctx);
  for (const auto& f : dc.facets()) b.polys.push_back(minor(MinorSpec::top_rows(f), ctx));
  return b;
}

namespace {

std::vector<std::string> read_payload_lines(std::istream& in, std::vector<int>* line_numbers) {
  std::vector<std::string> lines;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    bool blank = line.find_first_not_of(" \t\r\n") == std::string::npos;
    if (blank) continue;
    lines.push_back(line);
    if (line_numbers) line_numbers->push_back(lineno);
  }
  return lines;
}

}  // namespace

SimplicialComplex read_complex(std::istream& in) {
  std::vector<int> linenos;
  std::vector<std::string> lines = read_payload_lines(in, &linenos);
  if (lines.empty()) throw ParseError(1, "missing header line 'n d'");
  std::istringstream head(lines[0]);
  int n = 0, d = -1;
  if (!(head >> n >> d)) throw ParseError(linenos[0], "header must be 'n d'");
  if (n < 1 || d < 0) throw ParseError(linenos[0], "header needs n >= 1 and d >= 0");
  std::vector<std::vector<int>> facets;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream ls(lines[i]);
    std::vector<int> f;
    int v;
    while (ls >> v) f.push_back(v);
    if (!ls.eof()) throw ParseError(linenos[i], "facet line must contain integers");
    if (static_cast<int>(f.size()) != d + 1)
      throw ParseError(linenos[i], "facet must have exactly d+1 = " + std::to_string(d + 1) + " vertices");
    for (int w : f)
      if (w < 1 || w > n) throw ParseError(linenos[i], "vertex out of range [1, n]");
    facets.push_back(std::move(f));
  }
  try {
    return SimplicialComplex(n, d, std::move(facets));
  } catch (const std::invalid_argument& e) {
    throw ParseError(linenos[0], e.what());
  }
}

void write_complex(std::ostream& out, const SimplicialComplex& dc) {
  out << dc.n() << " " << dc.dim() << "\n";
  for (const auto& f : dc.facets()) {
    for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << f[i];
    out << "\n";
  }
}

IntervalRep read_interval_rep(std::istream& in, int n) {
  std::vector<int> linenos;
  std::vector<std::string> lines = read_payload_lines(in, &linenos);
  IntervalRep rep;
  rep.intervals.assign(static_cast<std::size_t>(n), {Rational(0), Rational(0)});
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::istringstream ls(lines[i]);
    int v;
    std::string a, b;
    if (!(ls >> v >> a >> b)) throw ParseError(linenos[i], "expected 'v a b'");
    if (v < 1 || v > n) throw ParseError(linenos[i], "vertex out of range");
    rep.intervals[static_cast<std::size_t>(v) - 1] = {Rational::from_string(a), Rational::from_string(b)};
    seen[static_cast<std::size_t>(v) - 1] = true;
  }
  for (int v = 1; v <= n; ++v)
    if (!seen[static_cast<std::size_t>(v) - 1])
      throw ParseError(linenos.empty() ? 1 : linenos.back(), "missing interval for vertex " + std::to_string(v));
  return rep;
}

void write_interval_rep(std::ostream& out, const IntervalRep& rep) {
  for (int v = 1; v <= rep.size(); ++v)
    out << v << " " << rep.intervals[static_cast<std::size_t>(v) - 1].first.to_string() << " "
        << rep.intervals[static_cast<std::size_t>(v) - 1].second.to_string() << "\n";
}

}  // namespace difacet
