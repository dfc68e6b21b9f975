#include "grpt/moore.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace grpt {

namespace {

std::vector<std::size_t> sizes_of(MooreCube const& c) {
  std::vector<std::size_t> s(c.k);
  for (int i = 0; i < c.k; ++i) s[i] = c.grids[i].size();
  return s;
}

std::size_t node_count(std::vector<std::size_t> const& sizes) {
  std::size_t n = 1;
  for (auto s : sizes) n *= s;
  return n;
}

std::vector<std::size_t> strides_of(std::vector<std::size_t> const& sizes) {
  std::vector<std::size_t> st(sizes.size(), 1);
  for (int i = static_cast<int>(sizes.size()) - 2; i >= 0; --i) st[i] = st[i + 1] * sizes[i + 1];
  return st;
}

bool next_index(std::vector<std::size_t>& ix, std::vector<std::size_t> const& sizes) {
  for (int i = static_cast<int>(ix.size()) - 1; i >= 0; --i) {
    if (++ix[i] < sizes[i]) return true;
    ix[i] = 0;
  }
  return false;
}

std::size_t flat_of(std::vector<std::size_t> const& ix, std::vector<std::size_t> const& st) {
  std::size_t f = 0;
  for (std::size_t i = 0; i < ix.size(); ++i) f += ix[i] * st[i];
  return f;
}

}  // namespace

void validate(MooreCube const& c) {
  if (c.k < 1) throw std::invalid_argument("cube needs at least one axis");
  if (c.dim < 1) throw std::invalid_argument("cube value dimension must be positive");
  if (static_cast<int>(c.grids.size()) != c.k)
    throw std::invalid_argument("cube must carry one grid per axis");
  for (auto const& g : c.grids) {
    if (g.size() < 2) throw std::invalid_argument("axis grid needs at least two entries");
    if (!(g.front() == Rat{0})) throw std::invalid_argument("axis grid must start at 0");
    for (std::size_t i = 1; i < g.size(); ++i)
      if (!(g[i - 1] < g[i])) throw std::invalid_argument("axis grid must be strictly increasing");
    if (!(g.back() > Rat{0})) throw std::invalid_argument("axis duration must be positive");
  }
  auto const sizes = sizes_of(c);
  if (c.values.size() != node_count(sizes))
    throw std::invalid_argument("value tensor size does not match the grid");
  for (auto const& v : c.values)
    if (static_cast<int>(v.size()) != c.dim)
      throw std::invalid_argument("value entry dimension mismatch");
}

Rat duration(MooreCube const& c, int axis) { return c.grids[axis].back(); }

std::vector<Rat> eval(MooreCube const& c, std::vector<Rat> const& p) {
  if (static_cast<int>(p.size()) != c.k) throw std::out_of_range("point dimension mismatch");
  auto const sizes = sizes_of(c);
  auto const st = strides_of(sizes);
  std::vector<std::size_t> cell(c.k);
  std::vector<Rat> w(c.k);
  for (int i = 0; i < c.k; ++i) {
    auto const& g = c.grids[i];
    if (p[i] < g.front() || g.back() < p[i]) throw std::out_of_range("point outside the domain");
    std::size_t j = 0;
    while (j + 2 < g.size() && !(p[i] < g[j + 1])) ++j;
    cell[i] = j;
    w[i] = (p[i] - g[j]) / (g[j + 1] - g[j]);
  }
  std::vector<Rat> out(c.dim, Rat{0});
  for (std::size_t corner = 0; corner < (1u << c.k); ++corner) {
    Rat weight{1};
    std::size_t flat = 0;
    for (int i = 0; i < c.k; ++i) {
      bool const hi = corner & (1u << i);
      weight = weight * (hi ? w[i] : Rat{1} - w[i]);
      flat += (cell[i] + (hi ? 1 : 0)) * st[i];
    }
    if (weight.p == 0) continue;
    for (int d = 0; d < c.dim; ++d) out[d] = out[d] + weight * c.values[flat][d];
  }
  return out;
}

MooreCube refine(MooreCube const& c, std::vector<std::vector<Rat>> const& new_grids) {
  for (int i = 0; i < c.k; ++i)
    for (auto const& u : c.grids[i])
      if (std::find(new_grids[i].begin(), new_grids[i].end(), u) == new_grids[i].end())
        throw std::invalid_argument("refinement grid must contain the original grid");
  MooreCube out{c.k, c.dim, new_grids, {}};
  auto const sizes = sizes_of(out);
  out.values.reserve(node_count(sizes));
  std::vector<std::size_t> ix(c.k, 0);
  std::vector<Rat> p(c.k);
  do {
    for (int i = 0; i < c.k; ++i) p[i] = new_grids[i][ix[i]];
    out.values.push_back(eval(c, p));
  } while (next_index(ix, sizes));
  return out;
}

namespace {

/// Removes grid coordinate `at` of `axis` when every slice value equals the
/// interpolation of its two neighbors; returns whether it did.
bool try_drop(MooreCube& c, int axis, std::size_t at) {
  auto const& g = c.grids[axis];
  Rat const lo = g[at - 1], mid = g[at], hi = g[at + 1];
  Rat const wl = (hi - mid) / (hi - lo);
  Rat const wh = (mid - lo) / (hi - lo);
  auto const sizes = sizes_of(c);
  auto const st = strides_of(sizes);
  std::vector<std::size_t> ix(c.k, 0);
  do {
    if (ix[axis] != at) continue;
    std::size_t const f = flat_of(ix, st);
    std::size_t const fl = f - st[axis];
    std::size_t const fh = f + st[axis];
    for (int d = 0; d < c.dim; ++d)
      if (!(c.values[f][d] == wl * c.values[fl][d] + wh * c.values[fh][d])) return false;
  } while (next_index(ix, sizes));

  std::vector<std::vector<Rat>> kept;
  kept.reserve(c.values.size() - c.values.size() / sizes[axis]);
  std::fill(ix.begin(), ix.end(), 0);
  do {
    if (ix[axis] != at) kept.push_back(std::move(c.values[flat_of(ix, st)]));
  } while (next_index(ix, sizes));
  c.values = std::move(kept);
  c.grids[axis].erase(c.grids[axis].begin() + static_cast<long>(at));
  return true;
}

}  // namespace

MooreCube canonicalize(MooreCube const& c) {
  MooreCube out = c;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int axis = 0; axis < out.k; ++axis)
      for (std::size_t at = 1; at + 1 < out.grids[axis].size();) {
        if (try_drop(out, axis, at))
          changed = true;
        else
          ++at;
      }
  }
  return out;
}

namespace {

MooreCube boundary(MooreCube const& c, int axis, bool end) {
  auto const sizes = sizes_of(c);
  auto const st = strides_of(sizes);
  std::size_t const at = end ? sizes[axis] - 1 : 0;
  MooreCube out{c.k, c.dim, c.grids, {}};
  out.grids[axis] = {Rat{0}, Rat{1}};
  auto osizes = sizes;
  osizes[axis] = 2;
  out.values.resize(node_count(osizes));
  auto const ost = strides_of(osizes);
  std::vector<std::size_t> ix(c.k, 0);
  do {
    if (ix[axis] != at) continue;
    auto ox = ix;
    ox[axis] = 0;
    out.values[flat_of(ox, ost)] = c.values[flat_of(ix, st)];
    ox[axis] = 1;
    out.values[flat_of(ox, ost)] = c.values[flat_of(ix, st)];
  } while (next_index(ix, sizes));
  return canonicalize(out);
}

}  // namespace

MooreCube source_axis(MooreCube const& c, int axis) { return boundary(c, axis, false); }
MooreCube target_axis(MooreCube const& c, int axis) { return boundary(c, axis, true); }

MooreCube compose_axis(MooreCube const& c2, MooreCube const& c1, int axis) {
  if (c1.k != c2.k || c1.dim != c2.dim)
    throw std::invalid_argument("cubes must share axis count and value dimension");
  if (!(source_axis(c2, axis) == target_axis(c1, axis))) return c1;

  std::vector<std::vector<Rat>> grids1 = c1.grids, grids2 = c2.grids;
  for (int j = 0; j < c1.k; ++j) {
    if (j == axis) continue;
    std::vector<Rat> u = c1.grids[j];
    u.insert(u.end(), c2.grids[j].begin(), c2.grids[j].end());
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    grids1[j] = u;
    grids2[j] = u;
  }
  MooreCube const a = refine(c1, grids1);
  MooreCube const b = refine(c2, grids2);

  Rat const shift = duration(a, axis);
  MooreCube out{a.k, a.dim, a.grids, {}};
  for (std::size_t i = 1; i < b.grids[axis].size(); ++i)
    out.grids[axis].push_back(b.grids[axis][i] + shift);

  auto const asz = sizes_of(a), bsz = sizes_of(b), osz = sizes_of(out);
  auto const ast = strides_of(asz), bst = strides_of(bsz), ost = strides_of(osz);
  out.values.resize(node_count(osz));
  std::vector<std::size_t> ix(out.k, 0);
  do {
    std::size_t const f = flat_of(ix, ost);
    if (ix[axis] < asz[axis]) {
      out.values[f] = a.values[flat_of(ix, ast)];
    } else {
      auto bx = ix;
      bx[axis] = ix[axis] - asz[axis] + 1;
      out.values[f] = b.values[flat_of(bx, bst)];
    }
  } while (next_index(ix, osz));
  return canonicalize(out);
}

namespace {

Rat random_step(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 3), den(1, 3);
  return Rat{num(rng), den(rng)};
}

Rat random_value(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 2);
  return Rat{num(rng), den(rng)};
}

}  // namespace

MooreCube random_cube(std::mt19937_64& rng, int k, int dim, int max_breakpoints) {
  MooreCube c{k, dim, {}, {}};
  std::uniform_int_distribution<int> nbreaks(2, std::max(2, max_breakpoints));
  for (int i = 0; i < k; ++i) {
    std::vector<Rat> g{Rat{0}};
    int const m = nbreaks(rng);
    for (int j = 1; j < m; ++j) g.push_back(g.back() + random_step(rng));
    c.grids.push_back(std::move(g));
  }
  auto const sizes = sizes_of(c);
  c.values.resize(node_count(sizes));
  for (auto& v : c.values) {
    v.resize(dim);
    for (auto& x : v) x = random_value(rng);
  }
  return c;
}

MooreCube random_composable_after(std::mt19937_64& rng, MooreCube const& c1, int axis) {
  MooreCube c2 = random_cube(rng, c1.k, c1.dim, 4);
  for (int j = 0; j < c1.k; ++j)
    if (j != axis) c2.grids[j] = c1.grids[j];
  auto const s1 = sizes_of(c1);
  auto s2 = s1;
  s2[axis] = c2.grids[axis].size();
  c2.values.assign(node_count(s2), {});
  for (auto& v : c2.values) {
    v.resize(c1.dim);
    for (auto& x : v) x = random_value(rng);
  }
  // Copy c1's target slice onto c2's source slice, node for node.
  auto const st1 = strides_of(s1), st2 = strides_of(s2);
  std::vector<std::size_t> ix(c1.k, 0);
  do {
    if (ix[axis] != 0) continue;
    auto jx = ix;
    jx[axis] = s1[axis] - 1;
    c2.values[flat_of(ix, st2)] = c1.values[flat_of(jx, st1)];
  } while (next_index(ix, s2));
  return c2;
}

std::vector<MooreCube> random_interchange_quadruple(std::mt19937_64& rng, int k, int dim, int i,
                                                    int j) {
  MooreCube const c1 = random_cube(rng, k, dim, 3);
  MooreCube const c2 = random_composable_after(rng, c1, j);
  MooreCube const c3 = random_composable_after(rng, c1, i);
  // c4: i-grid from c3, j-grid from c2, other grids shared; source slices
  // copied from t_j(c3) and t_i(c2) (their corner values agree through c1).
  MooreCube c4{k, dim, c1.grids, {}};
  c4.grids[i] = c3.grids[i];
  c4.grids[j] = c2.grids[j];
  auto const s4 = sizes_of(c4);
  c4.values.assign(node_count(s4), {});
  for (auto& v : c4.values) {
    v.resize(dim);
    for (auto& x : v) x = random_value(rng);
  }
  auto const st4 = strides_of(s4);
  auto const s3 = sizes_of(c3), s2 = sizes_of(c2);
  auto const st3 = strides_of(s3), st2 = strides_of(s2);
  std::vector<std::size_t> ix(k, 0);
  do {
    if (ix[j] == 0) {
      auto jx = ix;
      jx[j] = s3[j] - 1;
      c4.values[flat_of(ix, st4)] = c3.values[flat_of(jx, st3)];
    }
  } while (next_index(ix, s4));
  std::fill(ix.begin(), ix.end(), 0);
  do {
    if (ix[i] == 0) {
      auto jx = ix;
      jx[i] = s2[i] - 1;
      c4.values[flat_of(ix, st4)] = c2.values[flat_of(jx, st2)];
    }
  } while (next_index(ix, s4));
  return {c1, c2, c3, c4};
}

AxiomReport check_groupement_sampled(int k, int dim, int axis, int trials, std::uint64_t seed,
                                     int max_breakpoints) {
  AxiomReport report;
  std::mt19937_64 rng(seed);
  std::optional<Violation> v1, v2, v3;
  for (int trial = 0; trial < trials; ++trial) {
    {
      MooreCube const c = canonicalize(random_cube(rng, k, dim, max_breakpoints));
      auto const s = source_axis(c, axis);
      auto const t = target_axis(c, axis);
      if (!v1 && (!(source_axis(s, axis) == s) || !(target_axis(s, axis) == s) ||
                  !(source_axis(t, axis) == t) || !(target_axis(t, axis) == t)))
        v1 = Violation{{trial}, "s/t operator equations", "GR 1"};
    }
    {
      MooreCube const c1 = random_cube(rng, k, dim, max_breakpoints);
      MooreCube const c2 = random_composable_after(rng, c1, axis);
      auto const g = compose_axis(c2, c1, axis);
      if (!v2 && (!(source_axis(g, axis) == source_axis(c1, axis)) ||
                  !(target_axis(g, axis) == target_axis(c2, axis))))
        v2 = Violation{{trial}, "endpoints of a composite", "GR 2"};
      MooreCube const c3 = random_composable_after(rng, c2, axis);
      auto const left = compose_axis(compose_axis(c3, c2, axis), c1, axis);
      auto const right = compose_axis(c3, compose_axis(c2, c1, axis), axis);
      if (!v3 && !(left == right)) v3 = Violation{{trial}, "(c3#c2)#c1", "c3#(c2#c1)"};
    }
  }
  if (v1)
    report.add_fail("GR 1", *v1);
  else
    report.add_pass("GR 1");
  if (v2)
    report.add_fail("GR 2", *v2);
  else
    report.add_pass("GR 2");
  if (v3)
    report.add_fail("GR 3", *v3);
  else
    report.add_pass("GR 3");
  return report;
}

bool check_axis_commutation(MooreCube const& c, int i, int j) {
  if (i == j) throw std::invalid_argument("axis commutation needs distinct axes");
  return source_axis(source_axis(c, i), j) == source_axis(source_axis(c, j), i) &&
         source_axis(target_axis(c, j), i) == target_axis(source_axis(c, i), j) &&
         target_axis(source_axis(c, j), i) == source_axis(target_axis(c, i), j) &&
         target_axis(target_axis(c, i), j) == target_axis(target_axis(c, j), i);
}

bool check_interchange(MooreCube const& c1, MooreCube const& c2, MooreCube const& c3,
                       MooreCube const& c4, int i, int j) {
  if (!(source_axis(c2, j) == target_axis(c1, j)))
    throw std::invalid_argument("precondition s_j(c2) = t_j(c1) fails");
  if (!(source_axis(c4, j) == target_axis(c3, j)))
    throw std::invalid_argument("precondition s_j(c4) = t_j(c3) fails");
  if (!(source_axis(c3, i) == target_axis(c1, i)))
    throw std::invalid_argument("precondition s_i(c3) = t_i(c1) fails");
  if (!(source_axis(c4, i) == target_axis(c2, i)))
    throw std::invalid_argument("precondition s_i(c4) = t_i(c2) fails");
  auto const bottom = compose_axis(c2, c1, j);
  auto const top = compose_axis(c4, c3, j);
  auto const lhs = compose_axis(top, bottom, i);
  auto const right = compose_axis(c4, c2, i);
  auto const left = compose_axis(c3, c1, i);
  auto const rhs = compose_axis(right, left, j);
  // A fallback composite would betray itself through a short duration.
  if (!(duration(lhs, i) == duration(bottom, i) + duration(top, i))) return false;
  if (!(duration(rhs, j) == duration(left, j) + duration(right, j))) return false;
  return lhs == rhs;
}

}  // namespace grpt
