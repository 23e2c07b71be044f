#include "theta/moeglin.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "theta/classify.hpp"

namespace theta {

int zeta(const Summand& s) { return s.a >= s.b ? +1 : -1; }

namespace {

int find_basis(const std::vector<Summand>& basis, const IrrSymbol& rho,
               int a) {
  for (size_t i = 0; i < basis.size(); ++i)
    if (basis[i].rho == rho && basis[i].a == a && basis[i].b == 1)
      return static_cast<int>(i);
  return -1;
}

}  // namespace

bool supercuspidal_support(const AParameter& phi, const Character& eta) {
  if (!is_discrete(phi)) throw std::domain_error("not a discrete parameter");
  const ComponentGroup g = component_group(phi, true);
  if (eta.signs.size() != g.rank())
    throw std::domain_error("character size mismatch");
  for (size_t i = 0; i < g.basis.size(); ++i) {
    const Summand& s = g.basis[i];
    if (s.a == 2 && eta.signs[i] != -1) return false;  // initial
    if (s.a > 2) {
      const int j = find_basis(g.basis, s.rho, s.a - 2);
      if (j < 0) return false;                                // chain
      if (eta.signs[i] * eta.signs[j] != -1) return false;    // alternating
    }
  }
  return true;
}

std::vector<Character> enumerate_supercuspidals(const AParameter& phi) {
  if (!is_discrete(phi)) throw std::domain_error("not a discrete parameter");
  std::vector<Character> out;
  for (const auto& eta : enumerate_characters(component_group(phi, true)))
    if (supercuspidal_support(phi, eta)) out.push_back(eta);
  return out;
}

LabeledPacket elementary_packet(const AParameter& psi) {
  // Elementarity up to multiplicity: good parity, min(a,b) = 1 everywhere,
  // and the distinct summands have discrete diagonal restriction. Repeated
  // summands only move z, not the basis, so the packet is still labeled by
  // the quotient group.
  bool ok = classify(psi).good_parity;
  for (const auto& ws : psi.summands)
    ok = ok && std::min(ws.s.a, ws.s.b) == 1;
  if (ok) {
    AParameter distinct = psi;
    distinct.canonicalize();
    for (auto& ws : distinct.summands) ws.mult = 1;
    for (const auto& ws : diagonal_restriction(distinct).summands)
      ok = ok && ws.mult == 1;
  }
  if (!ok) throw std::domain_error("not an elementary parameter");

  LabeledPacket out;
  out.parameter = psi;
  out.parameter.canonicalize();
  out.quotient = true;
  for (const auto& eta : enumerate_characters(component_group(psi, true))) {
    PacketMember m;
    m.id = "m";
    for (int v : eta.signs) m.id += v > 0 ? '+' : '-';
    m.character = eta;
    out.members.push_back(std::move(m));
  }
  return out;
}

bool validate_admissible_order(const AParameter& psi,
                               const OccurrenceOrder& order) {
  const auto occ = expand_occurrences(psi);
  if (order.rank.size() != occ.size()) return false;
  for (size_t i = 0; i < occ.size(); ++i)
    for (size_t j = 0; j < occ.size(); ++j) {
      if (i == j || !(occ[i].rho == occ[j].rho)) continue;
      if (order.rank[i] == order.rank[j]) return false;  // must be total
      if (zeta(occ[i]) != zeta(occ[j])) continue;
      const int si = occ[i].a + occ[i].b, sj = occ[j].a + occ[j].b;
      const int di = std::abs(occ[i].a - occ[i].b),
                dj = std::abs(occ[j].a - occ[j].b);
      if (si > sj && di > dj && order.rank[i] <= order.rank[j]) return false;
    }
  return true;
}

OccurrenceOrder natural_order(const AParameter& psi) {
  const auto occ = expand_occurrences(psi);
  // Rank by (a+b, |a-b|, position) within each rho class; ties in the sums
  // are broken deterministically so the result is always a total order per
  // class.
  std::vector<size_t> idx(occ.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](size_t x, size_t y) {
    const int sx = occ[x].a + occ[x].b, sy = occ[y].a + occ[y].b;
    if (sx != sy) return sx < sy;
    const int dx = std::abs(occ[x].a - occ[x].b),
              dy = std::abs(occ[y].a - occ[y].b);
    if (dx != dy) return dx < dy;
    return x < y;
  });
  OccurrenceOrder order;
  order.rank.resize(occ.size());
  for (size_t pos = 0; pos < idx.size(); ++pos)
    order.rank[idx[pos]] = static_cast<int>(pos);
  return order;
}

namespace {

// Constituents of the diagonal restriction of a single summand, as (rho, a)
// summands with b = 1.
std::vector<Summand> diag_pieces(const Summand& s) {
  std::vector<Summand> out;
  for (int k = 0; k < std::min(s.a, s.b); ++k) {
    Summand t = s;
    t.a = s.a + s.b - 1 - 2 * k;
    t.b = 1;
    out.push_back(t);
  }
  return out;
}

constexpr int kDominateCap = 50;

}  // namespace

DominationResult dominate(const AParameter& psi, const OccurrenceOrder& order) {
  if (!classify(psi).good_parity)
    throw std::domain_error("parameter not of good parity");
  if (!validate_admissible_order(psi, order))
    throw std::domain_error("order not admissible");
  const auto occ = expand_occurrences(psi);

  // Partition occurrence indices into rho classes.
  std::vector<std::vector<size_t>> classes;
  for (size_t i = 0; i < occ.size(); ++i) {
    bool placed = false;
    for (auto& cls : classes)
      if (occ[cls.front()].rho == occ[i].rho) {
        cls.push_back(i);
        placed = true;
        break;
      }
    if (!placed) classes.push_back({i});
  }

  std::vector<int> t(occ.size(), 0);
  std::vector<Summand> inflated(occ.size());
  std::set<Summand> seen;  // accumulated diagonal-restriction constituents
  for (auto& cls : classes) {
    std::sort(cls.begin(), cls.end(),
              [&](size_t x, size_t y) { return order.rank[x] < order.rank[y]; });
    int last_sum = 0;
    for (size_t i : cls) {
      const int z = zeta(occ[i]);
      bool found = false;
      for (int ti = 0; ti <= kDominateCap && !found; ++ti) {
        Summand cand = occ[i];
        (z > 0 ? cand.a : cand.b) += 2 * ti;
        if (cand.a + cand.b <= last_sum) continue;
        const auto pieces = diag_pieces(cand);
        bool clash = false;
        for (const auto& p : pieces)
          if (seen.count(p)) {
            clash = true;
            break;
          }
        if (clash) continue;
        for (const auto& p : pieces) seen.insert(p);
        t[i] = ti;
        inflated[i] = cand;
        last_sum = cand.a + cand.b;
        found = true;
      }
      if (!found) throw std::domain_error("search bound exceeded");
    }
  }

  DominationResult res;
  res.t = std::move(t);
  res.psi_gg.case_tag = psi.case_tag;
  res.psi_gg.side = psi.side;
  for (const auto& s : inflated) res.psi_gg.summands.push_back({s, 1});
  res.psi_gg.canonicalize();
  res.psi_gg.target_dim = res.psi_gg.total_dim();
  return res;
}

GeneralizedSegment segment(const Summand& s, const Summand& s_gg) {
  // zeta is read off from which coordinate got inflated; at the a = b
  // boundary both orientations are legal and an unchanged pair defaults to
  // zeta(s).
  int z = 0;
  if (s_gg.a == s.a && s_gg.b == s.b)
    z = zeta(s);
  else if (s_gg.b == s.b && s_gg.a > s.a)
    z = 1;
  else if (s_gg.a == s.a && s_gg.b > s.b)
    z = -1;
  const bool shape_ok =
      z != 0 && s.rho == s_gg.rho && (z == zeta(s) || s.a == s.b) &&
      (s_gg.a - s.a) % 2 == 0 && (s_gg.b - s.b) % 2 == 0;
  if (!shape_ok) throw std::domain_error("not a dominating pair");

  GeneralizedSegment seg;
  seg.rho = s.rho;
  seg.cols = (z > 0 ? s_gg.a - s.a : s_gg.b - s.b) / 2;
  seg.rows = seg.cols == 0 ? 0 : (z > 0 ? s_gg.b : s_gg.a);
  const int top_left_x2 = s_gg.a - s_gg.b;
  seg.entries_x2.assign(seg.rows, std::vector<int>(seg.cols, 0));
  for (int i = 0; i < seg.rows; ++i)
    for (int j = 0; j < seg.cols; ++j)
      seg.entries_x2[i][j] = top_left_x2 + 2 * (i - j) * z;
  for (int j = 0; j < seg.cols; ++j)
    for (int i = 0; i < seg.rows; ++i)
      seg.application_order_x2.push_back(seg.entries_x2[i][j]);
  return seg;
}

std::vector<JacquetStep> jacquet_schedule(const AParameter& psi,
                                          const OccurrenceOrder& order,
                                          const AParameter& psi_gg) {
  const auto occ = expand_occurrences(psi);
  const auto occg = expand_occurrences(psi_gg);
  if (order.rank.size() != occ.size() || occ.size() != occg.size())
    throw std::domain_error("not a dominating pair");

  // Match each occurrence of psi to its dominating counterpart: within a rho
  // class, increasing rank on the psi side pairs with increasing a+b on the
  // psi_gg side.
  std::vector<GeneralizedSegment> segs(occ.size());
  std::vector<bool> done(occ.size(), false);
  std::vector<bool> used(occg.size(), false);
  for (size_t i = 0; i < occ.size(); ++i) {
    if (done[i]) continue;
    std::vector<size_t> cls, clsg;
    for (size_t j = 0; j < occ.size(); ++j)
      if (occ[j].rho == occ[i].rho && !done[j]) cls.push_back(j);
    for (size_t j = 0; j < occg.size(); ++j)
      if (occg[j].rho == occ[i].rho && !used[j]) clsg.push_back(j);
    if (cls.size() != clsg.size())
      throw std::domain_error("not a dominating pair");
    std::sort(cls.begin(), cls.end(),
              [&](size_t x, size_t y) { return order.rank[x] < order.rank[y]; });
    std::sort(clsg.begin(), clsg.end(), [&](size_t x, size_t y) {
      const int sx = occg[x].a + occg[x].b, sy = occg[y].a + occg[y].b;
      if (sx != sy) return sx < sy;
      return occg[x] < occg[y];
    });
    for (size_t p = 0; p < cls.size(); ++p) {
      segs[cls[p]] = segment(occ[cls[p]], occg[clsg[p]]);
      done[cls[p]] = true;
      used[clsg[p]] = true;
    }
  }

  std::vector<size_t> visit(occ.size());
  for (size_t i = 0; i < visit.size(); ++i) visit[i] = i;
  std::sort(visit.begin(), visit.end(), [&](size_t x, size_t y) {
    if (order.rank[x] != order.rank[y]) return order.rank[x] > order.rank[y];
    return occ[y] < occ[x];
  });

  std::vector<JacquetStep> out;
  for (size_t i : visit)
    for (int e : segs[i].application_order_x2)
      out.push_back({occ[i].rho, e});
  return out;
}

std::vector<int> descent_segment(int n, int r, int r0) {
  if (r <= r0) throw std::domain_error("r must exceed r0");
  std::vector<int> out;
  for (int j = n - r; j <= n - r0 - 1; ++j) out.push_back(j);
  return out;
}

}  // namespace theta
