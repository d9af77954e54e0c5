#include "k5mf/discharging.hpp"

#include <algorithm>
#include <sstream>

#include "k5mf/classify.hpp"

namespace k5mf {

std::string to_string(const Charge& c) {
  return std::to_string(c.numerator()) + "/" + std::to_string(c.denominator());
}

std::string to_string(const Element& e) {
  return (e.kind == Element::Kind::Vertex ? "V " : "F ") + std::to_string(e.id);
}

Charge ChargeMap::total() const {
  Charge t = 0;
  for (const auto& c : vertex) t += c;
  for (const auto& c : face) t += c;
  return t;
}

ChargeMap initial_charges(const PlaneEmbedding& emb) {
  ChargeMap m;
  const int n = emb.vertex_count();
  m.vertex.resize(n);
  for (Vertex v = 0; v < n; ++v) m.vertex[v] = emb.degree(v) - 6;
  m.face.resize(emb.face_count());
  for (int f = 0; f < emb.face_count(); ++f) {
    int d = emb.face_degree(f);
    m.face[f] = f == emb.outer_face() ? 2 * d + 6 : 2 * d - 6;
  }
  return m;
}

namespace {

Element V(int id) { return {Element::Kind::Vertex, id}; }
Element F(int id) { return {Element::Kind::Face, id}; }

class Engine {
 public:
  Engine(const PlaneEmbedding& emb, std::span<const Vertex> Y, const ChargeMap& initial)
      : emb_(emb), g_(emb.graph()), in_y_(g_.vertex_count(), 0) {
    try {
      check_removal_set(emb, Y);
    } catch (const ConfigError& e) {
      throw DischargeError(DischargeError::Kind::InvalidY, e.what());
    }
    for (Vertex y : Y) in_y_[y] = 1;
    res_.charges = initial;
    total_ = initial.total();
    d_ = g_.degrees();
  }

  void send(Element from, Element to, Charge amount, const char* rule) {
    res_.charges.at(from) -= amount;
    res_.charges.at(to) += amount;
    res_.ledger.push_back({from, to, amount, rule});
  }

  void end_rule(const char* rule) {
    if (res_.charges.total() != total_)
      throw DischargeError(DischargeError::Kind::ConservationBroken,
                           std::string("total changed after ") + rule);
  }

  bool in_h(Vertex v) const { return !in_y_[v]; }

  // R1 of both rule sets.
  void outer_face_rule(const char* tag) {
    const int f0 = emb_.outer_face();
    for (Vertex v : emb_.face_vertices(f0)) {
      if (in_y_[v]) {
        send(F(f0), V(v), 6, tag);
        continue;
      }
      int k = 0;
      for (Vertex w : g_.neighbors(v))
        if (emb_.on_face(w, f0) && in_h(w)) ++k;
      if (k == 1) send(F(f0), V(v), 1, tag);
      if (k == 2) send(F(f0), V(v), 2, tag);
    }
    end_rule(tag);
  }

  // Y sends 1 to each neighbour.
  void y_rule(const char* tag) {
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      if (!in_y_[v]) continue;
      for (Vertex u : g_.neighbors(v)) send(V(v), V(u), 1, tag);
    }
    end_rule(tag);
  }

  DischargeResult take() { return std::move(res_); }

  const PlaneEmbedding& emb_;
  const Graph& g_;
  std::vector<char> in_y_;
  std::vector<int> d_;
  Charge total_;
  DischargeResult res_;
};

}  // namespace

DischargeResult apply_rules_L31(const PlaneEmbedding& emb, std::span<const Vertex> Y,
                                const ChargeMap& initial) {
  Engine e(emb, Y, initial);
  const Graph& g = emb.graph();
  const auto& d = e.d_;
  const int f0 = emb.outer_face();
  const int n = g.vertex_count();

  e.outer_face_rule("R1");

  for (int f = 0; f < emb.face_count(); ++f) {
    if (f == f0) continue;
    int df = emb.face_degree(f);
    if (df < 4) continue;
    for (Vertex u : emb.face_vertices(f)) {
      if (!e.in_h(u) || d[u] > 5) continue;
      e.send(F(f), V(u), df == 4 ? 1 : 2, "R2");
    }
  }
  e.end_rule("R2");

  e.y_rule("R3");

  for (Vertex v = 0; v < n; ++v) {
    if (!e.in_h(v) || d[v] < 7) continue;
    for (Vertex u : g.neighbors(v)) {
      if (!e.in_h(u)) continue;
      bool weak = is_weak_neighbor(emb, v, u);
      if (weak && d[u] == 3) e.send(V(v), V(u), 1, "R4");
      if (d[u] == 3 && is_semiweak_neighbor(emb, v, u)) e.send(V(v), V(u), Charge(1, 2), "R4");
      if (weak && d[u] == 4) e.send(V(v), V(u), Charge(1, 2), "R4");
    }
  }
  e.end_rule("R4");

  for (Vertex v = 0; v < n; ++v) {
    if (!e.in_h(v) || d[v] < 9) continue;
    for (Vertex u : g.neighbors(v))
      if (e.in_h(u) && d[u] == 5 && is_weak_neighbor(emb, v, u))
        e.send(V(v), V(u), Charge(1, 2), "R5");
  }
  e.end_rule("R5");

  for (Vertex v = 0; v < n; ++v) {
    if (!e.in_h(v) || d[v] != 8) continue;
    for (Vertex u : g.neighbors(v)) {
      if (!e.in_h(u)) continue;
      switch (special_type(emb, v, u, d).tag) {
        case NeighborTag::E2: e.send(V(v), V(u), Charge(1, 2), "R6"); break;
        case NeighborTag::E3: e.send(V(v), V(u), Charge(1, 3), "R6"); break;
        case NeighborTag::E4: e.send(V(v), V(u), Charge(1, 4), "R6"); break;
        default: break;
      }
    }
  }
  e.end_rule("R6");

  for (Vertex v = 0; v < n; ++v) {
    if (!e.in_h(v) || d[v] != 7) continue;
    for (Vertex u : g.neighbors(v)) {
      if (!e.in_h(u)) continue;
      switch (special_type(emb, v, u, d).tag) {
        case NeighborTag::S2: e.send(V(v), V(u), Charge(1, 2), "R7"); break;
        case NeighborTag::S3: e.send(V(v), V(u), Charge(1, 3), "R7"); break;
        case NeighborTag::S4: e.send(V(v), V(u), Charge(1, 4), "R7"); break;
        default: break;
      }
    }
  }
  e.end_rule("R7");
  return e.take();
}

DischargeResult apply_rules_L32(const PlaneEmbedding& emb, std::span<const Vertex> Y,
                                const MasterAssignment& masters, const ChargeMap& initial) {
  Engine e(emb, Y, initial);
  const Graph& g = emb.graph();
  const auto& d = e.d_;
  const int f0 = emb.outer_face();
  const int n = g.vertex_count();

  for (Vertex u : dependent_candidates(g, Y))
    if (!masters.master_of(u))
      throw DischargeError(DischargeError::Kind::PartialMasters,
                           "vertex " + std::to_string(u) + " has no master");

  e.outer_face_rule("R1");
  e.y_rule("R2");

  for (Vertex u = 0; u < n; ++u) {
    if (!e.in_h(u) || d[u] != 2) continue;
    if (auto w = masters.master_of(u)) e.send(V(*w), V(u), 2, "R3");
    std::vector<int> big;
    for (int f : emb.faces_around(u))
      if (f != f0 && emb.face_degree(f) >= 4) big.push_back(f);
    std::sort(big.begin(), big.end());
    big.erase(std::unique(big.begin(), big.end()), big.end());
    if (big.empty()) continue;
    if (big.size() > 1)
      e.res_.notes.push_back("R3: 2-vertex " + std::to_string(u) + " lies on " +
                             std::to_string(big.size()) + " faces of degree >= 4; paid by F " +
                             std::to_string(big.front()));
    e.send(F(big.front()), V(u), 2, "R3");
  }
  e.end_rule("R3");

  for (Vertex u = 0; u < n; ++u) {
    if (!e.in_h(u) || d[u] != 3) continue;
    if (auto w = masters.master_of(u)) e.send(V(*w), V(u), 2, "R4");
    for (Vertex x : g.neighbors(u))
      if (e.in_h(x)) e.send(V(x), V(u), Charge(1, 2), "R4");
  }
  e.end_rule("R4");

  for (Vertex u = 0; u < n; ++u) {
    if (!e.in_h(u) || d[u] < 4 || d[u] > 5) continue;
    for (Vertex x : g.neighbors(u))
      if (e.in_h(x)) e.send(V(x), V(u), Charge(1, 2), "R5");
  }
  e.end_rule("R5");
  return e.take();
}

ChargeMap replay(const ChargeMap& initial, const TransferLedger& ledger) {
  ChargeMap m = initial;
  for (const auto& t : ledger) {
    m.at(t.source) -= t.amount;
    m.at(t.target) += t.amount;
  }
  return m;
}

ChargeReport charge_report(const ChargeMap& final_charges) {
  ChargeReport r;
  auto scan = [&](const std::vector<Charge>& cs, Element::Kind k) {
    for (int i = 0; i < static_cast<int>(cs.size()); ++i) {
      if (cs[i] < 0) r.negatives.push_back({{k, i}, cs[i]});
      if (cs[i] > 0) r.positives.push_back({{k, i}, cs[i]});
    }
  };
  scan(final_charges.vertex, Element::Kind::Vertex);
  scan(final_charges.face, Element::Kind::Face);
  r.total = final_charges.total();
  return r;
}

std::string format_charges(const ChargeMap& charges) {
  std::ostringstream out;
  for (int i = 0; i < static_cast<int>(charges.vertex.size()); ++i)
    out << "V " << i << ' ' << to_string(charges.vertex[i]) << '\n';
  for (int i = 0; i < static_cast<int>(charges.face.size()); ++i)
    out << "F " << i << ' ' << to_string(charges.face[i]) << '\n';
  out << "TOTAL " << to_string(charges.total()) << '\n';
  return out.str();
}

}  // namespace k5mf
