#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "k5mf/configs.hpp"
#include "k5mf/embedding.hpp"

namespace k5mf {

// Compare charges with charges only: with C++20 rewritten comparisons,
// boost 1.74 recurses forever on rational == int.
using Charge = boost::rational<std::int64_t>;

std::string to_string(const Charge& c);  // always "num/den"

struct Element {
  enum class Kind { Vertex, Face };
  Kind kind = Kind::Vertex;
  int id = 0;
  friend auto operator<=>(const Element&, const Element&) = default;
};

std::string to_string(const Element& e);  // "V 3" or "F 7"

struct ChargeMap {
  std::vector<Charge> vertex;
  std::vector<Charge> face;

  Charge& at(Element e) { return e.kind == Element::Kind::Vertex ? vertex[e.id] : face[e.id]; }
  const Charge& at(Element e) const {
    return e.kind == Element::Kind::Vertex ? vertex[e.id] : face[e.id];
  }
  Charge total() const;
  friend bool operator==(const ChargeMap&, const ChargeMap&) = default;
};

struct Transfer {
  Element source;
  Element target;
  Charge amount;
  std::string rule;  // "R1".."R7"
  friend bool operator==(const Transfer&, const Transfer&) = default;
};

using TransferLedger = std::vector<Transfer>;

class DischargeError : public std::runtime_error {
 public:
  enum class Kind { InvalidY, PartialMasters, ConservationBroken };
  DischargeError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct DischargeResult {
  ChargeMap charges;
  TransferLedger ledger;
  // Situations the rules leave open, e.g. a 2-vertex on two 4+-faces.
  std::vector<std::string> notes;
};

// d(v) - 6 on vertices, 2d(f) - 6 on faces other than the outer face
// f0 = emb.outer_face(), 2d(f0) + 6 on f0.
ChargeMap initial_charges(const PlaneEmbedding& emb);

DischargeResult apply_rules_L31(const PlaneEmbedding& emb, std::span<const Vertex> Y,
                                const ChargeMap& initial);

DischargeResult apply_rules_L32(const PlaneEmbedding& emb, std::span<const Vertex> Y,
                                const MasterAssignment& masters, const ChargeMap& initial);

ChargeMap replay(const ChargeMap& initial, const TransferLedger& ledger);

struct ChargeReport {
  std::vector<std::pair<Element, Charge>> negatives;
  std::vector<std::pair<Element, Charge>> positives;
  Charge total;
};

ChargeReport charge_report(const ChargeMap& final_charges);

// "V <id> <num>/<den>" per vertex, "F <id> <num>/<den>" per face, then
// "TOTAL <num>/<den>".
std::string format_charges(const ChargeMap& charges);

}  // namespace k5mf
