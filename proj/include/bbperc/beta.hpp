#pragma once
// Backbend sequences beta : Z+ -> Z+ u {inf} represented as a finite prefix
// followed by a cyclic tail. At record level h a path may retreat to level
// h - beta_h ("floor"). Text grammar:
//   const:<n> | inf | cyclic:<v0>,<v1>,... | prefix:<a0>,...,<am>;<tail>
// where each value is a nonnegative integer or `inf`.

#include <cstdint>
#include <string>
#include <vector>

namespace bbp {

inline constexpr uint32_t kBetaInf = UINT32_MAX;
inline constexpr int64_t kFloorNegInf = INT64_MIN;

struct BetaSeq {
  std::vector<uint32_t> prefix;
  std::vector<uint32_t> tail;  // nonempty, repeated cyclically after prefix

  // beta_h per the prefix/tail rule.
  uint32_t at(int64_t h) const;
  // h - beta_h; kFloorNegInf when beta_h = inf.
  int64_t floor_at(int64_t h) const;
  // Exhaustive-check horizon for eventually-cyclic sequences.
  int64_t horizon() const {
    return static_cast<int64_t>(prefix.size() + 2 * tail.size());
  }
  // Floor nondecreasing everywhere (equivalently beta_{h+1} <= beta_h + 1
  // under the convention that an inf entry only ever lowers the floor).
  // Decided exactly on the finite representation.
  bool monotone_floor() const;
  // Same infinite sequence: minimal tail period, prefix entries matching the
  // cyclic continuation absorbed into the tail.
  BetaSeq canonical() const;
  bool same_sequence(const BetaSeq& o) const;
  // this_h <= o_h for every h (exact; inf dominates everything).
  bool dominated_by(const BetaSeq& o) const;
  std::string to_string() const;

  bool operator==(const BetaSeq&) const = default;
};

BetaSeq parse_beta(const std::string& text);

// Convenience constructors.
BetaSeq beta_const(uint32_t b);
BetaSeq beta_unoriented();
BetaSeq beta_cyclic(std::vector<uint32_t> tail);

struct SequenceClass {
  enum class Kind {
    Oriented,              // beta == 0
    BBackbend,             // beta == b, b in N
    Unoriented,            // beta == inf
    KCyclic,               // purely periodic, finite entries, minimal period k
    CyclicLimitFromBelow,  // eventually k-cyclic, never above the limit values
    General,
  };
  Kind kind;
  uint32_t param = 0;  // b, or the (limit) period k where applicable

  bool operator==(const SequenceClass&) const = default;
};

SequenceClass classify(const BetaSeq& spec);

std::string to_string(SequenceClass::Kind k);

}  // namespace bbp
