// Bit-matrix calculus of binary relations over a finite point set.
//
// Relations are stored as row bit-vectors (64-bit words). Complement is
// always taken relative to a surrounding equivalence relation E; the
// absolute complement is complement_in(R, full(n)).
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qra/errors.hpp"

namespace qra {

class BinRel {
 public:
  BinRel() = default;
  explicit BinRel(int n)
      : n_(n), words_(n <= 0 ? 0 : (n + 63) / 64),
        bits_(static_cast<size_t>(n_) * words_, 0) {}

  static BinRel identity(int n);
  static BinRel full(int n);
  static BinRel from_pairs(int n, const std::vector<std::pair<int, int>>& ps);

  int points() const { return n_; }

  bool at(int i, int j) const {
    return (bits_[row(i) + static_cast<size_t>(j >> 6)] >> (j & 63)) & 1u;
  }
  void set(int i, int j, bool v = true) {
    uint64_t m = uint64_t{1} << (j & 63);
    size_t w = row(i) + static_cast<size_t>(j >> 6);
    if (v)
      bits_[w] |= m;
    else
      bits_[w] &= ~m;
  }

  BinRel operator&(const BinRel& o) const;
  BinRel operator|(const BinRel& o) const;
  BinRel minus(const BinRel& o) const;  // set difference
  bool subset_of(const BinRel& o) const;
  bool operator==(const BinRel& o) const {
    return n_ == o.n_ && bits_ == o.bits_;
  }
  bool operator!=(const BinRel& o) const { return !(*this == o); }

  bool empty() const;
  size_t count() const;
  std::vector<std::pair<int, int>> pairs() const;

  const std::vector<uint64_t>& raw() const { return bits_; }

 private:
  size_t row(int i) const { return static_cast<size_t>(i) * words_; }
  friend BinRel compose(const BinRel&, const BinRel&);
  friend BinRel converse(const BinRel&);

  int n_ = 0;
  int words_ = 0;
  std::vector<uint64_t> bits_;
};

BinRel compose(const BinRel& r, const BinRel& s);  // DimensionMismatch
BinRel converse(const BinRel& r);
BinRel complement_in(const BinRel& r, const BinRel& e);  // NotSubsetOfE

// Total order used wherever element pools must be deterministic:
// by cardinality first, then row-major bit order (0 before 1 at the first
// differing pair).
bool rel_less(const BinRel& a, const BinRel& b);

// Graph of a function i -> f[i].
BinRel graph_of(const std::vector<int>& f);

// A validated poset on points 0..n-1.
struct PointSet {
  int n = 0;
  BinRel leq;
};

// Checks reflexivity, antisymmetry, transitivity.
PointSet make_point_set(int n, BinRel leq);

// R is an up-set of (E, [[preceq]]) where (u,v) [[preceq]] (x,y) iff x <= u
// and v <= y. Equivalent to leq ; R ; leq == R. Throws NotSubsetOfE.
bool is_upset(const PointSet& order, const BinRel& e, const BinRel& r);

struct GraphIdentityVerdict {
  bool left_ok = false;   // (gamma ; R)^c == gamma ; R^c
  bool right_ok = false;  // (R ; gamma)^c == R^c ; gamma
  bool holds() const { return left_ok && right_ok; }
};

// gamma must be the graph of a bijection (gamma~ ; gamma = id = gamma ;
// gamma~) with gamma, R contained in E. Throws NotABijection / NotSubsetOfE.
GraphIdentityVerdict graph_identities_check(const BinRel& gamma,
                                            const BinRel& r, const BinRel& e);

}  // namespace qra
