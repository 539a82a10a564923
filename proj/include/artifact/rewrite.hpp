#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "artifact/algebra.hpp"

namespace artifact {

struct StuckPair : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Relation-driven rewriting in A(g, q, P) mod F_N. Base point a = 1, so a point is q^k.
// Pair rules are memoized; the object is safe to share between threads.
class Rewriter {
 public:
  Rewriter(CartanData cd, PointSet P, int N);

  const CartanData& cartan_data() const { return cd_; }
  const PointSet& points() const { return P_; }
  int trunc() const { return N_; }

  // g1*g2 with g2 moved to the left of g1 where the relations allow.
  Element swap_adjacent(const GenSym& g1, const GenSym& g2) const;

  // L_m R_n rewritten into words R L via the E-E / H-E exchange relations; L is H or an E of R's sign.
  Element move_right_left(const GenSym& L, const GenSym& R) const;
  // R_n L_m rewritten into words L R (the opposite direction).
  Element move_left_right(const GenSym& R, const GenSym& L) const;

  // A single exchange relation solved for L_m R_n, without recursion.
  Element solve_step(const GenSym& L, const GenSym& R) const;

  Element triangular_form(const Element& x) const;
  Element normal_form_sl2(const Element& x) const;

  // Coefficient q^{e} with which K_i moves right past E^{sign}_j: K_i E_j = q^{sign B_ij} E_j K_i.
  Scalar k_factor(int i, const GenSym& e) const { return Scalar::q(e.sign() * cd_.B(i, e.node)); }

  // pieces of the relations
  Element hk_substitute(int i, int k) const;  // H_{i,k,0} through the sum rule with K

 private:
  CartanData cd_;
  PointSet P_;
  int N_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<GenSym, GenSym>, Element> cache_rl_, cache_lr_, cache_same_;

  Element same_family(const GenSym& x, const GenSym& y) const;
  Element rewrite_pair_triangular(const GenSym& a, const GenSym& b) const;
  Element rewrite_pair_sl2(const GenSym& a, const GenSym& b) const;
  Element canonical_middle(const Word& mid) const;
  bool sl2_bad(const GenSym& a, const GenSym& b) const;
};

}  // namespace artifact
