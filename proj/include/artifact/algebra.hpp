#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "artifact/cartan.hpp"
#include "artifact/lweight.hpp"
#include "artifact/scalar.hpp"

namespace artifact {

// Sorting order of kinds fixes the canonical order inside H/K blocks.
enum class Kind : int { Eminus = 0, H = 1, K = 2, Kinv = 3, Eplus = 4 };

struct GenSym {
  Kind kind = Kind::Eminus;
  int node = 1;
  int k = 0;  // point exponent (0 for K, Kinv)
  int m = 0;  // derivative index (0 for K, Kinv)

  static GenSym Em(int i, int k, int m) { return {Kind::Eminus, i, k, m}; }
  static GenSym Ep(int i, int k, int m) { return {Kind::Eplus, i, k, m}; }
  static GenSym Hs(int i, int k, int m) { return {Kind::H, i, k, m}; }
  static GenSym Ks(int i) { return {Kind::K, i, 0, 0}; }
  static GenSym Kinvs(int i) { return {Kind::Kinv, i, 0, 0}; }

  bool is_E() const { return kind == Kind::Eminus || kind == Kind::Eplus; }
  bool is_Ktype() const { return kind == Kind::K || kind == Kind::Kinv; }
  int sign() const { return kind == Kind::Eplus ? 1 : -1; }  // only for E
  GenSym with_m(int mm) const { return {kind, node, k, mm}; }
  std::string str() const;
  friend auto operator<=>(const GenSym&, const GenSym&) = default;
};

using Word = std::vector<GenSym>;

int filtration_degree(const Word& w);
std::string word_str(const Word& w);
Word parse_word(const std::string& s);

class Element {
 public:
  explicit Element(int N = 1) : N_(N) {}
  static Element word(int N, Word w, const Scalar& c = Scalar(1));
  static Element scalar(int N, const Scalar& c) { return word(N, {}, c); }

  int trunc() const { return N_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Word, Scalar>& terms() const { return terms_; }
  Scalar coeff(const Word& w) const;

  void add(const Word& w, const Scalar& c);  // drops words of degree >= N
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Scalar& c);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Scalar& c) { return a *= c; }
  friend Element operator*(const Scalar& c, Element a) { return a *= c; }
  friend Element operator*(const Element& a, const Element& b);
  friend bool operator==(const Element& a, const Element& b) {
    return a.N_ == b.N_ && a.terms_ == b.terms_;
  }
  std::string str() const;

 private:
  int N_;
  std::map<Word, Scalar> terms_;
};

// ---------------------------------------------------------------- sticking graphs

struct StickingGraph {
  std::vector<std::pair<int, int>> verts;  // (node, exponent)
  std::vector<std::pair<int, int>> edges;  // indices into verts
};

StickingGraph sticking_graph(const CartanData& cd, const std::vector<std::pair<int, int>>& verts);
bool has_directed_cycle(const StickingGraph& g);
// Whether the Serre configuration {(i,a_1..a_s),(j,b)} is a relabelled progression
// a_{sigma(t)} = b + B_ij + (t-1) B_ii.
bool serre_progression(const CartanData& cd, int i, const std::vector<int>& a, int j, int b);

// Points of the cyclic Serre letters: p_t = b - sign*(B_ij + (t-1) B_ii), t = 1..s.
std::vector<int> serre_points(const CartanData& cd, int i, int j, int b, int sign);

}  // namespace artifact
