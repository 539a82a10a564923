#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "artifact/linalg.hpp"
#include "artifact/relations.hpp"
#include "artifact/rewrite.hpp"

namespace artifact {

using LetterKey = std::vector<std::pair<int, int>>;  // sorted multiset of (node, point) of E^- letters

struct Block {
  LetterKey key;
  int layer = 0;
  LWeight weight;
  std::vector<Word> basis;  // representative E^- words w, basis vector w.v
  std::vector<int> degree;  // filtration degree of each representative
  int dim() const { return static_cast<int>(basis.size()); }
};

struct ModuleOptions {
  int depth = -1;             // max E^- word length; -1 picks a default
  bool prefer_sl2_normal = true;
};

// Simple highest-l-weight module of A/F_N, built layer by layer. A vector at layer d+1 is
// determined by its images under all E^+ in layer d, so each layer is the row space of those images.
class HWModule {
 public:
  HWModule(const Rewriter& rw, const LWeight& hw, const ModuleOptions& opt = {});

  const Rewriter& rewriter() const { return rw_; }
  const LWeight& highest_weight() const { return hw_; }
  const HighestWeightData& eigen() const { return eig_; }
  int depth() const { return depth_; }
  // True when the last computed layer is empty, i.e. the whole module fits in the window.
  bool complete() const { return complete_; }
  int dim() const;
  const std::vector<Block>& blocks() const { return blocks_; }
  int find_block(const LetterKey& key) const;  // -1 if absent (zero weight space)
  std::vector<int> layer_dims() const;

  // Target block of a generator from block b: >=0 index, -1 for the zero space, -2 outside the window.
  int target(const GenSym& g, int b) const;
  // Matrix of g from block b to target(g, b); requires target >= 0.
  Mat action(const GenSym& g, int b) const;
  // Composite action of a word (rightmost letter first); nullopt when the word leaves the window.
  // dst is set to -1 when the word maps b to zero.
  std::optional<Mat> word_action(const Word& w, int b, int& dst) const;
  std::optional<Mat> element_action(const Element& e, int b, int& dst) const;
  // Coordinates of w.v in the block of w's letters; nullopt when w leaves the window.
  std::optional<Vec> word_vector(const Word& w, int& dst) const;

  std::vector<GenSym> letters(Kind kd) const;

 private:
  const Rewriter& rw_;
  LWeight hw_;
  HighestWeightData eig_;
  int N_;
  int depth_;
  bool complete_ = false;
  std::vector<Block> blocks_;
  std::map<LetterKey, int> index_;
  std::map<std::pair<GenSym, int>, Mat> em_, ep_, h_;  // (letter, source block)
  std::vector<std::vector<Scalar>> kscal_;            // K_i eigenvalue per block

  void build_layer0();
  bool build_next_layer(int d, const ModuleOptions& opt);
  void build_h(int b, const std::vector<std::pair<GenSym, std::pair<int, int>>>& origin);
  Scalar k_value(int i, const LetterKey& key) const;
};

LetterKey key_add(LetterKey k, int node, int point);
std::optional<LetterKey> key_remove(LetterKey k, int node, int point);
LetterKey key_of(const Word& w);
LWeight weight_of(const CartanData& cd, const LWeight& hw, const LetterKey& key);
bool is_sl2_normal(const Word& w);

// Words allowed in an A1 normal form with the given letter multiset and filtration degree < N.
std::vector<Word> sl2_normal_words(const LetterKey& key, int N);

// --- queries -------------------------------------------------------------

struct SingularReport {
  std::vector<Word> words;              // spanning words of the induced weight space
  std::vector<Word> singular_words;     // words whose vector is itself singular
  std::vector<Element> combinations;    // basis of singular combinations of the remaining words
};
// Singular vectors of the induced module at a weight: vectors of the weight space whose E^+ images
// vanish in the simple quotient one layer up. Spanning words are the A1 normal words.
SingularReport singular_vectors(const HWModule& mod, const LWeight& weight);

struct QCharEntry {
  LWeight weight;
  int mult;
  int layer;
  std::vector<Word> basis;
};
struct QCharArrow {
  int from, to;  // indices into entries
  int node, point;
};
struct QCharacter {
  std::vector<QCharEntry> entries;
  std::vector<QCharArrow> arrows;
};
QCharacter qcharacter(const HWModule& mod);
std::string qcharacter_dot(const QCharacter& qc, bool rank1);

// Relation fidelity: every catalog relation instance (terms of degree >= N dropped) acts as zero.
// check_filtration: every E^- word of filtration degree >= N acts as zero.
struct FidelityFailure {
  std::string family, params;
  int source_block = -1, target_block = -1;
  Vec residual;  // in the target block, applied to basis vector `column` of the source
  int column = -1;
};
struct FidelityReport {
  bool ok = true;
  int instances_checked = 0;
  std::vector<FidelityFailure> failures;
};
FidelityReport check_relations(const HWModule& mod, const CatalogOptions& opt = {}, int max_failures = 1);
bool check_filtration(const HWModule& mod, std::string* why = nullptr);

struct ObstructionReport {
  bool consistent = true;
  int dim = 0;
  std::vector<std::string> chain;  // derivation forcing v = 0
};
ObstructionReport truncation_obstruction(const Rewriter& rw, const LWeight& hw, const ModuleOptions& opt = {});

// --- evaluation-module oracles -------------------------------------------------

// q-character of a fundamental module in type A_n, or of a q-string Y_k Y_{k+2} ... in A1.
std::map<LWeight, int> qchar_fundamental_A(const CartanData& cd, int node, int k);
std::map<LWeight, int> qchar_string_A1(int k, int len);
std::map<LWeight, int> qchar_product(const std::map<LWeight, int>& x, const std::map<LWeight, int>& y);

}  // namespace artifact
