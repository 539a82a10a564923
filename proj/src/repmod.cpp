#include "artifact/repmod.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>

namespace artifact {

LetterKey key_add(LetterKey k, int node, int point) {
  k.insert(std::upper_bound(k.begin(), k.end(), std::make_pair(node, point)), {node, point});
  return k;
}

std::optional<LetterKey> key_remove(LetterKey k, int node, int point) {
  auto it = std::find(k.begin(), k.end(), std::make_pair(node, point));
  if (it == k.end()) return std::nullopt;
  k.erase(it);
  return k;
}

LetterKey key_of(const Word& w) {
  LetterKey k;
  for (const auto& g : w) k.emplace_back(g.node, g.k);
  std::sort(k.begin(), k.end());
  return k;
}

LWeight weight_of(const CartanData& cd, const LWeight& hw, const LetterKey& key) {
  LWeight w = hw;
  for (auto [i, k] : key) w = apply_aroot_inv(cd, w, i, k);
  return w;
}

bool is_sl2_normal(const Word& w) {
  for (std::size_t t = 0; t + 1 < w.size(); ++t) {
    auto a = std::make_pair(w[t].k, w[t].m), b = std::make_pair(w[t + 1].k, w[t + 1].m);
    if (w[t].kind == Kind::Eminus ? !(a < b) : !(a > b)) return false;
  }
  return true;
}

std::vector<Word> sl2_normal_words(const LetterKey& key, int N) {
  std::vector<std::pair<int, int>> groups;  // (point, count), points ascending
  for (auto [i, k] : key) {
    if (!groups.empty() && groups.back().first == k) ++groups.back().second;
    else groups.emplace_back(k, 1);
  }
  std::vector<Word> out;
  Word cur;
  std::function<void(std::size_t, int, int, int)> rec = [&](std::size_t g, int left, int minm, int deg) {
    if (g == groups.size()) {
      out.push_back(cur);
      return;
    }
    if (left == 0) {
      if (g + 1 < groups.size()) rec(g + 1, groups[g + 1].second, 0, deg);
      else rec(g + 1, 0, 0, deg);
      return;
    }
    for (int m = minm; deg + m < N; ++m) {
      cur.push_back(GenSym::Em(1, groups[g].first, m));
      rec(g, left - 1, m + 1, deg + m);
      cur.pop_back();
    }
  };
  if (groups.empty()) return {Word{}};
  rec(0, groups[0].second, 0, 0);
  return out;
}

// ---------------------------------------------------------------- HWModule

namespace {

// Height of lambda - w0(lambda) plus one, lambda = sum of Y powers per node; bounds the E^- word
// length in a finite-dimensional module, and the extra layer confirms completeness.
int default_depth(const CartanData& cd, const LWeight& hw) {
  const int n = cd.n;
  std::vector<double> lam(n, 0.0);
  for (auto& [key, e] : hw.y) lam[key.first - 1] += std::abs(e);
  // solve C x = 2 lambda: 2 lambda in simple-root coordinates
  std::vector<std::vector<double>> a(n, std::vector<double>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = cd.cm[i][j];
    a[i][n] = 2 * lam[i];
  }
  for (int c = 0; c < n; ++c) {
    int p = c;
    for (int r = c + 1; r < n; ++r)
      if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
    std::swap(a[c], a[p]);
    for (int r = 0; r < n; ++r) {
      if (r == c) continue;
      double f = a[r][c] / a[c][c];
      for (int t = c; t <= n; ++t) a[r][t] -= f * a[c][t];
    }
  }
  double h = 0;
  for (int i = 0; i < n; ++i) h += a[i][n] / a[i][i];
  return static_cast<int>(std::lround(h)) + 1;
}

}  // namespace

HWModule::HWModule(const Rewriter& rw, const LWeight& hw, const ModuleOptions& opt)
    : rw_(rw), hw_(hw), N_(rw.trunc()) {
  const CartanData& cd = rw_.cartan_data();
  for (auto& [key, e] : hw_.y)
    if (key.first < 1 || key.first > cd.n) throw std::invalid_argument("highest weight uses a node outside the Cartan data");
  eig_ = h_eigenvalues(hw_, cd);
  int need = 1;
  for (int i = 1; i <= cd.n; ++i)
    for (auto [k, o] : eig_.poles[i - 1]) {
      if (!rw_.points().contains(i, k))
        throw std::invalid_argument("pole of gamma_" + std::to_string(i) + " at exponent " + std::to_string(k) +
                                    " is not in P");
      need = std::max(need, o);
    }
  if (need > N_)
    throw std::invalid_argument("pole order needs truncation N >= " + std::to_string(need));
  depth_ = opt.depth >= 0 ? opt.depth : default_depth(cd, hw_);
  build_layer0();
  for (int d = 0; d < depth_; ++d)
    if (!build_next_layer(d, opt)) {
      complete_ = true;
      break;
    }
}

int HWModule::dim() const {
  int s = 0;
  for (const auto& b : blocks_) s += b.dim();
  return s;
}

int HWModule::find_block(const LetterKey& key) const {
  auto it = index_.find(key);
  return it == index_.end() ? -1 : it->second;
}

std::vector<int> HWModule::layer_dims() const {
  std::vector<int> d;
  for (const auto& b : blocks_) {
    if (static_cast<int>(d.size()) <= b.layer) d.resize(b.layer + 1, 0);
    d[b.layer] += b.dim();
  }
  return d;
}

std::vector<GenSym> HWModule::letters(Kind kd) const {
  std::vector<GenSym> out;
  const CartanData& cd = rw_.cartan_data();
  for (int i = 1; i <= cd.n; ++i)
    for (int k : rw_.points().at(i))
      for (int m = 0; m < N_; ++m) out.push_back(GenSym{kd, i, k, m});
  return out;
}

Scalar HWModule::k_value(int i, const LetterKey& key) const {
  Scalar v = eig_.k_eig[i - 1];
  int e = 0;
  for (auto [j, k] : key) e -= rw_.cartan_data().B(i, j);
  return v * Scalar::q(e);
}

void HWModule::build_layer0() {
  Block b;
  b.layer = 0;
  b.weight = hw_;
  b.basis.push_back({});
  b.degree.push_back(0);
  blocks_.push_back(b);
  index_[{}] = 0;
  kscal_.push_back({});
  for (int i = 1; i <= rw_.cartan_data().n; ++i) kscal_[0].push_back(k_value(i, {}));
  for (const auto& h : letters(Kind::H)) {
    Mat m(1, 1);
    m(0, 0) = eig_.h(h.node, h.k, h.m);
    h_[{h, 0}] = m;
  }
}

namespace {

struct Candidate {
  GenSym g;
  int src, col;
  Word word;
  int degree;
};

struct Segment {
  GenSym h;
  int block, offset, size;
};

}  // namespace

bool HWModule::build_next_layer(int d, const ModuleOptions& opt) {
  const CartanData& cd = rw_.cartan_data();
  std::map<LetterKey, std::vector<Candidate>> cands;
  const auto em_letters = letters(Kind::Eminus);
  const auto ep_letters = letters(Kind::Eplus);
  const int nblocks = static_cast<int>(blocks_.size());
  for (int b = 0; b < nblocks; ++b) {
    if (blocks_[b].layer != d) continue;
    for (const auto& g : em_letters) {
      LetterKey key = key_add(blocks_[b].key, g.node, g.k);
      for (int c = 0; c < blocks_[b].dim(); ++c) {
        Word w{g};
        const Word& r = blocks_[b].basis[c];
        w.insert(w.end(), r.begin(), r.end());
        cands[key].push_back({g, b, c, w, g.m + blocks_[b].degree[c]});
      }
    }
  }
  bool any = false;
  for (auto& [key, list] : cands) {
    std::vector<Segment> segs;
    int width = 0;
    for (const auto& h : ep_letters) {
      auto t = key_remove(key, h.node, h.k);
      if (!t) continue;
      int tb = find_block(*t);
      if (tb < 0) continue;
      segs.push_back({h, tb, width, blocks_[tb].dim()});
      width += blocks_[tb].dim();
    }
    auto stacked = [&](const Candidate& c) {
      Vec s(width);
      if (c.degree >= N_) return s;
      const LetterKey& kb = blocks_[c.src].key;
      for (const auto& seg : segs) {
        Vec comp(seg.size);
        if (auto sk = key_remove(kb, seg.h.node, seg.h.k)) {
          int sb = find_block(*sk);
          if (sb >= 0) {
            Vec x = ep_.at({seg.h, c.src}).column(c.col);
            auto it = em_.find({c.g, sb});
            if (it != em_.end()) {
              Vec y = it->second * x;
              for (int t = 0; t < seg.size; ++t) comp[t] += y[t];
            }
          }
        }
        if (seg.h.node == c.g.node && seg.h.k == c.g.k && seg.h.m + c.g.m < N_) {
          Vec y = h_.at({GenSym::Hs(c.g.node, c.g.k, seg.h.m + c.g.m), c.src}).column(c.col);
          for (int t = 0; t < seg.size; ++t) comp[t] += y[t];
        }
        for (int t = 0; t < seg.size; ++t) s[seg.offset + t] = comp[t];
      }
      return s;
    };
    std::vector<Vec> img(list.size());
    for (std::size_t t = 0; t < list.size(); ++t) img[t] = stacked(list[t]);
    std::vector<std::size_t> order(list.size());
    for (std::size_t t = 0; t < order.size(); ++t) order[t] = t;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      const auto& a = list[x];
      const auto& b = list[y];
      if (opt.prefer_sl2_normal && cd.n == 1) {
        bool na = is_sl2_normal(a.word), nb = is_sl2_normal(b.word);
        if (na != nb) return na;
      }
      if (a.degree != b.degree) return a.degree < b.degree;
      return a.word < b.word;
    });
    RowSpace rs(width);
    Block nb;
    nb.key = key;
    nb.layer = d + 1;
    nb.weight = weight_of(cd, hw_, key);
    std::vector<std::pair<GenSym, std::pair<int, int>>> origin;
    std::vector<Vec> basis_img;
    for (std::size_t t : order) {
      if (list[t].degree >= N_ || is_zero(img[t])) continue;
      if (rs.insert(img[t])) {
        nb.basis.push_back(list[t].word);
        nb.degree.push_back(list[t].degree);
        origin.push_back({list[t].g, {list[t].src, list[t].col}});
        basis_img.push_back(img[t]);
      }
    }
    if (nb.dim() == 0) continue;
    any = true;
    const int id = static_cast<int>(blocks_.size());
    blocks_.push_back(nb);
    index_[key] = id;
    kscal_.push_back({});
    for (int i = 1; i <= cd.n; ++i) kscal_[id].push_back(k_value(i, key));
    // E^- into the new block
    for (std::size_t t = 0; t < list.size(); ++t) {
      auto mk = std::make_pair(list[t].g, list[t].src);
      auto it = em_.find(mk);
      if (it == em_.end()) it = em_.emplace(mk, Mat(nb.dim(), blocks_[list[t].src].dim())).first;
      if (list[t].degree >= N_ || is_zero(img[t])) continue;
      auto coords = rs.express(img[t]);
      if (!coords) throw std::logic_error("candidate outside its own span");
      for (int r = 0; r < nb.dim(); ++r) it->second(r, list[t].col) = (*coords)[r];
    }
    // E^+ out of the new block
    for (const auto& seg : segs) {
      Mat m(seg.size, nb.dim());
      for (int c = 0; c < nb.dim(); ++c)
        for (int r = 0; r < seg.size; ++r) m(r, c) = basis_img[c][seg.offset + r];
      ep_[{seg.h, id}] = m;
    }
    build_h(id, origin);
  }
  return any;
}

void HWModule::build_h(int b, const std::vector<std::pair<GenSym, std::pair<int, int>>>& origin) {
  const Block& blk = blocks_[b];
  for (const auto& X : letters(Kind::H)) {
    Mat m(blk.dim(), blk.dim());
    for (int c = 0; c < blk.dim(); ++c) {
      const GenSym& g = origin[c].first;
      auto [src, col] = origin[c].second;
      Element moved = rw_.move_right_left(X, g);
      Vec out(blk.dim());
      for (auto& [w, coef] : moved.terms()) {
        if (w.size() != 2 || w[0].kind != Kind::Eminus) throw std::logic_error("unexpected H-E rewrite shape");
        const GenSym& gp = w[0];
        const GenSym& Y = w[1];
        Vec x(blocks_[src].dim());
        if (Y.kind == Kind::H) {
          x = h_.at({Y, src}).column(col);
        } else if (Y.kind == Kind::K) {
          x[col] = kscal_[src][Y.node - 1];
        } else if (Y.kind == Kind::Kinv) {
          x[col] = kscal_[src][Y.node - 1].inverse();
        } else {
          throw std::logic_error("unexpected H-E rewrite letter");
        }
        auto it = em_.find({gp, src});
        if (it == em_.end()) continue;
        Vec y = it->second * x;
        for (int r = 0; r < blk.dim(); ++r) out[r] += coef * y[r];
      }
      for (int r = 0; r < blk.dim(); ++r) m(r, c) = out[r];
    }
    h_[{X, b}] = m;
  }
}

int HWModule::target(const GenSym& g, int b) const {
  const Block& blk = blocks_[b];
  switch (g.kind) {
    case Kind::Eminus: {
      if (g.m >= N_ || !rw_.points().contains(g.node, g.k)) return -1;
      int t = find_block(key_add(blk.key, g.node, g.k));
      if (t >= 0) return t;
      return (complete_ || blk.layer < depth_) ? -1 : -2;
    }
    case Kind::Eplus: {
      if (g.m >= N_ || !rw_.points().contains(g.node, g.k)) return -1;
      auto k = key_remove(blk.key, g.node, g.k);
      if (!k) return -1;
      return find_block(*k);
    }
    case Kind::H:
      if (g.m >= N_ || !rw_.points().contains(g.node, g.k)) return -1;
      return b;
    default:
      return b;
  }
}

Mat HWModule::action(const GenSym& g, int b) const {
  int t = target(g, b);
  if (t < 0) throw std::out_of_range("generator " + g.str() + " has no target block");
  switch (g.kind) {
    case Kind::Eminus: {
      auto it = em_.find({g, b});
      return it == em_.end() ? Mat(blocks_[t].dim(), blocks_[b].dim()) : it->second;
    }
    case Kind::Eplus: {
      auto it = ep_.find({g, b});
      return it == ep_.end() ? Mat(blocks_[t].dim(), blocks_[b].dim()) : it->second;
    }
    case Kind::H:
      return h_.at({g, b});
    case Kind::K:
    case Kind::Kinv: {
      Scalar s = kscal_[b][g.node - 1];
      if (g.kind == Kind::Kinv) s = s.inverse();
      Mat m(blocks_[b].dim(), blocks_[b].dim());
      for (int r = 0; r < m.rows; ++r) m(r, r) = s;
      return m;
    }
  }
  throw std::logic_error("unreachable");
}

std::optional<Mat> HWModule::word_action(const Word& w, int b, int& dst) const {
  Mat m = Mat::identity(blocks_[b].dim());
  int cur = b;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    int t = target(*it, cur);
    if (t == -2) return std::nullopt;
    if (t == -1) {
      dst = -1;
      return Mat();
    }
    m = action(*it, cur) * m;
    cur = t;
  }
  dst = cur;
  return m;
}

std::optional<Mat> HWModule::element_action(const Element& e, int b, int& dst) const {
  dst = -1;
  std::optional<Mat> sum;
  for (auto& [w, c] : e.terms()) {
    int t = -1;
    auto m = word_action(w, b, t);
    if (!m) return std::nullopt;
    if (t < 0) continue;
    if (!sum) {
      dst = t;
      sum = c * *m;
    } else {
      if (t != dst) throw std::logic_error("relation is not weight homogeneous");
      sum = *sum + c * *m;
    }
  }
  if (!sum) return Mat();
  return sum;
}

std::optional<Vec> HWModule::word_vector(const Word& w, int& dst) const {
  auto m = word_action(w, 0, dst);
  if (!m) return std::nullopt;
  if (dst < 0) return Vec();
  return m->column(0);
}

// ---------------------------------------------------------------- queries

SingularReport singular_vectors(const HWModule& mod, const LWeight& weight) {
  const auto& blocks = mod.blocks();
  int b = -1;
  for (std::size_t t = 0; t < blocks.size(); ++t)
    if (blocks[t].weight == weight) b = static_cast<int>(t);
  if (b < 0) throw std::invalid_argument("weight " + weight.str(true) + " is not a weight of the module");
  if (mod.rewriter().cartan_data().n != 1) throw std::invalid_argument("induced spanning words are only known in A1");
  SingularReport rep;
  const int N = mod.rewriter().trunc();
  rep.words = sl2_normal_words(blocks[b].key, N);
  std::vector<Word> rest;
  std::vector<Vec> cols;
  for (const auto& w : rep.words) {
    int dst = -1;
    auto v = mod.word_vector(w, dst);
    if (!v) throw std::out_of_range("word leaves the computed window");
    if (dst < 0 || is_zero(*v)) {
      rep.singular_words.push_back(w);
    } else {
      rest.push_back(w);
      cols.push_back(*v);
    }
  }
  Mat m(blocks[b].dim(), static_cast<int>(cols.size()));
  for (int c = 0; c < m.cols; ++c)
    for (int r = 0; r < m.rows; ++r) m(r, c) = cols[c][r];
  for (const auto& x : kernel(m)) {
    Element e(N);
    for (std::size_t t = 0; t < rest.size(); ++t) e.add(rest[t], x[t]);
    rep.combinations.push_back(e);
  }
  return rep;
}

QCharacter qcharacter(const HWModule& mod) {
  QCharacter qc;
  const auto& blocks = mod.blocks();
  for (const auto& b : blocks) qc.entries.push_back({b.weight, b.dim(), b.layer, b.basis});
  const auto em = mod.letters(Kind::Eminus);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    std::set<std::pair<int, std::pair<int, int>>> seen;
    for (const auto& g : em) {
      int t = mod.target(g, static_cast<int>(b));
      if (t < 0) continue;
      if (seen.count({t, {g.node, g.k}})) continue;
      if (!mod.action(g, static_cast<int>(b)).is_zero()) {
        seen.insert({t, {g.node, g.k}});
        qc.arrows.push_back({static_cast<int>(b), t, g.node, g.k});
      }
    }
  }
  return qc;
}

std::string qcharacter_dot(const QCharacter& qc, bool rank1) {
  std::ostringstream os;
  os << "digraph qcharacter {\n  rankdir=TB;\n";
  for (std::size_t t = 0; t < qc.entries.size(); ++t) {
    const auto& e = qc.entries[t];
    os << "  n" << t << " [label=\"" << e.weight.str(rank1) << "\"";
    if (e.mult != 1) os << ", xlabel=\"x" << e.mult << "\"";
    os << "];\n";
  }
  for (const auto& a : qc.arrows)
    os << "  n" << a.from << " -> n" << a.to << " [label=\"A[" << a.node << "," << a.point << "]^-1\"];\n";
  os << "}\n";
  return os.str();
}

namespace {

int family_rank(const std::string& f) {
  static const std::vector<std::string> order{"EH", "EE", "EpEm", "HK", "K", "Serre"};
  auto it = std::find(order.begin(), order.end(), f);
  return static_cast<int>(it - order.begin());
}

}  // namespace

FidelityReport check_relations(const HWModule& mod, const CatalogOptions& opt, int max_failures) {
  FidelityReport rep;
  auto cat = relation_catalog(mod.rewriter().cartan_data(), mod.rewriter().points(), mod.rewriter().trunc(), opt);
  std::stable_sort(cat.begin(), cat.end(),
                   [](const auto& a, const auto& b) { return family_rank(a.family) < family_rank(b.family); });
  const auto& blocks = mod.blocks();
  std::vector<int> by_layer(blocks.size());
  for (std::size_t t = 0; t < blocks.size(); ++t) by_layer[t] = static_cast<int>(t);
  std::stable_sort(by_layer.begin(), by_layer.end(), [&](int x, int y) { return blocks[x].layer < blocks[y].layer; });
  for (int b : by_layer)
    for (const auto& inst : cat) {
      int dst = -1;
      auto m = mod.element_action(inst.expr, b, dst);
      if (!m) continue;
      ++rep.instances_checked;
      if (dst < 0 || m->is_zero()) continue;
      rep.ok = false;
      FidelityFailure f{inst.family, inst.params, b, dst, {}, -1};
      for (int c = 0; c < m->cols && f.column < 0; ++c) {
        Vec v = m->column(c);
        if (!is_zero(v)) {
          f.column = c;
          f.residual = v;
        }
      }
      rep.failures.push_back(f);
      if (static_cast<int>(rep.failures.size()) >= max_failures) return rep;
    }
  return rep;
}

bool check_filtration(const HWModule& mod, std::string* why) {
  const int N = mod.rewriter().trunc();
  const auto& blocks = mod.blocks();
  // F[b][e]: span of w.v with deg w >= e inside block b, kept as a basis
  std::vector<std::vector<RowSpace>> F;
  std::vector<std::vector<std::vector<Vec>>> basis(blocks.size(), std::vector<std::vector<Vec>>(N + 1));
  for (const auto& b : blocks) F.emplace_back(N + 1, RowSpace(b.dim()));
  auto add = [&](int b, int e, const Vec& v) {
    for (int f = 0; f <= e; ++f)
      if (F[b][f].insert(v)) basis[b][f].push_back(v);
  };
  add(0, 0, Vec{Scalar(1)});
  std::vector<int> order(blocks.size());
  for (std::size_t t = 0; t < blocks.size(); ++t) order[t] = static_cast<int>(t);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return blocks[x].layer < blocks[y].layer; });
  const auto em = mod.letters(Kind::Eminus);
  for (int b : order)
    for (const auto& g : em) {
      int t = mod.target(g, b);
      if (t < 0) continue;
      Mat a = mod.action(g, b);
      for (int e = 0; e <= N; ++e)
        for (const auto& v : basis[b][e]) {
          Vec w = a * v;
          if (!is_zero(w)) add(t, std::min(N, e + g.m), w);
        }
    }
  for (std::size_t b = 0; b < blocks.size(); ++b)
    if (F[b][N].rank() > 0) {
      if (why) *why = "a word of filtration degree >= " + std::to_string(N) + " acts nontrivially into block " + std::to_string(b);
      return false;
    }
  return true;
}

namespace {

std::string vec_str(const Block& b, const Vec& v) {
  Element e(1 << 20);
  for (int t = 0; t < b.dim(); ++t) e.add(b.basis[t], v[t]);
  std::string s = e.str();
  return "(" + s + ").v";
}

}  // namespace

ObstructionReport truncation_obstruction(const Rewriter& rw, const LWeight& hw, const ModuleOptions& opt) {
  ObstructionReport rep;
  // layers below d do not depend on the window, so the first failing window gives a valid chain
  const int full = opt.depth >= 0 ? opt.depth : default_depth(rw.cartan_data(), hw);
  std::unique_ptr<HWModule> held;
  FidelityReport fid;
  for (int d = std::min(1, full); d <= full; ++d) {
    ModuleOptions o = opt;
    o.depth = d;
    held = std::make_unique<HWModule>(rw, hw, o);
    fid = check_relations(*held);
    if (!fid.ok || held->complete()) break;
  }
  const HWModule& mod = *held;
  rep.dim = mod.dim();
  const auto& blocks = mod.blocks();
  const int N = rw.trunc();
  if (fid.ok) {
    std::string why;
    if (!check_filtration(mod, &why)) {
      rep.consistent = false;
      rep.chain.push_back(why);
      rep.chain.push_back("hence the highest weight module of A/F_" + std::to_string(N) + " is zero");
    }
    return rep;
  }
  rep.consistent = false;
  const auto& f = fid.failures.front();
  auto cat = relation_catalog(rw.cartan_data(), rw.points(), N);
  std::string expr;
  for (const auto& inst : cat)
    if (inst.family == f.family && inst.params == f.params) expr = inst.expr.str();
  const Block& src = blocks[f.source_block];
  std::ostringstream os;
  os << "in A/F_" << N << ": " << expr << " = 0  [" << f.family << " " << f.params << "]";
  rep.chain.push_back(os.str());
  Element sv(1 << 20);
  sv.add(src.basis[f.column], Scalar(1));
  rep.chain.push_back("applied to " + vec_str(src, [&] {
                        Vec e(src.dim());
                        e[f.column] = Scalar(1);
                        return e;
                      }()) + " it gives " + vec_str(blocks[f.target_block], f.residual) + ", which must vanish");
  Vec x = f.residual;
  int cur = f.target_block;
  while (blocks[cur].layer > 0) {
    bool moved = false;
    for (const auto& h : mod.letters(Kind::Eplus)) {
      int t = mod.target(h, cur);
      if (t < 0) continue;
      Vec y = mod.action(h, cur) * x;
      if (is_zero(y)) continue;
      rep.chain.push_back("but " + h.str() + " maps it to " + vec_str(blocks[t], y));
      x = y;
      cur = t;
      moved = true;
      break;
    }
    if (!moved) throw std::logic_error("nonzero vector without nonzero raising image");
  }
  rep.chain.push_back("so (" + x[0].str() + ") v = 0, a contradiction unless v = 0");
  return rep;
}

// ---------------------------------------------------------------- oracles

std::map<LWeight, int> qchar_fundamental_A(const CartanData& cd, int node, int k) {
  if (cd.label.empty() || cd.label[0] != 'A') throw std::invalid_argument("fundamental oracle is for type A");
  const int n = cd.n;
  if (node != 1 && node != n) throw std::invalid_argument("fundamental oracle covers the end nodes only");
  std::map<LWeight, int> out;
  LWeight w = y_monomial({{node, k, 1}});
  out[w] = 1;
  for (int t = 0; t < n; ++t) {
    int j = node == 1 ? 1 + t : n - t;
    w = apply_aroot_inv(cd, w, j, k + t);
    out[w] += 1;
  }
  return out;
}

std::map<LWeight, int> qchar_string_A1(int k, int len) {
  CartanData cd = cartan('A', 1);
  std::vector<std::tuple<int, int, int>> spec;
  for (int t = 0; t < len; ++t) spec.emplace_back(1, k + 2 * t, 1);
  LWeight w = y_monomial(spec);
  std::map<LWeight, int> out;
  out[w] = 1;
  for (int j = len - 1; j >= 0; --j) {
    w = apply_aroot_inv(cd, w, 1, k + 2 * j);
    out[w] += 1;
  }
  return out;
}

std::map<LWeight, int> qchar_product(const std::map<LWeight, int>& x, const std::map<LWeight, int>& y) {
  std::map<LWeight, int> out;
  for (auto& [a, m] : x)
    for (auto& [b, n] : y) out[a * b] += m * n;
  return out;
}

}  // namespace artifact
