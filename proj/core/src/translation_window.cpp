#include "quiverlab/translation_window.hpp"

#include "quiverlab/grading.hpp"
#include "quiverlab/linalg.hpp"
#include "quiverlab/walk.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace quiverlab {
namespace {

std::string copy_name(const std::string& name, int level) {
  return "(" + name + "," + std::to_string(level) + ")";
}

// Vertices (v, t) for every extended-quiver vertex v and t in [low, high];
// arrows are added by the callers.
TranslationWindow window_shell(const ReturningArrowQuiver& raq, WindowKind kind,
                               int low, int high, int tau_shift,
                               const char* op) {
  if (low > high)
    throw std::invalid_argument(std::string(op) +
                                ": the window range is empty (low > high)");
  TranslationWindow w;
  w.base = raq;
  w.kind = kind;
  w.low = low;
  w.high = high;
  w.tau_shift = tau_shift;
  w.margin = raq.base_degree + 1;
  const Quiver& eq = raq.bound.quiver;
  w.vertex_ids.assign(eq.vertex_count(), {});
  for (int v = 0; v < eq.vertex_count(); ++v) {
    for (int t = low; t <= high; ++t) {
      int id = w.bound.quiver.add_vertex(copy_name(eq.vertex_name(v), t));
      w.vertex_ids[v].push_back(id);
      w.vertex_base.push_back(v);
      w.vertex_level.push_back(t);
    }
  }
  return w;
}

int add_copy(TranslationWindow& w, int origin, int level, int source_vertex,
             int target_vertex) {
  const std::string& name = w.base.bound.quiver.arrow(origin).name;
  int id = w.bound.quiver.add_arrow(copy_name(name, level), source_vertex,
                                    target_vertex);
  w.arrow_origin.push_back(origin);
  w.arrow_level.push_back(level);
  return id;
}

// Window arrow ids indexed by (extended arrow, source level - low).
std::vector<std::vector<int>> copy_lookup(const TranslationWindow& w) {
  std::vector<std::vector<int>> at(
      w.base.bound.quiver.arrow_count(),
      std::vector<int>(std::max(0, w.level_count() - 1), -1));
  for (std::size_t a = 0; a < w.arrow_origin.size(); ++a) {
    int slot = w.arrow_level[a] - w.low;
    if (slot >= 0 && slot < static_cast<int>(at[w.arrow_origin[a]].size()))
      at[w.arrow_origin[a]][slot] = static_cast<int>(a);
  }
  return at;
}

// A relation row carried into another coordinate system; terms stay parallel
// but are not necessarily in canonical order.
using MappedRow = std::vector<PathTerm>;

MappedRow map_row(const Relation& row, const std::vector<int>& vertex_image,
                  const std::vector<int>& arrow_image) {
  MappedRow out;
  for (const PathTerm& term : row.terms) {
    Path p;
    p.source = vertex_image[term.path.source];
    p.target = vertex_image[term.path.target];
    for (int a : term.path.arrows) p.arrows.push_back(arrow_image[a]);
    out.push_back({term.coef, std::move(p)});
  }
  return out;
}

struct PathLess {
  bool operator()(const Path& a, const Path& b) const {
    return canonical_less(a, b);
  }
};

// True when the two row families span the same subspace in every
// (source, target, length) block.
bool equal_row_spans(const std::vector<MappedRow>& lhs,
                     const std::vector<MappedRow>& rhs) {
  using Key = std::tuple<int, int, std::size_t>;
  std::map<Key, std::pair<std::vector<const MappedRow*>,
                          std::vector<const MappedRow*>>>
      blocks;
  auto file_rows = [&](const std::vector<MappedRow>& rows, bool left) {
    for (const MappedRow& row : rows) {
      const Path& p = row.front().path;
      auto& slot = blocks[{p.source, p.target, p.arrows.size()}];
      (left ? slot.first : slot.second).push_back(&row);
    }
  };
  file_rows(lhs, true);
  file_rows(rhs, false);
  for (const auto& [key, slot] : blocks) {
    std::map<Path, std::int64_t, PathLess> columns;
    auto vectorize = [&](const std::vector<const MappedRow*>& rows) {
      std::vector<SparseVec> vecs;
      for (const MappedRow* row : rows) {
        std::vector<std::pair<std::int64_t, Rational>> terms;
        for (const PathTerm& term : *row) {
          auto col = static_cast<std::int64_t>(columns.size());
          auto [it, inserted] = columns.try_emplace(term.path, col);
          terms.emplace_back(it->second, term.coef);
        }
        vecs.push_back(make_sparse(std::move(terms)));
      }
      return vecs;
    };
    auto a = vectorize(slot.first);
    auto b = vectorize(slot.second);
    if (rref_rows(a) != rref_rows(b)) return false;
  }
  return true;
}

}  // namespace

std::optional<int> TranslationWindow::vertex_at(int base_vertex,
                                                int level) const {
  if (base_vertex < 0 ||
      base_vertex >= static_cast<int>(vertex_ids.size()) || level < low ||
      level > high)
    return std::nullopt;
  return vertex_ids[base_vertex][level - low];
}

std::optional<int> TranslationWindow::tau(int window_vertex) const {
  return vertex_at(vertex_base.at(window_vertex),
                   vertex_level.at(window_vertex) - tau_shift);
}

std::optional<int> TranslationWindow::tau_inverse(int window_vertex) const {
  return vertex_at(vertex_base.at(window_vertex),
                   vertex_level.at(window_vertex) + tau_shift);
}

TranslationWindow zq_first_window(const ReturningArrowQuiver& raq, int low,
                                  int high) {
  TranslationWindow w = window_shell(raq, WindowKind::first, low, high, 1,
                                     "zq_first_window");
  const Quiver& eq = raq.bound.quiver;
  std::vector<std::vector<int>> copies(eq.arrow_count());
  for (int a = 0; a < eq.arrow_count(); ++a) {
    const Arrow& ar = eq.arrow(a);
    bool crosses = raq.kinds[a] != ArrowKind::original;
    for (int t = low; t <= (crosses ? high - 1 : high); ++t) {
      int src = *w.vertex_at(ar.source, t);
      int tgt = *w.vertex_at(ar.target, t + (crosses ? 1 : 0));
      copies[a].push_back(add_copy(w, a, t, src, tgt));
    }
  }
  // A row lifted to start slab t crosses one slab per returning arrow; it is
  // materialized iff no crossing would leave the window.
  for (const Relation& row : raq.bound.relations) {
    for (int t = low; t <= high; ++t) {
      std::vector<PathTerm> terms;
      bool inside = true;
      for (const PathTerm& term : row.terms) {
        Path p;
        int slab = t;
        p.source = *w.vertex_at(term.path.source, slab);
        for (int a : term.path.arrows) {
          bool crosses = raq.kinds[a] != ArrowKind::original;
          if (crosses && slab + 1 > high) {
            inside = false;
            break;
          }
          p.arrows.push_back(copies[a][slab - low]);
          if (crosses) ++slab;
        }
        if (!inside) break;
        p.target = *w.vertex_at(term.path.target, slab);
        terms.push_back({term.coef, std::move(p)});
      }
      if (inside) w.bound.add_relation(std::move(terms));
    }
  }
  w.bound.normalize_relations();
  return w;
}

TranslationWindow zq_second_window(const ReturningArrowQuiver& raq, int low,
                                   int high) {
  TranslationWindow w = window_shell(raq, WindowKind::second, low, high,
                                     raq.base_degree + 1, "zq_second_window");
  const Quiver& eq = raq.bound.quiver;
  std::vector<std::vector<int>> copies(eq.arrow_count());
  for (int a = 0; a < eq.arrow_count(); ++a) {
    const Arrow& ar = eq.arrow(a);
    for (int m = low; m < high; ++m) {
      copies[a].push_back(add_copy(w, a, m, *w.vertex_at(ar.source, m),
                                   *w.vertex_at(ar.target, m + 1)));
    }
  }
  // Every row lifts to every start level that keeps it inside; the lift of a
  // path climbs one level per arrow, first-traversed arrow lowest.
  for (const Relation& row : raq.bound.relations) {
    for (int m = low; m + row.length <= high; ++m) {
      std::vector<PathTerm> terms;
      for (const PathTerm& term : row.terms) {
        Path p;
        p.source = *w.vertex_at(term.path.source, m);
        p.target = *w.vertex_at(term.path.target, m + row.length);
        int level = m;
        for (int a : term.path.arrows) p.arrows.push_back(copies[a][level++ - low]);
        terms.push_back({term.coef, std::move(p)});
      }
      w.bound.add_relation(std::move(terms));
    }
  }
  w.bound.normalize_relations();
  return w;
}

WindowEmbedding component_phi(const TranslationWindow& first,
                              const TranslationWindow& second) {
  const Quiver& eq1 = first.base.bound.quiver;
  const Quiver& eq2 = second.base.bound.quiver;
  bool same = eq1.vertex_count() == eq2.vertex_count() &&
              eq1.arrow_count() == eq2.arrow_count() &&
              first.base.base_degree == second.base.base_degree;
  for (int a = 0; same && a < eq1.arrow_count(); ++a)
    same = eq1.arrow(a).name == eq2.arrow(a).name &&
           eq1.arrow(a).source == eq2.arrow(a).source &&
           eq1.arrow(a).target == eq2.arrow(a).target;
  if (!same || first.kind != WindowKind::first ||
      second.kind != WindowKind::second)
    throw std::invalid_argument(
        "component_phi: expected a first- and a second-covering window over "
        "one returning arrow quiver");

  NiceGradingResult nice = compute_nice_grading(first.base.base.quiver);
  if (!nice.ok())
    throw std::invalid_argument(
        "component_phi: the underlying quiver is not nicely graded; the "
        "cycle " +
        walk_to_string(first.base.base.quiver, *nice.counterexample) +
        " has nonzero signed length");
  const Grading& u = *nice.grading;
  const int shift = first.base.base_degree + 1;

  WindowEmbedding phi;
  for (std::size_t fv = 0; fv < first.vertex_base.size(); ++fv) {
    int v = first.vertex_base[fv];
    int s = shift * first.vertex_level[fv] + static_cast<int>(u.at(v));
    std::optional<int> img = second.vertex_at(v, s);
    if (!img)
      throw std::invalid_argument(
          "component_phi: the second window does not reach level " +
          std::to_string(s) + "; enlarge it to hold the image");
    phi.vertex_image.push_back(*img);
  }

  std::vector<std::vector<int>> at2 = copy_lookup(second);
  const Quiver& wq1 = first.bound.quiver;
  for (int fa = 0; fa < wq1.arrow_count(); ++fa) {
    int origin = first.arrow_origin[fa];
    int src_img = phi.vertex_image[wq1.arrow(fa).source];
    int s = second.vertex_level[src_img];
    int img = s < second.high ? at2[origin][s - second.low] : -1;
    if (img < 0 || second.bound.quiver.arrow(img).target !=
                       phi.vertex_image[wq1.arrow(fa).target])
      throw std::logic_error("component_phi: arrow image missing");
    phi.arrow_image.push_back(img);
  }

  std::vector<MappedRow> mapped;
  for (const Relation& row : first.bound.relations)
    mapped.push_back(map_row(row, phi.vertex_image, phi.arrow_image));
  std::vector<int> back(second.bound.quiver.arrow_count(), -1);
  for (std::size_t fa = 0; fa < phi.arrow_image.size(); ++fa)
    back[phi.arrow_image[fa]] = static_cast<int>(fa);
  std::vector<MappedRow> inside;
  for (const Relation& row : second.bound.relations) {
    bool in_image = true;
    for (const PathTerm& term : row.terms)
      for (int a : term.path.arrows) in_image = in_image && back[a] >= 0;
    if (in_image) inside.emplace_back(row.terms.begin(), row.terms.end());
  }
  if (!equal_row_spans(mapped, inside))
    throw std::logic_error(
        "component_phi: relation rows do not match between the windows");
  return phi;
}

WindowEmbedding embed_multilayer(const MultilayerQuiver& layered,
                                 const TranslationWindow& window) {
  const int n = layered.base_degree;
  if (window.low > 0 || window.high < 2 * n + 2)
    throw std::invalid_argument(
        "embed_multilayer: the window is too small; it must cover levels 0 "
        "through " +
        std::to_string(2 * n + 2));

  const ReturningArrowQuiver& dbl = window.base;
  const Quiver& bq = layered.base.quiver;
  const Quiver& eq = dbl.bound.quiver;
  bool same = eq.vertex_count() == bq.vertex_count() &&
              dbl.base_degree == n + 1 && window.kind == WindowKind::second &&
              eq.arrow_count() >= bq.arrow_count();
  for (int v = 0; same && v < bq.vertex_count(); ++v)
    same = eq.vertex_name(v) == bq.vertex_name(v);
  for (int a = 0; same && a < bq.arrow_count(); ++a)
    same = dbl.kinds[a] == ArrowKind::original &&
           eq.arrow(a).name == bq.arrow(a).name &&
           eq.arrow(a).source == bq.arrow(a).source &&
           eq.arrow(a).target == bq.arrow(a).target;
  if (!same)
    throw std::invalid_argument(
        "embed_multilayer: the window is not a second-covering window over "
        "the doubled extension of the layered quiver's base");

  std::vector<int> returning_ids;
  std::vector<int> loop_of_vertex(eq.vertex_count(), -1);
  for (int a = 0; a < eq.arrow_count(); ++a) {
    if (dbl.kinds[a] == ArrowKind::returning) returning_ids.push_back(a);
    if (dbl.kinds[a] == ArrowKind::loop) {
      const Arrow& ar = eq.arrow(a);
      if (ar.source != ar.target || loop_of_vertex[ar.source] != -1)
        throw std::invalid_argument(
            "embed_multilayer: malformed doubled extension");
      loop_of_vertex[ar.source] = a;
    }
  }
  for (int v = 0; v < eq.vertex_count(); ++v)
    if (loop_of_vertex[v] < 0)
      throw std::invalid_argument(
          "embed_multilayer: malformed doubled extension");
  if (returning_ids.size() != layered.socle.size())
    throw std::invalid_argument(
        "embed_multilayer: the window was built over a different socle");
  for (std::size_t k = 0; k < returning_ids.size(); ++k) {
    const Arrow& ar = eq.arrow(returning_ids[k]);
    if (ar.source != layered.socle[k].target ||
        ar.target != layered.socle[k].source)
      throw std::invalid_argument(
          "embed_multilayer: the window was built over a different socle");
  }

  const Grading& u = layered.base_grading;
  WindowEmbedding emb;
  emb.vertex_image.resize(layered.bound.quiver.vertex_count(), -1);
  for (std::size_t mv = 0; mv < emb.vertex_image.size(); ++mv) {
    int i = layered.vertex_base[mv];
    int s = static_cast<int>(u.at(i)) + layered.vertex_floor[mv];
    std::optional<int> img = window.vertex_at(i, s);
    if (!img)
      throw std::invalid_argument(
          "embed_multilayer: the window is too small; it must reach level " +
          std::to_string(s));
    emb.vertex_image[mv] = *img;
  }

  std::vector<std::vector<int>> at2 = copy_lookup(window);
  emb.arrow_image.resize(layered.bound.quiver.arrow_count(), -1);
  auto map_arrow = [&](int ml_arrow, int origin) {
    const Arrow& ar = layered.bound.quiver.arrow(ml_arrow);
    int s = window.vertex_level[emb.vertex_image[ar.source]];
    int img = s < window.high ? at2[origin][s - window.low] : -1;
    if (img < 0 || window.bound.quiver.arrow(img).target !=
                       emb.vertex_image[ar.target])
      throw std::logic_error("embed_multilayer: arrow image missing");
    emb.arrow_image[ml_arrow] = img;
  };
  for (int a = 0; a < bq.arrow_count(); ++a)
    for (int r = 0; r <= n + 1; ++r) map_arrow(layered.floor_arrows[a][r], a);
  for (int i = 0; i < bq.vertex_count(); ++i)
    for (int r = 0; r <= n; ++r)
      map_arrow(layered.ladder_arrows[i][r], loop_of_vertex[i]);
  for (std::size_t k = 0; k < layered.beta_arrows.size(); ++k)
    map_arrow(layered.beta_arrows[k], returning_ids[k]);

  std::vector<char> vertex_in(window.bound.quiver.vertex_count(), 0);
  for (int img : emb.vertex_image) vertex_in[img] = 1;
  std::vector<int> back(window.bound.quiver.arrow_count(), -1);
  for (std::size_t ma = 0; ma < emb.arrow_image.size(); ++ma)
    back[emb.arrow_image[ma]] = static_cast<int>(ma);
  for (int wa = 0; wa < window.bound.quiver.arrow_count(); ++wa) {
    const Arrow& ar = window.bound.quiver.arrow(wa);
    if (vertex_in[ar.source] && vertex_in[ar.target] && back[wa] < 0)
      throw std::logic_error(
          "embed_multilayer: the image is not a full subquiver");
  }

  std::vector<MappedRow> mapped;
  for (const Relation& row : layered.bound.relations)
    mapped.push_back(map_row(row, emb.vertex_image, emb.arrow_image));
  std::vector<MappedRow> inside;
  for (const Relation& row : window.bound.relations) {
    bool in_image = true;
    for (const PathTerm& term : row.terms)
      for (int a : term.path.arrows) in_image = in_image && back[a] >= 0;
    if (in_image) inside.emplace_back(row.terms.begin(), row.terms.end());
  }
  if (!equal_row_spans(mapped, inside))
    throw std::logic_error(
        "embed_multilayer: relation rows do not match between the layered "
        "quiver and the window");
  return emb;
}

}  // namespace quiverlab
