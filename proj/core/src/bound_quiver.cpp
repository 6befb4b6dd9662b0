#include "quiverlab/bound_quiver.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "quiverlab/rational.hpp"

namespace quiverlab {

Relation make_relation(const Quiver& q, std::vector<PathTerm> terms) {
  if (terms.empty()) throw std::invalid_argument("relation with no terms");
  // Merge duplicate paths first so harmless cancellations are not errors.
  std::sort(terms.begin(), terms.end(), [](const PathTerm& a, const PathTerm& b) {
    return canonical_less(a.path, b.path);
  });
  std::vector<PathTerm> merged;
  for (PathTerm& t : terms) {
    if (!merged.empty() && merged.back().path == t.path) {
      merged.back().coef += t.coef;
      if (merged.back().coef == 0) merged.pop_back();
    } else if (t.coef != 0) {
      merged.push_back(std::move(t));
    }
  }
  if (merged.empty()) {
    throw std::invalid_argument("relation cancels to zero");
  }
  Relation r;
  r.source = merged.front().path.source;
  r.target = merged.front().path.target;
  r.length = merged.front().path.length();
  for (const PathTerm& t : merged) {
    if (!is_valid_path(q, t.path)) {
      throw std::invalid_argument("relation term is not a path of the quiver");
    }
    if (t.path.source != r.source || t.path.target != r.target ||
        t.path.length() != r.length) {
      throw std::invalid_argument(
          "relation terms must be parallel paths of equal length");
    }
  }
  if (r.length < 2) {
    throw std::invalid_argument("relations must have length at least 2");
  }
  r.terms = std::move(merged);
  return r;
}

std::string relation_to_string(const Quiver& q, const Relation& r) {
  std::string out;
  for (std::size_t i = 0; i < r.terms.size(); ++i) {
    const PathTerm& t = r.terms[i];
    Rational c = t.coef;
    if (i == 0) {
      if (c < 0) {
        out += "- ";
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    if (c != 1) {
      out += to_string(c);
      out += ' ';
    }
    out += path_to_string(q, t.path);
  }
  return out;
}

void BoundQuiver::add_relation(std::vector<PathTerm> terms) {
  relations.push_back(make_relation(quiver, std::move(terms)));
}

void BoundQuiver::add_relation(
    const std::vector<std::vector<std::string>>& monomials) {
  std::vector<PathTerm> terms;
  for (const auto& names : monomials) {
    terms.push_back(PathTerm{Rational(1), make_path(quiver, names)});
  }
  add_relation(std::move(terms));
}

void BoundQuiver::normalize_relations() {
  relations = normalize_relation_set(quiver, relations);
}

std::vector<Relation> normalize_relation_set(const Quiver& q,
                                             const std::vector<Relation>& rs) {
  using BlockKey = std::tuple<int, int, int>;  // length, source, target
  std::map<BlockKey, std::vector<const Relation*>> blocks;
  for (const Relation& r : rs) {
    blocks[{r.length, r.source, r.target}].push_back(&r);
  }
  std::vector<Relation> out;
  for (auto& [key, group] : blocks) {
    // Column space: every path appearing in the block, canonically ordered.
    std::vector<Path> paths;
    for (const Relation* r : group) {
      for (const PathTerm& t : r->terms) paths.push_back(t.path);
    }
    std::sort(paths.begin(), paths.end(), canonical_less);
    paths.erase(std::unique(paths.begin(), paths.end()), paths.end());
    auto column_of = [&](const Path& p) {
      auto it = std::lower_bound(paths.begin(), paths.end(), p, canonical_less);
      return static_cast<std::int64_t>(it - paths.begin());
    };
    RowEchelon ech;
    for (const Relation* r : group) {
      std::vector<std::pair<std::int64_t, Rational>> terms;
      for (const PathTerm& t : r->terms) {
        terms.emplace_back(column_of(t.path), t.coef);
      }
      ech.insert(make_sparse(std::move(terms)));
    }
    for (const auto& [pivot, row] : ech.rows()) {
      std::vector<PathTerm> terms;
      for (const auto& [col, coef] : row.terms) {
        terms.push_back(PathTerm{coef, paths[static_cast<std::size_t>(col)]});
      }
      out.push_back(make_relation(q, std::move(terms)));
    }
  }
  return out;
}

int default_degree_bound(const BoundQuiver& bq) {
  int longest = 1;
  for (const Relation& rel : bq.relations) {
    longest = std::max(longest, rel.length);
  }
  return bq.quiver.vertex_count() * longest + 2;
}

}  // namespace quiverlab
