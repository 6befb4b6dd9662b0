#include "quiverlab/translation_window.hpp"

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "quiverlab/graded_algebra.hpp"
#include "quiverlab/trivial_extension.hpp"

using namespace quiverlab;

namespace {

Relation mono(const Quiver& q, const std::vector<std::string>& arrows) {
  return make_relation(q, {PathTerm{Rational(1), make_path(q, arrows)}});
}

Relation diff(const Quiver& q, const std::vector<std::string>& plus,
              const std::vector<std::string>& minus) {
  return make_relation(q, {PathTerm{Rational(1), make_path(q, plus)},
                           PathTerm{Rational(-1), make_path(q, minus)}});
}

std::string copy_name(const std::string& name, int level) {
  return "(" + name + "," + std::to_string(level) + ")";
}

// Independent recomputation of one slab lift: original arrows keep their
// slab, returning arrows advance it; the row only exists when every copy
// does.
std::optional<Relation> lift_first(const TranslationWindow& w,
                                   const Relation& row, int t) {
  const Quiver& eq = w.base.bound.quiver;
  std::vector<PathTerm> terms;
  for (const PathTerm& term : row.terms) {
    std::vector<std::string> names;
    int slab = t;
    for (int a : term.path.arrows) {
      names.push_back(copy_name(eq.arrow(a).name, slab));
      if (w.base.kinds[a] != ArrowKind::original) ++slab;
    }
    for (const std::string& name : names)
      if (!w.bound.quiver.arrow_id(name)) return std::nullopt;
    terms.push_back({term.coef, make_path(w.bound.quiver, names)});
  }
  return make_relation(w.bound.quiver, std::move(terms));
}

// Independent recomputation of one level lift: every arrow climbs one level,
// the first-traversed arrow sitting at the start level.
std::optional<Relation> lift_second(const TranslationWindow& w,
                                    const Relation& row, int m) {
  const Quiver& eq = w.base.bound.quiver;
  std::vector<PathTerm> terms;
  for (const PathTerm& term : row.terms) {
    std::vector<std::string> names;
    int level = m;
    for (int a : term.path.arrows)
      names.push_back(copy_name(eq.arrow(a).name, level++));
    for (const std::string& name : names)
      if (!w.bound.quiver.arrow_id(name)) return std::nullopt;
    terms.push_back({term.coef, make_path(w.bound.quiver, names)});
  }
  return make_relation(w.bound.quiver, std::move(terms));
}

void check_first_lift_oracle(const TranslationWindow& w) {
  std::vector<Relation> expected;
  for (const Relation& row : w.base.bound.relations)
    for (int t = w.low; t <= w.high; ++t)
      if (auto lifted = lift_first(w, row, t)) expected.push_back(*lifted);
  CHECK(w.bound.relations == normalize_relation_set(w.bound.quiver, expected));
}

void check_second_lift_oracle(const TranslationWindow& w) {
  std::vector<Relation> expected;
  for (const Relation& row : w.base.bound.relations)
    for (int m = w.low; m <= w.high; ++m)
      if (auto lifted = lift_second(w, row, m)) expected.push_back(*lifted);
  CHECK(w.bound.relations == normalize_relation_set(w.bound.quiver, expected));
}

// Vertex sets of the weakly connected components of the underlying graph.
std::vector<int> component_ids(const Quiver& q) {
  std::vector<int> comp(q.vertex_count(), -1);
  int next = 0;
  for (int v = 0; v < q.vertex_count(); ++v) {
    if (comp[v] != -1) continue;
    std::vector<int> stack{v};
    comp[v] = next;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      auto visit = [&](int y) {
        if (comp[y] == -1) {
          comp[y] = next;
          stack.push_back(y);
        }
      };
      for (int a : q.arrows_from(x)) visit(q.arrow(a).target);
      for (int a : q.arrows_into(x)) visit(q.arrow(a).source);
    }
    ++next;
  }
  return comp;
}

int component_count(const Quiver& q) {
  auto comp = component_ids(q);
  int n = 0;
  for (int c : comp) n = std::max(n, c + 1);
  return n;
}

void check_levels(const TranslationWindow& w, bool crossings_only) {
  const Quiver& q = w.bound.quiver;
  for (int a = 0; a < q.arrow_count(); ++a) {
    bool crosses = crossings_only
                       ? w.base.kinds[w.arrow_origin[a]] != ArrowKind::original
                       : true;
    CHECK(w.vertex_level[q.arrow(a).source] == w.arrow_level[a]);
    CHECK(w.vertex_level[q.arrow(a).target] ==
          w.arrow_level[a] + (crosses ? 1 : 0));
    CHECK(w.vertex_base[q.arrow(a).source] ==
          w.base.bound.quiver.arrow(w.arrow_origin[a]).source);
    CHECK(w.vertex_base[q.arrow(a).target] ==
          w.base.bound.quiver.arrow(w.arrow_origin[a]).target);
  }
  for (int v = 0; v < q.vertex_count(); ++v) {
    if (auto back = w.tau(v)) {
      CHECK(w.vertex_base[*back] == w.vertex_base[v]);
      CHECK(w.vertex_level[*back] == w.vertex_level[v] - w.tau_shift);
      CHECK(w.tau_inverse(*back) == std::optional<int>(v));
    } else {
      CHECK(w.vertex_level[v] - w.tau_shift < w.low);
    }
  }
}

}  // namespace

TEST_CASE("first covering: frozen double-arrow window") {
  auto raq = returning_arrow_quiver(fixtures::kronecker());
  auto w = zq_first_window(raq, 0, 1);
  CHECK(w.kind == WindowKind::first);
  CHECK(w.low == 0);
  CHECK(w.high == 1);
  CHECK(w.tau_shift == 1);
  CHECK(w.margin == 2);

  const Quiver& q = w.bound.quiver;
  REQUIRE(q.vertex_count() == 4);
  REQUIRE(q.arrow_count() == 6);
  CHECK(q.vertex_id("(1,0)").has_value());
  CHECK(q.vertex_id("(2,1)").has_value());
  const Arrow& beta = q.arrow(q.require_arrow("(b_0,0)"));
  CHECK(beta.source == q.require_vertex("(2,0)"));
  CHECK(beta.target == q.require_vertex("(1,1)"));
  CHECK(!q.arrow_id("(b_0,1)").has_value());
  CHECK(q.arrow_id("(a,1)").has_value());

  std::vector<Relation> expected = {
      diff(q, {"(a,0)", "(b_0,0)"}, {"(b,0)", "(b_1,0)"}),
      mono(q, {"(a,0)", "(b_1,0)"}),
      mono(q, {"(b,0)", "(b_0,0)"}),
      diff(q, {"(b_0,0)", "(a,1)"}, {"(b_1,0)", "(b,1)"}),
      mono(q, {"(b_0,0)", "(b,1)"}),
      mono(q, {"(b_1,0)", "(a,1)"}),
  };
  CHECK(w.bound.relations == normalize_relation_set(q, expected));
  REQUIRE(w.bound.relations.size() == 6);

  GradedAlgebra alg(w.bound, 4);
  REQUIRE(alg.stabilized());
  CHECK(alg.dim_at_degree(0) == 4);
  CHECK(alg.dim_at_degree(1) == 6);
  CHECK(alg.dim_at_degree(2) == 2);
  CHECK(alg.total_dim() == 12);
  CHECK(alg.top_degree() == 2);

  int one0 = q.require_vertex("(1,0)");
  int one1 = q.require_vertex("(1,1)");
  CHECK(w.tau(one1) == std::optional<int>(one0));
  CHECK(!w.tau(one0).has_value());
  CHECK(w.tau_inverse(one0) == std::optional<int>(one1));
  CHECK(w.vertex_at(w.vertex_base[one1], 1) == std::optional<int>(one1));
}

TEST_CASE("first covering: a single slab reproduces the input presentation") {
  auto raq = returning_arrow_quiver(fixtures::fan());
  auto w = zq_first_window(raq, 5, 5);
  const Quiver& q = w.bound.quiver;
  CHECK(q.vertex_count() == 3);
  CHECK(q.arrow_count() == 3);
  CHECK(q.arrow_id("(a,5)").has_value());
  CHECK(!q.arrow_id("(b_0,5)").has_value());
  CHECK(w.bound.relations ==
        std::vector<Relation>{mono(q, {"(b,5)", "(g,5)"})});

  auto kron = zq_first_window(returning_arrow_quiver(fixtures::kronecker()),
                              -2, -2);
  CHECK(kron.bound.quiver.vertex_count() == 2);
  CHECK(kron.bound.quiver.arrow_count() == 2);
  CHECK(kron.bound.quiver.arrow_id("(a,-2)").has_value());
  CHECK(kron.bound.relations.empty());
}

TEST_CASE("first covering: lifted rows match an independent lift") {
  check_first_lift_oracle(
      zq_first_window(returning_arrow_quiver(fixtures::kronecker()), 0, 2));
  check_first_lift_oracle(
      zq_first_window(returning_arrow_quiver(fixtures::fan()), -1, 1));
  check_first_lift_oracle(zq_first_window(
      returning_arrow_quiver(fixtures::two_source_a3()), 0, 3));
  check_first_lift_oracle(
      zq_first_window(returning_arrow_quiver(fixtures::point()), 0, 2));
  check_first_lift_oracle(zq_first_window(
      returning_arrow_quiver(fixtures::commutative_square()), 0, 2));
}

TEST_CASE("first covering: fan window sizes and level bookkeeping") {
  auto raq = returning_arrow_quiver(fixtures::fan());
  auto w = zq_first_window(raq, -1, 1);
  CHECK(w.bound.quiver.vertex_count() == 9);
  // Three slab copies of a, b, g plus two crossing copies of each b_k.
  CHECK(w.bound.quiver.arrow_count() == 15);
  // One slab-only row on three slabs, seven single-crossing rows on two
  // start slabs, one double-crossing row on one.
  CHECK(w.bound.relations.size() == 3 + 7 * 2 + 1);
  check_levels(w, true);

  check_levels(zq_first_window(returning_arrow_quiver(fixtures::kronecker()),
                               0, 2),
               true);
}

TEST_CASE("first covering: top-length bound paths step the translation") {
  auto expect_pairs = [](const ReturningArrowQuiver& raq, int engine_bound) {
    auto w = zq_first_window(raq, 0, 2);
    GradedAlgebra alg(w.bound, engine_bound);
    REQUIRE(alg.stabilized());
    const int top = raq.base_degree + 1;
    std::set<std::pair<int, int>> seen;
    for (const Path& p : alg.maximal_bound_paths()) {
      REQUIRE(p.length() == top);
      CHECK(w.tau(p.target) == std::optional<int>(p.source));
      seen.insert({p.source, p.target});
    }
    std::set<std::pair<int, int>> expected;
    for (int v = 0; v < raq.bound.quiver.vertex_count(); ++v)
      for (int t = 0; t < 2; ++t)
        expected.insert({*w.vertex_at(v, t), *w.vertex_at(v, t + 1)});
    CHECK(seen == expected);
  };
  expect_pairs(returning_arrow_quiver(fixtures::kronecker()), 4);
  expect_pairs(returning_arrow_quiver(fixtures::fan()), 4);
  expect_pairs(returning_arrow_quiver(fixtures::two_source_a3()), 4);
  expect_pairs(returning_arrow_quiver(fixtures::commutative_square()), 5);
}

TEST_CASE("second covering: frozen double-arrow window") {
  auto raq = returning_arrow_quiver(fixtures::kronecker());
  auto w = zq_second_window(raq, 0, 2);
  CHECK(w.kind == WindowKind::second);
  CHECK(w.tau_shift == 2);
  CHECK(w.margin == 2);

  const Quiver& q = w.bound.quiver;
  REQUIRE(q.vertex_count() == 6);
  REQUIRE(q.arrow_count() == 8);
  const Arrow& a0 = q.arrow(q.require_arrow("(a,0)"));
  CHECK(a0.source == q.require_vertex("(1,0)"));
  CHECK(a0.target == q.require_vertex("(2,1)"));
  const Arrow& back = q.arrow(q.require_arrow("(b_0,1)"));
  CHECK(back.source == q.require_vertex("(2,1)"));
  CHECK(back.target == q.require_vertex("(1,2)"));

  std::vector<Relation> expected = {
      diff(q, {"(a,0)", "(b_0,1)"}, {"(b,0)", "(b_1,1)"}),
      mono(q, {"(a,0)", "(b_1,1)"}),
      mono(q, {"(b,0)", "(b_0,1)"}),
      diff(q, {"(b_0,0)", "(a,1)"}, {"(b_1,0)", "(b,1)"}),
      mono(q, {"(b_0,0)", "(b,1)"}),
      mono(q, {"(b_1,0)", "(a,1)"}),
  };
  CHECK(w.bound.relations == normalize_relation_set(q, expected));
  REQUIRE(w.bound.relations.size() == 6);

  int one2 = q.require_vertex("(1,2)");
  CHECK(w.tau(one2) == std::optional<int>(q.require_vertex("(1,0)")));
  CHECK(!w.tau(q.require_vertex("(2,1)")).has_value());
  check_levels(w, false);

  auto taller = zq_second_window(raq, 0, 3);
  CHECK(taller.bound.quiver.arrow_count() == 12);
  CHECK(taller.bound.relations.size() == 12);
}

TEST_CASE("second covering: lifted rows match an independent lift") {
  check_second_lift_oracle(
      zq_second_window(returning_arrow_quiver(fixtures::kronecker()), 0, 3));
  check_second_lift_oracle(
      zq_second_window(returning_arrow_quiver(fixtures::fan()), -2, 2));
  check_second_lift_oracle(
      zq_second_window(returning_arrow_quiver(fixtures::single_arrow()), 0, 4));
  check_second_lift_oracle(zq_second_window(
      double_returning_quiver(returning_arrow_quiver(fixtures::kronecker())),
      0, 4));
}

TEST_CASE("second covering: empty and degenerate windows") {
  auto raq = returning_arrow_quiver(fixtures::kronecker());
  auto w = zq_second_window(raq, 3, 3);
  CHECK(w.bound.quiver.vertex_count() == 2);
  CHECK(w.bound.quiver.arrow_count() == 0);
  CHECK(w.bound.relations.empty());

  CHECK_THROWS_AS(zq_second_window(raq, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(zq_first_window(raq, 1, 0), std::invalid_argument);
}

TEST_CASE("second covering: component counts follow the cycle gcd") {
  // Every cycle of the double-arrow extension has even length: two
  // components. Same for the two-source quiver.
  auto kron = zq_second_window(returning_arrow_quiver(fixtures::kronecker()),
                               0, 5);
  CHECK(component_count(kron.bound.quiver) == 2);
  auto a3 = zq_second_window(returning_arrow_quiver(fixtures::two_source_a3()),
                             0, 5);
  CHECK(component_count(a3.bound.quiver) == 2);

  // The fan extension has cycles of length 2 and 3, so the covering stays
  // connected: its slice windows are honest cyclic quivers.
  auto fan = zq_second_window(returning_arrow_quiver(fixtures::fan()), 0, 5);
  CHECK(component_count(fan.bound.quiver) == 1);

  auto hexagon = zq_second_window(returning_arrow_quiver(fixtures::fan()), 0, 1);
  CHECK(hexagon.bound.quiver.vertex_count() == 6);
  CHECK(hexagon.bound.quiver.arrow_count() == 6);
  CHECK(hexagon.bound.relations.empty());
  CHECK(component_count(hexagon.bound.quiver) == 1);
  // Undirected degree two everywhere: a single six-cycle.
  for (int v = 0; v < 6; ++v) {
    CHECK(hexagon.bound.quiver.arrows_from(v).size() +
              hexagon.bound.quiver.arrows_into(v).size() ==
          2);
  }
}

TEST_CASE("component embedding: double arrow windows line up") {
  auto raq = returning_arrow_quiver(fixtures::kronecker());
  auto first = zq_first_window(raq, 0, 1);
  auto second = zq_second_window(raq, 0, 3);
  auto phi = component_phi(first, second);

  const Quiver& fq = first.bound.quiver;
  const Quiver& sq = second.bound.quiver;
  REQUIRE(phi.vertex_image.size() == 4);
  REQUIRE(phi.arrow_image.size() == 6);
  auto image_of = [&](const std::string& name) {
    return phi.vertex_image[fq.require_vertex(name)];
  };
  CHECK(image_of("(1,0)") == sq.require_vertex("(1,0)"));
  CHECK(image_of("(2,0)") == sq.require_vertex("(2,1)"));
  CHECK(image_of("(1,1)") == sq.require_vertex("(1,2)"));
  CHECK(image_of("(2,1)") == sq.require_vertex("(2,3)"));
  CHECK(phi.arrow_image[fq.require_arrow("(a,0)")] ==
        sq.require_arrow("(a,0)"));
  CHECK(phi.arrow_image[fq.require_arrow("(b_0,0)")] ==
        sq.require_arrow("(b_0,1)"));
  CHECK(phi.arrow_image[fq.require_arrow("(a,1)")] ==
        sq.require_arrow("(a,2)"));

  // The image is exactly one connected component of the tall window.
  auto comp = component_ids(sq);
  std::set<int> image(phi.vertex_image.begin(), phi.vertex_image.end());
  std::set<int> component;
  for (int v = 0; v < sq.vertex_count(); ++v)
    if (comp[v] == comp[sq.require_vertex("(1,0)")]) component.insert(v);
  CHECK(image == component);
}

TEST_CASE("component embedding: negative levels and the point") {
  auto raq = returning_arrow_quiver(fixtures::two_source_a3());
  auto first = zq_first_window(raq, -1, 1);
  auto second = zq_second_window(raq, -2, 3);
  auto phi = component_phi(first, second);
  const Quiver& sq = second.bound.quiver;
  CHECK(phi.vertex_image[first.bound.quiver.require_vertex("(1,-1)")] ==
        sq.require_vertex("(1,-2)"));
  CHECK(phi.vertex_image[first.bound.quiver.require_vertex("(2,0)")] ==
        sq.require_vertex("(2,1)"));
  auto comp = component_ids(sq);
  std::set<int> image(phi.vertex_image.begin(), phi.vertex_image.end());
  std::set<int> component;
  for (int v = 0; v < sq.vertex_count(); ++v)
    if (comp[v] == comp[sq.require_vertex("(1,-2)")]) component.insert(v);
  CHECK(image == component);

  // Top length zero: the embedding is level for level.
  auto praq = returning_arrow_quiver(fixtures::point());
  auto pphi = component_phi(zq_first_window(praq, 0, 2),
                            zq_second_window(praq, 0, 2));
  CHECK(pphi.vertex_image ==
        std::vector<int>{0, 1, 2});
}

TEST_CASE("component embedding: rejections") {
  auto raq = returning_arrow_quiver(fixtures::kronecker());
  auto first = zq_first_window(raq, 0, 1);

  // Not nicely graded: the obstructing cycle is reported.
  auto fan = returning_arrow_quiver(fixtures::fan());
  CHECK_THROWS_WITH_AS(
      component_phi(zq_first_window(fan, 0, 1), zq_second_window(fan, 0, 3)),
      doctest::Contains("nicely graded"), std::invalid_argument);

  // The image of slab 1 needs level 3.
  CHECK_THROWS_WITH_AS(component_phi(first, zq_second_window(raq, 0, 2)),
                       doctest::Contains("enlarge"), std::invalid_argument);

  // Mixed-up inputs.
  auto other = returning_arrow_quiver(fixtures::two_source_a3());
  CHECK_THROWS_AS(component_phi(first, zq_second_window(other, 0, 3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(component_phi(first, first), std::invalid_argument);
}

TEST_CASE("layered embedding: double arrow layers sit inside the covering") {
  auto layered = multilayer_quiver(fixtures::kronecker());
  auto dbl =
      double_returning_quiver(returning_arrow_quiver(fixtures::kronecker()));
  auto window = zq_second_window(dbl, 0, 4);
  auto emb = embed_multilayer(layered, window);

  const Quiver& mq = layered.bound.quiver;
  const Quiver& wq = window.bound.quiver;
  REQUIRE(emb.vertex_image.size() == 6);
  REQUIRE(emb.arrow_image.size() == 12);
  CHECK(emb.vertex_image[mq.require_vertex("(1,0,0)")] ==
        wq.require_vertex("(1,0)"));
  CHECK(emb.vertex_image[mq.require_vertex("(1,0,2)")] ==
        wq.require_vertex("(1,2)"));
  CHECK(emb.vertex_image[mq.require_vertex("(2,1,3)")] ==
        wq.require_vertex("(2,3)"));
  // Floor and ladder copies land on the copies with the same label; the
  // returning arrow enters at the level of its source.
  CHECK(emb.arrow_image[mq.require_arrow("(a,0)")] == wq.require_arrow("(a,0)"));
  CHECK(emb.arrow_image[mq.require_arrow("(a,2)")] == wq.require_arrow("(a,2)"));
  CHECK(emb.arrow_image[mq.require_arrow("(g_1,1)")] ==
        wq.require_arrow("(g_1,1)"));
  CHECK(emb.arrow_image[mq.require_arrow("b_0")] ==
        wq.require_arrow("(b_0,1)"));

  std::set<int> distinct(emb.arrow_image.begin(), emb.arrow_image.end());
  CHECK(distinct.size() == emb.arrow_image.size());
}

TEST_CASE("layered embedding: more bases") {
  auto a3 = multilayer_quiver(fixtures::two_source_a3());
  auto a3_window = zq_second_window(
      double_returning_quiver(
          returning_arrow_quiver(fixtures::two_source_a3())),
      0, 4);
  auto a3_emb = embed_multilayer(a3, a3_window);
  CHECK(a3_emb.vertex_image.size() == 9);
  CHECK(a3_emb.arrow_image.size() == 14);

  auto square = multilayer_quiver(fixtures::commutative_square());
  auto square_window = zq_second_window(
      double_returning_quiver(
          returning_arrow_quiver(fixtures::commutative_square())),
      0, 6);
  auto square_emb = embed_multilayer(square, square_window);
  CHECK(square_emb.vertex_image.size() == 16);

  auto point = multilayer_quiver(fixtures::point());
  auto point_window = zq_second_window(
      double_returning_quiver(returning_arrow_quiver(fixtures::point())), 0,
      2);
  auto point_emb = embed_multilayer(point, point_window);
  const Quiver& pq = point.bound.quiver;
  const Quiver& pw = point_window.bound.quiver;
  REQUIRE(point_emb.vertex_image.size() == 2);
  CHECK(point_emb.vertex_image[pq.require_vertex("(v,0,0)")] ==
        pw.require_vertex("(v,0)"));
  CHECK(point_emb.vertex_image[pq.require_vertex("(v,0,1)")] ==
        pw.require_vertex("(v,1)"));
  CHECK(point_emb.arrow_image[pq.require_arrow("(g_v,0)")] ==
        pw.require_arrow("(g_v,0)"));
  CHECK(point_emb.arrow_image[pq.require_arrow("b_0")] ==
        pw.require_arrow("(b_0,0)"));
}

TEST_CASE("layered embedding: rejections") {
  auto layered = multilayer_quiver(fixtures::kronecker());
  auto dbl =
      double_returning_quiver(returning_arrow_quiver(fixtures::kronecker()));

  CHECK_THROWS_WITH_AS(embed_multilayer(layered, zq_second_window(dbl, 0, 3)),
                       doctest::Contains("too small"), std::invalid_argument);
  CHECK_THROWS_AS(embed_multilayer(layered, zq_first_window(dbl, 0, 4)),
                  std::invalid_argument);

  // A window over a plain (undoubled) extension is refused.
  auto raq = returning_arrow_quiver(fixtures::kronecker());
  CHECK_THROWS_AS(embed_multilayer(layered, zq_second_window(raq, 0, 4)),
                  std::invalid_argument);

  // A window over another base is refused.
  auto other = zq_second_window(
      double_returning_quiver(
          returning_arrow_quiver(fixtures::two_source_a3())),
      0, 4);
  CHECK_THROWS_AS(embed_multilayer(layered, other), std::invalid_argument);

  // Same base, different socle order: the returning arrows point elsewhere.
  auto a3 = multilayer_quiver(fixtures::two_source_a3());
  auto base = fixtures::two_source_a3();
  auto swapped = returning_arrow_quiver(
      base, {make_path(base.quiver, {"b"}), make_path(base.quiver, {"a"})});
  CHECK_THROWS_WITH_AS(
      embed_multilayer(a3, zq_second_window(double_returning_quiver(swapped),
                                            0, 4)),
      doctest::Contains("different socle"), std::invalid_argument);
}
