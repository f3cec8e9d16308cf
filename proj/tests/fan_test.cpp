#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "molfan/fan.hpp"
#include "support/generators.hpp"

namespace molfan {
namespace {

HalfspaceSystem example_system() { return HalfspaceSystem({{0.25, 0.5, 40}, {0.4, 0.2, 40}, {0.0, 0.8, 40}}); }

std::size_t vertex_at(const Polygon & p, const Vector2 & v)
{
  for (std::size_t i = 0; i < p.vertex_count(); ++i) {
    if (max_abs_diff(p.vertices()[i], v) <= 1e-9) { return i; }
  }
  ADD_FAILURE() << "no vertex at (" << v.x1 << ", " << v.x2 << ")";
  return 0;
}

TEST(BuildFan, UnitSquare)
{
  const QuotientSet q = build_fan(build_polygon(HalfspaceSystem({{1, 0, 1}, {0, 1, 1}})));
  ASSERT_EQ(q.size(), 8u);
  EXPECT_EQ(q.corner_count(), 4u);
  EXPECT_EQ(q.face_count(), 4u);
  for (std::size_t v = 0; v < 4; ++v) { EXPECT_NEAR(q.corner_class(v).corner().cone.width(), std::numbers::pi / 2, 1e-12); }
  const double expected[] = {270, 0, 90, 180};  // bottom, right, top, left
  for (std::size_t e = 0; e < 4; ++e) {
    EXPECT_NEAR(circular_distance(q.face_class(e).face().normal_angle, Angle::from_degrees(expected[e])), 0.0, 1e-12);
  }
  // ids: corners first, then faces
  for (std::size_t id = 0; id < 8; ++id) { EXPECT_EQ(q[id].class_id, id); }
  EXPECT_TRUE(q[3].is_corner());
  EXPECT_FALSE(q[4].is_corner());
}

TEST(BuildFan, ExampleRegion)
{
  const QuotientSet q = build_fan(build_polygon(example_system()));
  EXPECT_EQ(q.size(), 10u);
  const auto cone = sensitivity_interval(q, vertex_at(q.polygon(), {80, 40}));
  EXPECT_NEAR(cone.lo().degrees(), 26.565051177, 1e-8);
  EXPECT_NEAR(cone.hi().degrees(), 63.434948823, 1e-8);
}

TEST(BuildFan, TriangleWraparoundCone)
{
  // triangle (0,0), (1,0), (0,1): the corner (1,0) sits between the bottom normal (270°) and the
  // hypotenuse normal (45°)
  const QuotientSet q = build_fan(build_polygon(HalfspaceSystem({{1, 1, 1}})));
  EXPECT_EQ(q.size(), 6u);
  const auto cone = sensitivity_interval(q, vertex_at(q.polygon(), {1, 0}));
  EXPECT_NEAR(cone.lo().degrees(), 270.0, 1e-9);
  EXPECT_NEAR(cone.hi().degrees(), 45.0, 1e-9);
  EXPECT_NEAR(cone.width(), 3 * std::numbers::pi / 4, 1e-12);
  // confirm against the enumeration oracle at sampled angles across the cone
  for (double deg = 271; deg < 405; deg += 1.0) {
    const ArgmaxSet a = argmax_enumerate(q.polygon(), LinearForm::from_polar(1.0, Angle::from_degrees(deg)));
    EXPECT_EQ(a.kind, ArgmaxKind::Vertex);
    EXPECT_LE(max_abs_diff(q.polygon().vertices()[a.index], {1, 0}), 1e-9) << deg;
  }
}

TEST(BuildFan, DegenerateRegionsNeedOptIn)
{
  const Polygon segment = build_polygon(HalfspaceSystem({{1, 1, 1}, {-1, -1, -1}}));
  EXPECT_THROW(build_fan(segment), Error);
  const QuotientSet qs = build_fan(segment, {true});
  EXPECT_EQ(qs.size(), 3u);
  EXPECT_TRUE(class_of(qs, LinearForm(1, 1)).face().two_sided);
  EXPECT_EQ(class_of(qs, LinearForm(-1, -1)).class_id, 2u);
  for (const auto & c : {LinearForm(0, 1), LinearForm(1, 0), LinearForm(-1, 2), LinearForm(3, -1)}) {
    const auto & cls = class_of(qs, c);
    ASSERT_TRUE(cls.is_corner());
    const ArgmaxSet a = argmax_enumerate(segment, c);
    EXPECT_EQ(a.kind, ArgmaxKind::Vertex);
    EXPECT_EQ(a.index, cls.corner().vertex_index);
  }

  const Polygon point = build_polygon(HalfspaceSystem({{1, 1, 0}}));
  const QuotientSet qp = build_fan(point, {true});
  EXPECT_EQ(qp.size(), 1u);
  EXPECT_TRUE(qp[0].corner().cone.is_full());
  EXPECT_EQ(class_of(qp, LinearForm(-2, 7)).class_id, 0u);
}

TEST(ClassOf, Examples)
{
  const QuotientSet q = build_fan(build_polygon(example_system()));
  const auto & c = class_of(q, LinearForm(2, 3));
  ASSERT_TRUE(c.is_corner());
  EXPECT_LE(max_abs_diff(q.polygon().vertices()[c.corner().vertex_index], {80, 40}), 1e-9);

  const auto & f = class_of(q, LinearForm(2, 1));
  ASSERT_FALSE(f.is_corner());
  const Edge & e = q.polygon().edges()[f.face().edge_index];
  EXPECT_LE(max_abs_diff(q.polygon().vertices()[e.tail_index], {100, 0}), 1e-9);
  EXPECT_LE(max_abs_diff(q.polygon().vertices()[e.head_index], {80, 40}), 1e-9);

  for (const auto & g : {LinearForm(2, 3), LinearForm(-1, 0.3), LinearForm(0, -5)}) {
    EXPECT_EQ(class_of(q, g).class_id, class_of(q, 7.0 * g).class_id);
  }
}

TEST(SensitivityInterval, Examples)
{
  const QuotientSet sq = build_fan(build_polygon(HalfspaceSystem({{1, 0, 1}, {0, 1, 1}})));
  const auto top_right = sensitivity_interval(sq, 2);
  EXPECT_NEAR(top_right.lo().degrees(), 0.0, 1e-12);
  EXPECT_NEAR(top_right.hi().degrees(), 90.0, 1e-12);

  const QuotientSet q = build_fan(build_polygon(example_system()));
  const std::size_t corner = vertex_at(q.polygon(), {100, 0});
  const auto wrap = sensitivity_interval(q, corner);
  EXPECT_NEAR(wrap.lo().degrees(), 270.0, 1e-9);
  EXPECT_NEAR(wrap.hi().degrees(), 26.565051177, 1e-8);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> t(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const Angle phi = wrap.lo() + (1e-6 + t(rng) * (wrap.width() - 2e-6));
    ASSERT_TRUE(interval_contains(wrap, phi));
    const ArgmaxSet a = argmax_enumerate(q.polygon(), LinearForm::from_polar(1.0, phi));
    EXPECT_EQ(a.kind, ArgmaxKind::Vertex);
    EXPECT_EQ(a.index, corner);
  }
  EXPECT_THROW(sensitivity_interval(q, 5), Error);
}

TEST(SensitivityInterval, InnerProductCharacterization)
{
  // φ in the cone of x0 iff ⟨c, x1 − x0⟩ < 0 and ⟨c, x0 − x2⟩ > 0 for the boundary neighbours
  const QuotientSet q = build_fan(build_polygon(example_system()));
  const auto & vs = q.polygon().vertices();
  const std::size_t n = vs.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto cone = sensitivity_interval(q, i);
    const Vector2 & x0 = vs[i];
    const Vector2 & before = vs[(i + n - 1) % n];
    const Vector2 & after = vs[(i + 1) % n];
    for (double deg = 0.25; deg < 360; deg += 0.5) {
      const Angle phi = Angle::from_degrees(deg);
      const Vector2 c = unit_vector(phi);
      const bool by_products = dot(c, before - x0) < 0 && dot(c, x0 - after) > 0;
      EXPECT_EQ(interval_contains(cone, phi), by_products) << "vertex " << i << " at " << deg;
    }
  }
}

TEST(FanProperties, PartitionAndLpAgreement)
{
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> angle(0.0, two_pi);
  for (int trial = 0; trial < 200; ++trial) {
    const auto rs = testing::random_bounded_system(rng);
    const Polygon p = build_polygon(rs.system);
    const QuotientSet q = build_fan(p);
    const std::size_t n = p.vertex_count();
    ASSERT_EQ(q.size(), 2 * n);

    double total = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      const auto cone = q.corner_class(v).corner().cone;
      total += cone.width();
      EXPECT_GT(cone.width(), 0.0);
      EXPECT_LT(cone.width(), std::numbers::pi);
      // boundary coherence
      const Angle face = q.face_class(v).face().normal_angle;
      EXPECT_LE(circular_distance(cone.hi(), face), 1e-9);
      EXPECT_LE(circular_distance(face, q.corner_class((v + 1) % n).corner().cone.lo()), 1e-9);
    }
    EXPECT_NEAR(total, two_pi, 1e-9);

    for (int k = 0; k < 50; ++k) {
      const Angle phi = Angle::from_radians(angle(rng));
      int hits = 0;
      for (const auto & c : q.classes()) {
        if (c.is_corner()) { hits += interval_contains(c.corner().cone, phi, 0.0); }
        else { hits += phi == c.face().normal_angle; }
      }
      EXPECT_EQ(hits, 1);

      const LinearForm f = LinearForm::from_polar(0.5 + angle(rng), phi);
      const bool near_face = std::any_of(p.edges().begin(), p.edges().end(),
                                         [&](const Edge & e) { return circular_distance(e.normal_angle, phi) < 1e-6; });
      if (near_face) { continue; }
      const auto & cls = class_of(q, f);
      const ArgmaxSet a = argmax_enumerate(p, f);
      EXPECT_TRUE(argmax_of_class(cls).same_set(a));
    }
    // a face normal maximizes its whole edge
    for (std::size_t e = 0; e < n; ++e) {
      const LinearForm f(p.edges()[e].outward_normal);
      EXPECT_EQ(class_of(q, f).class_id, n + e);
      const ArgmaxSet a = argmax_enumerate(p, f);
      EXPECT_EQ(a.kind, ArgmaxKind::Edge);
      EXPECT_EQ(a.index, e);
    }
  }
}

TEST(FanProperties, RelationRealization)
{
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const auto rs = testing::random_bounded_system(rng, 3, 5);
    const Polygon p = build_polygon(rs.system);
    const QuotientSet q = build_fan(p);
    for (int k = 0; k < 100; ++k) {
      const LinearForm f = testing::random_form(rng);
      const LinearForm g = testing::random_form(rng);
      const bool same_class = class_of(q, f).class_id == class_of(q, g).class_id;
      const bool same_argmax = argmax_enumerate(p, f).same_set(argmax_enumerate(p, g));
      EXPECT_EQ(same_class, same_argmax);
    }
  }
}

TEST(FanProperties, IndependentOfMagnitudeAndPolygonScale)
{
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> factor(0.01, 100.0);
  for (int trial = 0; trial < 100; ++trial) {
    const auto rs = testing::random_bounded_system(rng);
    const QuotientSet q = build_fan(build_polygon(rs.system));
    const double s = factor(rng);
    std::vector<Halfspace> scaled;
    for (const auto & r : rs.system.rows()) { scaled.push_back({r.a1, r.a2, s * r.b}); }
    const QuotientSet qs = build_fan(build_polygon(HalfspaceSystem(scaled)));
    ASSERT_EQ(qs.size(), q.size());
    for (int k = 0; k < 50; ++k) {
      const LinearForm f = testing::random_form(rng);
      const auto id = class_of(q, f).class_id;
      EXPECT_EQ(class_of(q, factor(rng) * f).class_id, id);
      EXPECT_EQ(class_of(qs, f).class_id, id);
    }
  }
}

}  // namespace
}  // namespace molfan
