#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conetool/cone.hpp"
#include "conetool/errors.hpp"
#include "oracles.hpp"

using namespace conetool;
using oracles::qv;

namespace {

PolyCone quadrant() { return PolyCone::from_rays(2, {qv({1, 0}), qv({0, 1})}); }

PolyCone random_cone(oracles::TestRng& rng, int rank, int nrays) {
    std::vector<QVec> rays;
    for (int i = 0; i < nrays; ++i) {
        QVec v(rank);
        for (int j = 0; j < rank; ++j) v[j] = Rat(rng.integer(-9, 9));
        if (!is_zero_vector(v)) rays.push_back(v);
    }
    return PolyCone::from_rays(rank, rays);
}

} // namespace

TEST_CASE("dual description: coordinate quadrant") {
    const PolyCone c = quadrant();
    CHECK(c.generators() == std::vector<QVec>{qv({0, 1}), qv({1, 0})});
    CHECK(c.inequalities() == std::vector<QVec>{qv({0, 1}), qv({1, 0})});
}

TEST_CASE("dual description: half-quadrant matches the 2D angular oracle") {
    const std::vector<QVec> rays{qv({1, 0}), qv({1, 1})};
    const auto expected = oracles::hrep_2d(rays);
    // oracle: normals are the 90-degree rotations of the boundary rays
    CHECK(expected == std::vector<QVec>{qv({0, 1}), qv({1, -1})});
    const PolyCone c = PolyCone::from_rays(2, rays);
    CHECK(c.inequalities() == expected);
}

TEST_CASE("dual description: rank-3 system matches subset brute force") {
    const std::vector<QVec> normals{qv({1, 0, 0}), qv({0, 1, 0}), qv({0, 0, 1}),
                                    qv({1, 1, -1})};
    const auto expected = oracles::rays_by_subsets(3, normals);
    CHECK(expected == std::vector<QVec>{qv({0, 1, 0}), qv({0, 1, 1}), qv({1, 0, 0}),
                                        qv({1, 0, 1})});
    const PolyCone c = PolyCone::from_inequalities(3, normals);
    CHECK(c.generators() == expected);
}

TEST_CASE("dual description: degenerate inputs") {
    const PolyCone z = PolyCone::from_rays(3, {});
    CHECK(z.is_zero_cone());
    CHECK(z.dim() == 0);
    CHECK(z.contains(qv({0, 0, 0})));
    CHECK_FALSE(z.contains(qv({1, 0, 0})));

    const PolyCone all = PolyCone::from_inequalities(2, {});
    CHECK(all.dim() == 2);
    CHECK(all.contains(qv({-7, 3})));
    CHECK_FALSE(all.is_strictly_convex());

    CHECK_THROWS_AS(PolyCone::from_both(2, {qv({1, 0}), qv({0, 1})}, {qv({1, -1})}),
                    RepresentationMismatch);
    CHECK(PolyCone::from_both(2, {qv({1, 0}), qv({0, 1})}, {qv({1, 0}), qv({0, 1})}) ==
          quadrant());
}

TEST_CASE("contains") {
    const PolyCone q = quadrant();
    CHECK(q.contains(qv({1, 1})));
    CHECK_FALSE(q.contains(qv({-1, 1})));
    const PolyCone c = PolyCone::from_rays(2, {qv({1, 0}), qv({3, 2})});
    // (2,1) = 1/2*(1,0) + 1/2*(3,2)
    CHECK(c.contains(qv({2, 1})));
    CHECK(oracles::lp_member(c.generators(), qv({2, 1})));
    CHECK_THROWS_AS(q.contains(qv({1, 0, 0})), InputError);
}

TEST_CASE("dim, strict convexity, relative interior point") {
    const PolyCone q = quadrant();
    CHECK(q.dim() == 2);
    CHECK(q.is_strictly_convex());
    CHECK(q.relative_interior_point() == qv({1, 1}));

    const PolyCone line = PolyCone::from_rays(2, {qv({1, 0}), qv({-1, 0})});
    CHECK(line.dim() == 1);
    CHECK_FALSE(line.is_strictly_convex());

    const PolyCone flat = PolyCone::from_rays(3, {qv({1, 0, 0}), qv({0, 1, 0})});
    CHECK(flat.dim() == 2);
    CHECK(flat.relative_interior_point() == qv({1, 1, 0}));
    CHECK(flat.in_relative_interior(qv({1, 1, 0})));
    CHECK_FALSE(flat.in_relative_interior(qv({1, 0, 0})));

    CHECK(PolyCone::zero(2).relative_interior_point() == qv({0, 0}));
}

TEST_CASE("intersect") {
    const PolyCone a = PolyCone::from_rays(2, {qv({1, 0}), qv({1, 1})});
    const PolyCone b = PolyCone::from_rays(2, {qv({1, 1}), qv({0, 1})});
    const PolyCone meet = intersect(a, b);
    CHECK(meet == PolyCone::from_rays(2, {qv({1, 1})}));
    CHECK(intersect(a, a) == a);
    const PolyCone opposite = PolyCone::from_rays(2, {qv({-1, 0}), qv({0, -1})});
    CHECK(intersect(quadrant(), opposite).is_zero_cone());
}

TEST_CASE("sum") {
    CHECK(cone_sum(PolyCone::from_rays(2, {qv({1, 0})}), PolyCone::from_rays(2, {qv({0, 1})})) ==
          quadrant());
    const PolyCone c = PolyCone::from_rays(2, {qv({1, 0}), qv({3, 2})});
    CHECK(cone_sum(c, PolyCone::zero(2)) == c);

    const PolyCone flat = PolyCone::from_rays(3, {qv({1, 0, 0}), qv({0, 1, 0})});
    const PolyCone octant = cone_sum(flat, PolyCone::from_rays(3, {qv({0, 0, 1})}));
    CHECK(octant == PolyCone::from_rays(3, {qv({1, 0, 0}), qv({0, 1, 0}), qv({0, 0, 1})}));
    // membership brute-check on a lattice box
    oracles::for_each_lattice_point(3, 2, [&](const QVec& p) {
        const bool nonneg = p[0] >= 0 && p[1] >= 0 && p[2] >= 0;
        CHECK(octant.contains(p) == nonneg);
    });
}

TEST_CASE("linear image and preimage") {
    const PolyCone q = quadrant();
    CHECK(linear_image(q, identity_matrix(2)) == q);

    const QMat column{{Rat(1)}, {Rat(0)}}; // R^1 -> R^2
    CHECK(linear_image(PolyCone::from_rays(1, {qv({1})}), column) ==
          PolyCone::from_rays(2, {qv({1, 0})}));

    const QMat shear{{Rat(1), Rat(1)}, {Rat(0), Rat(1)}};
    const PolyCone pre = linear_preimage(q, shear);
    const PolyCone expected = PolyCone::from_rays(2, {qv({1, 0}), qv({-1, 1})});
    CHECK(pre == expected);
    CHECK(pre.inequalities() == oracles::hrep_2d({qv({1, 0}), qv({-1, 1})}));

    CHECK_THROWS_AS(linear_image(q, QMat{{Rat(1)}}), InputError);
}

TEST_CASE("interiors_intersect") {
    const PolyCone a = PolyCone::from_rays(2, {qv({1, 0}), qv({1, 1})});
    const PolyCone b = PolyCone::from_rays(2, {qv({1, 1}), qv({0, 1})});
    CHECK_FALSE(interiors_intersect(a, b)); // they share only the ray (1,1)
    CHECK(interiors_intersect(a, a));

    const PolyCone c = PolyCone::from_rays(2, {qv({1, 0}), qv({3, 2})});
    const PolyCone d = PolyCone::from_rays(2, {qv({2, 1}), qv({0, 1})});
    CHECK(intersect(c, d) == PolyCone::from_rays(2, {qv({3, 2}), qv({2, 1})}));
    CHECK(interiors_intersect(c, d));

    const PolyCone flat = PolyCone::from_rays(2, {qv({1, 0})});
    CHECK_THROWS_AS(interiors_intersect(flat, a), InputError);
}

TEST_CASE("faces") {
    const auto fq = faces(quadrant());
    REQUIRE(fq.size() == 4);
    CHECK(fq[0].cone.is_zero_cone());
    CHECK(fq[1].cone == PolyCone::from_rays(2, {qv({0, 1})}));
    CHECK(fq[2].cone == PolyCone::from_rays(2, {qv({1, 0})}));
    CHECK(fq[3].cone == quadrant());

    const auto fr = faces(PolyCone::from_rays(2, {qv({1, 0})}));
    REQUIRE(fr.size() == 2);
    CHECK(fr[0].cone.is_zero_cone());
    CHECK(fr[1].cone == PolyCone::from_rays(2, {qv({1, 0})}));

    const PolyCone octant =
        PolyCone::from_rays(3, {qv({1, 0, 0}), qv({0, 1, 0}), qv({0, 0, 1})});
    const auto fo = faces(octant);
    CHECK(fo.size() == 8); // 1 + 3 + 3 + 1
    int by_dim[4] = {0, 0, 0, 0};
    for (const auto& f : fo) {
        ++by_dim[f.cone.dim()];
        // face equals parent cut by its active inequalities
        std::vector<QVec> normals = octant.inequalities();
        for (int i : f.active_inequalities) {
            normals.push_back(vec_scale(Rat(-1), octant.inequalities()[i]));
        }
        CHECK(f.cone == PolyCone::from_inequalities(3, normals));
    }
    CHECK(by_dim[0] == 1);
    CHECK(by_dim[1] == 3);
    CHECK(by_dim[2] == 3);
    CHECK(by_dim[3] == 1);
}

TEST_CASE("plus_closure") {
    CHECK(plus_closure(quadrant()) == quadrant());
    const PolyCone ray = PolyCone::from_rays(2, {qv({1, 0})});
    CHECK(plus_closure(ray) == ray);
    const PolyCone c = PolyCone::from_rays(2, {qv({2, 4}), qv({3, 0})});
    CHECK(c.generators() == std::vector<QVec>{qv({1, 0}), qv({1, 2})});
    CHECK(plus_closure(c) == c);
}

TEST_CASE("property: V->H->V round trip on random cones") {
    oracles::TestRng rng(20240801);
    for (int iter = 0; iter < 50; ++iter) {
        const int rank = 2 + static_cast<int>(rng.integer(0, 3));
        const PolyCone c = random_cone(rng, rank, 1 + static_cast<int>(rng.integer(0, 6)));
        const PolyCone back = PolyCone::from_inequalities(rank, c.inequalities());
        CHECK(back == c);
        CHECK(c.contains_cone(back));
        CHECK(back.contains_cone(c));
    }
}

TEST_CASE("property: contains agrees with the simplex membership oracle") {
    oracles::TestRng rng(777);
    for (int iter = 0; iter < 40; ++iter) {
        const int rank = 2 + static_cast<int>(rng.integer(0, 2));
        const PolyCone c = random_cone(rng, rank, 2 + static_cast<int>(rng.integer(0, 4)));
        for (int s = 0; s < 10; ++s) {
            QVec p(rank);
            for (int j = 0; j < rank; ++j) p[j] = Rat(rng.integer(-6, 6));
            CHECK(c.contains(p) == oracles::lp_member(c.generators(), p));
        }
    }
}

TEST_CASE("property: intersect and sum algebra") {
    oracles::TestRng rng(31337);
    for (int iter = 0; iter < 15; ++iter) {
        const int rank = 2 + static_cast<int>(rng.integer(0, 1));
        const PolyCone a = random_cone(rng, rank, 3);
        const PolyCone b = random_cone(rng, rank, 3);
        const PolyCone c = random_cone(rng, rank, 3);
        CHECK(intersect(a, b) == intersect(b, a));
        CHECK(cone_sum(a, b) == cone_sum(b, a));
        CHECK(intersect(intersect(a, b), c) == intersect(a, intersect(b, c)));
        CHECK(cone_sum(cone_sum(a, b), c) == cone_sum(a, cone_sum(b, c)));
        // monotonicity with respect to containment
        CHECK(cone_sum(a, b).contains_cone(a));
        CHECK(a.contains_cone(intersect(a, b)));
        const PolyCone bigger = cone_sum(a, c);
        CHECK(cone_sum(bigger, b).contains_cone(cone_sum(a, b)));
        CHECK(intersect(bigger, b).contains_cone(intersect(a, b)));
    }
}

TEST_CASE("property: image of preimage is contained, equal for surjective maps") {
    oracles::TestRng rng(90210);
    for (int iter = 0; iter < 15; ++iter) {
        const PolyCone c = random_cone(rng, 2, 3);
        QMat m(2, QVec(2));
        do {
            for (auto& row : m)
                for (auto& x : row) x = Rat(rng.integer(-4, 4));
        } while (determinant(m) == 0); // invertible, hence surjective
        const PolyCone round = linear_image(linear_preimage(c, m), m);
        CHECK(c.contains_cone(round));
        CHECK(round == c);

        // a non-surjective map: embed R^1 -> R^2
        const QMat column{{Rat(1)}, {Rat(1)}};
        const PolyCone round2 = linear_image(linear_preimage(c, column), column);
        CHECK(c.contains_cone(round2));
    }
}

TEST_CASE("property: interiors_intersect matches strict membership of interior point") {
    oracles::TestRng rng(5150);
    int informative = 0;
    for (int iter = 0; iter < 40; ++iter) {
        const PolyCone a = random_cone(rng, 2, 3);
        const PolyCone b = random_cone(rng, 2, 3);
        if (!a.is_full_dimensional() || !b.is_full_dimensional()) continue;
        ++informative;
        const PolyCone meet = intersect(a, b);
        const QVec p = meet.relative_interior_point();
        bool strict = !meet.is_zero_cone();
        for (const auto& ineq : a.inequalities())
            if (dot(ineq, p) <= 0) strict = false;
        for (const auto& ineq : b.inequalities())
            if (dot(ineq, p) <= 0) strict = false;
        CHECK(interiors_intersect(a, b) == strict);
    }
    CHECK(informative > 10);
}

TEST_CASE("property: face segment property on random segments") {
    const PolyCone octant =
        PolyCone::from_rays(3, {qv({1, 0, 0}), qv({0, 1, 0}), qv({0, 0, 1})});
    oracles::TestRng rng(424242);
    for (const auto& f : faces(octant)) {
        for (int s = 0; s < 100; ++s) {
            QVec p(3, Rat(0)), q(3, Rat(0));
            for (const auto& g : octant.generators()) {
                p = vec_add(p, vec_scale(Rat(rng.integer(0, 5)), g));
                q = vec_add(q, vec_scale(Rat(rng.integer(0, 5)), g));
            }
            const QVec mid = vec_scale(Rat(1, 2), vec_add(p, q));
            if (f.cone.contains(mid)) {
                // interior point of the segment in the face forces both endpoints in
                CHECK(f.cone.contains(p));
                CHECK(f.cone.contains(q));
            }
        }
    }
}

TEST_CASE("conic_combination reconstructs membership witnesses") {
    oracles::TestRng rng(1009);
    for (int iter = 0; iter < 20; ++iter) {
        const int rank = 2 + static_cast<int>(rng.integer(0, 1));
        const PolyCone c = random_cone(rng, rank, 3);
        if (!c.is_strictly_convex() || c.is_zero_cone()) continue;
        QVec p(rank, Rat(0));
        for (const auto& g : c.generators()) p = vec_add(p, vec_scale(Rat(rng.integer(0, 4)), g));
        const auto combo = conic_combination(c, p);
        QVec back(rank, Rat(0));
        for (const auto& [t, gi] : combo) {
            CHECK(t > 0);
            back = vec_add(back, vec_scale(t, c.generators()[gi]));
        }
        CHECK(back == p);
    }
    CHECK_THROWS_AS(conic_combination(quadrant(), qv({-1, 0})), InputError);
}
