//! Randomized invariants, mostly cross-checks between independent code
//! paths: predicates against constructions, geometric optima against
//! brute-force combinatorial ones, serialization against itself.

use hardcover_core::combinat::{
    edge_color, exact_max_independent_set, exact_min_set_cover, exhaustive_min_vertex_cover,
    greedy_set_cover, vc_to_setcover,
};
use hardcover_core::gen::{random_cover_system, random_degree3_graph};
use hardcover_core::geom2d::{circle_through, cocircular_sign, unit_circle_point, Point2};
use hardcover_core::geom3d::{
    facet_witness_valid, lift, moment_sites, plane_of_lifted_circle, tri_tri_intersect,
    voronoi_facet_witness, Point3, Triangle3,
};
use hardcover_core::instance::{Instance, InstanceFile};
use hardcover_core::reductions::{
    build_circles, build_fat_triangles, build_friendly, build_indep3d, build_planes, CoverGeometry,
};
use hardcover_core::Rational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-60i64..=60, 1i64..=12).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn int_point2() -> impl Strategy<Value = Point2> {
    (-5i64..=5, -5i64..=5).prop_map(|(x, y)| Point2::new(rat(x), rat(y)))
}

fn int_point3() -> impl Strategy<Value = Point3> {
    (-4i64..=4, -4i64..=4, -4i64..=4).prop_map(|(x, y, z)| Point3::new(rat(x), rat(y), rat(z)))
}

fn sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

fn sorted_vertices(t: &Triangle3) -> Vec<Point3> {
    let mut vs = t.vertices().to_vec();
    vs.sort_by(|a, b| (&a.x, &a.y, &a.z).cmp(&(&b.x, &b.y, &b.z)));
    vs
}

proptest! {
    #[test]
    fn unit_circle_points_have_unit_norm(t in small_rational()) {
        let u = unit_circle_point(t.clone());
        prop_assert_eq!(u.point.norm_sq(), Rational::one());
        prop_assert_eq!(u.t, t);
    }

    #[test]
    fn circumcircle_passes_through_its_triple(
        ts in proptest::collection::vec(small_rational(), 3)
    ) {
        prop_assume!(ts[0] != ts[1] && ts[0] != ts[2] && ts[1] != ts[2]);
        let ps: Vec<Point2> = ts.iter().map(|t| unit_circle_point(t.clone()).point).collect();
        let c = circle_through(&ps[0], &ps[1], &ps[2]).unwrap();
        for p in &ps {
            prop_assert!(c.contains_on_boundary(p));
        }
    }

    #[test]
    fn cocircular_sign_vanishes_exactly_on_the_circle(
        ts in proptest::collection::vec(small_rational(), 4)
    ) {
        for i in 0..4 {
            for j in i + 1..4 {
                prop_assume!(ts[i] != ts[j]);
            }
        }
        let ps: Vec<Point2> = ts.iter().map(|t| unit_circle_point(t.clone()).point).collect();
        prop_assert_eq!(cocircular_sign(&ps[0], &ps[1], &ps[2], &ps[3]).unwrap(), 0);
        let outside = ps[3].scale(&rat(2));
        prop_assert_eq!(cocircular_sign(&ps[0], &ps[1], &ps[2], &outside).unwrap(), -1);
        let inside = ps[3].scale(&Rational::new(1.into(), 2.into()));
        prop_assert_eq!(cocircular_sign(&ps[0], &ps[1], &ps[2], &inside).unwrap(), 1);
    }

    #[test]
    fn hull_of_ignores_order_and_is_idempotent(
        pts in proptest::collection::vec(int_point3(), 1..=3),
        seed in any::<u64>(),
    ) {
        let hull = Triangle3::hull_of(&pts).unwrap();
        let mut shuffled = pts.clone();
        let k = (seed as usize) % shuffled.len().max(1);
        shuffled.rotate_left(k);
        shuffled.reverse();
        let again = Triangle3::hull_of(&shuffled).unwrap();
        prop_assert_eq!(hull.kind(), again.kind());
        prop_assert_eq!(sorted_vertices(&hull), sorted_vertices(&again));
        let re = Triangle3::hull_of(hull.vertices()).unwrap();
        prop_assert_eq!(sorted_vertices(&hull), sorted_vertices(&re));
        prop_assert_eq!(hull.kind(), re.kind());
        prop_assert!(hull.validate().is_ok());
    }

    #[test]
    fn lifted_circle_plane_classifies_like_the_circle(
        (p, q, r, s) in (int_point2(), int_point2(), int_point2(), int_point2())
    ) {
        let circle = match circle_through(&p, &q, &r) {
            Ok(c) => c,
            Err(_) => return Ok(()),
        };
        let plane = plane_of_lifted_circle(&circle);
        for on in [&p, &q, &r] {
            prop_assert!(plane.contains(&lift(on)));
        }
        // The plane's eval sign is only defined up to normalization, so
        // calibrate with the lifted center, which is strictly inside.
        let flip = -sign(&plane.eval(&lift(&circle.center)));
        prop_assert_ne!(flip, 0);
        prop_assert_eq!(flip * sign(&plane.eval(&lift(&s))), circle.power_sign(&s));
    }

    #[test]
    fn tri_tri_intersection_is_symmetric_and_reflexive(
        a in proptest::collection::vec(int_point3(), 1..=3),
        b in proptest::collection::vec(int_point3(), 1..=3),
    ) {
        let s = Triangle3::hull_of(&a).unwrap();
        let t = Triangle3::hull_of(&b).unwrap();
        prop_assert_eq!(tri_tri_intersect(&s, &t), tri_tri_intersect(&t, &s));
        prop_assert!(tri_tri_intersect(&s, &s));
    }

    #[test]
    fn edge_coloring_is_proper_with_at_most_four_colors(
        n in 1usize..=40, seed in any::<u64>()
    ) {
        let g = random_degree3_graph(n, seed);
        let coloring = edge_color(&g).unwrap();
        prop_assert!(coloring.is_proper(&g));
        prop_assert!(coloring.color_count() <= 4);
    }

    #[test]
    fn cover_and_independence_oracles_agree(n in 1usize..=12, seed in any::<u64>()) {
        let g = random_degree3_graph(n, seed);
        let vc = exhaustive_min_vertex_cover(&g).unwrap();
        let mis = exact_max_independent_set(&g).unwrap();
        prop_assert_eq!(vc.len() + mis.size, g.n);
        for &(u, v) in &g.edges {
            prop_assert!(vc.contains(&u) || vc.contains(&v));
            prop_assert!(!(mis.vertices.contains(&u) && mis.vertices.contains(&v)));
        }
    }

    #[test]
    fn exact_cover_never_exceeds_greedy(
        (n, m) in (3usize..=12).prop_flat_map(|n| (Just(n), n.div_ceil(3)..=8usize)),
        seed in any::<u64>(),
    ) {
        let s = random_cover_system(n, m, seed);
        let exact = exact_min_set_cover(&s).unwrap();
        let greedy = greedy_set_cover(&s).unwrap();
        prop_assert!(exact.optimal);
        prop_assert!(exact.covers(&s));
        prop_assert!(greedy.covers(&s));
        prop_assert!(exact.size <= greedy.size);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn moment_curve_cells_all_touch(n in 2usize..=8) {
        let sites = moment_sites(n);
        for i in 0..n {
            for j in i + 1..n {
                let w = voronoi_facet_witness(i, j, &sites).unwrap();
                prop_assert!(facet_witness_valid(&w, &sites));
                prop_assert!(w.margin.is_positive());
            }
        }
    }

    #[test]
    fn fat_triangle_cover_optimum_matches_vertex_cover(
        n in 3usize..=9, seed in any::<u64>()
    ) {
        let g = random_degree3_graph(n, seed);
        prop_assume!(!g.edges.is_empty());
        let inst = build_fat_triangles(&g, &Rational::one()).unwrap();
        let cover = exact_min_set_cover(&inst.cover_system().unwrap()).unwrap();
        let vc = exhaustive_min_vertex_cover(&g).unwrap();
        prop_assert_eq!(cover.size, vc.len());
    }

    #[test]
    fn friendly_gears_reproduce_their_source_system(
        (n, m) in (3usize..=10).prop_flat_map(|n| (Just(n), n.div_ceil(3)..=6usize)),
        seed in any::<u64>(),
    ) {
        let system = random_cover_system(n, m, seed);
        let inst = build_friendly(&system).unwrap();
        prop_assert!(hardcover_core::reductions::verify_friendly(&inst).pass);
        prop_assert_eq!(inst.cover_system().unwrap(), system);
    }

    #[test]
    fn vertex_cover_translation_matches_fat_ground_sets(
        n in 2usize..=8, seed in any::<u64>()
    ) {
        let g = random_degree3_graph(n, seed);
        prop_assume!(!g.edges.is_empty());
        let direct = vc_to_setcover(&g).unwrap();
        let inst = build_fat_triangles(&g, &Rational::one()).unwrap();
        prop_assert_eq!(inst.cover_system().unwrap().sets, direct.sets);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn instance_files_roundtrip_byte_identically(n in 3usize..=6, seed in any::<u64>()) {
        let g = random_degree3_graph(n, seed);
        prop_assume!(!g.edges.is_empty());
        let circles = build_circles(&g, &Rational::one()).unwrap();
        let system = random_cover_system(2 * n, n, seed);
        let instances = vec![
            Instance::Friendly(build_friendly(&system).unwrap()),
            Instance::FatTri(build_fat_triangles(&g, &Rational::one()).unwrap()),
            Instance::Planes(build_planes(&circles).unwrap()),
            Instance::Circles(circles),
            Instance::Indep3d(build_indep3d(&g).unwrap()),
        ];
        for instance in instances {
            let file = InstanceFile::new(instance, Some(seed));
            let text = file.to_json();
            let parsed = InstanceFile::from_json(&text).unwrap();
            prop_assert_eq!(&text, &parsed.to_json());
            prop_assert!(parsed.instance.verify().pass, "{} failed after reload",
                parsed.instance.kind_name());
        }
    }
}
