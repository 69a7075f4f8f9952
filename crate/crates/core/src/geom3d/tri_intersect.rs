//! Closed-set intersection tests between possibly degenerate triangles.
//!
//! Every branch works on exact signs, so touching configurations (shared
//! vertices, edge grazing, coplanar overlap) register as intersections.

use super::{orient3d, Point3, Triangle3, TriangleKind};
use crate::geom2d::{orientation, Point2};
use num_traits::Signed;

/// True iff the two closed simplices share at least one point.
pub fn tri_tri_intersect(s: &Triangle3, t: &Triangle3) -> bool {
    use TriangleKind::*;
    let sv = s.vertices();
    let tv = t.vertices();
    match (s.kind(), t.kind()) {
        (Point, Point) => sv[0] == tv[0],
        (Point, Segment) => point_on_segment(&sv[0], &tv[0], &tv[1]),
        (Segment, Point) => point_on_segment(&tv[0], &sv[0], &sv[1]),
        (Point, Triangle) => point_in_triangle(&sv[0], tv),
        (Triangle, Point) => point_in_triangle(&tv[0], sv),
        (Segment, Segment) => segment_segment(&sv[0], &sv[1], &tv[0], &tv[1]),
        (Segment, Triangle) => segment_triangle(&sv[0], &sv[1], tv),
        (Triangle, Segment) => segment_triangle(&tv[0], &tv[1], sv),
        (Triangle, Triangle) => triangle_triangle(sv, tv),
    }
}

/// Membership in a closed segment; collinearity is established first.
fn point_on_segment(p: &Point3, a: &Point3, b: &Point3) -> bool {
    let d = b.sub(a);
    if !d.cross(&p.sub(a)).is_zero() {
        return false;
    }
    !p.sub(a).dot(&p.sub(b)).is_positive()
}

/// Axis index of the largest normal component; projecting it away keeps the
/// plane's incidence structure intact.
fn dominant_axis(n: &Point3) -> usize {
    debug_assert!(!n.is_zero());
    let ax = n.x.abs();
    let ay = n.y.abs();
    let az = n.z.abs();
    if ax >= ay && ax >= az {
        0
    } else if ay >= az {
        1
    } else {
        2
    }
}

fn drop_axis(p: &Point3, axis: usize) -> Point2 {
    match axis {
        0 => Point2::new(p.y.clone(), p.z.clone()),
        1 => Point2::new(p.x.clone(), p.z.clone()),
        _ => Point2::new(p.x.clone(), p.y.clone()),
    }
}

fn point_in_triangle(p: &Point3, tri: &[Point3]) -> bool {
    if orient3d(&tri[0], &tri[1], &tri[2], p) != 0 {
        return false;
    }
    let n = tri[1].sub(&tri[0]).cross(&tri[2].sub(&tri[0]));
    let axis = dominant_axis(&n);
    point_in_triangle_2d(
        &drop_axis(p, axis),
        &drop_axis(&tri[0], axis),
        &drop_axis(&tri[1], axis),
        &drop_axis(&tri[2], axis),
    )
}

fn point_in_triangle_2d(p: &Point2, a: &Point2, b: &Point2, c: &Point2) -> bool {
    let s1 = orientation(a, b, p);
    let s2 = orientation(b, c, p);
    let s3 = orientation(c, a, p);
    (s1 >= 0 && s2 >= 0 && s3 >= 0) || (s1 <= 0 && s2 <= 0 && s3 <= 0)
}

fn on_segment_2d(p: &Point2, q: &Point2, r: &Point2) -> bool {
    // q collinear with p, r assumed.
    let lo_x = if p.x <= r.x {
        (&p.x, &r.x)
    } else {
        (&r.x, &p.x)
    };
    let lo_y = if p.y <= r.y {
        (&p.y, &r.y)
    } else {
        (&r.y, &p.y)
    };
    *lo_x.0 <= q.x && q.x <= *lo_x.1 && *lo_y.0 <= q.y && q.y <= *lo_y.1
}

fn segment_segment_2d(a: &Point2, b: &Point2, c: &Point2, d: &Point2) -> bool {
    let o1 = orientation(a, b, c);
    let o2 = orientation(a, b, d);
    let o3 = orientation(c, d, a);
    let o4 = orientation(c, d, b);
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    (o1 == 0 && on_segment_2d(a, c, b))
        || (o2 == 0 && on_segment_2d(a, d, b))
        || (o3 == 0 && on_segment_2d(c, a, d))
        || (o4 == 0 && on_segment_2d(c, b, d))
}

fn segment_segment(a: &Point3, b: &Point3, c: &Point3, d: &Point3) -> bool {
    if orient3d(a, b, c, d) != 0 {
        return false;
    }
    let d1 = b.sub(a);
    let d2 = d.sub(c);
    let n = d1.cross(&d2);
    if n.is_zero() {
        if !d1.cross(&c.sub(a)).is_zero() {
            return false;
        }
        return point_on_segment(c, a, b)
            || point_on_segment(d, a, b)
            || point_on_segment(a, c, d)
            || point_on_segment(b, c, d);
    }
    let axis = dominant_axis(&n);
    segment_segment_2d(
        &drop_axis(a, axis),
        &drop_axis(b, axis),
        &drop_axis(c, axis),
        &drop_axis(d, axis),
    )
}

fn segment_triangle_2d(p: &Point2, q: &Point2, a: &Point2, b: &Point2, c: &Point2) -> bool {
    point_in_triangle_2d(p, a, b, c)
        || point_in_triangle_2d(q, a, b, c)
        || segment_segment_2d(p, q, a, b)
        || segment_segment_2d(p, q, b, c)
        || segment_segment_2d(p, q, c, a)
}

fn segment_triangle(p: &Point3, q: &Point3, tri: &[Point3]) -> bool {
    let s1 = orient3d(&tri[0], &tri[1], &tri[2], p);
    let s2 = orient3d(&tri[0], &tri[1], &tri[2], q);
    if s1 * s2 > 0 {
        return false;
    }
    if s1 == 0 && s2 == 0 {
        let n = tri[1].sub(&tri[0]).cross(&tri[2].sub(&tri[0]));
        let axis = dominant_axis(&n);
        return segment_triangle_2d(
            &drop_axis(p, axis),
            &drop_axis(q, axis),
            &drop_axis(&tri[0], axis),
            &drop_axis(&tri[1], axis),
            &drop_axis(&tri[2], axis),
        );
    }
    if s1 == 0 {
        return point_in_triangle(p, tri);
    }
    if s2 == 0 {
        return point_in_triangle(q, tri);
    }
    // Proper crossing of the plane: the piercing point lies in the closed
    // triangle iff the three edge orientations agree.
    let u = orient3d(p, q, &tri[0], &tri[1]);
    let v = orient3d(p, q, &tri[1], &tri[2]);
    let w = orient3d(p, q, &tri[2], &tri[0]);
    (u >= 0 && v >= 0 && w >= 0) || (u <= 0 && v <= 0 && w <= 0)
}

fn triangle_triangle(s: &[Point3], t: &[Point3]) -> bool {
    let signs_of = |tri: &[Point3], pts: &[Point3]| -> Vec<i8> {
        pts.iter()
            .map(|p| orient3d(&tri[0], &tri[1], &tri[2], p))
            .collect()
    };
    let st = signs_of(s, t);
    if st.iter().all(|&v| v > 0) || st.iter().all(|&v| v < 0) {
        return false;
    }
    let ts = signs_of(t, s);
    if ts.iter().all(|&v| v > 0) || ts.iter().all(|&v| v < 0) {
        return false;
    }
    if st.iter().all(|&v| v == 0) {
        let n = s[1].sub(&s[0]).cross(&s[2].sub(&s[0]));
        let axis = dominant_axis(&n);
        let sp: Vec<Point2> = s.iter().map(|p| drop_axis(p, axis)).collect();
        let tp: Vec<Point2> = t.iter().map(|p| drop_axis(p, axis)).collect();
        return triangle_triangle_2d(&sp, &tp);
    }
    for e in 0..3 {
        if segment_triangle(&s[e], &s[(e + 1) % 3], t)
            || segment_triangle(&t[e], &t[(e + 1) % 3], s)
        {
            return true;
        }
    }
    false
}

fn triangle_triangle_2d(s: &[Point2], t: &[Point2]) -> bool {
    for p in s {
        if point_in_triangle_2d(p, &t[0], &t[1], &t[2]) {
            return true;
        }
    }
    for p in t {
        if point_in_triangle_2d(p, &s[0], &s[1], &s[2]) {
            return true;
        }
    }
    for i in 0..3 {
        for j in 0..3 {
            if segment_segment_2d(&s[i], &s[(i + 1) % 3], &t[j], &t[(j + 1) % 3]) {
                return true;
            }
        }
    }
    false
}
