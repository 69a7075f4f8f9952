//! Lossy visual exports: SVG for the planar kinds, OBJ for the 3D one.
//!
//! Coordinates are printed as floating point for display only. Nothing
//! produced here is parsed back or used in verification.

use crate::geom2d::{gear_boundary, Ext1Point, GearBoundaryElement, Point2, SegmentEnd};
use crate::geom3d::TriangleKind;
use crate::instance::Instance;
use crate::rational::rational_to_f64;
use crate::reductions::{
    CircleInstance, FatTriangleInstance, FriendlyInstance, Triangle3DInstance,
};
use std::f64::consts::PI;
use std::fmt::Write;

const SVG_OPEN: &str = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.2 -1.2 2.4 2.4\">\n\
<style>\n\
.unit { fill: none; stroke: #999999; stroke-width: 0.004; }\n\
.region { fill: #4682b440; stroke: #27506e; stroke-width: 0.005; }\n\
.cover { fill: none; stroke: #27506e; stroke-width: 0.005; }\n\
.pt { fill: #b22222; }\n\
.pt.filler { fill: #228b22; }\n\
</style>\n\
<circle class=\"unit\" cx=\"0\" cy=\"0\" r=\"1\"/>\n";

fn num(v: f64) -> String {
    format!("{v:.12}")
}

/// SVG coordinates of a rational point; the y axis flips because SVG
/// grows downward.
fn svg_xy(p: &Point2) -> (f64, f64) {
    (rational_to_f64(&p.x), -rational_to_f64(&p.y))
}

fn ext_xy(p: &Ext1Point) -> (f64, f64) {
    (p.x.to_f64(), -p.y.to_f64())
}

fn push_point(out: &mut String, p: &Point2, filler: bool) {
    let (x, y) = svg_xy(p);
    let class = if filler { "pt filler" } else { "pt" };
    writeln!(
        out,
        "<circle class=\"{class}\" cx=\"{}\" cy=\"{}\" r=\"0.008\"/>",
        num(x),
        num(y)
    )
    .unwrap();
}

/// Render an SVG picture of a planar instance. Only the friendly,
/// fat-tri, and circles kinds have a planar picture.
pub fn export_svg(instance: &Instance) -> Result<String, String> {
    match instance {
        Instance::Friendly(inst) => Ok(friendly_svg(inst)?),
        Instance::FatTri(inst) => Ok(fat_svg(inst)),
        Instance::Circles(inst) => Ok(circles_svg(inst)),
        other => Err(format!(
            "svg export covers friendly, fat-tri, and circles instances, not {}",
            other.kind_name()
        )),
    }
}

fn friendly_svg(inst: &FriendlyInstance) -> Result<String, String> {
    let mut out = String::from(SVG_OPEN);
    let points: Vec<Point2> = inst.points.iter().map(|u| u.point.clone()).collect();
    for (s, region) in inst.regions.iter().enumerate() {
        let tips: Vec<(usize, Point2)> = region
            .tooth_tips
            .iter()
            .map(|&i| (i, points[i].clone()))
            .collect();
        let rebuilt = gear_boundary(&region.inner_radius, &tips)
            .map_err(|e| format!("set {s}: cannot lay out gear boundary: {e}"))?;
        let d = gear_path(
            &rebuilt.boundary,
            &points,
            rational_to_f64(&region.inner_radius),
        );
        writeln!(out, "<path class=\"region\" id=\"set-{s}\" d=\"{d}\"/>").unwrap();
    }
    for p in &points {
        push_point(&mut out, p, false);
    }
    out.push_str("</svg>\n");
    Ok(out)
}

fn segment_end_xy(end: &SegmentEnd, points: &[Point2]) -> (f64, f64) {
    match end {
        SegmentEnd::Tangency(p) => ext_xy(p),
        SegmentEnd::Tip(i) => svg_xy(&points[*i]),
    }
}

fn element_start(e: &GearBoundaryElement, points: &[Point2]) -> (f64, f64) {
    match e {
        GearBoundaryElement::Arc { start, .. } => ext_xy(start),
        GearBoundaryElement::Segment { from, .. } => segment_end_xy(from, points),
    }
}

/// Path data for one counterclockwise gear boundary cycle. Because the
/// emitted y coordinates are negated, counterclockwise arcs render with
/// sweep flag 0.
fn gear_path(boundary: &[GearBoundaryElement], points: &[Point2], radius: f64) -> String {
    let mut d = String::new();
    let (x0, y0) = element_start(&boundary[0], points);
    write!(d, "M {} {}", num(x0), num(y0)).unwrap();
    for e in boundary {
        match e {
            GearBoundaryElement::Arc { start, end } => {
                let (sx, sy) = ext_xy(start);
                let (ex, ey) = ext_xy(end);
                // Central angle measured before the y flip, where the
                // boundary runs counterclockwise.
                let sweep = (f64::atan2(-ey, ex) - f64::atan2(-sy, sx)).rem_euclid(2.0 * PI);
                let large = if sweep > PI { 1 } else { 0 };
                write!(
                    d,
                    " A {r} {r} 0 {large} 0 {} {}",
                    num(ex),
                    num(ey),
                    r = num(radius)
                )
                .unwrap();
            }
            GearBoundaryElement::Segment { to, .. } => {
                let (x, y) = segment_end_xy(to, points);
                write!(d, " L {} {}", num(x), num(y)).unwrap();
            }
        }
    }
    d.push_str(" Z");
    d
}

fn fat_svg(inst: &FatTriangleInstance) -> String {
    let mut out = String::from(SVG_OPEN);
    for (v, tri) in inst.triangles.iter().enumerate() {
        let corners: Vec<String> = tri
            .vertices()
            .iter()
            .map(|&i| {
                let (x, y) = svg_xy(&inst.points[i].point);
                format!("{},{}", num(x), num(y))
            })
            .collect();
        writeln!(
            out,
            "<polygon class=\"region\" id=\"triangle-{v}\" points=\"{}\"/>",
            corners.join(" ")
        )
        .unwrap();
    }
    for (i, p) in inst.points.iter().enumerate() {
        push_point(&mut out, &p.point, inst.is_filler[i]);
    }
    out.push_str("</svg>\n");
    out
}

fn circles_svg(inst: &CircleInstance) -> String {
    let mut out = String::from(SVG_OPEN);
    for (v, c) in inst.circles.iter().enumerate() {
        let (cx, cy) = svg_xy(&c.center);
        let r = rational_to_f64(&c.radius_sq).sqrt();
        writeln!(
            out,
            "<circle class=\"cover\" id=\"circle-{v}\" cx=\"{}\" cy=\"{}\" r=\"{}\"/>",
            num(cx),
            num(cy),
            num(r)
        )
        .unwrap();
    }
    for (i, p) in inst.points.iter().enumerate() {
        push_point(&mut out, p, inst.is_filler[i]);
    }
    out.push_str("</svg>\n");
    out
}

/// Render a Wavefront OBJ model of a 3D triangle instance. Degenerate
/// members come out as `p` and `l` elements, proper triangles as faces.
pub fn export_obj(instance: &Instance) -> Result<String, String> {
    let inst = match instance {
        Instance::Indep3d(inst) => inst,
        other => {
            return Err(format!(
                "obj export covers indep3d instances, not {}",
                other.kind_name()
            ))
        }
    };
    Ok(indep3d_obj(inst))
}

fn indep3d_obj(inst: &Triangle3DInstance) -> String {
    let mut out = String::new();
    let mut next = 1usize;
    for (v, tri) in inst.triangles.iter().enumerate() {
        writeln!(out, "o triangle-{v}").unwrap();
        let first = next;
        for p in tri.vertices() {
            writeln!(
                out,
                "v {} {} {}",
                num(rational_to_f64(&p.x)),
                num(rational_to_f64(&p.y)),
                num(rational_to_f64(&p.z))
            )
            .unwrap();
            next += 1;
        }
        let ids: Vec<String> = (first..next).map(|i| i.to_string()).collect();
        let element = match tri.kind() {
            TriangleKind::Point => "p",
            TriangleKind::Segment => "l",
            TriangleKind::Triangle => "f",
        };
        writeln!(out, "{element} {}", ids.join(" ")).unwrap();
    }
    out
}
