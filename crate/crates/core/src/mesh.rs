//! Conforming triangulations of polygonal domains with labeled boundary
//! edges, uniform red refinement, and graded bisection refinement toward a
//! point.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::geometry::{BoundaryDecomposition, BoundaryLabel, PolygonalDomain, Vec2};
use crate::quadrature::{tri_point, TRI_RULE};

/// Hard cap on mesh size; refinement requests beyond this are rejected.
pub const MAX_NODES: usize = 4_000_000;

/// Labeled boundary edge of a mesh (node pair in counterclockwise order).
#[derive(Debug, Clone, Copy)]
pub struct BoundaryEdge {
    pub a: usize,
    pub b: usize,
    pub label: BoundaryLabel,
    /// Index of the polygon edge the mesh edge lies on.
    pub polygon_edge: usize,
}

#[derive(Debug, Clone)]
pub struct TriangleMesh {
    pub nodes: Vec<Vec2>,
    pub triangles: Vec<[usize; 3]>,
    pub boundary_edges: Vec<BoundaryEdge>,
    /// Maximum triangle diameter.
    pub h: f64,
}

impl TriangleMesh {
    pub fn num_nodes(&self) -> usize {
        self.nodes.len()
    }

    pub fn num_triangles(&self) -> usize {
        self.triangles.len()
    }

    pub fn tri_points(&self, t: usize) -> (Vec2, Vec2, Vec2) {
        let [a, b, c] = self.triangles[t];
        (self.nodes[a], self.nodes[b], self.nodes[c])
    }

    pub fn tri_area(&self, t: usize) -> f64 {
        let (p0, p1, p2) = self.tri_points(t);
        0.5 * (p1 - p0).cross(p2 - p0)
    }

    pub fn tri_diameter(&self, t: usize) -> f64 {
        let (p0, p1, p2) = self.tri_points(t);
        p0.dist(p1).max(p1.dist(p2)).max(p2.dist(p0))
    }

    pub fn tri_centroid(&self, t: usize) -> Vec2 {
        let (p0, p1, p2) = self.tri_points(t);
        Vec2::new((p0.x + p1.x + p2.x) / 3.0, (p0.y + p1.y + p2.y) / 3.0)
    }

    pub fn total_area(&self) -> f64 {
        (0..self.num_triangles()).map(|t| self.tri_area(t)).sum()
    }

    pub fn min_angle_deg(&self) -> f64 {
        let mut min = f64::INFINITY;
        for t in 0..self.num_triangles() {
            let (p0, p1, p2) = self.tri_points(t);
            for (a, b, c) in [(p0, p1, p2), (p1, p2, p0), (p2, p0, p1)] {
                let u = (b - a).normalize();
                let v = (c - a).normalize();
                min = min.min(u.dot(v).clamp(-1.0, 1.0).acos());
            }
        }
        min.to_degrees()
    }

    /// Physical quadrature points and weights of triangle `t`.
    pub fn quad_points(&self, t: usize) -> [(Vec2, f64); 6] {
        let (p0, p1, p2) = self.tri_points(t);
        let area = self.tri_area(t);
        let mut out = [(Vec2::new(0.0, 0.0), 0.0); 6];
        for (k, &(b, w)) in TRI_RULE.iter().enumerate() {
            out[k] = (tri_point(p0, p1, p2, b), w * area);
        }
        out
    }

    fn recompute_h(&mut self) {
        self.h = (0..self.num_triangles())
            .map(|t| self.tri_diameter(t))
            .fold(0.0, f64::max);
    }

    /// Structural validation: positive orientation, conformity, labeling.
    pub fn validate(&self) -> Result<()> {
        for t in 0..self.num_triangles() {
            if self.tri_area(t) <= 0.0 {
                return Err(Error::numerical(format!("triangle {t} not positively oriented")));
            }
        }
        let mut edge_count: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for tri in &self.triangles {
            for k in 0..3 {
                let (a, b) = (tri[k], tri[(k + 1) % 3]);
                let key = (a.min(b), a.max(b));
                *edge_count.entry(key).or_insert(0) += 1;
            }
        }
        let mut boundary_set: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for (i, be) in self.boundary_edges.iter().enumerate() {
            boundary_set.insert((be.a.min(be.b), be.a.max(be.b)), i);
        }
        for (key, cnt) in &edge_count {
            match cnt {
                1 => {
                    if !boundary_set.contains_key(key) {
                        return Err(Error::numerical(format!(
                            "hanging edge {key:?}: on the hull but not labeled"
                        )));
                    }
                }
                2 => {
                    if boundary_set.contains_key(key) {
                        return Err(Error::numerical(format!(
                            "interior edge {key:?} carries a boundary label"
                        )));
                    }
                }
                _ => {
                    return Err(Error::numerical(format!(
                        "edge {key:?} shared by {cnt} triangles"
                    )))
                }
            }
        }
        if boundary_set.len() != self.boundary_edges.len() {
            return Err(Error::numerical("duplicate boundary edges"));
        }
        Ok(())
    }

    /// Uniform red refinement: every triangle splits into four congruent
    /// children; `h` halves and boundary labels are inherited.
    pub fn refine(&self) -> Result<TriangleMesh> {
        if self.num_nodes() * 4 > MAX_NODES {
            return Err(Error::invalid("refinement exceeds the node budget"));
        }
        let mut nodes = self.nodes.clone();
        let mut midpoint: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut mid = |a: usize, b: usize, nodes: &mut Vec<Vec2>| -> usize {
            let key = (a.min(b), a.max(b));
            *midpoint.entry(key).or_insert_with(|| {
                let p = nodes[a] + (nodes[b] - nodes[a]).scale(0.5);
                nodes.push(p);
                nodes.len() - 1
            })
        };
        let mut triangles = Vec::with_capacity(self.num_triangles() * 4);
        for tri in &self.triangles {
            let [a, b, c] = *tri;
            let ab = mid(a, b, &mut nodes);
            let bc = mid(b, c, &mut nodes);
            let ca = mid(c, a, &mut nodes);
            triangles.push([a, ab, ca]);
            triangles.push([ab, b, bc]);
            triangles.push([ca, bc, c]);
            triangles.push([ab, bc, ca]);
        }
        let mut boundary_edges = Vec::with_capacity(self.boundary_edges.len() * 2);
        for be in &self.boundary_edges {
            let m = mid(be.a, be.b, &mut nodes);
            boundary_edges.push(BoundaryEdge { a: be.a, b: m, ..*be });
            boundary_edges.push(BoundaryEdge { a: m, b: be.b, ..*be });
        }
        let mut out = TriangleMesh { nodes, triangles, boundary_edges, h: 0.0 };
        out.recompute_h();
        Ok(out)
    }

    /// Graded refinement toward `point` by conforming longest-edge
    /// bisection. Each level roughly halves the local mesh size near the
    /// point while leaving the far field untouched.
    pub fn graded_refine_toward(&self, point: Vec2, levels: usize) -> Result<TriangleMesh> {
        let mut mesh = self.clone();
        for _ in 0..2 * levels {
            let marked: Vec<usize> = (0..mesh.num_triangles())
                .filter(|&t| {
                    let d = mesh.tri_diameter(t);
                    let (p0, p1, p2) = mesh.tri_points(t);
                    let dist = [p0, p1, p2]
                        .iter()
                        .map(|p| p.dist(point))
                        .fold(f64::INFINITY, f64::min);
                    dist <= d
                })
                .collect();
            mesh.bisect_marked(&marked)?;
        }
        mesh.recompute_h();
        Ok(mesh)
    }

    /// Conforming longest-edge (Rivara) bisection of the marked triangles.
    fn bisect_marked(&mut self, marked: &[usize]) -> Result<()> {
        let mut queue: Vec<usize> = marked.to_vec();
        let mut generation = 0usize;
        while let Some(t) = queue.pop() {
            generation += 1;
            if generation > 50 * self.num_triangles() + 1000 {
                return Err(Error::numerical("bisection closure did not terminate"));
            }
            if t >= self.num_triangles() {
                continue;
            }
            if self.num_nodes() + 1 > MAX_NODES {
                return Err(Error::invalid("refinement exceeds the node budget"));
            }
            let e = self.longest_edge(t);
            match self.neighbor_across(t, e) {
                Some(n) if self.longest_edge(n) != e => {
                    // Make the neighbor compatible first, then retry.
                    queue.push(t);
                    queue.push(n);
                    // Recursion depth is bounded because diameters decrease
                    // along the propagation chain.
                    continue;
                }
                nb => {
                    self.split_edge(t, nb, e);
                }
            }
        }
        Ok(())
    }

    fn longest_edge(&self, t: usize) -> (usize, usize) {
        let tri = self.triangles[t];
        let mut best = (tri[0], tri[1]);
        let mut best_len = -1.0;
        for k in 0..3 {
            let (a, b) = (tri[k], tri[(k + 1) % 3]);
            let l = self.nodes[a].dist(self.nodes[b]);
            // Deterministic tie break by node index.
            let better = l > best_len + 1e-14
                || (l > best_len - 1e-14
                    && (a.min(b), a.max(b)) < (best.0.min(best.1), best.0.max(best.1)));
            if better {
                best_len = l;
                best = (a, b);
            }
        }
        (best.0.min(best.1), best.0.max(best.1))
    }

    fn neighbor_across(&self, t: usize, e: (usize, usize)) -> Option<usize> {
        for (i, tri) in self.triangles.iter().enumerate() {
            if i == t {
                continue;
            }
            for k in 0..3 {
                let (a, b) = (tri[k], tri[(k + 1) % 3]);
                if (a.min(b), a.max(b)) == e {
                    return Some(i);
                }
            }
        }
        None
    }

    /// Splits the edge `e` shared by `t` (and optionally `nb`) at its
    /// midpoint, replacing each incident triangle by two children.
    fn split_edge(&mut self, t: usize, nb: Option<usize>, e: (usize, usize)) {
        let m = {
            let p = self.nodes[e.0] + (self.nodes[e.1] - self.nodes[e.0]).scale(0.5);
            self.nodes.push(p);
            self.nodes.len() - 1
        };
        let mut split_tri = |idx: usize, tris: &mut Vec<[usize; 3]>| {
            let tri = tris[idx];
            // Preserve orientation: replace e.1 by m in one child, e.0 in
            // the other.
            let mut c1 = tri;
            let mut c2 = tri;
            for v in c1.iter_mut() {
                if *v == e.1 {
                    *v = m;
                }
            }
            for v in c2.iter_mut() {
                if *v == e.0 {
                    *v = m;
                }
            }
            tris[idx] = c1;
            tris.push(c2);
        };
        let mut tris = std::mem::take(&mut self.triangles);
        split_tri(t, &mut tris);
        if let Some(n) = nb {
            split_tri(n, &mut tris);
        }
        self.triangles = tris;
        // Boundary edge bookkeeping.
        if nb.is_none() {
            if let Some(pos) = self
                .boundary_edges
                .iter()
                .position(|be| (be.a.min(be.b), be.a.max(be.b)) == e)
            {
                let be = self.boundary_edges[pos];
                self.boundary_edges[pos] = BoundaryEdge { a: be.a, b: m, ..be };
                self.boundary_edges.push(BoundaryEdge { a: m, b: be.b, ..be });
            }
        }
    }

    /// Text dump with NODES / TRIANGLES / BOUNDARY sections.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        s.push_str("NODES\n");
        for p in &self.nodes {
            s.push_str(&format!("{:.16e} {:.16e}\n", p.x, p.y));
        }
        s.push_str("TRIANGLES\n");
        for t in &self.triangles {
            s.push_str(&format!("{} {} {}\n", t[0], t[1], t[2]));
        }
        s.push_str("BOUNDARY\n");
        for be in &self.boundary_edges {
            let l = match be.label {
                BoundaryLabel::D => "D",
                BoundaryLabel::N => "N",
            };
            s.push_str(&format!("{} {} {} {}\n", be.a, be.b, l, be.polygon_edge));
        }
        s
    }
}

/// Triangulates the domain so that transition points are mesh nodes and
/// `h <= target_h`.
pub fn triangulate(
    domain: &PolygonalDomain,
    decomp: &BoundaryDecomposition,
    target_h: f64,
) -> Result<TriangleMesh> {
    if target_h <= 0.0 {
        return Err(Error::invalid("target_h must be positive"));
    }
    // Boundary loop: polygon vertices plus D/N transition points, ordered by
    // arc length.
    let mut breakpoints: Vec<f64> = (0..domain.num_edges())
        .map(|e| domain.arclen_of(e, 0.0))
        .collect();
    for s in decomp.transition_arclens() {
        breakpoints.push(s);
    }
    breakpoints.sort_by(|a, b| a.partial_cmp(b).unwrap());
    breakpoints.dedup_by(|a, b| (*a - *b).abs() < 1e-12 * (1.0 + domain.perimeter()));

    let loop_pts: Vec<Vec2> = breakpoints.iter().map(|&s| domain.point_at_arclen(s)).collect();
    let nb = loop_pts.len();

    // Coarse triangulation of the loop, then Delaunay flips for quality.
    let mut triangles = ear_clip(&loop_pts)?;
    lawson_flips(&loop_pts, &mut triangles, nb);

    let mut boundary_edges = Vec::with_capacity(nb);
    for i in 0..nb {
        let s0 = breakpoints[i];
        let s1 = if i + 1 < nb { breakpoints[i + 1] } else { domain.perimeter() };
        let smid = 0.5 * (s0 + s1);
        let (edge, _) = domain.edge_at_arclen(smid);
        boundary_edges.push(BoundaryEdge {
            a: i,
            b: (i + 1) % nb,
            label: decomp.label_at_arclen(smid),
            polygon_edge: edge,
        });
    }

    let mut mesh = TriangleMesh { nodes: loop_pts, triangles, boundary_edges, h: 0.0 };
    mesh.recompute_h();
    while mesh.h > target_h {
        mesh = mesh.refine()?;
    }
    mesh.validate()?;
    Ok(mesh)
}

/// Ear clipping of a simple counterclockwise polygon.
fn ear_clip(pts: &[Vec2]) -> Result<Vec<[usize; 3]>> {
    let n = pts.len();
    if n < 3 {
        return Err(Error::invalid("polygon needs at least 3 points"));
    }
    let mut ring: Vec<usize> = (0..n).collect();
    let mut tris = Vec::with_capacity(n - 2);
    let mut guard = 0usize;
    while ring.len() > 3 {
        guard += 1;
        if guard > n * n + 100 {
            return Err(Error::numerical("ear clipping failed (degenerate polygon?)"));
        }
        let m = ring.len();
        let mut clipped = false;
        // Prefer the largest-area valid ear for mildly better quality.
        let mut best: Option<(usize, f64)> = None;
        for k in 0..m {
            let ia = ring[(k + m - 1) % m];
            let ib = ring[k];
            let ic = ring[(k + 1) % m];
            let (a, b, c) = (pts[ia], pts[ib], pts[ic]);
            let area2 = (b - a).cross(c - a);
            if area2 <= 1e-14 {
                continue;
            }
            let mut ok = true;
            for &j in &ring {
                if j == ia || j == ib || j == ic {
                    continue;
                }
                if point_in_tri(pts[j], a, b, c) {
                    ok = false;
                    break;
                }
            }
            if ok {
                let quality = ear_quality(a, b, c);
                if best.map_or(true, |(_, q)| quality > q) {
                    best = Some((k, quality));
                }
            }
        }
        if let Some((k, _)) = best {
            let m = ring.len();
            let ia = ring[(k + m - 1) % m];
            let ib = ring[k];
            let ic = ring[(k + 1) % m];
            tris.push([ia, ib, ic]);
            ring.remove(k);
            clipped = true;
        }
        if !clipped {
            return Err(Error::numerical("no ear found (polygon may be degenerate)"));
        }
    }
    let area2 = (pts[ring[1]] - pts[ring[0]]).cross(pts[ring[2]] - pts[ring[0]]);
    if area2 > 1e-14 {
        tris.push([ring[0], ring[1], ring[2]]);
    }
    Ok(tris)
}

fn ear_quality(a: Vec2, b: Vec2, c: Vec2) -> f64 {
    // Ratio of inradius to circumradius, scale-invariant in (0, 0.5].
    let la = b.dist(c);
    let lb = c.dist(a);
    let lc = a.dist(b);
    let s = 0.5 * (la + lb + lc);
    let area = 0.5 * (b - a).cross(c - a);
    let r_in = area / s;
    let r_circ = la * lb * lc / (4.0 * area);
    r_in / r_circ
}

fn point_in_tri(p: Vec2, a: Vec2, b: Vec2, c: Vec2) -> bool {
    let d1 = (b - a).cross(p - a);
    let d2 = (c - b).cross(p - b);
    let d3 = (a - c).cross(p - c);
    d1 > 1e-14 && d2 > 1e-14 && d3 > 1e-14
}

/// Lawson edge flips toward Delaunay, restricted to interior edges. The
/// first `n_boundary` node indices form the boundary loop, so an edge between
/// consecutive loop nodes is never flipped.
fn lawson_flips(pts: &[Vec2], tris: &mut Vec<[usize; 3]>, n_boundary: usize) {
    for _pass in 0..50 {
        let mut edge_map: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (i, t) in tris.iter().enumerate() {
            for k in 0..3 {
                let (a, b) = (t[k], t[(k + 1) % 3]);
                edge_map.entry((a.min(b), a.max(b))).or_default().push(i);
            }
        }
        let mut flipped = false;
        for (&(a, b), owners) in &edge_map {
            if owners.len() != 2 {
                continue;
            }
            // Boundary loop edges are consecutive indices mod n_boundary.
            if (a + 1) % n_boundary == b || (b + 1) % n_boundary == a {
                continue;
            }
            let (t1, t2) = (owners[0], owners[1]);
            let c = opposite_vertex(tris[t1], a, b);
            let d = opposite_vertex(tris[t2], a, b);
            if in_circumcircle(pts[a], pts[b], pts[c], pts[d]) {
                // Flip (a,b) -> (c,d), keeping orientation.
                let n1 = orient_tri([a, c, d], pts);
                let n2 = orient_tri([b, d, c], pts);
                if tri_area2(n1, pts) > 1e-14 && tri_area2(n2, pts) > 1e-14 {
                    tris[t1] = n1;
                    tris[t2] = n2;
                    flipped = true;
                    break;
                }
            }
        }
        if !flipped {
            break;
        }
    }
}

fn opposite_vertex(t: [usize; 3], a: usize, b: usize) -> usize {
    *t.iter().find(|v| **v != a && **v != b).unwrap()
}

fn tri_area2(t: [usize; 3], pts: &[Vec2]) -> f64 {
    (pts[t[1]] - pts[t[0]]).cross(pts[t[2]] - pts[t[0]])
}

fn orient_tri(mut t: [usize; 3], pts: &[Vec2]) -> [usize; 3] {
    if tri_area2(t, pts) < 0.0 {
        t.swap(1, 2);
    }
    t
}

fn in_circumcircle(a: Vec2, b: Vec2, c: Vec2, p: Vec2) -> bool {
    // Standard incircle determinant for counterclockwise (a, b, c).
    let (ax, ay) = (a.x - p.x, a.y - p.y);
    let (bx, by) = (b.x - p.x, b.y - p.y);
    let (cx, cy) = (c.x - p.x, c.y - p.y);
    let det = (ax * ax + ay * ay) * (bx * cy - cx * by)
        - (bx * bx + by * by) * (ax * cy - cx * ay)
        + (cx * cx + cy * cy) * (ax * by - bx * ay);
    let orient = (b - a).cross(c - a);
    if orient > 0.0 {
        det > 1e-12
    } else {
        det < -1e-12
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::test_domains::*;
    use crate::geometry::BoundarySegment;

    #[test]
    fn square_coarse_mesh() {
        let (dom, dec) = square_bottom_d(4.0, 0.5);
        let mesh = triangulate(&dom, &dec, 0.5).unwrap();
        assert!(mesh.h <= 0.5 + 1e-12);
        assert!(mesh.num_triangles() >= 8);
        assert!((mesh.total_area() - 1.0).abs() < 1e-12);
        mesh.validate().unwrap();
        assert!(mesh.min_angle_deg() >= 20.0);
    }

    #[test]
    fn zero_target_h_rejected() {
        let (dom, dec) = square_bottom_d(4.0, 0.5);
        assert!(triangulate(&dom, &dec, 0.0).is_err());
    }

    #[test]
    fn transition_point_is_a_node() {
        let dom = unit_square(Some(4.0), Some(0.5));
        let segs = vec![
            BoundarySegment { edge: 0, t0: 0.0, t1: 1.0, label: crate::geometry::BoundaryLabel::D },
            BoundarySegment { edge: 1, t0: 0.0, t1: 0.3, label: crate::geometry::BoundaryLabel::D },
            BoundarySegment { edge: 1, t0: 0.3, t1: 1.0, label: crate::geometry::BoundaryLabel::N },
            BoundarySegment { edge: 2, t0: 0.0, t1: 1.0, label: crate::geometry::BoundaryLabel::N },
            BoundarySegment { edge: 3, t0: 0.0, t1: 1.0, label: crate::geometry::BoundaryLabel::N },
        ];
        let dec = BoundaryDecomposition::new(&dom, segs).unwrap();
        let mesh = triangulate(&dom, &dec, 0.4).unwrap();
        let target = Vec2::new(1.0, 0.3);
        assert!(
            mesh.nodes.iter().any(|p| p.dist(target) < 1e-12),
            "transition point must be a mesh node"
        );
        mesh.validate().unwrap();
    }

    #[test]
    fn red_refinement_quadruples_triangles_and_halves_h() {
        let (dom, dec) = square_bottom_d(4.0, 0.5);
        let mesh = triangulate(&dom, &dec, 0.8).unwrap();
        let fine = mesh.refine().unwrap();
        assert_eq!(fine.num_triangles(), 4 * mesh.num_triangles());
        assert!((fine.h - mesh.h / 2.0).abs() < 1e-12);
        assert_eq!(fine.boundary_edges.len(), 2 * mesh.boundary_edges.len());
        // Children inherit labels.
        let d_before = mesh
            .boundary_edges
            .iter()
            .filter(|b| b.label == crate::geometry::BoundaryLabel::D)
            .count();
        let d_after = fine
            .boundary_edges
            .iter()
            .filter(|b| b.label == crate::geometry::BoundaryLabel::D)
            .count();
        assert_eq!(d_after, 2 * d_before);
        fine.validate().unwrap();
        assert!((fine.total_area() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn graded_refinement_is_conforming_and_local() {
        let (dom, dec) = square_bottom_d(4.0, 0.5);
        let mesh = triangulate(&dom, &dec, 0.25).unwrap();
        let point = Vec2::new(0.5, 0.5);
        let graded = mesh.graded_refine_toward(point, 3).unwrap();
        graded.validate().unwrap();
        assert!(graded.num_triangles() > mesh.num_triangles());
        assert!((graded.total_area() - 1.0).abs() < 1e-12);
        // Local size near the point shrinks by roughly 2^3.
        let local = (0..graded.num_triangles())
            .filter(|&t| graded.tri_centroid(t).dist(point) < 0.05)
            .map(|t| graded.tri_diameter(t))
            .fold(f64::INFINITY, f64::min);
        assert!(local < mesh.h / 4.0, "local {local} vs h {}", mesh.h);
        // Far field untouched in diameter scale.
        assert!(graded.h > mesh.h / 2.0);
    }

    #[test]
    fn quadrature_weight_total_matches_area() {
        let (dom, dec) = square_bottom_d(4.0, 0.5);
        let mesh = triangulate(&dom, &dec, 0.3).unwrap();
        let mut total = 0.0;
        for t in 0..mesh.num_triangles() {
            for (_, w) in mesh.quad_points(t) {
                total += w;
            }
        }
        assert!((total - 1.0).abs() < 1e-12);
    }

    #[test]
    fn dump_round_trips_sections() {
        let (dom, dec) = square_bottom_d(4.0, 0.5);
        let mesh = triangulate(&dom, &dec, 0.6).unwrap();
        let dump = mesh.dump();
        assert!(dump.contains("NODES\n"));
        assert!(dump.contains("TRIANGLES\n"));
        assert!(dump.contains("BOUNDARY\n"));
        let nodes_lines = dump
            .split("NODES\n")
            .nth(1)
            .unwrap()
            .split("TRIANGLES\n")
            .next()
            .unwrap()
            .lines()
            .count();
        assert_eq!(nodes_lines, mesh.num_nodes());
    }
}
