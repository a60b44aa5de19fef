//! Polygonal Lipschitz domains with a labeled boundary decomposition and the
//! multiscale geometric probes built on top of them: coordinate cylinders,
//! boundary intervals, local domains, and the admissibility checks for the
//! boundary decomposition.
//!
//! All geometry is exact piecewise-linear: arc lengths of clipped boundary
//! pieces and areas of clipped polygons are computed in closed form.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Plain 2D vector / point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Vec2 { x, y }
    }

    pub fn dot(self, o: Vec2) -> f64 {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the cross product.
    pub fn cross(self, o: Vec2) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn dist(self, o: Vec2) -> f64 {
        (self - o).norm()
    }

    pub fn normalize(self) -> Vec2 {
        let n = self.norm();
        Vec2::new(self.x / n, self.y / n)
    }

    /// Counterclockwise rotation by 90 degrees.
    pub fn rot90(self) -> Vec2 {
        Vec2::new(-self.y, self.x)
    }

    pub fn scale(self, s: f64) -> Vec2 {
        Vec2::new(self.x * s, self.y * s)
    }
}

impl std::ops::Add for Vec2 {
    type Output = Vec2;
    fn add(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x + o.x, self.y + o.y)
    }
}

impl std::ops::Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x - o.x, self.y - o.y)
    }
}

/// Boundary label: `D` carries Dirichlet (velocity) data, `N` traction data.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundaryLabel {
    D,
    N,
}

/// One labeled sub-interval of a polygon edge, parameterized by `t in [0,1]`.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct BoundarySegment {
    pub edge: usize,
    pub t0: f64,
    pub t1: f64,
    pub label: BoundaryLabel,
}

/// Simple polygon with Lipschitz metadata.
///
/// Vertices are counterclockwise; edge `i` runs from vertex `i` to vertex
/// `i + 1 mod n`.
#[derive(Debug, Clone)]
pub struct PolygonalDomain {
    pub vertices: Vec<Vec2>,
    pub diameter_d: f64,
    pub lipschitz_m: f64,
    pub scale_r0: f64,
    /// Cumulative arc length at the start of each edge, plus the perimeter as
    /// the final entry.
    cum_len: Vec<f64>,
}

impl PolygonalDomain {
    /// Builds a domain, estimating `(M, R0)` when they are not supplied.
    pub fn new(vertices: Vec<Vec2>, m: Option<f64>, r0: Option<f64>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::invalid("polygon needs at least 3 vertices"));
        }
        let n = vertices.len();
        for i in 0..n {
            let a = vertices[i];
            let b = vertices[(i + 1) % n];
            if a.dist(b) < 1e-12 {
                return Err(Error::invalid(format!("degenerate zero-length edge {i}")));
            }
        }
        if signed_area(&vertices) <= 0.0 {
            return Err(Error::invalid(
                "polygon must be counterclockwise with positive area",
            ));
        }
        check_simple(&vertices)?;

        let mut cum_len = Vec::with_capacity(n + 1);
        let mut acc = 0.0;
        for i in 0..n {
            cum_len.push(acc);
            acc += vertices[i].dist(vertices[(i + 1) % n]);
        }
        cum_len.push(acc);

        let mut diameter = 0.0f64;
        for i in 0..n {
            for j in i + 1..n {
                diameter = diameter.max(vertices[i].dist(vertices[j]));
            }
        }

        let mut dom = PolygonalDomain {
            vertices,
            diameter_d: diameter,
            lipschitz_m: 1.0,
            scale_r0: 1.0,
            cum_len,
        };
        let (m_est, r0_est) = dom.estimate_lipschitz_character()?;
        dom.lipschitz_m = match m {
            Some(v) if v >= 1.0 => v,
            Some(v) => return Err(Error::invalid(format!("lipschitz M must be >= 1, got {v}"))),
            None => m_est,
        };
        dom.scale_r0 = match r0 {
            Some(v) if v > 0.0 && v <= diameter => v,
            Some(v) => {
                return Err(Error::invalid(format!(
                    "R0 must lie in (0, diameter], got {v}"
                )))
            }
            None => r0_est,
        };
        Ok(dom)
    }

    pub fn num_edges(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge(&self, i: usize) -> (Vec2, Vec2) {
        let n = self.vertices.len();
        (self.vertices[i], self.vertices[(i + 1) % n])
    }

    pub fn edge_len(&self, i: usize) -> f64 {
        let (a, b) = self.edge(i);
        a.dist(b)
    }

    pub fn perimeter(&self) -> f64 {
        *self.cum_len.last().unwrap()
    }

    pub fn area(&self) -> f64 {
        signed_area(&self.vertices)
    }

    /// Outward unit normal of edge `i`.
    pub fn outward_normal(&self, i: usize) -> Vec2 {
        let (a, b) = self.edge(i);
        let t = (b - a).normalize();
        Vec2::new(t.y, -t.x)
    }

    /// Arc length coordinate of the point at parameter `t` on edge `i`.
    pub fn arclen_of(&self, edge: usize, t: f64) -> f64 {
        self.cum_len[edge] + t * self.edge_len(edge)
    }

    /// Boundary point at arc length `s` (wrapped to the perimeter).
    pub fn point_at_arclen(&self, s: f64) -> Vec2 {
        let per = self.perimeter();
        let mut s = s.rem_euclid(per);
        for i in 0..self.num_edges() {
            let l = self.edge_len(i);
            if s <= l + 1e-14 {
                let (a, b) = self.edge(i);
                let t = (s / l).min(1.0);
                return a + (b - a).scale(t);
            }
            s -= l;
        }
        self.vertices[0]
    }

    /// Edge index and parameter at arc length `s`.
    pub fn edge_at_arclen(&self, s: f64) -> (usize, f64) {
        let per = self.perimeter();
        let mut s = s.rem_euclid(per);
        for i in 0..self.num_edges() {
            let l = self.edge_len(i);
            if s <= l + 1e-14 {
                return (i, (s / l).min(1.0));
            }
            s -= l;
        }
        (0, 0.0)
    }

    /// Point-in-domain test; boundary points count as inside.
    pub fn contains(&self, p: Vec2) -> bool {
        if self.dist_to_boundary(p) < 1e-12 * (1.0 + self.diameter_d) {
            return true;
        }
        self.strictly_contains(p)
    }

    /// Strict interior test by ray crossing (point assumed off the boundary).
    pub fn strictly_contains(&self, p: Vec2) -> bool {
        let n = self.vertices.len();
        let mut inside = false;
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            if (a.y > p.y) != (b.y > p.y) {
                let t = (p.y - a.y) / (b.y - a.y);
                let xi = a.x + t * (b.x - a.x);
                if xi > p.x {
                    inside = !inside;
                }
            }
        }
        inside
    }

    pub fn dist_to_boundary(&self, p: Vec2) -> f64 {
        (0..self.num_edges())
            .map(|i| {
                let (a, b) = self.edge(i);
                point_segment_dist(p, a, b)
            })
            .fold(f64::INFINITY, f64::min)
    }

    /// Nearest boundary point: `(edge index, parameter t, point)`.
    pub fn nearest_boundary_point(&self, p: Vec2) -> (usize, f64, Vec2) {
        let mut best = (0usize, 0.0f64, self.vertices[0]);
        let mut best_d = f64::INFINITY;
        for i in 0..self.num_edges() {
            let (a, b) = self.edge(i);
            let t = segment_project(p, a, b);
            let q = a + (b - a).scale(t);
            let d = p.dist(q);
            if d < best_d {
                best_d = d;
                best = (i, t, q);
            }
        }
        best
    }

    /// Edge-aligned coordinate frame at the boundary point with arc length
    /// `s`: the tangent follows the counterclockwise traversal and the
    /// rotated normal points into the domain. At vertices the frame is the
    /// bisector frame of the two incident edges.
    pub fn boundary_frame(&self, s: f64) -> Frame {
        let per = self.perimeter();
        let s = s.rem_euclid(per);
        let (edge, t) = self.edge_at_arclen(s);
        let n = self.num_edges();
        let vertex_tol = 1e-10 * (1.0 + per);
        // Snap to a vertex frame when sitting on a vertex.
        let at_start = (s - self.cum_len[edge]).abs() < vertex_tol;
        let at_end = (self.cum_len[edge + 1] - s).abs() < vertex_tol;
        if at_start || at_end {
            let v_idx = if at_start { edge } else { (edge + 1) % n };
            let prev = self.vertices[(v_idx + n - 1) % n];
            let v = self.vertices[v_idx];
            let next = self.vertices[(v_idx + 1) % n];
            let a_hat = (prev - v).normalize(); // toward previous vertex
            let c_hat = (next - v).normalize(); // toward next vertex
            let diff = c_hat - a_hat;
            if diff.norm() > 1e-9 {
                let tangent = diff.normalize();
                return Frame { origin: v, tangent, inward: tangent.rot90() };
            }
            // Collinear: fall through to the edge frame.
        }
        let (a, b) = self.edge(edge);
        let tangent = (b - a).normalize();
        Frame { origin: a + (b - a).scale(t), tangent, inward: tangent.rot90() }
    }

    /// Estimates the Lipschitz character `(M, R0)` of the polygon.
    ///
    /// `M` is the largest graph-Lipschitz slope of the two incident edges at
    /// any vertex in the bisector-aligned frame, clamped to at least 1.
    /// `R0` is shrunk until every window of half-width `200 R0` and
    /// half-height `(4M + 2) * 200 R0` around a boundary point meets the
    /// boundary in a single graph.
    pub fn estimate_lipschitz_character(&self) -> Result<(f64, f64)> {
        let n = self.vertices.len();
        let mut m = 1.0f64;
        for i in 0..n {
            let prev = self.vertices[(i + n - 1) % n];
            let v = self.vertices[i];
            let next = self.vertices[(i + 1) % n];
            let a = (prev - v).normalize();
            let c = (next - v).normalize();
            // Interior angle for a counterclockwise polygon.
            let ang = (c.cross(a)).atan2(c.dot(a)).rem_euclid(2.0 * std::f64::consts::PI);
            if ang < 1e-6 || ang > 2.0 * std::f64::consts::PI - 1e-6 {
                return Err(Error::invalid(format!(
                    "degenerate (cusp-like) vertex {i}: interior angle {ang:.3e}"
                )));
            }
            let slope = (ang / 2.0).tan().recip().abs();
            m = m.max(slope);
        }
        let mut feature = (0..n).map(|i| self.edge_len(i)).fold(f64::INFINITY, f64::min);
        // Separation between non-adjacent edges keeps far boundary pieces out
        // of the cylinder windows.
        for i in 0..n {
            for j in 0..n {
                if j == i || j == (i + 1) % n || (j + 1) % n == i {
                    continue;
                }
                let (a, b) = self.edge(i);
                let (c, d) = self.edge(j);
                feature = feature.min(segment_segment_dist(a, b, c, d));
            }
        }
        if feature <= 0.0 {
            return Err(Error::invalid("polygon has touching non-adjacent edges"));
        }
        let r0 = feature / (202.0 * (4.0 * m + 2.0));
        Ok((m, r0))
    }
}

/// Local boundary coordinate frame.
#[derive(Debug, Clone, Copy)]
pub struct Frame {
    pub origin: Vec2,
    pub tangent: Vec2,
    pub inward: Vec2,
}

impl Frame {
    pub fn to_local(&self, p: Vec2) -> Vec2 {
        let d = p - self.origin;
        Vec2::new(d.dot(self.tangent), d.dot(self.inward))
    }

    pub fn to_world(&self, q: Vec2) -> Vec2 {
        self.origin + self.tangent.scale(q.x) + self.inward.scale(q.y)
    }
}

/// Validated boundary decomposition with closed-`D` semantics: transition
/// points belong to `D`.
#[derive(Debug, Clone)]
pub struct BoundaryDecomposition {
    pub segments: Vec<BoundarySegment>,
    /// Maximal `D` arcs as closed arc length intervals `[s0, s1]`, merged
    /// across edges, sorted, non-wrapping representation may split one arc at
    /// the perimeter seam.
    pub d_arcs: Vec<(f64, f64)>,
    pub n_arcs: Vec<(f64, f64)>,
    perimeter: f64,
}

impl BoundaryDecomposition {
    pub fn new(domain: &PolygonalDomain, mut segments: Vec<BoundarySegment>) -> Result<Self> {
        let ne = domain.num_edges();
        // Per-edge tiling check.
        for e in 0..ne {
            let mut parts: Vec<(f64, f64)> = segments
                .iter()
                .filter(|s| s.edge == e)
                .map(|s| (s.t0, s.t1))
                .collect();
            parts.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
            let mut cur = 0.0;
            for (t0, t1) in &parts {
                if *t0 < -1e-9 || *t1 > 1.0 + 1e-9 || *t1 < *t0 - 1e-12 {
                    return Err(Error::invalid(format!(
                        "bad sub-interval [{t0}, {t1}] on edge {e}"
                    )));
                }
                if (t0 - cur).abs() > 1e-9 && *t1 > *t0 {
                    return Err(Error::invalid(format!(
                        "edge {e} not tiled: gap or overlap at t = {cur}"
                    )));
                }
                if *t1 > cur {
                    cur = *t1;
                }
            }
            if (cur - 1.0).abs() > 1e-9 {
                return Err(Error::invalid(format!("edge {e} not fully labeled")));
            }
        }
        for s in &segments {
            if s.edge >= ne {
                return Err(Error::invalid(format!("edge index {} out of range", s.edge)));
            }
        }
        segments.sort_by(|a, b| (a.edge, a.t0).partial_cmp(&(b.edge, b.t0)).unwrap());

        let per = domain.perimeter();
        let arcs_of = |label: BoundaryLabel, segs: &[BoundarySegment]| -> Vec<(f64, f64)> {
            let mut ints: Vec<(f64, f64)> = segs
                .iter()
                .filter(|s| s.label == label)
                .map(|s| (domain.arclen_of(s.edge, s.t0), domain.arclen_of(s.edge, s.t1)))
                .collect();
            ints.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
            // Merge touching intervals, including across the seam.
            let mut merged: Vec<(f64, f64)> = Vec::new();
            for (s0, s1) in ints {
                if let Some(last) = merged.last_mut() {
                    if s0 <= last.1 + 1e-9 {
                        last.1 = last.1.max(s1);
                        continue;
                    }
                }
                merged.push((s0, s1));
            }
            if merged.len() > 1 {
                let first = merged[0];
                let last = *merged.last().unwrap();
                if first.0 <= 1e-9 && (per - last.1).abs() <= 1e-9 {
                    merged[0] = (last.0 - per, first.1);
                    merged.pop();
                }
            }
            merged
        };
        let d_arcs = arcs_of(BoundaryLabel::D, &segments);
        let n_arcs = arcs_of(BoundaryLabel::N, &segments);
        Ok(BoundaryDecomposition { segments, d_arcs, n_arcs, perimeter: per })
    }

    /// Labels everything `D` (pure Dirichlet problem).
    pub fn all_dirichlet(domain: &PolygonalDomain) -> Self {
        let segs = (0..domain.num_edges())
            .map(|e| BoundarySegment { edge: e, t0: 0.0, t1: 1.0, label: BoundaryLabel::D })
            .collect();
        Self::new(domain, segs).unwrap()
    }

    pub fn d_is_empty(&self) -> bool {
        self.d_arcs.iter().all(|(s0, s1)| s1 - s0 <= 1e-12)
    }

    pub fn n_is_empty(&self) -> bool {
        self.n_arcs.iter().all(|(s0, s1)| s1 - s0 <= 1e-12)
    }

    pub fn d_total_length(&self) -> f64 {
        self.d_arcs.iter().map(|(a, b)| b - a).sum()
    }

    /// Label at arc length `s`; `D` is closed.
    pub fn label_at_arclen(&self, s: f64) -> BoundaryLabel {
        let s = s.rem_euclid(self.perimeter);
        let tol = 1e-9 * (1.0 + self.perimeter);
        for &(a, b) in &self.d_arcs {
            for shift in [-self.perimeter, 0.0, self.perimeter] {
                if s >= a + shift - tol && s <= b + shift + tol {
                    return BoundaryLabel::D;
                }
            }
        }
        BoundaryLabel::N
    }

    /// Whether the closed arc `[s0, s1]` is contained in closed `D`.
    pub fn arc_subset_of_d(&self, s0: f64, s1: f64) -> bool {
        self.arc_subset_of(s0, s1, BoundaryLabel::D)
    }

    /// Whether the closed arc `[s0, s1]` is contained in `N ∪ {transition points}`,
    /// i.e. meets the interior of no `D` arc.
    pub fn arc_subset_of_n(&self, s0: f64, s1: f64) -> bool {
        self.arc_subset_of(s0, s1, BoundaryLabel::N)
    }

    fn arc_subset_of(&self, s0: f64, s1: f64, label: BoundaryLabel) -> bool {
        let arcs = match label {
            BoundaryLabel::D => &self.d_arcs,
            BoundaryLabel::N => &self.n_arcs,
        };
        let tol = 1e-9 * (1.0 + self.perimeter);
        for shift0 in [-self.perimeter, 0.0, self.perimeter] {
            let (a0, a1) = (s0 + shift0, s1 + shift0);
            if arcs
                .iter()
                .any(|&(b0, b1)| a0 >= b0 - tol && a1 <= b1 + tol)
            {
                return true;
            }
        }
        false
    }

    /// Arc length positions where the label changes (transition points).
    pub fn transition_arclens(&self) -> Vec<f64> {
        let mut out = Vec::new();
        if self.d_arcs.is_empty() || self.n_arcs.is_empty() {
            return out;
        }
        for &(a, b) in &self.d_arcs {
            out.push(a.rem_euclid(self.perimeter));
            out.push(b.rem_euclid(self.perimeter));
        }
        out.sort_by(|a, b| a.partial_cmp(b).unwrap());
        out.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
        out
    }
}

/// A boundary interval: the connected component of `Z_rho(x) ∩ ∂Ω` through
/// the anchor, as an arc length interval.
#[derive(Debug, Clone, Copy)]
pub struct BoundaryInterval {
    pub s_center: f64,
    pub s_lo: f64,
    pub s_hi: f64,
}

impl BoundaryInterval {
    pub fn length(&self) -> f64 {
        self.s_hi - self.s_lo
    }
}

/// Computes the boundary interval `Δ_rho(x̂)` anchored at arc length `s`.
///
/// The cylinder `Z_rho` has half-width `rho` along the frame tangent and
/// half-height `(4M + 2) rho` along the normal; the interval is the connected
/// boundary component through the anchor, traced edge by edge, so the arc
/// length is exact.
pub fn boundary_interval(domain: &PolygonalDomain, s: f64, rho: f64) -> BoundaryInterval {
    let frame = domain.boundary_frame(s);
    let half_h = (4.0 * domain.lipschitz_m + 2.0) * rho;
    let inside = |p: Vec2| -> bool {
        let q = frame.to_local(p);
        q.x.abs() <= rho + 1e-13 && q.y.abs() <= half_h + 1e-13
    };
    let per = domain.perimeter();
    let max_walk = per / 2.0 - 1e-12;

    let walk = |dir: f64| -> f64 {
        // Walk from s in direction dir (+1 forward, -1 backward) until the
        // boundary leaves the box; returns the distance walked.
        let mut walked = 0.0f64;
        let mut cur = s;
        loop {
            let (edge, t) = domain.edge_at_arclen(if dir > 0.0 {
                cur + 1e-13
            } else {
                cur - 1e-13
            });
            let (a, b) = domain.edge(edge);
            let el = domain.edge_len(edge);
            let p_here = domain.point_at_arclen(cur);
            let p_end = if dir > 0.0 { b } else { a };
            let remain = if dir > 0.0 { (1.0 - t) * el } else { t * el };
            if remain <= 1e-13 {
                // Sitting on a vertex: hop to the adjacent edge.
                cur += dir * 1e-12;
                continue;
            }
            if !inside(p_here) {
                break;
            }
            if inside(p_end) {
                walked += remain;
                cur += dir * remain;
                if walked >= max_walk {
                    walked = max_walk;
                    break;
                }
                continue;
            }
            // Exact exit parameter through the box sides.
            let q0 = frame.to_local(p_here);
            let q1 = frame.to_local(p_end);
            let dq = q1 - q0;
            let mut tau = 1.0f64;
            for (c0, dc, bound) in [
                (q0.x, dq.x, rho),
                (q0.y, dq.y, half_h),
            ] {
                if dc.abs() > 1e-300 {
                    // First crossing of either bounding line; the walk starts
                    // inside the convex box, so the earliest positive
                    // crossing is the exit.
                    for lim in [bound, -bound] {
                        let tt = (lim - c0) / dc;
                        if tt > 1e-13 && tt < tau {
                            tau = tt;
                        }
                    }
                }
            }
            walked += tau * remain;
            break;
        }
        walked.min(max_walk)
    };

    let fwd = walk(1.0);
    let bwd = walk(-1.0);
    BoundaryInterval { s_center: s, s_lo: s - bwd, s_hi: s + fwd }
}

/// Report of the Ahlfors-David regularity sweep.
#[derive(Debug, Clone, Serialize)]
pub struct AhlforsDavidReport {
    pub scales: Vec<f64>,
    pub min_ratio: Vec<f64>,
    pub max_ratio: Vec<f64>,
    pub pass: bool,
    pub m: f64,
}

/// Checks the arc-measure regularity `1/M <= σ(Δ_rho(x)) / rho <= M` over
/// sample points on `D` (arc midpoints, quarter points and endpoints) and the
/// requested scales.
pub fn ahlfors_david_check(
    domain: &PolygonalDomain,
    decomp: &BoundaryDecomposition,
    scales: &[f64],
) -> Result<AhlforsDavidReport> {
    if decomp.d_arcs.is_empty() || decomp.d_total_length() <= 1e-12 {
        return Err(Error::invalid("Ahlfors-David check needs a nonempty D"));
    }
    for &rho in scales {
        if rho <= 0.0 || rho >= domain.scale_r0 {
            return Err(Error::invalid(format!(
                "scale {rho} outside (0, R0 = {})",
                domain.scale_r0
            )));
        }
    }
    let mut samples = Vec::new();
    for &(a, b) in &decomp.d_arcs {
        samples.push(a);
        samples.push(b);
        samples.push(0.5 * (a + b));
        samples.push(0.25 * a + 0.75 * b);
        samples.push(0.75 * a + 0.25 * b);
    }
    let m = domain.lipschitz_m;
    let mut min_ratio = Vec::new();
    let mut max_ratio = Vec::new();
    let mut pass = true;
    for &rho in scales {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for &s in &samples {
            let iv = boundary_interval(domain, s, rho);
            let ratio = iv.length() / rho;
            lo = lo.min(ratio);
            hi = hi.max(ratio);
        }
        if lo < 1.0 / m - 1e-9 || hi > m + 1e-9 {
            pass = false;
        }
        min_ratio.push(lo);
        max_ratio.push(hi);
    }
    Ok(AhlforsDavidReport { scales: scales.to_vec(), min_ratio, max_ratio, pass, m })
}

/// Result of the quantitative-opening search for one label.
#[derive(Debug, Clone, Serialize)]
pub struct OpeningWitness {
    pub found: bool,
    /// Arc length of the anchor point.
    pub anchor_s: f64,
    /// Largest half-width `rho` with `Δ_rho(anchor)` inside the label set.
    pub best_rho: f64,
    /// Required half-width `R0 / M`.
    pub required_rho: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct OpeningReport {
    pub d_open: bool,
    pub n_open: bool,
    pub d_witness: OpeningWitness,
    pub n_witness: OpeningWitness,
}

/// Searches for boundary intervals `Δ_{R0/M}(x)` contained in `D` and in `N`.
pub fn opening_check(domain: &PolygonalDomain, decomp: &BoundaryDecomposition) -> OpeningReport {
    let required = domain.scale_r0 / domain.lipschitz_m;
    let d_witness = opening_search(domain, decomp, BoundaryLabel::D, required);
    let n_witness = opening_search(domain, decomp, BoundaryLabel::N, required);
    OpeningReport {
        d_open: d_witness.found,
        n_open: n_witness.found,
        d_witness,
        n_witness,
    }
}

fn opening_search(
    domain: &PolygonalDomain,
    decomp: &BoundaryDecomposition,
    label: BoundaryLabel,
    required: f64,
) -> OpeningWitness {
    let arcs = match label {
        BoundaryLabel::D => &decomp.d_arcs,
        BoundaryLabel::N => &decomp.n_arcs,
    };
    let fits = |s: f64, rho: f64| -> bool {
        let iv = boundary_interval(domain, s, rho);
        match label {
            BoundaryLabel::D => decomp.arc_subset_of_d(iv.s_lo, iv.s_hi),
            BoundaryLabel::N => decomp.arc_subset_of_n(iv.s_lo, iv.s_hi),
        }
    };
    let mut best = OpeningWitness {
        found: false,
        anchor_s: 0.0,
        best_rho: 0.0,
        required_rho: required,
    };
    for &(a, b) in arcs {
        if b - a <= 1e-12 {
            continue;
        }
        for frac in [0.5, 0.25, 0.75] {
            let s = a + frac * (b - a);
            if fits(s, required) {
                return OpeningWitness {
                    found: true,
                    anchor_s: s.rem_euclid(domain.perimeter()),
                    best_rho: required,
                    required_rho: required,
                };
            }
            // Bisect for the largest admissible half-width at this anchor.
            let mut lo = 0.0f64;
            let mut hi = required;
            for _ in 0..40 {
                let mid = 0.5 * (lo + hi);
                if mid > 0.0 && fits(s, mid) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            if lo > best.best_rho {
                best.best_rho = lo;
                best.anchor_s = s.rem_euclid(domain.perimeter());
            }
        }
    }
    best
}

/// Kind of local domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LocalDomainKind {
    InteriorDisk,
    BoundaryCylinder,
}

/// Local domain `Ω_rho(x)`: an interior disk or a clipped boundary cylinder.
#[derive(Debug, Clone)]
pub struct LocalDomain {
    pub center: Vec2,
    pub radius: f64,
    pub kind: LocalDomainKind,
    /// Foot point on the boundary (cylinder case).
    pub anchor: Option<Vec2>,
    /// Clipped region polygon. For a disk this is an inscribed 64-gon used
    /// only for geometric queries; `area()` is exact in both cases.
    pub clipped_region: Vec<Vec2>,
}

impl LocalDomain {
    pub fn area(&self) -> f64 {
        match self.kind {
            LocalDomainKind::InteriorDisk => std::f64::consts::PI * self.radius * self.radius,
            LocalDomainKind::BoundaryCylinder => signed_area(&self.clipped_region),
        }
    }

    pub fn contains(&self, p: Vec2) -> bool {
        match self.kind {
            LocalDomainKind::InteriorDisk => p.dist(self.center) <= self.radius,
            LocalDomainKind::BoundaryCylinder => {
                polygon_contains(&self.clipped_region, p)
            }
        }
    }

    /// Nonempty kernel check: the region is star-shaped when the kernel of
    /// its polygon is nonempty.
    pub fn is_star_shaped(&self) -> bool {
        !polygon_kernel(&self.clipped_region).is_empty()
    }
}

/// Builds the local domain `Ω_rho(x)`.
pub fn local_domain(domain: &PolygonalDomain, x: Vec2, rho: f64) -> Result<LocalDomain> {
    if rho <= 0.0 {
        return Err(Error::invalid("local domain radius must be positive"));
    }
    if !domain.contains(x) {
        return Err(Error::invalid(format!(
            "point ({}, {}) lies outside the closed domain",
            x.x, x.y
        )));
    }
    let rho = rho.min(100.0 * domain.scale_r0 * (1.0 - 1e-12));
    let dist = domain.dist_to_boundary(x);
    if dist > rho {
        let poly = (0..64)
            .map(|k| {
                let a = 2.0 * std::f64::consts::PI * k as f64 / 64.0;
                x + Vec2::new(a.cos(), a.sin()).scale(rho)
            })
            .collect();
        return Ok(LocalDomain {
            center: x,
            radius: rho,
            kind: LocalDomainKind::InteriorDisk,
            anchor: None,
            clipped_region: poly,
        });
    }
    let (edge, t, foot) = domain.nearest_boundary_point(x);
    let s = domain.arclen_of(edge, t);
    let frame = domain.boundary_frame(s);
    let half_h = (4.0 * domain.lipschitz_m + 2.0) * rho;
    // Clip Ω against the rectangle in frame coordinates.
    let local_poly: Vec<Vec2> = domain.vertices.iter().map(|&v| frame.to_local(v)).collect();
    let clipped_local = clip_polygon_to_rect(&local_poly, rho, half_h);
    if clipped_local.len() < 3 {
        return Err(Error::numerical(
            "cylinder clipping produced an empty region".into(),
        ));
    }
    let clipped: Vec<Vec2> = clipped_local.iter().map(|&q| frame.to_world(q)).collect();
    Ok(LocalDomain {
        center: x,
        radius: rho,
        kind: LocalDomainKind::BoundaryCylinder,
        anchor: Some(foot),
        clipped_region: clipped,
    })
}

// --- polygon utilities ---

pub fn signed_area(poly: &[Vec2]) -> f64 {
    let n = poly.len();
    let mut s = 0.0;
    for i in 0..n {
        s += poly[i].cross(poly[(i + 1) % n]);
    }
    0.5 * s
}

pub fn polygon_contains(poly: &[Vec2], p: Vec2) -> bool {
    let n = poly.len();
    // Boundary tolerance.
    for i in 0..n {
        if point_segment_dist(p, poly[i], poly[(i + 1) % n]) < 1e-12 {
            return true;
        }
    }
    let mut inside = false;
    for i in 0..n {
        let a = poly[i];
        let b = poly[(i + 1) % n];
        if (a.y > p.y) != (b.y > p.y) {
            let t = (p.y - a.y) / (b.y - a.y);
            if a.x + t * (b.x - a.x) > p.x {
                inside = !inside;
            }
        }
    }
    inside
}

/// Sutherland-Hodgman clip of a polygon against the rectangle
/// `|x| <= hw, |y| <= hh`.
pub fn clip_polygon_to_rect(poly: &[Vec2], hw: f64, hh: f64) -> Vec<Vec2> {
    let planes: [(Vec2, f64); 4] = [
        (Vec2::new(1.0, 0.0), hw),
        (Vec2::new(-1.0, 0.0), hw),
        (Vec2::new(0.0, 1.0), hh),
        (Vec2::new(0.0, -1.0), hh),
    ];
    let mut cur = poly.to_vec();
    for (nrm, off) in planes {
        if cur.len() < 3 {
            return Vec::new();
        }
        let mut next = Vec::with_capacity(cur.len() + 4);
        let inside = |p: Vec2| p.dot(nrm) <= off + 1e-14;
        for i in 0..cur.len() {
            let a = cur[i];
            let b = cur[(i + 1) % cur.len()];
            let ia = inside(a);
            let ib = inside(b);
            if ia {
                next.push(a);
            }
            if ia != ib {
                let da = a.dot(nrm) - off;
                let db = b.dot(nrm) - off;
                let t = da / (da - db);
                next.push(a + (b - a).scale(t));
            }
        }
        cur = next;
    }
    // Drop duplicate consecutive points.
    let mut out: Vec<Vec2> = Vec::with_capacity(cur.len());
    for p in cur {
        if out.last().map_or(true, |q| q.dist(p) > 1e-13) {
            out.push(p);
        }
    }
    if out.len() >= 2 && out[0].dist(*out.last().unwrap()) <= 1e-13 {
        out.pop();
    }
    out
}

/// Kernel of a polygon (set of points seeing the whole polygon) via
/// half-plane intersection; empty result means not star-shaped.
pub fn polygon_kernel(poly: &[Vec2]) -> Vec<Vec2> {
    if poly.len() < 3 {
        return Vec::new();
    }
    // Start from the bounding box, clip by every edge's inner half-plane.
    let (mut xmin, mut xmax, mut ymin, mut ymax) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for p in poly {
        xmin = xmin.min(p.x);
        xmax = xmax.max(p.x);
        ymin = ymin.min(p.y);
        ymax = ymax.max(p.y);
    }
    let mut cur = vec![
        Vec2::new(xmin, ymin),
        Vec2::new(xmax, ymin),
        Vec2::new(xmax, ymax),
        Vec2::new(xmin, ymax),
    ];
    let n = poly.len();
    for i in 0..n {
        let a = poly[i];
        let b = poly[(i + 1) % n];
        let dir = b - a;
        // Inner side for a counterclockwise polygon: cross(dir, p - a) >= 0.
        let mut next = Vec::with_capacity(cur.len() + 2);
        let val = |p: Vec2| dir.cross(p - a);
        for j in 0..cur.len() {
            let p = cur[j];
            let q = cur[(j + 1) % cur.len()];
            let vp = val(p);
            let vq = val(q);
            if vp >= -1e-12 {
                next.push(p);
            }
            if (vp > 1e-12 && vq < -1e-12) || (vp < -1e-12 && vq > 1e-12) {
                let t = vp / (vp - vq);
                next.push(p + (q - p).scale(t));
            }
        }
        cur = next;
        if cur.len() < 3 {
            return Vec::new();
        }
    }
    cur
}

pub fn point_segment_dist(p: Vec2, a: Vec2, b: Vec2) -> f64 {
    let t = segment_project(p, a, b);
    p.dist(a + (b - a).scale(t))
}

fn segment_project(p: Vec2, a: Vec2, b: Vec2) -> f64 {
    let d = b - a;
    let l2 = d.dot(d);
    if l2 <= 0.0 {
        return 0.0;
    }
    ((p - a).dot(d) / l2).clamp(0.0, 1.0)
}

fn segment_segment_dist(a: Vec2, b: Vec2, c: Vec2, d: Vec2) -> f64 {
    if segments_intersect(a, b, c, d) {
        return 0.0;
    }
    point_segment_dist(a, c, d)
        .min(point_segment_dist(b, c, d))
        .min(point_segment_dist(c, a, b))
        .min(point_segment_dist(d, a, b))
}

fn segments_intersect(a: Vec2, b: Vec2, c: Vec2, d: Vec2) -> bool {
    let d1 = (b - a).cross(c - a);
    let d2 = (b - a).cross(d - a);
    let d3 = (d - c).cross(a - c);
    let d4 = (d - c).cross(b - c);
    (d1 * d2 < 0.0) && (d3 * d4 < 0.0)
}

fn check_simple(vertices: &[Vec2]) -> Result<()> {
    let n = vertices.len();
    for i in 0..n {
        let (a, b) = (vertices[i], vertices[(i + 1) % n]);
        for j in i + 1..n {
            if j == i || (j + 1) % n == i || (i + 1) % n == j {
                continue;
            }
            let (c, d) = (vertices[j], vertices[(j + 1) % n]);
            if segments_intersect(a, b, c, d) {
                return Err(Error::invalid(format!(
                    "polygon is not simple: edges {i} and {j} intersect"
                )));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
pub mod test_domains {
    use super::*;

    pub fn unit_square(m: Option<f64>, r0: Option<f64>) -> PolygonalDomain {
        PolygonalDomain::new(
            vec![
                Vec2::new(0.0, 0.0),
                Vec2::new(1.0, 0.0),
                Vec2::new(1.0, 1.0),
                Vec2::new(0.0, 1.0),
            ],
            m,
            r0,
        )
        .unwrap()
    }

    /// D = bottom edge, N = remaining three edges.
    pub fn square_bottom_d(m: f64, r0: f64) -> (PolygonalDomain, BoundaryDecomposition) {
        let dom = unit_square(Some(m), Some(r0));
        let segs = vec![
            BoundarySegment { edge: 0, t0: 0.0, t1: 1.0, label: BoundaryLabel::D },
            BoundarySegment { edge: 1, t0: 0.0, t1: 1.0, label: BoundaryLabel::N },
            BoundarySegment { edge: 2, t0: 0.0, t1: 1.0, label: BoundaryLabel::N },
            BoundarySegment { edge: 3, t0: 0.0, t1: 1.0, label: BoundaryLabel::N },
        ];
        let dec = BoundaryDecomposition::new(&dom, segs).unwrap();
        (dom, dec)
    }
}

#[cfg(test)]
mod tests {
    use super::test_domains::*;
    use super::*;

    #[test]
    fn square_basic_metadata() {
        let dom = unit_square(None, None);
        assert!((dom.area() - 1.0).abs() < 1e-14);
        assert!((dom.diameter_d - 2f64.sqrt()).abs() < 1e-14);
        assert!((dom.perimeter() - 4.0).abs() < 1e-14);
        // Right angles give graph slope 1 in the bisector frame.
        assert!((dom.lipschitz_m - 1.0).abs() < 1e-12);
    }

    #[test]
    fn hexagon_character_clamps_to_one() {
        let hex: Vec<Vec2> = (0..6)
            .map(|k| {
                let a = std::f64::consts::PI / 3.0 * k as f64;
                Vec2::new(a.cos(), a.sin())
            })
            .collect();
        let dom = PolygonalDomain::new(hex, None, None).unwrap();
        // 120 degree corners: slope tan(30) < 1, clamped to 1.
        assert!((dom.lipschitz_m - 1.0).abs() < 1e-12);
    }

    #[test]
    fn degenerate_slit_polygon_rejected() {
        // Near-zero interior angle.
        let res = PolygonalDomain::new(
            vec![
                Vec2::new(0.0, 0.0),
                Vec2::new(1.0, 0.0),
                Vec2::new(0.5, 1e-14),
            ],
            None,
            None,
        );
        assert!(res.is_err());
    }

    #[test]
    fn clockwise_polygon_rejected() {
        let res = PolygonalDomain::new(
            vec![Vec2::new(0.0, 0.0), Vec2::new(0.0, 1.0), Vec2::new(1.0, 0.0)],
            None,
            None,
        );
        assert!(res.is_err());
    }

    #[test]
    fn flat_boundary_interval_has_length_two_rho() {
        let (dom, _dec) = square_bottom_d(4.0, 0.5);
        // Midpoint of the bottom edge, rho = 0.1.
        let iv = boundary_interval(&dom, 0.5, 0.1);
        assert!((iv.length() - 0.2).abs() < 1e-12);
    }

    #[test]
    fn corner_interval_ratio_between_one_and_four() {
        let (dom, _dec) = square_bottom_d(4.0, 0.5);
        // The corner (0,0) sits at arc length 0.
        let rho = 0.1;
        let iv = boundary_interval(&dom, 0.0, rho);
        let ratio = iv.length() / rho;
        assert!(ratio >= 1.0 && ratio <= 4.0, "ratio {ratio}");
        // Exact value for the right-angle bisector frame: both edges leave at
        // 45 degrees, each contributing rho * sqrt(2).
        assert!((ratio - 2.0 * 2f64.sqrt()).abs() < 1e-9, "ratio {ratio}");
    }

    #[test]
    fn ahlfors_david_on_square_passes() {
        let (dom, dec) = square_bottom_d(4.0, 0.5);
        let scales: Vec<f64> = (1..=8).map(|k| 0.5 * 0.5f64.powi(k)).collect();
        let rep = ahlfors_david_check(&dom, &dec, &scales).unwrap();
        assert!(rep.pass);
        // Flat-interior samples give exactly 2.
        for (lo, hi) in rep.min_ratio.iter().zip(&rep.max_ratio) {
            assert!(*lo >= 1.0 / 4.0 - 1e-9 && *hi <= 4.0 + 1e-9);
        }
    }

    #[test]
    fn ahlfors_david_rejects_scale_at_r0() {
        let (dom, dec) = square_bottom_d(4.0, 0.5);
        assert!(ahlfors_david_check(&dom, &dec, &[0.5]).is_err());
    }

    #[test]
    fn ahlfors_david_rejects_empty_d() {
        let dom = unit_square(Some(4.0), Some(0.5));
        let segs = (0..4)
            .map(|e| BoundarySegment { edge: e, t0: 0.0, t1: 1.0, label: BoundaryLabel::N })
            .collect();
        let dec = BoundaryDecomposition::new(&dom, segs).unwrap();
        assert!(ahlfors_david_check(&dom, &dec, &[0.1]).is_err());
    }

    #[test]
    fn opening_check_square_bottom_d() {
        let (dom, dec) = square_bottom_d(4.0, 0.5);
        let rep = opening_check(&dom, &dec);
        assert!(rep.d_open, "witness: {:?}", rep.d_witness);
        assert!(rep.n_open, "witness: {:?}", rep.n_witness);
    }

    #[test]
    fn opening_check_all_dirichlet_has_no_n_interval() {
        let dom = unit_square(Some(4.0), Some(0.5));
        let dec = BoundaryDecomposition::all_dirichlet(&dom);
        let rep = opening_check(&dom, &dec);
        assert!(rep.d_open);
        assert!(!rep.n_open);
    }

    #[test]
    fn opening_check_point_d_fails() {
        let dom = unit_square(Some(4.0), Some(0.5));
        let segs = vec![
            BoundarySegment { edge: 0, t0: 0.0, t1: 0.5, label: BoundaryLabel::N },
            BoundarySegment { edge: 0, t0: 0.5, t1: 0.5, label: BoundaryLabel::D },
            BoundarySegment { edge: 0, t0: 0.5, t1: 1.0, label: BoundaryLabel::N },
            BoundarySegment { edge: 1, t0: 0.0, t1: 1.0, label: BoundaryLabel::N },
            BoundarySegment { edge: 2, t0: 0.0, t1: 1.0, label: BoundaryLabel::N },
            BoundarySegment { edge: 3, t0: 0.0, t1: 1.0, label: BoundaryLabel::N },
        ];
        let dec = BoundaryDecomposition::new(&dom, segs).unwrap();
        let rep = opening_check(&dom, &dec);
        assert!(!rep.d_open);
        assert!(rep.n_open);
    }

    #[test]
    fn interior_disk_local_domain() {
        let dom = unit_square(Some(4.0), Some(0.5));
        let ld = local_domain(&dom, Vec2::new(0.5, 0.5), 0.2).unwrap();
        assert_eq!(ld.kind, LocalDomainKind::InteriorDisk);
        assert!((ld.area() - std::f64::consts::PI * 0.04).abs() < 1e-14);
        assert!(ld.is_star_shaped());
    }

    #[test]
    fn boundary_cylinder_clips_to_rectangle() {
        let dom = unit_square(Some(4.0), Some(0.5));
        let ld = local_domain(&dom, Vec2::new(0.5, 0.05), 0.2).unwrap();
        assert_eq!(ld.kind, LocalDomainKind::BoundaryCylinder);
        let anchor = ld.anchor.unwrap();
        assert!(anchor.dist(Vec2::new(0.5, 0.0)) < 1e-12);
        // Z_rho half-height (4M+2) rho = 3.6 > 1, so the clip is
        // [0.3, 0.7] x [0, 1].
        let area = ld.area();
        assert!((area - 0.4).abs() < 1e-12, "area {area}");
        assert!(ld.contains(Vec2::new(0.31, 0.9)));
        assert!(!ld.contains(Vec2::new(0.29, 0.5)));
        assert!(ld.is_star_shaped());
    }

    #[test]
    fn local_domain_outside_point_rejected() {
        let dom = unit_square(Some(4.0), Some(0.5));
        assert!(local_domain(&dom, Vec2::new(1.5, 0.5), 0.2).is_err());
    }

    #[test]
    fn local_domain_nesting() {
        let dom = unit_square(Some(4.0), Some(0.5));
        let small = local_domain(&dom, Vec2::new(0.5, 0.05), 0.1).unwrap();
        let large = local_domain(&dom, Vec2::new(0.5, 0.05), 0.2).unwrap();
        // Same kind, same anchor: smaller region is contained in the larger.
        for p in &small.clipped_region {
            assert!(large.contains(*p));
        }
    }

    #[test]
    fn transition_points_reported() {
        let dom = unit_square(Some(4.0), Some(0.5));
        let segs = vec![
            BoundarySegment { edge: 0, t0: 0.0, t1: 1.0, label: BoundaryLabel::D },
            BoundarySegment { edge: 1, t0: 0.0, t1: 0.3, label: BoundaryLabel::D },
            BoundarySegment { edge: 1, t0: 0.3, t1: 1.0, label: BoundaryLabel::N },
            BoundarySegment { edge: 2, t0: 0.0, t1: 1.0, label: BoundaryLabel::N },
            BoundarySegment { edge: 3, t0: 0.0, t1: 1.0, label: BoundaryLabel::N },
        ];
        let dec = BoundaryDecomposition::new(&dom, segs).unwrap();
        let tr = dec.transition_arclens();
        // D runs from s = 0 to s = 1.3; transitions at 0 (= seam) and 1.3.
        assert!(tr.iter().any(|s| (s - 1.3).abs() < 1e-9));
        assert_eq!(dec.label_at_arclen(1.3), BoundaryLabel::D);
        assert_eq!(dec.label_at_arclen(1.31), BoundaryLabel::N);
    }

    #[test]
    fn decomposition_gap_rejected() {
        let dom = unit_square(Some(4.0), Some(0.5));
        let segs = vec![BoundarySegment { edge: 0, t0: 0.0, t1: 0.5, label: BoundaryLabel::D }];
        assert!(BoundaryDecomposition::new(&dom, segs).is_err());
    }
}
