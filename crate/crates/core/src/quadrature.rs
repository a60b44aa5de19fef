//! Fixed quadrature rules: a symmetric 6-point order-4 rule on triangles and
//! 3-point Gauss-Legendre on boundary segments.

use crate::geometry::Vec2;

/// Barycentric points and weights of the degree-4 symmetric triangle rule
/// (weights sum to 1; multiply by the triangle area).
pub const TRI_RULE: [([f64; 3], f64); 6] = {
    const A1: f64 = 0.445948490915965;
    const W1: f64 = 0.223381589678011;
    const A2: f64 = 0.091576213509771;
    const W2: f64 = 0.109951743655322;
    [
        ([A1, A1, 1.0 - 2.0 * A1], W1),
        ([A1, 1.0 - 2.0 * A1, A1], W1),
        ([1.0 - 2.0 * A1, A1, A1], W1),
        ([A2, A2, 1.0 - 2.0 * A2], W2),
        ([A2, 1.0 - 2.0 * A2, A2], W2),
        ([1.0 - 2.0 * A2, A2, A2], W2),
    ]
};

pub const N_TRI_QP: usize = 6;

/// Gauss-Legendre points on [0, 1], exact through degree 5.
pub const LINE_RULE: [(f64, f64); 3] = [
    (0.11270166537925831, 5.0 / 18.0),
    (0.5, 8.0 / 18.0),
    (0.88729833462074169, 5.0 / 18.0),
];

/// Physical quadrature point in a triangle.
#[inline]
pub fn tri_point(p0: Vec2, p1: Vec2, p2: Vec2, bary: [f64; 3]) -> Vec2 {
    Vec2::new(
        bary[0] * p0.x + bary[1] * p1.x + bary[2] * p2.x,
        bary[0] * p0.y + bary[1] * p1.y + bary[2] * p2.y,
    )
}

/// Integrates a function over one triangle with the order-4 rule.
pub fn integrate_tri(p0: Vec2, p1: Vec2, p2: Vec2, f: impl Fn(Vec2) -> f64) -> f64 {
    let area = 0.5 * ((p1 - p0).cross(p2 - p0)).abs();
    TRI_RULE
        .iter()
        .map(|&(b, w)| w * area * f(tri_point(p0, p1, p2, b)))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_sum_to_one() {
        let s: f64 = TRI_RULE.iter().map(|&(_, w)| w).sum();
        assert!((s - 1.0).abs() < 1e-12);
        let sl: f64 = LINE_RULE.iter().map(|&(_, w)| w).sum();
        assert!((sl - 1.0).abs() < 1e-12);
    }

    #[test]
    fn quartics_integrated_exactly() {
        // On the reference triangle, ∫ x^a y^b = a! b! / (a + b + 2)!.
        let p0 = Vec2::new(0.0, 0.0);
        let p1 = Vec2::new(1.0, 0.0);
        let p2 = Vec2::new(0.0, 1.0);
        let fact = |n: u64| (1..=n).product::<u64>() as f64;
        for a in 0..=4u64 {
            for b in 0..=(4 - a) {
                let exact = fact(a) * fact(b) / fact(a + b + 2);
                let got = integrate_tri(p0, p1, p2, |p| p.x.powi(a as i32) * p.y.powi(b as i32));
                assert!(
                    (got - exact).abs() < 1e-14,
                    "x^{a} y^{b}: {got} vs {exact}"
                );
            }
        }
    }

    #[test]
    fn line_rule_exact_degree_five() {
        for k in 0..=5u32 {
            let got: f64 = LINE_RULE.iter().map(|&(x, w)| w * x.powi(k as i32)).sum();
            let exact = 1.0 / (k as f64 + 1.0);
            assert!((got - exact).abs() < 1e-14);
        }
    }
}
