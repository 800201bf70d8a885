//! Reference values computed here without the crate's constant formulas:
//! statrs for Γ, and quadrature over angles for every sphere average.

use std::f64::consts::PI;

use quermass::special::{
    ball_volume, gamma, projection_constant, r_constant, r_product, sphere_area, theorem_constant,
};
use statrs::function::gamma::gamma as gamma_ref;

/// Composite Simpson rule with `n` (even) panels.
fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
    let h = (b - a) / n as f64;
    let mut s = f(a) + f(b);
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        s += w * f(a + i as f64 * h);
    }
    s * h / 3.0
}

/// Average of `g(cos θ)` over S^{k−1}, θ the angle to a fixed axis.
fn sphere_avg(k: usize, g: impl Fn(f64) -> f64) -> f64 {
    let w = |t: f64| t.sin().powi(k as i32 - 2);
    let num = simpson(|t| g(t.cos()) * w(t), 0.0, PI, 20_000);
    let den = simpson(w, 0.0, PI, 20_000);
    num / den
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

#[test]
fn gamma_matches_reference_library() {
    let mut x = 0.05;
    while x < 60.0 {
        let g = gamma(x).unwrap();
        assert!(rel(g, gamma_ref(x)) < 1e-12, "Γ({x}) = {g} vs {}", gamma_ref(x));
        x += 0.37;
    }
}

#[test]
fn ball_volumes_follow_the_two_step_recursion() {
    let mut kappa = vec![1.0, 2.0];
    for k in 2..=12 {
        kappa.push(2.0 * PI / k as f64 * kappa[k - 2]);
    }
    for k in 1..=12 {
        assert!(rel(ball_volume(k).unwrap(), kappa[k]) < 1e-12, "κ_{k}");
        assert!(rel(sphere_area(k).unwrap(), k as f64 * kappa[k]) < 1e-12);
    }
}

#[test]
fn r_k_is_the_needle_support_average() {
    for k in 2..=10 {
        let avg = if k == 2 {
            simpson(|t| t.cos().max(0.0), 0.0, PI, 20_000) / PI
        } else {
            sphere_avg(k, |c| c.max(0.0))
        };
        assert!(rel(r_constant(k).unwrap(), avg) < 1e-10, "k={k}: {} vs {avg}", r_constant(k).unwrap());
    }
    assert!(rel(r_constant(2).unwrap(), 1.0 / PI) < 1e-15);
}

#[test]
fn theorem_constants_against_reference_gamma() {
    let kappa = |k: usize| PI.powf(k as f64 / 2.0) / gamma_ref(k as f64 / 2.0 + 1.0);
    let fact = |k: usize| gamma_ref(k as f64 + 1.0);
    for n in 2..=10 {
        for d in 1..n {
            let c = fact(d) * kappa(d) / (fact(n) * kappa(n));
            assert!(rel(theorem_constant(d, n).unwrap(), c) < 1e-10);
            assert!(rel(projection_constant(d, n).unwrap(), kappa(d) / kappa(n)) < 1e-10);
            let prod: f64 = (d + 1..=n)
                .map(|k| gamma_ref(k as f64 / 2.0) / (PI.sqrt() * (k as f64 - 1.0) * gamma_ref((k as f64 - 1.0) / 2.0)))
                .product();
            assert!(rel(r_product(d, n).unwrap(), prod) < 1e-10);
        }
    }
}

#[test]
fn equality_case_golden_values() {
    // mean width of the unit square: average of |cos θ| + |sin θ|
    let width = simpson(|t| t.cos().abs() + t.sin().abs(), 0.0, 2.0 * PI, 20_000) / (2.0 * PI);
    assert!((width - 4.0 / PI).abs() < 1e-12);
    // V(C, B²) is half the perimeter, and κ₁/κ₂ · 2 = 4/π
    assert!((projection_constant(1, 2).unwrap() * 2.0 - width).abs() < 1e-12);

    // shadow of the unit cube along u is |u₁| + |u₂| + |u₃|
    let shadow = 3.0 * sphere_avg(3, f64::abs);
    assert!((shadow - 1.5).abs() < 1e-10);
    // V(C, C, B³) = surface / 3 = 2, and κ₂/κ₃ · 2 = 3/2
    assert!((projection_constant(2, 3).unwrap() * 2.0 - shadow).abs() < 1e-10);

    // [0,e₁] and [0,e₂] projected to u^⊥ span a parallelogram of area |u₃|;
    // V of two planar segments is half that area
    let segs = 0.5 * sphere_avg(3, f64::abs);
    assert!((segs - 0.25).abs() < 1e-10);
    // V([0,e₁],[0,e₂],B³) = |e₁×e₂|·width_e₃(B³)/6 = 1/3
    assert!((projection_constant(2, 3).unwrap() / 3.0 - segs).abs() < 1e-10);
}

#[test]
fn needle_limits_and_sharpness_targets() {
    // the averaged needle body tends to r_k·B^k
    let r2 = r_constant(2).unwrap();
    assert!((PI * r2 * r2 - 1.0 / PI).abs() < 1e-15);
    // avg_c V(B^k,…,B^k,[0,c]) = r_k·κ_k = κ_{k−1}/k
    assert!((r2 * ball_volume(2).unwrap() - 1.0).abs() < 1e-14);
    assert!((r_constant(3).unwrap() * ball_volume(3).unwrap() - PI / 3.0).abs() < 1e-14);
}
