//! Bivariate information decomposition of a binary triple into shared,
//! unique, and complementary parts.
//!
//! For a joint distribution P over (X, Y, Z), with X the prediction target,
//! the feasible set is the family of joint distributions with the same
//! pairwise (X,Y) and (X,Z) marginals as P. For binary variables that family
//! is a rectangle in two perturbation parameters (γ₋₁, γ₊₁); see
//! [`gamma_bounds`] and [`perturb`]. The four components are each defined by
//! optimizing an information functional over the rectangle:
//!
//! - `UI(X:Y∖Z)` minimizes I_Q(X:Y|Z),
//! - `UI(X:Z∖Y)` minimizes I_Q(X:Z|Y),
//! - `SI(X:Y;Z)` maximizes the co-information CoI_Q,
//! - `CI(X:Y;Z)` is I_P(X:(Y,Z)) minus the minimum of I_Q(X:(Y,Z)).
//!
//! [`decompose`] optimizes each functional independently on a coarse grid
//! with local refinement; [`decompose_oracle`] is the plain brute-force grid
//! used to cross-check it. Theory says the four optima share one optimizer,
//! so the sum / pair / conditional identities hold up to optimizer noise; the
//! result carries those defects as residuals, which makes every call a
//! self-check.

use rayon::prelude::*;
use thiserror::Error;

use crate::probcore::{dense, Pmf3, Sign};

/// Components closer to zero than this are clamped to exactly zero; anything
/// more negative is reported as [`DecompositionError::NegativeComponent`].
pub const CLAMP_EPS: f64 = 1e-6;
/// Slack allowed on feasibility checks against the rectangle bounds.
pub const FEASIBILITY_EPS: f64 = 1e-12;
/// Residuals of the sum / pair / conditional identities are expected to stay
/// below this at the default plan.
pub const CONSISTENCY_TOL: f64 = 5e-4;

#[derive(Debug, Error, PartialEq)]
pub enum DecompositionError {
    #[error("grid resolution must be at least 2 (got {0})")]
    ResolutionTooSmall(usize),
    #[error("oracle resolution must be at least 101 (got {0})")]
    OracleResolutionTooSmall(usize),
    #[error("gamma point ({gamma_minus}, {gamma_plus}) is outside the feasible rectangle")]
    InfeasibleGamma { gamma_minus: f64, gamma_plus: f64 },
    #[error("optimizer produced {component} = {value}, more negative than -{CLAMP_EPS}")]
    NegativeComponent { component: &'static str, value: f64 },
}

/// Feasible ranges of the two perturbation parameters. The true joint always
/// sits at the origin, so `lo_minus ≤ 0 ≤ hi_minus` and likewise for the plus
/// axis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GammaRectangle {
    pub lo_minus: f64,
    pub hi_minus: f64,
    pub lo_plus: f64,
    pub hi_plus: f64,
}

impl GammaRectangle {
    pub fn width_minus(&self) -> f64 {
        self.hi_minus - self.lo_minus
    }

    pub fn width_plus(&self) -> f64 {
        self.hi_plus - self.lo_plus
    }

    /// Feasibility check with [`FEASIBILITY_EPS`] slack.
    pub fn contains(&self, gamma_minus: f64, gamma_plus: f64) -> bool {
        gamma_minus >= self.lo_minus - FEASIBILITY_EPS
            && gamma_minus <= self.hi_minus + FEASIBILITY_EPS
            && gamma_plus >= self.lo_plus - FEASIBILITY_EPS
            && gamma_plus <= self.hi_plus + FEASIBILITY_EPS
    }
}

/// Bounds of the feasible rectangle: each γ must keep all eight perturbed
/// cells nonnegative, which pins it between the cells it is subtracted from
/// and the negated cells it is added to.
pub fn gamma_bounds(p: &Pmf3) -> GammaRectangle {
    use Sign::{Minus as M, Plus as P};
    GammaRectangle {
        lo_minus: (-p.get(M, M, M)).max(-p.get(M, P, P)),
        hi_minus: p.get(M, M, P).min(p.get(M, P, M)),
        lo_plus: (-p.get(P, M, M)).max(-p.get(P, P, P)),
        hi_plus: p.get(P, M, P).min(p.get(P, P, M)),
    }
}

/// The perturbed table: γ₋₁ moves mass inside the x = -1 slab and γ₊₁ inside
/// the x = +1 slab, added on cells where y = z and subtracted where y ≠ z.
/// Both pairwise (X,Y) and (X,Z) marginals are untouched.
#[inline]
fn perturbed_cells(base: &[f64; 8], gm: f64, gp: f64) -> [f64; 8] {
    [
        (base[0] + gm).max(0.0),
        (base[1] - gm).max(0.0),
        (base[2] - gm).max(0.0),
        (base[3] + gm).max(0.0),
        (base[4] + gp).max(0.0),
        (base[5] - gp).max(0.0),
        (base[6] - gp).max(0.0),
        (base[7] + gp).max(0.0),
    ]
}

/// Applies the marginal-preserving perturbation and returns the shifted
/// joint. Errors if (γ₋₁, γ₊₁) lies outside [`gamma_bounds`].
pub fn perturb(p: &Pmf3, gamma_minus: f64, gamma_plus: f64) -> Result<Pmf3, DecompositionError> {
    let rect = gamma_bounds(p);
    if !rect.contains(gamma_minus, gamma_plus) {
        return Err(DecompositionError::InfeasibleGamma {
            gamma_minus,
            gamma_plus,
        });
    }
    Pmf3::new(perturbed_cells(p.cells(), gamma_minus, gamma_plus))
        .map_err(|_| DecompositionError::InfeasibleGamma {
            gamma_minus,
            gamma_plus,
        })
}

/// Settings for the grid optimizer used by [`decompose`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OptimizationPlan {
    /// Grid points per γ axis (coarse pass and every refinement pass).
    pub resolution: usize,
    /// Local refinement rounds; each round re-grids a window around the
    /// incumbent that is 10× smaller than the previous one.
    pub refine_rounds: usize,
    /// Refinement stops early once a round improves the objective by less
    /// than this many bits.
    pub convergence_tol: f64,
}

impl Default for OptimizationPlan {
    fn default() -> Self {
        OptimizationPlan {
            resolution: 201,
            refine_rounds: 4,
            convergence_tol: 1e-6,
        }
    }
}

/// A (γ₋₁, γ₊₁) point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GammaPoint {
    pub gamma_minus: f64,
    pub gamma_plus: f64,
}

/// Optimizer location per component.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComponentArgmins {
    pub si: GammaPoint,
    pub ui_y: GammaPoint,
    pub ui_z: GammaPoint,
    pub ci: GammaPoint,
}

/// The four components in bits plus the total mutual information and the
/// consistency defects of the identities that a decomposition must satisfy.
#[derive(Clone, Copy, Debug)]
pub struct DecompositionResult {
    /// Shared information SI(X:Y;Z).
    pub si: f64,
    /// Unique information UI(X:Y∖Z).
    pub ui_y: f64,
    /// Unique information UI(X:Z∖Y).
    pub ui_z: f64,
    /// Complementary (synergistic) information CI(X:Y;Z).
    pub ci: f64,
    /// I(X:(Y,Z)) of the input distribution.
    pub mi_total: f64,
    pub argmin: ComponentArgmins,
    /// |mi_total − (si + ui_y + ui_z + ci)|
    pub residual_sum: f64,
    /// |si + ui_y − I(X:Y)|
    pub residual_pair_y: f64,
    /// |si + ui_z − I(X:Z)|
    pub residual_pair_z: f64,
    /// |ui_y + ci − I(X:Y|Z)|
    pub residual_cond: f64,
}

impl DecompositionResult {
    /// The components in (si, ui_y, ui_z, ci) order.
    pub fn components(&self) -> [f64; 4] {
        [self.si, self.ui_y, self.ui_z, self.ci]
    }

    pub fn max_residual(&self) -> f64 {
        self.residual_sum
            .max(self.residual_pair_y)
            .max(self.residual_pair_z)
            .max(self.residual_cond)
    }
}

/// Best grid point seen so far. Ordering is by value first, then
/// lexicographically by (γ₋₁, γ₊₁), which makes the parallel reduction a
/// total-order minimum: deterministic however the grid is partitioned.
#[derive(Clone, Copy, Debug)]
struct Best {
    value: f64,
    gm: f64,
    gp: f64,
}

#[inline]
fn better(a: Best, b: Best) -> Best {
    if a.value < b.value {
        a
    } else if b.value < a.value {
        b
    } else if (a.gm, a.gp) <= (b.gm, b.gp) {
        a
    } else {
        b
    }
}

/// k-th of n lattice points on [lo, hi]; endpoints land exactly on lo and hi.
#[inline]
fn lattice_point(lo: f64, hi: f64, n: usize, k: usize) -> f64 {
    if n == 1 {
        lo
    } else {
        let d = (n - 1) as f64;
        ((lo * ((n - 1 - k) as f64)) + hi * (k as f64)) / d
    }
}

/// Number of lattice points for an axis window: a zero-width axis collapses
/// to its single feasible point.
#[inline]
fn axis_points(lo: f64, hi: f64, resolution: usize) -> usize {
    if hi > lo {
        resolution
    } else {
        1
    }
}

fn grid_search<F>(
    base: &[f64; 8],
    objective: &F,
    window_m: (f64, f64),
    window_p: (f64, f64),
    resolution: usize,
) -> Best
where
    F: Fn(&[f64; 8]) -> f64 + Sync,
{
    let (lo_m, hi_m) = window_m;
    let (lo_p, hi_p) = window_p;
    let n_m = axis_points(lo_m, hi_m, resolution);
    let n_p = axis_points(lo_p, hi_p, resolution);
    (0..n_m)
        .into_par_iter()
        .map(|km| {
            let gm = lattice_point(lo_m, hi_m, n_m, km);
            let mut row_best = Best {
                value: f64::INFINITY,
                gm,
                gp: lo_p,
            };
            for kp in 0..n_p {
                let gp = lattice_point(lo_p, hi_p, n_p, kp);
                let value = objective(&perturbed_cells(base, gm, gp));
                if value < row_best.value {
                    row_best = Best { value, gm, gp };
                }
            }
            row_best
        })
        .reduce_with(better)
        .expect("grid has at least one point")
}

/// Coarse grid over the rectangle followed by shrinking-window refinement
/// around the incumbent.
fn optimize<F>(base: &[f64; 8], objective: &F, rect: &GammaRectangle, plan: &OptimizationPlan) -> Best
where
    F: Fn(&[f64; 8]) -> f64 + Sync,
{
    let mut best = grid_search(
        base,
        objective,
        (rect.lo_minus, rect.hi_minus),
        (rect.lo_plus, rect.hi_plus),
        plan.resolution,
    );
    let full_m = rect.width_minus();
    let full_p = rect.width_plus();
    let mut shrink = 1.0;
    for _ in 0..plan.refine_rounds {
        shrink /= 10.0;
        let half_m = full_m * shrink * 0.5;
        let half_p = full_p * shrink * 0.5;
        let window_m = (
            (best.gm - half_m).max(rect.lo_minus),
            (best.gm + half_m).min(rect.hi_minus),
        );
        let window_p = (
            (best.gp - half_p).max(rect.lo_plus),
            (best.gp + half_p).min(rect.hi_plus),
        );
        let candidate = grid_search(base, objective, window_m, window_p, plan.resolution);
        let improvement = best.value - candidate.value;
        if candidate.value < best.value {
            best = candidate;
        }
        if improvement < plan.convergence_tol {
            break;
        }
    }
    best
}

fn clamp_component(name: &'static str, value: f64) -> Result<f64, DecompositionError> {
    if value >= 0.0 {
        Ok(value)
    } else if value >= -CLAMP_EPS {
        Ok(0.0)
    } else {
        Err(DecompositionError::NegativeComponent {
            component: name,
            value,
        })
    }
}

/// Assembles the result from the four independent optimizations.
fn finish(
    base: &[f64; 8],
    best_ui_y: Best,
    best_ui_z: Best,
    best_neg_coi: Best,
    best_mi: Best,
) -> Result<DecompositionResult, DecompositionError> {
    let mi_total = dense::mi_x_yz(base);
    let si = clamp_component("si", -best_neg_coi.value)?;
    let ui_y = clamp_component("ui_y", best_ui_y.value)?;
    let ui_z = clamp_component("ui_z", best_ui_z.value)?;
    let ci = clamp_component("ci", mi_total - best_mi.value)?;

    let mi_xy = dense::mi_x_y(base);
    let mi_xz = dense::mi_x_z(base);
    let cmi_xy_z = dense::cmi_x_y_given_z(base);

    Ok(DecompositionResult {
        si,
        ui_y,
        ui_z,
        ci,
        mi_total,
        argmin: ComponentArgmins {
            si: GammaPoint {
                gamma_minus: best_neg_coi.gm,
                gamma_plus: best_neg_coi.gp,
            },
            ui_y: GammaPoint {
                gamma_minus: best_ui_y.gm,
                gamma_plus: best_ui_y.gp,
            },
            ui_z: GammaPoint {
                gamma_minus: best_ui_z.gm,
                gamma_plus: best_ui_z.gp,
            },
            ci: GammaPoint {
                gamma_minus: best_mi.gm,
                gamma_plus: best_mi.gp,
            },
        },
        residual_sum: (mi_total - (si + ui_y + ui_z + ci)).abs(),
        residual_pair_y: (si + ui_y - mi_xy).abs(),
        residual_pair_z: (si + ui_z - mi_xz).abs(),
        residual_cond: (ui_y + ci - cmi_xy_z).abs(),
    })
}

fn objective_ui_y(q: &[f64; 8]) -> f64 {
    dense::cmi_x_y_given_z(q)
}

fn objective_ui_z(q: &[f64; 8]) -> f64 {
    dense::cmi_x_z_given_y(q)
}

fn objective_neg_coi(q: &[f64; 8]) -> f64 {
    -dense::coi_xyz(q)
}

fn objective_mi(q: &[f64; 8]) -> f64 {
    dense::mi_x_yz(q)
}

/// Computes the decomposition by optimizing each component's functional
/// independently over the feasible rectangle on a `resolution × resolution`
/// grid followed by local refinement.
///
/// Axis roles are fixed: X is the target, Y and Z the sources. A degenerate
/// rectangle (zero width on one or both axes) is not an error; the search
/// simply collapses onto the surviving axis or the single feasible point.
pub fn decompose(
    p: &Pmf3,
    plan: &OptimizationPlan,
) -> Result<DecompositionResult, DecompositionError> {
    if plan.resolution < 2 {
        return Err(DecompositionError::ResolutionTooSmall(plan.resolution));
    }
    let base = p.cells();
    let rect = gamma_bounds(p);
    let best_ui_y = optimize(base, &objective_ui_y, &rect, plan);
    let best_ui_z = optimize(base, &objective_ui_z, &rect, plan);
    let best_neg_coi = optimize(base, &objective_neg_coi, &rect, plan);
    let best_mi = optimize(base, &objective_mi, &rect, plan);
    finish(base, best_ui_y, best_ui_z, best_neg_coi, best_mi)
}

/// Brute-force grid at the given resolution with no refinement: the
/// independent cross-check for [`decompose`].
pub fn decompose_oracle(
    p: &Pmf3,
    resolution: usize,
) -> Result<DecompositionResult, DecompositionError> {
    if resolution < 101 {
        return Err(DecompositionError::OracleResolutionTooSmall(resolution));
    }
    let base = p.cells();
    let rect = gamma_bounds(p);
    let wm = (rect.lo_minus, rect.hi_minus);
    let wp = (rect.lo_plus, rect.hi_plus);
    let best_ui_y = grid_search(base, &objective_ui_y, wm, wp, resolution);
    let best_ui_z = grid_search(base, &objective_ui_z, wm, wp, resolution);
    let best_neg_coi = grid_search(base, &objective_neg_coi, wm, wp, resolution);
    let best_mi = grid_search(base, &objective_mi, wm, wp, resolution);
    finish(base, best_ui_y, best_ui_z, best_neg_coi, best_mi)
}

#[cfg(test)]
mod tests {
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::testutil::{arb_pmf3, copy_y_triple, seeded_pmf3};

    // Cheap plan for property tests; identities hold at any plan.
    fn small_plan() -> OptimizationPlan {
        OptimizationPlan {
            resolution: 51,
            refine_rounds: 2,
            convergence_tol: 1e-6,
        }
    }

    #[test]
    fn gamma_bounds_uniform() {
        let rect = gamma_bounds(&Pmf3::uniform());
        assert_eq!(rect.lo_minus, -0.125);
        assert_eq!(rect.hi_minus, 0.125);
        assert_eq!(rect.lo_plus, -0.125);
        assert_eq!(rect.hi_plus, 0.125);
    }

    #[test]
    fn gamma_bounds_xor() {
        let rect = gamma_bounds(&Pmf3::xor_triple());
        assert_eq!(rect.lo_minus, -0.25);
        assert_eq!(rect.hi_minus, 0.0);
        assert_eq!(rect.lo_plus, 0.0);
        assert_eq!(rect.hi_plus, 0.25);
    }

    #[test]
    fn gamma_bounds_degenerate_axis() {
        // AND gate: the x = +1 slab has zero cells on both subtracted
        // positions, so the plus axis collapses to the single point 0.
        let rect = gamma_bounds(&Pmf3::and_triple());
        assert_eq!(rect.lo_plus, 0.0);
        assert_eq!(rect.hi_plus, 0.0);
        assert_eq!(rect.lo_minus, 0.0);
        assert_eq!(rect.hi_minus, 0.25);
    }

    #[test]
    fn perturb_identity_at_origin() {
        let p = Pmf3::and_triple();
        assert_eq!(perturb(&p, 0.0, 0.0).unwrap(), p);
    }

    #[test]
    fn perturb_uniform_by_eighth() {
        use Sign::{Minus as M, Plus as P};
        let q = perturb(&Pmf3::uniform(), 0.125, 0.0).unwrap();
        assert_eq!(q.get(M, M, M), 0.25);
        assert_eq!(q.get(M, P, P), 0.25);
        assert_eq!(q.get(M, M, P), 0.0);
        assert_eq!(q.get(M, P, M), 0.0);
        for y in Sign::ALL {
            for z in Sign::ALL {
                assert_eq!(q.get(P, y, z), 0.125);
            }
        }
    }

    #[test]
    fn perturb_rejects_out_of_bounds() {
        assert!(matches!(
            perturb(&Pmf3::uniform(), 0.2, 0.0),
            Err(DecompositionError::InfeasibleGamma { .. })
        ));
    }

    #[test]
    fn decompose_xor_is_pure_synergy() {
        let r = decompose(&Pmf3::xor_triple(), &OptimizationPlan::default()).unwrap();
        assert_abs_diff_eq!(r.ci, 1.0, epsilon = 1e-3);
        assert!(r.si <= 1e-3);
        assert!(r.ui_y <= 1e-3);
        assert!(r.ui_z <= 1e-3);
    }

    #[test]
    fn decompose_copy_channel_is_pure_unique() {
        let r = decompose(&copy_y_triple(), &OptimizationPlan::default()).unwrap();
        assert_abs_diff_eq!(r.ui_y, 1.0, epsilon = 1e-3);
        assert!(r.si <= 1e-3);
        assert!(r.ui_z <= 1e-3);
        assert!(r.ci <= 1e-3);
    }

    #[test]
    fn decompose_and_gate() {
        // Analytic optimum sits at the γ₋₁ = 1/4 lattice endpoint, so the
        // grid recovers SI = I(X:Y) = h(1/4) − 1/2 and CI = 1/2 exactly; the
        // fine-grid oracle agrees.
        let expect_si = 0.31127812445913283;
        let r = decompose(&Pmf3::and_triple(), &OptimizationPlan::default()).unwrap();
        assert_abs_diff_eq!(r.si, expect_si, epsilon = 1e-6);
        assert_abs_diff_eq!(r.ci, 0.5, epsilon = 1e-6);
        assert!(r.ui_y <= 1e-6);
        assert!(r.ui_z <= 1e-6);

        let oracle = decompose_oracle(&Pmf3::and_triple(), 2001).unwrap();
        assert_abs_diff_eq!(oracle.si, expect_si, epsilon = 1e-6);
        assert_abs_diff_eq!(oracle.ci, 0.5, epsilon = 1e-6);
    }

    #[test]
    fn oracle_xor_at_1001() {
        let r = decompose_oracle(&Pmf3::xor_triple(), 1001).unwrap();
        assert_abs_diff_eq!(r.ci, 1.0, epsilon = 1e-4);
        assert!(r.si <= 1e-4 && r.ui_y <= 1e-4 && r.ui_z <= 1e-4);
    }

    #[test]
    fn oracle_uniform_is_all_zero() {
        let r = decompose_oracle(&Pmf3::uniform(), 101).unwrap();
        for c in r.components() {
            assert_abs_diff_eq!(c, 0.0, epsilon = 1e-9);
        }
    }

    #[test]
    fn oracle_rejects_low_resolution() {
        assert_eq!(
            decompose_oracle(&Pmf3::uniform(), 51),
            Err(DecompositionError::OracleResolutionTooSmall(51)).map(|_: ()| unreachable!())
        );
    }

    #[test]
    fn decompose_rejects_resolution_below_two() {
        let plan = OptimizationPlan {
            resolution: 1,
            ..OptimizationPlan::default()
        };
        assert!(matches!(
            decompose(&Pmf3::uniform(), &plan),
            Err(DecompositionError::ResolutionTooSmall(1))
        ));
    }

    #[test]
    fn decompose_agrees_with_oracle_on_seeded_draws() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..5 {
            let p = seeded_pmf3(&mut rng);
            let fast = decompose(&p, &OptimizationPlan::default()).unwrap();
            let slow = decompose_oracle(&p, 1001).unwrap();
            for (a, b) in fast.components().iter().zip(slow.components()) {
                assert_abs_diff_eq!(*a, b, epsilon = 1e-4);
            }
        }
    }

    #[test]
    fn oracle_converges_with_nested_grids() {
        // Resolutions 101, 401, 1601 give nested lattices, so each component
        // decreases monotonically and by shrinking increments.
        let mut rng = ChaCha8Rng::seed_from_u64(0xc0ffee);
        for _ in 0..3 {
            let p = seeded_pmf3(&mut rng);
            let a = decompose_oracle(&p, 101).unwrap();
            let b = decompose_oracle(&p, 401).unwrap();
            let c = decompose_oracle(&p, 1601).unwrap();
            for k in 0..4 {
                let d1 = (a.components()[k] - b.components()[k]).abs();
                let d2 = (b.components()[k] - c.components()[k]).abs();
                assert!(
                    d2 < d1 || d1 < 1e-12,
                    "increments did not shrink: {d1} then {d2}"
                );
            }
        }
    }

    #[test]
    fn jobs_do_not_change_the_result() {
        let p = seeded_pmf3(&mut ChaCha8Rng::seed_from_u64(7));
        let plan = small_plan();
        let baseline = decompose(&p, &plan).unwrap();
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap();
        let single = pool.install(|| decompose(&p, &plan).unwrap());
        assert_eq!(baseline.components(), single.components());
        assert_eq!(baseline.argmin, single.argmin);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        #[test]
        fn perturb_preserves_pair_marginals(p in arb_pmf3(), u in 0.0f64..1.0, v in 0.0f64..1.0) {
            let rect = gamma_bounds(&p);
            let gm = rect.lo_minus + u * rect.width_minus();
            let gp = rect.lo_plus + v * rect.width_plus();
            let q = perturb(&p, gm, gp).unwrap();
            for (a, b) in p.marginal_xy().cells().iter().zip(q.marginal_xy().cells()) {
                prop_assert!((a - b).abs() <= 1e-12);
            }
            for (a, b) in p.marginal_xz().cells().iter().zip(q.marginal_xz().cells()) {
                prop_assert!((a - b).abs() <= 1e-12);
            }
        }

        #[test]
        fn components_nonnegative_and_identities_hold(p in arb_pmf3()) {
            let r = decompose(&p, &small_plan()).unwrap();
            for c in r.components() {
                prop_assert!(c >= 0.0);
            }
            prop_assert!(r.max_residual() <= CONSISTENCY_TOL);
        }
    }
}
