//! Haar-measure entropy computations.
//!
//! For these systems Haar measure makes every conditional count uniform,
//! so entropies are dimensions: the half-space entropy of a direction `v`
//! is the number of free `F_p`-dimensions of the line `v^perp` given the
//! open half-space below it, and is computed per window as an exact
//! conditional dimension. The closed form — lattice length of the matching
//! Newton-polygon edge times `log p` — is validated against the window
//! estimator, never trusted on its own.
//!
//! Windows realize the infinite half-space by strips of growing depth. A
//! strip is widened transversally beyond the line's extent by a margin
//! proportional to the depth, covering the dependency cone of the
//! relations; reported series carry a stabilization flag instead of a
//! convergence guarantee.

use crate::fpsolve::{build_system, SolveError};
use crate::laurent::is_prime;
use crate::polytope::{
    edge_entropy_weights, newton_polytope, NewtonPolytope, PolytopeError,
};
use crate::shiftsys::{
    lex_cond_cells, lex_target_cells, perp, region_line, strip_cells, Presentation, Region,
    SystemError,
};
use num_rational::Ratio;
use num_traits::{Signed, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EntropyError {
    #[error("operation requires a principal presentation")]
    NotPrincipal,
    #[error("operation requires dimension {expected}, got {got}")]
    WrongDimension { expected: usize, got: usize },
    #[error("modulus {0} is not prime")]
    CompositeModulus(u64),
    #[error("factors carry different primes {0} and {1}")]
    MixedPrimes(u64, u64),
    #[error("the zero vector is not a direction")]
    ZeroDirection,
    #[error("window schedule is empty")]
    EmptySchedule,
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    System(#[from] SystemError),
}

/// An exact entropy `c * log p` with nonnegative rational `c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EntropyValue {
    coeff: Ratio<i64>,
    prime: u64,
}

impl EntropyValue {
    pub fn new(num: i64, den: i64, prime: u64) -> Self {
        let coeff = Ratio::new(num, den);
        debug_assert!(!coeff.is_negative());
        EntropyValue { coeff, prime }
    }

    pub fn zero(prime: u64) -> Self {
        EntropyValue {
            coeff: Ratio::zero(),
            prime,
        }
    }

    pub fn coeff(&self) -> Ratio<i64> {
        self.coeff
    }

    pub fn coeff_num(&self) -> i64 {
        *self.coeff.numer()
    }

    pub fn coeff_den(&self) -> i64 {
        *self.coeff.denom()
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// Decimal value in nats.
    pub fn nats(&self) -> f64 {
        let c = *self.coeff.numer() as f64 / *self.coeff.denom() as f64;
        c * (self.prime as f64).ln()
    }

    fn add(&self, other: &EntropyValue) -> Result<EntropyValue, EntropyError> {
        if self.prime != other.prime {
            return Err(EntropyError::MixedPrimes(self.prime, other.prime));
        }
        Ok(EntropyValue {
            coeff: self.coeff + other.coeff,
            prime: self.prime,
        })
    }

    fn scaled(&self, by: i64) -> EntropyValue {
        EntropyValue {
            coeff: self.coeff * Ratio::from_integer(by),
            prime: self.prime,
        }
    }
}

impl fmt::Display for EntropyValue {
    /// Renders both the exact pair and the decimal: `2 · log 2 = 1.386294 nats`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeff.is_zero() {
            return write!(f, "0 = 0.000000 nats");
        }
        if *self.coeff.denom() == 1 {
            write!(
                f,
                "{} · log {} = {:.6} nats",
                self.coeff.numer(),
                self.prime,
                self.nats()
            )
        } else {
            write!(
                f,
                "{}/{} · log {} = {:.6} nats",
                self.coeff.numer(),
                self.coeff.denom(),
                self.prime,
                self.nats()
            )
        }
    }
}

/// Window sizes for estimators plus the stabilization criterion: a series
/// is stabilized when its last `stabilize_k` values agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowSchedule {
    pub windows: Vec<(u32, u32)>,
    pub stabilize_k: usize,
}

impl WindowSchedule {
    pub fn new(windows: Vec<(u32, u32)>) -> Self {
        WindowSchedule {
            windows,
            stabilize_k: 3,
        }
    }

    /// Default `(L, D)` schedule for planar half-space estimates.
    pub fn default_plane() -> Self {
        Self::new(vec![(4, 4), (6, 6), (8, 8), (10, 10)])
    }

    /// Default `(L, H)` schedule for lexicographic estimates in `Z^3`.
    pub fn default_lex() -> Self {
        Self::new(vec![(3, 3), (4, 4), (5, 5)])
    }
}

/// A per-window estimate series in units of `log p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EstimateSeries {
    pub windows: Vec<(u32, u32)>,
    pub values: Vec<Ratio<i64>>,
    pub stabilized: bool,
    pub prime: u64,
}

impl EstimateSeries {
    fn collect(windows: Vec<(u32, u32)>, values: Vec<Ratio<i64>>, k: usize, prime: u64) -> Self {
        let stabilized = values.len() >= k && {
            let tail = &values[values.len() - k..];
            tail.iter().all(|v| *v == tail[0])
        };
        EstimateSeries {
            windows,
            values,
            stabilized,
            prime,
        }
    }

    /// The stabilized value, if any.
    pub fn final_value(&self) -> Option<EntropyValue> {
        if !self.stabilized {
            return None;
        }
        let last = *self.values.last()?;
        Some(EntropyValue {
            coeff: last,
            prime: self.prime,
        })
    }
}

impl fmt::Display for EstimateSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for ((l, d), v) in self.windows.iter().zip(self.values.iter()) {
            writeln!(f, "window ({l}, {d}): {v} · log {}", self.prime)?;
        }
        write!(
            f,
            "stabilized: {}",
            if self.stabilized { "yes" } else { "no" }
        )
    }
}

fn require_dim(pres: &Presentation, expected: usize) -> Result<(), EntropyError> {
    if pres.dim() != expected {
        return Err(EntropyError::WrongDimension {
            expected,
            got: pres.dim(),
        });
    }
    Ok(())
}

fn require_prime(pres: &Presentation) -> Result<u64, EntropyError> {
    let p = pres.modulus();
    if !is_prime(p) {
        return Err(EntropyError::CompositeModulus(p));
    }
    Ok(p)
}

fn primitive2(v: &[i64]) -> Result<[i64; 2], EntropyError> {
    if v.len() != 2 {
        return Err(EntropyError::WrongDimension {
            expected: 2,
            got: v.len(),
        });
    }
    let p = crate::polytope::primitive_direction(v).map_err(|_| EntropyError::ZeroDirection)?;
    Ok([p[0], p[1]])
}

/// Exact half-space entropy of a principal planar system: zero unless `v`
/// is an outward edge normal of the Newton polygon, in which case the
/// edge's lattice length counts the free dimensions.
pub fn haar_halfspace_entropy(
    pres: &Presentation,
    v: &[i64],
) -> Result<EntropyValue, EntropyError> {
    require_dim(pres, 2)?;
    let (p, f) = pres.principal_data().ok_or(EntropyError::NotPrincipal)?;
    if !is_prime(p) {
        return Err(EntropyError::CompositeModulus(p));
    }
    let v = primitive2(v)?;
    let np = match newton_polytope(f)? {
        NewtonPolytope::Dim2(np) => np,
        _ => unreachable!("dimension checked"),
    };
    let weights = edge_entropy_weights(&np, p)?;
    Ok(weights
        .get(&v)
        .copied()
        .unwrap_or_else(|| EntropyValue::zero(p)))
}

/// Directional entropy of `alpha^n` for a principal system or a product of
/// principal systems over one prime: the weighted sum of half-space
/// entropies over primitive `v` with `v . n > 0`, summing factor
/// contributions.
pub fn haar_directional_entropy(
    pres: &Presentation,
    n: &[i64],
) -> Result<EntropyValue, EntropyError> {
    require_dim(pres, 2)?;
    if n.len() != 2 {
        return Err(EntropyError::WrongDimension {
            expected: 2,
            got: n.len(),
        });
    }
    if n.iter().all(|x| *x == 0) {
        return Err(EntropyError::ZeroDirection);
    }
    let factors = pres
        .principal_factors()
        .ok_or(EntropyError::NotPrincipal)?;
    let mut total: Option<EntropyValue> = None;
    for factor in factors {
        let (p, f) = factor.principal_data().expect("principal factor");
        if !is_prime(p) {
            return Err(EntropyError::CompositeModulus(p));
        }
        let np = match newton_polytope(f)? {
            NewtonPolytope::Dim2(np) => np,
            _ => unreachable!("dimension checked"),
        };
        let weights = edge_entropy_weights(&np, p)?;
        let mut factor_total = EntropyValue::zero(p);
        for (normal, weight) in &weights {
            let dot = normal[0] * n[0] + normal[1] * n[1];
            if dot > 0 {
                factor_total = factor_total.add(&weight.scaled(dot))?;
            }
        }
        total = Some(match total {
            None => factor_total,
            Some(t) => t.add(&factor_total)?,
        });
    }
    total.ok_or(EntropyError::NotPrincipal)
}

/// Transverse reach of the relations: how far (in units of `w`) one
/// relation row can shift the dependency per unit of depth.
fn transverse_reach(pres: &Presentation, w: [i64; 2]) -> i64 {
    let ww = w[0] * w[0] + w[1] * w[1];
    let mut reach = 1i64;
    for gen in pres.relations() {
        let support: Vec<Vec<i64>> = gen
            .iter()
            .flat_map(|poly| poly.terms().map(|(e, _)| e.clone()).collect::<Vec<_>>())
            .collect();
        for a in &support {
            for b in &support {
                let dw = (a[0] - b[0]) * w[0] + (a[1] - b[1]) * w[1];
                reach = reach.max((dw.abs() + ww - 1) / ww);
            }
        }
    }
    reach
}

/// Ambient regions for one half-space window: the line of extent `len` and
/// the strip of the given depth, widened transversally by the dependency
/// margin.
fn halfspace_regions(
    pres: &Presentation,
    v: [i64; 2],
    len: u32,
    depth: u32,
) -> (Region, Region) {
    let w = perp(v);
    let margin = (depth as i64 + 1) * transverse_reach(pres, w);
    let line = region_line(&v, len as u64).expect("primitive direction");
    let strip = Region::from_cells(
        strip_cells(v, depth as i64, len as i64 + margin),
        2,
        format!("strip v=({},{}) depth={depth} len={len}+{margin}", v[0], v[1]),
    );
    (line, strip)
}

/// Windowed half-space entropy estimate: per window, the exact conditional
/// dimension of the line given the strip, in units of `log p`.
pub fn estimate_halfspace_entropy(
    pres: &Presentation,
    v: &[i64],
    schedule: &WindowSchedule,
) -> Result<EstimateSeries, EntropyError> {
    require_dim(pres, 2)?;
    let p = require_prime(pres)?;
    let v = primitive2(v)?;
    if schedule.windows.is_empty() {
        return Err(EntropyError::EmptySchedule);
    }
    let mut values = Vec::with_capacity(schedule.windows.len());
    for (len, depth) in &schedule.windows {
        let (line, strip) = halfspace_regions(pres, v, *len, *depth);
        let ambient = line.union(&strip);
        let sys = build_system(pres, &ambient)?;
        let target = sys.region_vars(&line)?;
        let conditioning = sys.region_vars(&strip)?;
        let dim = sys.conditional_dim(&target, &conditioning)?;
        values.push(Ratio::from_integer(dim as i64));
    }
    Ok(EstimateSeries::collect(
        schedule.windows.clone(),
        values,
        schedule.stabilize_k,
        p,
    ))
}

/// One window of the half-space additivity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArWindow {
    pub window: (u32, u32),
    /// Conditional dimension of the line given the strip in the product.
    pub product_dim: i64,
    /// The same quantity in the first factor alone.
    pub factor_dim: i64,
    /// Product dimension conditioned additionally on every first-factor
    /// variable of the ambient window.
    pub conditional_dim: i64,
    /// `product - factor - conditional`; zero when additivity holds.
    pub residual: i64,
}

/// Report of the half-space additivity identity over a window schedule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArReport {
    pub direction: [i64; 2],
    pub prime: u64,
    pub windows: Vec<ArWindow>,
}

impl ArReport {
    pub fn all_residuals_zero(&self) -> bool {
        self.windows.iter().all(|w| w.residual == 0)
    }
}

impl fmt::Display for ArReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "additivity at v = ({}, {}), entries in units of log {}",
            self.direction[0], self.direction[1], self.prime
        )?;
        for w in &self.windows {
            writeln!(
                f,
                "window ({}, {}): product {} = factor {} + conditional {} (residual {})",
                w.window.0, w.window.1, w.product_dim, w.factor_dim, w.conditional_dim, w.residual
            )?;
        }
        write!(
            f,
            "all residuals zero: {}",
            if self.all_residuals_zero() { "yes" } else { "no" }
        )
    }
}

/// Verify the half-space entropy addition formula on the product of `y`
/// and `z` over the factor `y`, window by window: the product's
/// conditional dimension must equal the factor's plus the product's
/// conditional dimension given the whole `y`-block. For product systems
/// this is an exact integer identity at every window.
pub fn verify_abramov_rokhlin(
    y: &Presentation,
    z: &Presentation,
    v: &[i64],
    schedule: &WindowSchedule,
) -> Result<ArReport, EntropyError> {
    require_dim(y, 2)?;
    require_dim(z, 2)?;
    let product = Presentation::product(vec![y.clone(), z.clone()])?;
    let p = require_prime(&product)?;
    let v = primitive2(v)?;
    if schedule.windows.is_empty() {
        return Err(EntropyError::EmptySchedule);
    }
    let mut windows = Vec::with_capacity(schedule.windows.len());
    for (len, depth) in &schedule.windows {
        // one shared pair of regions so the identity is about one window
        let (line, strip) = halfspace_regions(&product, v, *len, *depth);
        let ambient = line.union(&strip);

        let sys_x = build_system(&product, &ambient)?;
        let target_x = sys_x.region_vars(&line)?;
        let conditioning_x = sys_x.region_vars(&strip)?;
        let product_dim = sys_x.conditional_dim(&target_x, &conditioning_x)? as i64;

        let sys_y = build_system(y, &ambient)?;
        let target_y = sys_y.region_vars(&line)?;
        let conditioning_y = sys_y.region_vars(&strip)?;
        let factor_dim = sys_y.conditional_dim(&target_y, &conditioning_y)? as i64;

        // condition on the strip plus the entire y-block of the window
        let mut conditioning_full = conditioning_x.clone();
        for cell in ambient.cells() {
            for c in 0..y.rank() {
                conditioning_full.push((cell.clone(), c));
            }
        }
        let conditional_dim = sys_x.conditional_dim(&target_x, &conditioning_full)? as i64;

        windows.push(ArWindow {
            window: (*len, *depth),
            product_dim,
            factor_dim,
            conditional_dim,
            residual: product_dim - factor_dim - conditional_dim,
        });
    }
    Ok(ArReport {
        direction: v,
        prime: p,
        windows,
    })
}

/// Dimension of the projection to the line of the solutions vanishing on
/// the half-space strip: the window form of the coordinate subgroup
/// `{y : y = 0 on the open half-space}` projected to `v^perp`.
pub fn pi_y0_dim(
    pres: &Presentation,
    v: &[i64],
    len: u32,
    depth: u32,
) -> Result<usize, EntropyError> {
    require_dim(pres, 2)?;
    require_prime(pres)?;
    let v = primitive2(v)?;
    let (line, strip) = halfspace_regions(pres, v, len, depth);
    let ambient = line.union(&strip);
    let mut sys = build_system(pres, &ambient)?;
    sys.pin_region_zero(&strip)?;
    match sys.kernel_dim() {
        crate::fpsolve::SolveOutcome::Dim(report) => Ok(report.log_p_count),
        crate::fpsolve::SolveOutcome::Infeasible => {
            unreachable!("zero pins are always consistent")
        }
    }
}

/// Spread of the relation supports along the last axis; used as the
/// truncation guard for lexicographic windows.
fn axis_spread(pres: &Presentation) -> i64 {
    let d = pres.dim();
    let mut spread = 1i64;
    for gen in pres.relations() {
        for poly in gen {
            let hs: Vec<i64> = poly.terms().map(|(e, _)| e[d - 1]).collect();
            if let (Some(lo), Some(hi)) = (hs.iter().min(), hs.iter().max()) {
                spread = spread.max(hi - lo);
            }
        }
    }
    spread
}

/// Windowed lexicographic half-space entropy estimate in `Z^3`: the
/// conditional dimension of the axis column given the truncated
/// lexicographically-positive region, per window `(L, H)`. The
/// conditioning region is extended past the axis heights by the relation
/// spread so that axis determinations near the window top are not lost to
/// truncation.
pub fn lex_halfspace_entropy_estimate(
    pres: &Presentation,
    schedule: &WindowSchedule,
) -> Result<EstimateSeries, EntropyError> {
    require_dim(pres, 3)?;
    let p = require_prime(pres)?;
    if schedule.windows.is_empty() {
        return Err(EntropyError::EmptySchedule);
    }
    let guard = axis_spread(pres);
    let mut values = Vec::with_capacity(schedule.windows.len());
    for (width, height) in &schedule.windows {
        let cond = Region::from_cells(
            lex_cond_cells(3, 1, *width as i64, *height as i64 + guard),
            3,
            format!("lex cond width={width} height={height}+{guard}"),
        );
        let target = Region::from_cells(
            lex_target_cells(3, 1, *height as i64),
            3,
            format!("axis height={height}"),
        );
        let ambient = cond.union(&target);
        let sys = build_system(pres, &ambient)?;
        let t = sys.region_vars(&target)?;
        let c = sys.region_vars(&cond)?;
        let dim = sys.conditional_dim(&t, &c)?;
        values.push(Ratio::from_integer(dim as i64));
    }
    Ok(EstimateSeries::collect(
        schedule.windows.clone(),
        values,
        schedule.stabilize_k,
        p,
    ))
}

/// Oracle for the directional entropy formula: exact `log_p` counts over
/// sheared bands stacked along `n`, returned as consecutive differences.
/// The differences stabilize to the directional entropy coefficient.
pub fn directional_growth_oracle(
    pres: &Presentation,
    n: &[i64],
    len: u32,
    steps: u32,
) -> Result<Vec<i64>, EntropyError> {
    require_dim(pres, 2)?;
    require_prime(pres)?;
    if n.len() != 2 || (n[0] == 0 && n[1] == 0) {
        return Err(EntropyError::ZeroDirection);
    }
    let n = [n[0], n[1]];
    let nn = n[0] * n[0] + n[1] * n[1];
    let dir = primitive2(&n)?;
    let w = perp(dir);
    let ww = w[0] * w[0] + w[1] * w[1];
    let len = len as i64;
    let mut log_counts = Vec::new();
    for k in 1..=(steps as i64 + 1) {
        let cells = band_cells(n, nn, w, ww, len, k);
        let region = Region::from_cells(cells, 2, format!("band k={k}"));
        let sys = build_system(pres, &region)?;
        let dim = sys
            .kernel_dim()
            .dim()
            .expect("no pins, always feasible");
        log_counts.push(dim as i64);
    }
    Ok(log_counts.windows(2).map(|p| p[1] - p[0]).collect())
}

/// Cells with `0 <= m.n < k * (n.n)` and `|m.w| <= len * (w.w)`.
fn band_cells(n: [i64; 2], nn: i64, w: [i64; 2], ww: i64, len: i64, k: i64) -> Vec<Vec<i64>> {
    // orthogonal decomposition bounds a scan box
    let bound = |i: usize| -> i64 { k * n[i].abs() + (len + 1) * w[i].abs() + 1 };
    let bx = bound(0);
    let by = bound(1);
    let mut cells = Vec::new();
    for x in -bx..=bx {
        for y in -by..=by {
            let mn = x * n[0] + y * n[1];
            let mw = x * w[0] + y * w[1];
            if mn >= 0 && mn < k * nn && mw.abs() <= len * ww {
                cells.push(vec![x, y]);
            }
        }
    }
    cells
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::parse_poly;
    use crate::shiftsys::Presentation;

    fn three_dot() -> Presentation {
        Presentation::principal(2, parse_poly("1 + u1 + u2", 2, 2).unwrap()).unwrap()
    }

    fn mirror_dot() -> Presentation {
        Presentation::principal(2, parse_poly("1 + u1 + u2^-1", 2, 2).unwrap()).unwrap()
    }

    fn pair_product() -> Presentation {
        Presentation::product(vec![three_dot(), mirror_dot()]).unwrap()
    }

    fn small_schedule() -> WindowSchedule {
        WindowSchedule::new(vec![(4, 4), (6, 6), (8, 8)])
    }

    #[test]
    fn halfspace_closed_forms() {
        let log2 = EntropyValue::new(1, 1, 2);
        assert_eq!(
            haar_halfspace_entropy(&mirror_dot(), &[0, 1]).unwrap(),
            log2
        );
        assert_eq!(
            haar_halfspace_entropy(&three_dot(), &[1, 1]).unwrap(),
            log2
        );
        assert!(haar_halfspace_entropy(&three_dot(), &[0, 1])
            .unwrap()
            .is_zero());
        assert_eq!(
            haar_halfspace_entropy(&three_dot(), &[0, 0]),
            Err(EntropyError::ZeroDirection)
        );
        assert_eq!(
            haar_halfspace_entropy(&pair_product(), &[1, 1]),
            Err(EntropyError::NotPrincipal)
        );
    }

    #[test]
    fn directional_entropy_values() {
        // single systems
        assert_eq!(
            haar_directional_entropy(&mirror_dot(), &[0, 1])
                .unwrap()
                .coeff(),
            Ratio::from_integer(1)
        );
        assert_eq!(
            haar_directional_entropy(&three_dot(), &[0, 1])
                .unwrap()
                .coeff(),
            Ratio::from_integer(1)
        );
        assert_eq!(
            haar_directional_entropy(&three_dot(), &[1, 2])
                .unwrap()
                .coeff(),
            Ratio::from_integer(3)
        );
        // the product carries log 4 along e2
        assert_eq!(
            haar_directional_entropy(&pair_product(), &[0, 1])
                .unwrap()
                .coeff(),
            Ratio::from_integer(2)
        );
        assert_eq!(
            haar_directional_entropy(&three_dot(), &[0, 0]),
            Err(EntropyError::ZeroDirection)
        );
    }

    #[test]
    fn estimator_matches_closed_form_on_three_dot() {
        let schedule = small_schedule();
        let series = estimate_halfspace_entropy(&three_dot(), &[1, 1], &schedule).unwrap();
        assert!(series.stabilized);
        assert_eq!(
            series.final_value().unwrap().coeff(),
            Ratio::from_integer(1)
        );
        let series = estimate_halfspace_entropy(&three_dot(), &[0, 1], &schedule).unwrap();
        assert!(series.stabilized);
        assert!(series.final_value().unwrap().is_zero());
    }

    #[test]
    fn estimator_on_product_sums_factors() {
        let schedule = WindowSchedule::new(vec![(4, 4), (5, 5), (6, 6)]);
        let series = estimate_halfspace_entropy(&pair_product(), &[1, 1], &schedule).unwrap();
        assert!(series.stabilized);
        assert_eq!(
            series.final_value().unwrap().coeff(),
            Ratio::from_integer(1)
        );
    }

    #[test]
    fn ar_residuals_vanish() {
        let schedule = WindowSchedule::new(vec![(4, 4), (6, 6)]);
        for v in [[1i64, 1], [0, 1], [-1, 0]] {
            let report =
                verify_abramov_rokhlin(&three_dot(), &mirror_dot(), &v, &schedule).unwrap();
            assert!(report.all_residuals_zero(), "direction {v:?}: {report}");
        }
    }

    #[test]
    fn ar_identity_values_match_known_entropies() {
        let schedule = WindowSchedule::new(vec![(6, 6)]);
        let report =
            verify_abramov_rokhlin(&three_dot(), &mirror_dot(), &[1, 1], &schedule).unwrap();
        let w = &report.windows[0];
        assert_eq!((w.product_dim, w.factor_dim, w.conditional_dim), (1, 1, 0));
        let report =
            verify_abramov_rokhlin(&three_dot(), &mirror_dot(), &[0, 1], &schedule).unwrap();
        let w = &report.windows[0];
        assert_eq!((w.product_dim, w.factor_dim, w.conditional_dim), (1, 0, 1));
    }

    #[test]
    fn pi_y0_values() {
        assert_eq!(pi_y0_dim(&three_dot(), &[1, 1], 6, 6).unwrap(), 1);
        assert_eq!(pi_y0_dim(&three_dot(), &[0, 1], 6, 6).unwrap(), 0);
        let d = pi_y0_dim(&three_dot(), &[1, 1], 0, 6).unwrap();
        assert!(d <= 1);
    }

    #[test]
    fn lex_estimates_for_four_dot_pair() {
        let schedule = WindowSchedule::default_lex();
        let f1 = Presentation::principal(2, parse_poly("1 + u1 + u2 + u3", 3, 2).unwrap())
            .unwrap();
        let f2 =
            Presentation::principal(2, parse_poly("1 + u1^-1 + u2 + u3", 3, 2).unwrap()).unwrap();
        let s1 = lex_halfspace_entropy_estimate(&f1, &schedule).unwrap();
        assert!(s1.stabilized);
        assert!(s1.final_value().unwrap().coeff() > Ratio::from_integer(0));
        let s2 = lex_halfspace_entropy_estimate(&f2, &schedule).unwrap();
        assert!(s2.stabilized);
        assert!(s2.final_value().unwrap().is_zero());
    }

    #[test]
    fn lex_trivial_constant() {
        let schedule = WindowSchedule::new(vec![(2, 2), (3, 3), (4, 4)]);
        let one = Presentation::principal(2, parse_poly("1", 3, 2).unwrap()).unwrap();
        let s = lex_halfspace_entropy_estimate(&one, &schedule).unwrap();
        assert!(s.stabilized);
        assert!(s.final_value().unwrap().is_zero());
    }

    #[test]
    fn lex_requires_dimension_three() {
        let schedule = WindowSchedule::default_lex();
        assert!(matches!(
            lex_halfspace_entropy_estimate(&three_dot(), &schedule),
            Err(EntropyError::WrongDimension { expected: 3, got: 2 })
        ));
    }

    #[test]
    fn growth_oracle_matches_formula_on_axes() {
        let g = directional_growth_oracle(&three_dot(), &[0, 1], 6, 4).unwrap();
        assert_eq!(g.last(), Some(&1));
        let g = directional_growth_oracle(&three_dot(), &[1, 1], 6, 4).unwrap();
        assert_eq!(g.last(), Some(&2));
        let g = directional_growth_oracle(&mirror_dot(), &[1, 1], 6, 4).unwrap();
        assert_eq!(g.last(), Some(&1));
    }

    #[test]
    fn display_formats() {
        let v = EntropyValue::new(2, 1, 2);
        assert_eq!(v.to_string(), "2 · log 2 = 1.386294 nats");
        let z = EntropyValue::zero(3);
        assert_eq!(z.to_string(), "0 = 0.000000 nats");
        let half = EntropyValue::new(1, 2, 2);
        assert!(half.to_string().starts_with("1/2 · log 2"));
    }
}
