//! The `verify` subcommand suites: each runs an exact cross-validation and
//! reports every residual.

use crate::report::{Report, Section};
use anyhow::{bail, Result};
use entgeo::entropy::{
    directional_growth_oracle, estimate_halfspace_entropy, haar_directional_entropy,
    verify_abramov_rokhlin, WindowSchedule,
};
use entgeo::fpsolve::build_system;
use entgeo::laurent::LaurentPoly;
use entgeo::polytope::{newton_polytope, NewtonPolytope};
use entgeo::shiftsys::{Presentation, Region};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::collections::BTreeSet;

pub struct SuiteOutcome {
    pub report: Report,
    pub passed: bool,
}

/// Directional entropy formula against the sheared-band growth oracle:
/// canonical directions plus seeded random ones.
pub fn formula(systems: &[(String, Presentation)], seed: u64) -> Result<SuiteOutcome> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut directions: Vec<[i64; 2]> = vec![[0, 1], [1, 0], [1, 1], [1, -1]];
    while directions.len() < 14 {
        let v = [rng.gen_range(-3i64..=3), rng.gen_range(-3i64..=3)];
        if v != [0, 0] && !directions.contains(&v) {
            directions.push(v);
        }
    }
    let mut report = Report::new();
    let mut passed = true;
    for (name, pres) in systems {
        let mut section = Section::new("formula");
        section.push("system", name);
        for n in &directions {
            let formula = haar_directional_entropy(pres, n)?;
            let growth = directional_growth_oracle(pres, n, 6, 4)?;
            let tail = &growth[growth.len() - 2..];
            let ok = tail.iter().all(|g| *g == formula.coeff_num());
            passed &= ok;
            section.push(
                "direction",
                format!(
                    "({}, {}) formula={} growth={:?} {}",
                    n[0],
                    n[1],
                    formula.coeff(),
                    growth,
                    if ok { "ok" } else { "MISMATCH" }
                ),
            );
        }
        report.section(section);
    }
    Ok(SuiteOutcome { report, passed })
}

/// Half-space entropy additivity over the first factor, checked as an
/// integer identity at every window.
pub fn ar(
    systems: &[(String, Presentation)],
    schedule: &WindowSchedule,
) -> Result<SuiteOutcome> {
    if systems.len() != 2 {
        bail!("the ar suite takes exactly two systems, got {}", systems.len());
    }
    let (ny, y) = &systems[0];
    let (nz, z) = &systems[1];
    let mut report = Report::new();
    let mut passed = true;
    for v in [[1i64, 1], [0, 1], [-1, 0]] {
        let outcome = verify_abramov_rokhlin(y, z, &v, schedule)?;
        let mut section = Section::new("additivity");
        section.push("pair", format!("{ny} x {nz}"));
        section.push("direction", format!("({}, {})", v[0], v[1]));
        for w in &outcome.windows {
            section.push(
                "window",
                format!(
                    "({}, {}) product={} factor={} conditional={} residual={}",
                    w.window.0,
                    w.window.1,
                    w.product_dim,
                    w.factor_dim,
                    w.conditional_dim,
                    w.residual
                ),
            );
        }
        let ok = outcome.all_residuals_zero();
        passed &= ok;
        section.push("residuals", if ok { "all zero" } else { "NONZERO" });
        report.section(section);
    }
    Ok(SuiteOutcome { report, passed })
}

/// Estimates must be unchanged under higher-block recoding with r = 1.
pub fn invariance(
    systems: &[(String, Presentation)],
    schedule: &WindowSchedule,
) -> Result<SuiteOutcome> {
    let mut report = Report::new();
    let mut passed = true;
    for (name, pres) in systems {
        let recoded = pres.higher_block(1)?;
        let mut directions: Vec<[i64; 2]> = vec![[1, 1], [0, 1]];
        if let Some((_, f)) = pres.principal_data() {
            if let NewtonPolytope::Dim2(np) = newton_polytope(f)? {
                directions.extend(np.normals());
            }
        }
        directions.sort();
        directions.dedup();
        let mut section = Section::new("invariance");
        section.push("system", name);
        section.push("recoding", "higher block, radius 1");
        for v in &directions {
            let base = estimate_halfspace_entropy(pres, v, schedule)?;
            let lifted = estimate_halfspace_entropy(&recoded, v, schedule)?;
            let ok = base.stabilized
                && lifted.stabilized
                && base.final_value() == lifted.final_value();
            passed &= ok;
            section.push(
                "direction",
                format!(
                    "({}, {}) base={:?} recoded={:?} {}",
                    v[0],
                    v[1],
                    base.values,
                    lifted.values,
                    if ok { "ok" } else { "MISMATCH" }
                ),
            );
        }
        report.section(section);
    }
    Ok(SuiteOutcome { report, passed })
}

/// Brute-force counts against `p^rank-deficiency` on seeded random windows
/// of the given systems, plus scattered random systems.
pub fn oracle(
    systems: &[(String, Presentation)],
    seed: u64,
    rounds: usize,
) -> Result<SuiteOutcome> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut report = Report::new();
    let mut passed = true;
    let mut checked = 0usize;
    let mut section = Section::new("oracle");
    section.push("rounds", rounds);
    while checked < rounds {
        let (name, pres) = &systems[checked % systems.len()];
        let cells: BTreeSet<Vec<i64>> = (0..rng.gen_range(1..=16 / pres.rank().max(1)).max(1))
            .map(|_| {
                (0..pres.dim())
                    .map(|_| rng.gen_range(0..3i64))
                    .collect::<Vec<i64>>()
            })
            .collect();
        let region = Region::from_cells(cells, pres.dim(), "random window");
        let sys = build_system(pres, &region)?;
        if sys.num_vars() > 20 {
            continue;
        }
        let dim = sys
            .kernel_dim()
            .dim()
            .expect("no pins, always feasible");
        let count = sys.brute_force_count(22)?;
        let expected = (pres.modulus() as u128).pow(dim as u32);
        let ok = count == expected;
        passed &= ok;
        if !ok {
            section.push(
                "mismatch",
                format!("{name}: brute force {count}, rank predicts {expected}"),
            );
        }
        checked += 1;
    }
    section.push("checked", checked);
    section.push("result", if passed { "all equal" } else { "MISMATCH" });
    report.section(section);
    Ok(SuiteOutcome { report, passed })
}

/// The annihilating polynomial of a presentation: the relation itself for
/// principal systems, the product of component relations for products.
pub fn annihilator(pres: &Presentation) -> Result<LaurentPoly> {
    let factors = match pres.principal_factors() {
        Some(f) => f,
        None => bail!("system has no principal factorization"),
    };
    let mut product: Option<LaurentPoly> = None;
    for factor in factors {
        let (_, f) = factor.principal_data().expect("principal factor");
        product = Some(match product {
            None => f.clone(),
            Some(acc) => {
                if acc.modulus() != f.modulus() {
                    bail!(
                        "annihilator undefined across moduli {} and {}",
                        acc.modulus(),
                        f.modulus()
                    );
                }
                acc.mul(f)?
            }
        });
    }
    Ok(product.expect("at least one factor"))
}
