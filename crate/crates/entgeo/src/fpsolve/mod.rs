//! The exact counting oracle: `F_p` linear constraint systems induced by a
//! presentation on a finite region.
//!
//! Solution counts of these window systems are powers of `p`, so entropy
//! bookkeeping happens on dimensions: kernel dimension, projection
//! dimension onto chosen coordinates, and conditional dimensions computed
//! inside one ambient window. Projection dimensions are matroid ranks of
//! the solution space, which is what makes conditional counts submodular
//! and product systems exactly additive.

mod elim;

use crate::laurent::is_prime;
use crate::shiftsys::{Presentation, Region};
use elim::eliminate;
use std::collections::BTreeMap;

/// A window variable: one alphabet component at one cell.
pub type VarKey = (Vec<i64>, usize);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolveError {
    #[error("modulus {0} is not prime")]
    CompositeModulus(u64),
    #[error("region dimension {region} does not match presentation dimension {presentation}")]
    DimMismatch { presentation: usize, region: usize },
    #[error("variable {0:?} is not part of this window")]
    UnknownVariable(String),
    #[error("pinned values are inconsistent: the window has no solutions")]
    InfeasiblePins,
    #[error("{variables} variables exceed the brute-force cap {cap}")]
    CapExceeded { variables: usize, cap: usize },
    #[error("cell {0:?} lies outside the window")]
    OutsideWindow(Vec<i64>),
}

/// Exact size data of a solved window.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountReport {
    pub variables: usize,
    pub rank: usize,
    /// `log_p` of the number of solutions: `variables - rank` including
    /// pin rows.
    pub log_p_count: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveOutcome {
    Dim(CountReport),
    /// Pinned values contradict the relations; distinct from dimension 0.
    Infeasible,
}

impl SolveOutcome {
    pub fn dim(&self) -> Option<usize> {
        match self {
            SolveOutcome::Dim(report) => Some(report.log_p_count),
            SolveOutcome::Infeasible => None,
        }
    }
}

/// The `F_p` linear system induced by a presentation on a region: one row
/// per relation generator and shift with all touched cells inside the
/// region, in lexicographic shift order.
#[derive(Debug, Clone)]
pub struct FpWindowSystem {
    prime: u64,
    vars: Vec<VarKey>,
    var_index: BTreeMap<VarKey, usize>,
    rows: Vec<Vec<(u32, u64)>>,
    pins: BTreeMap<usize, u64>,
}

/// Assemble the window system of `pres` on `region`.
pub fn build_system(pres: &Presentation, region: &Region) -> Result<FpWindowSystem, SolveError> {
    let p = pres.modulus();
    if !is_prime(p) {
        return Err(SolveError::CompositeModulus(p));
    }
    if region.dim() != pres.dim() {
        return Err(SolveError::DimMismatch {
            presentation: pres.dim(),
            region: region.dim(),
        });
    }
    let mut vars: Vec<VarKey> = Vec::with_capacity(region.len() * pres.rank());
    for cell in region.cells() {
        for c in 0..pres.rank() {
            vars.push((cell.clone(), c));
        }
    }
    let var_index: BTreeMap<VarKey, usize> = vars
        .iter()
        .enumerate()
        .map(|(i, k)| (k.clone(), i))
        .collect();

    // rows: (shift, generator index) in lexicographic order
    let mut keyed_rows: Vec<(Vec<i64>, usize, Vec<(u32, u64)>)> = Vec::new();
    for (gi, gen) in pres.relations().iter().enumerate() {
        let support: Vec<(usize, Vec<i64>, u64)> = gen
            .iter()
            .enumerate()
            .flat_map(|(c, poly)| {
                poly.terms()
                    .map(move |(e, v)| (c, e.clone(), v))
                    .collect::<Vec<_>>()
            })
            .collect();
        let Some((_, anchor, _)) = support.first() else {
            continue; // zero generator constrains nothing
        };
        let anchor = anchor.clone();
        let mut shifts: Vec<Vec<i64>> = region
            .cells()
            .iter()
            .map(|cell| cell.iter().zip(anchor.iter()).map(|(a, b)| a - b).collect())
            .collect();
        shifts.sort();
        shifts.dedup();
        'shift: for m in shifts {
            let mut row: Vec<(u32, u64)> = Vec::with_capacity(support.len());
            for (c, e, v) in &support {
                let cell: Vec<i64> = m.iter().zip(e.iter()).map(|(a, b)| a + b).collect();
                match var_index.get(&(cell, *c)) {
                    Some(col) => row.push((*col as u32, *v)),
                    None => continue 'shift,
                }
            }
            keyed_rows.push((m, gi, row));
        }
    }
    keyed_rows.sort();
    let rows = keyed_rows.into_iter().map(|(_, _, row)| row).collect();

    Ok(FpWindowSystem {
        prime: p,
        vars,
        var_index,
        rows,
        pins: BTreeMap::new(),
    })
}

impl FpWindowSystem {
    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn vars(&self) -> &[VarKey] {
        &self.vars
    }

    pub fn has_var(&self, key: &VarKey) -> bool {
        self.var_index.contains_key(key)
    }

    /// Pin one variable to a value.
    pub fn pin(&mut self, key: &VarKey, value: u64) -> Result<(), SolveError> {
        let idx = *self
            .var_index
            .get(key)
            .ok_or_else(|| SolveError::UnknownVariable(format!("{key:?}")))?;
        self.pins.insert(idx, value % self.prime);
        Ok(())
    }

    /// Pin every component over the cells of `region` to zero. Cells
    /// outside the window are an error.
    pub fn pin_region_zero(&mut self, region: &Region) -> Result<(), SolveError> {
        let components = self.components();
        for cell in region.cells() {
            for c in 0..components {
                self.pin(&(cell.clone(), c), 0)
                    .map_err(|_| SolveError::OutsideWindow(cell.clone()))?;
            }
        }
        Ok(())
    }

    fn components(&self) -> usize {
        self.vars.iter().map(|(_, c)| c + 1).max().unwrap_or(1)
    }

    fn pin_rows(&self) -> (Vec<Vec<(u32, u64)>>, Vec<u64>) {
        let mut rows = Vec::with_capacity(self.pins.len());
        let mut rhs = Vec::with_capacity(self.pins.len());
        for (idx, value) in &self.pins {
            rows.push(vec![(*idx as u32, 1u64)]);
            rhs.push(*value);
        }
        (rows, rhs)
    }

    /// Dimension of the solution space respecting pins, or `Infeasible`.
    pub fn kernel_dim(&self) -> SolveOutcome {
        let (mut rows, mut rhs) = self.pin_rows();
        let homogeneous = rows.len();
        rows.extend(self.rows.iter().cloned());
        rhs.extend(std::iter::repeat(0).take(rows.len() - homogeneous));
        let result = eliminate(self.prime, self.vars.len(), &rows, Some(&rhs));
        if !result.feasible {
            return SolveOutcome::Infeasible;
        }
        SolveOutcome::Dim(CountReport {
            variables: self.vars.len(),
            rank: result.rank,
            log_p_count: self.vars.len() - result.rank,
        })
    }

    /// Rank of the homogeneous system with the given extra coordinates
    /// forced to zero (pins are taken as zero: directions, not offsets).
    fn direction_dim(&self, zeroed: &[usize]) -> usize {
        let mut rows: Vec<Vec<(u32, u64)>> = self
            .pins
            .keys()
            .chain(zeroed.iter())
            .map(|idx| vec![(*idx as u32, 1u64)])
            .collect();
        rows.extend(self.rows.iter().cloned());
        let result = eliminate(self.prime, self.vars.len(), &rows, None);
        self.vars.len() - result.rank
    }

    fn resolve(&self, keys: &[VarKey]) -> Result<Vec<usize>, SolveError> {
        keys.iter()
            .map(|k| {
                self.var_index
                    .get(k)
                    .copied()
                    .ok_or_else(|| SolveError::UnknownVariable(format!("{k:?}")))
            })
            .collect()
    }

    /// Dimension of the image of the solution space under projection to
    /// `target`.
    pub fn projection_dim(&self, target: &[VarKey]) -> Result<usize, SolveError> {
        if matches!(self.kernel_dim(), SolveOutcome::Infeasible) {
            return Err(SolveError::InfeasiblePins);
        }
        let t = self.resolve(target)?;
        Ok(self.direction_dim(&[]) - self.direction_dim(&t))
    }

    /// Conditional dimension of `target` given `conditioning`, both inside
    /// this window: `projdim(target + conditioning) - projdim(conditioning)`.
    pub fn conditional_dim(
        &self,
        target: &[VarKey],
        conditioning: &[VarKey],
    ) -> Result<usize, SolveError> {
        if matches!(self.kernel_dim(), SolveOutcome::Infeasible) {
            return Err(SolveError::InfeasiblePins);
        }
        let t = self.resolve(target)?;
        let c = self.resolve(conditioning)?;
        let mut tc = t;
        tc.extend(c.iter().copied());
        Ok(self.direction_dim(&c) - self.direction_dim(&tc))
    }

    /// All window variables over the cells of a region.
    pub fn region_vars(&self, region: &Region) -> Result<Vec<VarKey>, SolveError> {
        let components = self.components();
        let mut out = Vec::with_capacity(region.len() * components);
        for cell in region.cells() {
            for c in 0..components {
                let key = (cell.clone(), c);
                if !self.has_var(&key) {
                    return Err(SolveError::OutsideWindow(cell.clone()));
                }
                out.push(key);
            }
        }
        Ok(out)
    }

    /// Exhaustive solution count honoring pins; must equal
    /// `p^kernel_dim`. Guarded by a variable cap.
    pub fn brute_force_count(&self, cap: usize) -> Result<u128, SolveError> {
        let n = self.vars.len();
        if n > cap {
            return Err(SolveError::CapExceeded { variables: n, cap });
        }
        // check each row as soon as its last variable is assigned
        let mut rows_by_last: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
        for (ri, row) in self.rows.iter().enumerate() {
            let last = row.iter().map(|(c, _)| *c as usize).max().unwrap_or(0);
            rows_by_last[last.min(n.saturating_sub(1))].push(ri);
        }
        let mut assignment = vec![0u64; n];
        Ok(self.enumerate(0, &mut assignment, &rows_by_last))
    }

    fn enumerate(&self, pos: usize, assignment: &mut Vec<u64>, rows_by_last: &[Vec<usize>]) -> u128 {
        if pos == self.vars.len() {
            return 1;
        }
        let values: Vec<u64> = match self.pins.get(&pos) {
            Some(v) => vec![*v],
            None => (0..self.prime).collect(),
        };
        let mut total = 0u128;
        'values: for v in values {
            assignment[pos] = v;
            for ri in &rows_by_last[pos] {
                let sum = self.rows[*ri]
                    .iter()
                    .fold(0u128, |acc, (c, coeff)| {
                        acc + (assignment[*c as usize] as u128) * (*coeff as u128)
                    });
                if sum % self.prime as u128 != 0 {
                    continue 'values;
                }
            }
            total += self.enumerate(pos + 1, assignment, rows_by_last);
        }
        total
    }

    /// Plain-text triplet dump `row col coeff`, one entry per line, with a
    /// header naming sizes and pins.
    pub fn debug_dump(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        let _ = writeln!(
            out,
            "# fp window system: p={} vars={} rows={} pins={}",
            self.prime,
            self.vars.len(),
            self.rows.len(),
            self.pins.len()
        );
        for (i, key) in self.vars.iter().enumerate() {
            let _ = writeln!(out, "var {i} cell={:?} component={}", key.0, key.1);
        }
        for (ri, row) in self.rows.iter().enumerate() {
            for (c, v) in row {
                let _ = writeln!(out, "{ri} {c} {v}");
            }
        }
        for (idx, v) in &self.pins {
            let _ = writeln!(out, "pin {idx} {v}");
        }
        out
    }
}

/// Window-relative coding test: do the coordinates on `a` determine the
/// coordinate at `m`, among solutions on the window `w`? This is a
/// sufficient test for infinite-volume coding; the window used is part of
/// the answer's meaning.
pub fn codes(
    pres: &Presentation,
    a: &Region,
    m: &[i64],
    w: &Region,
) -> Result<bool, SolveError> {
    if !w.contains(m) {
        return Err(SolveError::OutsideWindow(m.to_vec()));
    }
    let mut sys = build_system(pres, w)?;
    sys.pin_region_zero(a)?;
    let target: Vec<VarKey> = (0..pres.rank()).map(|c| (m.to_vec(), c)).collect();
    // determined iff the solutions vanishing on `a` project trivially to `m`
    let t = sys.resolve(&target)?;
    Ok(sys.direction_dim(&[]) == sys.direction_dim(&t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::parse_poly;
    use crate::shiftsys::{region_box, region_line, region_strip, Presentation};

    fn three_dot() -> Presentation {
        Presentation::principal(2, parse_poly("1 + u1 + u2", 2, 2).unwrap()).unwrap()
    }

    fn mirror_dot() -> Presentation {
        Presentation::principal(2, parse_poly("1 + u1 + u2^-1", 2, 2).unwrap()).unwrap()
    }

    #[test]
    fn two_by_two_box() {
        let sys = build_system(&three_dot(), &region_box(&[2, 2]).unwrap()).unwrap();
        assert_eq!(sys.num_vars(), 4);
        assert_eq!(sys.num_rows(), 1);
        match sys.kernel_dim() {
            SolveOutcome::Dim(r) => {
                assert_eq!(r.log_p_count, 3);
                assert_eq!(r.rank, 1);
            }
            _ => panic!("feasible"),
        }
        assert_eq!(sys.brute_force_count(22).unwrap(), 8);
    }

    #[test]
    fn n_by_n_boxes() {
        for n in 2..=4u64 {
            let sys = build_system(&three_dot(), &region_box(&[n, n]).unwrap()).unwrap();
            assert_eq!(sys.num_vars(), (n * n) as usize);
            assert_eq!(sys.num_rows(), ((n - 1) * (n - 1)) as usize);
            let dim = sys.kernel_dim().dim().unwrap();
            assert_eq!(dim, (2 * n - 1) as usize);
            if n * n <= 22 {
                assert_eq!(sys.brute_force_count(22).unwrap(), 1u128 << dim);
            }
        }
    }

    #[test]
    fn product_system_blocks_and_additivity() {
        let x = Presentation::product(vec![three_dot(), mirror_dot()]).unwrap();
        let region = region_box(&[2, 2]).unwrap();
        let sys = build_system(&x, &region).unwrap();
        assert_eq!(sys.num_vars(), 8);
        // one three-dot row; the mirror relation does not fit a 2x2 box
        // at any shift with all cells interior
        let a = build_system(&three_dot(), &region).unwrap();
        let b = build_system(&mirror_dot(), &region).unwrap();
        assert_eq!(
            sys.kernel_dim().dim().unwrap(),
            a.kernel_dim().dim().unwrap() + b.kernel_dim().dim().unwrap()
        );
        assert_eq!(
            sys.brute_force_count(22).unwrap(),
            a.brute_force_count(22).unwrap() * b.brute_force_count(22).unwrap()
        );
    }

    #[test]
    fn empty_region_counts_one() {
        let region = Region::from_cells(Vec::<Vec<i64>>::new(), 2, "empty");
        let sys = build_system(&three_dot(), &region).unwrap();
        assert_eq!(sys.kernel_dim().dim().unwrap(), 0);
        assert_eq!(sys.brute_force_count(22).unwrap(), 1);
    }

    #[test]
    fn no_interior_relation_means_free() {
        let region = Region::from_cells(vec![vec![0, 0], vec![5, 5]], 2, "scattered");
        let sys = build_system(&three_dot(), &region).unwrap();
        assert_eq!(sys.num_rows(), 0);
        assert_eq!(sys.brute_force_count(22).unwrap(), 4);
    }

    #[test]
    fn projection_to_bottom_row() {
        let sys = build_system(&three_dot(), &region_box(&[3, 3]).unwrap()).unwrap();
        let target: Vec<VarKey> = (0..3).map(|x| (vec![x, 0], 0)).collect();
        assert_eq!(sys.projection_dim(&target).unwrap(), 3);
        assert_eq!(sys.projection_dim(&[]).unwrap(), 0);
    }

    #[test]
    fn strip_pinned_projection() {
        // relations at level -1 force equal consecutive line values
        let strip = region_strip(&[1, 1], 3, 6).unwrap();
        let line = region_line(&[1, 1], 6).unwrap();
        let w = strip.union(&line);
        let mut sys = build_system(&three_dot(), &w).unwrap();
        sys.pin_region_zero(&strip).unwrap();
        assert_eq!(sys.kernel_dim().dim().unwrap(), 1);
    }

    #[test]
    fn inconsistent_pins_are_infeasible() {
        let region = region_box(&[2, 2]).unwrap();
        let mut sys = build_system(&three_dot(), &region).unwrap();
        // the single relation x(0,0) + x(1,0) + x(0,1) = 0 with all three
        // pinned to 1 is a contradiction mod 2
        sys.pin(&(vec![0, 0], 0), 1).unwrap();
        sys.pin(&(vec![1, 0], 0), 1).unwrap();
        sys.pin(&(vec![0, 1], 0), 1).unwrap();
        assert_eq!(sys.kernel_dim(), SolveOutcome::Infeasible);
        assert_eq!(sys.projection_dim(&[]), Err(SolveError::InfeasiblePins));
    }

    #[test]
    fn pinned_count_matches_brute_force() {
        let region = region_box(&[3, 2]).unwrap();
        let mut sys = build_system(&three_dot(), &region).unwrap();
        sys.pin(&(vec![0, 0], 0), 1).unwrap();
        let dim = match sys.kernel_dim() {
            SolveOutcome::Dim(r) => r.log_p_count,
            SolveOutcome::Infeasible => panic!("feasible"),
        };
        assert_eq!(sys.brute_force_count(22).unwrap(), 1u128 << dim);
    }

    #[test]
    fn codes_examples() {
        let x1 = three_dot();
        let w = region_box(&[2, 2]).unwrap();
        let a = Region::from_cells(vec![vec![0, 0], vec![1, 0]], 2, "pair");
        assert!(codes(&x1, &a, &[0, 1], &w).unwrap());
        // a point codes itself
        let m = Region::from_cells(vec![vec![0, 0]], 2, "self");
        assert!(codes(&x1, &m, &[0, 0], &w).unwrap());
        // far-away coordinate is not determined in a small window
        let big = region_box(&[3, 3]).unwrap();
        assert!(!codes(&x1, &a, &[2, 2], &big).unwrap());
        assert_eq!(
            codes(&x1, &a, &[9, 9], &w),
            Err(SolveError::OutsideWindow(vec![9, 9]))
        );
    }

    #[test]
    fn coding_grows_with_window() {
        // left half codes rightward cells once the window is generous
        let x1 = three_dot();
        let w = region_box(&[5, 5]).unwrap();
        let a = Region::from_cells(
            (0..5).map(|y| vec![0, y]).collect::<Vec<_>>(),
            2,
            "left column",
        );
        assert!(codes(&x1, &a, &[1, 0], &w).unwrap());
        assert!(codes(&x1, &a, &[2, 0], &w).unwrap());
        assert!(!codes(&x1, &a, &[4, 4], &w).unwrap());
        let tiny = region_box(&[2, 5]).unwrap();
        let a_short = Region::from_cells(vec![vec![0, 0]], 2, "dot");
        assert!(!codes(&x1, &a_short, &[1, 0], &tiny).unwrap());
    }

    #[test]
    fn cap_exceeded() {
        let sys = build_system(&three_dot(), &region_box(&[5, 5]).unwrap()).unwrap();
        assert!(matches!(
            sys.brute_force_count(20),
            Err(SolveError::CapExceeded { variables: 25, cap: 20 })
        ));
    }

    #[test]
    fn composite_modulus_rejected() {
        let f = parse_poly("1 + u1 + u2", 2, 6).unwrap();
        // bypass principal() which also checks: build a product-free
        // presentation via principal is impossible, so check build error
        // through a crafted presentation is unreachable; instead parse a
        // composite system file and expect the principal constructor to
        // reject it
        assert!(crate::shiftsys::Presentation::principal(6, f).is_err());
    }

    #[test]
    fn determinism() {
        let sys = build_system(&three_dot(), &region_box(&[4, 4]).unwrap()).unwrap();
        let a = sys.kernel_dim();
        let b = sys.kernel_dim();
        assert_eq!(a, b);
        let dump1 = sys.debug_dump();
        let sys2 = build_system(&three_dot(), &region_box(&[4, 4]).unwrap()).unwrap();
        assert_eq!(dump1, sys2.debug_dump());
    }

    use crate::shiftsys::Region;
}
