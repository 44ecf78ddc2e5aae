//! Hypothesis checking and certificate generation for mutual-disjointness
//! criteria.
//!
//! Two sufficient criteria are implemented. For planar irreducible systems
//! of entropy rank one, a family is mutually disjoint when some ordering
//! admits, at every step, a direction non-expansive for that system but
//! expansive for all later ones. For prime systems of entropy co-rank one,
//! two systems are disjoint when their non-expansive geometries differ.
//! Both checkers emit certificates that re-validate through an independent
//! membership path, and never claim more than the criteria give: the
//! verdict vocabulary is `Disjoint` or `Inconclusive`, never "joined".

use crate::entropy::EntropyError;
use crate::laurent::{irreducible_mod_p, Irreducibility, PolyError};
use crate::polytope::{
    geometry_difference_witness, nonexpansive_set, DirectionGeometry, PolytopeError,
};
use crate::shiftsys::{parse_system_file, Presentation, SystemError};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DisjointError {
    #[error("need at least two systems")]
    TooFewSystems,
    #[error("permutation search refuses {0} systems (maximum 8)")]
    TooManySystems(usize),
    #[error("systems live in different dimensions: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    System(#[from] SystemError),
    #[error(transparent)]
    Entropy(#[from] EntropyError),
}

/// Entropy rank classification by presentation shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RankClass {
    /// Planar principal system with a genuinely two-dimensional Newton
    /// polygon; rank one and co-rank one coincide.
    RankOne,
    /// Principal system in dimension three with a full-dimensional Newton
    /// polytope.
    CoRankOne,
    Other(String),
}

/// Three-valued hypothesis field; `Unknown` carries its reason.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tri {
    Yes,
    No,
    Unknown(String),
}

impl Tri {
    pub fn is_yes(&self) -> bool {
        matches!(self, Tri::Yes)
    }
}

impl fmt::Display for Tri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tri::Yes => write!(f, "yes"),
            Tri::No => write!(f, "no"),
            Tri::Unknown(reason) => write!(f, "unknown ({reason})"),
        }
    }
}

/// Checked hypothesis record of one system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemClass {
    pub entropy_rank_class: RankClass,
    pub irreducible: Tri,
    pub prime_action: Tri,
}

impl fmt::Display for SystemClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rank = match &self.entropy_rank_class {
            RankClass::RankOne => "rank-one".to_string(),
            RankClass::CoRankOne => "co-rank-one".to_string(),
            RankClass::Other(reason) => format!("other ({reason})"),
        };
        write!(
            f,
            "rank class = {rank}; irreducible = {}; prime action = {}",
            self.irreducible, self.prime_action
        )
    }
}

/// Classify a presentation against the hypotheses of the disjointness
/// criteria. Classification is by shape: principal, prime modulus,
/// non-monomial relation, full-dimensional Newton polytope; irreducibility
/// and primeness of the action reduce to bounded irreducibility of the
/// relation polynomial.
pub fn classify(pres: &Presentation, effort: u64) -> SystemClass {
    let Some((_, f)) = pres.principal_data() else {
        return SystemClass {
            entropy_rank_class: RankClass::Other("not a principal system".into()),
            irreducible: Tri::Unknown("not a principal system".into()),
            prime_action: Tri::No,
        };
    };
    if f.is_monomial() {
        return SystemClass {
            entropy_rank_class: RankClass::Other("monomial relation, finite system".into()),
            irreducible: Tri::Unknown("monomial relation".into()),
            prime_action: Tri::No,
        };
    }
    let d = pres.dim();
    let rank_class = match d {
        2 | 3 => match nonexpansive_set(pres) {
            Ok(_) => {
                if d == 2 {
                    RankClass::RankOne
                } else {
                    RankClass::CoRankOne
                }
            }
            Err(PolytopeError::Degenerate { affine_dim, ambient }) => RankClass::Other(format!(
                "degenerate Newton polytope (affine dimension {affine_dim} < {ambient})"
            )),
            Err(e) => RankClass::Other(e.to_string()),
        },
        _ => RankClass::Other(format!("dimension {d} outside the supported range")),
    };
    let factorization = irreducible_mod_p(f, effort);
    let prime_action = match &factorization {
        Ok(Irreducibility::Irreducible) => Tri::Yes,
        Ok(Irreducibility::Reducible(_)) => Tri::No,
        Ok(Irreducibility::Unknown) => Tri::Unknown("irreducibility search exhausted".into()),
        Err(e) => Tri::Unknown(e.to_string()),
    };
    // the algebraic irreducibility criterion covers planar principal
    // systems: an irreducible non-monomial relation leaves only finite
    // proper invariant subgroups
    let irreducible = if d == 2 && matches!(rank_class, RankClass::RankOne) {
        prime_action.clone()
    } else {
        Tri::Unknown("irreducibility criterion covers planar principal systems".into())
    };
    SystemClass {
        entropy_rank_class: rank_class,
        irreducible,
        prime_action,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TheoremKind {
    /// Ordered elimination over non-expansive direction sets (rank one).
    RankOnePermutation,
    /// Geometry difference of two prime co-rank-one systems.
    CoRankOneDifference,
}

impl fmt::Display for TheoremKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TheoremKind::RankOnePermutation => write!(f, "rank-one-permutation"),
            TheoremKind::CoRankOneDifference => write!(f, "co-rank-one-difference"),
        }
    }
}

/// A machine-checkable disjointness certificate: the ordering, one witness
/// direction per elimination step, and the per-system hypothesis records
/// with the geometries they were checked against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisjointnessCertificate {
    pub theorem: TheoremKind,
    /// Permutation of the input systems (0-based indices).
    pub ordering: Vec<usize>,
    /// `witnesses[j]` lies in the geometry of `ordering[j]` and in none of
    /// the geometries of `ordering[j+1..]`.
    pub witnesses: Vec<Vec<i64>>,
    pub hypotheses: Vec<SystemClass>,
    pub geometries: Vec<DirectionGeometry>,
}

impl DisjointnessCertificate {
    /// Headline witness: the first elimination step's direction.
    pub fn witness(&self) -> &[i64] {
        &self.witnesses[0]
    }
}

impl fmt::Display for DisjointnessCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "theorem = {}", self.theorem)?;
        writeln!(f, "systems = {}", self.hypotheses.len())?;
        let ordering: Vec<String> = self.ordering.iter().map(|i| (i + 1).to_string()).collect();
        writeln!(f, "ordering = {}", ordering.join(", "))?;
        for (j, w) in self.witnesses.iter().enumerate() {
            let coords: Vec<String> = w.iter().map(|x| x.to_string()).collect();
            writeln!(f, "witness {} = ({})", j + 1, coords.join(", "))?;
        }
        for (i, h) in self.hypotheses.iter().enumerate() {
            writeln!(f, "system {}: {}", i + 1, h)?;
        }
        for (i, g) in self.geometries.iter().enumerate() {
            writeln!(f, "geometry {} = {}", i + 1, g)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DisjointVerdict {
    Disjoint(Box<DisjointnessCertificate>),
    /// The sufficient criterion did not apply; names the failed hypothesis
    /// or the exhausted search. Never a claim of non-disjointness.
    Inconclusive(String),
}

/// Mutual disjointness of a family of planar systems by ordered
/// elimination: every system must classify as rank one and irreducible,
/// and some ordering must admit a witness direction at every step.
pub fn disjoint_rank_one(
    systems: &[Presentation],
    effort: u64,
) -> Result<DisjointVerdict, DisjointError> {
    let n = systems.len();
    if n < 2 {
        return Err(DisjointError::TooFewSystems);
    }
    if n > 8 {
        return Err(DisjointError::TooManySystems(n));
    }
    let mut hypotheses = Vec::with_capacity(n);
    for (i, pres) in systems.iter().enumerate() {
        let class = classify(pres, effort);
        if !matches!(class.entropy_rank_class, RankClass::RankOne) {
            return Ok(DisjointVerdict::Inconclusive(format!(
                "system {} is not certified rank one: {}",
                i + 1,
                class
            )));
        }
        if !class.irreducible.is_yes() {
            return Ok(DisjointVerdict::Inconclusive(format!(
                "system {} is not certified irreducible: {}",
                i + 1,
                class.irreducible
            )));
        }
        hypotheses.push(class);
    }
    let geometries: Result<Vec<DirectionGeometry>, PolytopeError> =
        systems.iter().map(nonexpansive_set).collect();
    let geometries = geometries?;

    for ordering in permutations(n) {
        if let Some(witnesses) = witness_chain(&ordering, &geometries) {
            let certificate = DisjointnessCertificate {
                theorem: TheoremKind::RankOnePermutation,
                ordering,
                witnesses,
                hypotheses,
                geometries,
            };
            debug_assert!(recheck_certificate(&certificate, systems).is_ok());
            return Ok(DisjointVerdict::Disjoint(Box::new(certificate)));
        }
    }
    Ok(DisjointVerdict::Inconclusive(
        "no ordering admits a full witness chain (the criterion is sufficient, not necessary)"
            .into(),
    ))
}

/// Witness chain for one ordering: step `j` needs a direction of system
/// `ordering[j]` shared with none of the later systems. Candidates are
/// scanned in descending lexicographic order.
fn witness_chain(
    ordering: &[usize],
    geometries: &[DirectionGeometry],
) -> Option<Vec<Vec<i64>>> {
    let mut witnesses = Vec::with_capacity(ordering.len());
    for (j, idx) in ordering.iter().enumerate() {
        let own = &geometries[*idx];
        let later: Vec<&DirectionGeometry> =
            ordering[j + 1..].iter().map(|k| &geometries[*k]).collect();
        let mut candidates = own.generator_rays();
        candidates.sort();
        let witness = candidates.into_iter().rev().find(|cand| {
            own.contains(cand).unwrap_or(false)
                && later
                    .iter()
                    .all(|g| !g.contains(cand).unwrap_or(true))
        })?;
        witnesses.push(witness);
    }
    Some(witnesses)
}

/// Lexicographic permutations of `0..n`, identity first.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    let mut used = vec![false; n];
    fn rec(
        n: usize,
        depth: usize,
        current: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if depth == n {
            out.push(current.clone());
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                current[depth] = i;
                rec(n, depth + 1, current, used, out);
                used[i] = false;
            }
        }
    }
    rec(n, 0, &mut current, &mut used, &mut out);
    out
}

/// Disjointness of two prime co-rank-one systems by geometry difference:
/// both hypotheses are checked, then a separating direction is searched in
/// both directions; the lexicographically largest witness wins the
/// headline.
pub fn disjoint_corank_one(
    y: &Presentation,
    z: &Presentation,
    effort: u64,
) -> Result<DisjointVerdict, DisjointError> {
    if y.dim() != z.dim() {
        return Err(DisjointError::DimensionMismatch(y.dim(), z.dim()));
    }
    let class_y = classify(y, effort);
    let class_z = classify(z, effort);
    for (i, class) in [(1, &class_y), (2, &class_z)] {
        let rank_ok = matches!(
            class.entropy_rank_class,
            RankClass::RankOne | RankClass::CoRankOne
        );
        if !rank_ok {
            return Ok(DisjointVerdict::Inconclusive(format!(
                "system {i} is not certified co-rank one: {class}"
            )));
        }
        if !class.prime_action.is_yes() {
            return Ok(DisjointVerdict::Inconclusive(format!(
                "system {i} is not certified prime: {}",
                class.prime_action
            )));
        }
    }
    let gy = nonexpansive_set(y)?;
    let gz = nonexpansive_set(z)?;
    let from_y = geometry_difference_witness(&gy, &gz)?;
    let from_z = geometry_difference_witness(&gz, &gy)?;
    let (ordering, witness) = match (from_y, from_z) {
        (None, None) => {
            let reason = if gy == gz {
                "the non-expansive geometries are equal".to_string()
            } else {
                "no separating ray found by the candidate search \
                 (difference may be empty or miss every candidate ray)"
                    .to_string()
            };
            return Ok(DisjointVerdict::Inconclusive(reason));
        }
        (Some(w), None) => (vec![0, 1], w),
        (None, Some(w)) => (vec![1, 0], w),
        (Some(wy), Some(wz)) => {
            if wy >= wz {
                (vec![0, 1], wy)
            } else {
                (vec![1, 0], wz)
            }
        }
    };
    let certificate = DisjointnessCertificate {
        theorem: TheoremKind::CoRankOneDifference,
        ordering,
        witnesses: vec![witness],
        hypotheses: vec![class_y, class_z],
        geometries: vec![gy, gz],
    };
    debug_assert!(recheck_certificate(&certificate, &[y.clone(), z.clone()]).is_ok());
    Ok(DisjointVerdict::Disjoint(Box::new(certificate)))
}

/// Independent certificate validation: geometries are recomputed from the
/// systems and every witness is re-tested by direct membership, positively
/// on its own step and negatively on all later steps. This deliberately
/// avoids the difference-search path that produced the certificate.
pub fn recheck_certificate(
    certificate: &DisjointnessCertificate,
    systems: &[Presentation],
) -> Result<(), String> {
    let n = systems.len();
    if certificate.ordering.len() != n {
        return Err(format!(
            "ordering names {} systems, got {n}",
            certificate.ordering.len()
        ));
    }
    let mut seen = vec![false; n];
    for idx in &certificate.ordering {
        if *idx >= n || seen[*idx] {
            return Err("ordering is not a permutation".into());
        }
        seen[*idx] = true;
    }
    match certificate.theorem {
        TheoremKind::RankOnePermutation => {
            if certificate.witnesses.len() != n {
                return Err("one witness per elimination step required".into());
            }
            for class in &certificate.hypotheses {
                if !matches!(class.entropy_rank_class, RankClass::RankOne)
                    || !class.irreducible.is_yes()
                {
                    return Err(format!("hypothesis record not satisfied: {class}"));
                }
            }
        }
        TheoremKind::CoRankOneDifference => {
            if n != 2 || certificate.witnesses.len() != 1 {
                return Err("pairwise certificate must carry exactly one witness".into());
            }
            for class in &certificate.hypotheses {
                if !class.prime_action.is_yes() {
                    return Err(format!("hypothesis record not satisfied: {class}"));
                }
            }
        }
    }
    let fresh: Result<Vec<DirectionGeometry>, PolytopeError> =
        systems.iter().map(nonexpansive_set).collect();
    let fresh = fresh.map_err(|e| e.to_string())?;
    for (j, witness) in certificate.witnesses.iter().enumerate() {
        let own = &fresh[certificate.ordering[j]];
        if !own.contains(witness).map_err(|e| e.to_string())? {
            return Err(format!(
                "witness {witness:?} is not in the geometry of its own step {j}"
            ));
        }
        for k in (j + 1)..certificate.ordering.len() {
            let later = &fresh[certificate.ordering[k]];
            if later.contains(witness).map_err(|e| e.to_string())? {
                return Err(format!(
                    "witness {witness:?} of step {j} also lies in the geometry of step {k}"
                ));
            }
        }
    }
    Ok(())
}

/// Generate a family of pairwise-distinct irreducible planar systems mod
/// `p` whose non-expansive sets make every subfamily mutually disjoint,
/// with the certificate for the full family. The relations are
/// `1 + u1 + u2^i`, linear in `u1`, hence irreducible, with Newton
/// triangles distinguished by the slanted edge normal `(i, 1)`.
pub fn generate_disjoint_family(
    p: u64,
    count: usize,
    effort: u64,
) -> Result<(Vec<Presentation>, DisjointnessCertificate), DisjointError> {
    if count < 2 {
        return Err(DisjointError::TooFewSystems);
    }
    if count > 8 {
        return Err(DisjointError::TooManySystems(count));
    }
    let mut systems = Vec::with_capacity(count);
    for i in 1..=count {
        let text = format!("dim = 2\nmodulus = {p}\nrelation = \"1 + u1 + u2^{i}\"\n");
        systems.push(parse_system_file(&text)?);
    }
    match disjoint_rank_one(&systems, effort)? {
        DisjointVerdict::Disjoint(cert) => Ok((systems, *cert)),
        DisjointVerdict::Inconclusive(reason) => {
            unreachable!("generated family must certify: {reason}")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::parse_poly;

    fn principal(text: &str, dim: usize, p: u64) -> Presentation {
        Presentation::principal(p, parse_poly(text, dim, p).unwrap()).unwrap()
    }

    fn three_dot() -> Presentation {
        principal("1 + u1 + u2", 2, 2)
    }

    fn mirror_dot() -> Presentation {
        principal("1 + u1 + u2^-1", 2, 2)
    }

    const EFFORT: u64 = 1_000_000;

    #[test]
    fn classify_three_dot() {
        let class = classify(&three_dot(), EFFORT);
        assert!(matches!(class.entropy_rank_class, RankClass::RankOne));
        assert!(class.irreducible.is_yes());
        assert!(class.prime_action.is_yes());
    }

    #[test]
    fn classify_product_is_other() {
        let x = Presentation::product(vec![three_dot(), mirror_dot()]).unwrap();
        let class = classify(&x, EFFORT);
        assert!(matches!(class.entropy_rank_class, RankClass::Other(_)));
        assert_eq!(class.prime_action, Tri::No);
    }

    #[test]
    fn classify_four_dot() {
        let y = principal("1 + u1 + u2 + u3", 3, 2);
        let class = classify(&y, EFFORT);
        assert!(matches!(class.entropy_rank_class, RankClass::CoRankOne));
        assert!(class.prime_action.is_yes());
    }

    #[test]
    fn classify_monomial_and_degenerate() {
        let m = principal("u1u2", 2, 2);
        let class = classify(&m, EFFORT);
        assert!(matches!(class.entropy_rank_class, RankClass::Other(_)));
        assert_eq!(class.prime_action, Tri::No);
        let seg = principal("1 + u1", 2, 2);
        let class = classify(&seg, EFFORT);
        assert!(matches!(class.entropy_rank_class, RankClass::Other(_)));
    }

    #[test]
    fn plane_pair_certificate() {
        let verdict = disjoint_rank_one(&[three_dot(), mirror_dot()], EFFORT).unwrap();
        match verdict {
            DisjointVerdict::Disjoint(cert) => {
                assert_eq!(cert.ordering, vec![0, 1]);
                assert_eq!(cert.witness(), &[1, 1]);
                assert!(recheck_certificate(&cert, &[three_dot(), mirror_dot()]).is_ok());
            }
            DisjointVerdict::Inconclusive(reason) => panic!("expected disjoint: {reason}"),
        }
    }

    #[test]
    fn self_pair_is_inconclusive() {
        let verdict = disjoint_rank_one(&[three_dot(), three_dot()], EFFORT).unwrap();
        assert!(matches!(verdict, DisjointVerdict::Inconclusive(_)));
    }

    #[test]
    fn triple_with_third_triangle() {
        let third = principal("1 + u1 + u1u2", 2, 2);
        let systems = [three_dot(), mirror_dot(), third];
        let verdict = disjoint_rank_one(&systems, EFFORT).unwrap();
        match verdict {
            DisjointVerdict::Disjoint(cert) => {
                assert!(recheck_certificate(&cert, &systems).is_ok());
            }
            DisjointVerdict::Inconclusive(reason) => panic!("expected disjoint: {reason}"),
        }
    }

    #[test]
    fn verdict_is_order_insensitive() {
        let third = principal("1 + u1 + u1u2", 2, 2);
        let base = [three_dot(), mirror_dot(), third];
        let orders: [[usize; 3]; 6] = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        for order in orders {
            let arranged: Vec<Presentation> =
                order.iter().map(|i| base[*i].clone()).collect();
            let verdict = disjoint_rank_one(&arranged, EFFORT).unwrap();
            assert!(matches!(verdict, DisjointVerdict::Disjoint(_)));
        }
    }

    #[test]
    fn soundness_gate_on_unknown() {
        // the pentagon system has candidate factors, so zero effort leaves
        // irreducibility unknown and the verdict must not be Disjoint
        let pentagon = principal("u2^-1 + u1u2^-1 + u1^2 + u2 + u1u2", 2, 2);
        let class = classify(&pentagon, 0);
        assert!(matches!(class.irreducible, Tri::Unknown(_)));
        let verdict = disjoint_rank_one(&[pentagon, three_dot()], 0).unwrap();
        match verdict {
            DisjointVerdict::Inconclusive(reason) => {
                assert!(reason.contains("irreducible"), "{reason}");
            }
            other => panic!("expected inconclusive, got {other:?}"),
        }
    }

    #[test]
    fn reducible_relation_is_rejected() {
        let pentagon = principal("u2^-1 + u1u2^-1 + u1^2 + u2 + u1u2", 2, 2);
        let class = classify(&pentagon, EFFORT);
        assert_eq!(class.irreducible, Tri::No);
        assert_eq!(class.prime_action, Tri::No);
        let verdict = disjoint_rank_one(&[pentagon, three_dot()], EFFORT).unwrap();
        assert!(matches!(verdict, DisjointVerdict::Inconclusive(_)));
    }

    #[test]
    fn corank_pair_in_space() {
        let y = principal("1 + u1 + u2 + u3", 3, 2);
        let z = principal("1 + u1^-1 + u2 + u3", 3, 2);
        let verdict = disjoint_corank_one(&y, &z, EFFORT).unwrap();
        match verdict {
            DisjointVerdict::Disjoint(cert) => {
                assert_eq!(cert.witness(), &[1, 0, 0]);
                assert!(recheck_certificate(&cert, &[y, z]).is_ok());
            }
            DisjointVerdict::Inconclusive(reason) => panic!("expected disjoint: {reason}"),
        }
    }

    #[test]
    fn corank_pair_in_plane() {
        let verdict = disjoint_corank_one(&three_dot(), &mirror_dot(), EFFORT).unwrap();
        match verdict {
            DisjointVerdict::Disjoint(cert) => {
                assert_eq!(cert.witness(), &[1, 1]);
            }
            DisjointVerdict::Inconclusive(reason) => panic!("expected disjoint: {reason}"),
        }
    }

    #[test]
    fn corank_self_pair_inconclusive() {
        let y = principal("1 + u1 + u2 + u3", 3, 2);
        let verdict = disjoint_corank_one(&y, &y.clone(), EFFORT).unwrap();
        match verdict {
            DisjointVerdict::Inconclusive(reason) => {
                assert!(reason.contains("equal"), "{reason}");
            }
            other => panic!("expected inconclusive, got {other:?}"),
        }
    }

    #[test]
    fn generated_family_certifies() {
        let (systems, cert) = generate_disjoint_family(2, 4, EFFORT).unwrap();
        assert_eq!(systems.len(), 4);
        assert!(recheck_certificate(&cert, &systems).is_ok());
        // pairwise distinct geometries
        for i in 0..4 {
            for j in (i + 1)..4 {
                assert_ne!(
                    nonexpansive_set(&systems[i]).unwrap(),
                    nonexpansive_set(&systems[j]).unwrap()
                );
            }
        }
    }

    #[test]
    fn family_size_limits() {
        assert!(matches!(
            generate_disjoint_family(2, 1, EFFORT),
            Err(DisjointError::TooFewSystems)
        ));
        assert!(matches!(
            disjoint_rank_one(&[three_dot()], EFFORT),
            Err(DisjointError::TooFewSystems)
        ));
    }
}
