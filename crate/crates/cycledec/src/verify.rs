//! Exact certification of claimed cycle decompositions.
//!
//! [`verify`] checks that a list of cycles is an exact partition of a target
//! family's edge set and returns a [`Certificate`]: either VALID with counts,
//! or INVALID with every violation enumerated (missing, duplicated and
//! foreign edges, malformed cycles). Nothing is sampled or approximated; the
//! comparison is an exact multiset equality over canonical edges.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{materialize, Edge, GraphFamily, Vertex};

/// Hard cap on recorded violations so reports stay bounded on badly broken
/// inputs. The status is computed from all violations, recorded or not.
pub const MAX_VIOLATIONS: usize = 1000;

/// A closed vertex sequence `(v_0, ..., v_{k-1})` with the implicit closing
/// edge `v_{k-1} v_0`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Cycle(Vec<Vertex>);

impl Cycle {
    pub fn new(vertices: Vec<Vertex>) -> Cycle {
        Cycle(vertices)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The cycle's edges, including the closing edge.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let n = self.0.len();
        (0..n).map(move |i| Edge::new(self.0[i], self.0[(i + 1) % n]))
    }

    /// Checks the cycle invariants: length at least 3 and no repeated vertex.
    pub fn well_formed(&self) -> std::result::Result<(), String> {
        if self.0.len() < 3 {
            return Err(format!("length {} < 3", self.0.len()));
        }
        let mut sorted = self.0.clone();
        sorted.sort();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(format!("repeated vertex {}", w[0]));
            }
        }
        Ok(())
    }

    /// Canonical form: rotated to start at the smallest vertex and oriented
    /// so the second vertex is smaller than the last.
    pub fn canonical(&self) -> Result<Cycle> {
        self.well_formed().map_err(Error::BadCycle)?;
        let n = self.0.len();
        let start = (0..n)
            .min_by_key(|&i| self.0[i])
            .expect("cycle is non-empty");
        let forward_second = self.0[(start + 1) % n];
        let backward_second = self.0[(start + n - 1) % n];
        let mut out = Vec::with_capacity(n);
        if forward_second < backward_second {
            for i in 0..n {
                out.push(self.0[(start + i) % n]);
            }
        } else {
            for i in 0..n {
                out.push(self.0[(start + n - i) % n]);
            }
        }
        Ok(Cycle(out))
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.0 {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

/// A claimed decomposition: a target family, a required cycle length
/// (`k = 0` allows mixed lengths), and the cycles.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Decomposition {
    pub family: GraphFamily,
    pub k: u32,
    pub cycles: Vec<Cycle>,
}

impl Decomposition {
    pub fn new(family: GraphFamily, k: u32, cycles: Vec<Cycle>) -> Decomposition {
        Decomposition { family, k, cycles }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CertStatus {
    Valid,
    Invalid,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ViolationKind {
    MissingEdge,
    DuplicateEdge,
    ForeignEdge,
    BadCycle,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ViolationKind::MissingEdge => "MissingEdge",
            ViolationKind::DuplicateEdge => "DuplicateEdge",
            ViolationKind::ForeignEdge => "ForeignEdge",
            ViolationKind::BadCycle => "BadCycle",
        };
        f.write_str(s)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Violation {
    pub kind: ViolationKind,
    pub detail: String,
}

/// Verifier output: VALID with counts, or the full violation list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Certificate {
    pub status: CertStatus,
    /// Edge count of the target family.
    pub edge_count: usize,
    pub cycle_count: usize,
    /// Cycles per length, over well-formed cycles.
    pub length_counts: BTreeMap<usize, usize>,
    pub violations: Vec<Violation>,
}

impl Certificate {
    pub fn is_valid(&self) -> bool {
        self.status == CertStatus::Valid
    }

    pub fn count_kind(&self, kind: ViolationKind) -> usize {
        self.violations.iter().filter(|v| v.kind == kind).count()
    }
}

fn push_capped(violations: &mut Vec<Violation>, kind: ViolationKind, detail: String) {
    if violations.len() < MAX_VIOLATIONS {
        violations.push(Violation { kind, detail });
    }
}

/// Certifies a claimed decomposition edge by edge.
///
/// VALID means: every cycle satisfies the cycle invariants and the length
/// constraint, every cycle edge belongs to the target family, and the
/// multiset union of all cycle edges covers the family's edge set with
/// multiplicity exactly one. Anything else is INVALID, with every violation
/// enumerated (capped at [`MAX_VIOLATIONS`] recorded entries).
pub fn verify(dec: &Decomposition) -> Result<Certificate> {
    let target = materialize(&dec.family)?;

    let mut violations = Vec::new();
    let mut any_violation = false;
    let mut covered: BTreeMap<Edge, usize> = BTreeMap::new();
    let mut length_counts: BTreeMap<usize, usize> = BTreeMap::new();

    for (idx, cycle) in dec.cycles.iter().enumerate() {
        if let Err(msg) = cycle.well_formed() {
            any_violation = true;
            push_capped(
                &mut violations,
                ViolationKind::BadCycle,
                format!("cycle #{idx}: {msg}"),
            );
            continue;
        }
        if dec.k > 0 && cycle.len() != dec.k as usize {
            any_violation = true;
            push_capped(
                &mut violations,
                ViolationKind::BadCycle,
                format!("cycle #{idx}: length {} != required {}", cycle.len(), dec.k),
            );
            continue;
        }
        *length_counts.entry(cycle.len()).or_insert(0) += 1;
        for edge in cycle.edges() {
            if target.contains(&edge) {
                *covered.entry(edge).or_insert(0) += 1;
            } else {
                any_violation = true;
                push_capped(
                    &mut violations,
                    ViolationKind::ForeignEdge,
                    format!("cycle #{idx}: edge {edge} is not in the target graph"),
                );
            }
        }
    }

    for (edge, count) in &covered {
        if *count > 1 {
            any_violation = true;
            push_capped(
                &mut violations,
                ViolationKind::DuplicateEdge,
                format!("edge {edge} covered {count} times"),
            );
        }
    }
    for edge in target.edges() {
        if !covered.contains_key(edge) {
            any_violation = true;
            push_capped(
                &mut violations,
                ViolationKind::MissingEdge,
                format!("edge {edge} is not covered"),
            );
        }
    }

    let status = if any_violation {
        CertStatus::Invalid
    } else {
        CertStatus::Valid
    };
    Ok(Certificate {
        status,
        edge_count: target.edge_count(),
        cycle_count: dec.cycles.len(),
        length_counts,
        violations,
    })
}

/// Deterministic normal form: each cycle in canonical rotation/orientation,
/// cycles sorted lexicographically. Verification results are unchanged.
pub fn canonicalize(dec: &Decomposition) -> Result<Decomposition> {
    let mut cycles = dec
        .cycles
        .iter()
        .map(|c| c.canonical())
        .collect::<Result<Vec<_>>>()?;
    cycles.sort();
    Ok(Decomposition {
        family: dec.family.clone(),
        k: dec.k,
        cycles,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn single_cycle(vs: &[u32]) -> Cycle {
        Cycle::new(vs.iter().map(|&v| Vertex::Single(v)).collect())
    }

    fn hexagon_dec() -> Decomposition {
        Decomposition::new(
            GraphFamily::Cycle(6),
            6,
            vec![single_cycle(&[0, 1, 2, 3, 4, 5])],
        )
    }

    #[test]
    fn exact_cover_of_a_cycle_is_valid() {
        let cert = verify(&hexagon_dec()).unwrap();
        assert!(cert.is_valid());
        assert_eq!(cert.edge_count, 6);
        assert_eq!(cert.cycle_count, 1);
        assert_eq!(cert.length_counts, BTreeMap::from([(6, 1)]));
    }

    #[test]
    fn missing_cycle_reports_each_uncovered_edge() {
        let dec = Decomposition::new(GraphFamily::Cycle(6), 6, vec![]);
        let cert = verify(&dec).unwrap();
        assert!(!cert.is_valid());
        assert_eq!(cert.count_kind(ViolationKind::MissingEdge), 6);
    }

    #[test]
    fn duplicated_cycle_reports_each_duplicated_edge() {
        let mut dec = hexagon_dec();
        dec.cycles.push(dec.cycles[0].clone());
        let cert = verify(&dec).unwrap();
        assert!(!cert.is_valid());
        assert_eq!(cert.count_kind(ViolationKind::DuplicateEdge), 6);
    }

    #[test]
    fn chord_is_a_foreign_edge() {
        let dec = Decomposition::new(
            GraphFamily::Cycle(6),
            0,
            vec![single_cycle(&[0, 1, 2]), single_cycle(&[3, 4, 5])],
        );
        let cert = verify(&dec).unwrap();
        assert!(!cert.is_valid());
        // (0,2), (3,5) are chords; (2,3) and (5,0) go missing.
        assert_eq!(cert.count_kind(ViolationKind::ForeignEdge), 2);
        assert_eq!(cert.count_kind(ViolationKind::MissingEdge), 2);
    }

    #[test]
    fn malformed_cycles_are_reported_not_fatal() {
        let dec = Decomposition::new(
            GraphFamily::Cycle(6),
            6,
            vec![
                single_cycle(&[0, 1]),
                single_cycle(&[0, 1, 2, 1, 4, 5]),
                single_cycle(&[0, 1, 2]),
            ],
        );
        let cert = verify(&dec).unwrap();
        assert!(!cert.is_valid());
        // short, repeated vertex, wrong length for k = 6
        assert_eq!(cert.count_kind(ViolationKind::BadCycle), 3);
    }

    #[test]
    fn violation_list_is_capped() {
        let dec = Decomposition::new(GraphFamily::Complete(50), 3, vec![]);
        let cert = verify(&dec).unwrap();
        assert!(!cert.is_valid());
        assert_eq!(cert.violations.len(), MAX_VIOLATIONS);
    }

    #[test]
    fn canonical_rotation_and_orientation() {
        let c = single_cycle(&[2, 3, 0, 1]).canonical().unwrap();
        assert_eq!(c, single_cycle(&[0, 1, 2, 3]));
        let c = single_cycle(&[0, 3, 2, 1]).canonical().unwrap();
        assert_eq!(c, single_cycle(&[0, 1, 2, 3]));
    }

    #[test]
    fn canonicalize_rejects_malformed_cycles() {
        let dec = Decomposition::new(GraphFamily::Cycle(6), 0, vec![single_cycle(&[0, 1])]);
        assert!(matches!(canonicalize(&dec), Err(Error::BadCycle(_))));
    }

    #[test]
    fn mixed_mode_counts_lengths() {
        let dec = Decomposition::new(
            GraphFamily::Complete(5),
            0,
            vec![
                single_cycle(&[1, 2, 0, 3]),
                single_cycle(&[4, 0, 1]),
                single_cycle(&[4, 2, 3]),
            ],
        );
        let cert = verify(&dec).unwrap();
        assert!(cert.is_valid());
        assert_eq!(cert.length_counts, BTreeMap::from([(3, 2), (4, 1)]));
    }

    /// Strategy: a scrambled (rotated/reflected) relabeling-free copy of a
    /// valid single-cycle decomposition plus arbitrary extra cycles.
    fn arb_scrambled_cycle() -> impl Strategy<Value = (Vec<u32>, usize, bool)> {
        (3usize..10).prop_flat_map(|n| {
            let vs: Vec<u32> = (0..n as u32).collect();
            (Just(vs), 0..n, proptest::bool::ANY)
        })
    }

    proptest! {
        #[test]
        fn canonicalize_is_idempotent_and_orientation_free((vs, rot, flip) in arb_scrambled_cycle()) {
            let n = vs.len();
            let mut seq: Vec<u32> = (0..n).map(|i| vs[(i + rot) % n]).collect();
            if flip {
                seq.reverse();
            }
            let cycle = single_cycle(&seq);
            let canon = cycle.canonical().unwrap();
            // same edges regardless of rotation/reflection
            prop_assert_eq!(canon.clone(), single_cycle(&vs).canonical().unwrap());
            // idempotent
            prop_assert_eq!(canon.canonical().unwrap(), canon);
        }

        #[test]
        fn canonicalize_preserves_certificates(rot in 0usize..6, flip in proptest::bool::ANY) {
            let mut seq: Vec<u32> = (0..6).map(|i| ((i + rot) % 6) as u32).collect();
            if flip {
                seq.reverse();
            }
            let dec = Decomposition::new(GraphFamily::Cycle(6), 6, vec![single_cycle(&seq)]);
            let canon = canonicalize(&dec).unwrap();
            let a = verify(&dec).unwrap();
            let b = verify(&canon).unwrap();
            prop_assert_eq!(a.status, b.status);
            prop_assert_eq!(a.edge_count, b.edge_count);
            prop_assert_eq!(a.cycle_count, b.cycle_count);
        }
    }
}
