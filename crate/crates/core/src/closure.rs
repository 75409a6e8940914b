//! Constraint networks and algebraic closure.
//!
//! [`a_closure`] refines every constraint `C[i][j]` by `C[i][k] ⋄ C[k][j]`
//! until nothing changes. The procedure adapts to the calculus: when the
//! converse is not an involution (RA7 fails) the full matrix is stored and
//! each constraint is kept separately from its mirror; when converse does
//! not distribute over composition (RA9 fails) the mirror constraint is
//! refined as well and the two are intersected.
//!
//! Closure is sound but not complete: an `Inconsistent` verdict is
//! definitive, a `Closed` network may still have no solution.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::axioms::{check_axiom, AxiomId};
use crate::calculus::CalculusSpec;
use crate::error::ClosureError;
use crate::model::{FiniteModel, PairSet};
use crate::relation::Relation;

/// `n` variables and a constraint relation for every ordered pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintNetwork {
    n: usize,
    arity: usize,
    cells: Vec<Relation>,
}

impl ConstraintNetwork {
    /// A network without information: every cell universal.
    pub fn new(n: usize, arity: usize) -> Self {
        ConstraintNetwork {
            n,
            arity,
            cells: vec![Relation::universal(arity); n * n],
        }
    }

    /// Number of variables.
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Number of base relations of the calculus the constraints belong to.
    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn get(&self, i: usize, j: usize) -> &Relation {
        &self.cells[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, r: Relation) {
        self.cells[i * self.n + j] = r;
    }

    /// `C[i][j] ∩= r`.
    pub fn constrain(&mut self, i: usize, j: usize, r: &Relation) {
        self.cells[i * self.n + j].intersect_with(r);
    }

    /// Ordered pairs whose constraint is not universal, row-major.
    pub fn constraints(&self) -> impl Iterator<Item = (usize, usize, &Relation)> {
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, r)| !r.is_universal())
            .map(move |(k, r)| (k / self.n, k % self.n, r))
    }

    /// Cell-wise `self ⊆ other`.
    pub fn is_refinement_of(&self, other: &ConstraintNetwork) -> bool {
        self.n == other.n && self.cells.iter().zip(&other.cells).all(|(a, b)| a.is_subset(b))
    }
}

/// Order in which refinement triples are visited.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Schedule {
    /// Repeated sweeps over all `(i, j, k)` with `i < j` in index order.
    #[default]
    Pc1,
    /// Work list of triples; a changed pair re-queues only the triples that read it.
    Queue,
    /// Sweeps like `Pc1`, each in a fresh random order drawn from the seed.
    Shuffled(u64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureOptions {
    /// Converse is an involution; enables triangular storage.
    pub ra7_holds: bool,
    /// Converse distributes over composition; skips the mirror refinement.
    pub ra9_holds: bool,
    /// Stop after this many sweeps even if not at a fixpoint.
    pub max_passes: Option<usize>,
    pub schedule: Schedule,
}

impl ClosureOptions {
    /// Flags taken from the axiom verdicts of `calc`.
    pub fn for_calculus(calc: &CalculusSpec) -> Self {
        ClosureOptions {
            ra7_holds: check_axiom(calc, AxiomId::Ra7).holds(),
            ra9_holds: check_axiom(calc, AxiomId::Ra9).holds(),
            max_passes: None,
            schedule: Schedule::Pc1,
        }
    }

    pub fn with_schedule(mut self, schedule: Schedule) -> Self {
        self.schedule = schedule;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClosureStatus {
    /// Fixpoint reached with no empty constraint. Does not imply consistency.
    Closed,
    /// Some constraint became empty; the network has no solution.
    Inconsistent,
    /// The pass limit was hit before a fixpoint.
    PassLimit,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureResult {
    pub status: ClosureStatus,
    /// The refined network, full matrix. On inconsistency, the state at detection.
    pub network: ConstraintNetwork,
    /// The first constraint found empty.
    pub witness: Option<(usize, usize)>,
    /// Completed sweeps (0 for the queue schedule).
    pub passes: usize,
    /// Number of triple revisions performed.
    pub revisions: u64,
    pub warnings: Vec<String>,
}

/// Working matrix plus the storage flag.
pub struct ClosureMatrix<'a> {
    calc: &'a CalculusSpec,
    n: usize,
    cells: Vec<Relation>,
    /// Full storage: every ordered pair is stored on its own.
    full: bool,
    ra9_holds: bool,
}

/// Outcome of one revision.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Revision {
    Unchanged,
    Updated,
    /// The named cell became empty.
    Empty(usize, usize),
}

impl<'a> ClosureMatrix<'a> {
    fn cell(&self, i: usize, j: usize) -> &Relation {
        &self.cells[i * self.n + j]
    }

    /// The constraint between `i` and `j`, reading the mirror cell in triangular storage.
    pub fn lookup(&self, i: usize, j: usize) -> Relation {
        if self.full || i < j {
            self.cell(i, j).clone()
        } else {
            self.calc.converse(self.cell(j, i))
        }
    }

    /// Refines `C[i][j]` through `k` (and `C[j][i]` when required); `i`, `j`, `k` distinct.
    pub fn revise(&mut self, i: usize, j: usize, k: usize) -> Revision {
        let calc = self.calc;
        let mut r = self
            .cell(i, j)
            .intersection(&calc.compose(&self.lookup(i, k), &self.lookup(k, j)));
        let mut changed = false;
        if self.full || !self.ra9_holds {
            let mut r2 = self
                .lookup(j, i)
                .intersection(&calc.compose(&self.lookup(j, k), &self.lookup(k, i)));
            r.intersect_with(&calc.converse(&r2));
            r2.intersect_with(&calc.converse(&r));
            if r2 != *self.cell(j, i) {
                self.cells[j * self.n + i] = r2.clone();
                changed = true;
                if r2.is_empty() {
                    return Revision::Empty(j, i);
                }
            }
        }
        if r != *self.cell(i, j) {
            let empty = r.is_empty();
            self.cells[i * self.n + j] = r;
            if empty {
                return Revision::Empty(i, j);
            }
            changed = true;
        }
        if changed {
            Revision::Updated
        } else {
            Revision::Unchanged
        }
    }

    /// The matrix as a full network, mirror cells filled in for triangular storage.
    fn network(&self) -> ConstraintNetwork {
        let mut net = ConstraintNetwork {
            n: self.n,
            arity: self.calc.len(),
            cells: self.cells.clone(),
        };
        if !self.full {
            for i in 0..self.n {
                for j in 0..i {
                    net.set(i, j, self.calc.converse(self.cell(j, i)));
                }
            }
        }
        net
    }

    fn triples(&self) -> Vec<(usize, usize, usize)> {
        let n = self.n;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in 0..n {
                    if k != i && k != j {
                        out.push((i, j, k));
                    }
                }
            }
        }
        out
    }

    /// Whether one more sweep would change nothing, without mutating.
    fn is_fixpoint(&self) -> bool {
        let mut probe = ClosureMatrix {
            calc: self.calc,
            n: self.n,
            cells: self.cells.clone(),
            full: self.full,
            ra9_holds: self.ra9_holds,
        };
        self.triples()
            .into_iter()
            .all(|(i, j, k)| probe.revise(i, j, k) == Revision::Unchanged)
    }
}

/// Computes the algebraic closure of `net`.
///
/// A `Closed` result is only a necessary condition for consistency.
pub fn a_closure(
    calc: &CalculusSpec,
    net: &ConstraintNetwork,
    opts: &ClosureOptions,
) -> Result<ClosureResult, ClosureError> {
    if net.arity() != calc.len() {
        return Err(ClosureError::ArityMismatch {
            network: net.arity(),
            calculus: calc.len(),
        });
    }
    let n = net.len();
    let full = !opts.ra7_holds;
    let mut warnings = Vec::new();
    let diagonal = match calc.identity() {
        Some(id) => id.clone(),
        None => {
            warnings.push(
                "calculus declares no identity; diagonal left universal and not checked".to_string(),
            );
            calc.universal()
        }
    };
    let mut m = ClosureMatrix {
        calc,
        n,
        cells: vec![calc.universal(); n * n],
        full,
        ra9_holds: opts.ra9_holds,
    };
    for i in 0..n {
        m.cells[i * n + i] = diagonal.clone();
    }
    let mut first_empty = None;
    for (x, y, r) in net.constraints() {
        let (x, y, r) = if !full && x > y {
            (y, x, calc.converse(r))
        } else {
            (x, y, r.clone())
        };
        m.cells[x * n + y].intersect_with(&r);
        if first_empty.is_none() && m.cell(x, y).is_empty() {
            first_empty = Some((x, y));
        }
    }
    // Full storage keeps both directions; make each pair agree with its mirror
    // up front, since two-variable networks have no triple that would do it.
    if full && first_empty.is_none() {
        'pairs: for i in 0..n {
            for j in i + 1..n {
                loop {
                    let r = m.cell(i, j).intersection(&calc.converse(m.cell(j, i)));
                    let r2 = m.cell(j, i).intersection(&calc.converse(&r));
                    if r == *m.cell(i, j) && r2 == *m.cell(j, i) {
                        break;
                    }
                    m.cells[i * n + j] = r;
                    m.cells[j * n + i] = r2;
                    if m.cell(i, j).is_empty() || m.cell(j, i).is_empty() {
                        first_empty = Some(if m.cell(i, j).is_empty() { (i, j) } else { (j, i) });
                        break 'pairs;
                    }
                }
            }
        }
    }
    let done = |m: &ClosureMatrix<'_>, status, witness, passes, revisions, warnings| ClosureResult {
        status,
        network: m.network(),
        witness,
        passes,
        revisions,
        warnings,
    };
    if let Some(w) = first_empty {
        return Ok(done(&m, ClosureStatus::Inconsistent, Some(w), 0, 0, warnings));
    }

    let triples = m.triples();
    let mut passes = 0;
    let mut revisions = 0u64;
    match opts.schedule {
        Schedule::Pc1 | Schedule::Shuffled(_) => {
            let mut rng = match opts.schedule {
                Schedule::Shuffled(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
                _ => None,
            };
            let mut order = triples;
            loop {
                if opts.max_passes.is_some_and(|cap| passes >= cap) {
                    let status = if m.is_fixpoint() {
                        ClosureStatus::Closed
                    } else {
                        ClosureStatus::PassLimit
                    };
                    return Ok(done(&m, status, None, passes, revisions, warnings));
                }
                if let Some(rng) = rng.as_mut() {
                    order.shuffle(rng);
                }
                let mut update = false;
                for &(i, j, k) in &order {
                    revisions += 1;
                    match m.revise(i, j, k) {
                        Revision::Unchanged => {}
                        Revision::Updated => update = true,
                        Revision::Empty(a, b) => {
                            return Ok(done(&m, ClosureStatus::Inconsistent, Some((a, b)), passes + 1, revisions, warnings));
                        }
                    }
                }
                passes += 1;
                if !update {
                    break;
                }
            }
        }
        Schedule::Queue => {
            let idx = |i: usize, j: usize, k: usize| (i * n + j) * n + k;
            let mut queued = vec![false; n * n * n];
            let mut queue = std::collections::VecDeque::with_capacity(triples.len());
            for &(i, j, k) in &triples {
                queued[idx(i, j, k)] = true;
                queue.push_back((i, j, k));
            }
            let limit = opts.max_passes.map(|p| p as u64 * triples.len() as u64);
            while let Some((i, j, k)) = queue.pop_front() {
                if limit.is_some_and(|l| revisions >= l) {
                    queue.push_front((i, j, k));
                    let status = if m.is_fixpoint() {
                        ClosureStatus::Closed
                    } else {
                        ClosureStatus::PassLimit
                    };
                    return Ok(done(&m, status, None, 0, revisions, warnings));
                }
                queued[idx(i, j, k)] = false;
                revisions += 1;
                match m.revise(i, j, k) {
                    Revision::Unchanged => {}
                    Revision::Empty(a, b) => {
                        return Ok(done(&m, ClosureStatus::Inconsistent, Some((a, b)), 0, revisions, warnings));
                    }
                    Revision::Updated => {
                        // the pair {i, j} changed: requeue triples that read it
                        for c in 0..n {
                            if c == i || c == j {
                                continue;
                            }
                            for (a, via) in [(i, j), (j, i)] {
                                let (lo, hi) = (a.min(c), a.max(c));
                                if !queued[idx(lo, hi, via)] {
                                    queued[idx(lo, hi, via)] = true;
                                    queue.push_back((lo, hi, via));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(done(&m, ClosureStatus::Closed, None, passes, revisions, warnings))
}

/// Largest number of valuations [`brute_force_consistency`] will enumerate.
pub const BRUTE_FORCE_LIMIT: u128 = 10_000_000;

/// Whether some assignment of universe elements to variables satisfies every
/// constraint of `net` under the model's interpretation.
pub fn brute_force_consistency(
    calc: &CalculusSpec,
    model: &FiniteModel,
    net: &ConstraintNetwork,
) -> Result<bool, ClosureError> {
    model.check_compatible(calc)?;
    if net.arity() != calc.len() {
        return Err(ClosureError::ArityMismatch {
            network: net.arity(),
            calculus: calc.len(),
        });
    }
    let n = net.len();
    let m = model.universe_size();
    let valuations = (m as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if valuations > BRUTE_FORCE_LIMIT {
        return Err(ClosureError::Capacity {
            valuations,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let images: Vec<PairSet> = net.cells.iter().map(|r| model.image(r)).collect();
    let mut psi = vec![0usize; n];

    // depth-first over variables, checking constraints against earlier ones
    fn extend(v: usize, n: usize, m: usize, psi: &mut [usize], images: &[PairSet]) -> bool {
        if v == n {
            return true;
        }
        for e in 0..m {
            psi[v] = e;
            let ok = (0..=v).all(|w| {
                images[v * n + w].contains(e, psi[w]) && images[w * n + v].contains(psi[w], e)
            });
            if ok && extend(v + 1, n, m, psi, images) {
                return true;
            }
        }
        false
    }
    Ok(extend(0, n, m, &mut psi, &images))
}

/// Random network: each off-diagonal ordered pair gets a uniformly random
/// relation with probability `density`, otherwise stays universal.
pub fn random_network<R: Rng + ?Sized>(calc: &CalculusSpec, n: usize, density: f64, rng: &mut R) -> ConstraintNetwork {
    let mut net = ConstraintNetwork::new(n, calc.len());
    for i in 0..n {
        for j in 0..n {
            if i != j && rng.gen_bool(density) {
                net.set(i, j, Relation::random(calc.len(), rng));
            }
        }
    }
    net
}

/// Random network that has a solution in `model`: a random valuation is
/// drawn and each constraint is a random superset of the relation it induces.
pub fn planted_network<R: Rng + ?Sized>(
    calc: &CalculusSpec,
    model: &FiniteModel,
    n: usize,
    rng: &mut R,
) -> ConstraintNetwork {
    let m = model.universe_size();
    let psi: Vec<usize> = (0..n).map(|_| rng.gen_range(0..m)).collect();
    let mut net = ConstraintNetwork::new(n, calc.len());
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let mut r = Relation::random(calc.len(), rng);
            if let Some(b) = model.relation_between(psi[i], psi[j]) {
                r.insert(b);
            }
            net.set(i, j, r);
        }
    }
    net
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{builtin_calculus, builtin_model};

    fn pc() -> CalculusSpec {
        builtin_calculus("point-calculus").unwrap()
    }

    fn chain(pc: &CalculusSpec, cycle: bool) -> ConstraintNetwork {
        let lt = pc.relation(&["<"]).unwrap();
        let mut net = ConstraintNetwork::new(3, 3);
        net.set(0, 1, lt.clone());
        net.set(1, 2, lt.clone());
        if cycle {
            net.set(2, 0, lt);
        }
        net
    }

    #[test]
    fn lookup_reads_mirror() {
        let pc = pc();
        let mut m = ClosureMatrix {
            calc: &pc,
            n: 2,
            cells: vec![pc.universal(); 4],
            full: false,
            ra9_holds: true,
        };
        m.cells[1] = pc.relation(&["<"]).unwrap();
        assert_eq!(m.lookup(1, 0), pc.relation(&[">"]).unwrap());
        assert_eq!(m.lookup(0, 1), pc.relation(&["<"]).unwrap());
        m.full = true;
        assert!(m.lookup(1, 0).is_universal());
    }

    #[test]
    fn revise_composes() {
        let pc = pc();
        let lt = pc.relation(&["<"]).unwrap();
        let mut m = ClosureMatrix {
            calc: &pc,
            n: 3,
            cells: vec![pc.universal(); 9],
            full: false,
            ra9_holds: true,
        };
        // i = 0, k = 1, j = 2
        m.cells[1] = lt.clone();
        m.cells[5] = lt.clone();
        assert_eq!(m.revise(0, 2, 1), Revision::Updated);
        assert_eq!(m.cell(0, 2), &lt);
        assert_eq!(m.revise(0, 2, 1), Revision::Unchanged);
    }

    #[test]
    fn chain_closes() {
        let pc = pc();
        let r = a_closure(&pc, &chain(&pc, false), &ClosureOptions::for_calculus(&pc)).unwrap();
        assert_eq!(r.status, ClosureStatus::Closed);
        assert_eq!(r.network.get(0, 2), &pc.relation(&["<"]).unwrap());
        assert_eq!(r.network.get(2, 0), &pc.relation(&[">"]).unwrap());
    }

    #[test]
    fn cycle_is_inconsistent() {
        let pc = pc();
        for schedule in [Schedule::Pc1, Schedule::Queue, Schedule::Shuffled(3)] {
            let opts = ClosureOptions::for_calculus(&pc).with_schedule(schedule);
            let r = a_closure(&pc, &chain(&pc, true), &opts).unwrap();
            assert_eq!(r.status, ClosureStatus::Inconsistent);
            assert!(r.witness.is_some());
        }
    }

    #[test]
    fn universal_network_unchanged() {
        let pc = pc();
        let net = ConstraintNetwork::new(4, 3);
        let r = a_closure(&pc, &net, &ClosureOptions::for_calculus(&pc)).unwrap();
        assert_eq!(r.status, ClosureStatus::Closed);
        assert_eq!(r.passes, 1);
        for i in 0..4 {
            for j in 0..4 {
                if i != j {
                    assert!(r.network.get(i, j).is_universal());
                }
            }
        }
    }

    #[test]
    fn diagonal_must_allow_identity() {
        let pc = pc();
        let mut net = ConstraintNetwork::new(2, 3);
        net.set(1, 1, pc.relation(&["<"]).unwrap());
        let r = a_closure(&pc, &net, &ClosureOptions::for_calculus(&pc)).unwrap();
        assert_eq!(r.status, ClosureStatus::Inconsistent);
        assert_eq!(r.witness, Some((1, 1)));
    }

    #[test]
    fn empty_input_constraint() {
        let pc = pc();
        let mut net = ConstraintNetwork::new(2, 3);
        net.set(1, 0, pc.empty_relation());
        let r = a_closure(&pc, &net, &ClosureOptions::for_calculus(&pc)).unwrap();
        assert_eq!(r.status, ClosureStatus::Inconsistent);
        assert_eq!(r.witness, Some((0, 1)));
    }

    #[test]
    fn pass_limit() {
        let pc = pc();
        let opts = ClosureOptions {
            max_passes: Some(0),
            ..ClosureOptions::for_calculus(&pc)
        };
        let r = a_closure(&pc, &chain(&pc, false), &opts).unwrap();
        assert_eq!(r.status, ClosureStatus::PassLimit);
        assert!(r.network.get(0, 2).is_universal());
        let closed = a_closure(&pc, &ConstraintNetwork::new(3, 3), &opts).unwrap();
        assert_eq!(closed.status, ClosureStatus::Closed);
    }

    #[test]
    fn no_identity_warns() {
        let pc = pc();
        let no_id = CalculusSpec::new(
            "pc",
            pc.base_relations().iter().map(|b| b.name.clone()).collect(),
            None,
            pc.converse_table().to_vec(),
            pc.composition_table().to_vec(),
        )
        .unwrap();
        let r = a_closure(&no_id, &chain(&no_id, false), &ClosureOptions::for_calculus(&no_id)).unwrap();
        assert_eq!(r.status, ClosureStatus::Closed);
        assert_eq!(r.warnings.len(), 1);
        assert!(r.network.get(1, 1).is_universal());
    }

    #[test]
    fn arity_mismatch() {
        let pc = pc();
        let net = ConstraintNetwork::new(2, 4);
        assert!(matches!(
            a_closure(&pc, &net, &ClosureOptions::for_calculus(&pc)),
            Err(ClosureError::ArityMismatch { .. })
        ));
    }

    #[test]
    fn brute_force() {
        let pc = pc();
        let three = FiniteModel::new(
            None,
            vec!["0".into(), "1".into(), "2".into()],
            vec!["<".into(), "=".into(), ">".into()],
            vec![
                vec![(0, 1), (0, 2), (1, 2)],
                vec![(0, 0), (1, 1), (2, 2)],
                vec![(1, 0), (2, 0), (2, 1)],
            ],
        )
        .unwrap();
        assert!(brute_force_consistency(&pc, &three, &chain(&pc, false)).unwrap());
        assert!(!brute_force_consistency(&pc, &three, &chain(&pc, true)).unwrap());
        let mut empty = ConstraintNetwork::new(2, 3);
        empty.set(0, 1, pc.empty_relation());
        assert!(!brute_force_consistency(&pc, &three, &empty).unwrap());
        let big = ConstraintNetwork::new(20, 3);
        assert!(matches!(
            brute_force_consistency(&pc, &three, &big),
            Err(ClosureError::Capacity { .. })
        ));
    }

    #[test]
    fn planted_networks_are_consistent() {
        let (calc, model) = builtin_model("allen").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..20 {
            let net = planted_network(&calc, &model, 4, &mut rng);
            assert!(brute_force_consistency(&calc, &model, &net).unwrap());
        }
    }
}
