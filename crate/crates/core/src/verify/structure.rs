use std::collections::HashSet;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{assemble, CheckKind, Counterexample, Outcome, VerificationReport};
use crate::error::Result;
use crate::ideal::{self, IdealSpec};
use crate::lattice::{build_ideal, check_rectangle_translation, covers, covers_oracle, leq, Direction};
use crate::partition::{k_bounded_up_to, k_conjugate, k_skew, Cell, KRectangle, Partition, SkewShape};
use crate::qseries::{chain_poly, count_lk, is_symmetric, rank_gen_gamma, rank_gen_lk, QPoly};

/// The `(m, n, k)` grid `1 ≤ m ≤ m_max`, `m ≤ k ≤ k_max`,
/// `max(1, k−m+1) ≤ n ≤ n_max`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealGrid {
    pub m_max: usize,
    pub n_max: usize,
    pub k_max: usize,
}

impl IdealGrid {
    pub fn specs(&self) -> Vec<IdealSpec> {
        let mut out = Vec::new();
        for m in 1..=self.m_max {
            for k in m..=self.k_max {
                for n in (k + 1 - m).max(1)..=self.n_max {
                    out.push(IdealSpec::new(m, n, k).expect("grid cells satisfy m ≤ k"));
                }
            }
        }
        out
    }
}

/// Bound on `k` and on degree for the families that range over k-bounded
/// partitions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Slice {
    pub k_max: usize,
    pub degree_max: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureBounds {
    pub grid: IdealGrid,
    pub involution: Slice,
    pub covering: Slice,
    pub rectangle: Slice,
    pub translation: Slice,
    /// Random triples drawn per ideal for the lattice checks.
    pub samples: usize,
    pub seed: u64,
}

impl Default for StructureBounds {
    fn default() -> Self {
        StructureBounds {
            grid: IdealGrid { m_max: 4, n_max: 6, k_max: 7 },
            involution: Slice { k_max: 6, degree_max: 12 },
            covering: Slice { k_max: 5, degree_max: 10 },
            rectangle: Slice { k_max: 5, degree_max: 8 },
            translation: Slice { k_max: 4, degree_max: 6 },
            samples: 200,
            seed: 0x6b79_6f75_6e67,
        }
    }
}

impl StructureBounds {
    /// Clamp every degree bound to at most `degree_max`.
    pub fn cap_degree(mut self, degree_max: usize) -> Self {
        for s in [&mut self.involution, &mut self.covering, &mut self.rectangle, &mut self.translation] {
            s.degree_max = s.degree_max.min(degree_max);
        }
        self
    }
}

/// Every family in turn, in a fixed order.
pub fn verify_structure(bounds: &StructureBounds) -> Result<Vec<VerificationReport>> {
    Ok(vec![
        check_kskew(bounds.involution)?,
        check_involution(bounds.involution)?,
        check_covers(bounds.covering)?,
        check_rectangle_conjugation(bounds.rectangle)?,
        check_translation(bounds.translation)?,
        check_membership(bounds.grid)?,
        check_counts(bounds.grid)?,
        check_induced_order(bounds.grid)?,
        check_lattice(bounds.grid, bounds.samples, bounds.seed)?,
        check_duality(bounds.grid)?,
        check_decomposition(bounds.grid)?,
        check_stratification(bounds.grid)?,
    ])
}

fn bounded_cells(slice: Slice) -> Vec<(usize, Partition)> {
    (1..=slice.k_max)
        .flat_map(|k| k_bounded_up_to(k, slice.degree_max).into_iter().map(move |p| (k, p)))
        .collect()
}

fn run_cells<T, F>(cells: &[T], f: F) -> Result<Vec<Outcome>>
where
    T: Sync,
    F: Fn(&T) -> Result<Outcome> + Sync + Send,
{
    cells.par_iter().map(f).collect()
}

fn grid_params(spec: &IdealSpec) -> [(&'static str, usize); 3] {
    [("m", spec.m()), ("n", spec.n()), ("k", spec.k())]
}

fn skew_defect(skew: &SkewShape, lambda: &Partition, k: usize) -> Result<Option<String>> {
    if skew.row_lengths() != lambda.parts() {
        return Ok(Some(format!("row lengths {:?}", skew.row_lengths())));
    }
    for r in 1..=skew.height() {
        for c in 1..=skew.outer().row(r) {
            let cell = Cell::new(r, c);
            let h = skew.hook_length(cell)?;
            let inside = skew.contains_cell(cell);
            if (inside && h > k) || (!inside && h <= k) {
                return Ok(Some(format!("square ({r},{c}) has hook {h}")));
            }
        }
    }
    let core = SkewShape::straight(skew.outer().clone());
    for r in 1..=core.height() {
        for c in 1..=core.outer().row(r) {
            if core.hook_length(Cell::new(r, c))? == k + 1 {
                return Ok(Some(format!("core square ({r},{c}) has hook {}", k + 1)));
            }
        }
    }
    Ok(None)
}

/// `λ/^k` has rows `λ`, hooks at most `k`, hooks above `k` on every square
/// below it, column lengths giving `λ^{ω_k}`, and an outer shape with no hook
/// equal to `k+1`.
pub fn check_kskew(slice: Slice) -> Result<VerificationReport> {
    let started = Instant::now();
    let cells = bounded_cells(slice);
    let outcomes = run_cells(&cells, |(k, lambda)| {
        let skew = k_skew(lambda, *k)?;
        let mut defect = skew_defect(&skew, lambda, *k)?;
        if defect.is_none() && Partition::from_unsorted(skew.column_lengths()) != k_conjugate(lambda, *k)? {
            defect = Some("column lengths differ from the k-conjugate".to_string());
        }
        Ok(Outcome::check(defect.is_none(), || {
            Counterexample::new(&[("k", *k)], serde_json::json!({ "lambda": lambda, "skew": skew, "defect": defect }))
        }))
    })?;
    let notes = vec![format!("k ≤ {}, |λ| ≤ {}", slice.k_max, slice.degree_max)];
    Ok(assemble("k-skew", CheckKind::Theorem, outcomes, notes, started))
}

/// `(λ^{ω_k})^{ω_k} = λ` with equal degrees.
pub fn check_involution(slice: Slice) -> Result<VerificationReport> {
    let started = Instant::now();
    let cells = bounded_cells(slice);
    let outcomes = run_cells(&cells, |(k, lambda)| {
        let once = k_conjugate(lambda, *k)?;
        let ok = once.is_k_bounded(*k) && once.degree() == lambda.degree() && k_conjugate(&once, *k)? == *lambda;
        Ok(Outcome::check(ok, || Counterexample::new(&[("k", *k)], (lambda, &once))))
    })?;
    let notes = vec![format!("k ≤ {}, |λ| ≤ {}", slice.k_max, slice.degree_max)];
    Ok(assemble("involution", CheckKind::Theorem, outcomes, notes, started))
}

/// Residue-rule covers agree with the definitional oracle in both directions.
pub fn check_covers(slice: Slice) -> Result<VerificationReport> {
    let started = Instant::now();
    let cells = bounded_cells(slice);
    let outcomes = run_cells(&cells, |(k, lambda)| {
        let mut ok = true;
        let mut detail = Vec::new();
        for dir in [Direction::Up, Direction::Down] {
            let fast = covers(lambda, *k, dir)?;
            let slow = covers_oracle(lambda, *k, dir)?;
            ok &= fast == slow;
            detail.push(serde_json::json!({ "dir": dir, "covers": fast, "oracle": slow }));
        }
        Ok(Outcome::check(ok, || {
            Counterexample::new(&[("k", *k)], serde_json::json!({ "lambda": lambda, "detail": detail }))
        }))
    })?;
    let notes = vec![format!("k ≤ {}, |λ| ≤ {}", slice.k_max, slice.degree_max)];
    Ok(assemble("covering", CheckKind::Theorem, outcomes, notes, started))
}

fn rectangle_cells(slice: Slice) -> Vec<(usize, KRectangle, Partition)> {
    bounded_cells(slice)
        .into_iter()
        .flat_map(|(k, p)| KRectangle::all(k).map(move |r| (k, r, p.clone())))
        .collect()
}

/// `(λ ∪ R)^{ω_k} = λ^{ω_k} ∪ R'` for every k-rectangle `R` with transpose `R'`.
pub fn check_rectangle_conjugation(slice: Slice) -> Result<VerificationReport> {
    let started = Instant::now();
    let cells = rectangle_cells(slice);
    let outcomes = run_cells(&cells, |(k, rect, lambda)| {
        let square = rect.to_partition();
        let lhs = k_conjugate(&lambda.union(&square), *k)?;
        let rhs = k_conjugate(lambda, *k)?.union(&rect.transpose().to_partition());
        Ok(Outcome::check(lhs == rhs, || {
            Counterexample::new(
                &[("k", *k), ("width", rect.width())],
                serde_json::json!({ "lambda": lambda, "lhs": lhs, "rhs": rhs }),
            )
        }))
    })?;
    let notes = vec![format!("k ≤ {}, |λ| ≤ {}, every k-rectangle", slice.k_max, slice.degree_max)];
    Ok(assemble("rectangle-conjugation", CheckKind::Theorem, outcomes, notes, started))
}

/// `{μ : λ∪R ⋖ μ} = {μ̄∪R : λ ⋖ μ̄}` for every k-rectangle `R`.
pub fn check_translation(slice: Slice) -> Result<VerificationReport> {
    let started = Instant::now();
    let cells = rectangle_cells(slice);
    let outcomes = run_cells(&cells, |(k, rect, lambda)| {
        let w = check_rectangle_translation(lambda, *rect, *k)?;
        Ok(Outcome::check(w.equal, || Counterexample::new(&[("k", *k), ("width", rect.width())], &w)))
    })?;
    let notes = vec![format!("k ≤ {}, |λ| ≤ {}, every k-rectangle", slice.k_max, slice.degree_max)];
    Ok(assemble("rectangle-translation", CheckKind::Theorem, outcomes, notes, started))
}

/// The lattice-search ideal below `(m^n)` has exactly the members given by
/// the explicit description.
pub fn check_membership(grid: IdealGrid) -> Result<VerificationReport> {
    let started = Instant::now();
    let specs = grid.specs();
    let outcomes = run_cells(&specs, |spec| {
        let diagram = build_ideal(&spec.generator(), spec.k())?;
        let mut searched: Vec<Partition> = diagram.vertices().cloned().collect();
        searched.sort();
        let mut listed = ideal::enumerate(spec);
        listed.sort();
        let ok = searched == listed && listed.iter().all(|p| ideal::is_member(p, spec));
        Ok(Outcome::check(ok, || {
            Counterexample::new(&grid_params(spec), serde_json::json!({ "searched": searched, "listed": listed }))
        }))
    })?;
    Ok(assemble("ideal-membership", CheckKind::Theorem, outcomes, grid_notes(grid), started))
}

fn grid_notes(grid: IdealGrid) -> Vec<String> {
    vec![format!("m ≤ {}, m ≤ k ≤ {}, k−m+1 ≤ n ≤ {}", grid.m_max, grid.k_max, grid.n_max)]
}

fn padded(poly: &QPoly, len: usize) -> Vec<u64> {
    (0..len).map(|i| u64::try_from(poly.coefficient(i)).unwrap_or(u64::MAX)).collect()
}

/// `|L^k(m,n)|` matches the closed count and its rank vector matches the
/// closed-form rank-generating function.
pub fn check_counts(grid: IdealGrid) -> Result<VerificationReport> {
    let started = Instant::now();
    let specs = grid.specs();
    let outcomes = run_cells(&specs, |spec| {
        let members = ideal::enumerate(spec);
        let ranks = ideal::rank_vector(&members, spec.top_rank())?;
        let (m, n, k) = (spec.m(), spec.n(), spec.k());
        let expected = padded(&rank_gen_lk(m, n, k)?, spec.top_rank() + 1);
        let count_ok = count_lk(m, n, k)? == members.len().into();
        Ok(Outcome::check(count_ok && ranks.coefficients == expected, || {
            Counterexample::new(
                &grid_params(spec),
                serde_json::json!({ "size": members.len(), "ranks": ranks.coefficients, "expected": expected }),
            )
        }))
    })?;
    Ok(assemble("counts", CheckKind::Theorem, outcomes, grid_notes(grid), started))
}

/// On members of `L^k(m,n)` the k-Young order is containment.
pub fn check_induced_order(grid: IdealGrid) -> Result<VerificationReport> {
    let started = Instant::now();
    let specs = grid.specs();
    let outcomes = run_cells(&specs, |spec| {
        let members = ideal::enumerate(spec);
        let k = spec.k();
        let bad: Option<(Partition, Partition, bool)> = members
            .par_iter()
            .map(|a| -> Result<Option<(Partition, Partition, bool)>> {
                for b in &members {
                    let ordered = leq(a, b, k)?;
                    if ordered != a.is_contained_in(b) {
                        return Ok(Some((a.clone(), b.clone(), ordered)));
                    }
                }
                Ok(None)
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .next();
        Ok(match bad {
            None => Outcome::Pass,
            Some((a, b, ordered)) => Outcome::Fail(Counterexample::new(
                &grid_params(spec),
                serde_json::json!({ "a": a, "b": b, "leq": ordered }),
            )),
        })
    })?;
    Ok(assemble("induced-order", CheckKind::Theorem, outcomes, grid_notes(grid), started))
}

fn cell_seed(seed: u64, spec: &IdealSpec) -> u64 {
    seed ^ ((spec.m() as u64) << 40) ^ ((spec.n() as u64) << 20) ^ spec.k() as u64
}

/// On sampled triples: meet and join stay in the ideal, are the bounds for the
/// k-Young order, and satisfy absorption and both distributive laws.
pub fn check_lattice(grid: IdealGrid, samples: usize, seed: u64) -> Result<VerificationReport> {
    let started = Instant::now();
    let specs = grid.specs();
    let outcomes = run_cells(&specs, |spec| {
        let members = ideal::enumerate(spec);
        let k = spec.k();
        let mut rng = ChaCha8Rng::seed_from_u64(cell_seed(seed, spec));
        for _ in 0..samples {
            let pick = |rng: &mut ChaCha8Rng| members[rng.gen_range(0..members.len())].clone();
            let (a, b, c) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
            let meet = |x: &Partition, y: &Partition| ideal::meet(x, y, spec);
            let join = |x: &Partition, y: &Partition| ideal::join(x, y, spec);
            let ab_meet = meet(&a, &b)?;
            let ab_join = join(&a, &b)?;
            let closed = ideal::is_member(&ab_meet, spec) && ideal::is_member(&ab_join, spec);
            let bounds = closed
                && leq(&ab_meet, &a, k)?
                && leq(&ab_meet, &b, k)?
                && leq(&a, &ab_join, k)?
                && leq(&b, &ab_join, k)?
                && (!(leq(&c, &a, k)? && leq(&c, &b, k)?) || leq(&c, &ab_meet, k)?)
                && (!(leq(&a, &c, k)? && leq(&b, &c, k)?) || leq(&ab_join, &c, k)?);
            let laws = bounds
                && meet(&a, &ab_join)? == a
                && join(&a, &ab_meet)? == a
                && meet(&a, &join(&b, &c)?)? == join(&ab_meet, &meet(&a, &c)?)?
                && join(&a, &meet(&b, &c)?)? == meet(&ab_join, &join(&a, &c)?)?;
            if !laws {
                return Ok(Outcome::Fail(Counterexample::new(&grid_params(spec), (a, b, c))));
            }
        }
        Ok(Outcome::Pass)
    })?;
    let mut notes = grid_notes(grid);
    notes.push(format!("{samples} triples per ideal, seed {seed}"));
    Ok(assemble("lattice", CheckKind::Theorem, outcomes, notes, started))
}

/// Rank vectors of `L^k(m,n)` and of each stratum `Γ^k(m,n)` are palindromic
/// about `mn/2`, and the box complement is an order-reversing involution of
/// the ideal.
pub fn check_duality(grid: IdealGrid) -> Result<VerificationReport> {
    let started = Instant::now();
    let specs = grid.specs();
    let outcomes = run_cells(&specs, |spec| {
        let members = ideal::enumerate(spec);
        let ranks = ideal::rank_vector(&members, spec.top_rank())?;
        let mut defects: Vec<String> = Vec::new();
        if !ranks.is_palindromic() {
            defects.push("rank vector is not palindromic".into());
        }
        let duals: Vec<Partition> = members.iter().map(|p| ideal::complement_dual(p, spec)).collect::<Result<_>>()?;
        let member_set: HashSet<&Partition> = members.iter().collect();
        if !duals.iter().all(|d| member_set.contains(d)) {
            defects.push("complement leaves the ideal".into());
        } else {
            for (p, d) in members.iter().zip(&duals) {
                if ideal::complement_dual(d, spec)? != *p {
                    defects.push(format!("complement is not an involution at {p}"));
                    break;
                }
            }
            'outer: for (i, a) in members.iter().enumerate() {
                for (j, b) in members.iter().enumerate() {
                    if a.is_contained_in(b) && !duals[j].is_contained_in(&duals[i]) {
                        defects.push(format!("complement does not reverse {a} ⊆ {b}"));
                        break 'outer;
                    }
                }
            }
        }
        let (m, n, k) = (spec.m(), spec.n(), spec.k());
        if k > m {
            let gamma = rank_gen_gamma(m, n, k)?;
            let listed = ideal::rank_vector(&ideal::gamma_set(spec)?, spec.top_rank())?;
            if listed.coefficients != padded(&gamma, spec.top_rank() + 1) {
                defects.push("stratum rank vector differs from its generating function".into());
            }
            if !is_symmetric(&gamma, (m * n) as i64) {
                defects.push("stratum generating function is not symmetric about mn/2".into());
            }
        }
        Ok(Outcome::check(defects.is_empty(), || Counterexample::new(&grid_params(spec), &defects)))
    })?;
    Ok(assemble("duality", CheckKind::Theorem, outcomes, grid_notes(grid), started))
}

/// `rank_gen_Lk = (1 + … + q^{mn}) + Σ_{r=m+1}^{k} rank_gen_gamma(m,n,r)`.
pub fn check_decomposition(grid: IdealGrid) -> Result<VerificationReport> {
    let started = Instant::now();
    let specs = grid.specs();
    let outcomes = run_cells(&specs, |spec| {
        let (m, n, k) = (spec.m(), spec.n(), spec.k());
        let lhs = rank_gen_lk(m, n, k)?;
        let mut rhs = chain_poly(m * n);
        for r in m + 1..=k {
            rhs += &rank_gen_gamma(m, n, r)?;
        }
        Ok(Outcome::check(lhs == rhs, || Counterexample::new(&grid_params(spec), (&lhs, &rhs))))
    })?;
    Ok(assemble("decomposition", CheckKind::Theorem, outcomes, grid_notes(grid), started))
}

/// Number of the stratum a member lies in: `m` for the chain `L^m(m,n)`,
/// otherwise `m − 1 + #{parts < m}`.
fn stratum(p: &Partition, m: usize) -> usize {
    (m - 1 + p.count_parts_below(m)).max(m)
}

/// `L^k(m,n)` is the disjoint union of the chain `L^m(m,n)` and the strata
/// `Γ^r(m,n)` for `m < r ≤ k`; the ideals are nested in `k`; every cover
/// edge joins equal or adjacent strata.
pub fn check_stratification(grid: IdealGrid) -> Result<VerificationReport> {
    let started = Instant::now();
    let specs = grid.specs();
    let outcomes = run_cells(&specs, |spec| {
        let (m, n, k) = (spec.m(), spec.n(), spec.k());
        let members = ideal::enumerate(spec);
        let mut defects: Vec<String> = Vec::new();

        let mut pieces = ideal::enumerate(&IdealSpec::new(m, n, m)?);
        if pieces.len() != m * n + 1 {
            defects.push("L^m(m,n) is not a chain of length mn".into());
        }
        for r in m + 1..=k {
            let stratum_spec = IdealSpec::new(m, n, r)?;
            let gamma = ideal::gamma_set(&stratum_spec)?;
            let lower: HashSet<Partition> = ideal::enumerate(&IdealSpec::new(m, n, r - 1)?).into_iter().collect();
            let upper = ideal::enumerate(&stratum_spec);
            if !lower.iter().all(|p| ideal::is_member(p, &stratum_spec)) {
                defects.push(format!("L^{}({m},{n}) is not inside L^{r}({m},{n})", r - 1));
            }
            let mut difference: Vec<Partition> = upper.into_iter().filter(|p| !lower.contains(p)).collect();
            let mut sorted_gamma = gamma.clone();
            difference.sort();
            sorted_gamma.sort();
            if difference != sorted_gamma {
                defects.push(format!("Γ^{r}({m},{n}) is not L^{r} minus L^{}", r - 1));
            }
            pieces.extend(gamma);
        }
        pieces.sort();
        let mut whole = members.clone();
        whole.sort();
        if pieces != whole {
            defects.push("strata do not partition the ideal".into());
        }

        let diagram = build_ideal(&spec.generator(), k)?;
        let vertices: Vec<&Partition> = diagram.vertices().collect();
        for &(lo, hi) in diagram.edges() {
            let (s, t) = (stratum(vertices[lo], m), stratum(vertices[hi], m));
            if s.abs_diff(t) > 1 {
                defects.push(format!("edge {} → {} skips from stratum {s} to {t}", vertices[lo], vertices[hi]));
                break;
            }
        }
        Ok(Outcome::check(defects.is_empty(), || Counterexample::new(&grid_params(spec), &defects)))
    })?;
    Ok(assemble("stratification", CheckKind::Theorem, outcomes, grid_notes(grid), started))
}
