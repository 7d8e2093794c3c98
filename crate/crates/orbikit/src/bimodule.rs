//! Decomposition of the induced bimodules of an orbifold datum.
//!
//! For labels a, b and an ambient object x there is an induced bimodule
//! written a.x.b; these exhaust the indecomposable summand sources, and
//! the Gram matrix X of pairwise multiplicities is computable from the
//! fusion rules and the t-assignment alone. If the simple summands have
//! multiplicity rows v_S over the induced family, then X = sum of
//! v_S^T v_S, so recovering the simples amounts to factoring X into
//! nonnegative integer rank-one summands. The factorization is found by
//! backtracking (peeling) per connected component of X, and the
//! component row counts are reconciled against the independently
//! computed rank.
//!
//! A row over one component reshapes into a grid: for each pair (a, b)
//! the multiset of ambient objects making up the (a, b) part of the
//! summand. Grids carry the quantum dimension formula and a naive fusion
//! product used to probe tensor decompositions.

use crate::cyclotomic::Cyclo;
use crate::fusion::{FusionCategoryData, Obj};
use crate::orbifold::{BIdx, OrbifoldDatum};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum BimoduleError {
    #[error("pinned rows exceed the Gram matrix")]
    PinnedRowTooLarge,
    #[error("module has no nonzero row, so its dimension is undefined")]
    EmptyModule,
    #[error("per-row dimension values disagree: {0}")]
    InconsistentDimension(String),
}

/// Induced-bimodule label (a, x, b): left label, ambient object, right
/// label.
pub type BimLabel = (BIdx, Obj, BIdx);

/// Multiplicity grid of a bimodule: grid[a][b][x] counts the ambient
/// object x inside the (a, b) component.
pub type Grid = Vec<Vec<Vec<u64>>>;

/// All induced-bimodule labels in canonical order: by ambient object
/// first, then left label, then right label.
pub fn bimodule_labels(datum: &OrbifoldDatum, cat: &FusionCategoryData) -> Vec<BimLabel> {
    let nb = datum.label_count();
    let mut out = Vec::new();
    for x in cat.objects() {
        for a in 0..nb {
            for b in 0..nb {
                out.push((a, x, b));
            }
        }
    }
    out
}

/// Entry of the Gram matrix between two induced bimodules.
fn x_entry(datum: &OrbifoldDatum, cat: &FusionCategoryData, lhs: BimLabel, rhs: BimLabel) -> u64 {
    let (a, x, b) = lhs;
    let (p, y, q) = rhs;
    let nb = datum.label_count();
    let mut total: u64 = 0;
    for r in 0..nb {
        for v in 0..nb {
            let Some(t_prv) = datum.t(p, r, v) else { continue };
            for u in 0..nb {
                let Some(t_rua) = datum.t(r, u, a) else { continue };
                for s in 0..nb {
                    let (Some(t_sub), Some(t_qsv)) = (datum.t(s, u, b), datum.t(q, s, v)) else {
                        continue;
                    };
                    let d_sub = cat.dual(t_sub);
                    let d_qsv = cat.dual(t_qsv);
                    for i in cat.objects() {
                        if cat.n(t_prv, t_rua, i) == 0 {
                            continue;
                        }
                        for j in cat.objects() {
                            if cat.n(i, x, j) == 0 {
                                continue;
                            }
                            for k in cat.objects() {
                                if cat.n(j, d_sub, k) == 0 || cat.n(k, d_qsv, y) == 0 {
                                    continue;
                                }
                                total += u64::from(cat.n(t_prv, t_rua, i))
                                    * u64::from(cat.n(i, x, j))
                                    * u64::from(cat.n(j, d_sub, k))
                                    * u64::from(cat.n(k, d_qsv, y));
                            }
                        }
                    }
                }
            }
        }
    }
    total
}

/// The induced-bimodule labels, their Gram matrix, and its connected
/// components (each sorted, listed by first label).
pub struct BimoduleSystem {
    pub labels: Vec<BimLabel>,
    pub x: Vec<Vec<u64>>,
    pub components: Vec<Vec<usize>>,
}

pub fn bimodule_system(datum: &OrbifoldDatum, cat: &FusionCategoryData) -> BimoduleSystem {
    let labels = bimodule_labels(datum, cat);
    let n = labels.len();
    let mut x = vec![vec![0u64; n]; n];
    for (i, &li) in labels.iter().enumerate() {
        for (j, &lj) in labels.iter().enumerate() {
            x[i][j] = x_entry(datum, cat, li, lj);
        }
    }
    let components = connected_components(&x);
    BimoduleSystem { labels, x, components }
}

fn connected_components(x: &[Vec<u64>]) -> Vec<Vec<usize>> {
    let n = x.len();
    let mut seen = vec![false; n];
    let mut comps = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if !seen[j] && (x[i][j] != 0 || x[j][i] != 0) {
                    seen[j] = true;
                    comp.push(j);
                    stack.push(j);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps.sort_by_key(|c| c[0]);
    comps
}

/// Restriction of the Gram matrix to one component.
pub fn x_submatrix(x: &[Vec<u64>], comp: &[usize]) -> Vec<Vec<u64>> {
    comp.iter().map(|&i| comp.iter().map(|&j| x[i][j]).collect()).collect()
}

/// Multiplicity row of the unit bimodule over the given labels: 1 at
/// (a, unit, a), else 0. Returns None when the component misses the unit
/// labels entirely (then the unit lives in another component).
pub fn unit_row(labels: &[BimLabel], cat: &FusionCategoryData) -> Option<Vec<u64>> {
    let row: Vec<u64> = labels
        .iter()
        .map(|&(a, x, b)| u64::from(a == b && x == cat.unit()))
        .collect();
    if row.iter().any(|&v| v != 0) {
        Some(row)
    } else {
        None
    }
}

fn isqrt(v: u64) -> u64 {
    let mut r = 0u64;
    while (r + 1) * (r + 1) <= v {
        r += 1;
    }
    r
}

fn subtract_outer(r: &mut [Vec<u64>], v: &[u64]) -> bool {
    let n = r.len();
    for i in 0..n {
        for j in 0..n {
            let prod = v[i] * v[j];
            if r[i][j] < prod {
                return false;
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            r[i][j] -= v[i] * v[j];
        }
    }
    true
}

fn add_outer(r: &mut [Vec<u64>], v: &[u64]) {
    let n = r.len();
    for i in 0..n {
        for j in 0..n {
            r[i][j] += v[i] * v[j];
        }
    }
}

// Any residual that is still a sum of outer products obeys
// R[i][j]^2 <= R[i][i] R[j][j]; branches violating it are dead.
fn gram_feasible(r: &[Vec<u64>]) -> bool {
    let n = r.len();
    for i in 0..n {
        for j in (i + 1)..n {
            if r[i][j] * r[i][j] > r[i][i] * r[j][j] {
                return false;
            }
        }
    }
    true
}

/// All factorizations of the symmetric nonnegative matrix `x` as a sum
/// of rank-one products of nonnegative integer rows, containing the
/// given pinned rows. Each returned factorization lists pinned plus
/// found rows, sorted descending; every distinct row multiset appears
/// once. `max_rows` bounds the total row count when given.
pub fn peel(
    x: &[Vec<u64>],
    pinned: &[Vec<u64>],
    max_rows: Option<usize>,
) -> Result<Vec<Vec<Vec<u64>>>, BimoduleError> {
    let mut residual: Vec<Vec<u64>> = x.to_vec();
    for row in pinned {
        if !subtract_outer(&mut residual, row) {
            return Err(BimoduleError::PinnedRowTooLarge);
        }
    }
    if !gram_feasible(&residual) {
        return Ok(Vec::new());
    }
    let mut found = Vec::new();
    let mut acc: Vec<Vec<u64>> = Vec::new();
    let budget = max_rows.map(|m| m.saturating_sub(pinned.len()));
    peel_dfs(&mut residual, None, budget, &mut acc, &mut found);
    let mut out: Vec<Vec<Vec<u64>>> = found
        .into_iter()
        .map(|free| {
            let mut rows: Vec<Vec<u64>> = pinned.iter().cloned().chain(free).collect();
            rows.sort_unstable_by(|a, b| b.cmp(a));
            rows
        })
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

fn peel_dfs(
    r: &mut Vec<Vec<u64>>,
    prev: Option<&[u64]>,
    budget: Option<usize>,
    acc: &mut Vec<Vec<u64>>,
    found: &mut Vec<Vec<Vec<u64>>>,
) {
    let n = r.len();
    if r.iter().all(|row| row.iter().all(|&v| v == 0)) {
        found.push(acc.clone());
        return;
    }
    if budget == Some(0) {
        return;
    }
    // the first index with remaining diagonal mass must be hit by the
    // next row: all later rows are lexicographically no greater, and any
    // row is bounded entrywise by the residual diagonal
    let Some(i0) = (0..n).find(|&i| r[i][i] > 0) else {
        return; // off-diagonal residue with empty diagonal: dead branch
    };
    let mut cands: Vec<Vec<u64>> = Vec::new();
    let mut v = vec![0u64; n];
    build_candidates(r, i0, i0, &mut v, &mut cands);
    cands.sort_unstable_by(|a, b| b.cmp(a));
    for cand in cands {
        if let Some(p) = prev {
            if cand.as_slice() > p {
                continue;
            }
        }
        if !subtract_outer(r, &cand) {
            continue;
        }
        if gram_feasible(r) {
            acc.push(cand.clone());
            peel_dfs(r, Some(&cand), budget.map(|b| b - 1), acc, found);
            acc.pop();
        }
        add_outer(r, &cand);
    }
}

// Enumerate candidate rows: zero before i0, at least 1 at i0, entrywise
// products within the residual.
fn build_candidates(r: &[Vec<u64>], i0: usize, pos: usize, v: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    let n = r.len();
    if pos == n {
        out.push(v.clone());
        return;
    }
    let mut cap = isqrt(r[pos][pos]);
    for j in i0..pos {
        if v[j] > 0 {
            cap = cap.min(r[j][pos] / v[j]);
        }
    }
    let lo = if pos == i0 { 1 } else { 0 };
    for val in lo..=cap {
        v[pos] = val;
        build_candidates(r, i0, pos + 1, v, out);
    }
    v[pos] = 0;
}

/// Index combinations, one factorization per component, whose total row
/// count equals the rank.
pub fn select_by_rank(row_counts: &[Vec<usize>], rank: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut choice = Vec::new();
    select_rec(row_counts, 0, rank, &mut choice, &mut out);
    out
}

fn select_rec(
    counts: &[Vec<usize>],
    at: usize,
    remaining: usize,
    choice: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if at == counts.len() {
        if remaining == 0 {
            out.push(choice.clone());
        }
        return;
    }
    for (i, &c) in counts[at].iter().enumerate() {
        if c <= remaining {
            choice.push(i);
            select_rec(counts, at + 1, remaining - c, choice, out);
            choice.pop();
        }
    }
}

/// Reshape a component row into a grid over (left label, right label,
/// ambient object).
pub fn grid_from_row(
    row: &[u64],
    labels: &[BimLabel],
    nb: usize,
    cat: &FusionCategoryData,
) -> Grid {
    let ni = cat.object_count();
    let mut grid = vec![vec![vec![0u64; ni]; nb]; nb];
    for (idx, &(a, x, b)) in labels.iter().enumerate() {
        grid[a][b][x] += row[idx];
    }
    grid
}

/// Quantum dimension outcome: the common value of the per-left-label
/// dimension formula, plus the labels whose row was empty and therefore
/// skipped.
pub struct QdimOutcome {
    pub value: Cyclo,
    pub skipped: Vec<BIdx>,
}

/// Quantum dimension of a bimodule grid: for each left label a with a
/// nonempty row, sum (psi_b^2 / psi_a^2) dim over the (a, b) parts; all
/// nonempty rows must agree.
pub fn qdim_grid(
    grid: &Grid,
    datum: &OrbifoldDatum,
    cat: &FusionCategoryData,
) -> Result<QdimOutcome, BimoduleError> {
    let nb = datum.label_count();
    let mut value: Option<Cyclo> = None;
    let mut skipped = Vec::new();
    for a in 0..nb {
        let empty = grid[a].iter().all(|cell| cell.iter().all(|&m| m == 0));
        if empty {
            skipped.push(a);
            continue;
        }
        let mut num = Cyclo::zero();
        for b in 0..nb {
            for (x, &mult) in grid[a][b].iter().enumerate() {
                if mult == 0 {
                    continue;
                }
                num = num + Cyclo::from_int(mult as i64) * datum.psi2(b) * cat.qdim(x);
            }
        }
        let val = num / datum.psi2(a);
        match &value {
            None => value = Some(val),
            Some(existing) if *existing != val => {
                return Err(BimoduleError::InconsistentDimension(format!(
                    "label {} gives {}, earlier rows gave {}",
                    datum.labels()[a],
                    val,
                    existing
                )));
            }
            _ => {}
        }
    }
    let value = value.ok_or(BimoduleError::EmptyModule)?;
    Ok(QdimOutcome { value, skipped })
}

/// Naive fusion product of two grids through the middle label:
/// (m n)[a][b] pairs every middle label c and fuses the ambient parts.
pub fn tensor_grids(m: &Grid, n: &Grid, cat: &FusionCategoryData) -> Grid {
    let nb = m.len();
    let ni = cat.object_count();
    let mut out = vec![vec![vec![0u64; ni]; nb]; nb];
    for a in 0..nb {
        for b in 0..nb {
            for c in 0..nb {
                for x in 0..ni {
                    let mx = m[a][c][x];
                    if mx == 0 {
                        continue;
                    }
                    for y in 0..ni {
                        let nyv = n[c][b][y];
                        if nyv == 0 {
                            continue;
                        }
                        for k in cat.objects() {
                            out[a][b][k] += mx * nyv * u64::from(cat.n(x, y, k));
                        }
                    }
                }
            }
        }
    }
    out
}

fn grid_minus(target: &Grid, basis: &Grid, times: u64) -> Option<Grid> {
    let mut out = target.clone();
    for (ta, ba) in out.iter_mut().zip(basis) {
        for (tb, bb) in ta.iter_mut().zip(ba) {
            for (tv, bv) in tb.iter_mut().zip(bb) {
                let sub = bv * times;
                if *tv < sub {
                    return None;
                }
                *tv -= sub;
            }
        }
    }
    Some(out)
}

fn grid_is_zero(g: &Grid) -> bool {
    g.iter().all(|a| a.iter().all(|b| b.iter().all(|&v| v == 0)))
}

/// All ways to write the target grid as a nonnegative integer
/// combination of the basis grids. Returns multiplicity vectors over
/// the basis order.
pub fn decompose_grid(target: &Grid, basis: &[Grid]) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut coeffs = vec![0u64; basis.len()];
    decompose_rec(target, basis, 0, &mut coeffs, &mut out);
    out
}

fn decompose_rec(
    remaining: &Grid,
    basis: &[Grid],
    at: usize,
    coeffs: &mut Vec<u64>,
    out: &mut Vec<Vec<u64>>,
) {
    if at == basis.len() {
        if grid_is_zero(remaining) {
            out.push(coeffs.clone());
        }
        return;
    }
    let mut times = 0u64;
    let mut current = remaining.clone();
    loop {
        coeffs[at] = times;
        decompose_rec(&current, basis, at + 1, coeffs, out);
        match grid_minus(&current, &basis[at], 1) {
            Some(next) => {
                current = next;
                times += 1;
            }
            None => break,
        }
    }
    coeffs[at] = 0;
}

/// Human-readable form of one grid cell, like "2*1 + eps".
pub fn cell_string(cell: &[u64], cat: &FusionCategoryData) -> String {
    let mut parts = Vec::new();
    for (x, &m) in cell.iter().enumerate() {
        if m == 0 {
            continue;
        }
        if m == 1 {
            parts.push(cat.name(x).to_string());
        } else {
            parts.push(format!("{}*{}", m, cat.name(x)));
        }
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fib::{build_fib, IOTA, PHI};
    use crate::ising::{EPS, SIGMA, UNIT};

    fn reference() -> (crate::orbifold::OrbifoldDatum, FusionCategoryData, BimoduleSystem) {
        let r = build_fib(19, -1).unwrap();
        let sys = bimodule_system(&r.datum, &r.cat);
        (r.datum, r.cat, sys)
    }

    #[test]
    fn gram_matrix_and_components_match_reference() {
        let (_d, _c, sys) = reference();
        assert_eq!(sys.labels.len(), 12);
        for i in 0..12 {
            for j in 0..12 {
                assert_eq!(sys.x[i][j], sys.x[j][i], "symmetry at {},{}", i, j);
            }
        }
        assert_eq!(sys.components.len(), 2);
        // canonical label order is x-major: index = 4*x + 2*a + b
        let lab = |a: usize, x: usize, b: usize| 4 * x + 2 * a + b;
        let grade0: Vec<usize> = vec![
            lab(IOTA, UNIT, IOTA),
            lab(PHI, UNIT, PHI),
            lab(IOTA, EPS, IOTA),
            lab(PHI, EPS, PHI),
            lab(IOTA, SIGMA, PHI),
            lab(PHI, SIGMA, IOTA),
        ];
        let grade1: Vec<usize> = vec![
            lab(IOTA, UNIT, PHI),
            lab(PHI, UNIT, IOTA),
            lab(IOTA, EPS, PHI),
            lab(PHI, EPS, IOTA),
            lab(IOTA, SIGMA, IOTA),
            lab(PHI, SIGMA, PHI),
        ];
        let mut g0 = grade0.clone();
        g0.sort_unstable();
        let mut g1 = grade1.clone();
        g1.sort_unstable();
        assert_eq!(sys.components[0], g0);
        assert_eq!(sys.components[1], g1);
        let x0 = x_submatrix(&sys.x, &grade0);
        let x1 = x_submatrix(&sys.x, &grade1);
        let expected0: Vec<Vec<u64>> = vec![
            vec![2, 3, 0, 1, 1, 1],
            vec![3, 8, 1, 6, 5, 5],
            vec![0, 1, 2, 3, 1, 1],
            vec![1, 6, 3, 8, 5, 5],
            vec![1, 5, 1, 5, 4, 4],
            vec![1, 5, 1, 5, 4, 4],
        ];
        let expected1: Vec<Vec<u64>> = vec![
            vec![3, 3, 1, 1, 1, 5],
            vec![3, 3, 1, 1, 1, 5],
            vec![1, 1, 3, 3, 1, 5],
            vec![1, 1, 3, 3, 1, 5],
            vec![1, 1, 1, 1, 2, 4],
            vec![5, 5, 5, 5, 4, 14],
        ];
        assert_eq!(x0, expected0);
        assert_eq!(x1, expected1);
    }

    #[test]
    fn peeling_recovers_the_simple_rows() {
        let (_d, cat, sys) = reference();
        let lab = |a: usize, x: usize, b: usize| 4 * x + 2 * a + b;
        let grade0 = vec![
            lab(IOTA, UNIT, IOTA),
            lab(PHI, UNIT, PHI),
            lab(IOTA, EPS, IOTA),
            lab(PHI, EPS, PHI),
            lab(IOTA, SIGMA, PHI),
            lab(PHI, SIGMA, IOTA),
        ];
        let grade1 = vec![
            lab(IOTA, UNIT, PHI),
            lab(PHI, UNIT, IOTA),
            lab(IOTA, EPS, PHI),
            lab(PHI, EPS, IOTA),
            lab(IOTA, SIGMA, IOTA),
            lab(PHI, SIGMA, PHI),
        ];
        let labels0: Vec<BimLabel> = grade0.iter().map(|&i| sys.labels[i]).collect();
        let x0 = x_submatrix(&sys.x, &grade0);
        let pin = unit_row(&labels0, &cat).unwrap();
        assert_eq!(pin, vec![1, 1, 0, 0, 0, 0]);
        let facts0 = peel(&x0, &[pin], Some(8)).unwrap();
        assert_eq!(facts0.len(), 1, "grade 0 should peel uniquely");
        let mut rows0 = facts0[0].clone();
        rows0.sort();
        let mut expected_rows0: Vec<Vec<u64>> = vec![
            vec![1, 1, 0, 0, 0, 0],
            vec![1, 2, 0, 1, 1, 1],
            vec![0, 1, 1, 2, 1, 1],
            vec![0, 0, 1, 1, 0, 0],
            vec![0, 1, 0, 1, 1, 1],
            vec![0, 1, 0, 1, 1, 1],
        ];
        expected_rows0.sort();
        assert_eq!(rows0, expected_rows0);

        let x1 = x_submatrix(&sys.x, &grade1);
        let labels1: Vec<BimLabel> = grade1.iter().map(|&i| sys.labels[i]).collect();
        assert!(unit_row(&labels1, &cat).is_none());
        let facts1 = peel(&x1, &[], Some(8)).unwrap();
        assert_eq!(facts1.len(), 2, "grade 1 should have exactly two peels");
        let mut counts: Vec<usize> = facts1.iter().map(|f| f.len()).collect();
        counts.sort_unstable();
        assert_eq!(counts, vec![5, 6]);
        let five = facts1.iter().find(|f| f.len() == 5).unwrap();
        let mut rows1 = five.clone();
        rows1.sort();
        let mut expected_rows1: Vec<Vec<u64>> = vec![
            vec![1, 1, 0, 0, 1, 2],
            vec![0, 0, 1, 1, 1, 2],
            vec![1, 1, 0, 0, 0, 1],
            vec![1, 1, 1, 1, 0, 2],
            vec![0, 0, 1, 1, 0, 1],
        ];
        expected_rows1.sort();
        assert_eq!(rows1, expected_rows1);

        // cross-component count selection at the independently known rank
        let sel = select_by_rank(&[vec![6], vec![6, 5]], 11);
        assert_eq!(sel, vec![vec![0, 1]]);
    }

    #[test]
    fn quantum_dimensions_from_rows() {
        let (datum, cat, sys) = reference();
        let lab = |a: usize, x: usize, b: usize| 4 * x + 2 * a + b;
        let grade1 = vec![
            lab(IOTA, UNIT, PHI),
            lab(PHI, UNIT, IOTA),
            lab(IOTA, EPS, PHI),
            lab(PHI, EPS, IOTA),
            lab(IOTA, SIGMA, IOTA),
            lab(PHI, SIGMA, PHI),
        ];
        let labels1: Vec<BimLabel> = grade1.iter().map(|&i| sys.labels[i]).collect();
        // psi-ratio module: dimension is psi_phi^2 / psi_iota^2
        let psi1_row = vec![1u64, 1, 0, 0, 0, 1];
        let grid = grid_from_row(&psi1_row, &labels1, 2, &cat);
        let out = qdim_grid(&grid, &datum, &cat).unwrap();
        assert!(out.skipped.is_empty());
        assert_eq!(out.value, datum.psi2(PHI) / datum.psi2(IOTA));
        // closed form -eps (h^10 + h^-10) at n = 19, eps = -1
        let h = Cyclo::root_of_unity(48, 19);
        assert_eq!(out.value, h.pow(10) + h.pow(-10));
        let embedded = out.value.embed().re;
        assert!((embedded - 1.93185).abs() < 1e-4, "got {}", embedded);
    }

    #[test]
    fn tensor_square_of_the_psi_module_is_ambiguous() {
        let (_datum, cat, sys) = reference();
        let lab = |a: usize, x: usize, b: usize| 4 * x + 2 * a + b;
        let grade1 = vec![
            lab(IOTA, UNIT, PHI),
            lab(PHI, UNIT, IOTA),
            lab(IOTA, EPS, PHI),
            lab(PHI, EPS, IOTA),
            lab(IOTA, SIGMA, IOTA),
            lab(PHI, SIGMA, PHI),
        ];
        let grade0 = vec![
            lab(IOTA, UNIT, IOTA),
            lab(PHI, UNIT, PHI),
            lab(IOTA, EPS, IOTA),
            lab(PHI, EPS, PHI),
            lab(IOTA, SIGMA, PHI),
            lab(PHI, SIGMA, IOTA),
        ];
        let labels1: Vec<BimLabel> = grade1.iter().map(|&i| sys.labels[i]).collect();
        let labels0: Vec<BimLabel> = grade0.iter().map(|&i| sys.labels[i]).collect();
        let psi1 = grid_from_row(&[1, 1, 0, 0, 0, 1], &labels1, 2, &cat);
        let square = tensor_grids(&psi1, &psi1, &cat);
        // grade 0 simples in peel order
        let rows0: Vec<Vec<u64>> = vec![
            vec![1, 1, 0, 0, 0, 0],
            vec![1, 2, 0, 1, 1, 1],
            vec![0, 1, 1, 2, 1, 1],
            vec![0, 0, 1, 1, 0, 0],
            vec![0, 1, 0, 1, 1, 1],
            vec![0, 1, 0, 1, 1, 1],
        ];
        let basis: Vec<Grid> = rows0.iter().map(|r| grid_from_row(r, &labels0, 2, &cat)).collect();
        let solutions = decompose_grid(&square, &basis);
        // delta alone, or unit plus either copy of the repeated row
        let mut expected = vec![
            vec![0, 1, 0, 0, 0, 0],
            vec![1, 0, 0, 0, 1, 0],
            vec![1, 0, 0, 0, 0, 1],
        ];
        expected.sort();
        let mut got = solutions.clone();
        got.sort();
        assert_eq!(got, expected);
    }
}
