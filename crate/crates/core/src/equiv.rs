//! Intertwiner spaces and equivalence decisions for Leibniz and LY
//! representations.
//!
//! The intertwining equations are linear in the unknown map `psi`, so the
//! full solution space comes out of one exact kernel computation. Deciding
//! equivalence then means deciding whether the span of the space contains an
//! invertible matrix: `det` restricted to the span is a polynomial of degree
//! at most `m` in each coordinate, so evaluating it on the grid
//! `{0,...,m}^t` is a complete test. Grids beyond the evaluation budget fall
//! back to seeded random sampling, which can certify equivalence but never
//! its absence; that outcome is reported as inconclusive.

use num::bigint::BigInt;
use num::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::AxiomReport;
use crate::error::Error;
use crate::matrix::Matrix;
use crate::rat::Rat;
use crate::rep::{induce_ly_rep, LYRep, LeibnizRep};

/// Cap on the number of exact determinant evaluations in the grid search.
pub const DEFAULT_GRID_BUDGET: u64 = 1_000_000;

/// Number of random evaluations tried once the grid exceeds the budget.
pub const SAMPLING_ROUNDS: usize = 200;

const SAMPLING_SEED: u64 = 0x1f2e_3d4c;

/// All solutions `psi` of the intertwining equations, invertibility not
/// imposed: a basis of `dim_v2 x dim_v1` matrices in reduced echelon
/// parametrization.
#[derive(Clone, Debug)]
pub struct IntertwinerSpace {
    pub dim_v1: usize,
    pub dim_v2: usize,
    pub basis: Vec<Matrix>,
}

impl IntertwinerSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EquivStatus {
    Equivalent,
    NotEquivalent,
    Inconclusive,
}

impl std::fmt::Display for EquivStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            EquivStatus::Equivalent => "equivalent",
            EquivStatus::NotEquivalent => "not-equivalent",
            EquivStatus::Inconclusive => "inconclusive",
        };
        f.write_str(s)
    }
}

/// Outcome of an equivalence decision. An `Equivalent` verdict always carries
/// a witness that has been re-verified against the intertwining equations and
/// for invertibility, scaled so that its first nonzero entry is 1.
#[derive(Clone, Debug)]
pub struct EquivalenceVerdict {
    pub status: EquivStatus,
    pub witness: Option<Matrix>,
    pub note: String,
}

/// Does `psi` satisfy `psi a1 = a2 psi` for every aligned operator pair?
fn intertwines(psi: &Matrix, pairs: &[(&Matrix, &Matrix)]) -> bool {
    pairs.iter().all(|(a1, a2)| psi * a1 == *a2 * psi)
}

/// `psi l1(x) = l2(x) psi` and `psi r1(x) = r2(x) psi` on all basis elements.
pub fn psi_intertwines_leibniz(psi: &Matrix, r1: &LeibnizRep, r2: &LeibnizRep) -> bool {
    intertwines(psi, &leibniz_pairs(r1, r2))
}

/// `psi rho1(x) = rho2(x) psi` and `psi theta1(x,y) = theta2(x,y) psi` on all
/// basis elements and pairs. `d` is intentionally not part of the condition.
pub fn psi_intertwines_ly(psi: &Matrix, r1: &LYRep, r2: &LYRep) -> bool {
    intertwines(psi, &ly_pairs(r1, r2))
}

/// Whether `psi` also intertwines the stored `d` families.
pub fn psi_intertwines_d(psi: &Matrix, r1: &LYRep, r2: &LYRep) -> bool {
    let pairs: Vec<(&Matrix, &Matrix)> =
        r1.d().iter().flatten().zip(r2.d().iter().flatten()).collect();
    intertwines(psi, &pairs)
}

fn leibniz_pairs<'a>(r1: &'a LeibnizRep, r2: &'a LeibnizRep) -> Vec<(&'a Matrix, &'a Matrix)> {
    let mut pairs = Vec::with_capacity(2 * r1.algebra().dim());
    for i in 0..r1.algebra().dim() {
        pairs.push((&r1.l()[i], &r2.l()[i]));
        pairs.push((&r1.r()[i], &r2.r()[i]));
    }
    pairs
}

fn ly_pairs<'a>(r1: &'a LYRep, r2: &'a LYRep) -> Vec<(&'a Matrix, &'a Matrix)> {
    let n = r1.algebra().dim();
    let mut pairs = Vec::with_capacity(n + n * n);
    for i in 0..n {
        pairs.push((&r1.rho()[i], &r2.rho()[i]));
    }
    for i in 0..n {
        for j in 0..n {
            pairs.push((&r1.theta()[i][j], &r2.theta()[i][j]));
        }
    }
    pairs
}

/// Stacks the equations `psi a1 - a2 psi = 0` over all pairs into one linear
/// system in the `m2*m1` entries of `psi` (row-major flattening).
fn stack_constraints(pairs: &[(&Matrix, &Matrix)], m1: usize, m2: usize) -> Matrix {
    let vars = m1 * m2;
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for (a1, a2) in pairs {
        for a in 0..m2 {
            for b in 0..m1 {
                let mut row = vec![Rat::zero(); vars];
                for q in 0..m1 {
                    let c = a1.get(q, b);
                    if !c.is_zero() {
                        row[a * m1 + q] += c;
                    }
                }
                for p in 0..m2 {
                    let c = a2.get(a, p);
                    if !c.is_zero() {
                        row[p * m1 + b] -= c;
                    }
                }
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        Matrix::zeros(0, vars)
    } else {
        Matrix::from_rows(rows)
    }
}

fn space_from_pairs(pairs: &[(&Matrix, &Matrix)], m1: usize, m2: usize) -> IntertwinerSpace {
    let system = stack_constraints(pairs, m1, m2);
    let basis = system
        .kernel_basis()
        .into_iter()
        .map(|v| Matrix::from_fn(m2, m1, |a, b| v[a * m1 + b].clone()))
        .collect();
    IntertwinerSpace { dim_v1: m1, dim_v2: m2, basis }
}

/// Solves the intertwining equations for two Leibniz representations over the
/// same algebra.
pub fn intertwiner_space_leibniz(
    r1: &LeibnizRep,
    r2: &LeibnizRep,
) -> Result<IntertwinerSpace, Error> {
    if !r1.algebra().same_structure(r2.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    Ok(space_from_pairs(&leibniz_pairs(r1, r2), r1.dim_v(), r2.dim_v()))
}

/// Solves the intertwining equations (`rho` and `theta` constraints) for two
/// LY representations over the same LY algebra.
pub fn intertwiner_space_ly(r1: &LYRep, r2: &LYRep) -> Result<IntertwinerSpace, Error> {
    if !r1.algebra().same_structure(r2.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    Ok(space_from_pairs(&ly_pairs(r1, r2), r1.dim_v(), r2.dim_v()))
}

enum SpanSearch {
    Witness(Matrix),
    AllSingular,
    Inconclusive(String),
}

/// Looks for an invertible element of the span. Grid search enumerates
/// `{0,...,m}^t` in lexicographic order, which is complete because the
/// determinant has per-variable degree at most `m`; the sampling fallback can
/// only certify presence, never absence.
fn search_span(basis: &[Matrix], m: usize, budget: u64) -> SpanSearch {
    let t = basis.len();
    let grid_points = (m as u128 + 1).checked_pow(t as u32);
    match grid_points {
        Some(total) if total <= budget as u128 => {
            let mut lambda = vec![0u64; t];
            loop {
                if let Some(w) = invertible_combo(basis, &lambda) {
                    return SpanSearch::Witness(w);
                }
                // lexicographic successor: last coordinate varies fastest
                let mut pos = t;
                while pos > 0 && lambda[pos - 1] == m as u64 {
                    pos -= 1;
                }
                if pos == 0 {
                    return SpanSearch::AllSingular;
                }
                lambda[pos - 1] += 1;
                for l in &mut lambda[pos..] {
                    *l = 0;
                }
            }
        }
        _ => {
            let mut rng = ChaCha8Rng::seed_from_u64(SAMPLING_SEED);
            let bound = (m as i64) * (m as i64);
            for _ in 0..SAMPLING_ROUNDS {
                let lambda: Vec<i64> = (0..t).map(|_| rng.gen_range(-bound..=bound)).collect();
                let combo = combo_i64(basis, &lambda);
                if !combo.det().expect("span elements are square").is_zero() {
                    return SpanSearch::Witness(combo);
                }
            }
            SpanSearch::Inconclusive(format!(
                "grid of {} points per coordinate over {t} coordinates exceeds budget {budget}; \
                 {SAMPLING_ROUNDS} seeded random evaluations were all singular",
                m + 1
            ))
        }
    }
}

fn invertible_combo(basis: &[Matrix], lambda: &[u64]) -> Option<Matrix> {
    let combo = combo_u64(basis, lambda);
    if combo.det().expect("span elements are square").is_zero() {
        None
    } else {
        Some(combo)
    }
}

fn combo_u64(basis: &[Matrix], lambda: &[u64]) -> Matrix {
    let mut acc = Matrix::zeros(basis[0].rows(), basis[0].cols());
    for (k, &l) in basis.iter().zip(lambda) {
        if l != 0 {
            acc = &acc + &k.scale(&Rat::from_integer(BigInt::from(l)));
        }
    }
    acc
}

fn combo_i64(basis: &[Matrix], lambda: &[i64]) -> Matrix {
    let mut acc = Matrix::zeros(basis[0].rows(), basis[0].cols());
    for (k, &l) in basis.iter().zip(lambda) {
        if l != 0 {
            acc = &acc + &k.scale(&Rat::from_integer(BigInt::from(l)));
        }
    }
    acc
}

/// Scales so the first nonzero entry (row-major) is 1.
fn normalize_witness(w: &Matrix) -> Matrix {
    match w.entries().iter().find(|e| !e.is_zero()) {
        Some(first) => w.scale(&first.clone().recip()),
        None => w.clone(),
    }
}

fn finish_witness(
    w: Matrix,
    pairs: &[(&Matrix, &Matrix)],
    note: &str,
) -> EquivalenceVerdict {
    let w = normalize_witness(&w);
    assert!(
        intertwines(&w, pairs) && !w.det().expect("witness is square").is_zero(),
        "witness failed re-verification"
    );
    EquivalenceVerdict {
        status: EquivStatus::Equivalent,
        witness: Some(w),
        note: note.to_string(),
    }
}

fn decide_common(
    pairs: &[(&Matrix, &Matrix)],
    m1: usize,
    m2: usize,
    identical: bool,
    budget: u64,
) -> EquivalenceVerdict {
    if m1 != m2 {
        return EquivalenceVerdict {
            status: EquivStatus::NotEquivalent,
            witness: None,
            note: format!("module dimensions differ: {m1} vs {m2}"),
        };
    }
    let m = m1;
    if identical {
        return finish_witness(
            Matrix::identity(m),
            pairs,
            "identical representations; identity witness",
        );
    }
    let space = space_from_pairs(pairs, m1, m2);
    if space.basis.is_empty() {
        return EquivalenceVerdict {
            status: EquivStatus::NotEquivalent,
            witness: None,
            note: "intertwiner space is zero".to_string(),
        };
    }
    match search_span(&space.basis, m, budget) {
        SpanSearch::Witness(w) => {
            finish_witness(w, pairs, "invertible intertwiner found in the solution span")
        }
        SpanSearch::AllSingular => EquivalenceVerdict {
            status: EquivStatus::NotEquivalent,
            witness: None,
            note: format!(
                "determinant vanishes on the complete {}^{} grid, so the intertwiner span \
                 contains no invertible element",
                m + 1,
                space.basis.len()
            ),
        },
        SpanSearch::Inconclusive(note) => EquivalenceVerdict {
            status: EquivStatus::Inconclusive,
            witness: None,
            note,
        },
    }
}

/// Decides equivalence of two Leibniz representations with the default grid
/// budget.
pub fn decide_equivalence_leibniz(
    r1: &LeibnizRep,
    r2: &LeibnizRep,
) -> Result<EquivalenceVerdict, Error> {
    decide_equivalence_leibniz_with_budget(r1, r2, DEFAULT_GRID_BUDGET)
}

pub fn decide_equivalence_leibniz_with_budget(
    r1: &LeibnizRep,
    r2: &LeibnizRep,
    budget: u64,
) -> Result<EquivalenceVerdict, Error> {
    if !r1.algebra().same_structure(r2.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    Ok(decide_common(
        &leibniz_pairs(r1, r2),
        r1.dim_v(),
        r2.dim_v(),
        r1.same_rep(r2),
        budget,
    ))
}

/// Decides equivalence of two LY representations (`rho`/`theta` constraints)
/// with the default grid budget. For an equivalent verdict the note also
/// records whether the witness happens to intertwine the stored `d` families.
pub fn decide_equivalence_ly(r1: &LYRep, r2: &LYRep) -> Result<EquivalenceVerdict, Error> {
    decide_equivalence_ly_with_budget(r1, r2, DEFAULT_GRID_BUDGET)
}

pub fn decide_equivalence_ly_with_budget(
    r1: &LYRep,
    r2: &LYRep,
    budget: u64,
) -> Result<EquivalenceVerdict, Error> {
    if !r1.algebra().same_structure(r2.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let mut verdict = decide_common(
        &ly_pairs(r1, r2),
        r1.dim_v(),
        r2.dim_v(),
        r1.same_rep(r2),
        budget,
    );
    if let (EquivStatus::Equivalent, Some(w)) = (verdict.status, &verdict.witness) {
        if psi_intertwines_d(w, r1, r2) {
            verdict.note.push_str("; witness also intertwines d");
        } else {
            verdict.note.push_str("; witness does not intertwine d");
        }
    }
    Ok(verdict)
}

/// Constructive check that an intertwiner of two Leibniz representations also
/// intertwines their induced LY representations. The precondition -- `psi`
/// invertible and intertwining the Leibniz pair -- is verified and its
/// failure is an error, not a failing report; the returned report locates any
/// `rho`/`theta` defects (there are none for valid inputs).
pub fn verify_induced_equivalence(
    rep1: &LeibnizRep,
    rep2: &LeibnizRep,
    psi: &Matrix,
) -> Result<AxiomReport, Error> {
    if !rep1.algebra().same_structure(rep2.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    if psi.rows() != rep2.dim_v() || psi.cols() != rep1.dim_v() {
        return Err(Error::Shape(format!(
            "psi is {}x{}, expected {}x{}",
            psi.rows(),
            psi.cols(),
            rep2.dim_v(),
            rep1.dim_v()
        )));
    }
    if psi.det()?.is_zero() {
        return Err(Error::Singular);
    }
    let mut pre = AxiomReport::new();
    for i in 0..rep1.algebra().dim() {
        let defect = &(psi * &rep1.l()[i]) - &(&rep2.l()[i] * psi);
        pre.record("psi-l", vec![i], defect.entries().to_vec());
        let defect = &(psi * &rep1.r()[i]) - &(&rep2.r()[i] * psi);
        pre.record("psi-r", vec![i], defect.entries().to_vec());
    }
    if !pre.passed() {
        return Err(Error::NotAnIntertwiner { report: pre });
    }

    let ind1 = induce_ly_rep(rep1)?;
    let ind2 = induce_ly_rep(rep2)?;
    let n = rep1.algebra().dim();
    let mut report = AxiomReport::new();
    for i in 0..n {
        let defect = &(psi * &ind1.rho()[i]) - &(&ind2.rho()[i] * psi);
        report.record("psi-rho", vec![i], defect.entries().to_vec());
    }
    for i in 0..n {
        for j in 0..n {
            let defect = &(psi * &ind1.theta()[i][j]) - &(&ind2.theta()[i][j] * psi);
            report.record("psi-theta", vec![i, j], defect.entries().to_vec());
        }
    }
    Ok(report)
}
