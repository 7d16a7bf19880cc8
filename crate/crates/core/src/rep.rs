//! Representations of Leibniz algebras (matrix families `l`, `r`) and of
//! Lie-Yamaguti algebras (`rho` plus the pair-indexed families `theta`, `d`),
//! their axiom checkers, and the standard constructors: adjoint, dual,
//! symmetric/antisymmetric, conjugation, and the functor taking a Leibniz
//! representation to the induced LY representation.

use num::Zero;

use crate::algebra::{check_left_leibniz, check_ly, leibniz_to_ly, Algebra, AxiomReport, LYAlgebra};
use crate::error::Error;
use crate::matrix::Matrix;
use crate::rat::Rat;

/// A left representation of a Leibniz algebra: for each basis element `e_i`
/// of the algebra, matrices `l(e_i)` and `r(e_i)` acting on a module of
/// dimension `dim_v`. The defining identities are decided by
/// [`check_leibniz_rep`], not assumed.
#[derive(Clone, Debug)]
pub struct LeibnizRep {
    algebra: Algebra,
    dim_v: usize,
    l: Vec<Matrix>,
    r: Vec<Matrix>,
}

impl LeibnizRep {
    pub fn new(algebra: Algebra, dim_v: usize, l: Vec<Matrix>, r: Vec<Matrix>) -> Result<Self, Error> {
        let n = algebra.dim();
        if l.len() != n || r.len() != n {
            return Err(Error::Shape(format!(
                "expected {n} matrices per family, got l: {}, r: {}",
                l.len(),
                r.len()
            )));
        }
        for (fam, name) in [(&l, "l"), (&r, "r")] {
            for (i, m) in fam.iter().enumerate() {
                if m.rows() != dim_v || m.cols() != dim_v {
                    return Err(Error::Shape(format!(
                        "{name}[{i}] is {}x{}, expected {dim_v}x{dim_v}",
                        m.rows(),
                        m.cols()
                    )));
                }
            }
        }
        Ok(Self { algebra, dim_v, l, r })
    }

    pub fn zero(algebra: Algebra, dim_v: usize) -> Self {
        let n = algebra.dim();
        let zeros = vec![Matrix::zeros(dim_v, dim_v); n];
        Self {
            algebra,
            dim_v,
            l: zeros.clone(),
            r: zeros,
        }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    pub fn l(&self) -> &[Matrix] {
        &self.l
    }

    pub fn r(&self) -> &[Matrix] {
        &self.r
    }

    /// `l` evaluated on an algebra element given by coefficients.
    pub fn l_of(&self, coeffs: &[Rat]) -> Matrix {
        combine(&self.l, coeffs, self.dim_v)
    }

    /// `r` evaluated on an algebra element given by coefficients.
    pub fn r_of(&self, coeffs: &[Rat]) -> Matrix {
        combine(&self.r, coeffs, self.dim_v)
    }

    /// Structural equality including the underlying algebra (names ignored).
    pub fn same_rep(&self, other: &LeibnizRep) -> bool {
        self.algebra.same_structure(&other.algebra)
            && self.dim_v == other.dim_v
            && self.l == other.l
            && self.r == other.r
    }
}

/// The constituents of an [`LYRep`]: algebra, module dimension, `rho`,
/// `theta`, `d`.
pub type LYRepParts = (LYAlgebra, usize, Vec<Matrix>, Vec<Vec<Matrix>>, Vec<Vec<Matrix>>);

/// A representation of a Lie-Yamaguti algebra: `rho(e_i)` matrices plus the
/// pair-indexed families `theta(e_i, e_j)` and `d(e_i, e_j)`. `d` is stored
/// explicitly even though the first LY-representation axiom determines it
/// from `rho` and `theta`; [`check_ly_rep`] verifies the consistency.
#[derive(Clone, Debug)]
pub struct LYRep {
    algebra: LYAlgebra,
    dim_v: usize,
    rho: Vec<Matrix>,
    theta: Vec<Vec<Matrix>>,
    d: Vec<Vec<Matrix>>,
}

impl LYRep {
    pub fn new(
        algebra: LYAlgebra,
        dim_v: usize,
        rho: Vec<Matrix>,
        theta: Vec<Vec<Matrix>>,
        d: Vec<Vec<Matrix>>,
    ) -> Result<Self, Error> {
        let n = algebra.dim();
        if rho.len() != n {
            return Err(Error::Shape(format!("expected {n} rho matrices, got {}", rho.len())));
        }
        for (fam, name) in [(&theta, "theta"), (&d, "d")] {
            if fam.len() != n || fam.iter().any(|row| row.len() != n) {
                return Err(Error::Shape(format!("{name} must be an {n}x{n} matrix family")));
            }
        }
        let all = rho
            .iter()
            .chain(theta.iter().flatten())
            .chain(d.iter().flatten());
        for m in all {
            if m.rows() != dim_v || m.cols() != dim_v {
                return Err(Error::Shape(format!(
                    "representation matrix is {}x{}, expected {dim_v}x{dim_v}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(Self { algebra, dim_v, rho, theta, d })
    }

    pub fn zero(algebra: LYAlgebra, dim_v: usize) -> Self {
        let n = algebra.dim();
        let z = Matrix::zeros(dim_v, dim_v);
        Self {
            algebra,
            dim_v,
            rho: vec![z.clone(); n],
            theta: vec![vec![z.clone(); n]; n],
            d: vec![vec![z; n]; n],
        }
    }

    pub fn algebra(&self) -> &LYAlgebra {
        &self.algebra
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    pub fn rho(&self) -> &[Matrix] {
        &self.rho
    }

    pub fn theta(&self) -> &[Vec<Matrix>] {
        &self.theta
    }

    pub fn d(&self) -> &[Vec<Matrix>] {
        &self.d
    }

    pub fn rho_of(&self, coeffs: &[Rat]) -> Matrix {
        combine(&self.rho, coeffs, self.dim_v)
    }

    /// `theta` with an algebra element in the first slot.
    pub fn theta_first(&self, coeffs: &[Rat], j: usize) -> Matrix {
        combine_indexed(coeffs, self.dim_v, |p| &self.theta[p][j])
    }

    /// `theta` with an algebra element in the second slot.
    pub fn theta_second(&self, i: usize, coeffs: &[Rat]) -> Matrix {
        combine_indexed(coeffs, self.dim_v, |p| &self.theta[i][p])
    }

    /// `d` with an algebra element in the first slot.
    pub fn d_first(&self, coeffs: &[Rat], j: usize) -> Matrix {
        combine_indexed(coeffs, self.dim_v, |p| &self.d[p][j])
    }

    pub fn same_rep(&self, other: &LYRep) -> bool {
        self.algebra.same_structure(&other.algebra)
            && self.dim_v == other.dim_v
            && self.rho == other.rho
            && self.theta == other.theta
            && self.d == other.d
    }

    pub fn into_parts(self) -> LYRepParts {
        (self.algebra, self.dim_v, self.rho, self.theta, self.d)
    }
}

/// Closed-form dichotomy for `r`: all zero, all `-l`, or neither. Decided
/// from the stored matrices alone; no irreducibility claim is made.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymmetryClass {
    Antisymmetric,
    Symmetric,
    Neither,
}

impl std::fmt::Display for SymmetryClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            SymmetryClass::Antisymmetric => "antisymmetric",
            SymmetryClass::Symmetric => "symmetric",
            SymmetryClass::Neither => "neither",
        };
        f.write_str(s)
    }
}

fn combine(family: &[Matrix], coeffs: &[Rat], dim_v: usize) -> Matrix {
    combine_indexed(coeffs, dim_v, |p| &family[p])
}

fn combine_indexed<'a>(coeffs: &[Rat], dim_v: usize, at: impl Fn(usize) -> &'a Matrix) -> Matrix {
    let mut acc = Matrix::zeros(dim_v, dim_v);
    for (p, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            acc = &acc + &at(p).scale(c);
        }
    }
    acc
}

fn flat(m: &Matrix) -> Vec<Rat> {
    m.entries().to_vec()
}

/// Checks the three defining identities of a left representation on all basis
/// pairs `(x, y)`, with `l` and `r` of products obtained by contracting
/// structure constants with the matrix families:
///
/// * `l-hom`:     `l(x*y) = [l(x), l(y)]`
/// * `r-comp`:    `r(x*y) = r(y) r(x) + l(x) r(y)`
/// * `r-bracket`: `r(x*y) = [l(x), r(y)]`
///
/// The derived identity `r-cross`, `r(y) r(x) + r(y) l(x) = 0`, is evaluated
/// as a separate consistency cross-check; it can only fail together with one
/// of `r-comp`/`r-bracket`.
pub fn check_leibniz_rep(rep: &LeibnizRep) -> AxiomReport {
    let n = rep.algebra.dim();
    let mut report = AxiomReport::new();
    for i in 0..n {
        for j in 0..n {
            let prod = rep.algebra.basis_product(i, j);
            let l_prod = rep.l_of(prod);
            let r_prod = rep.r_of(prod);
            let (li, lj) = (&rep.l[i], &rep.l[j]);
            let (ri, rj) = (&rep.r[i], &rep.r[j]);

            let defect = &l_prod - &(&(li * lj) - &(lj * li));
            report.record("l-hom", vec![i, j], flat(&defect));

            let defect = &r_prod - &(&(rj * ri) + &(li * rj));
            report.record("r-comp", vec![i, j], flat(&defect));

            let defect = &r_prod - &(&(li * rj) - &(rj * li));
            report.record("r-bracket", vec![i, j], flat(&defect));

            let defect = &(rj * ri) + &(rj * li);
            report.record("r-cross", vec![i, j], flat(&defect));
        }
    }
    report
}

/// The adjoint (regular) representation: the algebra acting on itself by
/// left and right multiplication, `l(e_i) e_j = e_i * e_j` and
/// `r(e_i) e_j = e_j * e_i`. Rejects inputs that fail the Leibniz check.
pub fn adjoint_rep(a: &Algebra) -> Result<LeibnizRep, Error> {
    let report = check_left_leibniz(a);
    if !report.passed() {
        return Err(Error::AxiomsFailed {
            context: "adjoint_rep",
            report,
        });
    }
    let n = a.dim();
    let c = a.product();
    let l = (0..n)
        .map(|i| Matrix::from_fn(n, n, |k, j| c.get(i, j, k).clone()))
        .collect();
    let r = (0..n)
        .map(|i| Matrix::from_fn(n, n, |k, j| c.get(j, i, k).clone()))
        .collect();
    LeibnizRep::new(a.clone(), n, l, r)
}

/// The dual representation on the dual module. In dual-basis coordinates,
/// where precomposition by a map with matrix `M` acts as `M^T`, its matrices
/// are `l'(x) = -l(x)^T` and `r'(x) = l(x)^T + r(x)^T`. The input is
/// re-checked first.
pub fn dual_rep(rep: &LeibnizRep) -> Result<LeibnizRep, Error> {
    let report = check_leibniz_rep(rep);
    if !report.passed() {
        return Err(Error::AxiomsFailed {
            context: "dual_rep",
            report,
        });
    }
    let l = rep.l.iter().map(|m| -&m.transpose()).collect();
    let r = rep
        .l
        .iter()
        .zip(&rep.r)
        .map(|(lm, rm)| &lm.transpose() + &rm.transpose())
        .collect();
    LeibnizRep::new(rep.algebra.clone(), rep.dim_v, l, r)
}

fn check_l_family(a: &Algebra, l_family: &[Matrix]) -> Result<usize, Error> {
    let n = a.dim();
    if l_family.len() != n {
        return Err(Error::Shape(format!(
            "expected {n} matrices, got {}",
            l_family.len()
        )));
    }
    let dim_v = l_family.first().map_or(0, Matrix::rows);
    for (i, m) in l_family.iter().enumerate() {
        if m.rows() != dim_v || m.cols() != dim_v {
            return Err(Error::Shape(format!(
                "l[{i}] is {}x{}, expected {dim_v}x{dim_v}",
                m.rows(),
                m.cols()
            )));
        }
    }
    // the family must already represent the product through commutators
    let mut report = AxiomReport::new();
    for i in 0..n {
        for j in 0..n {
            let l_prod = combine(l_family, a.basis_product(i, j), dim_v);
            let defect = &l_prod - &(&(&l_family[i] * &l_family[j]) - &(&l_family[j] * &l_family[i]));
            report.record("l-hom", vec![i, j], flat(&defect));
        }
    }
    if !report.passed() {
        return Err(Error::AxiomsFailed {
            context: "rep_from_l_family",
            report,
        });
    }
    Ok(dim_v)
}

/// The symmetric representation on a module whose `l` family already
/// satisfies the commutator identity: `r(x) = -l(x)`.
pub fn symmetric_rep_from(a: &Algebra, l_family: &[Matrix]) -> Result<LeibnizRep, Error> {
    let dim_v = check_l_family(a, l_family)?;
    let r = l_family.iter().map(|m| -m).collect();
    LeibnizRep::new(a.clone(), dim_v, l_family.to_vec(), r)
}

/// The antisymmetric representation: `r(x) = 0`.
pub fn antisymmetric_rep_from(a: &Algebra, l_family: &[Matrix]) -> Result<LeibnizRep, Error> {
    let dim_v = check_l_family(a, l_family)?;
    let r = vec![Matrix::zeros(dim_v, dim_v); l_family.len()];
    LeibnizRep::new(a.clone(), dim_v, l_family.to_vec(), r)
}

/// The LY representation induced by a Leibniz representation:
/// `rho(x) = l(x) - r(x)`, `theta(x, y) = -r(y) r(x)`, `d(x, y) = -l(x*y)`,
/// over the LY algebra associated with the representation's algebra. The
/// input is re-checked; the output satisfies all seven LY axioms.
pub fn induce_ly_rep(rep: &LeibnizRep) -> Result<LYRep, Error> {
    let report = check_leibniz_rep(rep);
    if !report.passed() {
        return Err(Error::AxiomsFailed {
            context: "induce_ly_rep",
            report,
        });
    }
    let ly = leibniz_to_ly(&rep.algebra)?;
    let n = rep.algebra.dim();
    let rho = rep.l.iter().zip(&rep.r).map(|(l, r)| l - r).collect();
    let theta = (0..n)
        .map(|i| (0..n).map(|j| -&(&rep.r[j] * &rep.r[i])).collect())
        .collect();
    let d = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| -&rep.l_of(rep.algebra.basis_product(i, j)))
                .collect()
        })
        .collect();
    LYRep::new(ly, rep.dim_v, rho, theta, d)
}

/// Checks the seven axioms of an LY representation on all basis tuples of the
/// appropriate arity; bracketed arguments are expanded through the LY
/// structure tensors.
pub fn check_ly_rep(rep: &LYRep) -> AxiomReport {
    let n = rep.algebra.dim();
    let ly = &rep.algebra;
    let mut report = AxiomReport::new();

    // R1: d(x,y) - theta(y,x) + theta(x,y) + rho([x,y]) - [rho(x), rho(y)] = 0
    for i in 0..n {
        for j in 0..n {
            let comm = &(&rep.rho[i] * &rep.rho[j]) - &(&rep.rho[j] * &rep.rho[i]);
            let defect = &(&(&(&rep.d[i][j] - &rep.theta[j][i]) + &rep.theta[i][j])
                + &rep.rho_of(ly.bra(i, j)))
                - &comm;
            report.record("R1", vec![i, j], flat(&defect));
        }
    }

    // R2: d([x,y],z) + d([y,z],x) + d([z,x],y) = 0
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let defect = &(&rep.d_first(ly.bra(i, j), k) + &rep.d_first(ly.bra(j, k), i))
                    + &rep.d_first(ly.bra(k, i), j);
                report.record("R2", vec![i, j, k], flat(&defect));
            }
        }
    }

    // R3: theta([x,y],z) = theta(x,z) rho(y) - theta(y,z) rho(x)
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let rhs = &(&rep.theta[i][k] * &rep.rho[j]) - &(&rep.theta[j][k] * &rep.rho[i]);
                let defect = &rep.theta_first(ly.bra(i, j), k) - &rhs;
                report.record("R3", vec![i, j, k], flat(&defect));
            }
        }
    }

    // R4: [d(x,y), rho(z)] = rho({x,y,z})
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let comm = &(&rep.d[i][j] * &rep.rho[k]) - &(&rep.rho[k] * &rep.d[i][j]);
                let defect = &comm - &rep.rho_of(ly.tri(i, j, k));
                report.record("R4", vec![i, j, k], flat(&defect));
            }
        }
    }

    // R5: theta(x,[y,z]) = rho(y) theta(x,z) - rho(z) theta(x,y)
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let rhs = &(&rep.rho[j] * &rep.theta[i][k]) - &(&rep.rho[k] * &rep.theta[i][j]);
                let defect = &rep.theta_second(i, ly.bra(j, k)) - &rhs;
                report.record("R5", vec![i, j, k], flat(&defect));
            }
        }
    }

    // R6: [d(u,v), theta(x,y)] = theta({u,v,x}, y) + theta(x, {u,v,y})
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for m in 0..n {
                    let comm = &(&rep.d[i][j] * &rep.theta[k][m]) - &(&rep.theta[k][m] * &rep.d[i][j]);
                    let rhs = &rep.theta_first(ly.tri(i, j, k), m) + &rep.theta_second(k, ly.tri(i, j, m));
                    let defect = &comm - &rhs;
                    report.record("R6", vec![i, j, k, m], flat(&defect));
                }
            }
        }
    }

    // R7: theta(u, {x,y,z}) = theta(y,z) theta(u,x) - theta(x,z) theta(u,y)
    //                         + d(x,y) theta(u,z)   over tuples (u,x,y,z)
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for m in 0..n {
                    let rhs = &(&(&rep.theta[k][m] * &rep.theta[i][j])
                        - &(&rep.theta[j][m] * &rep.theta[i][k]))
                        + &(&rep.d[j][k] * &rep.theta[i][m]);
                    let defect = &rep.theta_second(i, ly.tri(j, k, m)) - &rhs;
                    report.record("R7", vec![i, j, k, m], flat(&defect));
                }
            }
        }
    }

    report
}

/// The adjoint representation of an LY algebra on itself:
/// `rho(x) y = [x, y]`, `theta(x, y) z = {z, x, y}` (acted-on vector in the
/// first ternary slot), `d(x, y) z = {x, y, z}`. Rejects inputs failing the
/// LY axioms.
pub fn ly_adjoint_rep(l: &LYAlgebra) -> Result<LYRep, Error> {
    let report = check_ly(l);
    if !report.passed() {
        return Err(Error::AxiomsFailed {
            context: "ly_adjoint_rep",
            report,
        });
    }
    let n = l.dim();
    let rho = (0..n)
        .map(|i| Matrix::from_fn(n, n, |m, j| l.bra(i, j)[m].clone()))
        .collect();
    let theta = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Matrix::from_fn(n, n, |m, k| l.tri(k, i, j)[m].clone()))
                .collect()
        })
        .collect();
    let d = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Matrix::from_fn(n, n, |m, k| l.tri(i, j, k)[m].clone()))
                .collect()
        })
        .collect();
    LYRep::new(l.clone(), n, rho, theta, d)
}

/// Reconstructs the `d` family forced by the first LY-representation axiom:
/// `d(x,y) = theta(y,x) - theta(x,y) - rho([x,y]) + [rho(x), rho(y)]`.
pub fn d_from_r1(
    rho: &[Matrix],
    theta: &[Vec<Matrix>],
    ly: &LYAlgebra,
) -> Result<Vec<Vec<Matrix>>, Error> {
    let n = ly.dim();
    if rho.len() != n || theta.len() != n || theta.iter().any(|row| row.len() != n) {
        return Err(Error::Shape(format!(
            "expected {n} rho matrices and an {n}x{n} theta family"
        )));
    }
    let dim_v = rho.first().map_or(0, Matrix::rows);
    for m in rho.iter().chain(theta.iter().flatten()) {
        if m.rows() != dim_v || m.cols() != dim_v {
            return Err(Error::Shape(format!(
                "family matrix is {}x{}, expected {dim_v}x{dim_v}",
                m.rows(),
                m.cols()
            )));
        }
    }
    let rho_of = |coeffs: &[Rat]| combine(rho, coeffs, dim_v);
    Ok((0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let comm = &(&rho[i] * &rho[j]) - &(&rho[j] * &rho[i]);
                    &(&(&theta[j][i] - &theta[i][j]) - &rho_of(ly.bra(i, j))) + &comm
                })
                .collect()
        })
        .collect())
}

/// Tests the two closed-form conditions `r = 0` and `r = -l`; the zero
/// representation satisfies both and resolves to antisymmetric.
pub fn classify_symmetry(rep: &LeibnizRep) -> SymmetryClass {
    if rep.r.iter().all(Matrix::is_zero) {
        return SymmetryClass::Antisymmetric;
    }
    if rep.l.iter().zip(&rep.r).all(|(l, r)| r == &-l) {
        return SymmetryClass::Symmetric;
    }
    SymmetryClass::Neither
}

/// Conjugates a representation by an invertible `psi`:
/// `l'(x) = psi l(x) psi^-1`, `r'(x) = psi r(x) psi^-1`. The conjugate
/// satisfies exactly the same axiom verdicts as the input, and `psi`
/// intertwines the two.
pub fn conjugate_rep(rep: &LeibnizRep, psi: &Matrix) -> Result<LeibnizRep, Error> {
    if psi.rows() != rep.dim_v || psi.cols() != rep.dim_v {
        return Err(Error::Shape(format!(
            "psi is {}x{}, expected {}x{}",
            psi.rows(),
            psi.cols(),
            rep.dim_v,
            rep.dim_v
        )));
    }
    let psi_inv = psi.inverse()?;
    let conj = |m: &Matrix| &(psi * m) * &psi_inv;
    let l = rep.l.iter().map(&conj).collect();
    let r = rep.r.iter().map(&conj).collect();
    LeibnizRep::new(rep.algebra.clone(), rep.dim_v, l, r)
}
