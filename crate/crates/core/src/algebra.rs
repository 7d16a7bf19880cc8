//! Leibniz and Lie-Yamaguti algebras as structure-constant data, together
//! with exhaustive basis-tuple axiom checkers. Multilinearity of every axiom
//! makes the basis check complete.

use num::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::rat::{rat, Rat};
use crate::tensor::{Tensor3, Tensor4};

/// One failed axiom instance: which axiom, at which basis tuple, with which
/// (nonzero) defect. For operator identities the defect is the offending
/// matrix flattened row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: &'static str,
    pub indices: Vec<usize>,
    pub defect: Vec<Rat>,
}

/// Outcome of an axiom check. Passing is synonymous with an empty violation
/// list; defects are recorded in a fixed (axiom, lexicographic tuple) order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    violations: Vec<Violation>,
}

impl AxiomReport {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn has_axiom(&self, axiom: &str) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }

    /// Records the defect if it is nonzero; returns whether it was recorded.
    pub(crate) fn record(&mut self, axiom: &'static str, indices: Vec<usize>, defect: Vec<Rat>) -> bool {
        if defect.iter().all(Rat::is_zero) {
            return false;
        }
        self.violations.push(Violation { axiom, indices, defect });
        true
    }
}

/// An algebra with a single bilinear product, given by structure constants.
/// Nothing is assumed about the product; `check_left_leibniz` decides whether
/// it is a left Leibniz algebra.
#[derive(Clone, Debug)]
pub struct Algebra {
    name: Option<String>,
    product: Tensor3,
}

impl Algebra {
    pub fn new(product: Tensor3, name: Option<String>) -> Self {
        Self { name, product }
    }

    pub fn dim(&self) -> usize {
        self.product.dim()
    }

    pub fn product(&self) -> &Tensor3 {
        &self.product
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Structural equality: same dimension and structure constants. Names are
    /// labels and do not participate.
    pub fn same_structure(&self, other: &Algebra) -> bool {
        self.product == other.product
    }

    /// Coefficients of `e_i * e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Rat] {
        self.product.basis_product(i, j)
    }

    /// `e_i * v` for a coefficient vector `v`.
    pub(crate) fn prod_basis_vec(&self, i: usize, v: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.dim()];
        for (p, c) in v.iter().enumerate() {
            if !c.is_zero() {
                acc_scaled(&mut out, c, self.basis_product(i, p));
            }
        }
        out
    }

    /// `v * e_k` for a coefficient vector `v`.
    pub(crate) fn prod_vec_basis(&self, v: &[Rat], k: usize) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.dim()];
        for (p, c) in v.iter().enumerate() {
            if !c.is_zero() {
                acc_scaled(&mut out, c, self.basis_product(p, k));
            }
        }
        out
    }
}

/// An algebra with an antisymmetric binary bracket and a ternary bracket.
/// `check_ly` decides whether the Lie-Yamaguti axioms hold.
#[derive(Clone, Debug)]
pub struct LYAlgebra {
    name: Option<String>,
    binary: Tensor3,
    ternary: Tensor4,
}

impl LYAlgebra {
    pub fn new(binary: Tensor3, ternary: Tensor4, name: Option<String>) -> Result<Self, Error> {
        if binary.dim() != ternary.dim() {
            return Err(Error::Shape(format!(
                "binary bracket dim {} != ternary bracket dim {}",
                binary.dim(),
                ternary.dim()
            )));
        }
        Ok(Self { name, binary, ternary })
    }

    pub fn dim(&self) -> usize {
        self.binary.dim()
    }

    pub fn binary(&self) -> &Tensor3 {
        &self.binary
    }

    pub fn ternary(&self) -> &Tensor4 {
        &self.ternary
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn same_structure(&self, other: &LYAlgebra) -> bool {
        self.binary == other.binary && self.ternary == other.ternary
    }

    /// Coefficients of `[e_i, e_j]`.
    pub fn bra(&self, i: usize, j: usize) -> &[Rat] {
        self.binary.basis_product(i, j)
    }

    /// Coefficients of the ternary bracket of `e_i`, `e_j`, `e_k`.
    pub fn tri(&self, i: usize, j: usize, k: usize) -> &[Rat] {
        self.ternary.basis_product(i, j, k)
    }

    /// `[v, e_k]`.
    pub(crate) fn bracket_vec_basis(&self, v: &[Rat], k: usize) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.dim()];
        for (p, c) in v.iter().enumerate() {
            if !c.is_zero() {
                acc_scaled(&mut out, c, self.bra(p, k));
            }
        }
        out
    }

    /// `[e_i, v]`.
    pub(crate) fn bracket_basis_vec(&self, i: usize, v: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.dim()];
        for (p, c) in v.iter().enumerate() {
            if !c.is_zero() {
                acc_scaled(&mut out, c, self.bra(i, p));
            }
        }
        out
    }

    /// Ternary bracket with a vector in the first slot.
    pub(crate) fn tri_vec_first(&self, v: &[Rat], j: usize, k: usize) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.dim()];
        for (p, c) in v.iter().enumerate() {
            if !c.is_zero() {
                acc_scaled(&mut out, c, self.tri(p, j, k));
            }
        }
        out
    }

    /// Ternary bracket with a vector in the second slot.
    pub(crate) fn tri_vec_second(&self, i: usize, v: &[Rat], k: usize) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.dim()];
        for (p, c) in v.iter().enumerate() {
            if !c.is_zero() {
                acc_scaled(&mut out, c, self.tri(i, p, k));
            }
        }
        out
    }

    /// Ternary bracket with a vector in the third slot.
    pub(crate) fn tri_vec_third(&self, i: usize, j: usize, v: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.dim()];
        for (p, c) in v.iter().enumerate() {
            if !c.is_zero() {
                acc_scaled(&mut out, c, self.tri(i, j, p));
            }
        }
        out
    }
}

pub(crate) fn acc_scaled(out: &mut [Rat], c: &Rat, slice: &[Rat]) {
    for (o, s) in out.iter_mut().zip(slice) {
        if !s.is_zero() {
            *o += c * s;
        }
    }
}

fn vec_sub(a: Vec<Rat>, b: &[Rat]) -> Vec<Rat> {
    a.into_iter().zip(b).map(|(x, y)| x - y).collect()
}

fn vec_add(a: Vec<Rat>, b: &[Rat]) -> Vec<Rat> {
    a.into_iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Checks `x*(y*z) = (x*y)*z + y*(x*z)` on every basis triple; trilinearity
/// of the defect makes this exhaustive. Violations carry the defect
/// `x*(y*z) - (x*y)*z - y*(x*z)`.
pub fn check_left_leibniz(a: &Algebra) -> AxiomReport {
    let n = a.dim();
    let mut report = AxiomReport::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = a.prod_basis_vec(i, a.basis_product(j, k));
                let t1 = a.prod_vec_basis(a.basis_product(i, j), k);
                let t2 = a.prod_basis_vec(j, a.basis_product(i, k));
                let defect = vec_sub(vec_sub(lhs, &t1), &t2);
                report.record("leibniz", vec![i, j, k], defect);
            }
        }
    }
    report
}

/// Checks the Lie-Yamaguti axioms LY01, LY02, LY1-LY4 on all basis tuples of
/// the appropriate arity. LY4 (arity five) stops at its first violating
/// tuple in lexicographic order; all other axioms report every violation.
pub fn check_ly(l: &LYAlgebra) -> AxiomReport {
    let n = l.dim();
    let mut report = AxiomReport::new();

    // LY01: [x,y] + [y,x] = 0
    for i in 0..n {
        for j in 0..n {
            let defect = vec_add(l.bra(i, j).to_vec(), l.bra(j, i));
            report.record("LY01", vec![i, j], defect);
        }
    }

    // LY02: {x,y,z} + {y,x,z} = 0
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let defect = vec_add(l.tri(i, j, k).to_vec(), l.tri(j, i, k));
                report.record("LY02", vec![i, j, k], defect);
            }
        }
    }

    // LY1: cyclic sum of [[x,y],z] + {x,y,z} over (x,y,z)
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut defect = vec![Rat::zero(); n];
                for &(x, y, z) in &[(i, j, k), (j, k, i), (k, i, j)] {
                    let term = vec_add(l.bracket_vec_basis(l.bra(x, y), z), l.tri(x, y, z));
                    defect = vec_add(defect, &term);
                }
                report.record("LY1", vec![i, j, k], defect);
            }
        }
    }

    // LY2: cyclic sum of {[x,y],z,u} over (x,y,z), u fixed
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for u in 0..n {
                    let mut defect = vec![Rat::zero(); n];
                    for &(x, y, z) in &[(i, j, k), (j, k, i), (k, i, j)] {
                        defect = vec_add(defect, &l.tri_vec_first(l.bra(x, y), z, u));
                    }
                    report.record("LY2", vec![i, j, k, u], defect);
                }
            }
        }
    }

    // LY3: {x,y,[u,v]} = [{x,y,u},v] + [u,{x,y,v}]
    for i in 0..n {
        for j in 0..n {
            for u in 0..n {
                for v in 0..n {
                    let lhs = l.tri_vec_third(i, j, l.bra(u, v));
                    let r1 = l.bracket_vec_basis(l.tri(i, j, u), v);
                    let r2 = l.bracket_basis_vec(u, l.tri(i, j, v));
                    let defect = vec_sub(vec_sub(lhs, &r1), &r2);
                    report.record("LY3", vec![i, j, u, v], defect);
                }
            }
        }
    }

    // LY4: {x,y,{u,v,w}} = {{x,y,u},v,w} + {u,{x,y,v},w} + {u,v,{x,y,w}}
    'ly4: for i in 0..n {
        for j in 0..n {
            for u in 0..n {
                for v in 0..n {
                    for w in 0..n {
                        let lhs = l.tri_vec_third(i, j, l.tri(u, v, w));
                        let r1 = l.tri_vec_first(l.tri(i, j, u), v, w);
                        let r2 = l.tri_vec_second(u, l.tri(i, j, v), w);
                        let r3 = l.tri_vec_third(u, v, l.tri(i, j, w));
                        let defect = vec_sub(vec_sub(vec_sub(lhs, &r1), &r2), &r3);
                        if report.record("LY4", vec![i, j, u, v, w], defect) {
                            break 'ly4;
                        }
                    }
                }
            }
        }
    }

    report
}

/// Builds the Lie-Yamaguti algebra associated with a left Leibniz algebra:
/// `[x,y] = x*y - y*x` and ternary bracket `-(x*y)*z`. The input is
/// re-checked; a non-Leibniz product is rejected with its report.
pub fn leibniz_to_ly(a: &Algebra) -> Result<LYAlgebra, Error> {
    let report = check_left_leibniz(a);
    if !report.passed() {
        return Err(Error::AxiomsFailed {
            context: "leibniz_to_ly",
            report,
        });
    }
    let n = a.dim();
    let c = a.product();
    let mut binary = Tensor3::zeros(n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                binary.set(i, j, k, c.get(i, j, k) - c.get(j, i, k));
            }
        }
    }
    let mut ternary = Tensor4::zeros(n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for m in 0..n {
                    let mut acc = Rat::zero();
                    for p in 0..n {
                        let cij = c.get(i, j, p);
                        if !cij.is_zero() {
                            acc += cij * c.get(p, k, m);
                        }
                    }
                    ternary.set(i, j, k, m, -acc);
                }
            }
        }
    }
    LYAlgebra::new(binary, ternary, a.name.clone())
}

/// Named example algebras. `abelian:N` (zero product, `N <= 64`),
/// `leibniz2` (dim 2, `e0*e0 = e1`), `sl2` (simple Lie algebra, basis e, f, h),
/// `heisenberg` (dim 3, `e0*e1 = e2 = -e1*e0`).
pub fn catalog(name: &str) -> Result<Algebra, Error> {
    let unknown = || Error::UnknownCatalog(name.to_string());
    if let Some(suffix) = name.strip_prefix("abelian:") {
        let n: usize = suffix.parse().map_err(|_| unknown())?;
        if n > 64 {
            return Err(unknown());
        }
        return Ok(Algebra::new(Tensor3::zeros(n), Some(name.to_string())));
    }
    let triples: &[(usize, usize, usize, i64)] = match name {
        "leibniz2" => &[(0, 0, 1, 1)],
        "sl2" => &[
            (0, 1, 2, 1),
            (1, 0, 2, -1),
            (2, 0, 0, 2),
            (0, 2, 0, -2),
            (2, 1, 1, -2),
            (1, 2, 1, 2),
        ],
        "heisenberg" => &[(0, 1, 2, 1), (1, 0, 2, -1)],
        _ => return Err(unknown()),
    };
    let dim = match name {
        "leibniz2" => 2,
        _ => 3,
    };
    let mut t = Tensor3::zeros(dim);
    for &(i, j, k, v) in triples {
        t.set(i, j, k, rat(v));
    }
    Ok(Algebra::new(t, Some(name.to_string())))
}

/// Rejection-samples a left Leibniz algebra: each attempt draws at most `dim`
/// sparse structure constants with values in `{-2,...,2}` and keeps the first
/// draw that passes the axiom check. Deterministic for a fixed seed; returns
/// `None` once `max_attempts` draws have been rejected.
pub fn random_leibniz(dim: usize, seed: u64, max_attempts: usize) -> Option<Algebra> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..max_attempts {
        let mut t = Tensor3::zeros(dim);
        let slots = rng.gen_range(0..=dim);
        for _ in 0..slots {
            let i = rng.gen_range(0..dim);
            let j = rng.gen_range(0..dim);
            let k = rng.gen_range(0..dim);
            let v: i64 = rng.gen_range(-2..=2);
            t.set(i, j, k, rat(v));
        }
        let a = Algebra::new(t, Some(format!("random:{dim}:{seed}")));
        if check_left_leibniz(&a).passed() {
            return Some(a);
        }
    }
    None
}
