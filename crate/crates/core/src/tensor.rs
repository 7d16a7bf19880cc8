//! Rank-3 and rank-4 structure-constant tensors and their multilinear
//! evaluation. `Tensor3` holds the constants of a bilinear product
//! (`e_i * e_j = sum_k c[i][j][k] e_k`); `Tensor4` those of a trilinear one.

use num::Zero;

use crate::error::Error;
use crate::rat::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor3 {
    dim: usize,
    entries: Vec<Rat>,
}

impl Tensor3 {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![Rat::zero(); dim * dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rat {
        &self.entries[(i * self.dim + j) * self.dim + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Rat) {
        self.entries[(i * self.dim + j) * self.dim + k] = v;
    }

    /// Coefficient vector of `e_i * e_j` (contiguous over the last index).
    pub fn basis_product(&self, i: usize, j: usize) -> &[Rat] {
        let base = (i * self.dim + j) * self.dim;
        &self.entries[base..base + self.dim]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rat::is_zero)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor4 {
    dim: usize,
    entries: Vec<Rat>,
}

impl Tensor4 {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![Rat::zero(); dim * dim * dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize, m: usize) -> &Rat {
        &self.entries[((i * self.dim + j) * self.dim + k) * self.dim + m]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, m: usize, v: Rat) {
        self.entries[((i * self.dim + j) * self.dim + k) * self.dim + m] = v;
    }

    /// Coefficient vector of the trilinear product of `e_i`, `e_j`, `e_k`.
    pub fn basis_product(&self, i: usize, j: usize, k: usize) -> &[Rat] {
        let base = ((i * self.dim + j) * self.dim + k) * self.dim;
        &self.entries[base..base + self.dim]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rat::is_zero)
    }
}

/// Evaluates the bilinear product of `x` and `y`:
/// `out_k = sum_{i,j} x_i y_j c[i][j][k]`.
pub fn bilinear_apply(t: &Tensor3, x: &[Rat], y: &[Rat]) -> Result<Vec<Rat>, Error> {
    let n = t.dim;
    if x.len() != n || y.len() != n {
        return Err(Error::Shape(format!(
            "bilinear_apply over dim {n} got vectors of length {} and {}",
            x.len(),
            y.len()
        )));
    }
    let mut out = vec![Rat::zero(); n];
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            let w = xi * yj;
            for (k, o) in out.iter_mut().enumerate() {
                let c = t.get(i, j, k);
                if !c.is_zero() {
                    *o += &w * c;
                }
            }
        }
    }
    Ok(out)
}

/// Evaluates the trilinear product of `x`, `y`, `z`.
pub fn trilinear_apply(t: &Tensor4, x: &[Rat], y: &[Rat], z: &[Rat]) -> Result<Vec<Rat>, Error> {
    let n = t.dim;
    if x.len() != n || y.len() != n || z.len() != n {
        return Err(Error::Shape(format!(
            "trilinear_apply over dim {n} got vectors of length {}, {}, {}",
            x.len(),
            y.len(),
            z.len()
        )));
    }
    let mut out = vec![Rat::zero(); n];
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            let w = xi * yj;
            for (k, zk) in z.iter().enumerate() {
                if zk.is_zero() {
                    continue;
                }
                let w2 = &w * zk;
                for (m, o) in out.iter_mut().enumerate() {
                    let c = t.get(i, j, k, m);
                    if !c.is_zero() {
                        *o += &w2 * c;
                    }
                }
            }
        }
    }
    Ok(out)
}

/// The i-th standard basis vector of length `n`.
pub fn basis_vec(n: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); n];
    v[i] = num::One::one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn bilinear_zero_tensor() {
        let t = Tensor3::zeros(3);
        let x = basis_vec(3, 0);
        let y = basis_vec(3, 2);
        assert!(bilinear_apply(&t, &x, &y).unwrap().iter().all(Rat::is_zero));
    }

    #[test]
    fn bilinear_single_constant() {
        let mut t = Tensor3::zeros(2);
        t.set(0, 0, 1, rat(1));
        let e0 = basis_vec(2, 0);
        let e1 = basis_vec(2, 1);
        assert_eq!(bilinear_apply(&t, &e0, &e0).unwrap(), e1);
        // no structure constant matches (1, 0)
        assert!(bilinear_apply(&t, &e1, &e0).unwrap().iter().all(Rat::is_zero));
    }

    #[test]
    fn bilinear_shape_error() {
        let t = Tensor3::zeros(2);
        let short = vec![rat(1)];
        let ok = basis_vec(2, 0);
        assert!(matches!(bilinear_apply(&t, &short, &ok), Err(Error::Shape(_))));
    }

    #[test]
    fn trilinear_single_constant() {
        let mut t = Tensor4::zeros(3);
        t.set(0, 1, 0, 2, rat(1));
        let e0 = basis_vec(3, 0);
        let e1 = basis_vec(3, 1);
        let e2 = basis_vec(3, 2);
        assert_eq!(trilinear_apply(&t, &e0, &e1, &e0).unwrap(), e2);
        assert!(trilinear_apply(&t, &e1, &e0, &e0)
            .unwrap()
            .iter()
            .all(Rat::is_zero));
    }

    #[test]
    fn trilinear_zero_and_shape() {
        let t = Tensor4::zeros(2);
        let e0 = basis_vec(2, 0);
        assert!(trilinear_apply(&t, &e0, &e0, &e0)
            .unwrap()
            .iter()
            .all(Rat::is_zero));
        let short = vec![rat(1)];
        assert!(matches!(
            trilinear_apply(&t, &e0, &e0, &short),
            Err(Error::Shape(_))
        ));
    }
}
