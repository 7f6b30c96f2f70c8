use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::hom::HomAlgebra;
use crate::report::CheckReport;
use crate::tensor::{LinearMap, Vector};

/// Left and right actions of `A` on a module `M` with twist `β`.
///
/// `left[(i*m + p)*m + q]` is the coefficient of `f_q` in `eᵢ • f_p`;
/// `right[(p*n + i)*m + q]` that of `f_q` in `f_p • eᵢ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimoduleActions {
    pub algebra_dim: usize,
    pub module_dim: usize,
    pub beta: LinearMap,
    pub left: Vec<Scalar>,
    pub right: Vec<Scalar>,
}

impl BimoduleActions {
    fn field(&self) -> FieldSpec {
        self.beta.field()
    }

    /// `x • m`.
    pub fn act_left(&self, x: &[Scalar], m: &[Scalar]) -> Vec<Scalar> {
        let (n, md) = (self.algebra_dim, self.module_dim);
        let mut out = vec![self.field().zero(); md];
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (p, mp) in m.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let c = xi * mp;
                let base = (i * md + p) * md;
                for (q, o) in out.iter_mut().enumerate() {
                    o.add_product(&c, &self.left[base + q]);
                }
            }
        }
        debug_assert_eq!(x.len(), n);
        out
    }

    /// `m • x`.
    pub fn act_right(&self, m: &[Scalar], x: &[Scalar]) -> Vec<Scalar> {
        let (n, md) = (self.algebra_dim, self.module_dim);
        let mut out = vec![self.field().zero(); md];
        for (p, mp) in m.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let c = mp * xi;
                let base = (p * n + i) * md;
                for (q, o) in out.iter_mut().enumerate() {
                    o.add_product(&c, &self.right[base + q]);
                }
            }
        }
        out
    }
}

/// Coordinates of `v₁ ⊗ … ⊗ v_k` with the first factor most significant.
pub(crate) fn kron(factors: &[Vector]) -> Vec<Scalar> {
    let field = factors[0].field();
    factors.iter().fold(vec![field.one()], |acc, v| {
        let mut out = Vec::with_capacity(acc.len() * v.dim());
        for a in &acc {
            for c in v.coords() {
                out.push(a * c);
            }
        }
        out
    })
}

fn digits(mut p: usize, n: usize, k: usize) -> Vec<usize> {
    let mut d = vec![0; k];
    for slot in d.iter_mut().rev() {
        *slot = p % n;
        p /= n;
    }
    d
}

/// `A^⊗k` with `β = α^⊗k`,
/// `a•(b₁⊗…⊗b_k) = α(a)·b₁ ⊗ α(b₂) ⊗ … ⊗ α(b_k)` and
/// `(b₁⊗…⊗b_k)•a = α(b₁) ⊗ … ⊗ α(b_{k-1}) ⊗ b_k·α(a)`.
pub fn tensor_power_bimodule(a: &HomAlgebra, k: usize) -> Result<BimoduleActions> {
    if k == 0 {
        return Err(Error::UnsupportedDim(0));
    }
    let (f, n) = (a.field(), a.dim());
    let m = n.pow(k as u32);
    let alpha = a.alpha();
    let mut beta = LinearMap::zero(f, m);
    let mut left = Vec::with_capacity(n * m * m);
    let mut right = Vec::with_capacity(n * m * m);
    for p in 0..m {
        let b = digits(p, n, k);
        let col = kron(&b.iter().map(|&x| alpha.column(x)).collect::<Vec<_>>());
        for (q, c) in col.into_iter().enumerate() {
            beta.set(q, p, c);
        }
    }
    for i in 0..n {
        let ai = alpha.column(i);
        for p in 0..m {
            let b = digits(p, n, k);
            let mut factors = vec![a.mul(&ai, &a.unit_vector(b[0]))];
            factors.extend(b[1..].iter().map(|&x| alpha.column(x)));
            left.extend(kron(&factors));
        }
    }
    for p in 0..m {
        let b = digits(p, n, k);
        for i in 0..n {
            let ai = alpha.column(i);
            let mut factors: Vec<Vector> = b[..k - 1].iter().map(|&x| alpha.column(x)).collect();
            factors.push(a.mul(&a.unit_vector(b[k - 1]), &ai));
            right.extend(kron(&factors));
        }
    }
    Ok(BimoduleActions {
        algebra_dim: n,
        module_dim: m,
        beta,
        left,
        right,
    })
}

/// Twist compatibility and the three bimodule identities on basis tuples.
pub fn check_bimodule(a: &HomAlgebra, bm: &BimoduleActions) -> CheckReport {
    let mut report = CheckReport::new("bimodule");
    let (f, n, m) = (a.field(), a.dim(), bm.module_dim);
    let e = |i: usize| Vector::basis(f, n, i).into_coords();
    let fm = |p: usize| Vector::basis(f, m, p).into_coords();
    let alpha = |i: usize| a.alpha().column(i).into_coords();
    let beta = |v: &[Scalar]| bm.beta.apply(&Vector::new(f, v.to_vec()).expect("field")).into_coords();
    for i in 0..n {
        for p in 0..m {
            let lhs = beta(&bm.act_left(&e(i), &fm(p)));
            let rhs = bm.act_left(&alpha(i), &beta(&fm(p)));
            report.compare("beta-left", &[i, p], &lhs, &rhs);
        }
    }
    for p in 0..m {
        for i in 0..n {
            let lhs = beta(&bm.act_right(&fm(p), &e(i)));
            let rhs = bm.act_right(&beta(&fm(p)), &alpha(i));
            report.compare("beta-right", &[p, i], &lhs, &rhs);
        }
    }
    for i in 0..n {
        for j in 0..n {
            let ij = a.mu().product(i, j).into_coords();
            for p in 0..m {
                let lhs = bm.act_left(&ij, &beta(&fm(p)));
                let rhs = bm.act_left(&alpha(i), &bm.act_left(&e(j), &fm(p)));
                report.compare("bimodule-left", &[i, j, p], &lhs, &rhs);
            }
        }
    }
    for i in 0..n {
        for p in 0..m {
            for j in 0..n {
                let lhs = bm.act_right(&bm.act_left(&e(i), &fm(p)), &alpha(j));
                let rhs = bm.act_left(&alpha(i), &bm.act_right(&fm(p), &e(j)));
                report.compare("bimodule-middle", &[i, p, j], &lhs, &rhs);
            }
        }
    }
    for p in 0..m {
        for i in 0..n {
            for j in 0..n {
                let lhs = bm.act_right(&bm.act_right(&fm(p), &e(i)), &alpha(j));
                let rhs = bm.act_right(&beta(&fm(p)), &a.mu().product(i, j).into_coords());
                report.compare("bimodule-right", &[p, i, j], &lhs, &rhs);
            }
        }
    }
    report
}
