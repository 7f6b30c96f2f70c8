//! Brute-force reference arithmetic over GF(p) on raw `i64` coefficient
//! arrays, written directly from the defining formulas and sharing no code
//! with the library.

#![allow(dead_code, clippy::needless_range_loop)]

use homalg::{BilinearMap, Coproduct, FieldSpec, HomAlgebra, LinearMap, Scalar, Tensor2, Tensor3};

pub fn residues(xs: &[Scalar]) -> Vec<i64> {
    xs.iter().map(|x| i64::from(x.residue().expect("prime field scalar"))).collect()
}

pub fn scalars(field: FieldSpec, xs: &[i64]) -> Vec<Scalar> {
    xs.iter().map(|&x| field.from_i64(x)).collect()
}

pub fn tensor2(field: FieldSpec, n: usize, xs: &[i64]) -> Tensor2 {
    Tensor2::new(field, n, scalars(field, xs)).unwrap()
}

pub fn linear(field: FieldSpec, n: usize, xs: &[i64]) -> LinearMap {
    LinearMap::new(field, n, scalars(field, xs)).unwrap()
}

pub fn bilinear(field: FieldSpec, n: usize, xs: &[i64]) -> BilinearMap {
    BilinearMap::new(field, n, scalars(field, xs)).unwrap()
}

pub fn coproduct(field: FieldSpec, n: usize, xs: &[i64]) -> Coproduct {
    Coproduct::new(field, n, scalars(field, xs)).unwrap()
}

pub fn tensor3(field: FieldSpec, n: usize, xs: &[i64]) -> Tensor3 {
    Tensor3::new(field, n, scalars(field, xs)).unwrap()
}

/// Structure constants `c[(i*n+j)*n+k]` and twist `alpha[i*n+j]` (column
/// convention) of an algebra over GF(p).
#[derive(Clone, Debug)]
pub struct Oracle {
    pub p: i64,
    pub n: usize,
    pub c: Vec<i64>,
    pub alpha: Vec<i64>,
}

impl Oracle {
    pub fn of(a: &HomAlgebra) -> Self {
        let p = i64::from(a.field().characteristic());
        Self {
            p,
            n: a.dim(),
            c: residues(a.mu().data()),
            alpha: residues(a.alpha().data()),
        }
    }

    pub fn md(&self, x: i64) -> i64 {
        x.rem_euclid(self.p)
    }

    pub fn unit(&self, i: usize) -> Vec<i64> {
        let mut v = vec![0; self.n];
        v[i] = 1;
        v
    }

    pub fn mul(&self, x: &[i64], y: &[i64]) -> Vec<i64> {
        let n = self.n;
        let mut z = vec![0; n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    z[k] += x[i] * y[j] * self.c[(i * n + j) * n + k];
                }
            }
        }
        z.into_iter().map(|v| self.md(v)).collect()
    }

    pub fn apply(&self, m: &[i64], v: &[i64]) -> Vec<i64> {
        let n = self.n;
        (0..n)
            .map(|i| self.md((0..n).map(|j| m[i * n + j] * v[j]).sum()))
            .collect()
    }

    pub fn tw(&self, v: &[i64]) -> Vec<i64> {
        self.apply(&self.alpha, v)
    }

    pub fn outer2(&self, x: &[i64], y: &[i64]) -> Vec<i64> {
        x.iter().flat_map(|a| y.iter().map(move |b| a * b)).map(|v| self.md(v)).collect()
    }

    pub fn outer3(&self, x: &[i64], y: &[i64], z: &[i64]) -> Vec<i64> {
        let xy = self.outer2(x, y);
        self.outer2(&xy, z)
    }

    pub fn add(&self, x: &[i64], y: &[i64]) -> Vec<i64> {
        x.iter().zip(y).map(|(a, b)| self.md(a + b)).collect()
    }

    pub fn sub(&self, x: &[i64], y: &[i64]) -> Vec<i64> {
        x.iter().zip(y).map(|(a, b)| self.md(a - b)).collect()
    }

    pub fn scale(&self, k: i64, x: &[i64]) -> Vec<i64> {
        x.iter().map(|a| self.md(k * a)).collect()
    }

    /// Nonzero `(i, j, coefficient)` of a 2-tensor.
    pub fn terms2(&self, t: &[i64]) -> Vec<(usize, usize, i64)> {
        let n = self.n;
        (0..n * n).filter(|&q| t[q] != 0).map(|q| (q / n, q % n, t[q])).collect()
    }

    pub fn terms3(&self, t: &[i64]) -> Vec<(usize, usize, usize, i64)> {
        let n = self.n;
        (0..n * n * n)
            .filter(|&q| t[q] != 0)
            .map(|q| (q / (n * n), (q / n) % n, q % n, t[q]))
            .collect()
    }

    pub fn zero3(&self) -> Vec<i64> {
        vec![0; self.n * self.n * self.n]
    }

    fn acc3(&self, out: &mut [i64], k: i64, x: &[i64], y: &[i64], z: &[i64]) {
        let t = self.outer3(x, y, z);
        for (o, v) in out.iter_mut().zip(t) {
            *o = self.md(*o + k * v);
        }
    }

    fn acc2(&self, out: &mut [i64], k: i64, x: &[i64], y: &[i64]) {
        let t = self.outer2(x, y);
        for (o, v) in out.iter_mut().zip(t) {
            *o = self.md(*o + k * v);
        }
    }

    pub fn is_hom_associative(&self) -> bool {
        let n = self.n;
        (0..n).all(|i| {
            (0..n).all(|j| {
                (0..n).all(|k| {
                    let (ei, ej, ek) = (self.unit(i), self.unit(j), self.unit(k));
                    self.mul(&self.mul(&ei, &ej), &self.tw(&ek)) == self.mul(&self.tw(&ei), &self.mul(&ej, &ek))
                })
            })
        })
    }

    pub fn commutes(&self, m: &[i64]) -> bool {
        (0..self.n).all(|j| {
            let e = self.unit(j);
            self.tw(&self.apply(m, &e)) == self.apply(m, &self.tw(&e))
        })
    }

    /// `R(a)R(b) = R(R(a)b + aS(b))`, `S(a)S(b) = S(R(a)b + aS(b))`, both
    /// maps commuting with `α`.
    pub fn is_rb_system(&self, r: &[i64], s: &[i64]) -> bool {
        if !self.commutes(r) || !self.commutes(s) {
            return false;
        }
        let n = self.n;
        (0..n).all(|i| {
            (0..n).all(|j| {
                let (a, b) = (self.unit(i), self.unit(j));
                let (ra, rb) = (self.apply(r, &a), self.apply(r, &b));
                let (sa, sb) = (self.apply(s, &a), self.apply(s, &b));
                let inner = self.add(&self.mul(&ra, &b), &self.mul(&a, &sb));
                self.mul(&ra, &rb) == self.apply(r, &inner) && self.mul(&sa, &sb) == self.apply(s, &inner)
            })
        })
    }

    pub fn twist2(&self, t: &[i64]) -> Vec<i64> {
        let mut out = vec![0; self.n * self.n];
        for (i, j, c) in self.terms2(t) {
            self.acc2(&mut out, c, &self.tw(&self.unit(i)), &self.tw(&self.unit(j)));
        }
        out
    }

    /// `r₁₃r₁₂ − r₁₂r₂₃ + s₂₃r₁₃` and `s₁₃r₁₂ − s₁₂s₂₃ + s₂₃s₁₃`, legs not
    /// involved in a product carrying `α`.
    pub fn yb_sums(&self, r: &[i64], s: &[i64]) -> (Vec<i64>, Vec<i64>) {
        let a = |i| self.tw(&self.unit(i));
        let m = |i, j| self.mul(&self.unit(i), &self.unit(j));
        let mut sum_r = self.zero3();
        let mut sum_s = self.zero3();
        for (i, j, x) in self.terms2(r) {
            for (k, l, y) in self.terms2(r) {
                // r13 r12 and r12 r23
                self.acc3(&mut sum_r, x * y, &m(i, k), &a(l), &a(j));
                self.acc3(&mut sum_r, -x * y, &a(i), &m(j, k), &a(l));
            }
            for (k, l, y) in self.terms2(s) {
                // s23 r13 with r = (i, j) on legs 1, 3 and s = (k, l) on legs 2, 3
                self.acc3(&mut sum_r, x * y, &a(i), &a(k), &m(l, j));
            }
        }
        for (i, j, x) in self.terms2(s) {
            for (k, l, y) in self.terms2(r) {
                // s13 r12
                self.acc3(&mut sum_s, x * y, &m(i, k), &a(l), &a(j));
            }
            for (k, l, y) in self.terms2(s) {
                // s12 s23 and s23 s13 (first factor on legs 2, 3)
                self.acc3(&mut sum_s, -x * y, &a(i), &m(j, k), &a(l));
                self.acc3(&mut sum_s, x * y, &a(k), &a(i), &m(j, l));
            }
        }
        (sum_r, sum_s)
    }

    pub fn is_yb_pair(&self, r: &[i64], s: &[i64]) -> bool {
        if self.twist2(r) != r || self.twist2(s) != s {
            return false;
        }
        let (sr, ss) = self.yb_sums(r, s);
        sr.iter().all(|&v| v == 0) && ss.iter().all(|&v| v == 0)
    }

    /// `△′(a) = a·r₁ ⊗ α(r₂) − α(s₁) ⊗ s₂·a`.
    pub fn delta_prime(&self, r: &[i64], s: &[i64], x: &[i64]) -> Vec<i64> {
        let mut out = vec![0; self.n * self.n];
        for (i, j, c) in self.terms2(r) {
            self.acc2(&mut out, c, &self.mul(x, &self.unit(i)), &self.tw(&self.unit(j)));
        }
        for (i, j, c) in self.terms2(s) {
            self.acc2(&mut out, -c, &self.tw(&self.unit(i)), &self.mul(&self.unit(j), x));
        }
        out
    }

    /// `a·t₁ ⊗ α(t₂) − α(t₁) ⊗ t₂·a`.
    pub fn inner_derivation(&self, t: &[i64], x: &[i64]) -> Vec<i64> {
        self.delta_prime(t, t, x)
    }

    /// Coefficients `d[(i*n+j)*n+k]` of a coproduct given per basis vector.
    pub fn coproduct_of(&self, f: impl Fn(&[i64]) -> Vec<i64>) -> Vec<i64> {
        (0..self.n).flat_map(|i| f(&self.unit(i))).collect()
    }

    pub fn eval_coproduct(&self, d: &[i64], x: &[i64]) -> Vec<i64> {
        let nn = self.n * self.n;
        let mut out = vec![0; nn];
        for (i, xi) in x.iter().enumerate() {
            for q in 0..nn {
                out[q] = self.md(out[q] + xi * d[i * nn + q]);
            }
        }
        out
    }

    /// `(△⊗α)△(a) − (α⊗△)△(a)`.
    pub fn coassoc_defect(&self, d: &[i64], x: &[i64]) -> Vec<i64> {
        let mut out = self.zero3();
        for (i, j, c) in self.terms2(&self.eval_coproduct(d, x)) {
            let left = self.eval_coproduct(d, &self.unit(i));
            let tj = self.tw(&self.unit(j));
            for (u, v, c2) in self.terms2(&left) {
                self.acc3(&mut out, c * c2, &self.unit(u), &self.unit(v), &tj);
            }
            let right = self.eval_coproduct(d, &self.unit(j));
            let ti = self.tw(&self.unit(i));
            for (u, v, c2) in self.terms2(&right) {
                self.acc3(&mut out, -c * c2, &ti, &self.unit(u), &self.unit(v));
            }
        }
        out
    }

    /// `a•(t₁⊗t₂⊗t₃) = α(a)·t₁ ⊗ α(t₂) ⊗ α(t₃)`.
    pub fn left3(&self, x: &[i64], t: &[i64]) -> Vec<i64> {
        let ax = self.tw(x);
        let mut out = self.zero3();
        for (i, j, k, c) in self.terms3(t) {
            self.acc3(&mut out, c, &self.mul(&ax, &self.unit(i)), &self.tw(&self.unit(j)), &self.tw(&self.unit(k)));
        }
        out
    }

    /// `(t₁⊗t₂⊗t₃)•a = α(t₁) ⊗ α(t₂) ⊗ t₃·α(a)`.
    pub fn right3(&self, t: &[i64], x: &[i64]) -> Vec<i64> {
        let ax = self.tw(x);
        let mut out = self.zero3();
        for (i, j, k, c) in self.terms3(t) {
            self.acc3(&mut out, c, &self.tw(&self.unit(i)), &self.tw(&self.unit(j)), &self.mul(&self.unit(k), &ax));
        }
        out
    }

    /// `a•t = α(a)·t₁ ⊗ α(t₂)` and `t•a = α(t₁) ⊗ t₂·α(a)`.
    pub fn left2(&self, x: &[i64], t: &[i64]) -> Vec<i64> {
        let ax = self.tw(x);
        let mut out = vec![0; self.n * self.n];
        for (i, j, c) in self.terms2(t) {
            self.acc2(&mut out, c, &self.mul(&ax, &self.unit(i)), &self.tw(&self.unit(j)));
        }
        out
    }

    pub fn right2(&self, t: &[i64], x: &[i64]) -> Vec<i64> {
        let ax = self.tw(x);
        let mut out = vec![0; self.n * self.n];
        for (i, j, c) in self.terms2(t) {
            self.acc2(&mut out, c, &self.tw(&self.unit(i)), &self.mul(&self.unit(j), &ax));
        }
        out
    }

    /// `(α⊗α)d = dα` and `d(a·b) = a•d(b) + d(a)•b` on basis pairs.
    pub fn is_derivation(&self, d: &[i64]) -> bool {
        let n = self.n;
        let commutes = (0..n).all(|i| {
            let e = self.unit(i);
            self.twist2(&self.eval_coproduct(d, &e)) == self.eval_coproduct(d, &self.tw(&e))
        });
        commutes
            && (0..n).all(|i| {
                (0..n).all(|j| {
                    let (a, b) = (self.unit(i), self.unit(j));
                    let lhs = self.eval_coproduct(d, &self.mul(&a, &b));
                    let rhs = self.add(
                        &self.left2(&a, &self.eval_coproduct(d, &b)),
                        &self.right2(&self.eval_coproduct(d, &a), &b),
                    );
                    lhs == rhs
                })
            })
    }

    /// `(α⊗θ)(t) = Σ tⁱʲ α(eᵢ) ⊗ θ(eⱼ)` and `(θ⊗α)(t)`.
    pub fn alpha_then(&self, t: &[i64], d: &[i64]) -> Vec<i64> {
        let mut out = self.zero3();
        for (i, j, c) in self.terms2(t) {
            let ai = self.tw(&self.unit(i));
            for (u, v, c2) in self.terms2(&self.eval_coproduct(d, &self.unit(j))) {
                self.acc3(&mut out, c * c2, &ai, &self.unit(u), &self.unit(v));
            }
        }
        out
    }

    pub fn then_alpha(&self, t: &[i64], d: &[i64]) -> Vec<i64> {
        let mut out = self.zero3();
        for (i, j, c) in self.terms2(t) {
            let aj = self.tw(&self.unit(j));
            for (u, v, c2) in self.terms2(&self.eval_coproduct(d, &self.unit(i))) {
                self.acc3(&mut out, c * c2, &self.unit(u), &self.unit(v), &aj);
            }
        }
        out
    }

    /// The four mixed products, `d` holding `△(a)` and `t` the tensor.
    pub fn mixed(&self, kind: &str, d: &[i64], t: &[i64]) -> Vec<i64> {
        let a = |i| self.tw(&self.unit(i));
        let m = |i, j| self.mul(&self.unit(i), &self.unit(j));
        let mut out = self.zero3();
        for (u, v, x) in self.terms2(d) {
            for (p, q, y) in self.terms2(t) {
                match kind {
                    "d12_r23" => self.acc3(&mut out, x * y, &a(u), &m(v, p), &a(q)),
                    "s12_d23" => self.acc3(&mut out, x * y, &a(p), &m(q, u), &a(v)),
                    "s23_d13" => self.acc3(&mut out, x * y, &a(u), &a(p), &m(q, v)),
                    "d13_r12" => self.acc3(&mut out, x * y, &m(u, p), &a(q), &a(v)),
                    other => panic!("unknown kind {other}"),
                }
            }
        }
        out
    }

    /// Whether, for every basis `a`,
    /// `a•((α⊗△)(r) − (△⊗α)(r) − Σ_r) − ((α⊗△)(s) − (△⊗α)(s) − Σ_s)•a`
    /// equals `s₂₃△(a)₁₃ + △(a)₁₃r₁₂`.
    pub fn perturbation_condition(&self, d: &[i64], r: &[i64], s: &[i64]) -> bool {
        let (sum_r, sum_s) = self.yb_sums(r, s);
        let left = self.sub(&self.sub(&self.alpha_then(r, d), &self.then_alpha(r, d)), &sum_r);
        let right = self.sub(&self.sub(&self.alpha_then(s, d), &self.then_alpha(s, d)), &sum_s);
        (0..self.n).all(|i| {
            let x = self.unit(i);
            let lhs = self.sub(&self.left3(&x, &left), &self.right3(&right, &x));
            let da = self.eval_coproduct(d, &x);
            let rhs = self.add(&self.mixed("s23_d13", &da, s), &self.mixed("d13_r12", &da, r));
            lhs == rhs
        })
    }
}
