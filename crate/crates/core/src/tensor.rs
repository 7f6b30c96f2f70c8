//! Dense coordinate arrays for maps and tensors on a finite-dimensional space.
//!
//! Index conventions (fixed basis `e_0 … e_{n-1}`):
//!
//! * [`LinearMap`] `m[i][j]`: `f(e_j) = Σ_i m[i][j] e_i` (column convention).
//! * [`BilinearMap`] `c[i][j][k]`: `μ(e_i, e_j) = Σ_k c[i][j][k] e_k`.
//! * [`Tensor2`] `t[i][j]`: `Σ t[i][j] e_i ⊗ e_j`; [`Tensor3`] likewise.
//! * [`Coproduct`] `d[i][j][k]`: `△(e_i) = Σ_{j,k} d[i][j][k] e_j ⊗ e_k`.
//! * [`TwistorMap`] acts on the flattened coordinates of `A⊗A` (index
//!   `i*n + j`) and, through its companion, of `A⊗A⊗A`.
//!
//! Methods assume operands of matching dimension and field and panic
//! otherwise; the free functions at the bottom check and return errors.

use std::fmt;

use crate::error::{ensure_dim, Error, Result};
use crate::field::{FieldSpec, Scalar};

macro_rules! linear_space {
    ($ty:ident) => {
        impl $ty {
            pub fn field(&self) -> FieldSpec {
                self.field
            }

            pub fn dim(&self) -> usize {
                self.dim
            }

            /// Flattened coordinates in row-major index order.
            pub fn data(&self) -> &[Scalar] {
                &self.data
            }

            pub fn is_zero(&self) -> bool {
                self.data.iter().all(Scalar::is_zero)
            }

            pub fn add(&self, other: &Self) -> Self {
                self.zip(other, |a, b| a + b)
            }

            pub fn sub(&self, other: &Self) -> Self {
                self.zip(other, |a, b| a - b)
            }

            pub fn scale(&self, k: &Scalar) -> Self {
                Self {
                    field: self.field,
                    dim: self.dim,
                    data: self.data.iter().map(|x| x * k).collect(),
                }
            }

            pub fn neg(&self) -> Self {
                Self {
                    field: self.field,
                    dim: self.dim,
                    data: self.data.iter().map(|x| -x).collect(),
                }
            }

            fn zip(&self, other: &Self, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Self {
                assert_eq!(self.dim, other.dim, "dimension mismatch");
                assert_eq!(self.field, other.field, "field mismatch");
                Self {
                    field: self.field,
                    dim: self.dim,
                    data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
                }
            }

            fn from_data(field: FieldSpec, dim: usize, data: Vec<Scalar>, len: usize) -> Result<Self> {
                ensure_dim(stringify!($ty), len, data.len())?;
                if let Some(bad) = data.iter().find(|x| x.field() != field) {
                    return Err(Error::FieldMismatch {
                        left: field.to_string(),
                        right: bad.field().to_string(),
                    });
                }
                Ok(Self { field, dim, data })
            }
        }
    };
}

/// A coordinate vector of length `dim`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector {
    field: FieldSpec,
    dim: usize,
    data: Vec<Scalar>,
}

linear_space!(Vector);

impl Vector {
    pub fn new(field: FieldSpec, coords: Vec<Scalar>) -> Result<Self> {
        let n = coords.len();
        Self::from_data(field, n, coords, n)
    }

    pub fn zero(field: FieldSpec, dim: usize) -> Self {
        Self {
            field,
            dim,
            data: vec![field.zero(); dim],
        }
    }

    pub fn basis(field: FieldSpec, dim: usize, i: usize) -> Self {
        let mut v = Self::zero(field, dim);
        v.data[i] = field.one();
        v
    }

    pub fn from_i64(field: FieldSpec, coords: &[i64]) -> Self {
        Self {
            field,
            dim: coords.len(),
            data: coords.iter().map(|&c| field.from_i64(c)).collect(),
        }
    }

    pub fn get(&self, i: usize) -> &Scalar {
        &self.data[i]
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.data
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.data
    }
}

/// A linear map `A → A` stored column-convention.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearMap {
    field: FieldSpec,
    dim: usize,
    data: Vec<Scalar>,
}

linear_space!(LinearMap);

impl LinearMap {
    pub fn new(field: FieldSpec, dim: usize, entries: Vec<Scalar>) -> Result<Self> {
        Self::from_data(field, dim, entries, dim * dim)
    }

    /// Builds from integer rows, `rows[i][j] = m[i][j]`.
    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let n = rows.len();
        let data = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), n, "square matrix expected");
                r.iter().map(|&x| field.from_i64(x))
            })
            .collect();
        Self { field, dim: n, data }
    }

    /// The map sending `e_j` to `images[j]`.
    pub fn from_columns(field: FieldSpec, dim: usize, images: &[Vector]) -> Self {
        assert_eq!(images.len(), dim);
        let mut m = Self::zero(field, dim);
        for (j, img) in images.iter().enumerate() {
            for i in 0..dim {
                m.data[i * dim + j] = img.data[i].clone();
            }
        }
        m
    }

    pub fn zero(field: FieldSpec, dim: usize) -> Self {
        Self {
            field,
            dim,
            data: vec![field.zero(); dim * dim],
        }
    }

    pub fn identity(field: FieldSpec, dim: usize) -> Self {
        Self::scalar(field, dim, &field.one())
    }

    pub fn scalar(field: FieldSpec, dim: usize, k: &Scalar) -> Self {
        let mut m = Self::zero(field, dim);
        for i in 0..dim {
            m.data[i * dim + i] = k.clone();
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.dim + j] = v;
    }

    /// Image of the basis vector `e_j`.
    pub fn column(&self, j: usize) -> Vector {
        Vector {
            field: self.field,
            dim: self.dim,
            data: (0..self.dim).map(|i| self.get(i, j).clone()).collect(),
        }
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        assert_eq!(v.dim, self.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = Vector::zero(self.field, n);
        for j in 0..n {
            if v.data[j].is_zero() {
                continue;
            }
            for i in 0..n {
                out.data[i].add_product(&self.data[i * n + j], &v.data[j]);
            }
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> LinearMap {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = Self::zero(self.field, n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j].add_product(a, &other.data[k * n + j]);
                }
            }
        }
        out
    }

    /// `self^k` by repeated exact multiplication.
    pub fn pow(&self, k: u32) -> LinearMap {
        (0..k).fold(Self::identity(self.field, self.dim), |acc, _| acc.compose(self))
    }

    pub fn transpose(&self) -> LinearMap {
        let n = self.dim;
        let mut out = Self::zero(self.field, n);
        for i in 0..n {
            for j in 0..n {
                out.data[j * n + i] = self.data[i * n + j].clone();
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.field, self.dim)
    }

    pub fn commutes_with(&self, other: &LinearMap) -> bool {
        self.compose(other) == other.compose(self)
    }

    pub fn inverse(&self) -> Option<LinearMap> {
        let n = self.dim;
        let mut aug: Vec<Vec<Scalar>> = (0..n)
            .map(|i| {
                let mut row: Vec<Scalar> = self.data[i * n..(i + 1) * n].to_vec();
                row.extend((0..n).map(|j| if i == j { self.field.one() } else { self.field.zero() }));
                row
            })
            .collect();
        let pivots = row_reduce(&mut aug, n);
        if pivots.len() < n {
            return None;
        }
        let data = aug.iter().flat_map(|r| r[n..].iter().cloned()).collect();
        Some(Self { field: self.field, dim: n, data })
    }
}

/// Reduced row echelon form over the first `cols` columns; returns pivot columns.
pub(crate) fn row_reduce(rows: &mut [Vec<Scalar>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inverse().expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let k = rows[i][c].clone();
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                    *x = &*x - &(&k * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

/// Basis of `{x : M x = 0}` for an `m × cols` matrix given by rows.
pub fn nullspace(field: FieldSpec, rows: &[Vec<Scalar>], cols: usize) -> Vec<Vec<Scalar>> {
    let mut m = rows.to_vec();
    let pivots = row_reduce(&mut m, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![field.zero(); cols];
            x[f] = field.one();
            for (r, &pc) in pivots.iter().enumerate() {
                x[pc] = -&m[r][f];
            }
            x
        })
        .collect()
}

/// A bilinear product `A × A → A` given by structure constants.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BilinearMap {
    field: FieldSpec,
    dim: usize,
    data: Vec<Scalar>,
}

linear_space!(BilinearMap);

impl BilinearMap {
    pub fn new(field: FieldSpec, dim: usize, constants: Vec<Scalar>) -> Result<Self> {
        Self::from_data(field, dim, constants, dim * dim * dim)
    }

    pub fn zero(field: FieldSpec, dim: usize) -> Self {
        Self {
            field,
            dim,
            data: vec![field.zero(); dim * dim * dim],
        }
    }

    /// Sets `μ(e_i, e_j) = Σ coeff·e_k` from `(i, j, k, coeff)` entries.
    pub fn from_entries(field: FieldSpec, dim: usize, entries: &[(usize, usize, usize, i64)]) -> Self {
        let mut m = Self::zero(field, dim);
        for &(i, j, k, c) in entries {
            m.data[(i * dim + j) * dim + k] = field.from_i64(c);
        }
        m
    }

    pub fn from_fn(field: FieldSpec, dim: usize, mut f: impl FnMut(usize, usize) -> Vector) -> Self {
        let mut m = Self::zero(field, dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = f(i, j);
                let base = (i * dim + j) * dim;
                m.data[base..base + dim].clone_from_slice(&v.data);
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[(i * self.dim + j) * self.dim + k]
    }

    /// `μ(e_i, e_j)`.
    pub fn product(&self, i: usize, j: usize) -> Vector {
        let base = (i * self.dim + j) * self.dim;
        Vector {
            field: self.field,
            dim: self.dim,
            data: self.data[base..base + self.dim].to_vec(),
        }
    }

    pub fn eval(&self, x: &Vector, y: &Vector) -> Vector {
        assert!(x.dim == self.dim && y.dim == self.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = Vector::zero(self.field, n);
        for i in 0..n {
            if x.data[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y.data[j].is_zero() {
                    continue;
                }
                let xy = &x.data[i] * &y.data[j];
                let base = (i * n + j) * n;
                for k in 0..n {
                    out.data[k].add_product(&xy, &self.data[base + k]);
                }
            }
        }
        out
    }

    /// `f ∘ μ`.
    pub fn post_compose(&self, f: &LinearMap) -> BilinearMap {
        Self::from_fn(self.field, self.dim, |i, j| f.apply(&self.product(i, j)))
    }

    /// `μ ∘ (f ⊗ g)`.
    pub fn pre_compose(&self, f: &LinearMap, g: &LinearMap) -> BilinearMap {
        Self::from_fn(self.field, self.dim, |i, j| self.eval(&f.column(i), &g.column(j)))
    }

    /// `μ ∘ T` for a map `T` on `A⊗A`.
    pub fn compose_twistor(&self, t: &TwistorMap) -> BilinearMap {
        let n = self.dim;
        Self::from_fn(self.field, n, |i, j| {
            let img = t.apply(&Tensor2::basis(self.field, n, i, j));
            img.contract(self)
        })
    }

    /// `μᵒᵖ(a, b) = μ(b, a)`.
    pub fn opposite(&self) -> BilinearMap {
        Self::from_fn(self.field, self.dim, |i, j| self.product(j, i))
    }

    /// The transpose coproduct on the dual space: `d*[i][j][k] = c[j][k][i]`.
    pub fn dual_coproduct(&self) -> Coproduct {
        let n = self.dim;
        let mut d = Coproduct::zero(self.field, n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    d.data[(i * n + j) * n + k] = self.get(j, k, i).clone();
                }
            }
        }
        d
    }
}

/// An element of `A⊗A`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor2 {
    field: FieldSpec,
    dim: usize,
    data: Vec<Scalar>,
}

linear_space!(Tensor2);

impl Tensor2 {
    pub fn new(field: FieldSpec, dim: usize, coeffs: Vec<Scalar>) -> Result<Self> {
        Self::from_data(field, dim, coeffs, dim * dim)
    }

    pub fn zero(field: FieldSpec, dim: usize) -> Self {
        Self {
            field,
            dim,
            data: vec![field.zero(); dim * dim],
        }
    }

    pub fn basis(field: FieldSpec, dim: usize, i: usize, j: usize) -> Self {
        let mut t = Self::zero(field, dim);
        t.data[i * dim + j] = field.one();
        t
    }

    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let m = LinearMap::from_i64(field, rows);
        Self {
            field,
            dim: m.dim,
            data: m.data,
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.dim + j] = v;
    }

    /// `x ⊗ y`.
    pub fn outer(x: &Vector, y: &Vector) -> Tensor2 {
        assert_eq!(x.dim, y.dim, "dimension mismatch");
        let n = x.dim;
        let mut t = Self::zero(x.field, n);
        for i in 0..n {
            for j in 0..n {
                t.data[i * n + j] = &x.data[i] * &y.data[j];
            }
        }
        t
    }

    /// Nonzero coefficients `(i, j, t[i][j])`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> + '_ {
        let n = self.dim;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(idx, c)| (idx / n, idx % n, c))
    }

    /// `(f ⊗ g)(t)`.
    pub fn map(&self, f: &LinearMap, g: &LinearMap) -> Tensor2 {
        let n = self.dim;
        let mut out = Self::zero(self.field, n);
        for (i, j, c) in self.terms() {
            for a in 0..n {
                let fa = f.get(a, i);
                if fa.is_zero() {
                    continue;
                }
                let cf = c * fa;
                for b in 0..n {
                    out.data[a * n + b].add_product(&cf, g.get(b, j));
                }
            }
        }
        out
    }

    /// `μ(t) = Σ t[i][j] μ(e_i, e_j)`.
    pub fn contract(&self, mu: &BilinearMap) -> Vector {
        let n = self.dim;
        let mut out = Vector::zero(self.field, n);
        for (i, j, c) in self.terms() {
            for k in 0..n {
                out.data[k].add_product(c, mu.get(i, j, k));
            }
        }
        out
    }

    /// `(△ ⊗ g)(t)`.
    pub fn coproduct_left(&self, delta: &Coproduct, g: &LinearMap) -> Tensor3 {
        let n = self.dim;
        let mut out = Tensor3::zero(self.field, n);
        for (i, j, c) in self.terms() {
            let left = delta.of_basis(i).scale(c);
            let right = g.column(j);
            out.add_outer_2_1(&left, &right);
        }
        out
    }

    /// `(f ⊗ △)(t)`.
    pub fn coproduct_right(&self, f: &LinearMap, delta: &Coproduct) -> Tensor3 {
        let n = self.dim;
        let mut out = Tensor3::zero(self.field, n);
        for (i, j, c) in self.terms() {
            let left = f.column(i).scale(c);
            let right = delta.of_basis(j);
            out.add_outer_1_2(&left, &right);
        }
        out
    }

    /// The flip `b ⊗ a` of `a ⊗ b`.
    pub fn swap(&self) -> Tensor2 {
        let n = self.dim;
        let mut out = Self::zero(self.field, n);
        for i in 0..n {
            for j in 0..n {
                out.data[j * n + i] = self.data[i * n + j].clone();
            }
        }
        out
    }
}

/// An element of `A⊗A⊗A`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor3 {
    field: FieldSpec,
    dim: usize,
    data: Vec<Scalar>,
}

linear_space!(Tensor3);

impl Tensor3 {
    pub fn new(field: FieldSpec, dim: usize, coeffs: Vec<Scalar>) -> Result<Self> {
        Self::from_data(field, dim, coeffs, dim * dim * dim)
    }

    pub fn zero(field: FieldSpec, dim: usize) -> Self {
        Self {
            field,
            dim,
            data: vec![field.zero(); dim * dim * dim],
        }
    }

    pub fn basis(field: FieldSpec, dim: usize, i: usize, j: usize, k: usize) -> Self {
        let mut t = Self::zero(field, dim);
        t.data[(i * dim + j) * dim + k] = field.one();
        t
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[(i * self.dim + j) * self.dim + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let n = self.dim;
        self.data[(i * n + j) * n + k] = v;
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> + '_ {
        let n = self.dim;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(idx, c)| (idx / (n * n), (idx / n) % n, idx % n, c))
    }

    /// `x ⊗ y ⊗ z`.
    pub fn outer(x: &Vector, y: &Vector, z: &Vector) -> Tensor3 {
        let mut t = Self::zero(x.field, x.dim);
        t.add_outer(x, y, z);
        t
    }

    /// `self += x ⊗ y ⊗ z`.
    pub fn add_outer(&mut self, x: &Vector, y: &Vector, z: &Vector) {
        let n = self.dim;
        for i in 0..n {
            if x.data[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y.data[j].is_zero() {
                    continue;
                }
                let xy = &x.data[i] * &y.data[j];
                for k in 0..n {
                    self.data[(i * n + j) * n + k].add_product(&xy, &z.data[k]);
                }
            }
        }
    }

    /// `self += t ⊗ z`.
    pub fn add_outer_2_1(&mut self, t: &Tensor2, z: &Vector) {
        let n = self.dim;
        for (i, j, c) in t.terms() {
            for k in 0..n {
                self.data[(i * n + j) * n + k].add_product(c, &z.data[k]);
            }
        }
    }

    /// `self += x ⊗ t`.
    pub fn add_outer_1_2(&mut self, x: &Vector, t: &Tensor2) {
        let n = self.dim;
        for i in 0..n {
            if x.data[i].is_zero() {
                continue;
            }
            for (j, k, c) in t.terms() {
                self.data[(i * n + j) * n + k].add_product(&x.data[i], c);
            }
        }
    }

    /// `(f ⊗ g ⊗ h)(t)`.
    pub fn map(&self, f: &LinearMap, g: &LinearMap, h: &LinearMap) -> Tensor3 {
        let mut out = Self::zero(self.field, self.dim);
        for (i, j, k, c) in self.terms() {
            out.add_outer(&f.column(i).scale(c), &g.column(j), &h.column(k));
        }
        out
    }

    /// `(μ ⊗ h)(t)`.
    pub fn contract_left(&self, mu: &BilinearMap, h: &LinearMap) -> Tensor2 {
        let n = self.dim;
        let mut out = Tensor2::zero(self.field, n);
        for (i, j, k, c) in self.terms() {
            let left = mu.product(i, j).scale(c);
            out = out.add(&Tensor2::outer(&left, &h.column(k)));
        }
        out
    }

    /// `(f ⊗ μ)(t)`.
    pub fn contract_right(&self, f: &LinearMap, mu: &BilinearMap) -> Tensor2 {
        let n = self.dim;
        let mut out = Tensor2::zero(self.field, n);
        for (i, j, k, c) in self.terms() {
            let left = f.column(i).scale(c);
            out = out.add(&Tensor2::outer(&left, &mu.product(j, k)));
        }
        out
    }
}

/// A linear map `A → A⊗A`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coproduct {
    field: FieldSpec,
    dim: usize,
    data: Vec<Scalar>,
}

linear_space!(Coproduct);

impl Coproduct {
    pub fn new(field: FieldSpec, dim: usize, coeffs: Vec<Scalar>) -> Result<Self> {
        Self::from_data(field, dim, coeffs, dim * dim * dim)
    }

    pub fn zero(field: FieldSpec, dim: usize) -> Self {
        Self {
            field,
            dim,
            data: vec![field.zero(); dim * dim * dim],
        }
    }

    /// The coproduct with `△(e_i) = images[i]`.
    pub fn from_fn(field: FieldSpec, dim: usize, mut f: impl FnMut(usize) -> Tensor2) -> Self {
        let mut d = Self::zero(field, dim);
        let sq = dim * dim;
        for i in 0..dim {
            let t = f(i);
            d.data[i * sq..(i + 1) * sq].clone_from_slice(&t.data);
        }
        d
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[(i * self.dim + j) * self.dim + k]
    }

    /// `△(e_i)`.
    pub fn of_basis(&self, i: usize) -> Tensor2 {
        let sq = self.dim * self.dim;
        Tensor2 {
            field: self.field,
            dim: self.dim,
            data: self.data[i * sq..(i + 1) * sq].to_vec(),
        }
    }

    pub fn eval(&self, a: &Vector) -> Tensor2 {
        assert_eq!(a.dim, self.dim, "dimension mismatch");
        let n = self.dim;
        let sq = n * n;
        let mut out = Tensor2::zero(self.field, n);
        for i in 0..n {
            if a.data[i].is_zero() {
                continue;
            }
            for idx in 0..sq {
                out.data[idx].add_product(&a.data[i], &self.data[i * sq + idx]);
            }
        }
        out
    }

    /// `△ ∘ f`.
    pub fn compose_right(&self, f: &LinearMap) -> Coproduct {
        Self::from_fn(self.field, self.dim, |i| self.eval(&f.column(i)))
    }

    /// `(f ⊗ g) ∘ △`.
    pub fn compose_left(&self, f: &LinearMap, g: &LinearMap) -> Coproduct {
        Self::from_fn(self.field, self.dim, |i| self.of_basis(i).map(f, g))
    }

    /// The transpose product on the dual space: `c*[i][j][k] = d[k][i][j]`.
    pub fn dual_product(&self) -> BilinearMap {
        let n = self.dim;
        let mut c = BilinearMap::zero(self.field, n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    c.data[(i * n + j) * n + k] = self.get(k, i, j).clone();
                }
            }
        }
        c
    }
}

/// A linear map `T` on `A⊗A`, with an optional companion `τ` on `A⊗A⊗A`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwistorMap {
    field: FieldSpec,
    dim: usize,
    data: Vec<Scalar>,
    companion: Option<Vec<Scalar>>,
}

impl TwistorMap {
    /// `matrix` is `(n²)×(n²)` row-major, column convention on flattened `A⊗A`.
    pub fn new(
        field: FieldSpec,
        dim: usize,
        matrix: Vec<Scalar>,
        companion: Option<Vec<Scalar>>,
    ) -> Result<Self> {
        let sq = dim * dim;
        ensure_dim("TwistorMap", sq * sq, matrix.len())?;
        if let Some(c) = &companion {
            let cube = sq * dim;
            ensure_dim("TwistorMap companion", cube * cube, c.len())?;
        }
        let all = matrix.iter().chain(companion.iter().flatten());
        if let Some(bad) = all.into_iter().find(|x| x.field() != field) {
            return Err(Error::FieldMismatch {
                left: field.to_string(),
                right: bad.field().to_string(),
            });
        }
        Ok(Self {
            field,
            dim,
            data: matrix,
            companion,
        })
    }

    pub fn zero(field: FieldSpec, dim: usize, with_companion: bool) -> Self {
        let sq = dim * dim;
        let cube = sq * dim;
        Self {
            field,
            dim,
            data: vec![field.zero(); sq * sq],
            companion: with_companion.then(|| vec![field.zero(); cube * cube]),
        }
    }

    /// Builds `T` from its images of basis tensors and `τ` from its images of
    /// basis triples.
    pub fn from_fns(
        field: FieldSpec,
        dim: usize,
        mut t: impl FnMut(usize, usize) -> Tensor2,
        tau: Option<&mut dyn FnMut(usize, usize, usize) -> Tensor3>,
    ) -> Self {
        let n = dim;
        let sq = n * n;
        let mut data = vec![field.zero(); sq * sq];
        for i in 0..n {
            for j in 0..n {
                let col = i * n + j;
                for (row, c) in t(i, j).data.into_iter().enumerate() {
                    data[row * sq + col] = c;
                }
            }
        }
        let companion = tau.map(|tau| {
            let cube = sq * n;
            let mut m = vec![field.zero(); cube * cube];
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let col = (i * n + j) * n + k;
                        for (row, c) in tau(i, j, k).data.into_iter().enumerate() {
                            m[row * cube + col] = c;
                        }
                    }
                }
            }
            m
        });
        Self {
            field,
            dim,
            data,
            companion,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &[Scalar] {
        &self.data
    }

    pub fn companion(&self) -> Option<&[Scalar]> {
        self.companion.as_deref()
    }

    pub fn has_companion(&self) -> bool {
        self.companion.is_some()
    }

    pub fn without_companion(&self) -> TwistorMap {
        Self {
            companion: None,
            ..self.clone()
        }
    }

    pub fn apply(&self, t: &Tensor2) -> Tensor2 {
        assert_eq!(t.dim, self.dim, "dimension mismatch");
        Tensor2 {
            field: self.field,
            dim: self.dim,
            data: mat_vec(&self.data, &t.data, self.field),
        }
    }

    pub fn apply_companion(&self, t: &Tensor3) -> Result<Tensor3> {
        ensure_dim("companion input", self.dim, t.dim)?;
        let tau = self.companion.as_ref().ok_or(Error::MissingCompanion)?;
        Ok(Tensor3 {
            field: self.field,
            dim: self.dim,
            data: mat_vec(tau, &t.data, self.field),
        })
    }

    /// `(T ⊗ id)(t)` on `A⊗A⊗A`.
    pub fn apply_left(&self, t: &Tensor3) -> Tensor3 {
        let n = self.dim;
        let mut out = Tensor3::zero(self.field, n);
        for (i, j, k, c) in t.terms() {
            let img = self.apply(&Tensor2::basis(self.field, n, i, j)).scale(c);
            out.add_outer_2_1(&img, &Vector::basis(self.field, n, k));
        }
        out
    }

    /// `(id ⊗ T)(t)` on `A⊗A⊗A`.
    pub fn apply_right(&self, t: &Tensor3) -> Tensor3 {
        let n = self.dim;
        let mut out = Tensor3::zero(self.field, n);
        for (i, j, k, c) in t.terms() {
            let img = self.apply(&Tensor2::basis(self.field, n, j, k)).scale(c);
            out.add_outer_1_2(&Vector::basis(self.field, n, i), &img);
        }
        out
    }
}

fn mat_vec(m: &[Scalar], v: &[Scalar], field: FieldSpec) -> Vec<Scalar> {
    let n = v.len();
    let mut out = vec![field.zero(); n];
    for (col, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (row, o) in out.iter_mut().enumerate() {
            o.add_product(&m[row * n + col], x);
        }
    }
    out
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.data.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

pub fn apply_linear(f: &LinearMap, v: &Vector) -> Result<Vector> {
    ensure_dim("apply_linear", f.dim(), v.dim())?;
    Ok(f.apply(v))
}

pub fn bilinear_eval(mu: &BilinearMap, x: &Vector, y: &Vector) -> Result<Vector> {
    ensure_dim("bilinear_eval", mu.dim(), x.dim())?;
    ensure_dim("bilinear_eval", mu.dim(), y.dim())?;
    Ok(mu.eval(x, y))
}

pub fn map_tensor2(f: &LinearMap, g: &LinearMap, t: &Tensor2) -> Result<Tensor2> {
    ensure_dim("map_tensor2", t.dim(), f.dim())?;
    ensure_dim("map_tensor2", t.dim(), g.dim())?;
    Ok(t.map(f, g))
}

pub fn map_tensor3(f: &LinearMap, g: &LinearMap, h: &LinearMap, t: &Tensor3) -> Result<Tensor3> {
    for m in [f, g, h] {
        ensure_dim("map_tensor3", t.dim(), m.dim())?;
    }
    Ok(t.map(f, g, h))
}

pub fn coproduct_eval(delta: &Coproduct, a: &Vector) -> Result<Tensor2> {
    ensure_dim("coproduct_eval", delta.dim(), a.dim())?;
    Ok(delta.eval(a))
}

pub fn apply_twistor(t: &TwistorMap, x: &Tensor2) -> Result<Tensor2> {
    ensure_dim("apply_twistor", t.dim(), x.dim())?;
    Ok(t.apply(x))
}

pub fn apply_twistor3(t: &TwistorMap, x: &Tensor3) -> Result<Tensor3> {
    t.apply_companion(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rational
    }

    /// Dual numbers `K[x]/(x²)` with basis `(1, x)`.
    fn dual_numbers(f: FieldSpec) -> BilinearMap {
        BilinearMap::from_entries(f, 2, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)])
    }

    #[test]
    fn identity_and_diagonal() {
        let v = Vector::from_i64(q(), &[3, -4]);
        assert_eq!(LinearMap::identity(q(), 2).apply(&v), v);
        let alpha = LinearMap::from_i64(q(), &[&[1, 0], &[0, 2]]);
        let e2 = Vector::basis(q(), 2, 1);
        assert_eq!(alpha.apply(&e2), Vector::from_i64(q(), &[0, 2]));
        assert_eq!(alpha.apply(&alpha.apply(&e2)), Vector::from_i64(q(), &[0, 4]));
        assert_eq!(alpha.pow(2).apply(&e2), Vector::from_i64(q(), &[0, 4]));
    }

    #[test]
    fn column_convention() {
        // f(e_0) = e_1: the coefficient of e_1 in f(e_0) is m[1][0].
        let f = LinearMap::from_i64(q(), &[&[0, 0], &[1, 0]]);
        assert_eq!(f.apply(&Vector::basis(q(), 2, 0)), Vector::basis(q(), 2, 1));
    }

    #[test]
    fn bilinear_on_dual_numbers() {
        let d = dual_numbers(q());
        let one_plus_x = Vector::from_i64(q(), &[1, 1]);
        assert_eq!(d.eval(&one_plus_x, &one_plus_x), Vector::from_i64(q(), &[1, 2]));
        let x = Vector::basis(q(), 2, 1);
        assert!(d.eval(&x, &x).is_zero());
        let z = BilinearMap::zero(q(), 2);
        assert!(z.eval(&one_plus_x, &x).is_zero());
    }

    #[test]
    fn tensor_maps() {
        let t = Tensor2::from_i64(q(), &[&[1, 2], &[3, 4]]);
        let id = LinearMap::identity(q(), 2);
        assert_eq!(t.map(&id, &id), t);
        let alpha = LinearMap::from_i64(q(), &[&[1, 0], &[0, 0]]);
        assert!(Tensor2::basis(q(), 2, 0, 1).map(&alpha, &alpha).is_zero());
        let f5 = FieldSpec::gf(5);
        let alpha = LinearMap::from_i64(f5, &[&[1, 0], &[0, 2]]);
        let r = Tensor2::basis(f5, 2, 0, 0);
        assert_eq!(r.map(&alpha, &alpha), r);
    }

    #[test]
    fn inverse_and_nullspace() {
        let f = FieldSpec::gf(5);
        let m = LinearMap::from_i64(f, &[&[1, 2], &[3, 4]]);
        let inv = m.inverse().unwrap();
        assert!(m.compose(&inv).is_identity());
        let sing = LinearMap::from_i64(f, &[&[1, 2], &[2, 4]]);
        assert!(sing.inverse().is_none());
        let rows = vec![vec![f.one(), f.from_i64(2)], vec![f.from_i64(2), f.from_i64(4)]];
        let ns = nullspace(f, &rows, 2);
        assert_eq!(ns.len(), 1);
        let v = Vector::new(f, ns[0].clone()).unwrap();
        assert!(sing.apply(&v).is_zero());
    }

    #[test]
    fn shape_errors() {
        assert!(matches!(
            Tensor2::new(q(), 2, vec![q().zero(); 3]),
            Err(Error::DimMismatch { .. })
        ));
        let f = LinearMap::identity(q(), 2);
        let v = Vector::zero(q(), 3);
        assert!(matches!(apply_linear(&f, &v), Err(Error::DimMismatch { .. })));
        let t = TwistorMap::zero(q(), 2, false);
        assert!(matches!(
            apply_twistor3(&t, &Tensor3::zero(q(), 2)),
            Err(Error::MissingCompanion)
        ));
    }

    #[test]
    fn dual_transposes_are_involutive() {
        let f = FieldSpec::gf(7);
        let mu = BilinearMap::from_entries(f, 2, &[(0, 1, 0, 3), (1, 1, 1, 2), (1, 0, 0, 5)]);
        assert_eq!(mu.dual_coproduct().dual_product(), mu);
    }
}
