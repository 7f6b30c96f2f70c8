use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::catalog::dual_numbers;
use crate::bundle::Bundle;
use crate::covariant::build_quasitriangular;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::hom::{check_hom_associativity, default_labels, induce_algebra_by_composition, HomAlgebra};
use crate::rota_baxter::{check_rb_system, check_weighted_rb};
use crate::tensor::{nullspace, BilinearMap, LinearMap, Tensor2};
use crate::yang_baxter::{check_yb_pair, YangBaxterPair};

pub const RANDOM_KINDS: &[&str] = &[
    "tensor2",
    "alpha-invariant-tensor2",
    "associative-algebra",
    "hom-algebra",
    "rb-system",
    "weighted-rb",
    "yb-pair",
    "covariant",
];

const ATTEMPTS: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RandomKind {
    /// Arbitrary `r`, `s` on a random Hom-algebra.
    Tensor2,
    /// `r`, `s` with `(α⊗α)t = t`.
    AlphaInvariantTensor2,
    /// Associative product with `α = id`, by rejection sampling.
    AssociativeAlgebra,
    HomAlgebra,
    RbSystem,
    WeightedRb,
    YbPair,
    /// A quasitriangular covariant Hom-bialgebra plus invariant `r`, `s` to
    /// perturb it with.
    Covariant,
}

impl FromStr for RandomKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "tensor2" => RandomKind::Tensor2,
            "alpha-invariant-tensor2" => RandomKind::AlphaInvariantTensor2,
            "associative-algebra" => RandomKind::AssociativeAlgebra,
            "hom-algebra" => RandomKind::HomAlgebra,
            "rb-system" => RandomKind::RbSystem,
            "weighted-rb" => RandomKind::WeightedRb,
            "yb-pair" => RandomKind::YbPair,
            "covariant" => RandomKind::Covariant,
            other => return Err(Error::UnknownName(other.to_string())),
        })
    }
}

impl RandomKind {
    fn index(self) -> u64 {
        self as u64
    }
}

/// A pseudo-random bundle fully determined by its arguments.
///
/// Hom-algebras are drawn from small associative families twisted by an
/// algebra endomorphism and then moved to a random basis. Operators and
/// tensors are sampled from the relevant linear constraint space and
/// filtered by the checkers, falling back to a constructive solution when no
/// sample passes.
pub fn random_instance(kind: RandomKind, field: FieldSpec, dim: usize, seed: u64) -> Result<Bundle> {
    if dim == 0 || dim > 4 {
        return Err(Error::UnsupportedDim(dim));
    }
    let stream = seed
        .wrapping_mul(0x9E37_79B9_7F4A_7C15)
        .wrapping_add(kind.index() << 8 | dim as u64);
    let mut g = Gen {
        field,
        rng: ChaCha8Rng::seed_from_u64(stream),
    };
    let base = if kind == RandomKind::AssociativeAlgebra {
        g.associative(dim)
    } else {
        g.hom_algebra(dim)?
    };
    let mut b = Bundle::from_algebra(&base).declaring(&["hom-algebra"]);
    match kind {
        RandomKind::HomAlgebra | RandomKind::AssociativeAlgebra => {}
        RandomKind::Tensor2 => {
            b.r = Some(g.tensor(dim));
            b.s = Some(g.tensor(dim));
        }
        RandomKind::AlphaInvariantTensor2 => {
            let space = invariant_subspace(&base);
            b.r = Some(g.combination(&space, Tensor2::zero(field, dim)));
            b.s = Some(g.combination(&space, Tensor2::zero(field, dim)));
        }
        RandomKind::RbSystem => {
            let (r, s) = g.rb_system(&base)?;
            b.rb_r = Some(r);
            b.rb_s = Some(s);
            b.declares.push("rb-system".into());
        }
        RandomKind::WeightedRb => {
            let (r, lambda) = g.weighted(&base)?;
            b.rb_r = Some(r);
            b.lambda = Some(lambda);
            b.declares.push("weighted-rb".into());
        }
        RandomKind::YbPair => {
            let (r, s) = g.yb_pair(&base)?;
            b.r = Some(r);
            b.s = Some(s);
            b.declares.push("yb-pair".into());
        }
        RandomKind::Covariant => {
            let (r0, s0) = g.yb_pair(&base)?;
            let qt = build_quasitriangular(&YangBaxterPair::new(base.clone(), r0, s0)?)?;
            b = Bundle::from_covariant(&qt).declaring(&["hom-algebra", "covariant-bialgebra"]);
            let space = invariant_subspace(&base);
            b.r = Some(g.combination(&space, Tensor2::zero(field, dim)));
            b.s = Some(g.combination(&space, Tensor2::zero(field, dim)));
        }
    }
    let label = RANDOM_KINDS[kind.index() as usize];
    Ok(b.named(&format!("random-{label}-{field}-{dim}-{seed}")))
}

/// Basis of `{t : (α⊗α)t = t}`.
pub fn invariant_subspace(a: &HomAlgebra) -> Vec<Tensor2> {
    let (f, n) = (a.field(), a.dim());
    let al = a.alpha();
    let delta = |x: usize, y: usize| if x == y { f.one() } else { f.zero() };
    let mut rows = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut row = Vec::with_capacity(n * n);
            for k in 0..n {
                for l in 0..n {
                    row.push(&(al.get(i, k) * al.get(j, l)) - &(&delta(i, k) * &delta(j, l)));
                }
            }
            rows.push(row);
        }
    }
    nullspace(f, &rows, n * n)
        .into_iter()
        .map(|v| Tensor2::new(f, n, v).expect("n² coordinates"))
        .collect()
}

/// Basis of `{R : α∘R = R∘α}`.
pub fn alpha_commutant(a: &HomAlgebra) -> Vec<LinearMap> {
    let (f, n) = (a.field(), a.dim());
    let al = a.alpha();
    let delta = |x: usize, y: usize| if x == y { f.one() } else { f.zero() };
    let mut rows = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut row = Vec::with_capacity(n * n);
            for k in 0..n {
                for l in 0..n {
                    row.push(&(al.get(i, k) * &delta(l, j)) - &(&delta(k, i) * al.get(l, j)));
                }
            }
            rows.push(row);
        }
    }
    nullspace(f, &rows, n * n)
        .into_iter()
        .map(|v| LinearMap::new(f, n, v).expect("n² coordinates"))
        .collect()
}

struct Gen {
    field: FieldSpec,
    rng: ChaCha8Rng,
}

impl Gen {
    fn scalar(&mut self) -> Scalar {
        match self.field {
            FieldSpec::Prime { p } => self.field.element(self.rng.gen_range(0..p)),
            FieldSpec::Rational => self.field.from_i64(self.rng.gen_range(-2..=2)),
        }
    }

    fn nonzero(&mut self) -> Scalar {
        loop {
            let x = self.scalar();
            if !x.is_zero() {
                return x;
            }
        }
    }

    fn scalars(&mut self, len: usize) -> Vec<Scalar> {
        (0..len).map(|_| self.scalar()).collect()
    }

    fn matrix(&mut self, n: usize) -> LinearMap {
        let data = self.scalars(n * n);
        LinearMap::new(self.field, n, data).expect("n² entries")
    }

    fn invertible(&mut self, n: usize) -> (LinearMap, LinearMap) {
        loop {
            let p = self.matrix(n);
            if let Some(inv) = p.inverse() {
                return (p, inv);
            }
        }
    }

    fn tensor(&mut self, n: usize) -> Tensor2 {
        let data = self.scalars(n * n);
        Tensor2::new(self.field, n, data).expect("n² entries")
    }

    fn combination<T: Combine>(&mut self, basis: &[T], zero: T) -> T {
        basis.iter().fold(zero, |acc, b| acc.plus(&b.times(&self.scalar())))
    }

    fn diag(&self, entries: &[Scalar]) -> LinearMap {
        let n = entries.len();
        let mut m = LinearMap::zero(self.field, n);
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    fn associative(&mut self, n: usize) -> HomAlgebra {
        let id = LinearMap::identity(self.field, n);
        for _ in 0..4 * ATTEMPTS {
            let mu = BilinearMap::new(self.field, n, self.scalars(n * n * n)).expect("n³ entries");
            if check_hom_associativity(&mu, &id).passed() {
                return HomAlgebra::unlabeled(mu, id).expect("square data");
            }
        }
        let (base, _) = self.family(n);
        let (p, q) = self.invertible(n);
        transport(&base, &p, &q)
    }

    fn hom_algebra(&mut self, n: usize) -> Result<HomAlgebra> {
        let (base, phi) = self.family(n);
        let induced = induce_algebra_by_composition(&base, &phi)?;
        let (p, q) = self.invertible(n);
        Ok(transport(&induced, &p, &q))
    }

    /// An associative algebra with an algebra endomorphism.
    fn family(&mut self, n: usize) -> (HomAlgebra, LinearMap) {
        let f = self.field;
        let one = f.one();
        let zero = f.zero();
        let pick = self.rng.gen_range(0..4);
        if pick == 0 {
            let phi = self.matrix(n);
            return (HomAlgebra::unlabeled(BilinearMap::zero(f, n), LinearMap::identity(f, n)).unwrap(), phi);
        }
        match n {
            1 => {
                let unit = HomAlgebra::unlabeled(BilinearMap::from_entries(f, 1, &[(0, 0, 0, 1)]), LinearMap::identity(f, 1));
                let c = if self.rng.gen_bool(0.5) { one } else { zero };
                (unit.unwrap(), self.diag(&[c]))
            }
            2 => match pick {
                1 | 2 => {
                    let c = self.scalar();
                    (relabel(dual_numbers(f)), self.diag(&[one, c]))
                }
                _ => {
                    let kk = BilinearMap::from_entries(f, 2, &[(0, 0, 0, 1), (1, 1, 1, 1)]);
                    let phi = if self.rng.gen_bool(0.5) {
                        LinearMap::from_i64(f, &[&[0, 1], &[1, 0]])
                    } else {
                        LinearMap::identity(f, 2)
                    };
                    (HomAlgebra::unlabeled(kk, LinearMap::identity(f, 2)).unwrap(), phi)
                }
            },
            3 => match self.rng.gen_range(0..4) {
                0 => {
                    // k[x]/(x³), x ↦ ax + bx²
                    let mu = BilinearMap::from_entries(
                        f,
                        3,
                        &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (0, 2, 2, 1), (2, 0, 2, 1), (1, 1, 2, 1)],
                    );
                    let (a, b) = (self.scalar(), self.scalar());
                    let mut phi = self.diag(&[one, a.clone(), &a * &a]);
                    phi.set(2, 1, b);
                    (HomAlgebra::unlabeled(mu, LinearMap::identity(f, 3)).unwrap(), phi)
                }
                1 => {
                    let mu = BilinearMap::from_entries(f, 3, &[(0, 0, 0, 1), (1, 1, 1, 1), (2, 2, 2, 1)]);
                    let cyc = LinearMap::from_i64(f, &[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]);
                    (HomAlgebra::unlabeled(mu, LinearMap::identity(f, 3)).unwrap(), cyc)
                }
                2 => {
                    // upper-triangular 2×2 on e11, e12, e22
                    let mu = BilinearMap::from_entries(f, 3, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 2, 1, 1), (2, 2, 2, 1)]);
                    let c = self.scalar();
                    (HomAlgebra::unlabeled(mu, LinearMap::identity(f, 3)).unwrap(), self.diag(&[one.clone(), c, one]))
                }
                _ => {
                    // dual numbers × k
                    let mu = BilinearMap::from_entries(f, 3, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (2, 2, 2, 1)]);
                    let c = self.scalar();
                    (HomAlgebra::unlabeled(mu, LinearMap::identity(f, 3)).unwrap(), self.diag(&[one.clone(), c, one]))
                }
            },
            _ => match self.rng.gen_range(0..3) {
                0 => {
                    let mu = BilinearMap::from_entries(f, 4, &[(0, 0, 0, 1), (1, 1, 1, 1), (2, 2, 2, 1), (3, 3, 3, 1)]);
                    let cyc = LinearMap::from_i64(f, &[&[0, 0, 0, 1], &[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]]);
                    (HomAlgebra::unlabeled(mu, LinearMap::identity(f, 4)).unwrap(), cyc)
                }
                1 => {
                    // k[x, y]/(x², y²) on 1, x, y, xy
                    let mu = BilinearMap::from_entries(
                        f,
                        4,
                        &[
                            (0, 0, 0, 1),
                            (0, 1, 1, 1),
                            (1, 0, 1, 1),
                            (0, 2, 2, 1),
                            (2, 0, 2, 1),
                            (0, 3, 3, 1),
                            (3, 0, 3, 1),
                            (1, 2, 3, 1),
                            (2, 1, 3, 1),
                        ],
                    );
                    let phi = if self.rng.gen_bool(0.5) {
                        LinearMap::from_i64(f, &[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]])
                    } else {
                        let (a, b) = (self.scalar(), self.scalar());
                        let ab = &a * &b;
                        self.diag(&[one, a, b, ab])
                    };
                    (HomAlgebra::unlabeled(mu, LinearMap::identity(f, 4)).unwrap(), phi)
                }
                _ => {
                    // dual numbers × dual numbers
                    let mu = BilinearMap::from_entries(
                        f,
                        4,
                        &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (2, 2, 2, 1), (2, 3, 3, 1), (3, 2, 3, 1)],
                    );
                    let (a, b) = (self.scalar(), self.scalar());
                    let phi = self.diag(&[one.clone(), a, one, b]);
                    (HomAlgebra::unlabeled(mu, LinearMap::identity(f, 4)).unwrap(), phi)
                }
            },
        }
    }

    fn shaped<T: Combine + Clone>(&mut self, basis: &[T], zero: &T) -> (T, T) {
        let r = self.combination(basis, zero.clone());
        match self.rng.gen_range(0..4) {
            0 => (r.clone(), r),
            1 => (r, zero.clone()),
            2 => (zero.clone(), r),
            _ => {
                let s = self.combination(basis, zero.clone());
                (r, s)
            }
        }
    }

    fn rb_system(&mut self, a: &HomAlgebra) -> Result<(LinearMap, LinearMap)> {
        let (f, n) = (a.field(), a.dim());
        let basis = alpha_commutant(a);
        let zero = LinearMap::zero(f, n);
        for _ in 0..ATTEMPTS {
            let (r, s) = self.shaped(&basis, &zero);
            if check_rb_system(a, &r, &s)?.passed() && !(r.is_zero() && s.is_zero()) {
                return Ok((r, s));
            }
        }
        let lambda = LinearMap::scalar(f, n, &self.nonzero());
        Ok(if self.rng.gen_bool(0.5) {
            (zero, lambda)
        } else {
            (lambda.neg(), zero)
        })
    }

    fn weighted(&mut self, a: &HomAlgebra) -> Result<(LinearMap, Scalar)> {
        let (f, n) = (a.field(), a.dim());
        let basis = alpha_commutant(a);
        let lambda = self.scalar();
        for _ in 0..ATTEMPTS {
            let r = self.combination(&basis, LinearMap::zero(f, n));
            if !r.is_zero() && check_weighted_rb(a, &r, &lambda)?.passed() {
                return Ok((r, lambda));
            }
        }
        Ok((LinearMap::scalar(f, n, &lambda).neg(), lambda))
    }

    fn yb_pair(&mut self, a: &HomAlgebra) -> Result<(Tensor2, Tensor2)> {
        let (f, n) = (a.field(), a.dim());
        let basis = invariant_subspace(a);
        let zero = Tensor2::zero(f, n);
        for _ in 0..2 * ATTEMPTS {
            let (r, s) = self.shaped(&basis, &zero);
            if check_yb_pair(a, &r, &s)?.passed() && !(r.is_zero() && s.is_zero()) {
                return Ok((r, s));
            }
        }
        Ok((zero.clone(), zero))
    }
}

fn relabel(a: HomAlgebra) -> HomAlgebra {
    HomAlgebra::new(default_labels(a.dim()), a.mu().clone(), a.alpha().clone()).expect("same shape")
}

/// The same structure in the basis `P e_i`, given `P` and `P⁻¹`.
fn transport(a: &HomAlgebra, p: &LinearMap, p_inv: &LinearMap) -> HomAlgebra {
    let mu = a.mu().pre_compose(p_inv, p_inv).post_compose(p);
    let alpha = p.compose(a.alpha()).compose(p_inv);
    HomAlgebra::unlabeled(mu, alpha).expect("square data")
}

trait Combine {
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, k: &Scalar) -> Self;
}

impl Combine for Tensor2 {
    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }

    fn times(&self, k: &Scalar) -> Self {
        self.scale(k)
    }
}

impl Combine for LinearMap {
    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }

    fn times(&self, k: &Scalar) -> Self {
        self.scale(k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use super::super::catalog::zero_algebra;
    use crate::hom::check_hom_algebra;
    use crate::yang_baxter::check_alpha_invariant;

    #[test]
    fn deterministic_bytes() {
        let f = FieldSpec::gf(5);
        let a = random_instance(RandomKind::Tensor2, f, 2, 1).unwrap().to_json_string();
        let b = random_instance(RandomKind::Tensor2, f, 2, 1).unwrap().to_json_string();
        assert_eq!(a, b);
        assert_ne!(a, random_instance(RandomKind::Tensor2, f, 2, 2).unwrap().to_json_string());
    }

    #[test]
    fn dimension_bound() {
        let f = FieldSpec::gf(5);
        assert!(matches!(random_instance(RandomKind::HomAlgebra, f, 5, 0), Err(Error::UnsupportedDim(5))));
        assert!(matches!(random_instance(RandomKind::HomAlgebra, f, 0, 0), Err(Error::UnsupportedDim(0))));
    }

    #[test]
    fn generated_structures_pass_their_checks() {
        for (p, dims) in [(2u64, 1..=4), (5, 1..=4), (3, 2..=3)] {
            let f = FieldSpec::gf(p);
            for dim in dims {
                for seed in 0..6 {
                    for name in RANDOM_KINDS {
                        let kind: RandomKind = name.parse().unwrap();
                        let b = random_instance(kind, f, dim, seed).unwrap();
                        b.validate().unwrap();
                        assert!(check_hom_algebra(&b.algebra()).passed() || kind == RandomKind::AssociativeAlgebra);
                        if kind == RandomKind::AlphaInvariantTensor2 {
                            let a = b.algebra();
                            assert!(check_alpha_invariant(&a, b.r.as_ref().unwrap()).unwrap().passed());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn associative_kind_is_associative() {
        let f = FieldSpec::gf(2);
        for seed in 0..20 {
            let b = random_instance(RandomKind::AssociativeAlgebra, f, 2, seed).unwrap();
            assert!(b.alpha.is_identity());
            assert!(check_hom_associativity(&b.mul, &b.alpha).passed());
        }
    }

    #[test]
    fn zero_algebra_commutant_is_everything() {
        let a = zero_algebra(FieldSpec::gf(3));
        assert_eq!(alpha_commutant(&a).len(), 4);
        assert_eq!(invariant_subspace(&a).len(), 4);
    }
}
