use super::{check_covariant_hom_bialgebra, check_derivation, tensor_power_bimodule, BimoduleActions, CovariantHomBialgebra};
use crate::error::{ensure_dim, Error, Result};
use crate::hom::{coassociativity_defect, HomAlgebra};
use crate::report::CheckReport;
use crate::tensor::{Coproduct, Tensor2, Tensor3, Vector};
use crate::yang_baxter::{check_yb_pair, invariance_into, yb_sums_unchecked, YangBaxterPair};

/// `(a·t₁ ⊗ α(t₂), α(t₁) ⊗ t₂·a)`.
pub fn lr_tensor_products(x: &Vector, t: &Tensor2, a: &HomAlgebra) -> Result<(Tensor2, Tensor2)> {
    ensure_dim("vector", a.dim(), x.dim())?;
    ensure_dim("tensor", a.dim(), t.dim())?;
    Ok((left_product(x, t, a), right_product(x, t, a)))
}

fn left_product(x: &Vector, t: &Tensor2, a: &HomAlgebra) -> Tensor2 {
    let mut out = Tensor2::zero(a.field(), a.dim());
    for (i, j, c) in t.terms() {
        out = out.add(&Tensor2::outer(&a.mul(x, &a.unit_vector(i)).scale(c), &a.alpha().column(j)));
    }
    out
}

fn right_product(x: &Vector, t: &Tensor2, a: &HomAlgebra) -> Tensor2 {
    let mut out = Tensor2::zero(a.field(), a.dim());
    for (i, j, c) in t.terms() {
        out = out.add(&Tensor2::outer(&a.alpha().column(i).scale(c), &a.mul(&a.unit_vector(j), x)));
    }
    out
}

/// `△′(a) = ar − sa`, `δ_r(a) = ar − ra`, `δ_s(a) = as − sa`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasitriangularMaps {
    pub delta: Coproduct,
    pub delta_r: Coproduct,
    pub delta_s: Coproduct,
}

pub(crate) fn ensure_invariant(a: &HomAlgebra, r: &Tensor2, s: &Tensor2) -> Result<()> {
    ensure_dim("tensor", a.dim(), r.dim())?;
    ensure_dim("tensor", a.dim(), s.dim())?;
    let mut report = CheckReport::new("alpha-invariance");
    invariance_into(&mut report, "r-alpha-invariant", a.alpha(), r);
    invariance_into(&mut report, "s-alpha-invariant", a.alpha(), s);
    report.ok_or(Error::NotInvariant)
}

pub(crate) fn maps_unchecked(a: &HomAlgebra, r: &Tensor2, s: &Tensor2) -> QuasitriangularMaps {
    let (f, n) = (a.field(), a.dim());
    let e = |i: usize| a.unit_vector(i);
    QuasitriangularMaps {
        delta: Coproduct::from_fn(f, n, |i| left_product(&e(i), r, a).sub(&right_product(&e(i), s, a))),
        delta_r: Coproduct::from_fn(f, n, |i| left_product(&e(i), r, a).sub(&right_product(&e(i), r, a))),
        delta_s: Coproduct::from_fn(f, n, |i| left_product(&e(i), s, a).sub(&right_product(&e(i), s, a))),
    }
}

/// The three coproducts of an α-invariant pair; `δ_r`, `δ_s` are verified to
/// be derivations.
pub fn quasitriangular_maps(a: &HomAlgebra, r: &Tensor2, s: &Tensor2) -> Result<QuasitriangularMaps> {
    ensure_invariant(a, r, s)?;
    let maps = maps_unchecked(a, r, s);
    let mut post = CheckReport::new("quasitriangular-maps");
    post.absorb("delta_r", check_derivation(a, &maps.delta_r)?);
    post.absorb("delta_s", check_derivation(a, &maps.delta_s)?);
    let mut commute = CheckReport::new("alpha-commutes");
    crate::hom::comultiplicativity_into(&mut commute, "alpha-commutes", &maps.delta, a.alpha());
    post.absorb("delta", commute);
    post.ok_or(Error::Postcondition)?;
    Ok(maps)
}

/// `(△⊗α)(△a) − (α⊗△)(△a)` for each basis vector.
pub fn coassoc_defect(alpha: &crate::tensor::LinearMap, delta: &Coproduct) -> Result<Vec<Tensor3>> {
    ensure_dim("coproduct", alpha.dim(), delta.dim())?;
    Ok(coassociativity_defect(delta, alpha))
}

pub(crate) fn act_left3(bm: &BimoduleActions, x: &Vector, t: &Tensor3) -> Tensor3 {
    let data = bm.act_left(x.coords(), t.data());
    Tensor3::new(x.field(), t.dim(), data).expect("shape preserved")
}

pub(crate) fn act_right3(bm: &BimoduleActions, t: &Tensor3, x: &Vector) -> Tensor3 {
    let data = bm.act_right(t.data(), x.coords());
    Tensor3::new(x.field(), t.dim(), data).expect("shape preserved")
}

/// `a•(r₁₃r₁₂ − r₁₂r₂₃ + s₂₃r₁₃) = (s₁₃r₁₂ − s₁₂s₂₃ + s₂₃s₁₃)•a` on basis
/// vectors, plus the identity expressing the coassociativity defect of `△′`
/// as the difference of the two sides.
pub fn check_quasitriangular_condition(a: &HomAlgebra, r: &Tensor2, s: &Tensor2) -> Result<CheckReport> {
    ensure_invariant(a, r, s)?;
    let bm = tensor_power_bimodule(a, 3)?;
    let (sum_r, sum_s) = yb_sums_unchecked(a, r, s);
    let maps = maps_unchecked(a, r, s);
    let defect = coassociativity_defect(&maps.delta, a.alpha());
    let mut report = CheckReport::new("quasitriangular-condition");
    let mut sides = Vec::new();
    for i in 0..a.dim() {
        let x = a.unit_vector(i);
        let lhs = act_left3(&bm, &x, &sum_r);
        let rhs = act_right3(&bm, &sum_s, &x);
        report.compare("quasi-rs", &[i], lhs.data(), rhs.data());
        sides.push(lhs.sub(&rhs));
    }
    for (i, diff) in sides.iter().enumerate() {
        report.compare("defect-identity", &[i], defect[i].data(), diff.data());
    }
    Ok(report)
}

/// `(A, α, μ, △′, δ_r, δ_s)` for a Hom-Yang-Baxter pair.
pub fn build_quasitriangular(pair: &YangBaxterPair) -> Result<CovariantHomBialgebra> {
    let maps = quasitriangular_maps(pair.base(), pair.r(), pair.s())?;
    let out = CovariantHomBialgebra {
        base: pair.base().clone(),
        delta: maps.delta,
        delta1: maps.delta_r,
        delta2: maps.delta_s,
    };
    check_covariant_hom_bialgebra(&out)?.ok_or(Error::Postcondition)?;
    Ok(out)
}

/// The three equivalent conditions, each with its own report.
#[derive(Clone, Debug)]
pub struct Characterization {
    /// `(r, s)` is a Hom-Yang-Baxter pair.
    pub pair: CheckReport,
    /// `(α⊗△′)(r) = r₁₃r₁₂` and `(△′⊗α)(s) = −s₂₃s₁₃`.
    pub coproduct: CheckReport,
    /// Both dual-map diagrams commute on the dual basis.
    pub diagrams: CheckReport,
}

impl Characterization {
    pub fn verdicts(&self) -> [bool; 3] {
        [self.pair.passed(), self.coproduct.passed(), self.diagrams.passed()]
    }

    pub fn consistent(&self) -> bool {
        let [i, ii, iii] = self.verdicts();
        i == ii && ii == iii
    }
}

/// Evaluates the three characterizing conditions of the quasitriangular
/// structure.
///
/// The dual maps are `ρ₁(φ) = Σ rⁱʲ⟨φ, α(eⱼ)⟩eᵢ`, `ρ₂(φ) = Σ rⁱʲ⟨φ, eⱼ⟩α(eᵢ)`,
/// `λ₁(φ) = Σ sⁱʲ⟨φ, α(eᵢ)⟩eⱼ`, `λ₂(φ) = Σ sⁱʲ⟨φ, eᵢ⟩α(eⱼ)`.
pub fn characterization(a: &HomAlgebra, r: &Tensor2, s: &Tensor2) -> Result<Characterization> {
    use crate::yang_baxter::{triple, TripleKind};
    ensure_invariant(a, r, s)?;
    let (f, n) = (a.field(), a.dim());
    let alpha = a.alpha();
    let maps = maps_unchecked(a, r, s);

    let pair = check_yb_pair(a, r, s)?;

    let mut coproduct = CheckReport::new("coproduct-identities");
    let lhs_r = r.coproduct_right(alpha, &maps.delta);
    let rhs_r = triple(TripleKind::R13S12, r, r, a);
    coproduct.compare("alpha-delta-r", &[], lhs_r.data(), rhs_r.data());
    let lhs_s = s.coproduct_left(&maps.delta, alpha);
    let rhs_s = triple(TripleKind::R23S13, s, s, a).neg();
    coproduct.compare("delta-alpha-s", &[], lhs_s.data(), rhs_s.data());

    let rho1 = |p: usize| {
        let mut v = Vector::zero(f, n);
        for (i, j, c) in r.terms() {
            v = v.add(&a.unit_vector(i).scale(&(c * alpha.get(p, j))));
        }
        v
    };
    let rho2 = |phi: &[crate::field::Scalar]| {
        let mut v = Vector::zero(f, n);
        for (i, j, c) in r.terms() {
            v = v.add(&alpha.column(i).scale(&(c * &phi[j])));
        }
        v
    };
    let lambda1 = |p: usize| {
        let mut v = Vector::zero(f, n);
        for (i, j, c) in s.terms() {
            v = v.add(&a.unit_vector(j).scale(&(c * alpha.get(p, i))));
        }
        v
    };
    let lambda2 = |phi: &[crate::field::Scalar]| {
        let mut v = Vector::zero(f, n);
        for (i, j, c) in s.terms() {
            v = v.add(&alpha.column(j).scale(&(c * &phi[i])));
        }
        v
    };
    let mut diagrams = CheckReport::new("dual-diagrams");
    let mut second = Vec::new();
    for p in 0..n {
        for q in 0..n {
            let pulled: Vec<_> = (0..n).map(|j| maps.delta.get(j, p, q).clone()).collect();
            let lhs = a.mul(&rho1(q), &rho1(p));
            diagrams.compare("rho-diagram", &[p, q], lhs.coords(), rho2(&pulled).coords());
            let lhs = a.mul(&lambda1(q), &lambda1(p)).neg();
            second.push(([p, q], lhs, lambda2(&pulled)));
        }
    }
    for (basis, lhs, rhs) in second {
        diagrams.compare("lambda-diagram", &basis, lhs.coords(), rhs.coords());
    }
    Ok(Characterization {
        pair,
        coproduct,
        diagrams,
    })
}
