//! α-invariant tensors, triple products, Hom-Yang-Baxter pairs and
//! (αⁿ)-Rota-Baxter systems.

use crate::error::{ensure_dim, Error, Result};
use crate::hom::{check_hom_algebra, HomAlgebra};
use crate::report::CheckReport;
use crate::rota_baxter::{check_hom_dendriform, commutation_into, ensure_square, HomDendriform, HomPreLie};
use crate::tensor::{LinearMap, Tensor2, Tensor3, Vector};

/// Which of the three leg placements a triple product uses.
///
/// With `u = Σ uⁱʲ eᵢ⊗eⱼ` and `v = Σ vᵏˡ eₖ⊗eₗ`:
///
/// * `R13S12`: `Σ uⁱʲvᵏˡ (eᵢ·eₖ) ⊗ α(eₗ) ⊗ α(eⱼ)`
/// * `R12S23`: `Σ uⁱʲvᵏˡ α(eᵢ) ⊗ (eⱼ·eₖ) ⊗ α(eₗ)`
/// * `R23S13`: `Σ uⁱʲvᵏˡ α(eₖ) ⊗ α(eᵢ) ⊗ (eⱼ·eₗ)`
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TripleKind {
    R13S12,
    R12S23,
    R23S13,
}

pub fn triple_product(kind: TripleKind, u: &Tensor2, v: &Tensor2, a: &HomAlgebra) -> Result<Tensor3> {
    ensure_dim("triple product", a.dim(), u.dim())?;
    ensure_dim("triple product", a.dim(), v.dim())?;
    Ok(triple(kind, u, v, a))
}

pub(crate) fn triple(kind: TripleKind, u: &Tensor2, v: &Tensor2, a: &HomAlgebra) -> Tensor3 {
    let n = a.dim();
    let mu = a.mu();
    let alpha = a.alpha();
    let mut out = Tensor3::zero(a.field(), n);
    for (i, j, cu) in u.terms() {
        for (k, l, cv) in v.terms() {
            let c = cu * cv;
            match kind {
                TripleKind::R13S12 => {
                    out.add_outer(&mu.product(i, k).scale(&c), &alpha.column(l), &alpha.column(j))
                }
                TripleKind::R12S23 => {
                    out.add_outer(&alpha.column(i).scale(&c), &mu.product(j, k), &alpha.column(l))
                }
                TripleKind::R23S13 => {
                    out.add_outer(&alpha.column(k).scale(&c), &alpha.column(i), &mu.product(j, l))
                }
            }
        }
    }
    out
}

/// `(r₁₃r₁₂ − r₁₂r₂₃ + s₂₃r₁₃, s₁₃r₁₂ − s₁₂s₂₃ + s₂₃s₁₃)`.
pub fn yb_sums(a: &HomAlgebra, r: &Tensor2, s: &Tensor2) -> Result<(Tensor3, Tensor3)> {
    ensure_dim("tensor", a.dim(), r.dim())?;
    ensure_dim("tensor", a.dim(), s.dim())?;
    Ok(yb_sums_unchecked(a, r, s))
}

pub(crate) fn yb_sums_unchecked(a: &HomAlgebra, r: &Tensor2, s: &Tensor2) -> (Tensor3, Tensor3) {
    use TripleKind::*;
    let first = triple(R13S12, r, r, a)
        .sub(&triple(R12S23, r, r, a))
        .add(&triple(R23S13, s, r, a));
    let second = triple(R13S12, s, r, a)
        .sub(&triple(R12S23, s, s, a))
        .add(&triple(R23S13, s, s, a));
    (first, second)
}

/// Compares `(α⊗α)(t)` with `t` coordinate by coordinate.
pub(crate) fn invariance_into(report: &mut CheckReport, identity: &str, alpha: &LinearMap, t: &Tensor2) {
    let image = t.map(alpha, alpha);
    let n = t.dim();
    for i in 0..n {
        for j in 0..n {
            report.compare(
                identity,
                &[i, j],
                std::slice::from_ref(image.get(i, j)),
                std::slice::from_ref(t.get(i, j)),
            );
        }
    }
}

pub fn check_alpha_invariant(a: &HomAlgebra, t: &Tensor2) -> Result<CheckReport> {
    ensure_dim("tensor", a.dim(), t.dim())?;
    let mut report = CheckReport::new("alpha-invariance");
    invariance_into(&mut report, "alpha-invariant", a.alpha(), t);
    Ok(report)
}

/// Records every nonzero coordinate of `t` as a witness against zero.
pub(crate) fn zero_tensor_into(report: &mut CheckReport, identity: &str, t: &Tensor3) {
    let zero = [t.field().zero()];
    for (i, j, k, c) in t.terms() {
        report.compare(identity, &[i, j, k], std::slice::from_ref(c), &zero);
    }
}

/// α-invariance of `r`, `s` and both pair equations.
pub fn check_yb_pair(a: &HomAlgebra, r: &Tensor2, s: &Tensor2) -> Result<CheckReport> {
    let (first, second) = yb_sums(a, r, s)?;
    let mut report = CheckReport::new("yb-pair");
    invariance_into(&mut report, "r-alpha-invariant", a.alpha(), r);
    invariance_into(&mut report, "s-alpha-invariant", a.alpha(), s);
    zero_tensor_into(&mut report, "yb-1", &first);
    zero_tensor_into(&mut report, "yb-2", &second);
    Ok(report)
}

/// A verified Hom-Yang-Baxter pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YangBaxterPair {
    base: HomAlgebra,
    r: Tensor2,
    s: Tensor2,
}

impl YangBaxterPair {
    pub fn new(base: HomAlgebra, r: Tensor2, s: Tensor2) -> Result<Self> {
        check_yb_pair(&base, &r, &s)?.ok_or(Error::NotYbPair)?;
        Ok(Self { base, r, s })
    }

    pub fn base(&self) -> &HomAlgebra {
        &self.base
    }

    pub fn r(&self) -> &Tensor2 {
        &self.r
    }

    pub fn s(&self) -> &Tensor2 {
        &self.s
    }
}

/// A verified (αⁿ)-Rota-Baxter system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaNRbSystem {
    base: HomAlgebra,
    r: LinearMap,
    s: LinearMap,
    n: u32,
}

impl AlphaNRbSystem {
    pub fn new(base: HomAlgebra, r: LinearMap, s: LinearMap, n: u32) -> Result<Self> {
        check_alpha_n_rbs(&base, &r, &s, n)?.ok_or(Error::InvalidSystem)?;
        Ok(Self { base, r, s, n })
    }

    pub fn base(&self) -> &HomAlgebra {
        &self.base
    }

    pub fn r(&self) -> &LinearMap {
        &self.r
    }

    pub fn s(&self) -> &LinearMap {
        &self.s
    }

    pub fn power(&self) -> u32 {
        self.n
    }
}

/// `α`-commutation and, on basis pairs,
/// `R(αⁿa)·R(αⁿb) = R(R(a)·αⁿb + αⁿa·S(b))` with the `S` analogue.
pub fn check_alpha_n_rbs(a: &HomAlgebra, r: &LinearMap, s: &LinearMap, n: u32) -> Result<CheckReport> {
    ensure_square(a, &[r, s])?;
    let mut report = CheckReport::new("alpha-n-rb-system");
    commutation_into(&mut report, "alpha-commutes-R", a.alpha(), r);
    commutation_into(&mut report, "alpha-commutes-S", a.alpha(), s);
    let an = a.alpha().pow(n);
    let mu = a.mu();
    let dim = a.dim();
    let mut second = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            let (ani, anj) = (an.column(i), an.column(j));
            let inner = mu.eval(&r.column(i), &anj).add(&mu.eval(&ani, &s.column(j)));
            let lhs1 = mu.eval(&r.apply(&ani), &r.apply(&anj));
            report.compare("rbs1", &[i, j], lhs1.coords(), r.apply(&inner).coords());
            let lhs2 = mu.eval(&s.apply(&ani), &s.apply(&anj));
            second.push(([i, j], lhs2, s.apply(&inner)));
        }
    }
    for (basis, lhs, rhs) in second {
        report.compare("rbs2", &basis, lhs.coords(), rhs.coords());
    }
    Ok(report)
}

/// The operator `a ↦ Σ tⁱʲ (eᵢ·a)·α(eⱼ)`.
pub fn operator_from_tensor(a: &HomAlgebra, t: &Tensor2) -> LinearMap {
    let (f, n) = (a.field(), a.dim());
    let images: Vec<Vector> = (0..n)
        .map(|col| {
            let mut v = Vector::zero(f, n);
            for (i, j, c) in t.terms() {
                v = v.add(&a.mul(&a.mu().product(i, col), &a.alpha().column(j)).scale(c));
            }
            v
        })
        .collect();
    LinearMap::from_columns(f, n, &images)
}

/// The second form `a ↦ Σ tⁱʲ α(eᵢ)·(a·eⱼ)`.
pub fn operator_from_tensor_right(a: &HomAlgebra, t: &Tensor2) -> LinearMap {
    let (f, n) = (a.field(), a.dim());
    let images: Vec<Vector> = (0..n)
        .map(|col| {
            let mut v = Vector::zero(f, n);
            for (i, j, c) in t.terms() {
                v = v.add(&a.mul(&a.alpha().column(i), &a.mu().product(col, j)).scale(c));
            }
            v
        })
        .collect();
    LinearMap::from_columns(f, n, &images)
}

/// The (α²)-Rota-Baxter system `R(a) = (r₁·a)·α(r₂)`, `S(a) = (s₁·a)·α(s₂)`.
pub fn rbs_from_ybp(pair: &YangBaxterPair) -> Result<AlphaNRbSystem> {
    let a = &pair.base;
    let r = operator_from_tensor(a, &pair.r);
    let s = operator_from_tensor(a, &pair.s);
    let mut forms = CheckReport::new("operator-forms");
    for (label, op, t) in [("R-forms", &r, &pair.r), ("S-forms", &s, &pair.s)] {
        let other = operator_from_tensor_right(a, t);
        for j in 0..a.dim() {
            forms.compare(label, &[j], op.column(j).coords(), other.column(j).coords());
        }
    }
    forms.ok_or(Error::Postcondition)?;
    check_alpha_n_rbs(a, &r, &s, 2)?.ok_or(Error::Postcondition)?;
    Ok(AlphaNRbSystem {
        base: a.clone(),
        r,
        s,
        n: 2,
    })
}

/// `(A, α^{n+1}, ≺, ≻)` with `a≺b = αⁿ(a)·S(b)` and `a≻b = R(a)·αⁿ(b)`.
pub fn dendriform_from_alpha_n_rbs(sys: &AlphaNRbSystem) -> Result<HomDendriform> {
    let a = &sys.base;
    let an = a.alpha().pow(sys.n);
    let out = HomDendriform {
        alpha: an.compose(a.alpha()),
        prec: a.mu().pre_compose(&an, &sys.s),
        succ: a.mu().pre_compose(&sys.r, &an),
    };
    check_hom_dendriform(&out).ok_or(Error::Postcondition)?;
    Ok(out)
}

/// The α³-twisted dendriform, Hom-associative and Hom-preLie structures of a pair.
pub fn ybp_induced_structures(pair: &YangBaxterPair) -> Result<(HomDendriform, HomAlgebra, HomPreLie)> {
    let sys = rbs_from_ybp(pair)?;
    let dend = dendriform_from_alpha_n_rbs(&sys)?;
    let star = HomAlgebra::new(pair.base.basis().to_vec(), dend.sum(), dend.alpha.clone())?;
    check_hom_algebra(&star).ok_or(Error::Postcondition)?;
    let prelie = crate::rota_baxter::prelie_from_dendriform(&dend)?;
    Ok((dend, star, prelie))
}
