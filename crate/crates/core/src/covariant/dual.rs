use super::{check_covariant_hom_bialgebra, CovariantHomBialgebra};
use crate::error::{ensure_dim, Error, Result};
use crate::hom::{check_hom_algebra, check_hom_coalgebra, HomAlgebra, HomCoalgebra};
use crate::report::CheckReport;
use crate::tensor::{BilinearMap, Coproduct, LinearMap, Tensor2, Tensor3};

/// `(A*, α*, △*, μ*, ∂₁, ∂₂)` in the dual basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualCovariantHomBialgebra {
    pub basis: Vec<String>,
    pub alpha: LinearMap,
    pub product: BilinearMap,
    pub coproduct: Coproduct,
    pub partial1: BilinearMap,
    pub partial2: BilinearMap,
}

impl DualCovariantHomBialgebra {
    pub fn algebra(&self) -> HomAlgebra {
        HomAlgebra::new(self.basis.clone(), self.product.clone(), self.alpha.clone()).expect("consistent shapes")
    }

    pub fn coalgebra(&self) -> HomCoalgebra {
        HomCoalgebra::new(self.basis.clone(), self.coproduct.clone(), self.alpha.clone()).expect("consistent shapes")
    }

    /// Transposes every array back, recovering `(α, μ, △, δ₁, δ₂)`.
    pub fn transpose_back(&self) -> (LinearMap, BilinearMap, Coproduct, Coproduct, Coproduct) {
        (
            self.alpha.transpose(),
            self.coproduct.dual_product(),
            self.product.dual_coproduct(),
            self.partial1.dual_coproduct(),
            self.partial2.dual_coproduct(),
        )
    }
}

/// `α∘∂ = ∂∘α^⊗2` and `△∘∂ = (α⊗∂)∘(△⊗α) + (∂⊗α)∘(α⊗△)` on basis pairs.
pub fn check_coderivation(c: &HomCoalgebra, partial: &BilinearMap) -> Result<CheckReport> {
    ensure_dim("coderivation", c.dim(), partial.dim())?;
    let mut report = CheckReport::new("coderivation");
    crate::hom::multiplicativity_into(&mut report, "alpha-commutes", partial, c.alpha());
    for i in 0..c.dim() {
        for j in 0..c.dim() {
            let lhs = c.delta().eval(&partial.product(i, j));
            let rhs = co_left(c, partial, i, j).add(&co_right(c, partial, i, j));
            report.compare("coderivation", &[i, j], lhs.data(), rhs.data());
        }
    }
    Ok(report)
}

/// `(α⊗∂)(△(eᵢ) ⊗ α(eⱼ))`.
fn co_left(c: &HomCoalgebra, partial: &BilinearMap, i: usize, j: usize) -> Tensor2 {
    let mut t = Tensor3::zero(c.field(), c.dim());
    t.add_outer_2_1(&c.delta().of_basis(i), &c.alpha().column(j));
    t.contract_right(c.alpha(), partial)
}

/// `(∂⊗α)(α(eᵢ) ⊗ △(eⱼ))`.
fn co_right(c: &HomCoalgebra, partial: &BilinearMap, i: usize, j: usize) -> Tensor2 {
    let mut t = Tensor3::zero(c.field(), c.dim());
    t.add_outer_1_2(&c.alpha().column(i), &c.delta().of_basis(j));
    t.contract_left(partial, c.alpha())
}

/// `△∘μ = (α⊗∂₁)∘(△⊗α) + (μ⊗α)∘(α⊗△)` and
/// `△∘μ = (α⊗μ)∘(△⊗α) + (∂₂⊗α)∘(α⊗△)` on basis pairs.
pub fn check_covariant_coderivation(
    c: &HomCoalgebra,
    mu: &BilinearMap,
    partial1: &BilinearMap,
    partial2: &BilinearMap,
) -> Result<CheckReport> {
    for m in [mu, partial1, partial2] {
        ensure_dim("covariant coderivation", c.dim(), m.dim())?;
    }
    let mut report = CheckReport::new("covariant-coderivation");
    let mut second = Vec::new();
    for i in 0..c.dim() {
        for j in 0..c.dim() {
            let lhs = c.delta().eval(&mu.product(i, j));
            let rhs1 = co_left(c, partial1, i, j).add(&co_right(c, mu, i, j));
            let rhs2 = co_left(c, mu, i, j).add(&co_right(c, partial2, i, j));
            report.compare("covariant-co-1", &[i, j], lhs.data(), rhs1.data());
            second.push(([i, j], lhs, rhs2));
        }
    }
    for (basis, lhs, rhs) in second {
        report.compare("covariant-co-2", &basis, lhs.data(), rhs.data());
    }
    Ok(report)
}

/// All invariants of a dual covariant Hom-bialgebra, grouped by item.
pub fn check_dual_covariant_hom_bialgebra(d: &DualCovariantHomBialgebra) -> Result<CheckReport> {
    let mut algebra = check_hom_algebra(&d.algebra());
    algebra.name = "algebra".into();
    let coalgebra_data = d.coalgebra();
    let mut coalgebra = check_hom_coalgebra(&coalgebra_data);
    coalgebra.name = "coalgebra".into();
    let mut coderivations = CheckReport::new("coderivations");
    coderivations.absorb("partial1", check_coderivation(&coalgebra_data, &d.partial1)?);
    coderivations.absorb("partial2", check_coderivation(&coalgebra_data, &d.partial2)?);
    let mut covariant = check_covariant_coderivation(&coalgebra_data, &d.product, &d.partial1, &d.partial2)?;
    covariant.name = "covariant".into();
    Ok(CheckReport::merge(
        "dual-covariant-hom-bialgebra",
        [algebra, coalgebra, coderivations, covariant],
    ))
}

/// Transposes a covariant Hom-bialgebra to its dual.
pub fn dualize(b: &CovariantHomBialgebra) -> Result<DualCovariantHomBialgebra> {
    check_covariant_hom_bialgebra(b)?.ok_or(Error::InvalidSystem)?;
    let basis = b.base.basis().iter().map(|l| format!("{l}*")).collect();
    let out = DualCovariantHomBialgebra {
        basis,
        alpha: b.base.alpha().transpose(),
        product: b.delta.dual_product(),
        coproduct: b.base.mu().dual_coproduct(),
        partial1: b.delta1.dual_product(),
        partial2: b.delta2.dual_product(),
    };
    check_dual_covariant_hom_bialgebra(&out)?.ok_or(Error::Postcondition)?;
    Ok(out)
}
