//! Bimodules on tensor powers, derivations, covariant Hom-bialgebras, the
//! quasitriangular construction, duality and perturbations.

mod bimodule;
mod dual;
mod perturbation;
mod quasitriangular;

pub use bimodule::{check_bimodule, tensor_power_bimodule, BimoduleActions};
pub use dual::{
    check_coderivation, check_covariant_coderivation, check_dual_covariant_hom_bialgebra, dualize,
    DualCovariantHomBialgebra,
};
pub use perturbation::{
    check_perturbation, check_perturbation_with_derivations, mixed_triple_product, perturbed, MixedKind,
    PerturbationReport,
};
pub use quasitriangular::{
    build_quasitriangular, characterization, check_quasitriangular_condition, coassoc_defect,
    lr_tensor_products, quasitriangular_maps, Characterization, QuasitriangularMaps,
};

use crate::error::{ensure_dim, Error, Result};
use crate::hom::{check_algebra_morphism, check_hom_algebra, check_hom_coalgebra, comultiplicativity_into, HomAlgebra, HomCoalgebra};
use crate::report::CheckReport;
use crate::tensor::{Coproduct, LinearMap};

/// `(A, α, μ, △, δ₁, δ₂)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CovariantHomBialgebra {
    pub base: HomAlgebra,
    pub delta: Coproduct,
    pub delta1: Coproduct,
    pub delta2: Coproduct,
}

impl CovariantHomBialgebra {
    pub fn new(base: HomAlgebra, delta: Coproduct, delta1: Coproduct, delta2: Coproduct) -> Result<Self> {
        for d in [&delta, &delta1, &delta2] {
            ensure_dim("coproduct", base.dim(), d.dim())?;
        }
        Ok(Self {
            base,
            delta,
            delta1,
            delta2,
        })
    }

    /// All coproducts zero.
    pub fn trivial(base: HomAlgebra) -> Self {
        let zero = Coproduct::zero(base.field(), base.dim());
        Self {
            base,
            delta: zero.clone(),
            delta1: zero.clone(),
            delta2: zero,
        }
    }

    pub fn coalgebra(&self) -> HomCoalgebra {
        HomCoalgebra::new(self.base.basis().to_vec(), self.delta.clone(), self.base.alpha().clone())
            .expect("dimensions checked at construction")
    }
}

/// `α^⊗2∘d = d∘α` and `d(a·b) = a•d(b) + d(a)•b` on basis pairs.
pub fn check_derivation(a: &HomAlgebra, d: &Coproduct) -> Result<CheckReport> {
    ensure_dim("derivation", a.dim(), d.dim())?;
    let mut report = CheckReport::new("derivation");
    derivation_into(&mut report, a, d);
    Ok(report)
}

fn derivation_into(report: &mut CheckReport, a: &HomAlgebra, d: &Coproduct) {
    comultiplicativity_into(report, "alpha-commutes", d, a.alpha());
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            let lhs = d.eval(&a.mu().product(i, j));
            let rhs = a
                .act_left(&a.unit_vector(i), &d.of_basis(j))
                .add(&a.act_right(&d.of_basis(i), &a.unit_vector(j)));
            report.compare("derivation", &[i, j], lhs.data(), rhs.data());
        }
    }
}

/// `α^⊗2∘D = D∘α`, `D(ab) = a•δ₁(b) + D(a)•b` and `D(ab) = a•D(b) + δ₂(a)•b`.
pub fn check_covariant_derivation(
    a: &HomAlgebra,
    d: &Coproduct,
    delta1: &Coproduct,
    delta2: &Coproduct,
) -> Result<CheckReport> {
    for m in [d, delta1, delta2] {
        ensure_dim("covariant derivation", a.dim(), m.dim())?;
    }
    let mut report = CheckReport::new("covariant-derivation");
    comultiplicativity_into(&mut report, "alpha-commutes", d, a.alpha());
    let n = a.dim();
    let mut second = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let (ei, ej) = (a.unit_vector(i), a.unit_vector(j));
            let lhs = d.eval(&a.mu().product(i, j));
            let rhs1 = a
                .act_left(&ei, &delta1.of_basis(j))
                .add(&a.act_right(&d.of_basis(i), &ej));
            let rhs2 = a
                .act_left(&ei, &d.of_basis(j))
                .add(&a.act_right(&delta2.of_basis(i), &ej));
            report.compare("covariant-1", &[i, j], lhs.data(), rhs1.data());
            second.push(([i, j], lhs, rhs2));
        }
    }
    for (basis, lhs, rhs) in second {
        report.compare("covariant-2", &basis, lhs.data(), rhs.data());
    }
    Ok(report)
}

/// The four axiom groups, each as its own report.
pub fn covariant_items(b: &CovariantHomBialgebra) -> Result<Vec<CheckReport>> {
    let mut algebra = check_hom_algebra(&b.base);
    algebra.name = "algebra".into();
    let mut coalgebra = check_hom_coalgebra(&b.coalgebra());
    coalgebra.name = "coalgebra".into();
    let mut derivations = CheckReport::new("derivations");
    derivations.absorb("delta1", check_derivation(&b.base, &b.delta1)?);
    derivations.absorb("delta2", check_derivation(&b.base, &b.delta2)?);
    let mut covariant = check_covariant_derivation(&b.base, &b.delta, &b.delta1, &b.delta2)?;
    covariant.name = "covariant".into();
    Ok(vec![algebra, coalgebra, derivations, covariant])
}

/// Items (i)–(iv) merged into one report.
pub fn check_covariant_hom_bialgebra(b: &CovariantHomBialgebra) -> Result<CheckReport> {
    Ok(CheckReport::merge("covariant-hom-bialgebra", covariant_items(b)?))
}

/// `(A, φ, φ∘μ, △∘φ, δ₁∘φ, δ₂∘φ)` for a covariant bialgebra (twist ignored,
/// taken as identity) and a morphism `φ` of covariant bialgebras.
pub fn induce_covariant_by_composition(b: &CovariantHomBialgebra, phi: &LinearMap) -> Result<CovariantHomBialgebra> {
    ensure_dim("morphism", b.base.dim(), phi.dim())?;
    let (f, n) = (b.base.field(), b.base.dim());
    let plain = CovariantHomBialgebra {
        base: b.base.with_alpha(LinearMap::identity(f, n)),
        ..b.clone()
    };
    check_covariant_hom_bialgebra(&plain)?.ok_or(Error::InvalidSystem)?;
    let algebra = check_algebra_morphism(b.base.mu(), phi);
    if !algebra.passed() {
        return Err(Error::NotMorphism {
            what: "product".into(),
            report: Box::new(algebra),
        });
    }
    for (what, theta) in [("coproduct", &b.delta), ("delta1", &b.delta1), ("delta2", &b.delta2)] {
        let mut report = CheckReport::new("coalgebra-morphism");
        comultiplicativity_into(&mut report, what, theta, phi);
        if !report.passed() {
            return Err(Error::NotMorphism {
                what: what.into(),
                report: Box::new(report),
            });
        }
    }
    let out = CovariantHomBialgebra {
        base: b.base.with_alpha(phi.clone()).with_mu(b.base.mu().post_compose(phi)),
        delta: b.delta.compose_right(phi),
        delta1: b.delta1.compose_right(phi),
        delta2: b.delta2.compose_right(phi),
    };
    check_covariant_hom_bialgebra(&out)?.ok_or(Error::Postcondition)?;
    Ok(out)
}
