//! Hom-associative algebras, Hom-coassociative coalgebras and their checkers.
//!
//! Every identity checked here is multilinear, so evaluating it on all basis
//! tuples decides it on the whole space.

use crate::error::{ensure_dim, Error, Result};
use crate::field::FieldSpec;
use crate::report::CheckReport;
use crate::tensor::{BilinearMap, Coproduct, LinearMap, Tensor2, Tensor3, Vector};

/// `e1, e2, …, en`.
pub fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

/// A product `μ` together with a twist `α` on a space with a named basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomAlgebra {
    basis: Vec<String>,
    mu: BilinearMap,
    alpha: LinearMap,
}

impl HomAlgebra {
    /// Assembles the triple without checking any axiom.
    pub fn new(basis: Vec<String>, mu: BilinearMap, alpha: LinearMap) -> Result<Self> {
        ensure_dim("basis labels", mu.dim(), basis.len())?;
        ensure_dim("twist map", mu.dim(), alpha.dim())?;
        if mu.field() != alpha.field() {
            return Err(Error::FieldMismatch {
                left: mu.field().to_string(),
                right: alpha.field().to_string(),
            });
        }
        Ok(Self { basis, mu, alpha })
    }

    /// Same as [`HomAlgebra::new`] with labels `e1 … en`.
    pub fn unlabeled(mu: BilinearMap, alpha: LinearMap) -> Result<Self> {
        Self::new(default_labels(mu.dim()), mu, alpha)
    }

    /// An associative algebra viewed with `α = id`.
    pub fn associative(basis: Vec<String>, mu: BilinearMap) -> Result<Self> {
        let id = LinearMap::identity(mu.field(), mu.dim());
        Self::new(basis, mu, id)
    }

    /// Checks the axioms and fails with [`Error::NotAssociative`] if any breaks.
    pub fn validated(self) -> Result<Self> {
        check_hom_algebra(&self).ok_or(Error::NotAssociative)?;
        Ok(self)
    }

    pub fn field(&self) -> FieldSpec {
        self.mu.field()
    }

    pub fn dim(&self) -> usize {
        self.mu.dim()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn mu(&self) -> &BilinearMap {
        &self.mu
    }

    pub fn alpha(&self) -> &LinearMap {
        &self.alpha
    }

    pub fn with_mu(&self, mu: BilinearMap) -> HomAlgebra {
        Self {
            basis: self.basis.clone(),
            mu,
            alpha: self.alpha.clone(),
        }
    }

    pub fn with_alpha(&self, alpha: LinearMap) -> HomAlgebra {
        Self {
            basis: self.basis.clone(),
            mu: self.mu.clone(),
            alpha,
        }
    }

    pub fn mul(&self, x: &Vector, y: &Vector) -> Vector {
        self.mu.eval(x, y)
    }

    pub fn twist(&self, x: &Vector) -> Vector {
        self.alpha.apply(x)
    }

    pub fn unit_vector(&self, i: usize) -> Vector {
        Vector::basis(self.field(), self.dim(), i)
    }

    /// `a • t = α(a)·t₁ ⊗ α(t₂)` for the bimodule `A⊗A`.
    pub fn act_left(&self, a: &Vector, t: &Tensor2) -> Tensor2 {
        let alpha_a = self.twist(a);
        let n = self.dim();
        let mut out = Tensor2::zero(self.field(), n);
        for (i, j, c) in t.terms() {
            let left = self.mul(&alpha_a, &self.unit_vector(i)).scale(c);
            out = out.add(&Tensor2::outer(&left, &self.alpha.column(j)));
        }
        out
    }

    /// `t • a = α(t₁) ⊗ t₂·α(a)` for the bimodule `A⊗A`.
    pub fn act_right(&self, t: &Tensor2, a: &Vector) -> Tensor2 {
        let alpha_a = self.twist(a);
        let n = self.dim();
        let mut out = Tensor2::zero(self.field(), n);
        for (i, j, c) in t.terms() {
            let right = self.mul(&self.unit_vector(j), &alpha_a).scale(c);
            out = out.add(&Tensor2::outer(&self.alpha.column(i), &right));
        }
        out
    }
}

/// A coproduct `△` with a twist `α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomCoalgebra {
    basis: Vec<String>,
    delta: Coproduct,
    alpha: LinearMap,
}

impl HomCoalgebra {
    pub fn new(basis: Vec<String>, delta: Coproduct, alpha: LinearMap) -> Result<Self> {
        ensure_dim("basis labels", delta.dim(), basis.len())?;
        ensure_dim("twist map", delta.dim(), alpha.dim())?;
        Ok(Self { basis, delta, alpha })
    }

    pub fn unlabeled(delta: Coproduct, alpha: LinearMap) -> Result<Self> {
        Self::new(default_labels(delta.dim()), delta, alpha)
    }

    pub fn field(&self) -> FieldSpec {
        self.delta.field()
    }

    pub fn dim(&self) -> usize {
        self.delta.dim()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn delta(&self) -> &Coproduct {
        &self.delta
    }

    pub fn alpha(&self) -> &LinearMap {
        &self.alpha
    }
}

/// `(e_i·e_j)·α(e_k) = α(e_i)·(e_j·e_k)` on all basis triples.
pub fn check_hom_associativity(mu: &BilinearMap, alpha: &LinearMap) -> CheckReport {
    let mut report = CheckReport::new("hom-associativity");
    hom_associativity_into(&mut report, "hom-associativity", mu, alpha);
    report
}

pub(crate) fn hom_associativity_into(
    report: &mut CheckReport,
    identity: &str,
    mu: &BilinearMap,
    alpha: &LinearMap,
) {
    let n = mu.dim();
    let cols: Vec<Vector> = (0..n).map(|i| alpha.column(i)).collect();
    for i in 0..n {
        for j in 0..n {
            let ij = mu.product(i, j);
            for k in 0..n {
                let lhs = mu.eval(&ij, &cols[k]);
                let rhs = mu.eval(&cols[i], &mu.product(j, k));
                report.compare(identity, &[i, j, k], lhs.coords(), rhs.coords());
            }
        }
    }
}

/// `α(e_i·e_j) = α(e_i)·α(e_j)` on all basis pairs.
pub fn check_multiplicativity(mu: &BilinearMap, alpha: &LinearMap) -> CheckReport {
    let mut report = CheckReport::new("multiplicativity");
    multiplicativity_into(&mut report, "multiplicativity", mu, alpha);
    report
}

pub(crate) fn multiplicativity_into(
    report: &mut CheckReport,
    identity: &str,
    mu: &BilinearMap,
    alpha: &LinearMap,
) {
    let n = mu.dim();
    for i in 0..n {
        for j in 0..n {
            let lhs = alpha.apply(&mu.product(i, j));
            let rhs = mu.eval(&alpha.column(i), &alpha.column(j));
            report.compare(identity, &[i, j], lhs.coords(), rhs.coords());
        }
    }
}

/// Hom-associativity and multiplicativity.
pub fn check_hom_algebra(a: &HomAlgebra) -> CheckReport {
    let mut report = CheckReport::new("hom-algebra");
    hom_associativity_into(&mut report, "hom-associativity", a.mu(), a.alpha());
    multiplicativity_into(&mut report, "multiplicativity", a.mu(), a.alpha());
    report
}

/// Hom-associativity only, for non-multiplicative exploration.
pub fn check_hom_algebra_relaxed(a: &HomAlgebra) -> CheckReport {
    let mut report = CheckReport::new("hom-algebra");
    hom_associativity_into(&mut report, "hom-associativity", a.mu(), a.alpha());
    report
}

/// `φ(e_i·e_j) = φ(e_i)·φ(e_j)` on all basis pairs.
pub fn check_algebra_morphism(mu: &BilinearMap, phi: &LinearMap) -> CheckReport {
    let mut report = CheckReport::new("algebra-morphism");
    multiplicativity_into(&mut report, "algebra-morphism", mu, phi);
    report
}

/// `(△⊗α)∘△ = (α⊗△)∘△` and `(α⊗α)∘△ = △∘α` on every basis vector.
pub fn check_hom_coalgebra(c: &HomCoalgebra) -> CheckReport {
    let mut report = CheckReport::new("hom-coalgebra");
    hom_coassociativity_into(&mut report, c.delta(), c.alpha());
    comultiplicativity_into(&mut report, "comultiplicativity", c.delta(), c.alpha());
    report
}

/// `(φ⊗φ)∘△ = △∘φ` on every basis vector.
pub fn check_coalgebra_morphism(delta: &Coproduct, phi: &LinearMap) -> CheckReport {
    let mut report = CheckReport::new("coalgebra-morphism");
    comultiplicativity_into(&mut report, "coalgebra-morphism", delta, phi);
    report
}

/// `(△⊗α)(△a) − (α⊗△)(△a)` for each basis vector `a`.
pub fn coassociativity_defect(delta: &Coproduct, alpha: &LinearMap) -> Vec<Tensor3> {
    (0..delta.dim())
        .map(|i| {
            let d = delta.of_basis(i);
            d.coproduct_left(delta, alpha).sub(&d.coproduct_right(alpha, delta))
        })
        .collect()
}

fn hom_coassociativity_into(report: &mut CheckReport, delta: &Coproduct, alpha: &LinearMap) {
    for i in 0..delta.dim() {
        let d = delta.of_basis(i);
        let lhs = d.coproduct_left(delta, alpha);
        let rhs = d.coproduct_right(alpha, delta);
        report.compare("hom-coassociativity", &[i], lhs.data(), rhs.data());
    }
}

pub(crate) fn comultiplicativity_into(
    report: &mut CheckReport,
    identity: &str,
    delta: &Coproduct,
    alpha: &LinearMap,
) {
    for i in 0..delta.dim() {
        let lhs = delta.of_basis(i).map(alpha, alpha);
        let rhs = delta.eval(&alpha.column(i));
        report.compare(identity, &[i], lhs.data(), rhs.data());
    }
}

/// `(A, φ, φ∘μ)` for an associative product `μ` and an algebra morphism `φ`.
///
/// The twist already stored in `a` is ignored; `a.mu()` must be associative.
pub fn induce_algebra_by_composition(a: &HomAlgebra, phi: &LinearMap) -> Result<HomAlgebra> {
    ensure_dim("morphism", a.dim(), phi.dim())?;
    let id = LinearMap::identity(a.field(), a.dim());
    check_hom_associativity(a.mu(), &id).ok_or(Error::NotAssociative)?;
    let morphism = check_algebra_morphism(a.mu(), phi);
    if !morphism.passed() {
        return Err(Error::NotMorphism {
            what: "product".into(),
            report: Box::new(morphism),
        });
    }
    let induced = HomAlgebra::new(a.basis().to_vec(), a.mu().post_compose(phi), phi.clone())?;
    check_hom_algebra(&induced).ok_or(Error::Postcondition)?;
    Ok(induced)
}

/// `△∘μ = (μ⊗α)∘(α⊗△) + (α⊗μ)∘(△⊗α)` on all basis pairs.
pub fn check_infinitesimal_compat(a: &HomAlgebra, delta: &Coproduct) -> CheckReport {
    let mut report = CheckReport::new("infinitesimal-compatibility");
    if delta.dim() != a.dim() {
        return report;
    }
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            let (ei, ej) = (a.unit_vector(i), a.unit_vector(j));
            let lhs = delta.eval(&a.mu().product(i, j));
            let rhs = a
                .act_left(&ei, &delta.of_basis(j))
                .add(&a.act_right(&delta.of_basis(i), &ej));
            report.compare("infinitesimal-compatibility", &[i, j], lhs.data(), rhs.data());
        }
    }
    report
}
