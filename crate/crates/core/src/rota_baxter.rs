//! Rota-Baxter systems, the weighted-operator embedding, and the structures
//! they induce: Hom-dendriform, Hom-preLie, the star product and the weak
//! pseudotwistor.

use crate::error::{ensure_dim, Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::hom::{check_hom_algebra, hom_associativity_into, multiplicativity_into, HomAlgebra};
use crate::report::CheckReport;
use crate::tensor::{BilinearMap, LinearMap, Tensor2, Tensor3, TwistorMap, Vector};

/// A pair `(R, S)` on a Hom-associative algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotaBaxterSystem {
    base: HomAlgebra,
    r: LinearMap,
    s: LinearMap,
}

impl RotaBaxterSystem {
    /// Verifies the system axioms before accepting the pair.
    pub fn new(base: HomAlgebra, r: LinearMap, s: LinearMap) -> Result<Self> {
        check_rb_system(&base, &r, &s)?.ok_or(Error::InvalidSystem)?;
        Ok(Self { base, r, s })
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
}

/// Two products `≺`, `≻` with a shared twist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomDendriform {
    pub alpha: LinearMap,
    pub prec: BilinearMap,
    pub succ: BilinearMap,
}

impl HomDendriform {
    pub fn field(&self) -> FieldSpec {
        self.alpha.field()
    }

    pub fn dim(&self) -> usize {
        self.alpha.dim()
    }

    /// `a * b = a ≺ b + a ≻ b`.
    pub fn sum(&self) -> BilinearMap {
        self.prec.add(&self.succ)
    }

    /// `a ⋄ b = a ≻ b − a ≺ b`.
    pub fn difference(&self) -> BilinearMap {
        self.succ.sub(&self.prec)
    }

    /// `a ⋄ b = a ≻ b − b ≺ a`.
    pub fn swapped_difference(&self) -> BilinearMap {
        self.succ.sub(&self.prec.opposite())
    }
}

/// A product `⋄` with a twist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomPreLie {
    pub alpha: LinearMap,
    pub diamond: BilinearMap,
}

pub(crate) fn ensure_square(a: &HomAlgebra, maps: &[&LinearMap]) -> Result<()> {
    for m in maps {
        ensure_dim("operator", a.dim(), m.dim())?;
    }
    Ok(())
}

/// Column-by-column comparison of `α∘f` with `f∘α`.
pub(crate) fn commutation_into(report: &mut CheckReport, identity: &str, alpha: &LinearMap, f: &LinearMap) {
    let lhs = alpha.compose(f);
    let rhs = f.compose(alpha);
    for j in 0..alpha.dim() {
        report.compare(identity, &[j], lhs.column(j).coords(), rhs.column(j).coords());
    }
}

/// `α`-commutation of `R` and `S` and, on all basis pairs,
/// `R(a)·R(b) = R(R(a)·b + a·S(b))` and `S(a)·S(b) = S(R(a)·b + a·S(b))`.
pub fn check_rb_system(a: &HomAlgebra, r: &LinearMap, s: &LinearMap) -> Result<CheckReport> {
    ensure_square(a, &[r, s])?;
    let mut report = CheckReport::new("rb-system");
    commutation_into(&mut report, "alpha-commutes-R", a.alpha(), r);
    commutation_into(&mut report, "alpha-commutes-S", a.alpha(), s);
    let n = a.dim();
    let mu = a.mu();
    let mut rbs2 = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let (ri, rj) = (r.column(i), r.column(j));
            let (si, sj) = (s.column(i), s.column(j));
            let inner = mu.eval(&ri, &a.unit_vector(j)).add(&mu.eval(&a.unit_vector(i), &sj));
            let lhs1 = mu.eval(&ri, &rj);
            report.compare("rbs1", &[i, j], lhs1.coords(), r.apply(&inner).coords());
            let lhs2 = mu.eval(&si, &sj);
            rbs2.push(([i, j], lhs2, s.apply(&inner)));
        }
    }
    for (basis, lhs, rhs) in rbs2 {
        report.compare("rbs2", &basis, lhs.coords(), rhs.coords());
    }
    Ok(report)
}

/// `α∘R = R∘α` and `R(a)·R(b) = R(R(a)·b + a·R(b) + λ a·b)` on basis pairs.
pub fn check_weighted_rb(a: &HomAlgebra, r: &LinearMap, lambda: &Scalar) -> Result<CheckReport> {
    ensure_square(a, &[r])?;
    let mut report = CheckReport::new("weighted-rb-operator");
    commutation_into(&mut report, "alpha-commutes-R", a.alpha(), r);
    let mu = a.mu();
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let (ri, rj) = (r.column(i), r.column(j));
            let inner = mu
                .eval(&ri, &a.unit_vector(j))
                .add(&mu.eval(&a.unit_vector(i), &rj))
                .add(&mu.product(i, j).scale(lambda));
            report.compare("weighted-rb", &[i, j], mu.eval(&ri, &rj).coords(), r.apply(&inner).coords());
        }
    }
    Ok(report)
}

/// `(R, R + λ·id)` for a Rota-Baxter operator `R` of weight `λ`.
pub fn rbs_from_weighted_operator(a: &HomAlgebra, r: &LinearMap, lambda: &Scalar) -> Result<RotaBaxterSystem> {
    check_weighted_rb(a, r, lambda)?.ok_or(Error::NotWeightedRb)?;
    let s = r.add(&LinearMap::scalar(a.field(), a.dim(), lambda));
    check_rb_system(a, r, &s)?.ok_or(Error::Postcondition)?;
    Ok(RotaBaxterSystem {
        base: a.clone(),
        r: r.clone(),
        s,
    })
}

/// `a ≺ b = a·S(b)`, `a ≻ b = R(a)·b`.
pub fn dendriform_from_rbs(sys: &RotaBaxterSystem) -> Result<HomDendriform> {
    let mu = sys.base.mu();
    let id = LinearMap::identity(mu.field(), mu.dim());
    let out = HomDendriform {
        alpha: sys.base.alpha().clone(),
        prec: mu.pre_compose(&id, &sys.s),
        succ: mu.pre_compose(&sys.r, &id),
    };
    check_hom_dendriform(&out).ok_or(Error::Postcondition)?;
    Ok(out)
}

/// Twist compatibility of `≺`, `≻` and the three dendriform identities:
///
/// * `(a≺b)≺α(c) = α(a)≺(b≺c + b≻c)`
/// * `(a≻b)≺α(c) = α(a)≻(b≺c)`
/// * `(a≺b + a≻b)≻α(c) = α(a)≻(b≻c)`
pub fn check_hom_dendriform(d: &HomDendriform) -> CheckReport {
    let mut report = CheckReport::new("hom-dendriform");
    multiplicativity_into(&mut report, "alpha-prec", &d.prec, &d.alpha);
    multiplicativity_into(&mut report, "alpha-succ", &d.succ, &d.alpha);
    let n = d.dim();
    let star = d.sum();
    let cols: Vec<Vector> = (0..n).map(|i| d.alpha.column(i)).collect();
    for (label, outer_l, inner_l, outer_r, inner_r) in [
        ("dendriform-1", &d.prec, &d.prec, &d.prec, &star),
        ("dendriform-2", &d.prec, &d.succ, &d.succ, &d.prec),
        ("dendriform-3", &d.succ, &star, &d.succ, &d.succ),
    ] {
        for i in 0..n {
            for j in 0..n {
                let ij = inner_l.product(i, j);
                for k in 0..n {
                    let lhs = outer_l.eval(&ij, &cols[k]);
                    let rhs = outer_r.eval(&cols[i], &inner_r.product(j, k));
                    report.compare(label, &[i, j, k], lhs.coords(), rhs.coords());
                }
            }
        }
    }
    report
}

/// `⋄ = ≻ − ≺`.
pub fn prelie_from_dendriform(d: &HomDendriform) -> Result<HomPreLie> {
    let out = HomPreLie {
        alpha: d.alpha.clone(),
        diamond: d.difference(),
    };
    check_hom_prelie(&out).ok_or(Error::Postcondition)?;
    Ok(out)
}

/// `⋄ = ≻ − ≺` with the arguments of `≺` swapped. Unlike the pointwise
/// difference this is Hom-preLie for every Hom-dendriform algebra.
pub fn prelie_from_dendriform_swapped(d: &HomDendriform) -> Result<HomPreLie> {
    let out = HomPreLie {
        alpha: d.alpha.clone(),
        diamond: d.swapped_difference(),
    };
    check_hom_prelie(&out).ok_or(Error::Postcondition)?;
    Ok(out)
}

/// `α(a⋄b) = α(a)⋄α(b)` and symmetry of the twisted associator in its first
/// two arguments.
pub fn check_hom_prelie(p: &HomPreLie) -> CheckReport {
    let mut report = CheckReport::new("hom-prelie");
    multiplicativity_into(&mut report, "alpha-diamond", &p.diamond, &p.alpha);
    let n = p.alpha.dim();
    let m = &p.diamond;
    let cols: Vec<Vector> = (0..n).map(|i| p.alpha.column(i)).collect();
    let assoc = |x: usize, y: usize, z: usize| {
        m.eval(&m.product(x, y), &cols[z]).sub(&m.eval(&cols[x], &m.product(y, z)))
    };
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                report.compare("prelie", &[i, j, k], assoc(i, j, k).coords(), assoc(j, i, k).coords());
            }
        }
    }
    report
}

/// `a * b = a·S(b) + R(a)·b` on the same twist.
pub fn star_product(sys: &RotaBaxterSystem) -> Result<HomAlgebra> {
    let mu = sys.base.mu();
    let id = LinearMap::identity(mu.field(), mu.dim());
    let star = mu.pre_compose(&id, &sys.s).add(&mu.pre_compose(&sys.r, &id));
    let out = sys.base.with_mu(star);
    check_hom_algebra(&out).ok_or(Error::Postcondition)?;
    Ok(out)
}

/// `T(a⊗b) = R(a)⊗b + a⊗S(b)` with companion
/// `τ(a⊗b⊗c) = R(a)⊗R(b)⊗c + R(a)⊗b⊗S(c) + a⊗S(b)⊗S(c)`.
pub fn pseudotwistor_from_rbs(sys: &RotaBaxterSystem) -> Result<TwistorMap> {
    let (f, n) = (sys.base.field(), sys.base.dim());
    let (r, s) = (&sys.r, &sys.s);
    let e = |i: usize| Vector::basis(f, n, i);
    let mut tau = |i: usize, j: usize, k: usize| {
        let mut t = Tensor3::outer(&r.column(i), &r.column(j), &e(k));
        t.add_outer(&r.column(i), &e(j), &s.column(k));
        t.add_outer(&e(i), &s.column(j), &s.column(k));
        t
    };
    let twistor = TwistorMap::from_fns(
        f,
        n,
        |i, j| Tensor2::outer(&r.column(i), &e(j)).add(&Tensor2::outer(&e(i), &s.column(j))),
        Some(&mut tau),
    );
    check_weak_pseudotwistor(&sys.base, &twistor)?.ok_or(Error::Postcondition)?;
    Ok(twistor)
}

/// `α^⊗2∘T = T∘α^⊗2`, `α^⊗3∘τ = τ∘α^⊗3` and both pentagon legs
/// `T∘(μ⊗α)∘(T⊗id) = (μ⊗α)∘τ`, `T∘(α⊗μ)∘(id⊗T) = (α⊗μ)∘τ` on basis triples.
pub fn check_weak_pseudotwistor(a: &HomAlgebra, t: &TwistorMap) -> Result<CheckReport> {
    ensure_dim("twistor", a.dim(), t.dim())?;
    if !t.has_companion() {
        return Err(Error::MissingCompanion);
    }
    let (f, n) = (a.field(), a.dim());
    let (alpha, mu) = (a.alpha(), a.mu());
    let mut report = CheckReport::new("weak-pseudotwistor");
    for i in 0..n {
        for j in 0..n {
            let b = Tensor2::basis(f, n, i, j);
            let lhs = t.apply(&b).map(alpha, alpha);
            let rhs = t.apply(&b.map(alpha, alpha));
            report.compare("alpha-commutes-T", &[i, j], lhs.data(), rhs.data());
        }
    }
    let mut legs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let b = Tensor3::basis(f, n, i, j, k);
                let lhs = t.apply_companion(&b)?.map(alpha, alpha, alpha);
                let rhs = t.apply_companion(&b.map(alpha, alpha, alpha))?;
                report.compare("alpha-commutes-tau", &[i, j, k], lhs.data(), rhs.data());
                let tau_b = t.apply_companion(&b)?;
                let right_lhs = t.apply(&t.apply_left(&b).contract_left(mu, alpha));
                let right_rhs = tau_b.contract_left(mu, alpha);
                let left_lhs = t.apply(&t.apply_right(&b).contract_right(alpha, mu));
                let left_rhs = tau_b.contract_right(alpha, mu);
                legs.push(([i, j, k], right_lhs, right_rhs, left_lhs, left_rhs));
            }
        }
    }
    for (basis, lhs, rhs, _, _) in &legs {
        report.compare("pentagon-right", basis, lhs.data(), rhs.data());
    }
    for (basis, _, _, lhs, rhs) in &legs {
        report.compare("pentagon-left", basis, lhs.data(), rhs.data());
    }
    Ok(report)
}

/// `(A, α, μ∘T)` for a weak pseudotwistor `T`.
pub fn product_from_twistor(a: &HomAlgebra, t: &TwistorMap) -> Result<HomAlgebra> {
    check_weak_pseudotwistor(a, t)?.ok_or(Error::NotPseudotwistor)?;
    let out = a.with_mu(a.mu().compose_twistor(t));
    let mut report = CheckReport::new("hom-algebra");
    hom_associativity_into(&mut report, "hom-associativity", out.mu(), out.alpha());
    report.ok_or(Error::Postcondition)?;
    Ok(out)
}
