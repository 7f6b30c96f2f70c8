//! Hypothesis/conclusion pairs behind `verify-theorem`.

use homalg::bundle::Bundle;
use homalg::covariant::{
    build_quasitriangular, characterization, check_covariant_hom_bialgebra, check_dual_covariant_hom_bialgebra,
    check_perturbation, check_perturbation_with_derivations, check_quasitriangular_condition, dualize,
    induce_covariant_by_composition, CovariantHomBialgebra,
};
use homalg::hom::{
    check_algebra_morphism, check_coalgebra_morphism, check_hom_algebra, check_hom_associativity,
    check_infinitesimal_compat, induce_algebra_by_composition,
};
use homalg::rota_baxter::{
    check_hom_dendriform, check_hom_prelie, check_weak_pseudotwistor, dendriform_from_rbs, prelie_from_dendriform,
    product_from_twistor, pseudotwistor_from_rbs, rbs_from_weighted_operator, star_product, HomPreLie,
};
use homalg::yang_baxter::{
    check_alpha_invariant, check_alpha_n_rbs, rbs_from_ybp, ybp_induced_structures, YangBaxterPair,
};
use homalg::{CheckReport, Error, HomAlgebra, LinearMap, Result, Scalar};
use serde_json::{Map, Value};

pub const THEOREM_NAMES: &[&str] = &[
    "rbs-dendriform",
    "dend-prelie",
    "pseudotwistor",
    "ybp-to-a2rbs",
    "quasitriangular",
    "characterization",
    "perturbation",
    "dualization",
    "induced-composition",
];

#[derive(Debug, Default)]
pub struct Outcome {
    pub hypotheses: Vec<CheckReport>,
    pub conclusions: Vec<CheckReport>,
    pub details: Map<String, Value>,
}

impl Outcome {
    pub fn vacuous(&self) -> bool {
        !self.hypotheses.iter().all(CheckReport::passed)
    }

    fn hypothesis(&mut self, name: &str, mut report: CheckReport) -> bool {
        report.name = name.to_string();
        let ok = report.passed();
        self.hypotheses.push(report);
        ok
    }

    fn conclusion(&mut self, name: &str, mut report: CheckReport) {
        report.name = name.to_string();
        self.conclusions.push(report);
    }

    /// Records a construction's own postcondition failure as a failed
    /// conclusion; other errors propagate.
    fn construct<T>(&mut self, name: &str, result: Result<T>) -> Result<Option<T>> {
        match result {
            Ok(v) => Ok(Some(v)),
            Err(Error::Postcondition(report)) => {
                self.conclusion(name, *report);
                Ok(None)
            }
            Err(e) => Err(e),
        }
    }
}

pub fn verify(name: &str, b: &Bundle) -> Result<Outcome> {
    let mut out = Outcome::default();
    match name {
        "rbs-dendriform" => rbs_dendriform(b, &mut out)?,
        "dend-prelie" => dend_prelie(b, &mut out)?,
        "pseudotwistor" => pseudotwistor(b, &mut out)?,
        "ybp-to-a2rbs" => ybp_to_a2rbs(b, &mut out)?,
        "quasitriangular" => quasitriangular(b, &mut out)?,
        "characterization" => characterize(b, &mut out)?,
        "perturbation" => perturbation(b, &mut out)?,
        "dualization" => dualization(b, &mut out)?,
        "induced-composition" => induced_composition(b, &mut out)?,
        other => return Err(Error::UnknownName(other.to_string())),
    }
    Ok(out)
}

/// Hom-algebra and Rota-Baxter system hypotheses, from `R`, `S` or from a
/// weighted operator `R` with `lambda`.
fn rb_hypotheses(b: &Bundle, out: &mut Outcome) -> Result<bool> {
    let ok = out.hypothesis("hom-algebra", b.run_check("hom-algebra")?);
    if b.rb_s.is_none() && b.lambda.is_some() {
        return Ok(out.hypothesis("weighted-rb", b.run_check("weighted-rb")?) && ok);
    }
    Ok(out.hypothesis("rb-system", b.run_check("rb-system")?) && ok)
}

fn rb_system(b: &Bundle) -> Result<homalg::rota_baxter::RotaBaxterSystem> {
    match (&b.rb_s, &b.lambda) {
        (None, Some(lambda)) => {
            let r = b.rb_r.as_ref().ok_or(Error::MissingSection("R"))?;
            rbs_from_weighted_operator(&b.algebra(), r, lambda)
        }
        _ => b.rb_system(),
    }
}

fn rbs_dendriform(b: &Bundle, out: &mut Outcome) -> Result<()> {
    if !rb_hypotheses(b, out)? {
        return Ok(());
    }
    let sys = rb_system(b)?;
    if let Some(d) = out.construct("hom-dendriform", dendriform_from_rbs(&sys))? {
        out.conclusion("hom-dendriform", check_hom_dendriform(&d));
    }
    if let Some(star) = out.construct("star-product", star_product(&sys))? {
        out.conclusion("star-product", check_hom_algebra(&star));
    }
    Ok(())
}

fn dend_prelie(b: &Bundle, out: &mut Outcome) -> Result<()> {
    let dend = if b.prec.is_some() || b.succ.is_some() {
        let d = b.dendriform()?;
        if !out.hypothesis("hom-dendriform", check_hom_dendriform(&d)) {
            return Ok(());
        }
        d
    } else {
        if !rb_hypotheses(b, out)? {
            return Ok(());
        }
        let d = dendriform_from_rbs(&rb_system(b)?)?;
        out.hypothesis("hom-dendriform", check_hom_dendriform(&d));
        d
    };
    if let Some(p) = out.construct("hom-prelie", prelie_from_dendriform(&dend))? {
        out.conclusion("hom-prelie", check_hom_prelie(&p));
    }
    let swapped = HomPreLie {
        alpha: dend.alpha.clone(),
        diamond: dend.swapped_difference(),
    };
    out.details
        .insert("swapped_prelie".into(), Value::Bool(check_hom_prelie(&swapped).passed()));
    Ok(())
}

fn pseudotwistor(b: &Bundle, out: &mut Outcome) -> Result<()> {
    if !rb_hypotheses(b, out)? {
        return Ok(());
    }
    let sys = rb_system(b)?;
    let a = b.algebra();
    let Some(t) = out.construct("weak-pseudotwistor", pseudotwistor_from_rbs(&sys))? else {
        return Ok(());
    };
    out.conclusion("weak-pseudotwistor", check_weak_pseudotwistor(&a, &t)?);
    if let Some(twisted) = out.construct("twisted-product", product_from_twistor(&a, &t))? {
        out.conclusion("twisted-product", check_hom_algebra(&twisted));
        let star = star_product(&sys)?;
        let mut same = CheckReport::new("twisted-product-is-star");
        let n = a.dim();
        for i in 0..n {
            for j in 0..n {
                same.compare(
                    "twisted-product-is-star",
                    &[i, j],
                    twisted.mu().product(i, j).coords(),
                    star.mu().product(i, j).coords(),
                );
            }
        }
        out.conclusion("twisted-product-is-star", same);
    }
    Ok(())
}

fn yb_hypotheses(b: &Bundle, out: &mut Outcome) -> Result<bool> {
    let ok = out.hypothesis("hom-algebra", b.run_check("hom-algebra")?);
    Ok(out.hypothesis("yb-pair", b.run_check("yb-pair")?) && ok)
}

fn pair(b: &Bundle) -> Result<YangBaxterPair> {
    let (r, s) = b.tensors()?;
    YangBaxterPair::new(b.algebra(), r.clone(), s.clone())
}

fn ybp_to_a2rbs(b: &Bundle, out: &mut Outcome) -> Result<()> {
    if !yb_hypotheses(b, out)? {
        return Ok(());
    }
    let p = pair(b)?;
    if let Some(sys) = out.construct("alpha2-rb-system", rbs_from_ybp(&p))? {
        out.conclusion("alpha2-rb-system", check_alpha_n_rbs(p.base(), sys.r(), sys.s(), 2)?);
    }
    if let Some((dend, star, prelie)) = out.construct("induced-structures", ybp_induced_structures(&p))? {
        out.conclusion("alpha3-dendriform", check_hom_dendriform(&dend));
        out.conclusion("alpha3-star-product", check_hom_algebra(&star));
        out.conclusion("alpha3-prelie", check_hom_prelie(&prelie));
    }
    Ok(())
}

fn quasitriangular(b: &Bundle, out: &mut Outcome) -> Result<()> {
    if !yb_hypotheses(b, out)? {
        return Ok(());
    }
    let p = pair(b)?;
    if let Some(qt) = out.construct("covariant-bialgebra", build_quasitriangular(&p))? {
        out.conclusion("covariant-bialgebra", check_covariant_hom_bialgebra(&qt)?);
        if p.r() == p.s() {
            out.conclusion("infinitesimal", check_infinitesimal_compat(&qt.base, &qt.delta));
        }
    }
    out.conclusion("quasitriangular-condition", check_quasitriangular_condition(p.base(), p.r(), p.s())?);
    Ok(())
}

fn invariance_hypotheses(b: &Bundle, out: &mut Outcome) -> Result<bool> {
    let a = b.algebra();
    let (r, s) = b.tensors()?;
    let ok = out.hypothesis("hom-algebra", b.run_check("hom-algebra")?);
    let ok_r = out.hypothesis("r-alpha-invariant", check_alpha_invariant(&a, r)?);
    let ok_s = out.hypothesis("s-alpha-invariant", check_alpha_invariant(&a, s)?);
    Ok(ok && ok_r && ok_s)
}

fn characterize(b: &Bundle, out: &mut Outcome) -> Result<()> {
    if !invariance_hypotheses(b, out)? {
        return Ok(());
    }
    let (r, s) = b.tensors()?;
    let c = characterization(&b.algebra(), r, s)?;
    let verdicts = c.verdicts();
    out.details
        .insert("verdicts".into(), Value::from(verdicts.to_vec()));
    let f = b.field();
    let flag = |v: bool| if v { f.one() } else { f.zero() };
    let flags: Vec<Scalar> = verdicts.iter().map(|&v| flag(v)).collect();
    let mut equal = CheckReport::new("equivalence");
    equal.compare("equivalence", &[], &flags, &vec![flags[0].clone(); 3]);
    out.conclusion("equivalence", equal);
    Ok(())
}

/// The covariant bialgebra stored in the bundle, or the quasitriangular one
/// built from its `r`, `s`.
fn covariant_input(b: &Bundle, out: &mut Outcome) -> Result<Option<CovariantHomBialgebra>> {
    if b.coproduct.is_some() {
        let ok = out.hypothesis("hom-algebra", b.run_check("hom-algebra")?);
        let cov = b.covariant()?;
        let ok_cov = out.hypothesis("covariant-bialgebra", check_covariant_hom_bialgebra(&cov)?);
        return Ok((ok && ok_cov).then_some(cov));
    }
    if !yb_hypotheses(b, out)? {
        return Ok(None);
    }
    let cov = build_quasitriangular(&pair(b)?)?;
    out.hypothesis("covariant-bialgebra", check_covariant_hom_bialgebra(&cov)?);
    Ok(Some(cov))
}

fn perturbation(b: &Bundle, out: &mut Outcome) -> Result<()> {
    let Some(cov) = covariant_input(b, out)? else {
        return Ok(());
    };
    let a = b.algebra();
    let (r, s) = b.tensors()?;
    let ok_r = out.hypothesis("r-alpha-invariant", check_alpha_invariant(&a, r)?);
    let ok_s = out.hypothesis("s-alpha-invariant", check_alpha_invariant(&a, s)?);
    if !(ok_r && ok_s) {
        return Ok(());
    }
    let displayed = check_perturbation(&cov, r, s)?;
    let corrected = check_perturbation_with_derivations(&cov, r, s)?;
    let flag = |v: bool| Value::Bool(v);
    out.details.insert("condition".into(), flag(displayed.condition.passed()));
    out.details.insert("direct".into(), flag(displayed.direct.passed()));
    out.details
        .insert("condition_with_derivations".into(), flag(corrected.condition.passed()));
    let f = b.field();
    let as_scalar = |v: bool| if v { f.one() } else { f.zero() };
    let mut agree = CheckReport::new("biconditional");
    agree.compare(
        "condition-iff-direct",
        &[],
        &[as_scalar(displayed.condition.passed())],
        &[as_scalar(displayed.direct.passed())],
    );
    out.conclusion("biconditional", agree);
    Ok(())
}

fn dualization(b: &Bundle, out: &mut Outcome) -> Result<()> {
    let Some(cov) = covariant_input(b, out)? else {
        return Ok(());
    };
    let Some(dual) = out.construct("dual-covariant", dualize(&cov))? else {
        return Ok(());
    };
    out.conclusion("dual-covariant", check_dual_covariant_hom_bialgebra(&dual)?);
    let (alpha, mu, delta, d1, d2) = dual.transpose_back();
    let mut back = CheckReport::new("double-transpose");
    back.compare("alpha", &[], alpha.data(), cov.base.alpha().data());
    back.compare("product", &[], mu.data(), cov.base.mu().data());
    back.compare("coproduct", &[], delta.data(), cov.delta.data());
    back.compare("delta1", &[], d1.data(), cov.delta1.data());
    back.compare("delta2", &[], d2.data(), cov.delta2.data());
    out.conclusion("double-transpose", back);
    Ok(())
}

/// The bundle's `alpha` is used as the morphism `φ` of the plain product
/// `mul`; covariant data (stored coproducts or `r`, `s`) is induced too.
fn induced_composition(b: &Bundle, out: &mut Outcome) -> Result<()> {
    let (f, n) = (b.field(), b.dim());
    let id = LinearMap::identity(f, n);
    let plain = HomAlgebra::new(b.basis.clone(), b.mul.clone(), id.clone())?;
    let phi = &b.alpha;
    let ok_assoc = out.hypothesis("associative", check_hom_associativity(&b.mul, &id));
    let ok_morph = out.hypothesis("algebra-morphism", check_algebra_morphism(&b.mul, phi));
    if !(ok_assoc && ok_morph) {
        return Ok(());
    }
    let cov = if b.coproduct.is_some() {
        Some(CovariantHomBialgebra::new(
            plain.clone(),
            b.coproduct.clone().ok_or(Error::MissingSection("coproduct"))?,
            b.delta1.clone().ok_or(Error::MissingSection("delta1"))?,
            b.delta2.clone().ok_or(Error::MissingSection("delta2"))?,
        )?)
    } else if let (Some(r), Some(s)) = (&b.r, &b.s) {
        let yb = homalg::yang_baxter::check_yb_pair(&plain, r, s)?;
        if !out.hypothesis("plain-yb-pair", yb) {
            return Ok(());
        }
        Some(build_quasitriangular(&YangBaxterPair::new(plain.clone(), r.clone(), s.clone())?)?)
    } else {
        None
    };
    if let Some(cov) = &cov {
        let ok = out.hypothesis("plain-covariant-bialgebra", check_covariant_hom_bialgebra(cov)?);
        let mut all = ok;
        for (name, theta) in [("coproduct-morphism", &cov.delta), ("delta1-morphism", &cov.delta1), ("delta2-morphism", &cov.delta2)] {
            all &= out.hypothesis(name, check_coalgebra_morphism(theta, phi));
        }
        if !all {
            return Ok(());
        }
    }
    if let Some(induced) = out.construct("induced-hom-algebra", induce_algebra_by_composition(&plain, phi))? {
        out.conclusion("induced-hom-algebra", check_hom_algebra(&induced));
    }
    if let Some(cov) = cov {
        if let Some(induced) = out.construct("induced-covariant", induce_covariant_by_composition(&cov, phi))? {
            out.conclusion("induced-covariant", check_covariant_hom_bialgebra(&induced)?);
        }
    }
    Ok(())
}
