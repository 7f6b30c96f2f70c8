use crate::bundle::Bundle;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::hom::{induce_algebra_by_composition, HomAlgebra};
use crate::tensor::{BilinearMap, LinearMap, Tensor2, Vector};

pub const CATALOG_NAMES: &[&str] = &[
    "z2",
    "dual-numbers",
    "dual-numbers-gf5-alpha2",
    "n2-nonassoc",
    "paper-nilpotent-pair",
    "paper-unital-pair",
];

/// A named bundle together with where its data comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogInstance {
    pub name: String,
    pub bundle: Bundle,
    pub provenance: String,
}

pub(crate) fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// Span of `a, b` with every product zero.
pub fn zero_algebra(field: FieldSpec) -> HomAlgebra {
    HomAlgebra::associative(labels(&["a", "b"]), BilinearMap::zero(field, 2)).expect("square data")
}

/// `k[x]/(x²)` on the basis `1, x`.
pub fn dual_numbers(field: FieldSpec) -> HomAlgebra {
    let mu = BilinearMap::from_entries(field, 2, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)]);
    HomAlgebra::associative(labels(&["1", "x"]), mu).expect("square data")
}

/// `a·a = b`, `a·b = a`, other products zero; `(a·a)·a ≠ a·(a·a)`.
pub fn nonassociative_pair(field: FieldSpec) -> HomAlgebra {
    let mu = BilinearMap::from_entries(field, 2, &[(0, 0, 1, 1), (0, 1, 0, 1)]);
    HomAlgebra::associative(labels(&["a", "b"]), mu).expect("square data")
}

/// Right multiplication by `x` on the dual numbers, used as both `R` and `S`.
fn times_x(field: FieldSpec) -> LinearMap {
    LinearMap::from_i64(field, &[&[0, 0], &[1, 0]])
}

fn default_field(name: &str) -> FieldSpec {
    match name {
        "dual-numbers-gf5-alpha2" => FieldSpec::gf(5),
        _ => FieldSpec::Rational,
    }
}

/// The named instance over its default field.
pub fn catalog(name: &str) -> Result<CatalogInstance> {
    if !CATALOG_NAMES.contains(&name) {
        return Err(Error::UnknownName(name.to_string()));
    }
    catalog_over(name, default_field(name))
}

/// The named instance over another field. The GF(5) instance needs a field
/// where `2` is a unit of order other than 1; it is rebuilt with `diag(1, 2)`.
pub fn catalog_over(name: &str, field: FieldSpec) -> Result<CatalogInstance> {
    let (bundle, provenance) = match name {
        "z2" => (
            Bundle::from_algebra(&zero_algebra(field)).declaring(&["hom-algebra"]),
            "two-dimensional algebra with zero multiplication",
        ),
        "dual-numbers" => {
            let mut b = Bundle::from_algebra(&dual_numbers(field)).declaring(&["hom-algebra", "rb-system"]);
            b.rb_r = Some(times_x(field));
            b.rb_s = Some(times_x(field));
            (b, "k[x]/(x^2) with the Rota-Baxter system R = S = right multiplication by x")
        }
        "dual-numbers-gf5-alpha2" => {
            if field.characteristic() == 2 {
                return Err(Error::InvalidField("diag(1, 2) is singular in characteristic 2".into()));
            }
            let twist = LinearMap::from_i64(field, &[&[1, 0], &[0, 2]]);
            let a = induce_algebra_by_composition(&dual_numbers(field), &twist)?;
            let mut b = Bundle::from_algebra(&a).declaring(&["hom-algebra", "yb-pair"]);
            b.r = Some(Tensor2::basis(field, 2, 0, 0));
            b.s = Some(Tensor2::zero(field, 2));
            (b, "dual numbers twisted by the algebra map x -> 2x, with the pair (1⊗1, 0)")
        }
        "n2-nonassoc" => (
            Bundle::from_algebra(&nonassociative_pair(field)),
            "negative fixture: a·a = b, a·b = a is not associative",
        ),
        "paper-nilpotent-pair" => {
            let mut b = Bundle::from_algebra(&zero_algebra(field)).declaring(&["hom-algebra", "yb-pair"]);
            b.r = Some(Tensor2::basis(field, 2, 0, 0));
            b.s = Some(Tensor2::basis(field, 2, 1, 1));
            (b, "r = a⊗a, s = b⊗b with a² = b² = ab = ba = 0 and α fixing a, b")
        }
        "paper-unital-pair" => {
            let mut b = Bundle::from_algebra(&dual_numbers(field)).declaring(&["hom-algebra", "yb-pair"]);
            let one_x = Tensor2::outer(&Vector::basis(field, 2, 0), &Vector::basis(field, 2, 1));
            b.r = Some(one_x.clone());
            b.s = Some(one_x);
            (b, "r = 1⊗x, s = 1⊗x in k[x]/(x²), since x² = 0")
        }
        other => return Err(Error::UnknownName(other.to_string())),
    };
    let bundle = bundle.named(name);
    bundle.validate()?;
    Ok(CatalogInstance {
        name: name.to_string(),
        bundle,
        provenance: provenance.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_instance_loads() {
        for name in CATALOG_NAMES {
            let inst = catalog(name).unwrap();
            assert_eq!(inst.name, *name);
            let text = inst.bundle.to_json_string();
            assert_eq!(Bundle::from_json_str(&text, true).unwrap(), inst.bundle);
        }
        assert!(matches!(catalog("nope"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn negative_fixture_fails_first_at_aaa() {
        let b = catalog("n2-nonassoc").unwrap().bundle;
        let report = b.run_check("hom-assoc").unwrap();
        assert_eq!(report.first_witness().unwrap().basis, vec![0, 0, 0]);
    }
}
