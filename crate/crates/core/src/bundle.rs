//! JSON interchange format for every structure the crate handles.
//!
//! A bundle is one Hom-associative algebra plus any number of optional
//! sections living on it. Scalars are stored as strings, arrays are nested
//! by index (`mul[i][j][k]` is the coefficient of `e_k` in `e_i·e_j`,
//! `alpha[i][j]` is the coefficient of `e_i` in `α(e_j)`). Sections named in
//! `declares` are validated against their checkers when loading.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use serde_json::{Map, Value};

use crate::covariant::{
    characterization, check_covariant_hom_bialgebra, check_dual_covariant_hom_bialgebra,
    check_quasitriangular_condition, CovariantHomBialgebra, DualCovariantHomBialgebra,
};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::hom::{
    check_hom_algebra, check_hom_associativity, check_hom_coalgebra, check_infinitesimal_compat,
    check_multiplicativity, default_labels, HomAlgebra, HomCoalgebra,
};
use crate::report::CheckReport;
use crate::rota_baxter::{
    check_hom_dendriform, check_hom_prelie, check_rb_system, check_weak_pseudotwistor, check_weighted_rb,
    HomDendriform, HomPreLie, RotaBaxterSystem,
};
use crate::tensor::{BilinearMap, Coproduct, LinearMap, Tensor2, TwistorMap};
use crate::yang_baxter::{check_alpha_n_rbs, check_yb_pair};

/// Names accepted by [`Bundle::run_check`], in canonical order.
pub const CHECK_NAMES: &[&str] = &[
    "hom-assoc",
    "multiplicativity",
    "hom-algebra",
    "rb-system",
    "weighted-rb",
    "alpha-n-rbs",
    "yb-pair",
    "quasitriangular-condition",
    "characterization",
    "hom-dendriform",
    "hom-prelie",
    "pseudotwistor",
    "hom-coalgebra",
    "infinitesimal",
    "covariant-bialgebra",
    "dual-covariant",
];

const KEYS: &[&str] = &[
    "name",
    "field",
    "dim",
    "basis",
    "mul",
    "alpha",
    "R",
    "S",
    "lambda",
    "n_power",
    "r",
    "s",
    "coproduct",
    "delta1",
    "delta2",
    "prec",
    "succ",
    "diamond",
    "partial1",
    "partial2",
    "twistor",
    "twistor_companion",
    "declares",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bundle {
    pub name: Option<String>,
    pub basis: Vec<String>,
    pub mul: BilinearMap,
    pub alpha: LinearMap,
    pub rb_r: Option<LinearMap>,
    pub rb_s: Option<LinearMap>,
    pub lambda: Option<Scalar>,
    pub n_power: Option<u32>,
    pub r: Option<Tensor2>,
    pub s: Option<Tensor2>,
    pub coproduct: Option<Coproduct>,
    pub delta1: Option<Coproduct>,
    pub delta2: Option<Coproduct>,
    pub prec: Option<BilinearMap>,
    pub succ: Option<BilinearMap>,
    pub diamond: Option<BilinearMap>,
    pub partial1: Option<BilinearMap>,
    pub partial2: Option<BilinearMap>,
    pub twistor: Option<TwistorMap>,
    pub declares: Vec<String>,
}

impl Bundle {
    pub fn from_algebra(a: &HomAlgebra) -> Self {
        Self {
            name: None,
            basis: a.basis().to_vec(),
            mul: a.mu().clone(),
            alpha: a.alpha().clone(),
            rb_r: None,
            rb_s: None,
            lambda: None,
            n_power: None,
            r: None,
            s: None,
            coproduct: None,
            delta1: None,
            delta2: None,
            prec: None,
            succ: None,
            diamond: None,
            partial1: None,
            partial2: None,
            twistor: None,
            declares: Vec::new(),
        }
    }

    pub fn from_covariant(b: &CovariantHomBialgebra) -> Self {
        Self {
            coproduct: Some(b.delta.clone()),
            delta1: Some(b.delta1.clone()),
            delta2: Some(b.delta2.clone()),
            ..Self::from_algebra(&b.base)
        }
    }

    /// The dual structure: `mul` holds `△*`, `coproduct` holds `μ*`.
    pub fn from_dual(d: &DualCovariantHomBialgebra) -> Self {
        Self {
            coproduct: Some(d.coproduct.clone()),
            partial1: Some(d.partial1.clone()),
            partial2: Some(d.partial2.clone()),
            ..Self::from_algebra(&d.algebra())
        }
    }

    pub fn named(mut self, name: &str) -> Self {
        self.name = Some(name.to_string());
        self
    }

    pub fn declaring(mut self, checks: &[&str]) -> Self {
        self.declares = checks.iter().map(|c| c.to_string()).collect();
        self
    }

    pub fn field(&self) -> FieldSpec {
        self.alpha.field()
    }

    pub fn dim(&self) -> usize {
        self.alpha.dim()
    }

    pub fn algebra(&self) -> HomAlgebra {
        HomAlgebra::new(self.basis.clone(), self.mul.clone(), self.alpha.clone()).expect("shapes checked on parse")
    }

    pub fn rb_maps(&self) -> Result<(&LinearMap, &LinearMap)> {
        Ok((required(&self.rb_r, "R")?, required(&self.rb_s, "S")?))
    }

    pub fn rb_system(&self) -> Result<RotaBaxterSystem> {
        let (r, s) = self.rb_maps()?;
        RotaBaxterSystem::new(self.algebra(), r.clone(), s.clone())
    }

    pub fn tensors(&self) -> Result<(&Tensor2, &Tensor2)> {
        Ok((required(&self.r, "r")?, required(&self.s, "s")?))
    }

    pub fn covariant(&self) -> Result<CovariantHomBialgebra> {
        CovariantHomBialgebra::new(
            self.algebra(),
            required(&self.coproduct, "coproduct")?.clone(),
            required(&self.delta1, "delta1")?.clone(),
            required(&self.delta2, "delta2")?.clone(),
        )
    }

    pub fn coalgebra(&self) -> Result<HomCoalgebra> {
        HomCoalgebra::new(self.basis.clone(), required(&self.coproduct, "coproduct")?.clone(), self.alpha.clone())
    }

    pub fn dendriform(&self) -> Result<HomDendriform> {
        Ok(HomDendriform {
            alpha: self.alpha.clone(),
            prec: required(&self.prec, "prec")?.clone(),
            succ: required(&self.succ, "succ")?.clone(),
        })
    }

    pub fn dual(&self) -> Result<DualCovariantHomBialgebra> {
        Ok(DualCovariantHomBialgebra {
            basis: self.basis.clone(),
            alpha: self.alpha.clone(),
            product: self.mul.clone(),
            coproduct: required(&self.coproduct, "coproduct")?.clone(),
            partial1: required(&self.partial1, "partial1")?.clone(),
            partial2: required(&self.partial2, "partial2")?.clone(),
        })
    }

    /// Runs one named checker against the sections it needs.
    pub fn run_check(&self, name: &str) -> Result<CheckReport> {
        let a = self.algebra();
        let mut report = match name {
            "hom-assoc" => check_hom_associativity(&self.mul, &self.alpha),
            "multiplicativity" => check_multiplicativity(&self.mul, &self.alpha),
            "hom-algebra" => check_hom_algebra(&a),
            "rb-system" => {
                let (r, s) = self.rb_maps()?;
                check_rb_system(&a, r, s)?
            }
            "weighted-rb" => {
                let lambda = required(&self.lambda, "lambda")?;
                check_weighted_rb(&a, required(&self.rb_r, "R")?, lambda)?
            }
            "alpha-n-rbs" => {
                let (r, s) = self.rb_maps()?;
                check_alpha_n_rbs(&a, r, s, *required(&self.n_power, "n_power")?)?
            }
            "yb-pair" => {
                let (r, s) = self.tensors()?;
                check_yb_pair(&a, r, s)?
            }
            "quasitriangular-condition" => {
                let (r, s) = self.tensors()?;
                check_quasitriangular_condition(&a, r, s)?
            }
            "characterization" => {
                let (r, s) = self.tensors()?;
                let c = characterization(&a, r, s)?;
                let mut out = CheckReport::new("characterization");
                let verdicts = c.verdicts();
                let flags: Vec<Scalar> = verdicts
                    .iter()
                    .map(|&v| if v { a.field().one() } else { a.field().zero() })
                    .collect();
                let first = vec![flags[0].clone(); 3];
                out.compare("equivalence", &[], &flags, &first);
                out
            }
            "hom-dendriform" => check_hom_dendriform(&self.dendriform()?),
            "hom-prelie" => check_hom_prelie(&HomPreLie {
                alpha: self.alpha.clone(),
                diamond: required(&self.diamond, "diamond")?.clone(),
            }),
            "pseudotwistor" => check_weak_pseudotwistor(&a, required(&self.twistor, "twistor")?)?,
            "hom-coalgebra" => check_hom_coalgebra(&self.coalgebra()?),
            "infinitesimal" => check_infinitesimal_compat(&a, required(&self.coproduct, "coproduct")?),
            "covariant-bialgebra" => check_covariant_hom_bialgebra(&self.covariant()?)?,
            "dual-covariant" => {
                check_dual_covariant_hom_bialgebra(&self.dual()?)?
            }
            other => return Err(Error::UnknownName(other.to_string())),
        };
        report.name = name.to_string();
        Ok(report)
    }

    /// Runs every declared check and fails on the first failing one.
    pub fn validate(&self) -> Result<()> {
        for check in &self.declares {
            self.run_check(check)?.ok_or(Error::InvalidSystem)?;
        }
        Ok(())
    }

    pub fn from_json_str(text: &str, validate: bool) -> Result<Self> {
        let value: Value = serde_json::from_str(text).map_err(|e| Error::Schema {
            path: String::new(),
            message: format!("invalid JSON: {e}"),
        })?;
        let bundle = Self::from_value(&value)?;
        if validate {
            bundle.validate()?;
        }
        Ok(bundle)
    }

    pub fn from_value(value: &Value) -> Result<Self> {
        let obj = value.as_object().ok_or_else(|| schema("", "expected an object"))?;
        for key in obj.keys() {
            if !KEYS.contains(&key.as_str()) {
                return Err(schema(&format!("/{key}"), "unknown key"));
            }
        }
        let field_text = obj
            .get("field")
            .ok_or_else(|| schema("/field", "missing"))?
            .as_str()
            .ok_or_else(|| schema("/field", "expected a string"))?;
        let field = FieldSpec::from_str(field_text).map_err(|e| schema("/field", &e.to_string()))?;
        let dim = obj
            .get("dim")
            .ok_or_else(|| schema("/dim", "missing"))?
            .as_u64()
            .ok_or_else(|| schema("/dim", "expected a non-negative integer"))? as usize;
        if dim == 0 {
            return Err(schema("/dim", "dimension must be positive"));
        }
        let basis = match obj.get("basis") {
            None => default_labels(dim),
            Some(v) => {
                let items = array(v, "/basis", dim)?;
                items
                    .iter()
                    .enumerate()
                    .map(|(i, x)| {
                        x.as_str()
                            .map(str::to_string)
                            .ok_or_else(|| schema(&format!("/basis/{i}"), "expected a string"))
                    })
                    .collect::<Result<Vec<_>>>()?
            }
        };
        let reader = Reader { field, dim };
        let mul = reader.bilinear(obj.get("mul").ok_or_else(|| schema("/mul", "missing"))?, "/mul")?;
        let alpha = reader.matrix(obj.get("alpha").ok_or_else(|| schema("/alpha", "missing"))?, "/alpha")?;
        let opt = |key: &str| obj.get(key);
        let name = match opt("name") {
            None => None,
            Some(v) => Some(v.as_str().ok_or_else(|| schema("/name", "expected a string"))?.to_string()),
        };
        let lambda = opt("lambda").map(|v| reader.scalar(v, "/lambda")).transpose()?;
        let n_power = match opt("n_power") {
            None => None,
            Some(v) => {
                let n = v.as_u64().ok_or_else(|| schema("/n_power", "expected a non-negative integer"))?;
                Some(u32::try_from(n).map_err(|_| schema("/n_power", "out of range"))?)
            }
        };
        let twistor = match opt("twistor") {
            None => None,
            Some(v) => {
                let n2 = dim * dim;
                let matrix = reader.square(v, "/twistor", n2)?;
                let companion = opt("twistor_companion")
                    .map(|c| reader.square(c, "/twistor_companion", n2 * dim))
                    .transpose()?;
                Some(TwistorMap::new(field, dim, matrix, companion)?)
            }
        };
        if twistor.is_none() && opt("twistor_companion").is_some() {
            return Err(schema("/twistor_companion", "companion without twistor"));
        }
        let declares = match opt("declares") {
            None => Vec::new(),
            Some(v) => {
                let items = v.as_array().ok_or_else(|| schema("/declares", "expected an array"))?;
                items
                    .iter()
                    .enumerate()
                    .map(|(i, x)| {
                        let path = format!("/declares/{i}");
                        let s = x.as_str().ok_or_else(|| schema(&path, "expected a string"))?;
                        if !CHECK_NAMES.contains(&s) {
                            return Err(schema(&path, &format!("unknown check {s:?}")));
                        }
                        Ok(s.to_string())
                    })
                    .collect::<Result<Vec<_>>>()?
            }
        };
        Ok(Self {
            name,
            basis,
            mul,
            alpha,
            rb_r: opt("R").map(|v| reader.matrix(v, "/R")).transpose()?,
            rb_s: opt("S").map(|v| reader.matrix(v, "/S")).transpose()?,
            lambda,
            n_power,
            r: opt("r").map(|v| reader.tensor2(v, "/r")).transpose()?,
            s: opt("s").map(|v| reader.tensor2(v, "/s")).transpose()?,
            coproduct: opt("coproduct").map(|v| reader.coproduct(v, "/coproduct")).transpose()?,
            delta1: opt("delta1").map(|v| reader.coproduct(v, "/delta1")).transpose()?,
            delta2: opt("delta2").map(|v| reader.coproduct(v, "/delta2")).transpose()?,
            prec: opt("prec").map(|v| reader.bilinear(v, "/prec")).transpose()?,
            succ: opt("succ").map(|v| reader.bilinear(v, "/succ")).transpose()?,
            diamond: opt("diamond").map(|v| reader.bilinear(v, "/diamond")).transpose()?,
            partial1: opt("partial1").map(|v| reader.bilinear(v, "/partial1")).transpose()?,
            partial2: opt("partial2").map(|v| reader.bilinear(v, "/partial2")).transpose()?,
            twistor,
            declares,
        })
    }

    pub fn to_value(&self) -> Value {
        let n = self.dim();
        let mut m = Map::new();
        if let Some(name) = &self.name {
            m.insert("name".into(), Value::String(name.clone()));
        }
        m.insert("field".into(), Value::String(self.field().to_string()));
        m.insert("dim".into(), Value::from(n));
        m.insert("basis".into(), Value::from(self.basis.clone()));
        m.insert("mul".into(), cube(n, |i, j, k| self.mul.get(i, j, k)));
        m.insert("alpha".into(), grid(n, n, |i, j| self.alpha.get(i, j)));
        if let Some(f) = &self.rb_r {
            m.insert("R".into(), grid(n, n, |i, j| f.get(i, j)));
        }
        if let Some(f) = &self.rb_s {
            m.insert("S".into(), grid(n, n, |i, j| f.get(i, j)));
        }
        if let Some(l) = &self.lambda {
            m.insert("lambda".into(), Value::String(l.to_string()));
        }
        if let Some(p) = self.n_power {
            m.insert("n_power".into(), Value::from(p));
        }
        for (key, t) in [("r", &self.r), ("s", &self.s)] {
            if let Some(t) = t {
                m.insert(key.into(), grid(n, n, |i, j| t.get(i, j)));
            }
        }
        for (key, d) in [("coproduct", &self.coproduct), ("delta1", &self.delta1), ("delta2", &self.delta2)] {
            if let Some(d) = d {
                m.insert(key.into(), cube(n, |i, j, k| d.get(i, j, k)));
            }
        }
        for (key, b) in [
            ("prec", &self.prec),
            ("succ", &self.succ),
            ("diamond", &self.diamond),
            ("partial1", &self.partial1),
            ("partial2", &self.partial2),
        ] {
            if let Some(b) = b {
                m.insert(key.into(), cube(n, |i, j, k| b.get(i, j, k)));
            }
        }
        if let Some(t) = &self.twistor {
            let n2 = n * n;
            m.insert("twistor".into(), grid(n2, n2, |i, j| &t.matrix()[i * n2 + j]));
            if let Some(c) = t.companion() {
                let n3 = n2 * n;
                m.insert("twistor_companion".into(), grid(n3, n3, |i, j| &c[i * n3 + j]));
            }
        }
        if !self.declares.is_empty() {
            m.insert("declares".into(), Value::from(self.declares.clone()));
        }
        Value::Object(m)
    }

    /// Canonical text: two-space indentation, innermost arrays on one line,
    /// trailing newline.
    pub fn to_json_string(&self) -> String {
        let mut out = String::new();
        write_canonical(&mut out, &self.to_value(), 0);
        out.push('\n');
        out
    }

    /// Single-line form used for JSON-lines streams.
    pub fn to_json_line(&self) -> String {
        self.to_value().to_string()
    }
}

pub fn load_bundle(path: impl AsRef<Path>, validate: bool) -> Result<Bundle> {
    let text = std::fs::read_to_string(path)?;
    Bundle::from_json_str(&text, validate)
}

pub fn save_bundle(bundle: &Bundle, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, bundle.to_json_string())?;
    Ok(())
}

/// Pretty-prints `value` with scalar-only arrays kept on a single line.
pub fn write_canonical(out: &mut String, value: &Value, indent: usize) {
    let pad = |out: &mut String, k: usize| out.push_str(&"  ".repeat(k));
    match value {
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (i, (k, v)) in map.iter().enumerate() {
                pad(out, indent + 1);
                let _ = write!(out, "{}: ", Value::String(k.clone()));
                write_canonical(out, v, indent + 1);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            pad(out, indent);
            out.push('}');
        }
        Value::Array(items) if items.iter().any(|x| x.is_array() || x.is_object()) => {
            out.push_str("[\n");
            for (i, v) in items.iter().enumerate() {
                pad(out, indent + 1);
                write_canonical(out, v, indent + 1);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            pad(out, indent);
            out.push(']');
        }
        Value::Array(items) => {
            out.push('[');
            for (i, v) in items.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                out.push_str(&v.to_string());
            }
            out.push(']');
        }
        other => out.push_str(&other.to_string()),
    }
}

fn required<'a, T>(section: &'a Option<T>, name: &'static str) -> Result<&'a T> {
    section.as_ref().ok_or(Error::MissingSection(name))
}

fn schema(path: &str, message: &str) -> Error {
    Error::Schema {
        path: path.to_string(),
        message: message.to_string(),
    }
}

fn array<'a>(v: &'a Value, path: &str, len: usize) -> Result<&'a Vec<Value>> {
    let items = v.as_array().ok_or_else(|| schema(path, "expected an array"))?;
    if items.len() != len {
        return Err(Error::Shape {
            path: path.to_string(),
            expected: len,
            found: items.len(),
        });
    }
    Ok(items)
}

fn grid<'a>(rows: usize, cols: usize, f: impl Fn(usize, usize) -> &'a Scalar) -> Value {
    Value::Array(
        (0..rows)
            .map(|i| Value::Array((0..cols).map(|j| Value::String(f(i, j).to_string())).collect()))
            .collect(),
    )
}

fn cube<'a>(n: usize, f: impl Fn(usize, usize, usize) -> &'a Scalar) -> Value {
    Value::Array((0..n).map(|i| grid(n, n, |j, k| f(i, j, k))).collect())
}

struct Reader {
    field: FieldSpec,
    dim: usize,
}

impl Reader {
    fn scalar(&self, v: &Value, path: &str) -> Result<Scalar> {
        let text = v.as_str().ok_or_else(|| schema(path, "expected a scalar string"))?;
        self.field.parse(text).map_err(|e| match e {
            Error::Parse(msg) => Error::Parse(format!("at {path}: {msg}")),
            Error::DivisionByZero => Error::Parse(format!("at {path}: zero denominator")),
            other => other,
        })
    }

    /// Row-major `rows × rows` scalars.
    fn square(&self, v: &Value, path: &str, rows: usize) -> Result<Vec<Scalar>> {
        let mut out = Vec::with_capacity(rows * rows);
        for (i, row) in array(v, path, rows)?.iter().enumerate() {
            let p = format!("{path}/{i}");
            for (j, x) in array(row, &p, rows)?.iter().enumerate() {
                out.push(self.scalar(x, &format!("{p}/{j}"))?);
            }
        }
        Ok(out)
    }

    fn cube(&self, v: &Value, path: &str) -> Result<Vec<Scalar>> {
        let n = self.dim;
        let mut out = Vec::with_capacity(n * n * n);
        for (i, slab) in array(v, path, n)?.iter().enumerate() {
            out.extend(self.square(slab, &format!("{path}/{i}"), n)?);
        }
        Ok(out)
    }

    fn matrix(&self, v: &Value, path: &str) -> Result<LinearMap> {
        LinearMap::new(self.field, self.dim, self.square(v, path, self.dim)?)
    }

    fn tensor2(&self, v: &Value, path: &str) -> Result<Tensor2> {
        Tensor2::new(self.field, self.dim, self.square(v, path, self.dim)?)
    }

    fn bilinear(&self, v: &Value, path: &str) -> Result<BilinearMap> {
        BilinearMap::new(self.field, self.dim, self.cube(v, path)?)
    }

    fn coproduct(&self, v: &Value, path: &str) -> Result<Coproduct> {
        Coproduct::new(self.field, self.dim, self.cube(v, path)?)
    }
}
