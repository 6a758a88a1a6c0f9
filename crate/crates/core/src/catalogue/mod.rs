//! Registry of every catalogued harmonic-number identity.
//!
//! Each [`IdentityRecord`] carries its parameter domains, admissibility
//! guards, a brute-force summand for the left-hand side and an
//! independently written closed form for the right-hand side. The sum
//! always runs over `k = 1..=n`.

mod alternating;
mod binomial;
mod reciprocal;
mod reciprocal_products;
mod squares;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, LazyLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::special;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Seed,
    Theorem,
    Corollary,
    Specialization,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Seed => "seed",
            Family::Theorem => "theorem",
            Family::Corollary => "corollary",
            Family::Specialization => "specialization",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Domain {
    NonnegInt,
    Rational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Param {
    pub name: &'static str,
    pub domain: Domain,
}

pub const N: Param = Param { name: "n", domain: Domain::NonnegInt };
pub const P: Param = Param { name: "p", domain: Domain::NonnegInt };
pub const Q: Param = Param { name: "q", domain: Domain::NonnegInt };
pub const X: Param = Param { name: "x", domain: Domain::Rational };
pub const Y: Param = Param { name: "y", domain: Domain::Rational };

/// One point of a parameter sweep. Absent parameters are `None`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct ParamAssignment {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<u32>,
    pub n: u32,
}

// Accessors panic on absent parameters; records only see assignments that
// passed `IdentityRecord::conforms`.
impl ParamAssignment {
    pub fn new(n: u32) -> Self {
        ParamAssignment { n, ..Default::default() }
    }

    pub fn with_p(mut self, p: u32) -> Self {
        self.p = Some(p);
        self
    }

    pub fn with_q(mut self, q: u32) -> Self {
        self.q = Some(q);
        self
    }

    pub fn with_x(mut self, x: Rational) -> Self {
        self.x = Some(x);
        self
    }

    pub fn with_y(mut self, y: Rational) -> Self {
        self.y = Some(y);
        self
    }

    pub fn n(&self) -> i64 {
        self.n as i64
    }

    pub fn p(&self) -> i64 {
        self.p.expect("parameter p") as i64
    }

    pub fn q(&self) -> i64 {
        self.q.expect("parameter q") as i64
    }

    pub fn x(&self) -> &Rational {
        self.x.as_ref().expect("parameter x")
    }

    pub fn y(&self) -> &Rational {
        self.y.as_ref().expect("parameter y")
    }

    fn has(&self, name: &str) -> bool {
        match name {
            "n" => true,
            "p" => self.p.is_some(),
            "q" => self.q.is_some(),
            "x" => self.x.is_some(),
            "y" => self.y.is_some(),
            _ => false,
        }
    }
}

impl fmt::Display for ParamAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(x) = &self.x {
            parts.push(format!("x={x}"));
        }
        if let Some(y) = &self.y {
            parts.push(format!("y={y}"));
        }
        if let Some(p) = self.p {
            parts.push(format!("p={p}"));
        }
        if let Some(q) = self.q {
            parts.push(format!("q={q}"));
        }
        parts.push(format!("n={}", self.n));
        f.write_str(&parts.join(" "))
    }
}

/// Decidable side condition; `reason` is what a skipped point reports.
#[derive(Clone, Copy)]
pub struct Guard {
    pub reason: &'static str,
    pub holds: fn(&ParamAssignment) -> bool,
}

impl fmt::Debug for Guard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.reason)
    }
}

/// Marks a record as an instance of `parent` under `substitution`.
#[derive(Clone, Copy)]
pub struct ParentLink {
    pub parent: &'static str,
    pub substitution: &'static str,
    pub map: fn(&ParamAssignment) -> ParamAssignment,
}

impl fmt::Debug for ParentLink {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}", self.parent, self.substitution)
    }
}

pub type SummandFn = Arc<dyn Fn(&ParamAssignment, i64) -> Result<Rational> + Send + Sync>;
pub type ClosedFormFn = Arc<dyn Fn(&ParamAssignment) -> Result<Rational> + Send + Sync>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Admissibility {
    Admissible,
    Skipped(String),
}

impl Admissibility {
    pub fn is_admissible(&self) -> bool {
        matches!(self, Admissibility::Admissible)
    }
}

#[derive(Clone)]
pub struct IdentityRecord {
    pub id: &'static str,
    pub family: Family,
    pub params: Vec<Param>,
    pub guards: Vec<Guard>,
    /// Human-readable summand, e.g. `k H_{p+k}`.
    pub summand_text: &'static str,
    pub summand: SummandFn,
    pub rhs: ClosedFormFn,
    pub anchor: &'static str,
    pub parents: Vec<ParentLink>,
    pub note: Option<&'static str>,
}

impl fmt::Debug for IdentityRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityRecord")
            .field("id", &self.id)
            .field("family", &self.family)
            .field("params", &self.params)
            .field("guards", &self.guards)
            .field("parents", &self.parents)
            .finish_non_exhaustive()
    }
}

impl IdentityRecord {
    pub fn conforms(&self, a: &ParamAssignment) -> Result<()> {
        for param in &self.params {
            if !a.has(param.name) {
                return Err(Error::Domain { id: self.id.to_string(), param: param.name });
            }
        }
        Ok(())
    }

    /// Guards are checked in declaration order; the first failing one names
    /// the skip.
    pub fn admissible(&self, a: &ParamAssignment) -> Admissibility {
        if let Err(e) = self.conforms(a) {
            return Admissibility::Skipped(e.to_string());
        }
        match self.guards.iter().find(|g| !(g.holds)(a)) {
            Some(g) => Admissibility::Skipped(g.reason.to_string()),
            None => Admissibility::Admissible,
        }
    }

    fn require(&self, a: &ParamAssignment) -> Result<()> {
        self.conforms(a)?;
        match self.admissible(a) {
            Admissibility::Admissible => Ok(()),
            Admissibility::Skipped(reason) => Err(Error::GuardViolation { id: self.id.to_string(), reason }),
        }
    }

    /// Brute-force sum without the guard check.
    pub fn sum_unchecked(&self, a: &ParamAssignment) -> Result<Rational> {
        let mut acc = Rational::zero();
        for k in 1..=a.n() {
            acc += (self.summand)(a, k)?;
        }
        Ok(acc)
    }

    pub fn eval_lhs(&self, a: &ParamAssignment) -> Result<Rational> {
        self.require(a)?;
        self.sum_unchecked(a)
    }

    pub fn eval_rhs(&self, a: &ParamAssignment) -> Result<Rational> {
        self.require(a)?;
        (self.rhs)(a)
    }

    /// Copy of this record with its closed form replaced; used to inject
    /// mutations.
    pub fn with_rhs(&self, rhs: impl Fn(&ParamAssignment) -> Result<Rational> + Send + Sync + 'static) -> Self {
        IdentityRecord { rhs: Arc::new(rhs), ..self.clone() }
    }

    pub fn param_names(&self) -> Vec<&'static str> {
        self.params.iter().map(|p| p.name).collect()
    }
}

pub struct Catalogue {
    records: Vec<IdentityRecord>,
    index: HashMap<&'static str, usize>,
}

impl Catalogue {
    fn build() -> Self {
        let mut records = Vec::new();
        binomial::register(&mut records);
        reciprocal::register(&mut records);
        squares::register(&mut records);
        alternating::register(&mut records);
        reciprocal_products::register(&mut records);
        let mut index = HashMap::new();
        for (i, r) in records.iter().enumerate() {
            let prev = index.insert(r.id, i);
            assert!(prev.is_none(), "duplicate identity id {}", r.id);
        }
        Catalogue { records, index }
    }

    pub fn records(&self) -> &[IdentityRecord] {
        &self.records
    }

    pub fn get(&self, id: &str) -> Result<&IdentityRecord> {
        self.index
            .get(id)
            .map(|&i| &self.records[i])
            .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
    }

    pub fn ids(&self) -> Vec<&'static str> {
        self.records.iter().map(|r| r.id).collect()
    }

    /// Ids resembling `id`, for "did you mean" messages.
    pub fn suggestions(&self, id: &str) -> Vec<&'static str> {
        let needle = id.to_ascii_lowercase();
        let stem = needle.split(':').next().unwrap_or("").to_string();
        let mut hits: Vec<_> = self
            .records
            .iter()
            .map(|r| r.id)
            .filter(|cand| !stem.is_empty() && (cand.starts_with(&stem) || cand.contains(&needle)))
            .collect();
        if hits.is_empty() {
            hits = self
                .records
                .iter()
                .map(|r| r.id)
                .filter(|cand| !cand.contains(':'))
                .collect();
        }
        hits
    }
}

static CATALOGUE: LazyLock<Catalogue> = LazyLock::new(Catalogue::build);

pub fn catalogue() -> &'static Catalogue {
    &CATALOGUE
}

pub fn list_identities() -> Vec<&'static str> {
    catalogue().ids()
}

pub fn eval_lhs(id: &str, a: &ParamAssignment) -> Result<Rational> {
    catalogue().get(id)?.eval_lhs(a)
}

pub fn eval_rhs(id: &str, a: &ParamAssignment) -> Result<Rational> {
    catalogue().get(id)?.eval_rhs(a)
}

pub fn admissible(id: &str, a: &ParamAssignment) -> Result<Admissibility> {
    Ok(catalogue().get(id)?.admissible(a))
}

// ---- record construction -------------------------------------------------

pub(crate) struct Rec {
    id: &'static str,
    family: Family,
    anchor: &'static str,
    params: Vec<Param>,
    guards: Vec<Guard>,
    summand: Option<(&'static str, SummandFn)>,
    rhs: Option<ClosedFormFn>,
    parents: Vec<ParentLink>,
    note: Option<&'static str>,
}

pub(crate) fn rec(id: &'static str, family: Family, params: &[Param], anchor: &'static str) -> Rec {
    Rec {
        id,
        family,
        anchor,
        params: params.to_vec(),
        guards: Vec::new(),
        summand: None,
        rhs: None,
        parents: Vec::new(),
        note: None,
    }
}

impl Rec {
    pub(crate) fn guard(mut self, reason: &'static str, holds: fn(&ParamAssignment) -> bool) -> Self {
        self.guards.push(Guard { reason, holds });
        self
    }

    pub(crate) fn lhs(
        mut self,
        text: &'static str,
        f: impl Fn(&ParamAssignment, i64) -> Result<Rational> + Send + Sync + 'static,
    ) -> Self {
        self.summand = Some((text, Arc::new(f)));
        self
    }

    pub(crate) fn rhs(mut self, f: impl Fn(&ParamAssignment) -> Result<Rational> + Send + Sync + 'static) -> Self {
        self.rhs = Some(Arc::new(f));
        self
    }

    pub(crate) fn parent(
        mut self,
        parent: &'static str,
        substitution: &'static str,
        map: fn(&ParamAssignment) -> ParamAssignment,
    ) -> Self {
        self.parents.push(ParentLink { parent, substitution, map });
        self
    }

    pub(crate) fn note(mut self, text: &'static str) -> Self {
        self.note = Some(text);
        self
    }

    pub(crate) fn build(self) -> IdentityRecord {
        let (summand_text, summand) = self.summand.unwrap_or_else(|| panic!("{}: missing summand", self.id));
        IdentityRecord {
            id: self.id,
            family: self.family,
            params: self.params,
            guards: self.guards,
            summand_text,
            summand,
            rhs: self.rhs.unwrap_or_else(|| panic!("{}: missing closed form", self.id)),
            anchor: self.anchor,
            parents: self.parents,
            note: self.note,
        }
    }
}

// ---- formula vocabulary ---------------------------------------------------

pub(crate) fn h(i: i64) -> Result<Rational> {
    special::harmonic(i)
}

pub(crate) fn r(v: i64) -> Rational {
    Rational::from(v)
}

/// Checked quotient; a zero divisor surfaces as an error, never a panic.
pub(crate) fn over(num: impl Into<Rational>, den: impl Into<Rational>) -> Result<Rational> {
    num.into().checked_div(&den.into())
}

/// `(-1)^k`.
pub(crate) fn sgn(k: i64) -> Rational {
    Rational::sign_power(k)
}

/// Integer-top binomial `C(top, k)`; negative tops use the generalized product.
pub(crate) fn c(top: i64, k: i64) -> Rational {
    special::choose(top, k)
}

/// Rational-top binomial `C(top, k)`.
pub(crate) fn cr(top: &Rational, k: i64) -> Rational {
    special::binom_general(top, k)
}

/// `C(x+k, k)`.
pub(crate) fn bs(x: &Rational, k: i64) -> Result<Rational> {
    special::binom_shifted(x, k)
}

pub(crate) fn pow4(k: i64) -> Rational {
    r(4).pow(k as u32)
}

/// Rational `-1/2 - n`.
pub(crate) fn half_below(n: i64) -> Rational {
    Rational::frac(-1, 2) - n
}
