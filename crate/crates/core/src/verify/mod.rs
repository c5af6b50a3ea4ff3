//! Mechanical verification of the identities satisfied by the (h,q)-Euler
//! numbers and polynomials. Every exact check compares canonical forms in
//! Q(q); nothing is sampled.
//!
//! A [`Verifier`] can carry a [`Mutation`] that perturbs one order-1 number
//! on the side of each identity that is assembled from order-1 values. A
//! sound verifier must then report a failure with a witness.

mod classical;
mod grid;
mod identities;

use std::fmt;

use serde::Serialize;

use crate::arith::QRat;

pub use classical::{classical_euler_numbers, classical_higher};
pub use grid::{mutation_probes, Cell, Grid};
pub use identities::{tail_tolerance, Verifier};

/// Note attached to every final-corollary report.
pub const FINAL_COROLLARY_NOTE: &str = "order fixed to 2 on the left and the second right-hand factor \
     read as E^(h)_l2(y2); the statement being checked had an unbound order and a B factor there";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Identity {
    Recurrence,
    CompleteSumNumbers,
    CompleteSumPolys,
    Distribution,
    Addition,
    Corollary1,
    FinalCorollary,
    ClassicalLimit,
    NumericTail,
}

impl Identity {
    pub const ALL: [Identity; 9] = [
        Identity::Recurrence,
        Identity::CompleteSumNumbers,
        Identity::CompleteSumPolys,
        Identity::Distribution,
        Identity::Addition,
        Identity::Corollary1,
        Identity::FinalCorollary,
        Identity::ClassicalLimit,
        Identity::NumericTail,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Recurrence => "recurrence",
            Identity::CompleteSumNumbers => "complete-sum-numbers",
            Identity::CompleteSumPolys => "complete-sum-polys",
            Identity::Distribution => "distribution",
            Identity::Addition => "addition",
            Identity::Corollary1 => "corollary1",
            Identity::FinalCorollary => "final-corollary",
            Identity::ClassicalLimit => "classical-limit",
            Identity::NumericTail => "numeric-tail",
        }
    }

    pub fn from_name(s: &str) -> Option<Identity> {
        Identity::ALL.into_iter().find(|i| i.name() == s)
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The grid cell a report was produced for. Rational arguments are kept in
/// their plain text rendering.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Params {
    pub n: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub v: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<u32>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub args: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q0: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub terms: Option<u32>,
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.n)?;
        if let Some(h) = self.h {
            write!(f, " h={h}")?;
        }
        if let Some(v) = self.v {
            write!(f, " v={v}")?;
        }
        if let Some(d) = self.d {
            write!(f, " d={d}")?;
        }
        if !self.args.is_empty() {
            write!(f, " args=[{}]", self.args.join(", "))?;
        }
        if let Some(q0) = &self.q0 {
            write!(f, " q0={q0}")?;
        }
        if let Some(m) = self.terms {
            write!(f, " terms={m}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// The two unequal sides of a failed check.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Exact { lhs: QRat, rhs: QRat },
    Numeric {
        partial_sum: String,
        exact: String,
        difference: f64,
        tolerance: f64,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub identity: Identity,
    pub params: Params,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl VerifyReport {
    /// Compares two canonical values; the status is `pass` iff they are identical.
    pub fn exact(identity: Identity, params: Params, lhs: QRat, rhs: QRat) -> Self {
        let (status, witness) = if lhs == rhs {
            (Status::Pass, None)
        } else {
            (Status::Fail, Some(Witness::Exact { lhs, rhs }))
        };
        VerifyReport {
            identity,
            params,
            status,
            witness,
            note: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    fn with_note(mut self, note: &str) -> Self {
        self.note = Some(note.to_string());
        self
    }
}

/// How a mutated order-1 number is perturbed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Perturbation {
    Negate,
    AddOne,
}

/// Perturbs `E_index^{(h)}` (for every `h`) wherever a verifier assembles a
/// side of an identity from order-1 numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Mutation {
    pub index: usize,
    pub kind: Perturbation,
}

impl Mutation {
    pub fn apply(&self, values: &mut [QRat]) {
        if let Some(x) = values.get_mut(self.index) {
            *x = match self.kind {
                Perturbation::Negate => x.neg(),
                Perturbation::AddOne => x.add(&QRat::one()),
            };
        }
    }
}
