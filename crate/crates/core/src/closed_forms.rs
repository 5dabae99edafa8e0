//! Closed-form index formulas for DW_n and H_n.
//!
//! Each formula is written in the same shape as it was published so it can
//! be read side by side with the source. For ABC₄ of the double wheel the
//! published statement and the expression reached at the end of its
//! derivation differ; both are available through [`FormulaVariant`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generators::Family;
use crate::indices::IndexKind;
use crate::partition::Labeling;

/// Largest Hanoi order whose `3^(n+1)` fits in a `u128`.
pub const HANOI_CLOSED_FORM_MAX_ORDER: u32 = 79;

/// Above this order `3^(n+1)` exceeds 2^53 and is rounded when converted.
pub const HANOI_EXACT_MAX_ORDER: u32 = 32;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FormulaVariant {
    /// The formula as printed in the theorem statement.
    AsStated,
    /// The expression obtained at the end of the derivation.
    #[default]
    ProofDerived,
}

impl fmt::Display for FormulaVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormulaVariant::AsStated => "as_stated",
            FormulaVariant::ProofDerived => "proof_derived",
        })
    }
}

impl FromStr for FormulaVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "as_stated" | "stated" => Ok(FormulaVariant::AsStated),
            "proof_derived" | "derived" | "proof" => Ok(FormulaVariant::ProofDerived),
            _ => Err(Error::Usage(format!("unknown formula variant `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClosedFormResult {
    pub family: Family,
    pub kind: IndexKind,
    pub n: u32,
    pub variant: FormulaVariant,
    pub value: f64,
    /// Set when `3^(n+1)` is not exactly representable as an `f64`.
    pub exactness_warning: bool,
}

/// Smallest `n` at which the closed form of `kind` holds for `family`.
///
/// Hanoi degree-based formulas also hold at n = 2; the S-value formulas need
/// n >= 3, where every corner neighbor has a second-ring neighbor of
/// S-value 9.
pub fn min_order(family: Family, kind: IndexKind) -> u32 {
    match (family, kind.labeling()) {
        (Family::DoubleWheel, _) => 3,
        (Family::Hanoi, Labeling::Degree) => 2,
        (Family::Hanoi, Labeling::NeighborSum) => 3,
    }
}

/// Largest `n` at which [`closed_form`] can be evaluated.
pub fn max_order(family: Family) -> u32 {
    match family {
        Family::DoubleWheel => u32::MAX,
        Family::Hanoi => HANOI_CLOSED_FORM_MAX_ORDER,
    }
}

/// Dispatches to the family's formula. `variant` only matters for DW ABC₄.
pub fn closed_form(
    family: Family,
    kind: IndexKind,
    n: u32,
    variant: FormulaVariant,
) -> Result<ClosedFormResult> {
    match family {
        Family::DoubleWheel => dw_closed_form(kind, n, variant),
        Family::Hanoi => hanoi_closed_form(kind, n).map(|r| ClosedFormResult { variant, ..r }),
    }
}

pub fn dw_closed_form(kind: IndexKind, n: u32, variant: FormulaVariant) -> Result<ClosedFormResult> {
    check_floor(Family::DoubleWheel, kind, n)?;
    let n_f = f64::from(n);
    let value = match kind {
        IndexKind::Randic => dw_randic(n_f),
        IndexKind::SumConnectivity => dw_sum_connectivity(n_f),
        IndexKind::Abc => dw_abc(n_f),
        IndexKind::Ga => dw_ga(n_f),
        IndexKind::Abc4 => match variant {
            FormulaVariant::AsStated => dw_abc4_as_stated(n_f),
            FormulaVariant::ProofDerived => dw_abc4_proof_derived(n_f),
        },
        IndexKind::Ga5 => dw_ga5(n_f),
    };
    Ok(ClosedFormResult {
        family: Family::DoubleWheel,
        kind,
        n,
        variant,
        value,
        exactness_warning: false,
    })
}

pub fn hanoi_closed_form(kind: IndexKind, n: u32) -> Result<ClosedFormResult> {
    check_floor(Family::Hanoi, kind, n)?;
    if n > HANOI_CLOSED_FORM_MAX_ORDER {
        return Err(Error::Domain(format!(
            "Hanoi closed forms are evaluated for n <= {HANOI_CLOSED_FORM_MAX_ORDER}, got {n}"
        )));
    }
    let pow = PowerOfThree::new(n + 1);
    let value = match kind {
        IndexKind::Randic => hanoi_randic(&pow),
        IndexKind::SumConnectivity => hanoi_sum_connectivity(&pow),
        IndexKind::Abc => hanoi_abc(&PowerOfThree::new(n)),
        IndexKind::Ga => hanoi_ga(&pow),
        IndexKind::Abc4 => hanoi_abc4(&pow),
        IndexKind::Ga5 => hanoi_ga5(&pow),
    };
    Ok(ClosedFormResult {
        family: Family::Hanoi,
        kind,
        n,
        variant: FormulaVariant::default(),
        value,
        exactness_warning: n > HANOI_EXACT_MAX_ORDER,
    })
}

fn check_floor(family: Family, kind: IndexKind, n: u32) -> Result<()> {
    let floor = min_order(family, kind);
    if n < floor {
        return Err(Error::Domain(format!(
            "{kind} closed form for {family} requires n >= {floor}, got {n}"
        )));
    }
    Ok(())
}

/// `3^k` held as an exact integer.
struct PowerOfThree(u128);

impl PowerOfThree {
    fn new(k: u32) -> Self {
        PowerOfThree(3u128.pow(k))
    }

    fn value(&self) -> f64 {
        self.0 as f64
    }

    /// `3^k - c` with the subtraction done before rounding.
    fn minus(&self, c: u128) -> f64 {
        (self.0 - c) as f64
    }
}

// Double wheel, labels from the degree partition {(3,3): 2n, (3,2n): 2n}
// and the S-value partition {(2n+6,2n+6): 2n, (2n+6,6n): 2n}.

fn dw_randic(n: f64) -> f64 {
    2.0 * n / 3.0 + 2.0 * n / (6.0 * n).sqrt()
}

fn dw_sum_connectivity(n: f64) -> f64 {
    2.0 * n / 6f64.sqrt() + 2.0 * n / (3.0 + 2.0 * n).sqrt()
}

fn dw_abc(n: f64) -> f64 {
    4.0 * n / 3.0 + 2.0 * n * ((1.0 + 2.0 * n) / (6.0 * n)).sqrt()
}

fn dw_ga(n: f64) -> f64 {
    2.0 * n + 4.0 * n * (6.0 * n).sqrt() / (3.0 + 2.0 * n)
}

/// Printed ABC₄ statement; it repeats the ABC formula.
fn dw_abc4_as_stated(n: f64) -> f64 {
    4.0 * n / 3.0 + 2.0 * n * ((1.0 + 2.0 * n) / (6.0 * n)).sqrt()
}

fn dw_abc4_proof_derived(n: f64) -> f64 {
    2.0 * n / (2.0 * n + 6.0) * (4.0 * n + 10.0).sqrt()
        + 2.0 * n * ((2.0 * n + 1.0) / (3.0 * n * n + 9.0 * n)).sqrt()
}

fn dw_ga5(n: f64) -> f64 {
    2.0 * n + 4.0 * n * (3.0 * n * n + 9.0 * n).sqrt() / (4.0 * n + 3.0)
}

// Hanoi, labels from {(2,3): 6, (3,3): (3^(n+1)-15)/2} and
// {(6,8): 6, (8,8): 3, (8,9): 6, (9,9): (3^(n+1)-33)/2}.

fn hanoi_randic(p: &PowerOfThree) -> f64 {
    6f64.sqrt() + p.value() / 6.0 - 5.0 / 2.0
}

fn hanoi_sum_connectivity(p: &PowerOfThree) -> f64 {
    6.0 / 5f64.sqrt() + p.minus(15) / (2.0 * 6f64.sqrt())
}

/// Takes `3^n`, not `3^(n+1)`.
fn hanoi_abc(p_n: &PowerOfThree) -> f64 {
    3.0 * 2f64.sqrt() + p_n.value() - 5.0
}

fn hanoi_ga(p: &PowerOfThree) -> f64 {
    12.0 * 6f64.sqrt() / 5.0 + p.minus(15) / 2.0
}

fn hanoi_abc4(p: &PowerOfThree) -> f64 {
    3.0 * (7.0f64 / 32.0).sqrt() + 6.0 * (5.0f64 / 24.0).sqrt() + 2.0 * p.value() / 9.0
        - 13.0 / 3.0
}

fn hanoi_ga5(p: &PowerOfThree) -> f64 {
    12f64.powf(1.5) / 7.0 + 3.0 + 72.0 * 2f64.sqrt() / 17.0 + p.minus(33) / 2.0
}
