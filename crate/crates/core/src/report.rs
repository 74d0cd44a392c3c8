//! Violation reports shared by the diversity and admissible-map validators.

use std::fmt;

use serde::Serialize;

use crate::rat::Rat;
use crate::subset::Subset;

/// Which condition an instance violated. The first group are the diversity
/// axioms (nonnegativity, vanishing on small sets, strict positivity on
/// larger ones, the pivot triangle inequality and its two-part equivalent);
/// the `Adm*` group are the four admissibility conditions for one-point
/// extension tables.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub enum Axiom {
    NonNegative,
    VanishesOnSmall,
    PositiveOnLarge,
    Monotone,
    ConnectedSublinear,
    Triangle,
    AdmZeroOnEmpty,
    AdmDominatesBase,
    AdmTriangle,
    AdmSublinear,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Axiom::NonNegative => "non-negativity",
            Axiom::VanishesOnSmall => "zero on small sets",
            Axiom::PositiveOnLarge => "strict positivity on sets of size >= 2",
            Axiom::Monotone => "monotonicity",
            Axiom::ConnectedSublinear => "connected sublinearity",
            Axiom::Triangle => "triangle through a nonempty pivot",
            Axiom::AdmZeroOnEmpty => "admissibility: zero on the empty set",
            Axiom::AdmDominatesBase => "admissibility: dominates the base values",
            Axiom::AdmTriangle => "admissibility: triangle against the base",
            Axiom::AdmSublinear => "admissibility: sublinearity",
        };
        f.write_str(name)
    }
}

/// One violated instance: the axiom, the subsets witnessing it (size-minimal
/// for the derived axioms), and the values involved.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Violation {
    pub axiom: Axiom,
    pub sets: Vec<Subset>,
    pub values: Vec<Rat>,
}

impl Violation {
    /// Render the witness sets against an ambient point list.
    pub fn describe(&self, points: &[String]) -> String {
        let sets: Vec<String> = self
            .sets
            .iter()
            .map(|s| {
                let labels: Vec<&str> = s.iter().map(|i| points[i].as_str()).collect();
                format!("{{{}}}", labels.join(","))
            })
            .collect();
        let values: Vec<String> = self.values.iter().map(Rat::to_string).collect();
        format!(
            "{}: sets [{}], values [{}]",
            self.axiom,
            sets.join(" "),
            values.join(" ")
        )
    }
}

/// Outcome of an exhaustive axiom sweep. Empty violation list means valid.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn valid() -> Self {
        ValidationReport::default()
    }

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, axiom: Axiom, sets: Vec<Subset>, values: Vec<Rat>) {
        self.violations.push(Violation { axiom, sets, values });
    }

    /// Canonical order: axiom, then witness sets.
    pub fn sort(&mut self) {
        self.violations
            .sort_by(|a, b| (a.axiom, &a.sets).cmp(&(b.axiom, &b.sets)));
    }

    pub fn describe(&self, points: &[String]) -> String {
        if self.is_valid() {
            "valid".to_string()
        } else {
            self.violations
                .iter()
                .map(|v| v.describe(points))
                .collect::<Vec<_>>()
                .join("\n")
        }
    }
}
