use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::sets::{Approximation, Granulation, Region, Signature};

/// A binary parthood predicate on regions.
///
/// Implementors see both regions, their approximation signatures and the
/// granulation. Predicates that only read the signatures should say so via
/// [`Parthood::signature_determined`]; the rough quotient then compares one
/// representative per class.
pub trait Parthood: Sync {
    fn name(&self) -> String;

    fn holds_on(&self, a: &Region, sa: &Signature, b: &Region, sb: &Signature, granulation: &Granulation) -> bool;

    fn signature_determined(&self) -> bool {
        true
    }

    fn holds<C: Approximation + ?Sized>(&self, a: &Region, b: &Region, ctx: &C) -> bool
    where
        Self: Sized,
    {
        self.holds_on(a, &ctx.signature(a), b, &ctx.signature(b), ctx.granulation())
    }
}

/// The nine approximation-based parthoods plus classical rough inclusion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ParthoodVariant {
    /// `a^l ⊆ b^l`
    VeryCautious,
    /// `a^l ⊆ b^u`
    Cautious,
    /// `a^l ⊆ b^u ∖ b^l`
    Lateral,
    /// `a^u ⊆ b^u`
    Possibilist,
    /// `a^u ⊆ b^l`
    UltraCautious,
    /// `a^u ⊆ b^u ∖ b^l`
    LateralPlus,
    /// `a^u ∖ a^l ⊆ b^u ∖ b^l`
    Bilateral,
    /// `a^u ∖ a^l ⊆ b^l`
    LateralPlusPlus,
    /// Every granule contained in `a` is contained in `b`.
    GSimple,
    /// `a^l ⊆ b^l` and `a^u ⊆ b^u`
    RoughInclusion,
}

impl ParthoodVariant {
    pub const ALL: [ParthoodVariant; 10] = [
        ParthoodVariant::VeryCautious,
        ParthoodVariant::Cautious,
        ParthoodVariant::Lateral,
        ParthoodVariant::Possibilist,
        ParthoodVariant::UltraCautious,
        ParthoodVariant::LateralPlus,
        ParthoodVariant::Bilateral,
        ParthoodVariant::LateralPlusPlus,
        ParthoodVariant::GSimple,
        ParthoodVariant::RoughInclusion,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ParthoodVariant::VeryCautious => "very-cautious",
            ParthoodVariant::Cautious => "cautious",
            ParthoodVariant::Lateral => "lateral",
            ParthoodVariant::Possibilist => "possibilist",
            ParthoodVariant::UltraCautious => "ultra-cautious",
            ParthoodVariant::LateralPlus => "lateral-plus",
            ParthoodVariant::Bilateral => "bilateral",
            ParthoodVariant::LateralPlusPlus => "lateral-plus-plus",
            ParthoodVariant::GSimple => "g-simple",
            ParthoodVariant::RoughInclusion => "rough-inclusion",
        }
    }

    /// Evaluates the defining formula on two signatures. `None` for g-simple,
    /// which needs the regions themselves.
    pub fn on_signatures(self, sa: &Signature, sb: &Signature) -> Option<bool> {
        use ParthoodVariant::*;
        let boundary = |s: &Signature| s.upper.difference(&s.lower);
        Some(match self {
            VeryCautious => sa.lower.is_subset(&sb.lower),
            Cautious => sa.lower.is_subset(&sb.upper),
            Lateral => sa.lower.is_subset(&boundary(sb)),
            Possibilist => sa.upper.is_subset(&sb.upper),
            UltraCautious => sa.upper.is_subset(&sb.lower),
            LateralPlus => sa.upper.is_subset(&boundary(sb)),
            Bilateral => boundary(sa).is_subset(&boundary(sb)),
            LateralPlusPlus => boundary(sa).is_subset(&sb.lower),
            RoughInclusion => sa.lower.is_subset(&sb.lower) && sa.upper.is_subset(&sb.upper),
            GSimple => return None,
        })
    }
}

/// Granule containment: every granule inside `a` is inside `b`.
pub fn granule_containment(a: &Region, b: &Region, granulation: &Granulation) -> bool {
    granulation.granules().iter().all(|g| !g.is_subset(a) || g.is_subset(b))
}

impl Parthood for ParthoodVariant {
    fn name(&self) -> String {
        self.as_str().to_string()
    }

    fn holds_on(&self, a: &Region, sa: &Signature, b: &Region, sb: &Signature, granulation: &Granulation) -> bool {
        match self.on_signatures(sa, sb) {
            Some(v) => v,
            None => granule_containment(a, b, granulation),
        }
    }

    fn signature_determined(&self) -> bool {
        *self != ParthoodVariant::GSimple
    }
}

impl fmt::Display for ParthoodVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ParthoodVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.to_ascii_lowercase().replace(['_', ' '], "-");
        let alias = match norm.as_str() {
            "lateral+" => "lateral-plus",
            "lateral++" => "lateral-plus-plus",
            other => other,
        };
        ParthoodVariant::ALL
            .into_iter()
            .find(|v| v.as_str() == alias)
            .ok_or_else(|| Error::Invalid(format!("unknown parthood variant {s:?}")))
    }
}

/// `holds(v, a, b)` and not `holds(v, b, a)`.
pub fn proper_part<P: Parthood, C: Approximation + ?Sized>(v: &P, a: &Region, b: &Region, ctx: &C) -> bool {
    v.holds(a, b, ctx) && !v.holds(b, a, ctx)
}

/// How a parthood induces the conflict relation used by the counting procedures.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum ConflictMode {
    /// Distinct and related one way or the other. Categories are antichains.
    #[default]
    Comparability,
    /// Related neither way. Categories are sets of mutually comparable elements.
    Incomparability,
}

impl ConflictMode {
    pub fn as_str(self) -> &'static str {
        match self {
            ConflictMode::Comparability => "comparability",
            ConflictMode::Incomparability => "incomparability",
        }
    }

    /// Conflict from the two directed parthood verdicts of a pair.
    pub fn from_verdicts(self, same: bool, ab: bool, ba: bool) -> bool {
        match self {
            ConflictMode::Comparability => !same && (ab || ba),
            ConflictMode::Incomparability => !ab && !ba,
        }
    }
}

impl fmt::Display for ConflictMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ConflictMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "comparability" => Ok(ConflictMode::Comparability),
            "incomparability" => Ok(ConflictMode::Incomparability),
            _ => Err(Error::Invalid(format!("unknown conflict mode {s:?}"))),
        }
    }
}

pub fn conflict<P: Parthood, C: Approximation + ?Sized>(
    v: &P,
    a: &Region,
    b: &Region,
    ctx: &C,
    mode: ConflictMode,
) -> bool {
    mode.from_verdicts(a == b, v.holds(a, b, ctx), v.holds(b, a, ctx))
}
