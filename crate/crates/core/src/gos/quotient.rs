//! Rough objects, the basic rough order, and the interval representation of
//! rough objects by pairs of crisp regions.

use std::collections::HashMap;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::gos::GranularOperatorSpace;
use crate::parthood::Parthood;
use crate::relation::Relation;
use crate::sets::{canonical_regions, Approximation, Region, Signature, Universe};

/// Largest universe whose power set is partitioned into rough objects.
pub const QUOTIENT_CAP: usize = 14;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum RoughObjectNotion {
    /// Maximal classes of regions sharing a (lower, upper) signature.
    #[default]
    MaximalConsistent,
    /// Only classes whose members satisfy `A^ll = A^l` and `A^uu = A^u`.
    DefiniteOnly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoughClass {
    pub signature: Signature,
    /// Members in shortlex order; the first is the class representative.
    pub members: Vec<Region>,
    /// The class contains a definite region (`A^l = A = A^u`).
    pub crisp: bool,
}

impl RoughClass {
    pub fn representative(&self) -> &Region {
        &self.members[0]
    }

    pub fn contains(&self, r: &Region) -> bool {
        self.members.binary_search(r).is_ok()
    }
}

/// The power set modulo rough equality, with the basic rough order on classes.
#[derive(Clone, Debug)]
pub struct RoughQuotient {
    pub notion: RoughObjectNotion,
    pub classes: Vec<RoughClass>,
    /// `order.holds(i, j)` iff class `i` ⋐ class `j`.
    pub order: Relation,
}

impl RoughQuotient {
    pub fn class_of(&self, r: &Region) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(r))
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

/// Partitions the power set into rough objects and orders them.
pub fn rough_objects(gos: &GranularOperatorSpace, notion: RoughObjectNotion) -> Result<RoughQuotient> {
    let n = gos.universe().size();
    if n > QUOTIENT_CAP {
        return Err(Error::TooLarge {
            what: "universe for rough quotient",
            size: n,
            cap: QUOTIENT_CAP,
        });
    }
    let mut by_sig: HashMap<Signature, usize> = HashMap::new();
    let mut classes: Vec<RoughClass> = Vec::new();
    // Shortlex iteration makes each class's first member its least one and
    // orders classes by their representatives.
    for r in canonical_regions(n) {
        let sig = gos.signature(&r);
        let definite = sig.lower == r && sig.upper == r;
        match by_sig.get(&sig) {
            Some(&i) => {
                classes[i].members.push(r);
                classes[i].crisp |= definite;
            }
            None => {
                by_sig.insert(sig.clone(), classes.len());
                classes.push(RoughClass {
                    signature: sig,
                    members: vec![r],
                    crisp: definite,
                });
            }
        }
    }
    if notion == RoughObjectNotion::DefiniteOnly {
        classes.retain(|c| {
            let s = &c.signature;
            gos.lower(&s.lower) == s.lower && gos.upper(&s.upper) == s.upper
        });
    }
    let order = basic_rough_order(&classes, gos);
    Ok(RoughQuotient { notion, classes, order })
}

/// `α ⋐ β` iff the space's parthood holds for every `a ∈ α`, `b ∈ β`.
///
/// Signature-determined parthoods compare one representative per class.
pub fn basic_rough_order(classes: &[RoughClass], gos: &GranularOperatorSpace) -> Relation {
    let p = gos.parthood();
    let g = gos.granulation();
    if p.signature_determined() {
        Relation::from_fn(classes.len(), |i, j| {
            let (a, b) = (&classes[i], &classes[j]);
            p.holds_on(a.representative(), &a.signature, b.representative(), &b.signature, g)
        })
    } else {
        Relation::from_fn(classes.len(), |i, j| {
            let (a, b) = (&classes[i], &classes[j]);
            a.members.iter().all(|x| {
                b.members
                    .iter()
                    .all(|y| p.holds_on(x, &a.signature, y, &b.signature, g))
            })
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalImage {
    /// Index into the quotient's classes.
    pub class: usize,
    pub lower: Region,
    pub upper: Region,
}

/// Rough objects represented as strict pairs of crisp regions.
#[derive(Clone, Debug)]
pub struct RoughRepresentation {
    /// The definite regions, one per crisp class.
    pub crisp: Vec<Region>,
    /// Indices of the non-crisp classes.
    pub rough: Vec<usize>,
    /// The map from rough classes to `(a, b)` with `a ⊂ b`, both crisp.
    pub phi: Vec<IntervalImage>,
    /// Rough classes whose signature is not a strict pair of crisp regions.
    pub unrepresentable: Vec<usize>,
    /// Number of classes.
    pub n: usize,
    /// Number of crisp classes.
    pub k: usize,
    /// Image of `phi`, deduplicated, in shortlex order of pairs.
    pub image: Vec<(Region, Region)>,
}

impl RoughRepresentation {
    pub fn to_json(&self, universe: &Universe) -> Value {
        let names = |r: &Region| universe.names_of(r);
        json!({
            "n": self.n,
            "k": self.k,
            "crisp": self.crisp.iter().map(names).collect::<Vec<_>>(),
            "rough": self.rough,
            "phi": self.phi.iter().map(|p| json!({
                "class": p.class,
                "lower": names(&p.lower),
                "upper": names(&p.upper),
            })).collect::<Vec<_>>(),
            "unrepresentable": self.unrepresentable,
            "image": self.image.iter().map(|(a, b)| json!([names(a), names(b)])).collect::<Vec<_>>(),
        })
    }
}

pub fn interval_representation(q: &RoughQuotient, gos: &GranularOperatorSpace) -> RoughRepresentation {
    let mut crisp = Vec::new();
    let mut rough = Vec::new();
    let mut phi = Vec::new();
    let mut unrepresentable = Vec::new();
    for (i, c) in q.classes.iter().enumerate() {
        if c.crisp {
            crisp.push(c.signature.lower.clone());
            continue;
        }
        rough.push(i);
        let Signature { lower, upper } = &c.signature;
        if gos.is_definite(lower) && gos.is_definite(upper) && lower.is_proper_subset(upper) {
            phi.push(IntervalImage {
                class: i,
                lower: lower.clone(),
                upper: upper.clone(),
            });
        } else {
            unrepresentable.push(i);
        }
    }
    let mut image: Vec<(Region, Region)> = phi.iter().map(|p| (p.lower.clone(), p.upper.clone())).collect();
    image.sort();
    image.dedup();
    RoughRepresentation {
        k: crisp.len(),
        n: q.classes.len(),
        crisp,
        rough,
        phi,
        unrepresentable,
        image,
    }
}
