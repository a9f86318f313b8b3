//! Property checks over a single AR quiver, shared by the CLI and the test suites.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::arquiver::ARQuiver;
use crate::error::{Error, Result};
use crate::orders::RootSequence;
use crate::rootsys::{Kind, RootId};
use crate::seqcalc::{SeqCalc, Socle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    /// rds(γ) = mul(γ) for every non-simple root.
    RdsMul,
    /// mul(γ) − 1 ≤ rds(γ) ≤ mul(γ) + 1 for every non-simple root.
    RdsBound,
    /// dist ≤ 1 in type A and ≤ 2 in type D.
    DistBound,
    /// In types A and D a pair with dist 1 summing to a root is a minimal pair of it.
    Dist1Minimal,
    DirectlyConnected,
    /// Pairs with dist ≥ 2 summing to a root have two minimal good neighbors.
    GoodNeighbor,
    /// Pairs of γ with dist k number |supp_{≥k}(γ)| − δ_{k,1}.
    Counting,
    /// Socles of non-simple pairs are basic with at most three parts.
    SocleShape,
}

impl Property {
    pub const ALL: [Property; 8] = [
        Property::RdsMul,
        Property::RdsBound,
        Property::DistBound,
        Property::Dist1Minimal,
        Property::DirectlyConnected,
        Property::GoodNeighbor,
        Property::Counting,
        Property::SocleShape,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::RdsMul => "rds-mul",
            Property::RdsBound => "rds-bound",
            Property::DistBound => "dist-bound",
            Property::Dist1Minimal => "dist1-minimal",
            Property::DirectlyConnected => "directly-connected",
            Property::GoodNeighbor => "good-neighbor",
            Property::Counting => "counting",
            Property::SocleShape => "socle-shape",
        }
    }

    /// Whether the property is claimed for this Dynkin type.
    pub fn applies_to(self, kind: Kind) -> bool {
        match self {
            Property::DistBound | Property::Dist1Minimal => matches!(kind, Kind::A | Kind::D),
            _ => true,
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Parse { what: "property", text: s.to_string() })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub property: Property,
    pub orientation: String,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl Report {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.is_ok() { "ok" } else { "FAIL" };
        writeln!(f, "{} [{}]: {} ({} checked)", self.property, self.orientation, status, self.checked)?;
        for line in &self.failures {
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}

/// Checks `property` on `arq`.
pub fn check(property: Property, arq: &ARQuiver) -> Result<Report> {
    let calc = SeqCalc::new(arq.class());
    check_with(property, arq, &calc)
}

pub fn check_with(property: Property, arq: &ARQuiver, calc: &SeqCalc) -> Result<Report> {
    let system = arq.system();
    if !property.applies_to(system.kind()) {
        return Err(Error::UnsupportedType(format!("{property} on {}", system.type_name())));
    }
    let mut report = Report {
        property,
        orientation: arq.quiver().to_spec(),
        checked: 0,
        failures: Vec::new(),
    };
    let word = calc.class().word().clone();
    let fmt_pair = |a: RootId, b: RootId| RootSequence::pair(a, b).format(&word);
    let non_simple: Vec<RootId> = system.ids().filter(|&g| !system.is_simple_root(g)).collect();
    let pairs_of = |g: RootId| -> Vec<(RootId, RootId)> {
        system
            .ids()
            .filter_map(|a| {
                let b = system.id_of(&diff(system.coeffs(g), system.coeffs(a)))?;
                (a < b).then(|| calc.ordered(a, b))
            })
            .collect()
    };

    match property {
        Property::RdsMul | Property::RdsBound => {
            for &g in &non_simple {
                let rds = calc.radius(g)? as i32;
                let mul = system.root(g).mul();
                let ok = match property {
                    Property::RdsMul => rds == mul,
                    _ => (mul - 1..=mul + 1).contains(&rds),
                };
                report.checked += 1;
                if !ok {
                    report.failures.push(format!("{}: rds {rds}, mul {mul}", system.format_root(g)));
                }
            }
        }
        Property::DistBound => {
            let bound = if system.kind() == Kind::A { 1 } else { 2 };
            for a in system.ids() {
                for b in system.ids().filter(|&b| a < b) {
                    let d = calc.dist(a, b)?;
                    report.checked += 1;
                    if d > bound {
                        report.failures.push(format!("{}: dist {d}", fmt_pair(a, b)));
                    }
                }
            }
        }
        Property::Dist1Minimal => {
            for &g in &non_simple {
                let top = RootSequence::single(g);
                let mins = calc.minimal_sequences(&top)?;
                for (a, b) in pairs_of(g) {
                    if calc.dist(a, b)? != 1 {
                        continue;
                    }
                    report.checked += 1;
                    let pair = RootSequence::pair(a, b);
                    let soc = calc.socle(&pair)?;
                    if soc != Socle::Defined(top.clone()) || !mins.contains(&pair) {
                        report.failures.push(format!("{} is not a minimal pair of {}", fmt_pair(a, b), system.format_root(g)));
                    }
                }
            }
        }
        Property::DirectlyConnected => {
            for a in system.ids() {
                for b in system.ids().filter(|&b| a < b) {
                    let ((i, p), (j, q)) = (arq.coord(a), arq.coord(b));
                    if system.datum().distance(i, j) as i32 != (p - q).abs() {
                        continue;
                    }
                    report.checked += 1;
                    let (ca, cb) = (system.coeffs(a), system.coeffs(b));
                    let mut bad = Vec::new();
                    if !calc.is_simple_pair(a, b) {
                        bad.push("not simple".to_string());
                    }
                    let form = system.bilinear(ca, cb);
                    if form != 1 {
                        bad.push(format!("α·β = {form}"));
                    }
                    if system.id_of(&diff(ca, cb)).is_none() && system.id_of(&diff(cb, ca)).is_none() {
                        bad.push("difference is not a root".to_string());
                    }
                    if !bad.is_empty() {
                        report.failures.push(format!("{}: {}", fmt_pair(a, b), bad.join(", ")));
                    }
                }
            }
        }
        Property::GoodNeighbor => {
            for &g in &non_simple {
                let mins = calc.minimal_sequences(&RootSequence::single(g))?;
                for (a, b) in pairs_of(g) {
                    if calc.dist(a, b)? < 2 {
                        continue;
                    }
                    report.checked += 1;
                    let good = calc.good_neighbors(&RootSequence::pair(a, b))?;
                    let n = good.iter().filter(|m| mins.contains(m)).count();
                    if n < 2 {
                        report.failures.push(format!("{}: {n} minimal good neighbors", fmt_pair(a, b)));
                    }
                }
            }
        }
        Property::Counting => {
            for &g in &non_simple {
                let root = system.root(g);
                let dists = pairs_of(g).into_iter().map(|(a, b)| calc.dist(a, b)).collect::<Result<Vec<_>>>()?;
                let top = dists.iter().copied().max().unwrap_or(0).max(root.mul() as usize);
                for k in 1..=top {
                    let found = dists.iter().filter(|&&d| d == k).count();
                    let expected = root.supp_ge(k as i32).len() - usize::from(k == 1);
                    report.checked += 1;
                    if found != expected {
                        report
                            .failures
                            .push(format!("{} at dist {k}: {found} pairs, expected {expected}", system.format_root(g)));
                    }
                }
            }
        }
        Property::SocleShape => {
            for a in system.ids() {
                for b in system.ids().filter(|&b| a < b) {
                    let pair = RootSequence::pair(a, b);
                    if calc.is_simple(&pair) {
                        continue;
                    }
                    report.checked += 1;
                    match calc.socle(&pair)? {
                        Socle::Defined(s) if s.is_basic() && s.parts().len() <= 3 => {}
                        Socle::Defined(s) => report.failures.push(format!("{}: socle {}", fmt_pair(a, b), s.format(&word))),
                        Socle::Undefined(list) => {
                            report.failures.push(format!("{}: {} simple sequences below", fmt_pair(a, b), list.len()))
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

fn diff(a: &[i32], b: &[i32]) -> Vec<i32> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::arquiver::DynkinQuiver;
    use crate::rootsys::RootSystem;

    fn all_ok(kind: Kind, rank: usize, property: Property) {
        let s = Arc::new(RootSystem::new(kind, rank).unwrap());
        for q in DynkinQuiver::all(&s) {
            let report = check(property, &ARQuiver::build(&q)).unwrap();
            assert!(report.is_ok(), "{report}");
        }
    }

    #[test]
    fn small_ranks() {
        for property in Property::ALL {
            for (kind, rank) in [(Kind::A, 3), (Kind::D, 4)] {
                all_ok(kind, rank, property);
            }
        }
    }

    #[test]
    fn names_round_trip() {
        for p in Property::ALL {
            assert_eq!(p.name().parse::<Property>().unwrap(), p);
        }
        assert!("nope".parse::<Property>().is_err());
    }

    #[test]
    fn e_types_reject_the_ad_bound() {
        let s = Arc::new(RootSystem::new(Kind::E, 6).unwrap());
        let arq = ARQuiver::build(&DynkinQuiver::canonical(&s));
        assert!(matches!(check(Property::DistBound, &arq), Err(Error::UnsupportedType(_))));
    }
}
