//! Distance polynomials read from AR quivers and the closed-form denominator
//! formulas of the untwisted affine types A and D.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arquiver::{ARQuiver, DynkinQuiver};
use crate::error::{Error, Result};
use crate::rootsys::{Kind, RootId, RootSystem};
use crate::seqcalc::SeqCalc;

/// `∏_t (z − (−q)^t)^{mult}`, stored as `t ↦ mult` with positive entries only.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DistancePolynomial {
    pub factors: BTreeMap<u32, u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factor {
    pub t: u32,
    pub mult: u32,
}

impl DistancePolynomial {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_roots(roots: impl IntoIterator<Item = u32>) -> Self {
        let mut p = Self::new();
        for t in roots {
            p.multiply(t, 1);
        }
        p
    }

    pub fn multiply(&mut self, t: u32, mult: u32) {
        if mult > 0 {
            *self.factors.entry(t).or_default() += mult;
        }
    }

    pub fn mult(&self, t: u32) -> u32 {
        self.factors.get(&t).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.factors.values().sum()
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factor_list(&self) -> Vec<Factor> {
        self.factors.iter().map(|(&t, &mult)| Factor { t, mult }).collect()
    }

    /// Factored form with `(z − (−q)^t)` written as `(z-q^t)` for even `t`
    /// and `(z+q^t)` for odd `t`.
    pub fn to_text(&self) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut out = String::new();
        for (&t, &m) in &self.factors {
            let sign = if t % 2 == 0 { '-' } else { '+' };
            out.push_str(&format!("(z{sign}q^{t})"));
            if m > 1 {
                out.push_str(&format!("^{m}"));
            }
        }
        out
    }

    pub fn to_latex(&self) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut out = String::new();
        for (&t, &m) in &self.factors {
            let sign = if t % 2 == 0 { '-' } else { '+' };
            out.push_str(&format!("(z{sign}q^{{{t}}})"));
            if m > 1 {
                out.push_str(&format!("^{{{m}}}"));
            }
        }
        out
    }

    /// Parses the text form produced by [`DistancePolynomial::to_text`].
    pub fn parse(text: &str) -> Result<Self> {
        let err = || Error::Parse {
            what: "distance polynomial",
            text: text.to_string(),
        };
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut p = Self::new();
        if t == "1" {
            return Ok(p);
        }
        let mut rest = t.as_str();
        while !rest.is_empty() {
            let body = rest.strip_prefix("(z").ok_or_else(err)?;
            let close = body.find(')').ok_or_else(err)?;
            let (factor, after) = (&body[..close], &body[close + 1..]);
            let (sign, exp) = if let Some(e) = factor.strip_prefix("-q^") {
                ('-', e)
            } else if let Some(e) = factor.strip_prefix("+q^") {
                ('+', e)
            } else {
                return Err(err());
            };
            let exp: u32 = exp.trim_matches(|c| c == '{' || c == '}').parse().map_err(|_| err())?;
            if exp.is_multiple_of(2) != (sign == '-') {
                return Err(err());
            }
            let (mult, after) = match after.strip_prefix('^') {
                Some(a) => {
                    let end = a.find('(').unwrap_or(a.len());
                    let m: u32 = a[..end].trim_matches(|c| c == '{' || c == '}').parse().map_err(|_| err())?;
                    (m, &a[end..])
                }
                None => (1, after),
            };
            p.multiply(exp, mult);
            rest = after;
        }
        Ok(p)
    }
}

impl fmt::Display for DistancePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// How [`OTable::build`] evaluates `o_t(k,l)` on a set of pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Compute every pair and require all pairs of a set to agree.
    Checked,
    /// Compute one representative pair per set.
    Trusting,
}

/// Comparable pairs of `Γ_Q` with residues `{k, l}` whose coordinates differ
/// by `t`, listed as `(lower, upper)` for the convex order.
pub fn pairs_at(arq: &ARQuiver, k: usize, l: usize, t: u32) -> Vec<(RootId, RootId)> {
    let mut out = Vec::new();
    for (i, p, a) in arq.vertices() {
        for (j, q, b) in arq.vertices() {
            if (i, j) != (k, l) && (i, j) != (l, k) {
                continue;
            }
            if p.abs_diff(q) != t || !arq.prec(a, b) {
                continue;
            }
            out.push((a, b));
        }
    }
    out.sort();
    out.dedup();
    out
}

fn residue_key(k: usize, l: usize) -> (usize, usize) {
    (k.min(l), k.max(l))
}

/// `o_t(k,l)` for one quiver: the generalized distance of the pairs in each
/// set `Φ_Q(k,l)[t]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OTable {
    values: BTreeMap<(usize, usize, u32), u32>,
}

impl OTable {
    pub fn build(arq: &ARQuiver, mode: Mode) -> Result<Self> {
        let calc = SeqCalc::new(arq.class());
        Self::build_with(arq, &calc, mode)
    }

    pub fn build_with(arq: &ARQuiver, calc: &SeqCalc, mode: Mode) -> Result<Self> {
        let mut groups: BTreeMap<(usize, usize, u32), Vec<(RootId, RootId)>> = BTreeMap::new();
        for (i, p, a) in arq.vertices() {
            for (j, q, b) in arq.vertices() {
                if arq.prec(a, b) {
                    let (k, l) = residue_key(i, j);
                    groups.entry((k, l, p.abs_diff(q))).or_default().push((a, b));
                }
            }
        }
        let mut values = BTreeMap::new();
        for ((k, l, t), pairs) in groups {
            let value = match mode {
                Mode::Trusting => calc.gdist_pair(pairs[0].0, pairs[0].1)? as u32,
                Mode::Checked => {
                    let seen: BTreeSet<u32> = pairs
                        .iter()
                        .map(|&(a, b)| calc.gdist_pair(a, b).map(|d| d as u32))
                        .collect::<Result<_>>()?;
                    if seen.len() > 1 {
                        return Err(Error::WellDefinednessViolation {
                            k: k + 1,
                            l: l + 1,
                            t,
                            values: seen.into_iter().collect(),
                        });
                    }
                    seen.into_iter().next().unwrap_or(0)
                }
            };
            if value > 0 {
                values.insert((k, l, t), value);
            }
        }
        Ok(Self { values })
    }

    /// `o_t(k,l)` with 0-based nodes.
    pub fn get(&self, k: usize, l: usize, t: u32) -> u32 {
        let (k, l) = residue_key(k, l);
        self.values.get(&(k, l, t)).copied().unwrap_or(0)
    }

    fn entries(&self, k: usize, l: usize) -> impl Iterator<Item = (u32, u32)> + '_ {
        let (k, l) = residue_key(k, l);
        self.values
            .range((k, l, 0)..=(k, l, u32::MAX))
            .map(|(&(_, _, t), &v)| (t, v))
    }
}

/// `o_t(k,l)` for a quiver, with 0-based nodes, evaluated in the given mode.
pub fn o_t(arq: &ARQuiver, k: usize, l: usize, t: u32, mode: Mode) -> Result<u32> {
    let pairs = pairs_at(arq, k, l, t);
    if pairs.is_empty() {
        return Ok(0);
    }
    let calc = SeqCalc::new(arq.class());
    let take = match mode {
        Mode::Checked => pairs.len(),
        Mode::Trusting => 1,
    };
    let seen: BTreeSet<u32> = pairs[..take]
        .iter()
        .map(|&(a, b)| calc.gdist_pair(a, b).map(|d| d as u32))
        .collect::<Result<_>>()?;
    if seen.len() > 1 {
        return Err(Error::WellDefinednessViolation {
            k: k + 1,
            l: l + 1,
            t,
            values: seen.into_iter().collect(),
        });
    }
    Ok(seen.into_iter().next().unwrap_or(0))
}

/// The distance polynomials `D_{k,l}` of a quiver, built from the tables of
/// the quiver and of its reverse.
#[derive(Debug, Clone)]
pub struct DistanceData {
    kind: Kind,
    rank: usize,
    star: Vec<usize>,
    h: u32,
    orientation: String,
    table: OTable,
    reversed: OTable,
}

impl DistanceData {
    pub fn new(quiver: &DynkinQuiver, mode: Mode) -> Result<Self> {
        let table = OTable::build(&ARQuiver::build(quiver), mode)?;
        let reversed = OTable::build(&ARQuiver::build(&quiver.reversed()), mode)?;
        Ok(Self::from_tables(quiver, table, reversed))
    }

    /// Combines precomputed tables of a quiver and of its reverse.
    pub fn from_tables(quiver: &DynkinQuiver, table: OTable, reversed: OTable) -> Self {
        let sys = quiver.system();
        Self {
            kind: sys.kind(),
            rank: sys.rank(),
            star: sys.star_map().to_vec(),
            h: sys.dual_coxeter() as u32,
            orientation: quiver.to_spec(),
            table,
            reversed,
        }
    }

    /// `D_{k,l}` with 0-based nodes.
    pub fn polynomial(&self, k: usize, l: usize) -> DistancePolynomial {
        let mut t_values: BTreeMap<u32, u32> = BTreeMap::new();
        for (t, v) in self.table.entries(k, l).chain(self.reversed.entries(k, l)) {
            let e = t_values.entry(t).or_default();
            *e = (*e).max(v);
        }
        DistancePolynomial { factors: t_values }
    }

    /// Whether the factor `(z − (−q)^{h∨})` applies to `(k, l)`.
    pub fn corrected(&self, k: usize, l: usize) -> bool {
        self.star[k] == l
    }

    /// `D_{k,l} · (z − (−q)^{h∨})^{δ_{l,k*}}` with 0-based nodes.
    pub fn denominator(&self, k: usize, l: usize) -> DistancePolynomial {
        let mut p = self.polynomial(k, l);
        if self.corrected(k, l) {
            p.multiply(self.h, 1);
        }
        p
    }

    pub fn table(&self) -> DenominatorTable {
        let mut entries = Vec::new();
        for k in 0..self.rank {
            for l in 0..self.rank {
                let poly = self.denominator(k, l);
                entries.push(TableEntry {
                    k: k + 1,
                    l: l + 1,
                    text: poly.to_text(),
                    factors: poly.factor_list(),
                    correction: self.corrected(k, l),
                });
            }
        }
        DenominatorTable {
            kind: self.kind,
            rank: self.rank,
            orientation: self.orientation.clone(),
            dual_coxeter: self.h,
            conjectural: self.kind == Kind::E,
            p_star: (self.kind == Kind::E && self.rank == 6).then_some(12),
            entries,
        }
    }
}

/// The closed-form denominator `d_{k,l}(z)` of `A_n^{(1)}` or `D_n^{(1)}` with
/// 1-based nodes, as a multiset of exponents.
pub fn denominator_closed_form(kind: Kind, n: usize, k: usize, l: usize) -> Result<DistancePolynomial> {
    RootSystem::new(kind, n)?;
    if k == 0 || l == 0 || k > n || l > n {
        return Err(Error::InvalidNode(k.max(l)));
    }
    let (k, l, n) = (k as i64, l as i64, n as i64);
    let mut roots = Vec::new();
    match kind {
        Kind::A => {
            let top = k.min(l).min(n + 1 - k).min(n + 1 - l);
            roots.extend((1..=top).map(|x| (k - l).abs() + 2 * x));
        }
        Kind::D => {
            let spin = |x: i64| x >= n - 1;
            match (spin(k), spin(l)) {
                (false, false) => {
                    for x in 1..=k.min(l) {
                        roots.push((k - l).abs() + 2 * x);
                        roots.push(2 * n - 2 - k - l + 2 * x);
                    }
                }
                (false, true) | (true, false) => {
                    let m = k.min(l);
                    roots.extend((1..=m).map(|x| n - m - 1 + 2 * x));
                }
                (true, true) if k != l => roots.extend((1..=(n - 1) / 2).map(|x| 4 * x)),
                (true, true) => roots.extend((1..=n / 2).map(|x| 4 * x - 2)),
            }
        }
        Kind::E => return Err(Error::UnsupportedType(format!("E{n} has no closed form"))),
    }
    Ok(DistancePolynomial::from_roots(roots.into_iter().map(|t| t as u32)))
}

/// Exponents `s` where the closed form of `D_n^{(1)}` has a double zero,
/// with 1-based nodes.
pub fn double_root_window(n: usize, k: usize, l: usize) -> Vec<u32> {
    let (n, k, l) = (n as i64, k as i64, l as i64);
    if !(2 <= k && k <= n - 2 && 2 <= l && l <= n - 2 && k + l > n - 1) {
        return Vec::new();
    }
    (2 * n - k - l..=k + l)
        .filter(|s| (s - k - l) % 2 == 0)
        .map(|s| s as u32)
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub k: usize,
    pub l: usize,
    pub text: String,
    pub factors: Vec<Factor>,
    pub correction: bool,
}

/// The full matrix of denominators read from one quiver.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DenominatorTable {
    pub kind: Kind,
    pub rank: usize,
    pub orientation: String,
    pub dual_coxeter: u32,
    pub conjectural: bool,
    /// Exponent of the spectral shift p* = q^e, where known. Not used in any computation.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p_star: Option<u32>,
    pub entries: Vec<TableEntry>,
}

impl DenominatorTable {
    pub fn entry(&self, k: usize, l: usize) -> Option<&TableEntry> {
        self.entries.iter().find(|e| e.k == k && e.l == l)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{}{} denominators{} from {}\n",
            self.kind,
            self.rank,
            if self.conjectural { " (conjectural)" } else { "" },
            self.orientation
        );
        for e in &self.entries {
            out.push_str(&format!("d_{},{}(z) = {}\n", e.k, e.l, e.text));
        }
        out
    }

    pub fn to_latex(&self) -> String {
        let mut out = String::from("\\begin{align*}\n");
        for e in &self.entries {
            let poly = DistancePolynomial {
                factors: e.factors.iter().map(|f| (f.t, f.mult)).collect(),
            };
            out.push_str(&format!("& d_{{{},{}}}(z) = {} \\\\\n", e.k, e.l, poly.to_latex()));
        }
        out.push_str("\\end{align*}\n");
        out
    }
}

/// One `(k, l)` where the quiver reading and the closed form disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub k: usize,
    pub l: usize,
    pub computed: String,
    pub expected: String,
    pub offending: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DenominatorReport {
    pub orientation: String,
    pub checked: usize,
    pub mismatches: Vec<Mismatch>,
}

impl DenominatorReport {
    pub fn is_ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares every `D_{k,l}` with correction against the closed form.
pub fn verify_denominator(quiver: &DynkinQuiver, mode: Mode) -> Result<DenominatorReport> {
    let data = DistanceData::new(quiver, mode)?;
    verify_data(quiver, &data)
}

pub fn verify_data(quiver: &DynkinQuiver, data: &DistanceData) -> Result<DenominatorReport> {
    let sys = quiver.system();
    let n = sys.rank();
    let mut mismatches = Vec::new();
    for k in 0..n {
        for l in 0..n {
            let computed = data.denominator(k, l);
            let expected = denominator_closed_form(sys.kind(), n, k + 1, l + 1)?;
            if computed != expected {
                let ts: BTreeSet<u32> = computed.factors.keys().chain(expected.factors.keys()).copied().collect();
                mismatches.push(Mismatch {
                    k: k + 1,
                    l: l + 1,
                    computed: computed.to_text(),
                    expected: expected.to_text(),
                    offending: ts.into_iter().filter(|&t| computed.mult(t) != expected.mult(t)).collect(),
                });
            }
        }
    }
    Ok(DenominatorReport {
        orientation: quiver.to_spec(),
        checked: n * n,
        mismatches,
    })
}

/// The denominator table of a type E root system read from `quiver`, or from
/// the canonical orientation when none is given.
pub fn conjecture_table(system: &std::sync::Arc<RootSystem>, quiver: Option<&DynkinQuiver>, mode: Mode) -> Result<DenominatorTable> {
    if system.kind() != Kind::E {
        return Err(Error::UnsupportedType(format!(
            "{} is not of type E",
            system.type_name()
        )));
    }
    let canonical;
    let q = match quiver {
        Some(q) => q,
        None => {
            canonical = DynkinQuiver::canonical(system);
            &canonical
        }
    };
    Ok(DistanceData::new(q, mode)?.table())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    fn sys(kind: Kind, rank: usize) -> Arc<RootSystem> {
        Arc::new(RootSystem::new(kind, rank).unwrap())
    }

    #[test]
    fn polynomial_text_round_trip() {
        let p = DistancePolynomial::from_roots([3, 5, 5, 12]);
        assert_eq!(p.to_text(), "(z+q^3)(z+q^5)^2(z-q^12)");
        assert_eq!(p.to_latex(), "(z+q^{3})(z+q^{5})^{2}(z-q^{12})");
        assert_eq!(DistancePolynomial::parse(&p.to_text()).unwrap(), p);
        assert_eq!(DistancePolynomial::parse(&p.to_latex()).unwrap(), p);
        assert_eq!(DistancePolynomial::parse("1").unwrap(), DistancePolynomial::new());
        assert!(DistancePolynomial::parse("(z+q^2)").is_err());
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(serde_json::from_str::<DistancePolynomial>(&json).unwrap(), p);
    }

    #[test]
    fn a3_monotone_example() {
        let s = sys(Kind::A, 3);
        let q = DynkinQuiver::parse(&s, "1>2,2>3").unwrap();
        let arq = ARQuiver::build(&q);
        assert_eq!(pairs_at(&arq, 0, 0, 2).len(), 2);
        let bent = ARQuiver::build(&DynkinQuiver::parse(&s, "1>2,3>2").unwrap());
        assert_eq!(pairs_at(&bent, 0, 0, 2).len(), 1);
        assert_eq!(o_t(&bent, 0, 0, 2, Mode::Checked).unwrap(), 1);
        assert!(pairs_at(&arq, 0, 0, 1).is_empty());
        assert_eq!(o_t(&arq, 0, 0, 2, Mode::Checked).unwrap(), 1);
        assert_eq!(o_t(&arq, 0, 0, 0, Mode::Checked).unwrap(), 0);
        let data = DistanceData::new(&q, Mode::Checked).unwrap();
        assert_eq!(data.polynomial(0, 0), DistancePolynomial::from_roots([2]));
        assert!(data.polynomial(0, 2).is_one());
        assert_eq!(data.denominator(0, 2), DistancePolynomial::from_roots([4]));
    }

    #[test]
    fn d4_residues_1_2() {
        let q = crate::fixtures::ReadingsFixture::load("d4-readings").unwrap();
        let s = sys(q.kind, q.rank);
        let arq = ARQuiver::build(&DynkinQuiver::parse(&s, &q.orientation).unwrap());
        let ts: Vec<u32> = (0..=12).filter(|&t| !pairs_at(&arq, 0, 1, t).is_empty()).collect();
        assert_eq!(ts, vec![1, 3, 5]);
        assert_eq!(o_t(&arq, 0, 1, 1, Mode::Checked).unwrap(), 0);
    }

    #[test]
    fn closed_forms() {
        assert_eq!(
            denominator_closed_form(Kind::A, 5, 2, 3).unwrap(),
            DistancePolynomial::from_roots([3, 5])
        );
        assert_eq!(
            denominator_closed_form(Kind::D, 6, 6, 6).unwrap(),
            DistancePolynomial::from_roots([2, 6, 10])
        );
        let d533 = denominator_closed_form(Kind::D, 5, 3, 3).unwrap();
        assert_eq!(d533.mult(4), 2);
        assert_eq!(d533, DistancePolynomial::from_roots([2, 4, 4, 6, 6, 8]));
        assert_eq!(double_root_window(5, 3, 3), vec![4, 6]);
        assert!(matches!(
            denominator_closed_form(Kind::E, 6, 1, 1),
            Err(Error::UnsupportedType(_))
        ));
        assert!(denominator_closed_form(Kind::A, 3, 4, 1).is_err());
    }

    /// The closed form has a double zero at `s` exactly in the stated window.
    #[test]
    fn double_roots_follow_the_window() {
        for n in 4..=8 {
            for k in 1..=n {
                for l in 1..=n {
                    let p = denominator_closed_form(Kind::D, n, k, l).unwrap();
                    let window = double_root_window(n, k, l);
                    for (&t, &m) in &p.factors {
                        assert_eq!(m == 2, window.contains(&t), "D{n} ({k},{l}) t={t}");
                        assert!(m <= 2);
                    }
                }
            }
        }
    }

    #[test]
    fn small_types_match_closed_forms() {
        for (kind, rank) in [(Kind::A, 1), (Kind::A, 2), (Kind::A, 4), (Kind::D, 4), (Kind::D, 5)] {
            let s = sys(kind, rank);
            for q in DynkinQuiver::all(&s) {
                let report = verify_denominator(&q, Mode::Checked).unwrap();
                assert!(report.is_ok(), "{kind}{rank} {}: {:?}", q.to_spec(), report.mismatches);
            }
        }
    }

    #[test]
    fn observation_properties() {
        let s = sys(Kind::D, 5);
        for q in DynkinQuiver::all(&s).into_iter().take(4) {
            let data = DistanceData::new(&q, Mode::Trusting).unwrap();
            for k in 0..5 {
                for l in 0..5 {
                    let p = data.polynomial(k, l);
                    assert_eq!(p, data.polynomial(l, k));
                    assert_eq!(p, data.polynomial(s.star(k), s.star(l)));
                    let d = s.datum().distance(k, l) as u32;
                    assert!(p.factors.keys().all(|&t| t >= d + 2));
                }
            }
        }
    }

    #[test]
    fn e6_appendix_entry() {
        let s = sys(Kind::E, 6);
        let q = crate::fixtures::GridFixture::load("e6-appendix").unwrap().quiver().unwrap();
        let table = conjecture_table(&s, Some(&q), Mode::Trusting).unwrap();
        assert!(table.conjectural);
        assert_eq!(table.p_star, Some(12));
        assert_eq!(table.entry(1, 1).unwrap().text, "(z-q^2)(z-q^8)");
        assert_eq!(table.entry(1, 5).unwrap().text, "(z-q^6)(z-q^12)");
        assert!(table.entry(1, 5).unwrap().correction);
        assert_eq!(table.entry(2, 6).unwrap().text, "(z-q^4)(z-q^6)(z-q^8)(z-q^10)");
        assert!(table.to_text().contains("d_3,3(z) = (z-q^2)(z-q^4)^2(z-q^6)^3(z-q^8)^3(z-q^10)^2(z-q^12)"));
        assert!(conjecture_table(&sys(Kind::A, 3), None, Mode::Trusting).is_err());
    }

    /// Every pair of residues (1,4) at distance 9 is simple, checked against
    /// the unrestricted partition search in every orientation.
    #[test]
    fn e6_residues_1_4_at_9_are_simple() {
        use crate::orders::{coarse_less, RootSequence};
        let s = sys(Kind::E, 6);
        let mut checked = 0;
        for q in DynkinQuiver::all(&s) {
            let arq = ARQuiver::build(&q);
            let class = arq.class();
            for (a, b) in pairs_at(&arq, 0, 3, 9) {
                let p = RootSequence::pair(a, b);
                let all = crate::seqcalc::vector_partitions(&s, &p.weight(&s), &Default::default()).unwrap();
                assert!(all.iter().all(|m| !coarse_less(&class, m, &p)));
                checked += 1;
            }
            let data = OTable::build(&arq, Mode::Trusting).unwrap();
            assert_eq!(data.get(0, 3, 9), 0);
        }
        assert_eq!(checked, 96);
    }

    /// A chain of three non-simple sequences below a (3,3) pair at distance
    /// 6, confirmed on random linear extensions of the heap.
    #[test]
    fn e6_residue_3_chain_at_6() {
        use crate::orders::{bilex_less, coarse_less, RootSequence};
        use rand::{Rng, SeedableRng};
        let q = crate::fixtures::GridFixture::load("e6-appendix").unwrap().quiver().unwrap();
        let arq = ARQuiver::build(&q);
        let class = arq.class();
        let calc = SeqCalc::new(class.clone());
        let s = arq.system().clone();
        let chain: Vec<RootSequence> = ["(111111,112101,011000)", "(001001,111111,111100,011000)", "(111001,123211)"]
            .iter()
            .map(|t| RootSequence::parse(&s, t).unwrap())
            .collect();
        let (a, b) = calc.pair_roots(&chain[2]).unwrap();
        assert!(pairs_at(&arq, 2, 2, 6).contains(&(a, b)) || pairs_at(&arq, 2, 2, 6).contains(&(b, a)));
        let r = |t: &str| s.parse_root(t).unwrap();
        assert_eq!(s.sum(r("(111111)"), r("(011000)")), Some(r("(122111)")));
        assert!(chain.iter().all(|m| !calc.is_simple(m)));
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let t = class.len();
        for _ in 0..2000 {
            let mut indegree = vec![0; t];
            let mut succ = vec![Vec::new(); t];
            for &(p, q) in class.covers() {
                succ[p].push(q);
                indegree[q] += 1;
            }
            let mut ready: Vec<usize> = (0..t).filter(|&p| indegree[p] == 0).collect();
            let mut order = Vec::new();
            while !ready.is_empty() {
                let p = ready.swap_remove(rng.gen_range(0..ready.len()));
                order.push(p);
                for &q in &succ[p] {
                    indegree[q] -= 1;
                    if indegree[q] == 0 {
                        ready.push(q);
                    }
                }
            }
            let w = class.member_from_order(&order);
            assert!(chain.windows(2).all(|c| bilex_less(&w, &c[0], &c[1])));
        }
        assert!(chain.windows(2).all(|c| coarse_less(&class, &c[0], &c[1])));
        assert_eq!(calc.gdist(&chain[2]).unwrap(), 3);
        assert_eq!(calc.dist(a, b).unwrap(), 2);
        let table = DistanceData::new(&q, Mode::Checked).unwrap();
        assert_eq!(table.polynomial(2, 2).mult(6), 3);
    }
}
