//! Simple and minimal sequences, socles, distances, good neighbors and radii
//! of root sequences over a commutation class.

use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::orders::{coarse_less, RootSequence};
use crate::rootset::RootSet;
use crate::rootsys::{RootId, RootSystem};
use crate::words::CommClass;

pub const DEFAULT_PARTITION_CAP: usize = 1_000_000;

/// Restrictions for [`vector_partitions`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartitionOpts {
    /// Roots that may be used as parts; all positive roots when `None`.
    pub allowed: Option<RootSet>,
    pub max_parts: Option<u32>,
    pub basic_only: bool,
    pub cap: usize,
}

impl Default for PartitionOpts {
    fn default() -> Self {
        Self {
            allowed: None,
            max_parts: None,
            basic_only: false,
            cap: DEFAULT_PARTITION_CAP,
        }
    }
}

fn allowed_desc(system: &RootSystem, allowed: Option<RootSet>) -> Vec<RootId> {
    let mut ids: Vec<RootId> = system
        .ids()
        .filter(|&r| allowed.is_none_or(|s| s.contains(r)))
        .collect();
    ids.reverse();
    ids
}

fn fits(rem: &[i32], c: &[i32]) -> bool {
    rem.iter().zip(c).all(|(a, b)| a >= b)
}

fn sub_assign(rem: &mut [i32], c: &[i32]) {
    rem.iter_mut().zip(c).for_each(|(a, b)| *a -= b);
}

fn add_assign(rem: &mut [i32], c: &[i32]) {
    rem.iter_mut().zip(c).for_each(|(a, b)| *a += b);
}

/// All multisets of positive roots summing to `weight`, subject to `opts`.
/// The result is sorted.
pub fn vector_partitions(system: &RootSystem, weight: &[i32], opts: &PartitionOpts) -> Result<Vec<RootSequence>> {
    struct Search<'a> {
        system: &'a RootSystem,
        roots: Vec<RootId>,
        heights: Vec<i32>,
        opts: &'a PartitionOpts,
        out: Vec<RootSequence>,
        current: Vec<RootId>,
    }
    impl Search<'_> {
        fn go(&mut self, rem: &mut Vec<i32>, from: usize) -> Result<()> {
            let left: i32 = rem.iter().sum();
            if left == 0 {
                if self.out.len() >= self.opts.cap {
                    return Err(Error::EnumerationCapExceeded { cap: self.opts.cap });
                }
                self.out.push(self.current.iter().copied().collect());
                return Ok(());
            }
            if let Some(max) = self.opts.max_parts {
                let used = self.current.len() as i32;
                let room = max as i32 - used;
                if room <= 0 || self.heights.get(from).is_none_or(|&h| h * room < left) {
                    return Ok(());
                }
            }
            for k in from..self.roots.len() {
                let r = self.roots[k];
                let c = self.system.coeffs(r);
                if !fits(rem, c) {
                    continue;
                }
                sub_assign(rem, c);
                self.current.push(r);
                let next = if self.opts.basic_only { k + 1 } else { k };
                let res = self.go(rem, next);
                self.current.pop();
                add_assign(rem, c);
                res?;
            }
            Ok(())
        }
    }
    if weight.len() != system.rank() || weight.iter().any(|&x| x < 0) {
        return Ok(Vec::new());
    }
    let roots = allowed_desc(system, opts.allowed);
    let heights = roots.iter().map(|&r| system.root(r).height()).collect();
    let mut search = Search {
        system,
        roots,
        heights,
        opts,
        out: Vec::new(),
        current: Vec::new(),
    };
    search.go(&mut weight.to_vec(), 0)?;
    let mut out = search.out;
    out.sort();
    Ok(out)
}

/// Whether `weight` is a sum of roots from `allowed`.
fn has_partition(system: &RootSystem, weight: &[i32], allowed: RootSet) -> bool {
    fn go(system: &RootSystem, roots: &[RootId], rem: &mut Vec<i32>, from: usize, failed: &mut HashSet<(usize, Vec<i32>)>) -> bool {
        if rem.iter().all(|&x| x == 0) {
            return true;
        }
        if failed.contains(&(from, rem.clone())) {
            return false;
        }
        for k in from..roots.len() {
            let c = system.coeffs(roots[k]);
            if !fits(rem, c) {
                continue;
            }
            sub_assign(rem, c);
            let found = go(system, roots, rem, k, failed);
            add_assign(rem, c);
            if found {
                return true;
            }
        }
        failed.insert((from, rem.clone()));
        false
    }
    let roots = allowed_desc(system, Some(allowed));
    go(system, &roots, &mut weight.to_vec(), 0, &mut HashSet::new())
}

/// The socle of a pair: the unique simple sequence below it, or every
/// candidate when there is not exactly one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Socle {
    Defined(RootSequence),
    Undefined(Vec<RootSequence>),
}

/// A distance together with a chain realizing it, listed upwards and ending
/// at the sequence itself. Empty for simple sequences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    pub length: usize,
    pub chain: Vec<RootSequence>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainJson {
    pub length: usize,
    pub chain: Vec<String>,
}

/// Sequence statistics of one commutation class, with memoized pair data.
#[derive(Debug)]
pub struct SeqCalc {
    class: CommClass,
    cap: usize,
    simple: RefCell<HashMap<(RootId, RootId), bool>>,
    dist: RefCell<HashMap<(RootId, RootId), usize>>,
    gdist: RefCell<HashMap<(RootId, RootId), usize>>,
}

fn key(a: RootId, b: RootId) -> (RootId, RootId) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

impl SeqCalc {
    pub fn new(class: CommClass) -> Self {
        Self::with_cap(class, DEFAULT_PARTITION_CAP)
    }

    pub fn with_cap(class: CommClass, cap: usize) -> Self {
        Self {
            class,
            cap: cap.max(1),
            simple: RefCell::default(),
            dist: RefCell::default(),
            gdist: RefCell::default(),
        }
    }

    pub fn class(&self) -> &CommClass {
        &self.class
    }

    pub fn system(&self) -> &RootSystem {
        self.class.system()
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn opts(&self, allowed: RootSet) -> PartitionOpts {
        PartitionOpts {
            allowed: Some(allowed),
            cap: self.cap,
            ..PartitionOpts::default()
        }
    }

    fn check_member(&self, r: RootId) -> Result<()> {
        if self.class.contains(r) {
            Ok(())
        } else {
            Err(Error::RootNotInWord(self.system().format_root(r)))
        }
    }

    /// The two roots of a pair sequence, in the order of the representative.
    pub fn pair_roots(&self, m: &RootSequence) -> Result<(RootId, RootId)> {
        if !m.is_pair() {
            return Err(Error::NotApplicable(format!("{} is not a pair", m.format(self.class.word()))));
        }
        let roots = m.in_word_order(self.class.word());
        roots.iter().try_for_each(|&r| self.check_member(r))?;
        Ok((roots[0], roots[1]))
    }

    /// Orders two roots by their positions in the representative.
    pub fn ordered(&self, a: RootId, b: RootId) -> (RootId, RootId) {
        let w = self.class.word();
        if w.position(a) <= w.position(b) {
            (a, b)
        } else {
            (b, a)
        }
    }

    fn pair_weight(&self, a: RootId, b: RootId) -> Vec<i32> {
        let sys = self.system();
        sys.coeffs(a).iter().zip(sys.coeffs(b)).map(|(x, y)| x + y).collect()
    }

    /// Whether the pair `(a, b)` is simple: no sequence of the same weight lies
    /// below it.
    pub fn is_simple_pair(&self, a: RootId, b: RootId) -> bool {
        if a == b {
            return true;
        }
        if let Some(&v) = self.simple.borrow().get(&key(a, b)) {
            return v;
        }
        let (lo, hi) = if self.class.prec(a, b) { (a, b) } else { (b, a) };
        let v = if !self.class.prec(lo, hi) {
            true
        } else {
            let interval = self.class.open_interval(lo, hi);
            !has_partition(self.system(), &self.pair_weight(a, b), interval)
        };
        self.simple.borrow_mut().insert(key(a, b), v);
        v
    }

    /// A sequence is simple when it has one part or all pairs of distinct
    /// roots in its support are simple.
    pub fn is_simple(&self, m: &RootSequence) -> bool {
        if m.size() <= 1 {
            return true;
        }
        let roots: Vec<RootId> = m.support().iter().collect();
        roots
            .iter()
            .enumerate()
            .all(|(k, &a)| roots[k + 1..].iter().all(|&b| self.is_simple_pair(a, b)))
    }

    /// Pairs of distinct roots strictly between the roots of a comparable
    /// pair with the same weight. These are all the pairs below it.
    pub fn lower_pairs(&self, a: RootId, b: RootId) -> Vec<RootSequence> {
        let (lo, hi) = if self.class.prec(a, b) { (a, b) } else { (b, a) };
        if !self.class.prec(lo, hi) {
            return Vec::new();
        }
        let sys = self.system();
        let w = self.pair_weight(a, b);
        let interval = self.class.open_interval(lo, hi);
        let mut out = Vec::new();
        for x in interval.iter() {
            let rest: Vec<i32> = w.iter().zip(sys.coeffs(x)).map(|(p, q)| p - q).collect();
            if let Some(y) = sys.id_of(&rest) {
                if x < y && interval.contains(y) {
                    out.push(RootSequence::pair(x, y));
                }
            }
        }
        out.sort();
        out
    }

    /// All sequences of equal weight strictly below `m`.
    pub fn lower_sequences(&self, m: &RootSequence) -> Result<Vec<RootSequence>> {
        if m.is_pair() {
            let (a, b) = self.pair_roots(m)?;
            let (lo, hi) = if self.class.prec(a, b) { (a, b) } else { (b, a) };
            if !self.class.prec(lo, hi) {
                return Ok(Vec::new());
            }
            let interval = self.class.open_interval(lo, hi);
            return vector_partitions(self.system(), &self.pair_weight(a, b), &self.opts(interval));
        }
        let all = vector_partitions(self.system(), &m.weight(self.system()), &self.opts(self.class.roots()))?;
        Ok(all.into_iter().filter(|c| coarse_less(&self.class, c, m)).collect())
    }

    /// Longest chain ending at `top` inside `cands ∪ {top}` for the coarse
    /// bi-lexicographic order.
    fn longest_chain(&self, cands: &[RootSequence], top: &RootSequence) -> Vec<RootSequence> {
        fn best(k: usize, below: &[Vec<usize>], memo: &mut [Option<(usize, Option<usize>)>]) -> usize {
            if let Some((v, _)) = memo[k] {
                return v;
            }
            let mut v = (1, None);
            for &j in &below[k] {
                let l = best(j, below, memo) + 1;
                if l > v.0 {
                    v = (l, Some(j));
                }
            }
            memo[k] = Some(v);
            v.0
        }
        let mut all: Vec<&RootSequence> = cands.iter().filter(|c| *c != top).collect();
        all.push(top);
        let below: Vec<Vec<usize>> = all
            .iter()
            .map(|x| {
                (0..all.len())
                    .filter(|&j| coarse_less(&self.class, all[j], x))
                    .collect()
            })
            .collect();
        let mut memo = vec![None; all.len()];
        let top_k = all.len() - 1;
        best(top_k, &below, &mut memo);
        let mut chain = Vec::new();
        let mut cur = Some(top_k);
        while let Some(k) = cur {
            chain.push(all[k].clone());
            cur = memo[k].and_then(|(_, next)| next);
        }
        chain.reverse();
        chain
    }

    /// The distance of a pair with a chain of non-simple pairs realizing it.
    pub fn dist_chain(&self, a: RootId, b: RootId) -> Result<Chain> {
        self.check_member(a)?;
        self.check_member(b)?;
        if self.is_simple_pair(a, b) {
            return Ok(Chain { length: 0, chain: Vec::new() });
        }
        let cands: Vec<RootSequence> = self
            .lower_pairs(a, b)
            .into_iter()
            .filter(|p| {
                let (x, y) = (p.parts()[0].0, p.parts()[1].0);
                !self.is_simple_pair(x, y)
            })
            .collect();
        let chain = self.longest_chain(&cands, &RootSequence::pair(a, b));
        Ok(Chain {
            length: chain.len(),
            chain,
        })
    }

    pub fn dist(&self, a: RootId, b: RootId) -> Result<usize> {
        if let Some(&d) = self.dist.borrow().get(&key(a, b)) {
            return Ok(d);
        }
        let d = self.dist_chain(a, b)?.length;
        self.dist.borrow_mut().insert(key(a, b), d);
        Ok(d)
    }

    /// The generalized distance of a sequence with a chain of non-simple
    /// sequences realizing it.
    pub fn gdist_chain(&self, m: &RootSequence) -> Result<Chain> {
        m.support().iter().try_for_each(|r| self.check_member(r))?;
        if self.is_simple(m) {
            return Ok(Chain { length: 0, chain: Vec::new() });
        }
        let cands: Vec<RootSequence> = self
            .lower_sequences(m)?
            .into_iter()
            .filter(|c| !self.is_simple(c))
            .collect();
        let chain = self.longest_chain(&cands, m);
        Ok(Chain {
            length: chain.len(),
            chain,
        })
    }

    pub fn gdist(&self, m: &RootSequence) -> Result<usize> {
        if m.is_pair() {
            let (a, b) = self.pair_roots(m)?;
            if let Some(&d) = self.gdist.borrow().get(&key(a, b)) {
                return Ok(d);
            }
            let d = self.gdist_chain(m)?.length;
            self.gdist.borrow_mut().insert(key(a, b), d);
            return Ok(d);
        }
        Ok(self.gdist_chain(m)?.length)
    }

    pub fn gdist_pair(&self, a: RootId, b: RootId) -> Result<usize> {
        self.gdist(&RootSequence::pair(a, b))
    }

    /// Simple sequences of equal weight at or below `m`. Unique for pairs of
    /// classes adapted to a quiver.
    pub fn socle(&self, m: &RootSequence) -> Result<Socle> {
        m.support().iter().try_for_each(|r| self.check_member(r))?;
        if self.is_simple(m) {
            return Ok(Socle::Defined(m.clone()));
        }
        let mut simple: Vec<RootSequence> = self
            .lower_sequences(m)?
            .into_iter()
            .filter(|c| self.is_simple(c))
            .collect();
        if simple.len() == 1 {
            Ok(Socle::Defined(simple.remove(0)))
        } else {
            Ok(Socle::Undefined(simple))
        }
    }

    /// Sequences of equal weight directly above the simple sequence `s`.
    pub fn minimal_sequences(&self, s: &RootSequence) -> Result<Vec<RootSequence>> {
        s.support().iter().try_for_each(|r| self.check_member(r))?;
        if !self.is_simple(s) {
            return Err(Error::NotApplicable(format!(
                "{} is not simple",
                s.format(self.class.word())
            )));
        }
        let all = vector_partitions(self.system(), &s.weight(self.system()), &self.opts(self.class.roots()))?;
        let above: Vec<RootSequence> = all
            .into_iter()
            .filter(|m| coarse_less(&self.class, s, m))
            .collect();
        Ok(above
            .iter()
            .filter(|m| !above.iter().any(|x| coarse_less(&self.class, x, m)))
            .cloned()
            .collect())
    }

    /// Whether `lower` and `upper` are good adjacent neighbors: `lower` lies
    /// below `upper`, a root `η` links their parts with distances smaller than
    /// that of `upper`, and no pair of the same weight lies strictly between.
    pub fn good_adjacent(&self, lower: &RootSequence, upper: &RootSequence) -> Result<bool> {
        let (a2, b2) = self.pair_roots(upper)?;
        let d = self.dist(a2, b2)?;
        self.good_adjacent_within(lower, upper, d)
    }

    /// [`SeqCalc::good_adjacent`] with the distances of the linking pairs
    /// bounded by `bound` instead of the distance of `upper`.
    pub fn good_adjacent_within(&self, lower: &RootSequence, upper: &RootSequence, bound: usize) -> Result<bool> {
        let (a1, b1) = self.pair_roots(lower)?;
        let (a2, b2) = self.pair_roots(upper)?;
        if !coarse_less(&self.class, lower, upper) || lower.weight(self.system()) != upper.weight(self.system()) {
            return Ok(false);
        }
        if !self.linked(a1, b1, a2, b2, bound)? {
            return Ok(false);
        }
        for mid in self.lower_pairs(a2, b2) {
            if coarse_less(&self.class, lower, &mid) && coarse_less(&self.class, &mid, upper) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn linked(&self, a1: RootId, b1: RootId, a2: RootId, b2: RootId, d: usize) -> Result<bool> {
        let sys = self.system();
        let diff = |x: RootId, y: RootId| -> Option<RootId> {
            let v: Vec<i32> = sys.coeffs(x).iter().zip(sys.coeffs(y)).map(|(p, q)| p - q).collect();
            sys.id_of(&v).filter(|&r| self.class.contains(r))
        };
        let closer = |x: RootId, y: RootId| -> Result<bool> { Ok(x != y && self.dist(x, y)? < d) };
        if let Some(eta) = diff(b1, b2) {
            if diff(a2, a1) == Some(eta) && closer(eta, b2)? && closer(eta, a1)? {
                return Ok(true);
            }
        }
        if let Some(eta) = diff(b2, b1) {
            if diff(a1, a2) == Some(eta) && closer(b1, eta)? && closer(a2, eta)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Non-simple pairs joined to `m` by a descending chain of good adjacent
    /// steps, sorted. Every step bounds the linking distances by the distance
    /// of `m`.
    pub fn good_neighbors(&self, m: &RootSequence) -> Result<Vec<RootSequence>> {
        let (a, b) = self.pair_roots(m)?;
        if self.is_simple_pair(a, b) {
            return Ok(Vec::new());
        }
        let bound = self.dist(a, b)?;
        let below: Vec<RootSequence> = self
            .lower_pairs(a, b)
            .into_iter()
            .filter(|p| !self.is_simple(p))
            .collect();
        let mut found: BTreeSet<RootSequence> = BTreeSet::new();
        let mut stack = vec![m.clone()];
        while let Some(top) = stack.pop() {
            for p in &below {
                if !found.contains(p) && self.good_adjacent_within(p, &top, bound)? {
                    found.insert(p.clone());
                    stack.push(p.clone());
                }
            }
        }
        Ok(found.into_iter().collect())
    }

    /// The number of good neighbors below a pair.
    pub fn len(&self, m: &RootSequence) -> Result<usize> {
        Ok(self.good_neighbors(m)?.len())
    }

    /// The largest distance among pairs lying above the single-part sequence
    /// `(γ)` with weight `γ`, together with a pair attaining it.
    pub fn radius_witness(&self, gamma: RootId) -> Result<(usize, Option<RootSequence>)> {
        self.check_member(gamma)?;
        let sys = self.system();
        if sys.is_simple_root(gamma) {
            return Err(Error::NotApplicable(format!(
                "{} is a simple root",
                sys.format_root(gamma)
            )));
        }
        let single = RootSequence::single(gamma);
        let mut best = (0, None);
        for x in self.class.roots().iter() {
            let rest: Vec<i32> = sys.coeffs(gamma).iter().zip(sys.coeffs(x)).map(|(p, q)| p - q).collect();
            let Some(y) = sys.id_of(&rest) else { continue };
            if x >= y || !self.class.contains(y) {
                continue;
            }
            let pair = RootSequence::pair(x, y);
            if !coarse_less(&self.class, &single, &pair) {
                continue;
            }
            let d = self.dist(x, y)?;
            if best.1.is_none() || d > best.0 {
                best = (d, Some(pair));
            }
        }
        Ok(best)
    }

    pub fn radius(&self, gamma: RootId) -> Result<usize> {
        Ok(self.radius_witness(gamma)?.0)
    }

    pub fn chain_json(&self, chain: &Chain) -> ChainJson {
        ChainJson {
            length: chain.length,
            chain: chain.chain.iter().map(|m| m.format(self.class.word())).collect(),
        }
    }
}
