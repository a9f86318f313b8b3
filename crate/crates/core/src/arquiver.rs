//! Dynkin quivers, Coxeter elements, Auslander-Reiten quivers with coordinates,
//! adapted readings and the combinatorial reflection functor.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootset::RootSet;
use crate::rootsys::{Kind, RootId, RootSystem};
use crate::words::{self, CommClass, ReducedWord};

/// An orientation of the Dynkin diagram: one arrow `(tail, head)` per edge.
#[derive(Clone)]
pub struct DynkinQuiver {
    system: Arc<RootSystem>,
    arrows: Vec<(usize, usize)>,
    coxeter: Vec<usize>,
}

impl std::fmt::Debug for DynkinQuiver {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "DynkinQuiver({}:{})", self.system.type_name(), self.to_spec())
    }
}

impl PartialEq for DynkinQuiver {
    fn eq(&self, other: &Self) -> bool {
        self.system.kind() == other.system.kind()
            && self.system.rank() == other.system.rank()
            && self.arrows == other.arrows
    }
}

impl Eq for DynkinQuiver {}

impl DynkinQuiver {
    /// Builds a quiver from 0-based arrows, which must orient every Dynkin
    /// edge exactly once.
    pub fn new(system: &Arc<RootSystem>, arrows: &[(usize, usize)]) -> Result<Self> {
        let datum = system.datum();
        let mut oriented = Vec::with_capacity(datum.edges().len());
        for &(a, b) in datum.edges() {
            let matching: Vec<_> = arrows
                .iter()
                .filter(|&&(t, h)| (t, h) == (a, b) || (t, h) == (b, a))
                .collect();
            match matching.as_slice() {
                [one] => oriented.push(**one),
                [] => {
                    return Err(Error::InvalidOrientation(format!(
                        "edge {}-{} has no direction",
                        a + 1,
                        b + 1
                    )))
                }
                _ => {
                    return Err(Error::InvalidOrientation(format!(
                        "edge {}-{} is oriented more than once",
                        a + 1,
                        b + 1
                    )))
                }
            }
        }
        if arrows.len() != oriented.len() {
            let stray = arrows
                .iter()
                .find(|&&(t, h)| t >= system.rank() || h >= system.rank() || !datum.adjacent(t, h))
                .copied()
                .unwrap_or((0, 0));
            return Err(Error::InvalidOrientation(format!(
                "{}>{} is not an edge of the Dynkin diagram",
                stray.0 + 1,
                stray.1 + 1
            )));
        }
        Ok(Self::from_arrows(system.clone(), oriented))
    }

    /// Parses a comma-separated list such as `"3>2,2>1,2>4"` (1-based).
    /// `a<b` is accepted as `b>a`.
    pub fn parse(system: &Arc<RootSystem>, text: &str) -> Result<Self> {
        let mut arrows = Vec::new();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (left, right, forward) = if let Some((l, r)) = item.split_once('>') {
                (l, r, true)
            } else if let Some((l, r)) = item.split_once('<') {
                (l, r, false)
            } else {
                return Err(Error::InvalidOrientation(item.to_string()));
            };
            let parse = |s: &str| -> Result<usize> {
                let v: usize = s
                    .trim()
                    .parse()
                    .map_err(|_| Error::InvalidOrientation(item.to_string()))?;
                if v == 0 || v > system.rank() {
                    return Err(Error::InvalidOrientation(item.to_string()));
                }
                Ok(v - 1)
            };
            let (a, b) = (parse(left)?, parse(right)?);
            arrows.push(if forward { (a, b) } else { (b, a) });
        }
        Self::new(system, &arrows)
    }

    /// The orientation in the `a>b` syntax, edges in diagram order.
    pub fn to_spec(&self) -> String {
        self.arrows
            .iter()
            .map(|(t, h)| format!("{}>{}", t + 1, h + 1))
            .collect::<Vec<_>>()
            .join(",")
    }

    /// All `2^(n-1)` orientations in a fixed order.
    pub fn all(system: &Arc<RootSystem>) -> Vec<DynkinQuiver> {
        let edges = system.datum().edges().to_vec();
        (0u32..1 << edges.len())
            .map(|mask| {
                let arrows: Vec<_> = edges
                    .iter()
                    .enumerate()
                    .map(|(k, &(a, b))| if mask >> k & 1 == 0 { (a, b) } else { (b, a) })
                    .collect();
                DynkinQuiver::from_arrows(system.clone(), arrows)
            })
            .collect()
    }

    /// Arrows point away from node 1 in types A and D; the appendix
    /// orientations in type E.
    pub fn canonical(system: &Arc<RootSystem>) -> Self {
        Self::new(system, &words::canonical_orientation(system)).expect("canonical orientation is valid")
    }

    pub fn system(&self) -> &Arc<RootSystem> {
        &self.system
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn is_source(&self, i: usize) -> bool {
        self.arrows.iter().all(|&(_, h)| h != i)
    }

    pub fn is_sink(&self, i: usize) -> bool {
        self.arrows.iter().all(|&(t, _)| t != i)
    }

    pub fn sources(&self) -> Vec<usize> {
        (0..self.system.rank()).filter(|&i| self.is_source(i)).collect()
    }

    pub fn sinks(&self) -> Vec<usize> {
        (0..self.system.rank()).filter(|&i| self.is_sink(i)).collect()
    }

    /// `s_i Q`: every arrow at `i` reversed.
    pub fn reflect(&self, i: usize) -> Self {
        let arrows = self
            .arrows
            .iter()
            .map(|&(t, h)| if t == i || h == i { (h, t) } else { (t, h) })
            .collect();
        Self::from_arrows(self.system.clone(), arrows)
    }

    /// `Q^rev`: every arrow reversed.
    pub fn reversed(&self) -> Self {
        Self::from_arrows(
            self.system.clone(),
            self.arrows.iter().map(|&(t, h)| (h, t)).collect(),
        )
    }

    /// `Q^*`: the quiver transported along `i ↦ i*`.
    pub fn starred(&self) -> Self {
        let s = &self.system;
        let arrows: Vec<_> = self.arrows.iter().map(|&(t, h)| (s.star(t), s.star(h))).collect();
        Self::new(s, &arrows).expect("the involution is a diagram automorphism")
    }

    fn from_arrows(system: Arc<RootSystem>, arrows: Vec<(usize, usize)>) -> Self {
        let n = system.rank();
        let mut current = arrows.clone();
        let mut coxeter = Vec::with_capacity(n);
        let mut used = vec![false; n];
        while coxeter.len() < n {
            let source = (0..n)
                .find(|&i| !used[i] && current.iter().all(|&(_, h)| h != i))
                .expect("a Dynkin quiver has a source among the unused vertices");
            used[source] = true;
            coxeter.push(source);
            for arrow in current.iter_mut() {
                if arrow.0 == source {
                    *arrow = (arrow.1, arrow.0);
                }
            }
        }
        Self {
            system,
            arrows,
            coxeter,
        }
    }

    /// The Coxeter word obtained by peeling the smallest unused source repeatedly.
    pub fn coxeter_word(&self) -> Vec<usize> {
        self.coxeter.clone()
    }

    /// Height function with `ξ_head = ξ_tail − 1`, normalized so the smallest
    /// source has height 0.
    pub fn height_function(&self) -> Vec<i32> {
        let n = self.system.rank();
        let mut xi: Vec<Option<i32>> = vec![None; n];
        let start = self.sources()[0];
        xi[start] = Some(0);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            let x = xi[v].expect("visited");
            for &(t, h) in &self.arrows {
                if t == v && xi[h].is_none() {
                    xi[h] = Some(x - 1);
                    stack.push(h);
                } else if h == v && xi[t].is_none() {
                    xi[t] = Some(x + 1);
                    stack.push(t);
                }
            }
        }
        xi.into_iter().map(|x| x.expect("Dynkin diagrams are connected")).collect()
    }

    fn reachable_from(&self, i: usize, forward: bool) -> Vec<usize> {
        let mut seen = vec![false; self.system.rank()];
        seen[i] = true;
        let mut stack = vec![i];
        while let Some(v) = stack.pop() {
            for &(t, h) in &self.arrows {
                let (from, to) = if forward { (t, h) } else { (h, t) };
                if from == v && !seen[to] {
                    seen[to] = true;
                    stack.push(to);
                }
            }
        }
        (0..seen.len()).filter(|&j| seen[j]).collect()
    }

    fn indicator_root(&self, nodes: &[usize]) -> RootId {
        let mut v = vec![0; self.system.rank()];
        for &j in nodes {
            v[j] = 1;
        }
        self.system.id_of(&v).expect("a connected subdiagram sums to a root")
    }

    /// `γ_i = Σ α_j` over the nodes with a path to `i`.
    pub fn gamma(&self, i: usize) -> RootId {
        self.indicator_root(&self.reachable_from(i, false))
    }

    /// `θ_i = Σ α_j` over the nodes reachable from `i`.
    pub fn theta(&self, i: usize) -> RootId {
        self.indicator_root(&self.reachable_from(i, true))
    }

    /// `γ_{i_k} = s_{i_1} ⋯ s_{i_{k-1}}(α_{i_k})` along the Coxeter word.
    pub fn gamma_by_reflections(&self, i: usize) -> RootId {
        let c = self.coxeter_word();
        let k = c.iter().position(|&x| x == i).expect("each node occurs once");
        let mut v = vec![0; self.system.rank()];
        v[i] = 1;
        for &j in c[..k].iter().rev() {
            self.system.reflect_vec(j, &mut v);
        }
        self.system.id_of(&v).expect("Coxeter words are reduced")
    }

    /// `θ_{i_k} = s_{i_n} ⋯ s_{i_{k+1}}(α_{i_k})` along the Coxeter word.
    pub fn theta_by_reflections(&self, i: usize) -> RootId {
        let c = self.coxeter_word();
        let k = c.iter().position(|&x| x == i).expect("each node occurs once");
        let mut v = vec![0; self.system.rank()];
        v[i] = 1;
        for &j in &c[k + 1..] {
            self.system.reflect_vec(j, &mut v);
        }
        self.system.id_of(&v).expect("reversed Coxeter words are reduced")
    }

    /// `τ_Q(v) = s_{i_1} ⋯ s_{i_n}(v)` for the Coxeter word `i_1 ⋯ i_n`.
    pub fn tau_vec(&self, v: &mut [i32]) {
        for &j in self.coxeter.iter().rev() {
            self.system.reflect_vec(j, v);
        }
    }

    pub fn tau_inv_vec(&self, v: &mut [i32]) {
        for &j in &self.coxeter {
            self.system.reflect_vec(j, v);
        }
    }

    /// Whether the word is adapted: each letter is a source of the quiver
    /// reflected at all earlier letters.
    pub fn is_adapted(&self, letters: &[usize]) -> bool {
        let mut q = self.clone();
        for &i in letters {
            if i >= self.system.rank() || !q.is_source(i) {
                return false;
            }
            q = q.reflect(i);
        }
        true
    }
}

/// The vertex choice rule for greedy readings of an AR quiver.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TieBreak {
    SmallestResidue,
    LargestResidue,
}

/// The AR quiver `Γ_Q` with vertices `(i, p)` labelled by positive roots.
#[derive(Clone)]
pub struct ARQuiver {
    quiver: DynkinQuiver,
    xi: Vec<i32>,
    m: Vec<usize>,
    coords: Vec<(usize, i32)>,
    at: HashMap<(usize, i32), RootId>,
    succ: Vec<Vec<RootId>>,
    pred: Vec<Vec<RootId>>,
    below: Vec<RootSet>,
}

impl std::fmt::Debug for ARQuiver {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ARQuiver({:?})", self.quiver)
    }
}

impl ARQuiver {
    /// Seeds `(i, ξ_i) ↦ γ_i` and walks left with `τ_Q` while the result stays positive.
    pub fn build(quiver: &DynkinQuiver) -> Self {
        let sys = quiver.system().clone();
        let n = sys.rank();
        let xi = quiver.height_function();
        let mut coords = vec![(usize::MAX, 0); sys.len()];
        for i in 0..n {
            let mut v = sys.coeffs(quiver.gamma(i)).to_vec();
            let mut p = xi[i];
            loop {
                let id = sys.id_of(&v).expect("walk stays inside the positive roots");
                coords[id.index()] = (i, p);
                quiver.tau_vec(&mut v);
                if v.iter().any(|&c| c < 0) {
                    break;
                }
                p -= 2;
            }
        }
        debug_assert!(coords.iter().all(|&(i, _)| i != usize::MAX));
        Self::assemble(quiver.clone(), xi, coords)
    }

    fn assemble(quiver: DynkinQuiver, xi: Vec<i32>, coords: Vec<(usize, i32)>) -> Self {
        let sys = quiver.system().clone();
        let n = sys.rank();
        let at: HashMap<(usize, i32), RootId> = coords
            .iter()
            .enumerate()
            .map(|(k, &c)| (c, RootId::from_index(k)))
            .collect();
        let mut m = vec![0usize; n];
        for &(i, p) in &coords {
            m[i] = m[i].max(((xi[i] - p) / 2) as usize);
        }
        let count = coords.len();
        let mut succ = vec![Vec::new(); count];
        let mut pred = vec![Vec::new(); count];
        for (k, &(i, p)) in coords.iter().enumerate() {
            for j in sys.datum().neighbors(i) {
                if let Some(&target) = at.get(&(j, p + 1)) {
                    succ[k].push(target);
                    pred[target.index()].push(RootId::from_index(k));
                }
            }
        }
        let mut order: Vec<usize> = (0..count).collect();
        order.sort_by_key(|&k| std::cmp::Reverse(coords[k].1));
        let mut below = vec![RootSet::empty(); count];
        for &k in &order {
            let mut set = RootSet::empty();
            for &s in &succ[k] {
                set = set | below[s.index()] | RootSet::singleton(s);
            }
            below[k] = set;
        }
        Self {
            quiver,
            xi,
            m,
            coords,
            at,
            succ,
            pred,
            below,
        }
    }

    pub fn quiver(&self) -> &DynkinQuiver {
        &self.quiver
    }

    pub fn system(&self) -> &Arc<RootSystem> {
        self.quiver.system()
    }

    pub fn xi(&self) -> &[i32] {
        &self.xi
    }

    /// `m_i = max{k : τ^k(γ_i) > 0}`.
    pub fn m(&self, i: usize) -> usize {
        self.m[i]
    }

    /// Coordinates `(residue, p)` of a root.
    pub fn coord(&self, root: RootId) -> (usize, i32) {
        self.coords[root.index()]
    }

    pub fn residue(&self, root: RootId) -> usize {
        self.coords[root.index()].0
    }

    pub fn label(&self, i: usize, p: i32) -> Option<RootId> {
        self.at.get(&(i, p)).copied()
    }

    /// All vertices sorted by residue and then by `p`.
    pub fn vertices(&self) -> Vec<(usize, i32, RootId)> {
        let mut v: Vec<_> = self
            .coords
            .iter()
            .enumerate()
            .map(|(k, &(i, p))| (i, p, RootId::from_index(k)))
            .collect();
        v.sort();
        v
    }

    pub fn arrows(&self) -> Vec<(RootId, RootId)> {
        let mut out: Vec<(RootId, RootId)> = Vec::new();
        for (k, targets) in self.succ.iter().enumerate() {
            for &t in targets {
                out.push((RootId::from_index(k), t));
            }
        }
        out.sort_by_key(|&(a, b)| (self.coord(a), self.coord(b)));
        out
    }

    pub fn successors(&self, root: RootId) -> &[RootId] {
        &self.succ[root.index()]
    }

    pub fn predecessors(&self, root: RootId) -> &[RootId] {
        &self.pred[root.index()]
    }

    /// Whether there is a nonempty path from `from` to `to`.
    pub fn path(&self, from: RootId, to: RootId) -> bool {
        self.below[from.index()].contains(to)
    }

    /// `α ≺_Q β`, i.e. a path from `β` to `α`.
    pub fn prec(&self, alpha: RootId, beta: RootId) -> bool {
        self.path(beta, alpha)
    }

    /// `τ_Q` on roots, `None` when the image is negative.
    pub fn tau(&self, root: RootId) -> Option<RootId> {
        let (i, p) = self.coord(root);
        self.label(i, p - 2)
    }

    pub fn tau_inv(&self, root: RootId) -> Option<RootId> {
        let (i, p) = self.coord(root);
        self.label(i, p + 2)
    }

    /// The greedy reading that always reads the available vertex with the
    /// smallest (or largest) residue.
    pub fn reading(&self, tie: TieBreak) -> ReducedWord {
        let count = self.coords.len();
        let mut remaining: Vec<usize> = self.succ.iter().map(Vec::len).collect();
        let mut read = vec![false; count];
        let mut order = Vec::with_capacity(count);
        for _ in 0..count {
            let candidates = (0..count).filter(|&k| !read[k] && remaining[k] == 0);
            let pick = match tie {
                TieBreak::SmallestResidue => candidates.min_by_key(|&k| (self.coords[k].0, -self.coords[k].1)),
                TieBreak::LargestResidue => candidates.max_by_key(|&k| (self.coords[k].0, self.coords[k].1)),
            }
            .expect("Γ_Q is acyclic");
            read[pick] = true;
            order.push(RootId::from_index(pick));
            for &u in &self.pred[pick] {
                remaining[u.index()] -= 1;
            }
        }
        self.word_of_reading(&order)
    }

    fn word_of_reading(&self, order: &[RootId]) -> ReducedWord {
        let letters = order.iter().map(|&r| self.residue(r)).collect();
        ReducedWord::from_parts(self.system().clone(), letters, order.to_vec())
    }

    /// Every arrow-compatible reading, as words adapted to `Q`.
    pub fn readings(&self) -> Readings<'_> {
        Readings::new(self)
    }

    /// The commutation class `[Q]` of the adapted words.
    pub fn class(&self) -> CommClass {
        CommClass::new(self.reading(TieBreak::SmallestResidue))
    }

    /// Whether `word` is one of the readings of `Γ_Q`.
    pub fn is_reading(&self, word: &ReducedWord) -> bool {
        if word.len() != self.coords.len() {
            return false;
        }
        let mut pos = vec![usize::MAX; self.coords.len()];
        for (k, &r) in word.roots().iter().enumerate() {
            if self.residue(r) != word.letters()[k] {
                return false;
            }
            pos[r.index()] = k;
        }
        self.arrows()
            .iter()
            .all(|&(from, to)| pos[to.index()] < pos[from.index()])
    }

    /// The combinatorial reflection functor at a sink `i`.
    ///
    /// The vertex `α_i` at `(i*, p)` is removed, a vertex `(i, p + h∨)` labelled
    /// `α_i` is added, and every other label `β` becomes `s_i(β)`.
    pub fn reflect(&self, i: usize) -> Result<ARQuiver> {
        if i >= self.system().rank() {
            return Err(Error::InvalidNode(i + 1));
        }
        if !self.quiver.is_sink(i) {
            return Err(Error::NotASink(i + 1));
        }
        let sys = self.system().clone();
        let alpha = sys.simple(i);
        let (_, p) = self.coord(alpha);
        let new_p = p + sys.dual_coxeter() as i32;
        let new_quiver = self.quiver.reflect(i);
        let new_xi = new_quiver.height_function();
        let shift = new_xi[i] - new_p;
        let mut coords = vec![(usize::MAX, 0); sys.len()];
        coords[alpha.index()] = (i, new_p + shift);
        for beta in sys.ids().filter(|&b| b != alpha) {
            let (r, q) = self.coord(beta);
            let image = sys.reflect(i, beta).expect("s_i permutes the positive roots other than α_i");
            coords[image.index()] = (r, q + shift);
        }
        Ok(Self::assemble(new_quiver, new_xi, coords))
    }

    /// The inverse move at a source `i`: `α_i` at `(i, ξ_i)` is moved to
    /// `(i*, ξ_i − h∨)` and every other label `β` becomes `s_i(β)`.
    pub fn reflect_source(&self, i: usize) -> Result<ARQuiver> {
        if i >= self.system().rank() {
            return Err(Error::InvalidNode(i + 1));
        }
        if !self.quiver.is_source(i) {
            return Err(Error::NotApplicable(format!("vertex {} is not a source", i + 1)));
        }
        let sys = self.system().clone();
        let alpha = sys.simple(i);
        let (_, p) = self.coord(alpha);
        let new_p = p - sys.dual_coxeter() as i32;
        let new_quiver = self.quiver.reflect(i);
        let new_xi = new_quiver.height_function();
        let mut coords = vec![(usize::MAX, 0); sys.len()];
        coords[alpha.index()] = (sys.star(i), new_p);
        for beta in sys.ids().filter(|&b| b != alpha) {
            let image = sys.reflect(i, beta).expect("s_i permutes the positive roots other than α_i");
            coords[image.index()] = self.coord(beta);
        }
        let shift = (0..sys.rank())
            .map(|j| {
                let top = coords.iter().filter(|c| c.0 == j).map(|c| c.1).max().expect("rows are nonempty");
                new_xi[j] - top
            })
            .next()
            .expect("rank is positive");
        for c in coords.iter_mut() {
            c.1 += shift;
        }
        Ok(Self::assemble(new_quiver, new_xi, coords))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let sys = self.system();
        let vertices = self
            .vertices()
            .into_iter()
            .map(|(i, p, r)| VertexJson {
                i: i + 1,
                p,
                root: sys.coeffs(r).to_vec(),
            })
            .collect();
        let arrows = self
            .arrows()
            .into_iter()
            .map(|(a, b)| {
                let (ia, pa) = self.coord(a);
                let (ib, pb) = self.coord(b);
                ArrowJson {
                    from: (ia + 1, pa),
                    to: (ib + 1, pb),
                }
            })
            .collect();
        serde_json::to_value(ArqJson {
            kind: sys.kind(),
            rank: sys.rank(),
            orientation: self.quiver.to_spec(),
            xi: self.xi.clone(),
            vertices,
            arrows,
        })
        .expect("AR quiver serializes")
    }

    /// Rebuilds `Γ_Q` from its JSON form and checks the stored labels and arrows.
    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let parsed: ArqJson = serde_json::from_value(value.clone()).map_err(|e| Error::Parse {
            what: "AR quiver json",
            text: e.to_string(),
        })?;
        let sys = Arc::new(RootSystem::new(parsed.kind, parsed.rank)?);
        let q = DynkinQuiver::parse(&sys, &parsed.orientation)?;
        let arq = ARQuiver::build(&q);
        if arq.to_json() != *value {
            return Err(Error::Parse {
                what: "AR quiver json",
                text: "labels do not match the orientation".to_string(),
            });
        }
        Ok(arq)
    }

    pub fn to_dot(&self) -> String {
        let sys = self.system();
        let mut out = String::new();
        writeln!(out, "digraph AR {{").ok();
        writeln!(out, "  rankdir=LR;").ok();
        writeln!(out, "  node [shape=plaintext];").ok();
        let mut rows: BTreeMap<usize, Vec<(i32, RootId)>> = BTreeMap::new();
        for (i, p, r) in self.vertices() {
            rows.entry(i).or_default().push((p, r));
        }
        for (i, row) in &rows {
            writeln!(out, "  subgraph row{} {{", i + 1).ok();
            for &(p, r) in row {
                writeln!(
                    out,
                    "    \"v{}_{}\" [label=\"{}\", pos=\"{},{}!\"];",
                    i + 1,
                    p,
                    sys.format_root(r),
                    p,
                    -(*i as i32)
                )
                .ok();
            }
            writeln!(out, "  }}").ok();
        }
        for (a, b) in self.arrows() {
            let (ia, pa) = self.coord(a);
            let (ib, pb) = self.coord(b);
            writeln!(out, "  \"v{}_{}\" -> \"v{}_{}\";", ia + 1, pa, ib + 1, pb).ok();
        }
        writeln!(out, "}}").ok();
        out
    }

    /// A grid with one line per residue and one column per coordinate `p`.
    pub fn to_text(&self) -> String {
        let sys = self.system();
        let verts = self.vertices();
        let min_p = verts.iter().map(|v| v.1).min().unwrap_or(0);
        let max_p = verts.iter().map(|v| v.1).max().unwrap_or(0);
        let width = verts
            .iter()
            .map(|v| sys.format_root(v.2).chars().count())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        write!(out, "{:>4} ", "p").ok();
        for p in min_p..=max_p {
            write!(out, " {:>width$}", p).ok();
        }
        out.push('\n');
        for i in 0..sys.rank() {
            write!(out, "{:>4} ", i + 1).ok();
            for p in min_p..=max_p {
                let cell = self.label(i, p).map(|r| sys.format_root(r)).unwrap_or_default();
                write!(out, " {:>width$}", cell).ok();
            }
            out.push('\n');
        }
        out
    }
}

#[derive(Serialize, Deserialize)]
struct VertexJson {
    i: usize,
    p: i32,
    root: Vec<i32>,
}

#[derive(Serialize, Deserialize)]
struct ArrowJson {
    from: (usize, i32),
    to: (usize, i32),
}

#[derive(Serialize, Deserialize)]
struct ArqJson {
    kind: Kind,
    rank: usize,
    orientation: String,
    xi: Vec<i32>,
    vertices: Vec<VertexJson>,
    arrows: Vec<ArrowJson>,
}

/// Iterator over all arrow-compatible readings of an AR quiver.
pub struct Readings<'a> {
    arq: &'a ARQuiver,
    remaining: Vec<usize>,
    read: Vec<bool>,
    prefix: Vec<RootId>,
    frames: Vec<(Vec<RootId>, usize)>,
    started: bool,
}

impl<'a> Readings<'a> {
    fn new(arq: &'a ARQuiver) -> Self {
        Self {
            arq,
            remaining: arq.succ.iter().map(Vec::len).collect(),
            read: vec![false; arq.coords.len()],
            prefix: Vec::new(),
            frames: Vec::new(),
            started: false,
        }
    }

    fn available(&self) -> Vec<RootId> {
        (0..self.read.len())
            .filter(|&k| !self.read[k] && self.remaining[k] == 0)
            .map(RootId::from_index)
            .collect()
    }

    fn apply(&mut self, v: RootId) {
        self.read[v.index()] = true;
        self.prefix.push(v);
        for &u in &self.arq.pred[v.index()] {
            self.remaining[u.index()] -= 1;
        }
    }

    fn undo(&mut self) {
        let v = self.prefix.pop().expect("undo follows apply");
        self.read[v.index()] = false;
        for &u in &self.arq.pred[v.index()] {
            self.remaining[u.index()] += 1;
        }
    }
}

impl Iterator for Readings<'_> {
    type Item = ReducedWord;

    fn next(&mut self) -> Option<ReducedWord> {
        if !self.started {
            self.started = true;
            let avail = self.available();
            self.frames.push((avail, 0));
        }
        let total = self.read.len();
        loop {
            let (v, exhausted) = {
                let frame = self.frames.last_mut()?;
                if frame.1 < frame.0.len() {
                    let v = frame.0[frame.1];
                    frame.1 += 1;
                    (Some(v), false)
                } else {
                    (None, true)
                }
            };
            if exhausted {
                self.frames.pop();
                if !self.frames.is_empty() {
                    self.undo();
                }
                continue;
            }
            let v = v.expect("frame had a choice");
            self.apply(v);
            if self.prefix.len() == total {
                let word = self.arq.word_of_reading(&self.prefix);
                self.undo();
                return Some(word);
            }
            let avail = self.available();
            self.frames.push((avail, 0));
        }
    }
}

/// The quiver `Q` with `[Q]` equal to the class, if there is one.
pub fn find_quiver(class: &CommClass) -> Option<DynkinQuiver> {
    let word = class.word();
    let sys = word.system();
    if !word.is_longest() {
        return None;
    }
    let first: Vec<Option<usize>> = (0..sys.rank())
        .map(|i| word.letters().iter().position(|&x| x == i))
        .collect();
    let arrows: Vec<(usize, usize)> = sys
        .datum()
        .edges()
        .iter()
        .map(|&(a, b)| if first[a] < first[b] { (a, b) } else { (b, a) })
        .collect();
    let q = DynkinQuiver::new(sys, &arrows).ok()?;
    let arq = ARQuiver::build(&q);
    (arq.class() == *class).then_some(q)
}

/// Whether the word is adapted to the quiver.
pub fn is_adapted(word: &ReducedWord, quiver: &DynkinQuiver) -> bool {
    quiver.is_adapted(word.letters())
}

/// One maximal sectional path of an AR quiver.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SectionalPath {
    /// `"S"` or `"N"`.
    pub direction: &'static str,
    pub roots: Vec<String>,
    /// Shared component: type A gives the common first (N) or second (S)
    /// index, type D gives the common signed ε index.
    pub shared: Option<i32>,
    pub shallow: bool,
}

/// One `a`-swing of a type D AR quiver.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Swing {
    pub index: usize,
    pub roots: Vec<String>,
    pub contains_simple: bool,
    pub connected: bool,
}

/// Structural data of type A and D AR quivers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub sectional: Vec<SectionalPath>,
    pub swings: Vec<Swing>,
    pub kappa: Vec<String>,
    pub sigma: Vec<String>,
    /// Type A: unused. Type D: the swing index of each `σ_k`.
    pub sigma_indices: Vec<usize>,
    /// Type D: the signed index `j_{κ_s}` of each `κ_s`.
    pub kappa_indices: Vec<i32>,
    pub sigma_reverse_unimodal: Option<bool>,
    pub kappa_unimodal: Option<bool>,
    /// Type D: `(ta, ta')`, 1-based.
    pub ta: Option<(usize, usize)>,
    pub ta_summand_holds: Option<bool>,
}

impl ARQuiver {
    /// Sectional paths, swings, κ/σ enumerations and the residue split of
    /// types A and D.
    pub fn structure_report(&self) -> Result<StructureReport> {
        let sys = self.system().clone();
        let n = sys.rank();
        let kind = sys.kind();
        if kind == Kind::E {
            return Err(Error::UnsupportedType(
                "structure reports cover types A and D".to_string(),
            ));
        }
        let south = |i: usize| -> Vec<usize> {
            match kind {
                Kind::D if i + 3 == n => vec![n - 2, n - 1],
                Kind::D if i + 3 > n => Vec::new(),
                _ if i + 1 < n => vec![i + 1],
                _ => Vec::new(),
            }
        };
        let north = |i: usize| -> Vec<usize> {
            match kind {
                Kind::D if i + 1 == n => vec![n - 3],
                _ if i >= 1 => vec![i - 1],
                _ => Vec::new(),
            }
        };
        let mut sectional = Vec::new();
        let steps: [(&'static str, &dyn Fn(usize) -> Vec<usize>); 2] = [("S", &south), ("N", &north)];
        for (direction, step) in steps {
            for (i, p, r) in self.vertices() {
                let has_in = (0..n).any(|j| step(j).contains(&i) && self.label(j, p - 1).is_some());
                if has_in {
                    continue;
                }
                let mut paths = Vec::new();
                self.maximal_paths(vec![r], step, &mut paths);
                for path in paths.into_iter().filter(|p| p.len() >= 2) {
                    let shared = self.shared_component(direction, &path);
                    let level = if direction == "S" {
                        self.residue(*path.last().expect("nonempty"))
                    } else {
                        self.residue(path[0])
                    };
                    sectional.push(SectionalPath {
                        direction,
                        roots: path.iter().map(|&x| sys.format_root(x)).collect(),
                        shared,
                        shallow: kind == Kind::D && level + 2 < n,
                    });
                }
            }
        }
        let row = |i: usize, descending: bool| -> Vec<RootId> {
            let mut v: Vec<(i32, RootId)> = self
                .vertices()
                .into_iter()
                .filter(|&(r, _, _)| r == i)
                .map(|(_, p, x)| (p, x))
                .collect();
            v.sort();
            if descending {
                v.reverse();
            }
            v.into_iter().map(|(_, x)| x).collect()
        };
        let mut report = StructureReport {
            sectional,
            swings: Vec::new(),
            kappa: Vec::new(),
            sigma: Vec::new(),
            sigma_indices: Vec::new(),
            kappa_indices: Vec::new(),
            sigma_reverse_unimodal: None,
            kappa_unimodal: None,
            ta: None,
            ta_summand_holds: None,
        };
        match kind {
            Kind::A => {
                report.kappa = row(0, true).iter().map(|&x| sys.format_root(x)).collect();
                report.sigma = row(n - 1, false).iter().map(|&x| sys.format_root(x)).collect();
            }
            Kind::D => {
                for a in 0..n - 2 {
                    let members: Vec<RootId> = sys
                        .ids()
                        .filter(|&x| sys.epsilon(x).expect("type D")[a] == 1)
                        .collect();
                    let set: RootSet = members.iter().copied().collect();
                    report.swings.push(Swing {
                        index: a + 1,
                        roots: members.iter().map(|&x| sys.format_root(x)).collect(),
                        contains_simple: set.contains(sys.simple(a)),
                        connected: self.is_connected(set),
                    });
                }
                let sigma: Vec<RootId> = row(n - 2, true)
                    .into_iter()
                    .filter(|&x| x != sys.simple(n - 2) && x != sys.simple(n - 1))
                    .collect();
                report.sigma_indices = sigma
                    .iter()
                    .map(|&x| {
                        let e = sys.epsilon(x).expect("type D");
                        (0..n - 2).find(|&a| e[a] == 1).map_or(0, |a| a + 1)
                    })
                    .collect();
                report.sigma = sigma.iter().map(|&x| sys.format_root(x)).collect();
                report.sigma_reverse_unimodal = Some(reverse_unimodal(&report.sigma_indices));
                let diff = self.xi[n - 2] - self.xi[n - 1];
                let ta_prime = if diff == 0 { n - 2 } else { n - 1 };
                let ta = if ta_prime == n - 1 { n - 2 } else { n - 1 };
                report.ta = Some((ta + 1, ta_prime + 1));
                report.ta_summand_holds = Some(sys.ids().all(|x| {
                    let e = sys.epsilon(x).expect("type D");
                    let has = e[ta] != 0;
                    let res = self.residue(x) + 2 >= n;
                    has == res
                }));
                let kappa = row(0, true);
                report.kappa_indices = kappa
                    .iter()
                    .map(|&x| {
                        let e = sys.epsilon(x).expect("type D");
                        if e[ta_prime] != 0 {
                            e[ta_prime] * (ta_prime as i32 + 1)
                        } else {
                            let b = (1..n).find(|&b| e[b] == -1).unwrap_or(0);
                            -(b as i32 + 1)
                        }
                    })
                    .collect();
                report.kappa = kappa.iter().map(|&x| sys.format_root(x)).collect();
                report.kappa_unimodal = Some(kappa_unimodal(&report.kappa_indices, ta_prime as i32 + 1));
            }
            Kind::E => unreachable!(),
        }
        Ok(report)
    }

    fn shared_component(&self, direction: &str, path: &[RootId]) -> Option<i32> {
        let sys = self.system();
        match sys.kind() {
            Kind::A => {
                let comps: Vec<i32> = path
                    .iter()
                    .map(|&x| {
                        let c = sys.coeffs(x);
                        if direction == "N" {
                            c.iter().position(|&v| v != 0).unwrap_or(0) as i32 + 1
                        } else {
                            c.iter().rposition(|&v| v != 0).unwrap_or(0) as i32 + 1
                        }
                    })
                    .collect();
                comps.iter().all(|&c| c == comps[0]).then_some(comps[0])
            }
            _ => {
                let n = sys.rank();
                (0..n).find_map(|a| {
                    let first = sys.epsilon(path[0]).expect("type D")[a];
                    (first != 0
                        && path.iter().all(|&x| sys.epsilon(x).expect("type D")[a] == first))
                    .then_some(first * (a as i32 + 1))
                })
            }
        }
    }

    fn maximal_paths(&self, path: Vec<RootId>, step: &dyn Fn(usize) -> Vec<usize>, out: &mut Vec<Vec<RootId>>) {
        let (i, p) = self.coord(*path.last().expect("nonempty"));
        let nexts: Vec<RootId> = step(i).into_iter().filter_map(|j| self.label(j, p + 1)).collect();
        if nexts.is_empty() {
            out.push(path);
            return;
        }
        for next in nexts {
            let mut extended = path.clone();
            extended.push(next);
            self.maximal_paths(extended, step, out);
        }
    }

    fn is_connected(&self, set: RootSet) -> bool {
        let Some(start) = set.iter().next() else {
            return true;
        };
        let mut seen = RootSet::singleton(start);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &w in self.successors(v).iter().chain(self.predecessors(v)) {
                if set.contains(w) && !seen.contains(w) {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        seen == set
    }
}

fn reverse_unimodal(seq: &[usize]) -> bool {
    let Some(l) = seq.iter().position(|&x| x == 1) else {
        return false;
    };
    seq[..=l].windows(2).all(|w| w[0] > w[1]) && seq[l..].windows(2).all(|w| w[0] < w[1])
}

fn kappa_unimodal(seq: &[i32], ta_prime: i32) -> bool {
    let abs: Vec<i32> = seq.iter().map(|x| x.abs()).collect();
    let Some(l) = abs.iter().position(|&x| x == ta_prime) else {
        return false;
    };
    if abs.get(l + 1) != Some(&ta_prime) {
        return false;
    }
    abs[..=l].windows(2).all(|w| w[0] < w[1]) && abs[l + 1..].windows(2).all(|w| w[0] > w[1])
}
