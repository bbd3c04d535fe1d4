//! Canonical store of hereditarily finite sets.
//!
//! Sets enter the store as raw presentations (ordered child lists, duplicates
//! allowed) and are interned to a canonical node: a duplicate-free child list
//! sorted by structural key. Interning collapses bisimilar presentations to a
//! single [`SetId`], so id equality coincides with extensional equality and
//! every stored child list is a monic presentation of its set.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};

/// Handle to a canonical set in a [`Store`].
///
/// Ids are only meaningful for the store that minted them. Two ids from the
/// same store are equal iff the sets they denote are bisimilar.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SetId(u32);

impl SetId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A raw `set(A,f)` value: a finite family of already-interned children.
/// Duplicates and arbitrary order are permitted; interning quotients them out.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Presentation {
    pub children: Vec<SetId>,
}

impl Presentation {
    pub fn new(children: Vec<SetId>) -> Self {
        Presentation { children }
    }
}

impl From<Vec<SetId>> for Presentation {
    fn from(children: Vec<SetId>) -> Self {
        Presentation { children }
    }
}

struct Node {
    children: Box<[SetId]>,
    rank: u32,
    key: u64,
}

/// Resource limits for the store. Powerset towers explode as 2^2^…, so both
/// the node count and the base size of enumerated families are capped with
/// deterministic errors.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    /// Maximum number of canonical nodes the store may hold.
    pub max_nodes: usize,
    /// Maximum cardinality of a set whose subsets (or functions) get
    /// enumerated; also bounds enumerated family sizes at `2^max_powerset_base`.
    pub max_powerset_base: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_nodes: 1 << 20,
            max_powerset_base: 16,
        }
    }
}

impl Limits {
    fn family_limit(&self) -> usize {
        1usize << self.max_powerset_base.min(60)
    }
}

/// Append-only interning store. Ids are never invalidated within a session.
///
/// Interning requires `&mut self`; everything on already-interned ids
/// (members, mem, rank, comparison, printing) is read-only.
pub struct Store {
    nodes: Vec<Node>,
    index: HashMap<Box<[SetId]>, SetId>,
    limits: Limits,
}

// Order-dependent 64-bit combine; deterministic across runs and platforms so
// canonical child order (and hence the brace text form) is stable.
fn mix(h: u64, x: u64) -> u64 {
    h ^ x
        .wrapping_add(0x9e37_79b9_7f4a_7c15)
        .wrapping_add(h << 6)
        .wrapping_add(h >> 2)
}

impl Store {
    pub fn new(limits: Limits) -> Self {
        let mut store = Store {
            nodes: Vec::new(),
            index: HashMap::new(),
            limits,
        };
        // The empty set is always id 0.
        let empty: Box<[SetId]> = Box::new([]);
        store.nodes.push(Node {
            children: empty.clone(),
            rank: 0,
            key: mix(0x243f_6a88_85a3_08d3, 0),
        });
        store.index.insert(empty, SetId(0));
        store
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    /// Number of canonical nodes interned so far.
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// All ids interned so far, in creation order.
    pub fn ids(&self) -> impl Iterator<Item = SetId> {
        (0..self.nodes.len() as u32).map(SetId)
    }

    fn node(&self, s: SetId) -> &Node {
        &self.nodes[s.index()]
    }

    /// The canonical, duplicate-free child list of `s`, in canonical order.
    pub fn members(&self, s: SetId) -> &[SetId] {
        &self.node(s).children
    }

    pub fn card(&self, s: SetId) -> usize {
        self.node(s).children.len()
    }

    /// 0 for the empty set, else 1 + the maximum child rank.
    pub fn rank(&self, s: SetId) -> u32 {
        self.node(s).rank
    }

    pub fn is_empty_set(&self, s: SetId) -> bool {
        s == SetId(0)
    }

    /// Total order on stored sets: rank, then structural key, then deep
    /// lexicographic comparison on key collision. Correctness never depends
    /// on key quality; the key only makes the common case cheap.
    pub fn set_cmp(&self, a: SetId, b: SetId) -> Ordering {
        if a == b {
            return Ordering::Equal;
        }
        let (na, nb) = (self.node(a), self.node(b));
        na.rank
            .cmp(&nb.rank)
            .then_with(|| na.key.cmp(&nb.key))
            .then_with(|| {
                for (&x, &y) in na.children.iter().zip(nb.children.iter()) {
                    match self.set_cmp(x, y) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                na.children.len().cmp(&nb.children.len())
            })
    }

    fn canonicalize(&self, mut kids: Vec<SetId>) -> Vec<SetId> {
        kids.sort_unstable_by(|&a, &b| self.set_cmp(a, b));
        kids.dedup();
        kids
    }

    // `kids` must already be sorted by `set_cmp` and duplicate-free.
    fn intern_canonical(&mut self, kids: Vec<SetId>) -> Result<SetId> {
        let kids: Box<[SetId]> = kids.into();
        if let Some(&id) = self.index.get(&kids) {
            return Ok(id);
        }
        if self.nodes.len() >= self.limits.max_nodes {
            return Err(Error::ResourceLimit(format!(
                "store is full ({} nodes); raise --max-nodes",
                self.limits.max_nodes
            )));
        }
        let rank = kids
            .iter()
            .map(|&k| self.rank(k) + 1)
            .max()
            .unwrap_or(0);
        let mut key = mix(0x243f_6a88_85a3_08d3, kids.len() as u64);
        for &k in kids.iter() {
            key = mix(key, self.node(k).key);
        }
        let id = SetId(self.nodes.len() as u32);
        self.nodes.push(Node {
            children: kids.clone(),
            rank,
            key,
        });
        self.index.insert(kids, id);
        Ok(id)
    }

    /// Intern the set with the given children (duplicates collapse).
    pub fn set_from(&mut self, kids: Vec<SetId>) -> Result<SetId> {
        let kids = self.canonicalize(kids);
        self.intern_canonical(kids)
    }

    /// Intern a presentation. Two presentations with mutually included
    /// children (`Eq_img`-related families) yield the same id.
    pub fn intern(&mut self, p: &Presentation) -> Result<SetId> {
        self.set_from(p.children.clone())
    }

    /// Literal two-sided mutual-inclusion recursion on presentations, without
    /// any use of interned identity. Serves as an oracle for the quotient:
    /// `intern(u) == intern(v)` iff `bisim_naive(u, v)`.
    pub fn bisim_naive(&self, u: &Presentation, v: &Presentation) -> bool {
        self.mutual_inclusion(&u.children, &v.children)
    }

    fn mutual_inclusion(&self, xs: &[SetId], ys: &[SetId]) -> bool {
        xs.iter()
            .all(|&a| ys.iter().any(|&b| self.ids_bisim(a, b)))
            && ys
                .iter()
                .all(|&b| xs.iter().any(|&a| self.ids_bisim(a, b)))
    }

    fn ids_bisim(&self, x: SetId, y: SetId) -> bool {
        self.mutual_inclusion(self.members(x), self.members(y))
    }

    /// Membership: true iff `x` occurs among the members of `s`.
    pub fn mem(&self, x: SetId, s: SetId) -> bool {
        self.members(s)
            .binary_search_by(|&c| self.set_cmp(c, x))
            .is_ok()
    }

    /// `members(a) ⊆ members(b)`, by a merge walk over the canonical orders.
    pub fn subset(&self, a: SetId, b: SetId) -> bool {
        let (xs, ys) = (self.members(a), self.members(b));
        let mut j = 0;
        'outer: for &x in xs {
            while j < ys.len() {
                match self.set_cmp(ys[j], x) {
                    Ordering::Less => j += 1,
                    Ordering::Equal => {
                        j += 1;
                        continue 'outer;
                    }
                    Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    /// True iff `a` and `b` have no common member.
    pub fn disjoint(&self, a: SetId, b: SetId) -> bool {
        let (xs, ys) = (self.members(a), self.members(b));
        let (mut i, mut j) = (0, 0);
        while i < xs.len() && j < ys.len() {
            match self.set_cmp(xs[i], ys[j]) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => return false,
            }
        }
        true
    }

    /// Every member of a member of `s` is a member of `s`.
    pub fn is_transitive(&self, s: SetId) -> bool {
        self.members(s)
            .iter()
            .all(|&m| self.subset(m, s))
    }

    // ---- constructors -------------------------------------------------

    pub fn empty(&self) -> SetId {
        SetId(0)
    }

    pub fn singleton(&mut self, x: SetId) -> Result<SetId> {
        self.set_from(vec![x])
    }

    /// Unordered pair {x, y}; collapses to a singleton when x = y.
    pub fn pair(&mut self, x: SetId, y: SetId) -> Result<SetId> {
        self.set_from(vec![x, y])
    }

    /// Kuratowski ordered pair ⟨x, y⟩ = {{x}, {x, y}}.
    pub fn kpair(&mut self, x: SetId, y: SetId) -> Result<SetId> {
        let sx = self.singleton(x)?;
        let pxy = self.pair(x, y)?;
        self.set_from(vec![sx, pxy])
    }

    /// Decompose a Kuratowski pair; None if `s` is not one.
    pub fn kpair_split(&self, s: SetId) -> Option<(SetId, SetId)> {
        match self.members(s) {
            [m] => match self.members(*m) {
                [x] => Some((*x, *x)),
                _ => None,
            },
            [m1, m2] => {
                let (sing, pr) = match (self.card(*m1), self.card(*m2)) {
                    (1, 2) => (*m1, *m2),
                    (2, 1) => (*m2, *m1),
                    _ => return None,
                };
                let x = self.members(sing)[0];
                let [u, v] = self.members(pr) else { return None };
                if *u == x {
                    Some((x, *v))
                } else if *v == x {
                    Some((x, *u))
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    pub fn union2(&mut self, x: SetId, y: SetId) -> Result<SetId> {
        let mut kids = self.members(x).to_vec();
        kids.extend_from_slice(self.members(y));
        self.set_from(kids)
    }

    /// ⋃x: the union of the members of `x`.
    pub fn bigunion(&mut self, x: SetId) -> Result<SetId> {
        let mut kids = Vec::new();
        for &m in self.members(x) {
            kids.extend_from_slice(self.members(m));
        }
        self.set_from(kids)
    }

    /// {y ∈ a | pred(y)}.
    pub fn separate(
        &mut self,
        a: SetId,
        mut pred: impl FnMut(&Self, SetId) -> bool,
    ) -> Result<SetId> {
        let ms = self.members(a).to_vec();
        let kept: Vec<SetId> = ms.into_iter().filter(|&m| pred(self, m)).collect();
        self.set_from(kept)
    }

    /// The image {r(z) | z ∈ a}; duplicates collapse.
    pub fn replace(
        &mut self,
        a: SetId,
        mut r: impl FnMut(&mut Self, SetId) -> Result<SetId>,
    ) -> Result<SetId> {
        let ms = self.members(a).to_vec();
        let mut out = Vec::with_capacity(ms.len());
        for m in ms {
            out.push(r(self, m)?);
        }
        self.set_from(out)
    }

    /// All subsets of `v`, enumerated from the monic presentation.
    pub fn powerset(&mut self, v: SetId) -> Result<SetId> {
        let kids = self.members(v).to_vec();
        let n = kids.len();
        if n > self.limits.max_powerset_base {
            return Err(Error::ResourceLimit(format!(
                "powerset base {} exceeds --max-powerset-base {}",
                n, self.limits.max_powerset_base
            )));
        }
        let mut subsets = Vec::with_capacity(1 << n);
        for mask in 0u64..(1u64 << n) {
            // A subsequence of a canonical list is already canonical.
            let sub: Vec<SetId> = kids
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &k)| k)
                .collect();
            subsets.push(self.intern_canonical(sub)?);
        }
        self.set_from(subsets)
    }

    /// Von Neumann numeral: 0 = ∅, n+1 = n ∪ {n}.
    pub fn numeral(&mut self, n: u32) -> Result<SetId> {
        let mut cur = self.empty();
        for _ in 0..n {
            let s = self.singleton(cur)?;
            cur = self.union2(cur, s)?;
        }
        Ok(cur)
    }

    /// {0̲, …, k−1̲}: the k-th finite approximation of ω.
    pub fn omega_upto(&mut self, k: u32) -> Result<SetId> {
        let mut kids = Vec::with_capacity(k as usize);
        let mut cur = self.empty();
        for i in 0..k {
            if i > 0 {
                let s = self.singleton(cur)?;
                cur = self.union2(cur, s)?;
            }
            kids.push(cur);
        }
        self.set_from(kids)
    }

    /// The set of all functions a → b, as graphs of Kuratowski pairs.
    pub fn exp_set(&mut self, a: SetId, b: SetId) -> Result<SetId> {
        let dom = self.members(a).to_vec();
        let cod = self.members(b).to_vec();
        if dom.is_empty() {
            let e = self.empty();
            return self.singleton(e);
        }
        if cod.is_empty() {
            return Ok(self.empty());
        }
        let total = cod
            .len()
            .checked_pow(dom.len() as u32)
            .filter(|&t| t <= self.limits.family_limit())
            .ok_or_else(|| {
                Error::ResourceLimit(format!(
                    "{}^{} functions exceed the family limit 2^{}",
                    cod.len(),
                    dom.len(),
                    self.limits.max_powerset_base
                ))
            })?;
        let mut graphs = Vec::with_capacity(total);
        let mut idx = vec![0usize; dom.len()];
        loop {
            let mut pairs = Vec::with_capacity(dom.len());
            for (i, &x) in dom.iter().enumerate() {
                pairs.push(self.kpair(x, cod[idx[i]])?);
            }
            graphs.push(self.set_from(pairs)?);
            // odometer
            let mut i = dom.len();
            loop {
                if i == 0 {
                    let g = self.set_from(graphs)?;
                    debug_assert_eq!(self.card(g), total);
                    return Ok(g);
                }
                i -= 1;
                idx[i] += 1;
                if idx[i] < cod.len() {
                    break;
                }
                idx[i] = 0;
            }
        }
    }

    /// True iff `g` is a set of Kuratowski pairs with pairwise distinct
    /// first components.
    pub fn is_function_graph(&self, g: SetId) -> bool {
        let mut seen = HashSet::new();
        self.members(g).iter().all(|&p| match self.kpair_split(p) {
            Some((x, _)) => seen.insert(x),
            None => false,
        })
    }

    /// Apply a function graph: the second component of the pair whose first
    /// component is `x`, if any.
    pub fn graph_apply(&self, g: SetId, x: SetId) -> Option<SetId> {
        self.members(g)
            .iter()
            .find_map(|&p| match self.kpair_split(p) {
                Some((u, v)) if u == x => Some(v),
                _ => None,
            })
    }

    /// First components of a graph, in canonical order.
    pub fn graph_domain(&self, g: SetId) -> Option<Vec<SetId>> {
        let mut dom = Vec::with_capacity(self.card(g));
        for &p in self.members(g) {
            dom.push(self.kpair_split(p)?.0);
        }
        dom.sort_unstable_by(|&a, &b| self.set_cmp(a, b));
        Some(dom)
    }

    /// Finite iteration of a step function: chain = {f(0), …, f(k−1)} and
    /// graph = {⟨n̲, f(n)⟩ | n < k}, with f(0) = c and f(n+1) = step(f(n)).
    pub fn iter_omega(
        &mut self,
        c: SetId,
        k: u32,
        mut step: impl FnMut(&mut Self, SetId) -> Result<SetId>,
    ) -> Result<IterOmega> {
        if k == 0 {
            return Err(Error::invalid("iter requires at least one step"));
        }
        let mut values = vec![c];
        for _ in 1..k {
            let prev = *values.last().unwrap();
            values.push(step(self, prev)?);
        }
        let chain = self.set_from(values.clone())?;
        let mut pairs = Vec::with_capacity(values.len());
        for (n, &f) in values.iter().enumerate() {
            let nn = self.numeral(n as u32)?;
            pairs.push(self.kpair(nn, f)?);
        }
        let graph = self.set_from(pairs)?;
        Ok(IterOmega { chain, graph })
    }

    /// Least fixpoint of x ↦ x ∪ ⋃x; finite sets reach it in ≤ rank(x) steps.
    pub fn transitive_closure(&mut self, x: SetId) -> Result<SetId> {
        let mut cur = x;
        loop {
            let u = self.bigunion(cur)?;
            let next = self.union2(cur, u)?;
            if next == cur {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// Rank-truncated approximation of H(x), the class of sets hereditarily
    /// an image of a set in `x`: saturate with images of functions b → H for
    /// b ∈ x, keeping only images of rank ≤ `rank_bound`.
    pub fn h_bounded(&mut self, x: SetId, rank_bound: u32) -> Result<SetId> {
        let bases = self.members(x).to_vec();
        let mut h: Vec<SetId> = Vec::new();
        let mut seen: HashSet<SetId> = HashSet::new();
        loop {
            let mut added = false;
            for &b in &bases {
                let dom = self.members(b).to_vec();
                if dom.is_empty() {
                    // the empty function from b = ∅ has image ∅
                    let e = self.empty();
                    if seen.insert(e) {
                        h.push(e);
                        added = true;
                    }
                    continue;
                }
                if h.is_empty() {
                    continue;
                }
                h.len()
                    .checked_pow(dom.len() as u32)
                    .filter(|&t| t <= self.limits.family_limit())
                    .ok_or_else(|| {
                        Error::ResourceLimit(format!(
                            "h_bounded saturation: {}^{} images exceed the family limit",
                            h.len(),
                            dom.len()
                        ))
                    })?;
                let mut idx = vec![0usize; dom.len()];
                'functions: loop {
                    let image: Vec<SetId> = idx.iter().map(|&i| h[i]).collect();
                    let im = self.set_from(image)?;
                    if self.rank(im) <= rank_bound && seen.insert(im) {
                        h.push(im);
                        added = true;
                    }
                    let mut i = dom.len();
                    loop {
                        if i == 0 {
                            break 'functions;
                        }
                        i -= 1;
                        idx[i] += 1;
                        if idx[i] < h.len() {
                            break;
                        }
                        idx[i] = 0;
                    }
                }
            }
            if !added {
                break;
            }
        }
        self.set_from(h)
    }

    // ---- text form -----------------------------------------------------

    /// Canonical nested-brace form, children in canonical order. Bit-exact
    /// for golden tests.
    pub fn to_braces(&self, s: SetId) -> String {
        let mut out = String::new();
        self.write_braces(s, &mut out);
        out
    }

    fn write_braces(&self, s: SetId, out: &mut String) {
        out.push('{');
        for (i, &m) in self.members(s).iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            self.write_braces(m, out);
        }
        out.push('}');
    }
}

/// Result of [`Store::iter_omega`].
#[derive(Clone, Copy, Debug)]
pub struct IterOmega {
    pub chain: SetId,
    pub graph: SetId,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn store() -> Store {
        Store::new(Limits::default())
    }

    #[test]
    fn duplicates_collapse() {
        let mut st = store();
        let e = st.empty();
        let a = st.intern(&Presentation::new(vec![e, e])).unwrap();
        let b = st.intern(&Presentation::new(vec![e])).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn order_is_irrelevant() {
        let mut st = store();
        let e = st.empty();
        let se = st.singleton(e).unwrap();
        let a = st.intern(&Presentation::new(vec![se, e])).unwrap();
        let b = st.intern(&Presentation::new(vec![e, se])).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn members_round_trip() {
        let mut st = store();
        let e = st.empty();
        let se = st.singleton(e).unwrap();
        let s = st.set_from(vec![e, se]).unwrap();
        assert_eq!(st.members(e), &[]);
        assert_eq!(st.members(s), &[e, se]);
        let back = st.set_from(st.members(s).to_vec()).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn bisim_naive_examples() {
        let mut st = store();
        let e = st.empty();
        let se = st.singleton(e).unwrap();
        assert!(st.bisim_naive(
            &Presentation::new(vec![e, e]),
            &Presentation::new(vec![e])
        ));
        // {∅} vs {{∅}}: ranks differ
        assert!(!st.bisim_naive(
            &Presentation::new(vec![e]),
            &Presentation::new(vec![se])
        ));
    }

    #[test]
    fn mem_on_numerals_is_less_than() {
        let mut st = store();
        for m in 0..=6u32 {
            for n in 0..=6u32 {
                let nm = st.numeral(m).unwrap();
                let nn = st.numeral(n).unwrap();
                assert_eq!(st.mem(nm, nn), m < n, "mem({m}, {n})");
            }
        }
    }

    #[test]
    fn pair_collapses_to_singleton() {
        let mut st = store();
        let e = st.empty();
        let p = st.pair(e, e).unwrap();
        let s = st.singleton(e).unwrap();
        assert_eq!(p, s);
    }

    #[test]
    fn kpair_is_ordered() {
        let mut st = store();
        let e = st.empty();
        let se = st.singleton(e).unwrap();
        let k1 = st.kpair(e, se).unwrap();
        let k2 = st.kpair(se, e).unwrap();
        assert_ne!(k1, k2);
        assert_eq!(st.kpair_split(k1), Some((e, se)));
        assert_eq!(st.kpair_split(k2), Some((se, e)));
    }

    #[test]
    fn kpair_injective_on_small_fragment() {
        // all sets of rank < 3
        let mut st = store();
        let e = st.empty();
        let v1 = vec![e];
        let mut v2 = v1.clone();
        v2.push(st.singleton(e).unwrap());
        let mut v3 = Vec::new();
        for mask in 0u32..4 {
            let kids: Vec<SetId> = v2
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &k)| k)
                .collect();
            v3.push(st.set_from(kids).unwrap());
        }
        for &x in &v3 {
            for &y in &v3 {
                for &u in &v3 {
                    for &v in &v3 {
                        let a = st.kpair(x, y).unwrap();
                        let b = st.kpair(u, v).unwrap();
                        assert_eq!(a == b, x == u && y == v);
                    }
                }
            }
        }
    }

    #[test]
    fn union_examples() {
        let mut st = store();
        let e = st.empty();
        assert_eq!(st.bigunion(e).unwrap(), e);
        // ⋃{{∅},{{∅}}} = {∅,{∅}}
        let se = st.singleton(e).unwrap();
        let sse = st.singleton(se).unwrap();
        let outer = st.set_from(vec![se, sse]).unwrap();
        let got = st.bigunion(outer).unwrap();
        let want = st.set_from(vec![e, se]).unwrap();
        assert_eq!(got, want);
        // union2 over numerals: numerals are ⊆-increasing
        let n1 = st.numeral(1).unwrap();
        let n2 = st.numeral(2).unwrap();
        assert_eq!(st.union2(n1, n2).unwrap(), n2);
        // union2 agrees with ⋃{x,y}
        let p = st.pair(n1, n2).unwrap();
        let via_big = st.bigunion(p).unwrap();
        assert_eq!(via_big, n2);
    }

    #[test]
    fn separate_examples() {
        let mut st = store();
        let n4 = st.numeral(4).unwrap();
        assert_eq!(st.separate(n4, |_, _| true).unwrap(), n4);
        assert_eq!(st.separate(n4, |_, _| false).unwrap(), st.empty());
        // even numerals below 4: {0̲, 2̲}
        let evens: Vec<SetId> = (0..4)
            .filter(|n| n % 2 == 0)
            .map(|n| st.numeral(n).unwrap())
            .collect();
        let want = st.set_from(evens).unwrap();
        let got = st
            .separate(n4, |s, m| s.card(m) % 2 == 0)
            .unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn replace_examples() {
        let mut st = store();
        let n2 = st.numeral(2).unwrap();
        assert_eq!(st.replace(n2, |_, m| Ok(m)).unwrap(), n2);
        let e = st.empty();
        let collapsed = st.replace(n2, |st, _| Ok(st.empty())).unwrap();
        assert_eq!(collapsed, st.singleton(e).unwrap());
        // replace with singleton over 2̲ = {∅, {∅}} gives {{∅}, {{∅}}}
        let got = st.replace(n2, |st, m| st.singleton(m)).unwrap();
        let se = st.singleton(e).unwrap();
        let sse = st.singleton(se).unwrap();
        let want = st.set_from(vec![se, sse]).unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn powerset_examples() {
        let mut st = store();
        let e = st.empty();
        let pe = st.powerset(e).unwrap();
        assert_eq!(pe, st.singleton(e).unwrap());
        let se = st.singleton(e).unwrap();
        let pse = st.powerset(se).unwrap();
        let want = st.set_from(vec![e, se]).unwrap();
        assert_eq!(pse, want);
        let n3 = st.numeral(3).unwrap();
        let p3 = st.powerset(n3).unwrap();
        assert_eq!(st.card(p3), 8);
    }

    #[test]
    fn powerset_base_limit() {
        let mut st = Store::new(Limits {
            max_nodes: 1 << 20,
            max_powerset_base: 2,
        });
        let n3 = st.numeral(3).unwrap();
        assert!(matches!(
            st.powerset(n3),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn numerals_and_omega() {
        let mut st = store();
        let e = st.empty();
        assert_eq!(st.numeral(0).unwrap(), e);
        assert_eq!(st.numeral(1).unwrap(), st.singleton(e).unwrap());
        let n3 = st.numeral(3).unwrap();
        let kids: Vec<SetId> = (0..3).map(|n| st.numeral(n).unwrap()).collect();
        assert_eq!(st.members(n3), &kids[..]);
        assert!(st.is_transitive(n3));
        assert_eq!(st.omega_upto(0).unwrap(), e);
        let o3 = st.omega_upto(3).unwrap();
        assert_eq!(o3, n3);
        for n in 0..=6 {
            let nn = st.numeral(n).unwrap();
            assert_eq!(st.rank(nn), n);
        }
    }

    #[test]
    fn exp_set_examples() {
        let mut st = store();
        let e = st.empty();
        let n2 = st.numeral(2).unwrap();
        let n3 = st.numeral(3).unwrap();
        let exp_empty = st.exp_set(e, n3).unwrap();
        assert_eq!(exp_empty, st.singleton(e).unwrap());
        assert_eq!(st.exp_set(n2, e).unwrap(), e);
        let exp = st.exp_set(n2, n3).unwrap();
        assert_eq!(st.card(exp), 9);
        for &g in st.members(exp).to_vec().iter() {
            assert!(st.is_function_graph(g));
            let dom = st.graph_domain(g).unwrap();
            assert_eq!(dom, st.members(n2).to_vec());
        }
    }

    #[test]
    fn iter_omega_examples() {
        let mut st = store();
        let e = st.empty();
        // constant iteration
        let out = st.iter_omega(e, 3, |_, x| Ok(x)).unwrap();
        assert_eq!(out.chain, st.singleton(e).unwrap());
        assert_eq!(st.card(out.graph), 3);
        // successor reproduces the numerals
        let out = st
            .iter_omega(e, 4, |st, x| {
                let s = st.singleton(x)?;
                st.union2(x, s)
            })
            .unwrap();
        let n4 = st.numeral(4).unwrap();
        assert_eq!(st.members(out.chain), st.members(n4));
        for n in 0..4u32 {
            let nn = st.numeral(n).unwrap();
            let f = st.graph_apply(out.graph, nn).unwrap();
            assert_eq!(f, nn);
        }
        assert!(st.is_function_graph(out.graph));
        assert!(st.iter_omega(e, 0, |_, x| Ok(x)).is_err());
    }

    #[test]
    fn transitive_closure_examples() {
        let mut st = store();
        let e = st.empty();
        assert_eq!(st.transitive_closure(e).unwrap(), e);
        let se = st.singleton(e).unwrap();
        let sse = st.singleton(se).unwrap();
        let tc = st.transitive_closure(sse).unwrap();
        let want = st.set_from(vec![se, e]).unwrap();
        assert_eq!(tc, want);
        for n in 0..5 {
            let nn = st.numeral(n).unwrap();
            assert_eq!(st.transitive_closure(nn).unwrap(), nn);
        }
    }

    #[test]
    fn h_bounded_examples() {
        let mut st = store();
        let e = st.empty();
        assert_eq!(st.h_bounded(e, 3).unwrap(), e);
        // {∅} supplies only the empty function, whose image is ∅
        let se = st.singleton(e).unwrap();
        assert_eq!(st.h_bounded(se, 2).unwrap(), se);
        // singleton chains out of 2̲ = {∅, {∅}} up to the rank bound
        let n2 = st.numeral(2).unwrap();
        let h = st.h_bounded(n2, 2).unwrap();
        let sse = st.singleton(se).unwrap();
        let want = st.set_from(vec![e, se, sse]).unwrap();
        assert_eq!(h, want);
    }

    #[test]
    fn rank_examples() {
        let mut st = store();
        assert_eq!(st.rank(st.empty()), 0);
        let n3 = st.numeral(3).unwrap();
        let p = st.powerset(n3).unwrap();
        assert_eq!(st.rank(p), st.rank(n3) + 1);
    }

    #[test]
    fn braces_are_canonical() {
        let mut st = store();
        let n3 = st.numeral(3).unwrap();
        assert_eq!(st.to_braces(n3), "{{},{{}},{{},{{}}}}");
        let e = st.empty();
        assert_eq!(st.to_braces(e), "{}");
    }

    #[test]
    fn store_capacity_is_enforced() {
        let mut st = Store::new(Limits {
            max_nodes: 3,
            max_powerset_base: 16,
        });
        let e = st.empty();
        let a = st.singleton(e).unwrap();
        let _b = st.singleton(a).unwrap();
        let err = st.numeral(5);
        assert!(matches!(err, Err(Error::ResourceLimit(_))));
    }
}
