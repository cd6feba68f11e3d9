//! Independence-oracle matroids and the matroid partition (union) algorithm.
//!
//! Every packing and covering routine in this crate reduces to [`matroid_union`]:
//! elements are inserted one at a time along shortest augmenting paths of the
//! exchange digraph. At termination two minimizers of the matroid-sum rank formula are
//! read off the exchange digraph: the elements reachable from unlabeled ones, and the
//! elements that cannot reach a free slot
//!
//! ```text
//! r_Σ(S) = min_{X ⊆ S} |S - X| + Σ_i r_i(X).
//! ```

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId, UnionFind};

/// A matroid given by an independence oracle over the ground set `0..ground_size()`.
pub trait Matroid {
    fn ground_size(&self) -> usize;

    /// `set` holds distinct elements in any order.
    fn is_independent(&self, set: &[usize]) -> bool;

    fn rank(&self, set: &[usize]) -> usize {
        let mut basis = Vec::with_capacity(set.len());
        for &e in set {
            basis.push(e);
            if !self.is_independent(&basis) {
                basis.pop();
            }
        }
        basis.len()
    }

    fn full_rank(&self) -> usize {
        self.rank(&(0..self.ground_size()).collect::<Vec<_>>())
    }
}

impl<M: Matroid + ?Sized> Matroid for &M {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }
    fn is_independent(&self, set: &[usize]) -> bool {
        (**self).is_independent(set)
    }
    fn rank(&self, set: &[usize]) -> usize {
        (**self).rank(set)
    }
}

impl<M: Matroid + ?Sized> Matroid for Box<M> {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }
    fn is_independent(&self, set: &[usize]) -> bool {
        (**self).is_independent(set)
    }
    fn rank(&self, set: &[usize]) -> usize {
        (**self).rank(set)
    }
}

/// Every subset is independent.
#[derive(Clone, Debug)]
pub struct FreeMatroid(pub usize);

impl Matroid for FreeMatroid {
    fn ground_size(&self) -> usize {
        self.0
    }
    fn is_independent(&self, _set: &[usize]) -> bool {
        true
    }
    fn rank(&self, set: &[usize]) -> usize {
        set.len()
    }
}

/// U_{r,n}: sets of size at most `rank`.
#[derive(Clone, Debug)]
pub struct UniformMatroid {
    pub size: usize,
    pub rank: usize,
}

impl Matroid for UniformMatroid {
    fn ground_size(&self) -> usize {
        self.size
    }
    fn is_independent(&self, set: &[usize]) -> bool {
        set.len() <= self.rank
    }
    fn rank(&self, set: &[usize]) -> usize {
        set.len().min(self.rank)
    }
}

/// Cycle matroid of a multigraph: independent sets are forests.
#[derive(Clone, Debug)]
pub struct GraphicMatroid {
    n: usize,
    edges: Vec<(NodeId, NodeId)>,
}

impl GraphicMatroid {
    pub fn new(g: &Graph) -> Self {
        Self {
            n: g.node_count(),
            edges: g.edges().to_vec(),
        }
    }

    /// Graphic matroid of an edge list that may contain loops (loops are dependent).
    pub fn from_edge_list(n: usize, edges: Vec<(NodeId, NodeId)>) -> Self {
        Self { n, edges }
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge(&self, e: usize) -> (NodeId, NodeId) {
        self.edges[e]
    }
}

impl Matroid for GraphicMatroid {
    fn ground_size(&self) -> usize {
        self.edges.len()
    }

    fn is_independent(&self, set: &[usize]) -> bool {
        if set.len() >= self.n.max(1) {
            return false;
        }
        let mut uf = UnionFind::new(self.n);
        set.iter().all(|&e| {
            let (u, v) = self.edges[e];
            uf.union(u, v)
        })
    }

    fn rank(&self, set: &[usize]) -> usize {
        let mut uf = UnionFind::new(self.n);
        set.iter()
            .filter(|&&e| {
                let (u, v) = self.edges[e];
                uf.union(u, v)
            })
            .count()
    }
}

/// Partition matroid: at most `caps[c]` elements from class `c`.
#[derive(Clone, Debug)]
pub struct PartitionMatroid {
    class_of: Vec<usize>,
    caps: Vec<usize>,
}

impl PartitionMatroid {
    pub fn new(class_of: Vec<usize>, caps: Vec<usize>) -> Result<Self> {
        if let Some(&c) = class_of.iter().find(|&&c| c >= caps.len()) {
            return Err(Error::InvalidInput(format!(
                "class {c} has no capacity (only {} given)",
                caps.len()
            )));
        }
        Ok(Self { class_of, caps })
    }
}

impl Matroid for PartitionMatroid {
    fn ground_size(&self) -> usize {
        self.class_of.len()
    }

    fn is_independent(&self, set: &[usize]) -> bool {
        let mut used = vec![0usize; self.caps.len()];
        set.iter().all(|&e| {
            let c = self.class_of[e];
            used[c] += 1;
            used[c] <= self.caps[c]
        })
    }
}

/// Truncation to rank at most `cap`.
#[derive(Clone, Debug)]
pub struct Truncation<M> {
    pub inner: M,
    pub cap: usize,
}

impl<M: Matroid> Matroid for Truncation<M> {
    fn ground_size(&self) -> usize {
        self.inner.ground_size()
    }
    fn is_independent(&self, set: &[usize]) -> bool {
        set.len() <= self.cap && self.inner.is_independent(set)
    }
    fn rank(&self, set: &[usize]) -> usize {
        self.inner.rank(set).min(self.cap)
    }
}

/// Restriction to the elements flagged in `allowed`; all other elements become loops,
/// so the ground set keeps its numbering.
#[derive(Clone, Debug)]
pub struct Restriction<M> {
    pub inner: M,
    pub allowed: Vec<bool>,
}

impl<M: Matroid> Restriction<M> {
    pub fn new(inner: M, elements: &[usize]) -> Self {
        let mut allowed = vec![false; inner.ground_size()];
        for &e in elements {
            allowed[e] = true;
        }
        Self { inner, allowed }
    }

    /// Deletion of `elements`.
    pub fn deleting(inner: M, elements: &[usize]) -> Self {
        let mut allowed = vec![true; inner.ground_size()];
        for &e in elements {
            allowed[e] = false;
        }
        Self { inner, allowed }
    }
}

impl<M: Matroid> Matroid for Restriction<M> {
    fn ground_size(&self) -> usize {
        self.inner.ground_size()
    }
    fn is_independent(&self, set: &[usize]) -> bool {
        set.iter().all(|&e| self.allowed[e]) && self.inner.is_independent(set)
    }
    fn rank(&self, set: &[usize]) -> usize {
        let kept: Vec<usize> = set.iter().copied().filter(|&e| self.allowed[e]).collect();
        self.inner.rank(&kept)
    }
}

/// Minor `M / contracted \ deleted` on the original numbering; contracted and deleted
/// elements behave as loops.
#[derive(Clone, Debug)]
pub struct Minor<M> {
    inner: M,
    contracted: Vec<usize>,
    removed: Vec<bool>,
    contracted_rank: usize,
}

impl<M: Matroid> Minor<M> {
    pub fn new(inner: M, contracted: &[usize], deleted: &[usize]) -> Self {
        let mut removed = vec![false; inner.ground_size()];
        for &e in contracted.iter().chain(deleted) {
            removed[e] = true;
        }
        let contracted_rank = inner.rank(contracted);
        Self {
            inner,
            contracted: contracted.to_vec(),
            removed,
            contracted_rank,
        }
    }

    pub fn contraction(inner: M, contracted: &[usize]) -> Self {
        Self::new(inner, contracted, &[])
    }

    pub fn inner(&self) -> &M {
        &self.inner
    }

    pub fn contracted(&self) -> &[usize] {
        &self.contracted
    }

    pub fn is_removed(&self, e: usize) -> bool {
        self.removed[e]
    }
}

impl<M: Matroid> Matroid for Minor<M> {
    fn ground_size(&self) -> usize {
        self.inner.ground_size()
    }

    fn is_independent(&self, set: &[usize]) -> bool {
        if set.iter().any(|&e| self.removed[e]) {
            return false;
        }
        if self.contracted.is_empty() {
            return self.inner.is_independent(set);
        }
        let mut all = self.contracted.clone();
        all.extend_from_slice(set);
        self.inner.rank(&all) == self.contracted_rank + set.len()
    }

    fn rank(&self, set: &[usize]) -> usize {
        let mut all = self.contracted.clone();
        all.extend(set.iter().copied().filter(|&e| !self.removed[e]));
        self.inner.rank(&all) - self.contracted_rank
    }
}

/// Dual matroid: `I` is independent iff `S - I` spans.
#[derive(Clone, Debug)]
pub struct Dual<M> {
    inner: M,
    full_rank: usize,
}

impl<M: Matroid> Dual<M> {
    pub fn new(inner: M) -> Self {
        let full_rank = inner.full_rank();
        Self { inner, full_rank }
    }
}

impl<M: Matroid> Matroid for Dual<M> {
    fn ground_size(&self) -> usize {
        self.inner.ground_size()
    }

    fn is_independent(&self, set: &[usize]) -> bool {
        let n = self.inner.ground_size();
        let mut inside = vec![false; n];
        for &e in set {
            inside[e] = true;
        }
        let rest: Vec<usize> = (0..n).filter(|&e| !inside[e]).collect();
        self.inner.rank(&rest) == self.full_rank
    }

    fn rank(&self, set: &[usize]) -> usize {
        let n = self.inner.ground_size();
        let mut inside = vec![false; n];
        for &e in set {
            inside[e] = true;
        }
        let rest: Vec<usize> = (0..n).filter(|&e| !inside[e]).collect();
        set.len() + self.inner.rank(&rest) - self.full_rank
    }
}

/// `k` references to the same matroid, the usual input of k-fold packing.
pub fn copies<M: Matroid>(m: &M, k: usize) -> Vec<&dyn Matroid> {
    (0..k).map(|_| m as &dyn Matroid).collect()
}

/// Assignment of each ground-set element to one of the parts `0..k` or to none.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Labeling {
    part: Vec<Option<usize>>,
    k: usize,
}

impl Labeling {
    pub fn unlabeled(ground_size: usize, k: usize) -> Self {
        Self {
            part: vec![None; ground_size],
            k,
        }
    }

    pub fn from_classes(ground_size: usize, classes: &[Vec<usize>]) -> Self {
        let mut l = Self::unlabeled(ground_size, classes.len());
        for (i, class) in classes.iter().enumerate() {
            for &e in class {
                l.part[e] = Some(i);
            }
        }
        l
    }

    pub fn part(&self, e: usize) -> Option<usize> {
        self.part[e]
    }

    pub fn parts(&self) -> &[Option<usize>] {
        &self.part
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn labeled_count(&self) -> usize {
        self.part.iter().filter(|p| p.is_some()).count()
    }

    /// Members of every part, ascending.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.k];
        for (e, p) in self.part.iter().enumerate() {
            if let Some(i) = p {
                classes[*i].push(e);
            }
        }
        classes
    }

    pub fn unlabeled_elements(&self) -> Vec<usize> {
        (0..self.part.len())
            .filter(|&e| self.part[e].is_none())
            .collect()
    }

    /// Re-checks every part against the raw oracles.
    pub fn is_valid_for(&self, matroids: &[&dyn Matroid]) -> bool {
        matroids.len() == self.k
            && self
                .classes()
                .iter()
                .zip(matroids)
                .all(|(class, m)| m.is_independent(class))
    }
}

/// Result of a matroid union run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnionOutcome {
    pub labeling: Labeling,
    /// Number of labeled elements.
    pub rank: usize,
    /// Smallest minimizer X of |S - X| + Σ r_i(X) over the elements considered: the
    /// elements reachable from unlabeled ones in the exchange digraph.
    pub certificate: Vec<usize>,
    /// Largest minimizer: the elements with no exchange path to a free slot.
    pub closed_certificate: Vec<usize>,
}

struct UnionRun<'a> {
    matroids: &'a [&'a dyn Matroid],
    classes: Vec<Vec<usize>>,
    part: Vec<Option<usize>>,
}

impl<'a> UnionRun<'a> {
    fn with_replaced(class: &[usize], out: usize, inc: usize) -> Vec<usize> {
        let mut s: Vec<usize> = class.iter().copied().filter(|&y| y != out).collect();
        s.push(inc);
        s
    }

    fn with_added(class: &[usize], inc: usize) -> Vec<usize> {
        let mut s = class.to_vec();
        s.push(inc);
        s
    }

    fn can_insert(&self, i: usize, u: usize) -> bool {
        self.part[u] != Some(i)
            && self.matroids[i].is_independent(&Self::with_added(&self.classes[i], u))
    }

    fn can_exchange(&self, i: usize, u: usize, y: usize) -> bool {
        self.matroids[i].is_independent(&Self::with_replaced(&self.classes[i], y, u))
    }

    /// One BFS over the exchange digraph from the unlabeled element `x`.
    fn insert(&mut self, x: usize) -> Result<bool> {
        let ground = self.part.len();
        // pred[y] = element that displaces y out of its class
        let mut pred: Vec<usize> = vec![usize::MAX; ground];
        let mut visited = vec![false; ground];
        visited[x] = true;
        let mut queue = VecDeque::from([x]);
        while let Some(u) = queue.pop_front() {
            for i in 0..self.classes.len() {
                if self.part[u] == Some(i) {
                    continue;
                }
                if self.can_insert(i, u) {
                    self.apply_path(x, u, i, &pred)?;
                    return Ok(true);
                }
            }
            for i in 0..self.classes.len() {
                if self.part[u] == Some(i) {
                    continue;
                }
                for idx in 0..self.classes[i].len() {
                    let y = self.classes[i][idx];
                    if !visited[y] && self.can_exchange(i, u, y) {
                        visited[y] = true;
                        pred[y] = u;
                        queue.push_back(y);
                    }
                }
            }
        }
        Ok(false)
    }

    fn apply_path(&mut self, x: usize, last: usize, free: usize, pred: &[usize]) -> Result<()> {
        // walk back: last goes into `free`, every displaced y is replaced by pred[y]
        let mut moves = vec![(last, free)];
        let mut y = last;
        while y != x {
            let p = pred[y];
            let class = self.part[y].expect("displaced element is labeled");
            moves.push((p, class));
            y = p;
        }
        let touched: Vec<usize> = moves.iter().map(|&(_, c)| c).collect();
        for &(e, _) in &moves {
            if let Some(c) = self.part[e] {
                self.classes[c].retain(|&z| z != e);
            }
        }
        for &(e, c) in &moves {
            self.classes[c].push(e);
            self.part[e] = Some(c);
        }
        for c in touched {
            self.classes[c].sort_unstable();
            if !self.matroids[c].is_independent(&self.classes[c]) {
                return Err(Error::NotAMatroid(format!(
                    "augmentation left class {c} dependent"
                )));
            }
        }
        Ok(())
    }

    /// Elements reachable from the unlabeled members of `elements`.
    fn reachable_from_unlabeled(&self, elements: &[usize]) -> Vec<usize> {
        let ground = self.part.len();
        let mut reached = vec![false; ground];
        let mut queue: VecDeque<usize> = VecDeque::new();
        for &u in elements {
            if self.part[u].is_none() {
                reached[u] = true;
                queue.push_back(u);
            }
        }
        while let Some(u) = queue.pop_front() {
            for i in 0..self.classes.len() {
                if self.part[u] == Some(i) {
                    continue;
                }
                for &y in &self.classes[i] {
                    if !reached[y] && self.can_exchange(i, u, y) {
                        reached[y] = true;
                        queue.push_back(y);
                    }
                }
            }
        }
        let mut x: Vec<usize> = elements.iter().copied().filter(|&u| reached[u]).collect();
        x.sort_unstable();
        x
    }

    /// Elements of `elements` with no exchange path to a free slot.
    fn closed_certificate(&self, elements: &[usize]) -> Vec<usize> {
        let ground = self.part.len();
        let mut reaches = vec![false; ground];
        // reverse exchange arcs: y -> u when u can displace y
        let mut rev: Vec<Vec<usize>> = vec![Vec::new(); ground];
        for &u in elements {
            for i in 0..self.classes.len() {
                if self.part[u] == Some(i) {
                    continue;
                }
                if self.can_insert(i, u) {
                    reaches[u] = true;
                    continue;
                }
                for &y in &self.classes[i] {
                    if self.can_exchange(i, u, y) {
                        rev[y].push(u);
                    }
                }
            }
        }
        let mut queue: VecDeque<usize> = elements.iter().copied().filter(|&u| reaches[u]).collect();
        while let Some(y) = queue.pop_front() {
            for &u in &rev[y] {
                if !reaches[u] {
                    reaches[u] = true;
                    queue.push_back(u);
                }
            }
        }
        let mut x: Vec<usize> = elements.iter().copied().filter(|&u| !reaches[u]).collect();
        x.sort_unstable();
        x
    }
}

fn check_shared_ground(matroids: &[&dyn Matroid]) -> Result<usize> {
    let ground = matroids.first().map_or(0, |m| m.ground_size());
    if matroids.iter().any(|m| m.ground_size() != ground) {
        return Err(Error::InvalidInput(
            "matroids do not share a ground set".into(),
        ));
    }
    Ok(ground)
}

/// Matroid union over the listed elements, inserted in the given order.
///
/// Elements not listed stay unlabeled and are ignored by the certificate. Because the
/// union is itself a matroid, inserting in order of decreasing weight yields a
/// maximum-weight union-independent set among the listed elements.
pub fn matroid_union(matroids: &[&dyn Matroid], elements: &[usize]) -> Result<UnionOutcome> {
    let ground = check_shared_ground(matroids)?;
    let mut run = UnionRun {
        matroids,
        classes: vec![Vec::new(); matroids.len()],
        part: vec![None; ground],
    };
    let mut seen = vec![false; ground];
    for &x in elements {
        if x >= ground || seen[x] {
            return Err(Error::InvalidInput(format!(
                "element {x} repeated or outside the ground set"
            )));
        }
        seen[x] = true;
        if !matroids.is_empty() {
            run.insert(x)?;
        }
    }
    let certificate = run.reachable_from_unlabeled(elements);
    let closed_certificate = run.closed_certificate(elements);
    let labeling = Labeling {
        part: run.part,
        k: matroids.len(),
    };
    let rank = labeling.labeled_count();
    for x in [&certificate, &closed_certificate] {
        let outside = elements.len() - x.len();
        let inside: usize = matroids.iter().map(|m| m.rank(x)).sum();
        if outside + inside != rank {
            return Err(Error::NotAMatroid(format!(
                "rank certificate gives {} but {} elements are labeled",
                outside + inside,
                rank
            )));
        }
    }
    Ok(UnionOutcome {
        labeling,
        rank,
        certificate,
        closed_certificate,
    })
}

/// Maximum union over the whole ground set. With `weights`, elements of positive
/// weight are inserted heaviest first (ties by lowest id), giving a maximum-weight
/// union-independent set; the certificate then refers to those elements only.
pub fn matroid_union_max(
    matroids: &[&dyn Matroid],
    weights: Option<&[i64]>,
) -> Result<UnionOutcome> {
    let ground = check_shared_ground(matroids)?;
    let order: Vec<usize> = match weights {
        None => (0..ground).collect(),
        Some(w) => {
            if w.len() != ground {
                return Err(Error::InvalidInput(format!(
                    "{} weights for {} elements",
                    w.len(),
                    ground
                )));
            }
            let mut order: Vec<usize> = (0..ground).filter(|&e| w[e] > 0).collect();
            order.sort_by_key(|&e| (std::cmp::Reverse(w[e]), e));
            order
        }
    };
    matroid_union(matroids, &order)
}

/// Outcome of [`pack_bases`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BasePacking {
    /// Part `i` is a basis of matroid `i`.
    Packed(Labeling),
    /// A set X with |X| < Σ_i t_i(X), where t_i is the co-rank of matroid `i`.
    Deficient {
        set: Vec<usize>,
        size: usize,
        required: usize,
    },
}

/// Disjoint bases B_i of M_i, or a co-rank violation.
pub fn pack_bases(matroids: &[&dyn Matroid]) -> Result<BasePacking> {
    let ground = check_shared_ground(matroids)?;
    let all: Vec<usize> = (0..ground).collect();
    let outcome = matroid_union(matroids, &all)?;
    let target: usize = matroids.iter().map(|m| m.full_rank()).sum();
    if outcome.rank == target {
        return Ok(BasePacking::Packed(outcome.labeling));
    }
    let mut inside = vec![false; ground];
    for &e in &outcome.certificate {
        inside[e] = true;
    }
    let set: Vec<usize> = (0..ground).filter(|&e| !inside[e]).collect();
    let required = matroids.iter().map(|m| corank(*m, &set)).sum();
    Ok(BasePacking::Deficient {
        size: set.len(),
        set,
        required,
    })
}

/// Outcome of [`cover_by_independent`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IndependentCover {
    Covered(Labeling),
    /// A set X with |X| > Σ_i r_i(X).
    Violated {
        set: Vec<usize>,
        size: usize,
        capacity: usize,
    },
}

/// Partition of the whole ground set into sets I_i independent in M_i, or a violation.
pub fn cover_by_independent(matroids: &[&dyn Matroid]) -> Result<IndependentCover> {
    let ground = check_shared_ground(matroids)?;
    let all: Vec<usize> = (0..ground).collect();
    let outcome = matroid_union(matroids, &all)?;
    if outcome.rank == ground {
        return Ok(IndependentCover::Covered(outcome.labeling));
    }
    let set = outcome.certificate;
    let capacity = matroids.iter().map(|m| m.rank(&set)).sum();
    Ok(IndependentCover::Violated {
        size: set.len(),
        set,
        capacity,
    })
}

/// t(X) = min |X ∩ B| over bases B, computed as r(S) - r(S - X).
pub fn corank<M: Matroid + ?Sized>(m: &M, set: &[usize]) -> usize {
    let n = m.ground_size();
    let mut inside = vec![false; n];
    for &e in set {
        inside[e] = true;
    }
    let rest: Vec<usize> = (0..n).filter(|&e| !inside[e]).collect();
    let all: Vec<usize> = (0..n).collect();
    m.rank(&all) - m.rank(&rest)
}

/// The largest A ⊆ `elements` such that A contains `k` disjoint bases of M|A, with
/// those bases.
///
/// Such sets are closed under union, and every one of them lies inside the largest
/// minimizer of the union rank formula restricted to the current candidate set, so
/// repeatedly shrinking to that minimizer reaches the maximum.
pub fn max_base_packable_set(
    m: &dyn Matroid,
    k: usize,
    elements: &[usize],
) -> Result<(Vec<usize>, Vec<Vec<usize>>)> {
    let mut current: Vec<usize> = elements.to_vec();
    current.sort_unstable();
    let matroids: Vec<&dyn Matroid> = (0..k).map(|_| m).collect();
    loop {
        if k == 0 {
            return Ok((current, Vec::new()));
        }
        let outcome = matroid_union(&matroids, &current)?;
        let r = m.rank(&current);
        if outcome.rank == k * r {
            let classes = outcome.labeling.classes();
            return Ok((current, classes));
        }
        if outcome.closed_certificate.len() >= current.len() {
            return Err(Error::NotAMatroid(
                "union certificate failed to shrink the candidate set".into(),
            ));
        }
        current = outcome.closed_certificate;
    }
}

/// Exhaustive audit of the matroid axioms; intended for ground sets of at most ~12.
/// Returns a description of the first violation found.
pub fn audit_axioms(m: &dyn Matroid) -> std::result::Result<(), String> {
    let n = m.ground_size();
    assert!(n <= 16, "exhaustive audit on {n} elements");
    let members = |mask: u32| -> Vec<usize> { (0..n).filter(|&e| mask >> e & 1 == 1).collect() };
    let indep: Vec<bool> = (0u32..1 << n)
        .map(|mask| m.is_independent(&members(mask)))
        .collect();
    if !indep[0] {
        return Err("empty set is dependent".into());
    }
    for mask in 0u32..1 << n {
        if !indep[mask as usize] {
            continue;
        }
        for e in 0..n {
            if mask >> e & 1 == 1 && !indep[(mask & !(1 << e)) as usize] {
                return Err(format!(
                    "{:?} independent but drops to a dependent set",
                    members(mask)
                ));
            }
        }
    }
    for a in 0u32..1 << n {
        if !indep[a as usize] {
            continue;
        }
        for b in 0u32..1 << n {
            if !indep[b as usize] || b.count_ones() <= a.count_ones() {
                continue;
            }
            let extendable =
                (0..n).any(|e| b >> e & 1 == 1 && a >> e & 1 == 0 && indep[(a | 1 << e) as usize]);
            if !extendable {
                return Err(format!(
                    "exchange fails for {:?} and {:?}",
                    members(a),
                    members(b)
                ));
            }
        }
    }
    Ok(())
}
