//! Systems of subspaces: intersection-closed, group-stable collections
//! containing the ambient space, together with their combinatorial models.
//!
//! Three constructions matter here: the system generated by a seed set, the
//! Boolean system of coordinate subspaces, and the intersection lattice of
//! the reflecting hyperplanes of a reflection group. The lattice of the
//! type-A arrangement is modelled by set partitions, the type-B/D lattices
//! by coupled partitions.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::groups::{Family, MatrixGroup, RootSystem};
use crate::linalg::{rat, solve_left, Matrix, Rat, Subspace};
use crate::{Error, Result};

/// Default cap on system closure.
pub const DEFAULT_SYSTEM_CAP: usize = 1_000_000;

/// One group orbit on the subspaces of a system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    /// Index of the canonical representative (smallest member).
    pub rep: usize,
    /// Indices of all members.
    pub members: Vec<usize>,
    /// Order of the pointwise isotropy subgroup of the representative.
    pub isotropy_order: u64,
}

impl Orbit {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// A finite system of subspaces for a group: contains the ambient space,
/// stable under the action, closed under pairwise intersection. Subspaces
/// are deduplicated and kept in canonical order; orbit data is computed at
/// construction time against the acting group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct System {
    pub ambient_dim: usize,
    pub subspaces: Vec<Subspace>,
    /// Orbit id of each subspace, aligned with `subspaces`.
    pub orbit_of: Vec<usize>,
    pub orbits: Vec<Orbit>,
}

impl System {
    pub fn len(&self) -> usize {
        self.subspaces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subspaces.is_empty()
    }

    pub fn index_of(&self, x: &Subspace) -> Option<usize> {
        self.subspaces.binary_search(x).ok()
    }

    pub fn contains(&self, x: &Subspace) -> bool {
        self.index_of(x).is_some()
    }

    /// Checks the three system axioms against a group. Cheap enough to run
    /// in tests on everything this crate builds.
    pub fn check_axioms(&self, group: &MatrixGroup) -> Result<()> {
        if !self.contains(&Subspace::full(self.ambient_dim)) {
            return Err(Error::NotASystem("ambient space missing"));
        }
        for x in &self.subspaces {
            for g in &group.elements {
                if !self.contains(&x.apply(g)?) {
                    return Err(Error::NotASystem("not stable under the group action"));
                }
            }
        }
        for a in &self.subspaces {
            for b in &self.subspaces {
                if !self.contains(&a.intersect(b)?) {
                    return Err(Error::NotASystem("not closed under intersection"));
                }
            }
        }
        Ok(())
    }
}

fn build_system(ambient: usize, set: BTreeSet<Subspace>, group: &MatrixGroup) -> Result<System> {
    let subspaces: Vec<Subspace> = set.into_iter().collect();
    let mut orbit_of = vec![usize::MAX; subspaces.len()];
    let mut orbits = Vec::new();
    let index: BTreeMap<&Subspace, usize> =
        subspaces.iter().enumerate().map(|(i, s)| (s, i)).collect();
    for start in 0..subspaces.len() {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        let mut members = vec![start];
        orbit_of[start] = id;
        let mut frontier = vec![start];
        while let Some(i) = frontier.pop() {
            for g in group.generators.iter().chain(group.elements.iter().take(
                if group.generators.is_empty() { group.elements.len() } else { 0 },
            )) {
                let img = subspaces[i].apply(g)?;
                let j = *index.get(&img).ok_or(Error::NotASystem("orbit leaves the system"))?;
                if orbit_of[j] == usize::MAX {
                    orbit_of[j] = id;
                    members.push(j);
                    frontier.push(j);
                }
            }
        }
        members.sort_unstable();
        let rep = members[0];
        let isotropy_order = group.isotropy_order(&subspaces[rep]) as u64;
        orbits.push(Orbit { rep, members, isotropy_order });
    }
    Ok(System { ambient_dim: ambient, subspaces, orbit_of, orbits })
}

/// The smallest system for the group containing the seed subspaces:
/// worklist closure under the group action and pairwise intersection.
pub fn generate_system(group: &MatrixGroup, seeds: &[Subspace], cap: usize) -> Result<System> {
    let n = group.ambient_dim;
    for s in seeds {
        if s.ambient_dim() != n {
            return Err(Error::DimensionMismatch { expected: n, got: s.ambient_dim() });
        }
    }
    let mut set: BTreeSet<Subspace> = BTreeSet::new();
    set.insert(Subspace::full(n));
    let mut queue: Vec<Subspace> = vec![Subspace::full(n)];
    for s in seeds {
        if set.insert(s.clone()) {
            queue.push(s.clone());
        }
    }
    // Generators suffice for the action closure; intersections are retried
    // against the full current set each time something new appears.
    let gens: Vec<&Matrix> = if group.generators.is_empty() {
        group.elements.iter().collect()
    } else {
        group.generators.iter().collect()
    };
    while let Some(x) = queue.pop() {
        for g in &gens {
            let y = x.apply(g)?;
            if !set.contains(&y) {
                if set.len() >= cap {
                    return Err(Error::CapExceeded { cap });
                }
                set.insert(y.clone());
                queue.push(y);
            }
        }
        let snapshot: Vec<Subspace> = set.iter().cloned().collect();
        for other in &snapshot {
            let y = x.intersect(other)?;
            if !set.contains(&y) {
                if set.len() >= cap {
                    return Err(Error::CapExceeded { cap });
                }
                set.insert(y.clone());
                queue.push(y);
            }
        }
    }
    build_system(n, set, group)
}

/// Coordinate subspace `X(J) = ⊕_{j∈J} Q·x_j`.
pub fn coordinate_subspace(n: usize, j: &BTreeSet<usize>) -> Subspace {
    let rows: Vec<Vec<Rat>> = j
        .iter()
        .map(|&i| {
            let mut v = vec![Rat::zero(); n];
            v[i] = rat(1);
            v
        })
        .collect();
    Subspace::from_vectors(n, &rows)
}

/// The Boolean system: all `2^n` coordinate subspaces. Valid for groups of
/// monomial matrices (they permute the coordinate lines up to sign), which
/// covers the classical Weyl groups in their standard realization.
pub fn boolean_system(n: usize, group: &MatrixGroup) -> Result<System> {
    if group.ambient_dim != n {
        return Err(Error::DimensionMismatch { expected: n, got: group.ambient_dim });
    }
    for g in &group.elements {
        for r in 0..n {
            let nonzero = (0..n).filter(|&c| !g.at(r, c).is_zero()).count();
            if nonzero != 1 {
                return Err(Error::NotASystem(
                    "group does not permute the coordinate lines up to sign",
                ));
            }
        }
    }
    let mut set = BTreeSet::new();
    for mask in 0..(1u64 << n) {
        let j: BTreeSet<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        set.insert(coordinate_subspace(n, &j));
    }
    build_system(n, set, group)
}

/// The intersection lattice `L(A)` of the reflecting hyperplanes of `W(Φ)`,
/// with the null intersection taken to be the ambient space.
pub fn arrangement_system(phi: &RootSystem, group: &MatrixGroup, cap: usize) -> Result<System> {
    let n = phi.ambient_dim;
    let mut hyperplanes: BTreeSet<Subspace> = BTreeSet::new();
    for v in &phi.roots {
        let line = Subspace::from_vectors(n, core::slice::from_ref(v));
        hyperplanes.insert(line.orthogonal_complement());
    }
    let mut set: BTreeSet<Subspace> = BTreeSet::new();
    set.insert(Subspace::full(n));
    let mut queue: Vec<Subspace> = hyperplanes.iter().cloned().collect();
    for h in &hyperplanes {
        set.insert(h.clone());
    }
    while let Some(x) = queue.pop() {
        for h in &hyperplanes {
            let y = x.intersect(h)?;
            if !set.contains(&y) {
                if set.len() >= cap {
                    return Err(Error::CapExceeded { cap });
                }
                set.insert(y.clone());
                queue.push(y);
            }
        }
    }
    build_system(n, set, group)
}

/// A set partition of `{0..n-1}` with canonically ordered blocks.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Partition {
    pub n: usize,
    pub blocks: Vec<BTreeSet<usize>>,
}

impl Partition {
    pub fn new(n: usize, mut blocks: Vec<BTreeSet<usize>>) -> Partition {
        blocks.retain(|b| !b.is_empty());
        blocks.sort();
        let p = Partition { n, blocks };
        debug_assert!(p.is_valid());
        p
    }

    pub fn discrete(n: usize) -> Partition {
        Partition::new(n, (0..n).map(|i| BTreeSet::from([i])).collect())
    }

    fn is_valid(&self) -> bool {
        let mut seen = BTreeSet::new();
        for b in &self.blocks {
            for &i in b {
                if i >= self.n || !seen.insert(i) {
                    return false;
                }
            }
        }
        seen.len() == self.n
    }

    /// Multiset of block sizes, largest first.
    pub fn shape(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.blocks.iter().map(|b| b.len()).collect();
        s.sort_unstable_by(|a, b| b.cmp(a));
        s
    }

    pub fn block_of(&self, i: usize) -> usize {
        self.blocks.iter().position(|b| b.contains(&i)).unwrap()
    }

    /// Refinement order: every block of `self` inside a block of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        self.blocks.iter().all(|b| {
            let first = *b.iter().next().unwrap();
            other.blocks[other.block_of(first)].is_superset(b)
        })
    }

    /// Join in the partition lattice, via union-find over shared elements.
    pub fn join(&self, other: &Partition) -> Partition {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], i: usize) -> usize {
            let mut i = i;
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        for part in [&self.blocks, &other.blocks] {
            for b in part {
                let mut it = b.iter();
                if let Some(&first) = it.next() {
                    for &x in it {
                        let (a, b) = (find(&mut parent, first), find(&mut parent, x));
                        if a != b {
                            parent[a] = b;
                        }
                    }
                }
            }
        }
        let mut map: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
        for i in 0..self.n {
            let r = find(&mut parent, i);
            map.entry(r).or_default().insert(i);
        }
        Partition::new(self.n, map.into_values().collect())
    }

    /// Image partition under a permutation given as an image array.
    pub fn act(&self, perm: &[usize]) -> Partition {
        Partition::new(
            self.n,
            self.blocks.iter().map(|b| b.iter().map(|&i| perm[i]).collect()).collect(),
        )
    }
}

/// All set partitions of `{0..n-1}`, in a deterministic order.
pub fn all_partitions(n: usize) -> Vec<Partition> {
    // Restricted growth strings.
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    fn rec(rgs: &mut Vec<usize>, pos: usize, max: usize, out: &mut Vec<Partition>) {
        let n = rgs.len();
        if pos == n {
            let blocks = {
                let mut m: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
                for (i, &c) in rgs.iter().enumerate() {
                    m.entry(c).or_default().insert(i);
                }
                m.into_values().collect()
            };
            out.push(Partition::new(n, blocks));
            return;
        }
        for c in 0..=max {
            rgs[pos] = c;
            rec(rgs, pos + 1, max.max(c + 1), out);
        }
    }
    if n == 0 {
        return vec![Partition::new(0, Vec::new())];
    }
    rec(&mut rgs, 0, 1, &mut out);
    out.sort();
    out.dedup();
    out
}

/// Subspace `X(Λ)`: coordinates equal within each block. Its dimension is
/// the number of blocks and the assignment `Λ ↦ X(Λ)` is injective.
pub fn partition_subspace(p: &Partition) -> Subspace {
    let rows: Vec<Vec<Rat>> = p
        .blocks
        .iter()
        .map(|b| {
            let mut v = vec![Rat::zero(); p.n];
            for &i in b {
                v[i] = rat(1);
            }
            v
        })
        .collect();
    Subspace::from_vectors(p.n, &rows)
}

/// A coupled partition of a subset of `{0..n-1}` together with the deleted
/// set `Δ`: some blocks come in unordered coupled pairs, the rest are
/// single. Models the flats of the type-B/D reflection arrangements.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CoupledPartition {
    pub n: usize,
    pub delta: BTreeSet<usize>,
    /// Each couple stored with its two blocks in canonical order.
    pub couples: Vec<(BTreeSet<usize>, BTreeSet<usize>)>,
    pub singles: Vec<BTreeSet<usize>>,
}

impl CoupledPartition {
    pub fn new(
        n: usize,
        delta: BTreeSet<usize>,
        couples: Vec<(BTreeSet<usize>, BTreeSet<usize>)>,
        singles: Vec<BTreeSet<usize>>,
    ) -> CoupledPartition {
        let mut couples: Vec<(BTreeSet<usize>, BTreeSet<usize>)> = couples
            .into_iter()
            .map(|(a, b)| if a <= b { (a, b) } else { (b, a) })
            .collect();
        couples.sort();
        let mut singles = singles;
        singles.sort();
        CoupledPartition { n, delta, couples, singles }
    }

    /// `m = |Δ|`.
    pub fn deleted_size(&self) -> usize {
        self.delta.len()
    }

    /// Partition of `n − m` recording each couple as the sum of its two
    /// block sizes and each single block by its size, largest first.
    pub fn shape(&self) -> Vec<usize> {
        let mut parts: Vec<usize> =
            self.couples.iter().map(|(a, b)| a.len() + b.len()).collect();
        parts.extend(self.singles.iter().map(|s| s.len()));
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts
    }
}

/// Subspace `X(Δ,Λ)`: zero on `Δ`, equal within blocks, negated across the
/// two blocks of a couple. Dimension = couples + singles.
pub fn coupled_subspace(cp: &CoupledPartition) -> Subspace {
    let n = cp.n;
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for (a, b) in &cp.couples {
        let mut v = vec![Rat::zero(); n];
        for &i in a {
            v[i] = rat(1);
        }
        for &i in b {
            v[i] = rat(-1);
        }
        rows.push(v);
    }
    for s in &cp.singles {
        let mut v = vec![Rat::zero(); n];
        for &i in s {
            v[i] = rat(1);
        }
        rows.push(v);
    }
    Subspace::from_vectors(n, &rows)
}

fn coupled_partitions_of(elems: &[usize], n: usize) -> Vec<CoupledPartition> {
    // All partitions of the element set, then all partial matchings of the
    // blocks into couples.
    let mut out = Vec::new();
    let k = elems.len();
    let reindex: Vec<usize> = elems.to_vec();
    for p in all_partitions(k) {
        let blocks: Vec<BTreeSet<usize>> = p
            .blocks
            .iter()
            .map(|b| b.iter().map(|&i| reindex[i]).collect())
            .collect();
        let m = blocks.len();
        // Enumerate partial matchings of {0..m-1}.
        fn matchings(avail: &[usize], acc: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
            out.push(acc.clone());
            if avail.len() < 2 {
                return;
            }
            let first = avail[0];
            for (idx, &other) in avail.iter().enumerate().skip(1) {
                let mut rest: Vec<usize> = avail[1..].to_vec();
                rest.remove(idx - 1);
                acc.push((first, other));
                matchings(&rest, acc, out);
                acc.pop();
            }
            // Also matchings that leave `first` single.
            let rest: Vec<usize> = avail[1..].to_vec();
            let before = out.len();
            matchings(&rest, acc, out);
            // The recursive call re-emitted `acc` itself; drop the duplicate.
            out.remove(before);
        }
        let avail: Vec<usize> = (0..m).collect();
        let mut all = Vec::new();
        matchings(&avail, &mut Vec::new(), &mut all);
        all.sort();
        all.dedup();
        for matching in all {
            let matched: BTreeSet<usize> =
                matching.iter().flat_map(|&(a, b)| [a, b]).collect();
            let couples: Vec<(BTreeSet<usize>, BTreeSet<usize>)> = matching
                .iter()
                .map(|&(a, b)| (blocks[a].clone(), blocks[b].clone()))
                .collect();
            let singles: Vec<BTreeSet<usize>> = (0..m)
                .filter(|i| !matched.contains(i))
                .map(|i| blocks[i].clone())
                .collect();
            out.push(CoupledPartition::new(n, BTreeSet::new(), couples, singles));
        }
    }
    out
}

/// All pairs `(Δ, Λ)` with `Λ` a coupled partition of the complement of
/// `Δ`. Family `B` takes every `Δ`; family `D` drops `|Δ| = 1`, matching
/// the flats of the respective arrangements.
pub fn enumerate_coupled_lattice(n: usize, family: Family) -> Result<Vec<CoupledPartition>> {
    if !matches!(family, Family::B | Family::D) {
        return Err(Error::Unsupported("coupled partitions model types B and D"));
    }
    let mut out = Vec::new();
    for mask in 0..(1u64 << n) {
        let delta: BTreeSet<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        if family == Family::D && delta.len() == 1 {
            continue;
        }
        let rest: Vec<usize> = (0..n).filter(|i| !delta.contains(i)).collect();
        for cp in coupled_partitions_of(&rest, n) {
            out.push(CoupledPartition::new(n, delta.clone(), cp.couples, cp.singles));
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// The order relation on pairs `(Δ,Λ)`: it holds exactly when the
/// corresponding subspaces satisfy the reverse inclusion
/// `X(Δ',Λ') ⊆ X(Δ,Λ)`.
pub fn coupled_leq(a: &CoupledPartition, b: &CoupledPartition) -> bool {
    if !a.delta.is_subset(&b.delta) {
        return false;
    }
    // Each single block of `a`: inside Δ', or inside a single block of `b`,
    // or inside one block of a couple of `b`.
    for s in &a.singles {
        let ok = s.is_subset(&b.delta)
            || b.singles.iter().any(|t| s.is_subset(t))
            || b.couples.iter().any(|(p, q)| s.is_subset(p) || s.is_subset(q));
        if !ok {
            return false;
        }
    }
    // Each couple of `a`: inside Δ', or aligned with a couple of `b` (in
    // either orientation).
    for (p, q) in &a.couples {
        let in_delta = p.is_subset(&b.delta) && q.is_subset(&b.delta);
        let aligned = b.couples.iter().any(|(u, v)| {
            (p.is_subset(u) && q.is_subset(v)) || (p.is_subset(v) && q.is_subset(u))
        });
        if !in_delta && !aligned {
            return false;
        }
    }
    true
}

/// Orbit signature of a flat in a classical arrangement: the size of the
/// zero set together with the partition shaped by block sizes (couples
/// recorded as the sum of their two blocks). Equal signatures characterize
/// the type-B orbits; in type D the all-even case with `Δ = ∅` splits into
/// two orbits, reported by the flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signature {
    pub m: usize,
    pub lambda: Vec<usize>,
    /// Type D only: set when the orbit with this signature splits in two.
    pub d_orbit_splits: bool,
}

/// Reads the coupled-partition structure back off a flat of a classical
/// arrangement (types A, B, D in the standard basis).
pub fn flat_to_coupled(x: &Subspace) -> Result<CoupledPartition> {
    let n = x.ambient_dim();
    let b = x.basis();
    let col = |i: usize| -> Vec<Rat> { (0..b.rows()).map(|r| b.at(r, i).clone()).collect() };
    let mut delta = BTreeSet::new();
    let mut groups: BTreeMap<Vec<Rat>, BTreeSet<usize>> = BTreeMap::new();
    for i in 0..n {
        let c = col(i);
        if c.iter().all(|v| v.is_zero()) {
            delta.insert(i);
        } else {
            groups.entry(c).or_default().insert(i);
        }
    }
    let mut couples = Vec::new();
    let mut singles = Vec::new();
    let mut used: BTreeSet<Vec<Rat>> = BTreeSet::new();
    for (c, idxs) in &groups {
        if used.contains(c) {
            continue;
        }
        let neg: Vec<Rat> = c.iter().map(|v| -v).collect();
        if let Some(other) = groups.get(&neg) {
            if neg == *c {
                return Err(Error::NotInSystem);
            }
            used.insert(c.clone());
            used.insert(neg.clone());
            couples.push((idxs.clone(), other.clone()));
        } else {
            used.insert(c.clone());
            singles.push(idxs.clone());
        }
    }
    let cp = CoupledPartition::new(n, delta, couples, singles);
    // The flat must be cut out exactly by this combinatorial data.
    if coupled_subspace(&cp) != *x {
        return Err(Error::NotInSystem);
    }
    Ok(cp)
}

/// Signature of a flat `x` of a classical arrangement system.
pub fn signature(x: &Subspace, family: Family, s: &System) -> Result<Signature> {
    if !s.contains(x) {
        return Err(Error::NotInSystem);
    }
    let cp = flat_to_coupled(x)?;
    if family == Family::A && (!cp.delta.is_empty() || !cp.couples.is_empty()) {
        return Err(Error::NotInSystem);
    }
    let m = cp.deleted_size();
    let lambda = cp.shape();
    let d_orbit_splits =
        family == Family::D && m == 0 && lambda.iter().all(|&p| p % 2 == 0);
    Ok(Signature { m, lambda, d_orbit_splits })
}

/// Restriction of a group to the span of the roots, in a rational basis of
/// that span. Returns the basis (rows spanning the root span) and the
/// restricted group; subspaces of the span can be moved to restricted
/// coordinates with [`restrict_subspace`].
pub fn restrict_to_root_span(phi: &RootSystem, w: &MatrixGroup) -> Result<(Subspace, MatrixGroup)> {
    let span = Subspace::from_vectors(phi.ambient_dim, &phi.roots);
    let dim = span.dim();
    let mut gens = Vec::new();
    for g in &w.generators {
        gens.push(restrict_matrix(span.basis(), g)?);
    }
    let mut elements = Vec::new();
    for g in &w.elements {
        elements.push(restrict_matrix(span.basis(), g)?);
    }
    elements.sort();
    elements.dedup();
    if elements.len() != w.elements.len() {
        return Err(Error::NotPreserved("root span (restriction is not faithful)"));
    }
    Ok((span, MatrixGroup { ambient_dim: dim, generators: gens, elements }))
}

/// The matrix of `g` on the row space of `b`, expressed in the basis given
/// by the rows of `b`. Requires the row space to be `g`-stable.
pub fn restrict_matrix(b: &Matrix, g: &Matrix) -> Result<Matrix> {
    let imaged = b.mul(g);
    let mut rows = Vec::new();
    for r in 0..imaged.rows() {
        let c = solve_left(b, imaged.row(r)).ok_or(Error::NotPreserved("row space"))?;
        rows.push(c);
    }
    Ok(Matrix::from_rows(rows))
}

/// Coordinates of a subspace of the row space of `b` with respect to `b`.
pub fn restrict_subspace(b: &Matrix, x: &Subspace) -> Result<Subspace> {
    let mut rows = Vec::new();
    for r in 0..x.basis().rows() {
        let c = solve_left(b, x.basis().row(r)).ok_or(Error::NotPreserved("row space"))?;
        rows.push(c);
    }
    Ok(Subspace::from_vectors(b.rows(), &rows))
}

/// The reflection group of a triangle in the plane together with the
/// six-line system: the three mirror lines, the three lines orthogonal to
/// them, the plane and the origin. Realized by restricting the standard
/// permutation action on `Q^3` to the plane `x1+x2+x3 = 0`, so all
/// coordinates stay rational. Any two distinct lines meet in the origin,
/// which makes the collection a system; the resulting reflection monoid is
/// the standard example of a non-fundamental one whose units are separated
/// by the congruence μ.
pub fn six_line_triangle_system() -> Result<(MatrixGroup, System)> {
    use crate::groups::weyl_group;
    let phi = RootSystem::classical(Family::A, 3)?;
    let w3 = weyl_group(&phi, crate::groups::DEFAULT_GROUP_CAP)?;
    let (span, w) = restrict_to_root_span(&phi, &w3)?;
    let b = span.basis();
    let mut lines: Vec<Subspace> = Vec::new();
    for v in &phi.roots {
        // Root line, in plane coordinates.
        let root_line = restrict_subspace(b, &Subspace::from_vectors(3, core::slice::from_ref(v)))?;
        // Mirror line: the fixed line of the reflection inside the plane.
        let mirror3 = Subspace::from_vectors(3, core::slice::from_ref(v))
            .orthogonal_complement()
            .intersect(&Subspace::from_spanning(b))?;
        let mirror = restrict_subspace(b, &mirror3)?;
        lines.push(root_line);
        lines.push(mirror);
    }
    lines.sort();
    lines.dedup();
    if lines.len() != 6 {
        return Err(Error::NotASystem("expected six distinct lines"));
    }
    let mut set: BTreeSet<Subspace> = lines.into_iter().collect();
    set.insert(Subspace::full(2));
    set.insert(Subspace::zero(2));
    let system = build_system(2, set, &w)?;
    system.check_axioms(&w)?;
    Ok((w, system))
}

/// Fixed subspace `{v : v·g = v for all g ∈ H}` of a set of matrices.
pub fn fixed_space(n: usize, elements: &[&Matrix]) -> Subspace {
    let mut x = Subspace::full(n);
    for g in elements {
        let mut diff = (*g).clone();
        for i in 0..n {
            *diff.at_mut(i, i) -= rat(1);
        }
        let fix = Subspace::from_spanning(&diff.left_kernel_rows());
        x = x.intersect(&fix).unwrap();
    }
    x
}

/// The set `{Fix(H) | H ≤ G}`: since `Fix(H₁) ∩ Fix(H₂) = Fix(⟨H₁,H₂⟩)`
/// and every subgroup is generated by its elements, this is the closure of
/// the single-element fixed spaces under intersection.
pub fn fixed_space_collection(group: &MatrixGroup) -> Vec<Subspace> {
    let n = group.ambient_dim;
    let mut set: BTreeSet<Subspace> = BTreeSet::new();
    set.insert(Subspace::full(n)); // trivial subgroup
    let singles: Vec<Subspace> =
        group.elements.iter().map(|g| fixed_space(n, &[g])).collect();
    for s in &singles {
        set.insert(s.clone());
    }
    let mut queue: Vec<Subspace> = set.iter().cloned().collect();
    while let Some(x) = queue.pop() {
        for s in &singles {
            let y = x.intersect(s).unwrap();
            if set.insert(y.clone()) {
                queue.push(y);
            }
        }
    }
    set.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{weyl_group, DEFAULT_GROUP_CAP};

    fn weyl(family: Family, n: usize) -> (RootSystem, MatrixGroup) {
        let phi = match family {
            Family::G2 => RootSystem::g2(),
            Family::F4 => RootSystem::f4(),
            _ => RootSystem::classical(family, n).unwrap(),
        };
        let w = weyl_group(&phi, DEFAULT_GROUP_CAP).unwrap();
        (phi, w)
    }

    #[test]
    fn generate_trivial_seed() {
        let (_, w) = weyl(Family::A, 3);
        let s = generate_system(&w, &[Subspace::full(3)], 100).unwrap();
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn generate_a2_hyperplanes_gives_partition_lattice() {
        let (phi, w) = weyl(Family::A, 3);
        let mut seeds: Vec<Subspace> = phi
            .roots
            .iter()
            .map(|v| Subspace::from_vectors(3, std::slice::from_ref(v)).orthogonal_complement())
            .collect();
        seeds.sort();
        seeds.dedup();
        assert_eq!(seeds.len(), 3);
        let s = generate_system(&w, &seeds, 1000).unwrap();
        assert_eq!(s.len(), 5); // Bell(3)
        s.check_axioms(&w).unwrap();
    }

    #[test]
    fn generate_b2_hyperplanes() {
        let (phi, w) = weyl(Family::B, 2);
        let mut seeds = Vec::new();
        for v in &phi.roots {
            seeds.push(Subspace::from_vectors(2, std::slice::from_ref(v)).orthogonal_complement());
        }
        seeds.sort();
        seeds.dedup();
        assert_eq!(seeds.len(), 4);
        let s = generate_system(&w, &seeds, 1000).unwrap();
        assert_eq!(s.len(), 6); // V, four lines, 0
    }

    #[test]
    fn boolean_counts_and_orbits() {
        let (_, w) = weyl(Family::A, 2);
        let s = boolean_system(2, &w).unwrap();
        assert_eq!(s.len(), 4);
        let (_, w) = weyl(Family::A, 3);
        let s = boolean_system(3, &w).unwrap();
        assert_eq!(s.len(), 8);
        let mut sizes: Vec<usize> = s.orbits.iter().map(|o| o.size()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 3, 3]);
        s.check_axioms(&w).unwrap();
    }

    #[test]
    fn boolean_rejects_non_monomial() {
        let phi = RootSystem::g2();
        let w = weyl_group(&phi, DEFAULT_GROUP_CAP).unwrap();
        assert!(matches!(boolean_system(3, &w), Err(Error::NotASystem(_))));
    }

    #[test]
    fn arrangement_flat_counts() {
        for (family, n, flats) in [
            (Family::A, 3, 5),   // Bell(3)
            (Family::A, 4, 15),  // Bell(4)
            (Family::B, 2, 6),
            (Family::B, 3, 24),
            (Family::D, 2, 4),
            (Family::D, 3, 15),
        ] {
            let (phi, w) = weyl(family, n);
            let s = arrangement_system(&phi, &w, DEFAULT_SYSTEM_CAP).unwrap();
            assert_eq!(s.len(), flats, "{family:?} n={n}");
        }
    }

    #[test]
    fn arrangement_axioms_hold() {
        let (phi, w) = weyl(Family::B, 2);
        let s = arrangement_system(&phi, &w, DEFAULT_SYSTEM_CAP).unwrap();
        s.check_axioms(&w).unwrap();
    }

    #[test]
    fn partition_subspace_examples() {
        let p = Partition::discrete(3);
        assert_eq!(partition_subspace(&p), Subspace::full(3));
        let p = Partition::new(3, vec![BTreeSet::from([0, 1]), BTreeSet::from([2])]);
        let x = partition_subspace(&p);
        assert_eq!(x.dim(), 2);
        assert!(x.contains_vector(&[rat(1), rat(1), rat(5)]));
        assert!(!x.contains_vector(&[rat(1), rat(2), rat(0)]));
        let p = Partition::new(3, vec![BTreeSet::from([0, 1, 2])]);
        let x = partition_subspace(&p);
        assert_eq!(x.dim(), 1);
        assert!(x.contains_vector(&[rat(2), rat(2), rat(2)]));
    }

    #[test]
    fn partition_subspace_injective_and_matches_arrangement() {
        for n in 2..=5usize {
            let parts = all_partitions(n);
            let mut imgs = BTreeSet::new();
            for p in &parts {
                assert_eq!(partition_subspace(p).dim(), p.blocks.len());
                imgs.insert(partition_subspace(p));
            }
            assert_eq!(imgs.len(), parts.len());
            // Against the arrangement itself: the flats are exactly the
            // partition subspaces (Bell(n) of them).
            let (phi, w) = weyl(Family::A, n);
            let s = arrangement_system(&phi, &w, DEFAULT_SYSTEM_CAP).unwrap();
            assert_eq!(imgs.iter().cloned().collect::<Vec<_>>(), s.subspaces);
        }
    }

    #[test]
    fn partition_lattice_antiisomorphism() {
        // Refinement order on partitions is the reverse of inclusion on
        // the flats, checked exhaustively for n up to 5.
        for n in 2..=5usize {
            let parts = all_partitions(n);
            for a in &parts {
                for b in &parts {
                    // Refinement runs opposite to inclusion: coarsening the
                    // partition shrinks the subspace.
                    let xa = partition_subspace(a);
                    let xb = partition_subspace(b);
                    assert_eq!(a.refines(b), xa.contains(&xb));
                }
            }
        }
    }

    #[test]
    fn coupled_subspace_examples() {
        let cp = CoupledPartition::new(2, BTreeSet::from([0, 1]), vec![], vec![]);
        assert_eq!(coupled_subspace(&cp), Subspace::zero(2));
        let cp = CoupledPartition::new(
            2,
            BTreeSet::new(),
            vec![(BTreeSet::from([0]), BTreeSet::from([1]))],
            vec![],
        );
        let x = coupled_subspace(&cp);
        assert!(x.contains_vector(&[rat(1), rat(-1)]));
        assert_eq!(x.dim(), 1);
        let cp = CoupledPartition::new(
            2,
            BTreeSet::new(),
            vec![],
            vec![BTreeSet::from([0]), BTreeSet::from([1])],
        );
        assert_eq!(coupled_subspace(&cp), Subspace::full(2));
    }

    #[test]
    fn coupled_lattice_counts() {
        assert_eq!(enumerate_coupled_lattice(1, Family::B).unwrap().len(), 2);
        assert_eq!(enumerate_coupled_lattice(2, Family::B).unwrap().len(), 6);
        assert_eq!(enumerate_coupled_lattice(3, Family::B).unwrap().len(), 24);
        assert_eq!(enumerate_coupled_lattice(4, Family::B).unwrap().len(), 116);
        // Type D drops |Δ| = 1; the n = 2 count is the 4 flats of the D2
        // arrangement.
        assert_eq!(enumerate_coupled_lattice(2, Family::D).unwrap().len(), 4);
        assert_eq!(enumerate_coupled_lattice(3, Family::D).unwrap().len(), 15);
        assert_eq!(enumerate_coupled_lattice(4, Family::D).unwrap().len(), 72);
    }

    #[test]
    fn coupled_bijection_with_arrangement() {
        for (family, n) in [(Family::B, 1), (Family::B, 2), (Family::B, 3), (Family::B, 4),
                            (Family::D, 2), (Family::D, 3), (Family::D, 4)] {
            let (phi, w) = weyl(family, n);
            let s = arrangement_system(&phi, &w, DEFAULT_SYSTEM_CAP).unwrap();
            let lattice = enumerate_coupled_lattice(n, family).unwrap();
            let mut images: Vec<Subspace> = lattice.iter().map(coupled_subspace).collect();
            images.sort();
            images.dedup();
            assert_eq!(images.len(), lattice.len(), "{family:?} n={n}: injective");
            assert_eq!(images, s.subspaces, "{family:?} n={n}: onto the flats");
        }
    }

    #[test]
    fn coupled_order_is_reverse_inclusion() {
        let lattice = enumerate_coupled_lattice(3, Family::B).unwrap();
        for a in &lattice {
            for b in &lattice {
                let xa = coupled_subspace(a);
                let xb = coupled_subspace(b);
                assert_eq!(coupled_leq(a, b), xa.contains(&xb), "{a:?} vs {b:?}");
            }
        }
    }

    #[test]
    fn orbit_examples() {
        // Arrangement of A3 (ambient Q^4): orbits correspond to integer
        // partitions of 4, and the (2,1,1) orbit has size 4!/b_λ = 6.
        let (phi, w) = weyl(Family::A, 4);
        let s = arrangement_system(&phi, &w, DEFAULT_SYSTEM_CAP).unwrap();
        assert_eq!(s.orbits.len(), 5);
        let mut with_shape = 0;
        for o in &s.orbits {
            let sig = signature(&s.subspaces[o.rep], Family::A, &s).unwrap();
            if sig.lambda == vec![2, 1, 1] {
                with_shape += 1;
                assert_eq!(o.size(), 6);
            }
        }
        assert_eq!(with_shape, 1);
        // B2 arrangement: the four lines split into two orbits of two.
        let (phi, w) = weyl(Family::B, 2);
        let s = arrangement_system(&phi, &w, DEFAULT_SYSTEM_CAP).unwrap();
        let mut line_orbits: Vec<usize> = s
            .orbits
            .iter()
            .filter(|o| s.subspaces[o.rep].dim() == 1)
            .map(|o| o.size())
            .collect();
        line_orbits.sort_unstable();
        assert_eq!(line_orbits, vec![2, 2]);
    }

    #[test]
    fn signature_examples() {
        let (phi, w) = weyl(Family::A, 4);
        let s = arrangement_system(&phi, &w, DEFAULT_SYSTEM_CAP).unwrap();
        let p = Partition::new(4, vec![BTreeSet::from([0, 1]), BTreeSet::from([2, 3])]);
        let sig = signature(&partition_subspace(&p), Family::A, &s).unwrap();
        assert_eq!((sig.m, sig.lambda), (0, vec![2, 2]));

        let (phi, w) = weyl(Family::B, 2);
        let s = arrangement_system(&phi, &w, DEFAULT_SYSTEM_CAP).unwrap();
        let cp = CoupledPartition::new(2, BTreeSet::from([0]), vec![], vec![BTreeSet::from([1])]);
        let sig = signature(&coupled_subspace(&cp), Family::B, &s).unwrap();
        assert_eq!((sig.m, sig.lambda, sig.d_orbit_splits), (1, vec![1], false));

        let (phi, w) = weyl(Family::D, 4);
        let s = arrangement_system(&phi, &w, DEFAULT_SYSTEM_CAP).unwrap();
        let cp = CoupledPartition::new(
            4,
            BTreeSet::new(),
            vec![],
            vec![BTreeSet::from([0, 1]), BTreeSet::from([2, 3])],
        );
        let sig = signature(&coupled_subspace(&cp), Family::D, &s).unwrap();
        assert!(sig.d_orbit_splits);
        assert_eq!(sig.lambda, vec![2, 2]);
    }

    #[test]
    fn signature_classifies_b_orbits() {
        let (phi, w) = weyl(Family::B, 3);
        let s = arrangement_system(&phi, &w, DEFAULT_SYSTEM_CAP).unwrap();
        for a in 0..s.len() {
            for b in 0..s.len() {
                let sa = signature(&s.subspaces[a], Family::B, &s).unwrap();
                let sb = signature(&s.subspaces[b], Family::B, &s).unwrap();
                let same_sig = sa.m == sb.m && sa.lambda == sb.lambda;
                let same_orbit = s.orbit_of[a] == s.orbit_of[b];
                assert_eq!(same_sig, same_orbit);
            }
        }
    }

    #[test]
    fn d_orbit_split_matches_flag() {
        let (phi, w) = weyl(Family::D, 4);
        let s = arrangement_system(&phi, &w, DEFAULT_SYSTEM_CAP).unwrap();
        // Group flats by signature and compare the number of orbits.
        let mut orbits_by_sig: BTreeMap<(usize, Vec<usize>), BTreeSet<usize>> = BTreeMap::new();
        let mut split_by_sig: BTreeMap<(usize, Vec<usize>), bool> = BTreeMap::new();
        for i in 0..s.len() {
            let sig = signature(&s.subspaces[i], Family::D, &s).unwrap();
            orbits_by_sig.entry((sig.m, sig.lambda.clone())).or_default().insert(s.orbit_of[i]);
            split_by_sig.insert((sig.m, sig.lambda), sig.d_orbit_splits);
        }
        for (key, orbits) in &orbits_by_sig {
            let expected = if split_by_sig[key] { 2 } else { 1 };
            assert_eq!(orbits.len(), expected, "signature {key:?}");
        }
    }

    #[test]
    fn type_b_orbit_size_closed_form() {
        use crate::orders::{b_lambda, binomial, factorial};
        use num_bigint::BigInt;
        for n in 1..=4usize {
            let (phi, w) = weyl(Family::B, n);
            let s = arrangement_system(&phi, &w, DEFAULT_SYSTEM_CAP).unwrap();
            for o in &s.orbits {
                let cp = flat_to_coupled(&s.subspaces[o.rep]).unwrap();
                let m = cp.deleted_size();
                let p = cp.singles.len();
                let q = cp.couples.len();
                let lambda = cp.shape();
                let mut expect: BigInt = BigInt::from(1) << (n - m - p - q);
                expect *= binomial(n, n - m);
                expect *= factorial(n - m);
                let b = b_lambda(&lambda);
                assert_eq!(&expect % &b, BigInt::from(0));
                expect /= b;
                assert_eq!(BigInt::from(o.size()), expect, "n={n} rep={:?}", cp);
            }
        }
    }

    #[test]
    fn arrangement_equals_fixed_space_collection() {
        for (family, n) in [(Family::A, 2), (Family::A, 3), (Family::B, 2), (Family::B, 3), (Family::D, 3)] {
            let (phi, w) = weyl(family, n);
            let s = arrangement_system(&phi, &w, DEFAULT_SYSTEM_CAP).unwrap();
            let fixes = fixed_space_collection(&w);
            assert_eq!(s.subspaces, fixes, "{family:?} n={n}");
        }
        let phi = RootSystem::g2();
        let w = weyl_group(&phi, DEFAULT_GROUP_CAP).unwrap();
        let s = arrangement_system(&phi, &w, DEFAULT_SYSTEM_CAP).unwrap();
        assert_eq!(s.subspaces, fixed_space_collection(&w));
        assert_eq!(s.len(), 8); // ambient, six mirror planes, the common line
    }

    mod partition_props {
        use super::*;
        use proptest::prelude::*;

        fn arb_partition(n: usize) -> impl Strategy<Value = Partition> {
            proptest::collection::vec(0..n, n).prop_map(move |labels| {
                let mut map: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
                for (i, &l) in labels.iter().enumerate() {
                    map.entry(l).or_default().insert(i);
                }
                Partition::new(n, map.into_values().collect())
            })
        }

        proptest! {
            #[test]
            fn join_laws(a in arb_partition(5), b in arb_partition(5), c in arb_partition(5)) {
                prop_assert_eq!(a.join(&b), b.join(&a));
                prop_assert_eq!(a.join(&b).join(&c), a.join(&b.join(&c)));
                prop_assert_eq!(a.join(&a), a.clone());
                // The join is an upper bound in refinement order.
                prop_assert!(a.refines(&a.join(&b)));
            }

            #[test]
            fn join_matches_subspace_intersection(a in arb_partition(4), b in arb_partition(4)) {
                // X(Λ) ∩ X(Γ) = X(Λ ∨ Γ).
                let meet = partition_subspace(&a).intersect(&partition_subspace(&b)).unwrap();
                prop_assert_eq!(meet, partition_subspace(&a.join(&b)));
            }
        }
    }

    #[test]
    fn six_line_system_shape() {
        let (w, s) = six_line_triangle_system().unwrap();
        assert_eq!(w.order(), 6);
        assert_eq!(s.len(), 8); // plane, six lines, origin
        assert_eq!(s.subspaces.iter().filter(|x| x.dim() == 1).count(), 6);
        // Three reflections in the restricted group.
        let reflections =
            w.elements.iter().filter(|g| g.fixed_space_dim() == 1).count();
        assert_eq!(reflections, 3);
    }

    #[test]
    fn restriction_to_root_span() {
        let phi = RootSystem::classical(Family::A, 3).unwrap();
        let w = weyl_group(&phi, DEFAULT_GROUP_CAP).unwrap();
        let (span, restricted) = restrict_to_root_span(&phi, &w).unwrap();
        assert_eq!(span.dim(), 2);
        assert_eq!(restricted.order(), 6);
        assert_eq!(restricted.ambient_dim, 2);
        for g in &restricted.elements {
            assert!(g.is_invertible());
        }
    }
}
