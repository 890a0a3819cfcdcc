//! Inverse monoids of partial maps on finite sets: the symmetric inverse
//! monoid, partial signed permutations, uniform block permutations, monoids
//! of arbitrary set systems, the Munn semigroup of a semilattice, and the
//! fundamental representation.
//!
//! Monoids built here (and the geometric ones converted through
//! [`crate::monoid::to_table`]) are stored as explicit multiplication
//! tables once, so that congruence and Green computations are global table
//! lookups.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// An injective partial function on `{0..ground-1}`, stored as sorted
/// (source, target) pairs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SetPartialMap {
    pub ground: usize,
    pub pairs: Vec<(usize, usize)>,
}

impl SetPartialMap {
    pub fn new(ground: usize, mut pairs: Vec<(usize, usize)>) -> SetPartialMap {
        pairs.sort_unstable();
        let map = SetPartialMap { ground, pairs };
        debug_assert!(map.is_valid());
        map
    }

    pub fn identity(ground: usize) -> SetPartialMap {
        SetPartialMap::new(ground, (0..ground).map(|i| (i, i)).collect())
    }

    pub fn idempotent_on(ground: usize, dom: &BTreeSet<usize>) -> SetPartialMap {
        SetPartialMap::new(ground, dom.iter().map(|&i| (i, i)).collect())
    }

    pub fn from_full_perm(images: &[usize]) -> SetPartialMap {
        SetPartialMap::new(images.len(), images.iter().copied().enumerate().collect())
    }

    fn is_valid(&self) -> bool {
        let mut src = BTreeSet::new();
        let mut dst = BTreeSet::new();
        self.pairs.iter().all(|&(s, t)| {
            s < self.ground && t < self.ground && src.insert(s) && dst.insert(t)
        })
    }

    pub fn domain(&self) -> BTreeSet<usize> {
        self.pairs.iter().map(|&(s, _)| s).collect()
    }

    pub fn image(&self) -> BTreeSet<usize> {
        self.pairs.iter().map(|&(_, t)| t).collect()
    }

    pub fn apply(&self, x: usize) -> Option<usize> {
        self.pairs.iter().find(|&&(s, _)| s == x).map(|&(_, t)| t)
    }

    /// Left-to-right composition: `x·(ab) = (x·a)·b`.
    pub fn compose(&self, other: &SetPartialMap) -> SetPartialMap {
        let pairs = self
            .pairs
            .iter()
            .filter_map(|&(s, t)| other.apply(t).map(|u| (s, u)))
            .collect();
        SetPartialMap::new(self.ground, pairs)
    }

    pub fn inverse(&self) -> SetPartialMap {
        SetPartialMap::new(self.ground, self.pairs.iter().map(|&(s, t)| (t, s)).collect())
    }

    pub fn is_total(&self) -> bool {
        self.pairs.len() == self.ground
    }
}

/// A finite inverse monoid as a dense multiplication table. Construction
/// validates the inverse-monoid axioms: a two-sided identity exists and
/// every element has a unique generalized inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteInverseMonoid {
    size: usize,
    identity: usize,
    table: Vec<u32>,
    inv: Vec<u32>,
    idempotents: Vec<usize>,
    units: Vec<usize>,
}

impl FiniteInverseMonoid {
    pub fn from_table(size: usize, table: Vec<u32>) -> Result<FiniteInverseMonoid> {
        if table.len() != size * size || size == 0 {
            return Err(Error::NotInverseMonoid("table shape"));
        }
        if table.iter().any(|&v| v as usize >= size) {
            return Err(Error::NotInverseMonoid("entry out of range"));
        }
        let mul = |a: usize, b: usize| table[a * size + b] as usize;
        let mut identity = None;
        for e in 0..size {
            if (0..size).all(|a| mul(e, a) == a && mul(a, e) == a) {
                identity = Some(e);
                break;
            }
        }
        let identity = identity.ok_or(Error::NotInverseMonoid("no identity"))?;
        let mut inv = vec![0u32; size];
        for a in 0..size {
            let mut found = None;
            for b in 0..size {
                if mul(mul(a, b), a) == a && mul(mul(b, a), b) == b {
                    if found.is_some() {
                        return Err(Error::NotInverseMonoid("inverse not unique"));
                    }
                    found = Some(b);
                }
            }
            inv[a] = found.ok_or(Error::NotInverseMonoid("no inverse"))? as u32;
        }
        let idempotents: Vec<usize> = (0..size).filter(|&a| mul(a, a) == a).collect();
        let units: Vec<usize> = (0..size)
            .filter(|&a| {
                let b = inv[a] as usize;
                mul(a, b) == identity && mul(b, a) == identity
            })
            .collect();
        Ok(FiniteInverseMonoid { size, identity, table, inv, idempotents, units })
    }

    /// Builds the table from a sorted, deduplicated element list closed
    /// under the product.
    pub fn from_elements<T: Ord + Clone, F: Fn(&T, &T) -> T>(
        elements: &[T],
        mul: F,
    ) -> Result<FiniteInverseMonoid> {
        let size = elements.len();
        let mut table = vec![0u32; size * size];
        for a in 0..size {
            for b in 0..size {
                let p = mul(&elements[a], &elements[b]);
                let k = elements
                    .binary_search(&p)
                    .map_err(|_| Error::NotInverseMonoid("not closed under product"))?;
                table[a * size + b] = k as u32;
            }
        }
        FiniteInverseMonoid::from_table(size, table)
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }

    pub fn units(&self) -> &[usize] {
        &self.units
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn is_idempotent(&self, a: usize) -> bool {
        self.mul(a, a) == a
    }

    /// Meet table of the idempotent semilattice, indexed by positions in
    /// `idempotents()`.
    pub fn idempotent_meet_table(&self) -> Vec<Vec<usize>> {
        let pos: BTreeMap<usize, usize> =
            self.idempotents.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        self.idempotents
            .iter()
            .map(|&e| self.idempotents.iter().map(|&f| pos[&self.mul(e, f)]).collect())
            .collect()
    }

    /// Factors `a` as (idempotent `a·a⁻¹`, some unit `g` with `e·g = a`),
    /// when such a unit exists.
    pub fn factorize(&self, a: usize) -> Option<(usize, usize)> {
        let e = self.mul(a, self.inv(a));
        self.units.iter().copied().find(|&g| self.mul(e, g) == a).map(|g| (e, g))
    }

    pub fn is_factorizable(&self) -> bool {
        (0..self.size).all(|a| self.factorize(a).is_some())
    }
}

/// `a μ b` iff `a⁻¹ e a = b⁻¹ e b` for every idempotent `e`.
pub fn mu_related(a: usize, b: usize, m: &FiniteInverseMonoid) -> bool {
    m.idempotents().iter().all(|&e| {
        m.mul(m.mul(m.inv(a), e), a) == m.mul(m.mul(m.inv(b), e), b)
    })
}

/// First pair of distinct μ-related elements, in index order.
pub fn mu_witness(m: &FiniteInverseMonoid) -> Option<(usize, usize)> {
    for a in 0..m.len() {
        for b in a + 1..m.len() {
            if mu_related(a, b, m) {
                return Some((a, b));
            }
        }
    }
    None
}

/// μ is the equality relation.
pub fn is_fundamental(m: &FiniteInverseMonoid) -> bool {
    mu_witness(m).is_none()
}

/// The symmetric inverse monoid on `{0..n-1}`: all partial injections.
pub fn symmetric_inverse(n: usize) -> Result<(FiniteInverseMonoid, Vec<SetPartialMap>)> {
    if n > 6 {
        return Err(Error::CapExceeded { cap: 6 });
    }
    let mut elements = Vec::new();
    let universe: Vec<usize> = (0..n).collect();
    for dom_mask in 0..(1u64 << n) {
        let dom: Vec<usize> = universe.iter().copied().filter(|i| dom_mask >> i & 1 == 1).collect();
        let mut used = vec![false; n];
        let mut pairs = Vec::new();
        inject(&dom, 0, n, &mut used, &mut pairs, &mut |pairs| {
            elements.push(SetPartialMap::new(n, pairs.to_vec()));
        });
    }
    elements.sort();
    elements.dedup();
    let m = FiniteInverseMonoid::from_elements(&elements, |a, b| a.compose(b))?;
    Ok((m, elements))
}

fn inject(
    dom: &[usize],
    k: usize,
    n: usize,
    used: &mut Vec<bool>,
    pairs: &mut Vec<(usize, usize)>,
    emit: &mut impl FnMut(&[(usize, usize)]),
) {
    if k == dom.len() {
        emit(pairs);
        return;
    }
    for t in 0..n {
        if !used[t] {
            used[t] = true;
            pairs.push((dom[k], t));
            inject(dom, k + 1, n, used, pairs, emit);
            pairs.pop();
            used[t] = false;
        }
    }
}

/// Ground-set encoding for signed maps: `+i ↦ i-1`, `−i ↦ n+i-1`.
pub fn signed_point(n: usize, x: i64) -> usize {
    let a = x.unsigned_abs() as usize;
    debug_assert!(a >= 1 && a <= n);
    if x > 0 {
        a - 1
    } else {
        n + a - 1
    }
}

/// The monoid of partial signed permutations `I_{±n}`: partial injections
/// on `{±1..±n}` commuting with negation and with symmetric domains.
pub fn partial_signed(n: usize) -> Result<(FiniteInverseMonoid, Vec<SetPartialMap>)> {
    if n > 4 {
        return Err(Error::CapExceeded { cap: 4 });
    }
    let ground = 2 * n;
    let mut elements = Vec::new();
    for dom_mask in 0..(1u64 << n) {
        let dom: Vec<usize> = (0..n).filter(|i| dom_mask >> i & 1 == 1).collect();
        let mut used = vec![false; n];
        let mut imgs: Vec<i64> = Vec::new();
        signed_inject(&dom, 0, n, &mut used, &mut imgs, &mut |imgs| {
            let mut pairs = Vec::new();
            for (k, &d) in dom.iter().enumerate() {
                let i = (d + 1) as i64;
                let t = imgs[k];
                pairs.push((signed_point(n, i), signed_point(n, t)));
                pairs.push((signed_point(n, -i), signed_point(n, -t)));
            }
            elements.push(SetPartialMap::new(ground, pairs));
        });
    }
    elements.sort();
    elements.dedup();
    let m = FiniteInverseMonoid::from_elements(&elements, |a, b| a.compose(b))?;
    Ok((m, elements))
}

fn signed_inject(
    dom: &[usize],
    k: usize,
    n: usize,
    used: &mut Vec<bool>,
    imgs: &mut Vec<i64>,
    emit: &mut impl FnMut(&[i64]),
) {
    if k == dom.len() {
        emit(imgs);
        return;
    }
    for t in 0..n {
        if !used[t] {
            used[t] = true;
            for sign in [1i64, -1] {
                imgs.push(sign * (t as i64 + 1));
                signed_inject(dom, k + 1, n, used, imgs, emit);
                imgs.pop();
            }
            used[t] = false;
        }
    }
}

/// A uniform block permutation: a partition of `{0..n-1}` together with a
/// bijection carrying each block onto a block of an image partition.
/// Canonical form: blocks sorted, image blocks aligned.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct BlockPerm {
    pub n: usize,
    pub blocks: Vec<BTreeSet<usize>>,
    pub images: Vec<BTreeSet<usize>>,
}

impl BlockPerm {
    pub fn new(n: usize, pairs: Vec<(BTreeSet<usize>, BTreeSet<usize>)>) -> BlockPerm {
        let mut pairs = pairs;
        pairs.sort();
        let (blocks, images) = pairs.into_iter().unzip();
        BlockPerm { n, blocks, images }
    }

    pub fn identity_on(p: &crate::systems::Partition) -> BlockPerm {
        BlockPerm::new(p.n, p.blocks.iter().map(|b| (b.clone(), b.clone())).collect())
    }

    pub fn domain_partition(&self) -> crate::systems::Partition {
        crate::systems::Partition::new(self.n, self.blocks.clone())
    }

    /// A full permutation realizing the block bijection (order-preserving
    /// inside each block). Any representative gives the same product.
    pub fn representative(&self) -> Vec<usize> {
        let mut perm = vec![0usize; self.n];
        for (b, im) in self.blocks.iter().zip(&self.images) {
            for (x, y) in b.iter().zip(im.iter()) {
                perm[*x] = *y;
            }
        }
        perm
    }

    /// Product: join the domain partition with the pulled-back one, then
    /// push blocks through both representatives.
    pub fn compose(&self, other: &BlockPerm) -> BlockPerm {
        let pi = self.representative();
        let tau = other.representative();
        let pi_inv = invert_perm(&pi);
        let pulled = other.domain_partition().act(&pi_inv);
        let delta = self.domain_partition().join(&pulled);
        let pairs = delta
            .blocks
            .iter()
            .map(|b| {
                let image: BTreeSet<usize> = b.iter().map(|&x| tau[pi[x]]).collect();
                (b.clone(), image)
            })
            .collect();
        BlockPerm::new(self.n, pairs)
    }
}

fn invert_perm(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0usize; p.len()];
    for (i, &t) in p.iter().enumerate() {
        inv[t] = i;
    }
    inv
}

/// The monoid of uniform block permutations of `{0..n-1}`.
pub fn uniform_block(n: usize) -> Result<(FiniteInverseMonoid, Vec<BlockPerm>)> {
    if n > 5 {
        return Err(Error::CapExceeded { cap: 5 });
    }
    let mut elements = Vec::new();
    for p in crate::systems::all_partitions(n) {
        // All bijections of blocks onto blocks of equal size, realized as
        // aligned (block, image) pairs; the image sets determine a partition
        // automatically.
        let blocks: Vec<BTreeSet<usize>> = p.blocks.clone();
        let k = blocks.len();
        let mut assignment: Vec<Option<BTreeSet<usize>>> = vec![None; k];
        let mut used: Vec<BTreeSet<usize>> = Vec::new();
        block_bijections(n, &blocks, 0, &mut assignment, &mut used, &mut elements);
    }
    elements.sort();
    elements.dedup();
    let m = FiniteInverseMonoid::from_elements(&elements, |a, b| a.compose(b))?;
    Ok((m, elements))
}

fn block_bijections(
    n: usize,
    blocks: &[BTreeSet<usize>],
    k: usize,
    assignment: &mut Vec<Option<BTreeSet<usize>>>,
    used: &mut Vec<BTreeSet<usize>>,
    out: &mut Vec<BlockPerm>,
) {
    if k == blocks.len() {
        let pairs = blocks
            .iter()
            .cloned()
            .zip(assignment.iter().map(|a| a.clone().unwrap()))
            .collect();
        out.push(BlockPerm::new(n, pairs));
        return;
    }
    // Image blocks are arbitrary subsets of matching size forming a
    // partition: choose the image of block k among subsets of the unused
    // points. To stay finite we enumerate only images that are unions
    // compatible with remaining sizes — equivalently, pick |block| points
    // from the unused pool.
    let unused: Vec<usize> = {
        let taken: BTreeSet<usize> = used.iter().flatten().copied().collect();
        (0..n).filter(|x| !taken.contains(x)).collect()
    };
    let size = blocks[k].len();
    let mut choose = Vec::new();
    subsets_of_size(&unused, size, 0, &mut Vec::new(), &mut choose);
    for img in choose {
        let img: BTreeSet<usize> = img.into_iter().collect();
        assignment[k] = Some(img.clone());
        used.push(img);
        block_bijections(n, blocks, k + 1, assignment, used, out);
        used.pop();
        assignment[k] = None;
    }
}

fn subsets_of_size(
    pool: &[usize],
    size: usize,
    start: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if cur.len() == size {
        out.push(cur.clone());
        return;
    }
    for i in start..pool.len() {
        cur.push(pool[i]);
        subsets_of_size(pool, size, i + 1, cur, out);
        cur.pop();
    }
}

/// A system of subsets of a finite ground set: contains the ground set,
/// closed under intersection, stable under the designated permutations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetSystem {
    pub ground: usize,
    pub subsets: Vec<BTreeSet<usize>>,
}

impl SetSystem {
    pub fn new(ground: usize, mut subsets: Vec<BTreeSet<usize>>) -> SetSystem {
        subsets.sort();
        subsets.dedup();
        SetSystem { ground, subsets }
    }

    pub fn power_set(ground: usize) -> SetSystem {
        let mut subsets = Vec::new();
        for mask in 0..(1u64 << ground) {
            subsets.push((0..ground).filter(|i| mask >> i & 1 == 1).collect());
        }
        SetSystem::new(ground, subsets)
    }

    pub fn check_axioms(&self, perms: &[Vec<usize>]) -> Result<()> {
        let full: BTreeSet<usize> = (0..self.ground).collect();
        if !self.subsets.contains(&full) {
            return Err(Error::NotASystem("ground set missing"));
        }
        for a in &self.subsets {
            for b in &self.subsets {
                let i: BTreeSet<usize> = a.intersection(b).copied().collect();
                if self.subsets.binary_search(&i).is_err() {
                    return Err(Error::NotASystem("not closed under intersection"));
                }
            }
            for p in perms {
                let img: BTreeSet<usize> = a.iter().map(|&x| p[x]).collect();
                if self.subsets.binary_search(&img).is_err() {
                    return Err(Error::NotASystem("not stable under the group"));
                }
            }
        }
        Ok(())
    }
}

/// The monoid `{g|_Y : g in the group, Y in the system}` inside the
/// symmetric inverse monoid of the ground set.
pub fn set_system_monoid(
    perms: &[Vec<usize>],
    system: &SetSystem,
) -> Result<(FiniteInverseMonoid, Vec<SetPartialMap>)> {
    system.check_axioms(perms)?;
    let mut elements = Vec::new();
    for y in &system.subsets {
        for p in perms {
            let pairs: Vec<(usize, usize)> = y.iter().map(|&x| (x, p[x])).collect();
            elements.push(SetPartialMap::new(system.ground, pairs));
        }
    }
    elements.sort();
    elements.dedup();
    // The element count must equal the sum over the system of the indices
    // of the pointwise stabilizers.
    debug_assert_eq!(elements.len() as u64, set_system_index_sum(perms, system));
    let m = FiniteInverseMonoid::from_elements(&elements, |a, b| a.compose(b))?;
    Ok((m, elements))
}

/// Σ over the system of the index of the pointwise stabilizer; the order
/// the monoid must have.
pub fn set_system_index_sum(perms: &[Vec<usize>], system: &SetSystem) -> u64 {
    let mut total = 0u64;
    for y in &system.subsets {
        let fix = perms.iter().filter(|p| y.iter().all(|&x| p[x] == x)).count() as u64;
        total += perms.len() as u64 / fix;
    }
    total
}

/// Validates that a square table is a meet semilattice: idempotent,
/// commutative, associative.
pub fn check_semilattice(meet: &[Vec<usize>]) -> Result<()> {
    let n = meet.len();
    for row in meet {
        if row.len() != n || row.iter().any(|&v| v >= n) {
            return Err(Error::NotASemilattice("table shape"));
        }
    }
    for a in 0..n {
        if meet[a][a] != a {
            return Err(Error::NotASemilattice("not idempotent"));
        }
        for b in 0..n {
            if meet[a][b] != meet[b][a] {
                return Err(Error::NotASemilattice("not commutative"));
            }
            for c in 0..n {
                if meet[meet[a][b]][c] != meet[a][meet[b][c]] {
                    return Err(Error::NotASemilattice("not associative"));
                }
            }
        }
    }
    Ok(())
}

/// The Munn semigroup of a finite semilattice: all meet-isomorphisms
/// between principal ideals, as partial maps on the semilattice elements.
pub fn munn_semigroup(meet: &[Vec<usize>]) -> Result<(FiniteInverseMonoid, Vec<SetPartialMap>)> {
    check_semilattice(meet)?;
    let n = meet.len();
    if n > 20 {
        return Err(Error::CapExceeded { cap: 20 });
    }
    let ideal = |e: usize| -> Vec<usize> { (0..n).filter(|&x| meet[x][e] == x).collect() };
    let mut elements: BTreeSet<SetPartialMap> = BTreeSet::new();
    for e in 0..n {
        let de = ideal(e);
        for f in 0..n {
            let df = ideal(f);
            if de.len() != df.len() {
                continue;
            }
            let mut assignment: Vec<Option<usize>> = vec![None; de.len()];
            let mut used = vec![false; df.len()];
            iso_backtrack(meet, &de, &df, 0, &mut assignment, &mut used, &mut |assign| {
                let pairs: Vec<(usize, usize)> =
                    de.iter().copied().zip(assign.iter().map(|a| df[a.unwrap()])).collect();
                elements.insert(SetPartialMap::new(n, pairs));
            });
        }
    }
    let elements: Vec<SetPartialMap> = elements.into_iter().collect();
    let m = FiniteInverseMonoid::from_elements(&elements, |a, b| a.compose(b))?;
    Ok((m, elements))
}

fn iso_backtrack(
    meet: &[Vec<usize>],
    de: &[usize],
    df: &[usize],
    k: usize,
    assignment: &mut Vec<Option<usize>>,
    used: &mut Vec<bool>,
    emit: &mut impl FnMut(&[Option<usize>]),
) {
    if k == de.len() {
        emit(assignment);
        return;
    }
    let pos_in = |list: &[usize], v: usize| list.iter().position(|&x| x == v);
    for cand in 0..df.len() {
        if used[cand] {
            continue;
        }
        // Check meet compatibility against everything already assigned.
        let mut ok = true;
        for prev in 0..k {
            let Some(p_img) = assignment[prev] else { continue };
            let m_src = meet[de[k]][de[prev]];
            let m_dst = meet[df[cand]][df[p_img]];
            match (pos_in(de, m_src), pos_in(df, m_dst)) {
                (Some(si), Some(di)) => {
                    // If the source meet is already assigned it must map to
                    // the target meet; if the source meet is one of the two
                    // endpoints the same consistency applies symmetrically.
                    if si <= k {
                        let expected = if si == k { Some(cand) } else { assignment[si] };
                        if let Some(exp) = expected {
                            if exp != di {
                                ok = false;
                            }
                        }
                    }
                }
                _ => ok = false,
            }
            if !ok {
                break;
            }
        }
        if !ok {
            continue;
        }
        assignment[k] = Some(cand);
        used[cand] = true;
        if k + 1 == de.len() {
            // Full verification at the leaf.
            if full_iso_check(meet, de, df, assignment) {
                emit(assignment);
            }
        } else {
            iso_backtrack(meet, de, df, k + 1, assignment, used, emit);
        }
        used[cand] = false;
        assignment[k] = None;
    }
}

fn full_iso_check(meet: &[Vec<usize>], de: &[usize], df: &[usize], assignment: &[Option<usize>]) -> bool {
    let img = |v: usize| -> usize {
        let i = de.iter().position(|&x| x == v).unwrap();
        df[assignment[i].unwrap()]
    };
    for (i, &x) in de.iter().enumerate() {
        for &y in &de[i..] {
            if img(meet[x][y]) != meet[img(x)][img(y)] {
                return false;
            }
        }
    }
    true
}

/// Munn representation of a table monoid: `a ↦ α_a` where `α_a` acts on the
/// idempotents below `a·a⁻¹` by conjugation. The kernel is μ.
pub fn fundamental_image(
    m: &FiniteInverseMonoid,
) -> Result<(FiniteInverseMonoid, Vec<usize>, Vec<SetPartialMap>)> {
    let idems = m.idempotents();
    let e_pos: BTreeMap<usize, usize> = idems.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let alpha = |a: usize| -> SetPartialMap {
        let aa = m.mul(a, m.inv(a));
        let pairs: Vec<(usize, usize)> = idems
            .iter()
            .enumerate()
            .filter(|&(_, &e)| m.mul(e, aa) == e)
            .map(|(i, &e)| {
                let img = m.mul(m.mul(m.inv(a), e), a);
                (i, e_pos[&img])
            })
            .collect();
        SetPartialMap::new(idems.len(), pairs)
    };
    let mut elements: Vec<SetPartialMap> = (0..m.len()).map(alpha).collect();
    elements.sort();
    elements.dedup();
    let table = FiniteInverseMonoid::from_elements(&elements, |a, b| a.compose(b))?;
    let projection: Vec<usize> =
        (0..m.len()).map(|a| elements.binary_search(&alpha(a)).unwrap()).collect();
    Ok((table, projection, elements))
}

/// Report entry from [`named_isomorphisms`].
#[derive(Debug, Clone)]
pub struct IsoReport {
    pub name: String,
    pub lhs_order: usize,
    pub rhs_order: usize,
    pub pass: bool,
}

/// Runs the structural isomorphism checks between the geometric monoids and
/// their set-theoretic models:
///
/// * Boolean type A against the symmetric inverse monoid,
/// * Boolean type B against the partial signed permutations,
/// * the type-A arrangement monoid against the uniform block permutations,
/// * the face monoid of the positive orthant (a rook monoid) against its
///   reconstruction inside the Munn semigroup of its idempotents.
pub fn named_isomorphisms(n: usize) -> Result<Vec<IsoReport>> {
    crate::monoid::named_isomorphism_reports(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_inverse_counts() {
        assert_eq!(symmetric_inverse(1).unwrap().0.len(), 2);
        let (m, _) = symmetric_inverse(3).unwrap();
        assert_eq!(m.len(), 34);
        assert_eq!(m.units().len(), 6);
        assert_eq!(m.idempotents().len(), 8);
        assert_eq!(symmetric_inverse(4).unwrap().0.len(), 209);
    }

    #[test]
    fn partial_signed_counts() {
        let (m, _) = partial_signed(1).unwrap();
        assert_eq!(m.len(), 3);
        let (m, _) = partial_signed(2).unwrap();
        assert_eq!(m.len(), 17);
        assert_eq!(m.units().len(), 8);
    }

    #[test]
    fn uniform_block_counts() {
        assert_eq!(uniform_block(2).unwrap().0.len(), 3);
        let (m, _) = uniform_block(3).unwrap();
        assert_eq!(m.len(), 16);
        assert_eq!(m.units().len(), 6);
        assert_eq!(uniform_block(4).unwrap().0.len(), 131);
    }

    #[test]
    fn block_perm_product_matches_canonical_form() {
        // ⌊π⌋ with Λ = {{0,1}} is the same element for π = id and π = (01);
        // products with anything must then agree.
        let whole = BlockPerm::new(
            2,
            vec![(BTreeSet::from([0, 1]), BTreeSet::from([0, 1]))],
        );
        let swap = BlockPerm::new(
            2,
            vec![(BTreeSet::from([0]), BTreeSet::from([1])), (BTreeSet::from([1]), BTreeSet::from([0]))],
        );
        assert_eq!(whole.compose(&swap), whole);
        assert_eq!(swap.compose(&whole), whole);
    }

    #[test]
    fn set_system_monoid_examples() {
        // S_3 with the full power set is the symmetric inverse monoid.
        let perms = vec![
            vec![0, 1, 2],
            vec![0, 2, 1],
            vec![1, 0, 2],
            vec![1, 2, 0],
            vec![2, 0, 1],
            vec![2, 1, 0],
        ];
        let sys = SetSystem::power_set(3);
        let (m, _) = set_system_monoid(&perms, &sys).unwrap();
        assert_eq!(m.len(), 34);
        assert_eq!(m.len() as u64, set_system_index_sum(&perms, &sys));
        // Trivial group, single subset.
        let sys = SetSystem::new(2, vec![BTreeSet::from([0, 1])]);
        let (m, _) = set_system_monoid(&[vec![0, 1]], &sys).unwrap();
        assert_eq!(m.len(), 1);
    }

    #[test]
    fn set_system_rejects_bad_axioms() {
        let sys = SetSystem::new(2, vec![BTreeSet::from([0])]);
        assert!(set_system_monoid(&[vec![0, 1]], &sys).is_err());
        // Not closed under the group: {0} alone with the swap.
        let sys = SetSystem::new(2, vec![BTreeSet::from([0, 1]), BTreeSet::from([0])]);
        assert!(set_system_monoid(&[vec![0, 1], vec![1, 0]], &sys).is_err());
    }

    fn chain_meet(k: usize) -> Vec<Vec<usize>> {
        // 0 < 1 < … < k-1, meet = min.
        (0..k).map(|a| (0..k).map(|b| a.min(b)).collect()).collect()
    }

    #[test]
    fn munn_of_chain() {
        let (m, elems) = munn_semigroup(&chain_meet(3)).unwrap();
        // Principal ideals all have different sizes: only the partial
        // identities survive.
        assert_eq!(m.len(), 3);
        assert_eq!(m.idempotents().len(), 3);
        assert!(elems.iter().all(|e| e.pairs.iter().all(|&(s, t)| s == t)));
    }

    #[test]
    fn munn_of_diamond() {
        // bottom 0, atoms 1 and 2, top 3.
        let meet = vec![
            vec![0, 0, 0, 0],
            vec![0, 1, 0, 1],
            vec![0, 0, 2, 2],
            vec![0, 1, 2, 3],
        ];
        let (m, elems) = munn_semigroup(&meet).unwrap();
        assert_eq!(m.len(), 7);
        // The atom swap appears as a unit.
        let swap = SetPartialMap::new(4, vec![(0, 0), (1, 2), (2, 1), (3, 3)]);
        let idx = elems.binary_search(&swap).unwrap();
        assert!(m.units().contains(&idx));
        assert_eq!(m.units().len(), 2);
    }

    #[test]
    fn munn_of_point() {
        let (m, _) = munn_semigroup(&chain_meet(1)).unwrap();
        assert_eq!(m.len(), 1);
    }

    #[test]
    fn munn_rejects_non_semilattice() {
        let bad = vec![vec![0, 1], vec![0, 1]];
        assert!(munn_semigroup(&bad).is_err());
    }

    #[test]
    fn mu_and_fundamentality() {
        let (i3, _) = symmetric_inverse(3).unwrap();
        assert!(is_fundamental(&i3));
        for a in 0..i3.len() {
            assert!(mu_related(a, a, &i3));
        }
        // Distinct units of I_3 are never μ-related.
        for &a in i3.units() {
            for &b in i3.units() {
                if a != b {
                    assert!(!mu_related(a, b, &i3));
                }
            }
        }
        let (ipm1, elems) = partial_signed(1).unwrap();
        let id = elems.binary_search(&SetPartialMap::identity(2)).unwrap();
        let flip = elems
            .binary_search(&SetPartialMap::new(2, vec![(0, 1), (1, 0)]))
            .unwrap();
        assert!(mu_related(id, flip, &ipm1));
        assert!(!is_fundamental(&ipm1));
        let (ipm2, _) = partial_signed(2).unwrap();
        assert!(!is_fundamental(&ipm2));
    }

    #[test]
    fn mu_is_a_congruence_and_idempotent_separating() {
        for m in [partial_signed(2).unwrap().0, symmetric_inverse(3).unwrap().0] {
            for a in 0..m.len() {
                for b in 0..m.len() {
                    if !mu_related(a, b, &m) {
                        continue;
                    }
                    if m.is_idempotent(a) && m.is_idempotent(b) {
                        assert_eq!(a, b, "idempotent separating");
                    }
                    for c in 0..m.len() {
                        assert!(mu_related(m.mul(a, c), m.mul(b, c), &m));
                        assert!(mu_related(m.mul(c, a), m.mul(c, b), &m));
                    }
                }
            }
        }
    }

    #[test]
    fn fundamental_image_examples() {
        let (i3, _) = symmetric_inverse(3).unwrap();
        let (img, _, _) = fundamental_image(&i3).unwrap();
        assert_eq!(img.len(), i3.len());
        let (ipm1, _) = partial_signed(1).unwrap();
        let (img, proj, _) = fundamental_image(&ipm1).unwrap();
        assert_eq!(img.len(), 2);
        // Kernel is μ.
        for a in 0..ipm1.len() {
            for b in 0..ipm1.len() {
                assert_eq!(proj[a] == proj[b], mu_related(a, b, &ipm1));
            }
        }
        // The construction is idempotent.
        let (img2, _, _) = fundamental_image(&img).unwrap();
        assert_eq!(img2.len(), img.len());
    }

    #[test]
    fn inverse_monoid_validation() {
        // A table with a non-unique inverse (two-element right-zero band)
        // must be rejected.
        let table = vec![0u32, 1, 0, 1];
        assert!(FiniteInverseMonoid::from_table(2, table).is_err());
    }
}
