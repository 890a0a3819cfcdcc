//! Finite real reflection groups from root systems.
//!
//! Groups are stored fully enumerated as dense element lists in a canonical
//! (lexicographic) order, which keeps isotropy computations and coset
//! partitioning trivial at the scale this crate targets (everything up to
//! `F4` comfortably, `E6` as a stretch). `E7`/`E8` are out of reach of full
//! enumeration and are refused by the element cap.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::linalg::{dot, is_zero_vec, rat, ratio, Matrix, Rat, Subspace};
use crate::{Error, Result};

/// Default cap on group enumeration.
pub const DEFAULT_GROUP_CAP: usize = 10_000_000;

/// Families of root systems with fully rational standard realizations.
///
/// `G2` is realized crystallographically inside the plane `x1+x2+x3 = 0` of
/// `Q^3`; `E6` exists for the optional generic enumeration of its
/// arrangement monoid and lives in `Q^8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    D,
    G2,
    F4,
    E6,
}

/// A root system together with a distinguished simple system.
#[derive(Debug, Clone)]
pub struct RootSystem {
    pub family: Family,
    /// The subscript: `A` uses ambient `n` for `A_{n-1}`.
    pub rank_param: usize,
    pub ambient_dim: usize,
    pub roots: Vec<Vec<Rat>>,
    pub simple_roots: Vec<Vec<Rat>>,
}

fn unit(n: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); n];
    v[i] = rat(1);
    v
}

fn vsub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn vadd(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn vneg(a: &[Rat]) -> Vec<Rat> {
    a.iter().map(|x| -x).collect()
}

impl RootSystem {
    /// Standard root system for a classical family. For `A` the parameter is
    /// the ambient dimension `n` (the system is `A_{n-1}`); for `B`/`D` it is
    /// the rank `n`. Degenerate small parameters follow the usual
    /// conventions: `A` with `n = 1`, `B_1 = {±x1}`, `D_2`, `D_3` all exist.
    pub fn classical(family: Family, n: usize) -> Result<RootSystem> {
        let mut roots: Vec<Vec<Rat>> = Vec::new();
        let mut simple: Vec<Vec<Rat>> = Vec::new();
        match family {
            Family::A => {
                if n == 0 {
                    return Err(Error::Unsupported("A family needs ambient n >= 1"));
                }
                for i in 0..n {
                    for j in 0..n {
                        if i != j {
                            roots.push(vsub(&unit(n, i), &unit(n, j)));
                        }
                    }
                }
                for i in 0..n.saturating_sub(1) {
                    simple.push(vsub(&unit(n, i), &unit(n, i + 1)));
                }
            }
            Family::B => {
                if n == 0 {
                    return Err(Error::Unsupported("B family needs n >= 1"));
                }
                for i in 0..n {
                    roots.push(unit(n, i));
                    roots.push(vneg(&unit(n, i)));
                }
                for i in 0..n {
                    for j in i + 1..n {
                        for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                            let mut v = vec![Rat::zero(); n];
                            v[i] = rat(si);
                            v[j] = rat(sj);
                            roots.push(v);
                        }
                    }
                }
                for i in 0..n.saturating_sub(1) {
                    simple.push(vsub(&unit(n, i), &unit(n, i + 1)));
                }
                simple.push(unit(n, n - 1));
            }
            Family::D => {
                if n < 2 {
                    return Err(Error::Unsupported("D family needs n >= 2"));
                }
                for i in 0..n {
                    for j in i + 1..n {
                        for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                            let mut v = vec![Rat::zero(); n];
                            v[i] = rat(si);
                            v[j] = rat(sj);
                            roots.push(v);
                        }
                    }
                }
                for i in 0..n - 1 {
                    simple.push(vsub(&unit(n, i), &unit(n, i + 1)));
                }
                simple.push(vadd(&unit(n, n - 2), &unit(n, n - 1)));
            }
            Family::G2 | Family::F4 | Family::E6 => {
                return Err(Error::Unsupported("use the dedicated constructor"))
            }
        }
        let ambient = n;
        Ok(RootSystem { family, rank_param: n, ambient_dim: ambient, roots, simple_roots: simple })
    }

    /// Crystallographic `G2` inside the plane `x1+x2+x3 = 0` of `Q^3`.
    pub fn g2() -> RootSystem {
        let n = 3;
        let short =
            [vsub(&unit(n, 0), &unit(n, 1)), vsub(&unit(n, 1), &unit(n, 2)), vsub(&unit(n, 0), &unit(n, 2))];
        let mut roots = Vec::new();
        for s in &short {
            roots.push(s.clone());
            roots.push(vneg(s));
        }
        // Long roots 2x_i - x_j - x_k.
        for i in 0..3 {
            let mut v = vec![rat(-1); 3];
            v[i] = rat(2);
            roots.push(v.clone());
            roots.push(vneg(&v));
        }
        let simple = vec![
            vsub(&unit(n, 0), &unit(n, 1)),
            vec![rat(-2), rat(1), rat(1)],
        ];
        RootSystem { family: Family::G2, rank_param: 2, ambient_dim: 3, roots, simple_roots: simple }
    }

    /// `F4` in `Q^4`: `±x_i`, `±x_i±x_j`, and `(±x1±x2±x3±x4)/2`.
    pub fn f4() -> RootSystem {
        let n = 4;
        let mut roots = Vec::new();
        for i in 0..n {
            roots.push(unit(n, i));
            roots.push(vneg(&unit(n, i)));
        }
        for i in 0..n {
            for j in i + 1..n {
                for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                    let mut v = vec![Rat::zero(); n];
                    v[i] = rat(si);
                    v[j] = rat(sj);
                    roots.push(v);
                }
            }
        }
        for mask in 0..16u32 {
            let v: Vec<Rat> =
                (0..4).map(|i| if mask >> i & 1 == 1 { ratio(-1, 2) } else { ratio(1, 2) }).collect();
            roots.push(v);
        }
        let simple = vec![
            vsub(&unit(n, 1), &unit(n, 2)),
            vsub(&unit(n, 2), &unit(n, 3)),
            unit(n, 3),
            vec![ratio(1, 2), ratio(-1, 2), ratio(-1, 2), ratio(-1, 2)],
        ];
        RootSystem { family: Family::F4, rank_param: 4, ambient_dim: 4, roots, simple_roots: simple }
    }

    /// `E6` in `Q^8` (the span of the roots is 6-dimensional): `±x_i±x_j`
    /// for `i<j<=5` together with the half-integer vectors
    /// `±(x8-x7-x6+Σ±x_i)/2` carrying an even number of minus signs among
    /// the first five coordinates.
    pub fn e6() -> RootSystem {
        let n = 8;
        let mut roots = Vec::new();
        for i in 0..5 {
            for j in i + 1..5 {
                for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                    let mut v = vec![Rat::zero(); n];
                    v[i] = rat(si);
                    v[j] = rat(sj);
                    roots.push(v);
                }
            }
        }
        for mask in 0..32u32 {
            if (mask.count_ones() & 1) == 1 {
                continue;
            }
            for outer in [1i64, -1] {
                let mut v: Vec<Rat> = (0..5)
                    .map(|i| ratio(if mask >> i & 1 == 1 { -outer } else { outer }, 2))
                    .collect();
                v.push(ratio(-outer, 2));
                v.push(ratio(-outer, 2));
                v.push(ratio(outer, 2));
                roots.push(v);
            }
        }
        let mut a1 = vec![ratio(1, 2), ratio(-1, 2), ratio(-1, 2), ratio(-1, 2), ratio(-1, 2)];
        a1.push(ratio(-1, 2));
        a1.push(ratio(-1, 2));
        a1.push(ratio(1, 2));
        let simple = vec![
            a1,
            vadd(&unit(n, 0), &unit(n, 1)),
            vsub(&unit(n, 1), &unit(n, 0)),
            vsub(&unit(n, 2), &unit(n, 1)),
            vsub(&unit(n, 3), &unit(n, 2)),
            vsub(&unit(n, 4), &unit(n, 3)),
        ];
        RootSystem { family: Family::E6, rank_param: 6, ambient_dim: 8, roots, simple_roots: simple }
    }
}

/// A finite group of invertible rational matrices, fully enumerated.
/// Elements are kept sorted lexicographically by entries, so indices are
/// stable across runs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixGroup {
    pub ambient_dim: usize,
    pub generators: Vec<Matrix>,
    pub elements: Vec<Matrix>,
}

impl MatrixGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn trivial(n: usize) -> MatrixGroup {
        MatrixGroup { ambient_dim: n, generators: Vec::new(), elements: vec![Matrix::identity(n)] }
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        self.elements.binary_search(m).is_ok()
    }

    pub fn index_of(&self, m: &Matrix) -> Option<usize> {
        self.elements.binary_search(m).ok()
    }

    /// The subgroup of elements fixing `x` pointwise (checked on basis
    /// vectors). Isotropy in this crate always means the pointwise fixer,
    /// not the setwise stabilizer.
    pub fn isotropy_subgroup(&self, x: &Subspace) -> MatrixGroup {
        let fixed: Vec<Matrix> = self
            .elements
            .iter()
            .filter(|g| fixes_pointwise(g, x))
            .cloned()
            .collect();
        MatrixGroup { ambient_dim: self.ambient_dim, generators: fixed.clone(), elements: fixed }
    }

    /// Order of the pointwise isotropy subgroup, without materializing it.
    pub fn isotropy_order(&self, x: &Subspace) -> usize {
        self.elements.iter().filter(|g| fixes_pointwise(g, x)).count()
    }
}

pub fn fixes_pointwise(g: &Matrix, x: &Subspace) -> bool {
    let b = x.basis();
    b.mul(g) == *b
}

/// Reflection in the hyperplane orthogonal to `root`:
/// `s_v = I − 2 v vᵀ / (v·v)` acting on row vectors.
pub fn reflection_matrix(root: &[Rat]) -> Result<Matrix> {
    if is_zero_vec(root) {
        return Err(Error::ZeroVector);
    }
    let n = root.len();
    let vv = dot(root, root);
    let mut m = Matrix::identity(n);
    let two = rat(2);
    for i in 0..n {
        if root[i].is_zero() {
            continue;
        }
        for j in 0..n {
            if root[j].is_zero() {
                continue;
            }
            let delta = &two * &root[i] * &root[j] / &vv;
            *m.at_mut(i, j) -= delta;
        }
    }
    Ok(m)
}

/// Smallest multiplication-closed set of matrices containing the generators
/// and the identity, enumerated breadth-first and returned sorted.
pub fn enumerate_closure(gens: &[Matrix], cap: usize) -> Result<MatrixGroup> {
    let n = gens.first().map(|g| g.rows()).unwrap_or(1);
    for g in gens {
        if g.rows() != n || g.cols() != n {
            return Err(Error::DimensionMismatch { expected: n, got: g.rows() });
        }
        if !g.is_invertible() {
            return Err(Error::SingularMatrix);
        }
    }
    let mut seen: BTreeSet<Matrix> = BTreeSet::new();
    let mut queue: VecDeque<Matrix> = VecDeque::new();
    let id = Matrix::identity(n);
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(m) = queue.pop_front() {
        for g in gens {
            let p = m.mul(g);
            if !seen.contains(&p) {
                if seen.len() >= cap {
                    return Err(Error::CapExceeded { cap });
                }
                seen.insert(p.clone());
                queue.push_back(p);
            }
        }
    }
    let elements: Vec<Matrix> = seen.into_iter().collect();
    Ok(MatrixGroup { ambient_dim: n, generators: gens.to_vec(), elements })
}

/// The reflection group `W(Φ) = ⟨s_v | v ∈ Φ⟩`, generated from the simple
/// reflections (the full set of roots gives the same group).
pub fn weyl_group(phi: &RootSystem, cap: usize) -> Result<MatrixGroup> {
    let gens: Vec<Matrix> = if phi.simple_roots.is_empty() {
        Vec::new()
    } else {
        phi.simple_roots.iter().map(|r| reflection_matrix(r)).collect::<Result<_>>()?
    };
    if gens.is_empty() {
        return Ok(MatrixGroup::trivial(phi.ambient_dim));
    }
    enumerate_closure(&gens, cap)
}

/// Isotropy subgroup computed through the reflection description: the
/// closure of the reflections `s_v` for roots `v` orthogonal to `x`.
/// For a reflection group this agrees elementwise with
/// [`MatrixGroup::isotropy_subgroup`].
pub fn steinberg_isotropy(phi: &RootSystem, x: &Subspace) -> Result<MatrixGroup> {
    let mut gens = Vec::new();
    for v in &phi.roots {
        let orth = (0..x.basis().rows()).all(|r| dot(v, x.basis().row(r)).is_zero());
        if orth {
            gens.push(reflection_matrix(v)?);
        }
    }
    if gens.is_empty() {
        return Ok(MatrixGroup::trivial(phi.ambient_dim));
    }
    enumerate_closure(&gens, DEFAULT_GROUP_CAP)
}

/// A signed permutation of `{1..n}`: `images[i-1] = ±j` records `i ↦ ±j`,
/// with `(−i) ↦ ∓j` implied.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SignedPerm {
    pub images: Vec<i64>,
}

impl SignedPerm {
    pub fn identity(n: usize) -> SignedPerm {
        SignedPerm { images: (1..=n as i64).collect() }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn is_valid(&self) -> bool {
        let n = self.n();
        let mut seen = vec![false; n];
        for &im in &self.images {
            let a = im.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a - 1] {
                return false;
            }
            seen[a - 1] = true;
        }
        true
    }

    pub fn sign_flips(&self) -> usize {
        self.images.iter().filter(|&&im| im < 0).count()
    }

    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        let images = self
            .images
            .iter()
            .map(|&im| {
                let t = other.images[im.unsigned_abs() as usize - 1];
                if im < 0 {
                    -t
                } else {
                    t
                }
            })
            .collect();
        SignedPerm { images }
    }
}

/// The monomial `±1` matrix realizing a signed permutation, under the
/// correspondences sending the reflection that swaps coordinates `i,j` to
/// `(i,j)(−i,−j)` and the coordinate sign change to `(i,−i)`.
///
/// Family `A` admits no sign flips and family `D` only an even number.
pub fn signed_perm_embed(p: &SignedPerm, family: Family) -> Result<Matrix> {
    if !p.is_valid() {
        return Err(Error::ParityViolation("images are not a signed permutation"));
    }
    match family {
        Family::A => {
            if p.sign_flips() > 0 {
                return Err(Error::ParityViolation("family A admits no sign flips"));
            }
        }
        Family::B => {}
        Family::D => {
            if !p.sign_flips().is_multiple_of(2) {
                return Err(Error::ParityViolation("family D needs an even number of sign flips"));
            }
        }
        _ => return Err(Error::Unsupported("signed permutations model only A/B/D")),
    }
    let n = p.n();
    let mut m = Matrix::zero(n, n);
    for i in 0..n {
        let im = p.images[i];
        let j = im.unsigned_abs() as usize - 1;
        *m.at_mut(i, j) = rat(im.signum());
    }
    Ok(m)
}

/// All signed permutations of `{1..n}` compatible with the family.
pub fn signed_perms(n: usize, family: Family) -> Vec<SignedPerm> {
    let mut perms: Vec<Vec<usize>> = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for j in 0..n {
            if !used[j] {
                used[j] = true;
                cur.push(j);
                rec(n, cur, used, out);
                cur.pop();
                used[j] = false;
            }
        }
    }
    rec(n, &mut cur, &mut vec![false; n], &mut perms);
    let mut out = Vec::new();
    for perm in &perms {
        let max_mask: u32 = match family {
            Family::A => 1,
            _ => 1 << n,
        };
        for mask in 0..max_mask {
            if family == Family::D && mask.count_ones() % 2 != 0 {
                continue;
            }
            let images = (0..n)
                .map(|i| {
                    let j = (perm[i] + 1) as i64;
                    if mask >> i & 1 == 1 {
                        -j
                    } else {
                        j
                    }
                })
                .collect();
            out.push(SignedPerm { images });
        }
    }
    out.sort();
    out
}

/// All distinct parabolic subgroups: conjugates `w⁻¹ W_I w` of the special
/// parabolics `W_I = ⟨s_v | v ∈ I⟩` over subsets `I` of the simple system.
pub fn parabolic_subgroups(phi: &RootSystem, w: &MatrixGroup, cap: usize) -> Result<Vec<MatrixGroup>> {
    let k = phi.simple_roots.len();
    let mut seen: BTreeSet<Vec<Matrix>> = BTreeSet::new();
    for subset in 0..(1u32 << k) {
        let gens: Vec<Matrix> = (0..k)
            .filter(|i| subset >> i & 1 == 1)
            .map(|i| reflection_matrix(&phi.simple_roots[i]))
            .collect::<Result<_>>()?;
        let special = if gens.is_empty() {
            MatrixGroup::trivial(phi.ambient_dim)
        } else {
            enumerate_closure(&gens, cap)?
        };
        for g in &w.elements {
            let ginv = g.inverse()?;
            let mut conj: Vec<Matrix> =
                special.elements.iter().map(|m| ginv.mul(m).mul(g)).collect();
            conj.sort();
            seen.insert(conj);
        }
    }
    Ok(seen
        .into_iter()
        .map(|elements| MatrixGroup {
            ambient_dim: phi.ambient_dim,
            generators: elements.clone(),
            elements,
        })
        .collect())
}
