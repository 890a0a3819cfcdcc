//! Rational polyhedral cones and their face combinatorics.
//!
//! Faces are enumerated by subset feasibility: a subset `S` of the
//! generators spans a face exactly when some functional vanishes on `S` and
//! is strictly positive on the remaining generators. Feasibility of the
//! strict system is decided by exact Fourier-Motzkin elimination, which at
//! the supported scale (≤ 12 generators, ambient ≤ 6) is both simple and
//! fast.
//!
//! On top of the lattice sit two monoids: the monoid of partial maps on
//! faces, and the reflection monoid of the system generated by the face
//! spans. The comparison map between them is a surjective homomorphism and
//! an isomorphism exactly when the cone (modulo lineality) is simplicial.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::groups::MatrixGroup;
use crate::linalg::{apply_row, dot, is_zero_vec, Matrix, Rat, Subspace};
use crate::set_monoids::FiniteInverseMonoid;
use crate::systems::{System, DEFAULT_SYSTEM_CAP};
use crate::{Error, Result};

pub const MAX_GENERATORS: usize = 12;
pub const MAX_CONE_AMBIENT: usize = 6;

/// A convex polyhedral cone given by generators (redundant generators are
/// permitted).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cone {
    pub ambient_dim: usize,
    pub generators: Vec<Vec<Rat>>,
}

impl Cone {
    pub fn new(ambient_dim: usize, generators: Vec<Vec<Rat>>) -> Result<Cone> {
        for g in &generators {
            if g.len() != ambient_dim {
                return Err(Error::DimensionMismatch { expected: ambient_dim, got: g.len() });
            }
            if is_zero_vec(g) {
                return Err(Error::ZeroVector);
            }
        }
        Ok(Cone { ambient_dim, generators })
    }

    /// Linear span of the whole cone.
    pub fn span(&self) -> Subspace {
        Subspace::from_vectors(self.ambient_dim, &self.generators)
    }
}

/// A face, recorded by the set of generators lying on it plus the linear
/// span of those generators.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Face {
    pub generator_set: BTreeSet<usize>,
    pub span: Subspace,
}

/// The meet semilattice of faces, closed under intersection, with the
/// minimal face `σ ∩ −σ` at the bottom and the cone itself at the top.
#[derive(Debug, Clone)]
pub struct FaceLattice {
    pub cone: Cone,
    pub faces: Vec<Face>,
    /// Index of the minimal face.
    pub minimal: usize,
    /// Index of σ itself.
    pub top: usize,
}

impl FaceLattice {
    pub fn index_of_span(&self, span: &Subspace) -> Option<usize> {
        self.faces.iter().position(|f| &f.span == span)
    }

    pub fn index_of_set(&self, set: &BTreeSet<usize>) -> Option<usize> {
        self.faces.iter().position(|f| &f.generator_set == set)
    }

    /// Meet of two faces: generators on both.
    pub fn meet(&self, a: usize, b: usize) -> usize {
        let s: BTreeSet<usize> = self.faces[a]
            .generator_set
            .intersection(&self.faces[b].generator_set)
            .copied()
            .collect();
        self.index_of_set(&s).expect("face lattice is intersection closed")
    }
}

/// Scales a constraint row by a positive factor so its first nonzero entry
/// has absolute value 1. Sign-preserving: strict inequalities survive.
fn scale_row(v: &[Rat]) -> Vec<Rat> {
    use num_traits::Signed;
    let mut out = v.to_vec();
    if let Some(lead) = out.iter().find(|x| !x.is_zero()).cloned() {
        let scale = lead.abs().recip();
        for x in &mut out {
            *x = &*x * &scale;
        }
    }
    out
}

/// Decides `∃ t : C·t > 0` (strictly, componentwise) by Fourier-Motzkin.
/// Rows are rescaled (positively) and deduplicated at each step.
fn fm_strictly_feasible(rows: Vec<Vec<Rat>>) -> bool {
    let mut rows = rows;
    let mut width = rows.first().map(|r| r.len()).unwrap_or(0);
    loop {
        rows = {
            let mut seen = BTreeSet::new();
            let mut out = Vec::new();
            for r in rows {
                let r = scale_row(&r);
                if seen.insert(r.clone()) {
                    out.push(r);
                }
            }
            out
        };
        if rows.iter().any(|r| is_zero_vec(r)) {
            return false; // "0 > 0"
        }
        if rows.is_empty() {
            return true;
        }
        if width == 0 {
            // Nonempty rows of width 0 would have been caught as zero rows.
            return true;
        }
        // Eliminate the last variable.
        let col = width - 1;
        let mut zero_rows = Vec::new();
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for r in rows {
            let c = r[col].clone();
            if c.is_zero() {
                zero_rows.push(r[..col].to_vec());
            } else if c > Rat::zero() {
                pos.push(r);
            } else {
                neg.push(r);
            }
        }
        let mut next = zero_rows;
        for p in &pos {
            for q in &neg {
                // p: a·t' + c_p t_col > 0 (c_p > 0), q: b·t' + c_q t_col > 0
                // (c_q < 0): combine c_p·q − c_q·p restricted to t'.
                let cp = &p[col];
                let cq = &q[col];
                let combined: Vec<Rat> = (0..col)
                    .map(|i| cp * &q[i] - cq * &p[i])
                    .collect();
                next.push(combined);
            }
        }
        rows = next;
        width = col;
    }
}

/// Is there a functional vanishing on the `zero` vectors and strictly
/// positive on the `pos` vectors?
fn supporting_functional_exists(ambient: usize, zero: &[&[Rat]], pos: &[&[Rat]]) -> bool {
    if pos.is_empty() {
        return true; // u = 0 supports the whole cone
    }
    let kernel = if zero.is_empty() {
        Matrix::identity(ambient)
    } else {
        Matrix::from_rows(zero.iter().map(|r| r.to_vec()).collect()).kernel_rows()
    };
    if kernel.rows() == 0 {
        return false;
    }
    // u = t·kernel; constraint rows C[v][k] = kernel_k · v.
    let rows: Vec<Vec<Rat>> = pos
        .iter()
        .map(|v| (0..kernel.rows()).map(|k| dot(kernel.row(k), v)).collect())
        .collect();
    fm_strictly_feasible(rows)
}

/// Enumerates the face lattice by subset feasibility. Every returned face
/// satisfies `σ ∩ span(face) = face` and the lattice is closed under
/// intersection.
pub fn face_lattice(cone: &Cone) -> Result<FaceLattice> {
    let k = cone.generators.len();
    if k > MAX_GENERATORS {
        return Err(Error::CapExceeded { cap: MAX_GENERATORS });
    }
    if cone.ambient_dim > MAX_CONE_AMBIENT {
        return Err(Error::CapExceeded { cap: MAX_CONE_AMBIENT });
    }
    let mut faces = Vec::new();
    for mask in 0..(1u64 << k) {
        let on: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).collect();
        let off: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 0).collect();
        let zero: Vec<&[Rat]> = on.iter().map(|&i| cone.generators[i].as_slice()).collect();
        let pos: Vec<&[Rat]> = off.iter().map(|&i| cone.generators[i].as_slice()).collect();
        if supporting_functional_exists(cone.ambient_dim, &zero, &pos) {
            let set: BTreeSet<usize> = on.into_iter().collect();
            let vectors: Vec<Vec<Rat>> =
                set.iter().map(|&i| cone.generators[i].clone()).collect();
            faces.push(Face {
                generator_set: set,
                span: Subspace::from_vectors(cone.ambient_dim, &vectors),
            });
        }
    }
    faces.sort();
    faces.dedup();
    let minimal = faces
        .iter()
        .position(|f| faces.iter().all(|g| f.generator_set.is_subset(&g.generator_set)))
        .expect("the feasible subsets are closed under intersection");
    let all: BTreeSet<usize> = (0..k).collect();
    let top = faces.iter().position(|f| f.generator_set == all).expect("σ supports itself");
    Ok(FaceLattice { cone: cone.clone(), faces, minimal, top })
}

/// The minimal face `σ ∩ −σ`, the largest subspace contained in the cone.
pub fn minimal_face(cone: &Cone) -> Result<Face> {
    let lattice = face_lattice(cone)?;
    Ok(lattice.faces[lattice.minimal].clone())
}

/// Simpliciality of the cone modulo its lineality space: the extreme rays
/// of the quotient must be linearly independent. The atoms of the face
/// lattice just above the minimal face are those rays.
pub fn is_simplicial(cone: &Cone) -> Result<bool> {
    let lattice = face_lattice(cone)?;
    Ok(lattice_is_simplicial(&lattice))
}

pub fn lattice_is_simplicial(lattice: &FaceLattice) -> bool {
    let min_span_dim = lattice.faces[lattice.minimal].span.dim();
    let sigma_dim = lattice.cone.span().dim();
    let atoms = lattice
        .faces
        .iter()
        .enumerate()
        .filter(|(i, f)| {
            *i != lattice.minimal
                && lattice.faces.iter().enumerate().all(|(j, g)| {
                    j == *i
                        || j == lattice.minimal
                        || !g.generator_set.is_subset(&f.generator_set)
                        || g.generator_set == f.generator_set
                })
        })
        .count();
    atoms == sigma_dim - min_span_dim
}

/// Checks that every group element maps the cone onto itself (generator
/// images must lie on faces of the same lattice — equivalently the span
/// action permutes face spans and membership is preserved).
fn check_group_preserves_cone(w: &MatrixGroup, lattice: &FaceLattice) -> Result<()> {
    // Facet description of σ: inward normals of the faces of codimension
    // one inside span σ.
    let sigma_span = lattice.cone.span();
    let facets: Vec<Vec<Rat>> = {
        let mut out = Vec::new();
        let target = sigma_span.dim().saturating_sub(1);
        for f in &lattice.faces {
            if f.span.dim() != target || f.generator_set.len() == lattice.cone.generators.len() {
                continue;
            }
            // Normal direction: orthogonal to the face span inside span σ.
            let perp = f.span.orthogonal_complement().intersect(&sigma_span)?;
            if perp.dim() != 1 {
                continue;
            }
            let mut normal = perp.basis().row(0).to_vec();
            // Orient inward.
            let sample = lattice
                .cone
                .generators
                .iter()
                .map(|g| dot(&normal, g))
                .find(|v| !v.is_zero());
            if let Some(v) = sample {
                if v < Rat::zero() {
                    normal = normal.iter().map(|x| -x).collect();
                }
            }
            if lattice.cone.generators.iter().any(|g| dot(&normal, g) < Rat::zero()) {
                continue; // not a valid supporting facet (shouldn't happen)
            }
            out.push(normal);
        }
        out
    };
    let in_cone = |v: &[Rat]| -> bool {
        sigma_span.contains_vector(v) && facets.iter().all(|u| dot(u, v) >= Rat::zero())
    };
    for g in &w.elements {
        for gen in &lattice.cone.generators {
            if !in_cone(&apply_row(gen, g)) {
                return Err(Error::NotPreserved("cone"));
            }
        }
    }
    Ok(())
}

/// The system of subspaces generated by the face spans: all intersections,
/// with the empty intersection taken to be the ambient space.
pub fn cone_system(w: &MatrixGroup, cone: &Cone) -> Result<System> {
    let lattice = face_lattice(cone)?;
    check_group_preserves_cone(w, &lattice)?;
    let n = cone.ambient_dim;
    let mut set: BTreeSet<Subspace> = BTreeSet::new();
    set.insert(Subspace::full(n));
    let spans: Vec<Subspace> = lattice.faces.iter().map(|f| f.span.clone()).collect();
    for s in &spans {
        set.insert(s.clone());
    }
    let mut queue: Vec<Subspace> = set.iter().cloned().collect();
    while let Some(x) = queue.pop() {
        for s in &spans {
            let y = x.intersect(s)?;
            if set.insert(y.clone()) {
                if set.len() > DEFAULT_SYSTEM_CAP {
                    return Err(Error::CapExceeded { cap: DEFAULT_SYSTEM_CAP });
                }
                queue.push(y);
            }
        }
    }
    let subspaces: Vec<Subspace> = set.into_iter().collect();
    let system = crate::systems::generate_system(w, &subspaces, DEFAULT_SYSTEM_CAP)?;
    // The face spans already generate a group-stable family, so the closure
    // must not have added anything beyond the intersections.
    if system.len() != subspaces.len() {
        return Err(Error::NotPreserved("face spans"));
    }
    Ok(system)
}

/// An element of the face monoid: a face together with the coset of units
/// acting on it (pointwise agreement on the face).
type FaceElement = (usize, usize); // (face index, canonical unit index)

/// Labels of the face-monoid elements: the generator set of the face and
/// the canonical unit index.
pub type FaceMonoidLabels = Vec<(BTreeSet<usize>, usize)>;

/// The monoid of partial maps `w|_τ` on the faces of the cone. Units are
/// the group, idempotents correspond to the faces.
pub fn face_monoid(
    w: &MatrixGroup,
    cone: &Cone,
) -> Result<(FiniteInverseMonoid, FaceMonoidLabels)> {
    let lattice = face_lattice(cone)?;
    check_group_preserves_cone(w, &lattice)?;
    let ng = w.elements.len();
    let nf = lattice.faces.len();

    // Face action table: g maps face τ to the face with span (span τ)·g.
    let mut act = vec![0usize; nf * ng];
    for (fi, f) in lattice.faces.iter().enumerate() {
        for (gi, g) in w.elements.iter().enumerate() {
            let img = f.span.apply(g)?;
            let k = lattice.index_of_span(&img).ok_or(Error::NotPreserved("face lattice"))?;
            act[fi * ng + gi] = k;
        }
    }
    // Pointwise-fixing classes: g ~ h on τ iff they agree on span τ.
    // Canonical representative: smallest unit index with the same
    // restriction matrix.
    let mut canon = vec![0usize; nf * ng];
    for (fi, f) in lattice.faces.iter().enumerate() {
        let mut by_restriction: BTreeMap<Matrix, usize> = BTreeMap::new();
        for (gi, g) in w.elements.iter().enumerate() {
            let r = f.span.basis().mul(g);
            let entry = by_restriction.entry(r).or_insert(gi);
            canon[fi * ng + gi] = *entry;
        }
    }
    let mut elements: Vec<FaceElement> = Vec::new();
    for fi in 0..nf {
        let mut reps: BTreeSet<usize> = BTreeSet::new();
        for gi in 0..ng {
            reps.insert(canon[fi * ng + gi]);
        }
        for gi in reps {
            elements.push((fi, gi));
        }
    }
    elements.sort();
    let index: BTreeMap<FaceElement, usize> =
        elements.iter().enumerate().map(|(i, &e)| (e, i)).collect();

    // Group tables.
    let mut cayley = vec![0usize; ng * ng];
    for i in 0..ng {
        for j in 0..ng {
            cayley[i * ng + j] = w
                .index_of(&w.elements[i].mul(&w.elements[j]))
                .ok_or(Error::NotASystem("group not closed"))?;
        }
    }
    let id_idx = w.index_of(&Matrix::identity(w.ambient_dim)).unwrap();
    let mut inv = vec![0usize; ng];
    for i in 0..ng {
        inv[i] = (0..ng).find(|&j| cayley[i * ng + j] == id_idx).unwrap();
    }

    let size = elements.len();
    let mut table = vec![0u32; size * size];
    for (a, &(fa, ga)) in elements.iter().enumerate() {
        for (b, &(fb, gb)) in elements.iter().enumerate() {
            // w_τ · w'_τ' = (ww')_{τ ∩ τ' w⁻¹}.
            let fb_pre = act[fb * ng + inv[ga]];
            let dom = lattice.meet(fa, fb_pre);
            let gh = cayley[ga * ng + gb];
            let key = (dom, canon[dom * ng + gh]);
            table[a * size + b] = index[&key] as u32;
        }
    }
    let fim = FiniteInverseMonoid::from_table(size, table)?;
    let labels = elements
        .iter()
        .map(|&(fi, gi)| (lattice.faces[fi].generator_set.clone(), gi))
        .collect();
    Ok((fim, labels))
}

/// Outcome of comparing the subspace monoid `M(W, S_M)` with the face
/// monoid through `(ε_X w) ↦ (∏ e_j) w`.
#[derive(Debug, Clone)]
pub struct ThetaReport {
    pub subspace_order: usize,
    pub face_order: usize,
    pub homomorphism: bool,
    pub surjective: bool,
    pub injective: bool,
    pub simplicial: bool,
    /// Two subspaces with nonzero intersection whose faces meet only in the
    /// minimal face — present exactly when the map fails to be injective.
    pub witness: Option<(Subspace, Subspace)>,
}

/// Builds both monoids, maps each partial isomorphism to its face-monoid
/// image and verifies homomorphism, surjectivity, and the simplicial
/// criterion for injectivity.
pub fn theta(w: &MatrixGroup, cone: &Cone) -> Result<ThetaReport> {
    let lattice = face_lattice(cone)?;
    let system = cone_system(w, cone)?;
    let refl = crate::monoid::ReflMonoid::new(w.clone(), system.clone());
    let (sub_table, sub_elems) = crate::monoid::to_table(&refl)?;
    let (face_table, face_labels) = face_monoid(w, cone)?;

    // Face part of the image: the generators lying inside X span the face
    // σ ∩ X.
    let face_of_subspace = |x: &Subspace| -> usize {
        let set: BTreeSet<usize> = lattice
            .cone
            .generators
            .iter()
            .enumerate()
            .filter(|(_, v)| x.contains_vector(v))
            .map(|(i, _)| i)
            .collect();
        lattice.index_of_set(&set).expect("σ ∩ X is a face")
    };
    // Unit part: canonical representative of g on the face.
    let mut canon_cache: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut canon = |fi: usize, gi: usize| -> usize {
        if let Some(&v) = canon_cache.get(&(fi, gi)) {
            return v;
        }
        let r = lattice.faces[fi].span.basis().mul(&w.elements[gi]);
        let rep = (0..w.elements.len())
            .find(|&h| lattice.faces[fi].span.basis().mul(&w.elements[h]) == r)
            .unwrap();
        canon_cache.insert((fi, gi), rep);
        rep
    };

    let face_index: BTreeMap<(BTreeSet<usize>, usize), usize> =
        face_labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();

    let mut image = vec![0usize; sub_elems.len()];
    for (i, p) in sub_elems.iter().enumerate() {
        let fi = face_of_subspace(p.domain());
        // Any unit realizing p works: find one.
        let gi = (0..w.elements.len())
            .find(|&g| p.domain().basis().mul(&w.elements[g]) == *p.images())
            .expect("elements come from restrictions");
        let rep = canon(fi, gi);
        image[i] = face_index[&(lattice.faces[fi].generator_set.clone(), rep)];
    }

    let homomorphism = (0..sub_elems.len()).all(|a| {
        (0..sub_elems.len())
            .all(|b| image[sub_table.mul(a, b)] == face_table.mul(image[a], image[b]))
    });
    let image_set: BTreeSet<usize> = image.iter().copied().collect();
    let surjective = image_set.len() == face_table.len();
    let injective = image_set.len() == sub_elems.len();
    let simplicial = lattice_is_simplicial(&lattice);

    // Witness idempotent pair for non-injectivity: two face spans whose
    // intersection is strictly larger than the span of the meet face.
    let mut witness = None;
    if !injective {
        'outer: for a in &lattice.faces {
            for b in &lattice.faces {
                let span_meet = a.span.intersect(&b.span)?;
                let face_meet: BTreeSet<usize> =
                    a.generator_set.intersection(&b.generator_set).copied().collect();
                let fm = lattice.index_of_set(&face_meet).unwrap();
                if lattice.faces[fm].span.dim() < span_meet.dim() {
                    witness = Some((a.span.clone(), b.span.clone()));
                    break 'outer;
                }
            }
        }
    }

    Ok(ThetaReport {
        subspace_order: sub_elems.len(),
        face_order: face_table.len(),
        homomorphism,
        surjective,
        injective,
        simplicial,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn int_cone(ambient: usize, gens: &[&[i64]]) -> Cone {
        Cone::new(
            ambient,
            gens.iter().map(|g| g.iter().map(|&x| rat(x)).collect()).collect(),
        )
        .unwrap()
    }

    fn orthant(n: usize) -> Cone {
        let gens: Vec<Vec<Rat>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { rat(1) } else { rat(0) }).collect())
            .collect();
        Cone::new(n, gens).unwrap()
    }

    fn square_cone() -> Cone {
        int_cone(3, &[&[1, 1, 1], &[-1, 1, 1], &[-1, -1, 1], &[1, -1, 1]])
    }

    /// Symmetries of the square cone: rotation and reflection fixing the
    /// z-axis, order 8.
    fn square_group() -> MatrixGroup {
        let rot = Matrix::from_int_rows(&[&[0, 1, 0], &[-1, 0, 0], &[0, 0, 1]]);
        let refl = Matrix::from_int_rows(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
        crate::groups::enumerate_closure(&[rot, refl], 100).unwrap()
    }

    fn perm_group_3() -> MatrixGroup {
        let phi = crate::groups::RootSystem::classical(crate::groups::Family::A, 3).unwrap();
        crate::groups::weyl_group(&phi, 1000).unwrap()
    }

    #[test]
    fn quadrant_faces() {
        let lat = face_lattice(&orthant(2)).unwrap();
        assert_eq!(lat.faces.len(), 4);
        assert_eq!(lat.faces[lat.minimal].span, Subspace::zero(2));
    }

    #[test]
    fn orthant_faces_boolean() {
        let lat = face_lattice(&orthant(3)).unwrap();
        assert_eq!(lat.faces.len(), 8);
        // Every subset of the three rays is a face.
        for mask in 0..8u32 {
            let set: BTreeSet<usize> = (0..3).filter(|i| mask >> i & 1 == 1).collect();
            assert!(lat.index_of_set(&set).is_some());
        }
    }

    #[test]
    fn square_cone_faces() {
        let lat = face_lattice(&square_cone()).unwrap();
        assert_eq!(lat.faces.len(), 10); // 0, 4 rays, 4 walls, σ
        let by_dim: Vec<usize> =
            (0..=3).map(|d| lat.faces.iter().filter(|f| f.span.dim() == d).count()).collect();
        assert_eq!(by_dim, vec![1, 4, 4, 1]);
    }

    #[test]
    fn face_identity_sigma_cap_span() {
        // σ ∩ span(τ) = τ: generators inside the span are exactly the
        // generators of the face.
        for cone in [orthant(3), square_cone()] {
            let lat = face_lattice(&cone).unwrap();
            for f in &lat.faces {
                let inside: BTreeSet<usize> = cone
                    .generators
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| f.span.contains_vector(v))
                    .map(|(i, _)| i)
                    .collect();
                assert_eq!(inside, f.generator_set);
            }
        }
    }

    #[test]
    fn lattice_intersection_closed_and_minimal() {
        for cone in [orthant(3), square_cone()] {
            let lat = face_lattice(&cone).unwrap();
            for a in 0..lat.faces.len() {
                for b in 0..lat.faces.len() {
                    let m = lat.meet(a, b);
                    assert!(lat.faces[m].generator_set.is_subset(&lat.faces[a].generator_set));
                }
                assert!(lat.faces[lat.minimal]
                    .generator_set
                    .is_subset(&lat.faces[a].generator_set));
            }
        }
    }

    #[test]
    fn minimal_face_examples() {
        assert_eq!(minimal_face(&orthant(3)).unwrap().span, Subspace::zero(3));
        let half_plane = int_cone(2, &[&[1, 0], &[-1, 0], &[0, 1]]);
        assert_eq!(
            minimal_face(&half_plane).unwrap().span,
            Subspace::from_spanning(&Matrix::from_int_rows(&[&[1, 0]]))
        );
        let full_plane = int_cone(2, &[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]]);
        assert_eq!(minimal_face(&full_plane).unwrap().span, Subspace::full(2));
    }

    #[test]
    fn simplicial_examples() {
        assert!(is_simplicial(&orthant(3)).unwrap());
        assert!(!is_simplicial(&square_cone()).unwrap());
        // Any strongly convex 2-dimensional cone.
        assert!(is_simplicial(&int_cone(2, &[&[1, 0], &[1, 3]])).unwrap());
        // Half-plane: simplicial modulo lineality.
        assert!(is_simplicial(&int_cone(2, &[&[1, 0], &[-1, 0], &[0, 1]])).unwrap());
    }

    #[test]
    fn simplicial_span_lemma_and_square_violation() {
        // For a simplicial cone, span(τ∩τ') = span τ ∩ span τ'.
        let lat = face_lattice(&orthant(3)).unwrap();
        for a in &lat.faces {
            for b in &lat.faces {
                let meet: BTreeSet<usize> =
                    a.generator_set.intersection(&b.generator_set).copied().collect();
                let mf = &lat.faces[lat.index_of_set(&meet).unwrap()];
                assert_eq!(mf.span, a.span.intersect(&b.span).unwrap());
            }
        }
        // The square cone violates it on opposite walls.
        let lat = face_lattice(&square_cone()).unwrap();
        let mut violated = false;
        for a in &lat.faces {
            for b in &lat.faces {
                let meet: BTreeSet<usize> =
                    a.generator_set.intersection(&b.generator_set).copied().collect();
                let mf = &lat.faces[lat.index_of_set(&meet).unwrap()];
                if mf.span != a.span.intersect(&b.span).unwrap() {
                    violated = true;
                }
            }
        }
        assert!(violated);
    }

    #[test]
    fn cone_system_examples() {
        // Orthant with the permutation action: exactly the Boolean system.
        let w = perm_group_3();
        let s = cone_system(&w, &orthant(3)).unwrap();
        let b = crate::systems::boolean_system(3, &w).unwrap();
        assert_eq!(s.subspaces, b.subspaces);
        // Square cone: the two wall-span planes meet in a line not spanned
        // by any face.
        let s = cone_system(&square_group(), &square_cone()).unwrap();
        let x_axis = Subspace::from_spanning(&Matrix::from_int_rows(&[&[1, 0, 0]]));
        assert!(s.contains(&x_axis));
        // Trivial group: spans plus intersections, no orbit growth.
        let s = cone_system(&MatrixGroup::trivial(3), &square_cone()).unwrap();
        assert!(s.contains(&x_axis));
        assert!(s.contains(&Subspace::full(3)));
    }

    #[test]
    fn cone_preservation_rejected() {
        // Quarter-turn rotations move the positive quadrant off itself.
        let rot = Matrix::from_int_rows(&[&[0, 1], &[-1, 0]]);
        let g = crate::groups::enumerate_closure(&[rot], 10).unwrap();
        assert!(matches!(cone_system(&g, &orthant(2)), Err(Error::NotPreserved(_))));
    }

    #[test]
    fn face_monoid_rook() {
        let (m, _) = face_monoid(&perm_group_3(), &orthant(3)).unwrap();
        assert_eq!(m.len(), 34);
        assert_eq!(m.units().len(), 6);
        assert_eq!(m.idempotents().len(), 8);
        assert!(m.is_factorizable());
    }

    #[test]
    fn face_monoid_trivial_group() {
        let (m, _) = face_monoid(&MatrixGroup::trivial(2), &orthant(2)).unwrap();
        assert_eq!(m.len(), 4);
        assert_eq!(m.idempotents().len(), 4);
    }

    #[test]
    fn theta_orthant_isomorphism() {
        let report = theta(&perm_group_3(), &orthant(3)).unwrap();
        assert!(report.homomorphism && report.surjective && report.injective);
        assert!(report.simplicial);
        assert_eq!(report.subspace_order, 34);
        assert_eq!(report.face_order, 34);
        assert!(report.witness.is_none());
    }

    #[test]
    fn theta_square_cone_not_injective() {
        let report = theta(&square_group(), &square_cone()).unwrap();
        assert!(report.homomorphism && report.surjective);
        assert!(!report.injective);
        assert!(!report.simplicial);
        let (a, b) = report.witness.expect("witness pair");
        // The witness spans intersect in a line while the faces meet at the
        // origin only.
        let meet = a.intersect(&b).unwrap();
        assert_eq!(meet.dim(), 1);
    }

    #[test]
    fn theta_half_line() {
        let report = theta(&MatrixGroup::trivial(1), &int_cone(1, &[&[1]])).unwrap();
        assert!(report.homomorphism && report.surjective && report.injective);
        assert!(report.simplicial);
    }

    #[test]
    fn injectivity_matches_simpliciality() {
        let cones = [orthant(2), orthant(3), square_cone(), int_cone(2, &[&[1, 0], &[1, 2]])];
        for cone in cones {
            let report = theta(&MatrixGroup::trivial(cone.ambient_dim), &cone).unwrap();
            assert!(report.homomorphism && report.surjective);
            assert_eq!(report.injective, report.simplicial, "{cone:?}");
        }
    }
}
