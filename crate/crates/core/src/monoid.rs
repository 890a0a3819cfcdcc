//! The monoid `M(G, S)` of partial linear isomorphisms: restrictions of the
//! elements of a matrix group to the subspaces of a system, composed as
//! partial maps.
//!
//! Elements are stored in map-canonical form (domain in reduced echelon
//! form plus the images of that canonical basis), never as `(g, X)` pairs,
//! so two restrictions that agree pointwise are structurally equal and the
//! coset ambiguity in the `(g, X)` description disappears by construction.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::groups::MatrixGroup;
use crate::linalg::{reduce_with_carried, solve_left, Matrix, Subspace};
use crate::set_monoids::FiniteInverseMonoid;
use crate::systems::System;
use crate::{Error, Result};

/// A linear isomorphism from a subspace onto a subspace: canonical domain
/// basis plus the matrix of its images, row for row.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PartialIso {
    ambient: usize,
    domain: Subspace,
    images: Matrix,
}

impl PartialIso {
    /// Restriction of an invertible matrix to a subspace.
    pub fn restrict(g: &Matrix, x: &Subspace) -> Result<PartialIso> {
        if g.rows() != x.ambient_dim() {
            return Err(Error::DimensionMismatch { expected: x.ambient_dim(), got: g.rows() });
        }
        if !g.is_invertible() {
            return Err(Error::SingularMatrix);
        }
        Ok(PartialIso { ambient: x.ambient_dim(), domain: x.clone(), images: x.basis().mul(g) })
    }

    pub fn identity_on(x: &Subspace) -> PartialIso {
        PartialIso { ambient: x.ambient_dim(), domain: x.clone(), images: x.basis().clone() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn domain(&self) -> &Subspace {
        &self.domain
    }

    pub fn images(&self) -> &Matrix {
        &self.images
    }

    pub fn image_subspace(&self) -> Subspace {
        Subspace::from_spanning(&self.images)
    }

    pub fn is_idempotent(&self) -> bool {
        self.images == *self.domain.basis()
    }

    /// Value of the map on a vector of its domain.
    pub fn apply_vector(&self, v: &[crate::linalg::Rat]) -> Option<Vec<crate::linalg::Rat>> {
        let coords = self.domain.coords_of(v)?;
        Some(crate::linalg::apply_row(&coords, &self.images))
    }

    /// Partial-map composition: domain `{v ∈ dom a : v·a ∈ dom b}`, values
    /// `(v·a)·b`. The empty (zero-domain) result is legal.
    pub fn compose(&self, other: &PartialIso) -> Result<PartialIso> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, got: other.ambient });
        }
        let mid = self.image_subspace().intersect(&other.domain)?;
        let mut dom_rows = Vec::new();
        let mut img_rows = Vec::new();
        for r in 0..mid.basis().rows() {
            let y = mid.basis().row(r);
            // The unique coefficient vector with d·images = y pulls y back
            // through `self`; pushing forward through `other` reads its
            // coordinates in the domain of `other`.
            let d = solve_left(&self.images, y).expect("mid lies in the image");
            dom_rows.push(crate::linalg::apply_row(&d, self.domain.basis()));
            let e = other.domain.coords_of(y).expect("mid lies in the domain");
            img_rows.push(crate::linalg::apply_row(&e, &other.images));
        }
        let n = self.ambient;
        let (dom, img) = if dom_rows.is_empty() {
            (Matrix::zero(0, n), Matrix::zero(0, n))
        } else {
            reduce_with_carried(&Matrix::from_rows(dom_rows), &Matrix::from_rows(img_rows))
        };
        Ok(PartialIso { ambient: n, domain: Subspace::from_spanning(&dom), images: img })
    }

    /// The inverse partial map (image becomes the domain).
    pub fn inverse(&self) -> PartialIso {
        let (dom, img) = if self.images.rows() == 0 {
            (Matrix::zero(0, self.ambient), Matrix::zero(0, self.ambient))
        } else {
            reduce_with_carried(&self.images, self.domain.basis())
        };
        PartialIso { ambient: self.ambient, domain: Subspace::from_spanning(&dom), images: img }
    }
}

/// A reflection monoid: a fully enumerated group together with a system of
/// subspaces. Elements are materialized on demand.
#[derive(Debug, Clone)]
pub struct ReflMonoid {
    pub group: MatrixGroup,
    pub system: System,
}

impl ReflMonoid {
    pub fn new(group: MatrixGroup, system: System) -> ReflMonoid {
        ReflMonoid { group, system }
    }

    /// Membership test for a partial isomorphism.
    pub fn contains(&self, p: &PartialIso) -> bool {
        self.system.contains(p.domain())
            && self.group.elements.iter().any(|g| p.domain().basis().mul(g) == *p.images())
    }
}

/// All elements, grouped by domain (iterating the subspaces in canonical
/// order and the distinct restrictions in image order). The count per
/// domain is the isotropy index, so the total matches
/// [`order_by_isotropy`].
pub fn enumerate(m: &ReflMonoid) -> Vec<PartialIso> {
    let mut out = Vec::new();
    for x in &m.system.subspaces {
        let mut images: BTreeSet<Matrix> = BTreeSet::new();
        for g in &m.group.elements {
            images.insert(x.basis().mul(g));
        }
        for img in images {
            out.push(PartialIso { ambient: m.system.ambient_dim, domain: x.clone(), images: img });
        }
    }
    out
}

/// `Σ_X [G : G_X]`, evaluated orbitwise: `|G| Σ_orbits size/isotropy`.
pub fn order_by_isotropy(m: &ReflMonoid) -> BigInt {
    let g = BigInt::from(m.group.order());
    let mut acc = BigInt::from(0);
    for orbit in &m.system.orbits {
        let iso = BigInt::from(orbit.isotropy_order);
        debug_assert_eq!(&g % &iso, BigInt::from(0));
        acc += BigInt::from(orbit.size() as u64) * (&g / iso);
    }
    acc
}

/// Green's relations on an inverse monoid of partial isomorphisms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GreenRel {
    R,
    L,
    H,
    D,
    J,
}

/// Structural characterization: `R` compares domains, `L` images, `D` (and
/// `J`, which coincides with it here) asks for the domains to lie in the
/// same group orbit.
pub fn green(a: &PartialIso, b: &PartialIso, rel: GreenRel, m: &ReflMonoid) -> Result<bool> {
    let orbit_of = |p: &PartialIso| -> Result<usize> {
        let i = m.system.index_of(p.domain()).ok_or(Error::NotInSystem)?;
        Ok(m.system.orbit_of[i])
    };
    Ok(match rel {
        GreenRel::R => a.domain() == b.domain(),
        GreenRel::L => a.image_subspace() == b.image_subspace(),
        GreenRel::H => a.domain() == b.domain() && a.image_subspace() == b.image_subspace(),
        GreenRel::D | GreenRel::J => orbit_of(a)? == orbit_of(b)?,
    })
}

/// Brute-force `J`: compares the two-sided ideals `MaM` and `MbM`. Only for
/// cross-checking the structural rule on small monoids.
pub fn green_j_bruteforce(a: &PartialIso, b: &PartialIso, elements: &[PartialIso]) -> Result<bool> {
    let ideal = |p: &PartialIso| -> Result<BTreeSet<PartialIso>> {
        let mut out = BTreeSet::new();
        for x in elements {
            let xp = x.compose(p)?;
            for y in elements {
                out.insert(xp.compose(y)?);
            }
        }
        Ok(out)
    };
    Ok(ideal(a)? == ideal(b)?)
}

/// True when the unit group is generated by its reflections (elements whose
/// fixed space is a hyperplane) and every element is an idempotent times a
/// unit. The trivial group counts as generated by the empty set.
pub fn is_reflection_monoid(m: &ReflMonoid) -> Result<bool> {
    let n = m.group.ambient_dim;
    let reflections: Vec<Matrix> = m
        .group
        .elements
        .iter()
        .filter(|g| g.fixed_space_dim() == n - 1)
        .cloned()
        .collect();
    let generated = if reflections.is_empty() {
        MatrixGroup::trivial(n)
    } else {
        crate::groups::enumerate_closure(&reflections, m.group.order() + 1)?
    };
    if generated.elements != m.group.elements {
        return Ok(false);
    }
    // Factorizability: every restriction arises from a full unit.
    for p in enumerate(m) {
        let factors = m.group.elements.iter().any(|g| {
            p.domain().basis().mul(g) == *p.images()
        });
        if !factors {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Converts a reflection monoid to a dense multiplication table together
/// with its element list (sorted; indices into one match the other).
///
/// Products are computed through lookup tables over the `(domain, unit)`
/// description — subspace images, pairwise intersections and the group
/// Cayley table are all precomputed — so building the `n²` entries does no
/// rational arithmetic per product.
pub fn to_table(m: &ReflMonoid) -> Result<(FiniteInverseMonoid, Vec<PartialIso>)> {
    let subs = &m.system.subspaces;
    let g_elems = &m.group.elements;
    let ns = subs.len();
    let ng = g_elems.len();

    // Group Cayley table and inverses.
    let mut cayley = vec![0u32; ng * ng];
    for i in 0..ng {
        for j in 0..ng {
            let p = g_elems[i].mul(&g_elems[j]);
            let k = m.group.index_of(&p).ok_or(Error::NotASystem("group not closed"))?;
            cayley[i * ng + j] = k as u32;
        }
    }
    let id_idx = m.group.index_of(&Matrix::identity(m.group.ambient_dim)).unwrap();
    let mut g_inv = vec![0u32; ng];
    for i in 0..ng {
        let j = (0..ng).find(|&j| cayley[i * ng + j] as usize == id_idx).unwrap();
        g_inv[i] = j as u32;
    }

    // Subspace action and intersection tables.
    let sub_index: BTreeMap<&Subspace, usize> = subs.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut apply_tbl = vec![0u32; ns * ng];
    for (si, x) in subs.iter().enumerate() {
        for (gi, g) in g_elems.iter().enumerate() {
            let img = x.apply(g)?;
            let k = *sub_index.get(&img).ok_or(Error::NotASystem("action leaves the system"))?;
            apply_tbl[si * ng + gi] = k as u32;
        }
    }
    let mut meet_tbl = vec![0u32; ns * ns];
    for a in 0..ns {
        for b in 0..ns {
            let i = subs[a].intersect(&subs[b])?;
            let k = *sub_index.get(&i).ok_or(Error::NotASystem("not intersection closed"))?;
            meet_tbl[a * ns + b] = k as u32;
        }
    }

    // Elements: distinct restrictions per domain, plus the element index of
    // every (domain, unit) pair.
    let mut elements: Vec<PartialIso> = Vec::new();
    let mut elem_of = vec![0u32; ns * ng];
    for (si, x) in subs.iter().enumerate() {
        let mut by_images: BTreeMap<Matrix, Vec<usize>> = BTreeMap::new();
        for (gi, g) in g_elems.iter().enumerate() {
            by_images.entry(x.basis().mul(g)).or_default().push(gi);
        }
        for (img, gis) in by_images {
            let idx = elements.len() as u32;
            elements.push(PartialIso {
                ambient: m.system.ambient_dim,
                domain: x.clone(),
                images: img,
            });
            for gi in gis {
                elem_of[si * ng + gi] = idx;
            }
        }
    }
    // Representative unit per element.
    let mut rep = vec![(0usize, 0usize); elements.len()];
    for si in 0..ns {
        for gi in (0..ng).rev() {
            rep[elem_of[si * ng + gi] as usize] = (si, gi);
        }
    }

    let size = elements.len();
    let mut table = vec![0u32; size * size];
    for a in 0..size {
        let (xa, ga) = rep[a];
        let ga_inv = g_inv[ga] as usize;
        for b in 0..size {
            let (xb, gb) = rep[b];
            // dom = X ∩ Y·g⁻¹, result = (g·h) restricted to dom.
            let y_pre = apply_tbl[xb * ng + ga_inv] as usize;
            let dom = meet_tbl[xa * ns + y_pre] as usize;
            let gh = cayley[ga * ng + gb] as usize;
            table[a * size + b] = elem_of[dom * ng + gh];
        }
    }
    let fim = FiniteInverseMonoid::from_table(size, table)?;
    Ok((fim, elements))
}

/// Verifies that unit and idempotent correspondences between two
/// factorizable inverse monoids assemble to an isomorphism
/// `e·g ↦ (e)φ·(g)θ`: both maps must be bijective homomorphisms, φ
/// equivariant under conjugation, and unit stabilizers must map onto unit
/// stabilizers. When all of that holds the induced map is checked to be a
/// bijection matching the full multiplication tables.
pub fn check_factorizable_iso(
    ma: &FiniteInverseMonoid,
    mb: &FiniteInverseMonoid,
    unit_iso: &BTreeMap<usize, usize>,
    idem_iso: &BTreeMap<usize, usize>,
) -> Result<bool> {
    // Bijectivity of the given maps onto the units/idempotents.
    let units_a: BTreeSet<usize> = ma.units().iter().copied().collect();
    let units_b: BTreeSet<usize> = mb.units().iter().copied().collect();
    let idems_a: BTreeSet<usize> = ma.idempotents().iter().copied().collect();
    let idems_b: BTreeSet<usize> = mb.idempotents().iter().copied().collect();
    if unit_iso.keys().copied().collect::<BTreeSet<_>>() != units_a
        || unit_iso.values().copied().collect::<BTreeSet<_>>() != units_b
        || unit_iso.len() != units_b.len()
    {
        return Err(Error::NotBijective("unit map"));
    }
    if idem_iso.keys().copied().collect::<BTreeSet<_>>() != idems_a
        || idem_iso.values().copied().collect::<BTreeSet<_>>() != idems_b
        || idem_iso.len() != idems_b.len()
    {
        return Err(Error::NotBijective("idempotent map"));
    }
    // Homomorphism properties.
    for &g in &units_a {
        for &h in &units_a {
            if unit_iso[&ma.mul(g, h)] != mb.mul(unit_iso[&g], unit_iso[&h]) {
                return Ok(false);
            }
        }
    }
    for &e in &idems_a {
        for &f in &idems_a {
            if idem_iso[&ma.mul(e, f)] != mb.mul(idem_iso[&e], idem_iso[&f]) {
                return Ok(false);
            }
        }
    }
    // Equivariance: (g⁻¹ e g)φ = (gθ)⁻¹ (eφ) (gθ).
    for &g in &units_a {
        let gi = ma.inv(g);
        let tg = unit_iso[&g];
        let tgi = mb.inv(tg);
        for &e in &idems_a {
            let lhs = idem_iso[&ma.mul(ma.mul(gi, e), g)];
            let rhs = mb.mul(mb.mul(tgi, idem_iso[&e]), tg);
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    // Stabilizers map onto stabilizers.
    for &e in &idems_a {
        let fe = idem_iso[&e];
        let stab_a: BTreeSet<usize> =
            units_a.iter().copied().filter(|&g| ma.mul(e, g) == e).map(|g| unit_iso[&g]).collect();
        let stab_b: BTreeSet<usize> =
            units_b.iter().copied().filter(|&h| mb.mul(fe, h) == fe).collect();
        if stab_a != stab_b {
            return Ok(false);
        }
    }
    // Induced map on all elements, via the factorization a = (a a⁻¹)·g.
    let mut chi = vec![usize::MAX; ma.len()];
    for a in 0..ma.len() {
        let (e, g) = ma.factorize(a).ok_or(Error::NotInverseMonoid("not factorizable"))?;
        chi[a] = mb.mul(idem_iso[&e], unit_iso[&g]);
    }
    let distinct: BTreeSet<usize> = chi.iter().copied().collect();
    if distinct.len() != ma.len() || ma.len() != mb.len() {
        return Ok(false);
    }
    // Full multiplication-table comparison.
    for a in 0..ma.len() {
        for b in 0..ma.len() {
            if chi[ma.mul(a, b)] != mb.mul(chi[a], chi[b]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Builds the report behind [`crate::set_monoids::named_isomorphisms`].
pub fn named_isomorphism_reports(n: usize) -> Result<Vec<crate::set_monoids::IsoReport>> {
    use crate::groups::{weyl_group, Family, RootSystem, DEFAULT_GROUP_CAP};
    use crate::set_monoids::{
        partial_signed, set_system_monoid, signed_point, symmetric_inverse, uniform_block,
        BlockPerm, IsoReport, SetPartialMap, SetSystem,
    };
    use crate::systems::{arrangement_system, boolean_system, flat_to_coupled, DEFAULT_SYSTEM_CAP};
    use alloc::string::ToString;

    if n > 4 {
        return Err(Error::CapExceeded { cap: 4 });
    }
    let mut reports = Vec::new();

    // Extract the permutation (with signs) carried by a monomial matrix.
    let perm_of_matrix = |g: &Matrix| -> Vec<i64> {
        (0..g.rows())
            .map(|i| {
                let j = (0..g.cols()).find(|&j| !num_traits::Zero::is_zero(g.at(i, j))).unwrap();
                let positive = g.at(i, j) > &crate::linalg::rat(0);
                if positive {
                    (j + 1) as i64
                } else {
                    -((j + 1) as i64)
                }
            })
            .collect()
    };

    // Boolean type A against the symmetric inverse monoid.
    {
        let phi = RootSystem::classical(Family::A, n)?;
        let w = weyl_group(&phi, DEFAULT_GROUP_CAP)?;
        let refl = ReflMonoid::new(w.clone(), boolean_system(n, &w)?);
        let (ta, ea) = to_table(&refl)?;
        let (tb, eb) = symmetric_inverse(n)?;
        let mut unit_iso = BTreeMap::new();
        for &u in ta.units() {
            let perm = perm_of_matrix(ea[u].images());
            let map = SetPartialMap::new(n, perm.iter().enumerate().map(|(i, &t)| (i, t as usize - 1)).collect());
            unit_iso.insert(u, eb.binary_search(&map).unwrap());
        }
        let mut idem_iso = BTreeMap::new();
        for &e in ta.idempotents() {
            let dom: BTreeSet<usize> = pivot_columns(ea[e].domain());
            let map = SetPartialMap::idempotent_on(n, &dom);
            idem_iso.insert(e, eb.binary_search(&map).unwrap());
        }
        let pass = check_factorizable_iso(&ta, &tb, &unit_iso, &idem_iso)?;
        reports.push(IsoReport {
            name: "boolean-A:symmetric-inverse".to_string(),
            lhs_order: ta.len(),
            rhs_order: tb.len(),
            pass,
        });
    }

    // Boolean type B against the partial signed permutations.
    {
        let phi = RootSystem::classical(Family::B, n)?;
        let w = weyl_group(&phi, DEFAULT_GROUP_CAP)?;
        let refl = ReflMonoid::new(w.clone(), boolean_system(n, &w)?);
        let (ta, ea) = to_table(&refl)?;
        let (tb, eb) = partial_signed(n)?;
        let mut unit_iso = BTreeMap::new();
        for &u in ta.units() {
            let perm = perm_of_matrix(ea[u].images());
            let mut pairs = Vec::new();
            for (i, &t) in perm.iter().enumerate() {
                pairs.push((signed_point(n, (i + 1) as i64), signed_point(n, t)));
                pairs.push((signed_point(n, -((i + 1) as i64)), signed_point(n, -t)));
            }
            unit_iso.insert(u, eb.binary_search(&SetPartialMap::new(2 * n, pairs)).unwrap());
        }
        let mut idem_iso = BTreeMap::new();
        for &e in ta.idempotents() {
            let j = pivot_columns(ea[e].domain());
            let dom: BTreeSet<usize> = j
                .iter()
                .flat_map(|&i| {
                    [signed_point(n, (i + 1) as i64), signed_point(n, -((i + 1) as i64))]
                })
                .collect();
            idem_iso
                .insert(e, eb.binary_search(&SetPartialMap::idempotent_on(2 * n, &dom)).unwrap());
        }
        let pass = check_factorizable_iso(&ta, &tb, &unit_iso, &idem_iso)?;
        reports.push(IsoReport {
            name: "boolean-B:partial-signed".to_string(),
            lhs_order: ta.len(),
            rhs_order: tb.len(),
            pass,
        });
    }

    // Type A arrangement against the uniform block permutations.
    {
        let phi = RootSystem::classical(Family::A, n)?;
        let w = weyl_group(&phi, DEFAULT_GROUP_CAP)?;
        let refl = ReflMonoid::new(w.clone(), arrangement_system(&phi, &w, DEFAULT_SYSTEM_CAP)?);
        let (ta, ea) = to_table(&refl)?;
        let (tb, eb) = uniform_block(n)?;
        let mut unit_iso = BTreeMap::new();
        for &u in ta.units() {
            let perm = perm_of_matrix(ea[u].images());
            let pairs = (0..n)
                .map(|i| (BTreeSet::from([i]), BTreeSet::from([perm[i] as usize - 1])))
                .collect();
            unit_iso.insert(u, eb.binary_search(&BlockPerm::new(n, pairs)).unwrap());
        }
        let mut idem_iso = BTreeMap::new();
        for &e in ta.idempotents() {
            let cp = flat_to_coupled(ea[e].domain())?;
            let pairs = cp.singles.iter().map(|b| (b.clone(), b.clone())).collect();
            idem_iso.insert(e, eb.binary_search(&BlockPerm::new(n, pairs)).unwrap());
        }
        let pass = check_factorizable_iso(&ta, &tb, &unit_iso, &idem_iso)?;
        reports.push(IsoReport {
            name: "arrangement-A:uniform-block".to_string(),
            lhs_order: ta.len(),
            rhs_order: tb.len(),
            pass,
        });
    }

    // Rook reconstruction: the face monoid of the positive orthant under
    // coordinate permutations is fundamental and factorizable, so it embeds
    // onto its image inside the Munn semigroup of its idempotents.
    {
        let perms = all_perm_arrays(n);
        let sys = SetSystem::power_set(n);
        let (rook, _) = set_system_monoid(&perms, &sys)?;
        let (img, proj, img_elems) = crate::set_monoids::fundamental_image(&rook)?;
        let meet = rook.idempotent_meet_table();
        let (munn, munn_elems) = crate::set_monoids::munn_semigroup(&meet)?;
        let inside = img_elems.iter().all(|e| munn_elems.binary_search(e).is_ok());
        let pass = crate::set_monoids::is_fundamental(&rook)
            && img.len() == rook.len()
            && inside
            && proj.iter().copied().collect::<BTreeSet<_>>().len() == rook.len()
            && img.idempotents().len() == rook.idempotents().len();
        reports.push(IsoReport {
            name: "rook:munn-reconstruction".to_string(),
            lhs_order: rook.len(),
            rhs_order: img.len(),
            pass: pass && munn.len() >= img.len(),
        });
    }

    Ok(reports)
}

fn pivot_columns(x: &Subspace) -> BTreeSet<usize> {
    let b = x.basis();
    let mut out = BTreeSet::new();
    for r in 0..b.rows() {
        let mut c = 0;
        while c < b.cols() && num_traits::Zero::is_zero(b.at(r, c)) {
            c += 1;
        }
        out.insert(c);
    }
    out
}

fn all_perm_arrays(n: usize) -> Vec<Vec<usize>> {
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
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut vec![false; n], &mut out);
    out
}
