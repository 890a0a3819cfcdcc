//! The verification suite behind `refmon selftest`: each check builds the
//! relevant structures from scratch and compares every independent route to
//! the same number or structure. The integration test target `acceptance`
//! runs exactly these checks, one test per criterion.

use std::collections::BTreeMap;
use std::string::String;

use anyhow::{anyhow, ensure, Result};
use num_bigint::BigInt;

use refmon_core::groups::{
    weyl_group, Family, MatrixGroup, RootSystem, DEFAULT_GROUP_CAP,
};
use refmon_core::linalg::Matrix;
use refmon_core::monoid::{
    check_factorizable_iso, enumerate, green, green_j_bruteforce, is_reflection_monoid,
    named_isomorphism_reports, order_by_isotropy, to_table, GreenRel, PartialIso, ReflMonoid,
};
use refmon_core::orders::{
    exceptional_orders, f4_orbit_data, order_arrangement_a, order_arrangement_b,
    order_arrangement_d, order_boolean, order_from_orbit_data, order_in, boolean_d_table_row,
    Exceptional, OrbitDatum,
};
use refmon_core::set_monoids::{
    is_fundamental, mu_related, mu_witness, partial_signed, symmetric_inverse, SetPartialMap,
};
use refmon_core::systems::{
    arrangement_system, boolean_system, six_line_triangle_system, DEFAULT_SYSTEM_CAP,
};

/// Outcome of one acceptance criterion.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

fn check(name: &'static str, run: impl FnOnce() -> Result<String>) -> CheckResult {
    match run() {
        Ok(detail) => CheckResult { name, pass: true, detail },
        Err(e) => CheckResult { name, pass: false, detail: format!("{e:#}") },
    }
}

fn classical(family: Family, n: usize) -> Result<(RootSystem, MatrixGroup)> {
    let phi = match family {
        Family::G2 => RootSystem::g2(),
        Family::F4 => RootSystem::f4(),
        Family::E6 => RootSystem::e6(),
        _ => RootSystem::classical(family, n).map_err(|e| anyhow!("{e}"))?,
    };
    let w = weyl_group(&phi, DEFAULT_GROUP_CAP).map_err(|e| anyhow!("{e}"))?;
    Ok((phi, w))
}

fn arrangement_monoid(family: Family, n: usize) -> Result<ReflMonoid> {
    let (phi, w) = classical(family, n)?;
    let h = arrangement_system(&phi, &w, DEFAULT_SYSTEM_CAP).map_err(|e| anyhow!("{e}"))?;
    Ok(ReflMonoid::new(w, h))
}

fn boolean_monoid(family: Family, n: usize) -> Result<ReflMonoid> {
    let (_, w) = classical(family, n)?;
    let b = boolean_system(n, &w).map_err(|e| anyhow!("{e}"))?;
    Ok(ReflMonoid::new(w, b))
}

/// Orbit data of a constructed system, labelled by dimension.
fn orbit_data_of(m: &ReflMonoid) -> Vec<OrbitDatum> {
    m.system
        .orbits
        .iter()
        .map(|o| OrbitDatum {
            size: o.size() as u64,
            isotropy_order: o.isotropy_order,
            label: format!("dim {}", m.system.subspaces[o.rep].dim()),
        })
        .collect()
}

/// The G2 arrangement monoid order over the full generic pipeline (group
/// enumeration, lattice closure, isotropy counting), exposed separately so
/// its sub-second runtime can be measured in isolation.
pub fn g2_order_generic() -> BigInt {
    let g2 = arrangement_monoid(Family::G2, 2).expect("G2 builds");
    order_by_isotropy(&g2)
}

/// Criterion 1: the G2 and F4 arrangement monoid orders, each computed two
/// independent ways (orbit data and the full generic pipeline), against the
/// published factored values.
pub fn exceptional_two_ways() -> CheckResult {
    check("exceptional-orders", || {
        let g2 = arrangement_monoid(Family::G2, 2)?;
        let g2_generic = order_by_isotropy(&g2);
        let g2_orbit = order_from_orbit_data(
            &BigInt::from(g2.group.order() as u64),
            &orbit_data_of(&g2),
        )
        .map_err(|e| anyhow!("{e}"))?;
        ensure!(g2_generic == BigInt::from(49), "G2 generic gave {g2_generic}");
        ensure!(g2_orbit == BigInt::from(49), "G2 orbit data gave {g2_orbit}");

        let f4 = arrangement_monoid(Family::F4, 4)?;
        ensure!(f4.group.order() == 1152, "|W(F4)| = {}", f4.group.order());
        ensure!(f4.system.len() == 268, "F4 arrangement has {} flats", f4.system.len());
        let f4_generic = order_by_isotropy(&f4);
        let f4_published = order_from_orbit_data(&BigInt::from(1152), &f4_orbit_data())
            .map_err(|e| anyhow!("{e}"))?;
        ensure!(f4_generic == BigInt::from(54241), "F4 generic gave {f4_generic}");
        ensure!(f4_published == BigInt::from(54241), "F4 orbit data gave {f4_published}");
        // The generic orbit decomposition must reproduce the published
        // twelve-orbit profile.
        let mut generic_profile: Vec<(u64, u64)> =
            orbit_data_of(&f4).iter().map(|d| (d.size, d.isotropy_order)).collect();
        generic_profile.sort_unstable();
        let mut published_profile: Vec<(u64, u64)> =
            f4_orbit_data().iter().map(|d| (d.size, d.isotropy_order)).collect();
        published_profile.sort_unstable();
        ensure!(generic_profile == published_profile, "orbit profiles differ");
        Ok("G2 = 49 and F4 = 54241 on both routes; orbit profiles agree".into())
    })
}

/// Criterion 2: closed formula = isotropy-index sum = brute-force
/// enumeration on the classical families, with the anchor values pinned.
pub fn classical_triple_agreement(quick: bool) -> CheckResult {
    check("classical-triple-agreement", || {
        let mut lines = Vec::new();
        let boolean_cases: &[(Family, usize)] = if quick {
            &[(Family::A, 3), (Family::B, 2), (Family::D, 2)]
        } else {
            &[
                (Family::A, 2), (Family::A, 3), (Family::A, 4), (Family::A, 5),
                (Family::B, 1), (Family::B, 2), (Family::B, 3), (Family::B, 4),
                (Family::D, 2), (Family::D, 3), (Family::D, 4),
            ]
        };
        for &(family, n) in boolean_cases {
            let m = boolean_monoid(family, n)?;
            let formula = order_boolean(family, n).map_err(|e| anyhow!("{e}"))?;
            let isotropy = order_by_isotropy(&m);
            let brute = BigInt::from(enumerate(&m).len() as u64);
            ensure!(
                formula == isotropy && isotropy == brute,
                "Boolean {family:?} n={n}: {formula} vs {isotropy} vs {brute}"
            );
            lines.push(format!("boolean {family:?}{n}={formula}"));
        }
        let arrangement_cases: &[(Family, usize)] = if quick {
            &[(Family::A, 3), (Family::B, 2)]
        } else {
            &[
                (Family::A, 2), (Family::A, 3), (Family::A, 4), (Family::A, 5),
                (Family::B, 1), (Family::B, 2), (Family::B, 3),
                (Family::D, 2), (Family::D, 3), (Family::D, 4),
            ]
        };
        for &(family, n) in arrangement_cases {
            let m = arrangement_monoid(family, n)?;
            let formula = match family {
                Family::A => order_arrangement_a(n),
                Family::B => order_arrangement_b(n),
                Family::D => order_arrangement_d(n).map_err(|e| anyhow!("{e}"))?,
                _ => unreachable!(),
            };
            let isotropy = order_by_isotropy(&m);
            let brute = BigInt::from(enumerate(&m).len() as u64);
            ensure!(
                formula == isotropy && isotropy == brute,
                "arrangement {family:?} n={n}: {formula} vs {isotropy} vs {brute}"
            );
            lines.push(format!("arrangement {family:?}{n}={formula}"));
        }
        // Anchors.
        ensure!(order_in(3) == BigInt::from(34), "|I3|");
        ensure!(order_in(4) == BigInt::from(209), "|I4|");
        ensure!(order_in(5) == BigInt::from(1546), "|I5| (formula only)");
        ensure!(order_boolean(Family::B, 2).unwrap() == BigInt::from(17), "|M(B2,B)|");
        ensure!(order_boolean(Family::D, 4).unwrap() == BigInt::from(1281), "|M(D4,B)|");
        ensure!(order_arrangement_a(3) == BigInt::from(16), "|P3|");
        ensure!(order_arrangement_a(4) == BigInt::from(131), "|P4|");
        ensure!(order_arrangement_b(2) == BigInt::from(25), "|M(B2,H)|");
        Ok(lines.join(", "))
    })
}

/// Criterion 3: the type-D Boolean order. Enumeration yields 1281 at
/// `n = 4`, agreeing with the index-sum expression and differing from the
/// published explicit table row, which evaluates to 1664.
pub fn documented_discrepancy() -> CheckResult {
    check("boolean-D-discrepancy", || {
        let m = boolean_monoid(Family::D, 4)?;
        let brute = enumerate(&m).len();
        ensure!(brute == 1281, "enumeration gave {brute}");
        let index_sum = order_boolean(Family::D, 4).map_err(|e| anyhow!("{e}"))?;
        ensure!(index_sum == BigInt::from(1281), "index sum gave {index_sum}");
        let table_row = boolean_d_table_row(4);
        ensure!(table_row == BigInt::from(1664), "table row evaluated to {table_row}");
        ensure!(index_sum != table_row, "discrepancy must reproduce");
        Ok("enumeration = index sum = 1281; explicit table row = 1664".into())
    })
}

/// Criterion 4: the arrangement monoid order equals the sum of the indices
/// of the distinct parabolic subgroups.
pub fn parabolic_index_sums(quick: bool) -> CheckResult {
    check("parabolic-index", || {
        let cases: &[(Family, usize)] = if quick {
            &[(Family::A, 3), (Family::B, 2)]
        } else {
            &[(Family::A, 3), (Family::A, 4), (Family::B, 2), (Family::B, 3)]
        };
        let mut lines = Vec::new();
        for &(family, n) in cases {
            let (phi, w) = classical(family, n)?;
            let m = arrangement_monoid(family, n)?;
            let paras = refmon_core::groups::parabolic_subgroups(&phi, &w, DEFAULT_GROUP_CAP)
                .map_err(|e| anyhow!("{e}"))?;
            let sum: u64 = paras.iter().map(|p| (w.order() / p.order()) as u64).sum();
            let order = order_by_isotropy(&m);
            ensure!(
                BigInt::from(sum) == order,
                "{family:?} n={n}: parabolic sum {sum} vs order {order}"
            );
            lines.push(format!("{family:?}{n}: {} parabolics, sum {sum}", paras.len()));
        }
        Ok(lines.join("; "))
    })
}

/// Criterion 5: the reflection description of isotropy groups agrees
/// elementwise with the direct pointwise fixer on every flat of the A3, B3
/// and G2 arrangements, and on at least 100 flats of F4.
pub fn steinberg_oracle(quick: bool) -> CheckResult {
    check("steinberg-isotropy", || {
        let full: &[(Family, usize)] =
            if quick { &[(Family::B, 2)] } else { &[(Family::A, 4), (Family::B, 3), (Family::G2, 2)] };
        let mut count = 0usize;
        for &(family, n) in full {
            let (phi, w) = classical(family, n)?;
            let h = arrangement_system(&phi, &w, DEFAULT_SYSTEM_CAP).map_err(|e| anyhow!("{e}"))?;
            for x in &h.subspaces {
                let direct = w.isotropy_subgroup(x);
                let refl = refmon_core::groups::steinberg_isotropy(&phi, x)
                    .map_err(|e| anyhow!("{e}"))?;
                ensure!(direct.elements == refl.elements, "{family:?} n={n} flat {x:?}");
                count += 1;
            }
        }
        let mut sampled = 0usize;
        if !quick {
            let (phi, w) = classical(Family::F4, 4)?;
            let h = arrangement_system(&phi, &w, DEFAULT_SYSTEM_CAP).map_err(|e| anyhow!("{e}"))?;
            for x in h.subspaces.iter().step_by(2) {
                let direct = w.isotropy_subgroup(x);
                let refl = refmon_core::groups::steinberg_isotropy(&phi, x)
                    .map_err(|e| anyhow!("{e}"))?;
                ensure!(direct.elements == refl.elements, "F4 flat {x:?}");
                sampled += 1;
            }
            ensure!(sampled >= 100, "only {sampled} F4 flats sampled");
        }
        Ok(format!("{count} exhaustive flats; {sampled} F4 flats sampled"))
    })
}

/// Criterion 6: the three structural isomorphisms (with full table
/// comparison) at every rank up to 4.
pub fn named_isomorphisms_upto(max_n: usize) -> CheckResult {
    check("named-isomorphisms", || {
        let mut lines = Vec::new();
        for n in 2..=max_n {
            let reports = named_isomorphism_reports(n).map_err(|e| anyhow!("{e}"))?;
            for r in &reports {
                ensure!(r.pass, "n={n} {} failed ({} vs {})", r.name, r.lhs_order, r.rhs_order);
            }
            lines.push(format!(
                "n={n}: {}",
                reports.iter().map(|r| r.name.clone()).collect::<Vec<_>>().join(" ")
            ));
        }
        Ok(lines.join("; "))
    })
}

/// Criterion 7: the structural Green characterizations against brute-force
/// ideal computations on M(A2, Boolean) and M(B2, arrangement).
pub fn green_relations() -> CheckResult {
    check("green-relations", || {
        for m in [boolean_monoid(Family::A, 3)?, arrangement_monoid(Family::B, 2)?] {
            let elems = enumerate(&m);
            let (table, telems) = to_table(&m).map_err(|e| anyhow!("{e}"))?;
            ensure!(telems == elems, "element orders agree");
            let n = elems.len();
            // Ideals aM, Ma, MaM of every element, as membership vectors.
            let mut right = vec![vec![false; n]; n];
            let mut left = vec![vec![false; n]; n];
            let mut twosided = vec![vec![false; n]; n];
            for a in 0..n {
                for b in 0..n {
                    right[a][table.mul(a, b)] = true;
                    left[a][table.mul(b, a)] = true;
                }
                for x in 0..n {
                    let xa = table.mul(x, a);
                    for y in 0..n {
                        twosided[a][table.mul(xa, y)] = true;
                    }
                }
            }
            for a in 0..n {
                for b in 0..n {
                    let r_struct = green(&elems[a], &elems[b], GreenRel::R, &m)
                        .map_err(|e| anyhow!("{e}"))?;
                    ensure!(r_struct == (right[a] == right[b]), "R mismatch at ({a},{b})");
                    let l_struct = green(&elems[a], &elems[b], GreenRel::L, &m)
                        .map_err(|e| anyhow!("{e}"))?;
                    ensure!(l_struct == (left[a] == left[b]), "L mismatch at ({a},{b})");
                    let d_struct = green(&elems[a], &elems[b], GreenRel::D, &m)
                        .map_err(|e| anyhow!("{e}"))?;
                    ensure!(
                        d_struct == (twosided[a] == twosided[b]),
                        "J/D mismatch at ({a},{b})"
                    );
                }
            }
            // The composition-level brute force agrees too, spot-checked on
            // a deterministic sample of pairs.
            for a in (0..n).step_by(7) {
                for b in (0..n).step_by(5) {
                    let j_brute = green_j_bruteforce(&elems[a], &elems[b], &elems)
                        .map_err(|e| anyhow!("{e}"))?;
                    ensure!(
                        j_brute == (twosided[a] == twosided[b]),
                        "brute-force J mismatch at ({a},{b})"
                    );
                }
            }
        }
        Ok("R, L, D match ideals; J coincides with D on both monoids".into())
    })
}

/// Criterion 8: the face-monoid comparison map is surjective everywhere,
/// an isomorphism on the orthant (whose face monoid is the rook monoid),
/// and non-injective on the square cone with the witness pair.
pub fn cone_theta() -> CheckResult {
    check("cone-theta", || {
        use refmon_core::cones::{face_monoid, theta, Cone};
        use refmon_core::linalg::rat;
        let orthant = Cone::new(
            3,
            (0..3)
                .map(|i| (0..3).map(|j| if i == j { rat(1) } else { rat(0) }).collect())
                .collect(),
        )
        .map_err(|e| anyhow!("{e}"))?;
        let (_, w) = classical(Family::A, 3)?;
        let report = theta(&w, &orthant).map_err(|e| anyhow!("{e}"))?;
        ensure!(
            report.homomorphism && report.surjective && report.injective && report.simplicial,
            "orthant: {report:?}"
        );
        ensure!(report.face_order == 34, "rook monoid order {}", report.face_order);

        // Face monoid of the orthant is the symmetric inverse monoid.
        let (rook, labels) = face_monoid(&w, &orthant).map_err(|e| anyhow!("{e}"))?;
        let (i3, i3_elems) = symmetric_inverse(3).map_err(|e| anyhow!("{e}"))?;
        let mut unit_iso = BTreeMap::new();
        for &u in rook.units() {
            let (_, gi) = &labels[u];
            let g = &w.elements[*gi];
            let perm: Vec<usize> = (0..3)
                .map(|i| (0..3).find(|&j| !num_traits::Zero::is_zero(g.at(i, j))).unwrap())
                .collect();
            let target = SetPartialMap::from_full_perm(&perm);
            unit_iso.insert(u, i3_elems.binary_search(&target).unwrap());
        }
        let mut idem_iso = BTreeMap::new();
        for &e in rook.idempotents() {
            let (gens, _) = &labels[e];
            let target = SetPartialMap::idempotent_on(3, gens);
            idem_iso.insert(e, i3_elems.binary_search(&target).unwrap());
        }
        ensure!(
            check_factorizable_iso(&rook, &i3, &unit_iso, &idem_iso).map_err(|e| anyhow!("{e}"))?,
            "rook monoid is not isomorphic to the symmetric inverse monoid"
        );

        // Square cone: surjective but not injective, with the idempotent
        // witness pair.
        let square = Cone::new(
            3,
            [[1i64, 1, 1], [-1, 1, 1], [-1, -1, 1], [1, -1, 1]]
                .iter()
                .map(|g| g.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
        .map_err(|e| anyhow!("{e}"))?;
        let rot = Matrix::from_int_rows(&[&[0, 1, 0], &[-1, 0, 0], &[0, 0, 1]]);
        let refl = Matrix::from_int_rows(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
        let sym = refmon_core::groups::enumerate_closure(&[rot, refl], 100)
            .map_err(|e| anyhow!("{e}"))?;
        ensure!(sym.order() == 8, "square-cone symmetry group order {}", sym.order());
        let report = theta(&sym, &square).map_err(|e| anyhow!("{e}"))?;
        ensure!(report.homomorphism && report.surjective, "square: {report:?}");
        ensure!(!report.injective && !report.simplicial, "square: {report:?}");
        let (a, b) = report.witness.ok_or_else(|| anyhow!("witness missing"))?;
        let meet = a.intersect(&b).map_err(|e| anyhow!("{e}"))?;
        ensure!(meet.dim() == 1, "witness spans meet in dim {}", meet.dim());
        Ok("orthant: isomorphism onto the rook monoid (34); square cone: \
             surjective, non-injective, witness spans meet in a line".to_string())
    })
}

/// Criterion 9: fundamentality. The symmetric inverse monoid is
/// fundamental; the partial signed permutations are not (identity and the
/// sign swap are μ-related); the six-line triangle monoid is a
/// non-fundamental reflection monoid whose witness is a partial reflection
/// against a partial identity on the same line.
pub fn fundamentality() -> CheckResult {
    check("fundamentality", || {
        let (i3, _) = symmetric_inverse(3).map_err(|e| anyhow!("{e}"))?;
        ensure!(is_fundamental(&i3), "I3 must be fundamental");

        let (ipm2, elems) = partial_signed(2).map_err(|e| anyhow!("{e}"))?;
        let id = elems.binary_search(&SetPartialMap::identity(4)).unwrap();
        // (x, −x) on the first letter: +1 ↦ −1 and −1 ↦ +1, rest fixed.
        let swap = elems
            .binary_search(&SetPartialMap::new(4, vec![(0, 2), (2, 0), (1, 1), (3, 3)]))
            .unwrap();
        ensure!(mu_related(id, swap, &ipm2), "identity and (x,-x) must be μ-related");
        ensure!(!is_fundamental(&ipm2), "partial signed permutations are not fundamental");

        let (w, system) = six_line_triangle_system().map_err(|e| anyhow!("{e}"))?;
        let m = ReflMonoid::new(w.clone(), system.clone());
        ensure!(
            is_reflection_monoid(&m).map_err(|e| anyhow!("{e}"))?,
            "triangle monoid must be a reflection monoid"
        );
        let (table, telems) = to_table(&m).map_err(|e| anyhow!("{e}"))?;
        ensure!(!is_fundamental(&table), "triangle monoid must not be fundamental");
        // Explicit witness: a reflection restricted to the line orthogonal
        // to its mirror, against the partial identity on that line.
        let reflections: Vec<&Matrix> =
            w.elements.iter().filter(|g| g.fixed_space_dim() == 1).collect();
        let mut found = None;
        'search: for tau in &reflections {
            for x in system.subspaces.iter().filter(|x| x.dim() == 1) {
                let restricted = PartialIso::restrict(tau, x).map_err(|e| anyhow!("{e}"))?;
                if restricted.is_idempotent() {
                    continue; // x is the mirror line of tau
                }
                if restricted.image_subspace() != *x {
                    continue; // tau moves x; we need the negated line
                }
                let tau_x = telems.binary_search(&restricted).unwrap();
                let eps_x = telems.binary_search(&PartialIso::identity_on(x)).unwrap();
                if mu_related(tau_x, eps_x, &table) {
                    found = Some((tau_x, eps_x));
                    break 'search;
                }
            }
        }
        let (tau_x, eps_x) = found.ok_or_else(|| anyhow!("no (τ_X, ε_X) witness found"))?;
        ensure!(tau_x != eps_x, "witness must be a pair of distinct elements");
        // μ restricted to the units is trivial (the Munn representation is
        // one-one on the unit group).
        let units: Vec<usize> = table.units().to_vec();
        for &a in &units {
            for &b in &units {
                if a != b {
                    ensure!(!mu_related(a, b, &table), "μ must separate the units");
                }
            }
        }
        ensure!(mu_witness(&table).is_some(), "a witness pair must exist");
        Ok("I3 fundamental; partial signed not (identity ~ sign swap); \
            triangle monoid not fundamental with (τ_X, ε_X) witness, μ trivial on units"
            .into())
    })
}

/// Criterion 10: stored orders for the E series, with G2/F4 recomputation
/// baked into the accessor.
pub fn e_series_regression() -> CheckResult {
    check("e-series-regression", || {
        let table = exceptional_orders();
        let expect: Vec<(Exceptional, BigInt)> = vec![
            (Exceptional::G2, BigInt::from(7u64) * 7u64),
            (Exceptional::F4, BigInt::from(11u64) * 4931u64),
            (Exceptional::E6, BigInt::from(16u64) * 25u64 * 40543u64),
            (Exceptional::E7, BigInt::from(3u64) * 113u64 * 24667553u64),
            (Exceptional::E8, BigInt::from(11u64) * 79u64 * 55099865069u64),
        ];
        for ((fam, value), (efam, evalue)) in table.iter().zip(&expect) {
            ensure!(fam == efam, "family order");
            ensure!(value == evalue, "{fam:?}: {value} != {evalue}");
        }
        ensure!(table[2].1 == BigInt::from(16_217_200u64), "E6 decimal expansion");
        Ok("G2, F4, E6, E7, E8 stored orders verified (G2/F4 recomputed)".into())
    })
}

/// The long-running optional check: enumerate W(E6) (51840 elements of
/// `GL_6(Q)` after restricting to the root span), build its arrangement
/// lattice and count isotropy via the reflection description, then compare
/// with the stored order.
pub fn stretch_e6() -> CheckResult {
    check("stretch-e6", || {
        let phi = RootSystem::e6();
        let w8 = weyl_group(&phi, DEFAULT_GROUP_CAP).map_err(|e| anyhow!("{e}"))?;
        ensure!(w8.order() == 51840, "|W(E6)| = {}", w8.order());
        let h = arrangement_system(&phi, &w8, DEFAULT_SYSTEM_CAP).map_err(|e| anyhow!("{e}"))?;
        // Per-orbit isotropy counting is already folded into the system.
        let m = ReflMonoid::new(w8, h);
        let order = order_by_isotropy(&m);
        let stored = BigInt::from(16_217_200u64);
        ensure!(order == stored, "generic E6 gave {order}, stored {stored}");
        Ok(format!("E6 generic enumeration: {} flats, order {order}", m.system.len()))
    })
}

/// Runs the acceptance checks. `quick` trims to a subset that finishes in
/// well under 30 seconds; `stretch_e6` appends the long E6 recomputation.
pub fn run_all(quick: bool, stretch: bool) -> Vec<CheckResult> {
    let mut out = Vec::new();
    if quick {
        out.push(check("exceptional-orders", || {
            let g2 = arrangement_monoid(Family::G2, 2)?;
            ensure!(order_by_isotropy(&g2) == BigInt::from(49), "G2");
            Ok("G2 = 49 (quick run skips F4)".into())
        }));
    } else {
        out.push(exceptional_two_ways());
    }
    out.push(classical_triple_agreement(quick));
    out.push(documented_discrepancy());
    out.push(parabolic_index_sums(quick));
    out.push(steinberg_oracle(quick));
    out.push(named_isomorphisms_upto(if quick { 3 } else { 4 }));
    out.push(green_relations());
    out.push(cone_theta());
    out.push(fundamentality());
    out.push(e_series_regression());
    if stretch {
        out.push(stretch_e6());
    }
    out
}
