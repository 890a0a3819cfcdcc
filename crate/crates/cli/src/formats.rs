//! File formats: exact JSON for matrices, subspaces, root systems, groups,
//! orbit data, cones and systems, plus index-based CSV multiplication
//! tables.
//!
//! All rational values travel as strings `"p"` or `"p/q"`. Decimal floats
//! are rejected so exactness can never silently degrade.

use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use num_rational::BigRational;
use serde_json::{json, Value};

use refmon_core::groups::{enumerate_closure, Family, MatrixGroup, RootSystem};
use refmon_core::linalg::{Matrix, Rat, Subspace};
use refmon_core::monoid::PartialIso;
use refmon_core::orders::OrbitDatum;
use refmon_core::set_monoids::FiniteInverseMonoid;
use refmon_core::systems::System;

pub fn parse_rat(s: &str) -> Result<Rat> {
    if s.contains('.') || s.contains(['e', 'E']) {
        bail!("decimal notation is not accepted (got {s:?}); use p/q");
    }
    BigRational::from_str(s.trim()).map_err(|e| anyhow!("bad rational {s:?}: {e}"))
}

pub fn rat_to_string(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn value_to_rat(v: &Value) -> Result<Rat> {
    match v {
        Value::String(s) => parse_rat(s),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rat::from_integer(i.into()))
            } else {
                bail!("non-integer numeric literal {n}; use a \"p/q\" string")
            }
        }
        other => bail!("expected a rational, got {other}"),
    }
}

pub fn vector_from_json(v: &Value) -> Result<Vec<Rat>> {
    v.as_array()
        .ok_or_else(|| anyhow!("expected an array of rationals"))?
        .iter()
        .map(value_to_rat)
        .collect()
}

pub fn vector_to_json(v: &[Rat]) -> Value {
    Value::Array(v.iter().map(|r| Value::String(rat_to_string(r))).collect())
}

pub fn matrix_from_json(v: &Value) -> Result<Matrix> {
    let rows = v.as_array().ok_or_else(|| anyhow!("expected an array of rows"))?;
    let parsed: Vec<Vec<Rat>> = rows.iter().map(vector_from_json).collect::<Result<_>>()?;
    if parsed.is_empty() {
        bail!("matrix needs at least one row");
    }
    let cols = parsed[0].len();
    if parsed.iter().any(|r| r.len() != cols) {
        bail!("ragged matrix rows");
    }
    Ok(Matrix::from_rows(parsed))
}

pub fn matrix_to_json(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|r| vector_to_json(m.row(r))).collect())
}

/// Subspace list file: `{"ambient": n, "subspaces": [rows, rows, …]}` where
/// each entry is a list of spanning row vectors (an empty list is the zero
/// subspace).
pub fn subspaces_from_json(v: &Value) -> Result<(usize, Vec<Subspace>)> {
    let ambient = v["ambient"]
        .as_u64()
        .ok_or_else(|| anyhow!("missing \"ambient\" dimension"))? as usize;
    let list = v["subspaces"].as_array().ok_or_else(|| anyhow!("missing \"subspaces\""))?;
    let mut out = Vec::new();
    for entry in list {
        let rows = entry.as_array().ok_or_else(|| anyhow!("subspace must be a row list"))?;
        if rows.is_empty() {
            out.push(Subspace::zero(ambient));
            continue;
        }
        let vecs: Vec<Vec<Rat>> = rows.iter().map(vector_from_json).collect::<Result<_>>()?;
        if vecs.iter().any(|r| r.len() != ambient) {
            bail!("row length does not match the ambient dimension");
        }
        out.push(Subspace::from_vectors(ambient, &vecs));
    }
    Ok((ambient, out))
}

pub fn parse_family(s: &str) -> Result<Family> {
    match s.to_ascii_uppercase().as_str() {
        "A" => Ok(Family::A),
        "B" | "C" => Ok(Family::B),
        "D" => Ok(Family::D),
        "G2" => Ok(Family::G2),
        "F4" => Ok(Family::F4),
        "E6" => Ok(Family::E6),
        other => bail!("unknown type {other:?} (expected A, B, D, G2, F4, E6)"),
    }
}

/// Root system file: either `{"family": "B", "n": 3}` or an explicit
/// `{"ambient": n, "roots": [...], "simple_roots": [...]}`.
pub fn root_system_from_json(v: &Value) -> Result<RootSystem> {
    if let Some(fam) = v.get("family").and_then(|f| f.as_str()) {
        let family = parse_family(fam)?;
        let phi = match family {
            Family::G2 => RootSystem::g2(),
            Family::F4 => RootSystem::f4(),
            Family::E6 => RootSystem::e6(),
            _ => {
                let n = v["n"].as_u64().ok_or_else(|| anyhow!("missing \"n\""))? as usize;
                RootSystem::classical(family, n).map_err(|e| anyhow!("{e}"))?
            }
        };
        return Ok(phi);
    }
    let ambient = v["ambient"].as_u64().ok_or_else(|| anyhow!("missing \"ambient\""))? as usize;
    let roots: Vec<Vec<Rat>> = v["roots"]
        .as_array()
        .ok_or_else(|| anyhow!("missing \"roots\""))?
        .iter()
        .map(vector_from_json)
        .collect::<Result<_>>()?;
    let simple_roots: Vec<Vec<Rat>> = v["simple_roots"]
        .as_array()
        .ok_or_else(|| anyhow!("missing \"simple_roots\""))?
        .iter()
        .map(vector_from_json)
        .collect::<Result<_>>()?;
    for r in roots.iter().chain(&simple_roots) {
        if r.len() != ambient {
            bail!("root length does not match the ambient dimension");
        }
    }
    for s in &simple_roots {
        if !roots.contains(s) {
            bail!("every simple root must be a root");
        }
    }
    Ok(RootSystem { family: Family::A, rank_param: ambient, ambient_dim: ambient, roots, simple_roots })
}

/// Group file: `{"ambient": n, "elements": [matrix, …]}`. The element list
/// is closed and deduplicated on load.
pub fn group_from_json(v: &Value) -> Result<MatrixGroup> {
    let ambient = v["ambient"].as_u64().ok_or_else(|| anyhow!("missing \"ambient\""))? as usize;
    let elements: Vec<Matrix> = v["elements"]
        .as_array()
        .ok_or_else(|| anyhow!("missing \"elements\""))?
        .iter()
        .map(matrix_from_json)
        .collect::<Result<_>>()?;
    for m in &elements {
        if m.rows() != ambient || m.cols() != ambient {
            bail!("group element of wrong shape");
        }
    }
    let g = enumerate_closure(&elements, 1_000_000).map_err(|e| anyhow!("{e}"))?;
    if g.order() != elements.len() {
        bail!("element list is not closed under multiplication");
    }
    Ok(g)
}

pub fn group_to_json(g: &MatrixGroup) -> Value {
    json!({
        "ambient": g.ambient_dim,
        "elements": g.elements.iter().map(matrix_to_json).collect::<Vec<_>>(),
    })
}

/// Orbit data file: a JSON array of `{"size", "isotropy_order", "label"}`.
pub fn orbit_data_from_json(v: &Value) -> Result<Vec<OrbitDatum>> {
    let arr = v.as_array().ok_or_else(|| anyhow!("orbit data must be an array"))?;
    arr.iter()
        .map(|d| {
            Ok(OrbitDatum {
                size: d["size"].as_u64().ok_or_else(|| anyhow!("missing \"size\""))?,
                isotropy_order: d["isotropy_order"]
                    .as_u64()
                    .ok_or_else(|| anyhow!("missing \"isotropy_order\""))?,
                label: d["label"].as_str().unwrap_or("").to_string(),
            })
        })
        .collect()
}

pub fn orbit_data_to_json(data: &[OrbitDatum]) -> Value {
    Value::Array(
        data.iter()
            .map(|d| {
                json!({
                    "size": d.size,
                    "isotropy_order": d.isotropy_order,
                    "label": d.label,
                })
            })
            .collect(),
    )
}

/// Cone file: `{"ambient": n, "generators": [vector, …]}`.
pub fn cone_from_json(v: &Value) -> Result<refmon_core::cones::Cone> {
    let ambient = v["ambient"].as_u64().ok_or_else(|| anyhow!("missing \"ambient\""))? as usize;
    let generators: Vec<Vec<Rat>> = v["generators"]
        .as_array()
        .ok_or_else(|| anyhow!("missing \"generators\""))?
        .iter()
        .map(vector_from_json)
        .collect::<Result<_>>()?;
    refmon_core::cones::Cone::new(ambient, generators).map_err(|e| anyhow!("{e}"))
}

pub fn system_to_json(s: &System) -> Value {
    json!({
        "ambient": s.ambient_dim,
        "subspaces": s.subspaces.iter().map(|x| matrix_to_json(x.basis())).collect::<Vec<_>>(),
        "orbits": s
            .orbits
            .iter()
            .map(|o| json!({
                "rep": o.rep,
                "size": o.size(),
                "isotropy_order": o.isotropy_order,
            }))
            .collect::<Vec<_>>(),
    })
}

pub fn element_to_json(p: &PartialIso) -> Value {
    json!({
        "domain": matrix_to_json(p.domain().basis()),
        "images": matrix_to_json(p.images()),
    })
}

/// Partial maps as JSON pair lists:
/// `{"ground": n, "pairs": [[source, target], …]}`.
pub fn partial_map_to_json(m: &refmon_core::set_monoids::SetPartialMap) -> Value {
    json!({
        "ground": m.ground,
        "pairs": m.pairs.iter().map(|&(s, t)| json!([s, t])).collect::<Vec<_>>(),
    })
}

pub fn partial_map_from_json(v: &Value) -> Result<refmon_core::set_monoids::SetPartialMap> {
    let ground = v["ground"].as_u64().ok_or_else(|| anyhow!("missing \"ground\""))? as usize;
    let pairs: Vec<(usize, usize)> = v["pairs"]
        .as_array()
        .ok_or_else(|| anyhow!("missing \"pairs\""))?
        .iter()
        .map(|p| {
            let arr = p.as_array().filter(|a| a.len() == 2).ok_or_else(|| anyhow!("bad pair"))?;
            let s = arr[0].as_u64().ok_or_else(|| anyhow!("bad source"))? as usize;
            let t = arr[1].as_u64().ok_or_else(|| anyhow!("bad target"))? as usize;
            if s >= ground || t >= ground {
                bail!("pair out of range");
            }
            Ok((s, t))
        })
        .collect::<Result<_>>()?;
    let mut sources = std::collections::BTreeSet::new();
    let mut targets = std::collections::BTreeSet::new();
    for &(s, t) in &pairs {
        if !sources.insert(s) || !targets.insert(t) {
            bail!("pairs are not an injective partial map");
        }
    }
    Ok(refmon_core::set_monoids::SetPartialMap::new(ground, pairs))
}

fn block_to_text(n: usize, b: &std::collections::BTreeSet<usize>) -> String {
    // One-based elements. Ground sets up to 9 write blocks as digit runs
    // ("12" is {1,2}); larger ground sets separate with commas so that
    // multi-digit elements stay unambiguous.
    let one_based: Vec<String> = b.iter().map(|&i| (i + 1).to_string()).collect();
    if n <= 9 {
        one_based.concat()
    } else {
        one_based.join(",")
    }
}

fn block_from_text(n: usize, s: &str) -> Result<std::collections::BTreeSet<usize>> {
    let s = s.trim();
    if s.is_empty() {
        bail!("empty block");
    }
    let elems: Vec<usize> = if s.contains(',') {
        s.split(',')
            .map(|t| t.trim().parse::<usize>().context("bad element"))
            .collect::<Result<_>>()?
    } else if n <= 9 {
        s.chars()
            .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| anyhow!("bad digit {c:?}")))
            .collect::<Result<_>>()?
    } else {
        vec![s.parse::<usize>().context("bad element")?]
    };
    if elems.contains(&0) {
        bail!("elements are one-based");
    }
    Ok(elems.into_iter().map(|e| e - 1).collect())
}

/// Compact text for a partition: `[12|3]` has blocks {1,2} and {3}.
pub fn partition_to_text(p: &refmon_core::systems::Partition) -> String {
    let blocks: Vec<String> = p.blocks.iter().map(|b| block_to_text(p.n, b)).collect();
    format!("[{}]", blocks.join("|"))
}

pub fn partition_from_text(n: usize, s: &str) -> Result<refmon_core::systems::Partition> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| anyhow!("partition text must be bracketed"))?;
    let blocks: Vec<std::collections::BTreeSet<usize>> = if inner.is_empty() {
        Vec::new()
    } else {
        inner.split('|').map(|b| block_from_text(n, b)).collect::<Result<_>>()?
    };
    validate_blocks(n, blocks.iter())?;
    Ok(refmon_core::systems::Partition::new(n, blocks))
}

/// Compact text for a coupled partition: `Δ{4}[1+23]` deletes 4 and
/// couples {1} with {2,3}; `[1+2|3]` couples {1},{2} and keeps {3} single.
pub fn coupled_to_text(cp: &refmon_core::systems::CoupledPartition) -> String {
    let mut sections: Vec<String> = cp
        .couples
        .iter()
        .map(|(a, b)| format!("{}+{}", block_to_text(cp.n, a), block_to_text(cp.n, b)))
        .collect();
    sections.extend(cp.singles.iter().map(|s| block_to_text(cp.n, s)));
    let body = format!("[{}]", sections.join("|"));
    if cp.delta.is_empty() {
        body
    } else {
        format!("Δ{{{}}}{}", block_to_text(cp.n, &cp.delta), body)
    }
}

pub fn coupled_from_text(n: usize, s: &str) -> Result<refmon_core::systems::CoupledPartition> {
    let s = s.trim();
    let (delta, rest) = if let Some(after) = s.strip_prefix('Δ').or_else(|| s.strip_prefix("D")) {
        let after = after.strip_prefix('{').ok_or_else(|| anyhow!("expected Δ{{…}}"))?;
        let close = after.find('}').ok_or_else(|| anyhow!("unterminated Δ block"))?;
        (block_from_text(n, &after[..close])?, &after[close + 1..])
    } else {
        (Default::default(), s)
    };
    let inner = rest
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| anyhow!("coupled partition text must be bracketed"))?;
    let mut couples = Vec::new();
    let mut singles = Vec::new();
    if !inner.is_empty() {
        for section in inner.split('|') {
            match section.split_once('+') {
                Some((a, b)) => couples.push((block_from_text(n, a)?, block_from_text(n, b)?)),
                None => singles.push(block_from_text(n, section)?),
            }
        }
    }
    validate_blocks(
        n,
        core::iter::once(&delta)
            .chain(couples.iter().flat_map(|(a, b)| [a, b]))
            .chain(singles.iter()),
    )?;
    // Δ may be empty while blocks must not be; drop an empty Δ.
    Ok(refmon_core::systems::CoupledPartition::new(n, delta, couples, singles))
}

fn validate_blocks<'a>(
    n: usize,
    blocks: impl Iterator<Item = &'a std::collections::BTreeSet<usize>>,
) -> Result<()> {
    let mut seen = std::collections::BTreeSet::new();
    let mut total = 0usize;
    for b in blocks {
        for &e in b {
            if e >= n {
                bail!("element {} is out of range 1..{n}", e + 1);
            }
            if !seen.insert(e) {
                bail!("element {} appears twice", e + 1);
            }
            total += 1;
        }
    }
    if total != n {
        bail!("blocks do not cover 1..{n}");
    }
    Ok(())
}

/// Face lattice as JSON: faces listed by generator index set and span.
pub fn face_lattice_to_json(lat: &refmon_core::cones::FaceLattice) -> Value {
    json!({
        "generators": lat.cone.generators.iter().map(|g| vector_to_json(g)).collect::<Vec<_>>(),
        "faces": lat
            .faces
            .iter()
            .map(|f| json!({
                "generator_set": f.generator_set.iter().collect::<Vec<_>>(),
                "span": matrix_to_json(f.span.basis()),
                "dim": f.span.dim(),
            }))
            .collect::<Vec<_>>(),
        "minimal": lat.minimal,
        "top": lat.top,
    })
}

/// Multiplication table as CSV: line `i` holds the indices of the products
/// of element `i` with every element, comma separated.
pub fn table_to_csv(m: &FiniteInverseMonoid) -> String {
    let n = m.len();
    let mut out = String::new();
    for a in 0..n {
        for b in 0..n {
            if b > 0 {
                out.push(',');
            }
            out.push_str(&m.mul(a, b).to_string());
        }
        out.push('\n');
    }
    out
}

pub fn table_from_csv(text: &str) -> Result<FiniteInverseMonoid> {
    let rows: Vec<Vec<u32>> = text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            l.split(',')
                .map(|tok| tok.trim().parse::<u32>().context("bad table index"))
                .collect::<Result<Vec<u32>>>()
        })
        .collect::<Result<_>>()?;
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        bail!("table is not square");
    }
    let flat: Vec<u32> = rows.into_iter().flatten().collect();
    FiniteInverseMonoid::from_table(n, flat).map_err(|e| anyhow!("{e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_roundtrip_and_reject_floats() {
        assert_eq!(rat_to_string(&parse_rat("3/4").unwrap()), "3/4");
        assert_eq!(rat_to_string(&parse_rat("-2").unwrap()), "-2");
        assert!(parse_rat("1.5").is_err());
        assert!(parse_rat("1e3").is_err());
        // Reduction happens on parse.
        assert_eq!(rat_to_string(&parse_rat("2/4").unwrap()), "1/2");
    }

    #[test]
    fn matrix_roundtrip() {
        let v: Value = serde_json::from_str(r#"[["1","1/2"],["0","-1"]]"#).unwrap();
        let m = matrix_from_json(&v).unwrap();
        assert_eq!(matrix_to_json(&m), v);
        let bad: Value = serde_json::from_str(r#"[["0.5"]]"#).unwrap();
        assert!(matrix_from_json(&bad).is_err());
    }

    #[test]
    fn root_system_by_family_and_explicit() {
        let v: Value = serde_json::from_str(r#"{"family":"B","n":2}"#).unwrap();
        let phi = root_system_from_json(&v).unwrap();
        assert_eq!(phi.roots.len(), 8);
        let v: Value = serde_json::from_str(
            r#"{"ambient":1,"roots":[["1"],["-1"]],"simple_roots":[["1"]]}"#,
        )
        .unwrap();
        let phi = root_system_from_json(&v).unwrap();
        assert_eq!(phi.roots.len(), 2);
        let v: Value = serde_json::from_str(
            r#"{"ambient":1,"roots":[["1"]],"simple_roots":[["2"]]}"#,
        )
        .unwrap();
        assert!(root_system_from_json(&v).is_err());
    }

    #[test]
    fn group_roundtrip_checks_closure() {
        let v: Value = serde_json::from_str(r#"{"ambient":1,"elements":[[["1"]],[["-1"]]]}"#).unwrap();
        let g = group_from_json(&v).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(group_from_json(&group_to_json(&g)).unwrap().elements, g.elements);
        // {-1} alone is not closed (its square is missing).
        let v: Value = serde_json::from_str(r#"{"ambient":1,"elements":[[["-1"]]]}"#).unwrap();
        assert!(group_from_json(&v).is_err());
    }

    #[test]
    fn partial_map_json_roundtrip() {
        use refmon_core::set_monoids::SetPartialMap;
        let m = SetPartialMap::new(4, vec![(0, 2), (3, 1)]);
        let v = partial_map_to_json(&m);
        assert_eq!(partial_map_from_json(&v).unwrap(), m);
        let bad: Value =
            serde_json::from_str(r#"{"ground":2,"pairs":[[0,1],[1,1]]}"#).unwrap();
        assert!(partial_map_from_json(&bad).is_err());
    }

    #[test]
    fn partition_text_roundtrip() {
        use refmon_core::systems::Partition;
        use std::collections::BTreeSet;
        let p = Partition::new(3, vec![BTreeSet::from([0, 1]), BTreeSet::from([2])]);
        assert_eq!(partition_to_text(&p), "[12|3]");
        assert_eq!(partition_from_text(3, "[12|3]").unwrap(), p);
        assert!(partition_from_text(4, "[12|3]").is_err());
        // Multi-digit elements use commas.
        let q = Partition::new(
            11,
            vec![(0..10).collect::<BTreeSet<_>>(), BTreeSet::from([10])],
        );
        let text = partition_to_text(&q);
        assert!(text.contains("11"));
        assert_eq!(partition_from_text(11, &text).unwrap(), q);
    }

    #[test]
    fn coupled_text_roundtrip() {
        use refmon_core::systems::CoupledPartition;
        use std::collections::BTreeSet;
        let cp = CoupledPartition::new(
            4,
            BTreeSet::from([3]),
            vec![(BTreeSet::from([0]), BTreeSet::from([1, 2]))],
            vec![],
        );
        assert_eq!(coupled_to_text(&cp), "Δ{4}[1+23]");
        assert_eq!(coupled_from_text(4, "Δ{4}[1+23]").unwrap(), cp);
        let cp = CoupledPartition::new(
            3,
            BTreeSet::new(),
            vec![(BTreeSet::from([0]), BTreeSet::from([1]))],
            vec![BTreeSet::from([2])],
        );
        assert_eq!(coupled_to_text(&cp), "[1+2|3]");
        assert_eq!(coupled_from_text(3, "[1+2|3]").unwrap(), cp);
        // Every lattice member roundtrips.
        for cp in refmon_core::systems::enumerate_coupled_lattice(4, refmon_core::groups::Family::B)
            .unwrap()
        {
            let text = coupled_to_text(&cp);
            assert_eq!(coupled_from_text(4, &text).unwrap(), cp, "{text}");
        }
    }

    #[test]
    fn face_lattice_json() {
        use refmon_core::cones::{face_lattice, Cone};
        use refmon_core::linalg::rat;
        let cone = Cone::new(2, vec![vec![rat(1), rat(0)], vec![rat(0), rat(1)]]).unwrap();
        let lat = face_lattice(&cone).unwrap();
        let v = face_lattice_to_json(&lat);
        assert_eq!(v["faces"].as_array().unwrap().len(), 4);
    }

    #[test]
    fn table_csv_roundtrip() {
        let (m, _) = refmon_core::set_monoids::symmetric_inverse(2).unwrap();
        let csv = table_to_csv(&m);
        let back = table_from_csv(&csv).unwrap();
        assert_eq!(back.len(), m.len());
        assert_eq!(back.table(), m.table());
    }
}
