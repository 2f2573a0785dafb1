//! The covers the reproductions run in, encoded as pairing tables.
//!
//! Conventions shared by every geometry here: the pairing of sphere `A` with
//! `B` is recorded as `P_{A,B} = Σ_g ⟨Ã, g·B̃⟩ g`, the table is symmetric, and
//! labels are plain ASCII so that they survive scenario files unchanged.

use std::collections::BTreeMap;

use crate::deckgroup::{brunnian_word, DeckElement, DeckGroup};
use crate::equivariant::{GeneratorLabel, Geometry, Symmetry};
use crate::error::{Error, Result};
use crate::groupring::{Coefficients, RingElement};

use super::{canonical_name, Params};

/// Names accepted by [`builtin_geometry`], with their parameters.
pub const BUILTIN_GEOMETRIES: &[(&str, &str)] = &[
    ("torusComplement", "universal cover of S^4 minus the unknotted torus; field"),
    ("genus2Complement", "universal cover of S^4 minus the unknotted genus-2 surface; field"),
    ("genusGComplement", "universal cover of S^4 minus the unknotted genus-g surface; g, field"),
    ("sphereTorusLink", "universal cover of S^4 minus n-1 spheres and a torus; n"),
    ("circlesComplement", "S^4 minus two unlinked circles, no cover"),
    ("surfacesComplement", "S^4 minus two unknotted surfaces of genus m and n, no cover; m, n"),
    ("cyclicCover", "m-fold cyclic cover of a split link unwinding one meridian; m, base"),
    ("branchedCover", "m-fold cyclic branched cover of S^4 along the torus; m"),
    ("higherDimTorus", "universal cover of S^2n minus S^(n-1) x S^(n-1); n"),
    ("genus1Synthetic", "torus complement plus a sphere with prescribed pairings; h, v, b"),
];

pub fn builtin_geometry(name: &str, params: &Params) -> Result<Geometry> {
    match canonical_name(name).as_str() {
        "toruscomplement" => torus_complement(params.field.unwrap_or(Coefficients::F2)),
        "genus2complement" => genus_g_complement(2, params.field.unwrap_or(Coefficients::Integers)),
        "genusgcomplement" => genus_g_complement(params.g.unwrap_or(2), params.field.unwrap_or(Coefficients::Integers)),
        "spheretoruslink" => sphere_torus_link(params.n.unwrap_or(2)),
        "circlescomplement" => circles_complement(),
        "surfacescomplement" => {
            surfaces_complement(params.m.unwrap_or(1).try_into().unwrap_or(u32::MAX), params.n.unwrap_or(1))
        }
        "cycliccover" => cyclic_cover(params.m.ok_or_else(|| missing("m"))?, params.base.as_deref().unwrap_or("circle")),
        "branchedcover" => branched_cover(params.m.ok_or_else(|| missing("m"))?),
        "higherdimtorus" => higher_dim_torus(params.n.unwrap_or(2)),
        "genus1synthetic" => genus1_synthetic(
            params.h.as_ref().unwrap_or(&BTreeMap::new()),
            params.v.as_ref().unwrap_or(&BTreeMap::new()),
            params.b.as_ref().unwrap_or(&BTreeMap::new()),
        ),
        _ => Err(Error::UnknownName(name.to_string())),
    }
}

fn missing(p: &str) -> Error {
    Error::InvalidParameter(format!("parameter {p} is required"))
}

fn t(e: i64) -> DeckElement {
    DeckGroup::FreeAbelian { rank: 1 }.generator_power(1, e).expect("rank one")
}

fn sign(coeffs: Coefficients) -> i64 {
    match coeffs {
        Coefficients::F2 => 1,
        Coefficients::Integers => -1,
    }
}

/// `S_h, S_v, D_h, D_v` with `P(S_h,S_v) = 1 ± t` and each disk dual to its
/// sphere. Over `Z` the two intersection points carry opposite signs.
pub fn torus_complement(coeffs: Coefficients) -> Result<Geometry> {
    let group = DeckGroup::free_abelian(1)?;
    let mut g = Geometry::new("torusComplement", group, coeffs, Symmetry::Symmetric).with_labels([
        GeneratorLabel::sphere("S_h"),
        GeneratorLabel::sphere("S_v"),
        GeneratorLabel::disk("D_h"),
        GeneratorLabel::disk("D_v"),
    ])?;
    g.set_pairing("S_h", "S_v", [(t(0), 1), (t(1), sign(coeffs))])?;
    g.set_pairing("D_v", "S_v", [(t(0), 1)])?;
    g.set_pairing("D_h", "S_h", [(t(0), 1)])?;
    g.attaching = vec!["S_v".into()];
    g.disks = vec!["D_v".into()];
    g.validate()?;
    Ok(g)
}

/// Genus-g version: `S_{h,i}` meets only `S_{v,i}`, and `D_{h,i}`, `D_{v,i}`
/// are dual to `S_{h,i}`, `S_{v,i}`. Attaching spheres are the vertical
/// spheres, disks the horizontal compressing disks.
pub fn genus_g_complement(genus: u32, coeffs: Coefficients) -> Result<Geometry> {
    if genus == 0 {
        return Err(Error::InvalidParameter("genus must be at least 1".into()));
    }
    let group = DeckGroup::free_abelian(1)?;
    let name = if genus == 2 { "genus2Complement".to_string() } else { format!("genusGComplement(g={genus})") };
    let mut g = Geometry::new(&name, group, coeffs, Symmetry::Symmetric);
    for i in 1..=genus {
        for l in [
            GeneratorLabel::sphere(&format!("S_h{i}")),
            GeneratorLabel::sphere(&format!("S_v{i}")),
            GeneratorLabel::disk(&format!("D_h{i}")),
            GeneratorLabel::disk(&format!("D_v{i}")),
        ] {
            g.add_label(l)?;
        }
    }
    for i in 1..=genus {
        g.set_pairing(&format!("S_h{i}"), &format!("S_v{i}"), [(t(0), 1), (t(1), sign(coeffs))])?;
        g.set_pairing(&format!("D_h{i}"), &format!("S_h{i}"), [(t(0), 1)])?;
        g.set_pairing(&format!("D_v{i}"), &format!("S_v{i}"), [(t(0), 1)])?;
    }
    g.attaching = (1..=genus).map(|i| format!("S_v{i}")).collect();
    g.disks = (1..=genus).map(|i| format!("D_h{i}")).collect();
    g.validate()?;
    Ok(g)
}

/// `n-1` unknotted spheres and a torus; the deck group is `F_n` with `x_n`
/// the meridian of the torus, and `P(S_h,S_v) = 1 + x_n` over `F2`.
pub fn sphere_torus_link(n: u32) -> Result<Geometry> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("need n >= 2 components, got {n}")));
    }
    let group = DeckGroup::free(n)?;
    let mut g = Geometry::new(&format!("sphereTorusLink(n={n})"), group, Coefficients::F2, Symmetry::Symmetric)
        .with_labels([GeneratorLabel::sphere("S_h"), GeneratorLabel::sphere("S_v"), GeneratorLabel::disk("D_v")])?;
    g.set_pairing("S_h", "S_v", [(group.identity(), 1), (group.generator(n)?, 1)])?;
    g.set_pairing("D_v", "S_v", [(group.identity(), 1)])?;
    g.attaching = vec!["S_v".into()];
    g.disks = vec!["D_v".into()];
    g.validate()?;
    Ok(g)
}

/// Two split circles `C_L, C_R` with meridional spheres `S_L, S_R` and
/// spanning disks `D_L, D_R`, each disk meeting its own sphere once.
pub fn circles_complement() -> Result<Geometry> {
    let group = DeckGroup::trivial();
    let mut g = Geometry::new("circlesComplement", group, Coefficients::Integers, Symmetry::Symmetric).with_labels([
        GeneratorLabel::sphere("S_L"),
        GeneratorLabel::sphere("S_R"),
        GeneratorLabel::disk("D_L"),
        GeneratorLabel::disk("D_R"),
    ])?;
    let e = group.identity();
    g.set_pairing("D_L", "S_L", [(e.clone(), 1)])?;
    g.set_pairing("D_R", "S_R", [(e, 1)])?;
    g.disks = vec!["D_L".into(), "D_R".into()];
    g.validate()?;
    Ok(g)
}

/// Split unknotted surfaces of genus `m` (left) and `n` (right). Without a
/// cover each pair `S_{h,i}, S_{v,i}` meets in two points of opposite sign,
/// so all sphere pairings vanish; `D_R` compresses the right horizontal
/// handlebody and meets the first right horizontal sphere once.
pub fn surfaces_complement(m: u32, n: u32) -> Result<Geometry> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidParameter(format!("surface genera must be >= 1, got ({m}, {n})")));
    }
    let group = DeckGroup::trivial();
    let mut g = Geometry::new(&format!("surfacesComplement(m={m},n={n})"), group, Coefficients::Integers, Symmetry::Symmetric);
    for (side, genus) in [("L", m), ("R", n)] {
        for i in 1..=genus {
            g.add_label(GeneratorLabel::sphere(&format!("S{side}_h{i}")))?;
            g.add_label(GeneratorLabel::sphere(&format!("S{side}_v{i}")))?;
        }
    }
    g.add_label(GeneratorLabel::disk("D_R"))?;
    g.set_pairing("D_R", "SR_h1", [(group.identity(), 1)])?;
    g.disks = vec!["D_R".into()];
    g.validate()?;
    Ok(g)
}

/// The `m`-fold cover unwinding the meridian of the left component: `D` is the
/// lift (inside one summand) of the disk cut off by the splitting sphere, and
/// `S, S'` are parallel lifts of the sphere dual to it. `S'` is homologous to
/// `S`.
pub fn cyclic_cover(m: u64, base: &str) -> Result<Geometry> {
    let base = match canonical_name(base).as_str() {
        "circle" | "lesssimple" => "circle",
        "surface" | "surfaces" | "mixed" => "surface",
        _ => return Err(Error::UnknownName(base.to_string())),
    };
    let group = DeckGroup::cyclic(m)?;
    let mut g = Geometry::new(&format!("cyclicCover(m={m},base={base})"), group, Coefficients::Integers, Symmetry::Symmetric)
        .with_labels([GeneratorLabel::disk("D"), GeneratorLabel::sphere("S"), GeneratorLabel::sphere("S'")])?;
    g.set_pairing("D", "S", [(group.identity(), 1)])?;
    g.set_pairing("D", "S'", [(group.identity(), 1)])?;
    g.disks = vec!["D".into()];
    g.aliases.insert("S'".into(), "S".into());
    g.validate()?;
    Ok(g)
}

/// The `m`-fold branched cover along the torus, over `F2`: `D` meets
/// `ρ^i S` and `ρ^i S'` once exactly when `i ≡ 0`, and the meridian `mu` of
/// `∂D̃` meets `D` once. `mu` spans the kernel into relative homology.
pub fn branched_cover(m: u64) -> Result<Geometry> {
    let group = DeckGroup::cyclic(m)?;
    let mut g = Geometry::new(&format!("branchedCover(m={m})"), group, Coefficients::F2, Symmetry::Symmetric).with_labels([
        GeneratorLabel::disk("D"),
        GeneratorLabel::sphere("S"),
        GeneratorLabel::sphere("S'"),
        GeneratorLabel::meridian("mu"),
    ])?;
    let e = group.identity();
    g.set_pairing("D", "S", [(e.clone(), 1)])?;
    g.set_pairing("D", "S'", [(e.clone(), 1)])?;
    g.set_pairing("mu", "D", [(e, 1)])?;
    g.disks = vec!["D".into()];
    g.aliases.insert("S'".into(), "S".into());
    g.kernel = vec![g.basis("mu")?];
    g.validate()?;
    Ok(g)
}

/// `S^{n-1} × S^{n-1} ⊂ S^{2n}`: the same finite data as the torus over `F2`.
pub fn higher_dim_torus(n: u32) -> Result<Geometry> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("need n >= 2, got {n}")));
    }
    let group = DeckGroup::free_abelian(1)?;
    let mut g = Geometry::new(&format!("higherDimTorus(n={n})"), group, Coefficients::F2, Symmetry::Symmetric)
        .with_labels([GeneratorLabel::sphere("S_h"), GeneratorLabel::sphere("S_v"), GeneratorLabel::disk("D_v")])?;
    g.set_pairing("S_h", "S_v", [(t(0), 1), (t(1), 1)])?;
    g.set_pairing("D_v", "S_v", [(t(0), 1)])?;
    g.attaching = vec!["S_v".into()];
    g.disks = vec!["D_v".into()];
    g.validate()?;
    Ok(g)
}

/// Torus complement over `F2` plus `phiS_v`, the image of `S_v` under a
/// diffeomorphism of the pair, known only through its pairings
/// `h_i = ⟨φS̃_v, ρ^i S̃_h⟩`, `v_i = ⟨φS̃_v, ρ^i S̃_v⟩`, `b_i = ⟨φS̃_v, ρ^i D̃_h⟩`.
pub fn genus1_synthetic(h: &BTreeMap<i64, i64>, v: &BTreeMap<i64, i64>, b: &BTreeMap<i64, i64>) -> Result<Geometry> {
    let mut g = torus_complement(Coefficients::F2)?;
    g.name = "genus1Synthetic".into();
    g.add_label(GeneratorLabel::sphere("phiS_v"))?;
    let poly = |m: &BTreeMap<i64, i64>| RingElement::laurent(Coefficients::F2, m.iter().map(|(&i, &c)| (i, c)));
    g.set_pairing_element("phiS_v", "S_h", poly(h))?;
    g.set_pairing_element("phiS_v", "S_v", poly(v))?;
    g.set_pairing_element("phiS_v", "D_h", poly(b))?;
    g.attaching = vec!["phiS_v".into()];
    g.disks = vec!["D_h".into()];
    g.validate()?;
    Ok(g)
}

/// `w^e` in `F_n` as a deck element.
pub fn brunnian_power(n: u32, e: i64) -> Result<DeckElement> {
    DeckElement::from_word(DeckGroup::free(n)?, brunnian_word(n)?.pow(e))
}

/// `t^e` in the infinite cyclic deck group.
pub fn laurent_element(e: i64) -> DeckElement {
    t(e)
}

/// Collects a sparse `index → coefficient` map over `F2`, dropping even entries.
pub fn f2_support(m: &BTreeMap<i64, i64>) -> Vec<i64> {
    m.iter().filter(|(_, c)| c.rem_euclid(2) != 0).map(|(&i, _)| i).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_table_is_the_quoted_data() {
        let g = torus_complement(Coefficients::F2).unwrap();
        let p = g.pairing("S_h", "S_v").unwrap();
        assert_eq!(p, RingElement::laurent(Coefficients::F2, [(0, 1), (1, 1)]));
        assert_eq!(g.pairing("D_v", "S_v").unwrap(), RingElement::laurent(Coefficients::F2, [(0, 1)]));
        assert!(g.pairing("D_v", "S_h").unwrap().is_zero());
    }

    #[test]
    fn higher_dim_matches_torus_data() {
        let g = higher_dim_torus(3).unwrap();
        assert_eq!(g.pairing("S_h", "S_v").unwrap().render(), "1 + t");
        assert_eq!(g.pairing("D_v", "S_v").unwrap().render(), "1");
        assert!(higher_dim_torus(1).is_err());
    }

    #[test]
    fn branched_cover_has_meridian_kernel() {
        let g = branched_cover(7).unwrap();
        assert_eq!(g.group, DeckGroup::Cyclic { modulus: 7 });
        assert_eq!(g.kernel.len(), 1);
        assert_eq!(g.pairing("mu", "D").unwrap().render(), "1");
    }

    #[test]
    fn lookup_by_name() {
        let p = Params { m: Some(5), ..Params::default() };
        assert_eq!(builtin_geometry("cyclicCover", &p).unwrap().group, DeckGroup::Cyclic { modulus: 5 });
        assert_eq!(builtin_geometry("torus-complement", &p).unwrap().name, "torusComplement");
        assert!(matches!(builtin_geometry("kleinBottle", &p), Err(Error::UnknownName(_))));
    }
}
