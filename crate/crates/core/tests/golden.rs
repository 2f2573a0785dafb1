//! Frozen pairing tables for the built-in geometries.
//!
//! Each table is stored in inline scenario form under `tests/golden/`. Set
//! `BARBELL_BLESS=1` to rewrite them after an intentional change.

use std::collections::BTreeMap;
use std::path::PathBuf;

use barbell::scenarios::file::InlineGeometry;
use barbell::scenarios::geometries::{builtin_geometry, BUILTIN_GEOMETRIES};
use barbell::scenarios::Params;

fn params_for(name: &str) -> Params {
    let map = |pairs: &[(i64, i64)]| Some(pairs.iter().copied().collect::<BTreeMap<_, _>>());
    match name {
        "genusGComplement" => Params { g: Some(3), ..Params::default() },
        "sphereTorusLink" => Params { n: Some(3), ..Params::default() },
        "surfacesComplement" => Params { m: Some(1), n: Some(2), ..Params::default() },
        "cyclicCover" => Params { m: Some(4), ..Params::default() },
        "branchedCover" => Params { m: Some(7), ..Params::default() },
        "higherDimTorus" => Params { n: Some(3), ..Params::default() },
        "genus1Synthetic" => Params {
            h: map(&[(-1, 1), (0, 1)]),
            v: map(&[(-1, 1), (0, 1)]),
            b: map(&[(2, 1), (-3, 1)]),
            ..Params::default()
        },
        _ => Params::default(),
    }
}

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.json"))
}

#[test]
fn builtin_pairing_tables_match_frozen_copies() {
    let bless = std::env::var_os("BARBELL_BLESS").is_some();
    for (name, _) in BUILTIN_GEOMETRIES {
        let geom = builtin_geometry(name, &params_for(name)).unwrap_or_else(|e| panic!("{name}: {e}"));
        let inline = InlineGeometry::from_geometry(&geom).unwrap_or_else(|e| panic!("{name}: {e}"));
        let text = serde_json::to_string_pretty(&inline).unwrap() + "\n";
        let path = golden_path(name);
        if bless {
            std::fs::write(&path, &text).unwrap();
            continue;
        }
        let frozen = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(text, frozen, "{name} differs from its frozen table");
    }
}

#[test]
fn inline_form_rebuilds_the_same_geometry() {
    for (name, _) in BUILTIN_GEOMETRIES {
        let geom = builtin_geometry(name, &params_for(name)).unwrap();
        let inline = InlineGeometry::from_geometry(&geom).unwrap();
        let rebuilt = inline.build().unwrap();
        assert_eq!(InlineGeometry::from_geometry(&rebuilt).unwrap(), inline, "{name}");
        let json = serde_json::to_string(&inline).unwrap();
        assert_eq!(serde_json::from_str::<InlineGeometry>(&json).unwrap(), inline, "{name}");
    }
}

#[test]
fn torus_table_has_the_documented_entries() {
    let text = std::fs::read_to_string(golden_path("torusComplement")).unwrap();
    let g: InlineGeometry = serde_json::from_str(&text).unwrap();
    let find = |a: &str, b: &str| g.pairings.iter().find(|p| p.a == a && p.b == b).map(|p| p.terms.clone());
    // 1 + t between the two tori spheres, 1 between each sphere and its dual disk.
    assert_eq!(find("S_h", "S_v").unwrap().len(), 2);
    assert!(find("S_h", "S_h").is_none());
}
