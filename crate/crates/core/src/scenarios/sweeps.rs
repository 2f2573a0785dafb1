//! Grid sweeps. Each grid point is computed independently (in parallel) and
//! the checks are assembled in grid order, so the output does not depend on
//! scheduling.

use num_integer::Integer;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::presentations::compare_brunnian_modules;

use super::montesinos::{classify_gluing, montesinos_matrix_for, montesinos_parity, realizes_lens, ManifoldTag};
use super::{canonical_name, run_theorem, Check, Params, Report, Source};

pub const SWEEPS: &[(&str, &str)] = &[
    ("morsesimple", "morsesimple-s3 on 1 <= k, l <= max"),
    ("higher-dim", "higher-dim-knots on 1 <= k, l <= max; n"),
    ("brunnian", "pairwise module distinctness over unordered {k, l} with entries <= max; n"),
    ("montesinos", "gluing matrices for coprime 2 <= p < q <= max"),
];

pub fn run_sweep(kind: &str, params: &Params) -> Result<Report> {
    let max = params.max.unwrap_or(10);
    if max < 1 {
        return Err(Error::InvalidParameter(format!("max >= 1 required, got {max}")));
    }
    let source = Source::Sweep { sweep: kind.to_string(), params: params.clone() };
    let title = format!("sweep {kind} {}", params.summary()).trim_end().to_string();
    let mut r = Report::new(source, title);
    match canonical_name(kind).as_str() {
        "morsesimple" | "morsesimples3" => knot_grid(&mut r, "morsesimple-s3", params, max)?,
        "higherdim" | "higherdimknots" => knot_grid(&mut r, "higher-dim-knots", params, max)?,
        "brunnian" => brunnian(&mut r, params.n.unwrap_or(2), max)?,
        "montesinos" => montesinos(&mut r, max)?,
        _ => return Err(Error::UnknownName(kind.to_string())),
    }
    Ok(r)
}

/// One check per `(k, l)`: the computed dimension against `2k+2l+2`,
/// passing only if every check of the underlying theorem passed.
fn knot_grid(r: &mut Report, theorem: &str, params: &Params, max: i64) -> Result<()> {
    let grid: Vec<(i64, i64)> = (1..=max).flat_map(|k| (1..=max).map(move |l| (k, l))).collect();
    let reports: Vec<Report> = grid
        .par_iter()
        .map(|&(k, l)| run_theorem(theorem, &Params { k: Some(k), l: Some(l), n: params.n, ..Params::default() }))
        .collect::<Result<_>>()?;
    let mut fs = serde_json::Map::new();
    for (&(k, l), sub) in grid.iter().zip(&reports) {
        let dim = sub.checks.iter().find(|c| c.name.starts_with("dim")).map_or("?".into(), |c| c.computed.clone());
        r.check(Check {
            name: format!("k={k} l={l}"),
            computed: dim,
            expected: Some((2 * k + 2 * l + 2).to_string()),
            pass: sub.passed(),
        });
        fs.insert(format!("{k},{l}"), sub.artifacts.get("f").cloned().unwrap_or_default());
    }
    r.artifact("f", fs);
    Ok(())
}

fn brunnian(r: &mut Report, n: u32, max: i64) -> Result<()> {
    let pairs: Vec<(i64, i64)> = (1..=max).flat_map(|k| (k..=max).map(move |l| (k, l))).collect();
    let jobs: Vec<(usize, usize)> =
        (0..pairs.len()).flat_map(|i| (i + 1..pairs.len()).map(move |j| (i, j))).collect();
    let results = jobs
        .par_iter()
        .map(|&(i, j)| {
            let ((k, l), (k2, l2)) = (pairs[i], pairs[j]);
            compare_brunnian_modules(k, l, k2, l2, n)
        })
        .collect::<Result<Vec<_>>>()?;

    let mut matrix = vec![vec!['='; pairs.len()]; pairs.len()];
    for (&(i, j), cmp) in jobs.iter().zip(&results) {
        let mark = if cmp.distinguished { 'D' } else { '?' };
        matrix[i][j] = mark;
        matrix[j][i] = mark;
    }
    for &(k, l) in &pairs {
        let cmp = compare_brunnian_modules(k, l, k, l, n)?;
        r.check(Check::compare(&format!("phi(f_{{{k},{l}}}) not a unit"), cmp.first_nontrivial, true));
    }
    for (&(i, j), cmp) in jobs.iter().zip(&results) {
        let ((k, l), (k2, l2)) = (pairs[i], pairs[j]);
        r.check(Check::compare(&format!("{{{k},{l}}} vs {{{k2},{l2}}}"), cmp.distinguished, true));
    }
    let header: Vec<String> = pairs.iter().map(|(k, l)| format!("{k}{l}")).collect();
    r.note(format!("n={n}; D = distinguished, ? = inconclusive"));
    r.note(format!("      {}", header.join(" ")));
    for (row, &(k, l)) in matrix.iter().zip(&pairs) {
        let cells: Vec<String> = row.iter().map(|c| format!("{c:>2}")).collect();
        r.note(format!("{k},{l}  {}", cells.join(" ")));
    }
    r.artifact("pairs", &pairs);
    r.artifact("matrix", matrix.iter().map(|row| row.iter().collect::<String>()).collect::<Vec<_>>());
    Ok(())
}

fn montesinos(r: &mut Report, max: i64) -> Result<()> {
    let pairs: Vec<(i64, i64)> =
        (2..=max).flat_map(|p| (p + 1..=max).map(move |q| (p, q))).filter(|(p, q)| p.gcd(q) == 1).collect();
    let rows = pairs
        .par_iter()
        .map(|&(p, q)| {
            let m = montesinos_matrix_for(p, q)?;
            let tag = classify_gluing(&m);
            let ok = m.det() == 1
                && montesinos_parity(&m)
                && (realizes_lens(tag, p, q) || ((p + q) % 2 == 0 && realizes_lens(tag, p, p + q)));
            Ok((m, tag, ok))
        })
        .collect::<Result<Vec<_>>>()?;
    for (&(p, q), (m, tag, ok)) in pairs.iter().zip(&rows) {
        let want = ManifoldTag::lens(p, q)?;
        r.check(Check { name: format!("L({p},{q})"), computed: format!("{m} -> {tag}"), expected: Some(want.to_string()), pass: *ok });
    }
    Ok(())
}
