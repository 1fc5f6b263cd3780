//! Built-in modular data.
//!
//! Entries are written down from their standard S-matrices; nothing here is
//! trusted. Every entry goes through [`Category::new`], so validation and the
//! Verlinde integrality cross-check run on each lookup.

use super::{Category, CategoryData};
use crate::cyclotomic::{CycloMatrix, Cyclotomic};
use crate::error::{Error, Result};

pub const CATALOG_NAMES: &[&str] = &[
    "trivial",
    "vec_z1",
    "vec_z2",
    "vec_z3",
    "vec_z4",
    "vec_z5",
    "vec_z6",
    "vec_z7",
    "vec_z8",
    "semion",
    "toric_code",
    "double_semion",
    "fibonacci",
    "ising",
];

/// Validated catalog entry.
pub fn catalog_get(name: &str) -> Result<Category> {
    Category::new(catalog_data(name)?)
}

/// Raw catalog entry, before validation.
pub fn catalog_data(name: &str) -> Result<CategoryData> {
    match name {
        "trivial" => modular(name, 1, &["1"], int_matrix(&[&[1]]), Some(ints(&[1]))),
        "semion" => modular(
            name,
            4,
            &["1", "s"],
            int_matrix(&[&[1, 1], &[1, -1]]),
            Some(vec![one(), Cyclotomic::zeta(4)]),
        ),
        "toric_code" => modular(
            name,
            1,
            &["1", "e", "m", "f"],
            int_matrix(&[&[1, 1, 1, 1], &[1, 1, -1, -1], &[1, -1, 1, -1], &[1, -1, -1, 1]]),
            Some(ints(&[1, 1, 1, -1])),
        ),
        // Semion ⊠ anti-semion; b = s ⊠ s̄ is a boson.
        "double_semion" => modular(
            name,
            4,
            &["1", "s", "sbar", "b"],
            int_matrix(&[&[1, 1, 1, 1], &[1, -1, 1, -1], &[1, 1, -1, -1], &[1, -1, -1, 1]]),
            Some(vec![
                one(),
                Cyclotomic::zeta(4),
                Cyclotomic::zeta_pow(4, 3),
                one(),
            ]),
        ),
        "fibonacci" => {
            let g = golden();
            let s = CycloMatrix::from_rows(vec![vec![one(), g.clone()], vec![g, -one()]]);
            modular(name, 5, &["1", "tau"], s, Some(vec![one(), Cyclotomic::zeta_pow(5, 2)]))
        }
        // The σ twist is a primitive 16th root of unity, outside Q(ζ8); twists are omitted.
        "ising" => {
            let r2 = sqrt2();
            let s = CycloMatrix::from_rows(vec![
                vec![one(), r2.clone(), one()],
                vec![r2.clone(), Cyclotomic::from_int(0), -&r2],
                vec![one(), -&r2, one()],
            ]);
            modular(name, 8, &["1", "sigma", "psi"], s, None)
        }
        _ => match name.strip_prefix("vec_z").and_then(|n| n.parse::<u32>().ok()) {
            Some(n) if (1..=8).contains(&n) && name == format!("vec_z{n}") => vec_zn(n),
            _ => Err(Error::UnknownCategory(name.to_string())),
        },
    }
}

/// Pointed modular category on `Z/n` with bicharacter `ζ_n^{ab}` and twists
/// `θ_a = exp(πi a²/n)` (`n` even) or `exp(2πi a²(n+1)/(2n))` (`n` odd).
fn vec_zn(n: u32) -> Result<CategoryData> {
    let conductor = match n {
        1 => 1,
        _ if n % 2 == 0 => 2 * n,
        _ => n,
    };
    let labels: Vec<String> = (0..n).map(|a| a.to_string()).collect();
    let labels: Vec<&str> = labels.iter().map(String::as_str).collect();
    let nn = n as usize;
    let s = CycloMatrix::from_fn(nn, nn, |a, b| {
        Cyclotomic::zeta_pow(n, (a * b) as i64).lift(conductor)
    });
    let twists = (0..n as i64)
        .map(|a| {
            if n % 2 == 0 {
                Cyclotomic::zeta_pow(2 * n, a * a)
            } else {
                Cyclotomic::zeta_pow(n, a * a * (n as i64 + 1) / 2).lift(conductor)
            }
        })
        .collect();
    modular(&format!("vec_z{n}"), conductor, &labels, s, Some(twists))
}

fn modular(
    name: &str,
    conductor: u32,
    labels: &[&str],
    s: CycloMatrix,
    twists: Option<Vec<Cyclotomic>>,
) -> Result<CategoryData> {
    CategoryData::from_modular(
        name,
        conductor,
        labels.iter().map(|l| l.to_string()).collect(),
        s,
        twists,
    )
}

fn one() -> Cyclotomic {
    Cyclotomic::from_int(1)
}

fn ints(v: &[i64]) -> Vec<Cyclotomic> {
    v.iter().map(|&x| Cyclotomic::from_int(x)).collect()
}

fn int_matrix(rows: &[&[i64]]) -> CycloMatrix {
    CycloMatrix::from_rows(rows.iter().map(|r| ints(r)).collect())
}

/// `(1 + √5)/2 = −ζ5² − ζ5³`.
fn golden() -> Cyclotomic {
    -(Cyclotomic::zeta_pow(5, 2) + Cyclotomic::zeta_pow(5, 3))
}

/// `√2 = ζ8 − ζ8³`.
fn sqrt2() -> Cyclotomic {
    Cyclotomic::zeta(8) - Cyclotomic::zeta_pow(8, 3)
}
