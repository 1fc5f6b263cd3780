
use super::{verlinde_fusion, CategoryData};
use crate::check::Check;
use crate::cyclotomic::{CycloMatrix, Cyclotomic};

/// Runs every structural and algebraic check on `data`. Never aborts: a
/// failing check that makes later ones meaningless turns those into skips.
pub fn validate(data: &CategoryData) -> Vec<Check> {
    let mut out = Vec::new();
    let r = data.rank();
    let ring = &data.ring;
    let labels = ring.labels();

    let mut distinct = labels.to_vec();
    distinct.sort();
    distinct.dedup();
    out.push(if distinct.len() == labels.len() {
        Check::pass("labels-distinct", format!("{r} labels"))
    } else {
        Check::fail("labels-distinct", "duplicate labels")
    });

    let dims = &data.pivotal.dims;
    if dims.len() != r {
        out.push(Check::fail("dims-shape", format!("{} dimensions for rank {r}", dims.len())));
        return out;
    }

    out.push(conductor_check(data));

    let unit = first_failure(r, r, |j, k| {
        let want = u32::from(j == k);
        (ring.n(0, j, k) != want || ring.n(j, 0, k) != want).then(|| {
            format!("unit axiom fails at ({},{})", labels[j], labels[k])
        })
    });
    out.push(Check::from_search("unit-axiom", "N_0j^k = N_j0^k = δ_jk", unit));

    let dual = match ring.dual_involution() {
        Ok(d) => {
            let bad = (0..r).find(|&i| d[d[i]] != i || (i == 0 && d[0] != 0));
            match bad {
                None => {
                    out.push(Check::pass("duality-axiom", "N_ij^0 = δ_{j,i*}, involution fixing 0"));
                    Some(d)
                }
                Some(i) => {
                    out.push(Check::fail(
                        "duality-axiom",
                        format!("duality is not an involution fixing 0 at {}", labels[i]),
                    ));
                    None
                }
            }
        }
        Err(e) => {
            out.push(Check::fail("duality-axiom", e.to_string()));
            None
        }
    };

    let assoc = (|| {
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    for l in 0..r {
                        let lhs: u64 = (0..r).map(|p| u64::from(ring.n(i, j, p)) * u64::from(ring.n(p, k, l))).sum();
                        let rhs: u64 = (0..r).map(|q| u64::from(ring.n(j, k, q)) * u64::from(ring.n(i, q, l))).sum();
                        if lhs != rhs {
                            return Some(format!(
                                "(V_{} V_{}) V_{} and V_{} (V_{} V_{}) differ at {}",
                                labels[i], labels[j], labels[k], labels[i], labels[j], labels[k], labels[l]
                            ));
                        }
                    }
                }
            }
        }
        None
    })();
    out.push(Check::from_search("associativity", "fusion is associative", assoc));

    let dims_ok = dims[0].is_one() && dims.iter().all(|d| !d.is_zero());
    out.push(if dims_ok {
        Check::pass("dims-unit-nonzero", "d_0 = 1 and every d_i ≠ 0")
    } else {
        Check::fail("dims-unit-nonzero", "need d_0 = 1 and d_i ≠ 0")
    });

    let hom = first_failure(r, r, |i, j| {
        let lhs = &dims[i] * &dims[j];
        let rhs: Cyclotomic = ring
            .support(i, j)
            .map(|k| &Cyclotomic::from_int(i64::from(ring.n(i, j, k))) * &dims[k])
            .sum();
        (lhs != rhs).then(|| format!("d_{} d_{} ≠ Σ_k N d_k", labels[i], labels[j]))
    });
    out.push(Check::from_search("dimension-homomorphism", "d_i d_j = Σ_k N_ij^k d_k", hom));

    match &dual {
        Some(d) => {
            let bad = (0..r).find(|&i| dims[d[i]] != dims[i]);
            out.push(Check::from_search(
                "spherical",
                "d_{i*} = d_i",
                bad.map(|i| format!("d_{} ≠ d_{}*", labels[i], labels[i])),
            ));
            match data.global_dim() {
                Ok(dim) => out.push(Check::pass("global-dimension-nonzero", format!("dim C = {dim}"))),
                Err(e) => out.push(Check::fail("global-dimension-nonzero", e.to_string())),
            }
        }
        None => {
            out.push(Check::skip("spherical", "needs a valid duality"));
            out.push(Check::skip("global-dimension-nonzero", "needs a valid duality"));
        }
    }

    match &data.modular {
        Some(m) => modular_checks(data, &m.s_matrix, m.twists.as_deref(), &mut out),
        None => out.push(Check::skip("s-matrix", "fusion_ring input carries no S-matrix")),
    }

    match &data.char_table {
        Some(alpha) => char_table_checks(data, alpha, &mut out),
        None if data.modular.is_none() => {
            out.push(Check::skip("char-table", "no character table provided"));
        }
        None => {}
    }
    out
}

fn conductor_check(data: &CategoryData) -> Check {
    let n = data.conductor;
    let mut values: Vec<&Cyclotomic> = data.pivotal.dims.iter().collect();
    if let Some(m) = &data.modular {
        values.extend(m.s_matrix.entries());
        values.extend(m.twists.iter().flatten());
    }
    if let Some(a) = &data.char_table {
        values.extend(a.entries());
    }
    if n == 0 {
        return Check::fail("conductor", "conductor must be positive");
    }
    match values.iter().find(|v| n % v.conductor() != 0) {
        None => Check::pass("conductor", format!("all values in Q(ζ{n})")),
        Some(v) => Check::fail(
            "conductor",
            format!("value {v} has conductor {} not dividing {n}", v.conductor()),
        ),
    }
}

fn modular_checks(data: &CategoryData, s: &CycloMatrix, twists: Option<&[Cyclotomic]>, out: &mut Vec<Check>) {
    let r = data.rank();
    let labels = data.ring.labels();
    if !s.is_square() || s.rows() != r {
        out.push(Check::fail("s-shape", format!("s_matrix is {}x{}, rank {r}", s.rows(), s.cols())));
        return;
    }
    out.push(Check::pass("s-shape", format!("{r}x{r}")));

    let asym = first_failure(r, r, |i, j| {
        (s.get(i, j) != s.get(j, i)).then(|| format!("s[{0},{1}] ≠ s[{1},{0}]", labels[i], labels[j]))
    });
    out.push(Check::from_search("s-symmetric", "s_ij = s_ji", asym));

    let row0 = (0..r).find(|&i| s.get(0, i) != &data.pivotal.dims[i]);
    out.push(Check::from_search(
        "s-dimension-row",
        "s_0i = d_i",
        row0.map(|i| format!("s_0,{} ≠ d_{}", labels[i], labels[i])),
    ));

    let rank = s.rank();
    out.push(if rank == r {
        Check::pass("s-invertible", "S-matrix is non-degenerate")
    } else {
        Check::fail("s-invertible", format!("S-matrix has rank {rank} < {r}"))
    });

    out.push(match verlinde_fusion(s) {
        Ok(n) if n == data.ring.tensor() => Check::pass("verlinde-integrality", "Verlinde formula reproduces the fusion tensor"),
        Ok(_) => Check::fail("verlinde-integrality", "Verlinde coefficients differ from the fusion tensor"),
        Err(e) => Check::fail("verlinde-integrality", e.to_string()),
    });

    match twists {
        None => out.push(Check::skip("twists", "no twists provided")),
        Some(t) if t.len() != r => out.push(Check::fail("twists", format!("{} twists for rank {r}", t.len()))),
        Some(t) => {
            let order = if data.conductor % 2 == 0 { data.conductor } else { 2 * data.conductor };
            let bad = t.iter().position(|x| !x.pow(order).is_one());
            out.push(Check::from_search(
                "twists",
                "every twist is a root of unity",
                bad.map(|i| format!("θ_{} is not a root of unity in Q(ζ{})", labels[i], data.conductor)),
            ));
        }
    }
}

fn char_table_checks(data: &CategoryData, alpha: &CycloMatrix, out: &mut Vec<Check>) {
    let r = data.rank();
    let ring = &data.ring;
    if alpha.rows() != r || alpha.cols() != r {
        out.push(Check::fail("char-table-shape", format!("char_table is {}x{}, rank {r}", alpha.rows(), alpha.cols())));
        return;
    }
    out.push(Check::pass("char-table-shape", format!("{r}x{r}")));

    let mut bad = None;
    'outer: for col in 0..r {
        for i in 0..r {
            for k in 0..r {
                let lhs = alpha.get(i, col) * alpha.get(k, col);
                let rhs: Cyclotomic = ring
                    .support(i, k)
                    .map(|l| &Cyclotomic::from_int(i64::from(ring.n(i, k, l))) * alpha.get(l, col))
                    .sum();
                if lhs != rhs {
                    bad = Some(format!("column {col} is not multiplicative at ({i},{k})"));
                    break 'outer;
                }
            }
        }
        if !alpha.get(0, col).is_one() {
            bad = Some(format!("column {col} does not send the unit to 1"));
            break;
        }
    }
    out.push(Check::from_search("char-table-characters", "every column is a character of the fusion ring", bad));

    let rank = alpha.rank();
    out.push(if rank == r {
        Check::pass("char-table-invertible", "character table is non-degenerate")
    } else {
        Check::fail("char-table-invertible", format!("character table has rank {rank} < {r}"))
    });

    let dims = &data.pivotal.dims;
    let found = (0..r).any(|col| (0..r).all(|i| alpha.get(i, col) == &dims[i]));
    out.push(if found {
        Check::pass("char-table-dimension-column", "the dimension character is a column")
    } else {
        Check::fail("char-table-dimension-column", "no column equals the dimension character")
    });
}

fn first_failure(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Option<String>) -> Option<String> {
    (0..rows).find_map(|i| (0..cols).find_map(|j| f(i, j)))
}

#[cfg(test)]
mod tests {
    use super::super::{catalog_data, FusionRing};
    use super::*;
    use crate::check::all_passed;

    fn failed(report: &[Check]) -> Vec<&str> {
        report.iter().filter(|c| c.is_fail()).map(|c| c.id.as_str()).collect()
    }

    #[test]
    fn toric_code_passes() {
        let report = validate(&catalog_data("toric_code").unwrap());
        assert!(all_passed(&report), "{report:?}");
    }

    #[test]
    fn flipped_s_entry_fails_verlinde() {
        let mut data = catalog_data("toric_code").unwrap();
        let s = &mut data.modular.as_mut().unwrap().s_matrix;
        s.set(1, 2, Cyclotomic::from_int(1));
        s.set(2, 1, Cyclotomic::from_int(1));
        let report = validate(&data);
        let bad = failed(&report);
        assert!(!bad.contains(&"s-symmetric"));
        assert!(bad.contains(&"verlinde-integrality"), "{bad:?}");
    }

    #[test]
    fn doubled_unit_multiplicity_fails_duality() {
        let ring = FusionRing::new(
            vec!["1".into(), "x".into()],
            &[vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![2, 0]]],
        )
        .unwrap();
        let data = CategoryData::from_fusion_ring("bad", 1, ring, vec![Cyclotomic::from_int(1); 2], None);
        let report = validate(&data);
        assert!(failed(&report).contains(&"duality-axiom"));
    }

    #[test]
    fn validation_is_total_on_shape_errors() {
        let mut data = catalog_data("fibonacci").unwrap();
        data.pivotal.dims.pop();
        let report = validate(&data);
        assert!(failed(&report).contains(&"dims-shape"));
        let mut data = catalog_data("fibonacci").unwrap();
        data.modular.as_mut().unwrap().twists = Some(vec![Cyclotomic::from_int(2), Cyclotomic::from_int(1)]);
        assert!(failed(&validate(&data)).contains(&"twists"));
    }

    #[test]
    fn non_spherical_dims_are_rejected() {
        let mut data = catalog_data("vec_z3").unwrap();
        // d_1 = ζ3, d_2 = ζ3² is a dimension homomorphism but not spherical.
        data.modular = None;
        data.pivotal.dims = vec![Cyclotomic::from_int(1), Cyclotomic::zeta(3), Cyclotomic::zeta_pow(3, 2)];
        let report = validate(&data);
        let bad = failed(&report);
        assert!(bad.contains(&"spherical"), "{bad:?}");
        assert!(!bad.contains(&"dimension-homomorphism"), "{bad:?}");
    }
}
