//! The one-shot verification suite: validation, class-function identities,
//! lattice laws, grading, the prime-index check and centralizers.

use crate::category::{validate, verlinde_fusion, Category};
use crate::character::identity_suite;
use crate::check::{Check, Status};

/// Every check, in a fixed order. Per-subcategory and per-pair checks are
/// folded into one line per identity.
pub fn verify(cat: &Category) -> Vec<Check> {
    let mut out = validate(cat.data());
    out.extend(identity_suite(cat));
    out.extend(lattice_checks(cat));
    out.extend(centralizer_checks(cat));
    out
}

/// Folds `cases` into one check named `id`: the first failure wins, otherwise
/// a pass (or a skip when every case was skipped).
pub fn fold(id: &str, ok_detail: &str, cases: Vec<Check>) -> Check {
    if let Some(bad) = cases.iter().find(|c| c.is_fail()) {
        return Check::fail(id, format!("{}: {}", bad.id, bad.detail));
    }
    if !cases.is_empty() && cases.iter().all(|c| c.status == Status::Skip) {
        return Check::skip(id, cases[0].detail.clone());
    }
    Check::pass(id, format!("{ok_detail} ({} cases)", cases.len()))
}

fn lattice_checks(cat: &Category) -> Vec<Check> {
    let mut out = Vec::new();
    let subs = match cat.enumerate_subcats() {
        Ok(s) => s,
        Err(e) => {
            out.push(Check::skip("subcategory-lattice", e.to_string()));
            return out;
        }
    };
    let joins = cat.enumerate_subcats_by_joins();
    out.push(Check::from_search(
        "enumeration-agreement",
        format!("{} subcategories by both enumerations", subs.len()),
        (joins != subs).then(|| format!("subset closure gives {}, joins give {}", subs.len(), joins.len())),
    ));

    if cat.has_char_table() {
        let index = subs
            .iter()
            .map(|d| match cat.subcat_invariants(d) {
                Ok(_) => Check::pass(d.display(cat), ""),
                Err(e) => Check::fail(d.display(cat), e.to_string()),
            })
            .collect();
        out.push(fold("index-sum", "Σ_{j∈L_D} |C^j| = dim C/dim D = ε_1(ℓ_D)", index));
        let mut pairs = Vec::new();
        for d in &subs {
            for e in &subs {
                let id = format!("{} {}", d.display(cat), e.display(cat));
                pairs.push(match cat.meet_join(d, e) {
                    Ok(_) => Check::pass(id, ""),
                    Err(err) => Check::fail(id, err.to_string()),
                });
            }
        }
        out.push(fold(
            "lattice-laws",
            "λ_{D∨E} = λ_Dλ_E, L_{D∨E} = L_D∩L_E, ℓ_{D∩E} scalar identity, L antitone",
            pairs,
        ));
    } else {
        out.push(Check::skip("index-sum", "requires a character table"));
        out.push(Check::skip("lattice-laws", "requires a character table"));
    }

    match cat.grading() {
        Ok(g) => {
            out.push(Check::pass(
                "grading",
                format!("|U_C| = {}, C_ad = {}", g.order(), g.adjoint.display(cat)),
            ));
            out.extend(g.checks);
        }
        Err(e) => out.push(Check::fail("grading", e.to_string())),
    }

    out.push(match cat.prime_index_check() {
        Ok(r) if !r.applicable => Check::skip("prime-index", r.reason.unwrap_or_default()),
        Ok(r) => Check::from_search(
            "prime-index",
            format!(
                "p = {}: {} index-p subcategories ↔ {} normal subgroups, all contain C_ad",
                r.prime.unwrap_or(0),
                r.subcats.len(),
                r.subgroups.len()
            ),
            (!r.passed).then(|| {
                format!(
                    "{} index-p subcategories, {} subgroups, {} matched, contain C_ad: {}",
                    r.subcats.len(),
                    r.subgroups.len(),
                    r.bijection.len(),
                    r.contain_adjoint
                )
            }),
        ),
        Err(e) => Check::fail("prime-index", e.to_string()),
    });
    out
}

fn centralizer_checks(cat: &Category) -> Vec<Check> {
    const IDS: &[&str] = &[
        "verlinde-roundtrip",
        "centralizer-cointegral",
        "centralizer-ell",
        "centralizer-support",
        "centralizer-routes",
        "centralizer-idempotent",
        "double-centralizer",
    ];
    let Some(m) = cat.modular() else {
        return IDS.iter().map(|id| Check::skip(*id, "requires an S-matrix")).collect();
    };
    let mut out = vec![match verlinde_fusion(&m.s_matrix) {
        Ok(n) if n == cat.ring().tensor() => Check::pass("verlinde-roundtrip", "Verlinde fusion equals the stored tensor"),
        Ok(_) => Check::fail("verlinde-roundtrip", "Verlinde fusion differs from the stored tensor"),
        Err(e) => Check::fail("verlinde-roundtrip", e.to_string()),
    }];
    let subs = match cat.enumerate_subcats() {
        Ok(s) => s,
        Err(e) => {
            out.extend(IDS[1..].iter().map(|id| Check::skip(*id, e.to_string())));
            return out;
        }
    };
    let per_subcat: Vec<Vec<Check>> = subs.iter().map(|d| cat.verify_main_identity(d)).collect();
    let details = [
        "F_λ(f_Q(λ_D)) = (dim D'/dim C) λ_D'",
        "ℓ_D' = (dim C/dim D') f_Q(λ_D) = Σ_{j∈D} c̄_j",
        "L_D' = Irr(D)",
        "s-criterion and f_Q(λ_D) support agree",
        "f_Q(λ_D) is idempotent",
    ];
    for (k, id) in IDS[1..6].iter().enumerate() {
        let cases = per_subcat
            .iter()
            .flat_map(|checks| {
                checks
                    .iter()
                    .filter(|c| c.id.starts_with(id) || c.id.starts_with("centralizer-theorem"))
                    .cloned()
                    .collect::<Vec<_>>()
            })
            .collect();
        out.push(fold(id, details[k], cases));
    }
    out.push(match cat.double_centralizer_check() {
        Ok(checks) => fold("double-centralizer", "(D')' ⊇ D and dim D dim D' = dim C; antitone", checks),
        Err(e) => Check::fail("double-centralizer", e.to_string()),
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{catalog_get, CATALOG_NAMES};
    use crate::check::all_passed;

    #[test]
    fn catalog_verifies() {
        for name in CATALOG_NAMES {
            let report = verify(&catalog_get(name).unwrap());
            assert!(all_passed(&report), "{name}: {:?}", report.iter().filter(|c| c.is_fail()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn fold_semantics() {
        assert!(fold("x", "ok", vec![Check::pass("a", ""), Check::pass("b", "")]).is_pass());
        assert!(fold("x", "ok", vec![Check::pass("a", ""), Check::fail("b", "no")]).is_fail());
        assert_eq!(fold("x", "ok", vec![Check::skip("a", "n/a")]).status, Status::Skip);
    }
}
