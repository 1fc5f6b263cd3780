use num_traits::Zero;

use super::{ce_mul, CentralElement, ClassFunction, ConjugacyData};
use crate::category::Category;
use crate::check::Check;
use crate::cyclotomic::Cyclotomic;

/// Exact checks of the class-function identities. Checks that need an
/// S-matrix are reported as skipped on fusion-ring input.
pub fn identity_suite(cat: &Category) -> Vec<Check> {
    let mut out = Vec::new();
    let lambda = cat.cointegral_full();
    out.push(if cat.pairing(&lambda, &cat.unit_element()).is_one() {
        Check::pass("cointegral-normalization", "⟨λ_C, u⟩ = 1")
    } else {
        Check::fail("cointegral-normalization", "⟨λ_C, u⟩ ≠ 1")
    });
    out.push(trace_form(cat));
    out.push(fourier_checks(cat, &lambda));

    let conj = match cat.conjugacy_data() {
        Ok(c) => c,
        Err(e) => {
            out.push(Check::skip("conjugacy-data", e.to_string()));
            return out;
        }
    };
    out.push(idempotents(cat, conj));
    out.push(Check::from_search(
        "first-idempotent-is-cointegral",
        "F_0 = λ_C",
        (conj.idempotents[0] != lambda).then(|| format!("F_0 = {} differs from λ_C", conj.idempotents[0])),
    ));
    out.push(class_pairing(cat, conj));
    out.push(class_sizes(cat, conj));
    out.push(dual_bases(cat, conj));
    out.push(character_values(cat, conj));
    out.push(class_sum_expansion(cat, conj));
    out.push(second_orthogonality(cat, conj));

    const MODULAR: &[&str] = &[
        "drinfeld-integral",
        "drinfeld-idempotents",
        "drinfeld-homomorphism",
        "drinfeld-counit",
        "drinfeld-unit",
        "char-table-symmetry",
        "drinfeld-class-sums",
        "class-sizes-squared",
        "class-sum-products",
    ];
    if !cat.is_modular() {
        out.extend(MODULAR.iter().map(|id| Check::skip(*id, "requires an S-matrix")));
        return out;
    }
    out.extend(modular_checks(cat, conj));
    out
}

fn label(cat: &Category, i: usize) -> &str {
    cat.label(i)
}

fn pairs(r: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..r).flat_map(move |i| (0..r).map(move |j| (i, j)))
}

fn kron(i: usize, j: usize) -> Cyclotomic {
    Cyclotomic::from_int(i64::from(i == j))
}

fn trace_form(cat: &Category) -> Check {
    let bad = pairs(cat.rank()).find(|&(i, j)| {
        cat.trace_tau(&cat.cf_mul(&cat.chi(i), &cat.chi(j))) != kron(j, cat.dual(i))
    });
    Check::from_search(
        "trace-form",
        "τ(χ_i χ_j) = δ_{i,j*}",
        bad.map(|(i, j)| format!("fails at (i,j) = ({},{})", label(cat, i), label(cat, j))),
    )
}

fn fourier_checks(cat: &Category, lambda: &ClassFunction) -> Check {
    let r = cat.rank();
    for i in 0..r {
        let e = cat.idempotent_e(i);
        let f = cat.fourier(&e);
        if cat.fourier_inv(&f) != e {
            return Check::fail("fourier-inverse", format!("F^-1 F(E_{}) ≠ E_{}", label(cat, i), label(cat, i)));
        }
        if f != cat.act_arrow(lambda, &cat.antipode(&e)) {
            return Check::fail("fourier-inverse", format!("F(E_{}) ≠ λ_C ← S(E_{})", label(cat, i), label(cat, i)));
        }
        let chi = cat.chi(i);
        if cat.fourier(&cat.fourier_inv(&chi)) != chi {
            return Check::fail("fourier-inverse", format!("F F^-1(χ_{}) ≠ χ_{}", label(cat, i), label(cat, i)));
        }
    }
    Check::pass("fourier-inverse", "F_λ and F_λ^-1 are inverse; F_λ(a) = λ_C ← S(a)")
}

fn idempotents(cat: &Category, conj: &ConjugacyData) -> Check {
    let r = cat.rank();
    let f = &conj.idempotents;
    if let Some((j, k)) = pairs(r).find(|&(j, k)| {
        let p = cat.cf_mul(&f[j], &f[k]);
        if j == k {
            p != f[j]
        } else {
            !p.is_zero()
        }
    }) {
        return Check::fail("idempotents", format!("F_{j} F_{k} ≠ δ_jk F_j"));
    }
    let total = f.iter().fold(ClassFunction::zero(r), |acc, x| acc.add(x));
    Check::from_search(
        "idempotents",
        "F_j F_k = δ_jk F_j and Σ_j F_j = χ_0",
        (total != cat.chi(0)).then(|| "Σ_j F_j ≠ χ_0".to_string()),
    )
}

fn class_pairing(cat: &Category, conj: &ConjugacyData) -> Check {
    let bad = pairs(cat.rank()).find(|&(i, j)| {
        let lhs = cat.pairing(&conj.idempotents[i], &conj.class_sums[j]);
        let rhs = if i == j {
            cat.global_dim() * &cat.trace_tau(&conj.idempotents[i])
        } else {
            Cyclotomic::zero()
        };
        lhs != rhs
    });
    Check::from_search(
        "class-pairing",
        "⟨F_i, c̄_j⟩ = δ_ij dim C τ(F_i)",
        bad.map(|(i, j)| format!("fails at (i,j) = ({i},{j})")),
    )
}

fn class_sizes(cat: &Category, conj: &ConjugacyData) -> Check {
    let bad = (0..cat.rank()).find(|&j| conj.sizes[j].is_zero() || &(&conj.n[j] * &conj.sizes[j]) != cat.global_dim());
    Check::from_search(
        "class-sizes",
        "|C^j| ≠ 0 and n_j |C^j| = dim C",
        bad.map(|j| format!("fails at class {j}")),
    )
}

/// `Σ_i F_i ⊗ n_i F_i = Σ_i χ_i ⊗ χ_{i*}`, compared coefficient by coefficient.
fn dual_bases(cat: &Category, conj: &ConjugacyData) -> Check {
    let r = cat.rank();
    let bad = pairs(r).find(|&(a, b)| {
        let lhs: Cyclotomic = (0..r)
            .map(|i| &(&conj.n[i] * &conj.idempotents[i].coeffs[a]) * &conj.idempotents[i].coeffs[b])
            .sum();
        lhs != kron(b, cat.dual(a))
    });
    Check::from_search(
        "dual-bases",
        "Σ_i F_i ⊗ n_i F_i = Σ_i χ_i ⊗ χ_{i*}",
        bad.map(|(a, b)| format!("coefficient of χ_{} ⊗ χ_{} differs", label(cat, a), label(cat, b))),
    )
}

/// `α_ij = ⟨χ_i, c̄_j / |C^j|⟩`.
fn character_values(cat: &Category, conj: &ConjugacyData) -> Check {
    let bad = (0..cat.rank()).find_map(|j| {
        let inv = conj.sizes[j].inv().ok()?;
        let g = conj.class_sums[j].scale(&inv);
        (0..cat.rank()).find(|&i| &cat.pairing(&cat.chi(i), &g) != conj.alpha.get(i, j)).map(|i| (i, j))
    });
    Check::from_search(
        "character-values",
        "α_ij = ⟨χ_i, c̄_j/|C^j|⟩",
        bad.map(|(i, j)| format!("fails at (i,j) = ({},{j})", label(cat, i))),
    )
}

/// `c̄_i = (dim C / n_i) Σ_j (α_ji / d_j) E_j`.
fn class_sum_expansion(cat: &Category, conj: &ConjugacyData) -> Check {
    let r = cat.rank();
    let bad = (0..r).find(|&i| {
        let scale = cat.global_dim() * &conj.n[i].inv().unwrap_or_else(|_| Cyclotomic::zero());
        let expected = CentralElement::new((0..r).map(|j| &(conj.alpha.get(j, i) * cat.inv_dim(j)) * &scale).collect());
        expected != conj.class_sums[i]
    });
    Check::from_search(
        "class-sum-expansion",
        "c̄_i = (dim C/n_i) Σ_j (α_ji/d_j) E_j",
        bad.map(|i| format!("fails for class {i}")),
    )
}

/// `Σ_j α_ji α_{j*l} = δ_il dim C / |C^i|`.
fn second_orthogonality(cat: &Category, conj: &ConjugacyData) -> Check {
    let r = cat.rank();
    let a = &conj.alpha;
    let bad = pairs(r).find(|&(i, l)| {
        let lhs: Cyclotomic = (0..r).map(|j| a.get(j, i) * a.get(cat.dual(j), l)).sum();
        let rhs = if i == l { conj.n[i].clone() } else { Cyclotomic::zero() };
        lhs != rhs
    });
    Check::from_search(
        "second-orthogonality",
        "Σ_j α_ji α_{j*l} = δ_il dim C/|C^i|",
        bad.map(|(i, l)| format!("fails at (i,l) = ({i},{l})")),
    )
}

fn modular_checks(cat: &Category, conj: &ConjugacyData) -> Vec<Check> {
    let r = cat.rank();
    let fq = |f: &ClassFunction| cat.drinfeld_map(f).expect("modular input");
    let images: Vec<CentralElement> = (0..r).map(|i| fq(&cat.chi(i))).collect();
    let mut out = Vec::new();

    out.push(Check::from_search(
        "drinfeld-integral",
        "f_Q(F_0) = f_Q(λ_C) = E_0",
        (fq(&conj.idempotents[0]) != cat.idempotent_e(0)).then(|| "f_Q(F_0) ≠ E_0".to_string()),
    ));

    let bad = (0..r).find(|&j| fq(&conj.idempotents[j]) != cat.idempotent_e(j));
    out.push(Check::from_search(
        "drinfeld-idempotents",
        "f_Q(F_j) = E_j",
        bad.map(|j| format!("f_Q(F_{j}) ≠ E_{j}")),
    ));

    let bad = pairs(r).find(|&(i, j)| fq(&cat.cf_mul(&cat.chi(i), &cat.chi(j))) != ce_mul(&images[i], &images[j]));
    out.push(Check::from_search(
        "drinfeld-homomorphism",
        "f_Q(χ_i χ_j) = f_Q(χ_i) f_Q(χ_j)",
        bad.map(|(i, j)| format!("fails at (i,j) = ({},{})", label(cat, i), label(cat, j))),
    ));

    let u = cat.unit_element();
    let bad = (0..r).find(|&i| cat.pairing(&cat.chi(0), &images[i]) != cat.pairing(&cat.chi(i), &u));
    out.push(Check::from_search(
        "drinfeld-counit",
        "ε_1(f_Q(χ_i)) = ⟨χ_i, u⟩ = d_i",
        bad.map(|i| format!("fails at i = {}", label(cat, i))),
    ));

    out.push(Check::from_search(
        "drinfeld-unit",
        "f_Q(χ_0) = Σ_j E_j",
        (images[0] != u).then(|| "f_Q(χ_0) ≠ u".to_string()),
    ));

    let a = &conj.alpha;
    let bad = pairs(r).find(|&(i, j)| a.get(i, j) != &(&(cat.dim(i) * cat.inv_dim(j)) * a.get(j, i)));
    out.push(Check::from_search(
        "char-table-symmetry",
        "α_ij = (d_i/d_j) α_ji",
        bad.map(|(i, j)| format!("fails at (i,j) = ({},{})", label(cat, i), label(cat, j))),
    ));

    let bad = (0..r).find(|&i| match conj.sizes[i].inv() {
        Ok(inv) => images[i] != conj.class_sums[i].scale(&(cat.dim(i) * &inv)),
        Err(_) => true,
    });
    out.push(Check::from_search(
        "drinfeld-class-sums",
        "f_Q(χ_i) = (d_i/|C^i|) c̄_i",
        bad.map(|i| format!("fails at i = {}", label(cat, i))),
    ));

    let bad = (0..r).find(|&j| conj.sizes[j] != cat.dim(j) * cat.dim(j));
    out.push(Check::from_search(
        "class-sizes-squared",
        "|C^j| = d_j²",
        bad.map(|j| format!("|C^{j}| = {} ≠ d_{j}²", conj.sizes[j])),
    ));

    out.push(match cat.class_sum_products() {
        Ok(products) => {
            let bad = products.iter().find(|p| !p.verified);
            let rational = products.iter().all(|p| p.rational);
            Check::from_search(
                "class-sum-products",
                format!(
                    "c̄_i c̄_j = Σ_l (d_i d_j/d_l) N_ij^l c̄_l; constants {}",
                    if rational { "all rational" } else { "not all rational" }
                ),
                bad.map(|p| format!("fails at (i,j) = ({},{})", label(cat, p.i), label(cat, p.j))),
            )
        }
        Err(e) => Check::fail("class-sum-products", e.to_string()),
    });
    out
}
