//! Acceptance criteria 1 to 10. Each test prints one `criterion N ... PASS|FAIL`
//! line; run with `--nocapture` to see them all.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use fusioncat::{
    catalog_data, catalog_get, identity_suite, validate, verify, verlinde_fusion, Category, CategoryData,
    CentralElement, ClassFunction, CycloMatrix, Cyclotomic, Rational, Status, CATALOG_NAMES,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn report(n: u32, name: &str, failures: &[String], elapsed: Duration, limit: Option<Duration>) {
    let slow = limit.is_some_and(|l| elapsed >= l);
    let ok = failures.is_empty() && !slow;
    let mut detail = format!("{:.3}s", elapsed.as_secs_f64());
    if let Some(l) = limit {
        detail.push_str(&format!(" (limit {}s)", l.as_secs_f64()));
    }
    println!("criterion {n:>2} {name}: {} [{detail}]", if ok { "PASS" } else { "FAIL" });
    for f in failures.iter().take(10) {
        println!("    {f}");
    }
    assert!(failures.is_empty(), "criterion {n}: {failures:?}");
    assert!(!slow, "criterion {n}: took {elapsed:?}");
}

fn catalog() -> Vec<Category> {
    CATALOG_NAMES.iter().map(|n| catalog_get(n).unwrap()).collect()
}

fn divisors(n: usize) -> usize {
    (1..=n).filter(|d| n % d == 0).count()
}

/// Subcategory counts derived from the fusion rules: subgroups of the grading
/// group for the pointed entries.
fn expected_subcats(name: &str) -> usize {
    match name {
        "toric_code" | "double_semion" => 5,
        "ising" => 3,
        "fibonacci" | "semion" => 2,
        "trivial" => 1,
        _ => divisors(name.trim_start_matches("vec_z").parse().unwrap()),
    }
}

#[test]
fn criterion_01_main_theorem() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for c in catalog() {
        let subs = c.enumerate_subcats().unwrap();
        if subs.len() != expected_subcats(c.name()) {
            failures.push(format!("{}: {} subcategories", c.name(), subs.len()));
        }
        for d in &subs {
            let res = match c.centralizer_theorem(d) {
                Ok(r) => r,
                Err(e) => {
                    failures.push(format!("{} {}: {e}", c.name(), d.display(&c)));
                    continue;
                }
            };
            let dp = &res.centralizer;
            let ratio = c.subset_dim(dp.members()) * c.inv_global_dim();
            let rhs = c.cointegral(dp.members()).unwrap().scale(&ratio);
            if c.fourier(&res.fq_lambda) != rhs {
                failures.push(format!("{} {}", c.name(), d.display(&c)));
            }
        }
    }
    report(1, "F_λ(f_Q(λ_D)) = (dim D'/dim C) λ_D'", &failures, start.elapsed(), Some(Duration::from_secs(1)));
}

#[test]
fn criterion_02_route_agreement() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for c in catalog() {
        let s = c.s_matrix("routes").unwrap().clone();
        for d in c.enumerate_subcats().unwrap() {
            // s-criterion, evaluated directly here.
            let by_s: Vec<usize> = (0..c.rank())
                .filter(|&j| d.members().iter().all(|&i| s.get(i, j) == &(c.dim(i) * c.dim(j))))
                .collect();
            let by_support = c.centralizer_theorem(&d).map(|r| r.support_a0);
            if by_support.as_ref().ok() != Some(&by_s) || c.centralizer_smatrix(&d).unwrap().members() != by_s {
                failures.push(format!("{} {}: {by_s:?} vs {by_support:?}", c.name(), d.display(&c)));
            }
        }
    }
    report(2, "centralizer routes agree", &failures, start.elapsed(), Some(Duration::from_secs(1)));
}

fn golden() -> Cyclotomic {
    -(Cyclotomic::zeta_pow(5, 2) + Cyclotomic::zeta_pow(5, 3))
}

#[test]
fn criterion_03_class_sizes() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for c in catalog() {
        let conj = c.conjugacy_data().unwrap();
        for j in 0..c.rank() {
            if conj.sizes[j] != c.dim(j) * c.dim(j) {
                failures.push(format!("{} j={j}: |C^j| = {}", c.name(), conj.sizes[j]));
            }
        }
    }
    let fib = catalog_get("fibonacci").unwrap();
    let g = golden();
    if fib.conjugacy_data().unwrap().sizes[1] != &g + Cyclotomic::from_int(1) {
        failures.push("fibonacci |C^τ| ≠ g+1".into());
    }
    report(3, "|C^j| = d_j²", &failures, start.elapsed(), None);
}

#[test]
fn criterion_04_structure_constants() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for c in catalog() {
        let conj = c.conjugacy_data().unwrap();
        let mut rational = true;
        for i in 0..c.rank() {
            for j in 0..c.rank() {
                let p = c.class_sum_product(i, j).unwrap();
                let lhs = c.ce_mul(&conj.class_sums[i], &conj.class_sums[j]);
                let mut rhs = CentralElement::zero(c.rank());
                for l in 0..c.rank() {
                    let k = Cyclotomic::from_int(c.n(i, j, l) as i64) * c.dim(i) * c.dim(j) * c.inv_dim(l);
                    if p.constants[l] != k {
                        failures.push(format!("{} c_{i}{j}^{l} = {} ≠ {k}", c.name(), p.constants[l]));
                    }
                    rhs = rhs.add(&conj.class_sums[l].scale(&k));
                }
                if lhs != rhs || !p.verified {
                    failures.push(format!("{} c̄_{i} c̄_{j}", c.name()));
                }
                rational &= p.rational;
            }
        }
        let expected = c.name() != "fibonacci";
        if rational != expected {
            failures.push(format!("{}: rationality flag {rational}", c.name()));
        }
    }
    let fib = catalog_get("fibonacci").unwrap();
    let p = fib.class_sum_product(1, 1).unwrap();
    if p.constants[0] != golden() + Cyclotomic::from_int(1) || p.constants[0].is_rational() || p.rational {
        failures.push("fibonacci c_ττ^0 should be g+1 and irrational".into());
    }
    report(4, "c̄_i c̄_j = Σ (d_i d_j/d_l) N_ij^l c̄_l", &failures, start.elapsed(), None);
}

#[test]
fn criterion_05_orthogonality_suite() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let required = [
        "second-orthogonality",
        "class-pairing",
        "fourier-inverse",
        "dual-bases",
        "class-sum-expansion",
        "character-values",
        "drinfeld-integral",
        "drinfeld-counit",
        "drinfeld-homomorphism",
        "drinfeld-class-sums",
        "class-sizes-squared",
        "centralizer-cointegral",
        "centralizer-ell",
    ];
    for c in catalog() {
        let checks = verify(&c);
        for ch in checks.iter().filter(|ch| ch.status == Status::Fail) {
            failures.push(format!("{} {}: {}", c.name(), ch.id, ch.detail));
        }
        for id in required {
            if !checks.iter().any(|ch| ch.id == id && ch.status == Status::Pass) {
                failures.push(format!("{}: {id} did not pass", c.name()));
            }
        }
    }
    // Second orthogonality, restated: Σ_j α_ji α_{j*l} = δ_il dim C/|C^i|.
    for c in catalog() {
        let conj = c.conjugacy_data().unwrap();
        for i in 0..c.rank() {
            for l in 0..c.rank() {
                let sum: Cyclotomic = (0..c.rank()).map(|j| conj.alpha.get(j, i) * conj.alpha.get(c.dual(j), l)).sum();
                let expected = if i == l { c.global_dim() * &conj.sizes[i].inv().unwrap() } else { Cyclotomic::from_int(0) };
                if sum != expected {
                    failures.push(format!("{} orthogonality ({i},{l})", c.name()));
                }
            }
        }
    }
    report(5, "verify suite passes on every entry", &failures, start.elapsed(), Some(Duration::from_secs(2)));
}

#[test]
fn criterion_06_lattice_laws() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let c = catalog_get("toric_code").unwrap();
    let conj = c.conjugacy_data().unwrap();
    let subs = c.enumerate_subcats().unwrap();
    let support = |ell: &CentralElement| -> Vec<usize> {
        (0..c.rank()).filter(|&j| !c.pairing(&conj.idempotents[j], ell).is_zero()).collect()
    };
    let ell = |d: &fusioncat::FusionSubcategory| c.fourier_inv(&c.cointegral(d.members()).unwrap());
    let mut pairs = 0;
    for d in &subs {
        let l_d = support(&ell(d));
        let size_sum: Cyclotomic = l_d.iter().map(|&j| &conj.sizes[j]).sum();
        if size_sum != c.global_dim() * &c.subset_dim(d.members()).inv().unwrap() {
            failures.push(format!("index sum for {}", d.display(&c)));
        }
        for e in &subs {
            pairs += 1;
            let tag = format!("{} {}", d.display(&c), e.display(&c));
            let join = c.join(d, e);
            let meet = d.intersection(e);
            let prod: ClassFunction = c.cf_mul(&c.cointegral(d.members()).unwrap(), &c.cointegral(e.members()).unwrap());
            if c.cointegral(join.members()).unwrap() != prod {
                failures.push(format!("λ join {tag}"));
            }
            let scalar = c.subset_dim(d.members()) * c.subset_dim(e.members())
                * (c.subset_dim(meet.members()) * c.global_dim()).inv().unwrap();
            if ell(&meet) != c.ce_mul(&ell(d), &ell(e)).scale(&scalar) {
                failures.push(format!("ℓ meet {tag}"));
            }
            let l_e = support(&ell(e));
            let sub = l_d.iter().all(|j| l_e.contains(j));
            if sub != e.is_subset_of(d) {
                failures.push(format!("L antitone {tag}"));
            }
            if c.meet_join(d, e).is_err() {
                failures.push(format!("meet_join {tag}"));
            }
        }
    }
    if pairs != 25 {
        failures.push(format!("{pairs} pairs"));
    }
    report(6, "lattice laws on toric_code (25 pairs)", &failures, start.elapsed(), None);
}

#[test]
fn criterion_07_prime_index() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let c = catalog_get("toric_code").unwrap();
    let p = c.prime_index_check().unwrap();
    let g = c.grading().unwrap();
    if !(p.applicable && p.prime == Some(2) && p.dim == Some(4)) {
        failures.push(format!("toric_code: applicable {} p {:?}", p.applicable, p.prime));
    }
    if p.subcats.len() != 3 || p.subgroups.len() != 3 || g.order() != 4 {
        failures.push(format!("{} subcats, {} subgroups, |U| = {}", p.subcats.len(), p.subgroups.len(), g.order()));
    }
    let mut seen: Vec<usize> = p.bijection.iter().map(|&(_, d)| d).collect();
    seen.sort();
    if p.bijection.len() != 3 || seen != [0, 1, 2] {
        failures.push(format!("bijection {:?}", p.bijection));
    }
    // Each pair: the subcategory is the union of the subgroup's components.
    for &(h, d) in &p.bijection {
        let mut objs: Vec<usize> = p.subgroups[h].iter().flat_map(|&a| g.components[a].clone()).collect();
        objs.sort();
        if objs != p.subcats[d].members() {
            failures.push(format!("pair ({h},{d}) does not match"));
        }
    }
    let ad = c.adjoint_subcat();
    if ad.members() != [0] || !p.contain_adjoint || !p.subcats.iter().all(|d| ad.is_subset_of(d)) {
        failures.push("C_ad containment".into());
    }
    if !p.passed {
        failures.push("report not passed".into());
    }
    for name in ["fibonacci", "ising"] {
        if catalog_get(name).unwrap().prime_index_check().unwrap().applicable {
            failures.push(format!("{name} should be not-applicable"));
        }
    }
    report(7, "index-p subcategories ↔ index-p subgroups", &failures, start.elapsed(), None);
}

fn corrupted_is_detected(data: &CategoryData, s: CycloMatrix) -> bool {
    let original = data.ring.tensor();
    match verlinde_fusion(&s) {
        Err(_) => return true,
        Ok(t) if t != original => return true,
        Ok(_) => {}
    }
    let d = match CategoryData::from_modular(data.name.clone(), data.conductor, data.ring.labels().to_vec(), s, None) {
        Ok(d) => d,
        Err(_) => return true,
    };
    if validate(&d).iter().any(|c| c.is_fail()) {
        return true;
    }
    match Category::new_unchecked(d) {
        Ok(cat) => identity_suite(&cat).iter().any(|c| c.is_fail()),
        Err(_) => true,
    }
}

#[test]
fn criterion_08_verlinde_integrality() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for name in CATALOG_NAMES {
        let data = catalog_data(name).unwrap();
        let s = &data.modular.as_ref().unwrap().s_matrix;
        match verlinde_fusion(s) {
            Ok(t) if t == data.ring.tensor() => {}
            other => failures.push(format!("{name}: {other:?}")),
        }
    }
    let toric = catalog_data("toric_code").unwrap();
    let s = toric.modular.as_ref().unwrap().s_matrix.clone();
    let mut cases = 0;
    for i in 0..4 {
        for j in 0..4 {
            let orig = s.get(i, j).clone();
            for bad in [-&orig, &orig + Cyclotomic::from_int(1), Cyclotomic::from_int(0), &orig * Cyclotomic::ratio(1, 2)] {
                let mut m = s.clone();
                m.set(i, j, bad.clone());
                cases += 1;
                if !corrupted_is_detected(&toric, m) {
                    failures.push(format!("s[{i}][{j}] = {bad} undetected"));
                }
            }
        }
    }
    // The symmetric flip of s_em.
    let mut m = s.clone();
    m.set(1, 2, Cyclotomic::from_int(1));
    m.set(2, 1, Cyclotomic::from_int(1));
    if !corrupted_is_detected(&toric, m) {
        failures.push("symmetric s_em flip undetected".into());
    }
    report(8, &format!("Verlinde integrality, {cases} corruptions detected"), &failures, start.elapsed(), None);
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(-9..=9).into(), rng.gen_range(1..=5).into())
}

fn random_element(rng: &mut ChaCha8Rng, n: u32) -> Cyclotomic {
    let degree = fusioncat::cyclotomic::totient(n);
    let coeffs: Vec<Rational> = (0..degree).map(|_| random_rational(rng)).collect();
    Cyclotomic::from_coeffs(n, &coeffs)
}

#[test]
fn criterion_09_exact_kernel() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut trips = 0;
    while trips < 1000 {
        let n = [4, 5, 8, 12][trips % 4];
        let a = random_element(&mut rng, n);
        if a.is_zero() {
            continue;
        }
        trips += 1;
        if !(&a * &a.inv().unwrap()).is_one() {
            failures.push(format!("inverse of {a}"));
        }
    }
    for name in ["toric_code", "fibonacci", "ising", "vec_z6"] {
        let c = catalog_get(name).unwrap();
        let n = c.data().conductor;
        for _ in 0..50 {
            let a = CentralElement::new((0..c.rank()).map(|_| random_element(&mut rng, n)).collect());
            if c.fourier_inv(&c.fourier(&a)) != a {
                failures.push(format!("{name}: fourier round trip"));
            }
        }
    }
    let mut matrices = 0;
    while matrices < 50 {
        let m = CycloMatrix::from_fn(4, 4, |_, _| random_element(&mut rng, 8));
        let Ok(inv) = m.inverse() else { continue };
        matrices += 1;
        if !(&m * &inv).is_identity() || !(&inv * &m).is_identity() {
            failures.push("4x4 inverse over Q(ζ8)".into());
        }
    }
    report(9, "1000 inversions, fourier round trips, 50 4x4 inverses", &failures, start.elapsed(), Some(Duration::from_secs(5)));
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_fusioncat"))
}

fn data_file(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

#[test]
fn criterion_10_cli_determinism() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for name in CATALOG_NAMES {
        let run = || bin().args(["verify", "--catalog", name, "--json"]).output().unwrap();
        let (a, b) = (run(), run());
        if a.stdout != b.stdout {
            failures.push(format!("{name}: output differs between runs"));
        }
        if a.status.code() != Some(0) {
            failures.push(format!("{name}: exit {:?}", a.status.code()));
        }
        let parsed: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
        let mut again = serde_json::to_string_pretty(&parsed).unwrap();
        again.push('\n');
        if again.as_bytes() != a.stdout {
            failures.push(format!("{name}: json does not round-trip"));
        }
    }

    let dir = tempfile::tempdir().unwrap();
    let corrupt = dir.path().join("corrupt.json");
    std::fs::write(&corrupt, "{\"schema_version\": 1, \"name\": ").unwrap();
    let code = bin().args(["verify", "--file"]).arg(&corrupt).output().unwrap().status.code();
    if code != Some(3) {
        failures.push(format!("corrupt file: exit {code:?}"));
    }

    let mut toric: serde_json::Value =
        serde_json::from_str(&fusioncat::to_json_string(&catalog_data("toric_code").unwrap())).unwrap();
    toric["s_matrix"][1][2] = "1".into();
    toric["s_matrix"][2][1] = "1".into();
    let bad_s = dir.path().join("bad_s.json");
    std::fs::write(&bad_s, serde_json::to_string(&toric).unwrap()).unwrap();
    let code = bin().args(["verify", "--file"]).arg(&bad_s).output().unwrap().status.code();
    if code != Some(2) {
        failures.push(format!("corrupted s-matrix: exit {code:?}"));
    }

    let code = bin()
        .args(["centralizer", "--file"])
        .arg(data_file("rep_s3.json"))
        .output()
        .unwrap()
        .status
        .code();
    if code != Some(4) {
        failures.push(format!("fusion ring centralizer: exit {code:?}"));
    }
    // Sanity check that the fusion-ring file itself is fine.
    let code = bin().args(["verify", "--file"]).arg(data_file("rep_s3.json")).output().unwrap().status.code();
    if code != Some(0) {
        failures.push(format!("rep_s3 verify: exit {code:?}"));
    }
    report(10, "byte-stable json and exit codes", &failures, start.elapsed(), None);
}
