use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::FusionSubcategory;
use crate::category::Category;
use crate::character::ClassFunction;
use crate::check::Check;
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};

/// The universal grading: components are the cosets of the adjoint
/// subcategory, multiplied through fusion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradingData {
    pub components: Vec<Vec<usize>>,
    /// `component_of[i]` is the component containing simple `i`.
    pub component_of: Vec<usize>,
    /// `group_table[a][b]` is the component of `X ⊗ Y` for `X ∈ a`, `Y ∈ b`.
    pub group_table: Vec<Vec<usize>>,
    pub identity: usize,
    pub adjoint: FusionSubcategory,
    pub pointed: FusionSubcategory,
    pub abelian: bool,
    /// Support identities for `C_ad` and `C_pt`; skipped without conjugacy data.
    pub checks: Vec<Check>,
}

impl GradingData {
    pub fn order(&self) -> usize {
        self.components.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeIndexReport {
    pub applicable: bool,
    /// Why the check does not apply.
    pub reason: Option<String>,
    pub dim: Option<u64>,
    pub prime: Option<u64>,
    /// Fusion subcategories of index `p`.
    pub subcats: Vec<FusionSubcategory>,
    /// Normal subgroups of index `p` in the grading group, as component sets.
    pub subgroups: Vec<Vec<usize>>,
    /// `(subgroup, subcategory)` position pairs with `D = ⊕_{h∈H} C_h`.
    pub bijection: Vec<(usize, usize)>,
    pub contain_adjoint: bool,
    pub passed: bool,
}

impl Category {
    /// Adjoint subcategory `C_ad`, generated by all `X ⊗ X*` constituents.
    pub fn adjoint_subcat(&self) -> FusionSubcategory {
        let gens: Vec<usize> = (0..self.rank())
            .flat_map(|i| self.ring().support(i, self.dual(i)).collect::<Vec<_>>())
            .collect();
        self.generate_subcat(&gens)
    }

    /// Pointed subcategory `C_pt`: the invertible simples, i.e. those with
    /// `X ⊗ X* = 1`.
    pub fn pointed_subcat(&self) -> FusionSubcategory {
        let inv: Vec<usize> = (0..self.rank())
            .filter(|&i| self.ring().support(i, self.dual(i)).eq([0]))
            .collect();
        self.generate_subcat(&inv)
    }

    pub fn grading(&self) -> Result<GradingData> {
        let r = self.rank();
        let adjoint = self.adjoint_subcat();
        let bad = |msg: String| Err(Error::Inconsistent(format!("not a grading: {msg}")));

        let mut component_of = vec![usize::MAX; r];
        let mut components: Vec<Vec<usize>> = Vec::new();
        for j in 0..r {
            let coset: BTreeSet<usize> = adjoint
                .members()
                .iter()
                .flat_map(|&k| self.ring().support(k, j).collect::<Vec<_>>())
                .collect();
            if component_of[j] != usize::MAX {
                if components[component_of[j]].iter().copied().collect::<BTreeSet<_>>() != coset {
                    return bad(format!("C_ad ⊗ {} is not a single component", self.label(j)));
                }
                continue;
            }
            let id = components.len();
            for &i in &coset {
                if component_of[i] != usize::MAX {
                    return bad(format!("components overlap at {}", self.label(i)));
                }
                component_of[i] = id;
            }
            components.push(coset.into_iter().collect());
        }

        let g = components.len();
        let mut group_table = vec![vec![0usize; g]; g];
        for a in 0..g {
            for b in 0..g {
                let mut target = None;
                for &x in &components[a] {
                    for &y in &components[b] {
                        for k in self.ring().support(x, y) {
                            match target {
                                None => target = Some(component_of[k]),
                                Some(t) if t == component_of[k] => {}
                                Some(_) => {
                                    return bad(format!(
                                        "{} ⊗ {} meets two components",
                                        self.label(x),
                                        self.label(y)
                                    ))
                                }
                            }
                        }
                    }
                }
                group_table[a][b] = target.expect("fusion products are nonzero");
            }
        }

        let identity = component_of[0];
        let is_group = (0..g).all(|a| group_table[identity][a] == a && group_table[a][identity] == a)
            && (0..g).all(|a| (0..g).any(|b| group_table[a][b] == identity))
            && (0..g).all(|a| {
                (0..g).all(|b| (0..g).all(|c| group_table[group_table[a][b]][c] == group_table[a][group_table[b][c]]))
            });
        if !is_group {
            return bad("component table is not a group".into());
        }
        let abelian = (0..g).all(|a| (0..g).all(|b| group_table[a][b] == group_table[b][a]));
        let pointed = self.pointed_subcat();
        let checks = self.grading_checks(&adjoint, &pointed);
        Ok(GradingData {
            components,
            component_of,
            group_table,
            identity,
            adjoint,
            pointed,
            abelian,
            checks,
        })
    }

    fn grading_checks(&self, adjoint: &FusionSubcategory, pointed: &FusionSubcategory) -> Vec<Check> {
        let conj = match self.conjugacy_data() {
            Ok(c) => c,
            Err(e) => {
                return vec![
                    Check::skip("adjoint-support", e.to_string()),
                    Check::skip("pointed-classes", e.to_string()),
                ]
            }
        };
        let unit_classes: Vec<usize> = (0..self.rank()).filter(|&j| conj.sizes[j].is_one()).collect();
        let mut out = vec![match self.support_l(adjoint) {
            Ok(l) => Check::from_search(
                "adjoint-support",
                "L_{C_ad} = {j : |C^j| = 1}",
                (l != unit_classes).then(|| format!("L_{{C_ad}} = {l:?}, unit classes {unit_classes:?}")),
            ),
            Err(e) => Check::fail("adjoint-support", e.to_string()),
        }];
        if !self.is_modular() {
            out.push(Check::skip("pointed-classes", "requires an S-matrix"));
            return out;
        }
        // With f_Q(F_j) = E_j the class index j is the simple index j.
        let lambda_ad = self.cointegral(adjoint.members()).ok();
        let sum = pointed
            .members()
            .iter()
            .fold(ClassFunction::zero(self.rank()), |acc, &j| acc.add(&conj.idempotents[j]));
        let bad = if unit_classes != pointed.members() {
            Some(format!("unit classes {unit_classes:?} differ from C_pt = {:?}", pointed.members()))
        } else if lambda_ad.as_ref() != Some(&sum) {
            Some("λ_{C_ad} ≠ Σ_{j∈C_pt} F_j".to_string())
        } else {
            None
        };
        out.push(Check::from_search(
            "pointed-classes",
            "{j : |C^j| = 1} = Irr(C_pt) and λ_{C_ad} = Σ_{j∈C_pt} F_j",
            bad,
        ));
        out
    }

    /// For integral categories: index-`p` fusion subcategories (`p` the smallest
    /// prime dividing `dim C`) against index-`p` normal subgroups of `U_C`.
    pub fn prime_index_check(&self) -> Result<PrimeIndexReport> {
        let mut report = PrimeIndexReport {
            applicable: false,
            reason: None,
            dim: None,
            prime: None,
            subcats: Vec::new(),
            subgroups: Vec::new(),
            bijection: Vec::new(),
            contain_adjoint: true,
            passed: true,
        };
        if !self.is_integral() {
            report.reason = Some("not integral: some dimension is not a positive integer".into());
            return Ok(report);
        }
        let dim = self
            .global_dim()
            .to_integer()
            .and_then(|d: BigInt| d.to_u64())
            .ok_or_else(|| Error::Inconsistent("integral category with non-integer dimension".into()))?;
        report.dim = Some(dim);
        let Some(p) = smallest_prime_factor(dim) else {
            report.reason = Some("dim C = 1 has no prime divisor".into());
            return Ok(report);
        };
        report.applicable = true;
        report.prime = Some(p);

        let target = Cyclotomic::from_int(p as i64);
        for d in self.enumerate_subcats()? {
            if self.index_of_subcat(&d)? == target {
                report.subcats.push(d);
            }
        }
        let grading = self.grading()?;
        report.subgroups = normal_subgroups_of_index(&grading, p as usize);
        report.contain_adjoint = report.subcats.iter().all(|d| grading.adjoint.is_subset_of(d));

        let mut matched = vec![false; report.subcats.len()];
        let mut all_matched = true;
        for (h, subgroup) in report.subgroups.iter().enumerate() {
            let mut members: Vec<usize> = subgroup.iter().flat_map(|&c| grading.components[c].clone()).collect();
            members.sort_unstable();
            match report.subcats.iter().position(|d| d.members() == members) {
                Some(k) => {
                    matched[k] = true;
                    report.bijection.push((h, k));
                }
                None => all_matched = false,
            }
        }
        report.passed = all_matched
            && matched.iter().all(|&m| m)
            && report.subcats.len() == report.subgroups.len()
            && report.contain_adjoint;
        Ok(report)
    }
}

fn smallest_prime_factor(n: u64) -> Option<u64> {
    if n < 2 {
        return None;
    }
    (2..).take_while(|d| d * d <= n).find(|d| n % d == 0).or(Some(n))
}

/// Normal subgroups `H` with `[G : H] = p`, each as a sorted set of elements.
fn normal_subgroups_of_index(grading: &GradingData, p: usize) -> Vec<Vec<usize>> {
    let g = grading.order();
    if g % p != 0 {
        return Vec::new();
    }
    let t = &grading.group_table;
    let size = g / p;
    let inverse: Vec<usize> = (0..g)
        .map(|a| (0..g).find(|&b| t[a][b] == grading.identity).expect("group has inverses"))
        .collect();
    let mut found = BTreeSet::new();
    // Enumerate by closure of generating sets; the group order is at most the rank.
    for mask in 0u32..(1u32 << g) {
        if mask & (1 << grading.identity) == 0 || (mask.count_ones() as usize) != size {
            continue;
        }
        let h: Vec<usize> = (0..g).filter(|&a| mask & (1 << a) != 0).collect();
        let closed = h.iter().all(|&a| h.iter().all(|&b| mask & (1 << t[a][b]) != 0));
        let normal = (0..g).all(|x| h.iter().all(|&a| mask & (1 << t[t[x][a]][inverse[x]]) != 0));
        if closed && normal {
            found.insert(h);
        }
    }
    found.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::catalog_get;

    #[test]
    fn toric_code_grading() {
        let toric = catalog_get("toric_code").unwrap();
        let g = toric.grading().unwrap();
        assert_eq!(g.adjoint.members(), &[0]);
        assert_eq!(g.order(), 4);
        assert!(g.abelian);
        assert_eq!(g.pointed, toric.full_subcat());
        assert!(g.checks.iter().all(Check::is_pass), "{:?}", g.checks);
    }

    #[test]
    fn fibonacci_grading() {
        let fib = catalog_get("fibonacci").unwrap();
        let g = fib.grading().unwrap();
        assert_eq!(g.adjoint, fib.full_subcat());
        assert_eq!(g.order(), 1);
        assert_eq!(g.pointed.members(), &[0]);
    }

    #[test]
    fn ising_grading() {
        let ising = catalog_get("ising").unwrap();
        let g = ising.grading().unwrap();
        assert_eq!(g.adjoint.members(), &[0, 2]);
        assert_eq!(g.order(), 2);
        assert_eq!(g.pointed.members(), &[0, 2]);
        assert!(g.checks.iter().all(Check::is_pass), "{:?}", g.checks);
    }

    #[test]
    fn prime_index() {
        let toric = catalog_get("toric_code").unwrap();
        let rep = toric.prime_index_check().unwrap();
        assert!(rep.applicable && rep.passed);
        assert_eq!(rep.prime, Some(2));
        assert_eq!(rep.subcats.len(), 3);
        assert_eq!(rep.subgroups.len(), 3);
        assert_eq!(rep.bijection.len(), 3);
        for name in ["fibonacci", "ising", "trivial"] {
            let rep = catalog_get(name).unwrap().prime_index_check().unwrap();
            assert!(!rep.applicable, "{name}");
        }
        let z6 = catalog_get("vec_z6").unwrap().prime_index_check().unwrap();
        assert_eq!((z6.prime, z6.subcats.len()), (Some(2), 1));
        assert!(z6.passed);
    }

    #[test]
    fn smallest_primes() {
        assert_eq!(smallest_prime_factor(1), None);
        assert_eq!(smallest_prime_factor(9), Some(3));
        assert_eq!(smallest_prime_factor(13), Some(13));
        assert_eq!(smallest_prime_factor(12), Some(2));
    }
}
