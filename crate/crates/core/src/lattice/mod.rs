//! Fusion subcategories as closed sets of simple indices, their invariants
//! `λ_D`, `ℓ_D`, `L_D`, lattice operations and the universal grading.

mod grading;

use std::collections::BTreeSet;

pub use grading::{GradingData, PrimeIndexReport};

use crate::category::Category;
use crate::character::{ce_mul, CentralElement, ClassFunction};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};

/// Largest rank for exhaustive subset enumeration.
pub const MAX_ENUMERATION_RANK: usize = 16;

/// Sorted set of simple indices containing 0, closed under duals and fusion.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FusionSubcategory {
    members: Vec<usize>,
}

impl FusionSubcategory {
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_subset_of(&self, other: &FusionSubcategory) -> bool {
        self.members.iter().all(|&i| other.contains(i))
    }

    pub fn intersection(&self, other: &FusionSubcategory) -> FusionSubcategory {
        FusionSubcategory {
            members: self.members.iter().copied().filter(|&i| other.contains(i)).collect(),
        }
    }

    /// Member labels joined with commas, e.g. `{1,e}`.
    pub fn display(&self, cat: &Category) -> String {
        let labels: Vec<&str> = self.members.iter().map(|&i| cat.label(i)).collect();
        format!("{{{}}}", labels.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubcatInvariants {
    pub dim: Cyclotomic,
    pub lambda: ClassFunction,
    pub ell: CentralElement,
    /// `L_D = {j : ⟨F_j, ℓ_D⟩ ≠ 0}`.
    pub support_l: Vec<usize>,
    /// `dim C / dim D`.
    pub index: Cyclotomic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeetJoin {
    pub meet: FusionSubcategory,
    pub join: FusionSubcategory,
}

impl Category {
    /// Least fusion subcategory containing `generators`.
    pub fn generate_subcat(&self, generators: &[usize]) -> FusionSubcategory {
        let mut set: BTreeSet<usize> = generators.iter().copied().collect();
        set.insert(0);
        loop {
            let mut next = set.clone();
            for &i in &set {
                next.insert(self.dual(i));
            }
            for &i in &set {
                for &j in &set {
                    next.extend(self.ring().support(i, j));
                }
            }
            if next.len() == set.len() {
                break;
            }
            set = next;
        }
        FusionSubcategory {
            members: set.into_iter().collect(),
        }
    }

    /// Wraps `members` if it already is a fusion subcategory.
    pub fn subcat(&self, members: &[usize]) -> Result<FusionSubcategory> {
        let mut sorted = members.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let closed = self.generate_subcat(&sorted);
        if closed.members != sorted {
            return Err(Error::Inconsistent(format!("{sorted:?} is not closed under fusion and duality")));
        }
        Ok(closed)
    }

    pub fn full_subcat(&self) -> FusionSubcategory {
        FusionSubcategory {
            members: (0..self.rank()).collect(),
        }
    }

    pub fn trivial_subcat(&self) -> FusionSubcategory {
        FusionSubcategory { members: vec![0] }
    }

    /// Every fusion subcategory, from the closures of all `2^rank` subsets,
    /// sorted by dimension and then members.
    pub fn enumerate_subcats(&self) -> Result<Vec<FusionSubcategory>> {
        let r = self.rank();
        if r > MAX_ENUMERATION_RANK {
            return Err(Error::Capability(format!(
                "subcategory enumeration is limited to rank {MAX_ENUMERATION_RANK} (rank is {r})"
            )));
        }
        let mut found = BTreeSet::new();
        for mask in 0u32..(1u32 << r) {
            let gens: Vec<usize> = (0..r).filter(|&i| mask & (1 << i) != 0).collect();
            found.insert(self.generate_subcat(&gens));
        }
        Ok(self.sorted(found))
    }

    /// The same lattice, built from singleton closures joined to a fixed point.
    pub fn enumerate_subcats_by_joins(&self) -> Vec<FusionSubcategory> {
        let mut found: BTreeSet<FusionSubcategory> = (0..self.rank()).map(|i| self.generate_subcat(&[i])).collect();
        loop {
            let current: Vec<FusionSubcategory> = found.iter().cloned().collect();
            let before = found.len();
            for a in &current {
                for b in &current {
                    found.insert(self.join(a, b));
                }
            }
            if found.len() == before {
                break;
            }
        }
        self.sorted(found)
    }

    fn sorted(&self, set: BTreeSet<FusionSubcategory>) -> Vec<FusionSubcategory> {
        let mut out: Vec<(f64, FusionSubcategory)> = set
            .into_iter()
            .map(|d| (self.subset_dim(&d.members).embed().re, d))
            .collect();
        out.sort_by(|(x, a), (y, b)| x.total_cmp(y).then_with(|| a.len().cmp(&b.len())).then_with(|| a.cmp(b)));
        out.into_iter().map(|(_, d)| d).collect()
    }

    pub fn join(&self, d: &FusionSubcategory, e: &FusionSubcategory) -> FusionSubcategory {
        let gens: Vec<usize> = d.members.iter().chain(&e.members).copied().collect();
        self.generate_subcat(&gens)
    }

    /// `ℓ_D = (dim C / dim D) Σ_{i∈D} E_i`.
    pub fn ell(&self, d: &FusionSubcategory) -> Result<CentralElement> {
        let ratio = self.index_of_subcat(d)?;
        Ok(CentralElement::indicator(self.rank(), &d.members).scale(&ratio))
    }

    /// `dim C / dim D`.
    pub fn index_of_subcat(&self, d: &FusionSubcategory) -> Result<Cyclotomic> {
        let inv = self
            .subset_dim(&d.members)
            .inv()
            .map_err(|_| Error::Degenerate("subcategory has zero dimension".into()))?;
        Ok(self.global_dim() * &inv)
    }

    /// `L_D`, computed from `ℓ_D` against the idempotents.
    pub fn support_l(&self, d: &FusionSubcategory) -> Result<Vec<usize>> {
        let conj = self.conjugacy_data()?;
        let ell = self.ell(d)?;
        Ok((0..self.rank())
            .filter(|&j| !self.pairing(&conj.idempotents[j], &ell).is_zero())
            .collect())
    }

    /// All invariants of `d`, with `ℓ_D = F_λ^{-1}(λ_D)` compared to its
    /// closed form and `Σ_{j∈L_D} |C^j| = ε_1(ℓ_D) = dim C / dim D` checked.
    pub fn subcat_invariants(&self, d: &FusionSubcategory) -> Result<SubcatInvariants> {
        let dim = self.subset_dim(&d.members);
        let lambda = self.cointegral(&d.members)?;
        let ell = self.fourier_inv(&lambda);
        let closed = self.ell(d)?;
        if ell != closed {
            return Err(Error::Inconsistent(format!(
                "ℓ_D for {} differs from (dim C/dim D) Σ E_i",
                d.display(self)
            )));
        }
        let index = self.index_of_subcat(d)?;
        let support_l = self.support_l(d)?;
        let conj = self.conjugacy_data()?;
        let counit = self.pairing(&self.chi(0), &ell);
        let size_sum: Cyclotomic = support_l.iter().map(|&j| &conj.sizes[j]).sum();
        if counit != index || size_sum != index {
            return Err(Error::Inconsistent(format!(
                "index identity fails for {}: ε_1(ℓ_D) = {counit}, Σ|C^j| = {size_sum}, index = {index}",
                d.display(self)
            )));
        }
        Ok(SubcatInvariants {
            dim,
            lambda,
            ell,
            support_l,
            index,
        })
    }

    /// Meet and join with their identities verified:
    /// `λ_{D∨E} = λ_D λ_E`, `L_{D∨E} = L_D ∩ L_E`,
    /// `ℓ_{D∩E} = (dim D dim E / (dim(D∩E) dim C)) ℓ_D ℓ_E`, and
    /// `L_D ⊆ L_E ⟺ D ⊇ E` in both directions.
    pub fn meet_join(&self, d: &FusionSubcategory, e: &FusionSubcategory) -> Result<MeetJoin> {
        let meet = d.intersection(e);
        let join = self.join(d, e);
        let fail = |what: &str| {
            Err(Error::Inconsistent(format!(
                "{what} fails for D = {}, E = {}",
                d.display(self),
                e.display(self)
            )))
        };

        let lam_d = self.cointegral(&d.members)?;
        let lam_e = self.cointegral(&e.members)?;
        if self.cointegral(&join.members)? != self.cf_mul(&lam_d, &lam_e) {
            return fail("λ_{D∨E} = λ_D λ_E");
        }

        let l_d = self.support_l(d)?;
        let l_e = self.support_l(e)?;
        let l_join = self.support_l(&join)?;
        let both: Vec<usize> = l_d.iter().copied().filter(|j| l_e.contains(j)).collect();
        if l_join != both {
            return fail("L_{D∨E} = L_D ∩ L_E");
        }

        let dims = |x: &FusionSubcategory| self.subset_dim(&x.members);
        let scale = &(&dims(d) * &dims(e)) * &(&dims(&meet) * self.global_dim()).inv()?;
        if self.ell(&meet)? != ce_mul(&self.ell(d)?, &self.ell(e)?).scale(&scale) {
            return fail("ℓ_{D∩E} = (dim D dim E/(dim(D∩E) dim C)) ℓ_D ℓ_E");
        }

        let subset = |a: &[usize], b: &[usize]| a.iter().all(|x| b.contains(x));
        if subset(&l_d, &l_e) != e.is_subset_of(d) || subset(&l_e, &l_d) != d.is_subset_of(e) {
            return fail("L_D ⊆ L_E ⟺ D ⊇ E");
        }
        Ok(MeetJoin { meet, join })
    }

    /// `ker(V_i) = {j : α_ij = d_i}`.
    pub fn kernel_of_object(&self, i: usize) -> Result<Vec<usize>> {
        let conj = self.conjugacy_data()?;
        Ok((0..self.rank()).filter(|&j| conj.alpha.get(i, j) == self.dim(i)).collect())
    }
}
