//! Müger centralizers, computed from the S-matrix criterion `s_ij = d_i d_j`
//! and independently from the support of `f_Q(λ_D)`.


use crate::category::Category;
use crate::character::{ce_mul, CentralElement};
use crate::check::Check;
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::lattice::FusionSubcategory;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralizerResult {
    pub subcat: FusionSubcategory,
    pub centralizer: FusionSubcategory,
    /// `A_0 = {j : f_Q(λ_D)_j = 1}`.
    pub support_a0: Vec<usize>,
    pub fq_lambda: CentralElement,
}

impl Category {
    /// `{j : s_ij = d_i d_j for all i ∈ D}`. Works for any stored S-matrix.
    pub fn centralizer_smatrix(&self, d: &FusionSubcategory) -> Result<FusionSubcategory> {
        let s = self.s_matrix("centralizers")?;
        let members: Vec<usize> = (0..self.rank())
            .filter(|&j| d.members().iter().all(|&i| s.get(i, j) == &(self.dim(i) * self.dim(j))))
            .collect();
        self.subcat(&members).map_err(|_| {
            Error::Inconsistent(format!("centralizer {members:?} of {} is not closed", d.display(self)))
        })
    }

    /// `D'` read off from `f_Q(λ_D) = Σ_{j∈A_0} E_j`.
    pub fn centralizer_theorem(&self, d: &FusionSubcategory) -> Result<CentralizerResult> {
        let lambda = self.cointegral(d.members())?;
        let fq_lambda = self.drinfeld_map(&lambda)?;
        let mut support_a0 = Vec::new();
        for (j, c) in fq_lambda.coeffs.iter().enumerate() {
            if c.is_one() {
                support_a0.push(j);
            } else if !c.is_zero() {
                return Err(Error::NotRibbonConsistent(format!(
                    "f_Q(λ_D) has coefficient {c} at {} for D = {}",
                    self.label(j),
                    d.display(self)
                )));
            }
        }
        let centralizer = self.subcat(&support_a0).map_err(|_| {
            Error::NotRibbonConsistent(format!("support {support_a0:?} of f_Q(λ_D) is not a subcategory"))
        })?;
        Ok(CentralizerResult {
            subcat: d.clone(),
            centralizer,
            support_a0,
            fq_lambda,
        })
    }

    /// `F_λ(f_Q(λ_D)) = (dim D'/dim C) λ_{D'}`, `ℓ_{D'} = (dim C/dim D') f_Q(λ_D) = Σ_{j∈D} c̄_j`,
    /// `L_{D'} = Irr(D)`, route agreement, and idempotence of `f_Q(λ_D)`.
    pub fn verify_main_identity(&self, d: &FusionSubcategory) -> Vec<Check> {
        let tag = d.display(self);
        let mut out = Vec::new();
        let via_s = self.centralizer_smatrix(d);
        let res = match self.centralizer_theorem(d) {
            Ok(r) => r,
            Err(e) => {
                out.push(Check::fail(format!("centralizer-theorem {tag}"), e.to_string()));
                return out;
            }
        };
        let dp = &res.centralizer;
        let ratio = &self.subset_dim(dp.members()) * self.inv_global_dim();

        let lhs = self.fourier(&res.fq_lambda);
        let rhs = self.cointegral(dp.members()).map(|l| l.scale(&ratio));
        out.push(Check::from_search(
            format!("centralizer-cointegral {tag}"),
            format!("F_λ(f_Q(λ_D)) = (dim D'/dim C) λ_D' with D' = {}", dp.display(self)),
            (rhs.as_ref().ok() != Some(&lhs)).then(|| format!("F_λ(f_Q(λ_D)) = {lhs}")),
        ));

        // ℓ_D' = F_λ^{-1}(λ_D'), so the ratio enters inverted here.
        let ell = self.ell(dp).ok();
        let class_sums = self.conjugacy_data().ok().map(|conj| {
            d.members()
                .iter()
                .fold(CentralElement::zero(self.rank()), |acc, &j| acc.add(&conj.class_sums[j]))
        });
        let bad = match ratio.inv() {
            Ok(inv) if ell.as_ref() != Some(&res.fq_lambda.scale(&inv)) => {
                Some("ℓ_D' ≠ (dim C/dim D') f_Q(λ_D)".to_string())
            }
            Err(_) => Some("dim D' is zero".to_string()),
            _ if ell != class_sums => Some("ℓ_D' ≠ Σ_{j∈D} c̄_j".to_string()),
            _ => None,
        };
        out.push(Check::from_search(
            format!("centralizer-ell {tag}"),
            "ℓ_D' = (dim C/dim D') f_Q(λ_D) = Σ_{j∈D} c̄_j",
            bad,
        ));

        out.push(match self.support_l(dp) {
            Ok(l) => Check::from_search(
                format!("centralizer-support {tag}"),
                "L_D' = Irr(D)",
                (l != d.members()).then(|| format!("L_D' = {l:?}")),
            ),
            Err(e) => Check::fail(format!("centralizer-support {tag}"), e.to_string()),
        });

        out.push(match via_s {
            Ok(s_route) => Check::from_search(
                format!("centralizer-routes {tag}"),
                format!("both routes give {}", dp.display(self)),
                (&s_route != dp).then(|| format!("s-criterion gives {}", s_route.display(self))),
            ),
            Err(e) => Check::fail(format!("centralizer-routes {tag}"), e.to_string()),
        });

        out.push(Check::from_search(
            format!("centralizer-idempotent {tag}"),
            "f_Q(λ_D) is idempotent",
            (ce_mul(&res.fq_lambda, &res.fq_lambda) != res.fq_lambda).then(|| "f_Q(λ_D)² ≠ f_Q(λ_D)".to_string()),
        ));
        out
    }

    /// For every subcategory: `(D')' ⊇ D` and `dim D · dim D' = dim C`, plus
    /// anti-monotonicity over all pairs.
    pub fn double_centralizer_check(&self) -> Result<Vec<Check>> {
        let subs = self.enumerate_subcats()?;
        let primes = subs
            .iter()
            .map(|d| self.centralizer_smatrix(d))
            .collect::<Result<Vec<_>>>()?;
        let mut out = Vec::new();
        for (d, dp) in subs.iter().zip(&primes) {
            let dpp = self.centralizer_smatrix(dp)?;
            let product: Cyclotomic = &self.subset_dim(d.members()) * &self.subset_dim(dp.members());
            let bad = if !d.is_subset_of(&dpp) {
                Some(format!("(D')' = {} does not contain D", dpp.display(self)))
            } else if &product != self.global_dim() {
                Some(format!("dim D · dim D' = {product}"))
            } else {
                None
            };
            out.push(Check::from_search(
                format!("double-centralizer {}", d.display(self)),
                format!("D' = {}, (D')' = {}", dp.display(self), dpp.display(self)),
                bad,
            ));
        }
        let mut bad = None;
        for (a, ap) in subs.iter().zip(&primes) {
            for (b, bp) in subs.iter().zip(&primes) {
                if a.is_subset_of(b) && !bp.is_subset_of(ap) {
                    bad = Some(format!("{} ⊆ {} but centralizers are not reversed", a.display(self), b.display(self)));
                }
            }
        }
        out.push(Check::from_search("centralizer-antitone", "D ⊆ E implies E' ⊆ D'", bad));
        Ok(out)
    }
}
