use num_traits::Zero;

use super::{ce_mul, CentralElement, ClassFunction};
use crate::category::Category;
use crate::cyclotomic::{CycloMatrix, Cyclotomic};
use crate::error::{Error, Result};

/// Primitive idempotents `F_j` of `CF(C)` and everything derived from them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyData {
    /// `χ_i = Σ_j α_ij F_j`.
    pub alpha: CycloMatrix,
    pub idempotents: Vec<ClassFunction>,
    /// `c̄_j = F_λ^{-1}(F_j)`.
    pub class_sums: Vec<CentralElement>,
    /// `|C^j| = dim C · τ(F_j)`.
    pub sizes: Vec<Cyclotomic>,
    /// `n_j = dim C / |C^j|`.
    pub n: Vec<Cyclotomic>,
}

/// Expansion of `c̄_i c̄_j` in class sums.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassSumProduct {
    pub i: usize,
    pub j: usize,
    /// `c_ij^l = d_i d_j N_ij^l / d_l`.
    pub constants: Vec<Cyclotomic>,
    pub rational: bool,
    /// `c̄_i c̄_j = Σ_l c_ij^l c̄_l` holds exactly.
    pub verified: bool,
}

impl Category {
    /// Computed once and cached.
    pub fn conjugacy_data(&self) -> Result<&ConjugacyData> {
        if !self.has_char_table() {
            return Err(Error::Capability(
                "conjugacy data needs a character table or an S-matrix".into(),
            ));
        }
        self.conjugacy_cache()
            .get_or_init(|| compute(self))
            .as_ref()
            .map_err(|msg| Error::NotNondegenerate(msg.clone()))
    }

    /// Structure constants of `c̄_i c̄_j`, checked against the product in `CE(C)`.
    pub fn class_sum_product(&self, i: usize, j: usize) -> Result<ClassSumProduct> {
        self.s_matrix("class sum products")?;
        let conj = self.conjugacy_data()?;
        let r = self.rank();
        let dd = self.dim(i) * self.dim(j);
        let constants: Vec<Cyclotomic> = (0..r)
            .map(|l| match self.n(i, j, l) {
                0 => Cyclotomic::zero(),
                n => &(&dd * &Cyclotomic::from_int(i64::from(n))) * self.inv_dim(l),
            })
            .collect();
        let lhs = ce_mul(&conj.class_sums[i], &conj.class_sums[j]);
        let rhs = (0..r).fold(CentralElement::zero(r), |acc, l| {
            acc.add(&conj.class_sums[l].scale(&constants[l]))
        });
        Ok(ClassSumProduct {
            i,
            j,
            rational: constants.iter().all(Cyclotomic::is_rational),
            verified: lhs == rhs,
            constants,
        })
    }

    /// All pairs `(i, j)`, row-major.
    pub fn class_sum_products(&self) -> Result<Vec<ClassSumProduct>> {
        let r = self.rank();
        let mut out = Vec::with_capacity(r * r);
        for i in 0..r {
            for j in 0..r {
                out.push(self.class_sum_product(i, j)?);
            }
        }
        Ok(out)
    }
}

fn compute(cat: &Category) -> std::result::Result<ConjugacyData, String> {
    let r = cat.rank();
    let alpha = cat.char_table().map_err(|e| e.to_string())?;
    let idempotents: Vec<ClassFunction> = match cat.modular() {
        // F_j = (d_j / dim C) Σ_i s_{i*j} χ_i, so that f_Q(F_j) = E_j.
        Some(m) => (0..r)
            .map(|j| {
                let scale = cat.dim(j) * cat.inv_global_dim();
                ClassFunction::new((0..r).map(|i| m.s_matrix.get(cat.dual(i), j) * &scale).collect())
            })
            .collect(),
        None => {
            let inv = alpha.inverse().map_err(|e| e.to_string())?;
            (0..r)
                .map(|j| ClassFunction::new((0..r).map(|i| inv.get(j, i).clone()).collect()))
                .collect()
        }
    };
    let class_sums: Vec<CentralElement> = idempotents.iter().map(|f| cat.fourier_inv(f)).collect();
    let sizes: Vec<Cyclotomic> = idempotents
        .iter()
        .map(|f| cat.global_dim() * &cat.trace_tau(f))
        .collect();
    let n = sizes
        .iter()
        .enumerate()
        .map(|(j, size)| {
            size.inv()
                .map(|inv| cat.global_dim() * &inv)
                .map_err(|_| format!("class {j} has size zero"))
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ok(ConjugacyData {
        alpha,
        idempotents,
        class_sums,
        sizes,
        n,
    })
}
