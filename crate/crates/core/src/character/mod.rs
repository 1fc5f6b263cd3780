//! The class-function algebra `CF(C)` (basis `χ_i`) and the algebra of
//! central elements `CE(C)` (primitive idempotents `E_i`), with the pairing
//! `⟨χ_i, E_j⟩ = δ_ij d_i`, the Fourier transform and the Drinfeld map.

mod conjugacy;
mod identities;

use std::fmt;

use num_traits::Zero;

pub use conjugacy::{ClassSumProduct, ConjugacyData};
pub use identities::identity_suite;

use crate::category::Category;
use crate::cyclotomic::{CycloMatrix, Cyclotomic};
use crate::error::{Error, Result};

macro_rules! coefficient_vector {
    ($name:ident, $symbol:literal) => {
        #[derive(Clone, Debug, PartialEq, Eq)]
        pub struct $name {
            pub coeffs: Vec<Cyclotomic>,
        }

        impl $name {
            pub fn new(coeffs: Vec<Cyclotomic>) -> Self {
                $name { coeffs }
            }

            pub fn zero(rank: usize) -> Self {
                $name {
                    coeffs: vec![Cyclotomic::zero(); rank],
                }
            }

            /// The `i`-th basis vector.
            pub fn basis(rank: usize, i: usize) -> Self {
                let mut out = Self::zero(rank);
                out.coeffs[i] = Cyclotomic::from_int(1);
                out
            }

            /// Sum of the basis vectors indexed by `members`.
            pub fn indicator(rank: usize, members: &[usize]) -> Self {
                let mut out = Self::zero(rank);
                for &i in members {
                    out.coeffs[i] = Cyclotomic::from_int(1);
                }
                out
            }

            pub fn rank(&self) -> usize {
                self.coeffs.len()
            }

            pub fn is_zero(&self) -> bool {
                self.coeffs.iter().all(Cyclotomic::is_zero)
            }

            pub fn scale(&self, c: &Cyclotomic) -> Self {
                $name {
                    coeffs: self.coeffs.iter().map(|x| x * c).collect(),
                }
            }

            pub fn add(&self, other: &Self) -> Self {
                $name {
                    coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
                }
            }

            pub fn sub(&self, other: &Self) -> Self {
                $name {
                    coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
                }
            }

            /// Indices with nonzero coefficient.
            pub fn support(&self) -> Vec<usize> {
                (0..self.rank()).filter(|&i| !self.coeffs[i].is_zero()).collect()
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, concat!($symbol, ": ["))?;
                for (k, c) in self.coeffs.iter().enumerate() {
                    if k > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str("]")
            }
        }
    };
}

coefficient_vector!(ClassFunction, "χ");
coefficient_vector!(CentralElement, "E");

/// Pointwise product in `CE(C)`: `E_i E_j = δ_ij E_i`.
pub fn ce_mul(a: &CentralElement, b: &CentralElement) -> CentralElement {
    CentralElement::new(a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x * y).collect())
}

impl Category {
    pub fn chi(&self, i: usize) -> ClassFunction {
        ClassFunction::basis(self.rank(), i)
    }

    pub fn idempotent_e(&self, i: usize) -> CentralElement {
        CentralElement::basis(self.rank(), i)
    }

    /// `u = Σ_i E_i`, the unit of `CE(C)`.
    pub fn unit_element(&self) -> CentralElement {
        CentralElement::indicator(self.rank(), &(0..self.rank()).collect::<Vec<_>>())
    }

    /// Fusion product `χ_i χ_j = Σ_k N_ij^k χ_k`, extended bilinearly.
    pub fn cf_mul(&self, f: &ClassFunction, g: &ClassFunction) -> ClassFunction {
        let r = self.rank();
        let mut out = ClassFunction::zero(r);
        for i in f.support() {
            for j in g.support() {
                let c = &f.coeffs[i] * &g.coeffs[j];
                for k in self.ring().support(i, j) {
                    let n = self.n(i, j, k);
                    if n == 1 {
                        out.coeffs[k] += &c;
                    } else {
                        out.coeffs[k] += &(&c * &Cyclotomic::from_int(i64::from(n)));
                    }
                }
            }
        }
        out
    }

    pub fn ce_mul(&self, a: &CentralElement, b: &CentralElement) -> CentralElement {
        ce_mul(a, b)
    }

    /// `⟨f, a⟩ = Σ_i f_i a_i d_i`.
    pub fn pairing(&self, f: &ClassFunction, a: &CentralElement) -> Cyclotomic {
        (0..self.rank())
            .filter(|&i| !f.coeffs[i].is_zero() && !a.coeffs[i].is_zero())
            .map(|i| &(&f.coeffs[i] * &a.coeffs[i]) * self.dim(i))
            .sum()
    }

    /// `τ(f) = ⟨f, E_0⟩ = f_0`.
    pub fn trace_tau(&self, f: &ClassFunction) -> Cyclotomic {
        f.coeffs[0].clone()
    }

    /// `S(E_i) = E_{i*}`.
    pub fn antipode(&self, a: &CentralElement) -> CentralElement {
        let mut out = CentralElement::zero(self.rank());
        for i in 0..self.rank() {
            out.coeffs[self.dual(i)] = a.coeffs[i].clone();
        }
        out
    }

    /// `χ_i ← E_j = δ_ij χ_i`.
    pub fn act_arrow(&self, f: &ClassFunction, a: &CentralElement) -> ClassFunction {
        ClassFunction::new(f.coeffs.iter().zip(&a.coeffs).map(|(x, y)| x * y).collect())
    }

    /// `dim D = Σ_{i∈D} d_i d_{i*}`.
    pub fn subset_dim(&self, subset: &[usize]) -> Cyclotomic {
        subset.iter().map(|&i| self.dim(i) * self.dim(self.dual(i))).sum()
    }

    /// `λ_D = (1/dim D) Σ_{i∈D} d_{i*} χ_i`.
    pub fn cointegral(&self, subset: &[usize]) -> Result<ClassFunction> {
        let inv = self
            .subset_dim(subset)
            .inv()
            .map_err(|_| Error::Degenerate("subset has zero dimension".into()))?;
        let mut out = ClassFunction::zero(self.rank());
        for &i in subset {
            out.coeffs[i] = self.dim(self.dual(i)) * &inv;
        }
        Ok(out)
    }

    /// `λ_C`.
    pub fn cointegral_full(&self) -> ClassFunction {
        let mut out = ClassFunction::zero(self.rank());
        for i in 0..self.rank() {
            out.coeffs[i] = self.dim(self.dual(i)) * self.inv_global_dim();
        }
        out
    }

    /// `F_λ(E_i) = (d_i / dim C) χ_{i*}`.
    pub fn fourier(&self, a: &CentralElement) -> ClassFunction {
        let mut out = ClassFunction::zero(self.rank());
        for i in a.support() {
            out.coeffs[self.dual(i)] = &(&a.coeffs[i] * self.dim(i)) * self.inv_global_dim();
        }
        out
    }

    /// `F_λ^{-1}(χ_j) = (dim C / d_j) E_{j*}`.
    pub fn fourier_inv(&self, f: &ClassFunction) -> CentralElement {
        let mut out = CentralElement::zero(self.rank());
        for j in f.support() {
            out.coeffs[self.dual(j)] = &(&f.coeffs[j] * self.global_dim()) * self.inv_dim(j);
        }
        out
    }

    /// `α_ij`: `s_ij / d_j` for modular data, otherwise the supplied table
    /// with the dimension column moved to position 0.
    pub fn char_table(&self) -> Result<CycloMatrix> {
        if let Some(m) = self.modular() {
            let s = &m.s_matrix;
            return Ok(CycloMatrix::from_fn(self.rank(), self.rank(), |i, j| s.get(i, j) * self.inv_dim(j)));
        }
        let alpha = self
            .data()
            .char_table
            .as_ref()
            .ok_or_else(|| Error::Capability("no character table: supply char_table or an S-matrix".into()))?;
        let r = self.rank();
        let first = (0..r)
            .find(|&c| (0..r).all(|i| alpha.get(i, c) == self.dim(i)))
            .ok_or_else(|| Error::Inconsistent("character table has no dimension column".into()))?;
        let order: Vec<usize> = std::iter::once(first).chain((0..r).filter(|&c| c != first)).collect();
        Ok(CycloMatrix::from_fn(r, r, |i, j| alpha.get(i, order[j]).clone()))
    }

    /// Whether the character table (hence conjugacy data) is available.
    pub fn has_char_table(&self) -> bool {
        self.is_modular() || self.data().char_table.is_some()
    }

    /// `f_Q(χ_i) = Σ_j (s_ij / d_j) E_j`.
    pub fn drinfeld_map(&self, f: &ClassFunction) -> Result<CentralElement> {
        let s = self.s_matrix("the Drinfeld map")?;
        let r = self.rank();
        let mut out = CentralElement::zero(r);
        for i in f.support() {
            for j in 0..r {
                let s_ij = s.get(i, j);
                if !s_ij.is_zero() {
                    out.coeffs[j] += &(&(&f.coeffs[i] * s_ij) * self.inv_dim(j));
                }
            }
        }
        Ok(out)
    }
}
